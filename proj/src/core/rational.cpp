#include "rational.hpp"

#include <stdexcept>

namespace kcas {

std::optional<Rat> parseRat(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::string t = s;
  // mpq_class accepts "p/q" directly but aborts on malformed input, so vet it.
  std::size_t slash = t.find('/');
  auto isInt = [](const std::string& x) {
    if (x.empty()) return false;
    std::size_t i = (x[0] == '-' || x[0] == '+') ? 1 : 0;
    if (i == x.size()) return false;
    for (; i < x.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(x[i]))) return false;
    return true;
  };
  try {
    if (slash == std::string::npos) {
      if (!isInt(t)) return std::nullopt;
      Rat r(t);
      r.canonicalize();
      return r;
    }
    std::string num = t.substr(0, slash), den = t.substr(slash + 1);
    if (!isInt(num) || !isInt(den)) return std::nullopt;
    Rat d(den);
    if (d == 0) return std::nullopt;
    Rat r(t);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::string ratToString(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat ratPow(const Rat& base, long exp) {
  if (exp == 0) return Rat(1);
  if (base == 0) {
    if (exp > 0) return Rat(0);
    throw std::domain_error("ratPow: zero base with negative exponent");
  }
  Rat b = exp > 0 ? base : Rat(1) / base;
  unsigned long e = exp > 0 ? static_cast<unsigned long>(exp)
                            : static_cast<unsigned long>(-exp);
  Rat acc(1);
  while (e) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

std::string ratVecToString(const std::vector<Rat>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += ratToString(v[i]);
  }
  return out;
}

}  // namespace kcas
