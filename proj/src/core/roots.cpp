#include "roots.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace kcas {

std::optional<SystemType> SystemType::parse(const std::string& label) {
  if (label.size() < 2) return std::nullopt;
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
  if (f < 'A' || f > 'G') return std::nullopt;
  for (std::size_t i = 1; i < label.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(label[i]))) return std::nullopt;
  int rank = 0;
  try {
    rank = std::stoi(label.substr(1));
  } catch (...) {
    return std::nullopt;
  }
  SystemType t{static_cast<Family>(f), rank};
  if (!t.valid()) return std::nullopt;
  return t;
}

std::string SystemType::label() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

bool SystemType::valid() const {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 1;
    case Family::C: return rank >= 1;
    case Family::D: return rank >= 3;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

long RootSystem::positiveCountFor(SystemType t) {
  long n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B: return n * n;
    case Family::C: return n * n;
    case Family::D: return n * n - n;
    case Family::E: return t.rank == 6 ? 36 : (t.rank == 7 ? 63 : 120);
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

std::vector<long> cartanMatrix(SystemType t) {
  if (!t.valid()) throw std::invalid_argument("illegal type " + t.label());
  int n = t.rank;
  std::vector<long> a(static_cast<std::size_t>(n) * n, 0);
  auto at = [&](int i, int j) -> long& { return a[i * n + j]; };
  for (int i = 0; i < n; ++i) at(i, i) = 2;
  auto chain = [&](int i, int j) { at(i, j) = -1; at(j, i) = -1; };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      if (n >= 2) at(n - 2, n - 1) = -2;  // last simple root short
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      if (n >= 2) at(n - 1, n - 2) = -2;  // last simple root long
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
      chain(n - 3, n - 1);
      break;
    case Family::E:
      // Chain 1-3-4-5-6(-7(-8)) with 2 attached to 4 (indices 1-based).
      chain(0, 2);
      chain(1, 3);
      for (int i = 2; i + 1 < n; ++i) chain(i, i + 1);
      break;
    case Family::F:
      chain(0, 1);
      chain(1, 2);
      chain(2, 3);
      at(1, 2) = -2;
      break;
    case Family::G:
      at(0, 1) = -1;
      at(1, 0) = -3;
      break;
  }
  return a;
}

std::string RootSystem::key(const Coeffs& c) {
  std::string k;
  k.reserve(c.size() * 3);
  for (long v : c) {
    k += std::to_string(v);
    k += ',';
  }
  return k;
}

RootSystem RootSystem::build(const std::string& label) {
  auto t = SystemType::parse(label);
  if (!t) throw std::invalid_argument("illegal root system type: " + label);
  return build(*t);
}

RootSystem RootSystem::build(SystemType t) {
  if (!t.valid()) throw std::invalid_argument("illegal root system type: " + t.label());
  RootSystem s;
  s.type_ = t;
  s.rank_ = t.rank;
  s.cartan_ = cartanMatrix(t);

  // Symmetrize: d_j * A_ij must be symmetric; d minimal positive integers,
  // normalized so that short roots have squared length 2.
  int n = s.rank_;
  std::vector<Rat> d(n, Rat(0));
  d[0] = 1;
  std::vector<int> todo{0};
  while (!todo.empty()) {
    int i = todo.back();
    todo.pop_back();
    for (int j = 0; j < n; ++j) {
      if (i == j || s.cartan_[i * n + j] == 0 || d[j] != 0) continue;
      d[j] = d[i] * Rat(s.cartan_[j * n + i]) / Rat(s.cartan_[i * n + j]);
      todo.push_back(j);
    }
  }
  mpz_class lcm = 1;
  for (auto& x : d) lcm = ::lcm(lcm, x.get_den());
  std::vector<long> di(n);
  for (int i = 0; i < n; ++i) di[i] = mpz_class(d[i].get_num() * (lcm / d[i].get_den())).get_si();
  long g = 0;
  for (long x : di) g = std::gcd(g, x);
  long mn = *std::min_element(di.begin(), di.end());
  for (auto& x : di) x /= g;
  mn = *std::min_element(di.begin(), di.end());
  if (mn != 1) throw std::logic_error("symmetrizer normalization failed");
  s.gram_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s.gram_[i * n + j] = di[j] * s.cartan_[i * n + j];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (s.gram_[i * n + j] != s.gram_[j * n + i])
        throw std::logic_error("gram matrix not symmetric");

  s.generatePositives();
  s.buildEuclid();
  return s;
}

void RootSystem::generatePositives() {
  int n = rank_;
  std::unordered_map<std::string, Coeffs> known;
  std::vector<Coeffs> frontier;
  for (int i = 0; i < n; ++i) {
    Coeffs c(n, 0);
    c[i] = 1;
    known.emplace(key(c), c);
    frontier.push_back(c);
  }
  // Height induction with root strings: beta + alpha_i is a root iff
  // p - <beta, alpha_i^vee> > 0, where p is the largest k with
  // beta - k*alpha_i a root.
  while (!frontier.empty()) {
    std::vector<Coeffs> next;
    for (const Coeffs& beta : frontier) {
      for (int i = 0; i < n; ++i) {
        Coeffs up = beta;
        up[i] += 1;
        if (known.count(key(up))) continue;
        long pairing = 0;
        for (int j = 0; j < n; ++j) pairing += beta[j] * cartan_[j * n + i];
        long p = 0;
        Coeffs down = beta;
        while (true) {
          down[i] -= 1;
          bool nonneg = true;
          for (long v : down)
            if (v < 0) { nonneg = false; break; }
          if (!nonneg || !known.count(key(down))) break;
          ++p;
        }
        if (p - pairing > 0) {
          known.emplace(key(up), up);
          next.push_back(up);
        }
      }
    }
    frontier = std::move(next);
  }

  positives_.clear();
  positives_.reserve(known.size());
  for (auto& kv : known) {
    Root r;
    r.coeffs = kv.second;
    r.height = static_cast<int>(std::accumulate(kv.second.begin(), kv.second.end(), 0l));
    positives_.push_back(std::move(r));
  }
  std::sort(positives_.begin(), positives_.end(), [](const Root& a, const Root& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.coeffs < b.coeffs;
  });
  indexOf_.clear();
  for (int i = 0; i < static_cast<int>(positives_.size()); ++i) {
    positives_[i].index = i;
    indexOf_.emplace(key(positives_[i].coeffs), i);
  }

  if (static_cast<long>(positives_.size()) != positiveCountFor(type_))
    throw std::logic_error("generated root count mismatch for " + type_.label());

  int maxH = positives_.back().height;
  int nMax = 0;
  for (const Root& r : positives_)
    if (r.height == maxH) ++nMax;
  if (nMax != 1) throw std::logic_error("highest root not unique");
  highest_ = positives_.back().index;

  int m = positiveCount();
  orthMask_.assign(m, RootMask(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (inner(i, j) == 0) orthMask_[i].set(j);
}

void RootSystem::buildEuclid() {
  int n = rank_;
  int dim = 0;
  std::vector<std::vector<Rat>> cols;  // one column per simple root
  auto basisCol = [&](int i, int j, int sgn2) {
    std::vector<Rat> c(dim, Rat(0));
    c[i] = 1;
    if (j >= 0) c[j] = sgn2;
    return c;
  };
  switch (type_.family) {
    case Family::A: {
      dim = n + 1;
      for (int i = 0; i < n; ++i) cols.push_back(basisCol(i, i + 1, -1));
      break;
    }
    case Family::B: {
      dim = n;
      for (int i = 0; i + 1 < n; ++i) cols.push_back(basisCol(i, i + 1, -1));
      cols.push_back(basisCol(n - 1, -1, 0));
      break;
    }
    case Family::C: {
      dim = n;
      for (int i = 0; i + 1 < n; ++i) cols.push_back(basisCol(i, i + 1, -1));
      auto c = basisCol(n - 1, -1, 0);
      c[n - 1] = 2;
      cols.push_back(c);
      break;
    }
    case Family::D: {
      dim = n;
      for (int i = 0; i + 1 < n; ++i) cols.push_back(basisCol(i, i + 1, -1));
      cols.push_back(basisCol(n - 2, n - 1, 1));
      break;
    }
    case Family::E: {
      dim = 8;
      std::vector<Rat> a1(8, Rat(-1, 2));
      a1[0] = Rat(1, 2);
      a1[7] = Rat(1, 2);
      cols.push_back(a1);
      cols.push_back(basisCol(0, 1, 1));  // eps1 + eps2
      for (int i = 1; i + 2 <= n; ++i) cols.push_back(basisCol(i, i - 1, -1));
      break;
    }
    case Family::F: {
      dim = 4;
      cols.push_back(basisCol(1, 2, -1));
      cols.push_back(basisCol(2, 3, -1));
      cols.push_back(basisCol(3, -1, 0));
      cols.push_back({Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)});
      break;
    }
    case Family::G: {
      dim = 3;
      cols.push_back({Rat(1), Rat(-1), Rat(0)});
      cols.push_back({Rat(-2), Rat(1), Rat(1)});
      break;
    }
  }
  euclid_ = RatMatrix(dim, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < dim; ++i) euclid_.at(i, j) = cols[j][i];

  auto dot = [&](int i, int j) {
    Rat s(0);
    for (int k = 0; k < dim; ++k) s += cols[i][k] * cols[j][k];
    return s;
  };
  euclidScale_ = Rat(gram_[0]) / dot(0, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (Rat(gram_[i * n + j]) != euclidScale_ * dot(i, j))
        throw std::logic_error("euclidean realization inconsistent with gram");
}

int RootSystem::rootIndex(const Coeffs& c) const {
  auto it = indexOf_.find(key(c));
  return it == indexOf_.end() ? -1 : it->second;
}

long RootSystem::inner(int a, int b) const {
  return innerVec(positives_[a].coeffs, positives_[b].coeffs);
}

long RootSystem::innerVec(const Coeffs& a, const Coeffs& b) const {
  long s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) s += a[i] * b[j] * gram_[i * rank_ + j];
  }
  return s;
}

bool RootSystem::less(int a, int b) const {
  const Coeffs& x = positives_[a].coeffs;
  const Coeffs& y = positives_[b].coeffs;
  bool strict = false;
  for (int i = 0; i < rank_; ++i) {
    if (y[i] < x[i]) return false;
    if (y[i] > x[i]) strict = true;
  }
  return strict;
}

std::vector<int> RootSystem::singularSet(int beta) const {
  std::vector<int> out;
  const Coeffs& b = positives_[beta].coeffs;
  for (const Root& r : positives_) {
    if (r.index == beta) continue;
    Coeffs diff(rank_);
    bool neg = false;
    for (int i = 0; i < rank_; ++i) {
      diff[i] = b[i] - r.coeffs[i];
      if (diff[i] < 0) { neg = true; break; }
    }
    if (!neg && rootIndex(diff) >= 0) out.push_back(r.index);
  }
  return out;
}

bool RootSystem::isSingularFor(int alpha, int beta) const {
  Coeffs diff(rank_);
  for (int i = 0; i < rank_; ++i) {
    diff[i] = positives_[beta].coeffs[i] - positives_[alpha].coeffs[i];
    if (diff[i] < 0) return false;
  }
  return rootIndex(diff) >= 0;
}

std::vector<std::vector<int>> RootSystem::components(const std::vector<int>& subset) const {
  int k = static_cast<int>(subset.size());
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (inner(subset[i], subset[j]) != 0) parent[find(i)] = find(j);
  std::vector<std::vector<int>> groups(k);
  for (int i = 0; i < k; ++i) groups[find(i)].push_back(subset[i]);
  std::vector<std::vector<int>> out;
  for (auto& g : groups)
    if (!g.empty()) out.push_back(std::move(g));
  return out;
}

namespace {

// All bijections sigma with cat[i][j] == comp[sigma(i)][sigma(j)].
std::vector<std::vector<int>> cartanIsomorphisms(const std::vector<long>& cat,
                                                 const std::vector<long>& comp,
                                                 int k) {
  std::vector<std::vector<int>> found;
  std::vector<int> sigma(k, -1);
  std::vector<bool> used(k, false);
  std::function<void(int)> rec = [&](int i) {
    if (i == k) {
      found.push_back(sigma);
      return;
    }
    for (int p = 0; p < k; ++p) {
      if (used[p]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        if (cat[i * k + j] != comp[p * k + sigma[j]]) ok = false;
        if (cat[j * k + i] != comp[sigma[j] * k + p]) ok = false;
      }
      if (!ok) continue;
      sigma[i] = p;
      used[p] = true;
      rec(i + 1);
      used[p] = false;
      sigma[i] = -1;
    }
  };
  rec(0);
  return found;
}

}  // namespace

SubsystemView RootSystem::classifySubset(const std::vector<int>& subset) const {
  SubsystemView view;
  view.roots = subset;
  std::sort(view.roots.begin(), view.roots.end());

  std::vector<bool> inSet(positiveCount(), false);
  for (int r : view.roots) inSet[r] = true;

  // Indecomposable elements of the (closed) subset form its simple system.
  for (int r : view.roots) {
    bool decomposable = false;
    for (int g : view.roots) {
      if (g == r) break;  // need g with smaller height only; indices are height-sorted
      Coeffs diff(rank_);
      bool neg = false;
      for (int i = 0; i < rank_; ++i) {
        diff[i] = positives_[r].coeffs[i] - positives_[g].coeffs[i];
        if (diff[i] < 0) { neg = true; break; }
      }
      if (neg) continue;
      int d = rootIndex(diff);
      if (d >= 0 && inSet[d]) { decomposable = true; break; }
    }
    if (!decomposable) view.inducedSimples.push_back(r);
  }

  for (auto& compSimples : components(view.inducedSimples)) {
    SubsystemView::Component comp;
    comp.simples = compSimples;
    int k = static_cast<int>(compSimples.size());
    std::vector<long> cm(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        cm[i * k + j] = 2 * inner(compSimples[i], compSimples[j]) /
                        inner(compSimples[j], compSimples[j]);
    bool classified = false;
    for (char fam : {'A', 'B', 'C', 'D', 'E', 'F', 'G'}) {
      SystemType cand{static_cast<Family>(fam), k};
      if (!cand.valid()) continue;
      if (fam == 'C' && k < 3) continue;  // C2 canonicalizes to B2
      if (fam == 'D' && k < 4) continue;  // D3 canonicalizes to A3
      auto isos = cartanIsomorphisms(cartanMatrix(cand), cm, k);
      if (!isos.empty()) {
        comp.type = cand;
        comp.isomorphisms = std::move(isos);
        classified = true;
        break;
      }
    }
    if (!classified) throw std::logic_error("subsystem component not classifiable");
    view.components.push_back(std::move(comp));
  }
  std::sort(view.components.begin(), view.components.end(),
            [](const SubsystemView::Component& a, const SubsystemView::Component& b) {
              if (a.type.rank != b.type.rank) return a.type.rank > b.type.rank;
              return static_cast<char>(a.type.family) < static_cast<char>(b.type.family);
            });
  return view;
}

SubsystemView RootSystem::perpSubsystem(int beta) const {
  std::vector<int> subset;
  for (const Root& r : positives_)
    if (inner(r.index, beta) == 0) subset.push_back(r.index);
  return classifySubset(subset);
}

std::string SubsystemView::typeLabel() const {
  if (components.empty()) return "empty";
  std::string out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out += " x ";
    out += components[i].type.label();
  }
  return out;
}

std::vector<Rat> RootSystem::euclideanCoords(const Coeffs& c) const {
  std::vector<Rat> out(euclid_.rows(), Rat(0));
  for (std::size_t i = 0; i < euclid_.rows(); ++i)
    for (int j = 0; j < rank_; ++j)
      if (c[j]) out[i] += euclid_.at(i, j) * c[j];
  return out;
}

std::optional<Coeffs> RootSystem::coeffsFromEuclidean(const std::vector<Rat>& eps) const {
  if (eps.size() != euclid_.rows()) return std::nullopt;
  // Normal equations (M^T M) x = M^T eps; M has full column rank.
  RatMatrix mtm(rank_, rank_);
  std::vector<Rat> rhs(rank_, Rat(0));
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) {
      Rat s(0);
      for (std::size_t k = 0; k < euclid_.rows(); ++k)
        s += euclid_.at(k, i) * euclid_.at(k, j);
      mtm.at(i, j) = s;
    }
    for (std::size_t k = 0; k < euclid_.rows(); ++k)
      rhs[i] += euclid_.at(k, i) * eps[k];
  }
  auto x = mtm.solve(rhs);
  if (!x) return std::nullopt;
  // Verify the solution reproduces eps exactly (eps must lie in the span).
  for (std::size_t k = 0; k < euclid_.rows(); ++k) {
    Rat s(0);
    for (int j = 0; j < rank_; ++j) s += euclid_.at(k, j) * (*x)[j];
    if (s != eps[k]) return std::nullopt;
  }
  Coeffs out(rank_);
  for (int j = 0; j < rank_; ++j) {
    if ((*x)[j].get_den() != 1) return std::nullopt;
    out[j] = (*x)[j].get_num().get_si();
  }
  return out;
}

std::string RootSystem::digitString(int i) const {
  std::string s;
  for (long v : positives_[i].coeffs) {
    if (v < 0 || v > 9) throw std::logic_error("coefficient out of digit range");
    s += static_cast<char>('0' + v);
  }
  return s;
}

std::optional<int> RootSystem::rootFromDigits(const std::string& s) const {
  if (static_cast<int>(s.size()) != rank_) return std::nullopt;
  Coeffs c(rank_);
  for (int i = 0; i < rank_; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    c[i] = s[i] - '0';
  }
  int idx = rootIndex(c);
  if (idx < 0) return std::nullopt;
  return idx;
}

int RootMask::popcount() const {
  int c = 0;
  for (auto w : w_) c += __builtin_popcountll(w);
  return c;
}

std::uint64_t RootSystem::datumHash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  for (char c : type_.label()) mix(static_cast<std::uint64_t>(c));
  for (long v : cartan_) mix(static_cast<std::uint64_t>(v));
  for (const Root& r : positives_)
    for (long v : r.coeffs) mix(static_cast<std::uint64_t>(v));
  return h;
}

}  // namespace kcas
