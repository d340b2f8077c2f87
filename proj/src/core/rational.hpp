#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kcas {

// All arithmetic in this library is exact. Rationals are GMP-backed; the
// hot combinatorial paths use plain machine integers (coefficients are tiny).
using Rat = mpq_class;

// Parses "p" or "p/q" with optional sign. q must be nonzero.
std::optional<Rat> parseRat(const std::string& s);

std::string ratToString(const Rat& r);

// base^exp with exp possibly negative; base must be nonzero for exp < 0.
// 0^0 evaluates to 1.
Rat ratPow(const Rat& base, long exp);

std::string ratVecToString(const std::vector<Rat>& v, char sep = ',');

}  // namespace kcas
