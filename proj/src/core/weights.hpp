#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cascade.hpp"
#include "roots.hpp"

namespace kcas {

// The canonical-generator weights attached to the cascade roots, in all
// three bases, plus the integer exponent matrix of their expansions over the
// cascade itself. Rows follow the canonical cascade order.
struct WeightTable {
  SystemType system;
  std::vector<Coeffs> muSimple;
  std::vector<std::vector<Rat>> muEuclid;
  std::vector<std::vector<long>> expo;  // expo[i][j]: coefficient of cascade root j in mu_i
};

// Rows as tabulated (cascade roots and weights in epsilon coordinates, the
// weight also over the simple roots), in the source's own row order.
struct WeightTableRows {
  std::vector<std::vector<Rat>> cascadeEps;
  std::vector<std::vector<Rat>> muEps;
  std::vector<Coeffs> muSimple;  // may be left empty: derived from muEps
};

// Parametric rows for the classical families.
WeightTableRows classicalWeightRows(SystemType t);

// Expansion of an integral weight over the (orthogonal) cascade roots:
// coefficient_j = (mu, beta_j)/(beta_j, beta_j). Returns nullopt unless all
// coefficients are nonnegative integers and the expansion reconstructs mu
// exactly.
std::optional<std::vector<long>> cascadeExpansion(const RootSystem& sys,
                                                  const Cascade& c,
                                                  const Coeffs& mu);

// 2(mu, alpha)/(alpha, alpha) nonnegative and integral for every simple alpha.
bool verifyDominant(const RootSystem& sys, const Coeffs& mu);

// Assembles a WeightTable from tabulated rows: aligns rows to the canonical
// cascade order by matching cascade roots, derives the exponent matrix, and
// validates the structural invariants (triangularity etc.). Throws
// std::runtime_error with a description on any failure.
WeightTable buildWeightTable(const RootSystem& sys, const Cascade& c,
                             const WeightTableRows& rows,
                             std::vector<int>* paperOrderOut = nullptr);

// Structural checks on an assembled table; returns human-readable violations
// (empty means all hold): lower-triangular unipotent exponents, zero columns
// at simple cascade roots, nonnegative entries, dominance, basis consistency.
std::vector<std::string> verifyWeightTable(const RootSystem& sys, const Cascade& c,
                                           const WeightTable& wt);

// The weight-restriction identity: for every cascade root beta except the
// highest root, mu_beta - expo[beta][top] * top equals the canonical weight
// of beta inside the subsystem orthogonal to the highest root, under some
// Cartan isomorphism onto the target system's table. The target table is the
// caller's (classical computed or fixture loaded).
bool restrictedWeightCheck(const RootSystem& sys, const Cascade& c,
                           const WeightTable& wt, const RootSystem& targetSys,
                           const Cascade& targetCascade,
                           const WeightTable& targetTable, std::string* why = nullptr);

}  // namespace kcas
