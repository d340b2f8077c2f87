#include "weights.hpp"

#include <algorithm>
#include <stdexcept>

namespace kcas {

namespace {

std::vector<Rat> eps(int dim) { return std::vector<Rat>(dim, Rat(0)); }

}  // namespace

WeightTableRows classicalWeightRows(SystemType t) {
  WeightTableRows rows;
  int n = t.rank;
  switch (t.family) {
    case Family::A: {
      // Realized on n+1 coordinates; pairs (i, N-i+1) off the ends inward.
      int N = n + 1;
      for (int i = 1; i <= N / 2; ++i) {
        auto beta = eps(N);
        beta[i - 1] = 1;
        beta[N - i] = -1;
        auto mu = eps(N);
        for (int k = 1; k <= i; ++k) mu[k - 1] = 1;
        for (int k = N - i + 1; k <= N; ++k) mu[k - 1] = -1;
        rows.cascadeEps.push_back(beta);
        rows.muEps.push_back(mu);
      }
      break;
    }
    case Family::B: {
      for (int i = 1; i <= n; ++i) {
        auto beta = eps(n);
        if (i % 2 == 1 && i == n) {
          beta[n - 1] = 1;
        } else if (i % 2 == 1) {
          beta[i - 1] = 1;
          beta[i] = 1;
        } else {
          beta[i - 2] = 1;
          beta[i - 1] = -1;
        }
        auto mu = eps(n);
        if (i % 2 == 0) {
          for (int k = 1; k <= i - 1; ++k) mu[k - 1] = 2;
        } else if (i < n) {
          for (int k = 1; k <= i + 1; ++k) mu[k - 1] = 1;
        } else {
          for (int k = 1; k <= n; ++k) mu[k - 1] = 1;
        }
        rows.cascadeEps.push_back(beta);
        rows.muEps.push_back(mu);
      }
      break;
    }
    case Family::C: {
      for (int i = 1; i <= n; ++i) {
        auto beta = eps(n);
        beta[i - 1] = 2;
        auto mu = eps(n);
        for (int k = 1; k <= i; ++k) mu[k - 1] = 2;
        rows.cascadeEps.push_back(beta);
        rows.muEps.push_back(mu);
      }
      break;
    }
    case Family::D: {
      int m = (n / 2) * 2;  // cascade size: n even, n-1 odd
      for (int i = 1; i <= m; ++i) {
        auto beta = eps(n);
        if (i % 2 == 1) {
          beta[i - 1] = 1;
          beta[i] = 1;
        } else {
          beta[i - 2] = 1;
          beta[i - 1] = -1;
        }
        auto mu = eps(n);
        if (i % 2 == 0 && i < n) {
          for (int k = 1; k <= i - 1; ++k) mu[k - 1] = 2;
        } else if (i % 2 == 0) {  // i == n
          for (int k = 1; k <= n - 1; ++k) mu[k - 1] = 1;
          mu[n - 1] = -1;
        } else {
          for (int k = 1; k <= i + 1; ++k) mu[k - 1] = 1;
        }
        rows.cascadeEps.push_back(beta);
        rows.muEps.push_back(mu);
      }
      break;
    }
    default:
      throw std::invalid_argument("classicalWeightRows: " + t.label() +
                                  " is not a classical type");
  }
  return rows;
}

std::optional<std::vector<long>> cascadeExpansion(const RootSystem& sys,
                                                  const Cascade& c,
                                                  const Coeffs& mu) {
  std::vector<long> out(c.size());
  for (int j = 0; j < c.size(); ++j) {
    const Coeffs& beta = sys.root(c.roots[j]).coeffs;
    long num = sys.innerVec(mu, beta);
    long den = sys.innerVec(beta, beta);
    if (num % den != 0) return std::nullopt;
    out[j] = num / den;
    if (out[j] < 0) return std::nullopt;
  }
  Coeffs recon(sys.rank(), 0);
  for (int j = 0; j < c.size(); ++j) {
    const Coeffs& beta = sys.root(c.roots[j]).coeffs;
    for (int k = 0; k < sys.rank(); ++k) recon[k] += out[j] * beta[k];
  }
  if (recon != mu) return std::nullopt;
  return out;
}

bool verifyDominant(const RootSystem& sys, const Coeffs& mu) {
  for (int i = 0; i < sys.rank(); ++i) {
    Coeffs alpha(sys.rank(), 0);
    alpha[i] = 1;
    long num = 2 * sys.innerVec(mu, alpha);
    long den = sys.gram(i, i);
    if (num % den != 0) return false;
    if (num / den < 0) return false;
  }
  return true;
}

WeightTable buildWeightTable(const RootSystem& sys, const Cascade& c,
                             const WeightTableRows& rows,
                             std::vector<int>* paperOrderOut) {
  int m = c.size();
  if (static_cast<int>(rows.cascadeEps.size()) != m ||
      static_cast<int>(rows.muEps.size()) != m)
    throw std::runtime_error("weight rows: row count does not match cascade size");

  WeightTable wt;
  wt.system = sys.type();
  wt.muSimple.resize(m);
  wt.muEuclid.resize(m);
  wt.expo.resize(m);

  // Match each tabulated cascade root to the computed cascade.
  std::vector<int> rowOfPosition(m, -1);  // canonical position -> source row
  for (int r = 0; r < m; ++r) {
    auto coeffs = sys.coeffsFromEuclidean(rows.cascadeEps[r]);
    if (!coeffs)
      throw std::runtime_error("weight rows: cascade root " + std::to_string(r + 1) +
                               " is not in the root lattice");
    int idx = sys.rootIndex(*coeffs);
    int pos = -1;
    for (int i = 0; i < m; ++i)
      if (c.roots[i] == idx) { pos = i; break; }
    if (pos < 0)
      throw std::runtime_error("weight rows: root " + std::to_string(r + 1) +
                               " is not a cascade root");
    if (rowOfPosition[pos] != -1)
      throw std::runtime_error("weight rows: duplicate cascade root");
    rowOfPosition[pos] = r;
  }
  if (paperOrderOut) *paperOrderOut = rowOfPosition;

  for (int i = 0; i < m; ++i) {
    int r = rowOfPosition[i];
    wt.muEuclid[i] = rows.muEps[r];
    if (!rows.muSimple.empty()) {
      wt.muSimple[i] = rows.muSimple[r];
    } else {
      auto mu = sys.coeffsFromEuclidean(rows.muEps[r]);
      if (!mu)
        throw std::runtime_error("weight rows: weight " + std::to_string(r + 1) +
                                 " is not integral over the simple roots");
      wt.muSimple[i] = *mu;
    }
    auto expo = cascadeExpansion(sys, c, wt.muSimple[i]);
    if (!expo)
      throw std::runtime_error("weight rows: weight " + std::to_string(r + 1) +
                               " does not expand integrally over the cascade");
    wt.expo[i] = *expo;
  }
  return wt;
}

std::vector<std::string> verifyWeightTable(const RootSystem& sys, const Cascade& c,
                                           const WeightTable& wt) {
  std::vector<std::string> bad;
  int m = c.size();
  auto row = [](int i) { return std::to_string(i + 1); };

  for (int i = 0; i < m; ++i) {
    // Basis consistency between the two tabulated forms.
    std::vector<Rat> viaMap = sys.euclideanCoords(wt.muSimple[i]);
    if (viaMap != wt.muEuclid[i])
      bad.push_back("row " + row(i) + ": epsilon and simple-root forms disagree");
    if (!verifyDominant(sys, wt.muSimple[i]))
      bad.push_back("row " + row(i) + ": weight not dominant");
    for (int j = 0; j < m; ++j) {
      long e = wt.expo[i][j];
      if (e < 0) bad.push_back("row " + row(i) + ": negative exponent");
      if (j == i && e != 1)
        bad.push_back("row " + row(i) + ": diagonal exponent is not 1");
      if (j > i && e != 0)
        bad.push_back("row " + row(i) + ": exponent matrix not lower triangular");
      if (j != i && c.isSimple[j] && e != 0)
        bad.push_back("row " + row(i) + ": nonzero off-diagonal entry in simple-root column " + row(j));
    }
  }
  return bad;
}

bool restrictedWeightCheck(const RootSystem& sys, const Cascade& c,
                           const WeightTable& wt, const RootSystem& targetSys,
                           const Cascade& targetCascade,
                           const WeightTable& targetTable, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  SubsystemView perp = sys.perpSubsystem(sys.highestRoot());
  if (perp.components.size() != 1) return fail("subsystem not irreducible");
  const auto& comp = perp.components[0];
  if (!(comp.type == targetSys.type()))
    return fail("subsystem type " + comp.type.label() + " does not match target " +
                targetSys.type().label());

  const Coeffs& top = sys.root(c.roots[0]).coeffs;
  int m = c.size(), tm = targetCascade.size();
  if (tm != m - 1) return fail("target cascade size mismatch");

  for (const auto& iso : comp.isomorphisms) {
    // Image of a target-system vector (over its simple roots) inside the
    // parent root lattice.
    auto image = [&](const Coeffs& v) {
      Coeffs out(sys.rank(), 0);
      for (int j = 0; j < targetSys.rank(); ++j) {
        const Coeffs& s = sys.root(comp.simples[iso[j]]).coeffs;
        for (int k = 0; k < sys.rank(); ++k) out[k] += v[j] * s[k];
      }
      return out;
    };
    // Pair target cascade roots with parent cascade roots.
    std::vector<int> mate(tm, -1);  // target row -> parent cascade position
    bool ok = true;
    for (int k = 0; k < tm && ok; ++k) {
      Coeffs img = image(targetSys.root(targetCascade.roots[k]).coeffs);
      int idx = sys.rootIndex(img);
      ok = false;
      for (int i = 1; i < m; ++i)
        if (c.roots[i] == idx) {
          mate[k] = i;
          ok = true;
          break;
        }
    }
    if (!ok) continue;
    // Compare restricted weights.
    for (int k = 0; k < tm && ok; ++k) {
      int i = mate[k];
      Coeffs restricted(sys.rank());
      for (int t = 0; t < sys.rank(); ++t)
        restricted[t] = wt.muSimple[i][t] - wt.expo[i][0] * top[t];
      if (restricted != image(targetTable.muSimple[k])) ok = false;
    }
    if (ok) return true;
  }
  return fail("no Cartan isomorphism matches all restricted weights");
}

}  // namespace kcas
