#include "cascade.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace kcas {

std::vector<int> Cascade::simplePositions() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (isSimple[i]) out.push_back(i);
  return out;
}

int cascadeSizeFor(SystemType t) {
  int n = t.rank;
  switch (t.family) {
    case Family::A: return (n + 1) / 2;  // rank n realizes A_n on n+1 coordinates
    case Family::B: return n;
    case Family::C: return n;
    case Family::D: return n % 2 == 0 ? n : n - 1;
    case Family::E: return t.rank == 6 ? 4 : (t.rank == 7 ? 7 : 8);
    case Family::F: return 4;
    case Family::G: return 2;
  }
  return 0;
}

namespace {

// Maximal root of one irreducible component: the unique height-maximal
// element, verified dominant within the component.
int componentMax(const RootSystem& sys, const std::vector<int>& comp) {
  int best = comp[0];
  int ties = 1;
  for (std::size_t i = 1; i < comp.size(); ++i) {
    int h = sys.root(comp[i]).height, bh = sys.root(best).height;
    if (h > bh) {
      best = comp[i];
      ties = 1;
    } else if (h == bh) {
      ++ties;
    }
  }
  if (ties != 1)
    throw std::logic_error("component maximal root not unique by height");
  for (int r : comp)
    if (sys.inner(best, r) < 0)
      throw std::logic_error("height-maximal root not dominant in component");
  return best;
}

std::vector<int> layerSort(const RootSystem& sys, std::vector<int> layer) {
  std::sort(layer.begin(), layer.end(), [&](int a, int b) {
    const Root& ra = sys.root(a);
    const Root& rb = sys.root(b);
    if (ra.height != rb.height) return ra.height > rb.height;
    return ra.coeffs > rb.coeffs;
  });
  return layer;
}

}  // namespace

std::vector<int> cascadeOfSubset(const RootSystem& sys, const std::vector<int>& subset) {
  std::vector<int> current = subset;
  std::vector<int> out;
  while (!current.empty()) {
    std::vector<int> layer;
    for (const auto& comp : sys.components(current))
      layer.push_back(componentMax(sys, comp));
    layer = layerSort(sys, layer);
    out.insert(out.end(), layer.begin(), layer.end());
    std::vector<int> next;
    for (int r : current) {
      bool orth = true;
      for (int m : layer)
        if (sys.inner(r, m) != 0) { orth = false; break; }
      if (orth) next.push_back(r);
    }
    current = std::move(next);
  }
  return out;
}

Cascade kostantCascade(const RootSystem& sys) {
  Cascade c;
  std::vector<int> current(sys.positiveCount());
  for (int i = 0; i < sys.positiveCount(); ++i) current[i] = i;
  while (!current.empty()) {
    std::vector<int> layer;
    for (const auto& comp : sys.components(current))
      layer.push_back(componentMax(sys, comp));
    layer = layerSort(sys, layer);
    int begin = c.size();
    for (int m : layer) c.roots.push_back(m);
    c.layers.emplace_back(begin, c.size());
    std::vector<int> next;
    for (int r : current) {
      bool orth = true;
      for (int m : layer)
        if (sys.inner(r, m) != 0) { orth = false; break; }
      if (orth) next.push_back(r);
    }
    current = std::move(next);
  }
  c.isSimple.resize(c.size());
  for (int i = 0; i < c.size(); ++i)
    c.isSimple[i] = sys.root(c.roots[i]).height == 1;

  if (c.size() != cascadeSizeFor(sys.type()))
    throw std::logic_error("cascade size mismatch for " + sys.type().label());
  // Pairwise strong orthogonality: neither sum nor difference is a root.
  for (int i = 0; i < c.size(); ++i)
    for (int j = i + 1; j < c.size(); ++j) {
      const Coeffs& a = sys.root(c.roots[i]).coeffs;
      const Coeffs& b = sys.root(c.roots[j]).coeffs;
      Coeffs sum(sys.rank()), diff(sys.rank());
      for (int k = 0; k < sys.rank(); ++k) {
        sum[k] = a[k] + b[k];
        diff[k] = std::abs(a[k] - b[k]);
      }
      if (sys.rootIndex(sum) >= 0 || sys.rootIndex(diff) >= 0)
        throw std::logic_error("cascade not strongly orthogonal");
    }
  return c;
}

HeisenbergPartition heisenbergPartition(const RootSystem& sys) {
  HeisenbergPartition part;
  part.center = sys.highestRoot();
  const Coeffs& top = sys.root(part.center).coeffs;
  std::set<int> seen;
  for (const Root& r : sys.positives()) {
    if (r.index == part.center) continue;
    long ip = sys.inner(r.index, part.center);
    if (ip < 0) throw std::logic_error("negative pairing with the highest root");
    if (ip == 0 || seen.count(r.index)) continue;
    Coeffs rest(sys.rank());
    for (int k = 0; k < sys.rank(); ++k) rest[k] = top[k] - r.coeffs[k];
    int mate = sys.rootIndex(rest);
    if (mate < 0)
      throw std::logic_error("pairing failure opposite the highest root");
    seen.insert(r.index);
    seen.insert(mate);
    part.pairs.emplace_back(std::min(r.index, mate), std::max(r.index, mate));
  }
  std::sort(part.pairs.begin(), part.pairs.end());
  return part;
}

bool cascadeRestrictionCheck(const RootSystem& sys) {
  Cascade c = kostantCascade(sys);
  SubsystemView perp = sys.perpSubsystem(sys.highestRoot());
  std::vector<int> intrinsic = cascadeOfSubset(sys, perp.roots);
  std::vector<int> rest(c.roots.begin() + 1, c.roots.end());
  std::sort(intrinsic.begin(), intrinsic.end());
  std::sort(rest.begin(), rest.end());
  return intrinsic == rest;
}

}  // namespace kcas
