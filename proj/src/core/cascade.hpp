#pragma once

#include <utility>
#include <vector>

#include "roots.hpp"

namespace kcas {

// The cascade of orthogonal roots: iteratively the maximal roots of the
// irreducible components of the subsystem orthogonal to everything chosen so
// far. Canonical order is layer-major; within a layer, height descending
// with lexicographically larger coefficient vectors first.
struct Cascade {
  std::vector<int> roots;                    // positive-root indices
  std::vector<std::pair<int, int>> layers;   // [begin, end) ranges into roots
  std::vector<bool> isSimple;                // root is a simple root

  int size() const { return static_cast<int>(roots.size()); }
  std::vector<int> simplePositions() const;  // positions with isSimple true
};

Cascade kostantCascade(const RootSystem& sys);

// Cascade of a closed subset computed intrinsically (components, maxima and
// orthogonality all relative to the subset). Returns parent root indices in
// the same canonical order.
std::vector<int> cascadeOfSubset(const RootSystem& sys, const std::vector<int>& subset);

// The pairing (alpha, beta1 - alpha) on the roots not orthogonal to the
// highest root beta1.
struct HeisenbergPartition {
  int center = -1;                         // the highest root
  std::vector<std::pair<int, int>> pairs;  // each sums to the center
  int pairCount() const { return static_cast<int>(pairs.size()); }
};

HeisenbergPartition heisenbergPartition(const RootSystem& sys);

// True iff cascade(sys) minus the highest root equals, as a set, the cascade
// of the subsystem orthogonal to the highest root.
bool cascadeRestrictionCheck(const RootSystem& sys);

// Catalog cascade size for a legal type.
int cascadeSizeFor(SystemType t);

}  // namespace kcas
