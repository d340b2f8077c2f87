#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "matrix.hpp"
#include "rational.hpp"

namespace kcas {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SystemType {
  Family family = Family::A;
  int rank = 1;

  // Accepts labels like "A3", "B5", "E8", "G2" (case-insensitive family).
  static std::optional<SystemType> parse(const std::string& label);
  std::string label() const;

  // Legal combinations: A>=1, B>=1, C>=1, D>=3, E in {6,7,8}, F=4, G=2.
  bool valid() const;

  bool operator==(const SystemType& o) const {
    return family == o.family && rank == o.rank;
  }
};

// Coordinates of a root or weight over the simple roots. Always integral.
using Coeffs = std::vector<long>;

struct Root {
  Coeffs coeffs;
  int height = 0;  // sum of coefficients
  int index = -1;  // position in the canonical positive-root order
};

// Bitset over the positive roots of one system; used for orthogonality
// adjacency and subset enumeration.
class RootMask {
 public:
  RootMask() = default;
  explicit RootMask(int nbits) : n_(nbits), w_((nbits + 63) / 64, 0) {}

  void set(int i) { w_[i >> 6] |= 1ull << (i & 63); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  int bits() const { return n_; }

  RootMask& operator&=(const RootMask& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  int popcount() const;
  // Visits set bits >= from, ascending.
  template <class F>
  void forEachFrom(int from, F&& f) const {
    for (std::size_t k = from >> 6; k < w_.size(); ++k) {
      std::uint64_t w = w_[k];
      if (k == static_cast<std::size_t>(from >> 6) && (from & 63))
        w &= ~0ull << (from & 63);
      while (w) {
        int b = __builtin_ctzll(w);
        f(static_cast<int>(k * 64 + b));
        w &= w - 1;
      }
    }
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

class RootSystem;

// A views of the root subsystem { alpha in Phi+ : (alpha, beta) = 0 } (or any
// closed subset), with its induced simple system and Dynkin classification.
struct SubsystemView {
  std::vector<int> roots;           // parent positive-root indices, ascending
  std::vector<int> inducedSimples;  // the indecomposable elements

  struct Component {
    std::vector<int> simples;  // parent indices of this component's simples
    SystemType type;
    // Every bijection catalog-simple-index -> position in `simples` that
    // matches the catalog Cartan matrix. Diagram automorphisms make this
    // non-unique (e.g. the D-series flip).
    std::vector<std::vector<int>> isomorphisms;
  };
  std::vector<Component> components;

  std::string typeLabel() const;  // e.g. "A5" or "A1 x A1"
};

class RootSystem {
 public:
  // Throws std::invalid_argument on an illegal (family, rank) pair.
  static RootSystem build(SystemType t);
  static RootSystem build(const std::string& label);

  const SystemType& type() const { return type_; }
  int rank() const { return rank_; }
  int positiveCount() const { return static_cast<int>(positives_.size()); }
  const std::vector<Root>& positives() const { return positives_; }
  const Root& root(int i) const { return positives_[i]; }

  // Index of a coefficient vector in the canonical order, or -1.
  int rootIndex(const Coeffs& c) const;
  bool isPositiveRoot(const Coeffs& c) const { return rootIndex(c) >= 0; }

  // Symmetrized inner product: short roots have squared length 2.
  long gram(int i, int j) const { return gram_[i * rank_ + j]; }
  long inner(int a, int b) const;
  long innerVec(const Coeffs& a, const Coeffs& b) const;
  long normSq(int a) const { return inner(a, a); }

  // b - a is a nonzero nonnegative combination of simple roots.
  bool less(int a, int b) const;

  // S(beta) = { alpha in Phi+ : beta - alpha in Phi+ }.
  std::vector<int> singularSet(int beta) const;
  bool isSingularFor(int alpha, int beta) const;

  // Connected components of `subset` under the non-orthogonality relation.
  std::vector<std::vector<int>> components(const std::vector<int>& subset) const;

  SubsystemView perpSubsystem(int beta) const;
  SubsystemView classifySubset(const std::vector<int>& subset) const;

  int highestRoot() const { return highest_; }

  // Epsilon-coordinate realization. Columns of euclidMap() are the simple
  // roots; euclideanCoords solves exactly for arbitrary integral vectors.
  const RatMatrix& euclidMap() const { return euclid_; }
  int euclidDim() const { return static_cast<int>(euclid_.rows()); }
  std::vector<Rat> euclideanCoords(const Coeffs& c) const;
  // Inverse direction: epsilon vector -> simple coordinates (must be integral
  // and in the root lattice span; returns nullopt otherwise).
  std::optional<Coeffs> coeffsFromEuclidean(const std::vector<Rat>& eps) const;

  // The single positive rational r with gram = r * (epsilon dot product),
  // per irreducible system.
  Rat euclidScale() const { return euclidScale_; }

  const RootMask& orthMask(int i) const { return orthMask_[i]; }

  // Digit-string convention m1...mn (each coefficient one digit).
  std::string digitString(int i) const;
  std::optional<int> rootFromDigits(const std::string& s) const;

  // Catalog count of positive roots for a legal type.
  static long positiveCountFor(SystemType t);

  // 64-bit FNV-1a over the structural data (type, Cartan, root list); used
  // to bind caches to the system they were computed from.
  std::uint64_t datumHash() const;

  const std::vector<long>& cartan() const { return cartan_; }
  long cartanAt(int i, int j) const { return cartan_[i * rank_ + j]; }

 private:
  SystemType type_;
  int rank_ = 0;
  std::vector<long> cartan_;  // rank x rank
  std::vector<long> gram_;    // rank x rank, symmetrized
  std::vector<Root> positives_;
  std::unordered_map<std::string, int> indexOf_;
  std::vector<RootMask> orthMask_;
  RatMatrix euclid_;
  Rat euclidScale_;
  int highest_ = -1;

  static std::string key(const Coeffs& c);
  void generatePositives();
  void buildEuclid();
};

// Cartan matrix of a legal type, row-major.
std::vector<long> cartanMatrix(SystemType t);

}  // namespace kcas
