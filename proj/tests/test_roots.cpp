#include "core/roots.hpp"

#include <doctest.h>

#include <set>

using namespace kcas;

TEST_CASE("positive root counts match the catalog") {
  struct Row {
    const char* label;
    int count;
  };
  for (Row r : {Row{"A3", 6}, Row{"B3", 9}, Row{"C4", 16}, Row{"D4", 12},
                Row{"E6", 36}, Row{"E7", 63}, Row{"E8", 120}, Row{"F4", 24},
                Row{"G2", 6}, Row{"A1", 1}, Row{"B1", 1}}) {
    RootSystem s = RootSystem::build(r.label);
    CHECK_MESSAGE(s.positiveCount() == r.count, r.label);
  }
}

TEST_CASE("illegal types are rejected") {
  CHECK_THROWS_AS(RootSystem::build("E9"), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build("F5"), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build("G3"), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build("D2"), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build("H4"), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build("A0"), std::invalid_argument);
}

TEST_CASE("root test: reflection closure holds for every generated root") {
  for (const char* label : {"B3", "D4", "F4", "G2", "E6"}) {
    RootSystem s = RootSystem::build(label);
    for (const Root& r : s.positives()) {
      // Reflecting in any simple root lands in the root system.
      for (int i = 0; i < s.rank(); ++i) {
        Coeffs alpha(s.rank(), 0);
        alpha[i] = 1;
        long cv = 2 * s.innerVec(r.coeffs, alpha) / s.gram(i, i);
        Coeffs refl = r.coeffs;
        refl[i] -= cv;
        bool neg = false, pos = false;
        for (long v : refl) (v < 0 ? neg : pos) = true;
        if (neg && pos) FAIL("reflection produced mixed signs");
        if (neg) for (auto& v : refl) v = -v;
        CHECK(s.rootIndex(refl) >= 0);
      }
    }
  }
}

TEST_CASE("inner product normalization: short roots squared 2") {
  for (const char* label : {"A2", "B3", "C3", "D4", "E6", "F4", "G2"}) {
    RootSystem s = RootSystem::build(label);
    std::set<long> norms;
    long mn = 1 << 20;
    for (const Root& r : s.positives()) {
      long n = s.normSq(r.index);
      norms.insert(n);
      mn = std::min(mn, n);
    }
    CHECK(mn == 2);
    for (long n : norms) CHECK((n == 2 || n == 4 || n == 6));
  }
}

TEST_CASE("G2 inner products under short^2 = 2") {
  RootSystem g2 = RootSystem::build("G2");
  int a1 = g2.rootIndex({1, 0});
  int a2 = g2.rootIndex({0, 1});
  int top = g2.rootIndex({3, 2});
  REQUIRE(a1 >= 0);
  REQUIRE(a2 >= 0);
  REQUIRE(top >= 0);
  CHECK(g2.inner(a1, a2) == -3);
  CHECK(g2.inner(a1, top) == 0);
  CHECK(g2.highestRoot() == top);
}

TEST_CASE("E7 gram matrix matches the simply-laced scalar products") {
  RootSystem e7 = RootSystem::build("E7");
  CHECK(e7.gram(1, 3) == -1);  // alpha2 . alpha4
  CHECK(e7.gram(0, 1) == 0);
  CHECK(e7.gram(0, 2) == -1);
  for (int i = 0; i < 7; ++i) CHECK(e7.gram(i, i) == 2);
}

TEST_CASE("partial order: difference in the positive simple-root cone") {
  RootSystem g2 = RootSystem::build("G2");
  int a1 = g2.rootIndex({1, 0});
  int a2 = g2.rootIndex({0, 1});
  int a12 = g2.rootIndex({1, 1});
  CHECK(g2.less(a1, a12));
  CHECK_FALSE(g2.less(a1, a2));
  CHECK_FALSE(g2.less(a2, a1));
  // 3a1+2a2 is the unique maximum.
  int top = g2.highestRoot();
  for (const Root& r : g2.positives())
    if (r.index != top) CHECK(g2.less(r.index, top));
}

TEST_CASE("singular sets") {
  RootSystem g2 = RootSystem::build("G2");
  auto s = g2.singularSet(g2.highestRoot());
  std::set<std::string> got;
  for (int i : s) got.insert(g2.digitString(i));
  CHECK(got == std::set<std::string>{"01", "11", "21", "31"});

  for (const char* label : {"A3", "G2", "F4"}) {
    RootSystem sys = RootSystem::build(label);
    for (int i = 0; i < sys.rank(); ++i) {
      Coeffs a(sys.rank(), 0);
      a[i] = 1;
      CHECK(sys.singularSet(sys.rootIndex(a)).empty());
    }
  }
}

TEST_CASE("simply-laced singularity criterion: alpha in S(beta) iff (alpha,beta) > 0") {
  for (const char* label : {"E6", "E7", "E8"}) {
    RootSystem s = RootSystem::build(label);
    for (const Root& b : s.positives())
      for (const Root& a : s.positives()) {
        if (a.index == b.index) continue;
        if (!s.less(a.index, b.index)) continue;
        bool singular = s.isSingularFor(a.index, b.index);
        bool positive = s.inner(a.index, b.index) > 0;
        CHECK(singular == positive);
      }
  }
}

TEST_CASE("components under non-orthogonality") {
  RootSystem a3 = RootSystem::build("A3");
  int a1 = a3.rootIndex({1, 0, 0});
  int a2 = a3.rootIndex({0, 1, 0});
  int a3r = a3.rootIndex({0, 0, 1});
  CHECK(a3.components({a1, a2}).size() == 1);
  CHECK(a3.components({a1, a3r}).size() == 2);
}

TEST_CASE("orthogonal-complement subsystems of the highest root") {
  struct Row {
    const char* label;
    const char* perp;
  };
  // E6 and E7 computed from the realization; F4/G2/E8 as published.
  for (Row r : {Row{"E6", "A5"}, Row{"E7", "D6"}, Row{"E8", "E7"},
                Row{"F4", "C3"}, Row{"G2", "A1"}}) {
    RootSystem s = RootSystem::build(r.label);
    SubsystemView v = s.perpSubsystem(s.highestRoot());
    CHECK_MESSAGE(v.typeLabel() == r.perp, r.label);
    // Every subset element is a nonnegative combination of induced simples.
    RatMatrix simples(0, 0);
    for (int idx : v.inducedSimples) {
      std::vector<Rat> row;
      for (long x : s.root(idx).coeffs) row.emplace_back(x);
      simples.appendRow(row);
    }
    for (int idx : v.roots) {
      // Solve simples^T y = root.
      RatMatrix m(s.rank(), v.inducedSimples.size());
      for (std::size_t j = 0; j < v.inducedSimples.size(); ++j)
        for (int k = 0; k < s.rank(); ++k)
          m.at(k, j) = Rat(s.root(v.inducedSimples[j]).coeffs[k]);
      std::vector<Rat> rhs;
      for (long x : s.root(idx).coeffs) rhs.emplace_back(x);
      auto sol = m.solve(rhs);
      REQUIRE(sol.has_value());
      for (const Rat& y : *sol) {
        CHECK(y >= 0);
        CHECK(y.get_den() == 1);
      }
    }
  }
}

TEST_CASE("euclidean realization") {
  RootSystem f4 = RootSystem::build("F4");
  // alpha3 = eps4
  auto a3 = f4.euclideanCoords({0, 0, 1, 0});
  CHECK(a3 == std::vector<Rat>{Rat(0), Rat(0), Rat(0), Rat(1)});

  RootSystem g2 = RootSystem::build("G2");
  auto a1 = g2.euclideanCoords({1, 0});
  CHECK(a1 == std::vector<Rat>{Rat(1), Rat(-1), Rat(0)});

  RootSystem e8 = RootSystem::build("E8");
  auto a2 = e8.euclideanCoords({0, 1, 0, 0, 0, 0, 0, 0});
  std::vector<Rat> expect(8, Rat(0));
  expect[0] = 1;
  expect[1] = 1;
  CHECK(a2 == expect);

  // Inner products preserved up to the per-system scale, all simple pairs.
  for (const char* label : {"A3", "B4", "C3", "D5", "E6", "E7", "E8", "F4", "G2"}) {
    RootSystem s = RootSystem::build(label);
    Rat scale = s.euclidScale();
    CHECK(scale > 0);
    for (int i = 0; i < s.rank(); ++i)
      for (int j = 0; j < s.rank(); ++j) {
        Coeffs ei(s.rank(), 0), ej(s.rank(), 0);
        ei[i] = 1;
        ej[j] = 1;
        auto vi = s.euclideanCoords(ei), vj = s.euclideanCoords(ej);
        Rat dot(0);
        for (std::size_t k = 0; k < vi.size(); ++k) dot += vi[k] * vj[k];
        CHECK(Rat(s.gram(i, j)) == scale * dot);
      }
  }
}

TEST_CASE("round trip euclidean <-> simple coordinates") {
  for (const char* label : {"E7", "F4", "B3"}) {
    RootSystem s = RootSystem::build(label);
    for (const Root& r : s.positives()) {
      auto eps = s.euclideanCoords(r.coeffs);
      auto back = s.coeffsFromEuclidean(eps);
      REQUIRE(back.has_value());
      CHECK(*back == r.coeffs);
    }
  }
}

TEST_CASE("orthogonality masks agree with the inner product") {
  for (const char* label : {"G2", "F4", "E6"}) {
    RootSystem s = RootSystem::build(label);
    for (int i = 0; i < s.positiveCount(); ++i)
      for (int j = 0; j < s.positiveCount(); ++j)
        CHECK(s.orthMask(i).test(j) == (s.inner(i, j) == 0));
  }
}

TEST_CASE("digit strings") {
  RootSystem f4 = RootSystem::build("F4");
  int idx = *f4.rootFromDigits("2342");
  CHECK(f4.digitString(idx) == "2342");
  CHECK(idx == f4.highestRoot());
  CHECK_FALSE(f4.rootFromDigits("9999").has_value());
  CHECK_FALSE(f4.rootFromDigits("123").has_value());
}
