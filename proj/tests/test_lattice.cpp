#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace tensalg;

namespace {

oracle::Poset poset(const FinLattice& L) {
  oracle::Poset P;
  P.n = static_cast<int>(L.size());
  P.le.assign(P.n, std::vector<bool>(P.n));
  for (int a = 0; a < P.n; ++a)
    for (int b = 0; b < P.n; ++b) P.le[a][b] = L.leq(a, b);
  return P;
}

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("one point lattice") {
    auto L = validate_lattice({"0"}, {{true}});
    CHECK(L.size() == 1);
    CHECK(L.bottom() == 0);
    CHECK(L.top() == 0);
    CHECK(join_irreducibles(L).empty());
  }

  TEST_CASE("diamond joins and meets") {
    auto L = fx::m3();
    const int a = fx::lab(L, "a"), b = fx::lab(L, "b"), c = fx::lab(L, "c");
    CHECK(L.bottom() == fx::lab(L, "0"));
    CHECK(L.join(a, b) == fx::lab(L, "1"));
    std::vector<int> ab{a, b};
    CHECK(join(L, ab) == fx::lab(L, "1"));
    CHECK(meet(L, ab) == fx::lab(L, "0"));
    CHECK(L.meet(b, c) == fx::lab(L, "0"));
    std::vector<int> none;
    CHECK(join(L, none) == L.bottom());
    CHECK(meet(L, none) == L.top());
    for (int x = 0; x < 5; ++x) {
      std::vector<int> one{x};
      CHECK(join(L, one) == x);
      CHECK(meet(L, one) == x);
    }
  }

  TEST_CASE("empty meet on the 3-chain is top") {
    auto L = fx::chain(3);
    std::vector<int> none;
    CHECK(meet(L, none) == 2);
  }

  TEST_CASE("antichain has no join") {
    CHECK(fx::kind_of([] { validate_lattice({"x", "y"}, {{true, false}, {false, true}}); }) == ErrorKind::MissingJoin);
  }

  TEST_CASE("order violations") {
    // a <= b and b <= a with a != b
    CHECK(fx::kind_of([] { validate_lattice({"a", "b"}, {{true, true}, {true, true}}); }) == ErrorKind::NotAPartialOrder);
    // not reflexive
    CHECK(fx::kind_of([] { validate_lattice({"a", "b"}, {{false, true}, {false, true}}); }) ==
          ErrorKind::NotAPartialOrder);
    // not transitive: 0<1, 1<2, but not 0<2
    CHECK(fx::kind_of([] {
            validate_lattice({"0", "1", "2"}, {{true, true, false}, {false, true, true}, {false, false, true}});
          }) == ErrorKind::NotAPartialOrder);
  }

  TEST_CASE("join irreducibles against the definition") {
    auto M = fx::m3();
    CHECK(join_irreducibles(M) == ElemSubset{1, 2, 3});
    auto C = fx::chain(3);
    CHECK(join_irreducibles(C) == ElemSubset{1, 2});
    for (const auto& L : {fx::m3(), fx::n5(), fx::chain(4), fx::chain(1)}) {
      ElemSubset brute;
      for (int x = 0; x < static_cast<int>(L.size()); ++x) {
        if (x == L.bottom()) continue;
        int below = L.bottom();
        for (int y = 0; y < static_cast<int>(L.size()); ++y)
          if (y != x && L.leq(y, x)) below = L.join(below, y);
        if (below != x) brute.push_back(x);
      }
      CHECK(join_irreducibles(L) == brute);
    }
  }

  TEST_CASE("join preserving maps against the all-subsets oracle") {
    CHECK(enumerate_join_preserving_maps(fx::chain(2), fx::chain(2)).size() == 2);
    CHECK(enumerate_join_preserving_maps(fx::chain(1), fx::m3()).size() == 1);
    const std::vector<FinLattice> ls{fx::chain(1), fx::chain(2), fx::chain(3), fx::m3(), fx::n5()};
    for (const auto& A : ls)
      for (const auto& B : ls) {
        auto got = enumerate_join_preserving_maps(A, B);
        CHECK(got == oracle::all_subset_join_maps(poset(A), poset(B)));
      }
  }
}
