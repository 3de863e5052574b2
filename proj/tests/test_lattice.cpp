#include "doctest.h"
#include "test_support.hpp"

using namespace testing;

namespace {

std::vector<Rational> coefficients(const SparsePoly& p) { return p.ascending_coefficients(); }

std::vector<Rational> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

bool irreducible_by_blocks(const Arrangement& a, const Edge& w) {
  return irreducible_blocks(essentialize(localize(a, w)).arrangement).size() == 1;
}

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("Boolean xy: four edges with alternating Moebius values") {
    const Lattice l(plain("2 1\n1 0 : 1\n0 1 : 1\n"));
    REQUIRE(l.size() == 4);
    CHECK(l.mobius(0) == 1);
    CHECK(l.mobius(1) == -1);
    CHECK(l.mobius(2) == -1);
    CHECK(l.mobius(3) == 1);
    CHECK(l.edge(l.center()).rank == 2);
  }

  TEST_CASE("three concurrent lines") {
    const Lattice l(generic_lines(3));
    CHECK(l.rank_counts() == std::vector<std::size_t>{1, 3, 1});
    for (std::size_t i = 1; i <= 3; ++i) CHECK(l.mobius(i) == -1);
    CHECK(l.mobius(l.center()) == 2);
    CHECK(coefficients(l.char_poly(l.center())) == ints({2, -3, 1}));
    CHECK(l.proj_complement_euler(l.center()) == -1);
    CHECK(lct(l) == Q("2/3"));
  }

  TEST_CASE("four planes in general position") {
    const Lattice l(corpus_entry("budur-example")->arrangement);
    CHECK(l.size() == 12);
    CHECK(l.rank_counts() == std::vector<std::size_t>{1, 4, 6, 1});
    CHECK(coefficients(l.char_poly(l.center())) == ints({-3, 6, -4, 1}));
    CHECK(l.proj_complement_euler(l.center()) == 1);
    CHECK(lct(l) == Q("3/4"));

    // Dense: the four planes and the origin; no line is dense.
    const auto dense = l.dense_edges();
    REQUIRE(dense.size() == 5);
    for (auto w : dense) CHECK(l.edge(w).rank != 2);
    CHECK(l.is_dense(l.center()));

    const Lattice planes(load_arrangement(corpus_path("four-generic-planes.json")));
    CHECK(coefficients(planes.char_poly(planes.center())) == ints({-3, 6, -4, 1}));
  }

  TEST_CASE("characteristic polynomial of Boolean arrangements") {
    for (std::size_t n = 1; n <= 4; ++n) {
      const Lattice l(boolean_arrangement(n));
      const SparsePoly expected = SparsePoly::univariate("t", {-1, 1}).pow(static_cast<unsigned>(n));
      CHECK(l.char_poly(l.center()) == expected);
      CHECK(l.global_char_poly() == expected);
    }
  }

  TEST_CASE("projective complement of a hyperplane is a point") {
    const Lattice l(boolean_arrangement(3));
    for (std::size_t w = 1; w <= 3; ++w) CHECK(l.proj_complement_euler(w) == 1);
    CHECK_THROWS_AS(l.proj_complement_euler(l.ambient()), Error);
  }

  TEST_CASE("dense edges of standard examples") {
    const Lattice boolean(boolean_arrangement(3));
    CHECK(boolean.dense_edges() == std::vector<std::size_t>{1, 2, 3});
    CHECK(lct(boolean) == 1);

    const Lattice pencil(corpus_entry("xy-xplusy")->arrangement);
    CHECK(pencil.dense_edges().size() == 4);
  }

  TEST_CASE("density ignores multiplicities") {
    const Lattice l(corpus_entry("x2y")->arrangement);
    CHECK(l.dense_edges().size() == 2);
    CHECK_FALSE(l.is_dense(l.center()));
    CHECK_THROWS_AS(lct(l), Error);
  }

  TEST_CASE("beta at one requires a factor t - 1") {
    CHECK(beta_at_one(SparsePoly::univariate("t", {2, -3, 1})) == -1);
    CHECK_THROWS_AS(beta_at_one(SparsePoly::univariate("t", {1, 1})), Error);
  }

  TEST_CASE("edge records carry factor data") {
    const Lattice l(corpus_entry("x2y")->arrangement);
    const auto x = l.find(std::uint64_t{1});
    REQUIRE(x);
    CHECK(l.edge(*x).factor_set == std::vector<std::size_t>{0, 1});
    CHECK(l.edge(*x).a == std::vector<int>{1, 1, 0});
    CHECK(l.edge(l.center()).a == std::vector<int>{1, 1, 1});
    CHECK_FALSE(l.find(std::uint64_t{8}).has_value());
  }

  TEST_CASE("property: Moebius interval sums vanish") {
    std::mt19937 rng(5);
    std::vector<Arrangement> inputs = corpus_arrangements();
    for (int i = 0; i < 40; ++i) inputs.push_back(random_arrangement(rng, 2 + i % 3, 1 + i % 7));
    for (const auto& a : inputs) {
      const Lattice l(a);
      CHECK(l.mobius(0) == 1);
      for (std::size_t i = 0; i < l.size(); ++i) {
        CHECK(l.mobius(i, i) == 1);
        for (std::size_t j = 0; j < l.size(); ++j) {
          if (i == j || !l.leq(i, j)) continue;
          long sum = 0;
          for (std::size_t u = 0; u < l.size(); ++u)
            if (l.leq(i, u) && l.leq(u, j)) sum += l.mobius(i, u);
          CHECK(sum == 0);
        }
      }
      const SparsePoly chi = l.global_char_poly();
      CHECK(chi.total_degree() == static_cast<int>(a.dim()));
      CHECK(chi.ascending_coefficients().back() == 1);
    }
  }

  TEST_CASE("property: deletion-restriction on random arrangements") {
    std::mt19937 rng(314159);
    int arrangements = 0;
    for (int trial = 0; arrangements < 60; ++trial) {
      const std::size_t n = 2 + trial % 3;
      const Arrangement a = random_arrangement(rng, n, 1 + rng() % 8);
      ++arrangements;
      const SparsePoly chi = Lattice(a).global_char_poly();
      for (std::size_t h = 0; h < a.size(); ++h) {
        const SparsePoly deleted = Lattice(delete_hyperplane(a, h)).global_char_poly();
        const SparsePoly restricted = Lattice(restrict_to(a, make_edge(a, {h}))).global_char_poly();
        CHECK(chi == deleted - restricted);
      }
    }
    CHECK(arrangements >= 50);
  }

  TEST_CASE("property: t - 1 divides every local characteristic polynomial") {
    std::mt19937 rng(8);
    std::vector<Arrangement> inputs = corpus_arrangements();
    for (int i = 0; i < 30; ++i) inputs.push_back(random_arrangement(rng, 3 + i % 2, 3 + i % 6));
    for (const auto& a : inputs) {
      const Lattice l(a);
      for (std::size_t w = 1; w < l.size(); ++w) {
        CHECK(l.char_poly(w).evaluate({Rational(1)}) == 0);
        CHECK_NOTHROW(l.proj_complement_euler(w));
      }
    }
  }

  TEST_CASE("property: strata Euler characteristics sum to one") {
    std::mt19937 rng(13);
    std::vector<Arrangement> inputs = corpus_arrangements();
    for (int i = 0; i < 30; ++i) inputs.push_back(random_arrangement(rng, 2 + i % 3, 1 + i % 8));
    for (const auto& a : inputs) {
      const Lattice l(a);
      Rational total = 0;
      for (std::size_t w = 0; w < l.size(); ++w) total += l.restriction_char_poly(w).evaluate({Rational(1)});
      CHECK(total == 1);
    }
  }

  TEST_CASE("property: density agrees with irreducibility of the localization") {
    std::mt19937 rng(21);
    std::vector<Arrangement> inputs = corpus_arrangements();
    for (int i = 0; i < 30; ++i) inputs.push_back(random_arrangement(rng, 3 + i % 2, 2 + i % 6));
    for (const auto& a : inputs) {
      const Lattice l(a);
      for (std::size_t w = 1; w < l.size(); ++w) CHECK(l.is_dense(w) == irreducible_by_blocks(a, l.edge(w)));
    }
  }

  TEST_CASE("property: the multiplicity sign rule holds on dense edges") {
    for (const auto& a : corpus_arrangements()) {
      const Lattice l(a);
      for (std::size_t w = 1; w < l.size(); ++w) {
        const long q = l.proj_complement_euler(w);
        const long sign = (l.edge(w).rank - 1) % 2 == 0 ? 1 : -1;
        if (l.is_dense(w)) {
          CHECK(sign * q > 0);
        } else {
          CHECK(q == 0);
        }
      }
    }
  }

  TEST_CASE("property: beta is nonzero exactly for irreducible arrangements") {
    std::mt19937 rng(34);
    std::vector<Arrangement> inputs = corpus_arrangements();
    for (int i = 0; i < 40; ++i) inputs.push_back(random_arrangement(rng, 2 + i % 3, 1 + i % 8));
    for (const auto& a : inputs) {
      const Arrangement e = essentialize(a).arrangement;
      const Lattice l(e);
      const bool beta_nonzero = beta_at_one(l.global_char_poly()) != 0;
      CHECK(beta_nonzero == (irreducible_blocks(e).size() == 1));
    }
  }
}
