#include <set>

#include "doctest.h"
#include "test_support.hpp"

using namespace testing;

namespace {

std::set<LinearFormInS> as_set(const std::vector<LinearFormInS>& forms) { return {forms.begin(), forms.end()}; }

std::vector<std::size_t> support_of(const LinearFormInS& f) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < f.nvars(); ++j)
    if (f.coeffs()[j] != 0) out.push_back(j);
  return out;
}

}  // namespace

TEST_SUITE("bsideal") {
  TEST_CASE("R_W sets") {
    const Lattice pencil3(generic_lines(3));
    CHECK(rw_set(pencil3, 1) == roots({"-1"}));
    CHECK(rw_set(pencil3, pencil3.center()) == roots({"-2/3", "-1", "-4/3"}));

    const Lattice pencil4(generic_lines(4));
    CHECK(rw_set(pencil4, pencil4.center()) == roots({"-1/2", "-3/4", "-1", "-5/4", "-3/2"}));

    const Lattice boolean(boolean_arrangement(2));
    CHECK_THROWS_AS(rw_set(boolean, boolean.center()), Error);
  }

  TEST_CASE("free roots") {
    CHECK(free_roots(Lattice(boolean_arrangement(3))) == roots({"-1"}));
    CHECK(free_roots(Lattice(corpus_entry("xy-xplusy")->arrangement)) == roots({"-1", "-2/3", "-4/3"}));
    CHECK(free_roots(Lattice(generic_lines(4))) == roots({"-1", "-1/2", "-3/4", "-5/4", "-3/2"}));
    CHECK_THROWS_AS(free_roots(Lattice(corpus_entry("x2y")->arrangement)), Error);
  }

  TEST_CASE("generator of the Bernstein-Sato ideal for free arrangements") {
    const auto boolean = maisonobe_generator(Lattice(boolean_arrangement(3)));
    CHECK(as_set(boolean.factors) == std::set<LinearFormInS>{form({1, 0, 0}, 1), form({0, 1, 0}, 1),
                                                             form({0, 0, 1}, 1)});

    const auto pencil = maisonobe_generator(Lattice(corpus_entry("xy-xplusy")->arrangement));
    CHECK(pencil.factors.size() == 6);
    CHECK(as_set(pencil.factors) == std::set<LinearFormInS>{form({1, 0, 0}, 1), form({0, 1, 0}, 1),
                                                            form({0, 0, 1}, 1), form({1, 1, 1}, 2),
                                                            form({1, 1, 1}, 3), form({1, 1, 1}, 4)});

    const auto four = maisonobe_generator(Lattice(generic_lines(4)));
    CHECK(four.factors.size() == 4 + 5);

    const Arrangement single = plain("2 1\n1 0 : 1\n0 1 : 1\n1 1 : 1\n");
    CHECK_THROWS_AS(maisonobe_generator(Lattice(single)), Error);
  }

  TEST_CASE("lower-bound components for the four-plane example") {
    const auto forms = lower_bound_components(Lattice(corpus_entry("budur-example")->arrangement));
    std::set<LinearFormInS> expected;
    for (std::size_t i = 0; i < 4; ++i) {
      std::vector<long> c(4, 0);
      c[i] = 1;
      expected.insert(form(c, 1));
    }
    for (long k = 0; k < 4; ++k) expected.insert(form({1, 1, 1, 1}, 3 + k));
    CHECK(forms.size() == 8);
    CHECK(as_set(forms) == expected);
  }

  TEST_CASE("lower-bound components for normal crossings and non-reduced input") {
    const auto xy = lower_bound_components(Lattice(boolean_arrangement(2)));
    CHECK(as_set(xy) == std::set<LinearFormInS>{form({1, 0}, 1), form({0, 1}, 1)});

    const auto x2y = lower_bound_components(Lattice(corpus_entry("x2y")->arrangement));
    CHECK(as_set(x2y) == std::set<LinearFormInS>{form({1, 1, 0}, 1), form({1, 1, 0}, 2), form({0, 0, 1}, 1)});

    CHECK_THROWS_AS(lower_bound_components(Lattice(plain("2 1\n1 0 : 1\n0 1 : 1\n"))), Error);
  }

  TEST_CASE("characteristic-cycle components") {
    const Lattice budur(corpus_entry("budur-example")->arrangement);
    const auto comps = cc_components(budur, 1, 1);
    CHECK(comps.size() == 5);
    for (const auto& c : comps) {
      CHECK(c.shift == 1);
      CHECK(c.multiplicity == 1);
    }

    const Lattice pencil(corpus_entry("xy-xplusy")->arrangement);
    const auto pc = cc_components(pencil, -1, 2);
    CHECK(pc.size() == 4 * 4);
    for (const auto& c : pc) CHECK(c.multiplicity == 1);

    const Lattice five(generic_lines(5));
    for (const auto& c : cc_components(five, 0, 0))
      CHECK(c.multiplicity == (five.edge(c.edge).rank == 1 ? 1 : 3));
  }

  TEST_CASE("diagonal specialization") {
    const auto pencil = maisonobe_generator(Lattice(corpus_entry("xy-xplusy")->arrangement));
    const auto d = specialize_diagonal(pencil.factors, Containment::Equality);
    CHECK(d.roots == roots({"-1", "-2/3", "-4/3"}));
    CHECK(d.product.factors.size() == 6);
    CHECK(d.semantics == Containment::Equality);

    const auto lower = lower_bound_components(Lattice(corpus_entry("budur-example")->arrangement));
    CHECK(specialize_diagonal(lower, Containment::Inclusion).roots == roots({"-1", "-3/4", "-5/4", "-3/2"}));

    CHECK(specialize_diagonal({form({1}, 1)}, Containment::Inclusion).roots == roots({"-1"}));

    // A form whose coefficients cancel and whose constant survives drops out.
    const auto dropped = specialize_diagonal({form({1, -1}, 2), form({1, 0}, 1)}, Containment::Inclusion);
    CHECK(dropped.roots == roots({"-1"}));
    CHECK(dropped.product.factors.size() == 1);
    CHECK_THROWS_AS(specialize_diagonal({form({1, -1}, 0)}, Containment::Inclusion), Error);
  }

  TEST_CASE("property: shapes of emitted forms") {
    for (const auto& a : corpus_arrangements()) {
      const Lattice l(a);
      std::set<std::vector<std::size_t>> dense_supports;
      for (auto w : l.dense_edges()) dense_supports.insert(l.edge(w).factor_set);
      for (const auto& f : lower_bound_components(l)) {
        CHECK(f.constant() > 0);
        for (const auto& c : f.coeffs()) CHECK((c == 0 || c == 1));
        CHECK(dense_supports.count(support_of(f)) == 1);
      }
    }
  }

  TEST_CASE("property: lower bound contains the k = 0 forms") {
    for (const auto& a : corpus_arrangements()) {
      const Lattice l(a);
      const auto forms = as_set(lower_bound_components(l));
      for (auto w : l.dense_edges()) {
        const Edge& e = l.edge(w);
        CHECK(forms.count(LinearFormInS::indicator(a.factors(), e.factor_set, static_cast<long>(e.rank))) == 1);
      }
    }
  }

  TEST_CASE("property: root sets of reduced complete inputs") {
    std::mt19937 rng(77);
    std::vector<Arrangement> inputs;
    for (const auto& a : corpus_arrangements())
      if (a.is_reduced()) inputs.push_back(a);
    for (int i = 0; i < 25; ++i) inputs.push_back(random_arrangement(rng, 2 + i % 2, 2 + i % 5, true));
    for (const auto& a : inputs) {
      const Lattice l(a);
      const RootSet r = free_roots(l);
      REQUIRE_FALSE(r.empty());
      for (const auto& x : r) {
        CHECK(x < 0);
        CHECK(x > -2);
      }
      CHECK(specialize_diagonal(maisonobe_generator(l).factors, Containment::Equality).roots == r);
      const Rational least = -lct(l);
      CHECK(least == r.back());
    }
  }
}
