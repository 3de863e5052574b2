#include "doctest.h"
#include "test_support.hpp"

using namespace testing;

namespace {

Derivation partial_scaled(std::size_t n, std::size_t i) {
  const auto vars = x_variables(n);
  Derivation d{1, std::vector<SparsePoly>(n, SparsePoly(vars))};
  d.coeffs[i] = SparsePoly::variable(vars, i);
  return d;
}

std::vector<Derivation> boolean_certificate(std::size_t n) {
  std::vector<Derivation> cert;
  for (std::size_t i = 0; i < n; ++i) cert.push_back(partial_scaled(n, i));
  return cert;
}

// Normals transformed by an invertible integer matrix: the same arrangement
// in new coordinates.
Arrangement change_coordinates(const Arrangement& a, const RatMatrix& g) {
  std::vector<Hyperplane> hs;
  for (const auto& h : a.hyperplanes()) {
    RatVector v(a.dim(), 0);
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t i = 0; i < a.dim(); ++i) v[j] += h.normal[i] * g(i, j);
    hs.push_back({v, h.mults});
  }
  return Arrangement(a.dim(), a.factors(), std::move(hs));
}

}  // namespace

TEST_SUITE("freeness") {
  TEST_CASE("logarithmic derivations of xy in degree one") {
    const auto basis = logderiv_basis(boolean_arrangement(2), 1);
    REQUIRE(basis.size() == 2);
    // Cross terms vanish: each basis element is diagonal.
    for (const auto& d : basis) {
      CHECK(d.coeffs[0].coefficient({0, 1}) == 0);
      CHECK(d.coeffs[1].coefficient({1, 0}) == 0);
    }
  }

  TEST_CASE("the Euler derivation is always logarithmic") {
    for (const auto& a : corpus_arrangements()) {
      const Arrangement r = reduced_support(a);
      CHECK(is_logarithmic(r, Derivation::euler(r.dim())));
      CHECK(logderiv_basis(r, 1).size() >= 1);
    }
  }

  TEST_CASE("no constant vector field preserves three lines") {
    CHECK(logderiv_basis(generic_lines(3), 0).empty());
  }

  TEST_CASE("Derivation::make checks the logarithmic condition") {
    const auto vars = x_variables(2);
    std::vector<SparsePoly> shift{SparsePoly::constant(vars, 1), SparsePoly(vars)};
    CHECK_THROWS_AS(Derivation::make(boolean_arrangement(2), 0, shift), Error);
    CHECK_NOTHROW(Derivation::make(boolean_arrangement(2), 1, boolean_certificate(2)[0].coeffs));
  }

  TEST_CASE("Terao exponents") {
    CHECK(terao_exponents(Lattice(boolean_arrangement(3))) == std::vector<unsigned>{1, 1, 1});
    CHECK(terao_exponents(Lattice(generic_lines(3))) == std::vector<unsigned>{1, 2});
    CHECK_FALSE(terao_exponents(Lattice(corpus_entry("budur-example")->arrangement)).has_value());
  }

  TEST_CASE("Saito search on Boolean arrangements finds the diagonal certificate") {
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto r = saito_search(boolean_arrangement(n));
      const auto* f = std::get_if<Free>(&r);
      REQUIRE(f);
      CHECK(f->exponents == std::vector<unsigned>(n, 1));
      CHECK(verify_certificate(boolean_arrangement(n), f->certificate));
      CHECK(f->scale != 0);
    }
  }

  TEST_CASE("Saito search on xy(x+y) pairs the Euler derivation with a quadratic one") {
    const Arrangement a = corpus_entry("xy-xplusy")->arrangement;
    const auto r = saito_search(a);
    const auto* f = std::get_if<Free>(&r);
    REQUIRE(f);
    CHECK(f->exponents == std::vector<unsigned>{1, 2});
    REQUIRE(f->certificate.size() == 2);
    CHECK(f->certificate[0].degree == 1);
    CHECK(f->certificate[1].degree == 2);
  }

  TEST_CASE("the four-plane example is not free") {
    const auto r = saito_search(corpus_entry("budur-example")->arrangement);
    const auto* nf = std::get_if<NotFree>(&r);
    REQUIRE(nf);
    // (t - 1)(t^2 - 3t + 3)
    const SparsePoly expected = SparsePoly::univariate("t", {-1, 1}) * SparsePoly::univariate("t", {3, -3, 1});
    CHECK(nf->char_poly == expected);
    CHECK(verdict_name(r) == "not-free");
  }

  TEST_CASE("A3 is free with exponents 1, 2, 3") {
    const auto r = saito_search(corpus_entry("supersolvable-a3")->arrangement);
    const auto* f = std::get_if<Free>(&r);
    REQUIRE(f);
    CHECK(f->exponents == std::vector<unsigned>{1, 2, 3});
  }

  TEST_CASE("a too small degree bound is inconclusive") {
    const auto r = saito_search(generic_lines(5), 2);
    CHECK(std::holds_alternative<Inconclusive>(r));
    CHECK(verdict_name(r) == "inconclusive");
  }

  TEST_CASE("non-reduced input is rejected") {
    CHECK_THROWS_AS(saito_search(corpus_entry("x2y")->arrangement), Error);
  }

  TEST_CASE("verify_certificate") {
    const Arrangement xyz = boolean_arrangement(3);
    CHECK(verify_certificate(xyz, boolean_certificate(3)));

    // Replacing one diagonal field by the Euler field keeps det = xyz, because
    // the Euler field minus the other two diagonal fields is the removed one.
    auto with_euler = boolean_certificate(3);
    with_euler[0] = Derivation::euler(3);
    CHECK(verify_certificate(xyz, with_euler));

    auto duplicated = boolean_certificate(3);
    duplicated[0] = duplicated[1];
    CHECK_FALSE(verify_certificate(xyz, duplicated));

    auto short_cert = boolean_certificate(3);
    short_cert.pop_back();
    CHECK_FALSE(verify_certificate(xyz, short_cert));

    // x d/dx is not logarithmic along x + y.
    CHECK_FALSE(verify_certificate(corpus_entry("xy-xplusy")->arrangement, boolean_certificate(2)));
  }

  TEST_CASE("property: pencils of lines are free with exponents 1 and d - 1") {
    for (std::size_t d = 2; d <= 6; ++d) {
      const Arrangement a = generic_lines(d);
      const auto r = saito_search(a);
      const auto* f = std::get_if<Free>(&r);
      REQUIRE(f);
      CHECK(f->exponents == std::vector<unsigned>{1, static_cast<unsigned>(d - 1)});
      CHECK(verify_certificate(a, f->certificate));
    }
  }

  TEST_CASE("property: certificates verify and match Terao exponents") {
    std::mt19937 rng(101);
    std::vector<Arrangement> inputs;
    for (const auto& a : corpus_arrangements()) inputs.push_back(essentialize(reduced_support(a)).arrangement);
    for (int i = 0; i < 20; ++i)
      inputs.push_back(essentialize(random_arrangement(rng, 2 + i % 2, 2 + i % 5)).arrangement);
    int free_count = 0;
    for (const auto& a : inputs) {
      const auto r = saito_search(a);
      if (const auto* f = std::get_if<Free>(&r)) {
        ++free_count;
        CHECK(verify_certificate(a, f->certificate));
        std::vector<unsigned> degrees;
        unsigned total = 0;
        for (const auto& d : f->certificate) {
          degrees.push_back(d.degree);
          total += d.degree;
        }
        std::sort(degrees.begin(), degrees.end());
        CHECK(total == a.size());
        CHECK(std::optional(degrees) == terao_exponents(Lattice(a)));
      }
    }
    CHECK(free_count > 10);
  }

  TEST_CASE("property: logarithmic derivation dimensions are coordinate independent") {
    std::mt19937 rng(2718);
    std::uniform_int_distribution<int> entry(-2, 2);
    for (int trial = 0; trial < 12; ++trial) {
      const std::size_t n = 2 + trial % 2;
      const Arrangement a = random_arrangement(rng, n, 2 + trial % 4);
      RatMatrix g(n, n);
      do {
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) g(i, j) = entry(rng);
      } while (rank_of(g) < n);
      const Arrangement b = change_coordinates(a, g);
      for (unsigned e = 0; e <= 3; ++e) CHECK(logderiv_basis(a, e).size() == logderiv_basis(b, e).size());
    }
  }
}
