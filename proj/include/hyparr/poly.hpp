#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyparr/rational.hpp"

namespace hyparr {

using Monomial = std::vector<unsigned>;

unsigned total_degree(const Monomial& m);

/// Graded lexicographic order, largest monomial first.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// All exponent vectors of total degree `degree` in `nvars` variables, grlex-descending.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

/// Sparse multivariate polynomial over Q. Zero coefficients are never stored.
class SparsePoly {
 public:
  using Terms = std::map<Monomial, Rational, GrlexGreater>;

  SparsePoly() = default;
  explicit SparsePoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  /// Variable names "prefix1".."prefixN" ("prefix" alone when n == 1).
  static std::vector<std::string> indexed_names(const std::string& prefix, std::size_t n);
  static SparsePoly constant(std::vector<std::string> vars, const Rational& c);
  static SparsePoly variable(std::vector<std::string> vars, std::size_t i);
  static SparsePoly monomial(std::vector<std::string> vars, Monomial m, const Rational& c = 1);
  /// Dense univariate polynomial from coefficients in ascending degree.
  static SparsePoly univariate(const std::string& var, const std::vector<Rational>& ascending);

  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int total_degree() const;
  unsigned degree_in(std::size_t var) const;
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  SparsePoly operator-() const;
  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const Rational& c);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(SparsePoly a, const Rational& c) { return a *= c; }
  friend SparsePoly operator*(const Rational& c, SparsePoly a) { return a *= c; }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

  SparsePoly pow(unsigned e) const;
  Rational evaluate(const RatVector& point) const;
  /// Replaces variable i by images[i]; all images share one variable tuple.
  SparsePoly compose(const std::vector<SparsePoly>& images) const;

  /// Univariate only: quotient by (t - root), or nullopt when not divisible.
  std::optional<SparsePoly> divide_by_linear_root(const Rational& root) const;
  /// Univariate only: coefficients in ascending degree.
  std::vector<Rational> ascending_coefficients() const;

  std::string to_string() const;

 private:
  std::vector<std::string> vars_;
  Terms terms_;
};

}  // namespace hyparr
