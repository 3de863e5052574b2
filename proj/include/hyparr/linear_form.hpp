#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyparr/poly.hpp"
#include "hyparr/rational.hpp"

namespace hyparr {

/// Integer affine form c_1 s_1 + ... + c_r s_r + c_0 in the Bernstein-Sato
/// variables. Always primitive, with its first nonzero entry (coefficients
/// before the constant) positive.
class LinearFormInS {
 public:
  /// Normalizes; throws Error on the all-zero form.
  LinearFormInS(std::vector<Integer> coeffs, Integer constant);

  /// Normalizes rational data: returns (form, scale) with input == scale * form.
  static std::pair<LinearFormInS, Rational> from_rational(const RatVector& coeffs, const Rational& constant);

  /// sum_{j in support} s_j + constant.
  static LinearFormInS indicator(std::size_t nvars, const std::vector<std::size_t>& support, long constant);

  std::size_t nvars() const { return coeffs_.size(); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& constant() const { return constant_; }
  Integer coefficient_sum() const;

  SparsePoly to_poly(const std::vector<std::string>& vars) const;
  std::string to_string(const std::vector<std::string>& vars) const;

  friend bool operator==(const LinearFormInS&, const LinearFormInS&) = default;
  friend bool operator<(const LinearFormInS& a, const LinearFormInS& b);

 private:
  std::vector<Integer> coeffs_;
  Integer constant_;
};

/// Quotient p / L when p vanishes identically on the hyperplane L = 0,
/// nullopt otherwise. Vanishing is decided by substituting a parametrization
/// of the hyperplane; the quotient comes from division in the eliminated
/// variable.
std::optional<SparsePoly> divides_linear(const SparsePoly& p, const LinearFormInS& form);

}  // namespace hyparr
