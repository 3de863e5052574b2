#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyparr/arrangement.hpp"
#include "hyparr/lattice.hpp"
#include "hyparr/linear_form.hpp"
#include "hyparr/poly.hpp"

namespace hyparr {

/// numerator / prod L^order over Q(s_1..s_r), kept reduced: no denominator
/// form divides the numerator, so equal functions have equal representations.
class RationalFunctionInS {
 public:
  using Denominator = std::map<LinearFormInS, int>;

  explicit RationalFunctionInS(std::size_t nvars);  ///< zero
  static RationalFunctionInS constant(std::size_t nvars, const Rational& c);
  static RationalFunctionInS inverse(const LinearFormInS& form);
  /// numerator / prod forms^orders, reduced.
  static RationalFunctionInS make(SparsePoly numerator, Denominator denominator);

  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const SparsePoly& numerator() const { return num_; }
  const Denominator& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunctionInS operator+(const RationalFunctionInS& a, const RationalFunctionInS& b);
  friend RationalFunctionInS operator*(const RationalFunctionInS& a, const RationalFunctionInS& b);
  friend RationalFunctionInS operator*(const RationalFunctionInS& a, const Rational& c);
  friend bool operator==(const RationalFunctionInS& a, const RationalFunctionInS& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// s_c -> s_{target[c]} in a space of new_nvars variables.
  RationalFunctionInS specialize(const std::vector<std::size_t>& target, std::size_t new_nvars) const;
  /// Throws Error at a pole.
  Rational evaluate(const RatVector& point) const;
  std::string to_string() const;

 private:
  void reduce();

  std::vector<std::string> vars_;
  SparsePoly num_;
  Denominator den_;
};

struct DivisorDatum {
  std::size_t edge = 0;
  std::vector<int> a;  ///< order of vanishing of each factor along the exceptional divisor
  int k = 0;           ///< discrepancy, rank(W) - 1
};

/// One datum per dense edge of the canonical resolution (blowups along dense edges).
std::vector<DivisorDatum> divisor_data(const Lattice& l);

/// Zeta functions of one arrangement, memoized per edge.
///
/// fiber(W) is the contribution of the resolution strata lying over a point
/// of W that is in no smaller edge, computed from the cone D^W:
///   rank 1:        1 / (a_W.s + 1)
///   D^W reducible: product of fiber over the irreducible blocks of D_W
///   otherwise:     (1 / (a_W.s + rank W)) * sum_{V < W} chi(P(V/W)°) fiber(V)
/// where V runs over the edges strictly containing W (the ambient space
/// contributes chi of the projective complement times 1). The exceptional
/// divisor over W is a projective space stratified by the projectivized edges
/// of D^W, and transversally to the stratum P(V/W)° the resolution looks like
/// the resolution of the cone D^V. The orders a_W and the discrepancy
/// rank W - 1 match divisor_data since later centers never lie inside earlier
/// exceptional divisors.
class ZetaEngine {
 public:
  explicit ZetaEngine(const Lattice& l);

  const Lattice& lattice() const { return l_; }
  const RationalFunctionInS& fiber(std::size_t w);
  /// sum over all edges W of chi(W°) fiber(W), chi(W°) = chi_{A^W}(1).
  RationalFunctionInS global_stratified();
  /// fiber at the center; equal to global_stratified for central arrangements.
  RationalFunctionInS global_collapsed() { return fiber(l_.center()); }

 private:
  RationalFunctionInS compute(std::size_t w);

  const Lattice& l_;
  std::vector<std::optional<RationalFunctionInS>> memo_;
};

/// Requires at least one hyperplane. Non-essential input is treated through
/// its essentialization.
RationalFunctionInS zeta_fiber(const Arrangement& a);
RationalFunctionInS zeta_global(const Arrangement& a);

/// Denominator factors of the reduced form with their orders.
std::vector<std::pair<LinearFormInS, int>> pole_locus(const RationalFunctionInS& z);

/// s_c -> s_{target[c]}, re-reduced.
RationalFunctionInS specialize_zeta(const RationalFunctionInS& z, const std::vector<std::size_t>& target,
                                    std::size_t new_nvars);
/// s_j -> s for all j.
RationalFunctionInS specialize_diagonal(const RationalFunctionInS& z);

struct PoleCheck {
  LinearFormInS pole;
  int order = 0;
  bool matched = false;
};

struct SmcReport {
  std::vector<PoleCheck> poles;
  /// Zero-locus components the poles are checked against (specialized to the
  /// input factorization when it is not complete).
  std::vector<LinearFormInS> components;
  /// Candidate forms a_W.s + rank W that cancelled out of the zeta function.
  std::vector<LinearFormInS> cancelled_candidates;
  bool complete_input = true;
  bool pass = true;
};

/// Checks every pole of zeta_global against the lower-bound components of
/// the complete factorization. A failure indicates an implementation bug.
SmcReport verify_smc(const Arrangement& a);

}  // namespace hyparr
