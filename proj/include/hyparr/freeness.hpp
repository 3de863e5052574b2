#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hyparr/arrangement.hpp"
#include "hyparr/lattice.hpp"
#include "hyparr/poly.hpp"

namespace hyparr {

/// Homogeneous polynomial vector field sum_i coeffs[i] d/dx_i of degree `degree`.
struct Derivation {
  unsigned degree = 0;
  std::vector<SparsePoly> coeffs;

  /// Throws Error unless theta(alpha_H) is divisible by alpha_H for every H.
  static Derivation make(const Arrangement& a, unsigned degree, std::vector<SparsePoly> coeffs);
  /// The Euler derivation sum x_i d/dx_i in n variables.
  static Derivation euler(std::size_t n);
  /// theta(alpha) for a linear form alpha.
  SparsePoly apply(const RatVector& alpha) const;
};

std::vector<std::string> x_variables(std::size_t n);

bool is_logarithmic(const Arrangement& a, const Derivation& d);

/// Basis of the degree-e logarithmic derivations, in kernel-basis order.
std::vector<Derivation> logderiv_basis(const Arrangement& a, unsigned e);

/// Roots e_1 <= ... <= e_n when chi_A(t) = prod (t - e_i) over Z_{>=0}.
std::optional<std::vector<unsigned>> terao_exponents(const Lattice& l);

/// Product of the (canonical) defining forms of the hyperplanes.
SparsePoly defining_polynomial(const Arrangement& a);
/// Determinant of the coefficient matrix (rows: variables, columns: derivations).
SparsePoly saito_determinant(const std::vector<Derivation>& cert);

struct Free {
  std::vector<Derivation> certificate;
  Rational scale;  ///< det = scale * prod alpha_H
  std::vector<unsigned> exponents;
};
struct NotFree {
  SparsePoly char_poly;  ///< does not split into (t - e_i) with e_i in Z_{>=0}
};
struct Inconclusive {
  unsigned max_degree = 0;
  std::string reason;
};
using FreenessResult = std::variant<Free, NotFree, Inconclusive>;

std::string verdict_name(const FreenessResult& r);

/// Sound Saito-criterion search. Degree by degree, picks logarithmic
/// derivations independent of the multiples of those already chosen, and
/// accepts when the determinant is a nonzero multiple of prod alpha_H.
/// Throws Error on non-reduced input.
FreenessResult saito_search(const Arrangement& a, unsigned max_degree);
/// Default bound: the number of hyperplanes.
FreenessResult saito_search(const Arrangement& a);

/// n logarithmic derivations whose determinant is c * prod alpha_H, c != 0.
bool verify_certificate(const Arrangement& a, const std::vector<Derivation>& cert);

}  // namespace hyparr
