#pragma once

#include <cstddef>
#include <vector>

#include "hyparr/lattice.hpp"
#include "hyparr/linear_form.hpp"

namespace hyparr {

/// Multiset of linear factors; repetitions are meaningful.
struct SymbolicProduct {
  std::vector<LinearFormInS> factors;  ///< sorted
};

struct CCComponent {
  std::size_t edge = 0;  ///< index into the lattice
  long shift = 0;        ///< l in sum_{j in J(W,f)} s_j + l = 0
  long multiplicity = 0;
};

/// Sorted ascending, no duplicates.
using RootSet = std::vector<Rational>;

/// {-(rank W + j) / |J(W)| : j = 0 .. 2(|J(W)| - rank W)}.
/// Throws Error if W is not dense or the arrangement is not reduced.
RootSet rw_set(const Lattice& l, std::size_t w);

/// Union of rw_set over the dense edges; equals the b-function roots of f_D
/// when the arrangement is free.
RootSet free_roots(const Lattice& l);

/// prod over dense W, j = 0 .. 2(|J(W)| - rank W) of (sum_{i in J(W)} s_i + rank W + j).
/// Requires a reduced arrangement with a complete factorization.
SymbolicProduct maisonobe_generator(const Lattice& l);

/// For each dense W the forms sum_{j in J(W,f)} s_j + rank W + k,
/// k = 0 .. |J(W,f)| - 1, as a sorted set. Requires a complete factorization
/// (repeated linear factors allowed).
std::vector<LinearFormInS> lower_bound_components(const Lattice& l);

/// One component per dense edge and shift in [first, last], with multiplicity
/// (-1)^(rank W - 1) times the projective-complement Euler characteristic.
std::vector<CCComponent> cc_components(const Lattice& l, long first, long last);

enum class Containment {
  Equality,  ///< the diagonal preimage of the one-variable locus equals the multivariable locus
  Inclusion  ///< only Z(B_f) contained in the specialized set is known
};

struct DiagonalSpecialization {
  SymbolicProduct product;  ///< one-variable forms, in input order (dropped forms omitted)
  RootSet roots;
  Containment semantics = Containment::Inclusion;
};

/// s_j -> s for every j. Forms with zero coefficient sum and nonzero constant
/// have empty locus and drop out; a form that vanishes identically throws Error.
DiagonalSpecialization specialize_diagonal(const std::vector<LinearFormInS>& forms, Containment semantics);

/// s_c -> s_{target[c]}: the same as specialize_diagonal when all targets are 0.
/// Returns the set of specialized forms; forms collapsing to nonzero constants drop.
std::vector<LinearFormInS> specialize_forms(const std::vector<LinearFormInS>& forms,
                                            const std::vector<std::size_t>& target, std::size_t new_nvars);

std::vector<std::string> s_variables(std::size_t r);

}  // namespace hyparr
