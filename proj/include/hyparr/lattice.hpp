#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hyparr/arrangement.hpp"
#include "hyparr/poly.hpp"

namespace hyparr {

/// The intersection lattice L(A) with its full Moebius function.
///
/// Edges are sorted by (rank, J); index 0 is always the ambient space and the
/// last edge is the center of the arrangement (the origin when essential).
/// W_i <= W_j means W_i contains W_j, i.e. J(W_i) is a subset of J(W_j).
class Lattice {
 public:
  explicit Lattice(Arrangement a);

  const Arrangement& arrangement() const { return arr_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }
  std::size_t ambient() const { return 0; }
  std::size_t center() const { return edges_.size() - 1; }
  std::optional<std::size_t> find(std::uint64_t mask) const;
  std::optional<std::size_t> find(const Edge& e) const { return find(e.mask); }
  /// Number of edges of each rank 0..rank(A).
  std::vector<std::size_t> rank_counts() const;

  bool leq(std::size_t i, std::size_t j) const { return (edges_[i].mask & ~edges_[j].mask) == 0; }
  /// mu(ambient, W_i).
  long mobius(std::size_t i) const { return mobius(ambient(), i); }
  /// mu(W_i, W_j); zero unless W_i <= W_j.
  long mobius(std::size_t i, std::size_t j) const { return mu_[i * edges_.size() + j]; }

  /// chi of the interval [W_i, W_j]: sum mu(W_i, U) t^(rank W_j - rank U).
  /// This is the characteristic polynomial of the restriction of D^{W_j} to W_i / W_j.
  SparsePoly interval_char_poly(std::size_t i, std::size_t j) const;
  /// Characteristic polynomial of D^W (localization at W, essentialized).
  SparsePoly char_poly(std::size_t i) const { return interval_char_poly(ambient(), i); }
  /// Characteristic polynomial of the restriction A^W, in dim W variables' degree.
  SparsePoly restriction_char_poly(std::size_t i) const;
  /// chi_A(t) = sum mu(W) t^(dim W).
  SparsePoly global_char_poly() const { return restriction_char_poly(ambient()); }

  /// chi(P(X/W) minus the projectivized D^W) = q(1) where chi_{D^W} = (t - 1) q.
  long proj_complement_euler(std::size_t i) const;
  /// Dense iff rank >= 1 and the projective complement has nonzero Euler characteristic.
  bool is_dense(std::size_t i) const;
  std::vector<std::size_t> dense_edges() const;

 private:
  Arrangement arr_;
  std::vector<Edge> edges_;
  std::vector<long> mu_;
};

/// q(1) for a univariate polynomial p = (t - 1) q. Throws Error when (t - 1)
/// does not divide p.
long beta_at_one(const SparsePoly& p);

/// min over dense W of rank(W) / |J(W)|. Throws Error on non-reduced input.
Rational lct(const Lattice& l);

}  // namespace hyparr
