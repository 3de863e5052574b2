#include "hyparr/lattice.hpp"

#include <algorithm>
#include <map>

namespace hyparr {

Lattice::Lattice(Arrangement a) : arr_(std::move(a)) {
  std::map<RatMatrix, std::size_t> by_key;
  edges_.push_back(make_edge(arr_, {}));
  by_key.emplace(edges_[0].key, 0);
  // Rank-increasing BFS: every edge of rank k+1 is some rank-k edge cut by a hyperplane.
  std::size_t begin = 0;
  while (begin < edges_.size()) {
    const std::size_t end = edges_.size();
    for (std::size_t e = begin; e < end; ++e) {
      for (std::size_t h = 0; h < arr_.size(); ++h) {
        if (edges_[e].mask >> h & 1u) continue;
        RatMatrix stacked = edges_[e].key;
        stacked.append_row(arr_.hyperplane(h).normal);
        RatMatrix key = row_space_basis(stacked);
        if (by_key.contains(key)) continue;
        std::vector<std::size_t> gens = edges_[e].J;
        gens.push_back(h);
        by_key.emplace(std::move(key), edges_.size());
        edges_.push_back(make_edge(arr_, gens));
      }
    }
    begin = end;
  }
  std::stable_sort(edges_.begin(), edges_.end(), [](const Edge& x, const Edge& y) {
    if (x.rank != y.rank) return x.rank < y.rank;
    return x.J < y.J;
  });

  const std::size_t n = edges_.size();
  mu_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    mu_[i * n + i] = 1;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (edges_[j].rank == edges_[i].rank || !leq(i, j)) continue;
      long acc = 0;
      for (std::size_t u = i; u < j; ++u) {
        if (edges_[u].rank >= edges_[j].rank) break;
        if (leq(i, u) && leq(u, j)) acc += mu_[i * n + u];
      }
      mu_[i * n + j] = -acc;
    }
  }
}

std::optional<std::size_t> Lattice::find(std::uint64_t mask) const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].mask == mask) return i;
  return std::nullopt;
}

std::vector<std::size_t> Lattice::rank_counts() const {
  std::vector<std::size_t> counts(edges_.back().rank + 1, 0);
  for (const auto& e : edges_) ++counts[e.rank];
  return counts;
}

SparsePoly Lattice::interval_char_poly(std::size_t i, std::size_t j) const {
  SparsePoly p({"t"});
  for (std::size_t u = 0; u < edges_.size(); ++u) {
    if (!leq(i, u) || !leq(u, j)) continue;
    p.add_term({static_cast<unsigned>(edges_[j].rank - edges_[u].rank)}, Rational(mobius(i, u)));
  }
  return p;
}

SparsePoly Lattice::restriction_char_poly(std::size_t i) const {
  SparsePoly p({"t"});
  for (std::size_t u = 0; u < edges_.size(); ++u) {
    if (!leq(i, u)) continue;
    p.add_term({static_cast<unsigned>(arr_.dim() - edges_[u].rank)}, Rational(mobius(i, u)));
  }
  return p;
}

long beta_at_one(const SparsePoly& p) {
  const auto q = p.divide_by_linear_root(1);
  if (!q) throw Error("characteristic polynomial is not divisible by (t - 1)");
  const Rational v = q->evaluate({Rational(1)});
  return v.get_num().get_si();
}

long Lattice::proj_complement_euler(std::size_t i) const {
  if (edge(i).rank == 0) throw Error("projective complement needs an edge of rank >= 1");
  return beta_at_one(char_poly(i));
}

bool Lattice::is_dense(std::size_t i) const { return edge(i).rank >= 1 && proj_complement_euler(i) != 0; }

std::vector<std::size_t> Lattice::dense_edges() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < edges_.size(); ++i)
    if (is_dense(i)) out.push_back(i);
  return out;
}

Rational lct(const Lattice& l) {
  if (!l.arrangement().is_reduced()) throw Error("lct: arrangement is not reduced");
  std::optional<Rational> best;
  for (auto i : l.dense_edges()) {
    const Edge& e = l.edge(i);
    Rational v(static_cast<long>(e.rank), static_cast<long>(e.J.size()));
    v.canonicalize();
    if (!best || v < *best) best = v;
  }
  if (!best) throw Error("lct: arrangement has no hyperplanes");
  return *best;
}

}  // namespace hyparr
