#include "hyparr/bsideal.hpp"

#include <algorithm>
#include <set>

namespace hyparr {

namespace {

void require_reduced(const Lattice& l, const char* what) {
  if (!l.arrangement().is_reduced())
    throw Error(std::string(what) + ": arrangement is not reduced (reduce it to f_D first)");
}

void require_complete(const Lattice& l, const char* what) {
  if (!l.arrangement().has_complete_factorization())
    throw Error(std::string(what) + ": factorization is not complete");
}

RootSet to_sorted(std::set<Rational> s) { return {s.begin(), s.end()}; }

}  // namespace

std::vector<std::string> s_variables(std::size_t r) { return SparsePoly::indexed_names("s", r); }

RootSet rw_set(const Lattice& l, std::size_t w) {
  require_reduced(l, "rw_set");
  if (!l.is_dense(w)) throw Error("rw_set: edge is not dense");
  const Edge& e = l.edge(w);
  const long rank = static_cast<long>(e.rank);
  const long size = static_cast<long>(e.J.size());
  std::set<Rational> out;
  for (long j = 0; j <= 2 * (size - rank); ++j) {
    Rational q(-(rank + j), size);
    q.canonicalize();
    out.insert(q);
  }
  return to_sorted(std::move(out));
}

RootSet free_roots(const Lattice& l) {
  require_reduced(l, "free_roots");
  std::set<Rational> out;
  for (auto w : l.dense_edges())
    for (const auto& q : rw_set(l, w)) out.insert(q);
  return to_sorted(std::move(out));
}

SymbolicProduct maisonobe_generator(const Lattice& l) {
  require_reduced(l, "maisonobe_generator");
  require_complete(l, "maisonobe_generator");
  const std::size_t r = l.arrangement().factors();
  SymbolicProduct out;
  for (auto w : l.dense_edges()) {
    const Edge& e = l.edge(w);
    const long rank = static_cast<long>(e.rank);
    const long size = static_cast<long>(e.J.size());
    for (long j = 0; j <= 2 * (size - rank); ++j)
      out.factors.push_back(LinearFormInS::indicator(r, e.factor_set, rank + j));
  }
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

std::vector<LinearFormInS> lower_bound_components(const Lattice& l) {
  require_complete(l, "lower_bound_components");
  const std::size_t r = l.arrangement().factors();
  std::set<LinearFormInS> out;
  for (auto w : l.dense_edges()) {
    const Edge& e = l.edge(w);
    const long rank = static_cast<long>(e.rank);
    const long count = static_cast<long>(e.factor_set.size());
    for (long k = 0; k < count; ++k) out.insert(LinearFormInS::indicator(r, e.factor_set, rank + k));
  }
  return {out.begin(), out.end()};
}

std::vector<CCComponent> cc_components(const Lattice& l, long first, long last) {
  std::vector<CCComponent> out;
  for (auto w : l.dense_edges()) {
    const long sign = (l.edge(w).rank - 1) % 2 == 0 ? 1 : -1;
    const long mult = sign * l.proj_complement_euler(w);
    if (mult <= 0) throw Error("cc_components: non-positive multiplicity on a dense edge");
    for (long shift = first; shift <= last; ++shift) out.push_back({w, shift, mult});
  }
  return out;
}

std::vector<LinearFormInS> specialize_forms(const std::vector<LinearFormInS>& forms,
                                            const std::vector<std::size_t>& target, std::size_t new_nvars) {
  std::set<LinearFormInS> out;
  for (const auto& f : forms) {
    if (target.size() != f.nvars()) throw Error("specialize: one target per variable required");
    std::vector<Integer> c(new_nvars, 0);
    for (std::size_t j = 0; j < f.nvars(); ++j) c.at(target[j]) += f.coeffs()[j];
    const bool constant_only = std::all_of(c.begin(), c.end(), [](const Integer& z) { return z == 0; });
    if (constant_only) {
      if (f.constant() == 0) throw Error("specialize: form vanishes identically");
      continue;
    }
    out.insert(LinearFormInS(std::move(c), f.constant()));
  }
  return {out.begin(), out.end()};
}

DiagonalSpecialization specialize_diagonal(const std::vector<LinearFormInS>& forms, Containment semantics) {
  DiagonalSpecialization out;
  out.semantics = semantics;
  std::set<Rational> roots;
  for (const auto& f : forms) {
    const Integer sum = f.coefficient_sum();
    if (sum == 0) {
      if (f.constant() == 0) throw Error("specialize_diagonal: form vanishes identically");
      continue;
    }
    LinearFormInS g({sum}, f.constant());
    Rational root(-g.constant(), g.coeffs()[0]);
    root.canonicalize();
    roots.insert(root);
    out.product.factors.push_back(std::move(g));
  }
  out.roots.assign(roots.begin(), roots.end());
  return out;
}

}  // namespace hyparr
