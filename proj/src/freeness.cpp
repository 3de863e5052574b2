#include "hyparr/freeness.hpp"

#include <algorithm>
#include <map>

namespace hyparr {

namespace {

SparsePoly linear_poly(const std::vector<std::string>& vars, const RatVector& alpha) {
  SparsePoly p(vars);
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    Monomial m(alpha.size(), 0);
    m[i] = 1;
    p.add_term(m, alpha[i]);
  }
  return p;
}

/// Images of x_1..x_n under the parametrization of alpha = 0 that eliminates
/// the first variable with a nonzero coefficient.
std::vector<SparsePoly> hyperplane_parametrization(const std::vector<std::string>& vars, const RatVector& alpha) {
  const std::size_t n = alpha.size();
  const auto k = static_cast<std::size_t>(
      std::find_if(alpha.begin(), alpha.end(), [](const Rational& c) { return c != 0; }) - alpha.begin());
  std::vector<SparsePoly> images;
  for (std::size_t j = 0; j < n; ++j) images.push_back(SparsePoly::variable(vars, j));
  SparsePoly sub(vars);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == k) continue;
    Monomial m(n, 0);
    m[j] = 1;
    sub.add_term(m, -alpha[j] / alpha[k]);
  }
  images[k] = sub;
  return images;
}

RatVector to_vector(const Derivation& d, const std::vector<Monomial>& monos) {
  RatVector v;
  v.reserve(d.coeffs.size() * monos.size());
  for (const auto& c : d.coeffs)
    for (const auto& m : monos) v.push_back(c.coefficient(m));
  return v;
}

Derivation from_vector(const RatVector& v, std::size_t n, unsigned e, const std::vector<Monomial>& monos) {
  Derivation d;
  d.degree = e;
  const auto vars = x_variables(n);
  for (std::size_t i = 0; i < n; ++i) {
    SparsePoly p(vars);
    for (std::size_t k = 0; k < monos.size(); ++k) p.add_term(monos[k], v[i * monos.size() + k]);
    d.coeffs.push_back(std::move(p));
  }
  return d;
}

SparsePoly determinant(std::vector<std::vector<SparsePoly>> m, const std::vector<std::string>& vars) {
  const std::size_t n = m.size();
  if (n == 0) return SparsePoly::constant(vars, 1);
  if (n == 1) return m[0][0];
  SparsePoly det(vars);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<SparsePoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<SparsePoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    SparsePoly term = m[0][c] * determinant(std::move(minor), vars);
    if (c % 2 == 0) det += term;
    else det -= term;
  }
  return det;
}

}  // namespace

std::vector<std::string> x_variables(std::size_t n) { return SparsePoly::indexed_names("x", n); }

SparsePoly Derivation::apply(const RatVector& alpha) const {
  if (alpha.size() != coeffs.size()) throw Error("derivation: dimension mismatch");
  SparsePoly out(coeffs.empty() ? std::vector<std::string>{} : coeffs.front().vars());
  for (std::size_t i = 0; i < alpha.size(); ++i) out += coeffs[i] * alpha[i];
  return out;
}

Derivation Derivation::euler(std::size_t n) {
  Derivation d;
  d.degree = 1;
  for (std::size_t i = 0; i < n; ++i) d.coeffs.push_back(SparsePoly::variable(x_variables(n), i));
  return d;
}

bool is_logarithmic(const Arrangement& a, const Derivation& d) {
  if (d.coeffs.size() != a.dim()) return false;
  const auto vars = x_variables(a.dim());
  for (const auto& c : d.coeffs)
    if (!c.is_zero() && (c.nvars() != a.dim() || c.total_degree() != static_cast<int>(d.degree))) return false;
  for (const auto& h : a.hyperplanes()) {
    const SparsePoly image = d.apply(h.normal);
    if (!image.compose(hyperplane_parametrization(vars, h.normal)).is_zero()) return false;
  }
  return true;
}

Derivation Derivation::make(const Arrangement& a, unsigned degree, std::vector<SparsePoly> coeffs) {
  Derivation d{degree, std::move(coeffs)};
  if (!is_logarithmic(a, d)) throw Error("derivation is not logarithmic along the arrangement");
  return d;
}

std::vector<Derivation> logderiv_basis(const Arrangement& a, unsigned e) {
  const std::size_t n = a.dim();
  const auto vars = x_variables(n);
  const std::vector<Monomial> monos = monomials_of_degree(n, e);
  const std::size_t unknowns = n * monos.size();

  // Each hyperplane contributes the coefficients of theta(alpha_H) restricted
  // to H as linear conditions on the unknown coefficients.
  std::vector<RatVector> rows;
  for (const auto& h : a.hyperplanes()) {
    const auto images = hyperplane_parametrization(vars, h.normal);
    std::map<Monomial, std::size_t, GrlexGreater> row_of;
    std::vector<RatVector> block;
    for (std::size_t k = 0; k < monos.size(); ++k) {
      const SparsePoly restricted = SparsePoly::monomial(vars, monos[k]).compose(images);
      for (const auto& [m, c] : restricted.terms()) {
        auto [it, inserted] = row_of.try_emplace(m, block.size());
        if (inserted) block.emplace_back(unknowns);
        for (std::size_t i = 0; i < n; ++i) {
          if (h.normal[i] == 0) continue;
          block[it->second][i * monos.size() + k] += h.normal[i] * c;
        }
      }
    }
    for (auto& r : block) rows.push_back(std::move(r));
  }
  const RatMatrix system = RatMatrix::from_rows(rows, unknowns);
  std::vector<Derivation> out;
  for (const auto& v : kernel_basis(system)) out.push_back(from_vector(v, n, e, monos));
  return out;
}

std::optional<std::vector<unsigned>> terao_exponents(const Lattice& l) {
  SparsePoly chi = l.global_char_poly();
  const std::size_t p = l.arrangement().size();
  std::vector<unsigned> exps;
  for (unsigned e = 0; e <= p; ++e) {
    while (true) {
      auto q = chi.divide_by_linear_root(Rational(e));
      if (!q) break;
      exps.push_back(e);
      chi = std::move(*q);
      if (chi.total_degree() == 0) break;
    }
  }
  if (chi.total_degree() != 0) return std::nullopt;
  unsigned sum = 0;
  for (auto e : exps) sum += e;
  if (sum != p) throw Error("terao_exponents: exponents do not sum to the number of hyperplanes");
  return exps;
}

SparsePoly defining_polynomial(const Arrangement& a) {
  const auto vars = x_variables(a.dim());
  SparsePoly q = SparsePoly::constant(vars, 1);
  for (const auto& h : a.hyperplanes()) q = q * linear_poly(vars, h.normal);
  return q;
}

SparsePoly saito_determinant(const std::vector<Derivation>& cert) {
  const std::size_t n = cert.size();
  const auto vars = x_variables(n);
  std::vector<std::vector<SparsePoly>> m(n, std::vector<SparsePoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = cert[j].coeffs.at(i);
  return determinant(std::move(m), vars);
}

namespace {

std::optional<Rational> scale_against(const SparsePoly& det, const SparsePoly& q) {
  if (det.is_zero() || q.is_zero()) return std::nullopt;
  const auto& [lead_m, lead_c] = *q.terms().begin();
  const Rational c = det.coefficient(lead_m) / lead_c;
  if (c == 0 || !(det == q * c)) return std::nullopt;
  return c;
}

}  // namespace

bool verify_certificate(const Arrangement& a, const std::vector<Derivation>& cert) {
  if (cert.size() != a.dim()) return false;
  for (const auto& d : cert)
    if (!is_logarithmic(a, d)) return false;
  return scale_against(saito_determinant(cert), defining_polynomial(a)).has_value();
}

std::string verdict_name(const FreenessResult& r) {
  if (std::holds_alternative<Free>(r)) return "free";
  if (std::holds_alternative<NotFree>(r)) return "not-free";
  return "inconclusive";
}

FreenessResult saito_search(const Arrangement& a) { return saito_search(a, static_cast<unsigned>(a.size())); }

FreenessResult saito_search(const Arrangement& a, unsigned max_degree) {
  if (!a.is_reduced()) throw Error("saito_search: arrangement is not reduced");
  const Lattice lattice(a);
  const auto exps = terao_exponents(lattice);
  if (!exps) return NotFree{lattice.global_char_poly()};
  if (!exps->empty() && exps->back() > max_degree)
    return Inconclusive{max_degree, "largest exponent " + std::to_string(exps->back()) + " exceeds the degree bound"};

  const std::size_t n = a.dim();
  const auto vars = x_variables(n);
  std::vector<Derivation> chosen;
  for (std::size_t idx = 0; idx < exps->size();) {
    const unsigned e = (*exps)[idx];
    std::size_t need = 0;
    while (idx + need < exps->size() && (*exps)[idx + need] == e) ++need;
    idx += need;

    const std::vector<Monomial> monos = monomials_of_degree(n, e);
    RatMatrix span(0, n * monos.size());
    for (const auto& d : chosen) {
      for (const auto& m : monomials_of_degree(n, e - d.degree)) {
        Derivation shifted{e, {}};
        const SparsePoly mono = SparsePoly::monomial(vars, m);
        for (const auto& c : d.coeffs) shifted.coeffs.push_back(c * mono);
        span.append_row(to_vector(shifted, monos));
      }
    }
    span = row_space_basis(span);
    std::size_t picked = 0;
    for (auto& cand : logderiv_basis(a, e)) {
      if (picked == need) break;
      RatMatrix trial = span;
      trial.append_row(to_vector(cand, monos));
      if (rank_of(trial) == span.rows()) continue;
      span = row_space_basis(trial);
      chosen.push_back(std::move(cand));
      ++picked;
    }
    if (picked < need)
      return Inconclusive{max_degree, "no new logarithmic derivation of degree " + std::to_string(e)};
  }

  const SparsePoly det = saito_determinant(chosen);
  if (auto c = scale_against(det, defining_polynomial(a))) return Free{std::move(chosen), *c, *exps};
  return Inconclusive{max_degree, "selected derivations fail the Saito determinant test"};
}

}  // namespace hyparr
