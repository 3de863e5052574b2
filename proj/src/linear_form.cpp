#include "hyparr/linear_form.hpp"

#include <algorithm>

namespace hyparr {

LinearFormInS::LinearFormInS(std::vector<Integer> coeffs, Integer constant)
    : coeffs_(std::move(coeffs)), constant_(std::move(constant)) {
  std::vector<Integer> all = coeffs_;
  all.push_back(constant_);
  Integer g = gcd_of(all);
  if (g == 0) throw Error("linear form: all coefficients and the constant are zero");
  const auto first = std::find_if(all.begin(), all.end(), [](const Integer& z) { return z != 0; });
  if (*first < 0) g = -g;
  for (auto& c : coeffs_) c /= g;
  constant_ /= g;
}

std::pair<LinearFormInS, Rational> LinearFormInS::from_rational(const RatVector& coeffs, const Rational& constant) {
  RatVector all = coeffs;
  all.push_back(constant);
  std::vector<Integer> prim = primitive_integer_vector(all);
  Integer c0 = prim.back();
  prim.pop_back();
  LinearFormInS form(std::move(prim), std::move(c0));
  // Recover the scale from any nonzero entry.
  for (std::size_t i = 0; i < all.size(); ++i) {
    const Integer& fi = i < coeffs.size() ? form.coeffs_[i] : form.constant_;
    if (fi != 0) return {form, Rational(all[i] / Rational(fi))};
  }
  throw Error("linear form: all coefficients and the constant are zero");
}

LinearFormInS LinearFormInS::indicator(std::size_t nvars, const std::vector<std::size_t>& support, long constant) {
  std::vector<Integer> c(nvars, 0);
  for (auto j : support) c.at(j) += 1;
  return LinearFormInS(std::move(c), Integer(constant));
}

Integer LinearFormInS::coefficient_sum() const {
  Integer s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

bool operator<(const LinearFormInS& a, const LinearFormInS& b) {
  if (a.coeffs_ != b.coeffs_) return a.coeffs_ < b.coeffs_;
  return a.constant_ < b.constant_;
}

SparsePoly LinearFormInS::to_poly(const std::vector<std::string>& vars) const {
  if (vars.size() != nvars()) throw Error("linear form: variable count mismatch");
  SparsePoly p(vars);
  for (std::size_t j = 0; j < nvars(); ++j) {
    Monomial m(nvars(), 0);
    m[j] = 1;
    p.add_term(m, Rational(coeffs_[j]));
  }
  p.add_term(Monomial(nvars(), 0), Rational(constant_));
  return p;
}

std::string LinearFormInS::to_string(const std::vector<std::string>& vars) const {
  return to_poly(vars).to_string();
}

std::optional<SparsePoly> divides_linear(const SparsePoly& p, const LinearFormInS& form) {
  const std::size_t n = p.nvars();
  if (form.nvars() != n) throw Error("divides_linear: variable count mismatch");
  const auto it = std::find_if(form.coeffs().begin(), form.coeffs().end(), [](const Integer& c) { return c != 0; });
  if (it == form.coeffs().end()) {
    // Constant nonzero form: divides everything.
    return p * Rational(1 / Rational(form.constant()));
  }
  const std::size_t k = static_cast<std::size_t>(it - form.coeffs().begin());
  const Rational ck(form.coeffs()[k]);

  // s_k = -(c_0 + sum_{j != k} c_j s_j) / c_k
  SparsePoly rest(p.vars());  // L - c_k s_k
  rest.add_term(Monomial(n, 0), Rational(form.constant()));
  for (std::size_t j = 0; j < n; ++j) {
    if (j == k) continue;
    Monomial m(n, 0);
    m[j] = 1;
    rest.add_term(m, Rational(form.coeffs()[j]));
  }
  std::vector<SparsePoly> images;
  for (std::size_t j = 0; j < n; ++j) images.push_back(SparsePoly::variable(p.vars(), j));
  images[k] = rest * Rational(-1 / ck);
  if (!p.compose(images).is_zero()) return std::nullopt;

  // Division in s_k: p = sum_d P_d s_k^d with P_d free of s_k.
  const unsigned top = p.degree_in(k);
  std::vector<SparsePoly> slices(top + 1, SparsePoly(p.vars()));
  for (const auto& [m, c] : p.terms()) {
    Monomial stripped = m;
    stripped[k] = 0;
    slices[m[k]].add_term(stripped, c);
  }
  SparsePoly quotient(p.vars());
  for (unsigned d = top; d >= 1; --d) {
    SparsePoly qd = slices[d] * Rational(1 / ck);
    slices[d - 1] -= qd * rest;
    Monomial shift(n, 0);
    shift[k] = d - 1;
    quotient += qd * SparsePoly::monomial(p.vars(), shift);
  }
  if (!slices[0].is_zero()) throw Error("divides_linear: substitution and division disagree");
  return quotient;
}

}  // namespace hyparr
