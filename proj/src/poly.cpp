#include "hyparr/poly.hpp"

#include <algorithm>
#include <numeric>

namespace hyparr {

unsigned total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Monomial cur(nvars, 0);
  // Recursive fill: first variable gets the largest exponent first (grlex-descending).
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == nvars) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      cur[i] = e;
      self(self, i + 1, left - e);
    }
  };
  rec(rec, 0, degree);
  return out;
}

std::vector<std::string> SparsePoly::indexed_names(const std::string& prefix, std::size_t n) {
  if (n == 1) return {prefix};
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

SparsePoly SparsePoly::constant(std::vector<std::string> vars, const Rational& c) {
  SparsePoly p(std::move(vars));
  p.add_term(Monomial(p.nvars(), 0), c);
  return p;
}

SparsePoly SparsePoly::variable(std::vector<std::string> vars, std::size_t i) {
  Monomial m(vars.size(), 0);
  m.at(i) = 1;
  return monomial(std::move(vars), std::move(m));
}

SparsePoly SparsePoly::monomial(std::vector<std::string> vars, Monomial m, const Rational& c) {
  if (m.size() != vars.size()) throw Error("monomial arity does not match variable count");
  SparsePoly p(std::move(vars));
  p.add_term(m, c);
  return p;
}

SparsePoly SparsePoly::univariate(const std::string& var, const std::vector<Rational>& ascending) {
  SparsePoly p({var});
  for (std::size_t d = 0; d < ascending.size(); ++d) p.add_term({static_cast<unsigned>(d)}, ascending[d]);
  return p;
}

int SparsePoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(hyparr::total_degree(terms_.begin()->first));
}

unsigned SparsePoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

Rational SparsePoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePoly::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != nvars()) throw Error("monomial arity does not match variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  if (vars_.empty() && terms_.empty()) vars_ = o.vars_;
  if (o.nvars() != nvars()) throw Error("polynomial addition: variable count mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  if (vars_.empty() && terms_.empty()) vars_ = o.vars_;
  if (o.nvars() != nvars()) throw Error("polynomial subtraction: variable count mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  if (a.nvars() != b.nvars()) throw Error("polynomial product: variable count mismatch");
  SparsePoly out(a.vars_);
  Monomial m(a.nvars());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

SparsePoly SparsePoly::pow(unsigned e) const {
  SparsePoly result = constant(vars_, 1);
  SparsePoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

Rational SparsePoly::evaluate(const RatVector& point) const {
  if (point.size() != nvars()) throw Error("evaluate: point dimension mismatch");
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (unsigned k = 0; k < m[i]; ++k) term *= point[i];
    }
    acc += term;
  }
  return acc;
}

SparsePoly SparsePoly::compose(const std::vector<SparsePoly>& images) const {
  if (images.size() != nvars()) throw Error("compose: one image per variable required");
  std::vector<std::string> target = images.empty() ? vars_ : images.front().vars();
  SparsePoly out(target);
  // Powers are cached per variable; exponents are small in practice.
  std::vector<std::vector<SparsePoly>> powers(images.size());
  for (const auto& [m, c] : terms_) {
    SparsePoly term = constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(constant(target, 1));
      while (cache.size() <= m[i]) cache.push_back(cache.back() * images[i]);
      term = term * cache[m[i]];
    }
    out += term;
  }
  return out;
}

std::vector<Rational> SparsePoly::ascending_coefficients() const {
  if (nvars() != 1) throw Error("ascending_coefficients: univariate polynomial required");
  std::vector<Rational> out(terms_.empty() ? 0 : degree_in(0) + 1);
  for (const auto& [m, c] : terms_) out[m[0]] = c;
  return out;
}

std::optional<SparsePoly> SparsePoly::divide_by_linear_root(const Rational& root) const {
  if (nvars() != 1) throw Error("divide_by_linear_root: univariate polynomial required");
  const std::vector<Rational> a = ascending_coefficients();
  if (a.empty()) return SparsePoly(vars_);
  // Synthetic division, highest degree first.
  std::vector<Rational> q(a.size() - 1);
  Rational carry = 0;
  for (std::size_t d = a.size(); d-- > 1;) {
    carry = a[d] + carry * root;
    q[d - 1] = carry;
  }
  const Rational remainder = a[0] + carry * root;
  if (remainder != 0) return std::nullopt;
  return univariate(vars_[0], q);
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    const bool is_const = hyparr::total_degree(m) == 0;
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (is_const) {
      out += hyparr::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += hyparr::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

}  // namespace hyparr
