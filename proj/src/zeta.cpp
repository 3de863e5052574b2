#include "hyparr/zeta.hpp"

#include <algorithm>
#include <set>

#include "hyparr/bsideal.hpp"

namespace hyparr {

RationalFunctionInS::RationalFunctionInS(std::size_t nvars) : vars_(s_variables(nvars)), num_(vars_) {}

RationalFunctionInS RationalFunctionInS::constant(std::size_t nvars, const Rational& c) {
  RationalFunctionInS z(nvars);
  z.num_ = SparsePoly::constant(z.vars_, c);
  return z;
}

RationalFunctionInS RationalFunctionInS::inverse(const LinearFormInS& form) {
  RationalFunctionInS z = constant(form.nvars(), 1);
  z.den_[form] = 1;
  z.reduce();
  return z;
}

RationalFunctionInS RationalFunctionInS::make(SparsePoly numerator, Denominator denominator) {
  RationalFunctionInS z(numerator.nvars());
  if (!numerator.is_zero()) z.num_ = std::move(numerator);
  for (auto& [f, ord] : denominator) {
    if (f.nvars() != z.nvars()) throw Error("rational function: variable count mismatch");
    if (ord < 0) throw Error("rational function: negative denominator order");
    if (ord > 0) z.den_[f] += ord;
  }
  z.reduce();
  return z;
}

void RationalFunctionInS::reduce() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    // A form with no variables is a nonzero constant: fold it into the numerator.
    const bool constant_form = std::all_of(it->first.coeffs().begin(), it->first.coeffs().end(),
                                           [](const Integer& c) { return c == 0; });
    if (constant_form) {
      for (int k = 0; k < it->second; ++k) num_ *= Rational(1 / Rational(it->first.constant()));
      it->second = 0;
    }
    while (it->second > 0) {
      auto q = divides_linear(num_, it->first);
      if (!q) break;
      num_ = std::move(*q);
      --it->second;
    }
    it = it->second == 0 ? den_.erase(it) : std::next(it);
  }
}

RationalFunctionInS operator+(const RationalFunctionInS& a, const RationalFunctionInS& b) {
  if (a.nvars() != b.nvars()) throw Error("rational function sum: variable count mismatch");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  RationalFunctionInS::Denominator den = a.den_;
  for (const auto& [f, ord] : b.den_) den[f] = std::max(den[f], ord);
  auto lift = [&](const RationalFunctionInS& x) {
    SparsePoly p = x.num_;
    for (const auto& [f, ord] : den) {
      const auto it = x.den_.find(f);
      const int have = it == x.den_.end() ? 0 : it->second;
      if (ord > have) p = p * f.to_poly(x.vars_).pow(static_cast<unsigned>(ord - have));
    }
    return p;
  };
  // Lift before handing `den` over: argument evaluation order is unspecified.
  SparsePoly num = lift(a) + lift(b);
  return RationalFunctionInS::make(std::move(num), std::move(den));
}

RationalFunctionInS operator*(const RationalFunctionInS& a, const RationalFunctionInS& b) {
  if (a.nvars() != b.nvars()) throw Error("rational function product: variable count mismatch");
  RationalFunctionInS::Denominator den = a.den_;
  for (const auto& [f, ord] : b.den_) den[f] += ord;
  return RationalFunctionInS::make(a.num_ * b.num_, std::move(den));
}

RationalFunctionInS operator*(const RationalFunctionInS& a, const Rational& c) {
  return RationalFunctionInS::make(a.num_ * c, a.den_);
}

RationalFunctionInS RationalFunctionInS::specialize(const std::vector<std::size_t>& target,
                                                    std::size_t new_nvars) const {
  if (target.size() != nvars()) throw Error("specialize: one target per variable required");
  const auto new_vars = s_variables(new_nvars);
  std::vector<SparsePoly> images;
  for (auto t : target) images.push_back(SparsePoly::variable(new_vars, t));
  SparsePoly num = nvars() == 0 ? SparsePoly::constant(new_vars, num_.coefficient({})) : num_.compose(images);
  Denominator den;
  for (const auto& [f, ord] : den_) {
    RatVector c(new_nvars, 0);
    for (std::size_t j = 0; j < nvars(); ++j) c[target[j]] += Rational(f.coeffs()[j]);
    const bool constant_form = std::all_of(c.begin(), c.end(), [](const Rational& x) { return x == 0; });
    if (constant_form) {
      if (f.constant() == 0) throw Error("specialize: denominator vanishes identically");
      for (int k = 0; k < ord; ++k) num *= Rational(1 / Rational(f.constant()));
      continue;
    }
    auto [g, scale] = LinearFormInS::from_rational(c, Rational(f.constant()));
    for (int k = 0; k < ord; ++k) num *= Rational(1 / scale);
    den[g] += ord;
  }
  return make(std::move(num), std::move(den));
}

Rational RationalFunctionInS::evaluate(const RatVector& point) const {
  Rational den = 1;
  for (const auto& [f, ord] : den_) {
    const Rational v = f.to_poly(vars_).evaluate(point);
    if (v == 0) throw Error("evaluate: point lies on a pole");
    for (int k = 0; k < ord; ++k) den *= v;
  }
  return num_.evaluate(point) / den;
}

std::string RationalFunctionInS::to_string() const {
  if (den_.empty()) return num_.to_string();
  std::string out = "(" + num_.to_string() + ")/(";
  bool first = true;
  for (const auto& [f, ord] : den_) {
    if (!first) out += "*";
    first = false;
    out += "(" + f.to_string(vars_) + ")";
    if (ord > 1) out += "^" + std::to_string(ord);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------

std::vector<DivisorDatum> divisor_data(const Lattice& l) {
  std::vector<DivisorDatum> out;
  for (auto w : l.dense_edges()) {
    const Edge& e = l.edge(w);
    out.push_back({w, e.a, static_cast<int>(e.rank) - 1});
  }
  return out;
}

namespace {

LinearFormInS candidate_form(const Edge& e, long constant) {
  std::vector<Integer> c;
  for (int v : e.a) c.emplace_back(v);
  return LinearFormInS(std::move(c), Integer(constant));
}

// 1/(a_W . s + constant) exactly. LinearFormInS stores the primitive form, so
// the content of (a_W, constant) has to move into the numerator.
RationalFunctionInS candidate_inverse(const Edge& e, long constant) {
  const RatVector c(e.a.begin(), e.a.end());
  const auto [f, scale] = LinearFormInS::from_rational(c, Rational(constant));
  return RationalFunctionInS::inverse(f) * Rational(1 / scale);
}

}  // namespace

ZetaEngine::ZetaEngine(const Lattice& l) : l_(l), memo_(l.size()) {}

const RationalFunctionInS& ZetaEngine::fiber(std::size_t w) {
  if (!memo_.at(w)) memo_[w] = compute(w);
  return *memo_[w];
}

RationalFunctionInS ZetaEngine::compute(std::size_t w) {
  const std::size_t r = l_.arrangement().factors();
  const Edge& e = l_.edge(w);
  if (e.rank == 0) return RationalFunctionInS::constant(r, 1);
  if (e.rank == 1) return candidate_inverse(e, 1);

  const Arrangement local = essentialize(localize(l_.arrangement(), e)).arrangement;
  const auto blocks = irreducible_blocks(local);
  if (blocks.size() > 1) {
    RationalFunctionInS product = RationalFunctionInS::constant(r, 1);
    for (const auto& block : blocks) {
      std::uint64_t mask = 0;
      for (auto i : block) mask |= std::uint64_t{1} << e.J[i];
      const auto v = l_.find(mask);
      if (!v) throw Error("zeta: irreducible block is not an edge");
      product = product * fiber(*v);
    }
    return product;
  }

  RationalFunctionInS sum(r);
  for (std::size_t v = 0; v < w; ++v) {
    if (!l_.leq(v, w) || l_.edge(v).rank == e.rank) continue;
    const long chi = beta_at_one(l_.interval_char_poly(v, w));
    if (chi == 0) continue;
    sum = sum + fiber(v) * Rational(chi);
  }
  return sum * candidate_inverse(e, static_cast<long>(e.rank));
}

RationalFunctionInS ZetaEngine::global_stratified() {
  RationalFunctionInS total(l_.arrangement().factors());
  for (std::size_t w = 0; w < l_.size(); ++w) {
    const Rational chi = l_.restriction_char_poly(w).evaluate({Rational(1)});
    if (chi == 0) continue;
    total = total + fiber(w) * chi;
  }
  return total;
}

RationalFunctionInS zeta_fiber(const Arrangement& a) {
  if (a.size() == 0) throw Error("zeta_fiber: empty arrangement");
  const Lattice l(a);
  ZetaEngine engine(l);
  return engine.global_collapsed();
}

RationalFunctionInS zeta_global(const Arrangement& a) {
  const Lattice l(a);
  ZetaEngine engine(l);
  return engine.global_stratified();
}

std::vector<std::pair<LinearFormInS, int>> pole_locus(const RationalFunctionInS& z) {
  return {z.denominator().begin(), z.denominator().end()};
}

RationalFunctionInS specialize_zeta(const RationalFunctionInS& z, const std::vector<std::size_t>& target,
                                    std::size_t new_nvars) {
  return z.specialize(target, new_nvars);
}

RationalFunctionInS specialize_diagonal(const RationalFunctionInS& z) {
  return z.specialize(std::vector<std::size_t>(z.nvars(), 0), 1);
}

SmcReport verify_smc(const Arrangement& a) {
  SmcReport report;
  const Lattice l(a);
  ZetaEngine engine(l);
  const RationalFunctionInS z = engine.global_stratified();

  report.complete_input = a.has_complete_factorization();
  if (report.complete_input) {
    report.components = lower_bound_components(l);
  } else {
    const CompleteFactorization cf = complete_factorization(a);
    report.components =
        specialize_forms(lower_bound_components(Lattice(cf.arrangement)), cf.origin, a.factors());
  }
  const std::set<LinearFormInS> components(report.components.begin(), report.components.end());
  std::set<LinearFormInS> poles;
  for (const auto& [form, order] : pole_locus(z)) {
    const bool matched = components.contains(form);
    report.poles.push_back({form, order, matched});
    report.pass = report.pass && matched;
    poles.insert(form);
  }
  std::set<LinearFormInS> cancelled;
  for (const auto& d : divisor_data(l)) {
    LinearFormInS cand = candidate_form(l.edge(d.edge), d.k + 1);
    if (!poles.contains(cand)) cancelled.insert(std::move(cand));
  }
  report.cancelled_candidates.assign(cancelled.begin(), cancelled.end());
  return report;
}

}  // namespace hyparr
