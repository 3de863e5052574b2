#include "hyparr/report.hpp"

#include <chrono>

namespace hyparr {

json to_json(const Rational& q) { return hyparr::to_string(q); }

json to_json(const LinearFormInS& f) {
  json coeffs = json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(c.get_si());
  return {{"coeffs", coeffs}, {"const", f.constant().get_si()}};
}

LinearFormInS form_from_json(const json& j) {
  std::vector<Integer> c;
  for (const auto& v : j.at("coeffs")) c.emplace_back(v.get<long>());
  return LinearFormInS(std::move(c), Integer(j.at("const").get<long>()));
}

json to_json(const Arrangement& a) { return json::parse(to_json_text(a)); }

json roots_to_json(const RootSet& roots) {
  json out = json::array();
  for (auto it = roots.rbegin(); it != roots.rend(); ++it) out.push_back(to_json(*it));
  return out;
}

json forms_to_json(const std::vector<LinearFormInS>& forms) {
  json out = json::array();
  for (const auto& f : forms) out.push_back(to_json(f));
  return out;
}

std::string edge_label(const Edge& e) {
  std::string s = "{";
  for (std::size_t k = 0; k < e.J.size(); ++k) s += (k ? "," : "") + std::to_string(e.J[k] + 1);
  return s + "}";
}

namespace {

json poly_coefficients(const SparsePoly& p) {
  json out = json::array();
  for (const auto& c : p.ascending_coefficients()) out.push_back(to_json(c));
  return out;
}

json integer_key(const RatMatrix& key) {
  json rows = json::array();
  for (std::size_t i = 0; i < key.rows(); ++i) {
    json row = json::array();
    for (const auto& z : primitive_integer_vector(key.row_vector(i))) row.push_back(z.get_str());
    rows.push_back(row);
  }
  return rows;
}

json derivation_json(const Derivation& d) {
  json coeffs = json::array();
  for (const auto& c : d.coeffs) coeffs.push_back(c.to_string());
  return {{"degree", d.degree}, {"coeffs", coeffs}};
}

}  // namespace

json lattice_to_json(const Lattice& l) {
  json edges = json::array();
  for (std::size_t i = 0; i < l.size(); ++i) {
    const Edge& e = l.edge(i);
    json J = json::array();
    for (auto h : e.J) J.push_back(h + 1);
    json entry = {{"index", i},
                  {"key", integer_key(e.key)},
                  {"rank", e.rank},
                  {"J", J},
                  {"mobius", l.mobius(i)},
                  {"dense", l.is_dense(i)},
                  {"char_poly", poly_coefficients(l.char_poly(i))}};
    edges.push_back(std::move(entry));
  }
  return {{"edges", edges},
          {"rank_counts", l.rank_counts()},
          {"char_poly", poly_coefficients(l.global_char_poly())}};
}

json freeness_to_json(const FreenessResult& r) {
  json out = {{"verdict", verdict_name(r)}};
  if (const auto* f = std::get_if<Free>(&r)) {
    json cert = json::array();
    for (const auto& d : f->certificate) cert.push_back(derivation_json(d));
    out["exponents"] = f->exponents;
    out["certificate"] = cert;
    out["scale"] = to_json(f->scale);
  } else if (const auto* nf = std::get_if<NotFree>(&r)) {
    out["obstruction"] = {{"char_poly", poly_coefficients(nf->char_poly)},
                          {"reason", "characteristic polynomial does not split over nonnegative integers"}};
  } else {
    const auto& inc = std::get<Inconclusive>(r);
    out["max_degree"] = inc.max_degree;
    out["reason"] = inc.reason;
  }
  return out;
}

json zeta_to_json(const RationalFunctionInS& z) {
  json num = json::array();
  for (const auto& [m, c] : z.numerator().terms()) num.push_back({{"exponents", m}, {"coeff", to_json(c)}});
  json den = json::array();
  for (const auto& [f, ord] : z.denominator()) {
    json entry = to_json(f);
    entry["order"] = ord;
    den.push_back(std::move(entry));
  }
  return {{"nvars", z.nvars()}, {"numerator", num}, {"denominator", den}, {"text", z.to_string()}};
}

RationalFunctionInS zeta_from_json(const json& j) {
  const auto n = j.at("nvars").get<std::size_t>();
  SparsePoly num(s_variables(n));
  for (const auto& t : j.at("numerator"))
    num.add_term(t.at("exponents").get<Monomial>(), parse_rational(t.at("coeff").get<std::string>()));
  RationalFunctionInS::Denominator den;
  for (const auto& d : j.at("denominator")) den[form_from_json(d)] += d.at("order").get<int>();
  return RationalFunctionInS::make(std::move(num), std::move(den));
}

json smc_to_json(const SmcReport& r) {
  json poles = json::array();
  for (const auto& p : r.poles) {
    json entry = to_json(p.pole);
    entry["order"] = p.order;
    entry["matched"] = p.matched;
    poles.push_back(std::move(entry));
  }
  return {{"pass", r.pass},
          {"complete_input", r.complete_input},
          {"poles", poles},
          {"components", forms_to_json(r.components)},
          {"cancelled_candidates", forms_to_json(r.cancelled_candidates)}};
}

std::string to_string(RootsStatus s) {
  switch (s) {
    case RootsStatus::Certified: return "certified";
    case RootsStatus::Assumed: return "assumed free";
    case RootsStatus::Conjectural: return "conjectural upper-bound set";
    case RootsStatus::Refused: return "refused: arrangement is not free";
  }
  return "conjectural upper-bound set";
}

RootsStatus roots_status(const FreenessResult& r, bool assume_free) {
  if (std::holds_alternative<Free>(r)) return RootsStatus::Certified;
  if (assume_free) return RootsStatus::Assumed;
  if (std::holds_alternative<NotFree>(r)) return RootsStatus::Refused;
  return RootsStatus::Conjectural;
}

FreenessResult support_freeness(const Arrangement& a, unsigned max_degree) {
  const Arrangement support = essentialize(reduced_support(a)).arrangement;
  return saito_search(support, max_degree == 0 ? static_cast<unsigned>(support.size()) : max_degree);
}

json full_report(const Arrangement& a, const ReportOptions& options) {
  using clock = std::chrono::steady_clock;
  json timings = json::object();
  auto stage = [&](const char* name, auto&& fn) {
    const auto t0 = clock::now();
    auto result = fn();
    timings[name] = std::chrono::duration<double>(clock::now() - t0).count();
    return result;
  };

  json report = {{"schema_version", kReportSchemaVersion}};
  report["arrangement"] = to_json(a);
  report["arrangement"]["kind"] = to_string(a.kind());

  const Lattice l = stage("lattice", [&] { return Lattice(a); });
  json summary = lattice_to_json(l);
  summary.erase("edges");
  summary["edge_count"] = l.size();
  report["lattice"] = summary;

  json dense = json::array();
  for (auto w : l.dense_edges()) {
    dense.push_back({{"edge", edge_label(l.edge(w))},
                     {"rank", l.edge(w).rank},
                     {"proj_complement_euler", l.proj_complement_euler(w)}});
  }
  report["dense_edges"] = dense;

  const FreenessResult freeness = stage("freeness", [&] { return support_freeness(a, options.max_degree); });
  report["freeness"] = freeness_to_json(freeness);

  json bs = json::object();
  const Lattice support(reduced_complete(a));
  const RootsStatus status = roots_status(freeness, options.assume_free);
  bs["roots_status"] = to_string(status);
  if (status != RootsStatus::Refused) bs["free_roots"] = roots_to_json(free_roots(support));
  bs["lct"] = to_json(lct(support));
  if (std::holds_alternative<Free>(freeness) || options.assume_free)
    bs["maisonobe_generator"] = forms_to_json(maisonobe_generator(support).factors);
  const CompleteFactorization cf = complete_factorization(a);
  const auto lower = stage("bs", [&] { return lower_bound_components(Lattice(cf.arrangement)); });
  bs["lower_bound_components"] = forms_to_json(lower);
  bs["lower_bound_count"] = lower.size();
  report["bs"] = bs;

  RationalFunctionInS z = stage("zeta", [&] { return zeta_global(a); });
  if (options.single_variable) z = specialize_diagonal(z);
  json zj = zeta_to_json(z);
  json poles = json::array();
  for (const auto& [f, ord] : pole_locus(z)) {
    json entry = to_json(f);
    entry["order"] = ord;
    poles.push_back(std::move(entry));
  }
  zj["poles"] = poles;
  report["zeta"] = zj;

  report["smc"] = smc_to_json(stage("smc", [&] { return verify_smc(a); }));
  if (options.timings) report["timings"] = timings;
  return report;
}

}  // namespace hyparr
