// arr: command-line front end for the hyparr library.
//
// Exit codes: 0 ok, 1 usage or unreadable input, 2 validation / precondition
// failure, 3 inconclusive freeness under --strict, 4 monodromy-check violation.

#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "hyparr/hyparr.hpp"

namespace {

using namespace hyparr;

constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitSmcViolation = 4;

struct Globals {
  bool json = false;
  bool strict = false;
  bool assume_free = false;
  unsigned max_degree = 0;
  bool single_variable = false;
  std::string shifts = "0..0";
  bool timings = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::pair<long, long> parse_shifts(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("--shifts expects a..b");
  try {
    const long a = std::stol(text.substr(0, dots));
    const long b = std::stol(text.substr(dots + 2));
    if (a > b) throw UsageError("--shifts: empty range " + text);
    return {a, b};
  } catch (const std::logic_error&) {
    throw UsageError("--shifts expects integers a..b, got " + text);
  }
}

Arrangement load(const std::string& path) {
  try {
    return load_arrangement(path);
  } catch (const ValidationError&) {
    throw;
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::string join_roots(const RootSet& roots) {
  std::string out;
  for (auto it = roots.rbegin(); it != roots.rend(); ++it) out += (out.empty() ? "" : " ") + hyparr::to_string(*it);
  return out;
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_lattice(const Globals& g, const std::string& file) {
  const Lattice l(load(file));
  if (g.json) {
    print(lattice_to_json(l));
    return 0;
  }
  for (std::size_t i = 0; i < l.size(); ++i) {
    const Edge& e = l.edge(i);
    std::cout << "edge " << i << "  rank " << e.rank << "  J " << edge_label(e) << "  mu " << l.mobius(i)
              << (l.is_dense(i) ? "  dense" : "") << "  chi " << l.char_poly(i).to_string() << '\n';
  }
  std::cout << "chi_A(t) = " << l.global_char_poly().to_string() << '\n';
  return 0;
}

int cmd_dense(const Globals& g, const std::string& file) {
  const Lattice l(load(file));
  json out = json::array();
  for (auto w : l.dense_edges()) {
    const Edge& e = l.edge(w);
    if (g.json) {
      out.push_back({{"edge", edge_label(e)}, {"rank", e.rank}, {"proj_complement_euler", l.proj_complement_euler(w)}});
    } else {
      std::cout << edge_label(e) << "  rank " << e.rank << "  chi(P complement) " << l.proj_complement_euler(w)
                << '\n';
    }
  }
  if (g.json) print(out);
  return 0;
}

int cmd_charpoly(const Globals& g, const std::string& file) {
  const Lattice l(load(file));
  const SparsePoly chi = l.global_char_poly();
  if (g.json) {
    json coeffs = json::array();
    for (const auto& c : chi.ascending_coefficients()) coeffs.push_back(to_json(c));
    print({{"char_poly", coeffs}, {"text", chi.to_string()}});
  } else {
    std::cout << chi.to_string() << '\n';
  }
  return 0;
}

int cmd_freeness(const Globals& g, const std::string& file) {
  const FreenessResult r = support_freeness(load(file), g.max_degree);
  if (g.json) {
    print(freeness_to_json(r));
  } else if (const auto* f = std::get_if<Free>(&r)) {
    std::cout << "free, exponents";
    for (auto e : f->exponents) std::cout << ' ' << e;
    std::cout << "\nSaito determinant = " << hyparr::to_string(f->scale) << " * prod(alpha_H)\n";
    for (const auto& d : f->certificate) {
      std::cout << "  degree " << d.degree << ":";
      for (const auto& c : d.coeffs) std::cout << "  [" << c.to_string() << "]";
      std::cout << '\n';
    }
  } else if (const auto* nf = std::get_if<NotFree>(&r)) {
    std::cout << "not free: chi(t) = " << nf->char_poly.to_string() << " does not split over Z>=0\n";
  } else {
    std::cout << "inconclusive: " << std::get<Inconclusive>(r).reason << '\n';
  }
  if (g.strict && std::holds_alternative<Inconclusive>(r)) return kExitInconclusive;
  return 0;
}

int cmd_bs_roots(const Globals& g, const std::string& file) {
  const Arrangement a = load(file);
  if (!a.is_reduced()) throw ValidationError("bs-roots: arrangement is not reduced");
  const FreenessResult fr = support_freeness(a, g.max_degree);
  const RootsStatus status = roots_status(fr, g.assume_free);
  if (status == RootsStatus::Refused) {
    std::cerr << "bs-roots: arrangement is not free (Terao obstruction); rerun with --assume-free\n";
    return kExitValidation;
  }
  if (g.strict && status == RootsStatus::Conjectural) {
    std::cerr << "bs-roots: freeness inconclusive\n";
    return kExitInconclusive;
  }
  const RootSet roots = free_roots(Lattice(reduced_complete(a)));
  if (g.json) {
    print({{"roots", roots_to_json(roots)}, {"status", to_string(status)}});
  } else {
    std::cout << join_roots(roots) << '\n';
    if (status != RootsStatus::Certified) std::cerr << "note: " << to_string(status) << '\n';
  }
  return 0;
}

int cmd_bs_ideal(const Globals& g, const std::string& file) {
  const Arrangement a = load(file);
  if (!a.is_reduced()) throw ValidationError("bs-ideal: arrangement is not reduced");
  const Arrangement fd = reduced_complete(a);
  const FreenessResult fr = support_freeness(a, g.max_degree);
  const RootsStatus status = roots_status(fr, g.assume_free);
  if (status == RootsStatus::Refused) {
    std::cerr << "bs-ideal: arrangement is not free; the generator formula does not apply (use --assume-free)\n";
    return kExitValidation;
  }
  const SymbolicProduct gen = maisonobe_generator(Lattice(fd));
  if (g.json) {
    print({{"factors", forms_to_json(gen.factors)}, {"status", to_string(status)}});
  } else {
    const auto vars = s_variables(fd.factors());
    for (const auto& f : gen.factors) std::cout << "(" << f.to_string(vars) << ")\n";
    if (status != RootsStatus::Certified) std::cerr << "note: " << to_string(status) << '\n';
  }
  return 0;
}

int cmd_bs_lower(const Globals& g, const std::string& file) {
  const CompleteFactorization cf = complete_factorization(load(file));
  const auto forms = lower_bound_components(Lattice(cf.arrangement));
  if (g.json) {
    print({{"components", forms_to_json(forms)}, {"count", forms.size()}});
  } else {
    const auto vars = s_variables(cf.arrangement.factors());
    for (const auto& f : forms) std::cout << f.to_string(vars) << " = 0\n";
  }
  return 0;
}

int cmd_cc(const Globals& g, const std::string& file) {
  const auto [first, last] = parse_shifts(g.shifts);
  const CompleteFactorization cf = complete_factorization(load(file));
  const Lattice l(cf.arrangement);
  const auto comps = cc_components(l, first, last);
  const auto vars = s_variables(cf.arrangement.factors());
  json out = json::array();
  for (const auto& c : comps) {
    const Edge& e = l.edge(c.edge);
    const LinearFormInS form = LinearFormInS::indicator(vars.size(), e.factor_set, c.shift);
    if (g.json) {
      out.push_back({{"edge", edge_label(e)},
                     {"rank", e.rank},
                     {"shift", c.shift},
                     {"form", to_json(form)},
                     {"multiplicity", c.multiplicity}});
    } else {
      std::cout << "T*_W X, W = " << edge_label(e) << ", " << form.to_string(vars) << " = 0  multiplicity "
                << c.multiplicity << '\n';
    }
  }
  if (g.json) print(out);
  return 0;
}

int cmd_zeta(const Globals& g, const std::string& file) {
  RationalFunctionInS z = zeta_global(load(file));
  if (g.single_variable) z = specialize_diagonal(z);
  const auto poles = pole_locus(z);
  if (g.json) {
    json j = zeta_to_json(z);
    json pj = json::array();
    for (const auto& [f, ord] : poles) {
      json entry = to_json(f);
      entry["order"] = ord;
      pj.push_back(std::move(entry));
    }
    j["poles"] = pj;
    print(j);
  } else {
    std::cout << "Z(s) = " << z.to_string() << '\n';
    for (const auto& [f, ord] : poles) std::cout << "pole " << f.to_string(z.vars()) << " = 0  order " << ord << '\n';
  }
  return 0;
}

int report_smc(const Globals& g, const SmcReport& r, std::size_t nvars) {
  if (g.json) {
    print(smc_to_json(r));
  } else {
    const auto vars = s_variables(nvars);
    for (const auto& p : r.poles)
      std::cout << (p.matched ? "ok         " : "VIOLATION  ") << p.pole.to_string(vars) << " = 0  order " << p.order
                << '\n';
    std::cout << (r.pass ? "PASS" : "FAIL (implementation bug)") << '\n';
  }
  return r.pass ? 0 : kExitSmcViolation;
}

int cmd_verify_smc(const Globals& g, const std::string& file) {
  const Arrangement a = load(file);
  return report_smc(g, verify_smc(a), a.factors());
}

int cmd_report(const Globals& g, const std::string& file) {
  const Arrangement a = load(file);
  ReportOptions opts{g.max_degree, g.assume_free, g.single_variable, g.timings};
  const json r = full_report(a, opts);
  if (g.json) {
    print(r);
  } else {
    std::cout << "edges: " << r["lattice"]["edge_count"] << "  rank counts: " << r["lattice"]["rank_counts"].dump()
              << '\n';
    std::cout << "dense edges: " << r["dense_edges"].size() << '\n';
    std::cout << "freeness: " << r["freeness"]["verdict"].get<std::string>() << '\n';
    if (r["bs"].contains("free_roots"))
      std::cout << "b-function roots (" << r["bs"]["roots_status"].get<std::string>()
                << "): " << r["bs"]["free_roots"].dump() << '\n';
    std::cout << "lct: " << r["bs"]["lct"].get<std::string>() << '\n';
    std::cout << "lower-bound components: " << r["bs"]["lower_bound_count"] << '\n';
    std::cout << "zeta: " << r["zeta"]["text"].get<std::string>() << '\n';
    std::cout << "monodromy check: " << (r["smc"]["pass"].get<bool>() ? "pass" : "FAIL") << '\n';
  }
  if (!r["smc"]["pass"].get<bool>()) return kExitSmcViolation;
  if (g.strict && r["freeness"]["verdict"] == "inconclusive") return kExitInconclusive;
  return 0;
}

int cmd_corpus(const Globals& g, const std::string& name, bool verify) {
  if (verify) {
    int worst = 0;
    for (const auto& e : builtin_corpus()) {
      const SmcReport r = verify_smc(e.arrangement);
      std::cout << (r.pass ? "pass  " : "FAIL  ") << e.name << '\n';
      if (!r.pass) worst = kExitSmcViolation;
    }
    return worst;
  }
  if (name.empty()) {
    for (const auto& e : builtin_corpus()) std::cout << e.name << "  " << e.description << '\n';
    return 0;
  }
  const auto entry = corpus_entry(name);
  if (!entry) throw UsageError("unknown corpus entry '" + name + "'");
  std::cout << (g.json ? to_json_text(entry->arrangement) : to_plain(entry->arrangement));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial Bernstein-Sato and zeta-function invariants of central hyperplane arrangements"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "machine-readable JSON output");
  app.add_flag("--strict", g.strict, "exit 3 when freeness is inconclusive");
  app.add_flag("--assume-free", g.assume_free, "treat the arrangement as free without a certificate");
  app.add_option("--max-degree", g.max_degree, "degree bound for the Saito search (default: #hyperplanes)");
  app.add_flag("--single-variable", g.single_variable, "specialize the zeta function to s_j = s");
  app.add_option("--shifts", g.shifts, "shift range a..b for characteristic-cycle components");
  app.add_flag("--timings", g.timings, "include stage timings in the report");

  std::string file;
  std::string corpus_name;
  bool corpus_verify = false;
  std::function<int()> action;

  struct Spec {
    const char* name;
    const char* help;
    int (*fn)(const Globals&, const std::string&);
  };
  const Spec specs[] = {
      {"lattice", "intersection lattice with Moebius values and density", cmd_lattice},
      {"dense", "dense edges", cmd_dense},
      {"charpoly", "characteristic polynomial", cmd_charpoly},
      {"freeness", "Terao obstruction and Saito-certificate search", cmd_freeness},
      {"bs-roots", "b-function roots of a free arrangement", cmd_bs_roots},
      {"bs-ideal", "generator of the Bernstein-Sato ideal of a free arrangement", cmd_bs_ideal},
      {"bs-lower", "zero-locus components for the complete factorization", cmd_bs_lower},
      {"cc", "relative characteristic-cycle components", cmd_cc},
      {"zeta", "topological zeta function and its poles", cmd_zeta},
      {"verify-smc", "check poles against the zero-locus components (exit 4 on violation)", cmd_verify_smc},
      {"report", "full pipeline", cmd_report},
  };
  for (const auto& s : specs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->fallthrough();
    sub->add_option("FILE", file, "arrangement file (plain or JSON)")->required();
    auto fn = s.fn;
    sub->callback([&, fn] { action = [&, fn] { return fn(g, file); }; });
  }
  auto* corpus = app.add_subcommand("corpus", "list, print or verify the built-in corpus");
  corpus->fallthrough();
  corpus->add_option("NAME", corpus_name, "print this entry");
  corpus->add_flag("--verify", corpus_verify, "run the monodromy check on every entry");
  corpus->callback([&] { action = [&] { return cmd_corpus(g, corpus_name, corpus_verify); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "arr: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    std::cerr << "arr: invalid input: " << e.what() << '\n';
    return kExitValidation;
  } catch (const Error& e) {
    std::cerr << "arr: " << e.what() << '\n';
    return kExitValidation;
  }
}
