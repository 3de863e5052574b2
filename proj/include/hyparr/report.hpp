#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "hyparr/arrangement.hpp"
#include "hyparr/bsideal.hpp"
#include "hyparr/freeness.hpp"
#include "hyparr/lattice.hpp"
#include "hyparr/zeta.hpp"

namespace hyparr {

inline constexpr int kReportSchemaVersion = 1;

using json = nlohmann::json;

json to_json(const Rational& q);
json to_json(const LinearFormInS& f);
json to_json(const Arrangement& a);
/// Roots rendered closest-to-zero first.
json roots_to_json(const RootSet& roots);
json forms_to_json(const std::vector<LinearFormInS>& forms);
json lattice_to_json(const Lattice& l);
json freeness_to_json(const FreenessResult& r);
json zeta_to_json(const RationalFunctionInS& z);
json smc_to_json(const SmcReport& r);
/// Edge labels use 1-based hyperplane numbers.
std::string edge_label(const Edge& e);

/// Rebuilds a rational function from zeta_to_json output.
RationalFunctionInS zeta_from_json(const json& j);
LinearFormInS form_from_json(const json& j);

struct ReportOptions {
  unsigned max_degree = 0;  ///< 0: number of hyperplanes
  bool assume_free = false;
  bool single_variable = false;
  bool timings = false;
};

/// Full pipeline: lattice, dense edges, freeness, Bernstein-Sato data, zeta
/// function and the monodromy check. Deterministic unless timings are requested.
json full_report(const Arrangement& a, const ReportOptions& options);

/// Status of free_roots for the reduced support of `a`.
enum class RootsStatus { Certified, Assumed, Conjectural, Refused };
std::string to_string(RootsStatus s);
RootsStatus roots_status(const FreenessResult& r, bool assume_free);

/// Freeness of the reduced, essentialized support.
FreenessResult support_freeness(const Arrangement& a, unsigned max_degree);

}  // namespace hyparr
