#include "doctest.h"
#include "test_support.hpp"

using namespace testing;

TEST_SUITE("report") {
  TEST_CASE("full report for the four-plane example") {
    const json r = full_report(load_arrangement(corpus_path("budur-xyz.json")), {});
    CHECK(r["schema_version"] == kReportSchemaVersion);
    CHECK(r["arrangement"]["kind"] == "complete");
    CHECK(r["lattice"]["rank_counts"] == json::array({1, 4, 6, 1}));
    CHECK(r["dense_edges"].size() == 5);
    CHECK(r["freeness"]["verdict"] == "not-free");
    CHECK(r["bs"]["roots_status"] == "refused: arrangement is not free");
    CHECK_FALSE(r["bs"].contains("free_roots"));
    CHECK_FALSE(r["bs"].contains("maisonobe_generator"));
    CHECK(r["bs"]["lct"] == "3/4");
    CHECK(r["bs"]["lower_bound_count"] == 8);
    CHECK(r["smc"]["pass"] == true);
    CHECK_FALSE(r.contains("timings"));
  }

  TEST_CASE("assume-free unlocks roots and the generator") {
    ReportOptions opts;
    opts.assume_free = true;
    const json r = full_report(corpus_entry("budur-example")->arrangement, opts);
    CHECK(r["bs"]["roots_status"] == "assumed free");
    CHECK(r["bs"]["free_roots"] == json::array({"-3/4", "-1", "-5/4"}));
    CHECK(r["bs"].contains("maisonobe_generator"));
  }

  TEST_CASE("reports are deterministic unless timings are requested") {
    const Arrangement a = corpus_entry("supersolvable-a3")->arrangement;
    CHECK(full_report(a, {}).dump() == full_report(a, {}).dump());
    ReportOptions timed;
    timed.timings = true;
    CHECK(full_report(a, timed).contains("timings"));
  }

  TEST_CASE("single-variable zeta in the report") {
    ReportOptions opts;
    opts.single_variable = true;
    const json r = full_report(generic_lines(4), opts);
    CHECK(r["zeta"]["nvars"] == 1);
    CHECK(r["zeta"]["poles"].size() == 2);
  }

  TEST_CASE("zeta JSON round-trips") {
    for (const auto& a : corpus_arrangements()) {
      const RationalFunctionInS z = zeta_global(a);
      CHECK(zeta_from_json(zeta_to_json(z)) == z);
    }
  }

  TEST_CASE("forms and roots serialize in the documented shapes") {
    CHECK(to_json(form({2, 0}, 4)) == json::parse(R"({"coeffs":[1,0],"const":2})"));
    CHECK(roots_to_json(roots({"-1", "-1/2"})) == json::array({"-1/2", "-1"}));
    CHECK(form_from_json(to_json(form({1, 1}, 3))) == form({1, 1}, 3));
  }

  TEST_CASE("roots status") {
    CHECK(roots_status(Free{}, false) == RootsStatus::Certified);
    CHECK(roots_status(NotFree{}, false) == RootsStatus::Refused);
    CHECK(roots_status(NotFree{}, true) == RootsStatus::Assumed);
    CHECK(roots_status(Inconclusive{}, false) == RootsStatus::Conjectural);
    CHECK(to_string(RootsStatus::Conjectural) == "conjectural upper-bound set");
  }

  TEST_CASE("lattice JSON lists every edge") {
    const json j = lattice_to_json(Lattice(generic_lines(3)));
    REQUIRE(j["edges"].size() == 5);
    CHECK(j["edges"][4]["mobius"] == 2);
    CHECK(j["edges"][4]["J"] == json::array({1, 2, 3}));
    CHECK(j["edges"][4]["dense"] == true);
    CHECK(j["char_poly"] == json::array({"2", "-3", "1"}));
  }
}
