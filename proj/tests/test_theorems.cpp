#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <numeric>

#include "autl/constructions.hpp"
#include "autl/report.hpp"
#include "autl/theorems.hpp"

using namespace autl;

namespace {

GroupAnalysis analyze(const char* name) {
  return GroupAnalysis(*builtin_group(name));
}

}  // namespace

TEST_CASE("hom-type statement for cyclic targets (pair checker)") {
  CHECK(check_lemma_2_1(*builtin_group("C4xC2"), cyclic(8)).status == Status::holds);
  CHECK(check_lemma_2_1(cyclic(2), cyclic(3)).status == Status::not_applicable);
  CHECK(check_lemma_2_1(cyclic(1), cyclic(4)).status == Status::not_applicable);
  CHECK(check_lemma_2_1(dihedral(8), cyclic(4)).status == Status::not_applicable);
  CHECK(check_lemma_2_1(cyclic(6), cyclic(12)).status == Status::not_applicable);
  // K cyclic but too small for exp(H)
  CHECK(check_lemma_2_1(cyclic(8), cyclic(4)).status == Status::not_applicable);
  // K of mixed order is fine as long as exp(H) divides |K|
  CHECK(check_lemma_2_1(cyclic(4), cyclic(12)).status == Status::holds);
}

TEST_CASE("structure checks for Aut_l and Aut^L_Z") {
  for (const char* name : {"C2", "Q8", "Heis3", "D16", "C4xC2", "D6"}) {
    CAPTURE(name);
    const auto a = analyze(name);
    CHECK(check_prop_2_4(a).status == Status::holds);
    CHECK(check_lemma_2_5(a).status == Status::holds);
  }
  // Q8: both sides are C2 x C2
  const auto q8 = analyze("Q8");
  CHECK(abelian_invariants(q8.autl.as_group("x")) == AbelianInvariants({2, 2}));
  CHECK(hom_invariants(q8.gl_prof.inv, q8.inv_l) == AbelianInvariants({2, 2}));
  // Heis3: both sides trivial
  const auto h = analyze("Heis3");
  CHECK(h.autl.order() == 1);
  CHECK(hom_invariants(h.gl_prof.inv, h.inv_l).trivial());
}

TEST_CASE("lower bound lemmas gate on class 2 and exponent") {
  const auto q8 = analyze("Q8");
  CHECK(check_lemma_2_6(q8).status == Status::holds);
  CHECK(check_lemma_2_7(q8).status == Status::holds);
  // Q8 numbers: r = 2, s = 1, bound = |G/Z| = 4
  CHECK(rank(q8.gz_prof.inv) == 2);
  CHECK(rank(q8.inv_l) == 1);
  CHECK(hom_order(q8.gz_prof.inv, q8.inv_l) == 4);

  CHECK(check_lemma_2_6(analyze("Heis3")).status == Status::not_applicable);  // exp gate
  CHECK(check_lemma_2_6(analyze("D16")).status == Status::not_applicable);    // class 3
  CHECK(check_lemma_2_6(analyze("C8")).status == Status::not_applicable);     // abelian
  CHECK(check_lemma_2_6(analyze("D6")).status == Status::not_applicable);     // not a p-group
  CHECK(check_lemma_2_7(analyze("Heis3")).status == Status::not_applicable);
}

TEST_CASE("abelian-quotient criterion") {
  CHECK(check_lemma_2_8(analyze("C8")).status == Status::holds);
  CHECK(check_lemma_2_8(analyze("Q8")).status == Status::holds);
  CHECK(check_lemma_2_8(analyze("Heis3")).status == Status::holds);
  // Q8 has G/L abelian and Inn inside Aut_l
  const auto q8 = analyze("Q8");
  CHECK(q8.gl_prof.abelian);
  CHECK(q8.inn.subset_of(q8.autl));
  // Heis3 has neither
  const auto h = analyze("Heis3");
  CHECK(!h.gl_prof.abelian);
  CHECK(!h.inn.subset_of(h.autl));
}

TEST_CASE("cyclicity of L when Aut_l = Inn") {
  CHECK(check_lemma_3_1(analyze("Q8")).status == Status::holds);
  CHECK(check_lemma_3_1(analyze("D8")).status == Status::holds);
  CHECK(check_lemma_3_1(analyze("Heis3")).status == Status::not_applicable);
  CHECK(check_lemma_3_1(analyze("C8")).status == Status::not_applicable);
  CHECK(check_lemma_3_1(analyze("D16")).status == Status::not_applicable);  // Aut_l != Inn
}

TEST_CASE("exponent statement is restricted to odd p") {
  CHECK(check_prop_3_2(analyze("D8")).status == Status::not_applicable);    // p = 2
  CHECK(check_prop_3_2(analyze("Q8")).status == Status::not_applicable);    // p = 2
  CHECK(check_prop_3_2(analyze("Heis3")).status == Status::not_applicable); // Aut_l != Inn
  CHECK(check_prop_3_2(analyze("M27")).status == Status::not_applicable);   // Aut_l != Inn
  CHECK(check_prop_3_2(analyze("D6")).status == Status::not_applicable);    // not a p-group
}

TEST_CASE("the two equality criteria") {
  for (const char* name :
       {"Q8", "D8", "Heis3", "M27", "D16", "Q16", "SD16", "M16", "C4:C4@3"}) {
    CAPTURE(name);
    const auto a = analyze(name);
    CHECK(check_thm_3_3(a).status == Status::holds);
    CHECK(check_thm_3_4(a).status == Status::holds);
  }
  CHECK(check_thm_3_3(analyze("C8")).status == Status::not_applicable);
  CHECK(check_thm_3_4(analyze("D12")).status == Status::not_applicable);

  // Q8 satisfies both sides; Heis3 fails both sides
  const auto q8 = analyze("Q8");
  CHECK(q8.autl_eq_inn());
  CHECK(q8.inn_eq_autlz());
  CHECK(q8.gprime_in_l());
  CHECK(q8.l_cyclic());
  CHECK(q8.z_eq_l_gpn());
  const auto h = analyze("Heis3");
  CHECK(!h.autl_eq_inn());
  CHECK(!h.inn_eq_autlz());
  CHECK(!h.gprime_in_l());
  // D16 has Aut_l != Inn and G' not inside L
  const auto d16 = analyze("D16");
  CHECK(!d16.autl_eq_inn());
  CHECK(!d16.gprime_in_l());
  CHECK(d16.autl.order() == 4);
  CHECK(d16.inn.order() == 8);
  // M16 is a non-maximal-class group where the equality does hold, with
  // L strictly below Z
  const auto m16 = analyze("M16");
  CHECK(m16.autl_eq_inn());
  CHECK(m16.l.size() == 2);
  CHECK(m16.z.size() == 4);
  CHECK(m16.z_eq_l_gpn());
}

TEST_CASE("consistency cross-checks") {
  for (const char* name : {"Q8", "D8", "Heis3", "M16", "C4xC2", "D6"}) {
    CAPTURE(name);
    const auto a = analyze(name);
    for (const auto& v : consistency_checks(a)) {
      CAPTURE(v.result_id);
      CHECK(v.status != Status::fails);
    }
  }
}

TEST_CASE("verdict structural invariants") {
  for (const char* name : {"Q8", "Heis3", "C4xC2", "D6", "D16"}) {
    const auto report = make_report(analyze(name));
    for (const auto& v : report.verdicts) {
      CAPTURE(name);
      CAPTURE(v.result_id);
      // witness present exactly when the verdict is a failure
      CHECK((v.status == Status::fails) == !v.witness.is_null());
    }
    CHECK(report.verdicts.size() == census_result_ids().size());
    for (size_t i = 0; i < report.verdicts.size(); ++i)
      CHECK(report.verdicts[i].result_id == census_result_ids()[i]);
  }
}

TEST_CASE("census over small corpora") {
  SUBCASE("D8 and Q8") {
    const auto result = census({*builtin_group("D8"), *builtin_group("Q8")});
    CHECK(result.summary.group_count == 2);
    CHECK(result.summary.total_fails == 0);
    CHECK(result.summary.autl_eq_inn_labels == std::vector<std::string>{"D8", "Q8"});
  }
  SUBCASE("heisenberg alone") {
    const auto result = census({*builtin_group("Heis3")});
    CHECK(result.summary.total_fails == 0);
    CHECK(result.summary.autl_eq_inn_labels.empty());
  }
  SUBCASE("empty corpus") {
    const auto result = census({});
    CHECK(result.reports.empty());
    CHECK(result.summary.group_count == 0);
    CHECK(result.summary.total_fails == 0);
  }
  SUBCASE("per-group caps become error reports, not aborts") {
    CensusOptions opt;
    opt.analysis.aut.enumeration_cap = 100;
    const auto result =
        census({*builtin_group("C2xC2xC2xC2"), *builtin_group("Q8")}, opt);
    REQUIRE(result.reports.size() == 2);
    CHECK(!result.reports[0].error.empty());
    CHECK(result.reports[1].error.empty());
    CHECK(result.reports[1].autl_eq_inn);
    CHECK(result.summary.error_count == 1);
    CHECK(result.summary.errors.size() == 1);
    CHECK(result.summary.errors[0].first == "C2xC2xC2xC2");
  }
}

TEST_CASE("census output is independent of the worker count") {
  std::vector<Group> corpus = builtin_corpus(27);
  CensusOptions serial;
  serial.jobs = 1;
  CensusOptions wide;
  wide.jobs = 8;
  const auto a = census(corpus, serial);
  const auto b = census(corpus, wide);
  CHECK(render_census(a, ReportFormat::json) == render_census(b, ReportFormat::json));
  CHECK(render_census(a, ReportFormat::csv) == render_census(b, ReportFormat::csv));
  CHECK(render_census(a, ReportFormat::markdown) ==
        render_census(b, ReportFormat::markdown));
}

TEST_CASE("analysis is invariant under relabeling of the elements") {
  // Re-indexing the non-identity elements produces an isomorphic group; every
  // computed invariant and every verdict must be unchanged.
  std::uint64_t seed = 0x5eed;
  const auto next = [&seed]() {
    seed ^= seed << 13;
    seed ^= seed >> 7;
    seed ^= seed << 17;
    return seed;
  };
  for (const char* name : {"Q8", "D8", "M16", "Heis3", "C4xC2", "D12", "SD16"}) {
    CAPTURE(name);
    Group g = *builtin_group(name);
    const int n = g.order();
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    for (int i = n - 1; i > 1; --i) std::swap(sigma[i], sigma[1 + next() % i]);

    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) table[sigma[i]][sigma[j]] = sigma[g.mul(i, j)];
    Group relabeled = Group::from_table(table, g.label() + "-relabeled");

    const GroupAnalysis a(g);
    const GroupAnalysis b(relabeled);
    CHECK(a.aut.order() == b.aut.order());
    CHECK(a.inn.order() == b.inn.order());
    CHECK(a.autc.order() == b.autc.order());
    CHECK(a.autl.order() == b.autl.order());
    CHECK(a.autlz.order() == b.autlz.order());
    CHECK(a.z.size() == b.z.size());
    CHECK(a.l.size() == b.l.size());
    CHECK(a.gprime.size() == b.gprime.size());
    CHECK(a.inv_l == b.inv_l);
    CHECK(a.gz_prof.inv == b.gz_prof.inv);
    CHECK(a.gl_prof.inv == b.gl_prof.inv);
    CHECK(a.autl_eq_inn() == b.autl_eq_inn());
    const auto ra = make_report(a), rb = make_report(b);
    REQUIRE(ra.verdicts.size() == rb.verdicts.size());
    for (size_t i = 0; i < ra.verdicts.size(); ++i) {
      CAPTURE(ra.verdicts[i].result_id);
      CHECK(ra.verdicts[i].status == rb.verdicts[i].status);
    }
  }
}

TEST_CASE("wire formats are pinned") {
  // the CSV header documents the fixed column order; changing it is a
  // breaking change for downstream consumers
  const auto result = census({*builtin_group("Q8")});
  const std::string csv = render_census(result, ReportFormat::csv);
  const std::string expected_header =
      "label,order,p,nonabelian,class,z,gprime,l,gpn,l_gpn,exp_l,"
      "aut,inn,autc,autl,autlz,inv_gz,inv_gl,inv_l,"
      "l_cyclic,gprime_in_l,z_eq_l_gpn,autl_eq_inn,inn_eq_autlz,"
      "Lem2.1,Prop2.4,Lem2.5,Lem2.6,Lem2.7,Lem2.8,Lem3.1,Prop3.2,Thm3.3,Thm3.4,"
      "X.DualRoute,X.AutlOrder,X.Thm3.4Fwd,X.Lem3.1Agree,X.HomChain,error";
  CHECK(csv.substr(0, csv.find('\n')) == expected_header);

  // JSON field names mirror the report structure
  const auto j = report_to_json(result.reports[0]);
  const std::vector<std::string> expected_keys = {
      "label", "order", "p", "nonabelian", "class", "z_order", "gprime_order",
      "l_order", "gpn_order", "l_gpn_order", "exp_l", "aut_order", "inn_order",
      "autc_order", "autl_order", "autlz_order", "gz_abelian", "gz_invariants",
      "gl_abelian", "gl_invariants", "l_invariants", "l_cyclic", "gprime_in_l",
      "z_eq_l_gpn", "autl_eq_inn", "inn_eq_autlz", "verdicts", "error"};
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == expected_keys);
}

TEST_CASE("report rendering") {
  const auto report = make_report(analyze("Q8"));
  const auto j = report_to_json(report);
  CHECK(j["label"] == "Q8");
  CHECK(j["aut_order"] == 24);
  CHECK(j["autl_eq_inn"] == true);
  CHECK(j["error"].is_null());
  const std::string csv = render_report(report, ReportFormat::csv);
  CHECK(csv.find("Q8,8,2,true,2,") != std::string::npos);
  const std::string md = render_report(report, ReportFormat::markdown);
  CHECK(md.find("|Aut| = 24") != std::string::npos);

  const auto err = error_report(*builtin_group("C2"), "boom");
  const auto ej = report_to_json(err);
  CHECK(ej["error"] == "boom");
}
