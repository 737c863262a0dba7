#include "autl/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "autl/constructions.hpp"

namespace autl {

std::string to_string(Status s) {
  switch (s) {
    case Status::holds: return "holds";
    case Status::fails: return "fails";
    case Status::not_applicable: return "not_applicable";
  }
  return "?";
}

namespace {

std::optional<int> try_nilpotency_class(const Group& g) {
  try {
    return nilpotency_class(g);
  } catch (const NotNilpotent&) {
    return std::nullopt;
  }
}

AutomorphismSet load_or_compute_aut(const Group& g, const AnalysisOptions& opt) {
  if (opt.aut_store) {
    if (auto cached = opt.aut_store->load(g)) return std::move(*cached);
  }
  AutomorphismSet aut = automorphism_group(g, opt.aut);
  if (opt.aut_store) opt.aut_store->store(g, aut);
  return aut;
}

QuotientProfile profile(const Group& image) {
  if (image.is_abelian()) return {true, abelian_invariants(image)};
  const Group ab = quotient_group(image, derived_subgroup(image)).image();
  return {false, abelian_invariants(ab)};
}

unsigned long long ull_pow(unsigned long long base, int e) {
  unsigned long long r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > ~0ULL / base) throw Error("power overflows 64 bits");
    r *= base;
  }
  return r;
}

Verdict holds_verdict(std::string id) { return {std::move(id), Status::holds, nullptr}; }
Verdict na_verdict(std::string id) { return {std::move(id), Status::not_applicable, nullptr}; }

Verdict fail_verdict(std::string id, nlohmann::json witness) {
  return {std::move(id), Status::fails, std::move(witness)};
}

// First image array in exactly one of the two sets, for witnesses.
nlohmann::json set_difference_witness(const AutomorphismSet& a, const AutomorphismSet& b) {
  for (const auto& img : a.images())
    if (!b.contains_image(img)) return nlohmann::json(img);
  for (const auto& img : b.images())
    if (!a.contains_image(img)) return nlohmann::json(img);
  return nullptr;
}

}  // namespace

GroupAnalysis::GroupAnalysis(Group group, const AnalysisOptions& opt)
    : g(std::move(group)),
      p(is_p_group(g)),
      abelian(g.is_abelian()),
      nil_class(try_nilpotency_class(g)),
      z(centre(g)),
      gprime(derived_subgroup(g)),
      aut(load_or_compute_aut(g, opt)),
      l(absolute_centre(g, aut)),
      exp_l(exponent(l)),
      gpn(power_subgroup(g, exp_l)),
      l_gpn(subgroup_join(l, gpn)),
      inn(inner_automorphisms(g)),
      autc(central_automorphisms(g, aut)),
      autl(absolute_central_automorphisms(aut, l)),
      autl_constrained(constrained_autl(g, l, opt.aut)),
      autlz(absolute_central_fixing_centre(g, aut, l)),
      qz(quotient_group(g, z)),
      ql(quotient_group(g, l)),
      ql_gpn(quotient_group(g, l_gpn)),
      gz_prof(profile(qz.image())),
      gl_prof(profile(ql.image())),
      glgpn_prof(profile(ql_gpn.image())),
      inv_l(abelian_invariants(l)) {}

// ---------------------------------------------------------------------------
// Checkers

Verdict check_lemma_2_1(const Group& h, const Group& k) {
  const char* id = "Lem2.1";
  const auto ph = is_p_group(h);
  if (!ph || !h.is_abelian() || !is_cyclic(k)) return na_verdict(id);
  const int expc = exponent(h);
  if (k.order() % expc != 0) return na_verdict(id);

  const auto inv_h = abelian_invariants(h);
  const auto inv_k = abelian_invariants(k);
  const auto hom = hom_invariants(inv_h, inv_k);
  bool ok = hom == inv_h;
  std::string enum_note;
  if (ok) {
    try {
      ok = brute_force_homs(h, k).size() == static_cast<size_t>(h.order());
      if (!ok) enum_note = "enumerated hom count differs from |H|";
    } catch (const OracleCapExceeded&) {
      // formula-only check beyond oracle scale
    }
  }
  if (ok) return holds_verdict(id);
  return fail_verdict(id, {{"H", h.label()},
                           {"K", k.label()},
                           {"hom_invariants", hom.to_string()},
                           {"H_invariants", inv_h.to_string()},
                           {"note", enum_note}});
}

Verdict check_prop_2_4(const GroupAnalysis& a) {
  const char* id = "Prop2.4";
  if (!a.autl.is_abelian())
    return fail_verdict(id, {{"group", a.g.label()}, {"reason", "Aut_l is not abelian"}});
  const auto lhs = abelian_invariants(a.autl.as_group("Autl(" + a.g.label() + ")"));
  const auto rhs = hom_invariants(a.gl_prof.inv, a.inv_l);
  if (lhs == rhs) return holds_verdict(id);
  return fail_verdict(id, {{"group", a.g.label()},
                           {"autl_invariants", lhs.to_string()},
                           {"hom_invariants", rhs.to_string()}});
}

Verdict check_lemma_2_5(const GroupAnalysis& a) {
  const char* id = "Lem2.5";
  if (!a.autlz.is_abelian())
    return fail_verdict(id, {{"group", a.g.label()}, {"reason", "Aut^L_Z is not abelian"}});
  const auto lhs = abelian_invariants(a.autlz.as_group("AutLZ(" + a.g.label() + ")"));
  const auto rhs = hom_invariants(a.gz_prof.inv, a.inv_l);
  if (lhs == rhs) return holds_verdict(id);
  return fail_verdict(id, {{"group", a.g.label()},
                           {"autlz_invariants", lhs.to_string()},
                           {"hom_invariants", rhs.to_string()}});
}

namespace {

// Shared applicability gate and bound for the two lower-bound lemmas:
// nonabelian p-group of class exactly 2 with exp(G/Z) <= exp(L).
struct Class2Bound {
  bool applicable = false;
  int r = 0, s = 0;
  unsigned long long bound = 0;
};

Class2Bound class2_bound(const GroupAnalysis& a) {
  Class2Bound b;
  if (!a.p || a.abelian || a.nil_class != 2) return b;
  if (exponent(a.qz.image()) > a.exp_l) return b;
  b.applicable = true;
  b.r = rank(a.gz_prof.inv);
  b.s = rank(a.inv_l);
  b.bound = static_cast<unsigned long long>(a.qz.image().order()) *
            ull_pow(*a.p, b.r * (b.s - 1));
  return b;
}

}  // namespace

Verdict check_lemma_2_6(const GroupAnalysis& a) {
  const char* id = "Lem2.6";
  const auto b = class2_bound(a);
  if (!b.applicable) return na_verdict(id);
  const auto hom = hom_order(a.gz_prof.inv, a.inv_l);
  if (b.r >= 2 && hom >= b.bound) return holds_verdict(id);
  return fail_verdict(id, {{"group", a.g.label()},
                           {"r", b.r},
                           {"s", b.s},
                           {"bound", b.bound},
                           {"hom_order", hom}});
}

Verdict check_lemma_2_7(const GroupAnalysis& a) {
  const char* id = "Lem2.7";
  const auto b = class2_bound(a);
  if (!b.applicable) return na_verdict(id);
  const auto autl_order = static_cast<unsigned long long>(a.autl.order());
  if (b.r >= 2 && autl_order >= b.bound) return holds_verdict(id);
  return fail_verdict(id, {{"group", a.g.label()},
                           {"r", b.r},
                           {"s", b.s},
                           {"bound", b.bound},
                           {"autl_order", autl_order}});
}

Verdict check_lemma_2_8(const GroupAnalysis& a) {
  const char* id = "Lem2.8";
  const bool gl_abelian = a.gl_prof.abelian;
  const bool inn_in_autl = a.inn.subset_of(a.autl);
  if (gl_abelian == inn_in_autl) return holds_verdict(id);
  return fail_verdict(id, {{"group", a.g.label()},
                           {"gl_abelian", gl_abelian},
                           {"inn_in_autl", inn_in_autl}});
}

Verdict check_lemma_3_1(const GroupAnalysis& a) {
  const char* id = "Lem3.1";
  if (!a.p || a.abelian || !a.autl_eq_inn()) return na_verdict(id);
  if (a.l_cyclic()) return holds_verdict(id);
  return fail_verdict(id, {{"group", a.g.label()}, {"l_invariants", a.inv_l.to_string()}});
}

Verdict check_prop_3_2(const GroupAnalysis& a) {
  const char* id = "Prop3.2";
  if (!a.p || *a.p == 2 || a.abelian || !a.autl_eq_inn()) return na_verdict(id);
  const int exp_gz = exponent(a.qz.image());
  if (exp_gz == a.exp_l) return holds_verdict(id);
  return fail_verdict(id, {{"group", a.g.label()},
                           {"exp_gz", exp_gz},
                           {"exp_l", a.exp_l}});
}

Verdict check_thm_3_3(const GroupAnalysis& a) {
  const char* id = "Thm3.3";
  if (!a.p || a.abelian) return na_verdict(id);
  const bool lhs = a.inn_eq_autlz();
  const bool rhs = a.gprime_in_l() && a.l_cyclic();
  if (lhs == rhs) return holds_verdict(id);
  return fail_verdict(id, {{"group", a.g.label()},
                           {"inn_eq_autlz", lhs},
                           {"gprime_in_l", a.gprime_in_l()},
                           {"l_cyclic", a.l_cyclic()},
                           {"witness_map", set_difference_witness(a.inn, a.autlz)}});
}

Verdict check_thm_3_4(const GroupAnalysis& a) {
  const char* id = "Thm3.4";
  if (!a.p || a.abelian) return na_verdict(id);
  const bool lhs = a.autl_eq_inn();
  const bool rhs = a.gprime_in_l() && a.l_cyclic() && a.z_eq_l_gpn();
  if (lhs == rhs) return holds_verdict(id);
  return fail_verdict(id, {{"group", a.g.label()},
                           {"autl_eq_inn", lhs},
                           {"gprime_in_l", a.gprime_in_l()},
                           {"l_cyclic", a.l_cyclic()},
                           {"z_eq_l_gpn", a.z_eq_l_gpn()},
                           {"exp_l", a.exp_l},
                           {"witness_map", set_difference_witness(a.autl, a.inn)}});
}

#define AUTL_CHECK_ON_GROUP(fn)                    \
  Verdict fn(const Group& g) {                     \
    return fn(GroupAnalysis(g, AnalysisOptions{})); \
  }
AUTL_CHECK_ON_GROUP(check_prop_2_4)
AUTL_CHECK_ON_GROUP(check_lemma_2_5)
AUTL_CHECK_ON_GROUP(check_lemma_2_6)
AUTL_CHECK_ON_GROUP(check_lemma_2_7)
AUTL_CHECK_ON_GROUP(check_lemma_2_8)
AUTL_CHECK_ON_GROUP(check_lemma_3_1)
AUTL_CHECK_ON_GROUP(check_prop_3_2)
AUTL_CHECK_ON_GROUP(check_thm_3_3)
AUTL_CHECK_ON_GROUP(check_thm_3_4)
#undef AUTL_CHECK_ON_GROUP

std::vector<Verdict> consistency_checks(const GroupAnalysis& a) {
  std::vector<Verdict> out;

  // Two independent routes to Aut_l agree elementwise.
  if (a.autl.equal_sets(a.autl_constrained)) {
    out.push_back(holds_verdict("X.DualRoute"));
  } else {
    out.push_back(fail_verdict(
        "X.DualRoute",
        {{"group", a.g.label()},
         {"filter_order", a.autl.order()},
         {"constrained_order", a.autl_constrained.order()},
         {"witness_map", set_difference_witness(a.autl, a.autl_constrained)}}));
  }

  // Order form of the Aut_l/Hom correspondence.
  const auto expected = hom_order(a.gl_prof.inv, a.inv_l);
  if (static_cast<unsigned long long>(a.autl.order()) == expected) {
    out.push_back(holds_verdict("X.AutlOrder"));
  } else {
    out.push_back(fail_verdict("X.AutlOrder", {{"group", a.g.label()},
                                               {"autl_order", a.autl.order()},
                                               {"hom_order", expected}}));
  }

  // Forward decomposition: Aut_l = Inn forces each structural condition.
  if (!a.p || a.abelian || !a.autl_eq_inn()) {
    out.push_back(na_verdict("X.Thm3.4Fwd"));
  } else if (a.gprime_in_l() && a.l_cyclic() && a.z_eq_l_gpn()) {
    out.push_back(holds_verdict("X.Thm3.4Fwd"));
  } else {
    out.push_back(fail_verdict("X.Thm3.4Fwd", {{"group", a.g.label()},
                                               {"gprime_in_l", a.gprime_in_l()},
                                               {"l_cyclic", a.l_cyclic()},
                                               {"z_eq_l_gpn", a.z_eq_l_gpn()}}));
  }

  // Cyclicity verdicts agree between the two checkers that test it.
  if (!a.p || a.abelian || !a.autl_eq_inn()) {
    out.push_back(na_verdict("X.Lem3.1Agree"));
  } else {
    const bool lem31_holds = check_lemma_3_1(a).status == Status::holds;
    if (lem31_holds == a.l_cyclic()) {
      out.push_back(holds_verdict("X.Lem3.1Agree"));
    } else {
      out.push_back(fail_verdict("X.Lem3.1Agree", {{"group", a.g.label()},
                                                   {"lem31_holds", lem31_holds},
                                                   {"l_cyclic", a.l_cyclic()}}));
    }
  }

  // Hom restriction chain from the Z = L*G^{p^n} argument.
  if (!a.p || a.abelian || a.nil_class != 2 || !a.z.contains_all(a.l_gpn)) {
    out.push_back(na_verdict("X.HomChain"));
  } else {
    const auto h1 = hom_order(a.gz_prof.inv, a.inv_l);
    const auto h2 = hom_order(a.glgpn_prof.inv, a.inv_l);
    const auto h3 = hom_order(a.gl_prof.inv, a.inv_l);
    if (h1 <= h2 && h2 <= h3) {
      out.push_back(holds_verdict("X.HomChain"));
    } else {
      out.push_back(fail_verdict("X.HomChain", {{"group", a.g.label()},
                                                {"hom_gz", h1},
                                                {"hom_glgpn", h2},
                                                {"hom_gl", h3}}));
    }
  }
  return out;
}

const std::vector<std::string>& census_result_ids() {
  static const std::vector<std::string> kIds = {
      "Lem2.1", "Prop2.4", "Lem2.5", "Lem2.6", "Lem2.7", "Lem2.8",
      "Lem3.1", "Prop3.2", "Thm3.3", "Thm3.4",
      "X.DualRoute", "X.AutlOrder", "X.Thm3.4Fwd", "X.Lem3.1Agree", "X.HomChain",
  };
  return kIds;
}

bool TheoremReport::has_fails() const {
  return std::any_of(verdicts.begin(), verdicts.end(),
                     [](const Verdict& v) { return v.status == Status::fails; });
}

TheoremReport make_report(const GroupAnalysis& a) {
  TheoremReport r;
  r.label = a.g.label();
  r.order = a.g.order();
  r.p = a.p;
  r.nonabelian = !a.abelian;
  r.nil_class = a.nil_class;
  r.z_order = a.z.size();
  r.gprime_order = a.gprime.size();
  r.l_order = a.l.size();
  r.gpn_order = a.gpn.size();
  r.l_gpn_order = a.l_gpn.size();
  r.exp_l = a.exp_l;
  r.aut_order = a.aut.order();
  r.inn_order = a.inn.order();
  r.autc_order = a.autc.order();
  r.autl_order = a.autl.order();
  r.autlz_order = a.autlz.order();
  r.gz_prof = a.gz_prof;
  r.gl_prof = a.gl_prof;
  r.inv_l = a.inv_l;
  r.l_cyclic = a.l_cyclic();
  r.gprime_in_l = a.gprime_in_l();
  r.z_eq_l_gpn = a.z_eq_l_gpn();
  r.autl_eq_inn = a.autl_eq_inn();
  r.inn_eq_autlz = a.inn_eq_autlz();

  // Per-group instance of the Hom(H,K) ~ H statement: K is the smallest
  // admissible cyclic group.
  if (a.p && a.abelian) {
    r.verdicts.push_back(check_lemma_2_1(a.g, cyclic(exponent(a.g))));
  } else {
    r.verdicts.push_back(na_verdict("Lem2.1"));
  }
  r.verdicts.push_back(check_prop_2_4(a));
  r.verdicts.push_back(check_lemma_2_5(a));
  r.verdicts.push_back(check_lemma_2_6(a));
  r.verdicts.push_back(check_lemma_2_7(a));
  r.verdicts.push_back(check_lemma_2_8(a));
  r.verdicts.push_back(check_lemma_3_1(a));
  r.verdicts.push_back(check_prop_3_2(a));
  r.verdicts.push_back(check_thm_3_3(a));
  r.verdicts.push_back(check_thm_3_4(a));
  for (auto& v : consistency_checks(a)) r.verdicts.push_back(std::move(v));
  return r;
}

TheoremReport error_report(const Group& g, const std::string& message) {
  TheoremReport r;
  r.label = g.label();
  r.order = g.order();
  r.error = message;
  return r;
}

CensusResult census(const std::vector<Group>& groups, const CensusOptions& opt) {
  CensusResult result;
  result.reports.resize(groups.size());

  int jobs = opt.jobs > 0 ? opt.jobs : static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  jobs = std::min<int>(jobs, std::max<size_t>(groups.size(), 1));

  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const size_t i = next.fetch_add(1);
      if (i >= groups.size()) break;
      try {
        GroupAnalysis a(groups[i], opt.analysis);
        result.reports[i] = make_report(a);
      } catch (const Error& e) {
        result.reports[i] = error_report(groups[i], e.what());
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  CensusSummary& s = result.summary;
  s.group_count = static_cast<int>(groups.size());
  for (const auto& id : census_result_ids()) s.tallies.emplace_back(id, ResultTally{});
  for (const auto& r : result.reports) {
    if (!r.error.empty()) {
      ++s.error_count;
      s.errors.emplace_back(r.label, r.error);
      continue;
    }
    if (r.autl_eq_inn) s.autl_eq_inn_labels.push_back(r.label);
    for (const auto& v : r.verdicts) {
      auto it = std::find_if(s.tallies.begin(), s.tallies.end(),
                             [&](const auto& t) { return t.first == v.result_id; });
      if (it == s.tallies.end()) continue;
      switch (v.status) {
        case Status::holds: ++it->second.holds; break;
        case Status::fails: ++it->second.fails; ++s.total_fails; break;
        case Status::not_applicable: ++it->second.not_applicable; break;
      }
    }
  }
  return result;
}

}  // namespace autl
