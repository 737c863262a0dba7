#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "autl/abelian.hpp"
#include "autl/aut.hpp"
#include "autl/group.hpp"

namespace autl {

enum class Status { holds, fails, not_applicable };
std::string to_string(Status s);

struct Verdict {
  std::string result_id;
  Status status = Status::not_applicable;
  nlohmann::json witness;  // non-null exactly when status == fails
};

/// Pluggable persistence for computed automorphism groups (see DiskAutCache).
/// Implementations must be safe to call from concurrent census workers.
struct AutStore {
  virtual ~AutStore() = default;
  virtual std::optional<AutomorphismSet> load(const Group& g) = 0;
  virtual void store(const Group& g, const AutomorphismSet& aut) = 0;
};

struct AnalysisOptions {
  AutOptions aut;
  AutStore* aut_store = nullptr;
};

/// Abelian profile of a quotient: its invariants when abelian, otherwise the
/// invariants of its abelianization (which is what Hom into an abelian group
/// sees).
struct QuotientProfile {
  bool abelian = false;
  AbelianInvariants inv;
};

/// Every invariant the checkers consume, computed once per group.
/// Construction may throw Timeout / EnumerationCapExceeded.
class GroupAnalysis {
 public:
  explicit GroupAnalysis(Group group, const AnalysisOptions& opt = {});

  Group g;
  std::optional<int> p;           // ambient prime, if a p-group
  bool abelian;
  std::optional<int> nil_class;   // nullopt when not nilpotent
  Subgroup z;
  Subgroup gprime;
  AutomorphismSet aut;
  Subgroup l;                     // absolute centre
  int exp_l;                      // p^n in the p-group case
  Subgroup gpn;                   // G^{exp_l}
  Subgroup l_gpn;                 // L(G) * G^{exp_l}
  AutomorphismSet inn;
  AutomorphismSet autc;           // central automorphisms
  AutomorphismSet autl;           // absolute central automorphisms (filter route)
  AutomorphismSet autl_constrained;  // coset-search route
  AutomorphismSet autlz;          // Aut^{L}_{Z}
  QuotientMap qz;                 // G/Z
  QuotientMap ql;                 // G/L
  QuotientMap ql_gpn;             // G/(L*G^{exp_l})
  QuotientProfile gz_prof;
  QuotientProfile gl_prof;
  QuotientProfile glgpn_prof;
  AbelianInvariants inv_l;

  bool autl_eq_inn() const { return autl.equal_sets(inn); }
  bool inn_eq_autlz() const { return inn.equal_sets(autlz); }
  bool gprime_in_l() const { return l.contains_all(gprime); }
  bool l_cyclic() const { return is_cyclic(l); }
  bool z_eq_l_gpn() const { return z.equals(l_gpn); }
};

// One checker per numbered result. Gated-out inputs yield not_applicable;
// a `fails` verdict carries a reproducible witness.

/// Hom(H,K) has the type of H, for H an abelian p-group of exponent p^c and K
/// cyclic of order divisible by p^c. Cross-checked against enumeration when
/// the pair is within oracle scale.
Verdict check_lemma_2_1(const Group& h, const Group& k);
/// Aut_l(G) has the type of Hom(G/L(G), L(G)).
Verdict check_prop_2_4(const GroupAnalysis& a);
/// Aut^{L}_{Z}(G) has the type of Hom(G/Z(G), L(G)).
Verdict check_lemma_2_5(const GroupAnalysis& a);
/// |Hom(G/Z,L)| >= |G/Z| p^{r(s-1)} for class-2 p-groups with
/// exp(G/Z) <= exp(L); also r >= 2.
Verdict check_lemma_2_6(const GroupAnalysis& a);
/// |Aut_l(G)| >= |G/Z| p^{r(s-1)} under the same hypotheses.
Verdict check_lemma_2_7(const GroupAnalysis& a);
/// G/L abelian iff Inn(G) <= Aut_l(G).
Verdict check_lemma_2_8(const GroupAnalysis& a);
/// Aut_l = Inn forces L cyclic (nonabelian p-groups).
Verdict check_lemma_3_1(const GroupAnalysis& a);
/// Aut_l = Inn forces exp(G/Z) = exp(L) (nonabelian p-groups, p odd).
Verdict check_prop_3_2(const GroupAnalysis& a);
/// Inn = Aut^{L}_{Z} iff G' <= L and L cyclic (nonabelian p-groups).
Verdict check_thm_3_3(const GroupAnalysis& a);
/// Aut_l = Inn iff G' <= L, L cyclic, and Z = L*G^{p^n} with p^n = exp(L).
Verdict check_thm_3_4(const GroupAnalysis& a);

// Convenience overloads that analyze on the fly.
Verdict check_prop_2_4(const Group& g);
Verdict check_lemma_2_5(const Group& g);
Verdict check_lemma_2_6(const Group& g);
Verdict check_lemma_2_7(const Group& g);
Verdict check_lemma_2_8(const Group& g);
Verdict check_lemma_3_1(const Group& g);
Verdict check_prop_3_2(const Group& g);
Verdict check_thm_3_3(const Group& g);
Verdict check_thm_3_4(const Group& g);

/// Cross-checks tying independent computation routes together: dual-route
/// equality of Aut_l, the order form of the Aut_l/Hom correspondence, the
/// forward decomposition of the biconditional, cyclicity agreement between
/// checkers, and the Hom restriction chain.
std::vector<Verdict> consistency_checks(const GroupAnalysis& a);

/// Fixed order of every result id a census emits.
const std::vector<std::string>& census_result_ids();

struct TheoremReport {
  std::string label;
  int order = 0;
  std::optional<int> p;
  bool nonabelian = false;
  std::optional<int> nil_class;
  long long z_order = 0, gprime_order = 0, l_order = 0, gpn_order = 0, l_gpn_order = 0;
  int exp_l = 0;
  long long aut_order = 0, inn_order = 0, autc_order = 0, autl_order = 0, autlz_order = 0;
  QuotientProfile gz_prof, gl_prof;
  AbelianInvariants inv_l;
  bool l_cyclic = false, gprime_in_l = false, z_eq_l_gpn = false;
  bool autl_eq_inn = false, inn_eq_autlz = false;
  std::vector<Verdict> verdicts;
  std::string error;  // nonempty when analysis failed (cap, timeout, bad input)

  bool has_fails() const;
};

TheoremReport make_report(const GroupAnalysis& a);
TheoremReport error_report(const Group& g, const std::string& message);

struct ResultTally {
  int holds = 0, fails = 0, not_applicable = 0;
};

struct CensusSummary {
  int group_count = 0;
  int error_count = 0;
  int total_fails = 0;
  std::vector<std::pair<std::string, ResultTally>> tallies;  // census_result_ids order
  std::vector<std::string> autl_eq_inn_labels;
  std::vector<std::pair<std::string, std::string>> errors;  // (label, message)
};

struct CensusOptions {
  AnalysisOptions analysis;
  int jobs = 0;  // 0 = all hardware threads
};

struct CensusResult {
  std::vector<TheoremReport> reports;  // corpus order
  CensusSummary summary;
};

/// Runs every checker on every group, fanning out per group. Per-group
/// failures (timeout, cap) become error reports; the census never aborts.
/// Output depends only on (groups, options.analysis), not on jobs.
CensusResult census(const std::vector<Group>& groups, const CensusOptions& opt = {});

}  // namespace autl
