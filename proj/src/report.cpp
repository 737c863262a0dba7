#include "autl/report.hpp"

#include <sstream>

namespace autl {

namespace {

std::string status_letter(Status s) {
  switch (s) {
    case Status::holds: return "H";
    case Status::fails: return "F";
    case Status::not_applicable: return "N";
  }
  return "?";
}

std::string invariants_compact(const AbelianInvariants& inv) {
  if (inv.trivial()) return "1";
  std::string out;
  for (size_t i = 0; i < inv.factors().size(); ++i) {
    if (i) out += '.';
    out += std::to_string(inv.factors()[i]);
  }
  return out;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

const char* bool_word(bool b) { return b ? "true" : "false"; }

}  // namespace

std::optional<ReportFormat> parse_report_format(const std::string& name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  if (name == "markdown" || name == "md") return ReportFormat::markdown;
  return std::nullopt;
}

nlohmann::ordered_json report_to_json(const TheoremReport& r) {
  nlohmann::ordered_json j;
  j["label"] = r.label;
  j["order"] = r.order;
  if (!r.error.empty()) {
    j["error"] = r.error;
    return j;
  }
  j["p"] = r.p ? nlohmann::ordered_json(*r.p) : nlohmann::ordered_json(nullptr);
  j["nonabelian"] = r.nonabelian;
  j["class"] = r.nil_class ? nlohmann::ordered_json(*r.nil_class)
                           : nlohmann::ordered_json(nullptr);
  j["z_order"] = r.z_order;
  j["gprime_order"] = r.gprime_order;
  j["l_order"] = r.l_order;
  j["gpn_order"] = r.gpn_order;
  j["l_gpn_order"] = r.l_gpn_order;
  j["exp_l"] = r.exp_l;
  j["aut_order"] = r.aut_order;
  j["inn_order"] = r.inn_order;
  j["autc_order"] = r.autc_order;
  j["autl_order"] = r.autl_order;
  j["autlz_order"] = r.autlz_order;
  j["gz_abelian"] = r.gz_prof.abelian;
  j["gz_invariants"] = r.gz_prof.inv.factors();
  j["gl_abelian"] = r.gl_prof.abelian;
  j["gl_invariants"] = r.gl_prof.inv.factors();
  j["l_invariants"] = r.inv_l.factors();
  j["l_cyclic"] = r.l_cyclic;
  j["gprime_in_l"] = r.gprime_in_l;
  j["z_eq_l_gpn"] = r.z_eq_l_gpn;
  j["autl_eq_inn"] = r.autl_eq_inn;
  j["inn_eq_autlz"] = r.inn_eq_autlz;
  auto verdicts = nlohmann::ordered_json::array();
  for (const auto& v : r.verdicts) {
    nlohmann::ordered_json vj;
    vj["result"] = v.result_id;
    vj["status"] = to_string(v.status);
    if (v.status == Status::fails) vj["witness"] = v.witness;
    verdicts.push_back(std::move(vj));
  }
  j["verdicts"] = std::move(verdicts);
  j["error"] = nullptr;
  return j;
}

nlohmann::ordered_json census_to_json(const CensusResult& c) {
  nlohmann::ordered_json j;
  j["tool"] = "autl";
  auto groups = nlohmann::ordered_json::array();
  for (const auto& r : c.reports) groups.push_back(report_to_json(r));
  j["groups"] = std::move(groups);
  nlohmann::ordered_json s;
  s["group_count"] = c.summary.group_count;
  s["error_count"] = c.summary.error_count;
  s["total_fails"] = c.summary.total_fails;
  nlohmann::ordered_json tallies;
  for (const auto& [id, t] : c.summary.tallies) {
    tallies[id] = {{"holds", t.holds},
                   {"fails", t.fails},
                   {"not_applicable", t.not_applicable}};
  }
  s["tallies"] = std::move(tallies);
  s["autl_eq_inn"] = c.summary.autl_eq_inn_labels;
  auto errs = nlohmann::ordered_json::array();
  for (const auto& [label, msg] : c.summary.errors)
    errs.push_back({{"label", label}, {"message", msg}});
  s["errors"] = std::move(errs);
  j["summary"] = std::move(s);
  return j;
}

namespace {

std::string csv_header() {
  std::string h =
      "label,order,p,nonabelian,class,z,gprime,l,gpn,l_gpn,exp_l,"
      "aut,inn,autc,autl,autlz,inv_gz,inv_gl,inv_l,"
      "l_cyclic,gprime_in_l,z_eq_l_gpn,autl_eq_inn,inn_eq_autlz";
  for (const auto& id : census_result_ids()) h += "," + id;
  h += ",error";
  return h;
}

std::string csv_row(const TheoremReport& r) {
  std::ostringstream os;
  os << csv_escape(r.label) << ',' << r.order << ',';
  if (!r.error.empty()) {
    // error rows carry only identity columns plus the trailing error field
    os << "-,-,-,-,-,-,-,-,-,-,-,-,-,-,-,-,-,-,-,-,-,-";
    for (size_t i = 0; i < census_result_ids().size(); ++i) os << ",-";
    os << ',' << csv_escape(r.error);
    return os.str();
  }
  os << (r.p ? std::to_string(*r.p) : "-") << ',';
  os << bool_word(r.nonabelian) << ',';
  os << (r.nil_class ? std::to_string(*r.nil_class) : "-") << ',';
  os << r.z_order << ',' << r.gprime_order << ',' << r.l_order << ','
     << r.gpn_order << ',' << r.l_gpn_order << ',' << r.exp_l << ',';
  os << r.aut_order << ',' << r.inn_order << ',' << r.autc_order << ','
     << r.autl_order << ',' << r.autlz_order << ',';
  os << invariants_compact(r.gz_prof.inv) << ',' << invariants_compact(r.gl_prof.inv)
     << ',' << invariants_compact(r.inv_l) << ',';
  os << bool_word(r.l_cyclic) << ',' << bool_word(r.gprime_in_l) << ','
     << bool_word(r.z_eq_l_gpn) << ',' << bool_word(r.autl_eq_inn) << ','
     << bool_word(r.inn_eq_autlz);
  for (const auto& id : census_result_ids()) {
    std::string letter = "-";
    for (const auto& v : r.verdicts)
      if (v.result_id == id) {
        letter = status_letter(v.status);
        break;
      }
    os << ',' << letter;
  }
  os << ',';
  return os.str();
}

}  // namespace

std::string census_to_csv(const CensusResult& c) {
  std::ostringstream os;
  os << csv_header() << '\n';
  for (const auto& r : c.reports) os << csv_row(r) << '\n';
  os << "# summary groups=" << c.summary.group_count
     << " errors=" << c.summary.error_count << " fails=" << c.summary.total_fails
     << '\n';
  os << "# summary autl_eq_inn=";
  for (size_t i = 0; i < c.summary.autl_eq_inn_labels.size(); ++i) {
    if (i) os << ',';
    os << c.summary.autl_eq_inn_labels[i];
  }
  os << '\n';
  for (const auto& [id, t] : c.summary.tallies)
    os << "# summary tally " << id << " holds=" << t.holds << " fails=" << t.fails
       << " na=" << t.not_applicable << '\n';
  for (const auto& [label, msg] : c.summary.errors)
    os << "# summary error " << label << ": " << msg << '\n';
  return os.str();
}

namespace {

void markdown_report_section(std::ostringstream& os, const TheoremReport& r) {
  os << "### " << r.label << " (order " << r.order << ")\n\n";
  if (!r.error.empty()) {
    os << "analysis failed: " << r.error << "\n\n";
    return;
  }
  os << "- p = " << (r.p ? std::to_string(*r.p) : "none");
  os << ", class = " << (r.nil_class ? std::to_string(*r.nil_class) : "not nilpotent");
  os << ", " << (r.nonabelian ? "nonabelian" : "abelian") << '\n';
  os << "- |Z| = " << r.z_order << ", |G'| = " << r.gprime_order
     << ", |L| = " << r.l_order << ", exp(L) = " << r.exp_l
     << ", |G^exp(L)| = " << r.gpn_order << ", |L*G^exp(L)| = " << r.l_gpn_order << '\n';
  os << "- |Aut| = " << r.aut_order << ", |Inn| = " << r.inn_order
     << ", |Aut_c| = " << r.autc_order << ", |Aut_l| = " << r.autl_order
     << ", |Aut^L_Z| = " << r.autlz_order << '\n';
  os << "- G/Z ~ " << r.gz_prof.inv.to_string()
     << (r.gz_prof.abelian ? "" : " (abelianized)") << ", G/L ~ "
     << r.gl_prof.inv.to_string() << (r.gl_prof.abelian ? "" : " (abelianized)")
     << ", L ~ " << r.inv_l.to_string() << '\n';
  os << "- L cyclic: " << bool_word(r.l_cyclic)
     << ", G' <= L: " << bool_word(r.gprime_in_l)
     << ", Z = L*G^exp(L): " << bool_word(r.z_eq_l_gpn)
     << ", Aut_l = Inn: " << bool_word(r.autl_eq_inn)
     << ", Inn = Aut^L_Z: " << bool_word(r.inn_eq_autlz) << "\n\n";
  os << "| result | status |\n|---|---|\n";
  for (const auto& v : r.verdicts) {
    os << "| " << v.result_id << " | " << to_string(v.status);
    if (v.status == Status::fails) os << " `" << v.witness.dump() << "`";
    os << " |\n";
  }
  os << '\n';
}

}  // namespace

std::string census_to_markdown(const CensusResult& c) {
  std::ostringstream os;
  os << "# autl census\n\n";
  os << c.summary.group_count << " groups, " << c.summary.error_count
     << " analysis errors, " << c.summary.total_fails << " failing checks.\n\n";
  os << "## Summary\n\n| result | holds | fails | n/a |\n|---|---|---|---|\n";
  for (const auto& [id, t] : c.summary.tallies)
    os << "| " << id << " | " << t.holds << " | " << t.fails << " | "
       << t.not_applicable << " |\n";
  os << "\nGroups with Aut_l(G) = Inn(G): ";
  if (c.summary.autl_eq_inn_labels.empty()) {
    os << "none";
  } else {
    for (size_t i = 0; i < c.summary.autl_eq_inn_labels.size(); ++i) {
      if (i) os << ", ";
      os << c.summary.autl_eq_inn_labels[i];
    }
  }
  os << "\n\n";
  if (!c.summary.errors.empty()) {
    os << "## Errors\n\n";
    for (const auto& [label, msg] : c.summary.errors)
      os << "- " << label << ": " << msg << '\n';
    os << '\n';
  }
  os << "## Groups\n\n";
  for (const auto& r : c.reports) markdown_report_section(os, r);
  return os.str();
}

std::string render_report(const TheoremReport& r, ReportFormat f) {
  switch (f) {
    case ReportFormat::json: return report_to_json(r).dump(2) + "\n";
    case ReportFormat::csv: {
      std::ostringstream os;
      os << csv_header() << '\n' << csv_row(r) << '\n';
      return os.str();
    }
    case ReportFormat::markdown: {
      std::ostringstream os;
      markdown_report_section(os, r);
      return os.str();
    }
  }
  return {};
}

std::string render_census(const CensusResult& c, ReportFormat f) {
  switch (f) {
    case ReportFormat::json: return census_to_json(c).dump(2) + "\n";
    case ReportFormat::csv: return census_to_csv(c);
    case ReportFormat::markdown: return census_to_markdown(c);
  }
  return {};
}

}  // namespace autl
