#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "autl/abelian.hpp"
#include "autl/aut.hpp"
#include "autl/constructions.hpp"
#include "autl/group_io.hpp"
#include "autl/report.hpp"
#include "autl/theorems.hpp"

namespace {

constexpr int kExitFails = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitResource = 3;

struct CommonOptions {
  std::string builtin;
  std::string file;
  std::string format = "json";
  double timeout_seconds = 30.0;
  long long aut_cap = 1LL << 20;
  std::string cache_dir;
};

void add_common(CLI::App* cmd, CommonOptions& o, bool with_source) {
  if (with_source) {
    auto* b = cmd->add_option("--builtin", o.builtin, "builtin group name (e.g. Q8, D8xC2)");
    auto* f = cmd->add_option("--file", o.file, "group file (JSON, kind permutation|cayley)");
    b->excludes(f);
    f->excludes(b);
  }
  cmd->add_option("--format", o.format, "report format: json|csv|markdown")
      ->check(CLI::IsMember({"json", "csv", "markdown", "md"}));
  cmd->add_option("--timeout", o.timeout_seconds, "per-group time budget in seconds")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--aut-cap", o.aut_cap, "automorphism enumeration cap")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--cache-dir", o.cache_dir, "directory for cached automorphism groups");
}

autl::AnalysisOptions analysis_options(const CommonOptions& o, autl::AutStore* store) {
  autl::AnalysisOptions a;
  a.aut.enumeration_cap = o.aut_cap;
  a.aut.timeout =
      std::chrono::milliseconds(static_cast<long long>(o.timeout_seconds * 1000.0));
  a.aut_store = store;
  return a;
}

std::unique_ptr<autl::DiskAutCache> make_cache(const CommonOptions& o) {
  if (o.cache_dir.empty()) return nullptr;
  return std::make_unique<autl::DiskAutCache>(
      o.cache_dir, [](const std::string& msg) { std::cerr << "warning: " << msg << "\n"; });
}

std::optional<autl::Group> resolve_group(const CommonOptions& o) {
  if (!o.builtin.empty()) {
    auto g = autl::builtin_group(o.builtin);
    if (!g) std::cerr << "error: unknown builtin group '" << o.builtin << "'\n";
    return g;
  }
  if (!o.file.empty()) return autl::load_group_file(o.file);
  std::cerr << "error: provide --builtin or --file\n";
  return std::nullopt;
}

int run_verify(const CommonOptions& o) {
  const auto format = *autl::parse_report_format(o.format);
  auto cache = make_cache(o);
  try {
    auto g = resolve_group(o);
    if (!g) return kExitBadInput;
    autl::GroupAnalysis analysis(*g, analysis_options(o, cache.get()));
    const auto report = autl::make_report(analysis);
    std::cout << autl::render_report(report, format);
    return report.has_fails() ? kExitFails : 0;
  } catch (const autl::Timeout& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const autl::EnumerationCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const autl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}

int run_aut(const CommonOptions& o) {
  const auto format = *autl::parse_report_format(o.format);
  auto cache = make_cache(o);
  try {
    auto g = resolve_group(o);
    if (!g) return kExitBadInput;
    autl::GroupAnalysis a(*g, analysis_options(o, cache.get()));

    const auto subgroup_inv = [](const autl::Subgroup& s) -> std::string {
      return autl::is_abelian(s) ? autl::abelian_invariants(s).to_string() : "nonabelian";
    };
    nlohmann::ordered_json j;
    j["label"] = a.g.label();
    j["order"] = a.g.order();
    j["p"] = a.p ? nlohmann::ordered_json(*a.p) : nlohmann::ordered_json(nullptr);
    j["aut_order"] = a.aut.order();
    j["inn_order"] = a.inn.order();
    j["autc_order"] = a.autc.order();
    j["autl_order"] = a.autl.order();
    j["autlz_order"] = a.autlz.order();
    j["z_order"] = a.z.size();
    j["z_invariants"] = subgroup_inv(a.z);
    j["gprime_order"] = a.gprime.size();
    j["gprime_invariants"] = subgroup_inv(a.gprime);
    j["l_order"] = a.l.size();
    j["l_invariants"] = a.inv_l.to_string();
    j["autl_invariants"] =
        autl::abelian_invariants(a.autl.as_group("Autl")).to_string();
    j["autl_eq_inn"] = a.autl_eq_inn();

    switch (format) {
      case autl::ReportFormat::json:
        std::cout << j.dump(2) << "\n";
        break;
      case autl::ReportFormat::csv: {
        std::string header, row;
        for (auto it = j.begin(); it != j.end(); ++it) {
          if (!header.empty()) {
            header += ',';
            row += ',';
          }
          header += it.key();
          row += it.value().is_string() ? it.value().get<std::string>()
                                        : it.value().dump();
        }
        std::cout << header << "\n" << row << "\n";
        break;
      }
      case autl::ReportFormat::markdown:
        std::cout << "### " << a.g.label() << " (order " << a.g.order() << ")\n\n";
        for (auto it = j.begin(); it != j.end(); ++it)
          std::cout << "- " << it.key() << ": "
                    << (it.value().is_string() ? it.value().get<std::string>()
                                               : it.value().dump())
                    << "\n";
        break;
    }
    return 0;
  } catch (const autl::Timeout& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const autl::EnumerationCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const autl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}

int run_census(const CommonOptions& o, bool use_builtin, const std::string& corpus_dir,
               int max_order, int jobs, const std::string& out_path) {
  const auto format = *autl::parse_report_format(o.format);
  auto cache = make_cache(o);

  std::vector<autl::Group> groups;
  if (use_builtin) {
    groups = autl::builtin_corpus(max_order);
  } else if (!corpus_dir.empty()) {
    std::vector<std::filesystem::path> files;
    try {
      for (const auto& entry : std::filesystem::directory_iterator(corpus_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
          files.push_back(entry.path());
    } catch (const std::filesystem::filesystem_error& e) {
      std::cerr << "error: cannot read corpus directory: " << e.what() << "\n";
      return kExitBadInput;
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      try {
        autl::Group g = autl::load_group_file(f);
        if (g.order() <= max_order) groups.push_back(std::move(g));
        else
          std::cerr << "skipping " << f.filename().string() << ": order "
                    << g.order() << " exceeds --max-order " << max_order << "\n";
      } catch (const autl::Error& e) {
        std::cerr << "skipping " << f.filename().string() << ": " << e.what() << "\n";
      }
    }
  } else {
    std::cerr << "error: provide --builtin or --corpus-dir\n";
    return kExitBadInput;
  }

  autl::CensusOptions copt;
  copt.analysis = analysis_options(o, cache.get());
  copt.jobs = jobs;
  const auto result = autl::census(groups, copt);
  const std::string rendered = autl::render_census(result, format);
  if (out_path.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(out_path, std::ios::trunc);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kExitBadInput;
    }
    out << rendered;
  }
  return result.summary.total_fails > 0 ? kExitFails : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"automorphism-theoretic invariants of finite p-groups"};
  app.require_subcommand(1);

  CommonOptions vo;
  auto* verify = app.add_subcommand(
      "verify", "run every checker on one group and print its report");
  add_common(verify, vo, true);

  CommonOptions ao;
  auto* aut = app.add_subcommand(
      "aut", "print automorphism subgroup orders and invariants for one group");
  add_common(aut, ao, true);

  CommonOptions co;
  bool census_builtin = false;
  std::string corpus_dir;
  int max_order = 243;
  int jobs = 0;
  std::string out_path;
  auto* census = app.add_subcommand("census", "run every checker on a corpus");
  add_common(census, co, false);
  census->add_flag("--builtin", census_builtin, "use the builtin corpus");
  census->add_option("--corpus-dir", corpus_dir, "directory of group files");
  census->add_option("--max-order", max_order, "largest group order to analyze")
      ->check(CLI::PositiveNumber);
  census->add_option("--jobs", jobs, "worker threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber);
  census->add_option("--out", out_path, "write the report to a file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  if (verify->parsed()) return run_verify(vo);
  if (aut->parsed()) return run_aut(ao);
  return run_census(co, census_builtin, corpus_dir, max_order, jobs, out_path);
}
