#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <mutex>
#include <string>

#include "json.hpp"

#include "autl/group.hpp"
#include "autl/theorems.hpp"

namespace autl {

/// Parses a group file (JSON, kind "permutation" or "cayley"), re-validating
/// every group axiom on ingest. Cayley tables with the identity at a nonzero
/// index are re-indexed so it lands at 0. Throws Error subtypes with a
/// diagnostic naming the violated invariant.
Group load_group_file(const std::filesystem::path& path);
Group group_from_json(const nlohmann::json& doc, const std::string& fallback_name);

/// FNV-1a hash of (order, row-major table entries); stable across runs and
/// platforms, used as the cache key.
std::uint64_t cayley_hash(const Group& g);
std::string cayley_hash_hex(const Group& g);

/// On-disk store of computed automorphism groups, one JSON file per table
/// hash. Loaded entries are fully re-validated; corrupt entries are discarded
/// with a warning and recomputed. Thread safe.
class DiskAutCache : public AutStore {
 public:
  explicit DiskAutCache(std::filesystem::path dir,
                        std::function<void(const std::string&)> warn = {});
  std::optional<AutomorphismSet> load(const Group& g) override;
  void store(const Group& g, const AutomorphismSet& aut) override;

 private:
  std::filesystem::path entry_path(const Group& g) const;
  std::filesystem::path dir_;
  std::function<void(const std::string&)> warn_;
  std::mutex mu_;
};

}  // namespace autl
