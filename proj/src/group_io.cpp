#include "autl/group_io.hpp"

#include <fstream>
#include <sstream>

namespace autl {

namespace {

[[noreturn]] void ingest_fail(const std::string& what) { throw InvalidGroupTable(what); }

Group group_from_cayley_json(const nlohmann::json& doc, const std::string& name) {
  const int order = doc.at("order").get<int>();
  const auto& rows = doc.at("table");
  if (!rows.is_array() || static_cast<int>(rows.size()) != order)
    ingest_fail("group '" + name + "': table must have `order` rows");
  std::vector<std::vector<int>> table;
  table.reserve(order);
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != order)
      ingest_fail("group '" + name + "': table rows must have `order` entries");
    table.push_back(row.get<std::vector<int>>());
  }

  // Locate the identity; re-index it to 0 when it sits elsewhere.
  int identity = -1;
  for (int e = 0; e < order && identity < 0; ++e) {
    bool ok = true;
    for (int j = 0; j < order && ok; ++j)
      ok = table[e][j] == j && table[j][e] == j;
    if (ok) identity = e;
  }
  if (identity < 0) ingest_fail("group '" + name + "': no two-sided identity element");
  if (identity != 0) {
    std::vector<int> to_new(order);
    to_new[identity] = 0;
    int next = 1;
    for (int x = 0; x < order; ++x)
      if (x != identity) to_new[x] = next++;
    std::vector<std::vector<int>> fixed(order, std::vector<int>(order));
    for (int i = 0; i < order; ++i)
      for (int j = 0; j < order; ++j) {
        const int v = table[i][j];
        if (v < 0 || v >= order)
          ingest_fail("group '" + name + "': table entry out of range");
        fixed[to_new[i]][to_new[j]] = to_new[v];
      }
    table = std::move(fixed);
  }
  return Group::from_table(table, name);
}

}  // namespace

Group group_from_json(const nlohmann::json& doc, const std::string& fallback_name) {
  if (!doc.is_object()) ingest_fail("group file: top-level JSON object expected");
  const std::string name = doc.value("name", fallback_name);
  const std::string kind = doc.value("kind", "");
  if (kind == "permutation") {
    const int degree = doc.at("degree").get<int>();
    const auto gens = doc.at("generators").get<std::vector<std::vector<int>>>();
    return group_from_permutations(degree, gens, name);
  }
  if (kind == "cayley") return group_from_cayley_json(doc, name);
  ingest_fail("group '" + name + "': kind must be \"permutation\" or \"cayley\"");
}

Group load_group_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open group file " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidGroupTable("group file " + path.string() + ": " + e.what());
  }
  try {
    return group_from_json(doc, path.stem().string());
  } catch (const nlohmann::json::exception& e) {
    throw InvalidGroupTable("group file " + path.string() + ": " + e.what());
  }
}

std::uint64_t cayley_hash(const Group& g) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (v >> (8 * byte)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(g.order()));
  for (elem_t e : g.table_flat()) mix(e);
  return h;
}

std::string cayley_hash_hex(const Group& g) {
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << cayley_hash(g);
  return os.str();
}

DiskAutCache::DiskAutCache(std::filesystem::path dir,
                           std::function<void(const std::string&)> warn)
    : dir_(std::move(dir)), warn_(std::move(warn)) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path DiskAutCache::entry_path(const Group& g) const {
  return dir_ / ("aut-" + cayley_hash_hex(g) + ".json");
}

std::optional<AutomorphismSet> DiskAutCache::load(const Group& g) {
  const auto path = entry_path(g);
  std::string blob;
  {
    std::lock_guard<std::mutex> lock(mu_);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    blob = buf.str();
  }
  try {
    const auto doc = nlohmann::json::parse(blob);
    if (doc.at("version").get<int>() != 1) throw Error("unknown cache version");
    if (doc.at("order").get<int>() != g.order()) throw Error("order mismatch");
    if (doc.at("table_hash").get<std::string>() != cayley_hash_hex(g))
      throw Error("hash mismatch");
    auto raw = doc.at("images").get<std::vector<std::vector<int>>>();
    std::vector<std::vector<elem_t>> images;
    images.reserve(raw.size());
    for (const auto& img : raw) {
      std::vector<elem_t> row;
      row.reserve(img.size());
      for (int v : img) {
        if (v < 0 || v >= g.order()) throw Error("image entry out of range");
        row.push_back(static_cast<elem_t>(v));
      }
      images.push_back(std::move(row));
    }
    // full revalidation: maps, identity, closure
    return AutomorphismSet::from_images(g, std::move(images), true);
  } catch (const std::exception& e) {
    if (warn_)
      warn_("discarding corrupt cache entry " + path.string() + ": " + e.what());
    return std::nullopt;
  }
}

void DiskAutCache::store(const Group& g, const AutomorphismSet& aut) {
  nlohmann::json doc;
  doc["version"] = 1;
  doc["order"] = g.order();
  doc["table_hash"] = cayley_hash_hex(g);
  auto images = nlohmann::json::array();
  for (const auto& img : aut.images()) {
    images.push_back(std::vector<int>(img.begin(), img.end()));
  }
  doc["images"] = std::move(images);
  const std::string blob = doc.dump();

  const auto path = entry_path(g);
  const auto tmp = path.string() + ".tmp";
  std::lock_guard<std::mutex> lock(mu_);
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) {
      if (warn_) warn_("cannot write cache entry " + tmp);
      return;
    }
    out << blob;
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec && warn_) warn_("cannot finalize cache entry " + path.string());
}

}  // namespace autl
