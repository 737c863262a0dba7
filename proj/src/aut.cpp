#include "autl/aut.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

namespace autl {

// ---------------------------------------------------------------------------
// Automorphism

Automorphism::Automorphism(Group parent, std::vector<elem_t> img, bool validate)
    : parent_(std::move(parent)), img_(std::move(img)) {
  if (validate) {
    if (auto why = defect(parent_, img_))
      throw InvalidParameter("not an automorphism of '" + parent_.label() + "': " + *why);
  }
}

Automorphism Automorphism::identity(const Group& g) {
  std::vector<elem_t> img(g.order());
  std::iota(img.begin(), img.end(), 0);
  return Automorphism(g, std::move(img), false);
}

bool Automorphism::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Automorphism Automorphism::compose(const Automorphism& other) const {
  if (!parent_.same_as(other.parent_)) throw ParentMismatch("composing foreign automorphisms");
  std::vector<elem_t> out(img_.size());
  for (size_t x = 0; x < img_.size(); ++x) out[x] = img_[other.img_[x]];
  return Automorphism(parent_, std::move(out), false);
}

Automorphism Automorphism::inverse() const {
  std::vector<elem_t> out(img_.size());
  for (size_t x = 0; x < img_.size(); ++x) out[img_[x]] = static_cast<elem_t>(x);
  return Automorphism(parent_, std::move(out), false);
}

std::optional<std::string> Automorphism::defect(const Group& g,
                                                const std::vector<elem_t>& img) {
  const int n = g.order();
  if (static_cast<int>(img.size()) != n) return "image array has wrong length";
  if (img[0] != 0) return "identity is not fixed";
  std::vector<bool> hit(n, false);
  for (int x = 0; x < n; ++x) {
    if (img[x] >= n) return "image out of range";
    if (hit[img[x]]) return "not a bijection (image " + std::to_string(img[x]) + " repeats)";
    hit[img[x]] = true;
  }
  for (int x = 0; x < n; ++x)
    if (g.elem_order(img[x]) != g.elem_order(x))
      return "element order not preserved at " + std::to_string(x);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (img[g.mul(x, y)] != g.mul(img[x], img[y]))
        return "product not preserved at (" + std::to_string(x) + "," +
               std::to_string(y) + ")";
  return std::nullopt;
}

int autocommutator(const Group& g, int x, const Automorphism& alpha) {
  return g.mul(g.inv(x), alpha.of(x));
}

// ---------------------------------------------------------------------------
// AutomorphismSet

namespace {

struct ImageHash {
  size_t operator()(const std::vector<elem_t>& v) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (elem_t e : v) {
      h ^= static_cast<std::uint64_t>(e) + 1;
      h *= 1099511628211ULL;
    }
    return static_cast<size_t>(h);
  }
};

using ImageIndex = std::unordered_map<std::vector<elem_t>, int, ImageHash>;

std::vector<elem_t> compose_images(const std::vector<elem_t>& a,
                                   const std::vector<elem_t>& b) {
  std::vector<elem_t> out(a.size());
  for (size_t x = 0; x < a.size(); ++x) out[x] = a[b[x]];
  return out;
}

}  // namespace

AutomorphismSet::AutomorphismSet(Group parent, std::vector<std::vector<elem_t>> images,
                                 std::vector<int> gen_indices)
    : parent_(std::move(parent)),
      images_(std::move(images)),
      generator_indices_(std::move(gen_indices)) {}

AutomorphismSet AutomorphismSet::from_images(Group parent,
                                             std::vector<std::vector<elem_t>> images,
                                             bool validate_maps) {
  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end())
    throw InvalidGroupTable("duplicate automorphism in set");
  if (validate_maps) {
    for (const auto& img : images)
      if (auto why = Automorphism::defect(parent, img))
        throw InvalidGroupTable("invalid member map: " + *why);
  }

  std::vector<elem_t> id(parent.order());
  std::iota(id.begin(), id.end(), 0);
  ImageIndex pos;
  pos.reserve(images.size() * 2);
  for (size_t i = 0; i < images.size(); ++i) pos.emplace(images[i], static_cast<int>(i));
  const auto id_it = pos.find(id);
  if (id_it == pos.end())
    throw InvalidGroupTable("automorphism set does not contain the identity");

  // Greedy generating sublist in canonical order; the closure walk doubles as
  // the closure check (a composition landing outside the set is a miss).
  std::vector<char> closed(images.size(), 0);
  std::vector<int> closure{id_it->second};
  closed[id_it->second] = 1;
  std::vector<int> gens;
  for (size_t i = 0; i < images.size(); ++i) {
    if (closed[i]) continue;
    gens.push_back(static_cast<int>(i));
    closed[i] = 1;
    closure.push_back(static_cast<int>(i));
    for (size_t q = 0; q < closure.size(); ++q) {
      for (int gi : gens) {
        for (const auto& prod : {compose_images(images[closure[q]], images[gi]),
                                 compose_images(images[gi], images[closure[q]])}) {
          const auto it = pos.find(prod);
          if (it == pos.end())
            throw InvalidGroupTable("automorphism set is not closed under composition");
          if (!closed[it->second]) {
            closed[it->second] = 1;
            closure.push_back(it->second);
          }
        }
      }
    }
  }
  return AutomorphismSet(std::move(parent), std::move(images), std::move(gens));
}

Automorphism AutomorphismSet::at(int i) const {
  return Automorphism(parent_, images_[i], false);
}

std::vector<Automorphism> AutomorphismSet::generators() const {
  std::vector<Automorphism> out;
  out.reserve(generator_indices_.size());
  for (int i : generator_indices_) out.push_back(at(i));
  return out;
}

bool AutomorphismSet::contains_image(const std::vector<elem_t>& img) const {
  return std::binary_search(images_.begin(), images_.end(), img);
}

bool AutomorphismSet::equal_sets(const AutomorphismSet& o) const {
  return parent_.same_as(o.parent_) && images_ == o.images_;
}

bool AutomorphismSet::subset_of(const AutomorphismSet& o) const {
  if (!parent_.same_as(o.parent_)) throw ParentMismatch("comparing foreign automorphism sets");
  return std::includes(o.images_.begin(), o.images_.end(), images_.begin(), images_.end());
}

bool AutomorphismSet::is_abelian() const {
  for (size_t i = 0; i < generator_indices_.size(); ++i)
    for (size_t j = i + 1; j < generator_indices_.size(); ++j) {
      const auto& a = images_[generator_indices_[i]];
      const auto& b = images_[generator_indices_[j]];
      if (compose_images(a, b) != compose_images(b, a)) return false;
    }
  return true;
}

Group AutomorphismSet::as_group(std::string label) const {
  if (order() > kDefaultClosureCap)
    throw InvalidParameter("automorphism set too large to materialize as a group");
  ImageIndex pos;
  pos.reserve(images_.size() * 2);
  for (size_t i = 0; i < images_.size(); ++i) pos.emplace(images_[i], static_cast<int>(i));
  auto mul = [&](int i, int j) {
    const auto it = pos.find(compose_images(images_[i], images_[j]));
    if (it == pos.end()) throw Error("automorphism set not closed");
    return it->second;
  };
  return group_from_mult(order(), mul, std::move(label));
}

// ---------------------------------------------------------------------------
// Search engine

namespace {

struct Fingerprint {
  int ord;
  int class_size;
  int square_ord;
  bool operator==(const Fingerprint&) const = default;
};

// (element order, conjugacy class size, order of the square): cheap
// automorphism invariants used to prune candidate images.
std::vector<Fingerprint> fingerprints(const Group& g) {
  const int n = g.order();
  std::vector<int> class_size(n, 0);
  std::vector<int> class_of(n, -1);
  int classes = 0;
  for (int x = 0; x < n; ++x) {
    if (class_of[x] >= 0) continue;
    const int c = classes++;
    int size = 0;
    for (int s = 0; s < n; ++s) {
      const int y = g.conjugate(x, s);
      if (class_of[y] < 0) {
        class_of[y] = c;
        ++size;
      }
    }
    for (int y = 0; y < n; ++y)
      if (class_of[y] == c) class_size[y] = size;
  }
  std::vector<Fingerprint> fp(n);
  for (int x = 0; x < n; ++x)
    fp[x] = {g.elem_order(x), class_size[x], g.elem_order(g.mul(x, x))};
  return fp;
}

// Backtracking state for bijective order-preserving maps src -> dst, grown by
// worklist closure over the partial domain. `dom` doubles as the undo trail.
struct MapSearch {
  const Group& src;
  const Group& dst;
  std::vector<int> img;
  std::vector<char> used;
  std::vector<int> dom;
  long long nodes = 0;
  std::chrono::steady_clock::time_point deadline;

  MapSearch(const Group& s, const Group& d, std::chrono::milliseconds budget)
      : src(s), dst(d), img(s.order(), -1), used(d.order(), 0) {
    img[0] = 0;
    used[0] = 1;
    dom.push_back(0);
    deadline = std::chrono::steady_clock::now() + budget;
  }

  bool define(int e, int v) {
    if (img[e] >= 0) return img[e] == v;
    if (used[v] || src.elem_order(e) != dst.elem_order(v)) return false;
    img[e] = v;
    used[v] = 1;
    dom.push_back(e);
    return true;
  }

  bool close(size_t mark) {
    if ((++nodes & 0x3ff) == 0 && std::chrono::steady_clock::now() > deadline)
      throw Timeout("map search exceeded its time budget");
    for (size_t qi = mark; qi < dom.size(); ++qi) {
      const int e = dom[qi];
      for (size_t fi = 0; fi < dom.size(); ++fi) {
        const int f = dom[fi];
        if (!define(src.mul(e, f), dst.mul(img[e], img[f]))) return false;
        if (!define(src.mul(f, e), dst.mul(img[f], img[e]))) return false;
      }
    }
    return true;
  }

  void undo(size_t mark) {
    while (dom.size() > mark) {
      const int e = dom.back();
      used[img[e]] = 0;
      img[e] = -1;
      dom.pop_back();
    }
  }
};

struct SearchParams {
  const std::vector<int>& gens;
  const std::vector<std::vector<int>>& cands;
  // Extra acceptance predicate on the completed image array (may be null).
  const std::function<bool(const std::vector<int>&)>* accept = nullptr;
  long long result_cap = 1LL << 20;
  bool first_only = false;
};

// Full-map validation is repeated here even though closure enforced it while
// building: accepted maps are the engine's output contract.
bool full_map_valid(const Group& src, const Group& dst, const std::vector<int>& img) {
  const int n = src.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (img[src.mul(x, y)] != dst.mul(img[x], img[y])) return false;
  return true;
}

bool run_search(MapSearch& ms, const SearchParams& params, size_t depth,
                std::vector<std::vector<elem_t>>& out) {
  if (depth == params.gens.size()) {
    if (static_cast<int>(ms.dom.size()) != ms.src.order())
      throw Error("generating sequence failed to define a full map");
    if (!full_map_valid(ms.src, ms.dst, ms.img)) throw Error("closure produced a non-map");
    if (params.accept && !(*params.accept)(ms.img)) return false;
    if (static_cast<long long>(out.size()) >= params.result_cap)
      throw EnumerationCapExceeded(
          "enumeration exceeds cap " + std::to_string(params.result_cap),
          static_cast<long long>(out.size()));
    out.emplace_back(ms.img.begin(), ms.img.end());
    return params.first_only;
  }
  const int g = params.gens[depth];
  for (int y : params.cands[depth]) {
    const size_t mark = ms.dom.size();
    if (ms.define(g, y) && ms.close(mark)) {
      if (run_search(ms, params, depth + 1, out)) return true;
    }
    ms.undo(mark);
  }
  return false;
}

}  // namespace

AutomorphismSet automorphism_group(const Group& g, const AutOptions& opt) {
  if (g.order() > kDefaultClosureCap)
    throw InvalidParameter("group too large for automorphism enumeration");
  const std::vector<int> gens = generating_sequence(g);
  const auto fp = fingerprints(g);
  std::vector<std::vector<int>> cands(gens.size());
  for (size_t i = 0; i < gens.size(); ++i)
    for (int y = 0; y < g.order(); ++y)
      if (fp[y] == fp[gens[i]]) cands[i].push_back(y);

  MapSearch ms(g, g, opt.timeout);
  std::vector<std::vector<elem_t>> found;
  SearchParams params{gens, cands, nullptr, opt.enumeration_cap, false};
  run_search(ms, params, 0, found);
  return AutomorphismSet::from_images(g, std::move(found), false);
}

AutomorphismSet inner_automorphisms(const Group& g) {
  const int n = g.order();
  std::vector<std::vector<elem_t>> maps;
  maps.reserve(n);
  for (int x = 0; x < n; ++x) {
    std::vector<elem_t> img(n);
    for (int a = 0; a < n; ++a) img[a] = static_cast<elem_t>(g.conjugate(a, x));
    maps.push_back(std::move(img));
  }
  std::sort(maps.begin(), maps.end());
  maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
  auto set = AutomorphismSet::from_images(g, std::move(maps), true);
  if (set.order() != n / centre(g).size())
    throw Error("inner automorphism count disagrees with |G|/|Z(G)|");
  return set;
}

AutomorphismSet restricted_automorphisms(const AutomorphismSet& a, const Subgroup& m,
                                         const Subgroup& n) {
  const Group& g = a.parent();
  if (!m.parent().same_as(g) || !n.parent().same_as(g))
    throw ParentMismatch("restricting by subgroups of a different group");
  std::vector<std::vector<elem_t>> kept;
  for (const auto& img : a.images()) {
    bool ok = true;
    for (int x = 1; x < g.order() && ok; ++x)
      ok = m.contains(g.mul(g.inv(x), img[x]));
    for (size_t yi = 0; ok && yi < n.elements().size(); ++yi) {
      const int y = n.elements()[yi];
      ok = img[y] == y;
    }
    if (ok) kept.push_back(img);
  }
  return AutomorphismSet::from_images(g, std::move(kept), false);
}

AutomorphismSet central_automorphisms(const Group& g, const AutomorphismSet& aut) {
  return restricted_automorphisms(aut, centre(g), Subgroup::trivial(g));
}

AutomorphismSet absolute_central_automorphisms(const AutomorphismSet& aut,
                                               const Subgroup& l) {
  return restricted_automorphisms(aut, l, Subgroup::trivial(aut.parent()));
}

AutomorphismSet absolute_central_fixing_centre(const Group& g, const AutomorphismSet& aut,
                                               const Subgroup& l) {
  return restricted_automorphisms(aut, l, centre(g));
}

Subgroup absolute_centre(const Group& g, const AutomorphismSet& aut) {
  if (!aut.parent().same_as(g)) throw ParentMismatch("automorphism set of a different group");
  std::vector<bool> fixed(g.order(), true);
  for (int gi : aut.generator_indices()) {
    const auto& img = aut.images()[gi];
    for (int x = 0; x < g.order(); ++x)
      if (img[x] != x) fixed[x] = false;
  }
  return Subgroup::from_members(g, fixed);
}

AutomorphismSet constrained_autl(const Group& g, const Subgroup& l,
                                 const AutOptions& opt) {
  if (!l.parent().same_as(g)) throw ParentMismatch("absolute centre of a different group");
  const std::vector<int> gens = generating_sequence(g);
  std::vector<std::vector<int>> cands(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) {
    for (int le : l.elements()) cands[i].push_back(g.mul(gens[i], le));
    std::sort(cands[i].begin(), cands[i].end());
  }
  auto in_coset_everywhere = [&](const std::vector<int>& img) {
    for (int x = 1; x < g.order(); ++x)
      if (!l.contains(g.mul(g.inv(x), img[x]))) return false;
    return true;
  };
  std::function<bool(const std::vector<int>&)> accept = in_coset_everywhere;
  MapSearch ms(g, g, opt.timeout);
  std::vector<std::vector<elem_t>> found;
  SearchParams params{gens, cands, &accept, opt.enumeration_cap, false};
  run_search(ms, params, 0, found);
  return AutomorphismSet::from_images(g, std::move(found), false);
}

std::optional<std::vector<elem_t>> find_isomorphism(const Group& a, const Group& b,
                                                    const AutOptions& opt) {
  if (a.order() != b.order()) return std::nullopt;
  {
    std::vector<int> oa(a.order()), ob(b.order());
    for (int i = 0; i < a.order(); ++i) oa[i] = a.elem_order(i);
    for (int i = 0; i < b.order(); ++i) ob[i] = b.elem_order(i);
    std::sort(oa.begin(), oa.end());
    std::sort(ob.begin(), ob.end());
    if (oa != ob) return std::nullopt;
  }
  const std::vector<int> gens = generating_sequence(a);
  const auto fpa = fingerprints(a);
  const auto fpb = fingerprints(b);
  std::vector<std::vector<int>> cands(gens.size());
  for (size_t i = 0; i < gens.size(); ++i)
    for (int y = 0; y < b.order(); ++y)
      if (fpb[y] == fpa[gens[i]]) cands[i].push_back(y);

  MapSearch ms(a, b, opt.timeout);
  std::vector<std::vector<elem_t>> found;
  SearchParams params{gens, cands, nullptr, 1LL << 40, true};
  run_search(ms, params, 0, found);
  if (found.empty()) return std::nullopt;
  return found.front();
}

}  // namespace autl
