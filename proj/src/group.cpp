#include "autl/group.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

namespace autl {

struct Group::Data {
  int n = 0;
  std::vector<elem_t> table;       // n*n, row-major
  std::vector<elem_t> inverse;     // n
  std::vector<elem_t> elem_order;  // n
  bool abelian = false;
  std::string label;
  std::vector<int> gen_hint;
};

Group::Group(std::shared_ptr<const Data> data) : data_(std::move(data)) {
  n_ = data_->n;
  table_ = data_->table.data();
  inverse_ = data_->inverse.data();
  elem_order_ = data_->elem_order.data();
  abelian_ = data_->abelian;
}

const std::string& Group::label() const { return data_->label; }
const std::vector<int>& Group::gen_hint() const { return data_->gen_hint; }
const std::vector<elem_t>& Group::table_flat() const { return data_->table; }

int Group::power(int a, long long e) const {
  const int ord = elem_order(a);
  long long r = e % ord;
  if (r < 0) r += ord;
  int acc = 0;
  for (long long i = 0; i < r; ++i) acc = mul(acc, a);
  return acc;
}

namespace {

// xorshift64; fixed seeding keeps the sampled associativity check and hence
// every ingest diagnostic deterministic.
struct SplitMix {
  std::uint64_t s;
  std::uint64_t next() {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

[[noreturn]] void table_fail(const std::string& label, const std::string& what) {
  throw InvalidGroupTable("group '" + label + "': " + what);
}

}  // namespace

Group Group::from_table(const std::vector<std::vector<int>>& table,
                        std::string label, std::vector<int> gen_hint) {
  const size_t n = table.size();
  if (n == 0) table_fail(label, "empty table");
  if (n > static_cast<size_t>(kDefaultClosureCap))
    table_fail(label, "order exceeds the supported cap " +
                          std::to_string(kDefaultClosureCap));
  auto data = std::make_shared<Data>();
  data->n = static_cast<int>(n);
  data->label = std::move(label);
  data->gen_hint = std::move(gen_hint);
  data->table.resize(n * n);
  for (size_t i = 0; i < n; ++i) {
    if (table[i].size() != n)
      table_fail(data->label, "row " + std::to_string(i) + " has wrong length");
    for (size_t j = 0; j < n; ++j) {
      const int v = table[i][j];
      if (v < 0 || static_cast<size_t>(v) >= n)
        table_fail(data->label, "entry (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") out of range");
      data->table[i * n + j] = static_cast<elem_t>(v);
    }
  }
  const auto at = [&](size_t i, size_t j) -> int { return data->table[i * n + j]; };

  // Identity at index 0.
  for (size_t i = 0; i < n; ++i) {
    if (at(0, i) != static_cast<int>(i) || at(i, 0) != static_cast<int>(i))
      table_fail(data->label, "index 0 is not a two-sided identity (element " +
                                  std::to_string(i) + ")");
  }

  // Latin-square rows and columns (cancellation).
  {
    std::vector<bool> seen(n);
    for (size_t i = 0; i < n; ++i) {
      std::fill(seen.begin(), seen.end(), false);
      for (size_t j = 0; j < n; ++j) {
        if (seen[at(i, j)])
          table_fail(data->label, "row " + std::to_string(i) + " repeats element " +
                                      std::to_string(at(i, j)));
        seen[at(i, j)] = true;
      }
      std::fill(seen.begin(), seen.end(), false);
      for (size_t j = 0; j < n; ++j) {
        if (seen[at(j, i)])
          table_fail(data->label, "column " + std::to_string(i) +
                                      " repeats element " + std::to_string(at(j, i)));
        seen[at(j, i)] = true;
      }
    }
  }

  // Two-sided inverses.
  data->inverse.resize(n);
  for (size_t i = 0; i < n; ++i) {
    bool found = false;
    for (size_t j = 0; j < n; ++j) {
      if (at(i, j) == 0 && at(j, i) == 0) {
        data->inverse[i] = static_cast<elem_t>(j);
        found = true;
        break;
      }
    }
    if (!found)
      table_fail(data->label, "element " + std::to_string(i) + " has no two-sided inverse");
  }

  // Associativity: full up to 256, 10*n^2 fixed-seed random triples above.
  const auto check_triple = [&](size_t i, size_t j, size_t k) {
    if (at(at(i, j), k) != at(i, at(j, k)))
      table_fail(data->label, "associativity fails at (" + std::to_string(i) + "," +
                                  std::to_string(j) + "," + std::to_string(k) + ")");
  };
  if (n <= 256) {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k) check_triple(i, j, k);
  } else {
    SplitMix rng{0x5eedc0de ^ (static_cast<std::uint64_t>(n) << 20)};
    for (size_t t = 0; t < 10 * n * n; ++t) {
      check_triple(rng.next() % n, rng.next() % n, rng.next() % n);
    }
  }

  // Element orders; each must divide |G|.
  data->elem_order.resize(n);
  for (size_t i = 0; i < n; ++i) {
    int x = static_cast<int>(i);
    int ord = 1;
    while (x != 0) {
      x = at(x, i);
      ++ord;
      if (static_cast<size_t>(ord) > n)
        table_fail(data->label, "element " + std::to_string(i) + " has no finite order");
    }
    if (n % ord != 0)
      table_fail(data->label, "order of element " + std::to_string(i) +
                                  " does not divide the group order");
    data->elem_order[i] = static_cast<elem_t>(ord);
  }

  data->abelian = true;
  for (size_t i = 1; i < n && data->abelian; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (at(i, j) != at(j, i)) {
        data->abelian = false;
        break;
      }

  return Group(std::move(data));
}

Group group_from_permutations(int degree,
                              const std::vector<std::vector<int>>& generators,
                              std::string label, int closure_cap) {
  if (degree <= 0) throw InvalidPermutation("degree must be positive");
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != degree)
      throw InvalidPermutation("generator has wrong degree");
    std::vector<bool> seen(degree, false);
    for (int v : g) {
      if (v < 0 || v >= degree || seen[v])
        throw InvalidPermutation("generator is not a permutation of {0.." +
                                 std::to_string(degree - 1) + "}");
      seen[v] = true;
    }
  }

  std::vector<int> identity(degree);
  std::iota(identity.begin(), identity.end(), 0);

  // BFS closure from the identity; element 0 is the identity by construction.
  std::vector<std::vector<int>> elems{identity};
  std::map<std::vector<int>, int> index{{identity, 0}};
  std::vector<int> gen_index(generators.size(), -1);
  for (size_t q = 0; q < elems.size(); ++q) {
    const std::vector<int> cur = elems[q];
    for (size_t gi = 0; gi < generators.size(); ++gi) {
      std::vector<int> prod(degree);
      for (int x = 0; x < degree; ++x) prod[x] = cur[generators[gi][x]];
      auto [it, inserted] = index.emplace(prod, static_cast<int>(elems.size()));
      if (inserted) {
        if (static_cast<int>(elems.size()) >= closure_cap)
          throw ClosureCapExceeded("permutation closure exceeds cap " +
                                   std::to_string(closure_cap));
        elems.push_back(std::move(prod));
      }
    }
  }
  for (size_t gi = 0; gi < generators.size(); ++gi)
    gen_index[gi] = index.at(generators[gi]);

  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> prod(degree);
      for (int x = 0; x < degree; ++x) prod[x] = elems[i][elems[j][x]];
      table[i][j] = index.at(prod);
    }

  if (label.empty()) label = "perm" + std::to_string(n);
  return Group::from_table(table, std::move(label), std::move(gen_index));
}

Group group_from_mult(int size, const std::function<int(int, int)>& mul,
                      std::string label, std::vector<int>* orig_index) {
  if (size <= 0) throw InvalidParameter("group_from_mult: size must be positive");
  int identity = -1;
  for (int e = 0; e < size && identity < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < size && ok; ++x)
      ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) identity = e;
  }
  if (identity < 0) throw InvalidGroupTable("group_from_mult: no identity element");

  // Re-index so the identity sits at 0 and everything else keeps its order.
  std::vector<int> to_new(size);
  std::vector<int> to_old(size);
  to_new[identity] = 0;
  to_old[0] = identity;
  int next = 1;
  for (int x = 0; x < size; ++x) {
    if (x == identity) continue;
    to_new[x] = next;
    to_old[next] = x;
    ++next;
  }
  std::vector<std::vector<int>> table(size, std::vector<int>(size));
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) {
      const int p = mul(to_old[i], to_old[j]);
      if (p < 0 || p >= size)
        throw InvalidGroupTable("group_from_mult: product out of range");
      table[i][j] = to_new[p];
    }
  if (orig_index) *orig_index = to_new;
  return Group::from_table(table, std::move(label));
}

// ---------------------------------------------------------------------------
// Subgroup

namespace {

// Worklist closure of a seed set under the parent product. Inverses come for
// free in a finite group (x^{-1} = x^{ord-1}).
void close_under_product(const Group& g, std::vector<bool>& members,
                         std::vector<int>& elems) {
  for (size_t q = 0; q < elems.size(); ++q) {
    const int a = elems[q];
    for (size_t i = 0; i < elems.size(); ++i) {
      const int b = elems[i];
      for (int p : {g.mul(a, b), g.mul(b, a)}) {
        if (!members[p]) {
          members[p] = true;
          elems.push_back(p);
        }
      }
    }
  }
  std::sort(elems.begin(), elems.end());
}

}  // namespace

Subgroup::Subgroup(Group parent, std::vector<bool> members, std::vector<int> elements)
    : parent_(std::move(parent)),
      members_(std::move(members)),
      elements_(std::move(elements)) {}

Subgroup Subgroup::trivial(const Group& g) {
  std::vector<bool> m(g.order(), false);
  m[0] = true;
  return Subgroup(g, std::move(m), {0});
}

Subgroup Subgroup::whole(const Group& g) {
  std::vector<bool> m(g.order(), true);
  std::vector<int> e(g.order());
  std::iota(e.begin(), e.end(), 0);
  return Subgroup(g, std::move(m), std::move(e));
}

Subgroup Subgroup::from_members(const Group& g, const std::vector<bool>& members) {
  if (static_cast<int>(members.size()) != g.order())
    throw InvalidParameter("subgroup bitset has wrong length");
  if (!members[0]) throw InvalidGroupTable("subgroup does not contain the identity");
  std::vector<int> elems;
  for (int i = 0; i < g.order(); ++i)
    if (members[i]) elems.push_back(i);
  for (int a : elems) {
    if (!members[g.inv(a)])
      throw InvalidGroupTable("subgroup not closed under inverse at element " +
                              std::to_string(a));
    for (int b : elems)
      if (!members[g.mul(a, b)])
        throw InvalidGroupTable("subgroup not closed under product at (" +
                                std::to_string(a) + "," + std::to_string(b) + ")");
  }
  if (g.order() % static_cast<int>(elems.size()) != 0)
    throw InvalidGroupTable("subgroup size does not divide the group order");
  return Subgroup(g, members, std::move(elems));
}

Subgroup Subgroup::generated_by(const Group& g, const std::vector<int>& seeds) {
  std::vector<bool> members(g.order(), false);
  std::vector<int> elems{0};
  members[0] = true;
  for (int s : seeds) {
    if (s < 0 || s >= g.order()) throw InvalidParameter("generator index out of range");
    if (!members[s]) {
      members[s] = true;
      elems.push_back(s);
    }
  }
  close_under_product(g, members, elems);
  return from_members(g, members);
}

bool Subgroup::equals(const Subgroup& o) const {
  return parent_.same_as(o.parent_) && members_ == o.members_;
}

bool Subgroup::contains_all(const Subgroup& o) const {
  if (!parent_.same_as(o.parent_)) throw ParentMismatch("subgroups of different groups");
  for (int x : o.elements_)
    if (!members_[x]) return false;
  return true;
}

bool Subgroup::is_normal() const {
  for (int x = 0; x < parent_.order(); ++x)
    for (int a : elements_)
      if (!members_[parent_.conjugate(a, x)]) return false;
  return true;
}

bool Subgroup::is_central() const {
  for (int a : elements_)
    for (int x = 0; x < parent_.order(); ++x)
      if (parent_.mul(a, x) != parent_.mul(x, a)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Structural operations

Subgroup centre(const Group& g) {
  std::vector<bool> m(g.order(), false);
  for (int z = 0; z < g.order(); ++z) {
    bool central = true;
    for (int x = 0; x < g.order() && central; ++x)
      central = g.mul(z, x) == g.mul(x, z);
    m[z] = central;
  }
  return Subgroup::from_members(g, m);
}

Subgroup derived_subgroup(const Group& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<int> seeds;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) {
      const int c = g.commutator(a, b);
      if (!seen[c]) {
        seen[c] = true;
        seeds.push_back(c);
      }
    }
  return Subgroup::generated_by(g, seeds);
}

Subgroup power_subgroup(const Group& g, int m) {
  if (m <= 0) throw InvalidParameter("power_subgroup: m must be positive");
  std::vector<bool> seen(g.order(), false);
  std::vector<int> seeds;
  for (int x = 0; x < g.order(); ++x) {
    const int p = g.power(x, m);
    if (!seen[p]) {
      seen[p] = true;
      seeds.push_back(p);
    }
  }
  return Subgroup::generated_by(g, seeds);
}

Subgroup subgroup_join(const Subgroup& a, const Subgroup& b) {
  if (!a.parent().same_as(b.parent()))
    throw ParentMismatch("subgroup_join: operands have different parents");
  std::vector<int> seeds = a.elements();
  seeds.insert(seeds.end(), b.elements().begin(), b.elements().end());
  return Subgroup::generated_by(a.parent(), seeds);
}

QuotientMap::QuotientMap(Group source, Subgroup kernel, Group image,
                         std::vector<int> projection)
    : source_(std::move(source)),
      kernel_(std::move(kernel)),
      image_(std::move(image)),
      projection_(std::move(projection)) {}

QuotientMap quotient_group(const Group& g, const Subgroup& n) {
  if (!n.parent().same_as(g)) throw ParentMismatch("quotient by a foreign subgroup");
  if (!n.is_normal()) throw NotNormal("quotient by a non-normal subgroup");

  const int order = g.order();
  // Cosets labeled in order of first appearance; the identity coset contains 0,
  // so the image identity is index 0.
  std::vector<int> coset(order, -1);
  std::vector<int> reps;
  for (int x = 0; x < order; ++x) {
    if (coset[x] >= 0) continue;
    const int c = static_cast<int>(reps.size());
    for (int k : n.elements()) coset[g.mul(x, k)] = c;
    reps.push_back(x);
  }
  const int q = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(q, std::vector<int>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) table[i][j] = coset[g.mul(reps[i], reps[j])];
  Group image = Group::from_table(table, g.label() + "/N" + std::to_string(n.size()));

  // Projection must be a surjective homomorphism with kernel N.
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j)
      if (coset[g.mul(i, j)] != image.mul(coset[i], coset[j]))
        throw InvalidGroupTable("quotient projection is not a homomorphism");
  if (q * n.size() != order)
    throw InvalidGroupTable("quotient order mismatch");
  return QuotientMap(g, n, std::move(image), std::move(coset));
}

int exponent(const Group& g) {
  long long e = 1;
  for (int i = 0; i < g.order(); ++i) e = std::lcm(e, (long long)g.elem_order(i));
  return static_cast<int>(e);
}

int exponent(const Subgroup& s) {
  long long e = 1;
  for (int i : s.elements()) e = std::lcm(e, (long long)s.parent().elem_order(i));
  return static_cast<int>(e);
}

std::optional<int> is_p_group(const Group& g) {
  int n = g.order();
  if (n == 1) return std::nullopt;
  int p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (n % p != 0) p = n;  // n itself prime
  while (n % p == 0) n /= p;
  if (n != 1) return std::nullopt;
  return p;
}

int nilpotency_class(const Group& g) {
  if (g.order() == 1) return 0;
  Subgroup gamma = Subgroup::whole(g);
  int cls = 0;
  while (gamma.size() > 1) {
    // gamma_{k+1} = [gamma_k, G]
    std::vector<bool> seen(g.order(), false);
    std::vector<int> seeds;
    for (int a : gamma.elements())
      for (int b = 0; b < g.order(); ++b) {
        const int c = g.commutator(a, b);
        if (!seen[c]) {
          seen[c] = true;
          seeds.push_back(c);
        }
      }
    Subgroup next = Subgroup::generated_by(g, seeds);
    if (next.size() == gamma.size())
      throw NotNilpotent("lower central series stabilizes at order " +
                         std::to_string(gamma.size()));
    gamma = std::move(next);
    ++cls;
  }
  return cls;
}

bool is_cyclic(const Subgroup& s) {
  for (int x : s.elements())
    if (s.parent().elem_order(x) == s.size()) return true;
  return false;
}

bool is_cyclic(const Group& g) {
  for (int x = 0; x < g.order(); ++x)
    if (g.elem_order(x) == g.order()) return true;
  return false;
}

bool is_abelian(const Subgroup& s) {
  const auto& e = s.elements();
  for (size_t i = 0; i < e.size(); ++i)
    for (size_t j = i + 1; j < e.size(); ++j)
      if (s.parent().mul(e[i], e[j]) != s.parent().mul(e[j], e[i])) return false;
  return true;
}

std::vector<int> generating_sequence(const Group& g) {
  const int n = g.order();
  std::vector<int> gens;
  std::vector<bool> cur(n, false);
  cur[0] = true;
  std::vector<int> cur_elems{0};
  while (static_cast<int>(cur_elems.size()) < n) {
    int best = -1;
    size_t best_size = 0;
    std::vector<bool> best_members;
    std::vector<int> best_elems;
    for (int x = 1; x < n; ++x) {
      if (cur[x]) continue;
      std::vector<bool> m = cur;
      std::vector<int> e = cur_elems;
      m[x] = true;
      e.push_back(x);
      close_under_product(g, m, e);
      if (e.size() > best_size) {
        best = x;
        best_size = e.size();
        best_members = std::move(m);
        best_elems = std::move(e);
      }
    }
    gens.push_back(best);
    cur = std::move(best_members);
    cur_elems = std::move(best_elems);
  }
  return gens;
}

}  // namespace autl
