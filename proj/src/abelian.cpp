#include "autl/abelian.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace autl {

AbelianInvariants::AbelianInvariants(std::vector<long long> factors)
    : factors_(std::move(factors)) {
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) throw InvalidParameter("invariant factors must be >= 2");
    if (i + 1 < factors_.size() && factors_[i + 1] % factors_[i] != 0)
      throw InvalidParameter("invariant factors must form a divisor chain");
  }
}

long long AbelianInvariants::group_order() const {
  long long p = 1;
  for (long long d : factors_) p *= d;
  return p;
}

std::string AbelianInvariants::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << " x ";
    os << "C" << factors_[i];
  }
  return os.str();
}

namespace {

std::map<long long, int> factorize(long long n) {
  std::map<long long, int> f;
  for (long long p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++f[p];
      n /= p;
    }
  if (n > 1) ++f[n];
  return f;
}

// Merge per-prime exponent partitions (descending) into a divisor chain,
// pairing largest with largest across primes.
AbelianInvariants merge_primary(const std::map<long long, std::vector<int>>& primary) {
  size_t width = 0;
  for (const auto& [p, parts] : primary) width = std::max(width, parts.size());
  std::vector<long long> chain(width, 1);
  for (const auto& [p, parts] : primary)
    for (size_t j = 0; j < parts.size(); ++j) {
      long long q = 1;
      for (int e = 0; e < parts[j]; ++e) q *= p;
      chain[j] *= q;  // chain[0] is the largest factor
    }
  std::reverse(chain.begin(), chain.end());
  return AbelianInvariants(std::move(chain));
}

}  // namespace

AbelianInvariants invariants_from_cyclic_orders(const std::vector<long long>& orders) {
  std::map<long long, std::vector<int>> primary;
  for (long long m : orders) {
    if (m < 1) throw InvalidParameter("cyclic order must be positive");
    for (const auto& [p, e] : factorize(m)) primary[p].push_back(e);
  }
  for (auto& [p, parts] : primary)
    std::sort(parts.begin(), parts.end(), std::greater<>());
  return merge_primary(primary);
}

namespace {

// Shared implementation over an element-order multiset of an abelian group.
AbelianInvariants invariants_from_element_orders(const std::vector<int>& orders,
                                                 const std::string& label) {
  const long long n = static_cast<long long>(orders.size());
  std::map<long long, std::vector<int>> primary;
  for (const auto& [p, e] : factorize(n)) {
    // c_k = log_p #{x : x^{p^k} = 1}; the partition conjugate to the
    // differences c_k - c_{k-1} is the p-primary type.
    std::vector<int> cs{0};
    long long pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      long long count = 0;
      for (int o : orders)
        if (pk % o == 0) ++count;
      int c = 0;
      long long rest = count;
      while (rest % p == 0) {
        rest /= p;
        ++c;
      }
      if (rest != 1)
        throw NotAbelian("group '" + label + "': power-solution count " +
                         std::to_string(count) + " is not a power of " +
                         std::to_string(p));
      cs.push_back(c);
    }
    std::vector<int> parts;  // descending
    for (int k = 1; k <= e; ++k) {
      const int geq_k = cs[k] - cs[k - 1];
      const int geq_k1 = (k < e) ? cs[k + 1] - cs[k] : 0;
      for (int t = 0; t < geq_k - geq_k1; ++t) parts.push_back(k);
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    if (!parts.empty()) primary[p] = std::move(parts);
  }
  return merge_primary(primary);
}

}  // namespace

AbelianInvariants abelian_invariants(const Group& a) {
  if (!a.is_abelian()) throw NotAbelian("group '" + a.label() + "' is not abelian");
  std::vector<int> orders(a.order());
  for (int i = 0; i < a.order(); ++i) orders[i] = a.elem_order(i);
  return invariants_from_element_orders(orders, a.label());
}

AbelianInvariants abelian_invariants(const Subgroup& a) {
  if (!is_abelian(a))
    throw NotAbelian("subgroup of '" + a.parent().label() + "' is not abelian");
  std::vector<int> orders;
  orders.reserve(a.size());
  for (int x : a.elements()) orders.push_back(a.parent().elem_order(x));
  return invariants_from_element_orders(orders, a.parent().label() + "-subgroup");
}

int rank(const AbelianInvariants& inv) {
  if (inv.trivial()) return 0;
  if (factorize(inv.group_order()).size() != 1)
    throw NotPGroup("rank is defined for abelian p-groups only, got " + inv.to_string());
  return inv.count();
}

int rank(const Group& a) { return rank(abelian_invariants(a)); }
int rank(const Subgroup& a) { return rank(abelian_invariants(a)); }

unsigned long long hom_order(const AbelianInvariants& a, const AbelianInvariants& b) {
  unsigned long long total = 1;
  for (long long d : a.factors())
    for (long long e : b.factors()) {
      const unsigned long long g = std::gcd(d, e);
      if (total > ~0ULL / g) throw Error("hom_order overflows 64 bits");
      total *= g;
    }
  return total;
}

AbelianInvariants hom_invariants(const AbelianInvariants& a, const AbelianInvariants& b) {
  std::vector<long long> gcds;
  for (long long d : a.factors())
    for (long long e : b.factors()) {
      const long long g = std::gcd(d, e);
      if (g > 1) gcds.push_back(g);
    }
  return invariants_from_cyclic_orders(gcds);
}

HomDescriptor hom_describe(const AbelianInvariants& a, const AbelianInvariants& b) {
  HomDescriptor d;
  d.source_invariants = a;
  d.target_invariants = b;
  d.hom_invariants = hom_invariants(a, b);
  d.hom_order = hom_order(a, b);
  if (static_cast<unsigned long long>(d.hom_invariants.group_order()) != d.hom_order)
    throw Error("hom invariants disagree with hom order");
  return d;
}

// ---------------------------------------------------------------------------
// Enumeration of Hom(a, b)

namespace {

// Partial homomorphism a -> b grown by worklist closure. `dom` doubles as the
// undo trail.
struct PartialHom {
  const Group& a;
  const Group& b;
  std::vector<int> img;
  std::vector<int> dom;

  PartialHom(const Group& a_, const Group& b_) : a(a_), b(b_), img(a_.order(), -1) {
    img[0] = 0;
    dom.push_back(0);
  }

  bool define(int e, int v) {
    if (img[e] >= 0) return img[e] == v;
    if (a.elem_order(e) % b.elem_order(v) != 0) return false;
    img[e] = v;
    dom.push_back(e);
    return true;
  }

  // Close products involving elements defined at or after `mark`.
  bool close(size_t mark) {
    for (size_t qi = mark; qi < dom.size(); ++qi) {
      const int e = dom[qi];
      for (size_t fi = 0; fi < dom.size(); ++fi) {
        const int f = dom[fi];
        if (!define(a.mul(e, f), b.mul(img[e], img[f]))) return false;
        if (!define(a.mul(f, e), b.mul(img[f], img[e]))) return false;
      }
    }
    return true;
  }

  void undo(size_t mark) {
    while (dom.size() > mark) {
      img[dom.back()] = -1;
      dom.pop_back();
    }
  }
};

void hom_search(PartialHom& pm, const std::vector<int>& gens,
                const std::vector<std::vector<int>>& cands, size_t depth,
                std::vector<std::vector<int>>& out) {
  if (depth == gens.size()) {
    // gens generate a, so the closure defined everything
    out.push_back(pm.img);
    return;
  }
  const int g = gens[depth];
  for (int y : cands[depth]) {
    const size_t mark = pm.dom.size();
    if (pm.define(g, y) && pm.close(mark)) hom_search(pm, gens, cands, depth + 1, out);
    pm.undo(mark);
  }
}

}  // namespace

std::vector<std::vector<int>> brute_force_homs(const Group& a, const Group& b,
                                               long long cap) {
  if (!a.is_abelian() && !b.is_abelian())
    throw InvalidParameter("brute_force_homs: need an abelian source or target");
  const std::vector<int> gens = generating_sequence(a);
  std::vector<std::vector<int>> cands(gens.size());
  long long combos = 1;
  for (size_t i = 0; i < gens.size(); ++i) {
    for (int y = 0; y < b.order(); ++y)
      if (a.elem_order(gens[i]) % b.elem_order(y) == 0) cands[i].push_back(y);
    combos *= static_cast<long long>(cands[i].size());
    if (combos > cap)
      throw OracleCapExceeded("hom enumeration needs " + std::to_string(combos) +
                              " candidate maps, cap is " + std::to_string(cap));
  }
  std::vector<std::vector<int>> out;
  PartialHom pm(a, b);
  hom_search(pm, gens, cands, 0, out);

  // Closure defined every map on all of `a`; re-verify the product rule in full.
  for (const auto& img : out)
    for (int x = 0; x < a.order(); ++x)
      for (int y = 0; y < a.order(); ++y)
        if (img[a.mul(x, y)] != b.mul(img[x], img[y]))
          throw Error("enumerated map is not a homomorphism");
  std::sort(out.begin(), out.end());
  return out;
}

Group hom_group(const Group& a, const Group& b, long long cap) {
  if (!b.is_abelian()) throw NotAbelian("hom_group: target must be abelian");
  const auto homs = brute_force_homs(a, b, cap);
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < homs.size(); ++i) index[homs[i]] = static_cast<int>(i);
  auto mul = [&](int i, int j) {
    std::vector<int> prod(a.order());
    for (int x = 0; x < a.order(); ++x) prod[x] = b.mul(homs[i][x], homs[j][x]);
    const auto it = index.find(prod);
    if (it == index.end()) throw Error("hom set not closed under pointwise product");
    return it->second;
  };
  return group_from_mult(static_cast<int>(homs.size()), mul,
                         "Hom(" + a.label() + "," + b.label() + ")");
}

}  // namespace autl
