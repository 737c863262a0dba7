#pragma once

#include <string>
#include <vector>

#include "autl/group.hpp"

namespace autl {

/// Invariant-factor form of a finite abelian group: a divisor chain
/// d_1 | d_2 | ... | d_k with every d_i >= 2. Empty for the trivial group.
class AbelianInvariants {
 public:
  AbelianInvariants() = default;
  explicit AbelianInvariants(std::vector<long long> factors);
  AbelianInvariants(std::initializer_list<long long> factors)
      : AbelianInvariants(std::vector<long long>(factors)) {}

  const std::vector<long long>& factors() const { return factors_; }
  long long group_order() const;
  int count() const { return static_cast<int>(factors_.size()); }
  bool trivial() const { return factors_.empty(); }
  long long exponent() const { return factors_.empty() ? 1 : factors_.back(); }

  bool operator==(const AbelianInvariants&) const = default;
  /// "C2 x C4" style; "1" for the trivial group.
  std::string to_string() const;

 private:
  std::vector<long long> factors_;
};

/// Divisor-chain normalization of a direct sum of cyclic groups of the given
/// orders (1-entries are dropped; primary parts are merged largest-with-largest).
AbelianInvariants invariants_from_cyclic_orders(const std::vector<long long>& orders);

/// Invariant factors computed per prime by counting solutions of x^{p^k} = 1.
/// Throws NotAbelian.
AbelianInvariants abelian_invariants(const Group& a);
AbelianInvariants abelian_invariants(const Subgroup& a);

/// Number of invariant factors; defined for abelian p-groups (0 for the
/// trivial group). Throws NotAbelian / NotPGroup.
int rank(const AbelianInvariants& inv);
int rank(const Group& a);
int rank(const Subgroup& a);

/// |Hom(A,B)| = prod_{i,j} gcd(d_i, e_j) for abelian A, B.
unsigned long long hom_order(const AbelianInvariants& a, const AbelianInvariants& b);

/// Invariant factors of Hom(A,B): the chain normalization of the multiset
/// {gcd(d_i, e_j)}.
AbelianInvariants hom_invariants(const AbelianInvariants& a, const AbelianInvariants& b);

struct HomDescriptor {
  AbelianInvariants source_invariants;
  AbelianInvariants target_invariants;
  AbelianInvariants hom_invariants;
  unsigned long long hom_order = 1;
};
HomDescriptor hom_describe(const AbelianInvariants& a, const AbelianInvariants& b);

inline constexpr long long kDefaultOracleCap = 1LL << 16;

/// Every homomorphism a -> b, as image arrays over a's element indices.
/// Enumerates image assignments for a greedy generating sequence of `a` and
/// closes each consistent assignment; results are lexicographically sorted.
/// Requires a or b abelian. Throws OracleCapExceeded when the candidate
/// assignment count exceeds `cap`.
std::vector<std::vector<int>> brute_force_homs(const Group& a, const Group& b,
                                               long long cap = kDefaultOracleCap);

/// The homomorphism group Hom(a,b) (b abelian) under pointwise product.
Group hom_group(const Group& a, const Group& b, long long cap = kDefaultOracleCap);

}  // namespace autl
