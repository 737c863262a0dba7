#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "autl/errors.hpp"

namespace autl {

/// Element indices are 0-based; the identity is always index 0.
/// Orders are capped at 2048, so indices fit in 16 bits.
using elem_t = std::uint16_t;

inline constexpr int kDefaultClosureCap = 2048;

/// A finite group as a validated Cayley table. Immutable and cheap to copy
/// (copies share the table). Construction verifies the group axioms:
/// identity at index 0, two-sided inverses, Latin-square rows and columns,
/// and associativity (exhaustive up to order 256, 10*n^2 deterministic
/// sampled triples above).
class Group {
 public:
  static Group from_table(const std::vector<std::vector<int>>& table,
                          std::string label = "G",
                          std::vector<int> gen_hint = {});

  int order() const { return n_; }
  int mul(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  int elem_order(int a) const { return elem_order_[a]; }

  /// a^e for any integer e (negative exponents use the inverse).
  int power(int a, long long e) const;

  /// x a x^{-1}
  int conjugate(int a, int x) const { return mul(mul(x, a), inv(x)); }
  /// a^{-1} b^{-1} a b
  int commutator(int a, int b) const {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }

  bool is_abelian() const { return abelian_; }
  const std::string& label() const;
  const std::vector<int>& gen_hint() const;

  /// Identity of the underlying table object, not isomorphism. Subgroups and
  /// quotients use this to detect parent mismatches.
  bool same_as(const Group& o) const { return data_ == o.data_; }

  const std::vector<elem_t>& table_flat() const;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
  // Hot fields mirrored out of Data so mul() needs no extra indirection.
  const elem_t* table_ = nullptr;
  const elem_t* inverse_ = nullptr;
  const elem_t* elem_order_ = nullptr;
  int n_ = 0;
  bool abelian_ = false;

  explicit Group(std::shared_ptr<const Data> data);
};

/// Closes `generators` (permutations of {0..degree-1}) under composition and
/// returns the resulting group, elements indexed in BFS order from the
/// identity. gen_hint records where the input generators landed.
Group group_from_permutations(int degree,
                              const std::vector<std::vector<int>>& generators,
                              std::string label = "",
                              int closure_cap = kDefaultClosureCap);

/// A subgroup as a membership bitset over a parent group. Construction
/// verifies closure under product and inverse, membership of the identity,
/// and Lagrange's divisibility.
class Subgroup {
 public:
  static Subgroup trivial(const Group& g);
  static Subgroup whole(const Group& g);
  static Subgroup from_members(const Group& g, const std::vector<bool>& members);
  static Subgroup generated_by(const Group& g, const std::vector<int>& seeds);

  const Group& parent() const { return parent_; }
  int size() const { return static_cast<int>(elements_.size()); }
  bool contains(int x) const { return members_[x]; }
  const std::vector<bool>& members() const { return members_; }
  /// Ascending element indices.
  const std::vector<int>& elements() const { return elements_; }

  bool equals(const Subgroup& o) const;
  bool contains_all(const Subgroup& o) const;
  bool is_normal() const;
  /// Every member commutes with the whole parent group.
  bool is_central() const;

 private:
  Subgroup(Group parent, std::vector<bool> members, std::vector<int> elements);
  Group parent_;
  std::vector<bool> members_;
  std::vector<int> elements_;
};

/// G -> G/N together with the projection map.
class QuotientMap {
 public:
  const Group& source() const { return source_; }
  const Subgroup& kernel() const { return kernel_; }
  const Group& image() const { return image_; }
  const std::vector<int>& projection() const { return projection_; }
  int project(int x) const { return projection_[x]; }

 private:
  QuotientMap(Group source, Subgroup kernel, Group image, std::vector<int> projection);
  friend QuotientMap quotient_group(const Group&, const Subgroup&);
  Group source_;
  Subgroup kernel_;
  Group image_;
  std::vector<int> projection_;
};

Subgroup centre(const Group& g);
Subgroup derived_subgroup(const Group& g);
/// Subgroup generated by all m-th powers.
Subgroup power_subgroup(const Group& g, int m);
/// Subgroup generated by A and B together. Throws ParentMismatch.
Subgroup subgroup_join(const Subgroup& a, const Subgroup& b);
/// Throws NotNormal if N is not normal in G.
QuotientMap quotient_group(const Group& g, const Subgroup& n);

int exponent(const Group& g);
int exponent(const Subgroup& s);

/// The prime p with |G| = p^k, if there is one. The trivial group has no
/// ambient prime and returns nullopt.
std::optional<int> is_p_group(const Group& g);

/// Length of the lower central series down to the trivial subgroup.
/// Throws NotNilpotent if the series stabilizes early.
int nilpotency_class(const Group& g);

bool is_cyclic(const Subgroup& s);
bool is_cyclic(const Group& g);
bool is_abelian(const Subgroup& s);

/// Greedy generating sequence: each step adds the element whose join with the
/// current subgroup is largest, ties broken by lowest index. Empty for the
/// trivial group.
std::vector<int> generating_sequence(const Group& g);

/// Builds a Group from an abstract finite magma given by `size` and `mul`,
/// which must actually be a group. The identity is located and re-indexed to
/// position 0 (other elements keep their relative order); `orig_index` (if
/// non-null) receives the table position of each original element.
Group group_from_mult(int size, const std::function<int(int, int)>& mul,
                      std::string label, std::vector<int>* orig_index = nullptr);

}  // namespace autl
