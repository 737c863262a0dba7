#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "autl/group.hpp"

namespace autl {

/// A bijective homomorphism of a group onto itself, stored as the image array
/// over element indices. img[0] = 0 always.
class Automorphism {
 public:
  /// Validates the map unless told otherwise; throws InvalidParameter with the
  /// defect description.
  Automorphism(Group parent, std::vector<elem_t> img, bool validate = true);
  static Automorphism identity(const Group& g);

  const Group& parent() const { return parent_; }
  int of(int x) const { return img_[x]; }
  int degree() const { return static_cast<int>(img_.size()); }
  bool is_identity() const;
  const std::vector<elem_t>& images() const { return img_; }

  /// (this . other)(x) = this(other(x))
  Automorphism compose(const Automorphism& other) const;
  Automorphism inverse() const;

  bool operator==(const Automorphism& o) const { return img_ == o.img_; }

  /// Reason the image array fails to be an automorphism, or nullopt.
  static std::optional<std::string> defect(const Group& g, const std::vector<elem_t>& img);

 private:
  Group parent_;
  std::vector<elem_t> img_;
};

/// g^{-1} * alpha(g)
int autocommutator(const Group& g, int x, const Automorphism& alpha);

/// A subgroup of Aut(G) materialized as the canonically sorted list of image
/// arrays. Construction verifies closure by recomputing a generating sublist
/// and checking that it generates exactly the stored elements.
class AutomorphismSet {
 public:
  static AutomorphismSet from_images(Group parent, std::vector<std::vector<elem_t>> images,
                                     bool validate_maps);

  const Group& parent() const { return parent_; }
  int order() const { return static_cast<int>(images_.size()); }
  const std::vector<std::vector<elem_t>>& images() const { return images_; }
  Automorphism at(int i) const;
  /// Indices into images() of a generating sublist (empty for the trivial set).
  const std::vector<int>& generator_indices() const { return generator_indices_; }
  std::vector<Automorphism> generators() const;

  bool contains_image(const std::vector<elem_t>& img) const;
  bool equal_sets(const AutomorphismSet& o) const;
  bool subset_of(const AutomorphismSet& o) const;
  /// All generators commute pairwise (hence the set is an abelian group).
  bool is_abelian() const;
  /// The set as an abstract Group under composition.
  Group as_group(std::string label) const;

 private:
  AutomorphismSet(Group parent, std::vector<std::vector<elem_t>> images,
                  std::vector<int> gen_indices);
  Group parent_;
  std::vector<std::vector<elem_t>> images_;
  std::vector<int> generator_indices_;
};

struct AutOptions {
  long long enumeration_cap = 1LL << 20;
  std::chrono::milliseconds timeout{30000};
};

/// Full automorphism group by pruned backtracking over images of a greedy
/// generating sequence. Candidate images share the generator's conjugacy
/// fingerprint (element order, class size, order of the square); partial maps
/// are closed by a worklist and abandoned on the first conflict.
/// Throws EnumerationCapExceeded (carrying the partial count) and Timeout.
AutomorphismSet automorphism_group(const Group& g, const AutOptions& opt = {});

/// Conjugation maps, deduplicated; |Inn(G)| = |G| / |Z(G)|.
AutomorphismSet inner_automorphisms(const Group& g);

/// {alpha in A : x^{-1} alpha(x) in M for all x, alpha fixes N elementwise}.
AutomorphismSet restricted_automorphisms(const AutomorphismSet& a, const Subgroup& m,
                                         const Subgroup& n);

/// x^{-1} alpha(x) in Z(G) for all x.
AutomorphismSet central_automorphisms(const Group& g, const AutomorphismSet& aut);
/// x^{-1} alpha(x) in L for all x (L = absolute centre).
AutomorphismSet absolute_central_automorphisms(const AutomorphismSet& aut, const Subgroup& l);
/// Absolute central automorphisms that also fix the centre elementwise.
AutomorphismSet absolute_central_fixing_centre(const Group& g, const AutomorphismSet& aut,
                                               const Subgroup& l);

/// Elements fixed by every automorphism (it suffices to intersect the fixed
/// points of the generators).
Subgroup absolute_centre(const Group& g, const AutomorphismSet& aut);

/// Second route to the absolute central automorphisms that never enumerates
/// Aut(G): images of each generator range over its coset modulo L only.
AutomorphismSet constrained_autl(const Group& g, const Subgroup& l,
                                 const AutOptions& opt = {});

/// First isomorphism a -> b found by the same backtracking engine, or nullopt.
std::optional<std::vector<elem_t>> find_isomorphism(const Group& a, const Group& b,
                                                    const AutOptions& opt = {});

}  // namespace autl
