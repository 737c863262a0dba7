#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>

#include "autl/abelian.hpp"
#include "autl/aut.hpp"
#include "autl/constructions.hpp"
#include "oracles.hpp"

using namespace autl;

namespace {

Automorphism conjugation_by(const Group& g, int x) {
  std::vector<elem_t> img(g.order());
  for (int a = 0; a < g.order(); ++a) img[a] = static_cast<elem_t>(g.conjugate(a, x));
  return Automorphism(g, std::move(img));
}

}  // namespace

TEST_CASE("automorphism group sizes match the exhaustive permutation scan") {
  // oracle: all (n-1)! bijections fixing the identity, n <= 8
  const std::vector<std::pair<const char*, size_t>> expect = {
      {"C2", 1}, {"C4", 2}, {"C2xC2", 6}, {"C6", 2}, {"D6", 6}, {"C8", 4},
      {"Q8", 24}, {"D8", 8},
  };
  for (const auto& [name, count] : expect) {
    Group g = *builtin_group(name);
    CHECK(oracle::all_automorphisms(g).size() == count);
    AutomorphismSet aut = automorphism_group(g);
    CHECK(static_cast<size_t>(aut.order()) == count);
    // identical element sets, not just counts
    std::vector<std::vector<elem_t>> scan;
    for (const auto& m : oracle::all_automorphisms(g)) scan.emplace_back(m.begin(), m.end());
    std::sort(scan.begin(), scan.end());
    CHECK(aut.images() == scan);
  }
}

TEST_CASE("automorphism groups of larger corpus members") {
  CHECK(automorphism_group(dihedral(16)).order() == 32);  // Hol(C8)
  CHECK(automorphism_group(heisenberg(3)).order() == 432);
  CHECK(automorphism_group(*builtin_group("C2xC2xC2")).order() == 168);  // |GL(3,2)|
  CHECK(automorphism_group(*builtin_group("C2xC2xC2xC2")).order() == 20160);  // |GL(4,2)|
}

TEST_CASE("absolute centre") {
  Group c2 = cyclic(2);
  CHECK(absolute_centre(c2, automorphism_group(c2)).size() == 2);
  Group q8 = generalized_quaternion(8);
  Subgroup l = absolute_centre(q8, automorphism_group(q8));
  CHECK(l.size() == 2);
  CHECK(l.equals(centre(q8)));
  Group h = heisenberg(3);
  CHECK(absolute_centre(h, automorphism_group(h)).size() == 1);
  Group c4 = cyclic(4);
  CHECK(absolute_centre(c4, automorphism_group(c4)).size() == 2);
}

TEST_CASE("autocommutator") {
  Group q8 = generalized_quaternion(8);
  const Automorphism id = Automorphism::identity(q8);
  for (int g = 0; g < q8.order(); ++g) CHECK(autocommutator(q8, g, id) == 0);
  // conjugation by b sends a to a^{-1}; [a, conj_b] = a^{-2} = a^2, the unique
  // involution
  const Automorphism cb = conjugation_by(q8, 4);
  CHECK(autocommutator(q8, 1, cb) == 2);
  CHECK(q8.elem_order(2) == 2);
  CHECK(autocommutator(q8, 2, cb) == 0);  // the involution is fixed
}

TEST_CASE("inner automorphisms") {
  CHECK(inner_automorphisms(cyclic(12)).order() == 1);
  CHECK(inner_automorphisms(generalized_quaternion(8)).order() == 4);
  CHECK(inner_automorphisms(heisenberg(3)).order() == 9);
  CHECK(inner_automorphisms(generalized_quaternion(16)).order() == 8);
}

TEST_CASE("restricted automorphism subgroups") {
  Group q8 = generalized_quaternion(8);
  AutomorphismSet aut = automorphism_group(q8);
  SUBCASE("no restriction returns everything") {
    auto r = restricted_automorphisms(aut, Subgroup::whole(q8), Subgroup::trivial(q8));
    CHECK(r.equal_sets(aut));
  }
  SUBCASE("trivial target leaves only the identity") {
    auto r = restricted_automorphisms(aut, Subgroup::trivial(q8), Subgroup::trivial(q8));
    CHECK(r.order() == 1);
    CHECK(r.at(0).is_identity());
  }
  SUBCASE("absolute central automorphisms of Q8") {
    Subgroup l = absolute_centre(q8, aut);
    auto r = absolute_central_automorphisms(aut, l);
    CHECK(r.order() == 4);
    CHECK(r.is_abelian());
  }
  SUBCASE("parent mismatch is rejected") {
    Group d8 = dihedral(8);
    CHECK_THROWS_AS(restricted_automorphisms(aut, Subgroup::trivial(d8), Subgroup::trivial(q8)),
                    ParentMismatch);
  }
}

TEST_CASE("constrained route to the absolute central automorphisms") {
  SUBCASE("trivial L leaves only the identity") {
    Group h = heisenberg(3);
    auto cons = constrained_autl(h, Subgroup::trivial(h));
    CHECK(cons.order() == 1);
  }
  for (const char* name : {"Q8", "D8", "D16", "M16", "SD16", "C4xC2"}) {
    CAPTURE(name);
    Group g = *builtin_group(name);
    AutomorphismSet aut = automorphism_group(g);
    Subgroup l = absolute_centre(g, aut);
    auto filtered = absolute_central_automorphisms(aut, l);
    auto constrained = constrained_autl(g, l);
    CHECK(filtered.equal_sets(constrained));
  }
  // frozen values: Aut_l(Q8) and Aut_l(D8) have order 4
  Group q8 = *builtin_group("Q8");
  CHECK(constrained_autl(q8, absolute_centre(q8, automorphism_group(q8))).order() == 4);
  Group d8 = *builtin_group("D8");
  CHECK(constrained_autl(d8, absolute_centre(d8, automorphism_group(d8))).order() == 4);
}

TEST_CASE("engine invariants on a mixed sample") {
  for (const char* name : {"Q8", "D8", "D16", "M16", "Heis3", "C4xC2", "SD16", "D6"}) {
    CAPTURE(name);
    Group g = *builtin_group(name);
    AutomorphismSet aut = automorphism_group(g);

    // every member passes the full check
    for (const auto& img : aut.images())
      CHECK(!Automorphism::defect(g, img).has_value());

    // closure under composition and inverse
    for (int i = 0; i < aut.order(); ++i) {
      CHECK(aut.contains_image(aut.at(i).inverse().images()));
      for (int j = 0; j < aut.order(); ++j)
        CHECK(aut.contains_image(aut.at(i).compose(aut.at(j)).images()));
    }

    AutomorphismSet inn = inner_automorphisms(g);
    Subgroup z = centre(g);
    Subgroup l = absolute_centre(g, aut);
    AutomorphismSet autc = central_automorphisms(g, aut);
    AutomorphismSet autl = absolute_central_automorphisms(aut, l);

    CHECK(inn.order() * z.size() == g.order());
    CHECK(inn.subset_of(aut));
    CHECK(autl.subset_of(autc));
    CHECK(autc.subset_of(aut));
    CHECK(autl.is_abelian());
    CHECK(l.is_central());
    CHECK(centre(g).contains_all(l));

    // Inn and Aut_l are normal in Aut; L is invariant under Aut
    for (const auto& a : aut.generators()) {
      const auto ainv = a.inverse();
      for (int i : inn.generator_indices())
        CHECK(inn.contains_image(a.compose(inn.at(i)).compose(ainv).images()));
      for (int i : autl.generator_indices())
        CHECK(autl.contains_image(a.compose(autl.at(i)).compose(ainv).images()));
      for (int x : l.elements()) CHECK(l.contains(a.of(x)));
    }

    // power subgroups are characteristic: closed under every automorphism
    for (int m : {2, 3, exponent(g)}) {
      Subgroup pw = power_subgroup(g, m);
      for (const auto& a : aut.generators())
        for (int x : pw.elements()) CHECK(pw.contains(a.of(x)));
    }
  }
}

namespace {

// Independent automorphism count for two-generator presentations
// <a, b | a^m = 1, b^n = a^s, b a b^-1 = a^k>: a pair (A, B) of images extends
// to an endomorphism iff it satisfies the three relations, and to an
// automorphism iff it also generates. No search-engine machinery involved.
long long presentation_aut_count(const Group& g, int m, int n, int k, int s) {
  long long count = 0;
  for (int A = 0; A < g.order(); ++A) {
    if (g.power(A, m) != 0) continue;
    for (int B = 0; B < g.order(); ++B) {
      if (g.power(B, n) != g.power(A, s)) continue;
      if (g.mul(g.mul(B, A), g.inv(B)) != g.power(A, k)) continue;
      if (Subgroup::generated_by(g, {A, B}).size() != g.order()) continue;
      ++count;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("engine counts match the presentation oracle on metacyclic groups") {
  struct Case {
    const char* name;
    int m, n, k, s;
  };
  // the builders put a at index 1 and b at index m
  const std::vector<Case> cases = {
      {"D16", 8, 2, 7, 0},      {"SD16", 8, 2, 3, 0},    {"M16", 8, 2, 5, 0},
      {"Q16", 8, 2, 7, 4},      {"C4:C4@3", 4, 4, 3, 0}, {"M27", 9, 3, 4, 0},
      {"D32", 16, 2, 15, 0},    {"SD32", 16, 2, 7, 0},   {"M32", 16, 2, 9, 0},
      {"Q32", 16, 2, 15, 8},    {"C8:C4@3", 8, 4, 3, 0}, {"M81", 27, 3, 10, 0},
      {"C9:C9@4", 9, 9, 4, 0},  {"D64", 32, 2, 31, 0},   {"SD64", 32, 2, 15, 0},
      {"M64", 32, 2, 17, 0},    {"Q64", 32, 2, 31, 16},  {"M125", 25, 5, 6, 0},
      {"M243", 81, 3, 28, 0},
  };
  for (const auto& c : cases) {
    CAPTURE(c.name);
    Group g = *builtin_group(c.name);
    REQUIRE(g.elem_order(1) == c.m);        // a sits at index 1
    REQUIRE(g.power(c.m, c.n) == g.power(1, c.s));  // b sits at index m
    CHECK(automorphism_group(g).order() == presentation_aut_count(g, c.m, c.n, c.k, c.s));
  }
}

TEST_CASE("automorphism groups multiply over coprime direct factors") {
  const std::vector<std::pair<Group, Group>> pairs = {
      {cyclic(3), cyclic(4)},
      {dihedral(8), cyclic(3)},
      {generalized_quaternion(8), cyclic(9)},
      {heisenberg(3), cyclic(2)},
  };
  for (const auto& [a, b] : pairs) {
    CAPTURE(a.label());
    CAPTURE(b.label());
    const long long separate = static_cast<long long>(automorphism_group(a).order()) *
                               automorphism_group(b).order();
    CHECK(automorphism_group(direct_product(a, b)).order() == separate);
  }
}

TEST_CASE("the corpus is pairwise non-isomorphic") {
  const auto corpus = builtin_corpus(243);
  for (size_t i = 0; i < corpus.size(); ++i)
    for (size_t j = i + 1; j < corpus.size(); ++j) {
      if (corpus[i].order() != corpus[j].order()) continue;
      CAPTURE(corpus[i].label());
      CAPTURE(corpus[j].label());
      CHECK(!find_isomorphism(corpus[i], corpus[j]).has_value());
    }
}

TEST_CASE("automorphism set as an abstract group") {
  Group q8 = generalized_quaternion(8);
  AutomorphismSet aut = automorphism_group(q8);
  Group autg = aut.as_group("Aut(Q8)");
  CHECK(autg.order() == 24);
  CHECK(!autg.is_abelian());
  // Aut(Q8) is isomorphic to S4: witness its order census
  auto census = oracle::order_census(autg);
  CHECK(census[2] == 9);
  CHECK(census[3] == 8);
  CHECK(census[4] == 6);

  Subgroup l = absolute_centre(q8, aut);
  Group autl = absolute_central_automorphisms(aut, l).as_group("Autl(Q8)");
  CHECK(abelian_invariants(autl) == AbelianInvariants({2, 2}));
}

TEST_CASE("from_images rejects junk") {
  Group q8 = generalized_quaternion(8);
  AutomorphismSet aut = automorphism_group(q8);
  // pick a non-identity map of order > 2 and drop its powers
  std::vector<std::vector<elem_t>> subset;
  subset.push_back(Automorphism::identity(q8).images());
  for (int i = 0; i < aut.order(); ++i) {
    const auto a = aut.at(i);
    if (!a.is_identity() && !(a.compose(a).is_identity())) {
      subset.push_back(a.images());
      break;
    }
  }
  REQUIRE(subset.size() == 2);
  CHECK_THROWS_AS(AutomorphismSet::from_images(q8, subset, false), InvalidGroupTable);
  // missing identity
  CHECK_THROWS_AS(AutomorphismSet::from_images(q8, {aut.images()[1]}, false),
                  InvalidGroupTable);
  // corrupted map caught by validation
  auto broken = Automorphism::identity(q8).images();
  std::swap(broken[1], broken[2]);
  CHECK_THROWS_AS(AutomorphismSet::from_images(q8, {broken}, true), InvalidGroupTable);
}

TEST_CASE("isomorphism search") {
  CHECK(find_isomorphism(semidirect_cyclic(4, 2, 3), dihedral(8)).has_value());
  CHECK(!find_isomorphism(dihedral(8), generalized_quaternion(8)).has_value());
  CHECK(!find_isomorphism(dihedral(8), cyclic(8)).has_value());
  CHECK(find_isomorphism(*builtin_group("M27"), extraspecial_p2(3)).has_value());
  // returned map is a genuine isomorphism
  auto iso = find_isomorphism(semidirect_cyclic(4, 2, 3), dihedral(8));
  REQUIRE(iso.has_value());
  Group a = semidirect_cyclic(4, 2, 3), b = dihedral(8);
  std::vector<bool> hit(8, false);
  for (int x = 0; x < 8; ++x) {
    CHECK(!hit[(*iso)[x]]);
    hit[(*iso)[x]] = true;
    for (int y = 0; y < 8; ++y) CHECK((*iso)[a.mul(x, y)] == b.mul((*iso)[x], (*iso)[y]));
  }
}

TEST_CASE("caps and timeouts") {
  Group big = *builtin_group("C2xC2xC2xC2");
  AutOptions capped;
  capped.enumeration_cap = 100;
  try {
    automorphism_group(big, capped);
    FAIL("expected EnumerationCapExceeded");
  } catch (const EnumerationCapExceeded& e) {
    CHECK(e.partial_count == 100);
  }
  AutOptions instant;
  instant.timeout = std::chrono::milliseconds(0);
  CHECK_THROWS_AS(automorphism_group(big, instant), Timeout);
}
