#pragma once

#include <optional>
#include <string>
#include <vector>

#include "autl/group.hpp"

namespace autl {

Group cyclic(int n);
Group direct_product(const Group& a, const Group& b);
/// Dihedral group given by its order 2n (even, >= 2).
Group dihedral(int order);
/// Generalized quaternion group of order 2^k, k >= 3.
Group generalized_quaternion(int order);
/// C_m x| C_n with the action a -> a^k; requires k^n = 1 (mod m).
Group semidirect_cyclic(int m, int n, int k, std::string label = "");
/// Extraspecial group of order p^3 and exponent p (upper unitriangular 3x3
/// matrices over F_p), p an odd prime.
Group heisenberg(int p);
/// Extraspecial group of order p^3 and exponent p^2, p an odd prime.
Group extraspecial_p2(int p);
/// M_{p^k} = <a, b | a^{p^{k-1}}, b^p, b a b^-1 = a^{1+p^{k-2}}>,
/// k >= 3 for odd p, k >= 4 for p = 2. Argument is the order p^k.
Group modular_group(int order);

/// Resolves a builtin name: atoms C<n>, D<2n>, Q<2^k>, SD<2^k>, M<p^k>,
/// Heis<p>, ES<p>, C<m>:C<n>@<k>, plus 'x'-joined direct products
/// (e.g. "Q8xC2"). Aliases cyclic/dihedral/quaternion/heisenberg/extraspecial/
/// modular<n> are accepted. Returns nullopt for unknown names.
std::optional<Group> builtin_group(const std::string& name);

/// The fixed verification corpus, filtered to orders <= max_order.
/// Deterministic contents and order; pairwise non-isomorphic.
std::vector<Group> builtin_corpus(int max_order);

/// Names backing builtin_corpus, unfiltered.
const std::vector<std::string>& builtin_corpus_names();

}  // namespace autl
