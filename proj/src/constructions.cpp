#include "autl/constructions.hpp"

#include <algorithm>
#include <cctype>

namespace autl {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long long pow_mod(long long b, long long e, long long m) {
  if (m == 1) return 0;
  long long r = 1;
  b %= m;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
  }
  return r;
}

// Table of C_m x| C_n, element a^i b^j at index j*m + i.
Group metacyclic(int m, int n, int k, std::string label) {
  const int order = m * n;
  if (order > kDefaultClosureCap)
    throw InvalidParameter("semidirect order exceeds " + std::to_string(kDefaultClosureCap));
  // k^j mod m for each j
  std::vector<long long> kj(n);
  for (int j = 0; j < n; ++j) kj[j] = pow_mod(k, j, m);
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i)
      for (int t = 0; t < n; ++t)
        for (int s = 0; s < m; ++s) {
          const int ri = static_cast<int>((i + s * kj[j]) % m);
          const int rj = (j + t) % n;
          table[j * m + i][t * m + s] = rj * m + ri;
        }
  return Group::from_table(table, std::move(label));
}

}  // namespace

Group cyclic(int n) {
  if (n < 1) throw InvalidParameter("cyclic: order must be positive");
  if (n > kDefaultClosureCap)
    throw InvalidParameter("cyclic: order exceeds " + std::to_string(kDefaultClosureCap));
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return Group::from_table(table, "C" + std::to_string(n));
}

Group direct_product(const Group& a, const Group& b) {
  const int na = a.order(), nb = b.order();
  if (na * nb > kDefaultClosureCap)
    throw InvalidParameter("direct_product: order exceeds " +
                           std::to_string(kDefaultClosureCap));
  std::vector<std::vector<int>> table(na * nb, std::vector<int>(na * nb));
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      for (int s = 0; s < na; ++s)
        for (int t = 0; t < nb; ++t)
          table[i * nb + j][s * nb + t] = a.mul(i, s) * nb + b.mul(j, t);
  return Group::from_table(table, a.label() + "x" + b.label());
}

Group dihedral(int order) {
  if (order < 2 || order % 2 != 0)
    throw InvalidParameter("dihedral: order must be even and >= 2");
  const int m = order / 2;
  return metacyclic(m, 2, (m - 1) % m, "D" + std::to_string(order));
}

Group generalized_quaternion(int order) {
  if (order < 8 || (order & (order - 1)) != 0)
    throw InvalidParameter("generalized_quaternion: order must be 2^k, k >= 3");
  const int m = order / 2;  // <a> has index 2, b^2 = a^{m/2}
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < m; ++i)
      for (int t = 0; t < 2; ++t)
        for (int s = 0; s < m; ++s) {
          int ri = (j == 0) ? (i + s) % m : ((i - s) % m + m) % m;
          int rj = j ^ t;
          if (j == 1 && t == 1) ri = (ri + m / 2) % m;  // b^2 = a^{m/2}
          table[j * m + i][t * m + s] = rj * m + ri;
        }
  return Group::from_table(table, "Q" + std::to_string(order));
}

Group semidirect_cyclic(int m, int n, int k, std::string label) {
  if (m < 1 || n < 1) throw InvalidParameter("semidirect_cyclic: orders must be positive");
  k = ((k % m) + m) % m;
  if (m > 1 && pow_mod(k, n, m) != 1)
    throw InvalidParameter("semidirect_cyclic: k^n != 1 (mod m)");
  if (label.empty())
    label = "C" + std::to_string(m) + ":C" + std::to_string(n) + "@" + std::to_string(k);
  return metacyclic(m, n, k, std::move(label));
}

Group heisenberg(int p) {
  if (!is_prime(p) || p == 2) throw InvalidParameter("heisenberg: p must be an odd prime");
  const int order = p * p * p;
  if (order > kDefaultClosureCap)
    throw InvalidParameter("heisenberg: order exceeds " + std::to_string(kDefaultClosureCap));
  // (a,b,c)*(a',b',c') = (a+a', b+b', c+c'+a*b')
  const auto idx = [p](int a, int b, int c) { return (a * p + b) * p + c; };
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int a2 = 0; a2 < p; ++a2)
          for (int b2 = 0; b2 < p; ++b2)
            for (int c2 = 0; c2 < p; ++c2)
              table[idx(a, b, c)][idx(a2, b2, c2)] =
                  idx((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p);
  return Group::from_table(table, "Heis" + std::to_string(p));
}

Group extraspecial_p2(int p) {
  if (!is_prime(p) || p == 2)
    throw InvalidParameter("extraspecial_p2: p must be an odd prime");
  return modular_group(p * p * p);
}

Group modular_group(int order) {
  int p = 2;
  while (p * p <= order && order % p != 0) ++p;
  if (order % p != 0) p = order;
  int k = 0, rest = order;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1 || !is_prime(p))
    throw InvalidParameter("modular_group: order must be a prime power");
  if ((p == 2 && k < 4) || (p != 2 && k < 3))
    throw InvalidParameter("modular_group: order too small for M_{p^k}");
  const int m = order / p;          // |<a>| = p^{k-1}
  const int act = 1 + m / p;        // 1 + p^{k-2}
  return metacyclic(m, p, act, "M" + std::to_string(order));
}

namespace {

std::optional<int> parse_int(const std::string& s) {
  if (s.empty() || s.size() > 6) return std::nullopt;
  int v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    v = v * 10 + (c - '0');
  }
  return v;
}

std::optional<Group> builtin_atom(const std::string& name) {
  // C<m>:C<n>@<k>
  const auto colon = name.find(':');
  if (colon != std::string::npos) {
    const auto at = name.find('@');
    if (name.size() < 6 || name[0] != 'C' || at == std::string::npos || at < colon)
      return std::nullopt;
    if (name[colon + 1] != 'C') return std::nullopt;
    auto m = parse_int(name.substr(1, colon - 1));
    auto n = parse_int(name.substr(colon + 2, at - colon - 2));
    auto k = parse_int(name.substr(at + 1));
    if (!m || !n || !k) return std::nullopt;
    try {
      return semidirect_cyclic(*m, *n, *k);
    } catch (const InvalidParameter&) {
      return std::nullopt;
    }
  }

  static const std::vector<std::pair<std::string, Group (*)(int)>> kAtoms = {
      {"cyclic", cyclic},
      {"dihedral", dihedral},
      {"quaternion", generalized_quaternion},
      {"heisenberg", heisenberg},
      {"extraspecial", extraspecial_p2},
      {"modular", modular_group},
      {"Heis", heisenberg},
      {"ES", extraspecial_p2},
      {"SD", nullptr},  // handled below
      {"C", cyclic},
      {"D", dihedral},
      {"Q", generalized_quaternion},
      {"M", modular_group},
  };
  for (const auto& [prefix, fn] : kAtoms) {
    if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0)
      continue;
    const auto num = parse_int(name.substr(prefix.size()));
    if (!num) continue;
    try {
      if (prefix == "SD") {
        // Semidihedral of order 2^k: a -> a^{2^{k-2} - 1}.
        const int o = *num;
        if (o < 16 || (o & (o - 1)) != 0) return std::nullopt;
        return semidirect_cyclic(o / 2, 2, o / 4 - 1, "SD" + std::to_string(o));
      }
      return fn(*num);
    } catch (const InvalidParameter&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Group> builtin_group(const std::string& name) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    const auto pos = name.find('x', start);
    if (pos == std::string::npos) {
      parts.push_back(name.substr(start));
      break;
    }
    parts.push_back(name.substr(start, pos - start));
    start = pos + 1;
  }
  std::optional<Group> acc;
  for (const auto& part : parts) {
    auto g = builtin_atom(part);
    if (!g) return std::nullopt;
    if (!acc) {
      acc = std::move(g);
    } else {
      try {
        acc = direct_product(*acc, *g);
      } catch (const InvalidParameter&) {
        return std::nullopt;
      }
    }
  }
  return acc;
}

const std::vector<std::string>& builtin_corpus_names() {
  static const std::vector<std::string> kNames = {
      // abelian and small anchors
      "C2", "C3", "C4", "C2xC2", "C6", "D6", "C8", "C4xC2", "C2xC2xC2",
      "D8", "Q8", "C9", "C3xC3", "D12",
      // order 16
      "C16", "C8xC2", "C4xC4", "C2xC2xC2xC2",
      "D16", "Q16", "SD16", "M16", "D8xC2", "Q8xC2", "C4:C4@3",
      // order 27
      "C27", "C9xC3", "C3xC3xC3", "Heis3", "M27",
      // order 32
      "D32", "Q32", "SD32", "M32", "D8xC4", "Q8xC4", "C8:C4@3",
      // order 64
      "D64", "Q64", "SD64", "M64", "Q8xD8",
      // order 81
      "Heis3xC3", "M27xC3", "M81", "C9:C9@4",
      // odd-prime extras
      "Heis5", "M125", "M243",
  };
  return kNames;
}

std::vector<Group> builtin_corpus(int max_order) {
  std::vector<Group> corpus;
  for (const auto& name : builtin_corpus_names()) {
    auto g = builtin_group(name);
    if (!g) throw InvalidParameter("corpus name does not resolve: " + name);
    if (g->order() <= max_order) corpus.push_back(std::move(*g));
  }
  return corpus;
}

}  // namespace autl
