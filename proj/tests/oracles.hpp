#pragma once

// Brute-force reference implementations used only by tests. Everything here
// works straight from definitions (exhaustive permutation / function scans)
// and deliberately shares no code with the library's search engine.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "autl/group.hpp"

namespace oracle {

// All bijections of {0..n-1} fixing 0 that are homomorphisms of g.
// Exhaustive over (n-1)! candidates; keep n <= 8.
inline std::vector<std::vector<int>> all_automorphisms(const autl::Group& g) {
  const int n = g.order();
  std::vector<int> tail(n - 1);
  std::iota(tail.begin(), tail.end(), 1);
  std::vector<std::vector<int>> found;
  do {
    std::vector<int> img(n);
    img[0] = 0;
    for (int i = 1; i < n; ++i) img[i] = tail[i - 1];
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        ok = img[g.mul(a, b)] == g.mul(img[a], img[b]);
    if (ok) found.push_back(img);
  } while (std::next_permutation(tail.begin(), tail.end()));
  return found;
}

// Elements commuting with everything.
inline std::vector<int> centre_elements(const autl::Group& g) {
  std::vector<int> out;
  for (int z = 0; z < g.order(); ++z) {
    bool c = true;
    for (int x = 0; x < g.order() && c; ++x) c = g.mul(z, x) == g.mul(x, z);
    if (c) out.push_back(z);
  }
  return out;
}

// Closure of a seed set under products, as a sorted element list.
inline std::vector<int> closure(const autl::Group& g, std::vector<int> seeds) {
  std::vector<bool> in(g.order(), false);
  std::vector<int> elems;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = true;
      elems.push_back(x);
    }
  };
  add(0);
  for (int s : seeds) add(s);
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = 0; j < elems.size(); ++j) {
      add(g.mul(elems[i], elems[j]));
      add(g.mul(elems[j], elems[i]));
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

// All homomorphisms a -> b by scanning every function on non-identity
// elements. |b|^(|a|-1) candidates; keep it tiny.
inline std::vector<std::vector<int>> all_homomorphisms(const autl::Group& a,
                                                       const autl::Group& b) {
  const int n = a.order(), m = b.order();
  std::vector<int> img(n, 0);
  std::vector<std::vector<int>> found;
  while (true) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        ok = img[a.mul(x, y)] == b.mul(img[x], img[y]);
    if (ok) found.push_back(img);
    // odometer over img[1..n-1]
    int pos = 1;
    while (pos < n && img[pos] == m - 1) img[pos++] = 0;
    if (pos == n) break;
    ++img[pos];
  }
  return found;
}

// Number of elements of each order, as a sorted (order, count) list.
inline std::map<int, int> order_census(const autl::Group& g) {
  std::map<int, int> census;
  for (int i = 0; i < g.order(); ++i) ++census[g.elem_order(i)];
  return census;
}

}  // namespace oracle
