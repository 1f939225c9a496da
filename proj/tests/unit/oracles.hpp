#pragma once

// Brute-force references shared by the unit tests. Nothing here calls into
// the library beyond reading the simple roots and coroots of a datum.

#include <map>
#include <set>
#include <vector>

#include "ordext/rootdata.hpp"

namespace oracle {

using ordext::Int;
using ordext::IntVec;

inline IntVec reflect(const ordext::RootDatum& rd, std::size_t i, const IntVec& x) {
  Int c = 0;
  for (std::size_t k = 0; k < x.size(); ++k) c += x[k] * rd.simple_coroots[i][k];
  IntVec out = x;
  for (std::size_t k = 0; k < x.size(); ++k) out[k] -= c * rd.simple_roots[i][k];
  return out;
}

// All roots, by closing the simple roots under the simple reflections.
inline std::set<IntVec> all_roots(const ordext::RootDatum& rd) {
  std::set<IntVec> seen(rd.simple_roots.begin(), rd.simple_roots.end());
  std::vector<IntVec> todo(seen.begin(), seen.end());
  while (!todo.empty()) {
    IntVec x = todo.back();
    todo.pop_back();
    for (std::size_t i = 0; i < rd.simple_roots.size(); ++i) {
      IntVec y = reflect(rd, i, x);
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return seen;
}

// W as tuples of images of the simple roots (faithful on the root span), with
// the Cayley-graph distance from the identity as the length.
struct BfsGroup {
  std::map<std::vector<IntVec>, std::size_t> length;
  std::vector<std::size_t> poincare;
};

inline BfsGroup bfs_group(const ordext::RootDatum& rd) {
  BfsGroup g;
  std::vector<IntVec> id = rd.simple_roots;
  g.length[id] = 0;
  std::vector<std::vector<IntVec>> layer{id};
  std::size_t d = 0;
  while (!layer.empty()) {
    g.poincare.push_back(layer.size());
    std::vector<std::vector<IntVec>> next;
    for (const auto& w : layer)
      for (std::size_t i = 0; i < rd.simple_roots.size(); ++i) {
        std::vector<IntVec> sw;
        for (const auto& x : w) sw.push_back(reflect(rd, i, x));
        if (g.length.emplace(sw, d + 1).second) next.push_back(sw);
      }
    layer = std::move(next);
    ++d;
  }
  return g;
}

}  // namespace oracle
