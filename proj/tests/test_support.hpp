#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gsurf/group.hpp"

namespace gsurf::test {

/// Permutation of element i of a permutation-built group, recovered from its
/// cycle-notation name and padded to `degree` points.
inline std::vector<int32_t> perm_of(const Group& g, int32_t i, int degree) {
  return parse_cycle_notation(g.names[i], degree);
}

/// permutation -> element index, for groups built from permutations.
inline std::map<std::vector<int32_t>, int32_t> perm_index(const Group& g,
                                                          int degree) {
  std::map<std::vector<int32_t>, int32_t> out;
  for (int32_t i = 0; i < g.n; ++i) out[perm_of(g, i, degree)] = i;
  return out;
}

/// Embedding of a symmetric group into a larger one by fixing extra points.
inline Homomorphism symmetric_embedding(const Group& small, const Group& big,
                                        int small_degree, int big_degree) {
  auto index = perm_index(big, big_degree);
  std::vector<int32_t> map(small.n);
  for (int32_t i = 0; i < small.n; ++i) {
    std::vector<int32_t> p = perm_of(small, i, small_degree);
    p.resize(big_degree);
    for (int k = small_degree; k < big_degree; ++k) p[k] = k;
    map[i] = index.at(p);
  }
  return make_homomorphism(small, big, std::move(map));
}

/// Left regular permutation representation: a -> (x -> a*x), realized as a
/// permutation group plus the validated isomorphism onto it.
struct RegularImage {
  Group image;
  std::vector<int32_t> map;  // source element -> image element
};

inline RegularImage regular_representation(const Group& g) {
  std::vector<std::vector<int32_t>> rows(g.n, std::vector<int32_t>(g.n));
  for (int32_t a = 0; a < g.n; ++a)
    for (int32_t x = 0; x < g.n; ++x) rows[a][x] = g.op(a, x);
  RegularImage out{from_permutations(rows, g.n, g.name + "-regular"), {}};
  auto index = perm_index(out.image, g.n);
  out.map.resize(g.n);
  for (int32_t a = 0; a < g.n; ++a) out.map[a] = index.at(rows[a]);
  return out;
}

}  // namespace gsurf::test
