#include "gsurf/automorphism.hpp"

#include <algorithm>

namespace gsurf {

namespace {

struct SearchState {
  const Group* g;
  std::vector<int32_t> orders;      // element orders, for pruning
  std::vector<int32_t> class_size;  // conjugacy class sizes, for pruning
};

// Partial map with multiplication-closure propagation. Returns false on any
// inconsistency (conflicting image, collision, order mismatch).
struct PartialMap {
  std::vector<int32_t> img;    // -1 unknown
  std::vector<char> used;      // target occupied
  std::vector<int32_t> known;  // mapped elements, in assignment order

  explicit PartialMap(int n) : img(n, -1), used(n, 0) {}

  bool assign(const SearchState& st, int32_t a, int32_t b) {
    if (img[a] >= 0) return img[a] == b;
    if (used[b]) return false;
    if (st.orders[a] != st.orders[b]) return false;
    if (st.class_size[a] != st.class_size[b]) return false;
    img[a] = b;
    used[b] = 1;
    known.push_back(a);
    return true;
  }

  // close under products of known elements; each new element is crossed with
  // everything known, so a total map has the homomorphism property verified
  bool propagate(const SearchState& st, size_t from) {
    const Group& g = *st.g;
    for (size_t i = from; i < known.size(); ++i) {
      int32_t a = known[i];
      for (size_t j = 0; j <= i; ++j) {
        int32_t b = known[j];
        if (!assign(st, g.op(a, b), g.op(img[a], img[b]))) return false;
        if (!assign(st, g.op(b, a), g.op(img[b], img[a]))) return false;
      }
    }
    return true;
  }
};

bool extend(const SearchState& st, PartialMap pm, size_t prop_from,
            std::optional<std::vector<int32_t>>& result) {
  if (!pm.propagate(st, prop_from)) return false;
  const Group& g = *st.g;
  int32_t next = -1;
  for (int32_t x = 0; x < g.n; ++x)
    if (pm.img[x] < 0) {
      next = x;
      break;
    }
  if (next < 0) {
    result = pm.img;
    return true;
  }
  for (int32_t cand = 0; cand < g.n; ++cand) {
    if (pm.used[cand] || st.orders[cand] != st.orders[next] ||
        st.class_size[cand] != st.class_size[next])
      continue;
    PartialMap branch = pm;
    size_t from = branch.known.size();
    if (!branch.assign(st, next, cand)) continue;
    if (extend(st, std::move(branch), from, result)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int32_t>> find_automorphism(
    const Group& g,
    const std::vector<std::pair<int32_t, int32_t>>& constraints) {
  SearchState st;
  st.g = &g;
  st.orders.resize(g.n);
  st.class_size.resize(g.n);
  for (int32_t x = 0; x < g.n; ++x) {
    st.orders[x] = g.order_of(x);
    st.class_size[x] = (int32_t)g.conjugacy_class(x).size();
  }
  PartialMap pm(g.n);
  pm.assign(st, 0, 0);
  for (auto [a, b] : constraints)
    if (!pm.assign(st, a, b)) return std::nullopt;
  std::optional<std::vector<int32_t>> result;
  extend(st, std::move(pm), 0, result);
  return result;
}

bool automorphism_exists(
    const Group& g,
    const std::vector<std::pair<int32_t, int32_t>>& constraints) {
  return find_automorphism(g, constraints).has_value();
}

}  // namespace gsurf
