#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gsurf/group.hpp"

namespace gsurf {

// Orbits of conjugation by a fixed element alpha: x -> alpha^-1 x alpha.
// Orbit sizes divide order(alpha); singletons are exactly C(alpha).
// A non-singleton orbit is "productive" when alpha is a product of two
// distinct members of it (equivalently x * x^(alpha^k) == alpha for some
// k >= 1, a representative-independent test); otherwise "nonproductive".

enum class OrbitClass { Singleton, Productive, Nonproductive };

struct AlphaSummary {
  int32_t alpha = 0;
  std::vector<std::vector<int32_t>> orbits;  // partition of all of G
  int singleton = 0;                         // == |C(alpha)|
  int productive = 0;                        // p_alpha
  int nonproductive = 0;                     // n_alpha (always even)
};

// Compact per-element counts used by the bulk identity sums.
struct AlphaCounts {
  int32_t productive = 0;     // p_alpha
  int32_t nonproductive = 0;  // n_alpha
  int32_t centralizer = 0;
};

/// Full orbit partition (central alpha yields only singletons).
std::vector<std::vector<int32_t>> alpha_orbits(const Group& g, int32_t alpha);

OrbitClass classify_orbit(const Group& g, int32_t alpha,
                          const std::vector<int32_t>& orbit);

AlphaSummary alpha_summary(const Group& g, int32_t alpha);

/// Predicted sheet counts (about the type-2 and type-1 vertex of alpha):
/// (n_alpha/2 + p_alpha, n_alpha + p_alpha). Throws CentralElement when
/// alpha is central (no such vertices exist).
std::pair<int, int> predicted_sheets(const Group& g, int32_t alpha);

/// Counts for every element of G, computed in deterministic parallel.
std::vector<AlphaCounts> alpha_census(const Group& g, int threads = 1);

/// Size of the orbit of x under conjugation by powers of a.
int cyclic_orbit_size(const Group& g, int32_t a, int32_t x);

/// True iff y lies in the orbit of x under conjugation by powers of a.
bool alpha_conjugate(const Group& g, int32_t a, int32_t x, int32_t y);

}  // namespace gsurf
