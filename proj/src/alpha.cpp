#include "gsurf/alpha.hpp"

#include "gsurf/errors.hpp"
#include "gsurf/parallel.hpp"

namespace gsurf {

std::vector<std::vector<int32_t>> alpha_orbits(const Group& g, int32_t alpha) {
  std::vector<char> seen(g.n, 0);
  std::vector<std::vector<int32_t>> orbits;
  const int32_t ia = g.inv[alpha];
  for (int32_t x = 0; x < g.n; ++x) {
    if (seen[x]) continue;
    std::vector<int32_t> orbit;
    int32_t u = x;
    do {
      seen[u] = 1;
      orbit.push_back(u);
      u = g.op(g.op(ia, u), alpha);
    } while (u != x);
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

OrbitClass classify_orbit(const Group& g, int32_t alpha,
                          const std::vector<int32_t>& orbit) {
  if (orbit.size() == 1) return OrbitClass::Singleton;
  // representative-independent: alpha = x * x^(alpha^k) for some k >= 1
  const int32_t ia = g.inv[alpha];
  const int32_t x = orbit[0];
  int32_t xk = x;
  for (size_t k = 1; k < orbit.size(); ++k) {
    xk = g.op(g.op(ia, xk), alpha);
    if (g.op(x, xk) == alpha) return OrbitClass::Productive;
  }
  return OrbitClass::Nonproductive;
}

AlphaSummary alpha_summary(const Group& g, int32_t alpha) {
  AlphaSummary s;
  s.alpha = alpha;
  s.orbits = alpha_orbits(g, alpha);
  for (const auto& orbit : s.orbits) {
    switch (classify_orbit(g, alpha, orbit)) {
      case OrbitClass::Singleton: ++s.singleton; break;
      case OrbitClass::Productive: ++s.productive; break;
      case OrbitClass::Nonproductive: ++s.nonproductive; break;
    }
  }
  return s;
}

std::pair<int, int> predicted_sheets(const Group& g, int32_t alpha) {
  if (g.is_central(alpha))
    fail(ErrorKind::CentralElement,
         "element " + std::to_string(alpha) + " is central; it has no vertices");
  AlphaSummary s = alpha_summary(g, alpha);
  return {s.nonproductive / 2 + s.productive, s.nonproductive + s.productive};
}

std::vector<AlphaCounts> alpha_census(const Group& g, int threads) {
  std::vector<AlphaCounts> out(g.n);
  parallel_chunks(threads, g.n, [&](int64_t begin, int64_t end) {
    std::vector<char> seen(g.n);
    for (int64_t a = begin; a < end; ++a) {
      const int32_t alpha = (int32_t)a;
      const int32_t ia = g.inv[alpha];
      std::fill(seen.begin(), seen.end(), 0);
      AlphaCounts c;
      for (int32_t x = 0; x < g.n; ++x) {
        if (seen[x]) continue;
        // walk the orbit once, classifying productivity on the fly
        int32_t len = 0;
        bool productive = false;
        int32_t u = x;
        do {
          seen[u] = 1;
          ++len;
          u = g.op(g.op(ia, u), alpha);
          if (u != x && g.op(x, u) == alpha) productive = true;
        } while (u != x);
        if (len == 1) {
          ++c.centralizer;
        } else if (productive) {
          ++c.productive;
        } else {
          ++c.nonproductive;
        }
      }
      out[a] = c;
    }
  });
  return out;
}

int cyclic_orbit_size(const Group& g, int32_t a, int32_t x) {
  const int32_t ia = g.inv[a];
  int n = 0;
  int32_t u = x;
  do {
    ++n;
    u = g.op(g.op(ia, u), a);
  } while (u != x);
  return n;
}

bool alpha_conjugate(const Group& g, int32_t a, int32_t x, int32_t y) {
  const int32_t ia = g.inv[a];
  int32_t u = x;
  do {
    if (u == y) return true;
    u = g.op(g.op(ia, u), a);
  } while (u != x);
  return false;
}

}  // namespace gsurf
