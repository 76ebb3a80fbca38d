#include <algorithm>
#include <set>
#include <vector>

#include <doctest.h>

#include "gsurf/alpha.hpp"
#include "gsurf/errors.hpp"
#include "gsurf/group.hpp"

using namespace gsurf;

TEST_SUITE("alpha") {

TEST_CASE("conjugation orbits partition the group") {
  Group g = symmetric_group(4);
  for (int32_t a = 0; a < g.n; ++a) {
    auto orbits = alpha_orbits(g, a);
    std::set<int32_t> seen;
    size_t total = 0;
    for (const auto& orb : orbits) {
      total += orb.size();
      for (int32_t x : orb) CHECK(seen.insert(x).second);
      // orbit size divides the order of alpha
      CHECK(g.order_of(a) % (int)orb.size() == 0);
      // closure: conjugating any member stays inside
      for (int32_t x : orb)
        CHECK(std::find(orb.begin(), orb.end(), g.conj(x, a)) != orb.end());
    }
    CHECK(total == (size_t)g.n);
  }
}

TEST_CASE("singleton orbits are exactly the centralizer") {
  Group g = dihedral_group(12);
  for (int32_t a = 0; a < g.n; ++a) {
    AlphaSummary s = alpha_summary(g, a);
    CHECK(s.singleton == g.centralizer_size(a));
  }
}

TEST_CASE("order-six dihedral fixtures") {
  Group g = dihedral_group(6);  // isomorphic to the degree-3 symmetric group
  int rotations = 0, reflections = 0;
  for (int32_t a = 1; a < g.n; ++a) {
    AlphaSummary s = alpha_summary(g, a);
    if (g.order_of(a) == 3) {
      // one productive orbit: the three reflections multiply in pairs to a
      // rotation
      CHECK(s.productive == 1);
      CHECK(s.nonproductive == 0);
      CHECK(predicted_sheets(g, a) == std::pair<int, int>{1, 1});
      rotations++;
    } else {
      // two nonproductive two-element orbits
      CHECK(s.productive == 0);
      CHECK(s.nonproductive == 2);
      CHECK(predicted_sheets(g, a) == std::pair<int, int>{1, 2});
      reflections++;
    }
  }
  CHECK(rotations == 2);
  CHECK(reflections == 3);
}

TEST_CASE("productive orbits have odd size at least three") {
  for (const char* spec : {"symmetric:4", "dihedral:20", "extraspecial:3"}) {
    Group g = builtin_group(spec);
    for (int32_t a = 0; a < g.n; ++a) {
      if (g.is_central(a)) continue;
      AlphaSummary s = alpha_summary(g, a);
      CHECK(s.nonproductive % 2 == 0);
      for (const auto& orb : s.orbits) {
        if (classify_orbit(g, a, orb) == OrbitClass::Productive) {
          CHECK(orb.size() % 2 == 1);
          CHECK(orb.size() >= 3);
          // witness pair: two distinct members multiplying to alpha
          bool witness = false;
          for (int32_t x : orb)
            for (int32_t y : orb)
              if (x != y && g.op(x, y) == a) witness = true;
          CHECK(witness);
        }
      }
    }
  }
}

TEST_CASE("involutions have no productive orbits and the mod-4 rule") {
  for (const char* spec : {"symmetric:5", "quaternion8", "dihedral:16"}) {
    Group g = builtin_group(spec);
    for (int32_t a = 1; a < g.n; ++a) {
      if (g.op(a, a) != 0) continue;
      AlphaSummary s = alpha_summary(g, a);
      CHECK(s.productive == 0);
      CHECK((g.n - g.centralizer_size(a)) % 4 == 0);
    }
  }
}

TEST_CASE("central elements have no sheet prediction") {
  Group q8 = quaternion_group8();
  CHECK_THROWS_AS(predicted_sheets(q8, 0), Error);
  // the unique involution of the quaternion group is central
  for (int32_t a = 1; a < q8.n; ++a)
    if (q8.is_central(a)) CHECK_THROWS_AS(predicted_sheets(q8, a), Error);
}

TEST_CASE("bulk census equals per-element summaries") {
  Group g = symmetric_group(5);
  auto census = alpha_census(g, 4);
  REQUIRE(census.size() == (size_t)g.n);
  for (int32_t a = 0; a < g.n; ++a) {
    AlphaSummary s = alpha_summary(g, a);
    CHECK(census[a].productive == s.productive);
    CHECK(census[a].nonproductive == s.nonproductive);
    CHECK(census[a].centralizer == g.centralizer_size(a));
  }
}

TEST_CASE("cyclic orbit size and membership") {
  Group g = symmetric_group(3);
  // pick a rotation a and a reflection x: conjugation by powers of a cycles
  // the three reflections
  int32_t rot = -1, refl = -1;
  for (int32_t x = 1; x < g.n; ++x) {
    if (g.order_of(x) == 3 && rot < 0) rot = x;
    if (g.order_of(x) == 2 && refl < 0) refl = x;
  }
  REQUIRE(rot >= 0);
  REQUIRE(refl >= 0);
  CHECK(cyclic_orbit_size(g, rot, refl) == 3);
  CHECK(cyclic_orbit_size(g, refl, rot) == 2);
  CHECK(cyclic_orbit_size(g, rot, rot) == 1);
  for (int32_t y = 0; y < g.n; ++y) {
    bool in_orbit = alpha_conjugate(g, rot, refl, y);
    CHECK(in_orbit == (g.order_of(y) == 2));  // orbit = all reflections
  }
}

}  // TEST_SUITE
