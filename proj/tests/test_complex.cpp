#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include <doctest.h>

#include "gsurf/complex.hpp"
#include "gsurf/group.hpp"
#include "test_support.hpp"

using namespace gsurf;

namespace {

// (element, type) vertex of the complex
using Vertex = std::pair<int32_t, int>;

// Literal simplex [(x,1),(y,1),(xy,2)] in orientation order.
std::array<Vertex, 3> simplex(const Group& g, FaceKey f) {
  return {Vertex{f.x, 1}, Vertex{f.y, 1}, Vertex{g.op(f.x, f.y), 2}};
}

std::vector<FaceKey> all_faces(const Group& g) {
  std::vector<FaceKey> out;
  for (int32_t x = 0; x < g.n; ++x)
    for (int32_t y = 0; y < g.n; ++y)
      if (!g.commutes(x, y)) out.push_back({x, y});
  return out;
}

}  // namespace

TEST_SUITE("complex") {

TEST_CASE("simplex counts against a literal pair enumeration") {
  struct Row {
    const char* spec;
    long long v, e1, faces, euler;
  };
  const Row rows[] = {
      {"symmetric:3", 10, 9, 18, 1},
      {"quaternion8", 12, 12, 24, 0},
      {"dihedral:8", 12, 12, 24, 0},
      {"symmetric:4", 46, 228, 456, -182},
      {"symmetric:5", 238, 6780, 13560, -6542},
  };
  for (const Row& r : rows) {
    CAPTURE(r.spec);
    Group g = builtin_group(r.spec);
    ComplexStats st = build_stats(g);
    CHECK(st.vertices == r.v);
    CHECK(st.e1_edges == r.e1);
    CHECK(st.faces == r.faces);
    CHECK(st.e2_edges == r.faces);
    CHECK(st.euler == r.euler);
    CHECK(st.faces == (long long)all_faces(g).size());
  }
}

TEST_CASE("every undirected edge lies in exactly two faces") {
  Group g = symmetric_group(3);
  std::map<std::pair<Vertex, Vertex>, int> edge_count;
  for (FaceKey f : all_faces(g)) {
    auto s = simplex(g, f);
    for (int i = 0; i < 3; ++i) {
      Vertex a = s[i], b = s[(i + 1) % 3];
      if (b < a) std::swap(a, b);
      edge_count[{a, b}]++;
    }
  }
  long long e1 = 0, e2 = 0;
  for (const auto& [edge, count] : edge_count) {
    CHECK(count == 2);
    (edge.first.second == 1 && edge.second.second == 1 ? e1 : e2)++;
  }
  ComplexStats st = build_stats(g);
  CHECK(e1 == st.e1_edges);
  CHECK(e2 == st.e2_edges);
}

TEST_CASE("derived neighbors literally share the edge, oppositely oriented") {
  Group g = symmetric_group(3);
  FaceTable ft(g);
  for (FaceKey f : all_faces(g)) {
    auto nbrs = ft.neighbors(f);
    auto s = simplex(g, f);
    for (int e = 0; e < 3; ++e) {
      // edge e of the face joins corners e and e+1 in orientation order
      Vertex a = s[e], b = s[(e + 1) % 3];
      auto t = simplex(g, nbrs[e]);
      // the neighbor traverses the same segment in the other direction
      bool reversed = false;
      for (int k = 0; k < 3; ++k)
        if (t[k] == b && t[(k + 1) % 3] == a) reversed = true;
      CAPTURE(f.x);
      CAPTURE(f.y);
      CAPTURE(e);
      CHECK(reversed);
    }
  }
}

TEST_CASE("neighbor relation is involutive with the fixed edge pairing") {
  Group g = symmetric_group(4);
  FaceTable ft(g);
  constexpr int back_edge[3] = {0, 2, 1};
  for (int32_t id = 0; id < (int32_t)ft.face_count(); ++id) {
    auto nbrs = ft.neighbor_ids(id);
    for (int e = 0; e < 3; ++e) {
      CHECK(nbrs[e] != id);
      CHECK(ft.neighbor_ids(nbrs[e])[back_edge[e]] == id);
    }
  }
}

TEST_CASE("face ids are a dense bijection onto noncommuting pairs") {
  Group g = dihedral_group(10);
  FaceTable ft(g);
  std::set<int32_t> ids;
  for (FaceKey f : all_faces(g)) {
    int32_t id = ft.id_of(f);
    REQUIRE(id >= 0);
    CHECK(ids.insert(id).second);
    CHECK(ft.key_of(id) == f);
  }
  CHECK((int64_t)ids.size() == ft.face_count());
  for (int32_t x = 0; x < g.n; ++x)
    for (int32_t y = 0; y < g.n; ++y)
      if (g.commutes(x, y)) {
        CHECK(ft.id_of(x, y) == -1);
        CHECK(ft.commutes(x, y));
      }
}

TEST_CASE("vertex stars decompose into closed fans") {
  Group g = symmetric_group(3);
  FaceTable ft(g);
  int32_t rot = -1, refl = -1;
  for (int32_t x = 1; x < g.n; ++x) {
    if (g.order_of(x) == 3 && rot < 0) rot = x;
    if (g.order_of(x) == 2 && refl < 0) refl = x;
  }

  SUBCASE("type-2 star of a rotation: one fan of three") {
    auto sheets = vertex_sheets(ft, rot, 2);
    REQUIRE(sheets.size() == 1);
    CHECK(sheets[0].size() == 3);
    for (FaceKey f : sheets[0]) CHECK(g.op(f.x, f.y) == rot);
  }
  SUBCASE("type-2 star of a reflection: one fan of four") {
    auto sheets = vertex_sheets(ft, refl, 2);
    REQUIRE(sheets.size() == 1);
    CHECK(sheets[0].size() == 4);
  }
  SUBCASE("type-1 star of a rotation: one sheet of six") {
    auto sheets = vertex_sheets(ft, rot, 1);
    REQUIRE(sheets.size() == 1);
    CHECK(sheets[0].size() == 6);
    for (FaceKey f : sheets[0]) CHECK((f.x == rot || f.y == rot));
  }
  SUBCASE("type-1 star of a reflection: two sheets of four") {
    auto sheets = vertex_sheets(ft, refl, 1);
    REQUIRE(sheets.size() == 2);
    CHECK(sheets[0].size() == 4);
    CHECK(sheets[1].size() == 4);
  }
  SUBCASE("sheets cover each star exactly once") {
    for (int32_t a = 1; a < g.n; ++a) {
      for (int type : {1, 2}) {
        std::set<std::pair<int32_t, int32_t>> seen;
        size_t total = 0;
        for (const auto& sheet : vertex_sheets(ft, a, type))
          for (FaceKey f : sheet) {
            CHECK(seen.insert({f.x, f.y}).second);
            total++;
          }
        // star size: faces whose simplex contains (a, type)
        size_t star = 0;
        for (FaceKey f : all_faces(g)) {
          auto s = simplex(g, f);
          for (const Vertex& v : s)
            if (v == Vertex{a, type}) star++;
        }
        CHECK(total == star);
      }
    }
  }
}

TEST_CASE("induced face maps commute with the adjacency derivations") {
  Group s3 = symmetric_group(3);
  Group s4 = symmetric_group(4);
  Homomorphism f = test::symmetric_embedding(s3, s4, 3, 4);
  FaceTable ft3(s3), ft4(s4);
  verify_induced_map(f, ft3, ft4);  // throws on any violation

  InducedFaceMap m = induced_map(f);
  for (FaceKey key : all_faces(s3)) {
    FaceKey img = m(key);
    CHECK(ft4.id_of(img) >= 0);
    auto n3 = ft3.neighbors(key);
    auto n4 = ft4.neighbors(img);
    for (int e = 0; e < 3; ++e) CHECK(m(n3[e]) == n4[e]);
  }
}

}  // TEST_SUITE
