#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include <doctest.h>

#include "gsurf/cells.hpp"
#include "gsurf/census.hpp"
#include "gsurf/errors.hpp"

using namespace gsurf;

namespace {

Pipeline pipeline_of(const char* spec, CensusOptions opts = {}) {
  opts.threads = 2;
  // rvalue overload: the pipeline owns the group
  return run_pipeline(builtin_group(spec), opts);
}

const ComponentSummary& find_symbol(const Census& c, const std::string& sym) {
  for (const ComponentSummary& s : c.components)
    if (s.schlafli == sym) return s;
  REQUIRE_MESSAGE(false, "no component with symbol " << sym);
  return c.components.front();
}

}  // namespace

TEST_SUITE("cells") {

TEST_CASE("quaternion components are hosohedra with full flags") {
  Pipeline p = pipeline_of("quaternion8");
  REQUIRE(p.census.components.size() == 3);
  for (const ComponentSummary& s : p.census.components) {
    const CellComplex& cc = s.cells;
    CHECK(s.schlafli == "{4,2}");
    CHECK(cc.n == 4);
    CHECK(cc.equivar);
    CHECK(cc.lambda1 == 2);
    CHECK(cc.lambda2 == 2);
    CHECK(cc.V == 4);
    CHECK(cc.E == 4);
    CHECK(cc.F == 2);
    CHECK(cc.V1 == 4);
    CHECK(cc.V2 == 0);
    CHECK(cc.genus == 0);
    CHECK(cc.tri_faces == 8);
    CHECK(cc.diamond_ok);
    CHECK(cc.doubling == CellComplex::Doubling::Hosohedral);
    CHECK(cc.vertex_transitive_sufficient == TriBool::True);
    CHECK(cc.regular_sufficient == TriBool::True);
    CHECK(cc.vertex_orbit_info.size() == 4);
    for (auto [elem, val] : cc.vertex_orbit_info) CHECK(val == 2);
  }
}

TEST_CASE("extraspecial components are regular torus maps") {
  Pipeline p = pipeline_of("extraspecial:3");
  REQUIRE(p.census.components.size() == 24);
  for (const ComponentSummary& s : p.census.components) {
    CHECK(s.schlafli == "{6,3}");
    CHECK(s.cells.genus == 1);
    CHECK(s.cells.V == 6);
    CHECK(s.cells.E == 9);
    CHECK(s.cells.F == 3);
    CHECK(s.cells.equivar);
    CHECK(s.cells.doubling == CellComplex::Doubling::None);
    CHECK(s.cells.vertex_transitive_sufficient == TriBool::True);
    CHECK(s.cells.regular_sufficient == TriBool::True);
  }
}

TEST_CASE("two-valency component of the order-six dihedral group") {
  Pipeline p = pipeline_of("dihedral:6");
  const ComponentSummary& s = find_symbol(p.census, "{4,2-3}");
  const CellComplex& cc = s.cells;
  CHECK_FALSE(cc.equivar);
  CHECK(cc.n == 4);
  CHECK(cc.lambda1 == 2);
  CHECK(cc.lambda2 == 3);
  CHECK(cc.V1 == 3);
  CHECK(cc.V2 == 2);
  CHECK(cc.V == 5);
  CHECK(cc.E == 6);
  CHECK(cc.F == 3);
  CHECK(cc.genus == 0);
  CHECK(cc.doubling == CellComplex::Doubling::Double);
  CHECK(cc.double_s == 2);
  CHECK(cc.double_k == 3);
  // valency multiset from the labeled vertex info
  std::multiset<int32_t> valencies;
  for (auto [elem, val] : cc.vertex_orbit_info) valencies.insert(val);
  CHECK(valencies == std::multiset<int32_t>{2, 2, 2, 3, 3});
}

TEST_CASE("skipped searches leave flags unknown, never false") {
  Group q8 = builtin_group("quaternion8");
  FaceTable ft(q8);
  Decomposition d(ft);
  CellOptions opts;
  opts.automorphism_search_cap = 4;  // below the group order: searches skipped
  for (int i = 0; i < d.component_count(); ++i) {
    CellComplex cc = build_cell_complex(ft, d, i, opts);
    CHECK(cc.vertex_transitive_sufficient == TriBool::Unknown);
    CHECK(cc.regular_sufficient == TriBool::Unknown);
  }
  opts.automorphism_search_cap = 512;
  opts.with_flags = false;
  CellComplex cc = build_cell_complex(ft, d, 0, opts);
  CHECK(cc.vertex_transitive_sufficient == TriBool::Unknown);
}

TEST_CASE("exact relations hold on every alternating-five component") {
  Pipeline p = pipeline_of("alternating:5");
  for (const ComponentSummary& s : p.census.components) {
    const CellComplex& cc = s.cells;
    CHECK(cc.V - cc.E + cc.F == 2 - 2 * cc.genus);
    CHECK((long long)cc.n * cc.F == 2 * cc.E);
    CHECK(cc.lambda1 * cc.V1 + (long long)cc.lambda2 * cc.V2 ==
          (cc.equivar ? (long long)cc.lambda1 * cc.V : 2 * cc.E));
    CHECK(cc.E == cc.tri_faces / 2);  // surviving type1-type1 edges
    CHECK(cc.diamond_ok);
    DivisibilityReport rep = divisibility_report(*p.g, cc);
    CHECK(rep.ok);
    CHECK(rep.failures.empty());
  }
}

TEST_CASE("schlafli symbol formatting") {
  CellComplex cc;
  cc.n = 6;
  cc.lambda1 = cc.lambda2 = 3;
  cc.equivar = true;
  CHECK(schlafli_symbol(cc) == "{6,3}");
  cc.equivar = false;
  cc.lambda1 = 2;
  cc.lambda2 = 5;
  CHECK(schlafli_symbol(cc) == "{6,2-5}");
}

TEST_CASE("explicit cell view of a hosohedron") {
  Group q8 = builtin_group("quaternion8");
  FaceTable ft(q8);
  Decomposition d(ft);
  auto faces = d.face_ids_of(0);
  ExplicitCellComplex ex = explicit_cells(ft, faces);
  CHECK(ex.vertex_count == 4);
  REQUIRE(ex.faces.size() == 2);
  for (int32_t v : ex.vertex_valency) CHECK(v == 2);
  for (const auto& rim : ex.faces) {
    CHECK(rim.size() == 4);
    // rim vertices pairwise distinct
    std::set<int32_t> uniq(rim.begin(), rim.end());
    CHECK(uniq.size() == rim.size());
  }
  // the two squares share all four vertices
  std::set<int32_t> a(ex.faces[0].begin(), ex.faces[0].end());
  std::set<int32_t> b(ex.faces[1].begin(), ex.faces[1].end());
  CHECK(a == b);
}

TEST_CASE("cell complex isomorphism") {
  Pipeline d8 = pipeline_of("dihedral:8");
  Pipeline q8 = pipeline_of("quaternion8");
  REQUIRE(d8.census.components.size() == 3);
  REQUIRE(q8.census.components.size() == 3);

  auto explicit_of = [](const Pipeline& p, int sorted_index) {
    int ci = p.census.components[sorted_index].comp_index;
    return explicit_cells(*p.faces, p.faces_by_component[ci]);
  };

  SUBCASE("the two order-eight cell structures match componentwise") {
    std::vector<bool> used(3, false);
    for (int i = 0; i < 3; ++i) {
      ExplicitCellComplex a = explicit_of(d8, i);
      bool found = false;
      for (int j = 0; j < 3 && !found; ++j) {
        if (used[j]) continue;
        if (cell_complexes_isomorphic(a, explicit_of(q8, j))) {
          used[j] = true;
          found = true;
        }
      }
      CHECK(found);
    }
  }

  SUBCASE("different symbols never match") {
    Pipeline s3 = pipeline_of("symmetric:3");
    ExplicitCellComplex dihedron = explicit_of(s3, 0);   // {3,2}
    ExplicitCellComplex square = explicit_of(q8, 0);     // {4,2}
    CHECK_FALSE(cell_complexes_isomorphic(dihedron, square));
  }

  SUBCASE("equal symbols in one group match each other") {
    Pipeline d12 = pipeline_of("dihedral:12");
    std::vector<int> dihedra;
    for (int i = 0; i < (int)d12.census.components.size(); ++i)
      if (d12.census.components[i].schlafli == "{3,2}") dihedra.push_back(i);
    REQUIRE(dihedra.size() == 2);
    CHECK(cell_complexes_isomorphic(explicit_of(d12, dihedra[0]),
                                    explicit_of(d12, dihedra[1])));
  }
}

TEST_CASE("desingularized triangulation is a closed oriented surface") {
  Group q8 = builtin_group("quaternion8");
  FaceTable ft(q8);
  Decomposition d(ft);
  auto faces = d.face_ids_of(0);
  DesingTriangulation tri = desing_triangulation(ft, faces);
  CHECK(tri.vertex_labels.size() == 6);
  CHECK(tri.triangles.size() == 8);
  int t1 = 0, t2 = 0;
  for (auto [elem, type] : tri.vertex_labels) (type == 1 ? t1 : t2)++;
  CHECK(t1 == 4);  // cell vertices
  CHECK(t2 == 2);  // erased polygon centers
  // each directed edge appears exactly once: closed and coherently oriented
  std::set<std::pair<int32_t, int32_t>> directed;
  for (const auto& t : tri.triangles)
    for (int i = 0; i < 3; ++i)
      CHECK(directed.insert({t[i], t[(i + 1) % 3]}).second);
  for (auto [a, b] : directed) CHECK(directed.count({b, a}) == 1);
  CHECK(directed.size() == 24);  // 12 undirected edges
}

TEST_CASE("divisibility report flags fabricated data") {
  Group g = builtin_group("symmetric:3");
  CellComplex cc;
  cc.V = 3;
  cc.E = 5;  // does not divide 6
  cc.F = 2;
  cc.n = 5;
  cc.lambda1 = cc.lambda2 = 2;
  cc.equivar = true;
  DivisibilityReport rep = divisibility_report(g, cc);
  CHECK_FALSE(rep.ok);
  CHECK_FALSE(rep.failures.empty());
}

}  // TEST_SUITE
