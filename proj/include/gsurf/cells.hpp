#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gsurf/decompose.hpp"

namespace gsurf {

// Collapsing the triangulation of a desingularized component to its polygonal
// 2-cell structure: type-2 vertices and the edges touching them are erased,
// so each type-2 sheet of m triangles becomes one m-gon face, each type-1
// sheet becomes a vertex whose valency is half the triangles in the sheet,
// and the edges are the type1-type1 edges of the triangulation.

enum class TriBool { False, True, Unknown };
const char* tribool_name(TriBool t);

struct CellComplex {
  FaceKey component_id;
  long long genus = 0;
  long long tri_faces = 0;  // triangles before collapsing

  long long V = 0, E = 0, F = 0;
  int n = 0;         // gonality of every face
  int lambda1 = 0;   // smaller valency
  int lambda2 = 0;   // larger valency (== lambda1 when only one occurs)
  long long V1 = 0;  // vertices of valency lambda1 (== V when equivar)
  long long V2 = 0;  // vertices of valency lambda2 (0 when equivar)

  bool equivar = false;   // single valency
  bool diamond_ok = false;  // set by the structural verification
  TriBool vertex_transitive_sufficient = TriBool::Unknown;
  TriBool regular_sufficient = TriBool::Unknown;

  enum class Doubling { None, Hosohedral, Double };
  Doubling doubling = Doubling::None;
  int double_s = 0, double_k = 0;  // {2s,2-k} is the double of {s,k}

  std::vector<std::pair<int32_t, int32_t>> vertex_orbit_info;  // (element, valency)
};

struct CellOptions {
  // automorphism searches only run when |G| <= cap; 0 disables them
  int automorphism_search_cap = 512;
  bool with_flags = true;
};

/// Counts, gonality and valencies of one component's cell structure, each
/// cross-checked exactly: n*F = 2E = lambda1*V1 + lambda2*V2, the harmonic
/// valency relation E = lambda_i*V_i in the two-valency case, the rational
/// genus relation 2-2g = 2(1/lambda + 1/n - 1/2)E, the group-theoretic
/// predictions from the defining pair (gonality from the conjugation orbit of
/// x under powers of xy, valencies from the orbits of xy under powers of x
/// and of y), and the conjugacy constraints on sheet labels. Disagreement is
/// a hard error.
CellComplex cell_structure(const FaceTable& ft, const Decomposition& d,
                           int comp_index);

/// "{n,l}" or "{n,l1-l2}" with l1 < l2.
std::string schlafli_symbol(const CellComplex& cc);

/// Fills the vertex-transitive / regular flags from sufficient conditions
/// only: transitivity from alpha-conjugacy of the defining pair or an
/// automorphism x -> y, y -> y^-1 x y; regularity additionally needs an
/// automorphism x -> y^-1, y -> x^-1. Searches run only when |G| fits under
/// the cap; a skipped search leaves the flag Unknown — absence of the
/// conditions never asserts a negative.
void polytope_flags(const FaceTable& ft, CellComplex& cc,
                    const CellOptions& opts);

/// Structural abstract-polytope diamond check on the component's faces:
/// every cell edge has two distinct endpoint vertices and two distinct
/// incident faces, and every polygon rim visits pairwise distinct vertices.
/// Throws DiamondViolation. Sets cc.diamond_ok.
void verify_diamond(const FaceTable& ft, CellComplex& cc,
                    const std::vector<int32_t>& comp_faces);

/// Classify valency-2 phenomena: {n,2} is hosohedral (two n-gons glued along
/// their rim, forcibly genus 0); {2s,2-k} is the double of {s,k}, and when
/// the underlying datum is spherical the double must have genus 0 too.
void doubling_relation(CellComplex& cc);

struct DivisibilityReport {
  bool ok = true;
  std::vector<std::string> failures;
};

/// E | |G| and F | |G|; in the two-valency case lambda_i | E; n | 2E; and
/// when E == |G| or F == |G| the defining pair has C(x) meeting C(y) only in
/// the identity and Z(G) trivial.
DivisibilityReport divisibility_report(const Group& g, const CellComplex& cc);

/// cell_structure + flags + diamond + doubling + divisibility (throws
/// DivisibilityViolation if that report fails). comp_faces must be the
/// component's face ids; the overload without them fetches the list itself.
CellComplex build_cell_complex(const FaceTable& ft, const Decomposition& d,
                               int comp_index,
                               const std::vector<int32_t>& comp_faces,
                               const CellOptions& opts);
CellComplex build_cell_complex(const FaceTable& ft, const Decomposition& d,
                               int comp_index, const CellOptions& opts);

// ---- explicit views (exports, isomorphism checks) --------------------------

struct DesingTriangulation {
  // one vertex per sheet; labels are (group element, vertex type)
  std::vector<std::pair<int32_t, int8_t>> vertex_labels;
  std::vector<std::array<int32_t, 3>> triangles;  // oriented (x,1),(y,1),(xy,2)
};

DesingTriangulation desing_triangulation(const FaceTable& ft,
                                         const std::vector<int32_t>& comp_faces);

struct ExplicitCellComplex {
  long long vertex_count = 0;
  std::vector<int32_t> vertex_valency;
  std::vector<std::vector<int32_t>> faces;  // cyclic rim vertex lists
};

ExplicitCellComplex explicit_cells(const FaceTable& ft,
                                   const std::vector<int32_t>& comp_faces);

/// Backtracking isomorphism search between small explicit cell complexes
/// (valency-respecting vertex bijection carrying faces to faces up to
/// rotation/reflection).
bool cell_complexes_isomorphic(const ExplicitCellComplex& a,
                               const ExplicitCellComplex& b);

}  // namespace gsurf
