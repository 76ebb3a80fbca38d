#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gsurf/alpha.hpp"
#include "gsurf/complex.hpp"

namespace gsurf {

// Components of the complex under face adjacency are closed pseudomanifolds;
// replacing every vertex by one point per sheet of its star (the
// desingularization) turns each component into a closed oriented surface.

struct SheetRecord {
  int32_t element = 0;
  int8_t vtype = 0;   // 1 or 2
  int32_t size = 0;   // triangles in the sheet
};

struct Component {
  FaceKey id;                    // lexicographically minimal face
  long long faces = 0;           // triangle count
  long long tri_edges = 0;       // 3*faces/2
  long long desing_vertices = 0; // one per incident sheet
  long long euler = 0;
  long long genus = 0;
  long long type1_sheets = 0;
  long long type2_sheets = 0;
  std::vector<SheetRecord> sheet_records;  // deterministic order
};

class Decomposition {
 public:
  explicit Decomposition(const FaceTable& ft, int threads = 1);

  const FaceTable& face_table() const { return *ft_; }
  const std::vector<Component>& components() const { return comps_; }
  int component_count() const { return (int)comps_.size(); }
  int32_t component_of_face(int32_t face_id) const { return comp_of_face_[face_id]; }
  std::vector<int32_t> face_ids_of(int comp_index) const;

  /// Geometric sheet counts (type2, type1) about the vertices of alpha.
  std::pair<int32_t, int32_t> geometric_sheets(int32_t alpha) const {
    return {geom_s2_[alpha], geom_s1_[alpha]};
  }

  long long total_sheets() const { return total_sheets_; }
  /// First Betti number of the component/vertex incidence graph; throws
  /// DisconnectedIncidenceGraph if that graph is not connected.
  long long circle_count() const;

  /// Genus census m_g: genus -> number of components.
  std::map<long long, long long> genus_census() const;

 private:
  const FaceTable* ft_;
  std::vector<int32_t> comp_of_face_;
  std::vector<Component> comps_;
  std::vector<int32_t> geom_s1_, geom_s2_;
  long long total_sheets_ = 0;
  long long incidence_components_ = 1;
};

/// Spec-shaped conveniences (the class above is the fast path; these are the
/// small-surface equivalents used by tests and tools).
std::vector<std::vector<int32_t>> component_face_sets(const FaceTable& ft);
Component desingularize(const FaceTable& ft, const std::vector<int32_t>& faces);

struct IdentityCheck {
  std::string name;
  long long lhs = 0;
  long long rhs = 0;
  bool pass = false;
  std::string detail;
};

/// The global identity suite: centralizer sum, commuting probability,
/// sheet-count predictions, the Euler/circle identity and the orbit-sum
/// identity. All comparisons are exact.
std::vector<IdentityCheck> verify_global_identities(
    const Group& g, const std::vector<AlphaCounts>& alpha,
    const Decomposition& d);

/// Throws IdentityViolation on the first failed entry.
void require_identities(const std::vector<IdentityCheck>& checks);

struct MonotonicityReport {
  bool pass = true;
  std::string detail;
};

/// For an embedding H <= G: every component of X(H) maps into a single
/// component of X(G) with the same face count and genus, so the genus census
/// of H is dominated by that of G.
MonotonicityReport monotonicity_check(const Homomorphism& f,
                                      const FaceTable& ft_h,
                                      const Decomposition& dh,
                                      const FaceTable& ft_g,
                                      const Decomposition& dg);

}  // namespace gsurf
