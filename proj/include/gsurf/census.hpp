#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gsurf/cells.hpp"
#include "gsurf/complex.hpp"
#include "gsurf/decompose.hpp"
#include "gsurf/enumerate.hpp"
#include "gsurf/group.hpp"

namespace gsurf {

struct CensusOptions {
  int threads = 0;  // 0: GSURF_THREADS env, then hardware concurrency
  int automorphism_search_cap = 512;
  bool with_flags = true;   // polytope flag searches (cap-gated regardless)
  bool with_match = true;   // match every component against the enumeration
  bool allow_large = false;
  long long large_face_guard = 10'000'000;  // triangles
};

struct ComponentSummary {
  int comp_index = 0;  // index into Decomposition::components()
  CellComplex cells;
  std::string schlafli;
  bool matched = false;
  TesselationDatum match;  // valid when matched
};

struct Census {
  std::string group_name;
  int order = 0;
  int class_count = 0;
  int center_size = 0;
  ComplexStats stats;

  long long component_count = 0;
  std::map<long long, long long> genus_census;  // m_g
  long long circle_count = 0;                   // L
  long long total_sheets = 0;

  std::vector<ComponentSummary> components;  // sorted, see build_census
  std::vector<IdentityCheck> identities;
  bool identities_pass = false;
};

/// Full pipeline: complex stats, face-adjacency decomposition,
/// desingularized genus census, per-component cell structures with their
/// hard cross-checks, enumeration matching, and the global identity suite.
/// Components are sorted by (genus, n, lambda1, lambda2, triangle count,
/// canonical face). Throws CapExceeded when the face count exceeds the guard
/// and allow_large is not set; math-invariant failures throw their specific
/// error kinds.
Census build_census(const Group& g, const CensusOptions& opts = {});

/// The heavyweight intermediates, for callers that need more than the
/// summary (exports, monotonicity checks, tests).
struct Pipeline {
  std::unique_ptr<Group> group;  // set when the pipeline owns the group
  const Group* g = nullptr;
  std::unique_ptr<FaceTable> faces;
  std::unique_ptr<Decomposition> decomposition;
  std::vector<std::vector<int32_t>> faces_by_component;
  Census census;
};

/// The caller keeps `g` alive for the pipeline's lifetime (its face table
/// points into it)...
Pipeline run_pipeline(const Group& g, const CensusOptions& opts = {});
/// ...or hands the group over, and the pipeline owns it.
Pipeline run_pipeline(Group&& g, const CensusOptions& opts = {});

}  // namespace gsurf
