#pragma once

#include <string>

#include "gsurf/census.hpp"

namespace gsurf {

/// Census as deterministic JSON text: fixed field order, components in their
/// canonical sort order, 2-space indent, trailing newline. Byte-identical
/// across runs and thread counts.
std::string census_json(const Census& c);

/// Human-readable census summary (component types grouped and counted).
std::string census_text(const Census& c);

/// OFF mesh of one component's desingularized triangulation. Coordinates
/// come from a deterministic spectral layout seeded by the canonical
/// component id; the combinatorics are the contract, the geometry is only
/// for inspection.
std::string off_mesh(const DesingTriangulation& tri, FaceKey component_id);

/// Writes the census JSON (path "-" for stdout) and, when off_dir is
/// nonempty, one OFF file per component (comp_00000.off ... in canonical
/// order) into that directory. Returns the number of files written.
int export_census(const Pipeline& p, const std::string& json_path,
                  const std::string& off_dir);

}  // namespace gsurf
