#pragma once

#include <string>
#include <vector>

#include "gsurf/census.hpp"

namespace gsurf {

// Closed-form expected censuses for the solved families, computed by pure
// arithmetic (Euler phi and divisor sums) with no pipeline code involved, so
// they can serve as independent golden values.

struct ExpectedRow {
  std::string schlafli;
  long long genus = 0;
  long long count = 0;
  long long V = 0, E = 0, F = 0;
};

struct ExpectedCensus {
  std::string family;
  std::vector<ExpectedRow> rows;  // sorted by (genus, schlafli)
  long long component_total = 0;
  bool require_regular = false;   // every component must be proven regular
};

/// Dihedral group of order 2n, n >= 3. Every component is a sphere: for each
/// divisor d > 1 of n there are phi(d)*n/(2d) dihedra {d,2} (only d >= 3 when
/// n is even), and the reflection-rim components are phi(d)*n/(2d) doubles
/// {4,2-d} for odd d, phi(d)*n/d doubles {4,2-(d/2)} for even d (with
/// {4,2-2} read as the hosohedron {4,2}).
ExpectedCensus dihedral_expected(int n);

/// Extraspecial group of order p^3 and exponent p, p an odd prime:
/// (p^2-1)(p^2-p)/2 identical components of genus p(p-3)/2 + 1 with symbol
/// {2p,p} and counts (2p, p^2, p), all regular.
ExpectedCensus extraspecial_expected(int p);

struct OracleComparison {
  bool pass = true;
  std::string detail;  // first discrepancy, empty when pass
};

/// Exact comparison of a pipeline census against the oracle: same multiset
/// of (schlafli, genus, V, E, F) rows with the same multiplicities, and the
/// regular flag proven true everywhere when the oracle requires it.
OracleComparison census_matches_expected(const Census& census,
                                         const ExpectedCensus& expected);

}  // namespace gsurf
