#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gsurf/cells.hpp"

namespace gsurf {

// Diophantine enumeration of the admissible edge/face-transitive closed-cell
// tesselation data per genus, independent of any group:
//   n F = 2 E,   n F = lambda V,   2 - 2g = 2 (1/lambda + 1/n - 1/2) E,
// with 1/lambda = 1/(2 lambda1) + 1/(2 lambda2) in the two-valency case, all
// solved in exact rational arithmetic. Search bounds are those forced by the
// relations: lambda, n < 6 for genus 0; for genus >= 1, lambda, n <= 2(2g+1),
// and in the two-valency case 3 <= lambda1 < 2g+2 and 3 < lambda2 <= 6g.
// Valency-2 data enter through doubling: {2s,2-k} is the double of {s,k},
// {n,2} and {4,2-k} are the two genus-0 infinite families.

struct TesselationDatum {
  enum class Family { Concrete, Hosohedral, DoubleHosohedral };

  long long genus = 0;
  Family family = Family::Concrete;
  bool parametric = false;       // family row with a free parameter
  bool counts_unbounded = false; // genus 1: E, V, F are not constrained
  int n = 0;
  int lambda1 = 0, lambda2 = 0;  // lambda1 == lambda2 when equivar
  long long V1 = 0, V2 = 0, V = 0, E = 0, F = 0;
  std::string label;             // solid type, when it has a classical name

  bool equivar() const { return lambda1 == lambda2; }
  std::string symbol() const;

  friend bool operator==(const TesselationDatum&,
                         const TesselationDatum&) = default;
};

/// All admissible data of the given genus: the complete finite list (genus 0
/// and >= 2; genus-0 additionally carries the two parametric families), or
/// the finite symbol list with unbounded counts (genus 1).
std::vector<TesselationDatum> enumerate_tesselations(long long genus);

/// The enumerated datum matching the component's cell data: exact count
/// match for genus 0 and genus >= 2, symbol match for genus 1. Throws
/// NoMatch when the data is inadmissible.
TesselationDatum match_component(const CellComplex& cc);

}  // namespace gsurf
