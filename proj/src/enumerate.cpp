#include "gsurf/enumerate.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gsurf/errors.hpp"
#include "gsurf/rational.hpp"

namespace gsurf {

std::string TesselationDatum::symbol() const {
  if (parametric)
    return family == Family::Hosohedral ? "{n,2}" : "{4,2-k}";
  std::ostringstream os;
  os << "{" << n << ",";
  if (equivar())
    os << lambda1;
  else
    os << lambda1 << "-" << lambda2;
  os << "}";
  return os.str();
}

namespace {

const char* platonic_label(int n, int lambda) {
  if (n == 3 && lambda == 3) return "tetrahedron";
  if (n == 4 && lambda == 3) return "cube";
  if (n == 3 && lambda == 4) return "octahedron";
  if (n == 5 && lambda == 3) return "dodecahedron";
  if (n == 3 && lambda == 5) return "icosahedron";
  return "";
}

// Solve 2 - 2g = 2 (1/lambda + 1/n - 1/2) E for positive integer counts.
// inv_lambda is 1/lambda (harmonic in the two-valency case). Genus 1 admits
// exactly the slope-zero symbols, with counts left unbounded.
std::optional<TesselationDatum> solve_datum(long long g, int n, int l1,
                                            int l2) {
  if (n < 3 || l1 < 3 || l2 < l1) return std::nullopt;
  const bool two = l1 != l2;
  if (two && n % 2 != 0) return std::nullopt;
  Rational inv_lambda =
      two ? Rational(1, 2 * l1) + Rational(1, 2 * l2) : Rational(1, l1);
  Rational q = inv_lambda + Rational(1, n) - Rational(1, 2);

  TesselationDatum d;
  d.genus = g;
  d.n = n;
  d.lambda1 = l1;
  d.lambda2 = l2;
  if (g == 1) {
    if (!(q == Rational(0))) return std::nullopt;
    d.counts_unbounded = true;
    return d;
  }
  // E = (1-g)/q, then F = 2E/n, V_i = E/lambda_i.
  if (q == Rational(0)) return std::nullopt;
  Rational e = Rational(1 - g) / q;
  if (!(e > Rational(0)) || e.den != 1) return std::nullopt;
  d.E = e.num;
  if ((2 * d.E) % n != 0) return std::nullopt;
  d.F = 2 * d.E / n;
  if (two) {
    if (d.E % l1 != 0 || d.E % l2 != 0) return std::nullopt;
    d.V1 = d.E / l1;
    d.V2 = d.E / l2;
  } else {
    if ((2 * d.E) % l1 != 0) return std::nullopt;
    d.V1 = 2 * d.E / l1;
    d.V2 = 0;
  }
  d.V = d.V1 + d.V2;
  if (d.V <= 0 || d.F <= 0) return std::nullopt;
  d.label = two ? (l2 == 4 ? "rhombic dodecahedron"
                           : (l2 == 5 ? "rhombic triacontahedron" : ""))
                : platonic_label(n, l1);
  if (two && g != 0) d.label = "";
  return d;
}

// The double D{s,k} = {2s,2-k}: a valency-2 vertex on every edge.
TesselationDatum make_double(const TesselationDatum& base) {
  TesselationDatum d;
  d.genus = base.genus;
  d.n = 2 * base.n;
  d.lambda1 = 2;
  d.lambda2 = base.lambda1;
  d.counts_unbounded = base.counts_unbounded;
  if (!d.counts_unbounded) {
    d.V1 = base.E;  // the new midpoints
    d.V2 = base.V;
    d.V = base.V + base.E;
    d.E = 2 * base.E;
    d.F = base.F;
  }
  if (!base.label.empty()) d.label = "double " + base.label;
  return d;
}

TesselationDatum hosohedral_family() {
  TesselationDatum d;
  d.family = TesselationDatum::Family::Hosohedral;
  d.parametric = true;
  d.lambda1 = d.lambda2 = 2;
  d.label = "dual hosohedron";
  return d;
}

TesselationDatum double_hosohedral_family() {
  TesselationDatum d;
  d.family = TesselationDatum::Family::DoubleHosohedral;
  d.parametric = true;
  d.n = 4;
  d.lambda1 = 2;
  d.label = "double hosohedron";
  return d;
}

TesselationDatum hosohedral_instance(int n) {
  TesselationDatum d;
  d.family = TesselationDatum::Family::Hosohedral;
  d.n = n;
  d.lambda1 = d.lambda2 = 2;
  d.V1 = d.V = d.E = n;
  d.F = 2;
  d.label = "dual hosohedron";
  return d;
}

TesselationDatum double_hosohedral_instance(int k) {
  TesselationDatum d;
  d.family = TesselationDatum::Family::DoubleHosohedral;
  d.n = 4;
  d.lambda1 = 2;
  d.lambda2 = k;
  d.V1 = k;  // midpoints of the k digon edges
  d.V2 = 2;
  d.V = k + 2;
  d.E = 2 * k;
  d.F = k;
  d.label = "double hosohedron";
  return d;
}

}  // namespace

std::vector<TesselationDatum> enumerate_tesselations(long long genus) {
  if (genus < 0) fail(ErrorKind::InvalidParameter, "negative genus");
  std::vector<TesselationDatum> out;
  const int nl_max = genus == 0 ? 5 : (int)(2 * (2 * genus + 1));
  const int l1_max = genus == 0 ? 5 : (int)(2 * genus + 1);
  const int l2_max = genus == 0 ? 5 : (int)(6 * genus);

  if (genus == 0) {
    out.push_back(hosohedral_family());
    out.push_back(double_hosohedral_family());
  }
  for (int n = 3; n <= nl_max; ++n)
    for (int lam = 3; lam <= nl_max; ++lam)
      if (auto d = solve_datum(genus, n, lam, lam)) {
        out.push_back(*d);
        out.push_back(make_double(*d));
      }
  for (int n = 4; n <= nl_max; n += 2)
    for (int l1 = 3; l1 <= l1_max; ++l1)
      for (int l2 = l1 + 1; l2 <= l2_max; ++l2)
        if (auto d = solve_datum(genus, n, l1, l2)) out.push_back(*d);

  std::sort(out.begin(), out.end(), [](const TesselationDatum& a,
                                       const TesselationDatum& b) {
    auto key = [](const TesselationDatum& t) {
      return std::make_tuple(!t.parametric, t.family, t.F, t.n,
                             t.lambda1, t.lambda2);
    };
    return key(a) < key(b);
  });
  return out;
}

TesselationDatum match_component(const CellComplex& cc) {
  auto mismatch = [&](const std::string& why) -> void {
    std::ostringstream os;
    os << "component (" << cc.component_id.x << "," << cc.component_id.y
       << ") with data g=" << cc.genus << " n=" << cc.n << " valencies "
       << cc.lambda1 << "," << cc.lambda2 << " (V,E,F)=(" << cc.V << ","
       << cc.E << "," << cc.F << "): " << why;
    fail(ErrorKind::NoMatch, os.str());
  };
  auto counts_match = [&](const TesselationDatum& d) {
    return d.counts_unbounded ||
           (d.V1 == cc.V1 && d.V2 == cc.V2 && d.V == cc.V && d.E == cc.E &&
            d.F == cc.F);
  };

  if (cc.lambda1 == 2) {
    if (cc.equivar) {
      // {n,2}: the hosohedral family (genus 0 only).
      if (cc.genus != 0) mismatch("hosohedral symbol off the sphere");
      TesselationDatum d = hosohedral_instance(cc.n);
      if (!counts_match(d)) mismatch("hosohedral counts");
      return d;
    }
    if (cc.genus == 0 && cc.n == 4) {
      TesselationDatum d = double_hosohedral_instance(cc.lambda2);
      if (!counts_match(d)) mismatch("double-hosohedral counts");
      return d;
    }
    // General double D{n/2, lambda2} of an equivar datum of the same genus.
    if (cc.n % 2 != 0) mismatch("valency-2 data with odd gonality");
    auto base = solve_datum(cc.genus, cc.n / 2, cc.lambda2, cc.lambda2);
    if (!base) mismatch("no underlying equivar datum for the double");
    TesselationDatum d = make_double(*base);
    if (!counts_match(d)) mismatch("doubled counts disagree");
    return d;
  }

  auto d = solve_datum(cc.genus, cc.n, cc.lambda1, cc.lambda2);
  if (!d) mismatch("no admissible datum at this genus and symbol");
  if (!counts_match(*d)) mismatch("counts disagree with the solved datum");
  return *d;
}

}  // namespace gsurf
