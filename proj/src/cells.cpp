#include "gsurf/cells.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "gsurf/automorphism.hpp"
#include "gsurf/errors.hpp"
#include "gsurf/rational.hpp"

namespace gsurf {

const char* tribool_name(TriBool t) {
  switch (t) {
    case TriBool::False: return "false";
    case TriBool::True: return "true";
    default: return "unknown";
  }
}

namespace {

[[noreturn]] void bad_identity(const FaceKey& id, const std::string& what) {
  std::ostringstream os;
  os << "component (" << id.x << "," << id.y << "): " << what;
  fail(ErrorKind::IdentityViolation, os.str());
}

// Corner-to-sheet assignment for one component: which type-1 sheet holds each
// face's x and y corner, which type-2 sheet (polygon) holds the face. Sheets
// are numbered in discovery order over the ascending face scan.
struct CompCorners {
  std::unordered_map<int32_t, int32_t> xcorner, ycorner, fcell;
  std::vector<int32_t> vertex_element;           // per type-1 sheet
  std::vector<int32_t> vertex_valency;           // triangles/2 == rim edges
  std::vector<int32_t> fan_element;              // per type-2 sheet
  std::vector<std::vector<int32_t>> fan_faces;   // cyclic fan order
};

void trace_type1(const FaceTable& ft, CompCorners& co, int32_t beta,
                 int32_t u0) {
  const Group& g = ft.group();
  int32_t sid = (int32_t)co.vertex_element.size();
  co.vertex_element.push_back(beta);
  int32_t valency = 0;
  int32_t u = u0;
  do {
    co.xcorner.emplace(ft.id_of(beta, u), sid);
    co.ycorner.emplace(ft.id_of(u, beta), sid);
    ++valency;
    u = g.conj(u, beta);
  } while (u != u0);
  co.vertex_valency.push_back(valency);
}

CompCorners trace_corners(const FaceTable& ft,
                          const std::vector<int32_t>& faces) {
  const Group& g = ft.group();
  CompCorners co;
  co.xcorner.reserve(faces.size() * 2);
  co.ycorner.reserve(faces.size() * 2);
  co.fcell.reserve(faces.size() * 2);
  for (int32_t fid : faces) {
    FaceKey f = ft.key_of(fid);
    if (!co.fcell.count(fid)) {
      int32_t sid = (int32_t)co.fan_element.size();
      int32_t alpha = g.op(f.x, f.y);
      co.fan_element.push_back(alpha);
      std::vector<int32_t> fan;
      int32_t u = f.x;
      do {
        int32_t cur = ft.id_of(u, g.op(g.inverse(u), alpha));
        fan.push_back(cur);
        co.fcell.emplace(cur, sid);
        u = g.op(g.inverse(u), alpha);
      } while (u != f.x);
      co.fan_faces.push_back(std::move(fan));
    }
    if (!co.xcorner.count(fid)) trace_type1(ft, co, f.x, f.y);
    if (!co.ycorner.count(fid)) trace_type1(ft, co, f.y, f.x);
  }
  return co;
}

}  // namespace

CellComplex cell_structure(const FaceTable& ft, const Decomposition& d,
                           int comp_index) {
  const Group& g = ft.group();
  const Component& comp = d.components().at(comp_index);
  CellComplex cc;
  cc.component_id = comp.id;
  cc.genus = comp.genus;
  cc.tri_faces = comp.faces;
  cc.V = comp.type1_sheets;
  cc.F = comp.type2_sheets;
  cc.E = comp.faces / 2;

  // Gonality: every type-2 sheet must collapse to the same polygon.
  // Valencies: at most two distinct values among the type-1 sheets.
  std::map<int, long long> valency_count;
  for (const SheetRecord& sr : comp.sheet_records) {
    if (sr.vtype == 2) {
      if (cc.n == 0) cc.n = sr.size;
      if (sr.size != cc.n) {
        std::ostringstream os;
        os << "component (" << comp.id.x << "," << comp.id.y
           << "): polygon sizes " << cc.n << " and " << sr.size << " differ";
        fail(ErrorKind::InconsistentGonality, os.str());
      }
    } else {
      if (sr.size % 2 != 0)
        bad_identity(comp.id, "odd triangle count in a type-1 sheet");
      int val = sr.size / 2;
      ++valency_count[val];
      cc.vertex_orbit_info.emplace_back(sr.element, val);
    }
  }
  if (cc.n < 3) bad_identity(comp.id, "polygon gonality below 3");
  if (valency_count.size() > 2) {
    std::ostringstream os;
    os << "component (" << comp.id.x << "," << comp.id.y << "): valencies";
    for (auto& [v, c] : valency_count) os << " " << v;
    fail(ErrorKind::MoreThanTwoValencies, os.str());
  }
  cc.equivar = valency_count.size() == 1;
  cc.lambda1 = valency_count.begin()->first;
  cc.V1 = valency_count.begin()->second;
  if (cc.equivar) {
    cc.lambda2 = cc.lambda1;
    cc.V2 = 0;
  } else {
    cc.lambda2 = std::next(valency_count.begin())->first;
    cc.V2 = std::next(valency_count.begin())->second;
  }

  // Counting identities, all exact.
  if (cc.V1 + cc.V2 != cc.V) bad_identity(comp.id, "vertex counts disagree");
  if (2 * cc.E != comp.faces) bad_identity(comp.id, "edge count not faces/2");
  if ((long long)cc.n * cc.F != 2 * cc.E)
    bad_identity(comp.id, "n*F != 2E");
  if ((long long)cc.lambda1 * cc.V1 + (long long)cc.lambda2 * cc.V2 !=
      2 * cc.E)
    bad_identity(comp.id, "valency sum != 2E");
  if (!cc.equivar) {
    if (cc.n % 2 != 0) bad_identity(comp.id, "two valencies with odd gonality");
    if ((long long)cc.lambda1 * cc.V1 != cc.E ||
        (long long)cc.lambda2 * cc.V2 != cc.E)
      bad_identity(comp.id, "E != lambda_i * V_i in the two-valency case");
    // 1/lambda = 1/(2 lambda1) + 1/(2 lambda2) with lambda = 2E/V
    if (Rational(cc.V, 2 * cc.E) !=
        Rational(1, 2 * cc.lambda1) + Rational(1, 2 * cc.lambda2))
      bad_identity(comp.id, "harmonic valency relation fails");
  }

  // Euler characteristic through the cell counts and through the rational
  // tesselation relation must both reproduce the triangulation's genus.
  if (cc.V - cc.E + cc.F != comp.euler)
    bad_identity(comp.id, "cell Euler characteristic disagrees");
  Rational rel = (Rational(cc.V, 2 * cc.E) + Rational(1, cc.n) -
                  Rational(1, 2)) *
                 Rational(2 * cc.E);
  if (rel != Rational(2 - 2 * cc.genus))
    bad_identity(comp.id, "rational genus relation fails");

  // Group-theoretic predictions from the defining pair.
  const int32_t x = comp.id.x, y = comp.id.y;
  const int32_t alpha = g.op(x, y);
  int lx = cyclic_orbit_size(g, x, alpha);
  int ly = cyclic_orbit_size(g, y, alpha);
  int r = cyclic_orbit_size(g, alpha, x);
  int n_pred = alpha_conjugate(g, alpha, x, y) ? r : 2 * r;
  if (n_pred != cc.n) bad_identity(comp.id, "predicted gonality disagrees");
  if (cc.equivar) {
    if (lx != cc.lambda1 || ly != cc.lambda1)
      bad_identity(comp.id, "predicted valencies disagree (equivar)");
  } else {
    if (std::minmax(lx, ly) != std::minmax(cc.lambda1, cc.lambda2))
      bad_identity(comp.id, "predicted valencies disagree");
  }

  // Conjugacy constraints on sheet labels: one class of polygon centers,
  // vertex labels conjugate to x or to y.
  const int32_t cx = g.class_of[x], cy = g.class_of[y];
  const int32_t ca = g.class_of[alpha];
  for (const SheetRecord& sr : comp.sheet_records) {
    if (sr.vtype == 2) {
      if (g.class_of[sr.element] != ca)
        bad_identity(comp.id, "polygon centers span several classes");
    } else if (g.class_of[sr.element] != cx && g.class_of[sr.element] != cy) {
      bad_identity(comp.id, "vertex label outside the defining classes");
    }
  }
  return cc;
}

std::string schlafli_symbol(const CellComplex& cc) {
  std::ostringstream os;
  os << "{" << cc.n << ",";
  if (cc.equivar)
    os << cc.lambda1;
  else
    os << cc.lambda1 << "-" << cc.lambda2;
  os << "}";
  return os.str();
}

void polytope_flags(const FaceTable& ft, CellComplex& cc,
                    const CellOptions& opts) {
  const Group& g = ft.group();
  const int32_t x = cc.component_id.x, y = cc.component_id.y;
  const int32_t alpha = g.op(x, y);
  const bool cond3 = alpha_conjugate(g, alpha, x, y);
  const bool searchable = opts.with_flags && opts.automorphism_search_cap > 0 &&
                          g.n <= opts.automorphism_search_cap;

  cc.vertex_transitive_sufficient = TriBool::Unknown;
  cc.regular_sufficient = TriBool::Unknown;
  if (cond3) {
    cc.vertex_transitive_sufficient = TriBool::True;
  } else if (searchable) {
    const bool aut1 = automorphism_exists(g, {{x, y}, {y, g.conj(x, y)}});
    cc.vertex_transitive_sufficient = aut1 ? TriBool::True : TriBool::False;
  }
  if (cc.vertex_transitive_sufficient == TriBool::True && searchable) {
    const bool aut2 =
        automorphism_exists(g, {{x, g.inverse(y)}, {y, g.inverse(x)}});
    cc.regular_sufficient = aut2 ? TriBool::True : TriBool::False;
  } else if (cc.vertex_transitive_sufficient == TriBool::False) {
    // both sufficient conditions for regularity require the transitivity one
    cc.regular_sufficient = TriBool::False;
  }
}

void verify_diamond(const FaceTable& ft, CellComplex& cc,
                    const std::vector<int32_t>& comp_faces) {
  CompCorners co = trace_corners(ft, comp_faces);
  auto bad = [&](const char* what) {
    std::ostringstream os;
    os << "component (" << cc.component_id.x << "," << cc.component_id.y
       << "): " << what;
    fail(ErrorKind::DiamondViolation, os.str());
  };
  if ((long long)co.vertex_element.size() != cc.V ||
      (long long)co.fan_element.size() != cc.F) {
    bad("sheet counts from corner tracing disagree with the census");
  }
  for (int32_t fid : comp_faces) {
    FaceKey f = ft.key_of(fid);
    int32_t mirror = ft.id_of(f.y, f.x);
    int32_t vx = co.xcorner.at(fid), vy = co.ycorner.at(fid);
    if (vx == vy) bad("cell edge with coinciding endpoints");
    if (co.xcorner.at(mirror) != vy || co.ycorner.at(mirror) != vx)
      bad("edge endpoint sheets disagree across the edge");
    if (co.fcell.at(fid) == co.fcell.at(mirror))
      bad("cell edge with the same face on both sides");
  }
  std::vector<int32_t> rim;
  for (const auto& fan : co.fan_faces) {
    rim.clear();
    for (size_t k = 0; k < fan.size(); ++k) {
      rim.push_back(co.xcorner.at(fan[k]));
      if (co.ycorner.at(fan[k]) != co.xcorner.at(fan[(k + 1) % fan.size()]))
        bad("polygon rim is not a closed vertex cycle");
    }
    std::sort(rim.begin(), rim.end());
    if (std::adjacent_find(rim.begin(), rim.end()) != rim.end())
      bad("polygon rim revisits a vertex");
  }
  cc.diamond_ok = true;
}

void doubling_relation(CellComplex& cc) {
  cc.doubling = CellComplex::Doubling::None;
  if (cc.lambda1 != 2) return;
  if (cc.equivar) {
    // {n,2}: two n-gons glued along their common rim.
    cc.doubling = CellComplex::Doubling::Hosohedral;
    if (cc.genus != 0 || cc.F != 2 || cc.E != cc.V || cc.E != cc.n)
      bad_identity(cc.component_id, "hosohedral counts fail");
    return;
  }
  // {2s,2-k} = the double of {s,k}: valency-2 vertices are edge midpoints.
  cc.doubling = CellComplex::Doubling::Double;
  if (cc.n % 2 != 0)
    bad_identity(cc.component_id, "double with odd gonality");
  cc.double_s = cc.n / 2;
  cc.double_k = cc.lambda2;
  // Doubling preserves genus, so a spherical underlying datum forces g = 0.
  if (Rational(1, cc.double_s) + Rational(1, cc.double_k) > Rational(1, 2) &&
      cc.genus != 0)
    bad_identity(cc.component_id, "double of a spherical datum not genus 0");
}

DivisibilityReport divisibility_report(const Group& g, const CellComplex& cc) {
  DivisibilityReport rep;
  auto req = [&](bool ok, const std::string& msg) {
    if (!ok) {
      rep.ok = false;
      rep.failures.push_back(msg);
    }
  };
  auto divides = [](long long a, long long b) { return a > 0 && b % a == 0; };
  std::ostringstream tag;
  tag << "component (" << cc.component_id.x << "," << cc.component_id.y
      << "): ";
  req(divides(cc.E, g.n),
      tag.str() + "edge count " + std::to_string(cc.E) +
          " does not divide the group order");
  req(divides(cc.F, g.n),
      tag.str() + "face count " + std::to_string(cc.F) +
          " does not divide the group order");
  if (!cc.equivar) {
    req(divides(cc.lambda1, cc.E),
        tag.str() + "valency " + std::to_string(cc.lambda1) +
            " does not divide the edge count");
    req(divides(cc.lambda2, cc.E),
        tag.str() + "valency " + std::to_string(cc.lambda2) +
            " does not divide the edge count");
  }
  req(divides(cc.n, 2 * cc.E), tag.str() + "gonality does not divide 2E");
  if (cc.E == g.n || cc.F == g.n) {
    const int32_t x = cc.component_id.x, y = cc.component_id.y;
    int shared = 0;
    for (int32_t t = 0; t < g.n; ++t)
      if (g.commutes(x, t) && g.commutes(y, t)) ++shared;
    req(shared == 1,
        tag.str() + "centralizers of the defining pair meet nontrivially");
    req(g.center_size() == 1, tag.str() + "center nontrivial at E or F = |G|");
  }
  return rep;
}

CellComplex build_cell_complex(const FaceTable& ft, const Decomposition& d,
                               int comp_index,
                               const std::vector<int32_t>& comp_faces,
                               const CellOptions& opts) {
  CellComplex cc = cell_structure(ft, d, comp_index);
  verify_diamond(ft, cc, comp_faces);
  polytope_flags(ft, cc, opts);
  doubling_relation(cc);
  DivisibilityReport rep = divisibility_report(ft.group(), cc);
  if (!rep.ok) fail(ErrorKind::DivisibilityViolation, rep.failures.front());
  return cc;
}

CellComplex build_cell_complex(const FaceTable& ft, const Decomposition& d,
                               int comp_index, const CellOptions& opts) {
  return build_cell_complex(ft, d, comp_index, d.face_ids_of(comp_index),
                            opts);
}

DesingTriangulation desing_triangulation(
    const FaceTable& ft, const std::vector<int32_t>& comp_faces) {
  CompCorners co = trace_corners(ft, comp_faces);
  DesingTriangulation tri;
  const int32_t nv = (int32_t)co.vertex_element.size();
  tri.vertex_labels.reserve(nv + co.fan_element.size());
  for (int32_t e : co.vertex_element) tri.vertex_labels.emplace_back(e, 1);
  for (int32_t e : co.fan_element) tri.vertex_labels.emplace_back(e, 2);
  tri.triangles.reserve(comp_faces.size());
  for (int32_t fid : comp_faces)
    tri.triangles.push_back({co.xcorner.at(fid), co.ycorner.at(fid),
                             nv + co.fcell.at(fid)});
  return tri;
}

ExplicitCellComplex explicit_cells(const FaceTable& ft,
                                   const std::vector<int32_t>& comp_faces) {
  CompCorners co = trace_corners(ft, comp_faces);
  ExplicitCellComplex ex;
  ex.vertex_count = (long long)co.vertex_element.size();
  ex.vertex_valency = co.vertex_valency;
  ex.faces.reserve(co.fan_faces.size());
  for (const auto& fan : co.fan_faces) {
    std::vector<int32_t> rim;
    rim.reserve(fan.size());
    for (int32_t fid : fan) rim.push_back(co.xcorner.at(fid));
    ex.faces.push_back(std::move(rim));
  }
  return ex;
}

namespace {

// Lexicographically least rotation of the cycle, over both directions.
std::vector<int32_t> canonical_cycle(const std::vector<int32_t>& c) {
  std::vector<int32_t> best;
  std::vector<int32_t> cur = c;
  for (int dir = 0; dir < 2; ++dir) {
    for (size_t s = 0; s < cur.size(); ++s) {
      std::vector<int32_t> rot(cur.begin() + s, cur.end());
      rot.insert(rot.end(), cur.begin(), cur.begin() + s);
      if (best.empty() || rot < best) best = rot;
    }
    std::reverse(cur.begin(), cur.end());
  }
  return best;
}

std::multiset<std::vector<int32_t>> canonical_faces(
    const ExplicitCellComplex& x,
    const std::vector<int32_t>* relabel = nullptr) {
  std::multiset<std::vector<int32_t>> out;
  for (const auto& f : x.faces) {
    std::vector<int32_t> c = f;
    if (relabel)
      for (auto& v : c) v = (*relabel)[v];
    out.insert(canonical_cycle(c));
  }
  return out;
}

std::vector<std::vector<char>> adjacency(const ExplicitCellComplex& x) {
  std::vector<std::vector<char>> adj(x.vertex_count,
                                     std::vector<char>(x.vertex_count, 0));
  for (const auto& f : x.faces)
    for (size_t k = 0; k < f.size(); ++k) {
      int32_t a = f[k], b = f[(k + 1) % f.size()];
      adj[a][b] = adj[b][a] = 1;
    }
  return adj;
}

bool extend_iso(const ExplicitCellComplex& a, const ExplicitCellComplex& b,
                const std::vector<std::vector<char>>& adj_a,
                const std::vector<std::vector<char>>& adj_b,
                std::vector<int32_t>& img, std::vector<char>& used,
                int32_t next) {
  if (next == (int32_t)a.vertex_count) {
    return canonical_faces(a, &img) == canonical_faces(b);
  }
  for (int32_t cand = 0; cand < (int32_t)b.vertex_count; ++cand) {
    if (used[cand] || a.vertex_valency[next] != b.vertex_valency[cand])
      continue;
    bool ok = true;
    for (int32_t prev = 0; prev < next && ok; ++prev)
      if (adj_a[next][prev] != adj_b[cand][img[prev]]) ok = false;
    if (!ok) continue;
    img[next] = cand;
    used[cand] = 1;
    if (extend_iso(a, b, adj_a, adj_b, img, used, next + 1)) return true;
    used[cand] = 0;
  }
  return false;
}

}  // namespace

bool cell_complexes_isomorphic(const ExplicitCellComplex& a,
                               const ExplicitCellComplex& b) {
  if (a.vertex_count != b.vertex_count || a.faces.size() != b.faces.size())
    return false;
  auto sorted = [](std::vector<int32_t> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sorted(a.vertex_valency) != sorted(b.vertex_valency)) return false;
  std::vector<size_t> fa, fb;
  for (const auto& f : a.faces) fa.push_back(f.size());
  for (const auto& f : b.faces) fb.push_back(f.size());
  std::sort(fa.begin(), fa.end());
  std::sort(fb.begin(), fb.end());
  if (fa != fb) return false;

  std::vector<int32_t> img(a.vertex_count, -1);
  std::vector<char> used(b.vertex_count, 0);
  return extend_iso(a, b, adjacency(a), adjacency(b), img, used, 0);
}

}  // namespace gsurf
