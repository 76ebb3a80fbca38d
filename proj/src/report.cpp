#include "gsurf/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "gsurf/errors.hpp"

namespace gsurf {

using ordered_json = nlohmann::ordered_json;

namespace {

const char* doubling_name(CellComplex::Doubling d) {
  switch (d) {
    case CellComplex::Doubling::Hosohedral: return "hosohedral";
    case CellComplex::Doubling::Double: return "double";
    default: return "none";
  }
}

const char* family_name(TesselationDatum::Family f) {
  switch (f) {
    case TesselationDatum::Family::Hosohedral: return "hosohedral";
    case TesselationDatum::Family::DoubleHosohedral: return "double-hosohedral";
    default: return "concrete";
  }
}

ordered_json component_json(const ComponentSummary& s) {
  const CellComplex& cc = s.cells;
  ordered_json j;
  j["id"] = {cc.component_id.x, cc.component_id.y};
  j["genus"] = cc.genus;
  j["triangles"] = cc.tri_faces;
  j["V"] = cc.V;
  j["E"] = cc.E;
  j["F"] = cc.F;
  j["n"] = cc.n;
  if (cc.equivar)
    j["valencies"] = {cc.lambda1};
  else
    j["valencies"] = {cc.lambda1, cc.lambda2};
  j["V1"] = cc.V1;
  j["V2"] = cc.V2;
  j["schlafli"] = s.schlafli;
  j["equivar"] = cc.equivar;
  j["diamond"] = cc.diamond_ok;
  j["vertex_transitive_sufficient"] =
      tribool_name(cc.vertex_transitive_sufficient);
  j["regular_sufficient"] = tribool_name(cc.regular_sufficient);
  j["doubling"] = doubling_name(cc.doubling);
  if (cc.doubling == CellComplex::Doubling::Double) {
    std::ostringstream os;
    os << "{" << cc.double_s << "," << cc.double_k << "}";
    j["double_of"] = os.str();
  }
  j["divisibility_ok"] = true;  // violations abort the census build
  if (s.matched) {
    ordered_json m;
    m["family"] = family_name(s.match.family);
    m["symbol"] = s.match.symbol();
    m["counts_unbounded"] = s.match.counts_unbounded;
    if (!s.match.label.empty()) m["label"] = s.match.label;
    j["match"] = m;
  }
  return j;
}

}  // namespace

std::string census_json(const Census& c) {
  ordered_json j;
  j["schema_version"] = 1;
  j["group"] = c.group_name;
  j["order"] = c.order;
  j["class_count"] = c.class_count;
  j["center_size"] = c.center_size;
  {
    ordered_json cx;
    cx["vertices"] = c.stats.vertices;
    cx["e1_edges"] = c.stats.e1_edges;
    cx["e2_edges"] = c.stats.e2_edges;
    cx["faces"] = c.stats.faces;
    cx["euler"] = c.stats.euler;
    j["complex"] = cx;
  }
  j["component_count"] = c.component_count;
  {
    ordered_json mg = ordered_json::object();
    for (const auto& [genus, count] : c.genus_census)
      mg[std::to_string(genus)] = count;
    j["genus_census"] = mg;
  }
  j["circle_count"] = c.circle_count;
  j["total_sheets"] = c.total_sheets;
  {
    ordered_json ids = ordered_json::array();
    for (const IdentityCheck& ic : c.identities) {
      ordered_json e;
      e["name"] = ic.name;
      e["lhs"] = ic.lhs;
      e["rhs"] = ic.rhs;
      e["pass"] = ic.pass;
      if (!ic.detail.empty()) e["detail"] = ic.detail;
      ids.push_back(e);
    }
    j["identities"] = ids;
    j["identities_pass"] = c.identities_pass;
  }
  {
    ordered_json comps = ordered_json::array();
    for (const ComponentSummary& s : c.components)
      comps.push_back(component_json(s));
    j["components"] = comps;
  }
  return j.dump(2) + "\n";
}

std::string census_text(const Census& c) {
  std::ostringstream os;
  os << "group " << c.group_name << ": order " << c.order << ", "
     << c.class_count << " classes, center " << c.center_size << "\n";
  os << "complex: " << c.stats.vertices << " vertices, " << c.stats.e1_edges
     << " type1-type1 edges, " << c.stats.faces << " triangles, euler "
     << c.stats.euler << "\n";
  os << "components: " << c.component_count << ", circles L=" << c.circle_count
     << ", sheets " << c.total_sheets << "\n";
  os << "genus census:";
  for (const auto& [genus, count] : c.genus_census)
    os << " m_" << genus << "=" << count;
  os << "\n";
  long long pass = 0;
  for (const IdentityCheck& ic : c.identities) pass += ic.pass ? 1 : 0;
  os << "identities: " << pass << "/" << c.identities.size() << " pass\n";
  for (const IdentityCheck& ic : c.identities)
    if (!ic.pass)
      os << "  FAIL " << ic.name << ": lhs=" << ic.lhs << " rhs=" << ic.rhs
         << " " << ic.detail << "\n";

  // Group identical component types.
  std::map<std::string, long long> types;
  for (const ComponentSummary& s : c.components) {
    const CellComplex& cc = s.cells;
    std::ostringstream line;
    line << s.schlafli << "  g=" << cc.genus << "  (V,E,F)=(" << cc.V << ","
         << cc.E << "," << cc.F << ")";
    line << "  vt=" << tribool_name(cc.vertex_transitive_sufficient)
         << " reg=" << tribool_name(cc.regular_sufficient);
    if (cc.doubling != CellComplex::Doubling::None)
      line << " " << doubling_name(cc.doubling);
    if (s.matched && !s.match.label.empty()) line << "  [" << s.match.label << "]";
    ++types[line.str()];
  }
  os << "component types:\n";
  for (const auto& [line, count] : types)
    os << "  " << count << " x " << line << "\n";
  return os.str();
}

std::string off_mesh(const DesingTriangulation& tri, FaceKey component_id) {
  const int nv = (int)tri.vertex_labels.size();
  const int nf = (int)tri.triangles.size();

  // Deterministic spectral-style layout: three shifted-adjacency power
  // iterations orthogonalized against the constant vector and each other.
  std::vector<std::set<int32_t>> nbr(nv);
  for (const auto& t : tri.triangles) {
    nbr[t[0]].insert(t[1]);
    nbr[t[1]].insert(t[0]);
    nbr[t[1]].insert(t[2]);
    nbr[t[2]].insert(t[1]);
    nbr[t[2]].insert(t[0]);
    nbr[t[0]].insert(t[2]);
  }
  long long ne = 0;
  size_t maxdeg = 0;
  for (const auto& s : nbr) {
    ne += (long long)s.size();
    maxdeg = std::max(maxdeg, s.size());
  }
  ne /= 2;

  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^
                      ((uint64_t)(uint32_t)component_id.x << 32) ^
                      (uint64_t)(uint32_t)component_id.y);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<std::vector<double>> axes(3, std::vector<double>(nv));
  for (auto& v : axes)
    for (double& x : v) x = unit(rng);

  auto dot = [&](const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (int i = 0; i < nv; ++i) s += a[i] * b[i];
    return s;
  };
  auto normalize = [&](std::vector<double>& v) {
    double norm = std::sqrt(dot(v, v));
    if (norm < 1e-12) norm = 1;
    for (double& x : v) x /= norm;
  };
  const double shift = (double)maxdeg + 1.0;
  std::vector<double> next(nv);
  for (int k = 0; k < 3; ++k) {
    std::vector<double>& v = axes[k];
    for (int iter = 0; iter < 150; ++iter) {
      for (int i = 0; i < nv; ++i) {
        double s = shift * v[i];
        for (int32_t j : nbr[i]) s += v[j];
        next[i] = s;
      }
      std::swap(v, next);
      double mean = 0;
      for (double x : v) mean += x;
      mean /= nv;
      for (double& x : v) x -= mean;  // orthogonal to the constant mode
      for (int prev = 0; prev < k; ++prev) {
        double proj = dot(v, axes[prev]);
        for (int i = 0; i < nv; ++i) v[i] -= proj * axes[prev][i];
      }
      normalize(v);
    }
  }

  std::ostringstream os;
  os << "OFF\n" << nv << " " << nf << " " << ne << "\n";
  char buf[80];
  for (int i = 0; i < nv; ++i) {
    std::snprintf(buf, sizeof buf, "%.6f %.6f %.6f\n", axes[0][i], axes[1][i],
                  axes[2][i]);
    os << buf;
  }
  for (const auto& t : tri.triangles)
    os << "3 " << t[0] << " " << t[1] << " " << t[2] << "\n";
  return os.str();
}

int export_census(const Pipeline& p, const std::string& json_path,
                  const std::string& off_dir) {
  int written = 0;
  if (!json_path.empty()) {
    const std::string text = census_json(p.census);
    if (json_path == "-") {
      std::cout << text;
    } else {
      std::ofstream out(json_path, std::ios::binary);
      if (!out) fail(ErrorKind::Io, "cannot open " + json_path);
      out << text;
      if (!out) fail(ErrorKind::Io, "write failed: " + json_path);
      ++written;
    }
  }
  if (!off_dir.empty()) {
    for (size_t i = 0; i < p.census.components.size(); ++i) {
      const ComponentSummary& s = p.census.components[i];
      DesingTriangulation tri = desing_triangulation(
          *p.faces, p.faces_by_component[s.comp_index]);
      char name[32];
      std::snprintf(name, sizeof name, "comp_%05zu.off", i);
      const std::string path = off_dir + "/" + name;
      std::ofstream out(path, std::ios::binary);
      if (!out) fail(ErrorKind::Io, "cannot open " + path);
      out << off_mesh(tri, s.cells.component_id);
      if (!out) fail(ErrorKind::Io, "write failed: " + path);
      ++written;
    }
  }
  return written;
}

}  // namespace gsurf
