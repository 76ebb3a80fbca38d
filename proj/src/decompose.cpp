#include "gsurf/decompose.hpp"

#include <algorithm>
#include <numeric>

#include "gsurf/errors.hpp"
#include "gsurf/parallel.hpp"

namespace gsurf {

namespace {

struct UnionFind {
  std::vector<int32_t> parent;
  explicit UnionFind(int64_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int32_t find(int32_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];  // path halving
      v = parent[v];
    }
    return v;
  }
  void unite(int32_t a, int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) parent[b] = a;  // keep the smaller id as root
    else parent[a] = b;
  }
};

struct LocalSheet {
  int32_t comp = 0;
  int32_t size = 0;
  int8_t vtype = 0;
};

}  // namespace

Decomposition::Decomposition(const FaceTable& ft, int threads) : ft_(&ft) {
  const Group& g = ft.group();
  const int64_t F = ft.face_count();

  // 1. components of the face-adjacency graph
  UnionFind uf(F);
  for (int32_t id = 0; id < F; ++id) {
    auto nb = ft.neighbor_ids(id);
    uf.unite(id, nb[0]);
    uf.unite(id, nb[1]);
    uf.unite(id, nb[2]);
  }

  // 2. canonical component ids: ascending scan means the first face seen for
  // a root is the lexicographically minimal face of that component
  comp_of_face_.assign(F, -1);
  std::vector<int32_t> root_to_comp((size_t)F, -1);
  for (int32_t id = 0; id < F; ++id) {
    int32_t r = uf.find(id);
    if (root_to_comp[r] < 0) {
      root_to_comp[r] = (int32_t)comps_.size();
      Component c;
      c.id = ft.key_of(id);
      comps_.push_back(std::move(c));
    }
    comp_of_face_[id] = root_to_comp[r];
    ++comps_[root_to_comp[r]].faces;
  }

  // 3. trace every sheet, in parallel over the central element of its star
  const int K = (int)comps_.size();
  std::vector<std::vector<LocalSheet>> slots(g.n);
  geom_s1_.assign(g.n, 0);
  geom_s2_.assign(g.n, 0);
  parallel_chunks(threads, g.n, [&](int64_t begin, int64_t end) {
    std::vector<char> seen(g.n);
    for (int64_t a = begin; a < end; ++a) {
      const int32_t alpha = (int32_t)a;
      if (g.is_central(alpha)) continue;
      const int32_t ia = g.inv[alpha];
      auto& out = slots[alpha];

      // sheets about (alpha,2): faces (u, u^-1 alpha), fan step u -> u^-1 alpha
      std::fill(seen.begin(), seen.end(), 0);
      for (int32_t x = 0; x < g.n; ++x) {
        if (seen[x] || g.commutes(x, alpha)) continue;
        int32_t size = 0;
        int32_t u = x;
        do {
          seen[u] = 1;
          ++size;
          u = g.op(g.inv[u], alpha);
        } while (u != x);
        int32_t comp = comp_of_face_[ft.id_of(x, g.op(g.inv[x], alpha))];
        out.push_back({comp, size, 2});
        ++geom_s2_[alpha];
      }

      // sheets about (alpha,1): faces (alpha,u) and (u,alpha) over one
      // conjugation orbit; 2*orbit triangles per sheet
      std::fill(seen.begin(), seen.end(), 0);
      for (int32_t t = 0; t < g.n; ++t) {
        if (seen[t] || g.commutes(t, alpha)) continue;
        int32_t orbit = 0;
        int32_t u = t;
        do {
          seen[u] = 1;
          ++orbit;
          u = g.op(g.op(ia, u), alpha);
        } while (u != t);
        int32_t comp = comp_of_face_[ft.id_of(alpha, t)];
        out.push_back({comp, 2 * orbit, 1});
        ++geom_s1_[alpha];
      }
    }
  });

  // 4. aggregate per component and build the incidence graph
  // nodes: components, then (noncentral element, type) vertices
  std::vector<int32_t> vrank(g.n, -1);
  int32_t nnc = 0;
  for (int32_t x = 0; x < g.n; ++x)
    if (!g.is_central(x)) vrank[x] = nnc++;
  UnionFind inc(K + 2 * (int64_t)nnc);
  total_sheets_ = 0;
  for (int32_t alpha = 0; alpha < g.n; ++alpha) {
    for (const LocalSheet& s : slots[alpha]) {
      Component& c = comps_[s.comp];
      c.sheet_records.push_back({alpha, s.vtype, s.size});
      c.desing_vertices++;
      if (s.vtype == 2) c.type2_sheets++;
      else c.type1_sheets++;
      inc.unite(s.comp, K + vrank[alpha] * 2 + (s.vtype - 1));
      ++total_sheets_;
    }
    slots[alpha].clear();
    slots[alpha].shrink_to_fit();
  }

  incidence_components_ = 0;
  for (int64_t v = 0; v < K + 2 * (int64_t)nnc; ++v)
    if (inc.find((int32_t)v) == v) ++incidence_components_;

  // 5. Euler characteristic and genus, exact
  for (Component& c : comps_) {
    if (c.faces % 2 != 0)
      fail(ErrorKind::IdentityViolation,
           "component has odd face count " + std::to_string(c.faces));
    c.tri_edges = 3 * c.faces / 2;
    c.euler = c.desing_vertices - c.faces / 2;
    if (c.euler > 2 || c.euler % 2 != 0)
      fail(ErrorKind::IdentityViolation,
           "component euler characteristic " + std::to_string(c.euler) +
               " is not an even integer <= 2");
    c.genus = (2 - c.euler) / 2;
  }
}

std::vector<int32_t> Decomposition::face_ids_of(int comp_index) const {
  std::vector<int32_t> out;
  const int64_t F = ft_->face_count();
  for (int32_t id = 0; id < F; ++id)
    if (comp_of_face_[id] == comp_index) out.push_back(id);
  return out;
}

long long Decomposition::circle_count() const {
  if (incidence_components_ != 1)
    fail(ErrorKind::DisconnectedIncidenceGraph,
         "incidence graph has " + std::to_string(incidence_components_) +
             " components, expected 1");
  const Group& g = ft_->group();
  long long nodes =
      component_count() + 2 * (long long)(g.n - g.center_size());
  return total_sheets_ - nodes + 1;
}

std::map<long long, long long> Decomposition::genus_census() const {
  std::map<long long, long long> m;
  for (const Component& c : comps_) ++m[c.genus];
  return m;
}

std::vector<std::vector<int32_t>> component_face_sets(const FaceTable& ft) {
  Decomposition d(ft, 1);
  std::vector<std::vector<int32_t>> out(d.component_count());
  for (int32_t id = 0; id < ft.face_count(); ++id)
    out[d.component_of_face(id)].push_back(id);
  return out;
}

Component desingularize(const FaceTable& ft,
                        const std::vector<int32_t>& faces) {
  if (faces.empty())
    fail(ErrorKind::InvalidParameter, "empty face set");
  const Group& g = ft.group();
  std::vector<char> in_comp((size_t)ft.face_count(), 0);
  for (int32_t id : faces) in_comp[id] = 1;

  Component c;
  c.id = ft.key_of(*std::min_element(faces.begin(), faces.end()));
  c.faces = (long long)faces.size();
  c.tri_edges = 3 * c.faces / 2;

  // which vertices touch the component
  std::vector<char> touched(g.n, 0);
  for (int32_t id : faces) {
    FaceKey f = ft.key_of(id);
    touched[f.x] = 1;
    touched[f.y] = 1;
    touched[g.op(f.x, f.y)] = 1;
  }
  for (int32_t v = 0; v < g.n; ++v) {
    if (!touched[v] || g.is_central(v)) continue;
    for (int type : {1, 2}) {
      for (const auto& fan : vertex_sheets(ft, v, type)) {
        // a sheet is edge-connected, so it is inside or outside as a whole
        if (!in_comp[ft.id_of(fan[0])]) continue;
        c.sheet_records.push_back({v, (int8_t)type, (int32_t)fan.size()});
        c.desing_vertices++;
        if (type == 2) c.type2_sheets++;
        else c.type1_sheets++;
      }
    }
  }
  c.euler = c.desing_vertices - c.faces / 2;
  c.genus = (2 - c.euler) / 2;
  return c;
}

std::vector<IdentityCheck> verify_global_identities(
    const Group& g, const std::vector<AlphaCounts>& alpha,
    const Decomposition& d) {
  std::vector<IdentityCheck> out;
  const long long N = g.n;
  const long long c = g.class_count();

  {
    long long direct = 0;
    for (int32_t x = 0; x < g.n; ++x)
      for (int32_t y = 0; y < g.n; ++y)
        if (g.commutes(x, y)) ++direct;
    out.push_back({"centralizer_sum", direct, N * c,
                   direct == N * c,
                   "sum of |C(x)| over G vs |G| * class count"});
  }
  {
    CommutingProbability p = commuting_probability(g);
    out.push_back({"commuting_probability",
                   p.by_classes.num * p.by_pairs.den,
                   p.by_pairs.num * p.by_classes.den,
                   p.by_classes == p.by_pairs,
                   "c/|G| = " + p.by_classes.str() + " vs pair count " +
                       p.by_pairs.str()});
  }
  {
    long long mismatches = 0;
    long long predicted_total = 0;
    for (int32_t a = 0; a < g.n; ++a) {
      if (g.is_central(a)) continue;
      auto [s2, s1] = d.geometric_sheets(a);
      if (s2 != alpha[a].nonproductive / 2 + alpha[a].productive) ++mismatches;
      if (s1 != alpha[a].nonproductive + alpha[a].productive) ++mismatches;
      predicted_total +=
          3LL * alpha[a].nonproductive / 2 + 2LL * alpha[a].productive;
    }
    out.push_back({"sheet_prediction", mismatches, 0, mismatches == 0,
                   "vertices whose geometric sheet counts differ from the "
                   "orbit prediction"});
    out.push_back({"sheet_count_sum", d.total_sheets(), predicted_total,
                   d.total_sheets() == predicted_total,
                   "total sheets vs sum of 3n/2 + 2p"});
  }
  {
    long long lhs = 2 * (N - g.center_size()) - (N * N - N * c) / 2;
    long long rhs = 1 - d.circle_count();
    for (const Component& comp : d.components())
      rhs += 1 - 2 * comp.genus;
    out.push_back({"euler_circle_identity", lhs, rhs, lhs == rhs,
                   "2(|G|-|Z|) - (|G|^2-|G|c)/2 = 1 - L + sum(1-2g) m_g"});
  }
  {
    long long lhs = 0;
    for (int32_t a = 0; a < g.n; ++a)
      lhs += 3LL * alpha[a].nonproductive + 4LL * alpha[a].productive;
    for (const Component& comp : d.components())
      lhs += 4 * comp.genus - 4;
    long long rhs = N * (N - c);
    out.push_back({"orbit_sum_identity", lhs, rhs, lhs == rhs,
                   "sum(3n+4p) + sum(4g-4) m_g = |G|(|G|-c)"});
  }
  {
    long long noncentral_classes = 0;
    for (const auto& cls : g.classes)
      if (!g.is_central(cls[0])) ++noncentral_classes;
    long long k = d.component_count();
    out.push_back({"component_class_bound", k, noncentral_classes,
                   k >= noncentral_classes,
                   "component count is at least the noncentral class count"});
  }
  return out;
}

void require_identities(const std::vector<IdentityCheck>& checks) {
  for (const IdentityCheck& c : checks)
    if (!c.pass)
      fail(ErrorKind::IdentityViolation,
           c.name + ": lhs=" + std::to_string(c.lhs) +
               " rhs=" + std::to_string(c.rhs) + " (" + c.detail + ")");
}

MonotonicityReport monotonicity_check(const Homomorphism& f,
                                      const FaceTable& ft_h,
                                      const Decomposition& dh,
                                      const FaceTable& ft_g,
                                      const Decomposition& dg) {
  MonotonicityReport rep;
  auto fails = [&](const std::string& msg) {
    rep.pass = false;
    rep.detail = msg;
    fail(ErrorKind::MonotonicityViolation, msg);
  };

  // injective overall, so that H really embeds
  {
    std::vector<char> seen(ft_g.group().n, 0);
    for (int32_t v : f.map) {
      if (seen[v]) fails("homomorphism is not injective");
      seen[v] = 1;
    }
  }
  verify_induced_map(f, ft_h, ft_g);
  InducedFaceMap m = induced_map(f);

  const auto& hcomps = dh.components();
  std::vector<int32_t> target_comp(hcomps.size(), -1);
  for (int32_t id = 0; id < ft_h.face_count(); ++id) {
    FaceKey img = m(ft_h.key_of(id));
    int32_t hc = dh.component_of_face(id);
    int32_t gc = dg.component_of_face(ft_g.id_of(img));
    if (target_comp[hc] < 0) target_comp[hc] = gc;
    else if (target_comp[hc] != gc)
      fails("component " + std::to_string(hc) +
            " maps into two different components");
  }
  for (size_t hc = 0; hc < hcomps.size(); ++hc) {
    const Component& hcomp = hcomps[hc];
    const Component& gcomp = dg.components()[target_comp[hc]];
    if (hcomp.faces != gcomp.faces)
      fails("component face counts differ: " + std::to_string(hcomp.faces) +
            " vs " + std::to_string(gcomp.faces));
    if (hcomp.genus != gcomp.genus)
      fails("component genus differs: " + std::to_string(hcomp.genus) +
            " vs " + std::to_string(gcomp.genus));
  }

  // census domination m_g(H) <= m_g(G)
  auto mh = dh.genus_census();
  auto mg = dg.genus_census();
  for (const auto& [genus, count] : mh) {
    auto it = mg.find(genus);
    long long have = it == mg.end() ? 0 : it->second;
    if (count > have)
      fails("m_" + std::to_string(genus) + "(H) = " + std::to_string(count) +
            " exceeds m_" + std::to_string(genus) +
            "(G) = " + std::to_string(have));
  }
  rep.detail = "ok";
  return rep;
}

}  // namespace gsurf
