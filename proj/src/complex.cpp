#include "gsurf/complex.hpp"

#include "gsurf/errors.hpp"

namespace gsurf {

FaceTable::FaceTable(const Group& g) : g_(&g), n_(g.n) {
  const int n = n_;
  commute_bits_.assign(((size_t)n * n + 63) / 64, 0);
  face_index_.assign((size_t)n * n, -1);
  for (int32_t x = 0; x < n; ++x)
    for (int32_t y = 0; y < n; ++y) {
      size_t cell = (size_t)x * n + y;
      if (g.commutes(x, y)) {
        commute_bits_[cell >> 6] |= (uint64_t)1 << (cell & 63);
      } else {
        face_index_[cell] = (int32_t)face_count_++;
      }
    }
  face_x_.resize(face_count_);
  face_y_.resize(face_count_);
  for (int32_t x = 0; x < n; ++x)
    for (int32_t y = 0; y < n; ++y) {
      int32_t id = face_index_[(size_t)x * n + y];
      if (id >= 0) {
        face_x_[id] = x;
        face_y_[id] = y;
      }
    }
}

std::array<FaceKey, 3> FaceTable::neighbors(FaceKey f) const {
  const Group& g = *g_;
  const int32_t xy = g.op(f.x, f.y);
  return {{
      {f.y, f.x},                           // across [(x,1),(y,1)]
      {f.y, g.op(g.inv[f.y], xy)},          // across [(y,1),(xy,2)]
      {g.op(xy, g.inv[f.x]), f.x},          // across [(x,1),(xy,2)]
  }};
}

std::array<int32_t, 3> FaceTable::neighbor_ids(int32_t id) const {
  auto nb = neighbors(key_of(id));
  return {id_of(nb[0]), id_of(nb[1]), id_of(nb[2])};
}

ComplexStats build_stats(const Group& g) {
  const long long N = g.n;
  const long long c = g.class_count();
  ComplexStats s;
  s.vertices = 2 * (N - g.center_size());
  s.faces = N * N - N * c;
  s.e1_edges = s.faces / 2;
  s.e2_edges = s.faces;
  s.euler = s.vertices - s.e1_edges;
  if (N <= 1024) {
    long long literal = 0;
    for (int32_t x = 0; x < g.n; ++x)
      for (int32_t y = 0; y < g.n; ++y)
        if (!g.commutes(x, y)) ++literal;
    if (literal != s.faces)
      fail(ErrorKind::IdentityViolation,
           "face count: class formula gives " + std::to_string(s.faces) +
               ", literal enumeration gives " + std::to_string(literal));
  }
  return s;
}

std::vector<std::vector<FaceKey>> vertex_sheets(const FaceTable& ft,
                                                int32_t elem, int type) {
  const Group& g = ft.group();
  if (type != 1 && type != 2)
    fail(ErrorKind::InvalidParameter, "vertex type must be 1 or 2");
  if (g.is_central(elem))
    fail(ErrorKind::CentralElement,
         "element " + std::to_string(elem) + " is central; it has no vertices");

  std::vector<std::vector<FaceKey>> sheets;
  std::vector<char> seen(g.n, 0);
  const int32_t alpha = elem;
  const int32_t ia = g.inv[alpha];

  if (type == 2) {
    // star of (alpha,2): faces (u, u^-1 alpha); fan step u -> u^-1 alpha
    for (int32_t x = 0; x < g.n; ++x) {
      if (seen[x] || g.commutes(x, alpha)) continue;
      std::vector<FaceKey> fan;
      int32_t u = x;
      do {
        seen[u] = 1;
        fan.push_back({u, g.op(g.inv[u], alpha)});
        u = g.op(g.inv[u], alpha);
      } while (u != x);
      sheets.push_back(std::move(fan));
    }
  } else {
    // star of (alpha,1): faces (alpha,u) and (u,alpha) for u in one orbit
    // of conjugation by alpha; fan order alternates the two forms
    for (int32_t t = 0; t < g.n; ++t) {
      if (seen[t] || g.commutes(t, alpha)) continue;
      std::vector<FaceKey> fan;
      int32_t u = t;
      do {
        seen[u] = 1;
        fan.push_back({alpha, u});
        fan.push_back({u, alpha});
        u = g.op(g.op(ia, u), alpha);
      } while (u != t);
      sheets.push_back(std::move(fan));
    }
  }
  return sheets;
}

InducedFaceMap induced_map(const Homomorphism& f) {
  // injectivity on commutators was verified when f was built
  return InducedFaceMap{&f};
}

void verify_induced_map(const Homomorphism& f, const FaceTable& source,
                        const FaceTable& target) {
  InducedFaceMap m = induced_map(f);
  const int64_t F = source.face_count();
  for (int32_t id = 0; id < F; ++id) {
    FaceKey a = source.key_of(id);
    FaceKey fa = m(a);
    if (target.id_of(fa) < 0)
      fail(ErrorKind::NotInjectiveOnCommutators,
           "image of face (" + std::to_string(a.x) + "," + std::to_string(a.y) +
               ") is not a face");
    auto nb_src = source.neighbors(a);
    auto nb_tgt = target.neighbors(fa);
    for (int k = 0; k < 3; ++k)
      if (m(nb_src[k]) != nb_tgt[k])
        fail(ErrorKind::MonotonicityViolation,
             "induced map does not commute with neighbor derivation at face (" +
                 std::to_string(a.x) + "," + std::to_string(a.y) + ")");
  }
}

}  // namespace gsurf
