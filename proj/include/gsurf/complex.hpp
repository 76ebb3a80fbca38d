#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "gsurf/group.hpp"

namespace gsurf {

// The oriented 2-complex of a nonabelian group G:
//   vertices  (x,1) and (x,2) for every noncentral x,
//   faces     the ordered noncommuting pairs (x,y), read as the oriented
//             triangle on (x,1), (y,1), (xy,2).
// Faces are never materialized as simplices; adjacency is derived:
//   across [(x,1),(y,1)]   -> (y, x)
//   across [(y,1),(xy,2)]  -> (y, y^-1 x y)
//   across [(x,1),(xy,2)]  -> (x y x^-1, x)
// Every edge lies in exactly two faces, with cancelling orientations.

struct FaceKey {
  int32_t x = 0;
  int32_t y = 0;
  friend bool operator==(const FaceKey&, const FaceKey&) = default;
  friend auto operator<=>(const FaceKey&, const FaceKey&) = default;
};

class FaceTable {
 public:
  explicit FaceTable(const Group& g);

  const Group& group() const { return *g_; }
  int64_t face_count() const { return face_count_; }

  bool commutes(int32_t x, int32_t y) const {
    size_t bit = (size_t)x * n_ + y;
    return (commute_bits_[bit >> 6] >> (bit & 63)) & 1;
  }

  /// Dense face id of the pair (x,y), or -1 when x,y commute.
  int32_t id_of(int32_t x, int32_t y) const {
    return face_index_[(size_t)x * n_ + y];
  }
  int32_t id_of(FaceKey f) const { return id_of(f.x, f.y); }
  FaceKey key_of(int32_t id) const { return {face_x_[id], face_y_[id]}; }

  /// The three neighbors, in edge order [E1, y-side, x-side].
  std::array<FaceKey, 3> neighbors(FaceKey f) const;
  std::array<int32_t, 3> neighbor_ids(int32_t id) const;

 private:
  const Group* g_;
  int n_;
  int64_t face_count_ = 0;
  std::vector<uint64_t> commute_bits_;
  std::vector<int32_t> face_index_;
  std::vector<int32_t> face_x_, face_y_;
};

struct ComplexStats {
  long long vertices = 0;  // 2(|G| - |Z|)
  long long e1_edges = 0;  // (|G|^2 - |G|c)/2
  long long e2_edges = 0;  // == faces
  long long faces = 0;     // |G|^2 - |G|c
  long long euler = 0;     // vertices - e1_edges
};

/// Simplex counts by the closed formulas; cross-checked against a literal
/// enumeration of noncommuting pairs when |G| <= 1024.
ComplexStats build_stats(const Group& g);

/// The sheets (maximal disk fans) of the star of vertex (elem, type).
/// Each sheet is returned as the cyclic sequence of its faces.
std::vector<std::vector<FaceKey>> vertex_sheets(const FaceTable& ft,
                                                int32_t elem, int type);

/// Face map induced by a homomorphism injective on commutators:
/// (x,y) -> (f(x), f(y)).
struct InducedFaceMap {
  const Homomorphism* hom;
  FaceKey operator()(FaceKey f) const {
    return {hom->map[f.x], hom->map[f.y]};
  }
};

InducedFaceMap induced_map(const Homomorphism& f);

/// Exhaustively verifies that the induced map sends faces to faces and
/// commutes with the three neighbor derivations.
void verify_induced_map(const Homomorphism& f, const FaceTable& source,
                        const FaceTable& target);

}  // namespace gsurf
