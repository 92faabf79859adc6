#pragma once

// Balanced Cayley maps CM(G, Omega, rho) on finite abelian groups.
//
// Omega is stored in rho-cycle order, so rho(omega[i]) = omega[i+1] cyclically.
// Type I: omega = (w_1, ..., w_n, -w_1, ..., -w_n), valence 2n.
// Type II: omega = (w_1, ..., w_n) with every w_i of order 2, valence n.

#include <optional>
#include <string>
#include <vector>

#include "rbcm/ideals.hpp"
#include "rbcm/structure.hpp"

namespace rbcm {

enum class MapType { I, II };
std::string map_type_name(MapType t);

struct CayleyMapRecord {
  AbelianGroup group;
  std::vector<Int> omega;  // rho-cycle order
  MapType type = MapType::I;
  std::vector<std::string> omega_repr;  // printable residues (optional)
  std::optional<IdealPresentation> ideal;

  int valence() const { return static_cast<int>(omega.size()); }
  /// n of the standard form: half the valence for type I, the valence for type II.
  int n() const { return type == MapType::I ? valence() / 2 : valence(); }
  /// Position of each group element in omega, -1 when absent.
  std::vector<int> positions() const;
};

/// Structural invariants of a record; throws InvalidMap naming the first failure.
void validate_map(const CayleyMapRecord& m);

/// M_Q: omega_i = image of x^{i-1} in Z_N[x]/Q.
CayleyMapRecord build_map(const IdealPresentation& q, int n, MapType type);

/// Map from a generating set with images, extended over the whole group; nullopt
/// when the assignment is not a well-defined homomorphism.
std::optional<std::vector<Int>> extend_homomorphism(const AbelianGroup& src, const std::vector<Int>& gens,
                                                    const AbelianGroup& dst, const std::vector<Int>& images);

struct RbcmWitness {
  bool ok = false;
  std::vector<Int> basis_images;  // automorphism on the group's cyclic generators
};
RbcmWitness is_rbcm(const CayleyMapRecord& m);

/// Exists a group isomorphism carrying Omega to Omega' and rho to rho'.
/// Throws TypeMismatch for records of different type.
bool maps_isomorphic(const CayleyMapRecord& a, const CayleyMapRecord& b);

struct MapStats {
  Int vertices = 0;
  Int edges = 0;
  Int faces = 0;
  Int genus = 0;
  std::vector<std::pair<Int, Int>> face_lengths;  // (length, count), ascending
};

/// Faces under the successor (v, w) -> (v + w, rho(-w)).
MapStats trace_faces(const CayleyMapRecord& m);
/// The same statistics from the single face through (0, omega[0]); valid only
/// for regular maps, where every face has the same length.
MapStats regular_map_stats(const CayleyMapRecord& m);

/// Arc regularity from the definition: for every arc there is a map automorphism
/// carrying arc (0, omega[0]) to it.
bool is_arc_regular(const CayleyMapRecord& m);

/// Rotation system as text: header "V E F genus", then "v: targets" per vertex.
std::string rotation_system(const CayleyMapRecord& m);

}  // namespace rbcm
