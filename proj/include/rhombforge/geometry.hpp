#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rhombforge/edge.hpp"
#include "rhombforge/point.hpp"

namespace rhombforge {

enum class Variant { a, b, c, d };

Variant variant_from_char(char c);
char variant_to_char(Variant v);

struct degenerate_probe : std::runtime_error {
  explicit degenerate_probe(const std::string& what) : std::runtime_error(what) {}
};

/// A placed rhomb prototile. The two spanning directions are stored in units
/// of pi/(2n) mod 4n; the signed area is sin(raw_type * pi/n), so the sign and
/// the degeneracy flag are derived from raw_type alone.
struct SignedTile {
  ExactPoint anchor;
  int dir_lower = 0;
  int dir_upper = 0;
  int raw_type = 0;   // in [0, 2n)
  int type = 0;       // folded to 0..n
  int sign = 1;       // -1 exactly when raw_type lies in (n, 2n)
  bool degenerate = false;
  std::array<std::array<double, 2>, 4> fcorners{};  // cached float corners

  SignedTile(unsigned n, ExactPoint anchor, int dir_lower, int dir_upper);

  std::array<ExactPoint, 4> corners(unsigned n) const;
};

/// A generation-tagged collection of signed tiles together with the oriented
/// bottom-edge state that determines the exact outer boundary.
struct Patch {
  unsigned n = 0;
  unsigned generation = 0;
  int start_type = 0;
  CycloInt scale;                       // L^generation
  std::vector<SignedTile> tiles;
  std::vector<int> bottom_dirs;         // bottom boundary edge, left to right
  std::vector<bool> bottom_reversed;    // orientation state per segment
  std::vector<std::string> variant_history;

  Patch() : scale(CycloInt::zero(12)) {}

  /// Closed outer boundary (first vertex is the origin; the final vertex,
  /// equal to the origin again, is omitted).
  std::vector<ExactPoint> boundary_polyline() const;

  /// Sum over tiles of 2i*sin(area angle); equals scale^2 * 2i*sin(s0*pi/n)
  /// for a patch grown from one prototile.
  CycloInt signed_area_two_i() const;
  double signed_area() const;

  std::string to_json() const;
  static Patch from_json(const std::string& text);
};

Patch prototile_patch(unsigned n, int s);
Patch build_substitution_tile(const EdgeSequence& e, int s);

/// Replaces every tile by its substitution under the given variant and
/// inflates all coordinates by L. Variants c and d are defined for N = 2.
Patch substitute(const Patch& patch, const EdgeSequence& e, Variant v);

/// Removes pairs of tiles that occupy exactly the same region with opposite
/// signed areas. Zero-area tiles are kept. Total signed area is unchanged.
Patch annihilated(const Patch& patch);

/// The generation-g expanded edge, counting from the straight unit segment:
/// g = 0 returns the 1-segment straight edge, g = 1 the base sequence shape,
/// and generation g has N^g segments with endpoint displacement L^g.
EdgeSequence expand_edge(const EdgeSequence& e, unsigned generations, Variant v);
EdgeSequence expand_edge(const EdgeSequence& e, const std::vector<Variant>& per_generation);

/// Explicit per-segment orientation control: one string per generation step,
/// one character per segment ('0'/'F' forward, '1'/'R' reversed).
EdgeSequence expand_edge_bits(const EdgeSequence& e, const std::vector<std::string>& bits);

/// Sum over tiles of sign for tiles strictly containing the probe. Throws
/// degenerate_probe when the probe lies within 1e-9 of a tile edge.
int signed_coverage(const Patch& patch, double px, double py);
int signed_coverage(const Patch& patch, const ExactPoint& probe);

struct CoverageSample {
  int interior_requested = 0;
  int interior_tested = 0;
  int interior_ones = 0;
  int exterior_tested = 0;
  int exterior_zeros = 0;
  int min_interior = 0;
  int max_interior = 0;
  bool clean() const {
    return interior_ones == interior_tested && exterior_zeros == exterior_tested;
  }
};

/// Stratified seeded probe sampling: interior probes are classified against
/// the patch boundary polyline, exterior probes against an enlarged box.
CoverageSample sample_coverage(const Patch& patch, int interior_probes, int exterior_probes,
                               unsigned long long seed);

enum class Axis { row, column };

struct Worm {
  std::vector<SignedTile> tiles;
  std::vector<ExactPoint> lower;
  std::vector<ExactPoint> upper;
};

/// Splits a first-generation substitution tile into its N worms; the two
/// bounding polylines of each worm are translates by one unit vector.
std::vector<Worm> worm_decompose(const Patch& patch, Axis axis);

}  // namespace rhombforge
