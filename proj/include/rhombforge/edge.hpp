#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rhombforge/cyclotomic.hpp"
#include "rhombforge/point.hpp"

namespace rhombforge {

enum class Parity { integer, half_integer };

enum class OverhangPolicy { strict, permissive };

enum class EdgeFault {
  bad_symmetry_order,
  empty_sequence,
  mixed_parity,
  unbalanced_pairs,
  overhang_exceeded,
};

std::string_view to_string(EdgeFault fault);

class validation_error : public std::domain_error {
 public:
  validation_error(EdgeFault fault, const std::string& what)
      : std::domain_error(what), fault_(fault) {}
  EdgeFault fault() const noexcept { return fault_; }

 private:
  EdgeFault fault_;
};

/// Multiset of edge-angle magnitudes: counts[h] is the number of zeros when
/// h == 0, the number of +/- pairs for 0 < h < 2n, and the number of
/// pi-direction entries when h == 2n. Keys are half-units (2k).
struct AngleMultiset {
  unsigned n = 0;
  Parity parity = Parity::integer;
  std::map<int, long long> counts;

  long long at(int half_units) const;
  size_t sequence_length() const;
  AngleMultiset doubled() const;  // the n-doubled, integer-parity equivalent
};

/// A validated substitution-tile edge sequence. Angles are stored in
/// half-units: entry h means an edge angle of h*pi/(2n). Strict sequences
/// keep |h| <= n; derived (expanded) sequences are validated permissively.
class EdgeSequence {
 public:
  static EdgeSequence validate(unsigned n, std::vector<int> ks2,
                               OverhangPolicy policy = OverhangPolicy::strict);

  unsigned n() const noexcept { return n_; }
  const std::vector<int>& ks2() const noexcept { return ks2_; }
  size_t size() const noexcept { return ks2_.size(); }
  Parity parity() const noexcept { return parity_; }
  OverhangPolicy policy() const noexcept { return policy_; }
  bool from_half_integer() const noexcept { return from_half_integer_; }

  AngleMultiset multiset() const;

  /// L = sum of cos(alpha_i), exact in the ring of order 4n.
  CycloInt inflation_factor() const;

  /// The integer-parity presentation with n and all angles doubled.
  /// Only defined for half-integer sequences.
  EdgeSequence doubled() const;

  EdgeSequence reversed() const;

  std::string to_json() const;
  static EdgeSequence from_json(const std::string& text,
                                OverhangPolicy policy = OverhangPolicy::strict);

 private:
  EdgeSequence(unsigned n, std::vector<int> ks2, Parity parity, OverhangPolicy policy)
      : n_(n), ks2_(std::move(ks2)), parity_(parity), policy_(policy) {}

  unsigned n_ = 0;
  std::vector<int> ks2_;
  Parity parity_ = Parity::integer;
  OverhangPolicy policy_ = OverhangPolicy::strict;
  bool from_half_integer_ = false;
};

/// Vertices of the open edge polyline: N+1 exact points starting at the
/// origin, segment i pointing in direction base + ks2[i].
std::vector<ExactPoint> edge_polyline(const EdgeSequence& e, int base_direction = 0);

/// True when the open polyline self-intersects. Shared endpoints of
/// consecutive segments do not count; any other touch or collinear overlap does.
bool has_loops(const EdgeSequence& e);

/// Named edge-sequence presets for classic tilings ("ab", "penrose-a",
/// "penrose-b", "lb", "harriss", "maloney11"). The symmetry order can be
/// overridden where the family is defined for general n.
std::optional<EdgeSequence> preset_edge(std::string_view name,
                                        std::optional<unsigned> n_override = std::nullopt);
std::vector<std::string> preset_names();

}  // namespace rhombforge
