#pragma once

#include <string>
#include <vector>

#include "rhombforge/cyclotomic.hpp"
#include "rhombforge/edge.hpp"

namespace rhombforge {

/// Integer circulant matrix stored as its first row; entry (i,j) is
/// first_row[(j - i) mod size].
class CirculantMatrix {
 public:
  explicit CirculantMatrix(std::vector<long long> first_row);

  unsigned size() const noexcept { return static_cast<unsigned>(row_.size()); }
  const std::vector<long long>& first_row() const noexcept { return row_; }
  long long entry(unsigned i, unsigned j) const;

  CirculantMatrix operator*(const CirculantMatrix& other) const;
  CirculantMatrix square() const { return *this * *this; }
  bool operator==(const CirculantMatrix& other) const { return row_ == other.row_; }

  bool is_palindromic() const;
  std::vector<std::vector<long long>> dense() const;

  /// lambda_j = sum_l row[l] * eps^(jl) with eps = exp(i*pi/n); exact, one
  /// value per j in 0..2n-1. size() must be even (it is 2n).
  std::vector<CycloInt> eigenvalues() const;

 private:
  std::vector<long long> row_;
};

/// circ(m0, m1, ..., m_{n-1}, m_n, ..., m2, m1) of size 2n. Half-integer
/// multisets are n-doubled first, so the result may be of size 4n.
CirculantMatrix edge_matrix(const AngleMultiset& ms);

CirculantMatrix tile_matrix(const CirculantMatrix& edge);

/// Prototile counts n_t read off the first row of tile_matrix. For
/// half-integer input the counts are folded back to the original indexing.
struct TileCounts {
  unsigned n = 0;                  // indexing order for `counts`
  std::vector<long long> counts;   // t = 0..n
  bool from_half_integer = false;
};

TileCounts tile_counts(const AngleMultiset& ms);

/// sum_l row[l] * zeta^(2l) over the ring of order 4n (size 2n rows); this is
/// the first eigenvalue and doubles as the exact cosine-sum of a row.
CycloInt row_value(const std::vector<long long>& row);

struct PvReport {
  unsigned n = 0;                    // effective (integer-parity) symmetry order
  CycloInt L;
  double L_float = 0.0;
  /// Conjugate eigenvalue slots: (j, |lambda_j|) for 1 < j < n, gcd(j, 2n) = 1.
  std::vector<std::pair<unsigned, double>> conjugates;
  bool is_pv = false;
  bool indeterminate = false;        // some |conjugate| within 1e-9 of 1
  std::string note;

  PvReport() : L(CycloInt::zero(12)) {}
};

PvReport pv_classify(const AngleMultiset& ms);
PvReport pv_classify(const EdgeSequence& e);

struct PvScanRow {
  long long m0 = 0, m1 = 0, m2 = 0;
  unsigned n = 0;
  double L_float = 0.0;
  double max_conjugate_modulus = 0.0;
  bool is_pv = false;
};

/// Enumerates single-dent families (m0, m1 or m2 = 1) for 3 <= n <= n_max.
/// Parameter sets that cannot form a strict (no-overhang) edge are skipped.
std::vector<PvScanRow> pv_scan(long long m0_max, unsigned n_max);

std::string pv_scan_csv(const std::vector<PvScanRow>& rows);

enum class ReductionMode { signed_tiles, congruent };

/// Reduces per-type counts (index range 0..2n-1) to a positive prototile
/// inventory; zero-area types 0 and n are dropped. Returns entries s = 1..n-1.
std::vector<long long> reduce_prototile_set(const std::vector<long long>& counts_by_type,
                                            ReductionMode mode);

}  // namespace rhombforge
