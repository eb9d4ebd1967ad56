#include "rhombforge/spectra.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace rhombforge {

CirculantMatrix::CirculantMatrix(std::vector<long long> first_row) : row_(std::move(first_row)) {
  if (row_.empty()) throw std::invalid_argument("CirculantMatrix: empty first row");
}

long long CirculantMatrix::entry(unsigned i, unsigned j) const {
  const unsigned m = size();
  if (i >= m || j >= m) throw std::out_of_range("CirculantMatrix::entry");
  return row_[(j + m - i) % m];
}

CirculantMatrix CirculantMatrix::operator*(const CirculantMatrix& other) const {
  if (size() != other.size())
    throw std::invalid_argument("CirculantMatrix: size mismatch in product");
  const unsigned m = size();
  std::vector<long long> out(m, 0);
  for (unsigned i = 0; i < m; ++i) {
    if (row_[i] == 0) continue;
    for (unsigned j = 0; j < m; ++j) out[(i + j) % m] += row_[i] * other.row_[j];
  }
  return CirculantMatrix(std::move(out));
}

bool CirculantMatrix::is_palindromic() const {
  const unsigned m = size();
  for (unsigned j = 1; j < m; ++j)
    if (row_[j] != row_[m - j]) return false;
  return true;
}

std::vector<std::vector<long long>> CirculantMatrix::dense() const {
  const unsigned m = size();
  std::vector<std::vector<long long>> out(m, std::vector<long long>(m));
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < m; ++j) out[i][j] = entry(i, j);
  return out;
}

std::vector<CycloInt> CirculantMatrix::eigenvalues() const {
  const unsigned m = size();
  if (m % 2 != 0) throw std::domain_error("eigenvalues: matrix size must be 2n");
  const unsigned n = m / 2;
  std::vector<CycloInt> values;
  values.reserve(m);
  for (unsigned j = 0; j < m; ++j) {
    CycloInt acc = CycloInt::zero(4 * n);
    for (unsigned l = 0; l < m; ++l) {
      if (row_[l] == 0) continue;
      acc += CycloInt::integer(4 * n, row_[l]) * unit_root(n, 2LL * j * l);
    }
    values.push_back(std::move(acc));
  }
  return values;
}

CirculantMatrix edge_matrix(const AngleMultiset& ms) {
  const AngleMultiset eff = ms.parity == Parity::half_integer ? ms.doubled() : ms;
  const unsigned n = eff.n;
  std::vector<long long> row(2 * n, 0);
  for (const auto& [h, count] : eff.counts) {
    if (count == 0) continue;
    if (h % 2 != 0) throw std::logic_error("edge_matrix: non-integer index after doubling");
    const unsigned k = static_cast<unsigned>(h) / 2;
    if (k > n) throw std::domain_error("edge_matrix: angle index out of range");
    if (k == 0 || k == n) {
      row[k] += count;
    } else {
      row[k] += count;
      row[2 * n - k] += count;
    }
  }
  return CirculantMatrix(std::move(row));
}

CirculantMatrix tile_matrix(const CirculantMatrix& edge) { return edge.square(); }

TileCounts tile_counts(const AngleMultiset& ms) {
  const bool doubled = ms.parity == Parity::half_integer;
  const CirculantMatrix S = tile_matrix(edge_matrix(ms));
  const unsigned n_eff = S.size() / 2;
  TileCounts out;
  out.from_half_integer = doubled;
  out.n = doubled ? n_eff / 2 : n_eff;
  out.counts.resize(out.n + 1, 0);
  const unsigned step = doubled ? 2 : 1;
  for (unsigned t = 0; t <= out.n; ++t) out.counts[t] = S.first_row()[t * step];
  if (doubled) {
    // Odd doubled indices stay empty; anything else would not fold back.
    for (unsigned l = 1; l < S.size(); l += 2)
      if (S.first_row()[l] != 0) throw std::logic_error("tile_counts: fold lost information");
  }
  return out;
}

CycloInt row_value(const std::vector<long long>& row) {
  if (row.size() % 2 != 0) throw std::domain_error("row_value: row size must be 2n");
  const unsigned n = static_cast<unsigned>(row.size()) / 2;
  CycloInt acc = CycloInt::zero(4 * n);
  for (size_t l = 0; l < row.size(); ++l) {
    if (row[l] == 0) continue;
    acc += CycloInt::integer(4 * n, row[l]) * unit_root(n, 2LL * l);
  }
  return acc;
}

PvReport pv_classify(const AngleMultiset& ms) {
  const AngleMultiset eff = ms.parity == Parity::half_integer ? ms.doubled() : ms;
  const CirculantMatrix M = edge_matrix(eff);
  const unsigned n = M.size() / 2;

  PvReport report;
  report.n = n;
  report.L = row_value(M.first_row());
  report.L_float = report.L.real_value();
  report.note =
      "conjugates are the eigenvalue slots j with 1 < j < n and gcd(j, 2n) = 1; "
      "slots are not deduplicated by value";

  const auto eig = M.eigenvalues();
  bool all_contracting = true;
  for (unsigned j = 2; j < n; ++j) {
    if (std::gcd(static_cast<long long>(j), 2LL * n) != 1) continue;
    const double modulus = std::fabs(eig[j].real_value());
    report.conjugates.emplace_back(j, modulus);
    if (std::fabs(modulus - 1.0) <= 1e-9) report.indeterminate = true;
    if (modulus >= 1.0 - 1e-9) all_contracting = false;
  }

  BigInt rational;
  if (report.L.is_rational(&rational))
    report.note += "; L is rational (" + rational.str() + ")";
  if (report.conjugates.empty()) {
    report.note += "; no conjugate slots exist for this order";
    report.is_pv = false;
    return report;
  }
  report.is_pv = !report.indeterminate && report.L_float > 1.0 && all_contracting;
  return report;
}

PvReport pv_classify(const EdgeSequence& e) { return pv_classify(e.multiset()); }

std::vector<PvScanRow> pv_scan(long long m0_max, unsigned n_max) {
  std::vector<PvScanRow> rows;
  for (long long m0 = 0; m0 <= m0_max; ++m0) {
    for (int dent = 1; dent <= 2; ++dent) {
      for (unsigned n = 3; n <= n_max; ++n) {
        const long long m1 = dent == 1 ? 1 : 0;
        const long long m2 = dent == 2 ? 1 : 0;
        if (m2 > 0 && 2 * 2 > static_cast<int>(n)) continue;  // |alpha| would exceed pi/2
        AngleMultiset ms;
        ms.n = n;
        ms.parity = Parity::integer;
        if (m0 > 0) ms.counts[0] = m0;
        if (m1 > 0) ms.counts[2] = m1;
        if (m2 > 0) ms.counts[4] = m2;
        const PvReport report = pv_classify(ms);
        PvScanRow row;
        row.m0 = m0;
        row.m1 = m1;
        row.m2 = m2;
        row.n = n;
        row.L_float = report.L_float;
        for (const auto& [j, modulus] : report.conjugates)
          row.max_conjugate_modulus = std::max(row.max_conjugate_modulus, modulus);
        row.is_pv = report.is_pv;
        rows.push_back(row);
      }
    }
  }
  return rows;
}

std::string pv_scan_csv(const std::vector<PvScanRow>& rows) {
  std::string out = "m0,m1,m2,n,L_float,max_conjugate_modulus,is_pv\n";
  char buf[160];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf), "%lld,%lld,%lld,%u,%.12g,%.12g,%d\n", r.m0, r.m1, r.m2, r.n,
                  r.L_float, r.max_conjugate_modulus, r.is_pv ? 1 : 0);
    out += buf;
  }
  return out;
}

std::vector<long long> reduce_prototile_set(const std::vector<long long>& counts_by_type,
                                            ReductionMode mode) {
  if (counts_by_type.size() % 2 != 0)
    throw std::invalid_argument("reduce_prototile_set: counts must cover 0..2n-1");
  const unsigned m = static_cast<unsigned>(counts_by_type.size());
  const unsigned n = m / 2;
  auto at = [&](long long t) { return counts_by_type[static_cast<size_t>(((t % m) + m) % m)]; };
  std::vector<long long> out;
  out.reserve(n - 1);
  for (unsigned s = 1; s < n; ++s) {
    if (mode == ReductionMode::signed_tiles) {
      out.push_back(at(s) - at(2LL * n - s));
    } else {
      out.push_back(at(s) + at(static_cast<long long>(n) - s) - at(static_cast<long long>(n) + s) -
                    at(2LL * n - s));
    }
  }
  return out;
}

}  // namespace rhombforge
