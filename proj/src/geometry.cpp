#include "rhombforge/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "json.hpp"
#include "rhombforge/threads.hpp"

namespace rhombforge {

namespace {

int mod4n(long long h, unsigned n) {
  const long long m = 4LL * n;
  long long r = h % m;
  if (r < 0) r += m;
  return static_cast<int>(r);
}

int mod2n(long long t, unsigned n) {
  const long long m = 2LL * n;
  long long r = t % m;
  if (r < 0) r += m;
  return static_cast<int>(r);
}

// canonical direction range (-2n, 2n], matching validated edge sequences
int canon4n(long long h, unsigned n) {
  int r = mod4n(h, n);
  if (r > static_cast<int>(2 * n)) r -= static_cast<int>(4 * n);
  return r;
}

}  // namespace

Variant variant_from_char(char c) {
  switch (c) {
    case 'a': return Variant::a;
    case 'b': return Variant::b;
    case 'c': return Variant::c;
    case 'd': return Variant::d;
  }
  throw std::invalid_argument(std::string("unknown variant '") + c + "'");
}

char variant_to_char(Variant v) {
  switch (v) {
    case Variant::a: return 'a';
    case Variant::b: return 'b';
    case Variant::c: return 'c';
    case Variant::d: return 'd';
  }
  return '?';
}

SignedTile::SignedTile(unsigned n, ExactPoint anchor_in, int dl, int du)
    : anchor(std::move(anchor_in)) {
  dir_lower = mod4n(dl, n);
  dir_upper = mod4n(du, n);
  const long long diff = static_cast<long long>(dir_upper) - dir_lower;
  if (diff % 2 != 0) throw std::logic_error("SignedTile: odd direction difference");
  raw_type = mod2n(diff / 2, n);
  if (raw_type <= static_cast<int>(n)) {
    type = raw_type;
    sign = 1;
  } else {
    type = static_cast<int>(2 * n) - raw_type;
    sign = -1;
  }
  degenerate = (raw_type == 0 || raw_type == static_cast<int>(n));

  const auto a = anchor.z.complex_value();
  const auto u = unit_root(n, dir_lower).complex_value();
  const auto v = unit_root(n, dir_upper).complex_value();
  fcorners[0] = {a.real(), a.imag()};
  fcorners[1] = {a.real() + u.real(), a.imag() + u.imag()};
  fcorners[2] = {a.real() + u.real() + v.real(), a.imag() + u.imag() + v.imag()};
  fcorners[3] = {a.real() + v.real(), a.imag() + v.imag()};
}

std::array<ExactPoint, 4> SignedTile::corners(unsigned n) const {
  const CycloInt u = unit_root(n, dir_lower);
  const CycloInt v = unit_root(n, dir_upper);
  return {ExactPoint(anchor.z), ExactPoint(anchor.z + u), ExactPoint(anchor.z + u + v),
          ExactPoint(anchor.z + v)};
}

std::vector<ExactPoint> Patch::boundary_polyline() const {
  std::vector<ExactPoint> ring;
  ring.reserve(4 * bottom_dirs.size());
  const int opening = 2 * start_type;
  CycloInt pos = CycloInt::zero(4 * n);
  auto walk = [&](const std::vector<int>& dirs) {
    for (int d : dirs) {
      ring.push_back(ExactPoint(pos));
      pos += unit_root(n, d);
    }
  };
  std::vector<int> left_dirs(bottom_dirs);
  for (auto& d : left_dirs) d = mod4n(d + opening, n);
  std::vector<int> bottom_back(bottom_dirs.rbegin(), bottom_dirs.rend());
  for (auto& d : bottom_back) d = mod4n(d + 2 * n, n);
  std::vector<int> left_back(left_dirs.rbegin(), left_dirs.rend());
  for (auto& d : left_back) d = mod4n(d + 2 * n, n);

  walk(bottom_dirs);   // C0 -> C1
  walk(left_dirs);     // C1 -> C2 (right edge, a translate of the left edge)
  walk(bottom_back);   // C2 -> C3
  walk(left_back);     // C3 -> C0
  if (!pos.is_zero()) throw std::logic_error("Patch: boundary does not close");
  return ring;
}

CycloInt Patch::signed_area_two_i() const {
  CycloInt acc = CycloInt::zero(4 * n);
  for (const auto& t : tiles) acc += two_i_sin(n, 2LL * t.raw_type);
  return acc;
}

double Patch::signed_area() const {
  double acc = 0.0;
  for (const auto& t : tiles)
    acc += std::sin(static_cast<double>(t.raw_type) * M_PI / static_cast<double>(n));
  return acc;
}

Patch prototile_patch(unsigned n, int s) {
  if (n < 3) throw std::domain_error("prototile_patch: symmetry order must be >= 3");
  if (s < 0 || s > static_cast<int>(n))
    throw std::domain_error("prototile_patch: tile index must lie in 0..n");
  Patch p;
  p.n = n;
  p.generation = 0;
  p.start_type = s;
  p.scale = CycloInt::one(4 * n);
  p.tiles.emplace_back(n, ExactPoint::origin(n), 0, 2 * s);
  p.bottom_dirs = {0};
  p.bottom_reversed = {false};
  return p;
}

namespace {

enum class Placement { upright, rotated, swap_low, swap_high };

Placement placement_for(Variant v, size_t i, size_t j) {
  switch (v) {
    case Variant::a: return Placement::upright;
    case Variant::b: return Placement::rotated;
    case Variant::c:
      if (i == j) return i == 1 ? Placement::upright : Placement::rotated;
      return i > j ? Placement::swap_low : Placement::swap_high;
    case Variant::d:
      if (i == j) return i == 1 ? Placement::rotated : Placement::upright;
      return i > j ? Placement::swap_high : Placement::swap_low;
  }
  return Placement::upright;
}

// Orientation letters presented along each side of a substituted tile,
// 'false' = forward, 'true' = reversed. All four sides of an edge-consistent
// variant read the same string.
std::vector<bool> variant_letters(Variant v, size_t count) {
  std::vector<bool> letters(count, false);
  switch (v) {
    case Variant::a: break;
    case Variant::b: letters.assign(count, true); break;
    case Variant::c:
      for (size_t i = 1; i < count; ++i) letters[i] = true;
      break;
    case Variant::d: letters[0] = true; break;
  }
  return letters;
}

void expand_oriented(std::vector<int>& dirs, std::vector<bool>& revs, const EdgeSequence& e,
                     const std::vector<bool>& letters) {
  const unsigned n = e.n();
  const auto& ks = e.ks2();
  const size_t nseg = ks.size();
  std::vector<int> new_dirs;
  std::vector<bool> new_revs;
  new_dirs.reserve(dirs.size() * nseg);
  new_revs.reserve(dirs.size() * nseg);
  for (size_t s = 0; s < dirs.size(); ++s) {
    const int d = dirs[s];
    if (!revs[s]) {
      for (size_t a = 0; a < nseg; ++a) {
        new_dirs.push_back(canon4n(d + ks[a], n));
        new_revs.push_back(letters[a]);
      }
    } else {
      for (size_t a = 0; a < nseg; ++a) {
        new_dirs.push_back(canon4n(d + ks[nseg - 1 - a], n));
        new_revs.push_back(!letters[nseg - 1 - a]);
      }
    }
  }
  dirs = std::move(new_dirs);
  revs = std::move(new_revs);
}

void check_variant_applicable(const EdgeSequence& e, Variant v) {
  if ((v == Variant::c || v == Variant::d) && e.size() != 2)
    throw std::domain_error("variants c/d are defined for two-segment edge sequences");
}

}  // namespace

Patch substitute(const Patch& patch, const EdgeSequence& e, Variant v) {
  const unsigned n = patch.n;
  if (e.n() != n) throw std::invalid_argument("substitute: edge sequence has a different n");
  check_variant_applicable(e, v);

  const auto& ks = e.ks2();
  const size_t nseg = ks.size();
  const CycloInt L = e.inflation_factor();

  Patch next;
  next.n = n;
  next.generation = patch.generation + 1;
  next.start_type = patch.start_type;
  next.scale = patch.scale * L;
  next.variant_history = patch.variant_history;
  next.variant_history.emplace_back(1, variant_to_char(v));
  next.tiles.reserve(patch.tiles.size() * nseg * nseg);

  std::vector<std::vector<SignedTile>> buckets(patch.tiles.size());

  parallel_chunks(patch.tiles.size(), 16, [&](size_t begin, size_t end) {
    for (size_t t = begin; t < end; ++t) {
      const SignedTile& parent = patch.tiles[t];
      const CycloInt base = parent.anchor.z * L;
      // Break-point prefixes of the two edge copies spanning this cell.
      std::vector<CycloInt> low, up;
      low.reserve(nseg + 1);
      up.reserve(nseg + 1);
      low.push_back(CycloInt::zero(4 * n));
      up.push_back(CycloInt::zero(4 * n));
      for (size_t a = 0; a < nseg; ++a) {
        low.push_back(low.back() + unit_root(n, parent.dir_lower + ks[a]));
        up.push_back(up.back() + unit_root(n, parent.dir_upper + ks[a]));
      }
      auto& out = buckets[t];
      out.reserve(nseg * nseg);
      for (size_t i = 1; i <= nseg; ++i) {
        for (size_t j = 1; j <= nseg; ++j) {
          const int cdl = parent.dir_lower + ks[i - 1];
          const int cdu = parent.dir_upper + ks[j - 1];
          switch (placement_for(v, i, j)) {
            case Placement::upright:
              out.emplace_back(n, ExactPoint(base + low[i - 1] + up[j - 1]), cdl, cdu);
              break;
            case Placement::rotated:
              out.emplace_back(n, ExactPoint(base + low[i] + up[j]), cdl + 2 * n, cdu + 2 * n);
              break;
            case Placement::swap_low:
              out.emplace_back(n, ExactPoint(base + low[i] + up[j - 1]), cdu, cdl + 2 * n);
              break;
            case Placement::swap_high:
              out.emplace_back(n, ExactPoint(base + low[i - 1] + up[j]), cdu + 2 * n, cdl);
              break;
          }
        }
      }
    }
  });
  for (auto& bucket : buckets)
    for (auto& tile : bucket) next.tiles.push_back(std::move(tile));

  next.bottom_dirs = patch.bottom_dirs;
  next.bottom_reversed = patch.bottom_reversed;
  expand_oriented(next.bottom_dirs, next.bottom_reversed, e, variant_letters(v, nseg));
  return next;
}

Patch build_substitution_tile(const EdgeSequence& e, int s) {
  return substitute(prototile_patch(e.n(), s), e, Variant::a);
}

Patch annihilated(const Patch& patch) {
  const unsigned n = patch.n;
  std::map<std::vector<CycloInt>, std::vector<size_t>> regions;
  for (size_t i = 0; i < patch.tiles.size(); ++i) {
    const auto& t = patch.tiles[i];
    if (t.degenerate) continue;
    auto corners = t.corners(n);
    std::vector<CycloInt> key;
    key.reserve(4);
    for (const auto& c : corners) key.push_back(c.z);
    std::sort(key.begin(), key.end());
    regions[std::move(key)].push_back(i);
  }

  std::vector<bool> removed(patch.tiles.size(), false);
  for (auto& [key, indices] : regions) {
    if (indices.size() < 2) continue;
    for (size_t a = 0; a < indices.size(); ++a) {
      if (removed[indices[a]]) continue;
      const CycloInt area_a = two_i_sin(n, 2LL * patch.tiles[indices[a]].raw_type);
      for (size_t b = a + 1; b < indices.size(); ++b) {
        if (removed[indices[b]]) continue;
        const CycloInt area_b = two_i_sin(n, 2LL * patch.tiles[indices[b]].raw_type);
        if ((area_a + area_b).is_zero()) {
          removed[indices[a]] = removed[indices[b]] = true;
          break;
        }
      }
    }
  }

  Patch out = patch;
  out.tiles.clear();
  for (size_t i = 0; i < patch.tiles.size(); ++i)
    if (!removed[i]) out.tiles.push_back(patch.tiles[i]);
  return out;
}

namespace {

EdgeSequence sequence_from_dirs(const EdgeSequence& e, const std::vector<int>& dirs) {
  EdgeSequence out = EdgeSequence::validate(e.n(), dirs, OverhangPolicy::permissive);
  return out;
}

}  // namespace

EdgeSequence expand_edge(const EdgeSequence& e, unsigned generations, Variant v) {
  return expand_edge(e, std::vector<Variant>(generations, v));
}

EdgeSequence expand_edge(const EdgeSequence& e, const std::vector<Variant>& per_generation) {
  std::vector<int> dirs = {0};
  std::vector<bool> revs = {false};
  for (Variant v : per_generation) {
    check_variant_applicable(e, v);
    expand_oriented(dirs, revs, e, variant_letters(v, e.size()));
  }
  return sequence_from_dirs(e, dirs);
}

EdgeSequence expand_edge_bits(const EdgeSequence& e, const std::vector<std::string>& bits) {
  const unsigned n = e.n();
  const auto& ks = e.ks2();
  const size_t nseg = ks.size();
  std::vector<int> dirs = {0};
  for (const auto& step : bits) {
    if (step.size() != dirs.size())
      throw std::invalid_argument("expand_edge_bits: orientation string length mismatch (need " +
                                  std::to_string(dirs.size()) + ", got " +
                                  std::to_string(step.size()) + ")");
    std::vector<int> next;
    next.reserve(dirs.size() * nseg);
    for (size_t s = 0; s < dirs.size(); ++s) {
      const char c = step[s];
      bool reversed_seg;
      if (c == '0' || c == 'F' || c == 'f') reversed_seg = false;
      else if (c == '1' || c == 'R' || c == 'r') reversed_seg = true;
      else throw std::invalid_argument("expand_edge_bits: orientation characters must be 0/1");
      for (size_t a = 0; a < nseg; ++a) {
        const int k = reversed_seg ? ks[nseg - 1 - a] : ks[a];
        next.push_back(canon4n(dirs[s] + k, n));
      }
    }
    dirs = std::move(next);
  }
  return sequence_from_dirs(e, dirs);
}

namespace {

double point_segment_distance(double px, double py, double ax, double ay, double bx, double by) {
  const double dx = bx - ax, dy = by - ay;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0 ? ((px - ax) * dx + (py - ay) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  const double cx = ax + t * dx - px, cy = ay + t * dy - py;
  return std::sqrt(cx * cx + cy * cy);
}

constexpr double kEdgeTolerance = 1e-9;

}  // namespace

int signed_coverage(const Patch& patch, double px, double py) {
  int total = 0;
  for (const auto& t : patch.tiles) {
    const auto& c = t.fcorners;
    for (int k = 0; k < 4; ++k) {
      const auto& a = c[k];
      const auto& b = c[(k + 1) % 4];
      if (point_segment_distance(px, py, a[0], a[1], b[0], b[1]) < kEdgeTolerance)
        throw degenerate_probe("probe within tolerance of a tile edge");
    }
    if (t.degenerate) continue;
    const double ux = c[1][0] - c[0][0], uy = c[1][1] - c[0][1];
    const double vx = c[3][0] - c[0][0], vy = c[3][1] - c[0][1];
    const double det = ux * vy - uy * vx;
    if (std::fabs(det) < 1e-12) continue;
    const double wx = px - c[0][0], wy = py - c[0][1];
    const double alpha = (wx * vy - wy * vx) / det;
    const double beta = (ux * wy - uy * wx) / det;
    if (alpha > 0.0 && alpha < 1.0 && beta > 0.0 && beta < 1.0) total += t.sign;
  }
  return total;
}

int signed_coverage(const Patch& patch, const ExactPoint& probe) {
  return signed_coverage(patch, probe.x(), probe.y());
}

namespace {

struct FloatRing {
  std::vector<std::array<double, 2>> pts;

  double min_distance(double px, double py) const {
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < pts.size(); ++i) {
      const auto& a = pts[i];
      const auto& b = pts[(i + 1) % pts.size()];
      best = std::min(best, point_segment_distance(px, py, a[0], a[1], b[0], b[1]));
    }
    return best;
  }

  // Crossing-number parity is enough here; loop-free rings are simple curves.
  bool contains(double px, double py) const {
    bool inside = false;
    for (size_t i = 0; i < pts.size(); ++i) {
      const auto& a = pts[i];
      const auto& b = pts[(i + 1) % pts.size()];
      if ((a[1] > py) == (b[1] > py)) continue;
      const double x = a[0] + (py - a[1]) / (b[1] - a[1]) * (b[0] - a[0]);
      if (px < x) inside = !inside;
    }
    return inside;
  }
};

}  // namespace

CoverageSample sample_coverage(const Patch& patch, int interior_probes, int exterior_probes,
                               unsigned long long seed) {
  FloatRing ring;
  for (const auto& p : patch.boundary_polyline()) ring.pts.push_back({p.x(), p.y()});

  const double Lg = patch.scale.real_value();
  const auto corner_u = unit_root(patch.n, 0).complex_value();
  const auto corner_v = unit_root(patch.n, 2 * patch.start_type).complex_value();
  const double e1x = Lg * corner_u.real(), e1y = Lg * corner_u.imag();
  const double e2x = Lg * corner_v.real(), e2y = Lg * corner_v.imag();

  double minx = 0, miny = 0, maxx = 0, maxy = 0;
  for (const auto& p : ring.pts) {
    minx = std::min(minx, p[0]);
    maxx = std::max(maxx, p[0]);
    miny = std::min(miny, p[1]);
    maxy = std::max(maxy, p[1]);
  }
  const double spanx = std::max(maxx - minx, 1.0), spany = std::max(maxy - miny, 1.0);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  CoverageSample result;
  result.interior_requested = interior_probes;
  result.min_interior = std::numeric_limits<int>::max();
  result.max_interior = std::numeric_limits<int>::min();

  // Stratified draw over the rhomb parallelogram, rejecting points that are
  // outside the actual boundary or too close to it.
  std::vector<std::array<double, 2>> interior_pts;
  const int strata = std::max(1, static_cast<int>(std::sqrt(static_cast<double>(interior_probes))));
  int attempts = 0;
  const int max_attempts = 200 * std::max(1, interior_probes);
  while (static_cast<int>(interior_pts.size()) < interior_probes && attempts < max_attempts) {
    const int cell = attempts % (strata * strata);
    const double sa = (cell % strata + unit(rng)) / strata;
    const double sb = (cell / strata + unit(rng)) / strata;
    ++attempts;
    const double px = sa * e1x + sb * e2x;
    const double py = sa * e1y + sb * e2y;
    if (!ring.contains(px, py)) continue;
    if (ring.min_distance(px, py) < 1e-7) continue;
    interior_pts.push_back({px, py});
  }
  result.interior_tested = static_cast<int>(interior_pts.size());

  std::vector<std::array<double, 2>> exterior_pts;
  attempts = 0;
  while (static_cast<int>(exterior_pts.size()) < exterior_probes &&
         attempts < 200 * std::max(1, exterior_probes)) {
    ++attempts;
    const double px = minx - 0.25 * spanx + unit(rng) * 1.5 * spanx;
    const double py = miny - 0.25 * spany + unit(rng) * 1.5 * spany;
    if (ring.contains(px, py)) continue;
    if (ring.min_distance(px, py) < 1e-7) continue;
    exterior_pts.push_back({px, py});
  }
  result.exterior_tested = static_cast<int>(exterior_pts.size());

  std::vector<int> interior_cov(interior_pts.size(), 0);
  std::vector<int> exterior_cov(exterior_pts.size(), 0);
  std::vector<char> retry(interior_pts.size() + exterior_pts.size(), 0);
  auto eval_range = [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) {
      const bool is_interior = i < interior_pts.size();
      const auto& pt = is_interior ? interior_pts[i] : exterior_pts[i - interior_pts.size()];
      try {
        const int cov = signed_coverage(patch, pt[0], pt[1]);
        if (is_interior) interior_cov[i] = cov;
        else exterior_cov[i - interior_pts.size()] = cov;
      } catch (const degenerate_probe&) {
        retry[i] = 1;
      }
    }
  };
  parallel_chunks(interior_pts.size() + exterior_pts.size(), 256, eval_range);

  // Degenerate probes are re-drawn serially; bounded attempts per probe.
  for (size_t i = 0; i < retry.size(); ++i) {
    if (!retry[i]) continue;
    const bool is_interior = i < interior_pts.size();
    bool fixed = false;
    for (int tries = 0; tries < 64 && !fixed; ++tries) {
      double px, py;
      if (is_interior) {
        const double sa = unit(rng), sb = unit(rng);
        px = sa * e1x + sb * e2x;
        py = sa * e1y + sb * e2y;
        if (!ring.contains(px, py) || ring.min_distance(px, py) < 1e-7) continue;
      } else {
        px = minx - 0.25 * spanx + unit(rng) * 1.5 * spanx;
        py = miny - 0.25 * spany + unit(rng) * 1.5 * spany;
        if (ring.contains(px, py) || ring.min_distance(px, py) < 1e-7) continue;
      }
      try {
        const int cov = signed_coverage(patch, px, py);
        if (is_interior) interior_cov[i] = cov;
        else exterior_cov[i - interior_pts.size()] = cov;
        fixed = true;
      } catch (const degenerate_probe&) {
      }
    }
    if (!fixed) throw degenerate_probe("could not find a clean probe after 64 attempts");
  }

  for (int cov : interior_cov) {
    result.min_interior = std::min(result.min_interior, cov);
    result.max_interior = std::max(result.max_interior, cov);
    if (cov == 1) ++result.interior_ones;
  }
  if (interior_cov.empty()) result.min_interior = result.max_interior = 0;
  for (int cov : exterior_cov)
    if (cov == 0) ++result.exterior_zeros;
  return result;
}

std::vector<Worm> worm_decompose(const Patch& patch, Axis axis) {
  if (patch.generation != 1)
    throw std::domain_error("worm_decompose: patch must be a first-generation substitution tile");
  const size_t nseg = patch.bottom_dirs.size();
  if (patch.tiles.size() != nseg * nseg)
    throw std::domain_error("worm_decompose: patch is not a full substitution tile grid");
  const unsigned n = patch.n;
  const int opening = 2 * patch.start_type;

  // Rebuild the break-point grid from the bottom-edge directions.
  std::vector<CycloInt> low{CycloInt::zero(4 * n)}, up{CycloInt::zero(4 * n)};
  for (size_t a = 0; a < nseg; ++a) {
    low.push_back(low.back() + unit_root(n, patch.bottom_dirs[a]));
    up.push_back(up.back() + unit_root(n, opening + patch.bottom_dirs[a]));
  }
  auto grid_point = [&](size_t i, size_t j) { return low[i] + up[j]; };

  std::vector<Worm> worms;
  worms.reserve(nseg);
  for (size_t w = 1; w <= nseg; ++w) {
    Worm worm;
    for (size_t t = 1; t <= nseg; ++t) {
      const size_t i = axis == Axis::row ? t : w;
      const size_t j = axis == Axis::row ? w : t;
      worm.tiles.push_back(patch.tiles[(i - 1) * nseg + (j - 1)]);
    }
    for (size_t t = 0; t <= nseg; ++t) {
      const size_t i = axis == Axis::row ? t : w - 1;
      const size_t j = axis == Axis::row ? w - 1 : t;
      worm.lower.push_back(ExactPoint(grid_point(i, j)));
      const size_t i2 = axis == Axis::row ? t : w;
      const size_t j2 = axis == Axis::row ? w : t;
      worm.upper.push_back(ExactPoint(grid_point(i2, j2)));
    }
    worms.push_back(std::move(worm));
  }
  return worms;
}

namespace {

nlohmann::json coeffs_to_json(const CycloInt& value) {
  nlohmann::json arr = nlohmann::json::array();
  static const BigInt kMax = BigInt(std::numeric_limits<long long>::max());
  static const BigInt kMin = BigInt(std::numeric_limits<long long>::min());
  for (const auto& c : value.coefficients()) {
    if (c >= kMin && c <= kMax) arr.push_back(c.convert_to<long long>());
    else arr.push_back(c.str());
  }
  return arr;
}

CycloInt coeffs_from_json(unsigned order, const nlohmann::json& arr) {
  std::vector<BigInt> coeffs;
  coeffs.reserve(arr.size());
  for (const auto& item : arr) {
    if (item.is_string()) coeffs.emplace_back(item.get<std::string>());
    else coeffs.emplace_back(item.get<long long>());
  }
  return CycloInt::from_coefficients(order, std::move(coeffs));
}

}  // namespace

std::string Patch::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["generation"] = generation;
  j["start"] = start_type;
  j["variants"] = variant_history;
  j["scale_exact"] = coeffs_to_json(scale);
  nlohmann::json tiles_json = nlohmann::json::array();
  for (const auto& t : tiles) {
    nlohmann::json tj;
    tj["s"] = t.type;
    tj["orient2"] = t.dir_lower;
    tj["sign"] = t.sign;
    tj["anchor"] = {t.anchor.x(), t.anchor.y()};
    tj["anchor_exact"] = coeffs_to_json(t.anchor.z);
    tiles_json.push_back(std::move(tj));
  }
  j["tiles"] = std::move(tiles_json);
  nlohmann::json boundary = nlohmann::json::array();
  nlohmann::json boundary_exact = nlohmann::json::array();
  for (const auto& p : boundary_polyline()) {
    boundary.push_back({p.x(), p.y()});
    boundary_exact.push_back(coeffs_to_json(p.z));
  }
  j["boundary"] = std::move(boundary);
  j["boundary_exact"] = std::move(boundary_exact);
  j["bottom_dirs"] = bottom_dirs;
  std::vector<int> revs(bottom_reversed.begin(), bottom_reversed.end());
  j["bottom_reversed"] = revs;
  return j.dump(2);
}

Patch Patch::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  Patch p;
  p.n = j.at("n").get<unsigned>();
  p.generation = j.at("generation").get<unsigned>();
  p.start_type = j.at("start").get<int>();
  p.variant_history = j.at("variants").get<std::vector<std::string>>();
  p.scale = coeffs_from_json(4 * p.n, j.at("scale_exact"));
  const unsigned n = p.n;
  for (const auto& tj : j.at("tiles")) {
    const int type = tj.at("s").get<int>();
    const int sign = tj.at("sign").get<int>();
    const int dl = tj.at("orient2").get<int>();
    const int raw = sign >= 0 ? type : static_cast<int>(2 * n) - type;
    p.tiles.emplace_back(n, ExactPoint(coeffs_from_json(4 * n, tj.at("anchor_exact"))), dl,
                         dl + 2 * raw);
  }
  p.bottom_dirs = j.at("bottom_dirs").get<std::vector<int>>();
  for (int r : j.at("bottom_reversed").get<std::vector<int>>()) p.bottom_reversed.push_back(r != 0);
  return p;
}

}  // namespace rhombforge
