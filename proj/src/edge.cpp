#include "rhombforge/edge.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "json.hpp"

namespace rhombforge {

namespace {

int canonical_direction(long long h, unsigned n) {
  const long long m = 4LL * n;
  long long r = h % m;
  if (r < 0) r += m;
  if (r > 2LL * n) r -= m;  // canonical range (-2n, 2n]
  return static_cast<int>(r);
}

}  // namespace

std::string_view to_string(EdgeFault fault) {
  switch (fault) {
    case EdgeFault::bad_symmetry_order: return "bad_symmetry_order";
    case EdgeFault::empty_sequence: return "empty_sequence";
    case EdgeFault::mixed_parity: return "mixed_parity";
    case EdgeFault::unbalanced_pairs: return "unbalanced_pairs";
    case EdgeFault::overhang_exceeded: return "overhang_exceeded";
  }
  return "unknown";
}

long long AngleMultiset::at(int half_units) const {
  auto it = counts.find(half_units);
  return it == counts.end() ? 0 : it->second;
}

size_t AngleMultiset::sequence_length() const {
  size_t total = 0;
  for (const auto& [h, m] : counts)
    total += static_cast<size_t>(m) * ((h == 0 || h == static_cast<int>(2 * n)) ? 1 : 2);
  return total;
}

AngleMultiset AngleMultiset::doubled() const {
  AngleMultiset out;
  out.n = 2 * n;
  out.parity = Parity::integer;
  for (const auto& [h, m] : counts) out.counts[2 * h] = m;
  return out;
}

EdgeSequence EdgeSequence::validate(unsigned n, std::vector<int> ks2, OverhangPolicy policy) {
  if (n < 3)
    throw validation_error(EdgeFault::bad_symmetry_order,
                           "symmetry order must be at least 3, got " + std::to_string(n));
  if (ks2.empty())
    throw validation_error(EdgeFault::empty_sequence, "edge sequence must be non-empty");

  for (auto& h : ks2) h = canonical_direction(h, n);

  const int first_parity = ks2.front() & 1;
  for (int h : ks2)
    if ((h & 1) != first_parity)
      throw validation_error(EdgeFault::mixed_parity,
                             "edge angles mix integer and half-integer multiples of pi/n");

  std::map<int, long long> balance;
  for (int h : ks2) {
    if (h == 0 || h == static_cast<int>(2 * n)) continue;  // sin is zero, unconstrained
    balance[h] += 1;
  }
  for (const auto& [h, cnt] : balance) {
    if (h < 0) continue;
    auto it = balance.find(-h);
    const long long other = it == balance.end() ? 0 : it->second;
    if (other != cnt)
      throw validation_error(EdgeFault::unbalanced_pairs,
                             "nonzero edge angles must occur in +/- pairs (angle " +
                                 std::to_string(h) + "/2 * pi/n unbalanced)");
  }
  for (const auto& [h, cnt] : balance) {
    if (h >= 0) continue;
    auto it = balance.find(-h);
    if (it == balance.end())
      throw validation_error(EdgeFault::unbalanced_pairs,
                             "nonzero edge angles must occur in +/- pairs (angle " +
                                 std::to_string(h) + "/2 * pi/n unbalanced)");
    (void)cnt;
  }

  if (policy == OverhangPolicy::strict) {
    for (int h : ks2)
      if (std::abs(h) > static_cast<int>(n))
        throw validation_error(EdgeFault::overhang_exceeded,
                               "edge angle exceeds pi/2 in strict mode");
  }

  const Parity parity = first_parity ? Parity::half_integer : Parity::integer;
  return EdgeSequence(n, std::move(ks2), parity, policy);
}

AngleMultiset EdgeSequence::multiset() const {
  AngleMultiset ms;
  ms.n = n_;
  ms.parity = parity_;
  for (int h : ks2_) {
    if (h == 0 || h == static_cast<int>(2 * n_)) {
      ms.counts[h] += 1;
    } else if (h > 0) {
      ms.counts[h] += 1;  // one count per +/- pair
    }
  }
  return ms;
}

CycloInt EdgeSequence::inflation_factor() const {
  CycloInt acc = CycloInt::zero(4 * n_);
  for (int h : ks2_) acc += unit_root(n_, h);
  return acc;
}

EdgeSequence EdgeSequence::doubled() const {
  if (parity_ != Parity::half_integer)
    throw std::domain_error("doubled: sequence is already integer parity");
  std::vector<int> ks(ks2_);
  for (auto& h : ks) h *= 2;
  EdgeSequence out = validate(2 * n_, std::move(ks), policy_);
  out.from_half_integer_ = true;
  return out;
}

EdgeSequence EdgeSequence::reversed() const {
  std::vector<int> ks(ks2_.rbegin(), ks2_.rend());
  EdgeSequence out(n_, std::move(ks), parity_, policy_);
  out.from_half_integer_ = from_half_integer_;
  return out;
}

std::string EdgeSequence::to_json() const {
  nlohmann::json j;
  j["n"] = n_;
  j["ks2"] = ks2_;
  return j.dump();
}

EdgeSequence EdgeSequence::from_json(const std::string& text, OverhangPolicy policy) {
  const auto j = nlohmann::json::parse(text);
  if (!j.contains("n") || !j.contains("ks2"))
    throw std::invalid_argument("edge JSON needs fields \"n\" and \"ks2\"");
  return validate(j.at("n").get<unsigned>(), j.at("ks2").get<std::vector<int>>(), policy);
}

std::vector<ExactPoint> edge_polyline(const EdgeSequence& e, int base_direction) {
  std::vector<ExactPoint> pts;
  pts.reserve(e.size() + 1);
  pts.push_back(ExactPoint::origin(e.n()));
  for (int h : e.ks2())
    pts.push_back(ExactPoint(pts.back().z + unit_root(e.n(), base_direction + h)));
  return pts;
}

namespace {

// Sign of the cross product (b-a) x (c-a): exact zero test, float sign otherwise.
int orient_sign(const CycloInt& a, const CycloInt& b, const CycloInt& c) {
  const CycloInt u = b - a;
  const CycloInt v = c - a;
  const CycloInt w = u.conjugate() * v;
  if ((w - w.conjugate()).is_zero()) return 0;
  const double im = w.complex_value().imag();
  return im > 0 ? 1 : -1;
}

// For p collinear with [a, b]: does p lie within the closed segment?
bool on_segment(const CycloInt& a, const CycloInt& b, const CycloInt& p) {
  auto dot_sign = [](const CycloInt& u, const CycloInt& v) {
    const CycloInt w = u.conjugate() * v;
    if ((w + w.conjugate()).is_zero()) return 0;
    return w.complex_value().real() > 0 ? 1 : -1;
  };
  if (dot_sign(b - a, p - a) < 0) return false;
  if (dot_sign(a - b, p - b) < 0) return false;
  return true;
}

bool segments_touch(const CycloInt& p1, const CycloInt& p2, const CycloInt& p3,
                    const CycloInt& p4) {
  const int d1 = orient_sign(p3, p4, p1);
  const int d2 = orient_sign(p3, p4, p2);
  const int d3 = orient_sign(p1, p2, p3);
  const int d4 = orient_sign(p1, p2, p4);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  if (d1 == 0 && on_segment(p3, p4, p1)) return true;
  if (d2 == 0 && on_segment(p3, p4, p2)) return true;
  if (d3 == 0 && on_segment(p1, p2, p3)) return true;
  if (d4 == 0 && on_segment(p1, p2, p4)) return true;
  return false;
}

}  // namespace

bool has_loops(const EdgeSequence& e) {
  const auto pts = edge_polyline(e, 0);
  const auto& ks = e.ks2();
  const size_t nseg = ks.size();
  const long long m = 4LL * e.n();

  // Consecutive segments backtracking along the same line overlap immediately.
  for (size_t i = 0; i + 1 < nseg; ++i) {
    long long diff = (static_cast<long long>(ks[i + 1]) - ks[i]) % m;
    if (diff < 0) diff += m;
    if (diff == 2LL * e.n()) return true;
  }

  // Cheap float bounding-box prefilter in front of the exact predicate.
  std::vector<std::array<double, 2>> fp(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) fp[i] = {pts[i].x(), pts[i].y()};
  auto boxes_disjoint = [&](size_t i, size_t j) {
    const double pad = 1e-9;
    const double ix0 = std::min(fp[i][0], fp[i + 1][0]), ix1 = std::max(fp[i][0], fp[i + 1][0]);
    const double iy0 = std::min(fp[i][1], fp[i + 1][1]), iy1 = std::max(fp[i][1], fp[i + 1][1]);
    const double jx0 = std::min(fp[j][0], fp[j + 1][0]), jx1 = std::max(fp[j][0], fp[j + 1][0]);
    const double jy0 = std::min(fp[j][1], fp[j + 1][1]), jy1 = std::max(fp[j][1], fp[j + 1][1]);
    return ix1 < jx0 - pad || jx1 < ix0 - pad || iy1 < jy0 - pad || jy1 < iy0 - pad;
  };

  for (size_t i = 0; i + 2 < nseg; ++i) {
    for (size_t j = i + 2; j < nseg; ++j) {
      if (boxes_disjoint(i, j)) continue;
      if (segments_touch(pts[i].z, pts[i + 1].z, pts[j].z, pts[j + 1].z)) return true;
    }
  }
  return false;
}

namespace {

struct PresetDef {
  const char* name;
  unsigned default_n;
  bool n_overridable;
  std::vector<int> ks2;
};

const std::vector<PresetDef>& preset_table() {
  static const std::vector<PresetDef> table = {
      {"ab", 4, true, {0, 2, -2}},
      {"penrose-a", 5, true, {2, -2}},
      {"penrose-b", 5, true, {0, 4, -4}},
      {"lb", 5, true, {1, -1}},
      {"harriss", 7, true, {0, 2, -2, 0}},
      {"maloney11",
       11,
       false,
       {2,  -2, -6, 6,  0, 4,  -4, -2, 2,  0,  -10, 10, -6, 6,  -2, 2,  8, -8,
        4,  -4, 0,  -2, 2, 4,  -4, -6, 6,  0,  8,   -8, -2, 2,  4,  -4, 0}},
  };
  return table;
}

}  // namespace

std::optional<EdgeSequence> preset_edge(std::string_view name, std::optional<unsigned> n_override) {
  for (const auto& def : preset_table()) {
    if (name != def.name) continue;
    unsigned n = def.default_n;
    if (n_override && *n_override != def.default_n) {
      if (!def.n_overridable)
        throw std::invalid_argument(std::string("preset ") + def.name + " has a fixed n");
      n = *n_override;
    }
    return EdgeSequence::validate(n, def.ks2);
  }
  return std::nullopt;
}

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& def : preset_table()) names.emplace_back(def.name);
  return names;
}

}  // namespace rhombforge
