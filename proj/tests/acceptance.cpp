// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rhombforge/geometry.hpp"
#include "rhombforge/spectra.hpp"

using namespace rhombforge;

namespace {

struct Check {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    ok = false;
    if (detail.empty()) detail = why;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

std::mt19937_64 g_rng(0xC0FFEE);

EdgeSequence random_sequence() {
  std::uniform_int_distribution<unsigned> n_dist(3, 12);
  const unsigned n = n_dist(g_rng);
  std::bernoulli_distribution half(0.35);
  std::vector<int> ks2;
  if (half(g_rng)) {
    std::uniform_int_distribution<int> pairs(1, 4);
    const int p = pairs(g_rng);
    std::vector<int> odd;
    for (int h = 1; h <= static_cast<int>(n); h += 2) odd.push_back(h);
    std::uniform_int_distribution<size_t> pick(0, odd.size() - 1);
    for (int i = 0; i < p; ++i) {
      const int h = odd[pick(g_rng)];
      ks2.push_back(h);
      ks2.push_back(-h);
    }
  } else {
    std::uniform_int_distribution<int> pairs(0, 4);
    const int p = pairs(g_rng);
    std::uniform_int_distribution<int> zeros(p == 0 ? 1 : 0, static_cast<int>(8 - 2 * p));
    const int z = zeros(g_rng);
    for (int i = 0; i < z; ++i) ks2.push_back(0);
    std::uniform_int_distribution<int> pick(1, std::max(1, static_cast<int>(n) / 2));
    for (int i = 0; i < p; ++i) {
      const int h = 2 * pick(g_rng);
      ks2.push_back(h);
      ks2.push_back(-h);
    }
  }
  std::shuffle(ks2.begin(), ks2.end(), g_rng);
  return EdgeSequence::validate(n, std::move(ks2));
}

std::vector<EdgeSequence> random_corpus(size_t count) {
  std::vector<EdgeSequence> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) out.push_back(random_sequence());
  return out;
}

// 1. Five published single-dent PV families, nothing else, for n <= 9.
Check criterion_table1() {
  Check c;
  const std::set<std::tuple<long long, long long, long long, unsigned>> expected = {
      {0, 1, 0, 5}, {1, 1, 0, 4}, {1, 1, 0, 5}, {1, 1, 0, 6}, {1, 1, 0, 9},
      {2, 1, 0, 4}, {2, 1, 0, 6}, {1, 0, 1, 5}, {1, 0, 1, 7}, {2, 0, 1, 5},
  };
  for (unsigned n_max : {9u, 12u}) {
    std::set<std::tuple<long long, long long, long long, unsigned>> hits;
    for (const auto& row : pv_scan(2, n_max))
      if (row.is_pv) hits.insert({row.m0, row.m1, row.m2, row.n});
    c.expect(hits == expected,
             "scan up to n=" + std::to_string(n_max) + " returned " +
                 std::to_string(hits.size()) + " hits, expected 10");
  }
  return c;
}

// 2. Exact areal identity: the first row of S sums to L^2 in the ring.
Check criterion_area_identity(const std::vector<EdgeSequence>& corpus) {
  Check c;
  for (const auto& e : corpus) {
    const CirculantMatrix M = edge_matrix(e.multiset());
    const CirculantMatrix S = tile_matrix(M);
    const CycloInt L = row_value(M.first_row());
    if (!(row_value(S.first_row()) == L * L)) {
      c.fail("identity failed for n=" + std::to_string(e.n()));
      break;
    }
  }
  return c;
}

// 3. S equals the explicit matrix square; eigenvalues of S are lambda^2.
Check criterion_matrix_square(const std::vector<EdgeSequence>& corpus) {
  Check c;
  for (const auto& e : corpus) {
    const CirculantMatrix M = edge_matrix(e.multiset());
    const CirculantMatrix S = tile_matrix(M);
    const auto dense = M.dense();
    const unsigned m = M.size();
    for (unsigned i = 0; i < m && c.ok; ++i)
      for (unsigned j = 0; j < m; ++j) {
        long long acc = 0;
        for (unsigned k = 0; k < m; ++k) acc += dense[i][k] * dense[k][j];
        if (acc != S.entry(i, j)) {
          c.fail("dense square mismatch at n=" + std::to_string(e.n()));
          break;
        }
      }
    if (!c.ok) break;
    const auto lam = M.eigenvalues();
    const auto lam_s = S.eigenvalues();
    for (size_t j = 0; j < lam.size(); ++j)
      if (!(lam_s[j] == lam[j] * lam[j])) {
        c.fail("eigenvalue square mismatch at n=" + std::to_string(e.n()));
        break;
      }
    if (!c.ok) break;
  }
  return c;
}

// 4. Known tilings: published prototile counts and the two Penrose edges.
Check criterion_known_tilings() {
  Check c;
  const TileCounts harriss = tile_counts(EdgeSequence::validate(7, {0, 2, -2, 0}).multiset());
  c.expect(harriss.counts[0] == 6 && harriss.counts[1] == 4 && harriss.counts[2] == 1,
           "harriss counts");
  for (unsigned t = 3; t < harriss.counts.size(); ++t)
    c.expect(harriss.counts[t] == 0, "harriss higher counts");

  const TileCounts m1 = tile_counts(EdgeSequence::validate(5, {2, -2}).multiset());
  c.expect(m1.counts == std::vector<long long>{2, 0, 1, 0, 0, 0}, "m1=1 counts");

  const TileCounts half = tile_counts(EdgeSequence::validate(5, {1, -1}).multiset());
  c.expect(half.counts == std::vector<long long>{2, 1, 0, 0, 0, 0}, "m1/2=1 counts");
  c.expect(half.from_half_integer, "m1/2=1 doubling flag");

  // The two Penrose edge couples produce the same prototile inventory once
  // zero-area tiles are dropped and subtraction tiles are folded in.
  const CirculantMatrix sa = tile_matrix(edge_matrix(EdgeSequence::validate(5, {2, -2}).multiset()));
  const CirculantMatrix sb =
      tile_matrix(edge_matrix(EdgeSequence::validate(5, {0, 4, -4}).multiset()));
  for (unsigned s = 0; s < 10; ++s) {
    std::vector<long long> ca(10), cb(10);
    for (unsigned j = 0; j < 10; ++j) {
      ca[j] = sa.first_row()[(j + 10 - s) % 10];
      cb[j] = sb.first_row()[(j + 10 - s) % 10];
    }
    c.expect(reduce_prototile_set(ca, ReductionMode::signed_tiles) ==
                 reduce_prototile_set(cb, ReductionMode::signed_tiles),
             "penrose signed reduction at s=" + std::to_string(s));
    c.expect(reduce_prototile_set(ca, ReductionMode::congruent) ==
                 reduce_prototile_set(cb, ReductionMode::congruent),
             "penrose congruent reduction at s=" + std::to_string(s));
  }
  return c;
}

// 5. Geometric signed areas match L^2 sin(s pi/n) exactly and in float.
Check criterion_geometric_area() {
  Check c;
  for (unsigned n : {4u, 5u, 8u, 9u}) {
    const EdgeSequence e = EdgeSequence::validate(n, {2, -2});
    const CycloInt L = e.inflation_factor();
    for (int s = 0; s <= static_cast<int>(n); ++s) {
      const Patch p = build_substitution_tile(e, s);
      if (!(p.signed_area_two_i() == L * L * two_i_sin(n, 2 * s))) {
        c.fail("exact area failed at n=" + std::to_string(n) + " s=" + std::to_string(s));
        continue;
      }
      const double expected =
          L.real_value() * L.real_value() * std::sin(s * M_PI / static_cast<double>(n));
      c.expect(std::fabs(p.signed_area() - expected) < 1e-9,
               "float area failed at n=" + std::to_string(n) + " s=" + std::to_string(s));
      if (s == 0 || s == static_cast<int>(n))
        c.expect(p.signed_area_two_i().is_zero(),
                 "degenerate start should cancel at n=" + std::to_string(n));
    }
  }
  return c;
}

// 6. Single positive layer at 1000 interior and 200 exterior seeded probes.
Check criterion_coverage() {
  Check c;
  struct Job {
    unsigned n;
    std::vector<int> ks2;
    int s;
    Variant v;
  };
  const std::vector<Job> jobs = {{9, {2, -2}, 4, Variant::b}, {5, {1, -1}, 2, Variant::c}};
  for (const auto& job : jobs) {
    const EdgeSequence e = EdgeSequence::validate(job.n, job.ks2);
    Patch p = prototile_patch(job.n, job.s);
    for (int g = 0; g < 3; ++g) p = substitute(p, e, job.v);
    c.expect(p.tiles.size() == 64, "expected 64 tiles per start tile");
    c.expect(!has_loops(expand_edge(e, 3, job.v)), "boundary edge must be loop-free");
    const auto sample = sample_coverage(p, 1000, 200, 20260808);
    c.expect(sample.interior_tested == 1000 && sample.interior_ones == 1000,
             "interior coverage != 1 somewhere (n=" + std::to_string(job.n) + ")");
    c.expect(sample.exterior_tested == 200 && sample.exterior_zeros == 200,
             "exterior coverage != 0 somewhere (n=" + std::to_string(job.n) + ")");
  }
  return c;
}

// 7. Generalized binary tilings involve no subtraction tiles.
Check criterion_lb_positivity() {
  Check c;
  for (Variant v : {Variant::c, Variant::d}) {
    for (unsigned n : {5u, 7u, 9u}) {
      const EdgeSequence lb = EdgeSequence::validate(n, {1, -1});
      for (int s = 2; s < static_cast<int>(n); s += 2) {
        Patch p = prototile_patch(n, s);
        for (int g = 0; g < 3; ++g) {
          p = substitute(p, lb, v);
          p = annihilated(p);
          for (const auto& t : p.tiles)
            if (t.sign < 0)
              c.fail("negative tile at n=" + std::to_string(n) + " s=" + std::to_string(s));
        }
        c.expect(p.signed_area_two_i() == p.scale * p.scale * two_i_sin(n, 2 * s),
                 "area drifted during annihilation");
      }
    }
  }
  return c;
}

// 8. Even and odd tile indices never mix under variants a and b.
Check criterion_parity_separation() {
  Check c;
  const EdgeSequence e = EdgeSequence::validate(9, {2, -2});
  for (Variant v : {Variant::a, Variant::b}) {
    for (int s = 0; s <= 8; s += 2) {
      Patch p = prototile_patch(9, s);
      for (int g = 0; g < 3; ++g) {
        p = substitute(p, e, v);
        for (const auto& t : p.tiles)
          if (t.raw_type % 2 != 0) c.fail("odd tile from even start s=" + std::to_string(s));
      }
    }
  }
  return c;
}

// 9. Eight generations of the doubling rule: 2^8 segments, chord L^8.
Check criterion_koch() {
  Check c;
  const EdgeSequence e = EdgeSequence::validate(5, {2, -2});
  const EdgeSequence koch = expand_edge(e, 8, Variant::b);
  c.expect(koch.size() == 256, "segment count " + std::to_string(koch.size()) + " != 256");
  CycloInt endpoint = CycloInt::zero(20);
  for (int h : koch.ks2()) endpoint += unit_root(5, h);
  c.expect(endpoint == e.inflation_factor().pow(8), "endpoint is not exactly L^8");
  return c;
}

// 10. Variant c equals variant d reflected across the far rhomb diagonal.
Check criterion_mirror() {
  Check c;
  const EdgeSequence e = EdgeSequence::validate(5, {2, -2});
  for (int s = 0; s <= 5; ++s) {
    Patch pc = prototile_patch(5, s);
    Patch pd = prototile_patch(5, s);
    for (int g = 0; g < 2; ++g) {
      pc = substitute(pc, e, Variant::c);
      pd = substitute(pd, e, Variant::d);
    }
    auto vertices = [](const Patch& p) {
      std::multiset<CycloInt> out;
      for (const auto& t : p.tiles) {
        const auto corners = t.corners(p.n);
        for (int k = 0; k < 4; ++k) out.insert(corners[k].z);
      }
      return out;
    };
    const CycloInt rot = unit_root(5, 2 * (5 + s));
    const CycloInt offset = pd.scale - pd.scale * rot;
    std::multiset<CycloInt> reflected;
    for (const auto& z : vertices(pd)) reflected.insert(offset + rot * z.conjugate());
    if (!(vertices(pc) == reflected)) c.fail("mirror mismatch at s=" + std::to_string(s));
  }
  return c;
}

}  // namespace

int main() {
  const auto corpus = random_corpus(200);

  struct Entry {
    int id;
    const char* name;
    std::function<Check()> run;
    double budget_seconds;  // 0 = no explicit budget
  };
  const std::vector<Entry> entries = {
      {1, "single-dent PV table reproduced exactly", [] { return criterion_table1(); }, 5.0},
      {2, "areal identity exact on 200 random sequences",
       [&] { return criterion_area_identity(corpus); }, 0.0},
      {3, "tile matrix equals the explicit square with squared spectrum",
       [&] { return criterion_matrix_square(corpus); }, 0.0},
      {4, "known tiling counts and Penrose reductions", [] { return criterion_known_tilings(); },
       0.0},
      {5, "signed tile areas conserved exactly", [] { return criterion_geometric_area(); }, 0.0},
      {6, "single positive layer at seeded probes", [] { return criterion_coverage(); }, 10.0},
      {7, "binary-tiling substitutions stay positive", [] { return criterion_lb_positivity(); },
       0.0},
      {8, "even and odd tile indices separate", [] { return criterion_parity_separation(); }, 0.0},
      {9, "doubling edge reaches 2^8 segments at chord L^8", [] { return criterion_koch(); }, 0.0},
      {10, "variant c mirrors variant d exactly", [] { return criterion_mirror(); }, 0.0},
  };

  int failures = 0;
  for (const auto& entry : entries) {
    const auto start = std::chrono::steady_clock::now();
    Check result = entry.run();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (entry.budget_seconds > 0 && seconds > entry.budget_seconds)
      result.fail("exceeded time budget of " + std::to_string(entry.budget_seconds) + "s");
    std::printf("[%s] %2d. %s (%.2fs)%s%s\n", result.ok ? "PASS" : "FAIL", entry.id, entry.name,
                seconds, result.detail.empty() ? "" : " -- ", result.detail.c_str());
    if (!result.ok) ++failures;
  }
  return failures;
}
