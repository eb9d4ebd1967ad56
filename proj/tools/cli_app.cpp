#include "cli_app.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rhombforge/geometry.hpp"
#include "rhombforge/render.hpp"
#include "rhombforge/spectra.hpp"

namespace rhombforge {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitAssertion = 3;

std::map<std::string, std::pair<unsigned, std::vector<int>>> load_presets_file(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open presets file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  const auto j = nlohmann::json::parse(ss.str());
  std::map<std::string, std::pair<unsigned, std::vector<int>>> out;
  for (const auto& [name, def] : j.items())
    out[name] = {def.at("n").get<unsigned>(), def.at("ks2").get<std::vector<int>>()};
  return out;
}

// Accepts a preset name, inline JSON {"n":..,"ks2":[..]}, or a parenthesized
// list of angle fractions like "(1,-1)" or "(1/2,-1/2)" combined with --n.
EdgeSequence resolve_edge(const std::string& spec, std::optional<unsigned> n_override,
                          const std::string& presets_path, OverhangPolicy policy) {
  if (!spec.empty() && spec.front() == '{') {
    EdgeSequence e = EdgeSequence::from_json(spec, policy);
    if (n_override && *n_override != e.n())
      return EdgeSequence::validate(*n_override, e.ks2(), policy);
    return e;
  }
  if (!spec.empty() && spec.front() == '(') {
    if (!n_override) throw std::invalid_argument("inline edge lists require --n");
    std::string body = spec.substr(1, spec.size() - (spec.back() == ')' ? 2 : 1));
    std::vector<int> ks2;
    std::stringstream ss(body);
    std::string token;
    while (std::getline(ss, token, ',')) {
      token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
      if (token.empty()) continue;
      if (token.find('/') != std::string::npos) {
        const auto slash = token.find('/');
        const long num = std::stol(token.substr(0, slash));
        const long den = std::stol(token.substr(slash + 1));
        if (den != 1 && den != 2)
          throw std::invalid_argument("edge fractions must have denominator 1 or 2");
        ks2.push_back(static_cast<int>(den == 1 ? 2 * num : num));
      } else if (token.find('.') != std::string::npos) {
        const double v = std::stod(token);
        const double doubled = 2.0 * v;
        if (std::fabs(doubled - std::round(doubled)) > 1e-9)
          throw std::invalid_argument("edge angles must be integer or half-integer");
        ks2.push_back(static_cast<int>(std::lround(doubled)));
      } else {
        ks2.push_back(2 * static_cast<int>(std::stol(token)));
      }
    }
    return EdgeSequence::validate(*n_override, std::move(ks2), policy);
  }
  if (!presets_path.empty()) {
    const auto custom = load_presets_file(presets_path);
    auto it = custom.find(spec);
    if (it != custom.end())
      return EdgeSequence::validate(n_override.value_or(it->second.first), it->second.second,
                                    policy);
  }
  if (auto e = preset_edge(spec, n_override)) return *e;
  throw std::invalid_argument("unknown edge preset '" + spec + "'");
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

std::string describe_multiset(const AngleMultiset& ms) {
  std::string out;
  for (const auto& [h, count] : ms.counts) {
    if (!out.empty()) out += ", ";
    if (h % 2 == 0) out += "m[" + std::to_string(h / 2) + "]=" + std::to_string(count);
    else out += "m[" + std::to_string(h) + "/2]=" + std::to_string(count);
  }
  return out.empty() ? "(empty)" : out;
}

int cmd_validate(const std::string& edge_spec, std::optional<unsigned> n_override,
                 const std::string& presets, bool permissive, const std::string& format) {
  EdgeSequence e = resolve_edge(edge_spec, n_override, presets,
                                permissive ? OverhangPolicy::permissive : OverhangPolicy::strict);
  const auto ms = e.multiset();
  const CycloInt L = e.inflation_factor();
  const bool loops = has_loops(e);
  if (format == "json") {
    nlohmann::json j;
    j["valid"] = true;
    j["n"] = e.n();
    j["N"] = e.size();
    j["parity"] = e.parity() == Parity::integer ? "integer" : "half-integer";
    nlohmann::json mj;
    for (const auto& [h, count] : ms.counts) mj[std::to_string(h)] = count;
    j["multiset_ks2"] = mj;
    j["L_float"] = L.real_value();
    j["L_exact"] = L.to_string();
    j["loops"] = loops;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "valid: yes\n";
    std::cout << "n: " << e.n() << "  N: " << e.size() << "  parity: "
              << (e.parity() == Parity::integer ? "integer" : "half-integer") << "\n";
    std::cout << "multiset: " << describe_multiset(ms) << "\n";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", L.real_value());
    std::cout << "L: " << buf << "  (exact: " << L.to_string() << ")\n";
    std::cout << "loops: " << (loops ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int cmd_matrix(const std::string& edge_spec, std::optional<unsigned> n_override,
               const std::string& presets, const std::string& format, const std::string& out_path) {
  EdgeSequence e = resolve_edge(edge_spec, n_override, presets, OverhangPolicy::strict);
  const auto ms = e.multiset();
  const CirculantMatrix M = edge_matrix(ms);
  const CirculantMatrix S = tile_matrix(M);
  const auto counts = tile_counts(ms);
  const auto eig = M.eigenvalues();

  // Verify the squared relation against an explicit dense product.
  bool verified = true;
  const auto dm = M.dense();
  const unsigned m = M.size();
  for (unsigned i = 0; i < m && verified; ++i)
    for (unsigned j = 0; j < m && verified; ++j) {
      long long acc = 0;
      for (unsigned k = 0; k < m; ++k) acc += dm[i][k] * dm[k][j];
      if (acc != S.entry(i, j)) verified = false;
    }

  std::string text;
  if (format == "csv") {
    std::string csv = "kind,values\n";
    auto row_csv = [](const std::vector<long long>& row) {
      std::string s;
      for (size_t i = 0; i < row.size(); ++i) {
        if (i) s += ";";
        s += std::to_string(row[i]);
      }
      return s;
    };
    csv += "M," + row_csv(M.first_row()) + "\n";
    csv += "S," + row_csv(S.first_row()) + "\n";
    csv += "tile_counts," + row_csv(counts.counts) + "\n";
    char buf[96];
    for (size_t j = 0; j < eig.size(); ++j) {
      const auto v = eig[j].complex_value();
      std::snprintf(buf, sizeof(buf), "eig_%zu,%.12g;%.12g\n", j, v.real(), v.imag());
      csv += buf;
    }
    text = csv;
  } else {
    nlohmann::json j;
    j["n"] = counts.n;
    j["matrix_size"] = M.size();
    j["M"] = M.first_row();
    j["S"] = S.first_row();
    j["S_equals_M2"] = verified;
    j["tile_counts"] = counts.counts;
    j["reduced_signed"] = reduce_prototile_set(S.first_row(), ReductionMode::signed_tiles);
    j["reduced_congruent"] = reduce_prototile_set(S.first_row(), ReductionMode::congruent);
    nlohmann::json ej = nlohmann::json::array();
    for (size_t jj = 0; jj < eig.size(); ++jj) {
      const auto v = eig[jj].complex_value();
      ej.push_back({{"j", jj}, {"re", v.real()}, {"im", v.imag()}});
    }
    j["eigenvalues"] = std::move(ej);
    text = j.dump(2) + "\n";
  }
  if (out_path.empty()) std::cout << text;
  else write_file(out_path, text);
  return verified ? kExitOk : kExitAssertion;
}

int cmd_pvscan(long long m0_max, unsigned n_max, const std::string& out_path) {
  const auto rows = pv_scan(m0_max, n_max);
  const std::string csv = pv_scan_csv(rows);
  if (out_path.empty()) std::cout << csv;
  else write_file(out_path, csv);
  return kExitOk;
}

int cmd_build(const std::string& edge_spec, std::optional<unsigned> n_override,
              const std::string& presets, int s, unsigned generations,
              const std::string& variant_str, unsigned long long seed, const std::string& out_prefix,
              const std::string& format, bool assert_coverage, int probes,
              const std::string& style_path, bool annihilate) {
  EdgeSequence e = resolve_edge(edge_spec, n_override, presets, OverhangPolicy::strict);
  std::vector<Variant> history;
  if (variant_str.size() == 1) {
    history.assign(generations, variant_from_char(variant_str[0]));
  } else {
    if (variant_str.size() != generations)
      throw std::invalid_argument("variant string must have one letter per generation");
    for (char c : variant_str) history.push_back(variant_from_char(c));
  }

  Patch patch = prototile_patch(e.n(), s);
  for (Variant v : history) {
    patch = substitute(patch, e, v);
    if (annihilate) patch = annihilated(patch);
  }

  // Exact area identity: total signed area against L^2g * sin(s*pi/n).
  const CycloInt expected =
      patch.scale * patch.scale * two_i_sin(patch.n, 2LL * patch.start_type);
  const bool area_exact = patch.signed_area_two_i() == expected;

  RenderStyle style;
  if (!style_path.empty()) {
    std::ifstream in(style_path);
    if (!in) throw std::invalid_argument("cannot open style file " + style_path);
    std::stringstream ss;
    ss << in.rdbuf();
    style = RenderStyle::from_json(ss.str());
  }

  if (format == "json" || format == "all") write_file(out_prefix + ".json", patch.to_json());
  if (format == "svg" || format == "all") write_file(out_prefix + ".svg", render_patch(patch, style));

  char buf[128];
  std::snprintf(buf, sizeof(buf), "tiles=%zu area=%.12g exact_area_identity=%s",
                patch.tiles.size(), patch.signed_area(), area_exact ? "yes" : "no");
  std::cout << buf << "\n";

  bool coverage_clean = true;
  if (probes > 0) {
    const auto sample = sample_coverage(patch, probes, std::max(1, probes / 5), seed);
    coverage_clean = sample.clean();
    std::snprintf(buf, sizeof(buf),
                  "coverage: interior %d/%d ones (range %d..%d), exterior %d/%d zeros",
                  sample.interior_ones, sample.interior_tested, sample.min_interior,
                  sample.max_interior, sample.exterior_zeros, sample.exterior_tested);
    std::cout << buf << "\n";
  }
  if (assert_coverage && (!coverage_clean || !area_exact)) return kExitAssertion;
  return kExitOk;
}

int cmd_koch(unsigned n, unsigned generations, const std::string& out_prefix) {
  EdgeSequence e = EdgeSequence::validate(n, {2, -2});
  const unsigned last = std::max(1u, generations);
  for (unsigned g = 1; g <= last; ++g) {
    const EdgeSequence expanded = expand_edge(e, g, Variant::b);
    write_file(out_prefix + "_g" + std::to_string(g) + ".svg", render_edge(expanded));
  }
  std::cout << "wrote " << last << " edge image(s) with prefix " << out_prefix << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"rhombforge: exact substitution tilings from rhomb edge sequences"};
  app.require_subcommand(1);

  std::string edge_spec, presets_path, format = "text", out_path, variant = "a", style_path;
  std::optional<unsigned> n_override;
  bool permissive = false, assert_coverage = false, annihilate = false;
  int s = 1, probes = 0;
  unsigned generations = 1, n_koch = 5, n_max = 12;
  long long m0_max = 2;
  unsigned long long seed = 0;

  auto add_edge_opts = [&](CLI::App* cmd) {
    cmd->add_option("--edge", edge_spec, "preset name, inline (k1,k2,...) list, or JSON")
        ->required();
    cmd->add_option("--n", n_override, "symmetry order override");
    cmd->add_option("--presets", presets_path, "JSON file with extra named presets");
  };

  auto* validate = app.add_subcommand("validate", "validate an edge sequence and report L");
  add_edge_opts(validate);
  validate->add_flag("--permissive", permissive, "allow overhangs beyond pi/2");
  validate->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* matrix = app.add_subcommand("matrix", "edge/tile substitution matrices and eigenvalues");
  add_edge_opts(matrix);
  matrix->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
  matrix->add_option("--out", out_path, "output file (stdout when omitted)");

  auto* pvscan = app.add_subcommand("pvscan", "scan single-dent families for PV inflation");
  pvscan->add_option("--m0-max", m0_max, "largest m0 to scan");
  pvscan->add_option("--n-max", n_max, "largest symmetry order to scan");
  pvscan->add_option("--out", out_path, "output CSV file (stdout when omitted)");

  auto* build = app.add_subcommand("build", "grow a patch and emit JSON plus SVG");
  add_edge_opts(build);
  build->add_option("--s", s, "starting tile index")->required();
  build->add_option("--generations", generations, "number of substitution steps");
  build->add_option("--variant", variant, "a|b|c|d, or one letter per generation");
  build->add_option("--seed", seed, "probe sampling seed");
  build->add_option("--out", out_path, "output path prefix")->required();
  build->add_option("--format", format)->check(CLI::IsMember({"all", "json", "svg"}));
  build->add_flag("--assert-coverage", assert_coverage, "exit 3 unless coverage is clean");
  build->add_option("--probes", probes, "number of interior coverage probes");
  build->add_option("--style", style_path, "render style JSON sidecar");
  build->add_flag("--annihilate", annihilate,
                  "cancel coincident opposite-sign tile pairs each generation");

  auto* koch = app.add_subcommand("koch", "emit the doubling-edge image series");
  koch->add_option("--n", n_koch, "symmetry order");
  koch->add_option("--generations", generations, "number of generations to emit");
  koch->add_option("--out", out_path, "output path prefix")->required();

  try {
    app.parse(argc, const_cast<char**>(argv));
  } catch (const CLI::ParseError& err) {
    return app.exit(err);
  }

  try {
    if (validate->parsed())
      return cmd_validate(edge_spec, n_override, presets_path, permissive, format);
    if (matrix->parsed()) {
      if (format == "text") format = "json";
      return cmd_matrix(edge_spec, n_override, presets_path, format, out_path);
    }
    if (pvscan->parsed()) return cmd_pvscan(m0_max, n_max, out_path);
    if (build->parsed()) {
      if (format == "text") format = "all";
      return cmd_build(edge_spec, n_override, presets_path, s, generations, variant, seed,
                       out_path, format, assert_coverage, probes, style_path, annihilate);
    }
    if (koch->parsed()) return cmd_koch(n_koch, generations, out_path);
  } catch (const validation_error& err) {
    std::cerr << "error: " << to_string(err.fault()) << ": " << err.what() << "\n";
    return kExitInvalid;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: invalid_input: " << err.what() << "\n";
    return kExitInvalid;
  } catch (const std::domain_error& err) {
    std::cerr << "error: domain: " << err.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitAssertion;
  }
  return kExitOk;
}

}  // namespace rhombforge
