// liecomb -- SU(3) tensor-product combinatorics from the command line.
//
// Subcommands: decompose, census, polygon, honeycomb, pictograph, map,
// oracle, verify.  All weight arguments are comma-separated non-negative
// integers ("--lambda 21,6"); --format selects json, text or (where it
// makes sense) svg.  Exit codes: 0 success, 1 domain error, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>

#include "liecomb/conjmap.hpp"
#include "liecomb/honeycomb.hpp"
#include "liecomb/json_io.hpp"
#include "liecomb/multiplicity.hpp"
#include "liecomb/oracle.hpp"
#include "liecomb/parallel.hpp"
#include "liecomb/pictograph.hpp"
#include "liecomb/polygon.hpp"
#include "liecomb/render.hpp"

using namespace liecomb;
using liecomb::json::ojson;

namespace {

struct Options {
  std::string lambda, mu, nu;
  std::string format = "text";
  std::string output;
  std::string kind = "oblade";
  std::string point;
  int alpha = INT32_MIN;
  bool all = false;
  bool hive = false;
  bool conjugate_mu = false;
  bool with_layers = false;
  bool compare = false;
  int rank = 3;
  int theorem = 0;  // 0 = both
  int max_label = -1;
  int max_level = -1;
  int level_min = -1, level_max = -1;
  int samples = 0;
  unsigned seed = 1;
};

void emit(const Options& o, const std::string& text_out, const ojson& json_out) {
  const std::string payload = (o.format == "json") ? json_out.dump(2) + "\n" : text_out;
  if (!o.output.empty()) {
    std::ofstream f(o.output, std::ios::binary);
    if (!f) throw Error("cannot open output file '" + o.output + "'");
    f << payload;
  } else {
    std::cout << payload;
  }
}

void emit_svg(const Options& o, const std::string& svg) {
  if (o.output.empty())
    throw CLI::ValidationError("--format svg requires --output (no binary spew to the terminal)");
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw Error("cannot open output file '" + o.output + "'");
  f << svg;
}

std::string table_text(const DecompositionTable& t) {
  std::ostringstream os;
  os << t.lambda.str() << " (x) " << t.mu.str() << ": " << t.entries.size()
     << " distinct irreps, total multiplicity " << t.total_multiplicity() << "\n";
  std::map<int, std::vector<std::string>> by_mult;
  for (const auto& e : t.entries) by_mult[e.mult].push_back(e.nu.str());
  for (const auto& [m, list] : by_mult) {
    os << "  mult " << m << " (" << list.size() << "):";
    for (const auto& s : list) os << ' ' << s;
    os << '\n';
  }
  return os.str();
}

int run_decompose(const Options& o) {
  const Weight l = json::parse_weight(o.lambda), m = json::parse_weight(o.mu);
  const DecompositionTable t = (l.rank() == 3) ? decompose(l, m) : oracle::decompose_oracle(l, m);
  emit(o, table_text(t), json::to_json(t));
  return 0;
}

int run_census(const Options& o) {
  const Weight l = json::parse_weight(o.lambda), m = json::parse_weight(o.mu);
  const MultiplicityCensus c = census(l, m);
  std::ostringstream os;
  os << l.str() << " (x) " << m.str() << ": M=" << c.distinct << ", mult_max=" << c.mult_max
     << ", total=" << c.total << "\n";
  for (const auto& [s, n] : c.by_mult) os << "  sigma(" << s << ") = " << n << "\n";
  emit(o, os.str(), json::to_json(c));
  return 0;
}

int run_polygon(const Options& o) {
  const Weight l = json::parse_weight(o.lambda);
  Weight m = json::parse_weight(o.mu);
  if (o.conjugate_mu) m = m.conjugate();
  const polygon::LayerDiagram d =
      o.with_layers ? polygon::layers(l, m)
                    : polygon::LayerDiagram{l, m, {polygon::outer_polygon(l, m)}};
  if (o.format == "svg") {
    polygon::SvgOptions opt;
    opt.overlay_conjugate = false;
    emit_svg(o, polygon::render_svg(d, opt));
    return 0;
  }
  std::ostringstream os;
  os << "tensor polygon(s) of " << l.str() << " (x) " << m.str() << "  (H=" << polygon::hhw(l, m).str()
     << ", h=" << polygon::lhw(l, m).str() << ")\n";
  for (const auto& p : d.layers) {
    os << "  layer " << p.layer << ":";
    for (const auto& v : p.vertices) os << " (" << v[0] << "," << v[1] << ")";
    os << "\n";
  }
  emit(o, os.str(), json::to_json(d));
  return 0;
}

int run_honeycomb(const Options& o) {
  const Weight l = json::parse_weight(o.lambda), m = json::parse_weight(o.mu),
               n = json::parse_weight(o.nu);
  const auto iv = honeycomb::alpha_bounds(l, m, n);
  if (iv.empty())
    throw NotInProduct(n.str() + " does not occur in " + l.str() + " (x) " + m.str());
  std::vector<int> alphas;
  if (o.all)
    for (int a = iv.lo; a <= iv.hi; ++a) alphas.push_back(a);
  else
    alphas.push_back(o.alpha == INT32_MIN ? iv.lo : o.alpha);

  std::ostringstream os;
  ojson out = ojson::array();
  os << "alpha in [" << iv.lo << ", " << iv.hi << "], multiplicity " << iv.count() << "\n\n";
  for (int a : alphas) {
    const honeycomb::Honeycomb h = honeycomb::build(l, m, n, a);
    os << render::honeycomb_text(h) << "\n";
    ojson j = json::to_json(h);
    if (o.hive) {
      const honeycomb::Hive hv = to_hive(h);
      os << render::hive_text(hv) << "\n";
      j["hive"] = json::to_json(hv);
    }
    out.push_back(std::move(j));
  }
  emit(o, os.str(), out.size() == 1 ? out[0] : out);
  return 0;
}

pictograph::Kind parse_kind(const std::string& k) {
  if (k == "bz") return pictograph::Kind::bz_triangle;
  if (k == "oblade") return pictograph::Kind::oblade;
  if (k == "su3honey") return pictograph::Kind::su3_honeycomb;
  throw CLI::ValidationError("--kind must be bz, oblade or su3honey");
}

int run_pictograph(const Options& o) {
  const Weight l = json::parse_weight(o.lambda), m = json::parse_weight(o.mu),
               n = json::parse_weight(o.nu);
  const auto fiber = pictograph::enumerate(l, m, n, parse_kind(o.kind));
  if (fiber.empty())
    throw NotInProduct(n.str() + " does not occur in " + l.str() + " (x) " + m.str());
  std::vector<pictograph::Pictograph> chosen;
  if (o.all)
    chosen = fiber;
  else {
    const int idx = (o.alpha == INT32_MIN) ? 0 : o.alpha;
    if (idx < 0 || idx >= static_cast<int>(fiber.size()))
      throw OutOfRange("--index must be in [0, " + std::to_string(fiber.size() - 1) + "]");
    chosen.push_back(fiber[static_cast<size_t>(idx)]);
  }
  if (o.format == "svg") {
    std::string all_svg;
    for (const auto& p : chosen) all_svg += render::pictograph_svg(p);
    emit_svg(o, all_svg);
    return 0;
  }
  std::ostringstream os;
  ojson out = ojson::array();
  os << fiber.size() << " pictograph(s) for " << l.str() << " (x) " << m.str() << " -> " << n.str()
     << "\n\n";
  for (const auto& p : chosen) {
    os << render::pictograph_text(p) << "\n";
    out.push_back(json::to_json(p));
  }
  emit(o, os.str(), out.size() == 1 ? out[0] : out);
  return 0;
}

int run_map(const Options& o) {
  const Weight l = json::parse_weight(o.lambda), m = json::parse_weight(o.mu);
  if (!o.point.empty()) {
    const Weight triple = json::parse_weight(o.point);  // n1,n2,alpha
    if (triple.size() != 3) throw Error("--point expects nu1,nu2,alpha");
    const auto p = conjmap::map_point(l, m, Weight::su3(triple[0], triple[1]), triple[2]);
    std::ostringstream os;
    os << "(" << p.nu.str() << ", alpha=" << p.alpha << ", m=" << p.index << ")  ->  ("
       << p.nu_out.str() << ", alpha=" << p.alpha_out << ", m=" << p.index_out << ")  ["
       << (p.regime == conjmap::Regime::reflection ? "reflection" : "translation") << ", case "
       << p.case_tag << ", " << p.pipeline << "]\n";
    emit(o, os.str(), json::to_json(p));
    return 0;
  }
  const auto rep = conjmap::verify_bijection(l, m);
  std::ostringstream os;
  os << "bijection " << l.str() << " (x) " << m.str() << "  ->  " << l.str() << " (x) "
     << m.conjugate().str() << ": " << (rep.passed() ? "PASS" : "FAIL") << "\n"
     << "  points " << rep.total_points << " (reflections " << rep.reflections
     << ", translations " << rep.translations << "), case " << rep.case_tag << ", pipeline "
     << rep.pipeline << "\n";
  for (const auto& f : rep.failures) os << "  ! " << f << "\n";
  emit(o, os.str(), json::to_json(rep));
  return 0;
}

int run_oracle(const Options& o) {
  const Weight l = json::parse_weight(o.lambda), m = json::parse_weight(o.mu);
  const DecompositionTable t = oracle::decompose_oracle(l, m);
  ojson j = json::to_json(t);
  std::ostringstream os;
  os << table_text(t);
  if (o.compare) {
    if (l.rank() != 3) throw Error("--compare requires rank 3 (closed forms are SU(3)-only)");
    const DecompositionTable c = decompose(l, m);
    const bool equal = (c == t);
    j["closed_form_agrees"] = equal;
    os << "closed-form comparison: " << (equal ? "identical" : "DIFFERS") << "\n";
    if (!equal) {
      for (const auto& e : t.entries)
        if (c.mult_of(e.nu) != e.mult)
          os << "  oracle " << e.nu.str() << ":" << e.mult << " vs closed " << c.mult_of(e.nu)
             << "\n";
      for (const auto& e : c.entries)
        if (t.mult_of(e.nu) != e.mult)
          os << "  closed " << e.nu.str() << ":" << e.mult << " vs oracle " << t.mult_of(e.nu)
             << "\n";
    }
  }
  emit(o, os.str(), j);
  return 0;
}

// ---- verify ----------------------------------------------------------

int verify_pair(const Options& o) {
  const Weight l = json::parse_weight(o.lambda), m = json::parse_weight(o.mu);
  std::ostringstream os;
  ojson j;
  if (l.rank() == 3 && m.rank() == 3) {
    if (o.theorem == 0 || o.theorem == 1) {
      const auto r = verify_theorem1(l, m);
      os << "theorem 1 " << (r.equal ? "PASS" : "FAIL") << ": totals " << r.total << " / "
         << r.total_conj << ", squares " << r.squares << " / " << r.squares_conj << "\n";
      j["theorem1"] = json::to_json(r);
    }
    if (o.theorem == 0 || o.theorem == 2) {
      const auto r = verify_theorem2(l, m);
      std::map<int, int> hist, hist_c;
      for (int v : r.multiset) ++hist[v];
      for (int v : r.multiset_conj) ++hist_c[v];
      os << "theorem 2 " << (r.equal ? "PASS" : "FAIL") << ": sorted multisets";
      for (const auto& [s, n] : hist) os << " " << n << "x" << s;
      os << " vs";
      for (const auto& [s, n] : hist_c) os << " " << n << "x" << s;
      os << "\n";
      j["theorem2"] = json::to_json(r);
    }
  } else {
    const auto a = oracle::decompose_oracle(l, m);
    const auto b = oracle::decompose_oracle(l, m.conjugate());
    if (o.theorem == 0 || o.theorem == 1) {
      const bool eq =
          a.total_multiplicity() == b.total_multiplicity() && a.sum_of_squares() == b.sum_of_squares();
      os << "theorem 1 " << (eq ? "PASS" : "FAIL") << ": totals " << a.total_multiplicity()
         << " / " << b.total_multiplicity() << "\n";
      j["theorem1"] = ojson{{"total", a.total_multiplicity()},
                            {"total_conj", b.total_multiplicity()},
                            {"equal", eq}};
    }
    if (o.theorem == 0 || o.theorem == 2) {
      const bool eq = a.multiset() == b.multiset();
      os << "theorem 2 " << (eq ? "PASS (multisets equal)" : "FAIL (multisets differ)") << "\n";
      if (!eq) {
        const auto ha = a.histogram(), hb = b.histogram();
        os << "  " << l.str() << " (x) " << m.str() << ":";
        for (const auto& [s, n] : ha) os << " " << n << "x" << s;
        os << "\n  " << l.str() << " (x) " << m.conjugate().str() << ":";
        for (const auto& [s, n] : hb) os << " " << n << "x" << s;
        os << "\n";
      }
      j["theorem2"] = ojson{{"multiset", a.multiset()}, {"multiset_conj", b.multiset()}, {"equal", eq}};
    }
  }
  emit(o, os.str(), j);
  return 0;
}

int verify_sweep_su3(const Options& o) {
  const int n = o.max_label + 1;
  const long long pairs = static_cast<long long>(n) * n * n * n;
  std::vector<std::string> failures(static_cast<size_t>(pairs));
  parallel_for(static_cast<size_t>(pairs), [&](size_t idx) {
    const int l1 = static_cast<int>(idx) % n;
    const int l2 = static_cast<int>(idx / static_cast<size_t>(n)) % n;
    const int m1 = static_cast<int>(idx / (static_cast<size_t>(n) * n)) % n;
    const int m2 = static_cast<int>(idx / (static_cast<size_t>(n) * n * n)) % n;
    const Weight l = Weight::su3(l1, l2), m = Weight::su3(m1, m2);
    if (o.theorem == 0 || o.theorem == 1) {
      const auto r = verify_theorem1(l, m);
      if (!r.equal) failures[idx] = "theorem 1 fails at " + l.str() + " (x) " + m.str();
    }
    if (failures[idx].empty() && (o.theorem == 0 || o.theorem == 2)) {
      const auto r = verify_theorem2(l, m);
      if (!r.equal) failures[idx] = "theorem 2 fails at " + l.str() + " (x) " + m.str();
    }
  });
  std::vector<std::string> bad;
  for (auto& f : failures)
    if (!f.empty()) bad.push_back(std::move(f));
  std::ostringstream os;
  os << "SU(3) sweep over labels <= " << o.max_label << ": " << pairs << " pairs, "
     << (bad.empty() ? "all PASS" : "FAILURES") << "\n";
  for (size_t i = 0; i < bad.size() && i < 20; ++i) os << "  ! " << bad[i] << "\n";
  emit(o, os.str(),
       ojson{{"rank", 3}, {"max_label", o.max_label}, {"pairs", pairs}, {"failures", bad}});
  return 0;
}

std::vector<Weight> su4_weights_by_level(int lo, int hi) {
  std::vector<Weight> out;
  for (int a = 0; a <= hi; ++a)
    for (int b = 0; a + b <= hi; ++b)
      for (int c = 0; a + b + c <= hi; ++c)
        if (a + b + c >= lo) out.push_back(Weight::su4(a, b, c));
  return out;
}

int verify_sweep_su4(const Options& o) {
  std::vector<std::pair<Weight, Weight>> pairs;
  std::string mode;
  if (o.samples > 0) {
    const int lo = o.level_min < 0 ? 6 : o.level_min;
    const int hi = o.level_max < 0 ? 7 : o.level_max;
    const auto ws = su4_weights_by_level(lo, hi);
    std::mt19937 rng(o.seed);
    std::uniform_int_distribution<size_t> pick(0, ws.size() - 1);
    for (int i = 0; i < o.samples; ++i) pairs.emplace_back(ws[pick(rng)], ws[pick(rng)]);
    mode = "sampled levels [" + std::to_string(lo) + ", " + std::to_string(hi) + "], " +
           std::to_string(o.samples) + " pairs, seed " + std::to_string(o.seed);
  } else {
    const int hi = o.max_level < 0 ? 5 : o.max_level;
    const auto ws = su4_weights_by_level(0, hi);
    for (const auto& a : ws)
      for (const auto& b : ws) pairs.emplace_back(a, b);
    mode = "exhaustive levels <= " + std::to_string(hi);
  }
  std::vector<std::string> failures(pairs.size());
  parallel_for(pairs.size(), [&](size_t i) {
    const auto& [l, m] = pairs[i];
    const auto a = oracle::decompose_oracle(l, m);
    const auto b = oracle::decompose_oracle(l, m.conjugate());
    if ((o.theorem == 0 || o.theorem == 1) &&
        (a.total_multiplicity() != b.total_multiplicity() ||
         a.sum_of_squares() != b.sum_of_squares()))
      failures[i] = "theorem 1 fails at " + l.str() + " (x) " + m.str();
    else if ((o.theorem == 0 || o.theorem == 2) && a.multiset() != b.multiset())
      failures[i] = "theorem 2 fails at " + l.str() + " (x) " + m.str();
  });
  std::vector<std::string> bad;
  for (auto& f : failures)
    if (!f.empty()) bad.push_back(std::move(f));
  std::ostringstream os;
  os << "SU(4) sweep (" << mode << "): " << pairs.size() << " pairs, "
     << (bad.empty() ? "all PASS" : std::to_string(bad.size()) + " FAILURES") << "\n";
  for (size_t i = 0; i < bad.size() && i < 20; ++i) os << "  ! " << bad[i] << "\n";
  emit(o, os.str(),
       ojson{{"rank", 4},
             {"mode", mode},
             {"pairs", pairs.size()},
             {"failure_count", bad.size()},
             {"failures", bad}});
  return 0;
}

int run_verify(const Options& o) {
  if (!o.lambda.empty() && !o.mu.empty()) return verify_pair(o);
  if (o.rank == 4) return verify_sweep_su4(o);
  if (o.max_label < 0)
    throw CLI::ValidationError("verify needs --lambda/--mu, or --max-label for an SU(3) sweep, "
                               "or --rank 4 for an SU(4) sweep");
  return verify_sweep_su3(o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"liecomb: SU(3) tensor multiplicities, pictographs and conjugation maps"};
  app.require_subcommand(1);
  Options o;

  const auto add_weights = [&](CLI::App* cmd, bool need_nu) {
    cmd->add_option("--lambda", o.lambda, "first weight, e.g. 21,6")->required();
    cmd->add_option("--mu", o.mu, "second weight")->required();
    if (need_nu) cmd->add_option("--nu", o.nu, "target weight")->required();
  };
  const auto add_io = [&](CLI::App* cmd, const std::string& formats) {
    cmd->add_option("--format", o.format, "output format: " + formats)->default_val("text");
    cmd->add_option("--output,-o", o.output, "write output to a file");
  };

  auto* cmd_decompose = app.add_subcommand("decompose", "decompose lambda (x) mu");
  add_weights(cmd_decompose, false);
  add_io(cmd_decompose, "text|json");

  auto* cmd_census = app.add_subcommand("census", "multiplicity census sigma(s), M, totals");
  add_weights(cmd_census, false);
  add_io(cmd_census, "text|json");

  auto* cmd_polygon = app.add_subcommand("polygon", "tensor polygon / matriochka layers");
  add_weights(cmd_polygon, false);
  cmd_polygon->add_flag("--conjugate-mu", o.conjugate_mu, "use conj(mu) instead of mu");
  cmd_polygon->add_flag("--layers", o.with_layers, "all multiplicity layers, not just the hull");
  add_io(cmd_polygon, "text|json|svg");

  auto* cmd_honeycomb = app.add_subcommand("honeycomb", "KT-honeycombs and hives");
  add_weights(cmd_honeycomb, true);
  cmd_honeycomb->add_option("--alpha", o.alpha, "hexagon parameter (default: alpha_min)");
  cmd_honeycomb->add_flag("--all", o.all, "every admissible alpha");
  cmd_honeycomb->add_flag("--hive", o.hive, "also print the dual hive");
  add_io(cmd_honeycomb, "text|json");

  auto* cmd_pict = app.add_subcommand("pictograph", "BZ-triangles, O-blades, SU(3)-honeycombs");
  add_weights(cmd_pict, true);
  cmd_pict->add_option("--kind", o.kind, "bz|oblade|su3honey")->default_val("oblade");
  cmd_pict->add_option("--index", o.alpha, "fiber position, 0-based (default 0)");
  cmd_pict->add_flag("--all", o.all, "whole fiber");
  add_io(cmd_pict, "text|json|svg");

  auto* cmd_map = app.add_subcommand("map", "conjugation map (nu,alpha) -> (nu',alpha')");
  add_weights(cmd_map, false);
  cmd_map->add_option("--point", o.point, "single point nu1,nu2,alpha");
  cmd_map->add_flag("--all", o.all, "map every point and verify bijectivity");
  add_io(cmd_map, "text|json");

  auto* cmd_oracle = app.add_subcommand("oracle", "brute-force decomposition (rank 3 or 4)");
  add_weights(cmd_oracle, false);
  cmd_oracle->add_flag("--compare", o.compare, "diff against the closed-form module (rank 3)");
  add_io(cmd_oracle, "text|json");

  auto* cmd_verify = app.add_subcommand("verify", "conjugation theorems, single pair or sweeps");
  cmd_verify->add_option("--lambda", o.lambda, "first weight (single-pair mode)");
  cmd_verify->add_option("--mu", o.mu, "second weight (single-pair mode)");
  cmd_verify->add_option("--theorem", o.theorem, "1 or 2 (default: both)")
      ->check(CLI::IsMember({0, 1, 2}));
  cmd_verify->add_option("--max-label", o.max_label, "SU(3) sweep over labels <= N");
  cmd_verify->add_option("--rank", o.rank, "3 (default) or 4")->check(CLI::IsMember({3, 4}));
  cmd_verify->add_option("--max-level", o.max_level, "SU(4) sweep: exhaustive over levels <= N");
  cmd_verify->add_option("--level-min", o.level_min, "SU(4) sampling: lowest level");
  cmd_verify->add_option("--level-max", o.level_max, "SU(4) sampling: highest level");
  cmd_verify->add_option("--samples", o.samples, "SU(4) sampling: number of random pairs");
  cmd_verify->add_option("--seed", o.seed, "RNG seed for sampled sweeps");
  add_io(cmd_verify, "text|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(cmd_decompose)) return run_decompose(o);
    if (app.got_subcommand(cmd_census)) return run_census(o);
    if (app.got_subcommand(cmd_polygon)) return run_polygon(o);
    if (app.got_subcommand(cmd_honeycomb)) return run_honeycomb(o);
    if (app.got_subcommand(cmd_pict)) return run_pictograph(o);
    if (app.got_subcommand(cmd_map)) return run_map(o);
    if (app.got_subcommand(cmd_oracle)) return run_oracle(o);
    if (app.got_subcommand(cmd_verify)) return run_verify(o);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    if (o.format == "json")
      std::cerr << ojson{{"error", e.what()}}.dump() << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
