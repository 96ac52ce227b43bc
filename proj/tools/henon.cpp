// henon: command-line front end for the henon_core library.
//
// Exit codes: 0 success, 1 usage error, 2 input validation, 3 computation refused.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "henon/arch_green.hpp"
#include "henon/family.hpp"
#include "henon/heights.hpp"
#include "henon/map_io.hpp"
#include "henon/measure.hpp"
#include "henon/parallel.hpp"
#include "henon/periodic.hpp"
#include "henon/report.hpp"
#include "henon/sweep.hpp"
#include "henon/symbolic.hpp"

using namespace henon;
using Json = report::Json;

namespace {

constexpr int kUsage = 1;
constexpr int kInput = 2;
constexpr int kRefused = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  double tol = 1e-8;
  int n_max = 2048;
  std::vector<unsigned long> primes{101, 103};
  std::uint64_t seed = 1;
  std::string cache;
  std::string format = "json";
  unsigned threads = 0;
  std::string out;

  Json to_json() const {
    return Json{{"tol", tol},           {"n_max", n_max},       {"primes", primes}, {"seed", seed},
                {"cache", cache},       {"format", format},     {"threads", threads}};
  }
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty() || cfg.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw InputError("--out: cannot write '" + cfg.out + "'");
  f << text;
}

void emit(const RunConfig& cfg, Json doc) { emit(cfg, doc.dump(2) + "\n"); }

Json envelope(const std::string& command, const RunConfig& cfg, Json extra_config, Json inputs) {
  Json config = cfg.to_json();
  for (auto& [k, v] : extra_config.items()) config[k] = v;
  return Json{{"command", command}, {"config", std::move(config)}, {"inputs", std::move(inputs)}};
}

Json map_input(const std::string& path, const HenonMap& f) {
  return Json{{"path", path}, {"hash", f.hash()}, {"canonical", f.canonical_string()}};
}

Json family_input(const std::string& path, const HenonFamily& f) {
  return Json{{"path", path}, {"hash", f.hash()}, {"canonical", f.canonical_string()}};
}

bool looks_exact(const std::string& text) {
  return text.find('i') == std::string::npos && text.find('e') == std::string::npos &&
         text.find('E') == std::string::npos;
}

Direction parse_direction(const std::string& s) {
  if (s == "plus" || s == "+") return Direction::plus;
  if (s == "minus" || s == "-") return Direction::minus;
  throw InputError("--direction: expected plus or minus, got '" + s + "'");
}

// "x:c0,c1,...;y:c0,c1,..." with complex coefficients, lowest degree first.
PolyCurve parse_curve(const std::string& text) {
  PolyCurve c;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ';');) {
    auto colon = part.find(':');
    if (colon == std::string::npos) throw InputError("--curve: expected 'x:...;y:...'");
    std::string key = part.substr(0, colon);
    std::vector<Complex> coeffs;
    std::stringstream cs(part.substr(colon + 1));
    for (std::string v; std::getline(cs, v, ',');) coeffs.push_back(parse_complex(v));
    if (key == "x") c.x = coeffs;
    else if (key == "y") c.y = coeffs;
    else throw InputError("--curve: unknown coordinate '" + key + "'");
  }
  if (c.x.empty() || c.y.empty()) throw InputError("--curve: both x and y are required");
  return c;
}

// "lo:hi:n"
void parse_axis(const std::string& text, double& lo, double& hi, int& n) {
  if (std::sscanf(text.c_str(), "%lf:%lf:%d", &lo, &hi, &n) != 3 || n < 2 || !(hi > lo))
    throw InputError("grid axis: expected lo:hi:n with hi > lo and n >= 2, got '" + text + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Henon maps: Green functions, heights, periodic points, sweeps"};
  app.set_config("--config", "", "TOML config file; explicit flags take precedence");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--tol", cfg.tol, "Archimedean Green tolerance")->check(CLI::PositiveNumber);
  app.add_option("--n-max", cfg.n_max, "Iterate cap before an orbit is declared bounded")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for every random choice");
  app.add_option("--cache", cfg.cache, "Height cache file (JSON lines)")->envname("HENON_CACHE");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", cfg.threads, "Worker threads (0 = hardware)")->envname("HENON_THREADS");
  app.add_option("--out", cfg.out, "Output file (default stdout)");

  std::string map_path, map_f_path, map_g_path, fam_f_path, fam_g_path, point_text;

  auto* eval = app.add_subcommand("eval", "Evaluate f (or its inverse) at a point");
  bool eval_inverse = false;
  int eval_iterates = 1;
  eval->add_option("--map", map_path, "Map spec (JSON)")->required();
  eval->add_option("--point", point_text, "\"x,y\" (rationals, or complex for numeric evaluation)")->required();
  eval->add_flag("--inverse", eval_inverse, "Apply the inverse map");
  eval->add_option("--iterates", eval_iterates, "Number of applications")->check(CLI::NonNegativeNumber);

  auto* green_cmd = app.add_subcommand("green", "Archimedean Green functions G+ and G-");
  std::string direction = "both", grid_re, grid_im, x0_text = "0";
  green_cmd->add_option("--map", map_path)->required();
  green_cmd->add_option("--point", point_text, "Numeric point \"x,y\"");
  green_cmd->add_option("--direction", direction, "plus, minus or both");
  green_cmd->add_option("--grid-re", grid_re, "Grid in Re y: lo:hi:n (CSV output on the line x = x0)");
  green_cmd->add_option("--grid-im", grid_im, "Grid in Im y: lo:hi:n");
  green_cmd->add_option("--x0", x0_text, "Fixed x for the grid");

  auto* height_cmd = app.add_subcommand("height", "Canonical height of a rational point");
  height_cmd->add_option("--map", map_path)->required();
  height_cmd->add_option("--point", point_text, "\"num/den,num/den\"")->required();

  auto* periodic_cmd = app.add_subcommand("periodic", "Periodic points: mod p, lifted, numeric");
  int max_period = 1, starts = 64;
  long height_bound = 10000;
  bool numeric = false, resultant = false;
  std::vector<unsigned long> modp_primes;
  periodic_cmd->add_option("--map", map_path)->required();
  periodic_cmd->add_option("--max-period", max_period)->required()->check(CLI::PositiveNumber);
  periodic_cmd->add_option("--prime", modp_primes, "Also report the cycle structure mod p (repeatable)");
  periodic_cmd->add_option("--lift-primes", cfg.primes, "Primes used for Hensel lifting");
  periodic_cmd->add_option("--height-bound", height_bound, "Reconstruction height bound")->check(CLI::PositiveNumber);
  periodic_cmd->add_flag("--numeric", numeric, "Run multiple-shooting Newton for each period");
  periodic_cmd->add_option("--starts", starts, "Newton starts per period")->check(CLI::PositiveNumber);
  periodic_cmd->add_flag("--resultant", resultant, "Exact resultant counts for periods <= min(3, max-period)");

  auto* common_cmd = app.add_subcommand("common", "Common periodic points of two maps");
  common_cmd->add_option("--map-f", map_f_path)->required();
  common_cmd->add_option("--map-g", map_g_path)->required();
  common_cmd->add_option("--max-period", max_period)->required()->check(CLI::PositiveNumber);
  common_cmd->add_option("--starts", starts)->check(CLI::PositiveNumber);
  common_cmd->add_option("--lift-primes", cfg.primes);

  auto* sweep_cmd = app.add_subcommand("sweep", "Common periodic points across a parameter range");
  std::string params_text, csv_path;
  double eps = 1e-6;
  sweep_cmd->add_option("--family-f", fam_f_path)->required();
  sweep_cmd->add_option("--family-g", fam_g_path)->required();
  sweep_cmd->add_option("--params", params_text, "a:b:step or a comma list of rationals")->required();
  sweep_cmd->add_option("--max-period", max_period)->required()->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--eps", eps, "Small-height threshold")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--starts", starts)->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--csv", csv_path, "Also write the CSV summary here");

  auto* jac_cmd = app.add_subcommand("jacobian", "Jacobian and dynamical degree of a map or family");
  std::vector<std::string> samples;
  jac_cmd->add_option("--map", map_path);
  jac_cmd->add_option("--family", fam_f_path);
  jac_cmd->add_option("--samples", samples, "Parameters (complex) for the dissipativity verdict");

  auto* measure_cmd = app.add_subcommand("measure", "Saddle periodic sample of the equilibrium measure");
  int period = 5;
  measure_cmd->add_option("--map", map_path)->required();
  measure_cmd->add_option("--period", period)->required()->check(CLI::PositiveNumber);
  measure_cmd->add_option("--starts", starts)->check(CLI::PositiveNumber);

  auto* mcmp_cmd = app.add_subcommand("measure-compare", "Energy-distance discrepancy of two samples");
  std::string cloud_a, cloud_b;
  double threshold = 1e-2;
  mcmp_cmd->add_option("--a", cloud_a)->required();
  mcmp_cmd->add_option("--b", cloud_b)->required();
  mcmp_cmd->add_option("--threshold", threshold)->check(CLI::PositiveNumber);
  mcmp_cmd->add_option("--map-f", map_f_path, "Map of sample a (enables the symbolic follow-up)");
  mcmp_cmd->add_option("--map-g", map_g_path, "Map of sample b");

  auto* mass_cmd = app.add_subcommand("curve-mass", "Growth rate of G+ along a polynomial curve");
  std::string curve_text;
  double r_lo = 1e3, r_hi = 1e6;
  mass_cmd->add_option("--map", map_path)->required();
  mass_cmd->add_option("--curve", curve_text, "x:c0,c1,...;y:c0,c1,...")->required();
  mass_cmd->add_option("--r-lo", r_lo)->check(CLI::PositiveNumber);
  mass_cmd->add_option("--r-hi", r_hi)->check(CLI::PositiveNumber);

  auto* locus_cmd = app.add_subcommand("unit-locus", "Grid scan of {|Jac F| = 1} and {|Jac G| = 1}");
  std::string box_re = "-2:2", box_im = "-2:2";
  int resolution = 64;
  locus_cmd->add_option("--family-f", fam_f_path)->required();
  locus_cmd->add_option("--family-g", fam_g_path)->required();
  locus_cmd->add_option("--re", box_re, "lo:hi");
  locus_cmd->add_option("--im", box_im, "lo:hi");
  locus_cmd->add_option("--resolution", resolution)->check(CLI::Range(16, 4096));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kUsage;
  }

  try {
    GreenOptions gopts;
    gopts.max_iterates = cfg.n_max;
    HeightOptions hopts;
    hopts.green = gopts;

    if (eval->parsed()) {
      HenonMap f = load_map(map_path);
      Json doc = envelope("eval", cfg, {{"inverse", eval_inverse}, {"iterates", eval_iterates}},
                          {{"map", map_input(map_path, f)}, {"point", point_text}});
      if (looks_exact(point_text)) {
        ExactPoint q = parse_exact_point(point_text);
        HenonInverse inv = inverse(f);
        for (int i = 0; i < eval_iterates; ++i) q = eval_inverse ? evaluate(inv, q) : evaluate(f, q);
        doc["result"] = report::point(q);
      } else {
        NumericPoint q = parse_numeric_point(point_text);
        HenonInverse inv = inverse(f);
        for (int i = 0; i < eval_iterates; ++i) q = eval_inverse ? evaluate(inv, q) : evaluate(f, q);
        doc["result"] = report::point(q);
        doc["escaped"] = q.escaped();
      }
      emit(cfg, doc);
    } else if (green_cmd->parsed()) {
      HenonMap f = load_map(map_path);
      GreenFunction G(f, gopts);
      if (!grid_re.empty() || !grid_im.empty()) {
        double rl, rh, il, ih;
        int nr, ni;
        parse_axis(grid_re.empty() ? "-2:2:64" : grid_re, rl, rh, nr);
        parse_axis(grid_im.empty() ? "-2:2:64" : grid_im, il, ih, ni);
        std::ostringstream csv;
        csv << "# map " << f.hash() << " x0 " << x0_text << "\n" << "re,im,g_plus,g_minus,error\n";
        char buf[160];
        for (const auto& row : green_grid(G, parse_complex(x0_text), rl, rh, il, ih, nr, ni)) {
          std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", row.re, row.im, row.g_plus,
                        row.g_minus, row.error);
          csv << buf;
        }
        emit(cfg, csv.str());
        return 0;
      }
      if (point_text.empty()) throw InputError("--point: required unless a grid is requested");
      NumericPoint q = parse_numeric_point(point_text);
      Json doc = envelope("green", cfg, {{"direction", direction}},
                          {{"map", map_input(map_path, f)}, {"point", point_text}});
      EscapeData ep = G.escape(Direction::plus), em = G.escape(Direction::minus);
      doc["escape"] = {{"plus", {{"radius", ep.radius}, {"tail_constant", ep.tail_constant}}},
                       {"minus", {{"radius", em.radius}, {"tail_constant", em.tail_constant}}}};
      if (direction == "both") {
        doc["plus"] = report::green(G.plus(q));
        doc["minus"] = report::green(G.minus(q));
        doc["total"] = report::green(G.total(q));
      } else {
        doc[direction] = report::green(G(parse_direction(direction), q));
      }
      emit(cfg, doc);
    } else if (height_cmd->parsed()) {
      HenonMap f = load_map(map_path);
      ExactPoint q = parse_exact_point(point_text);
      HeightCalculator calc(f, hopts);
      HeightValue h;
      if (!cfg.cache.empty()) {
        HeightCache cache(cfg.cache);
        h = cache.get_or_compute(calc, q);
      } else {
        h = calc(q);
      }
      Json doc = envelope("height", cfg, Json::object(), {{"map", map_input(map_path, f)}, {"point", report::point(q)}});
      doc["result"] = report::height(h);
      emit(cfg, doc);
    } else if (periodic_cmd->parsed()) {
      HenonMap f = load_map(map_path);
      Json doc = envelope("periodic", cfg,
                          {{"max_period", max_period},
                           {"height_bound", height_bound},
                           {"numeric", numeric},
                           {"starts", starts},
                           {"modp_primes", modp_primes},
                           {"resultant", resultant}},
                          {{"map", map_input(map_path, f)}});
      Json modp = Json::array();
      for (unsigned long p : modp_primes) modp.push_back(report::modp(periodic_modp(f, p), max_period));
      doc["modp"] = std::move(modp);
      LiftOptions lift;
      lift.height_bound = height_bound;
      doc["rational"] = report::rational_periodic(rational_periodic_points(f, max_period, cfg.primes, lift));
      if (numeric) {
        NumericOptions nopts;
        nopts.threads = cfg.threads;
        Json per = Json::array();
        for (int n = 1; n <= max_period; ++n)
          per.push_back(report::numeric_periodic(
              periodic_numeric(f, n, cfg.tol, starts, mix_seed(cfg.seed, static_cast<std::uint64_t>(n)), nopts)));
        doc["numeric"] = std::move(per);
      }
      if (resultant) {
        Json res = Json::array();
        for (int n = 1; n <= std::min(3, max_period); ++n) res.push_back(report::resultant(fixed_points_exact_resultant(f, n)));
        doc["resultant"] = std::move(res);
      }
      emit(cfg, doc);
    } else if (common_cmd->parsed()) {
      HenonMap f = load_map(map_f_path), g = load_map(map_g_path);
      CommonOptions co;
      co.tol = cfg.tol;
      co.seed = cfg.seed;
      co.n_starts = starts;
      co.primes = cfg.primes;
      co.numeric.threads = cfg.threads;
      Json doc = envelope("common", cfg, {{"max_period", max_period}, {"starts", starts}},
                          {{"map_f", map_input(map_f_path, f)}, {"map_g", map_input(map_g_path, g)}});
      doc["result"] = report::common(common_periodic(f, g, max_period, co));
      emit(cfg, doc);
    } else if (sweep_cmd->parsed()) {
      HenonFamily F = load_family(fam_f_path), G = load_family(fam_g_path);
      std::vector<Rational> params;
      try {
        params = parse_params(params_text);
      } catch (const std::invalid_argument& e) {
        throw InputError(std::string("--params: ") + e.what());
      }
      SweepOptions so;
      so.common.tol = cfg.tol;
      so.common.n_starts = starts;
      so.common.primes = cfg.primes;
      so.height_tol = cfg.tol;
      so.threads = cfg.threads;
      SweepReport r = sweep_common_periodic(F, G, params, max_period, eps, cfg.seed, so);
      if (!csv_path.empty()) {
        std::ofstream c(csv_path);
        if (!c) throw InputError("--csv: cannot write '" + csv_path + "'");
        c << sweep_csv(r);
      }
      if (cfg.format == "csv") {
        emit(cfg, sweep_csv(r));
      } else {
        Json doc = envelope("sweep", cfg, {{"params", params_text}, {"max_period", max_period}, {"eps", eps}, {"starts", starts}},
                            {{"family_f", family_input(fam_f_path, F)}, {"family_g", family_input(fam_g_path, G)}});
        doc["result"] = report::sweep(r);
        emit(cfg, doc);
      }
    } else if (jac_cmd->parsed()) {
      if (map_path.empty() == fam_f_path.empty()) throw InputError("jacobian: give exactly one of --map, --family");
      if (!map_path.empty()) {
        HenonMap f = load_map(map_path);
        Json doc = envelope("jacobian", cfg, Json::object(), {{"map", map_input(map_path, f)}});
        doc["jacobian"] = to_string(f.jacobian());
        doc["dynamical_degree"] = f.dynamical_degree();
        emit(cfg, doc);
      } else {
        HenonFamily F = load_family(fam_f_path);
        std::vector<Complex> bs;
        for (const auto& s : samples) bs.push_back(parse_complex(s));
        Json doc = envelope("jacobian", cfg, {{"samples", samples}}, {{"family", family_input(fam_f_path, F)}});
        doc["jacobian_map"] = F.jacobian_map().to_string("t");
        Json excluded = Json::array();
        for (const auto& b : F.excluded_params()) excluded.push_back(to_string(b));
        doc["excluded_params"] = std::move(excluded);
        if (!bs.empty()) doc["dissipativity"] = report::dissipativity(classify_dissipative(F, bs));
        emit(cfg, doc);
      }
    } else if (measure_cmd->parsed()) {
      HenonMap f = load_map(map_path);
      NumericOptions nopts;
      nopts.threads = cfg.threads;
      MeasureSample s = measure_from_periodic(f, period, cfg.tol, starts, cfg.seed, nopts);
      if (cfg.format == "json") {
        Json doc = envelope("measure", cfg, {{"period", period}, {"starts", starts}}, {{"map", map_input(map_path, f)}});
        doc["sample"] = report::measure_summary(s);
        doc["support"] = {{"max_green", support_check(GreenFunction(f, gopts), s, 1e-4).max_green}};
        Json pts = Json::array();
        for (const auto& z : s.points) pts.push_back(report::point(z));
        doc["points"] = std::move(pts);
        emit(cfg, doc);
      } else {
        emit(cfg, "# map " + f.hash() + " period " + std::to_string(period) + " seed " + std::to_string(cfg.seed) +
                      "\n" + to_csv(s));
      }
    } else if (mcmp_cmd->parsed()) {
      MeasureSample a = sample_from_csv(read_file(cloud_a)), b = sample_from_csv(read_file(cloud_b));
      if (a.empty() || b.empty()) throw InputError("measure-compare: empty sample");
      Json doc = envelope("measure-compare", cfg, {{"threshold", threshold}}, {{"a", cloud_a}, {"b", cloud_b}});
      if (!map_f_path.empty() && !map_g_path.empty()) {
        HenonMap f = load_map(map_f_path), g = load_map(map_g_path);
        doc["inputs"]["map_f"] = map_input(map_f_path, f);
        doc["inputs"]["map_g"] = map_input(map_g_path, g);
        doc["result"] = report::comparison(compare_measures(f, g, a, b, threshold));
      } else {
        MeasureComparison c;
        c.discrepancy = measure_discrepancy(a, b);
        c.below_threshold = c.discrepancy <= threshold;
        doc["result"] = report::comparison(c);
        doc["note"] = "no maps given; shared iterates are only reported after symbolic confirmation";
      }
      emit(cfg, doc);
    } else if (mass_cmd->parsed()) {
      HenonMap f = load_map(map_path);
      if (!(r_hi > r_lo)) throw InputError("--r-hi must exceed --r-lo");
      Json doc = envelope("curve-mass", cfg, {{"curve", curve_text}, {"r_lo", r_lo}, {"r_hi", r_hi}},
                          {{"map", map_input(map_path, f)}});
      doc["result"] = report::curve_mass(curve_green_mass(GreenFunction(f, gopts), parse_curve(curve_text), r_lo, r_hi));
      emit(cfg, doc);
    } else if (locus_cmd->parsed()) {
      HenonFamily F = load_family(fam_f_path), G = load_family(fam_g_path);
      ComplexBox box{};
      if (std::sscanf(box_re.c_str(), "%lf:%lf", &box.re_lo, &box.re_hi) != 2 ||
          std::sscanf(box_im.c_str(), "%lf:%lf", &box.im_lo, &box.im_hi) != 2 || !(box.re_hi > box.re_lo) ||
          !(box.im_hi > box.im_lo))
        throw InputError("--re/--im: expected lo:hi with hi > lo");
      Json doc = envelope("unit-locus", cfg, {{"re", box_re}, {"im", box_im}, {"resolution", resolution}},
                          {{"family_f", family_input(fam_f_path, F)}, {"family_g", family_input(fam_g_path, G)}});
      doc["result"] = report::unit_locus(unit_locus_grid(F, G, box, resolution));
      emit(cfg, doc);
    }
  } catch (const ComputationRefused& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kRefused;
  } catch (const SpecError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInput;
  } catch (const InputError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInput;
  } catch (const ExcludedParameter& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInput;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInput;
  }
  return 0;
}
