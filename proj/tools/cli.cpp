#include "cli.hpp"

#include <charconv>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "coadjoint/center.hpp"
#include "coadjoint/character.hpp"
#include "coadjoint/errors.hpp"
#include "coadjoint/orbit.hpp"
#include "coadjoint/sphere_action.hpp"
#include "coadjoint/sun_orbits.hpp"

namespace coadjoint::cli {
namespace {

using Json = nlohmann::ordered_json;

// Diagnostic carrying the name of the offending field.
struct FieldError : InvalidInput {
  FieldError(const std::string& field, const std::string& what) : InvalidInput(field + ": " + what) {}
};

std::vector<std::int64_t> parse_int_list(const std::string& field, const std::string& text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    std::string tok = text.substr(pos, end - pos);
    tok.erase(0, tok.find_first_not_of(' '));
    tok.erase(tok.find_last_not_of(' ') + 1);
    std::int64_t v = 0;
    const char* first = tok.data();
    if (!tok.empty() && tok[0] == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw FieldError(field, "malformed integer list '" + text + "'");
    out.push_back(v);
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

CartanType parse_type(const std::string& text) {
  try {
    return CartanType::parse(text);
  } catch (const InvalidInput& e) {
    throw FieldError("type", e.what());
  }
}

RationalWeight parse_weight(const std::string& text) {
  try {
    return RationalWeight::parse(text);
  } catch (const InvalidInput& e) {
    throw FieldError("weight", e.what());
  }
}

Json phase_json(const RootOfUnity& v) { return Json{{"num", v.num()}, {"den", v.den()}}; }

Json string_list(const RationalWeight& w) {
  Json arr = Json::array();
  for (const auto& c : w.coords) arr.push_back(coadjoint::to_string(c));
  return arr;
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

// ---------------------------------------------------------------- analyze

struct AnalyzeOptions {
  std::string type;
  std::string weight;
};

int run_analyze(const AnalyzeOptions& opt, bool json, std::ostream& out) {
  const RootSystem rs(parse_type(opt.type));
  const OrbitDatum od(rs, parse_weight(opt.weight));
  if (!is_quantizable(od)) (void)od.eta().to_integral();  // throws NotQuantizable

  const auto stab = stabilizer(od);
  const CenterGroup cg(rs);
  const auto table = kappa_on_center(od, cg);
  const auto bound = pi1_lower_bound(table);

  Json rep;
  rep["command"] = "analyze";
  rep["type"] = rs.type().to_string();
  rep["weight"] = string_list(od.eta());
  rep["quantizable"] = true;
  rep["regular"] = stab.regular;
  rep["levi_type"] = stab.levi_type.to_string();
  rep["levi_center_rank"] = stab.center_torus_rank;
  rep["orbit_dimension"] = symplectic_dimension(od);
  if (rs.type().factors().size() == 1 && rs.type().factors()[0].series == 'A')
    rep["stabilizer_blocks"] = type_a_blocks(od);
  rep["center_order"] = cg.order();
  rep["center_divisors"] = std::vector<std::int64_t>(cg.divisors().begin(), cg.divisors().end());
  Json entries = Json::array();
  for (const auto& e : table.entries)
    entries.push_back(Json{{"element", e.element.coords},
                           {"phase_num", e.value.num()},
                           {"phase_den", e.value.den()}});
  rep["kappa_table"] = std::move(entries);
  rep["injective"] = table.injective;
  rep["image_size"] = table.image_size;
  rep["pi1_lower_bound"] = bound.value;
  rep["bound_provenance"] = std::string(to_string(bound.provenance));

  if (json) {
    out << rep.dump() << '\n';
    return kOk;
  }
  out << "type              " << rep["type"].get<std::string>() << '\n'
      << "weight            " << od.eta().to_string() << '\n'
      << "quantizable       yes\n"
      << "regular           " << (stab.regular ? "yes" : "no") << '\n'
      << "levi type         " << (stab.levi_type.empty() ? "-" : stab.levi_type.to_string())
      << " (center rank " << stab.center_torus_rank << ")\n"
      << "orbit dimension   " << symplectic_dimension(od) << '\n'
      << "center order      " << cg.order() << '\n'
      << "kappa on center\n";
  for (const auto& e : table.entries)
    out << "  [" << join(e.element.coords) << "]  exp(2 pi i " << e.value.to_string() << ")\n";
  out << "injective         " << (table.injective ? "yes" : "no") << '\n'
      << "image size        " << table.image_size << '\n'
      << "pi1 lower bound   " << bound.value << " (" << to_string(bound.provenance) << ")\n";
  return kOk;
}

// ---------------------------------------------------------------- center

int run_center(const std::string& type, bool json, std::ostream& out) {
  const RootSystem rs(parse_type(type));
  const CenterGroup cg(rs);
  Json rep;
  rep["command"] = "center";
  rep["type"] = rs.type().to_string();
  rep["order"] = cg.order();
  rep["divisors"] = std::vector<std::int64_t>(cg.divisors().begin(), cg.divisors().end());
  Json elements = Json::array();
  for (const auto& z : cg.elements())
    elements.push_back(Json{{"coords", z.coords},
                            {"coweight", cg.coweight_representative(z)},
                            {"order", cg.element_order(z)}});
  rep["elements"] = std::move(elements);
  if (json) {
    out << rep.dump() << '\n';
    return kOk;
  }
  out << "type      " << rs.type().to_string() << '\n'
      << "order     " << cg.order() << '\n'
      << "divisors  " << join(rep["divisors"].get<std::vector<std::int64_t>>()) << '\n';
  for (const auto& z : cg.elements())
    out << "  [" << join(z.coords) << "]  coweight (" << join(cg.coweight_representative(z))
        << ")  order " << cg.element_order(z) << '\n';
  return kOk;
}

// ---------------------------------------------------------------- sun

struct SunOptions {
  int n = 0;
  std::string partition;
  std::string m;
  bool sweep = false;
  int max_n = 8;
  std::int64_t m_min = -3;
  std::int64_t m_max = 3;
};

Json sweep_entry(const SunOrbitSpec& spec) {
  const auto b = pi1_bound_sun(spec);
  return Json{{"n", spec.n},         {"q", spec.partition}, {"m", spec.m},
              {"q_dot_m", b.q_dot_m}, {"gcd", b.gcd},       {"bound", b.bound},
              {"paper_theorem_applies", b.coprime}};
}

int run_sun(const SunOptions& opt, bool json, std::ostream& out) {
  if (opt.sweep) {
    const int lo = opt.n ? opt.n : 2;
    const int hi = opt.n ? opt.n : opt.max_n;
    if (lo < 2) throw FieldError("n", "must be at least 2");
    if (hi < lo) throw FieldError("max-n", "must be at least 2");
    if (opt.m_max < opt.m_min) throw FieldError("m-max", "must not be below m-min");
    const auto specs = enumerate_sun_specs(lo, hi, opt.m_min, opt.m_max);
    if (json) {
      out << '[';
      for (std::size_t i = 0; i < specs.size(); ++i) out << (i ? "," : "") << sweep_entry(specs[i]).dump();
      out << "]\n";
    } else {
      for (const auto& s : specs) {
        const auto b = pi1_bound_sun(s);
        out << "n=" << s.n << " q=" << join({s.partition.begin(), s.partition.end()}) << " m=" << join(s.m)
            << " q.m=" << b.q_dot_m << " gcd=" << b.gcd << " bound=" << b.bound
            << (b.coprime ? " (paper_theorem)" : "") << '\n';
      }
    }
    return kOk;
  }

  if (opt.partition.empty()) throw FieldError("partition", "required unless --sweep is given");
  if (opt.m.empty()) throw FieldError("m", "required unless --sweep is given");
  SunOrbitSpec spec;
  spec.n = opt.n;
  for (auto p : parse_int_list("partition", opt.partition)) {
    if (p <= 0 || p > std::numeric_limits<int>::max()) throw FieldError("partition", "parts must be positive");
    spec.partition.push_back(static_cast<int>(p));
  }
  spec.m = parse_int_list("m", opt.m);
  spec.validate();

  const auto b = pi1_bound_sun(spec);
  const RootSystem rs(CartanType({{'A', spec.n - 1}}));
  const CenterGroup cg(rs);
  const auto eta = to_weight(spec);
  const auto table = kappa_on_center(OrbitDatum(rs, eta), cg);
  bool agrees = true;
  Json kappa = Json::array();
  for (int a = 0; a < spec.n; ++a) {
    const auto v = kappa_closed_form(spec, a);
    agrees = agrees && table.at(sun_center_element(cg, a)) == v;
    kappa.push_back(Json{{"a", a}, {"phase_num", v.num()}, {"phase_den", v.den()}});
  }

  Json rep;
  rep["command"] = "sun";
  rep["n"] = spec.n;
  rep["partition"] = spec.partition;
  rep["m"] = spec.m;
  rep["q_dot_m"] = b.q_dot_m;
  rep["gcd"] = b.gcd;
  rep["bound"] = b.bound;
  rep["paper_theorem_applies"] = b.coprime;
  rep["bound_provenance"] = b.coprime ? "paper_theorem" : (b.bound == 1 ? "trivial" : "derived_image_size");
  rep["weight"] = string_list(eta);
  rep["kappa"] = std::move(kappa);
  rep["generic_pipeline_agrees"] = agrees;
  if (json) {
    out << rep.dump() << '\n';
    return kOk;
  }
  out << "n                 " << spec.n << '\n'
      << "partition         " << join({spec.partition.begin(), spec.partition.end()}) << '\n'
      << "m                 " << join(spec.m) << '\n'
      << "q.m               " << b.q_dot_m << '\n'
      << "gcd(q.m, n)       " << b.gcd << '\n'
      << "weight            " << eta.to_string() << '\n'
      << "kappa(z_a)        ";
  for (int a = 0; a < spec.n; ++a) out << (a ? " " : "") << kappa_closed_form(spec, a).to_string();
  out << '\n'
      << "pi1 lower bound   " << b.bound << " (" << rep["bound_provenance"].get<std::string>() << ")\n"
      << "pipeline check    " << (agrees ? "agrees" : "MISMATCH") << '\n';
  return kOk;
}

// ---------------------------------------------------------------- verify-s2

struct VerifyOptions {
  std::int64_t m = -1;
  int points = 10;
  int resolution = 2048;
  int turns = 1;
  double tolerance = 1e-6;
};

int run_verify(const VerifyOptions& opt, bool json, std::ostream& out) {
  if (opt.m == 0) throw FieldError("m", "must be nonzero");
  if (opt.points < 2) throw FieldError("points", "must be at least 2");
  if (opt.resolution < 16) throw FieldError("resolution", "must be at least 16");
  if (opt.turns < 1) throw FieldError("turns", "must be positive");
  const SphereOrbit orbit(opt.m);
  const auto loop = cartan_loop(orbit, opt.turns, opt.resolution);
  const auto sweep = base_point_sweep(orbit, loop, opt.points, opt.tolerance);

  // algebraic value through the generic pipeline on A1
  const SunOrbitSpec spec{2, {1}, {opt.m}};
  const RootSystem rs(CartanType({{'A', 1}}));
  const CenterGroup cg(rs);
  const auto table = kappa_on_center(OrbitDatum(rs, to_weight(spec)), cg);
  const RootOfUnity algebraic = table.at(sun_center_element(cg, opt.turns % 2));
  const double error = std::abs(sweep.kappa - algebraic.value());

  Json rep;
  rep["command"] = "verify-s2";
  rep["m"] = opt.m;
  rep["points"] = opt.points;
  rep["resolution"] = opt.resolution;
  rep["turns"] = opt.turns;
  rep["kappa_numeric"] = {sweep.kappa.real(), sweep.kappa.imag()};
  rep["kappa_algebraic_phase"] = phase_json(algebraic);
  rep["algebraic_error"] = error;
  rep["max_deviation"] = sweep.max_deviation;
  rep["normalization_residual"] = sweep.normalization_residual;
  rep["total_area_residual"] = sweep.total_area_residual;
  rep["cap_deviation"] = sweep.max_cap_deviation;
  rep["agrees"] = sweep.within_tolerance && error < opt.tolerance;
  if (json) {
    out << rep.dump() << '\n';
    return kOk;
  }
  std::ostringstream k;
  k << std::setprecision(12) << sweep.kappa.real() << (sweep.kappa.imag() < 0 ? " - " : " + ")
    << std::abs(sweep.kappa.imag()) << "i";
  out << "m                      " << opt.m << '\n'
      << "kappa (numeric)        " << k.str() << '\n'
      << "kappa (algebraic)      exp(2 pi i " << algebraic.to_string() << ")\n"
      << "algebraic error        " << error << '\n'
      << "max base-point dev.    " << sweep.max_deviation << '\n'
      << "cap-choice dev.        " << sweep.max_cap_deviation << '\n'
      << "normalization residual " << sweep.normalization_residual << '\n'
      << "total area residual    " << sweep.total_area_residual << '\n'
      << "verdict                " << (rep["agrees"].get<bool>() ? "agrees" : "DISAGREES") << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantizability, central symplectic-action characters and pi_1(Ham) lower bounds "
               "for coadjoint orbits"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "table";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->envname("COADJOINT_FORMAT")
      ->capture_default_str();

  AnalyzeOptions analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze the orbit of a weight");
  analyze_cmd->add_option("--type", analyze.type, "Cartan type, e.g. A2 or A2xA1")->required();
  analyze_cmd->add_option("--weight", analyze.weight,
                          "Fundamental-weight coordinates, comma separated rationals")
      ->required();

  std::string center_type;
  auto* center_cmd = app.add_subcommand("center", "Center of the simply connected group");
  center_cmd->add_option("--type", center_type, "Cartan type")->required();

  SunOptions sun;
  auto* sun_cmd = app.add_subcommand("sun", "SU(n) orbits in block form");
  sun_cmd->add_option("--n", sun.n, "Matrix size n");
  sun_cmd->add_option("--partition", sun.partition, "Block sizes n_1<=...<=n_k summing to n-1");
  sun_cmd->add_option("--m", sun.m, "Determinant exponents m_1,...,m_k");
  sun_cmd->add_flag("--sweep", sun.sweep, "Enumerate every (q, m) in a box");
  sun_cmd->add_option("--max-n", sun.max_n, "Sweep: largest n")->capture_default_str();
  sun_cmd->add_option("--m-min", sun.m_min, "Sweep: smallest m entry")->capture_default_str();
  sun_cmd->add_option("--m-max", sun.m_max, "Sweep: largest m entry")->capture_default_str();

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify-s2", "Quadrature check of the action on the 2-sphere");
  verify_cmd->add_option("--m", verify.m, "Character exponent (nonzero)")->capture_default_str();
  verify_cmd->add_option("--points", verify.points, "Base points")->capture_default_str();
  verify_cmd->add_option("--resolution", verify.resolution, "Quadrature resolution")->capture_default_str();
  verify_cmd->add_option("--turns", verify.turns, "Half-turns in SU(2)")->capture_default_str();
  verify_cmd->add_option("--tolerance", verify.tolerance, "Agreement tolerance")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  const bool json = format == "json";
  try {
    if (*analyze_cmd) return run_analyze(analyze, json, out);
    if (*center_cmd) return run_center(center_type, json, out);
    if (*sun_cmd) {
      if (!sun.sweep && sun.n == 0) throw FieldError("n", "required unless --sweep is given");
      return run_sun(sun, json, out);
    }
    return run_verify(verify, json, out);
  } catch (const NotQuantizable& e) {
    err << "error: weight: " << e.what() << "; orbit is not quantizable\n";
    return kNotQuantizable;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
}

}  // namespace coadjoint::cli
