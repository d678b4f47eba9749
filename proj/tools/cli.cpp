#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kmarc/arcs.hpp"
#include "kmarc/autos.hpp"
#include "kmarc/constructions.hpp"
#include "kmarc/serialize.hpp"

namespace kmarc::cli {
namespace {

using nlohmann::json;

struct TowerOptions {
  int m = 2;
  int h = 1;
  std::string modulus;
};

void add_tower_options(CLI::App* app, TowerOptions& o) {
  app->add_option("--m", o.m, "K = GF(2^(2m)), 1 <= m <= 8")->capture_default_str();
  app->add_option("--h", o.h, "F' = GF(2^h), h divides m")->capture_default_str();
  app->add_option("--modulus", o.modulus, "degree-2m modulus in hex (default: smallest irreducible)");
}

FieldTower make_tower(const TowerOptions& o) {
  std::optional<std::uint32_t> modulus;
  if (!o.modulus.empty()) modulus = parse_hex(o.modulus);
  return FieldTower(o.m, o.h, modulus);
}

ArcFile read_arc(const std::string& path, std::istream& in) {
  std::string text;
  if (path.empty()) {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open arc file " + path);
    text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed arc JSON: ") + e.what());
  }
  return arc_from_json(j);
}

void emit(const json& j, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot write " + path);
  f << j.dump(2) << '\n';
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot write " + path);
  f << text;
}

json hex_list(const FieldTower& tower, const auto& elements) {
  json a = json::array();
  for (FieldElement x : elements) a.push_back(to_hex(tower, x));
  return a;
}

std::vector<FieldElement> parse_elements(const FieldTower& tower,
                                         const std::vector<std::string>& hexes) {
  std::vector<FieldElement> out;
  for (const auto& h : hexes) out.push_back(from_hex(tower, h));
  return out;
}

std::string histogram_csv(const std::map<int, std::uint64_t>& hist) {
  std::ostringstream s;
  s << "intersection_size,lines\n";
  for (const auto& [size, count] : hist) s << size << ',' << count << '\n';
  return s.str();
}

std::string histogram_svg(const std::map<int, std::uint64_t>& hist) {
  constexpr int kBar = 48;
  constexpr int kHeight = 200;
  constexpr int kMargin = 30;
  std::uint64_t peak = 1;
  for (const auto& [size, count] : hist) peak = std::max(peak, count);
  const int width = kMargin * 2 + kBar * static_cast<int>(hist.size());
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
    << kHeight + 2 * kMargin << "\">\n";
  int x = kMargin;
  for (const auto& [size, count] : hist) {
    const int h = static_cast<int>(static_cast<double>(count) / static_cast<double>(peak) * kHeight);
    const int y = kMargin + kHeight - h;
    s << "  <rect x=\"" << x + 4 << "\" y=\"" << y << "\" width=\"" << kBar - 8 << "\" height=\""
      << h << "\" fill=\"steelblue\"/>\n";
    s << "  <text x=\"" << x + kBar / 2 << "\" y=\"" << y - 4
      << "\" font-size=\"11\" text-anchor=\"middle\">" << count << "</text>\n";
    s << "  <text x=\"" << x + kBar / 2 << "\" y=\"" << kMargin + kHeight + 16
      << "\" font-size=\"12\" text-anchor=\"middle\">" << size << "</text>\n";
    x += kBar;
  }
  s << "</svg>\n";
  return s.str();
}

// "name" or "name:hex,hex,..." with optional extra parameters.
NamedMap parse_map(const FieldTower& tower, std::string spec, std::vector<std::string> params) {
  if (const auto colon = spec.find(':'); colon != std::string::npos) {
    std::stringstream rest(spec.substr(colon + 1));
    for (std::string item; std::getline(rest, item, ',');) params.push_back(item);
    spec.resize(colon);
  }
  const auto p = parse_elements(tower, params);
  switch (map_kind_from_string(spec)) {
    case MapKind::theta: return make_theta(tower);
    case MapKind::sigma_prime: return make_sigma_prime(tower);
    case MapKind::psi: return make_psi(tower);
    case MapKind::elation:
      if (p.size() != 2) throw std::invalid_argument("elation needs parameters a,b");
      return make_elation(tower, p[0], p[1]);
    case MapKind::rho:
      if (p.empty()) return make_rho(tower, primitive_fprime(tower));
      if (p.size() == 1) return make_rho(tower, p[0]);
      if (p.size() == 3) return make_rho(tower, p[0], p[1], p[2]);
      throw std::invalid_argument("rho takes gamma or gamma,s,t");
    case MapKind::tau:
      if (p.size() > 1) throw std::invalid_argument("tau takes at most one parameter t");
      return make_tau(tower, p.empty() ? FieldElement(0) : p[0]);
  }
  throw std::invalid_argument("unknown map " + spec);
}

json named_map_json(const FieldTower& tower, const NamedMap& map) {
  return {{"map", to_string(map.kind)},
          {"params", hex_list(tower, map.params)},
          {"collineation", collineation_to_json(tower, map.realized)}};
}

ExampleName example_from_string(const std::string& s) {
  if (s == "h2") return ExampleName::h2;
  if (s == "h4") return ExampleName::h4;
  if (s == "h8") return ExampleName::h8;
  throw std::invalid_argument("unknown example " + s);
}

class Runner {
 public:
  Runner(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

  int run(const std::vector<std::string>& args);

 private:
  int cmd_tower();
  int cmd_construct();
  int cmd_verify();
  int cmd_secants();
  int cmd_vandermonde();
  int cmd_autos_check();
  int cmd_autos_orbits();
  int cmd_autos_translation();
  int cmd_autos_closure();
  int cmd_autos_quotient();
  int cmd_exponents();

  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;

  TowerOptions tower_;
  std::string arc_path_;
  std::string out_path_;

  std::string kind_;
  std::string c_hex_ = "1";
  std::uint64_t seed_ = 1;
  int t_ = 0;
  std::string sub_ = "oval";

  std::string method_ = "all";
  int jobs_ = 1;
  std::string svg_path_;
  std::string csv_path_;

  std::vector<std::string> set_;
  std::vector<std::string> maps_;
  std::vector<std::string> params_;
  std::string on_ = "points";
  std::vector<std::string> l0_;
  bool kernel_ = false;
  std::uint64_t cap_ = 1'000'000;
  std::string example_;
};

int Runner::run(const std::vector<std::string>& args) {
  CLI::App app{"KM-arcs of PG(2,q), q = 2^m, in polar coordinates", "kmarc"};
  // -h would clash with --h, so help is long-form only.
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);

  auto* tower = app.add_subcommand("tower", "print the field tower as JSON");
  add_tower_options(tower, tower_);

  auto* construct = app.add_subcommand("construct", "build an arc and print its JSON");
  construct->add_option("kind", kind_, "hr | lift | h2 | h4 | h8 | oval | hyperoval | star")
      ->required()
      ->check(CLI::IsMember({"hr", "lift", "h2", "h4", "h8", "oval", "hyperoval", "star"}));
  add_tower_options(construct, tower_);
  construct->add_option("--c", c_hex_, "scaling c in F for V_c (hex)")->capture_default_str();
  construct->add_option("--sub", sub_, "subplane arc to lift: oval | hyperoval")
      ->check(CLI::IsMember({"oval", "hyperoval"}))
      ->capture_default_str();
  construct->add_option("--t", t_, "type of a random star-set");
  construct->add_option("--seed", seed_, "seed for random star-sets")->capture_default_str();
  construct->add_option("--out", out_path_, "write JSON here instead of stdout");

  auto* verify = app.add_subcommand("verify", "verify an arc file (stdin by default)");
  verify->add_option("--arc", arc_path_, "arc JSON file");
  verify->add_option("--method", method_, "direct | bracket | d | e | all")
      ->check(CLI::IsMember({"direct", "bracket", "d", "e", "all"}))
      ->capture_default_str();
  verify->add_option("--jobs", jobs_, "worker threads")->check(CLI::Range(1, 256))
      ->capture_default_str();
  verify->add_option("--svg", svg_path_, "write the intersection histogram as SVG");
  verify->add_option("--csv", csv_path_, "write the intersection histogram as CSV");

  auto* secants = app.add_subcommand("secants", "list the t-secants of a KM-arc");
  secants->add_option("--arc", arc_path_, "arc JSON file");

  auto* vandermonde = app.add_subcommand("vandermonde", "test a set for the Vandermonde property");
  add_tower_options(vandermonde, tower_);
  vandermonde->add_option("--set", set_, "elements in hex")->delimiter(',')->required();

  auto* autos = app.add_subcommand("autos", "automorphism checks");
  autos->require_subcommand(1);
  auto* check = autos->add_subcommand("check", "does a named map stabilize the arc");
  check->add_option("--arc", arc_path_, "arc JSON file");
  check->add_option("--map", maps_, "theta | sigma_prime | psi | rho | elation | tau")
      ->required()
      ->expected(1);
  check->add_option("--params", params_, "map parameters in hex")->delimiter(',');
  auto* orbits_cmd = autos->add_subcommand("orbits", "orbits of the group generated by maps");
  orbits_cmd->add_option("--arc", arc_path_, "arc JSON file");
  orbits_cmd->add_option("--map", maps_, "generator, as name or name:hex,hex");
  orbits_cmd->add_flag("--kernel", kernel_, "add generators of the trace-kernel elation group");
  orbits_cmd->add_option("--on", on_, "points | secants")
      ->check(CLI::IsMember({"points", "secants"}))
      ->capture_default_str();
  auto* translation = autos->add_subcommand("translation", "elation/translation test for l0");
  translation->add_option("--arc", arc_path_, "arc JSON file");
  translation->add_option("--l0", l0_, "u_hex,mu_hex of the axis (default: the line F)")
      ->delimiter(',')
      ->expected(2);
  auto* closure = autos->add_subcommand("closure", "order of the group generated by maps");
  add_tower_options(closure, tower_);
  closure->add_option("--map", maps_, "generator, as name or name:hex,hex");
  closure->add_flag("--kernel", kernel_, "add generators of the trace-kernel elation group");
  closure->add_option("--cap", cap_, "maximum group order")->capture_default_str();
  auto* quotient = autos->add_subcommand("quotient", "order of <E, theta, tau>/E for an example");
  quotient->add_option("--example", example_, "h2 | h4 | h8")
      ->required()
      ->check(CLI::IsMember({"h2", "h4", "h8"}));
  quotient->add_option("--m", tower_.m, "K = GF(2^(2m))")->required();
  quotient->add_option("--modulus", tower_.modulus, "degree-2m modulus in hex");
  quotient->add_option("--cap", cap_, "maximum group order")->capture_default_str();

  auto* exponents = app.add_subcommand("exponents", "list an exponent set");
  exponents->add_option("--kind", kind_, "D | Dprime | E")
      ->required()
      ->check(CLI::IsMember({"D", "Dprime", "E"}));
  exponents->add_option("--m", tower_.m, "1 <= m <= 8")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out_, err_);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (construct->parsed() && !construct->get_option("--h")->empty() &&
      (kind_ == "h2" || kind_ == "h4" || kind_ == "h8")) {
    const int implied = kind_ == "h2" ? 1 : kind_ == "h4" ? 2 : 3;
    if (tower_.h != implied) {
      err_ << "error: example " << kind_ << " uses h = " << implied << '\n';
      return kExitUsage;
    }
  }

  try {
    if (tower->parsed()) return cmd_tower();
    if (construct->parsed()) return cmd_construct();
    if (verify->parsed()) return cmd_verify();
    if (secants->parsed()) return cmd_secants();
    if (vandermonde->parsed()) return cmd_vandermonde();
    if (check->parsed()) return cmd_autos_check();
    if (orbits_cmd->parsed()) return cmd_autos_orbits();
    if (translation->parsed()) return cmd_autos_translation();
    if (closure->parsed()) return cmd_autos_closure();
    if (quotient->parsed()) return cmd_autos_quotient();
    if (exponents->parsed()) return cmd_exponents();
  } catch (const std::exception& e) {
    err_ << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int Runner::cmd_tower() {
  const FieldTower tower = make_tower(tower_);
  json j = tower_to_json(tower);
  j["q"] = tower.q();
  j["r"] = tower.r();
  j["delta_hex"] = to_hex(tower, tower.delta());
  j["generator_hex"] = to_hex(tower, tower.generator());
  emit(j, "", out_);
  return kExitOk;
}

int Runner::cmd_construct() {
  std::optional<FieldTower> tower;
  ArcFile arc{FieldTower(1, 1), {}, 0, std::nullopt, Level::full};
  json provenance = {{"construction", kind_}};

  if (kind_ == "h2" || kind_ == "h4" || kind_ == "h8") {
    const ExampleName name = example_from_string(kind_);
    std::optional<std::uint32_t> modulus;
    if (!tower_.modulus.empty()) modulus = parse_hex(tower_.modulus);
    ExampleFixture fx = example_fixture(name, tower_.m, modulus);
    provenance["h"] = fx.tower.h();
    provenance["c_hex"] = to_hex(fx.tower, FieldElement(1));
    provenance["u_gen_hex"] = to_hex(fx.tower, fx.recurrence.u_gen);
    provenance["parameter_hex"] = to_hex(fx.tower, fx.match.parameter);
    provenance["frobenius_power"] = fx.match.frobenius_power;
    const int t = static_cast<int>(fx.tower.q() / fx.tower.r());
    arc = ArcFile{fx.tower, std::move(fx.arc), t, std::nullopt, Level::full};
  } else {
    tower.emplace(make_tower(tower_));
    const FieldTower& tw = *tower;
    const FieldElement c = from_hex(tw, c_hex_);
    const int qr = static_cast<int>(tw.q() / tw.r());
    provenance["h"] = tw.h();
    if (kind_ == "hr") {
      provenance["c_hex"] = to_hex(tw, c);
      provenance["u_gen_hex"] = to_hex(tw, recurrence_set(tw).u_gen);
      arc = ArcFile{tw, build_hr(tw, c), qr, std::nullopt, Level::full};
    } else if (kind_ == "lift") {
      const int s = sub_ == "oval" ? 1 : 2;
      if (static_cast<std::uint64_t>(s) >= tw.r()) {
        throw std::invalid_argument("lifting a " + sub_ + " of PG(2," + std::to_string(tw.r()) +
                                    ") gives type t = q, which is excluded");
      }
      const PointSet sub = s == 1 ? subplane_oval(tw) : subplane_hyperoval(tw);
      provenance["c_hex"] = to_hex(tw, c);
      provenance["sub"] = sub_;
      provenance["s"] = s;
      arc = ArcFile{tw, lift_construction(tw, sub, s, c), s * qr, std::nullopt, Level::full};
    } else if (kind_ == "oval") {
      arc = ArcFile{tw, subplane_oval(tw), 1, std::nullopt, Level::sub};
    } else if (kind_ == "hyperoval") {
      arc = ArcFile{tw, subplane_hyperoval(tw), 2, std::nullopt, Level::sub};
    } else {
      if (t_ <= 0) throw std::invalid_argument("construct star needs --t");
      std::mt19937_64 rng(seed_);
      provenance["seed"] = seed_;
      provenance["t"] = t_;
      arc = ArcFile{tw, random_star_set(tw, t_, rng), t_, std::nullopt, Level::full};
    }
  }
  arc.provenance = std::move(provenance);
  emit(arc_to_json(arc), out_path_, out_);
  return kExitOk;
}

int Runner::cmd_verify() {
  const ArcFile arc = read_arc(arc_path_, in_);
  const FieldTower& tower = arc.tower;
  json j = {{"method", method_}, {"claimed_t", arc.claimed_t}};
  json verdicts = json::object();

  const bool want_all = method_ == "all";
  if (want_all || method_ == "direct") {
    const ArcReport report = verify_direct(tower, arc.points, arc.claimed_t, arc.level, jobs_);
    j["direct"] = report_to_json(tower, report);
    verdicts["direct"] = report.km_arc && report.is_star_set;
    if (!svg_path_.empty()) write_text(svg_path_, histogram_svg(report.histogram));
    if (!csv_path_.empty()) write_text(csv_path_, histogram_csv(report.histogram));
  } else if (!svg_path_.empty() || !csv_path_.empty()) {
    throw std::invalid_argument("--svg/--csv need the direct census (--method direct or all)");
  }

  // The algebraic criteria characterize star-sets of type 2 <= t < q.
  const StarSetInfo star = classify_star_set(tower, arc.points, arc.level);
  const bool algebraic =
      arc.level == Level::full && (!star.is_star || (*star.t >= 2 && static_cast<std::uint64_t>(*star.t) < tower.q()));
  auto run_algebraic = [&](const std::string& name, auto&& check) {
    if (!(want_all || method_ == name)) return;
    json entry = {{"applicable", algebraic}};
    if (algebraic) {
      if (!star.is_star) {
        entry["star_set"] = false;
        verdicts[name] = false;
      } else {
        entry["star_set"] = true;
        check(entry);
        verdicts[name] = entry["holds"];
      }
    }
    j[name] = std::move(entry);
  };
  run_algebraic("bracket", [&](json& entry) {
    const BracketCheck c = verify_bracket(tower, arc.points, false, jobs_);
    entry["holds"] = c.holds;
    if (!c.holds) entry["witness"] = {{"v_hex", to_hex(tower, *c.witness_v)}, {"k", c.witness_k}};
  });
  run_algebraic("d", [&](json& entry) {
    const PowerSumCheck c = verify_power_sums(tower, arc.points, ExponentKind::D);
    entry["holds"] = c.holds;
    if (!c.holds) entry["witness_exponent"] = *c.witness_exponent;
  });
  run_algebraic("e", [&](json& entry) {
    const PowerSumCheck c = verify_power_sums(tower, arc.points, ExponentKind::E);
    entry["holds"] = c.holds;
    if (!c.holds) entry["witness_exponent"] = *c.witness_exponent;
  });

  if (verdicts.empty()) throw std::invalid_argument("method " + method_ + " does not apply here");
  bool all_true = true;
  bool all_false = true;
  for (const auto& [name, v] : verdicts.items()) {
    all_true = all_true && v.get<bool>();
    all_false = all_false && !v.get<bool>();
  }
  j["verdicts"] = verdicts;
  j["agree"] = all_true || all_false;
  j["verdict"] = all_true;
  emit(j, "", out_);
  return all_true ? kExitOk : kExitFalse;
}

int Runner::cmd_secants() {
  const ArcFile arc = read_arc(arc_path_, in_);
  const FieldTower& tower = arc.tower;
  const int t = arc.claimed_t;
  const ArcReport report = verify_direct(tower, arc.points, t);
  const StarSetInfo star = classify_star_set(tower, arc.points);
  if (t < 2 || !report.km_arc || !star.is_star) {
    emit({{"verdict", false}, {"report", report_to_json(tower, report)}}, "", out_);
    return kExitFalse;
  }
  json list = json::array();
  bool all_vandermonde = true;
  for (const Line& line : t_secants(tower, arc.points, t)) {
    std::vector<FieldElement> on;
    std::vector<FieldElement> inverses;
    for (FieldElement y : arc.points) {
      if (incident(tower, line, ProjPoint::affine(y))) {
        on.push_back(y);
        inverses.push_back(tower.inv(y));
      }
    }
    const bool v = t >= 3 ? is_vandermonde(tower, inverses) : true;
    all_vandermonde = all_vandermonde && v;
    list.push_back({{"line", line_to_json(tower, line)},
                    {"points", hex_list(tower, on)},
                    {"inverse_vandermonde", v}});
  }
  emit({{"t", t}, {"secants", list}, {"inverse_vandermonde", all_vandermonde}}, "", out_);
  return kExitOk;
}

int Runner::cmd_vandermonde() {
  const FieldTower tower = make_tower(tower_);
  const auto set = parse_elements(tower, set_);
  const bool v = is_vandermonde(tower, set);
  emit({{"size", set.size()}, {"vandermonde", v}}, "", out_);
  return v ? kExitOk : kExitFalse;
}

int Runner::cmd_autos_check() {
  const ArcFile arc = read_arc(arc_path_, in_);
  const FieldTower& tower = arc.tower;
  const NamedMap map = parse_map(tower, maps_.front(), params_);
  const StabilizeResult res = stabilizes(tower, map.realized, arc.points);
  json j = named_map_json(tower, map);
  j["stabilizes"] = res.holds;
  if (!res.holds) {
    j["witness"] = {{"point_hex", to_hex(tower, *res.witness)},
                    {"image_at_infinity", res.witness_image->at_infinity},
                    {"image_hex", to_hex(tower, res.witness_image->value)}};
  }
  emit(j, "", out_);
  return res.holds ? kExitOk : kExitFalse;
}

int Runner::cmd_autos_orbits() {
  const ArcFile arc = read_arc(arc_path_, in_);
  const FieldTower& tower = arc.tower;
  std::vector<Collineation> gens;
  json used = json::array();
  for (const auto& spec : maps_) {
    const NamedMap map = parse_map(tower, spec, {});
    gens.push_back(map.realized);
    used.push_back(named_map_json(tower, map));
  }
  if (kernel_) {
    for (const auto& g : trace_kernel_generators(tower)) gens.push_back(g);
  }
  json orbit_list = json::array();
  if (on_ == "points") {
    std::vector<ProjPoint> pts;
    for (FieldElement x : arc.points) pts.push_back(ProjPoint::affine(x));
    for (const auto& orbit : orbits(tower, gens, pts)) {
      json o = json::array();
      for (const ProjPoint& p : orbit) o.push_back(to_hex(tower, p.value));
      orbit_list.push_back(std::move(o));
    }
  } else {
    for (const auto& orbit : orbits(tower, gens, t_secants(tower, arc.points, arc.claimed_t))) {
      json o = json::array();
      for (const Line& l : orbit) o.push_back(line_to_json(tower, l));
      orbit_list.push_back(std::move(o));
    }
  }
  emit({{"generators", used}, {"kernel", kernel_}, {"on", on_}, {"orbits", orbit_list}}, "", out_);
  return kExitOk;
}

int Runner::cmd_autos_translation() {
  const ArcFile arc = read_arc(arc_path_, in_);
  const FieldTower& tower = arc.tower;
  Line l0 = Line::affine(FieldElement(1), FieldElement(0));
  if (!l0_.empty()) l0 = line_from_json(tower, {{"u_hex", l0_[0]}, {"mu_hex", l0_[1]}});
  const TranslationReport rep = verify_translation_arc(tower, arc.points, arc.claimed_t, l0);
  emit({{"l0", line_to_json(tower, l0)},
        {"verdict", to_string(rep.verdict)},
        {"stabilizer_order", rep.stabilizer_order},
        {"elation_property", rep.elation_property},
        {"translation_property", rep.translation_property}},
       "", out_);
  return rep.verdict == TranslationVerdict::translation ? kExitOk : kExitFalse;
}

int Runner::cmd_autos_closure() {
  const FieldTower tower = make_tower(tower_);
  std::vector<Collineation> gens;
  for (const auto& spec : maps_) gens.push_back(parse_map(tower, spec, {}).realized);
  if (kernel_) {
    for (const auto& g : trace_kernel_generators(tower)) gens.push_back(g);
  }
  try {
    emit({{"order", group_closure(tower, gens, cap_)}, {"cap", cap_}}, "", out_);
  } catch (const std::length_error&) {
    emit({{"overflow", true}, {"cap", cap_}}, "", out_);
    return kExitFalse;
  }
  return kExitOk;
}

int Runner::cmd_autos_quotient() {
  const ExampleName name = example_from_string(example_);
  std::optional<std::uint32_t> modulus;
  if (!tower_.modulus.empty()) modulus = parse_hex(tower_.modulus);
  const ExampleFixture fx = example_fixture(name, tower_.m, modulus);
  const NamedMap tau = make_example_tau(fx, name);
  try {
    const QuotientOrder q = example_quotient_order(fx, name, cap_);
    emit({{"example", example_},
          {"tau", named_map_json(fx.tower, tau)},
          {"group_order", q.group_order},
          {"kernel_order", q.kernel_order},
          {"quotient_order", q.quotient_order}},
         "", out_);
  } catch (const std::length_error&) {
    emit({{"overflow", true}, {"cap", cap_}}, "", out_);
    return kExitFalse;
  }
  return kExitOk;
}

int Runner::cmd_exponents() {
  const ExponentKind kind = kind_ == "D" ? ExponentKind::D
                            : kind_ == "Dprime" ? ExponentKind::Dprime
                                                : ExponentKind::E;
  const ExponentSet set = gen_exponents(kind, tower_.m);
  for (std::size_t i = 0; i < set.values.size(); ++i) {
    out_ << (i ? " " : "") << set.values[i];
  }
  out_ << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Runner runner(in, out, err);
  return runner.run(args);
}

}  // namespace kmarc::cli
