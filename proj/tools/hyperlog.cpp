// Command-line surface: classification of Hodge character tuples, orbit
// enumeration against the reference table, and multi-route verification of
// the hypergeometric identities with exact log closed forms.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "hyperlog/report.hpp"

using namespace hyperlog;
namespace ids = hyperlog::identities;
namespace chars = hyperlog::characters;

namespace {

struct RunConfig {
  unsigned precision = 30;
  std::string tolerance = "1e-8";
  std::string format = "text";
  unsigned long seed = 1;

  Real tol() const { return Real(tolerance); }

  void validate() const {
    if (precision < 15) throw Error("precision must be at least 15 digits");
    Real floor_tol = pow(Real(10), -static_cast<int>(precision) + 5);
    if (tol() < floor_tol)
      throw Error("tolerance must be at least 10^(-precision+5)");
  }
};

std::vector<long long> parse_int_tuple(const std::string& s, size_t n) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
  if (out.size() != n) throw Error("expected " + std::to_string(n) + " comma-separated values");
  return out;
}

std::vector<Rational> parse_rat_tuple(const std::string& s, size_t n) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.size() != n) throw Error("expected " + std::to_string(n) + " comma-separated rationals");
  return out;
}

json schema_report(const RunConfig& cfg, const std::string& command, json inputs,
                   json results, json residuals, json closed, json citations,
                   const std::string& status) {
  json j;
  j["command"] = command;
  if (inputs.is_object()) {
    inputs["precision"] = cfg.precision;
    inputs["tolerance"] = cfg.tolerance;
  }
  j["inputs"] = std::move(inputs);
  j["results"] = std::move(results);
  j["residuals"] = std::move(residuals);
  j["closed_form"] = std::move(closed);
  j["citations"] = std::move(citations);
  j["status"] = status;
  return j;
}

void emit(const RunConfig& cfg, const json& report, const std::string& text) {
  if (cfg.format == "json")
    std::cout << report.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_classify(const RunConfig& cfg, int m, const std::string& tuple) {
  auto v = parse_int_tuple(tuple, 4);
  chars::CharacterTuple t = chars::CharacterTuple::make(
      {static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2]),
       static_cast<int>(v[3])},
      m);
  json results;
  std::string text;
  bool hodge = chars::is_hodge(t);
  results["is_hodge"] = hodge;
  if (hodge) {
    auto label = chars::classify(t);
    results["class"] = chars::to_string(label.type);
    if (label.type == chars::ClassType::Type1) {
      results["pairing"] = label.pairing;
    } else if (label.type != chars::ClassType::Exceptional) {
      results["family_alpha"] = to_string(label.family_alpha(m));
    }
    text = std::string(chars::to_string(label.type)) + "\n";
  } else {
    text = "not a Hodge tuple\n";
  }
  json rep = schema_report(
      cfg, "classify", json{{"m", m}, {"tuple", v}}, results, nullptr, nullptr,
      json::array({"eigenspace classification for Hodge cycles on the degree-m surface"}),
      "OK");
  emit(cfg, rep, text);
  return 0;
}

int cmd_orbits(const RunConfig& cfg, int m, const std::string& tuple) {
  json results;
  std::string text;
  if (!tuple.empty()) {
    auto v = parse_int_tuple(tuple, 4);
    chars::CharacterTuple t = chars::CharacterTuple::make(
        {static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2]),
         static_cast<int>(v[3])},
        m);
    auto orbit = chars::galois_orbit(t);
    json mem = json::array();
    std::ostringstream os;
    for (const auto& a : orbit) {
      mem.push_back(a);
      os << "(" << a[0] << "," << a[1] << "," << a[2] << "," << a[3] << ") ";
    }
    results["orbit"] = mem;
    results["size"] = orbit.size();
    text = os.str() + "\n";
  } else {
    auto rep = chars::enumerate_exceptional(m);
    results = orbits_json(rep);
    std::ostringstream os;
    os << "m=" << m << ": e_m=" << rep.e_m << ", o_m=" << rep.o_m << "\n";
    for (const auto& o : rep.orbits)
      os << "  (" << o.rep[0] << "," << o.rep[1] << "," << o.rep[2] << "," << o.rep[3]
         << ")  size " << o.members.size() << "\n";
    text = os.str();
  }
  json rep = schema_report(
      cfg, "orbits", json{{"m", m}, {"tuple", tuple.empty() ? json(nullptr) : json(tuple)}},
      results, nullptr, nullptr,
      json::array({"Galois orbits under the unit group action on character tuples"}),
      "OK");
  emit(cfg, rep, text);
  return 0;
}

int cmd_appendix(const RunConfig& cfg, bool all, int m, const std::string& fixture) {
  std::ifstream in(fixture);
  if (!in) throw Error("cannot open fixture file: " + fixture);
  json fj = json::parse(in);
  int total = 0, matched = 0;
  json detail = json::array();
  std::ostringstream os;
  for (const auto& entry : fj.at("entries")) {
    int em = entry.at("m").get<int>();
    if (!all && em != m) continue;
    ++total;
    auto rep = chars::enumerate_exceptional(em);
    bool ok = rep.e_m == entry.at("e_m").get<long>() &&
              rep.o_m == entry.at("o_m").get<long>();
    std::vector<std::array<int, 4>> want;
    for (const auto& r : entry.at("representatives"))
      want.push_back({r[0].get<int>(), r[1].get<int>(), r[2].get<int>(), r[3].get<int>()});
    std::vector<std::array<int, 4>> got;
    for (const auto& o : rep.orbits) got.push_back(o.rep);
    ok = ok && want == got;
    matched += ok;
    json d;
    d["m"] = em;
    d["expected"] = {{"e_m", entry.at("e_m")}, {"o_m", entry.at("o_m")}};
    d["computed"] = {{"e_m", rep.e_m}, {"o_m", rep.o_m}};
    d["match"] = ok;
    detail.push_back(d);
    os << "m=" << em << ": e_m=" << rep.e_m << " o_m=" << rep.o_m
       << (ok ? "  match" : "  MISMATCH") << "\n";
  }
  bool pass = total > 0 && matched == total;
  os << matched << "/" << total << " m values matched\n";
  json results;
  results["matched"] = matched;
  results["total"] = total;
  results["detail"] = detail;
  json rep = schema_report(cfg, "appendix-check",
                           json{{"all", all}, {"m", all ? json(nullptr) : json(m)}},
                           results, nullptr, nullptr,
                           json::array({fj.value("citation", std::string())}),
                           pass ? "PASS" : "FAIL");
  emit(cfg, rep, os.str());
  return pass ? 0 : 2;
}

json params_json(const ids::Params& p) {
  json j;
  j["alpha"] = to_string(p.alpha);
  if (p.beta) j["beta"] = to_string(*p.beta);
  if (p.gamma) j["gamma"] = to_string(*p.gamma);
  return j;
}

int cmd_verify(const RunConfig& cfg, const std::string& id, const std::string& alpha,
               const std::string& beta, const std::string& gamma, bool no2d,
               int samples) {
  const auto& ident = ids::lookup(id);
  std::vector<ids::Params> points;
  if (samples > 0) {
    points = ids::sample_params(id, samples, cfg.seed);
  } else {
    if (alpha.empty()) throw Error("verify needs --alpha or --samples");
    ids::Params p;
    p.alpha = parse_rational(alpha);
    if (!beta.empty()) p.beta = parse_rational(beta);
    if (!gamma.empty()) p.gamma = parse_rational(gamma);
    auto v = ids::validity(id, p);
    if (!v.ok()) throw Error("no route admits these parameters: " + v.reason);
    points.push_back(p);
  }
  json recs = json::array();
  std::ostringstream os;
  bool pass = true;
  json closed = nullptr;
  for (const auto& p : points) {
    auto rec = ids::verify(id, p, cfg.precision, cfg.tol(), !no2d);
    pass = pass && rec.pass;
    recs.push_back(verification_json(rec, cfg.precision));
    os << render_verification_text(rec, cfg.precision);
    if (rec.has_closed_form && closed.is_null()) {
      closed = json{{"text", rec.closed_form.to_string()},
                    {"tree", logcomb_to_json(rec.closed_form)}};
    }
  }
  json inputs;
  inputs["id"] = id;
  inputs["points"] = json::array();
  for (const auto& p : points) inputs["points"].push_back(params_json(p));
  inputs["seed"] = cfg.seed;
  json residuals = json::array();
  for (const auto& r : recs) residuals.push_back(r.at("residuals"));
  json rep = schema_report(cfg, "verify", inputs, recs, residuals, closed,
                           json::array({ident.citation, ident.statement}),
                           pass ? "PASS" : "FAIL");
  emit(cfg, rep, os.str());
  return pass ? 0 : 2;
}

int cmd_closed_form(const RunConfig& cfg, const std::string& id,
                    const std::string& alpha, const std::string& beta) {
  const auto& ident = ids::lookup(id);
  ids::Params p;
  p.alpha = parse_rational(alpha);
  if (!beta.empty()) p.beta = parse_rational(beta);
  LogCombination F = ids::closed_form(id, p);
  Ball value = F.eval((std::max)(cfg.precision, 50u));
  json results;
  results["text"] = F.to_string();
  results["tree"] = logcomb_to_json(F);
  results["value"] = to_decimal(value.mid, cfg.precision);
  results["radius"] = to_decimal(value.rad, 3);
  std::ostringstream os;
  os << "F = " << F.to_string() << "\n  = " << to_decimal(value.mid, cfg.precision)
     << "\n";
  json rep = schema_report(cfg, "closed-form", json{{"id", id}, {"params", params_json(p)}},
                           results, nullptr,
                           json{{"text", F.to_string()}, {"tree", logcomb_to_json(F)}},
                           json::array({ident.citation, ident.statement}), "OK");
  emit(cfg, rep, os.str());
  return 0;
}

int cmd_eval_f32(const RunConfig& cfg, const std::string& tuple) {
  auto v = parse_rat_tuple(tuple, 3);
  PrecisionGuard guard(cfg.precision + 15);
  auto r = f32_at_1(to_real(v[0]), to_real(v[1]), to_real(v[2]), cfg.tol());
  json results;
  results["value"] = to_decimal(r.value, cfg.precision);
  results["error"] = to_decimal(r.error, 3);
  results["evaluations"] = r.evaluations;
  std::ostringstream os;
  os << "F(1,1," << to_string(v[0]) << "; " << to_string(v[1]) << "," << to_string(v[2])
     << "; 1) = " << to_decimal(r.value, cfg.precision) << "\n";
  json rep = schema_report(cfg, "eval-f32", json{{"parameters", tuple}}, results, nullptr,
                           nullptr, json::array({"series with Levin-u and ratio-tail acceleration"}),
                           "OK");
  emit(cfg, rep, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"special values F(1,1,a;b,c;1): classification, closed forms, verification"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--precision", cfg.precision, "working precision in decimal digits")
      ->envname("PREC");
  app.add_option("--tolerance", cfg.tolerance, "verification tolerance")->envname("TOL");
  app.add_option("--format", cfg.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", cfg.seed, "seed for sampled verification");

  int m = 0;
  std::string tuple, id, alpha, beta, gamma;
  bool all = false, no2d = false;
  int samples = 0;
  std::string fixture = std::string(HYPERLOG_DATA_DIR) + "/appendix_orbits.json";
  if (const char* env = std::getenv("HYPERLOG_APPENDIX")) fixture = env;

  auto* c_classify = app.add_subcommand("classify", "classify a character tuple");
  c_classify->fallthrough();
  c_classify->add_option("--m", m, "common denominator")->required();
  c_classify->add_option("--tuple", tuple, "a0,a1,a2,a3")->required();

  auto* c_orbits = app.add_subcommand("orbits", "Galois orbits (of a tuple, or of the exceptional set)");
  c_orbits->fallthrough();
  c_orbits->add_option("--m", m, "common denominator")->required();
  c_orbits->add_option("--tuple", tuple, "a0,a1,a2,a3 (optional)");

  auto* c_appendix = app.add_subcommand("appendix-check", "regenerate the reference orbit table");
  c_appendix->fallthrough();
  c_appendix->add_flag("--all", all, "check every tabulated m");
  c_appendix->add_option("--m", m, "check a single m");
  c_appendix->add_option("--fixture", fixture, "fixture file path");

  auto* c_verify = app.add_subcommand("verify", "multi-route verification of an identity");
  c_verify->fallthrough();
  c_verify->add_option("--id", id, "identity id")->required();
  c_verify->add_option("--alpha", alpha, "rational parameter p/q");
  c_verify->add_option("--beta", beta, "second parameter (EX0, G1-m, S1-m, P14)");
  c_verify->add_option("--gamma", gamma, "third exponent (P14)");
  c_verify->add_option("--samples", samples, "verify at N seeded points in the box");
  c_verify->add_flag("--no-2d", no2d, "skip the double-integral route");

  auto* c_closed = app.add_subcommand("closed-form", "exact value in Qbar + Qbar log Qbar");
  c_closed->fallthrough();
  c_closed->add_option("--id", id, "identity id")->required();
  c_closed->add_option("--alpha", alpha, "rational parameter p/q")->required();
  c_closed->add_option("--beta", beta, "second parameter");

  auto* c_f32 = app.add_subcommand("eval-f32", "evaluate F(1,1,p3;p4,p5;1)");
  c_f32->fallthrough();
  c_f32->add_option("--tuple", tuple, "p3,p4,p5 as rationals")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.validate();
    if (app.got_subcommand(c_classify)) return cmd_classify(cfg, m, tuple);
    if (app.got_subcommand(c_orbits)) return cmd_orbits(cfg, m, tuple);
    if (app.got_subcommand(c_appendix)) {
      if (!all && m == 0) throw Error("appendix-check needs --all or --m");
      return cmd_appendix(cfg, all, m, fixture);
    }
    if (app.got_subcommand(c_verify))
      return cmd_verify(cfg, id, alpha, beta, gamma, no2d, samples);
    if (app.got_subcommand(c_closed)) return cmd_closed_form(cfg, id, alpha, beta);
    if (app.got_subcommand(c_f32)) return cmd_eval_f32(cfg, tuple);
  } catch (const std::exception& e) {
    json rep = schema_report(cfg,
                             app.get_subcommands().empty()
                                 ? std::string("?")
                                 : app.get_subcommands()[0]->get_name(),
                             nullptr, nullptr, nullptr, nullptr, json::array(),
                             std::string("ERROR: ") + e.what());
    if (cfg.format == "json")
      std::cout << rep.dump(2) << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
