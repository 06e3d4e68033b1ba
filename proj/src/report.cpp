#include "hyperlog/report.hpp"

#include <sstream>

namespace hyperlog {

using identities::RouteStatus;
using identities::Validity;
using identities::VerificationRecord;

json route_json(const RouteStatus& r, unsigned digits) {
  json j;
  j["computed"] = r.computed;
  if (r.computed) {
    j["value"] = to_decimal(r.value, digits);
    j["error"] = to_decimal(r.error, 3);
    j["evaluations"] = r.evaluations;
  } else {
    j["note"] = r.note;
  }
  return j;
}

json verification_json(const VerificationRecord& rec, unsigned digits) {
  json j;
  j["id"] = rec.id;
  json params;
  params["alpha"] = to_string(rec.params.alpha);
  if (rec.params.beta) params["beta"] = to_string(*rec.params.beta);
  if (rec.params.gamma) params["gamma"] = to_string(*rec.params.gamma);
  j["parameters"] = params;
  j["precision"] = rec.precision;
  j["tolerance"] = to_decimal(rec.tolerance, 3);
  j["orientation"] = rec.orientation;
  if (!rec.orientation_note.empty()) j["orientation_note"] = rec.orientation_note;
  json routes;
  routes["series"] = route_json(rec.series_a, digits);
  routes["quadrature"] = route_json(rec.boundary_b, digits);
  routes["closed_form"] = route_json(rec.closed_c, digits);
  routes["double_integral"] = route_json(rec.double_d, digits);
  j["routes"] = routes;
  json res;
  for (const auto& [label, value] : rec.residuals) res[label] = to_decimal(value, 3);
  j["residuals"] = res;
  if (rec.has_closed_form) {
    json cf;
    cf["text"] = rec.closed_form.to_string();
    cf["tree"] = logcomb_to_json(rec.closed_form);
    j["closed_form"] = cf;
  }
  j["pass"] = rec.pass;
  return j;
}

json validity_json(const Validity& v) {
  json j;
  j["in_box"] = v.in_box;
  j["route_series"] = v.route_a;
  j["route_quadrature"] = v.route_b;
  j["route_closed_form"] = v.route_c;
  j["route_double_integral"] = v.route_d;
  j["continuation_ok"] = v.continuation_ok;
  j["needs_regularization"] = v.route_b_needs_poch;
  if (!v.reason.empty()) j["reason"] = v.reason;
  return j;
}

json orbits_json(const characters::ExceptionalReport& rep) {
  json j;
  j["m"] = rep.m;
  j["e_m"] = rep.e_m;
  j["o_m"] = rep.o_m;
  json orbits = json::array();
  for (const auto& o : rep.orbits) {
    json jo;
    jo["representative"] = o.rep;
    jo["size"] = o.members.size();
    json mem = json::array();
    for (const auto& t : o.members) mem.push_back(t);
    jo["members"] = mem;
    orbits.push_back(jo);
  }
  j["orbits"] = orbits;
  return j;
}

std::string render_verification_text(const VerificationRecord& rec, unsigned digits) {
  std::ostringstream os;
  os << rec.id << " at alpha = " << to_string(rec.params.alpha);
  if (rec.params.beta) os << ", beta = " << to_string(*rec.params.beta);
  if (rec.params.gamma) os << ", gamma = " << to_string(*rec.params.gamma);
  os << "\n";
  auto line = [&](const char* name, const RouteStatus& r) {
    os << "  " << name << ": ";
    if (r.computed)
      os << to_decimal(r.value, digits) << "  (err ~ " << to_decimal(r.error, 3) << ")";
    else
      os << "skipped: " << r.note;
    os << "\n";
  };
  line("series          (A)", rec.series_a);
  line("quadrature      (B)", rec.boundary_b);
  line("closed form     (C)", rec.closed_c);
  line("double integral (D)", rec.double_d);
  for (const auto& [label, value] : rec.residuals)
    os << "  residual " << label << " = " << to_decimal(value, 3) << "\n";
  if (rec.has_closed_form)
    os << "  F = " << rec.closed_form.to_string() << "\n";
  if (rec.orientation != 1 || !rec.orientation_note.empty())
    os << "  orientation " << rec.orientation << ": " << rec.orientation_note << "\n";
  os << "  " << (rec.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace hyperlog
