#include "germdeform/io.hpp"

#include <cmath>
#include <cstdio>

#include "germdeform/error.hpp"

namespace germdeform {

namespace {

std::string format_number(double v) {
  if (!std::isfinite(v)) return "null";
  if (v == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

bool is_scalar(const json& j) { return !j.is_array() && !j.is_object(); }

void dump_into(const json& j, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  switch (j.type()) {
    case json::value_t::null: out += "null"; break;
    case json::value_t::boolean: out += j.get<bool>() ? "true" : "false"; break;
    case json::value_t::number_integer: out += std::to_string(j.get<std::int64_t>()); break;
    case json::value_t::number_unsigned: out += std::to_string(j.get<std::uint64_t>()); break;
    case json::value_t::number_float: out += format_number(j.get<double>()); break;
    case json::value_t::string: out += j.dump(); break;
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        break;
      }
      const bool flat = std::all_of(j.begin(), j.end(), is_scalar);
      out += "[";
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += flat ? ", " : ",";
        first = false;
        if (!flat) out += "\n" + pad;
        dump_into(e, out, indent + 2);
      }
      if (!flat) out += "\n" + close;
      out += "]";
      break;
    }
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        break;
      }
      out += "{";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",";
        first = false;
        out += "\n" + pad + json(it.key()).dump() + ": ";
        dump_into(it.value(), out, indent + 2);
      }
      out += "\n" + close + "}";
      break;
    }
    default: out += "null"; break;
  }
}

double num(const json& j, const char* what) {
  if (!j.is_number()) throw Error(ErrorCode::InvalidInput, std::string("expected a number for ") + what);
  return j.get<double>();
}

int exponent(const json& j) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) throw Error(ErrorCode::InvalidInput, "exponents must be integers");
  const auto v = j.get<std::int64_t>();
  if (v < 0 || v > 1000) throw Error(ErrorCode::InvalidInput, "exponent out of range");
  return static_cast<int>(v);
}

}  // namespace

std::string dump_json(const json& j) {
  std::string out;
  dump_into(j, out, 0);
  out += "\n";
  return out;
}

json complex_to_json(cplx c) {
  auto clean = [](double v) { return v == 0.0 ? 0.0 : v; };
  return json::array({clean(c.real()), clean(c.imag())});
}

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) return {num(j[0], "real part"), num(j[1], "imaginary part")};
  throw Error(ErrorCode::InvalidInput, "complex numbers are [re, im]");
}

std::vector<cplx> complex_list_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidInput, "expected a list of complex numbers");
  std::vector<cplx> v;
  for (const auto& e : j) v.push_back(complex_from_json(e));
  return v;
}

json complex_list_to_json(std::span<const cplx> v) {
  json a = json::array();
  for (const cplx c : v) a.push_back(complex_to_json(c));
  return a;
}

std::vector<Term> terms_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorCode::InvalidInput, "terms must be a nonempty list");
  std::vector<Term> out;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() < 3 || t.size() > 4) throw Error(ErrorCode::InvalidInput, "term is [a, b, re, im]");
    out.push_back({exponent(t[0]), exponent(t[1]), {num(t[2], "coefficient"), t.size() == 4 ? num(t[3], "coefficient") : 0.0}});
  }
  return out;
}

json terms_to_json(const BiPoly& p) {
  json a = json::array();
  for (const auto& t : p.terms()) a.push_back(json::array({t.a, t.b, t.c.real(), t.c.imag()}));
  return a;
}

Germ germ_from_json(const json& j, int order_override) {
  if (!j.is_object() || !j.contains("terms")) throw Error(ErrorCode::InvalidInput, "germ needs \"terms\"");
  std::optional<double> d1, d2;
  if (j.contains("delta1")) d1 = num(j["delta1"], "delta1");
  if (j.contains("delta2")) d2 = num(j["delta2"], "delta2");
  Germ g = normalize_germ(terms_from_json(j["terms"]), d1, d2);
  if (order_override > 0) {
    if (order_override > 128) throw Error(ErrorCode::InvalidInput, "order must be <= 128");
    if (order_override <= g.r) throw Error(ErrorCode::InvalidInput, "order must exceed r");
    g.order = order_override;
  }
  return g;
}

std::optional<std::vector<BiPoly>> basis_from_json(const json& j) {
  if (!j.is_object() || !j.contains("basis")) return std::nullopt;
  std::vector<BiPoly> out;
  for (const auto& e : j["basis"]) out.push_back(BiPoly::from_terms(terms_from_json(e)));
  return out;
}

TriPoly tripoly_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorCode::InvalidInput, "F_terms must be a nonempty list");
  std::vector<TriPoly::TriTerm> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() < 4 || t.size() > 5) throw Error(ErrorCode::InvalidInput, "F term is [a, b, k, re, im]");
    terms.push_back({exponent(t[0]), exponent(t[1]), exponent(t[2]),
                     {num(t[3], "coefficient"), t.size() == 5 ? num(t[4], "coefficient") : 0.0}});
  }
  return TriPoly::from_terms(terms);
}

namespace {

json names(const std::vector<BiPoly>& v) {
  json a = json::array();
  for (const auto& p : v) a.push_back(p.to_string());
  return a;
}

}  // namespace

json analyze_to_json(const Germ& g, const QuotientData& q) {
  json j;
  j["d"] = g.d;
  j["r"] = g.r;
  j["f"] = g.f.to_string();
  j["basis"] = names(q.basis_g);
  j["dual_basis"] = names(q.dual_h);
  j["divisor_orders"] = q.divisor_orders;
  j["discriminant"] = complex_list_to_json(g.disc.coeffs());
  j["x_scale"] = g.x_scale;
  j["delta1"] = g.delta1;
  j["delta2"] = g.delta2;
  j["radii_source"] = (g.delta1_given && g.delta2_given) ? "input" : "default margins";
  j["order"] = g.order;
  j["dual_certificate"] = q.dual_certificate;
  j["pairing_condition"] = q.condition;
  return j;
}

json family_to_json(const UniversalFamily& fam) {
  json j;
  j["r"] = fam.r;
  j["basis"] = names(fam.basis());
  j["dual_basis"] = names(fam.dual());
  j["param_box"] = fam.param_box;
  j["certified_radius"] = fam.certified_radius;
  j["delta1"] = fam.germ.delta1;
  j["delta2"] = fam.germ.delta2;
  j["x_scale"] = fam.germ.x_scale;
  std::string g = fam.germ.f.to_string();
  for (int i = 0; i < fam.r; ++i) g += " + t" + std::to_string(i + 1) + "*(" + fam.basis()[static_cast<std::size_t>(i)].to_string() + ")";
  j["G"] = g;
  return j;
}

json fiber_report_to_json(const FiberReport& rep) {
  json j;
  j["t"] = complex_list_to_json(rep.t);
  j["smooth"] = rep.smooth;
  j["simple_branch"] = rep.simple_branch;
  j["multiplicity_sum"] = rep.multiplicity_sum;
  j["dis_value"] = complex_list_to_json(rep.dis_value);
  json bps = json::array();
  for (const auto& bp : rep.branch_points) {
    bps.push_back({{"x", complex_to_json(bp.x)},
                   {"y", complex_to_json(bp.y)},
                   {"multiplicity", bp.multiplicity},
                   {"smooth", bp.smooth},
                   {"simple", bp.simple}});
  }
  j["branch_points"] = bps;
  return j;
}

FiberReport fiber_report_from_json(const json& j) {
  FiberReport rep;
  rep.t = complex_list_from_json(j.at("t"));
  rep.smooth = j.at("smooth").get<bool>();
  rep.simple_branch = j.at("simple_branch").get<bool>();
  rep.multiplicity_sum = j.at("multiplicity_sum").get<int>();
  rep.dis_value = complex_list_from_json(j.at("dis_value"));
  for (const auto& b : j.at("branch_points")) {
    BranchPoint bp;
    bp.x = complex_from_json(b.at("x"));
    bp.y = complex_from_json(b.at("y"));
    bp.multiplicity = b.at("multiplicity").get<int>();
    bp.smooth = b.at("smooth").get<bool>();
    bp.simple = b.at("simple").get<bool>();
    rep.branch_points.push_back(bp);
  }
  return rep;
}

json classify_result_to_json(const ClassifyResult& res, const PullbackReport& pull) {
  json j;
  json samples = json::array();
  for (std::size_t i = 0; i < res.s.size(); ++i) samples.push_back({{"s", res.s[i]}, {"t", complex_list_to_json(res.phi[i])}});
  j["phi_samples"] = samples;
  j["t_final"] = complex_list_to_json(res.t_final());
  json u = json::array();
  for (const auto& c : res.u_final) u.push_back(complex_list_to_json(c.coeffs()));
  j["u_final"] = u;
  j["residual"] = res.residual;
  j["residual_tol"] = res.residual_tol;
  j["halving_diff"] = res.halving_diff;
  j["steps"] = res.steps;
  j["nodes"] = res.nodes;
  j["order"] = res.order;
  j["rho"] = res.rho;
  j["pullback"] = {{"residual", pull.residual},
                   {"unit_deviation_at_0", pull.unit_deviation},
                   {"holomorphy_defect", pull.holomorphy_defect}};
  return j;
}

}  // namespace germdeform
