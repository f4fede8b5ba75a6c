#include "clark/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>

namespace clark {

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open input file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

namespace {

double number(const json& j, const char* what) {
  if (!j.is_number()) throw SchemaError(std::string(what) + " must be a number");
  double v = j.get<double>();
  if (!std::isfinite(v)) throw SchemaError(std::string(what) + " must be finite");
  return v;
}

void only_keys(const json& j, std::set<std::string> allowed, const char* what) {
  if (!j.is_object()) throw SchemaError(std::string(what) + " must be a JSON object");
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) throw SchemaError(std::string(what) + ": unknown field \"" + k + "\"");
}

std::vector<Complex> complex_list(const json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array of [re, im] pairs");
  std::vector<Complex> out;
  for (const auto& c : j) out.push_back(parse_complex(c));
  return out;
}

double nullable(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

}  // namespace

Complex parse_complex(const json& j) {
  if (!j.is_array() || j.size() != 2) throw SchemaError("complex numbers are [re, im] pairs");
  return {number(j[0], "real part"), number(j[1], "imaginary part")};
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

InnerFunction1D parse_function(const json& j) {
  only_keys(j, {"unimodular", "monomial", "blaschke_zeros", "singular_atoms"}, "function spec");
  double a = j.contains("unimodular") ? number(j["unimodular"], "unimodular") : 0.0;
  int k = 0;
  if (j.contains("monomial")) {
    if (!j["monomial"].is_number_integer()) throw SchemaError("monomial must be an integer");
    k = j["monomial"].get<int>();
  }
  std::vector<Complex> zeros;
  if (j.contains("blaschke_zeros")) zeros = complex_list(j["blaschke_zeros"], "blaschke_zeros");
  std::vector<SingularAtom> atoms;
  if (j.contains("singular_atoms")) {
    if (!j["singular_atoms"].is_array()) throw SchemaError("singular_atoms must be an array");
    for (const auto& s : j["singular_atoms"]) {
      only_keys(s, {"angle", "mass"}, "singular atom");
      if (!s.contains("angle") || !s.contains("mass")) throw SchemaError("singular atom needs angle and mass");
      atoms.push_back({TorusPoint(number(s["angle"], "angle")), number(s["mass"], "mass")});
    }
  }
  try {
    return InnerFunction1D(a, k, std::move(zeros), std::move(atoms));
  } catch (const std::logic_error& e) {
    throw SchemaError(e.what());
  }
}

json function_to_json(const InnerFunction1D& f) {
  json j;
  j["unimodular"] = f.unimodular_angle();
  j["monomial"] = f.monomial_power();
  j["blaschke_zeros"] = json::array();
  for (Complex z : f.zeros()) j["blaschke_zeros"].push_back(complex_to_json(z));
  j["singular_atoms"] = json::array();
  for (const auto& s : f.singular_atoms()) j["singular_atoms"].push_back({{"angle", s.xi.theta}, {"mass", s.mass}});
  return j;
}

ProductInner parse_product(const json& j) {
  only_keys(j, {"phi", "psi"}, "product spec");
  if (!j.contains("phi") || !j.contains("psi")) throw SchemaError("product spec needs phi and psi");
  return {parse_function(j["phi"]), parse_function(j["psi"])};
}

RIF_n1 parse_rif(const json& j) {
  only_keys(j, {"p1", "p2", "n"}, "RIF spec");
  if (!j.contains("p1") || !j.contains("p2") || !j.contains("n")) throw SchemaError("RIF spec needs p1, p2 and n");
  if (!j["n"].is_number_integer()) throw SchemaError("n must be an integer");
  try {
    return RIF_n1(Poly1(complex_list(j["p1"], "p1")), Poly1(complex_list(j["p2"], "p2")), j["n"].get<int>());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
}

json measure1d_to_json(const DiscreteMeasure1D& mu) {
  json j;
  j["atoms"] = json::array();
  for (const auto& a : mu.atoms) j["atoms"].push_back({{"angle", a.point.theta}, {"weight", a.weight}});
  j["tail_bound"] = mu.tail_bound;
  if (!mu.generator_id.empty()) j["generator_id"] = mu.generator_id;
  j["accumulation_points"] = json::array();
  for (const auto& p : mu.accumulation_points) j["accumulation_points"].push_back(p.theta);
  return j;
}

json report_to_json(const VerificationReport& r) {
  json j;
  j["seed"] = r.seed;
  j["identity_residuals"] = json::array();
  for (const auto& x : r.identity_residuals) {
    json z = json::array();
    for (Complex c : x.z) z.push_back(complex_to_json(c));
    j["identity_residuals"].push_back({{"z", z},
                                       {"lhs", x.lhs},
                                       {"rhs", x.rhs},
                                       {"relative_error", x.relative_error},
                                       {"allowed", x.allowed}});
  }
  if (r.mass)
    j["mass"] = {{"computed", r.mass->computed},
                 {"expected", r.mass->expected},
                 {"error", r.mass->error},
                 {"allowed", r.mass->allowed}};
  else
    j["mass"] = nullptr;
  j["fourier"] = json::array();
  for (const auto& f : r.fourier)
    j["fourier"].push_back({{"k", {f.k[0], f.k[1]}}, {"modulus", f.modulus}, {"allowed", f.allowed}});
  j["support"] = json::array();
  for (const auto& s : r.support) {
    json d = std::isfinite(s.distance) ? json(s.distance) : json(nullptr);
    j["support"].push_back({{"point", {complex_to_json(s.point[0]), complex_to_json(s.point[1])}},
                            {"distance", d},
                            {"exempt", s.exempt}});
  }
  j["passed"] = r.passed;
  j["tolerances"] = {{"identity_relative", r.tolerances.identity_relative},
                     {"mass_relative", r.tolerances.mass_relative},
                     {"fourier_absolute", r.tolerances.fourier_absolute},
                     {"support", r.tolerances.support}};
  return j;
}

VerificationReport report_from_json(const json& j) {
  try {
    VerificationReport r;
    r.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& x : j.at("identity_residuals")) {
      IdentityResidual e;
      for (const auto& c : x.at("z")) e.z.push_back(parse_complex(c));
      e.lhs = x.at("lhs").get<double>();
      e.rhs = x.at("rhs").get<double>();
      e.relative_error = x.at("relative_error").get<double>();
      e.allowed = x.at("allowed").get<double>();
      r.identity_residuals.push_back(std::move(e));
    }
    if (!j.at("mass").is_null()) {
      const auto& m = j["mass"];
      r.mass = MassResult{m.at("computed").get<double>(), m.at("expected").get<double>(),
                          m.at("error").get<double>(), m.at("allowed").get<double>()};
    }
    for (const auto& f : j.at("fourier"))
      r.fourier.push_back({{f.at("k")[0].get<int>(), f.at("k")[1].get<int>()},
                           f.at("modulus").get<double>(),
                           f.at("allowed").get<double>()});
    for (const auto& s : j.at("support")) {
      SupportEntry e;
      e.point = {parse_complex(s.at("point")[0]), parse_complex(s.at("point")[1])};
      e.distance = nullable(s.at("distance"));
      e.exempt = s.at("exempt").get<bool>();
      r.support.push_back(e);
    }
    r.passed = j.at("passed").get<bool>();
    const auto& t = j.at("tolerances");
    r.tolerances = {t.at("identity_relative").get<double>(), t.at("mass_relative").get<double>(),
                    t.at("fourier_absolute").get<double>(), t.at("support").get<double>()};
    return r;
  } catch (const json::exception& e) {
    throw SchemaError(std::string("verification report: ") + e.what());
  }
}

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

}  // namespace clark
