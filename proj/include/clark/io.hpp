#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "clark/product.hpp"
#include "clark/rif.hpp"
#include "clark/verify.hpp"

namespace clark {

using json = nlohmann::json;

// Input does not match the function/product/RIF schema.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json load_json_file(const std::string& path);

// [re, im]
Complex parse_complex(const json& j);
json complex_to_json(Complex z);

// { "unimodular": a, "monomial": k, "blaschke_zeros": [[re,im],...],
//   "singular_atoms": [{"angle": t, "mass": c},...] }, every field optional.
InnerFunction1D parse_function(const json& j);
json function_to_json(const InnerFunction1D& f);

// { "phi": <function>, "psi": <function> }
ProductInner parse_product(const json& j);

// { "p1": [[re,im],...], "p2": [[re,im],...], "n": n }
RIF_n1 parse_rif(const json& j);

json measure1d_to_json(const DiscreteMeasure1D& mu);

json report_to_json(const VerificationReport& r);
VerificationReport report_from_json(const json& j);

// 17 significant digits, locale independent.
std::string format_double(double x);

}  // namespace clark
