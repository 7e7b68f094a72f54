/**
 * @file json_io.cpp
 * @brief JSON encoders/decoders for rationals, polynomials, parameters,
 *        spaces, tuples, and solver results.
 */

#include "bp/json_io.hpp"

#include <string>
#include <vector>

#include "bp/errors.hpp"

namespace bp {

json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error(ErrorCode::InvalidInput,
              "expected a rational encoded as \"p\" or \"p/q\"");
}

json poly_to_json(const Poly& p) {
  json out = json::array();
  if (p.is_zero()) {
    out.push_back("0");
    return out;
  }
  for (int n = 0; n <= p.degree(); ++n) out.push_back(p.coeff(n).str());
  return out;
}

Poly poly_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw Error(ErrorCode::InvalidInput,
                "expected a non-empty coefficient array");
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(j.size());
  for (const json& c : j) coeffs.push_back(rational_from_json(c));
  return Poly::from_coeffs(coeffs);
}

json params_to_json(const Params& pr) {
  json out;
  out["m"] = json::array();
  for (const Rational& mi : pr.m) out["m"].push_back(rational_to_json(mi));
  out["l"] = pr.l;
  out["k"] = rational_to_json(pr.k);
  return out;
}

Params params_from_json(const json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("l") || !j.contains("k")) {
    throw Error(ErrorCode::InvalidInput,
                "expected an object with fields m, l, k");
  }
  std::vector<Rational> m;
  for (const json& mi : j.at("m")) m.push_back(rational_from_json(mi));
  std::vector<int> l = j.at("l").get<std::vector<int>>();
  return Params::make(m, l, rational_from_json(j.at("k")));
}

json ytuple_to_json(const YTuple& yt) {
  json out = json::array();
  for (const Poly& y : yt.ys) out.push_back(poly_to_json(y));
  return out;
}

YTuple ytuple_from_json(const json& j) {
  if (!j.is_array()) {
    throw Error(ErrorCode::InvalidInput, "expected an array of polynomials");
  }
  YTuple out;
  for (const json& y : j) out.ys.push_back(poly_from_json(y));
  return out;
}

json space_to_json(const PolySpace& space) {
  json out;
  out["kind"] = space.kind == SpaceKind::V ? "V" : "U";
  out["params"] = params_to_json(space.params);
  json degrees = json::array();
  json basis = json::array();
  for (const Poly& b : space.basis) {
    degrees.push_back(b.degree());
    basis.push_back(poly_to_json(b));
  }
  out["degrees"] = degrees;
  out["basis"] = basis;
  return out;
}

json genericity_to_json(const GenericityReport& rep) {
  json out;
  out["generic"] = rep.generic;
  out["squarefree"] = rep.squarefree;
  out["neighbor_coprime"] = rep.neighbor_coprime;
  out["weight_coprime"] = rep.weight_coprime;
  if (!rep.generic) out["witness"] = rep.witness;
  return out;
}

namespace {

json point_to_json(const BethePoint& point) {
  json out = json::array();
  if (point.is_exact()) {
    for (const auto& level : point.exact) {
      json group = json::array();
      for (const Rational& t : level) group.push_back(rational_to_json(t));
      out.push_back(group);
    }
  } else {
    for (const auto& level : point.numeric) {
      json group = json::array();
      for (const auto& t : level)
        group.push_back(json{{"re", t.real()}, {"im", t.imag()}});
      out.push_back(group);
    }
  }
  return out;
}

std::string no_solution_witness(const BaeResult& res) {
  const auto& ys = res.tuple.ys;
  if (ys.size() >= 2 && ys[0] == ys[1] * ys[1]) return "y1 = y2^2";
  return res.witness.witness;
}

}  // namespace

json bae_result_to_json(const BaeResult& res) {
  json out;
  switch (res.outcome) {
    case BaeOutcome::Solution:
      out["outcome"] = "solution";
      out["point"] = point_to_json(res.point);
      out["residual"] = res.residual;
      break;
    case BaeOutcome::NoSolution:
      out["outcome"] = "no_solution";
      out["witness"] = no_solution_witness(res);
      break;
    case BaeOutcome::ComplexRootsDetected:
      out["outcome"] = "complex_roots_detected";
      break;
  }
  return out;
}

}  // namespace bp
