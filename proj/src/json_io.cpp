#include "fid/json_io.hpp"

#include "fid/errors.hpp"

namespace fid {

namespace {

Json polynomial_json(const Polynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.monomial_coeffs()) coeffs.push_back(to_fraction_string(c));
  if (coeffs.empty()) coeffs.push_back("0/1");
  return coeffs;
}

Json range_json(DegreeRange r) { return Json::array({r.first, r.last}); }

BigInt parse_bigint(const Json& v) {
  try {
    if (v.is_string()) return BigInt(v.get<std::string>());
    if (v.is_number_integer()) return BigInt(std::to_string(v.get<long long>()));
  } catch (const std::invalid_argument&) {
  }
  throw Error(ErrorKind::InvalidArgument, "expected an integer, got " + v.dump());
}

}  // namespace

Json to_json(const Decomposition& d) {
  Json terms = Json::array();
  for (const auto& [p, c] : d.terms())
    terms.push_back({{"partition", p.parts()}, {"multiplicity", c.get_str()}});
  return {{"n", d.degree()}, {"terms", std::move(terms)}};
}

Decomposition decomposition_from_json(const Json& j) {
  Decomposition d(j.at("n").get<int>());
  for (const auto& t : j.at("terms"))
    d.add(Partition(t.at("partition").get<std::vector<int>>()), parse_bigint(t.at("multiplicity")));
  return d;
}

Json to_json(const ExponentialFit& fit) {
  Json polys = Json::array();
  for (const auto& p : fit.function.parts) polys.push_back(polynomial_json(p));
  return {{"bases", fit.function.bases()},
          {"polynomials", std::move(polys)},
          {"fitted_range", range_json(fit.fitted)},
          {"validated_range", range_json(fit.validated)},
          {"exact", true}};
}

Json to_json(const PolynomialFit& fit) {
  return {{"bases", 1},
          {"polynomials", Json::array({polynomial_json(fit.function)})},
          {"degree", fit.function.degree()},
          {"fitted_range", range_json(fit.fitted)},
          {"validated_range", range_json(fit.validated)},
          {"exact", true}};
}

Json to_json(const Plateau& plateau) {
  Json values = Json::array();
  for (const auto& v : plateau.values) values.push_back(v.get_str());
  return {{"value", plateau.value.get_str()},
          {"onset", plateau.onset},
          {"proven_bound", plateau.proven_bound},
          {"within_bound", plateau.onset <= plateau.proven_bound},
          {"values", std::move(values)}};
}

Json to_json(const StabilityReport& report) {
  auto verdict = [](const ConditionVerdict& v) {
    return Json{{"holds", v.holds}, {"tested_range", range_json(v.tested)}, {"witness", v.witness}};
  };
  Json probes = Json::array();
  for (const auto& p : report.probes) {
    Json j = to_json(p.plateau);
    j["lambda"] = p.probe.core.parts();
    j["pads"] = p.probe.pads;
    probes.push_back(std::move(j));
  }
  return {{"injectivity", verdict(report.injectivity)},
          {"generation", verdict(report.generation)},
          {"padded_multiplicities", std::move(probes)},
          {"all_hold", report.all_hold()}};
}

Series series_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("series") || !j.at("series").is_object())
    throw Error(ErrorKind::InvalidArgument, "expected {\"series\": {\"n\": value, ...}}");
  Series s;
  for (const auto& [key, value] : j.at("series").items()) {
    std::size_t used = 0;
    int n = 0;
    try {
      n = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size()) throw Error(ErrorKind::InvalidArgument, "bad degree key '" + key + "'");
    s[n] = parse_bigint(value);
  }
  return s;
}

}  // namespace fid
