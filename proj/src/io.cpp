#include "hooklab/io.hpp"

#include <stdexcept>

namespace hooklab {

nlohmann::json poly_to_json(const Poly& p) {
  auto out = nlohmann::json::array();
  if (p.is_zero()) {
    out.push_back("0");
    return out;
  }
  for (const auto& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

Poly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array of strings");
  std::vector<Rational> coeffs;
  for (const auto& c : j) {
    if (!c.is_string()) throw std::invalid_argument("polynomial coefficients must be strings");
    coeffs.push_back(parse_rational(c.get<std::string>()));
  }
  return Poly(std::move(coeffs));
}

std::string poly_to_csv_cell(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    if (i) out += ';';
    out += to_string(p.coefficients()[i]);
  }
  return out;
}

nlohmann::json partition_to_json(const Partition& p) {
  auto out = nlohmann::json::array();
  for (int part : p.parts()) out.push_back(part);
  return out;
}

Partition partition_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("partition JSON must be an array of integers");
  std::vector<int> parts;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw std::invalid_argument("partition parts must be integers");
    parts.push_back(x.get<int>());
  }
  return Partition(std::move(parts));
}

nlohmann::json series_to_json(const Series& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(poly_to_json(c));
  return {{"truncation", s.truncation()}, {"coeffs", coeffs}};
}

Series series_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("truncation") || !j.contains("coeffs") || !j["truncation"].is_number_unsigned() ||
      !j["coeffs"].is_array()) {
    throw std::invalid_argument("series JSON must be {truncation: unsigned, coeffs: [...]}");
  }
  const auto n = j["truncation"].get<unsigned>();
  std::vector<Poly> coeffs;
  for (const auto& c : j["coeffs"]) coeffs.push_back(poly_from_json(c));
  if (coeffs.size() != n + 1) throw std::invalid_argument("series JSON must carry truncation+1 coefficients");
  return Series(n, std::move(coeffs));
}

nlohmann::json fit_report_to_json(const FitReport& report) {
  return {{"polynomial", poly_to_json(report.polynomial)},
          {"degree", report.polynomial.degree()},
          {"samples", {report.first_sample, report.last_sample}},
          {"verified", report.verified}};
}

}  // namespace hooklab
