#pragma once

#include <string>

#include "json.hpp"

#include "fcnet/complexity.hpp"

namespace fcnet::complexity {

nlohmann::json to_json(const ComplexityReport& report);
ComplexityReport report_from_json(const nlohmann::json& j);

/// Header `j,avg_information,linear_reference,abs_difference`, one row per j,
/// then a `c_f,,,<value>` footer. Values use round-trip precision.
std::string to_csv(const ComplexityReport& report);

struct ParsedCurve {
  std::vector<CurvePoint> points;
  std::vector<double> abs_differences;
  double c_f = 0.0;
};

ParsedCurve parse_curve_csv(const std::string& text);

}  // namespace fcnet::complexity
