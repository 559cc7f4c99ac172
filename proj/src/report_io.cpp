#include "fcnet/report_io.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

#include "fcnet/errors.hpp"

namespace fcnet::complexity {

using nlohmann::json;

namespace {

json series(const std::map<std::size_t, double>& values) {
  json out = json::array();
  for (const auto& [j, v] : values) out.push_back({{"j", j}, {"value", v}});
  return out;
}

std::map<std::size_t, double> series_from(const json& arr) {
  std::map<std::size_t, double> out;
  for (const auto& e : arr) out[e.at("j").get<std::size_t>()] = e.at("value").get<double>();
  return out;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(std::string_view s, std::size_t line) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError(line, "malformed number '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

json to_json(const ComplexityReport& report) {
  json j{
      {"n", report.n},
      {"estimator", to_string(report.estimator)},
      {"convention",
       {{"include_self", report.convention.include_self}, {"family", to_string(report.convention.family)}}},
      {"total_information", report.total_information},
      {"c_f", report.c_f},
      {"avg_information", series(report.avg_information)},
      {"linear_reference", series(report.linear_reference)},
  };
  j["stderr"] = report.std_error ? series(*report.std_error) : json(nullptr);
  return j;
}

ComplexityReport report_from_json(const json& j) {
  try {
    ComplexityReport r;
    r.n = j.at("n").get<std::size_t>();
    r.estimator = parse_estimator(j.at("estimator").get<std::string>());
    r.convention.include_self = j.at("convention").at("include_self").get<bool>();
    auto family = parse_family(j.at("convention").at("family").get<std::string>());
    if (!family) throw ParseError(0, "unknown subgraph family");
    r.convention.family = *family;
    r.total_information = j.at("total_information").get<double>();
    r.c_f = j.at("c_f").get<double>();
    r.avg_information = series_from(j.at("avg_information"));
    r.linear_reference = series_from(j.at("linear_reference"));
    if (!j.at("stderr").is_null()) r.std_error = series_from(j.at("stderr"));
    return r;
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("complexity report: ") + e.what());
  }
}

std::string to_csv(const ComplexityReport& report) {
  std::ostringstream out;
  out << "j,avg_information,linear_reference,abs_difference\n";
  for (const auto& p : complexity_curve(report)) {
    out << p.j << ',' << fmt(p.avg_information) << ',' << fmt(p.linear_reference) << ','
        << fmt(p.abs_difference()) << '\n';
  }
  out << "c_f,,," << fmt(report.c_f) << '\n';
  return out.str();
}

ParsedCurve parse_curve_csv(const std::string& text) {
  ParsedCurve curve;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  bool footer = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line_no == 1) {
      if (line != "j,avg_information,linear_reference,abs_difference") {
        throw ParseError(line_no, "unexpected curve header");
      }
      continue;
    }
    if (footer) throw ParseError(line_no, "data after c_f footer");
    auto cells = split_commas(line);
    if (cells.size() != 4) throw ParseError(line_no, "expected 4 columns");
    if (cells[0] == "c_f") {
      curve.c_f = parse_double(cells[3], line_no);
      footer = true;
      continue;
    }
    CurvePoint p;
    p.j = static_cast<std::size_t>(parse_double(cells[0], line_no));
    p.avg_information = parse_double(cells[1], line_no);
    p.linear_reference = parse_double(cells[2], line_no);
    curve.points.push_back(p);
    curve.abs_differences.push_back(parse_double(cells[3], line_no));
  }
  if (!footer) throw ParseError(0, "curve has no c_f footer");
  return curve;
}

}  // namespace fcnet::complexity
