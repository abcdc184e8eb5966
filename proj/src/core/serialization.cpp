#include "core/serialization.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "core/errors.hpp"

namespace ahk {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void parse_fail(const std::string& path, const std::string& what) {
  fail(ErrorCode::ParseError, path + ": " + what);
}

double number_at(const json& obj, const std::string& path, const char* key) {
  if (!obj.contains(key)) parse_fail(path + "." + key, "missing required number");
  const json& v = obj.at(key);
  if (!v.is_number()) parse_fail(path + "." + key, "expected a number");
  return v.get<double>();
}

GeneratingFunction parse_profile(const json& p, const std::string& path) {
  if (!p.is_object()) parse_fail(path, "expected a profile object");
  if (!p.contains("kind") || !p.at("kind").is_string())
    parse_fail(path + ".kind", "missing profile kind string");
  const std::string kind = p.at("kind").get<std::string>();

  auto check_keys = [&](std::initializer_list<const char*> allowed) {
    for (auto it = p.begin(); it != p.end(); ++it) {
      if (it.key() == "kind") continue;
      bool ok = false;
      for (const char* k : allowed) ok = ok || it.key() == k;
      if (!ok) parse_fail(path + "." + it.key(), "unexpected key for kind \"" + kind + "\"");
    }
  };

  try {
    if (kind == "linear") {
      check_keys({"c", "d"});
      return GeneratingFunction::linear(number_at(p, path, "c"), number_at(p, path, "d"));
    }
    if (kind == "quadratic") {
      check_keys({"c", "d", "e"});
      return GeneratingFunction::quadratic(number_at(p, path, "c"), number_at(p, path, "d"),
                                           number_at(p, path, "e"));
    }
    if (kind == "polynomial") {
      check_keys({"coeffs"});
      if (!p.contains("coeffs") || !p.at("coeffs").is_array())
        parse_fail(path + ".coeffs", "expected an array of numbers");
      std::vector<double> coeffs;
      int k = 0;
      for (const json& c : p.at("coeffs")) {
        if (!c.is_number())
          parse_fail(path + ".coeffs[" + std::to_string(k) + "]", "expected a number");
        coeffs.push_back(c.get<double>());
        ++k;
      }
      return GeneratingFunction::polynomial(std::move(coeffs));
    }
    if (kind == "exp_pair" || kind == "trig_pair") {
      check_keys({"c", "d", "a", "s"});
      const double c = number_at(p, path, "c");
      const double d = number_at(p, path, "d");
      const double a = number_at(p, path, "a");
      const double s = number_at(p, path, "s");
      return kind == "exp_pair" ? GeneratingFunction::exp_pair(c, d, a, s)
                                : GeneratingFunction::trig_pair(c, d, a, s);
    }
    if (kind == "log_cos") {
      check_keys({"c"});
      return GeneratingFunction::log_cos(number_at(p, path, "c"));
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    parse_fail(path, e.what());
  }
  parse_fail(path + ".kind", "unknown kind \"" + kind + "\"");
}

}  // namespace

HypersurfaceSpec parse_spec_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::ParseError, std::string("json: ") + e.what());
  }
  if (!doc.is_object()) parse_fail("$", "expected a JSON object");

  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (it.key() != "n" && it.key() != "ambient" && it.key() != "matrix" &&
        it.key() != "profiles")
      parse_fail(it.key(), "unexpected top-level key");

  if (!doc.contains("n") || !doc.at("n").is_number_integer())
    parse_fail("n", "expected an integer");
  const int n = doc.at("n").get<int>();
  if (n < 2 || n > AffineMap::kMaxDim) parse_fail("n", "must be in [2, 8]");

  if (!doc.contains("ambient") || !doc.at("ambient").is_string())
    parse_fail("ambient", "expected \"euclidean\" or \"isotropic\"");
  const std::string ambient_name = doc.at("ambient").get<std::string>();
  Ambient ambient;
  if (ambient_name == "euclidean")
    ambient = Ambient::Euclidean;
  else if (ambient_name == "isotropic")
    ambient = Ambient::Isotropic;
  else
    parse_fail("ambient", "unknown ambient \"" + ambient_name + "\"");

  if (!doc.contains("matrix") || !doc.at("matrix").is_array() ||
      static_cast<int>(doc.at("matrix").size()) != n)
    parse_fail("matrix", "expected " + std::to_string(n) + " rows");
  std::vector<std::vector<double>> rows(n);
  for (int i = 0; i < n; ++i) {
    const json& row = doc.at("matrix").at(i);
    const std::string row_path = "matrix[" + std::to_string(i) + "]";
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      parse_fail(row_path, "expected " + std::to_string(n) + " numbers");
    for (int j = 0; j < n; ++j) {
      if (!row.at(j).is_number())
        parse_fail(row_path + "[" + std::to_string(j) + "]", "expected a number");
      rows[i].push_back(row.at(j).get<double>());
    }
  }

  if (!doc.contains("profiles") || !doc.at("profiles").is_array() ||
      static_cast<int>(doc.at("profiles").size()) != n)
    parse_fail("profiles", "expected " + std::to_string(n) + " profile objects");
  std::vector<GeneratingFunction> profiles;
  profiles.reserve(n);
  for (int i = 0; i < n; ++i)
    profiles.push_back(parse_profile(doc.at("profiles").at(i),
                                     "profiles[" + std::to_string(i) + "]"));

  try {
    return HypersurfaceSpec(ambient, AffineMap::from_rows(rows), std::move(profiles));
  } catch (const Error& e) {
    parse_fail("matrix", e.what());
  }
}

HypersurfaceSpec load_spec_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot open spec file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec_json(buf.str());
}

std::string spec_to_json(const HypersurfaceSpec& spec) {
  const int n = spec.dim();
  ordered_json doc;
  doc["n"] = n;
  doc["ambient"] = spec.ambient() == Ambient::Euclidean ? "euclidean" : "isotropic";
  ordered_json matrix = ordered_json::array();
  for (int i = 0; i < n; ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < n; ++j) row.push_back(spec.map().entries()(i, j));
    matrix.push_back(std::move(row));
  }
  doc["matrix"] = std::move(matrix);

  ordered_json profiles = ordered_json::array();
  using Kind = GeneratingFunction::Kind;
  for (const auto& f : spec.profiles()) {
    ordered_json p;
    const auto& q = f.params();
    switch (f.kind()) {
      case Kind::Linear:
        p["kind"] = "linear";
        p["c"] = q[0];
        p["d"] = q[1];
        break;
      case Kind::Quadratic:
        p["kind"] = "quadratic";
        p["c"] = q[0];
        p["d"] = q[1];
        p["e"] = q[2];
        break;
      case Kind::Polynomial:
        p["kind"] = "polynomial";
        p["coeffs"] = q;
        break;
      case Kind::ExpPair:
      case Kind::TrigPair:
        p["kind"] = f.kind() == Kind::ExpPair ? "exp_pair" : "trig_pair";
        p["c"] = q[0];
        p["d"] = q[1];
        p["a"] = q[2];
        p["s"] = q[3];
        break;
      case Kind::LogCos:
        p["kind"] = "log_cos";
        p["c"] = q[0];
        break;
    }
    profiles.push_back(std::move(p));
  }
  doc["profiles"] = std::move(profiles);
  return doc.dump(2);
}

void save_spec_file(const HypersurfaceSpec& spec, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::InvalidArgument, "cannot open output file: " + path);
  out << spec_to_json(spec) << "\n";
}

const char* verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::ConfirmsTheorem: return "confirms_theorem";
    case Verdict::ViolatesTheorem: return "violates_theorem";
    case Verdict::NotApplicable: return "not_applicable";
  }
  return "not_applicable";
}

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string report_to_json(const CurvatureReport& report) {
  std::ostringstream out;
  out << "{\"quantity\":\"" << report.quantity << "\""
      << ",\"samples\":" << report.samples
      << ",\"min\":" << format_double(report.min)
      << ",\"max\":" << format_double(report.max)
      << ",\"mean\":" << format_double(report.mean)
      << ",\"stddev\":" << format_double(report.stddev)
      << ",\"is_constant\":" << (report.is_constant ? "true" : "false")
      << ",\"constant_value\":"
      << (report.constant_value ? format_double(*report.constant_value) : "null")
      << ",\"skipped\":" << report.skipped
      << ",\"verdict\":\"" << verdict_name(report.verdict) << "\"}";
  return out.str();
}

std::string fuzz_summary_to_json(const FuzzSummary& summary) {
  std::ostringstream out;
  out << "{\"seed\":" << summary.seed << ",\"trials\":" << summary.trials
      << ",\"checks\":" << summary.checks << ",\"failures\":" << summary.failures
      << ",\"messages\":[";
  for (size_t i = 0; i < summary.messages.size(); ++i) {
    if (i > 0) out << ",";
    out << json(summary.messages[i]).dump();
  }
  out << "]}";
  return out.str();
}

}  // namespace ahk
