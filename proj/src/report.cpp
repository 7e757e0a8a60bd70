#include "ko/report.hpp"

#include <sstream>

namespace ko {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

Json RunConfig::to_json() const {
  Json j;
  j["algebra"] = algebra == AlgebraKind::M ? "m" : "sm";
  j["n"] = n;
  j["p"] = p;
  if (algebra == AlgebraKind::SM) j["kappa"] = kappa;
  j["seed"] = seed;
  j["budget"] = budget;
  j["samples"] = samples;
  j["long"] = long_checks;
  if (chi) j["chi"] = *chi;
  if (h) j["h"] = *h;
  return j;
}

Check& Report::add(std::string name, Status status, std::string detail, Json data) {
  checks.push_back({std::move(name), status, std::move(detail), std::move(data)});
  return checks.back();
}

Status Report::status() const {
  bool inconclusive = false;
  for (const auto& c : checks) {
    if (c.status == Status::Fail) return Status::Fail;
    inconclusive = inconclusive || c.status == Status::Inconclusive;
  }
  return inconclusive ? Status::Inconclusive : Status::Pass;
}

int Report::exit_code() const {
  switch (status()) {
    case Status::Pass: return 0;
    case Status::Fail: return 1;
    case Status::Inconclusive: return 2;
  }
  return 1;
}

Json Report::to_json() const {
  Json j;
  j["suite"] = suite;
  j["version"] = kToolkitVersion;
  j["config"] = config.to_json();
  j["status"] = to_string(status());
  Json cs = Json::array();
  for (const auto& c : checks) {
    Json e;
    e["name"] = c.name;
    e["status"] = to_string(c.status);
    e["detail"] = c.detail;
    if (!c.data.empty()) e["data"] = c.data;
    cs.push_back(std::move(e));
  }
  j["checks"] = std::move(cs);
  return j;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string Report::to_csv() const {
  std::ostringstream s;
  s << "suite,check,status,detail\n";
  for (const auto& c : checks)
    s << csv_field(suite) << ',' << csv_field(c.name) << ',' << to_string(c.status) << ',' << csv_field(c.detail)
      << '\n';
  return s.str();
}

std::string Report::to_text() const {
  std::ostringstream s;
  s << suite << " (seed " << config.seed << ")\n";
  for (const auto& c : checks) {
    s << "  [" << to_string(c.status) << "] " << c.name;
    if (!c.detail.empty()) s << ": " << c.detail;
    s << '\n';
  }
  s << "status: " << to_string(status()) << '\n';
  return s.str();
}

}  // namespace ko
