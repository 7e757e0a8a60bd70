#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ko/chars.hpp"
#include "ko/io.hpp"

namespace ko {

inline constexpr const char* kToolkitVersion = "0.1.0";

enum class Status { Pass, Fail, Inconclusive };
std::string to_string(Status s);

struct Check {
  std::string name;
  Status status = Status::Pass;
  std::string detail;
  Json data = Json::object();
};

struct RunConfig {
  AlgebraKind algebra = AlgebraKind::M;
  unsigned n = 1;
  std::uint32_t p = 5;
  Scalar kappa = 0;
  std::uint64_t seed = 0;
  std::uint64_t budget = 1000;
  unsigned samples = 64;
  bool long_checks = false;
  std::optional<Json> chi;          // p-character for char/kac commands
  std::optional<int> h;             // height for char examples
  std::size_t module = 0;           // which simple g^0-module for kac commands
  SearchTarget target = SearchTarget::Nonsingular;

  ContactShape shape() const { return {n, p, kappa}; }
  Json to_json() const;
};

struct Report {
  std::string suite;
  RunConfig config;
  std::vector<Check> checks;
  double seconds = 0;  // wall time; kept out of JSON so reports stay byte-identical

  Check& add(std::string name, Status status, std::string detail = {}, Json data = Json::object());
  Status status() const;
  /// 0 all pass, 1 any fail, 2 inconclusive without failures.
  int exit_code() const;

  Json to_json() const;
  std::string to_csv() const;
  std::string to_text() const;
};

/// Status of a boolean outcome.
inline Status pass_if(bool ok) { return ok ? Status::Pass : Status::Fail; }

}  // namespace ko
