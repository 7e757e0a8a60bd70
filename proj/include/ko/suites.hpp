#pragma once

#include <string>

#include "ko/report.hpp"

namespace ko {

/// Runs one subcommand ("algebra", "build") etc.  Throws UsageError for an
/// unknown subcommand or a configuration it cannot serve.
Report run_suite(const std::string& command, const std::string& sub, const RunConfig& cfg);

class UsageError : public Error {
 public:
  using Error::Error;
};

/// The seed-indexed algebra from the configuration.
ContactAlgebra build_configured(const RunConfig& cfg);

}  // namespace ko
