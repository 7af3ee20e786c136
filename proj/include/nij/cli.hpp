#ifndef NIJ_CLI_HPP
#define NIJ_CLI_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace nij::cli {

inline constexpr const char* kVersion = "0.1.0";

/// One dispatchable job: a recognized command, its input files and options.
struct JobSpec {
  std::string command;
  std::vector<std::string> inputs;
  int family_degree = 2;
  std::string format = "text";  // "text" or "json"
  std::string output;           // optional output file for contract/double
};

/// Exit status plus both report renderings. status: 0 all checks pass,
/// 1 some check failed (witness in the report), 2 input or parse error.
struct JobResult {
  int status = 0;
  nlohmann::json report;
  std::string text;
};

const std::vector<std::string>& known_commands();

JobResult run_job(const JobSpec& job);

/// Runs every job of a manifest file {"jobs":[...]} independently and
/// aggregates; report order follows manifest order. Status 2 propagates.
JobResult run_batch(const std::string& manifest_path, const std::string& format);

}  // namespace nij::cli

#endif
