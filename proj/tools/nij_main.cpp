/* Command-line front end: load algebra and tensor definitions from JSON
 * files, dispatch the check operations, emit text or machine reports.
 * Exit status: 0 all checks pass, 1 a check failed, 2 input error.
 */

#include <CLI11.hpp>

#include <iostream>

#include "nij/cli.hpp"
#include "nij/sweep.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact checker for Leibniz/Courant contractions and deformations"};
  app.require_subcommand(1);

  nij::cli::JobSpec job;
  std::string manifest;
  bool serial = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-i,--input", job.inputs, "input JSON file (repeatable, order matters)");
    sub->add_option("--family-degree", job.family_degree,
                    "max monomial degree of the polynomial test family")
        ->check(CLI::NonNegativeNumber)
        ->default_val(2);
    sub->add_option("--format", job.format, "report format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_val("text");
    sub->add_option("--output,-o", job.output, "output file (contract, double)");
    sub->add_flag("--serial", serial, "run sweeps on the serial reference kernel");
  };

  for (const auto& name : nij::cli::known_commands()) add_common(app.add_subcommand(name));

  CLI::App* batch = app.add_subcommand("batch", "run every job of a manifest file");
  batch->add_option("manifest", manifest, "manifest JSON file with a jobs array")->required();
  batch->add_option("--format", job.format, "report format: text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");
  batch->add_flag("--serial", serial, "run sweeps on the serial reference kernel");

  CLI11_PARSE(app, argc, argv);
  if (serial) nij::set_parallel_sweeps(false);

  nij::cli::JobResult result;
  if (batch->parsed()) {
    result = nij::cli::run_batch(manifest, job.format);
  } else {
    job.command = app.get_subcommands().front()->get_name();
    result = nij::cli::run_job(job);
  }

  if (job.format == "json")
    std::cout << result.report.dump(2) << std::endl;
  else
    std::cout << result.text;
  return result.status;
}
