/* cli.cpp
 *
 * Job dispatch behind the command-line front end. Every check operation of
 * the toolkit is reachable through a JobSpec; reports come back as both
 * human text and machine JSON (byte-identical for identical inputs, modulo
 * the wall_time_ms field).
 */

#include "nij/cli.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "nij/json_io.hpp"

namespace nij::cli {

using io::json;

namespace {

struct NamedReport {
  std::string name;
  CheckReport report;
};

struct JobOutcome {
  std::vector<NamedReport> checks;
  json extra = json::object();
  std::string emitted_path;  // file written by contract/double
};

const json& require_input(const std::vector<json>& inputs, size_t idx, const char* what) {
  if (idx >= inputs.size())
    throw ParseError(std::string("missing input file #") + std::to_string(idx + 1) + " (" + what +
                     ")");
  return inputs[idx];
}

JobOutcome dispatch(const JobSpec& job, const std::vector<json>& in) {
  JobOutcome out;
  const std::string& cmd = job.command;

  if (cmd == "check-leibniz") {
    BilinearOp op = io::parse_bilinear_op(require_input(in, 0, "BilinearOp"));
    out.checks.push_back({"leibniz", is_leibniz(op)});
  } else if (cmd == "classify-tensor") {
    BilinearOp op = io::parse_bilinear_op(require_input(in, 0, "BilinearOp"));
    OneOneTensor N = io::parse_one_one(require_input(in, 1, "OneOneTensor"));
    Classification c = classify_tensor(op, N);
    out.extra["classification"] = tensor_class_name(c.cls);
    out.checks.push_back({"classify", c.report});
  } else if (cmd == "contract") {
    BilinearOp op = io::parse_bilinear_op(require_input(in, 0, "BilinearOp"));
    OneOneTensor N = io::parse_one_one(require_input(in, 1, "OneOneTensor"));
    BilinearOp opn = contract(op, N);
    out.extra["contracted"] = io::to_json(opn);
    out.emitted_path = job.output;
    out.checks.push_back({"contract", CheckReport::ok("contracted structure constants emitted")});
  } else if (cmd == "double") {
    LieBialgebra b = io::parse_lie_bialgebra(require_input(in, 0, "LieBialgebra"));
    CourantStructure cs = drinfeld_double(b);
    out.extra["double"] = io::to_json(cs);
    out.emitted_path = job.output;
    out.checks.push_back({"double", CheckReport::ok("double assembled on E + E*")});
  } else if (cmd == "check-courant") {
    CourantStructure cs = io::parse_courant_structure(require_input(in, 0, "CourantStructure"));
    out.checks.push_back({"courant_axioms", check_courant_axioms(cs)});
  } else if (cmd == "check-dirac") {
    CourantStructure cs = io::parse_courant_structure(require_input(in, 0, "CourantStructure"));
    Subspace L = io::parse_subspace(require_input(in, 1, "Subspace"));
    out.checks.push_back({"dirac", is_dirac(cs, L)});
  } else if (cmd == "check-dirac-nijenhuis") {
    CourantStructure cs = io::parse_courant_structure(require_input(in, 0, "CourantStructure"));
    Subspace L = io::parse_subspace(require_input(in, 1, "Subspace"));
    OneOneTensor N = io::parse_one_one(require_input(in, 2, "OneOneTensor"));
    out.checks.push_back({"dirac_nijenhuis", is_dirac_nijenhuis(cs, L, N)});
  } else if (cmd == "check-bialgebroid-nijenhuis") {
    LieBialgebra b = io::parse_lie_bialgebra(require_input(in, 0, "LieBialgebra"));
    BlockTensor N = io::parse_block_tensor(require_input(in, 1, "BlockTensor"));
    out.checks.push_back({"bialgebroid_nijenhuis", bialgebroid_nijenhuis_conditions(b, N)});
  } else if (cmd == "check-theorem2") {
    PolyOneOne n0 = io::parse_poly_one_one(require_input(in, 0, "PolyOneOne"));
    TestFamily family(n0.n, job.family_degree);
    out.checks.push_back({"deformed_product_factorization",
                          check_factorized_deformation(n0, family)});
  } else if (cmd == "check-theorem3") {
    PolyOneOne n0 = io::parse_poly_one_one(require_input(in, 0, "PolyOneOne"));
    TestFamily family(n0.n, job.family_degree);
    out.checks.push_back({"diagonal_lift_nijenhuis", check_diagonal_nijenhuis(n0, family)});
  } else if (cmd == "check-lemma2") {
    PolyOneOne k = io::parse_poly_one_one(require_input(in, 0, "PolyOneOne"));
    TestFamily family(k.n, job.family_degree);
    out.checks.push_back({"bracket_commutant_scalar", check_commutant_scalar(k, family)});
  } else if (cmd == "check-pn") {
    PolyBivector lam = io::parse_poly_bivector(require_input(in, 0, "PolyBivector"));
    PolyOneOne n0 = io::parse_poly_one_one(require_input(in, 1, "PolyOneOne"));
    TestFamily family(lam.n, job.family_degree);
    PoissonNijenhuisReport rep = check_poisson_nijenhuis(lam, n0, family);
    out.checks.push_back({"poisson_nijenhuis_weak", rep.weak});
    out.extra["strong"] = io::to_json(rep.strong);
  } else if (cmd == "check-presymplectic-n") {
    PolyForm omega = io::parse_poly_form(require_input(in, 0, "PolyForm"));
    PolyOneOne n0 = io::parse_poly_one_one(require_input(in, 1, "PolyOneOne"));
    TestFamily family(n0.n, job.family_degree);
    PresymplecticNijenhuisReport rep = check_presymplectic_nijenhuis(omega, n0, family);
    out.checks.push_back({"presymplectic_nijenhuis", rep.combined()});
    out.extra["condition_path"] = io::to_json(rep.conditions);
    out.extra["graph_path"] = io::to_json(rep.graph);
  } else if (cmd == "check-lambda-omega") {
    PolyForm omega = io::parse_poly_form(require_input(in, 0, "PolyForm"));
    PolyBivector lam = io::parse_poly_bivector(require_input(in, 1, "PolyBivector"));
    TestFamily family(lam.n, job.family_degree);
    out.checks.push_back({"lambda_omega", check_lambda_omega(omega, lam, family)});
  } else if (cmd == "check-trivial-bialgebroid") {
    CourantTensor N = io::parse_courant_tensor(require_input(in, 0, "CourantTensor"));
    TestFamily family(N.n, job.family_degree);
    out.checks.push_back({"trivial_bialgebroid", check_trivial_bialgebroid_tensor(N, family)});
  } else {
    throw ParseError("unrecognized command '" + cmd + "'");
  }
  return out;
}

std::string render_text(const JobSpec& job, const JobOutcome& out) {
  std::ostringstream s;
  s << "command: " << job.command << "\n";
  for (const auto& c : out.checks) {
    s << (c.report.pass ? "[PASS] " : "[FAIL] ") << c.name << "\n";
    if (c.report.witness) {
      s << "  identity: " << c.report.witness->identity << "\n";
      s << "  inputs:   " << c.report.witness->inputs << "\n";
      s << "  lhs:      " << c.report.witness->lhs << "\n";
      s << "  rhs:      " << c.report.witness->rhs << "\n";
    }
    if (!c.report.certificate.empty()) s << "  certificate: " << c.report.certificate << "\n";
  }
  for (auto it = out.extra.begin(); it != out.extra.end(); ++it)
    s << it.key() << ": " << it.value().dump() << "\n";
  return s.str();
}

json render_json(const JobSpec& job, const JobOutcome& out, double wall_ms) {
  json checks = json::array();
  for (const auto& c : out.checks) {
    json rep = io::to_json(c.report);
    rep["name"] = c.name;
    checks.push_back(rep);
  }
  return json{{"command", job.command},
              {"inputs", job.inputs},
              {"options", {{"family_degree", job.family_degree}, {"format", job.format}}},
              {"checks", checks},
              {"extra", out.extra},
              {"wall_time_ms", wall_ms},
              {"version", kVersion}};
}

}  // namespace

const std::vector<std::string>& known_commands() {
  static const std::vector<std::string> cmds = {
      "check-leibniz",         "classify-tensor",
      "contract",              "double",
      "check-courant",         "check-dirac",
      "check-dirac-nijenhuis", "check-bialgebroid-nijenhuis",
      "check-theorem2",        "check-theorem3",
      "check-lemma2",          "check-pn",
      "check-presymplectic-n", "check-lambda-omega",
      "check-trivial-bialgebroid"};
  return cmds;
}

JobResult run_job(const JobSpec& job) {
  JobResult res;
  auto t0 = std::chrono::steady_clock::now();
  try {
    std::vector<json> inputs;
    for (const auto& path : job.inputs) inputs.push_back(io::load_json_file(path));
    JobOutcome out = dispatch(job, inputs);
    if (!out.emitted_path.empty()) {
      std::ofstream f(out.emitted_path);
      if (!f) throw ParseError(out.emitted_path + ": cannot open for writing");
      const char* key = job.command == "double" ? "double" : "contracted";
      f << out.extra[key].dump(2) << "\n";
    }
    bool all_pass = true;
    for (const auto& c : out.checks) all_pass = all_pass && c.report.pass;
    double wall =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    res.status = all_pass ? 0 : 1;
    res.report = render_json(job, out, wall);
    res.text = render_text(job, out);
  } catch (const ParseError& e) {
    res.status = 2;
    res.report = json{{"command", job.command}, {"error", e.what()}, {"version", kVersion}};
    res.text = std::string("error: ") + e.what() + "\n";
  } catch (const DimensionError& e) {
    res.status = 2;
    res.report = json{{"command", job.command}, {"error", e.what()}, {"version", kVersion}};
    res.text = std::string("error: ") + e.what() + "\n";
  } catch (const PreconditionError& e) {
    res.status = 2;
    res.report = json{{"command", job.command}, {"error", e.what()}, {"version", kVersion}};
    res.text = std::string("error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    res.status = 2;
    res.report = json{{"command", job.command}, {"error", e.what()}, {"version", kVersion}};
    res.text = std::string("error: ") + e.what() + "\n";
  }
  return res;
}

JobResult run_batch(const std::string& manifest_path, const std::string& format) {
  JobResult res;
  json manifest;
  try {
    manifest = io::load_json_file(manifest_path);
  } catch (const ParseError& e) {
    res.status = 2;
    res.report = json{{"error", e.what()}};
    res.text = std::string("error: ") + e.what() + "\n";
    return res;
  }
  json reports = json::array();
  std::ostringstream text;
  int status = 0;
  try {
    json jobs = manifest.value("jobs", json::array());
    for (const auto& jj : jobs) {
      JobSpec spec;
      spec.command = jj.value("command", "");
      if (jj.contains("inputs"))
        for (const auto& p : jj["inputs"]) spec.inputs.push_back(p.get<std::string>());
      if (jj.contains("options")) {
        spec.family_degree = jj["options"].value("family_degree", 2);
        spec.output = jj["options"].value("output", "");
      }
      spec.format = format;
      JobResult r = run_job(spec);
      reports.push_back(r.report);
      text << r.text << "\n";
      if (r.status == 2)
        status = 2;
      else if (r.status == 1 && status == 0)
        status = 1;
    }
  } catch (const std::exception& e) {
    res.status = 2;
    res.report = json{{"error", std::string("bad manifest: ") + e.what()}};
    res.text = std::string("error: bad manifest: ") + e.what() + "\n";
    return res;
  }
  res.status = status;
  res.report = json{{"jobs", reports}, {"version", kVersion}};
  res.text = text.str();
  return res;
}

}  // namespace nij::cli
