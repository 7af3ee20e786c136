#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nij/cli.hpp"
#include "nij/json_io.hpp"

using namespace nij;
using nlohmann::json;

namespace {

std::string data_path(const std::string& name) { return std::string(NIJ_DATA_DIR) + "/" + name; }

struct RunOutput {
  int status;
  std::string stdout_text;
};

// drive the installed binary end to end
RunOutput run_cli(const std::string& args) {
  std::string out_file = std::string("/tmp/nij_cli_out_") + std::to_string(rand()) + ".txt";
  std::string cmd = std::string(NIJ_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
  int rc = std::system(cmd.c_str());
  std::ifstream f(out_file);
  std::stringstream ss;
  ss << f.rdbuf();
  std::remove(out_file.c_str());
  return {WEXITSTATUS(rc), ss.str()};
}

json parse_report(const std::string& text) { return json::parse(text); }

}  // namespace

TEST_CASE("check-leibniz exits 0 on the catalogue") {
  RunOutput r = run_cli("check-leibniz -i " + data_path("heisenberg3.json"));
  CHECK(r.status == 0);
  CHECK(r.stdout_text.find("[PASS]") != std::string::npos);
}

TEST_CASE("check-theorem3 fails with a witness for diag(1,2)") {
  RunOutput r =
      run_cli("check-theorem3 -i " + data_path("n0_diag12.json") + " --format json");
  CHECK(r.status == 1);
  json rep = parse_report(r.stdout_text);
  REQUIRE(rep["checks"].size() == 1);
  CHECK(rep["checks"][0]["verdict"] == "fail");
  CHECK(!rep["checks"][0]["witness"].is_null());
}

TEST_CASE("unparseable input exits 2 with a diagnostic") {
  RunOutput r = run_cli("check-leibniz -i /nonexistent/file.json");
  CHECK(r.status == 2);
  CHECK(r.stdout_text.find("error") != std::string::npos);
}

TEST_CASE("dimension mismatch exits 2") {
  RunOutput r = run_cli("classify-tensor -i " + data_path("heisenberg3.json") + " -i " +
                        data_path("identity2.json"));
  CHECK(r.status == 2);
}

TEST_CASE("classify-tensor reports the class") {
  RunOutput r = run_cli("classify-tensor -i " + data_path("solvable2.json") + " -i " +
                        data_path("identity2.json") + " --format json");
  CHECK(r.status == 0);
  json rep = parse_report(r.stdout_text);
  CHECK(rep["extra"]["classification"] == "nijenhuis");

  RunOutput r2 = run_cli("classify-tensor -i " + data_path("loday2.json") + " -i " +
                         data_path("nilpotent2.json") + " --format json");
  CHECK(r2.status == 1);
  json rep2 = parse_report(r2.stdout_text);
  CHECK(rep2["extra"]["classification"] == "neither");
}

TEST_CASE("contract emits a file that reparses and verifies") {
  std::string out = "/tmp/nij_contracted.json";
  RunOutput r = run_cli("contract -i " + data_path("solvable2.json") + " -i " +
                        data_path("identity2.json") + " -o " + out);
  REQUIRE(r.status == 0);
  json emitted = io::load_json_file(out);
  BilinearOp opn = io::parse_bilinear_op(emitted);
  // N = I reproduces the input
  CHECK(opn == io::parse_bilinear_op(io::load_json_file(data_path("solvable2.json"))));
  CHECK(is_leibniz(opn).pass);
  std::remove(out.c_str());
}

TEST_CASE("contract round-trip stays Leibniz whenever the class allows it") {
  // the weak tensor on the double: contract the double and re-verify
  std::string dbl = "/tmp/nij_double.json";
  RunOutput r = run_cli("double -i " + data_path("axb_bialgebra.json") + " -o " + dbl);
  REQUIRE(r.status == 0);
  json dj = io::load_json_file(dbl);
  std::ofstream opfile("/tmp/nij_double_op.json");
  opfile << dj["op"].dump() << "\n";
  opfile.close();

  RunOutput cls = run_cli("classify-tensor -i /tmp/nij_double_op.json -i " +
                          data_path("weak_tensor4.json") + " --format json");
  json crep = parse_report(cls.stdout_text);
  REQUIRE(crep["extra"]["classification"] == "weak_nijenhuis");

  std::string out = "/tmp/nij_contracted4.json";
  RunOutput c2 = run_cli("contract -i /tmp/nij_double_op.json -i " +
                         data_path("weak_tensor4.json") + " -o " + out);
  REQUIRE(c2.status == 0);
  BilinearOp opn = io::parse_bilinear_op(io::load_json_file(out));
  CHECK(is_leibniz(opn).pass);
  std::remove(out.c_str());
  std::remove(dbl.c_str());
  std::remove("/tmp/nij_double_op.json");
}

TEST_CASE("check-courant on an emitted double") {
  std::string dbl = "/tmp/nij_double2.json";
  RunOutput r = run_cli("double -i " + data_path("axb_bialgebra.json") + " -o " + dbl);
  REQUIRE(r.status == 0);
  RunOutput c = run_cli("check-courant -i " + dbl);
  CHECK(c.status == 0);
  RunOutput d = run_cli("check-dirac -i " + dbl + " -i " + data_path("subspace_e.json"));
  CHECK(d.status == 0);
  RunOutput dn = run_cli("check-dirac-nijenhuis -i " + dbl + " -i " +
                         data_path("subspace_e.json") + " -i " + data_path("weak_tensor4.json"));
  CHECK(dn.status == 0);
  std::remove(dbl.c_str());
}

TEST_CASE("bialgebroid and polynomial-carrier commands") {
  CHECK(run_cli("check-bialgebroid-nijenhuis -i " + data_path("axb_bialgebra.json") + " -i " +
                data_path("triangular_blocks.json"))
            .status == 0);
  CHECK(run_cli("check-theorem2 -i " + data_path("n0_coords.json")).status == 0);
  CHECK(run_cli("check-lemma2 -i " + data_path("k_scalar3.json")).status == 0);
  CHECK(run_cli("check-lemma2 -i " + data_path("n0_diag12.json")).status == 1);
  CHECK(run_cli("check-pn -i " + data_path("lambda_std.json") + " -i " +
                data_path("k_scalar3.json"))
            .status == 0);
  CHECK(run_cli("check-presymplectic-n -i " + data_path("omega_std.json") + " -i " +
                data_path("k_scalar3.json"))
            .status == 0);
  CHECK(run_cli("check-lambda-omega -i " + data_path("omega_std.json") + " -i " +
                data_path("lambda_std.json"))
            .status == 0);
  CHECK(run_cli("check-trivial-bialgebroid -i " + data_path("triangular_tensor.json")).status ==
        0);
}

TEST_CASE("machine reports are deterministic modulo wall time") {
  std::string args = "check-theorem3 -i " + data_path("n0_complex.json") + " --format json";
  json a = parse_report(run_cli(args).stdout_text);
  json b = parse_report(run_cli(args).stdout_text);
  a["wall_time_ms"] = 0;
  b["wall_time_ms"] = 0;
  CHECK(a.dump() == b.dump());
}

TEST_CASE("serial flag gives identical results") {
  std::string args = "check-theorem3 -i " + data_path("n0_diag12.json") + " --format json";
  json par = parse_report(run_cli(args).stdout_text);
  json ser = parse_report(run_cli(args + " --serial").stdout_text);
  par["wall_time_ms"] = 0;
  ser["wall_time_ms"] = 0;
  CHECK(par.dump() == ser.dump());
}

TEST_CASE("batch manifests") {
  SUBCASE("empty manifest passes") {
    std::ofstream f("/tmp/nij_manifest_empty.json");
    f << "{\"jobs\": []}\n";
    f.close();
    RunOutput r = run_cli("batch /tmp/nij_manifest_empty.json --format json");
    CHECK(r.status == 0);
    json rep = parse_report(r.stdout_text);
    CHECK(rep["jobs"].empty());
    std::remove("/tmp/nij_manifest_empty.json");
  }
  SUBCASE("one failing job flips the status") {
    std::ofstream f("/tmp/nij_manifest_fail.json");
    f << "{\"jobs\": [{\"command\": \"check-leibniz\", \"inputs\": [\"" +
             data_path("heisenberg3.json") + "\"]}, {\"command\": \"check-lemma2\", \"inputs\": [\"" +
             data_path("n0_diag12.json") + "\"]}]}\n";
    f.close();
    RunOutput r = run_cli("batch /tmp/nij_manifest_fail.json");
    CHECK(r.status == 1);
    std::remove("/tmp/nij_manifest_fail.json");
  }
  SUBCASE("a broken input propagates status 2") {
    std::ofstream f("/tmp/nij_manifest_bad.json");
    f << "{\"jobs\": [{\"command\": \"check-leibniz\", \"inputs\": [\"/missing.json\"]}]}\n";
    f.close();
    RunOutput r = run_cli("batch /tmp/nij_manifest_bad.json");
    CHECK(r.status == 2);
    std::remove("/tmp/nij_manifest_bad.json");
  }
}

TEST_CASE("serialization round-trips losslessly on randomized values") {
  std::srand(12345);
  auto rat = []() {
    static const char* pool[] = {"0", "1", "-1", "2", "-3", "1/2", "-2/3", "5/7"};
    return Rational::parse(pool[std::rand() % 8]);
  };
  for (int iter = 0; iter < 20; ++iter) {
    int dim = 2 + iter % 3;
    BilinearOp op(dim);
    OneOneTensor t(dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        t.at(i, j) = rat();
        for (int k = 0; k < dim; ++k) op.c(i, j, k) = rat();
      }
    CHECK(io::parse_bilinear_op(io::to_json(op)) == op);
    CHECK(io::parse_one_one(io::to_json(t)) == t);

    int n = 2 + iter % 2;
    PolyOneOne p(n);
    PolyForm w(n, 2);
    PolyBivector b(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Monomial m(n);
        m[i] = 1 + std::rand() % 2;
        p.at(i, j) = MultiPoly::monomial(n, m, rat());
        if (i < j) {
          w.add_component({i, j}, MultiPoly::monomial(n, m, rat()));
          b.add_component(i, j, MultiPoly::monomial(n, m, rat()));
        }
      }
    CHECK(io::parse_poly_one_one(io::to_json(p)) == p);
    CHECK(io::parse_poly_form(io::to_json(w)) == w);
    CHECK(io::parse_poly_bivector(io::to_json(b)).comp == b.comp);

    CourantTensor ct(n);
    ct.n0 = p;
    ct.n1t = p;
    ct.lambda = b;
    ct.omega = w;
    CourantTensor back = io::parse_courant_tensor(io::to_json(ct));
    CHECK(back.n0 == ct.n0);
    CHECK(back.n1t == ct.n1t);
    CHECK(back.lambda.comp == ct.lambda.comp);
    CHECK(back.omega == ct.omega);
  }
}

TEST_CASE("library-level job dispatch matches the binary") {
  cli::JobSpec spec;
  spec.command = "check-leibniz";
  spec.inputs = {data_path("loday2.json")};
  cli::JobResult r = cli::run_job(spec);
  CHECK(r.status == 0);
  CHECK(r.report["checks"][0]["verdict"] == "pass");

  spec.inputs = {data_path("nilpotent2.json")};  // wrong schema for an op
  CHECK(cli::run_job(spec).status == 2);
}
