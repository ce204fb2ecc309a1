#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tgwa/cli.hpp"
#include "tgwa/constructions.hpp"
#include "tgwa/parse.hpp"

using namespace tgwa;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string preset(const std::string& name) {
  return std::string(TGWA_PRESET_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// A datum whose spans never close, for the cap-exceeded path.
std::string write_henon_file() {
  std::string path =
      (std::filesystem::temp_directory_path() / "tgwa_henon.tgwa").string();
  std::ofstream out(path);
  out << "field Q\n"
         "vars x y\n"
         "sigma 1: x -> y, y -> x + y^2\n"
         "sigma_inv 1: x -> y - x^2, y -> x\n"
         "t 1: x\n";
  return path;
}

const char* kSerre = "X(1)^2*X(2) - 2*X(1)*X(2)*X(1) + X(2)*X(1)^2";

}  // namespace

TEST_CASE("preset files round-trip and match the builders") {
  TgwcDatum a2 = parse_tgwc_spec(read_file(preset("a2-classical.tgwa")));
  CHECK(a2 == build_type_a2_example());
  CHECK(print_tgwc_spec(a2) == read_file(preset("a2-classical.tgwa")));

  TqmuParams params;
  params.cartan = make_gcm({{2, -1}, {-1, 2}});
  TgwcDatum tq = parse_tgwc_spec(read_file(preset("tqmu-a2.tgwa")));
  CHECK(tq == build_tqmu(params));
  CHECK(print_tgwc_spec(tq) == read_file(preset("tqmu-a2.tgwa")));

  TgwcDatum qw = parse_tgwc_spec(read_file(preset("qweyl-n2.tgwa")));
  CHECK(validate_tgwc(qw).all_pass());
  CHECK(qw.mu_symmetric());
  CHECK(print_tgwc_spec(qw) == read_file(preset("qweyl-n2.tgwa")));
}

TEST_CASE("build subcommand reproduces the shipped presets") {
  RunResult r = run({"build", "--preset", "a2-classical"});
  CHECK(r.code == 0);
  CHECK(r.out == read_file(preset("a2-classical.tgwa")));

  r = run({"build", "--preset", "tqmu", "--cartan", "2,-1;-1,2"});
  CHECK(r.code == 0);
  CHECK(r.out == read_file(preset("tqmu-a2.tgwa")));

  r = run({"build", "--preset", "qweyl", "--qbar", "1/4,1/9", "--lambda",
           "1 2: 2"});
  CHECK(r.code == 0);
  CHECK(r.out == read_file(preset("qweyl-n2.tgwa")));
}

TEST_CASE("documented exit codes") {
  // True membership: 0.
  RunResult member_true =
      run({"member", preset("a2-classical.tgwa"), "--element", kSerre});
  CHECK(member_true.code == 0);
  CHECK(member_true.out.find("member: true") != std::string::npos);

  // False membership: 1, with the first failing pairing witness.
  RunResult member_false =
      run({"member", preset("a2-classical.tgwa"), "--element", "X(1)"});
  CHECK(member_false.code == 1);
  CHECK(member_false.out.find("member: false") != std::string::npos);
  CHECK(member_false.out.find("witness: F(X(1), element) = H") !=
        std::string::npos);

  // Parse error: 2.
  RunResult bad =
      run({"member", preset("a2-classical.tgwa"), "--element", "X(9)"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("error:") != std::string::npos);

  // Missing file: 2.
  CHECK(run({"validate", "/nonexistent.tgwa"}).code == 2);

  // Cap exceeded: 3.
  std::string henon = write_henon_file();
  RunResult capped = run({"cartan", henon, "--cap", "6"});
  CHECK(capped.code == 3);
  CHECK(capped.err.find("not locally finite up to cap") != std::string::npos);
  std::remove(henon.c_str());
}

TEST_CASE("validate and cartan reports") {
  RunResult v = run({"validate", preset("a2-classical.tgwa")});
  CHECK(v.code == 0);
  CHECK(v.out.find("result: PASS") != std::string::npos);

  RunResult c = run({"cartan", preset("a2-classical.tgwa")});
  CHECK(c.code == 0);
  CHECK(c.out.find("p[1][2] = x^2 - 2*x + 1") != std::string::npos);
  CHECK(c.out.find("[2, -1]") != std::string::npos);
  CHECK(c.out.find("[-1, 2]") != std::string::npos);
}

TEST_CASE("project and shapovalov") {
  RunResult p = run({"project", preset("a2-classical.tgwa"), "--element",
                     "Y(1)*Y(2)*X(1)*X(2)"});
  CHECK(p.code == 0);
  CHECK(p.out == "projection: H^2 + H\n");

  RunResult f = run({"shapovalov", preset("a2-classical.tgwa"), "--left",
                     "X(1)*X(2)", "--right", "X(1)*X(2)"});
  CHECK(f.code == 0);
  CHECK(f.out == "F(left, right) = H^2 + 2*H + 1\n");

  // Inhomogeneous projection input is an input error.
  RunResult bad = run({"project", preset("a2-classical.tgwa"), "--element",
                       "X(1)*Y(1) + X(1)"});
  CHECK(bad.code == 2);
}

TEST_CASE("serre and presentation") {
  RunResult s =
      run({"serre", preset("tqmu-a2.tgwa"), "--i", "1", "--j", "2"});
  CHECK(s.code == 0);
  CHECK(s.out.find("verified: true") != std::string::npos);
  CHECK(s.out.find("q + q^-1") != std::string::npos);

  RunResult pr = run({"presentation", preset("a2-classical.tgwa")});
  CHECK(pr.code == 0);
  CHECK(pr.out.find("X(1)^2*X(2) - 2*X(1)*X(2)*X(1) + X(2)*X(1)^2 = 0") !=
        std::string::npos);
}

TEST_CASE("theorem check command") {
  RunResult r = run({"check-theorem-5-3", "--cartan", "2,-1;-1,2", "--mu",
                     "1 2: 5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("result: PASS") != std::string::npos);
}

TEST_CASE("reports are byte deterministic") {
  for (const std::vector<std::string> args :
       {std::vector<std::string>{"cartan", preset("a2-classical.tgwa")},
        std::vector<std::string>{"member", preset("a2-classical.tgwa"),
                                 "--element", kSerre},
        std::vector<std::string>{"check-theorem-5-3", "--cartan", "2,0;0,2"}}) {
    RunResult first = run(args);
    RunResult second = run(args);
    CHECK(first.out == second.out);
    CHECK(first.code == second.code);
  }
}

TEST_CASE("structured output is stable JSON") {
  RunResult r = run({"--format", "structured", "member",
                     preset("a2-classical.tgwa"), "--element", "X(1)"});
  CHECK(r.code == 1);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["command"] == "member");
  CHECK(doc["verdict"] == false);
  CHECK(doc["degree"] == nlohmann::json::array({1, 0}));
  CHECK(doc["pairing_witnesses"][0]["word"] == "X(1)");
  CHECK(doc["pairing_witnesses"][0]["pairing"] == "H");

  RunResult v =
      run({"--format", "structured", "validate", preset("tqmu-a2.tgwa")});
  CHECK(v.code == 0);
  auto vdoc = nlohmann::json::parse(v.out);
  CHECK(vdoc["all_pass"] == true);
  CHECK(vdoc["mu_symmetric"] == true);
}
