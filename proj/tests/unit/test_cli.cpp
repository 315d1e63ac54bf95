#include "toricskt/cli.hpp"

#include "toricskt/json_io.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = toricskt::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("sktcert_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("bott subcommand emits the documented fan") {
  RunResult r = run_cli({"bott", "--k", "2", "--c", "1,2=1"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{\"n\":2,\"rays\":[[1,0],[0,1],[-1,1],[0,-1]],"
        "\"max_cones\":[[1,2],[1,4],[2,3],[3,4]]}\n");
  CHECK(r.err.empty());
}

TEST_CASE("multiple --c tuples in one argument") {
  RunResult r = run_cli({"bott", "--k", "3", "--c", "1,2=2,1,3=-1,2,3=4"});
  CHECK(r.code == 0);
  toricskt::Fan fan = toricskt::parse_fan(r.out);
  CHECK(fan.rays[3] == toricskt::RayVector{-1, 2, -1});
  CHECK(fan.rays[4] == toricskt::RayVector{0, -1, 4});
}

TEST_CASE("usage errors exit 2 with nothing on stdout") {
  CHECK(run_cli({"bott"}).code == 2);                       // neither --spec nor --k
  CHECK(run_cli({"unknown-subcommand"}).code == 2);
  CHECK(run_cli({"bott", "--k", "2", "--c", "oops"}).code == 2);
  CHECK(run_cli({"wedge", "--J", "1,1"}).code == 2);        // missing --fan
  RunResult r = run_cli({"bott", "--k", "0"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("parse errors exit 3, math failures exit 4") {
  TempDir tmp;
  toricskt::write_file(tmp.file("bad.json"), "{nonsense");
  CHECK(run_cli({"validate", "--fan", tmp.file("bad.json")}).code == 3);
  CHECK(run_cli({"validate", "--fan", tmp.file("missing.json")}).code == 3);

  // torsion behind a structurally fine fan document
  toricskt::write_file(tmp.file("torsion.json"),
                       R"({"n":1,"rays":[[2],[-2]],"max_cones":[[1],[2]]})");
  RunResult r = run_cli({"cohomology", "--fan", tmp.file("torsion.json")});
  CHECK(r.code == 4);
  CHECK(r.out.empty());

  // a fan failing validation is refused by search subcommands
  toricskt::write_file(tmp.file("nonsmooth.json"),
                       R"({"n":2,"rays":[[1,0],[1,2]],"max_cones":[[1,2]]})");
  CHECK(run_cli({"square-zero", "--fan", tmp.file("nonsmooth.json")}).code == 4);
}

TEST_CASE("end-to-end: build, wedge, certify, verify, tamper") {
  TempDir tmp;
  CHECK(run_cli({"bott", "--k", "2", "--c", "1,2=2", "--out", tmp.file("fan.json")}).code == 0);
  CHECK(run_cli({"wedge", "--fan", tmp.file("fan.json"), "--J", "2,1,1,1", "--out",
                 tmp.file("wedged.json"), "--trace", tmp.file("trace.json")})
            .code == 0);

  // trace file is the documented array-of-steps document
  toricskt::Json trace = toricskt::parse_json(toricskt::read_file(tmp.file("trace.json")), "t");
  REQUIRE(trace.is_array());
  REQUIRE(trace.size() == 1);
  CHECK(trace[0]["step"] == 1);
  CHECK(trace[0]["wedged_index"] == 1);
  CHECK(trace[0]["new_index"] == 5);

  toricskt::write_file(tmp.file("classes.json"), "[[1,0,0,0,0],[2,2,0,0,0]]");
  CHECK(run_cli({"certify", "--fan", tmp.file("wedged.json"), "--classes",
                 tmp.file("classes.json"), "--out", tmp.file("cert.json")})
            .code == 0);

  RunResult ok = run_cli({"verify-certificate", "--fan", tmp.file("wedged.json"),
                          "--certificate", tmp.file("cert.json")});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("\"verified\":true") != std::string::npos);

  // flip one coefficient: verification fails with exit 1 and verified:false
  toricskt::Json cert = toricskt::parse_json(toricskt::read_file(tmp.file("cert.json")), "c");
  cert["classes"][0][0] = 7;
  toricskt::write_file(tmp.file("tampered.json"), cert.dump());
  RunResult bad = run_cli({"verify-certificate", "--fan", tmp.file("wedged.json"),
                           "--certificate", tmp.file("tampered.json")});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("\"verified\":false") != std::string::npos);
}

TEST_CASE("identical invocations produce identical bytes") {
  TempDir tmp;
  toricskt::write_file(tmp.file("fan.json"),
                       run_cli({"bott", "--k", "3", "--c", "1,2=1,2,3=-2"}).out);
  std::vector<std::string> argv = {"find-bundle", "--fan", tmp.file("fan.json"),
                                   "--rank", "2", "--bound", "2"};
  RunResult first = run_cli(argv);
  RunResult second = run_cli(argv);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
}

TEST_CASE("help is available") {
  RunResult r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("bott") != std::string::npos);
}
