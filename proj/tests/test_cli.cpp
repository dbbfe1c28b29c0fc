#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "holder/cli.hpp"
#include "holder/harness.hpp"

using namespace holder;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Json json_of(const Run& r) { return Json::parse(r.out); }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "holder_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void check_golden(const std::string& name, const std::string& text) {
  const std::string path = std::string(HOLDER_GOLDEN_DIR) + "/" + name;
  if (const char* update = std::getenv("HOLDER_UPDATE_GOLDEN"); update && std::string(update) == "1") {
    std::ofstream(path) << text;
  }
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "missing golden file ", path);
  CHECK(read_file(path) == text);
}

// Every number in the document survives print/parse unchanged.
void check_round_trip(const Json& j) {
  if (j.is_number_float()) {
    const double v = j.get<double>();
    CHECK(Json::parse(Json(v).dump()).get<double>() == v);
  }
  if (j.is_structured()) {
    for (const auto& child : j) check_round_trip(child);
  }
}

}  // namespace

TEST_CASE("integral examples") {
  const auto lin = run({"integral", "--f", "x", "--g", "1", "--a", "0", "--b", "1", "--p", "2", "--linear", "--json"});
  CHECK(lin.code == kExitOk);
  const Json j = json_of(lin);
  CHECK(j["mode"] == "integral");
  CHECK(std::abs(j["results"]["lhs"].get<double>() - 0.5) <= 1e-12);
  CHECK(std::abs(j["results"]["refined_total"].get<double>() - (std::sqrt(1.0 / 24) + std::sqrt(1.0 / 8))) <= 1e-12);
  CHECK(std::abs(j["results"]["classical"].get<double>() - 1 / std::sqrt(3.0)) <= 1e-12);
  CHECK(j["results"]["chain_ok"] == true);
  CHECK(j["results"]["refined_terms"].size() == 2);

  const auto trig = run({"integral", "--f", "1", "--g", "1", "--a", "0", "--b", "1", "--p", "2", "--trig", "--json"});
  CHECK(trig.code == kExitOk);
  const Json t = json_of(trig);
  CHECK(std::abs(t["results"]["refined_total"].get<double>() - 1.0) <= 1e-9);
  CHECK(std::abs(t["results"]["classical"].get<double>() - 1.0) <= 1e-12);
  CHECK(std::abs(t["results"]["lhs"].get<double>() - 1.0) <= 1e-12);

  const auto bad_p = run({"integral", "--f", "x", "--g", "1", "--a", "0", "--b", "1", "--p", "1"});
  CHECK(bad_p.code == kExitUsage);
  CHECK(bad_p.err.find("p must exceed 1") != std::string::npos);
}

TEST_CASE("integral text output") {
  const auto r = run({"integral", "--f", "x", "--g", "1", "--a", "0", "--b", "1", "--p", "2", "--lambda", "0.5"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("0.5576775358") != std::string::npos);
  CHECK(r.out.find("split_point") != std::string::npos);
  CHECK(r.out.find("0.52621887") != std::string::npos);
}

TEST_CASE("integral error paths") {
  const auto parse_error = run({"integral", "--f", "ln(x", "--g", "1", "--a", "0", "--b", "1", "--p", "2"});
  CHECK(parse_error.code == kExitUsage);
  CHECK(parse_error.err.find("4") != std::string::npos);
  const auto partition = run({"integral", "--f", "x", "--g", "1", "--a", "0", "--b", "1", "--p", "2", "--weights", "x,x"});
  CHECK(partition.code == kExitUsage);
  const auto interval = run({"integral", "--f", "x", "--g", "1", "--a", "1", "--b", "0", "--p", "2"});
  CHECK(interval.code == kExitUsage);
  const auto domain = run({"integral", "--f", "ln(x)", "--g", "1", "--a", "-1", "--b", "1", "--p", "2"});
  CHECK(domain.code == kExitUsage);
  CHECK(run({"integral", "--f", "x"}).code == kExitUsage);
  CHECK(run({"integral", "--f", "x", "--g", "1", "--a", "0", "--b", "1", "--p", "2", "--linear", "--trig"}).code ==
        kExitUsage);
  CHECK(run({"bogus"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
}

TEST_CASE("custom weights") {
  const auto r = run({"integral", "--f", "x", "--g", "1", "--a", "0", "--b", "1", "--p", "2", "--weights",
                      "x^2, 1 - x^2", "--json"});
  CHECK(r.code == kExitOk);
  const Json j = json_of(r);
  CHECK(j["inputs"]["partition"] == "custom");
  CHECK(j["results"]["refined_terms"].size() == 2);
}

TEST_CASE("integral JSON golden file and bit-exact round trip") {
  const auto r = run({"integral", "--f", "x", "--g", "1", "--a", "0", "--b", "1", "--p", "2", "--linear", "--lambda",
                      "0.5", "--json"});
  REQUIRE(r.code == kExitOk);
  check_golden("integral_x_1_linear.json", r.out);
  const Json j = json_of(r);
  check_round_trip(j);
  CHECK(Json::parse(j.dump(2)) == j);
}

TEST_CASE("HOLDER_TOL and --tol set the report tolerance") {
  const std::vector<std::string> base{"integral", "--f", "x", "--g", "1", "--a", "0", "--b", "1", "--p", "2", "--json"};
  CHECK(json_of(run(base))["results"]["tolerance"] == 1e-8);

  ::setenv("HOLDER_TOL", "0.25", 1);
  CHECK(json_of(run(base))["results"]["tolerance"] == 0.25);
  auto with_flag = base;
  with_flag.insert(with_flag.end(), {"--tol", "0.125"});
  CHECK(json_of(run(with_flag))["results"]["tolerance"] == 0.125);
  ::setenv("HOLDER_TOL", "-1", 1);
  CHECK(run(base).code == kExitUsage);
  ::setenv("HOLDER_TOL", "abc", 1);
  CHECK(run(base).code == kExitUsage);
  ::unsetenv("HOLDER_TOL");

  auto negative = base;
  negative.insert(negative.end(), {"--tol", "-1"});
  CHECK(run(negative).code == kExitUsage);
}

TEST_CASE("sum examples") {
  const auto r = run({"sum", "--a", "1,2", "--b", "2,1", "--p", "2", "--linear", "--json"});
  CHECK(r.code == kExitOk);
  const Json j = json_of(r);
  CHECK(j["mode"] == "sum");
  CHECK(j["results"]["lhs"] == 4.0);
  CHECK(std::abs(j["results"]["refined_total"].get<double>() - (std::sqrt(13.5) + 1.0)) <= 1e-12);
  CHECK(std::abs(j["results"]["classical"].get<double>() - 5.0) <= 1e-12);
  check_round_trip(j);

  const auto single = run({"sum", "--a", "1", "--b", "5", "--p", "2", "--json"});
  CHECK(single.code == kExitOk);
  const Json s = json_of(single);
  CHECK(s["results"]["lhs"] == 5.0);
  CHECK(std::abs(s["results"]["refined_total"].get<double>() - 5.0) <= 1e-12);
  CHECK(std::abs(s["results"]["classical"].get<double>() - 5.0) <= 1e-12);

  CHECK(run({"sum", "--a", "1,0", "--b", "1,1", "--p", "2"}).code == kExitUsage);
  CHECK(run({"sum", "--a", "1,2", "--b", "1,2,3", "--p", "2"}).code == kExitUsage);
  CHECK(run({"sum", "--a", "1,x", "--b", "1,2", "--p", "2"}).code == kExitUsage);
}

TEST_CASE("zero tolerance exposes roundoff in an equality case as a violation") {
  // Equal tuples make every inequality an equality; the computed classical
  // value lands one ulp-scale step below lhs.
  const auto strict = run({"sum", "--a", "1,2,3", "--b", "1,2,3", "--p", "2", "--tol", "0", "--json"});
  CHECK(strict.code == kExitViolation);
  CHECK(json_of(strict)["results"]["chain_ok"] == false);
  CHECK(run({"sum", "--a", "1,2,3", "--b", "1,2,3", "--p", "2"}).code == kExitOk);
}

TEST_CASE("sum reads files with comments and weight files") {
  const auto a = scratch("a.csv");
  const auto b = scratch("b.csv");
  const auto w = scratch("w.csv");
  std::ofstream(a) << "# first tuple\n1\n2, 3\n";
  std::ofstream(b) << "3,2\n# trailing comment\n1\n";
  std::ofstream(w) << "# two rows\n0.25,0.5,1\n0.75,0.5,0\n";
  const auto r = run({"sum", "--a", a.string(), "--b", b.string(), "--p", "3", "--weights", w.string(), "--json"});
  CHECK(r.code == kExitOk);
  const Json j = json_of(r);
  CHECK(j["results"]["lhs"] == 10.0);
  CHECK(j["results"]["refined_terms"].size() == 2);

  std::ofstream(w) << "0.5,0.5,1\n0.75,0.5,0\n";
  CHECK(run({"sum", "--a", a.string(), "--b", b.string(), "--p", "3", "--weights", w.string()}).code == kExitUsage);
  CHECK(run({"sum", "--a", scratch("missing.csv").string(), "--b", "1", "--p", "2"}).code == kExitUsage);
}

TEST_CASE("sum CSV output") {
  const auto r = run({"sum", "--a", "1,2", "--b", "2,1", "--p", "2", "--csv"});
  CHECK(r.code == kExitOk);
  std::istringstream lines(r.out);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(header.rfind("lhs,refined_total,classical", 0) == 0);
  CHECK(row.rfind("4,4.674234614174767,", 0) == 0);
}

TEST_CASE("hh examples") {
  const auto r = run({"hh", "--f", "x^2", "--fprime", "2*x", "--a", "0", "--b", "1", "--p", "2", "--json"});
  CHECK(r.code == kExitOk);
  const Json j = json_of(r);
  CHECK(j["mode"] == "hh");
  CHECK(std::abs(j["results"]["defect"].get<double>() - 1.0 / 6.0) <= 1e-9);
  CHECK(std::abs(j["results"]["dragomir"].get<double>() - 0.408248290463863) <= 1e-9);
  CHECK(std::abs(j["results"]["refined"].get<double>() - 0.402368927062183) <= 1e-9);
  CHECK(j["results"]["convexity_ok"] == true);
  CHECK(j["results"]["ordering_ok"] == true);

  const auto lin = run({"hh", "--f", "x", "--fprime", "1", "--a", "0", "--b", "1", "--p", "2", "--json"});
  CHECK(lin.code == kExitOk);
  const Json l = json_of(lin);
  CHECK(std::abs(l["results"]["defect"].get<double>()) <= 1e-15);
  CHECK(l["results"]["dragomir"] == l["results"]["refined"]);

  const auto mismatch = run({"hh", "--f", "x^2", "--fprime", "3*x", "--a", "0", "--b", "1", "--p", "2"});
  CHECK(mismatch.code == kExitUsage);
  CHECK(mismatch.err.find("derivative") != std::string::npos);
}

TEST_CASE("sweep exit codes and determinism") {
  CHECK(run({"sweep", "--trials", "0", "--seed", "7", "--family", "mixed"}).code == kExitUsage);
  CHECK(run({"sweep", "--trials", "5", "--seed", "7", "--family", "nope"}).code == kExitUsage);

  const auto out1 = scratch("s1.json");
  const auto out2 = scratch("s2.json");
  const auto csv1 = scratch("s1.csv");
  const auto csv2 = scratch("s2.csv");
  const auto r1 = run({"sweep", "--trials", "20", "--seed", "7", "--family", "mixed", "--out", out1.string(), "--csv",
                       csv1.string()});
  const auto r2 = run({"sweep", "--trials", "20", "--seed", "7", "--family", "mixed", "--out", out2.string(), "--csv",
                       csv2.string(), "--threads", "4"});
  CHECK(r1.code == kExitOk);
  CHECK(r2.code == kExitOk);
  CHECK(read_file(out1) == read_file(out2));
  CHECK(read_file(csv1) == read_file(csv2));
  const Json j = Json::parse(read_file(out1));
  CHECK(j["results"]["violations"].empty());
  check_round_trip(j);

  CHECK(run({"sweep", "--trials", "5", "--seed", "1", "--family", "tuples", "--tol-scale", "-1"}).code == kExitUsage);
}

TEST_CASE("help and version") {
  const auto help = run({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("integral") != std::string::npos);
  const auto version = run({"--version"});
  CHECK(version.code == kExitOk);
  CHECK(version.out == version_string() + "\n");
}
