#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "bibaz/cli.hpp"

using namespace bibaz;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "bibaz");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
  const fs::path p = fs::temp_directory_path() / ("bibaz_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void spit(const fs::path& p, const std::string& s) { std::ofstream(p, std::ios::binary) << s; }

const std::vector<std::string> kKoebeB = {"--kind", "B", "--gamma", "1", "--lambda", "0", "--op",
                                          "identity", "--phi", "koebe", "--c0", "1", "--c1", "0"};

std::vector<std::string> with(std::vector<std::string> head, const std::vector<std::string>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

}  // namespace

TEST_CASE("bound: Koebe/identity class") {
  const Run r = run(with({"bound"}, kKoebeB));
  REQUIRE(r.code == kExitOk);
  const json j = json::parse(r.out);
  CHECK(std::abs(j["report"]["a2_bound"].get<double>() - std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(j["report"]["a3_bound"].get<double>() - 5.0) < 1e-14);
  CHECK(j["report"]["theta2"] == 1.0);
  CHECK(j["manifest"]["command"] == "bound");
  CHECK(j["manifest"].contains("version"));
  CHECK(j["manifest"].contains("timestamp"));
}

TEST_CASE("bound: preset equivalences and operator thetas") {
  const Run a = run({"bound", "--phi", "strongly-starlike", "--alpha", "1"});
  const Run b = run({"bound", "--phi", "koebe"});
  CHECK(json::parse(a.out)["report"] == json::parse(b.out)["report"]);

  const Run lb = run({"bound", "--op", "libera-bernardi", "--nu", "1"});
  const json j = json::parse(lb.out);
  CHECK(std::abs(j["report"]["theta2"].get<double>() - 2.0 / 3.0) < 1e-15);
  CHECK(std::abs(j["report"]["theta3"].get<double>() - 0.5) < 1e-15);
}

TEST_CASE("bound: class G reports both a3 forms") {
  const Run r = run({"bound", "--kind", "G", "--gamma", "2", "--lambda", "0"});
  CHECK(r.code == kExitOk);
  const json j = json::parse(r.out);
  CHECK(j["report"]["a2_bound"].get<double>() == doctest::Approx(2.0));
  CHECK(j["report"]["a3_bound_linear_gamma"].get<double>() == doctest::Approx(10.0));
  CHECK(j["report"]["a3_bound"].get<double>() == doctest::Approx(18.0));
  CHECK(r.err.find("warning") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({"bound", "--gamma", "0"}).code == kExitValidation);
  CHECK(run({"bound", "--phi", "spiral"}).code == kExitValidation);
  CHECK(run({"bound", "--kind", "G", "--lambda", "1"}).code == kExitValidation);
  CHECK(run({"bound", "--c0", "1.5"}).code == kExitValidation);
  CHECK(run({"bound", "--c0", "1.5", "--unchecked-psi"}).code == kExitOk);
  CHECK(run({"bound", "--no-such-flag"}).code == kExitValidation);
  CHECK(run({"bound", "--gamma", "x"}).code == kExitValidation);
  CHECK(run({}).code == kExitValidation);
  CHECK(run({"--help"}).code == kExitOk);

  const Run d = run({"bound", "--B1", "1", "--B2", "2"});
  CHECK(d.code == kExitDegenerate);
  CHECK(d.err.find("degenerate") != std::string::npos);
  CHECK(json::parse(d.out)["report"]["degenerate"] == true);
}

TEST_CASE("spec files round-trip and flags override them") {
  const fs::path dir = scratch_dir();
  const Run first = run({"bound", "--kind", "B", "--gamma", "0.7,0.2", "--lambda", "0.4", "--op",
                         "jung-kim-srivastava", "--sigma", "1.3", "--phi", "janowski", "--janowski-A",
                         "0.5", "--janowski-B", "-0.5", "--c0", "0.5,-0.5", "--c1", "0.1,0.2"});
  REQUIRE(first.code == kExitOk);
  spit(dir / "emitted.json", first.out);
  const Run again = run({"bound", "--spec", (dir / "emitted.json").string()});
  REQUIRE(again.code == kExitOk);
  CHECK(json::parse(again.out)["report"] == json::parse(first.out)["report"]);
  CHECK(json::parse(again.out)["spec"] == json::parse(first.out)["spec"]);

  const Run over = run({"bound", "--spec", (dir / "emitted.json").string(), "--lambda", "0.9"});
  const json o = json::parse(over.out);
  CHECK(o["spec"]["lambda"] == 0.9);
  CHECK(o["spec"]["op"]["preset"] == "jung-kim-srivastava");
  CHECK(o["manifest"]["parameters"]["lambda"] == 0.9);

  spit(dir / "bad.json", "{\"kind\": \"B\", \"gamma\": \"oops\"}");
  CHECK(run({"bound", "--spec", (dir / "bad.json").string()}).code == kExitValidation);
  spit(dir / "broken.json", "{");
  CHECK(run({"bound", "--spec", (dir / "broken.json").string()}).code == kExitValidation);
  CHECK(run({"bound", "--spec", (dir / "missing.json").string()}).code == kExitValidation);
  fs::remove_all(dir);
}

TEST_CASE("verify: summary, CSV and manifest") {
  const fs::path dir = scratch_dir();
  const fs::path csv = dir / "v.csv";
  const Run r = run(with({"verify", "--samples", "3000", "--seed", "5", "--out", csv.string()}, kKoebeB));
  REQUIRE(r.code == kExitOk);
  const json s = json::parse(r.out);
  CHECK(s["status"] == "PASS");
  CHECK(s["violations"] == 0);
  CHECK(s["max_abs_a2"].get<double>() <= std::sqrt(2.0) + 1e-9);
  CHECK(s["max_abs_a3"].get<double>() <= 5.0 + 1e-9);
  CHECK(s["min_margin_a2"].get<double>() >= -1e-9);

  const std::string text = slurp(csv);
  std::istringstream lines(text);
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) ++n;
  CHECK(n == 3001);
  const json m = json::parse(slurp(dir / "v.csv.manifest.json"));
  CHECK(m["command"] == "verify");
  CHECK(m["seed"] == 5);
  CHECK(m["parameters"]["run"]["samples"] == 3000);

  const fs::path csv2 = dir / "w.csv";
  REQUIRE(run(with({"verify", "--samples", "3000", "--seed", "5", "--threads", "3", "--out", csv2.string()}, kKoebeB)).code ==
          kExitOk);
  CHECK(slurp(csv2) == text);

  const Run empty = run({"verify", "--samples", "0", "--out", (dir / "e.csv").string()});
  CHECK(empty.code == kExitOk);
  CHECK(json::parse(empty.out)["status"] == "PASS-vacuous");
  CHECK(slurp(dir / "e.csv") ==
        "seed,p1_re,p1_im,p2_re,p2_im,q2_re,q2_im,abs_a2,abs_a3,bound_a2,bound_a3,margin_a2,margin_a3\n");

  CHECK(run({"verify", "--B1", "1", "--B2", "2"}).code == kExitDegenerate);
  CHECK(run({"verify", "--samples", "-3"}).code == kExitValidation);
  fs::remove_all(dir);
}

TEST_CASE("oracle command") {
  const Run r = run(with({"oracle", "--random", "500"}, kKoebeB));
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("a2") != std::string::npos);
  CHECK(r.out.find("1.4142135623730951") != std::string::npos);

  const Run g = run({"oracle", "--kind", "G", "--gamma", "2", "--lambda", "0", "--random", "500"});
  CHECK(g.code == kExitOk);
  CHECK(g.out.find("a3_lin_gamma") != std::string::npos);
  CHECK(g.out.find("a3 |gamma| form=10 corollary=18 diff=8") != std::string::npos);

  const Run g1 = run({"oracle", "--kind", "G", "--lambda", "0.5", "--random", "100"});
  CHECK(g1.out.find("corollary") == std::string::npos);

  CHECK(run({"oracle", "--B1", "1", "--B2", "2"}).code == kExitDegenerate);
  CHECK(run({"oracle", "--grid", "0"}).code == kExitValidation);
}

TEST_CASE("zeta command") {
  const Run r = run({"zeta", "--z", "0", "--s", "2", "--a", "3"});
  REQUIRE(r.code == kExitOk);
  const json j = json::parse(r.out);
  CHECK(std::abs(j["value"][0].get<double>() - 1.0 / 9.0) < 1e-16);
  CHECK(run({"zeta", "--z", "1", "--s", "2", "--a", "3"}).code == kExitValidation);
  CHECK(run({"zeta", "--z", "0.5", "--s", "2"}).code == kExitValidation);
  CHECK(run({"zeta", "--z", "0.9999999", "--s", "-4", "--a", "1", "--tol", "1e-15"}).code == kExitInternal);
}

TEST_CASE("operator command") {
  const fs::path dir = scratch_dir();
  const std::string f = (dir / "f.json").string();
  spit(f, "[[0,0],[1,0],[0.5,-0.25],[2,1],[-1,0.5]]");
  const Run echo = run({"operator", "--mu", "0", "--b", "1", "--coeffs", f});
  REQUIRE(echo.code == kExitOk);
  CHECK(json::parse(echo.out) == json::parse(slurp(f)));

  const Run jks = run({"operator", "--preset", "jung-kim-srivastava", "--sigma", "2", "--coeffs", f});
  const json j = json::parse(jks.out);
  CHECK(j[3][0].get<double>() == doctest::Approx(0.5));
  CHECK(j[3][1].get<double>() == doctest::Approx(0.25));

  const Run cx = run({"operator", "--mu", "0.5,0.5", "--b", "1", "--coeffs", f, "--variant", "complex"});
  CHECK(cx.code == kExitOk);
  CHECK(json::parse(cx.out) != json::parse(run({"operator", "--mu", "0.5,0.5", "--b", "1", "--coeffs", f}).out));

  spit(dir / "bad.json", "[[0,0],[2,0]]");
  CHECK(run({"operator", "--coeffs", (dir / "bad.json").string()}).code == kExitValidation);
  CHECK(run({"operator", "--mu", "1", "--b", "-2", "--coeffs", f}).code == kExitValidation);
  CHECK(run({"operator", "--coeffs", f, "--variant", "weird"}).code == kExitValidation);
  fs::remove_all(dir);
}

TEST_CASE("search and sweep commands") {
  const fs::path dir = scratch_dir();
  const std::vector<std::string> args =
      with({"search", "--budget", "800", "--restarts", "4", "--seed", "9", "--trace", (dir / "t.csv").string()}, kKoebeB);
  const Run a = run(args);
  const Run b = run(args);
  REQUIRE(a.code == kExitOk);
  const json ja = json::parse(a.out), jb = json::parse(b.out);
  CHECK(ja["report"] == jb["report"]);
  CHECK(ja["report"]["ratio"].get<double>() <= 1.0 + 1e-9);
  CHECK(ja["manifest"]["seed"] == 9);
  const std::string trace = slurp(dir / "t.csv");
  CHECK(trace.rfind("restart,evaluation,value,best\n", 0) == 0);

  const Run s = run({"sweep", "--axis", "lambda", "--values", "0,0.5,1"});
  REQUIRE(s.code == kExitOk);
  const json js = json::parse(s.out);
  REQUIRE(js["entries"].size() == 3);
  CHECK(js["entries"][2]["bounds"]["a3_bound"].get<double>() == doctest::Approx(5.0 / 3.0));

  const Run st = run({"sweep", "--phi", "strongly-starlike", "--axis", "alpha", "--values", "0.25,0.5",
                      "--search", "--budget", "200", "--restarts", "2"});
  CHECK(st.code == kExitOk);
  CHECK(json::parse(st.out)["entries"][0].contains("tightness"));

  const Run bad = run({"sweep", "--kind", "G", "--axis", "lambda", "--values", "0.5,1"});
  CHECK(bad.code == kExitValidation);
  CHECK(bad.err.find("lambda=1") != std::string::npos);
  CHECK(run({"sweep", "--axis", "lambda", "--values", "a,b"}).code == kExitValidation);
  fs::remove_all(dir);
}
