#include "quadlie/commands.hpp"

#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace quadlie;
namespace fs = std::filesystem;

namespace {

const fs::path corpus = QUADLIE_CORPUS_DIR;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::string& args, const std::string& stdin_text = "") {
  static int counter = 0;
  const fs::path dir = fs::temp_directory_path() / ("quadlie_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string id = std::to_string(counter++);
  const fs::path in = dir / ("in" + id), out = dir / ("out" + id), err = dir / ("err" + id);
  std::ofstream(in, std::ios::binary) << stdin_text;
  const std::string cmd = std::string(QUADLIE_CLI_PATH) + " " + args + " < " + in.string() + " > " + out.string() +
                          " 2> " + err.string();
  int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

std::string doc(const std::string& name) { return (corpus / name).string(); }

}  // namespace

TEST_CASE("check reports a clean Heisenberg algebra") {
  Run r = run("check " + doc("h1.json"));
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["center_dim"] == 1);
  CHECK(j["jacobi_violations"].empty());
  CHECK(j["nilpotent"] == true);
}

TEST_CASE("check lists invariance violations of a wrong metric") {
  json j = json::parse(slurp(doc("h1.json")));
  j["metric"] = json{{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}};
  Run r = run("check -", j.dump());
  CHECK(r.code == 1);
  json rep = json::parse(r.out);
  CHECK_FALSE(rep["metric_violations"].empty());
  CHECK(rep["metric_violations"][0]["kind"] == "not_invariant");
}

TEST_CASE("malformed rationals and JSON are input errors") {
  json j = json::parse(slurp(doc("h1.json")));
  j["brackets"][0]["terms"][0]["c"] = "1/0";
  Run r = run("check -", j.dump());
  CHECK(r.code == 2);
  CHECK(r.err.find("$.brackets[0].terms[0].c") != std::string::npos);
  Run s = run("check -", "{\"name\": ");
  CHECK(s.code == 2);
  CHECK(s.err.find("byte") != std::string::npos);
  j = json::parse(slurp(doc("h1.json")));
  j["brackets"][0]["i"] = 2;
  CHECK(run("check -", j.dump()).code == 2);
}

TEST_CASE("construct reproduces the corpus documents") {
  Run r = run("construct " + doc("constructions/heisenberg_m1.json"));
  CHECK(r.code == 0);
  CHECK(r.out == slurp(doc("h1.json")));
  Run e = run("construct " + doc("constructions/extend_heisenberg_diag.json"));
  CHECK(e.code == 0);
  CHECK(e.out == slurp(doc("h1_phi.json")));
}

TEST_CASE("construct names the violated precondition") {
  json c{{"kind", "extend_heisenberg"}, {"parameters", {{"m", 1}, {"phi", json::array({json::array({"0", "0"}), json::array({"0", "0"})})}}}};
  Run r = run("construct -", c.dump());
  CHECK(r.code == 2);
  CHECK(r.err.find("phi must be invertible on V") != std::string::npos);
  json u{{"kind", "nonsense"}, {"parameters", json::object()}};
  CHECK(run("construct -", u.dump()).code == 2);
}

TEST_CASE("construct writes to --out") {
  const fs::path out = fs::temp_directory_path() / ("quadlie_out_" + std::to_string(::getpid()) + ".json");
  Run r = run("construct " + doc("constructions/heisenberg_m1.json") + " --out " + out.string());
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(slurp(out) == slurp(doc("h1.json")));
  fs::remove(out);
}

TEST_CASE("analyze the extended Heisenberg algebra") {
  Run r = run("analyze " + doc("h1_phi.json"));
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["verdict"]["kind"] == "ExtendedHeisenberg");
  CHECK(j["complement"]["exists"] == true);
  CHECK(j["nilradical_theorem"]["all_pass"] == true);
  CHECK(j["heisenberg_ideal"]["source"] == "nilradical");
  CHECK(j["recovery"]["s_dim"] == 0);
}

TEST_CASE("analyze a decomposable build") {
  Run r = run("analyze " + doc("build_line.json"));
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["verdict"]["kind"] == "Decomposable");
  CHECK(j["verdict"]["split"]["first_dim"] == 1);
  CHECK(j["verdict"]["split"]["second_dim"] == 4);
}

TEST_CASE("analyze with an explicit ideal") {
  Run r = run("analyze " + doc("build_sl2.json") + " --ideal 4,5,6");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["heisenberg_ideal"]["source"] == "given");
  CHECK(j["verdict"]["kind"] == "NotApplicable");
  CHECK(j["recovery"]["s_dim"] == 3);
}

TEST_CASE("quadratic analysis needs a metric") {
  Run r = run("analyze " + doc("oscillator_lie.json"));
  CHECK(r.code == 2);
  CHECK(r.err.find("metric") != std::string::npos);
  Run l = run("analyze --lie-only " + doc("oscillator_lie.json"));
  CHECK(l.code == 0);
  CHECK(json::parse(l.out)["nilradical"]["dim"] == 3);
}

TEST_CASE("roundtrip") {
  Run r = run("roundtrip " + doc("h1_phi.json") + " --ideal 1,2,3");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["equal"] == true);
  CHECK(j["s_dim"] == 0);
  Run s = run("roundtrip " + doc("build_sl2.json") + " --ideal 4,5,6 --seed 17");
  REQUIRE(s.code == 0);
  CHECK(json::parse(s.out)["equal"] == true);
  CHECK(run("roundtrip " + doc("build_sl2.json") + " --ideal 4,5,6 --seed 17").out == s.out);
  Run bad = run("roundtrip " + doc("h1_phi.json") + " --ideal 0,1,2");
  CHECK(bad.code == 2);
  CHECK(run("roundtrip " + doc("h1_phi.json") + " --ideal x").code == 2);
  CHECK(run("roundtrip " + doc("h1_phi.json")).code == 2);
}

TEST_CASE("forms") {
  Run r = run("forms " + doc("sl2_killing.json"));
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["count"] == 1);
  CHECK_FALSE(j["nondegenerate_example"].is_null());
  Run h = run("forms " + doc("h1.json"));
  CHECK(json::parse(h.out)["nondegenerate_example"].is_null());
}

TEST_CASE("reports are byte-identical across runs") {
  for (const char* name : {"h1_phi.json", "build_sl2.json", "build_plane.json"}) {
    Run a = run(std::string("analyze ") + doc(name));
    Run b = run(std::string("analyze ") + doc(name));
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("every corpus document reprints byte-exactly") {
  int count = 0;
  for (const auto& e : fs::directory_iterator(corpus)) {
    if (e.path().extension() != ".json") continue;
    const std::string text = slurp(e.path());
    CHECK(print_json(to_json(algebra_from_json(parse_json_text(text)))) == text);
    ++count;
  }
  CHECK(count >= 5);
}

TEST_CASE("document parser rejects malformed input") {
  json base = json::parse(slurp(doc("h1.json")));
  auto rejects = [](const json& j) {
    try {
      algebra_from_json(j);
      return false;
    } catch (const document_error&) {
      return true;
    }
  };
  json j = base;
  j["dim"] = -1;
  CHECK(rejects(j));
  j = base;
  j["basis"].push_back("extra");
  CHECK(rejects(j));
  j = base;
  j["brackets"].push_back(base["brackets"][0]);
  CHECK(rejects(j));
  j = base;
  j["metric"] = json{{"1", "2", "0"}, {"0", "1", "0"}, {"0", "0", "1"}};
  CHECK(rejects(j));
  j = base;
  j["extra"] = 1;
  CHECK(rejects(j));
  j = base;
  j["brackets"][0]["terms"][0]["c"] = 1;
  CHECK(rejects(j));
}
