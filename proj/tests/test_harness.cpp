#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qmt/harness.hpp"
#include "qmt/io.hpp"

using namespace qmt;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path root;
  TempDir() {
    root = fs::temp_directory_path() /
           ("qmt-harness-test-" + std::to_string(::getpid()));
    fs::create_directories(root);
  }
  ~TempDir() { fs::remove_all(root); }
  std::string write(const std::string& name, const std::string& text) {
    fs::path p = root / name;
    std::ofstream(p) << text;
    return p.string();
  }
};

int run_quiet(const RunConfig& c, std::string* text = nullptr) {
  std::ostringstream out, err;
  int rc = run_to_stream(c, out, err);
  if (text) *text = out.str();
  return rc;
}

}  // namespace

TEST_CASE("laws command reports success and is byte-stable") {
  RunConfig c;
  c.command = "laws";
  c.quantale = "unit";
  c.budget = 200;
  c.seed = 5;
  std::string first, second;
  CHECK(run_quiet(c, &first) == 0);
  CHECK(run_quiet(c, &second) == 0);
  CHECK(first == second);
  CHECK(first.find("command: laws --quantale unit --budget 200") !=
        std::string::npos);
  CHECK(first.find("seed: 5") != std::string::npos);
}

TEST_CASE("json format renders the same verdicts") {
  RunConfig c;
  c.command = "laws";
  c.quantale = "truth";
  c.budget = 50;
  c.format = "json";
  std::string text;
  CHECK(run_quiet(c, &text) == 0);
  CHECK(text.find("\"command\"") != std::string::npos);
  CHECK(text.find("\"checks\"") != std::string::npos);
}

TEST_CASE("failing checks exit 1, unusable input exits 2") {
  TempDir tmp;
  std::string bad = tmp.write("bad.vsp",
                              "quantale: extreal\npoints: x y z\n"
                              "dist: x y 1\ndist: y z 1\ndist: x z 9\n");
  RunConfig c;
  c.command = "space-check";
  c.inputs = {bad};
  std::string text;
  CHECK(run_quiet(c, &text) == 1);
  CHECK(text.find("space-subadditivity FAIL") != std::string::npos);

  RunConfig missing;
  missing.command = "space-check";
  missing.inputs = {(tmp.root / "nope.vsp").string()};
  std::ostringstream out, err;
  CHECK(run_to_stream(missing, out, err) == 2);
  CHECK_FALSE(err.str().empty());
}

TEST_CASE("reports can be written to a file") {
  TempDir tmp;
  RunConfig c;
  c.command = "laws";
  c.quantale = "truth";
  c.budget = 50;
  c.out = (tmp.root / "report.txt").string();
  std::ostringstream out, err;
  CHECK(run_to_stream(c, out, err) == 0);
  std::ifstream in(c.out);
  std::stringstream body;
  body << in.rdbuf();
  CHECK(body.str().find("summary:") != std::string::npos);
}

TEST_CASE("struct-embed runs from a map string") {
  TempDir tmp;
  tmp.write("s.vstr", "quantale: extreal\npoints: p q\ndist: p q 1\n");
  tmp.write("t.vstr",
            "quantale: extreal\npoints: a b c\n"
            "dist: a b 1\ndist: a c 2\ndist: b c 1\n");
  RunConfig c;
  c.command = "struct-embed";
  c.inputs = {(tmp.root / "s.vstr").string(), (tmp.root / "t.vstr").string()};
  c.map = "p:a,q:b";
  CHECK(run_quiet(c) == 0);
  c.map = "p:a,q:c";  // d(p,q)=1 but d(a,c)=2
  std::string text;
  CHECK(run_quiet(c, &text) == 1);
  CHECK(text.find("embedding-isometry FAIL") != std::string::npos);
}

TEST_CASE("class commands run end to end from files") {
  TempDir tmp;
  tmp.write("one.vstr", "quantale: extreal\npoints: p\n");
  tmp.write("two.vstr", "quantale: extreal\npoints: p q\ndist: p q 1\n");
  std::string cls = tmp.write("c.vcls",
                              "structure: A one.vstr\nstructure: B two.vstr\n"
                              "morphism: A B p:p\n");
  for (const char* cmd : {"class-ap", "class-tame"}) {
    RunConfig c;
    c.command = cmd;
    c.inputs = {cls};
    CHECK(run_quiet(c) == 0);
  }
  RunConfig t;
  t.command = "class-types";
  t.inputs = {cls};
  t.base = "A";
  std::string text;
  CHECK(run_quiet(t, &text) == 0);
  CHECK(text.find("type-") != std::string::npos);
}

TEST_CASE("unknown command is an error") {
  RunConfig c;
  c.command = "frobnicate";
  std::ostringstream out, err;
  CHECK(run_to_stream(c, out, err) == 2);
}
