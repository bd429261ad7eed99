#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "qmt/io.hpp"

using namespace qmt;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path root;
  TempDir() {
    root = fs::temp_directory_path() /
           ("qmt-io-test-" + std::to_string(::getpid()));
    fs::create_directories(root);
  }
  ~TempDir() { fs::remove_all(root); }
  std::string write(const std::string& name, const std::string& text) {
    fs::path p = root / name;
    std::ofstream(p) << text;
    return p.string();
  }
};

}  // namespace

TEST_CASE("lattice files load with closure applied") {
  TempDir tmp;
  std::string path = tmp.write("dia.qlat",
                               "elements: bot a b top\n"
                               "leq: bot a\nleq: bot b\nleq: a top\nleq: b top\n"
                               "add: join\nzero: bot\ntop: top\n");
  FiniteLattice lat = load_lattice_file(path);
  CHECK(lat.size() == 4);
  CHECK(lat.leq(*lat.id_of("bot"), *lat.id_of("top")));  // closure
  CHECK(lat.validate().empty());
}

TEST_CASE("lattice loader rejects structural problems fail-fast") {
  TempDir tmp;
  CHECK_THROWS_AS(load_lattice_file(tmp.write("none.qlat", "zero: x\n")),
                  ParseError);
  CHECK_THROWS_AS(
      load_lattice_file(tmp.write("nz.qlat", "elements: a b\nadd: join\n")),
      ParseError);
  // Two maximal elements: no joins, so not a lattice order.
  CHECK_THROWS_AS(load_lattice_file(tmp.write(
                      "nl.qlat", "elements: z a b\nleq: z a\nleq: z b\n"
                                 "add: join\nzero: z\ntop: a\n")),
                  ParseError);
  // Missing add rows without the join shorthand.
  CHECK_THROWS_AS(load_lattice_file(tmp.write(
                      "mi.qlat", "elements: z t\nleq: z t\n"
                                 "add: z z z\nzero: z\ntop: t\n")),
                  ParseError);
}

TEST_CASE("a corrupted addition table still loads for the law suite") {
  TempDir tmp;
  std::string path = tmp.write("bad.qlat",
                               "elements: z t\nleq: z t\n"
                               "add: z z t\nadd: z t t\nadd: t z t\n"
                               "add: t t t\nzero: z\ntop: t\n");
  FiniteLattice lat = load_lattice_file(path);  // order is fine; loads
  CHECK_FALSE(lat.validate(true).empty());      // but z + z != z
}

TEST_CASE("space files mirror missing entries and default the diagonal") {
  TempDir tmp;
  QuantaleRegistry reg;
  std::string path = tmp.write("s.vsp",
                               "quantale: extreal\npoints: x y\n"
                               "dist: x y 2\n");
  VSpace s = load_space_file(path, reg);
  CHECK(s.q->format(s.d(0, 1)) == "2");
  CHECK(s.q->format(s.d(1, 0)) == "2");
  CHECK(s.q->equal(s.d(0, 0), s.q->zero()));
  CHECK_FALSE(s.separated_intent);
}

TEST_CASE("explicit asymmetric entries survive loading") {
  TempDir tmp;
  QuantaleRegistry reg;
  std::string path = tmp.write("a.vsp",
                               "quantale: extreal\npoints: x y\n"
                               "dist: x y 2\ndist: y x 3\n");
  VSpace s = load_space_file(path, reg);
  CHECK(s.q->format(s.d(0, 1)) == "2");
  CHECK(s.q->format(s.d(1, 0)) == "3");  // kept so checks can flag it
}

TEST_CASE("space loader diagnostics carry the line number") {
  TempDir tmp;
  QuantaleRegistry reg;
  auto load = [&](const std::string& text) {
    return load_space_file(tmp.write("bad.vsp", text), reg);
  };
  CHECK_THROWS_WITH_AS(load("quantale: extreal\npoints: x\ndist: x z 1\n"),
                       doctest::Contains(":3:"), ParseError);
  CHECK_THROWS_AS(load("points: x y\ndist: x y 1\n"), ParseError);
  CHECK_THROWS_AS(load("quantale: extreal\npoints: x y\ndist: x y 1\n"
                       "dist: y x 2\ndist: x y 1\n"),
                  ParseError);  // duplicate
  CHECK_THROWS_AS(load("quantale: extreal\npoints: x y\n"), ParseError);
  CHECK_THROWS_AS(load("quantale: extreal\npoints: x y\ndist: x y pear\n"),
                  ParseError);
  CHECK_THROWS_AS(load("quantale extreal\n"), ParseError);  // missing colon
}

TEST_CASE("registry caches lattice instances per canonical path") {
  TempDir tmp;
  QuantaleRegistry reg;
  tmp.write("l.qlat",
            "elements: z t\nleq: z t\nadd: join\nzero: z\ntop: t\n");
  const Quantale* a = reg.resolve("lattice:l.qlat", tmp.root.string());
  const Quantale* b = reg.resolve("lattice:" + (tmp.root / "l.qlat").string());
  CHECK(a == b);
  CHECK(reg.resolve("extreal") == reg.resolve("extreal"));
  CHECK_THROWS_AS(reg.resolve("galaxy"), ParseError);
}

TEST_CASE("structure files parse symbols and enforce totality") {
  TempDir tmp;
  QuantaleRegistry reg;
  std::string good = tmp.write("m.vstr",
                               "quantale: extreal\npoints: a b\ndist: a b 1\n"
                               "constant: e a\n"
                               "function: f a b\nfunction: f b b\n"
                               "relation: R a 0\nrelation: R b 1\n");
  VStructure m = load_structure_file(good, reg, true);
  CHECK(m.sig.functions == std::vector<std::pair<std::string, int>>{{"f", 1}});
  CHECK(m.constant_map.at("e") == 0);

  std::string partial = tmp.write("p.vstr",
                                  "quantale: extreal\npoints: a b\ndist: a b 1\n"
                                  "function: f a b\n");
  CHECK_THROWS_AS(load_structure_file(partial, reg, false), ParseError);

  // An expanding map loads when nonexpansion is not required (struct-check
  // wants to report it), but is rejected for class catalogs.
  std::string expanding = tmp.write("x.vstr",
                                    "quantale: extreal\n"
                                    "points: a b c\n"
                                    "dist: a b 1\ndist: a c 5\ndist: b c 5\n"
                                    "function: f a a\nfunction: f b c\n"
                                    "function: f c c\n");
  CHECK_NOTHROW(load_structure_file(expanding, reg, false));
  CHECK_THROWS_AS(load_structure_file(expanding, reg, true), ParseError);
}

TEST_CASE("class files wire morphisms by structure name") {
  TempDir tmp;
  QuantaleRegistry reg;
  tmp.write("one.vstr", "quantale: extreal\npoints: p\n");
  tmp.write("two.vstr", "quantale: extreal\npoints: p q\ndist: p q 1\n");
  std::string cls = tmp.write("c.vcls",
                              "structure: A one.vstr\nstructure: B two.vstr\n"
                              "morphism: A B p:p\nls-bound: 2\n");
  ToyClass k = load_class_file(cls, reg);
  CHECK(k.structures().size() == 2);
  CHECK(k.ls_bound() == 2);
  CHECK(ap_holds(k));

  std::string bad = tmp.write("bad.vcls",
                              "structure: A one.vstr\nstructure: B two.vstr\n"
                              "morphism: A C p:p\n");
  CHECK_THROWS_AS(load_class_file(bad, reg), ParseError);
  std::string notot = tmp.write("notot.vcls",
                                "structure: B two.vstr\nmorphism: B B p:p\n");
  CHECK_THROWS_AS(load_class_file(notot, reg), ParseError);
}

TEST_CASE("omega files need a frame and accept eq rows") {
  TempDir tmp;
  QuantaleRegistry reg;
  tmp.write("dia.qlat",
            "elements: bot a b top\n"
            "leq: bot a\nleq: bot b\nleq: a top\nleq: b top\n"
            "add: join\nzero: bot\ntop: top\n");
  std::string good = tmp.write("o.omega",
                               "quantale: lattice:dia.qlat\npoints: u v\n"
                               "eq: u u bot\neq: v v bot\neq: u v a\n");
  OmegaEqualitySet o = load_omega_file(good, reg);
  CHECK(o.size() == 2);
  CHECK(o.frame->format(o.E(0, 1)) == "a");

  std::string notframe = tmp.write("nf.omega",
                                   "quantale: extreal\npoints: u v\n"
                                   "eq: u v 1\n");
  CHECK_THROWS_AS(load_omega_file(notframe, reg), ParseError);
}
