#include <doctest.h>

#include <random>

#include "qmt/ddf.hpp"
#include "qmt/sampler.hpp"
#include "oracles.hpp"

using namespace qmt;

TEST_CASE("ddf canonical form drops redundant entries") {
  // Unsorted input, a zero value, and a dominated value all normalize away.
  Ddf f({2.0, 0.5, 1.0, 3.0}, {0.5, 0.0, 0.25, 0.5});
  CHECK(f.breakpoints() == std::vector<double>{1.0, 2.0});
  CHECK(f.values() == std::vector<double>{0.25, 0.5});
}

TEST_CASE("ddf duplicate breakpoints keep the larger value") {
  Ddf f({1.0, 1.0, 2.0}, {0.25, 0.5, 0.75});
  CHECK(f.breakpoints() == std::vector<double>{1.0, 2.0});
  CHECK(f.values() == std::vector<double>{0.5, 0.75});
}

TEST_CASE("ddf rejects malformed input") {
  CHECK_THROWS(Ddf({-1.0}, {0.5}));
  CHECK_THROWS(Ddf({1.0, 2.0}, {0.75, 0.25}));  // decreasing values
}

TEST_CASE("ddf evaluation is left-continuous") {
  Ddf f({1.0, 2.0}, {0.5, 1.0});
  CHECK(f.at(0.5) == 0.0);
  CHECK(f.at(1.0) == 0.0);       // value jumps after the breakpoint
  CHECK(f.at_right(1.0) == 0.5);
  CHECK(f.at(1.5) == 0.5);
  CHECK(f.at(2.0) == 0.5);
  CHECK(f.at(2.5) == 1.0);
  CHECK(f.sup() == 1.0);
  CHECK(f.support_start() == 1.0);
}

TEST_CASE("ddf zero and epsilon0") {
  CHECK(Ddf::zero().is_zero());
  CHECK(Ddf::zero().support_start() > 1e18);
  Ddf e = Ddf::epsilon0();
  CHECK(e.at_right(0.0) == 1.0);
  CHECK(e.at(0.0) == 0.0);
}

TEST_CASE("boxplus of unit-height steps adds the jump positions") {
  Ddf one = Ddf::step(1.0, 1.0);
  Ddf two = ddf_boxplus(one, one);
  CHECK(two == Ddf::step(2.0, 1.0));
}

TEST_CASE("boxplus truncates sub-unit heights") {
  // sup max(h + h - 1, 0) = 2h - 1 once both jumps are available.
  Ddf f = Ddf::step(1.0, 0.75);
  Ddf g = ddf_boxplus(f, f);
  CHECK(g == Ddf::step(2.0, 0.5));
  Ddf tiny = Ddf::step(1.0, 0.25);
  CHECK(ddf_boxplus(tiny, tiny).is_zero());
}

TEST_CASE("epsilon0 is the boxplus identity") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    Ddf f = Sampler::random_rational_ddf(rng);
    CHECK(ddf_boxplus(f, Ddf::epsilon0()) == f);
    CHECK(ddf_boxplus(Ddf::epsilon0(), f) == f);
  }
}

TEST_CASE("boxplus matches the grid oracle on rational steps") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    Ddf f = Sampler::random_rational_ddf(rng);
    Ddf g = Sampler::random_rational_ddf(rng);
    Ddf h = ddf_boxplus(f, g);
    for (int k = 0; k <= 112; ++k) {
      double t = k / 16.0;
      double want = testing::boxplus_grid_at_right(f, g, t, 1.0 / 16.0);
      CHECK(h.at_right(t) == doctest::Approx(want).epsilon(1e-12));
    }
  }
}

TEST_CASE("pointwise max and min bracket both inputs") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 50; ++i) {
    Ddf f = Sampler::random_rational_ddf(rng);
    Ddf g = Sampler::random_rational_ddf(rng);
    Ddf hi = ddf_pointwise_max(f, g);
    Ddf lo = ddf_pointwise_min(f, g);
    CHECK(ddf_pointwise_leq(f, hi, 0.0));
    CHECK(ddf_pointwise_leq(g, hi, 0.0));
    CHECK(ddf_pointwise_leq(lo, f, 0.0));
    CHECK(ddf_pointwise_leq(lo, g, 0.0));
    for (int k = 0; k <= 56; ++k) {
      double t = k / 8.0;
      CHECK(hi.at_right(t) == std::max(f.at_right(t), g.at_right(t)));
      CHECK(lo.at_right(t) == std::min(f.at_right(t), g.at_right(t)));
    }
  }
}

TEST_CASE("levy gauge separates and vanishes on equality") {
  Ddf f({1.0}, {0.5});
  CHECK(ddf_levy_gauge(f, f) == doctest::Approx(0.0).epsilon(1e-9));
  Ddf g({1.0}, {0.75});
  double d = ddf_levy_gauge(f, g);
  CHECK(d > 0.1);
  CHECK(d == doctest::Approx(ddf_levy_gauge(g, f)).epsilon(1e-9));
}

TEST_CASE("shift_right translates the graph") {
  Ddf f({1.0, 2.0}, {0.5, 1.0});
  Ddf g = f.shift_right(0.5);
  CHECK(g.breakpoints() == std::vector<double>{1.5, 2.5});
  CHECK(g.values() == f.values());
}
