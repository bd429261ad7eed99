#include <doctest.h>

#include <vector>

#include "qmt/quantale.hpp"
#include "oracles.hpp"

using namespace qmt;

namespace {

Value num(const Quantale& q, const char* text) { return q.parse(text); }

}  // namespace

TEST_CASE("extreal arithmetic and order") {
  const Quantale& q = extreal_quantale();
  CHECK(q.format(q.add(num(q, "2"), num(q, "3"))) == "5");
  CHECK(q.format(q.truncated_sub(num(q, "5"), num(q, "3"))) == "2");
  CHECK(q.equal(q.truncated_sub(num(q, "3"), num(q, "5")), q.zero()));
  CHECK(q.leq(num(q, "1"), num(q, "2")));
  CHECK_FALSE(q.leq(num(q, "2"), num(q, "1")));
  CHECK(q.format(q.top()) == "inf");
  CHECK(q.equal(q.add(num(q, "inf"), num(q, "3")), q.top()));
  CHECK(q.equal(q.truncated_sub(q.top(), q.top()), q.zero()));
  CHECK(q.equal(q.truncated_sub(num(q, "3"), q.top()), q.zero()));
  CHECK(q.equal(q.truncated_sub(q.top(), num(q, "3")), q.top()));
}

TEST_CASE("extreal way-above is strict inequality with an infinite top") {
  const Quantale& q = extreal_quantale();
  CHECK(q.way_above(num(q, "2"), num(q, "1")));
  CHECK_FALSE(q.way_above(num(q, "1"), num(q, "1")));
  CHECK_FALSE(q.way_above(num(q, "1"), num(q, "2")));
  CHECK(q.way_above(q.top(), q.top()));
  CHECK(q.way_above(q.top(), num(q, "7")));
}

TEST_CASE("unit addition saturates at one") {
  const Quantale& q = unit_quantale();
  CHECK(q.format(q.add(num(q, "0.8"), num(q, "0.5"))) == "1");
  CHECK(q.format(q.truncated_sub(num(q, "0.9"), num(q, "0.4"))) == "0.5");
  CHECK(q.way_above(num(q, "1"), num(q, "1")));  // top is way above itself
  CHECK_FALSE(q.way_above(num(q, "0.5"), num(q, "0.5")));
}

TEST_CASE("errors quantale runs in the reversed order") {
  const Quantale& q = errors_quantale();
  CHECK(q.format(q.zero()) == "1");
  CHECK(q.format(q.top()) == "0");
  CHECK(q.leq(num(q, "0.7"), num(q, "0.3")));  // closer to 1 means smaller
  // Product-style addition: x (+) y = max(x + y - 1, 0).
  CHECK(q.format(q.add(num(q, "0.7"), num(q, "0.6"))) == "0.3");
  CHECK(q.equal(q.add(num(q, "0.3"), num(q, "0.4")), q.top()));
  // Residual: least r (largest numerically) with add(p, r) above q.
  CHECK(q.format(q.truncated_sub(num(q, "0.3"), num(q, "0.9"))) == "0.4");
  CHECK(q.equal(q.truncated_sub(num(q, "0.9"), num(q, "0.3")), q.zero()));
  // The reversed order swaps the roles: meet is the numeric min.
  std::vector<Value> xs{num(q, "0.3"), num(q, "0.7")};
  CHECK(q.format(q.meet(xs)) == "0.7");
  CHECK(q.format(q.join(xs)) == "0.3");
}

TEST_CASE("truth quantale is the two-element frame") {
  const Quantale& q = truth_quantale();
  CHECK(q.equal(q.add(q.zero(), q.zero()), q.zero()));
  CHECK(q.equal(q.add(q.zero(), q.top()), q.top()));
  CHECK(q.way_above(q.zero(), q.zero()));  // finite lattice: way-above = geq
  CHECK(q.way_above(q.top(), q.zero()));
  CHECK_FALSE(q.way_above(q.zero(), q.top()));
}

TEST_CASE("ddf quantale orders functions opposite-pointwise") {
  const Quantale& q = ddf_quantale();
  Value close = q.parse("ddf(1:0.9)");
  Value far = q.parse("ddf(2:0.5)");
  CHECK(q.leq(close, far));
  CHECK_FALSE(q.leq(far, close));
  CHECK(q.equal(q.zero(), q.parse("eps0")));
  CHECK(q.format(q.top()) == "ddf()");
  CHECK(q.way_above(far, close));
  CHECK_FALSE(q.way_above(close, far));
  // Addition is sup-convolution: distances accumulate.
  Value sum = q.add(far, far);
  CHECK(sum.fn == Ddf::zero());  // 0.5 + 0.5 - 1 = 0: all mass truncates
  Value sum2 = q.add(close, close);
  CHECK(sum2.fn == Ddf::step(2.0, 0.8));
}

TEST_CASE("ddf residual against a grid of probes") {
  const Quantale& q = ddf_quantale();
  Value a = q.parse("ddf(2:0.5)");
  Value b = q.parse("ddf(1:0.9)");
  Value r = q.truncated_sub(a, b);
  // Defining property at the residual: b + r is above a, and r is minimal
  // among the sampled step functions with that property.
  CHECK(q.leq(a, q.add(b, r)));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    Ddf cand = Sampler::random_rational_ddf(rng);
    Value c;
    c.tag = Instance::Ddf;
    c.fn = cand;
    if (q.leq(a, q.add(b, c))) CHECK(q.leq(r, c));
  }
}

TEST_CASE("numeric residuals agree with the grid oracle") {
  struct Case {
    const Quantale* q;
    double hi;
  };
  for (const Case& c : {Case{&extreal_quantale(), 4.0},
                        Case{&unit_quantale(), 1.0},
                        Case{&errors_quantale(), 1.0}}) {
    Sampler s(*c.q, 31);
    for (int i = 0; i < 60; ++i) {
      Value a = s.next();
      Value b = s.next();
      if (a.num > 4.0 && c.q->kind() == Instance::ExtReal) continue;
      Value closed = c.q->truncated_sub(a, b);
      Value grid = testing::grid_residual(*c.q, a, b, 1e-3, c.hi);
      CHECK(c.q->gauge(closed, grid) <= 1.1e-3);
    }
  }
}

TEST_CASE("safa sequences are antitone with terms way above zero") {
  for (const Quantale* q :
       {&extreal_quantale(), &unit_quantale(), &errors_quantale(),
        &ddf_quantale(), &truth_quantale()}) {
    for (int n = 0; n < 12; ++n) {
      CHECK(q->way_above(q->safa(n), q->zero()));
      CHECK(q->leq(q->safa(n + 1), q->safa(n)));
    }
  }
}

TEST_CASE("way-above refutation finds a family for a false claim") {
  const Quantale& q = extreal_quantale();
  Value one = q.parse("1");
  auto fams = q.standard_families(one, 12);
  // 1 is not way above 1: some shrinking family has meet 1 but no member
  // below 1.
  auto refute = way_above_refute(q, one, one, fams);
  REQUIRE(refute.has_value());
  for (const Value& e : refute->elements) CHECK_FALSE(q.leq(e, one));
  // 2 is way above 1: no standard family can refute it.
  CHECK_FALSE(way_above_refute(q, q.parse("2"), one, fams).has_value());
}

TEST_CASE("way-above refutation works on ddf support boundaries") {
  const Quantale& q = ddf_quantale();
  Value b = q.parse("ddf(1:0.5)");
  auto fams = q.standard_families(b, 12);
  // b is never way above itself in this instance.
  auto refute = way_above_refute(q, b, b, fams);
  CHECK(refute.has_value());
}

TEST_CASE("parse and format round-trip") {
  for (const Quantale* q : {&extreal_quantale(), &unit_quantale(),
                            &errors_quantale(), &ddf_quantale()}) {
    Sampler s(*q, 3);
    for (int i = 0; i < 40; ++i) {
      Value v = s.next();
      CHECK(q->equal(q->parse(q->format(v)), v));
    }
  }
  CHECK_THROWS_AS(extreal_quantale().parse("banana"), QuantaleError);
  CHECK_THROWS_AS(ddf_quantale().parse("ddf(1:"), QuantaleError);
}

TEST_CASE("values are rejected across instances") {
  const Quantale& q = extreal_quantale();
  CHECK_THROWS_AS(q.add(q.zero(), unit_quantale().top()), QuantaleError);
}
