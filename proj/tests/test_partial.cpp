#include <doctest.h>

#include <random>

#include "qmt/partial.hpp"
#include "qmt/quantale.hpp"
#include "oracles.hpp"

using namespace qmt;

namespace {

bool all_pass(const std::vector<CheckResult>& checks) {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

bool named_pass(const std::vector<CheckResult>& checks, const char* name) {
  for (const CheckResult& c : checks)
    if (c.name == name) return c.pass;
  return false;
}

}  // namespace

TEST_CASE("is_frame recognizes join-addition lattices only") {
  CHECK(is_frame(truth_quantale()));
  CHECK_FALSE(is_frame(extreal_quantale()));
  CHECK_FALSE(is_frame(ddf_quantale()));
  LatticeQuantale b3(FiniteLattice::boolean(3));
  CHECK(is_frame(b3));
  // A lattice with a non-join addition is not a frame.
  FiniteLattice d = FiniteLattice::diamond();
  std::vector<std::vector<bool>> leq(4, std::vector<bool>(4));
  std::vector<std::string> names;
  for (int i = 0; i < 4; ++i) {
    names.push_back(d.name(i));
    for (int j = 0; j < 4; ++j) leq[i][j] = d.leq(i, j);
  }
  std::vector<std::vector<int>> add(4, std::vector<int>(4, d.top()));
  for (int i = 0; i < 4; ++i) {
    add[i][d.zero()] = i;
    add[d.zero()][i] = i;
  }
  LatticeQuantale always_top(FiniteLattice(names, leq, add, d.zero(), d.top()));
  CHECK_FALSE(is_frame(always_top));
}

TEST_CASE("partial axioms on a small example") {
  LatticeQuantale b3(FiniteLattice::boolean(3));
  std::mt19937_64 rng(71);
  PartialVSpace s = testing::random_partial_space(b3, rng, 4);
  CHECK(all_pass(check_partial_axioms(s)));

  PartialVSpace broken = s;
  broken.dist[0][1] = b3.top();  // symmetry broken against dist[1][0]
  broken.dist[0][0] = b3.zero();
  if (!b3.equal(broken.dist[1][0], b3.top()))
    CHECK_FALSE(named_pass(check_partial_axioms(broken), "partial-symmetry"));
}

TEST_CASE("self-distance law is checked") {
  const Quantale& q = truth_quantale();
  PartialVSpace s;
  s.q = &q;
  s.points = {"x", "y"};
  s.dist.assign(2, std::vector<Value>(2, q.zero()));
  s.dist[0][0] = q.top();  // d(x,x) > d(x,y): not a partial metric
  CHECK_FALSE(
      named_pass(check_partial_axioms(s), "partial-small-self-distance"));
}

TEST_CASE("dualization is involutive and transports the laws") {
  LatticeQuantale b3(FiniteLattice::boolean(3));
  LatticeQuantale dia(FiniteLattice::diamond());
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 100; ++trial) {
    const Quantale& frame =
        (trial % 3 == 0) ? static_cast<const Quantale&>(truth_quantale())
                         : (trial % 3 == 1 ? static_cast<const Quantale&>(b3)
                                           : dia);
    PartialVSpace s = testing::random_partial_space(frame, rng, 4);
    REQUIRE(all_pass(check_partial_axioms(s)));
    OmegaEqualitySet o = to_omega_set(s);
    CHECK(all_pass(check_omega_laws(o)));
    PartialVSpace back = from_omega_set(o);
    REQUIRE(back.size() == s.size());
    for (int i = 0; i < s.size(); ++i)
      for (int j = 0; j < s.size(); ++j)
        CHECK(frame.equal(back.dist[i][j], s.dist[i][j]));
    CHECK(all_pass(check_partial_axioms(back)));
  }
}

TEST_CASE("omega laws flag a symmetry defect") {
  LatticeQuantale dia(FiniteLattice::diamond());
  std::mt19937_64 rng(79);
  PartialVSpace s = testing::random_partial_space(dia, rng, 3);
  OmegaEqualitySet o = to_omega_set(s);
  o.e[0][1] = dia.top();
  o.e[1][0] = dia.zero();
  CHECK_FALSE(named_pass(check_omega_laws(o), "omega-symmetry"));
}

TEST_CASE("dualization refuses non-frames") {
  PartialVSpace s;
  s.q = &extreal_quantale();
  s.points = {"x"};
  s.dist.assign(1, std::vector<Value>(1, s.q->zero()));
  CHECK_THROWS_AS(to_omega_set(s), QuantaleError);
}
