#include <doctest.h>

#include <random>

#include "qmt/finite_lattice.hpp"
#include "qmt/quantale.hpp"
#include "oracles.hpp"

using namespace qmt;

TEST_CASE("boolean lattice structure") {
  FiniteLattice b = FiniteLattice::boolean(3);
  CHECK(b.size() == 8);
  CHECK(b.validate().empty());
  CHECK(b.leq(b.zero(), b.top()));
  for (int a = 0; a < b.size(); ++a) {
    CHECK(b.add(a, b.zero()) == a);  // frame: add is join
    CHECK(b.add(a, b.top()) == b.top());
  }
}

TEST_CASE("diamond meets and joins") {
  FiniteLattice d = FiniteLattice::diamond();
  CHECK(d.size() == 4);
  CHECK(d.validate().empty());
  int a = *d.id_of("a"), b = *d.id_of("b");
  CHECK(*d.meet(a, b) == d.zero());
  CHECK(*d.join(a, b) == d.top());
}

TEST_CASE("validate reports broken monoid laws but loaders can skip them") {
  FiniteLattice d = FiniteLattice::diamond();
  std::vector<std::vector<int>> add(4, std::vector<int>(4, 0));
  // Constant-to-bottom addition: no identity, not monotone.
  std::vector<std::vector<bool>> leq(4, std::vector<bool>(4, false));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) leq[i][j] = d.leq(i, j);
  std::vector<std::string> names;
  for (int i = 0; i < 4; ++i) names.push_back(d.name(i));
  FiniteLattice broken(names, leq, add, d.zero(), d.top());
  CHECK(broken.validate(false).empty());    // the order itself is fine
  CHECK_FALSE(broken.validate(true).empty());
}

TEST_CASE("validate rejects a non-lattice order") {
  // Two maximal elements below nothing: meets exist but joins do not.
  std::vector<std::pair<int, int>> pairs{{0, 1}, {0, 2}};
  std::vector<std::vector<int>> add(3, std::vector<int>(3, 0));
  FiniteLattice l =
      FiniteLattice::from_relation({"z", "a", "b"}, pairs, std::move(add), 0, 1);
  CHECK_FALSE(l.validate(false).empty());
}

TEST_CASE("brute-force way-above agrees with order reversal on frames") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    FiniteLattice lat = testing::random_downset_lattice(rng);
    REQUIRE(lat.validate().empty());
    auto matrix = lat.way_above_bruteforce_matrix();
    for (int a = 0; a < lat.size(); ++a)
      for (int b = 0; b < lat.size(); ++b) {
        CHECK(matrix[a][b] == lat.leq(b, a));
        CHECK(lat.way_above_bruteforce(a, b) == matrix[a][b]);
      }
  }
}

TEST_CASE("lattice quantale closed forms match the brute force") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    LatticeQuantale q(testing::random_downset_lattice(rng));
    const FiniteLattice& lat = q.lattice();
    auto matrix = lat.way_above_bruteforce_matrix();
    for (int a = 0; a < lat.size(); ++a)
      for (int b = 0; b < lat.size(); ++b)
        CHECK(q.way_above(q.element(a), q.element(b)) == matrix[a][b]);
  }
}

TEST_CASE("lattice quantale residual is the least completing element") {
  LatticeQuantale q(FiniteLattice::diamond());
  const FiniteLattice& lat = q.lattice();
  for (int a = 0; a < lat.size(); ++a)
    for (int b = 0; b < lat.size(); ++b) {
      Value r = q.truncated_sub(q.element(a), q.element(b));
      CHECK(q.leq(q.element(a), q.add(q.element(b), r)));
      for (int c = 0; c < lat.size(); ++c)
        if (q.leq(q.element(a), q.add(q.element(b), q.element(c))))
          CHECK(q.leq(r, q.element(c)));
    }
}
