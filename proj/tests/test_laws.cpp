#include <doctest.h>

#include "qmt/laws.hpp"
#include "qmt/quantale.hpp"

using namespace qmt;

namespace {

int failures(const std::vector<CheckResult>& checks) {
  int n = 0;
  for (const CheckResult& c : checks)
    if (!c.pass) ++n;
  return n;
}

}  // namespace

TEST_CASE("law suite passes on every built-in instance") {
  for (const Quantale* q :
       {&truth_quantale(), &extreal_quantale(), &unit_quantale(),
        &errors_quantale(), &ddf_quantale()}) {
    CAPTURE(q->name());
    auto checks = check_quantale_laws(*q, 800, 2);
    for (const CheckResult& c : checks) {
      CAPTURE(c.name);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("law suite passes on finite frames") {
  LatticeQuantale b3(FiniteLattice::boolean(3), "frame8");
  LatticeQuantale dia(FiniteLattice::diamond(), "diamond");
  for (const Quantale* q :
       {static_cast<const Quantale*>(&b3), static_cast<const Quantale*>(&dia)}) {
    auto checks = check_quantale_laws(*q, 200, 2);
    CHECK(failures(checks) == 0);
  }
}

TEST_CASE("law suite flags a corrupted addition table") {
  FiniteLattice d = FiniteLattice::diamond();
  std::vector<std::vector<bool>> leq(4, std::vector<bool>(4));
  std::vector<std::string> names;
  for (int i = 0; i < 4; ++i) {
    names.push_back(d.name(i));
    for (int j = 0; j < 4; ++j) leq[i][j] = d.leq(i, j);
  }
  std::vector<std::vector<int>> add(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) add[i][j] = d.add(i, j);
  add[d.top()][d.zero()] = d.zero();  // top + 0 = 0 breaks the identity law
  LatticeQuantale q(FiniteLattice(names, leq, add, d.zero(), d.top()));
  auto checks = check_quantale_laws(q, 200, 2);
  bool identity_failed = false;
  for (const CheckResult& c : checks)
    if (c.name == "add-identity" && !c.pass) identity_failed = true;
  CHECK(identity_failed);
}

TEST_CASE("law suite is deterministic for a fixed seed") {
  auto a = check_quantale_laws(extreal_quantale(), 300, 9);
  auto b = check_quantale_laws(extreal_quantale(), 300, 9);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].pass == b[i].pass);
    CHECK(a[i].witnesses == b[i].witnesses);
  }
}
