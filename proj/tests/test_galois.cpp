#include <doctest.h>

#include "qmt/toy_class.hpp"

using namespace qmt;

namespace {

bool all_pass(const std::vector<CheckResult>& checks) {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

}  // namespace

TEST_CASE("build validates morphisms and closes under composition") {
  ToyClass k = extreal_chain_class();
  // Identities for every structure are present.
  for (int i = 0; i < static_cast<int>(k.structures().size()); ++i) {
    bool has_id = false;
    for (const Morphism& m : k.morphisms())
      if (m.src == i && m.dst == i) {
        bool ident = true;
        for (size_t p = 0; p < m.map.size(); ++p)
          if (m.map[p] != static_cast<int>(p)) ident = false;
        has_id |= ident;
      }
    CHECK(has_id);
  }
  // Every morphism passes the embedding checks by construction.
  for (const Morphism& m : k.morphisms()) {
    EmbeddingMap h{&k.structures()[m.src], &k.structures()[m.dst], m.map};
    CHECK(embedding_passes(h));
  }
}

TEST_CASE("build rejects a map that is not an embedding") {
  ToyClass base = extreal_chain_class();
  std::vector<VStructure> ss = base.structures();
  std::vector<Morphism> ms = base.morphisms();
  // Find a 1-point and a 3-point structure and connect them by a crushing
  // (distance-ignoring) map... a 1-point source is always fine, so instead
  // map the triangle onto itself non-isometrically.
  int tri = -1;
  for (size_t i = 0; i < ss.size(); ++i)
    if (ss[i].space.size() == 3) tri = static_cast<int>(i);
  REQUIRE(tri >= 0);
  ms.push_back(Morphism{tri, tri, {0, 0, 0}});
  CHECK_THROWS_AS(ToyClass::build(std::move(ss), std::move(ms)),
                  std::invalid_argument);
}

TEST_CASE("the discrete truth catalog amalgamates") {
  ToyClass k = discrete_truth_class(3);
  CHECK(ap_holds(k));
  CHECK(all_pass(check_ap(k)));
}

TEST_CASE("types over a 2-point discrete structure") {
  ToyClass k = discrete_truth_class(3);
  const Quantale& q = k.quantale();
  int base = -1;
  for (size_t i = 0; i < k.structures().size(); ++i)
    if (k.structures()[i].space.size() == 2) base = static_cast<int>(i);
  REQUIRE(base >= 0);
  TypeSet t = types_over(k, base);
  // Land on one of the two existing points or stay fresh: three types.
  CHECK(t.type_count() == 3);
  CHECK(all_pass(check_type_pseudometric(k, base)));
  for (int p = 0; p < 3; ++p)
    for (int r = 0; r < 3; ++r) {
      Value d = type_distance(k, t, p, r);
      if (p == r)
        CHECK(q.equal(d, q.zero()));
      else
        CHECK(q.equal(d, q.top()));  // discrete: distinct means far
    }
}

TEST_CASE("type distances over the chain catalog form the stretched triangle") {
  ToyClass k = extreal_chain_class();
  const Quantale& q = k.quantale();
  int base = -1;
  for (size_t i = 0; i < k.structures().size(); ++i)
    if (k.structures()[i].space.size() == 1) base = static_cast<int>(i);
  REQUIRE(base >= 0);
  TypeSet t = types_over(k, base);
  REQUIRE(t.type_count() == 3);
  std::vector<double> dists;
  for (int p = 0; p < 3; ++p)
    for (int r = p + 1; r < 3; ++r) {
      Value d = type_distance(k, t, p, r);
      CHECK(type_distance_attained(k, t, p, r));
      dists.push_back(d.num);
    }
  std::sort(dists.begin(), dists.end());
  CHECK(dists == std::vector<double>{1.0, 1.0, 2.0});
  CHECK(all_pass(check_type_pseudometric(k, base)));
  CHECK(all_pass(check_separation_and_ctp(k, base, 12)));
}

TEST_CASE("restriction of types is contractive") {
  ToyClass k = extreal_chain_class();
  const Quantale& q = k.quantale();
  int base = -1, sub = -1;
  for (size_t i = 0; i < k.structures().size(); ++i) {
    if (k.structures()[i].space.size() == 1) base = static_cast<int>(i);
    if (k.structures()[i].space.size() == 0) sub = static_cast<int>(i);
  }
  REQUIRE(base >= 0);
  REQUIRE(sub >= 0);
  TypeSet over_base = types_over(k, base);
  TypeSet over_sub = types_over(k, sub);
  for (int chi = 0; chi < static_cast<int>(k.morphisms().size()); ++chi) {
    const Morphism& m = k.morphisms()[chi];
    if (m.src != sub || m.dst != base) continue;
    for (int p = 0; p < over_base.type_count(); ++p)
      for (int r = 0; r < over_base.type_count(); ++r) {
        int rp = restrict_type(k, over_base, p, chi, over_sub);
        int rr = restrict_type(k, over_base, r, chi, over_sub);
        Value dr = type_distance(k, over_sub, rp, rr);
        Value d = type_distance(k, over_base, p, r);
        CHECK(q.leq(dr, d));
      }
  }
}

TEST_CASE("tameness holds at kappa 1 with the top thresholds") {
  ToyClass k = discrete_truth_class(3);
  const Quantale& q = k.quantale();
  TamenessReport r = check_tameness(k, 1, q.top(), q.top());
  CHECK(all_pass(r.checks));
  CHECK(r.violations.empty());
}

TEST_CASE("degenerate thresholds produce tameness violations") {
  ToyClass k = discrete_truth_class(3);
  const Quantale& q = k.quantale();
  // kappa 0 only allows restriction to the empty structure, where all types
  // collapse; demanding eps = 0 closeness upstairs then fails.
  TamenessReport r = check_tameness(k, 0, q.zero(), q.zero());
  CHECK_FALSE(r.violations.empty());
}
