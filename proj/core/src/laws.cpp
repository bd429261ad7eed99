#include "qmt/laws.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <sstream>

#include "qmt/sampler.hpp"

namespace qmt {

namespace {

constexpr double kEqGauge = 1e-6;  // "same value" threshold on the gauge

struct LawContext {
  const Quantale& q;
  std::vector<Value> pool;
  bool exhaustive;
  int budget;
  std::mt19937_64 rng;

  std::string fmt(const Value& v) const { return q.format(v); }

  // Runs `body` over sampled or exhaustive index tuples of the given arity.
  void for_tuples(int arity, const std::function<void(const Value*)>& body) {
    int n = static_cast<int>(pool.size());
    if (exhaustive) {
      std::vector<int> idx(arity, 0);
      std::vector<Value> vals(arity);
      while (true) {
        for (int i = 0; i < arity; ++i) vals[i] = pool[idx[i]];
        body(vals.data());
        int pos = arity - 1;
        while (pos >= 0 && ++idx[pos] == n) idx[pos--] = 0;
        if (pos < 0) break;
      }
      return;
    }
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<Value> vals(arity);
    for (int t = 0; t < budget; ++t) {
      for (int i = 0; i < arity; ++i) vals[i] = pool[pick(rng)];
      body(vals.data());
    }
  }
};

std::string w2(const LawContext& c, const char* an, const Value& a,
               const char* bn, const Value& b) {
  std::ostringstream os;
  os << an << "=" << c.fmt(a) << "; " << bn << "=" << c.fmt(b);
  return os.str();
}

std::string w3(const LawContext& c, const Value& a, const Value& b,
               const Value& v) {
  std::ostringstream os;
  os << "a=" << c.fmt(a) << "; b=" << c.fmt(b) << "; c=" << c.fmt(v);
  return os.str();
}

void order_laws(LawContext& c, std::vector<CheckResult>& out) {
  CheckResult refl{"order-reflexive"};
  for (const Value& a : c.pool)
    if (!c.q.leq(a, a)) refl.fail("a=" + c.fmt(a));
  out.push_back(std::move(refl));

  CheckResult antisym{"order-antisymmetric"};
  CheckResult bounds{"order-bounded"};
  for (const Value& a : c.pool) {
    if (!c.q.leq(c.q.zero(), a) || !c.q.leq(a, c.q.top()))
      bounds.fail("a=" + c.fmt(a));
  }
  c.for_tuples(2, [&](const Value* v) {
    if (c.q.leq(v[0], v[1]) && c.q.leq(v[1], v[0]) &&
        c.q.gauge(v[0], v[1]) > kEqGauge)
      antisym.fail(w2(c, "a", v[0], "b", v[1]));
  });
  out.push_back(std::move(antisym));
  out.push_back(std::move(bounds));

  CheckResult trans{"order-transitive"};
  c.for_tuples(3, [&](const Value* v) {
    if (c.q.leq(v[0], v[1]) && c.q.leq(v[1], v[2]) && !c.q.leq(v[0], v[2]))
      trans.fail(w3(c, v[0], v[1], v[2]));
  });
  out.push_back(std::move(trans));
}

void lattice_laws(LawContext& c, std::vector<CheckResult>& out) {
  CheckResult glb{"meet-is-glb"};
  CheckResult lub{"join-is-lub"};
  c.for_tuples(3, [&](const Value* v) {
    Value m = c.q.meet2(v[0], v[1]);
    if (!c.q.leq(m, v[0]) || !c.q.leq(m, v[1]))
      glb.fail(w2(c, "a", v[0], "b", v[1]) + "; meet not a lower bound");
    else if (c.q.leq(v[2], v[0]) && c.q.leq(v[2], v[1]) && !c.q.leq(v[2], m))
      glb.fail(w3(c, v[0], v[1], v[2]) + "; lower bound above meet missed");
    Value j = c.q.join2(v[0], v[1]);
    if (!c.q.leq(v[0], j) || !c.q.leq(v[1], j))
      lub.fail(w2(c, "a", v[0], "b", v[1]) + "; join not an upper bound");
    else if (c.q.leq(v[0], v[2]) && c.q.leq(v[1], v[2]) && !c.q.leq(j, v[2]))
      lub.fail(w3(c, v[0], v[1], v[2]) + "; upper bound below join missed");
  });
  out.push_back(std::move(glb));
  out.push_back(std::move(lub));
}

void monoid_laws(LawContext& c, std::vector<CheckResult>& out) {
  CheckResult comm{"add-commutative"};
  CheckResult ident{"add-identity"};
  c.for_tuples(2, [&](const Value* v) {
    if (!c.q.equal(c.q.add(v[0], v[1]), c.q.add(v[1], v[0])))
      comm.fail(w2(c, "a", v[0], "b", v[1]));
  });
  for (const Value& a : c.pool)
    if (!c.q.equal(c.q.add(a, c.q.zero()), a)) ident.fail("a=" + c.fmt(a));
  out.push_back(std::move(comm));
  out.push_back(std::move(ident));

  CheckResult assoc{"add-associative"};
  CheckResult distr{"add-distributes-over-meet"};
  c.for_tuples(3, [&](const Value* v) {
    if (!c.q.equal(c.q.add(c.q.add(v[0], v[1]), v[2]),
                   c.q.add(v[0], c.q.add(v[1], v[2]))))
      assoc.fail(w3(c, v[0], v[1], v[2]));
    if (!c.q.equal(c.q.add(v[0], c.q.meet2(v[1], v[2])),
                   c.q.meet2(c.q.add(v[0], v[1]), c.q.add(v[0], v[2]))))
      distr.fail(w3(c, v[0], v[1], v[2]));
  });
  out.push_back(std::move(assoc));
  out.push_back(std::move(distr));
}

void way_above_laws(LawContext& c, std::vector<CheckResult>& out) {
  CheckResult toleq{"wayabove-implies-leq"};
  CheckResult interp{"wayabove-interpolation"};
  c.for_tuples(2, [&](const Value* v) {
    if (c.q.way_above(v[0], v[1])) {
      if (!c.q.leq(v[1], v[0])) toleq.fail(w2(c, "x", v[0], "y", v[1]));
      Value z = c.q.interpolant(v[0], v[1]);
      if (!c.q.way_above(v[0], z) || !c.q.way_above(z, v[1]))
        interp.fail(w2(c, "x", v[0], "y", v[1]) + "; z=" + c.fmt(z));
    }
  });
  out.push_back(std::move(toleq));
  out.push_back(std::move(interp));

  CheckResult chain{"wayabove-chain-stability"};
  c.for_tuples(4, [&](const Value* v) {
    // x <= z, z << y, y <= w forces x << w
    if (c.q.leq(v[0], v[2]) && c.q.way_above(v[1], v[2]) &&
        c.q.leq(v[1], v[3]) && !c.q.way_above(v[3], v[0]))
      chain.fail(w2(c, "x", v[0], "z", v[2]) + "; " +
                 w2(c, "y", v[1], "w", v[3]));
  });
  out.push_back(std::move(chain));

  CheckResult meets{"wayabove-closed-under-meet"};
  c.for_tuples(3, [&](const Value* v) {
    if (c.q.way_above(v[0], v[2]) && c.q.way_above(v[1], v[2]) &&
        !c.q.way_above(c.q.meet2(v[0], v[1]), v[2]))
      meets.fail(w3(c, v[0], v[1], v[2]));
  });
  out.push_back(std::move(meets));

  if (c.q.kind() != Instance::Ddf) {
    CheckResult overzero{"wayabove-over-zero"};
    if (c.q.kind() == Instance::ExtReal || c.q.kind() == Instance::Unit ||
        c.q.kind() == Instance::Errors)
      overzero.note = "nonzero elements only";
    for (const Value& a : c.pool) {
      if (!c.exhaustive && c.q.gauge(a, c.q.zero()) <= kEqGauge) continue;
      if (!c.q.way_above(a, c.q.zero())) overzero.fail("x=" + c.fmt(a));
    }
    out.push_back(std::move(overzero));
  }

  CheckResult mono{"wayabove-add-monotone"};
  c.for_tuples(4, [&](const Value* v) {
    if (c.q.way_above(v[0], v[1]) && c.q.way_above(v[2], v[3]) &&
        !c.q.way_above(c.q.add(v[0], v[2]), c.q.add(v[1], v[3])))
      mono.fail(w2(c, "x", v[0], "y", v[1]) + "; " +
                w2(c, "c", v[2], "d", v[3]));
  });
  out.push_back(std::move(mono));

  CheckResult limit{"wayabove-witness-limit"};
  c.for_tuples(2, [&](const Value* v) {
    bool premise = true;
    for (int n = 0; n <= 20 && premise; ++n)
      premise = c.q.way_above(v[0], c.q.add(v[1], c.q.safa(n)));
    if (premise && !c.q.way_above(v[0], v[1]))
      limit.fail(w2(c, "x", v[0], "y", v[1]));
  });
  out.push_back(std::move(limit));
}

void residual_laws(LawContext& c, std::vector<CheckResult>& out) {
  CheckResult adj{"residual-adjunction"};
  CheckResult cancel{"residual-cancellation"};
  c.for_tuples(3, [&](const Value* v) {
    const Value& qv = v[0];
    const Value& p = v[1];
    const Value& r = v[2];
    Value res = c.q.truncated_sub(qv, p);
    bool lhs = c.q.leq(qv, c.q.add(p, r));
    bool rhs = c.q.leq(res, r);
    if (lhs != rhs)
      adj.fail("q=" + c.fmt(qv) + "; p=" + c.fmt(p) + "; r=" + c.fmt(r) +
               "; q-p=" + c.fmt(res));
    if (!c.q.leq(c.q.truncated_sub(c.q.add(p, qv), p), qv))
      cancel.fail(w2(c, "p", p, "q", qv));
  });
  out.push_back(std::move(adj));

  CheckResult zero_iff{"residual-zero-iff-leq"};
  CheckResult upper{"residual-upper-bound"};
  c.for_tuples(2, [&](const Value* v) {
    Value res = c.q.truncated_sub(v[0], v[1]);
    if (c.q.equal(res, c.q.zero()) != c.q.leq(v[0], v[1]))
      zero_iff.fail(w2(c, "q", v[0], "p", v[1]) + "; q-p=" + c.fmt(res));
    if (!c.q.leq(v[0], c.q.add(v[1], res)))
      upper.fail(w2(c, "q", v[0], "p", v[1]) + "; q-p=" + c.fmt(res));
  });
  out.push_back(std::move(zero_iff));
  out.push_back(std::move(upper));
  out.push_back(std::move(cancel));
}

void approximation_laws(LawContext& c, std::vector<CheckResult>& out) {
  CheckResult halve{"halve-witness"};
  for (const Value& e : c.pool) {
    if (!c.q.way_above(e, c.q.zero())) continue;
    Value d = c.q.halve(e);
    if (!c.q.way_above(d, c.q.zero()) ||
        !c.q.leq(c.q.add(d, d), e))
      halve.fail("eps=" + c.fmt(e) + "; delta=" + c.fmt(d));
  }
  out.push_back(std::move(halve));

  CheckResult approx{"approximation-from-above"};
  for (const Value& y : c.pool) {
    if (c.exhaustive) {
      // Meet over every eps way above zero, exact equality.
      Value m = c.q.top();
      for (const Value& e : c.pool)
        if (c.q.way_above(e, c.q.zero())) m = c.q.meet2(m, c.q.add(y, e));
      if (!c.q.equal(m, y)) approx.fail("y=" + c.fmt(y) + "; meet=" + c.fmt(m));
    } else {
      Value m = c.q.top();
      for (int n = 0; n <= 40; ++n) m = c.q.meet2(m, c.q.add(y, c.q.safa(n)));
      if (c.q.gauge(m, y) > kTol)
        approx.fail("y=" + c.fmt(y) + "; meet=" + c.fmt(m));
    }
  }
  out.push_back(std::move(approx));

  CheckResult safa{"witness-sequence"};
  Value prefix_meet = c.q.top();
  for (int n = 0; n <= 30; ++n) {
    Value u = c.q.safa(n);
    prefix_meet = c.q.meet2(prefix_meet, u);
    if (n <= 25 && !c.q.way_above(u, c.q.zero()))
      safa.fail("u_" + std::to_string(n) + "=" + c.fmt(u) + " not above zero");
    if (!c.q.leq(c.q.safa(n + 1), u))
      safa.fail("u_" + std::to_string(n + 1) + " not below u_" +
                std::to_string(n));
  }
  if (c.q.gauge(prefix_meet, c.q.zero()) > kTol)
    safa.fail("prefix meet " + c.fmt(prefix_meet) + " not within tolerance");
  out.push_back(std::move(safa));
}

void grid_cross_check(LawContext& c, std::vector<CheckResult>& out) {
  Instance k = c.q.kind();
  if (k != Instance::ExtReal && k != Instance::Unit && k != Instance::Errors)
    return;
  CheckResult grid{"residual-matches-grid"};
  grid.note = "grid step 1e-3";
  int n = static_cast<int>(c.pool.size());
  std::uniform_int_distribution<int> pick(0, n - 1);
  int trials = std::min(c.budget, 300);
  for (int t = 0; t < trials; ++t) {
    Value qv = c.pool[pick(c.rng)];
    Value p = c.pool[pick(c.rng)];
    if (qv.num == std::numeric_limits<double>::infinity() ||
        p.num == std::numeric_limits<double>::infinity())
      continue;  // grid cannot reach the top element; covered by unit tests
    double hi = (k == Instance::ExtReal) ? qv.num + 2e-3 : 1.0;
    Value m = c.q.top();
    for (double r = 0.0; r <= hi + 1e-12; r += 1e-3) {
      Value rv;
      rv.tag = k;
      rv.num = (k == Instance::ExtReal) ? r : std::min(r, 1.0);
      if (c.q.leq(qv, c.q.add(p, rv))) m = c.q.meet2(m, rv);
    }
    Value closed = c.q.truncated_sub(qv, p);
    if (c.q.gauge(closed, m) > 1.1e-3)
      grid.fail("q=" + c.fmt(qv) + "; p=" + c.fmt(p) + "; closed=" +
                c.fmt(closed) + "; grid=" + c.fmt(m));
  }
  out.push_back(std::move(grid));
}

}  // namespace

std::vector<CheckResult> check_quantale_laws(const Quantale& q, int budget,
                                             std::uint64_t seed) {
  LawContext c{q, {}, false, budget, std::mt19937_64(seed)};
  if (q.kind() == Instance::Truth) {
    c.exhaustive = true;
    c.pool = {q.zero(), q.top()};
  } else if (q.kind() == Instance::Lattice) {
    c.exhaustive = true;
    const auto& lq = static_cast<const LatticeQuantale&>(q);
    for (int i = 0; i < lq.lattice().size(); ++i)
      c.pool.push_back(lq.element(i));
  } else {
    Sampler s(q, seed);
    for (int i = 0; i < 64; ++i) c.pool.push_back(s.next());
  }

  std::vector<CheckResult> out;
  order_laws(c, out);
  lattice_laws(c, out);
  monoid_laws(c, out);
  way_above_laws(c, out);
  residual_laws(c, out);
  approximation_laws(c, out);
  grid_cross_check(c, out);
  return out;
}

}  // namespace qmt
