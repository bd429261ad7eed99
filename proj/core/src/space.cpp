#include "qmt/space.hpp"

#include <sstream>
#include <stdexcept>

namespace qmt {

std::optional<int> VSpace::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (points[i] == name) return i;
  return std::nullopt;
}

std::vector<CheckResult> check_axioms(const VSpace& s) {
  const Quantale& q = *s.q;
  std::vector<CheckResult> out;
  int n = s.size();

  CheckResult refl{"space-reflexivity"};
  for (int x = 0; x < n; ++x)
    if (!q.equal(s.d(x, x), q.zero()))
      refl.fail("d(" + s.points[x] + "," + s.points[x] + ")=" +
                q.format(s.d(x, x)));
  out.push_back(std::move(refl));

  CheckResult sym{"space-symmetry"};
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (!q.equal(s.d(x, y), s.d(y, x)))
        sym.fail("d(" + s.points[x] + "," + s.points[y] + ")=" +
                 q.format(s.d(x, y)) + " vs d(" + s.points[y] + "," +
                 s.points[x] + ")=" + q.format(s.d(y, x)));
  out.push_back(std::move(sym));

  CheckResult tri{"space-subadditivity"};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (!q.leq(s.d(x, y), q.add(s.d(x, z), s.d(z, y))))
          tri.fail("(" + s.points[x] + "," + s.points[y] + "," + s.points[z] +
                   "): " + q.format(s.d(x, y)) + " > " +
                   q.format(q.add(s.d(x, z), s.d(z, y))));
  out.push_back(std::move(tri));

  if (s.separated_intent) {
    CheckResult sep{"space-separation"};
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        if (q.equal(s.d(x, y), q.zero()))
          sep.fail("d(" + s.points[x] + "," + s.points[y] + ")=0");
    out.push_back(std::move(sep));
  }
  return out;
}

VSpace product_space(const VSpace& s, int k, int max_points) {
  if (k < 1) throw std::invalid_argument("product_space: arity must be >= 1");
  long long count = 1;
  for (int i = 0; i < k; ++i) {
    count *= s.size();
    if (count > max_points)
      throw std::invalid_argument("product_space: size bound exceeded");
  }
  int m = static_cast<int>(count);
  auto tuple_of = [&](int id) {
    std::vector<int> t(k);
    for (int i = k - 1; i >= 0; --i) {
      t[i] = id % s.size();
      id /= s.size();
    }
    return t;
  };
  VSpace out;
  out.q = s.q;
  for (int id = 0; id < m; ++id) {
    auto t = tuple_of(id);
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < k; ++i) os << (i ? "," : "") << s.points[t[i]];
    os << ")";
    out.points.push_back(os.str());
  }
  out.dist.assign(m, std::vector<Value>(m, s.q->zero()));
  for (int a = 0; a < m; ++a) {
    auto ta = tuple_of(a);
    for (int b = 0; b < m; ++b) {
      auto tb = tuple_of(b);
      Value v = s.q->zero();
      for (int i = 0; i < k; ++i) v = s.q->join2(v, s.d(ta[i], tb[i]));
      out.dist[a][b] = v;
    }
  }
  out.separated_intent = s.separated_intent;
  return out;
}

VSpace self_space(const Quantale& q, std::span<const Value> samples) {
  VSpace out;
  out.q = &q;
  int n = static_cast<int>(samples.size());
  for (int i = 0; i < n; ++i) out.points.push_back(q.format(samples[i]));
  out.dist.assign(n, std::vector<Value>(n, q.zero()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.dist[i][j] = q.self_dist(samples[i], samples[j]);
  return out;
}

std::vector<int> open_ball(const VSpace& s, int center, const Value& eps) {
  const Quantale& q = *s.q;
  if (!q.way_above(eps, q.zero()))
    throw QuantaleError("open_ball: radius not way above zero");
  std::vector<int> out;
  for (int y = 0; y < s.size(); ++y)
    if (q.way_above(eps, s.d(center, y))) out.push_back(y);
  return out;
}

std::vector<ThresholdDiagnostic> is_cauchy_prefix(
    const PointSequence& seq, int depth, std::span<const Value> eps_list) {
  const Quantale& q = *seq.space->q;
  std::vector<ThresholdDiagnostic> out;
  for (const Value& eps : eps_list) {
    ThresholdDiagnostic diag{q.format(eps), std::nullopt};
    for (int N = 0; N <= depth && !diag.stable_from; ++N) {
      bool ok = true;
      for (int n = N; n <= depth && ok; ++n)
        for (int m = N; m <= depth && ok; ++m)
          ok = q.way_above(eps, seq.space->d(seq.at(n), seq.at(m)));
      if (ok) diag.stable_from = N;
    }
    out.push_back(std::move(diag));
  }
  return out;
}

std::vector<ThresholdDiagnostic> converges_to(const PointSequence& seq,
                                              int limit, int depth,
                                              std::span<const Value> eps_list) {
  const Quantale& q = *seq.space->q;
  std::vector<ThresholdDiagnostic> out;
  for (const Value& eps : eps_list) {
    ThresholdDiagnostic diag{q.format(eps), std::nullopt};
    for (int N = 0; N <= depth && !diag.stable_from; ++N) {
      bool ok = true;
      for (int n = N; n <= depth && ok; ++n)
        ok = q.way_above(eps, seq.space->d(limit, seq.at(n)));
      if (ok) diag.stable_from = N;
    }
    out.push_back(std::move(diag));
  }
  return out;
}

std::vector<Value> default_eps_list(const Quantale& q, int count) {
  std::vector<Value> out;
  for (int n = 0; n < count; ++n) out.push_back(q.safa(n));
  return out;
}

RelationReport truth_space_to_relation(const VSpace& s) {
  const Quantale& q = *s.q;
  if (q.kind() != Instance::Truth)
    throw QuantaleError("truth_space_to_relation: space is not truth-valued");
  int n = s.size();
  RelationReport r;
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (q.equal(s.d(x, y), q.zero())) {
        rel[x][y] = true;
        r.pairs.emplace_back(x, y);
      }
  r.reflexive = r.symmetric = r.transitive = true;
  for (int x = 0; x < n; ++x) {
    if (!rel[x][x]) r.reflexive = false;
    for (int y = 0; y < n; ++y) {
      if (rel[x][y] != rel[y][x]) r.symmetric = false;
      for (int z = 0; z < n; ++z)
        if (rel[x][y] && rel[y][z] && !rel[x][z]) r.transitive = false;
    }
  }
  return r;
}

}  // namespace qmt
