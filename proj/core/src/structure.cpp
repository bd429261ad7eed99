#include "qmt/structure.hpp"

#include <algorithm>
#include <sstream>

namespace qmt {

namespace {

std::string tuple_text(const VSpace& s, const std::vector<int>& t) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < t.size(); ++i)
    os << (i ? "," : "") << s.points[t[i]];
  os << ")";
  return os.str();
}

}  // namespace

std::vector<std::vector<int>> all_tuples(int n, int arity) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(arity, 0);
  if (n == 0) return out;
  while (true) {
    out.push_back(cur);
    int pos = arity - 1;
    while (pos >= 0 && ++cur[pos] == n) cur[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

Value tuple_distance(const VSpace& s, const std::vector<int>& a,
                     const std::vector<int>& b) {
  Value v = s.q->zero();
  for (size_t i = 0; i < a.size(); ++i) v = s.q->join2(v, s.d(a[i], b[i]));
  return v;
}

std::vector<CheckResult> check_structure(const VStructure& m) {
  const Quantale& q = *m.space.q;
  int n = m.space.size();
  std::vector<CheckResult> out;

  CheckResult total{"structure-totality"};
  for (const std::string& c : m.sig.constants)
    if (!m.constant_map.count(c)) total.fail("constant " + c + " unassigned");
  for (auto& [name, arity] : m.sig.functions) {
    auto it = m.function_maps.find(name);
    for (auto& t : all_tuples(n, arity))
      if (it == m.function_maps.end() || !it->second.count(t))
        total.fail("function " + name + " missing row at " +
                   tuple_text(m.space, t));
  }
  for (auto& [name, arity] : m.sig.relations) {
    auto it = m.relation_maps.find(name);
    for (auto& t : all_tuples(n, arity))
      if (it == m.relation_maps.end() || !it->second.count(t))
        total.fail("relation " + name + " missing row at " +
                   tuple_text(m.space, t));
  }
  bool was_total = total.pass;
  out.push_back(std::move(total));
  if (!was_total) return out;

  CheckResult fnonexp{"structure-function-nonexpanding"};
  for (auto& [name, arity] : m.sig.functions) {
    const auto& table = m.function_maps.at(name);
    auto tuples = all_tuples(n, arity);
    for (auto& x : tuples)
      for (auto& y : tuples) {
        Value lhs = m.space.d(table.at(x), table.at(y));
        if (!q.leq(lhs, tuple_distance(m.space, x, y)))
          fnonexp.fail(name + " at " + tuple_text(m.space, x) + " vs " +
                       tuple_text(m.space, y));
      }
  }
  out.push_back(std::move(fnonexp));

  CheckResult rnonexp{"structure-relation-nonexpanding"};
  for (auto& [name, arity] : m.sig.relations) {
    const auto& table = m.relation_maps.at(name);
    auto tuples = all_tuples(n, arity);
    for (auto& x : tuples)
      for (auto& y : tuples) {
        Value lhs = q.self_dist(table.at(x), table.at(y));
        if (!q.leq(lhs, tuple_distance(m.space, x, y)))
          rnonexp.fail(name + " at " + tuple_text(m.space, x) + " vs " +
                       tuple_text(m.space, y) + ": value gap " +
                       q.format(lhs));
      }
  }
  out.push_back(std::move(rnonexp));
  return out;
}

std::vector<CheckResult> check_embedding(const EmbeddingMap& h) {
  const VStructure& src = *h.source;
  const VStructure& dst = *h.target;
  const Quantale& q = *src.space.q;
  std::vector<CheckResult> out;

  CheckResult shape{"embedding-shape"};
  if (!(src.sig == dst.sig)) shape.fail("signature mismatch");
  if (src.space.q->kind() != dst.space.q->kind() ||
      src.space.q != dst.space.q)
    shape.fail("quantale mismatch");
  if (static_cast<int>(h.point_map.size()) != src.space.size())
    shape.fail("point map not total");
  for (int x : h.point_map)
    if (x < 0 || x >= dst.space.size()) shape.fail("point map out of range");
  bool ok = shape.pass;
  out.push_back(std::move(shape));
  if (!ok) return out;

  CheckResult inj{"embedding-injective"};
  for (int x = 0; x < src.space.size(); ++x)
    for (int y = x + 1; y < src.space.size(); ++y)
      if (h.point_map[x] == h.point_map[y])
        inj.fail(src.space.points[x] + " and " + src.space.points[y] +
                 " share image " + dst.space.points[h.point_map[x]]);
  out.push_back(std::move(inj));

  CheckResult iso{"embedding-isometry"};
  for (int x = 0; x < src.space.size(); ++x)
    for (int y = 0; y < src.space.size(); ++y)
      if (!q.equal(dst.space.d(h.point_map[x], h.point_map[y]),
                   src.space.d(x, y)))
        iso.fail("d(" + src.space.points[x] + "," + src.space.points[y] +
                 ")=" + q.format(src.space.d(x, y)) + " maps to " +
                 q.format(dst.space.d(h.point_map[x], h.point_map[y])));
  out.push_back(std::move(iso));

  CheckResult pres{"embedding-preservation"};
  for (const std::string& c : src.sig.constants)
    if (h.point_map[src.constant_map.at(c)] != dst.constant_map.at(c))
      pres.fail("constant " + c);
  for (auto& [name, arity] : src.sig.functions) {
    const auto& st = src.function_maps.at(name);
    const auto& dt = dst.function_maps.at(name);
    for (auto& t : all_tuples(src.space.size(), arity)) {
      std::vector<int> image(t.size());
      for (size_t i = 0; i < t.size(); ++i) image[i] = h.point_map[t[i]];
      if (h.point_map[st.at(t)] != dt.at(image))
        pres.fail("function " + name + " at " + tuple_text(src.space, t));
    }
  }
  for (auto& [name, arity] : src.sig.relations) {
    const auto& st = src.relation_maps.at(name);
    const auto& dt = dst.relation_maps.at(name);
    for (auto& t : all_tuples(src.space.size(), arity)) {
      std::vector<int> image(t.size());
      for (size_t i = 0; i < t.size(); ++i) image[i] = h.point_map[t[i]];
      if (!q.equal(st.at(t), dt.at(image)))
        pres.fail("relation " + name + " at " + tuple_text(src.space, t));
    }
  }
  out.push_back(std::move(pres));
  return out;
}

bool embedding_passes(const EmbeddingMap& h) {
  for (const auto& c : check_embedding(h))
    if (!c.pass) return false;
  return true;
}

std::vector<Substructure> enumerate_substructures(const VStructure& m,
                                                  int max_size) {
  int n = m.space.size();
  std::vector<Substructure> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> pts;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) pts.push_back(i);
    if (static_cast<int>(pts.size()) > max_size || pts.empty()) {
      if (!pts.empty()) continue;
      // The empty subset is a substructure only for a constant-free,
      // function-free signature.
      if (!m.sig.constants.empty()) continue;
    }
    auto in = [&](int p) { return (mask >> p) & 1u; };
    bool closed = true;
    for (const std::string& c : m.sig.constants)
      if (!in(m.constant_map.at(c))) closed = false;
    for (auto& [name, arity] : m.sig.functions) {
      const auto& table = m.function_maps.at(name);
      for (auto& t : all_tuples(static_cast<int>(pts.size()), arity)) {
        std::vector<int> parent(t.size());
        for (size_t i = 0; i < t.size(); ++i) parent[i] = pts[t[i]];
        if (!in(table.at(parent))) closed = false;
      }
    }
    if (!closed) continue;

    Substructure sub;
    sub.inclusion = pts;
    VStructure& v = sub.value;
    v.sig = m.sig;
    v.space.q = m.space.q;
    for (int p : pts) v.space.points.push_back(m.space.points[p]);
    int k = static_cast<int>(pts.size());
    v.space.dist.assign(k, std::vector<Value>(k, m.space.q->zero()));
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) v.space.dist[a][b] = m.space.d(pts[a], pts[b]);
    v.space.separated_intent = m.space.separated_intent;
    std::vector<int> back(n, -1);
    for (int i = 0; i < k; ++i) back[pts[i]] = i;
    for (const std::string& c : m.sig.constants)
      v.constant_map[c] = back[m.constant_map.at(c)];
    for (auto& [name, arity] : m.sig.functions) {
      const auto& table = m.function_maps.at(name);
      for (auto& t : all_tuples(k, arity)) {
        std::vector<int> parent(t.size());
        for (size_t i = 0; i < t.size(); ++i) parent[i] = pts[t[i]];
        v.function_maps[name][t] = back[table.at(parent)];
      }
    }
    for (auto& [name, arity] : m.sig.relations) {
      const auto& table = m.relation_maps.at(name);
      for (auto& t : all_tuples(k, arity)) {
        std::vector<int> parent(t.size());
        for (size_t i = 0; i < t.size(); ++i) parent[i] = pts[t[i]];
        v.relation_maps[name][t] = table.at(parent);
      }
    }
    out.push_back(std::move(sub));
  }
  return out;
}

}  // namespace qmt
