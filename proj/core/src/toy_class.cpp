#include "qmt/toy_class.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qmt {

namespace {

std::string ext_text(const ToyClass& k, const PointedExt& e) {
  const Morphism& f = k.morphisms()[e.morphism];
  const VStructure& n = k.structures()[f.dst];
  std::ostringstream os;
  os << "(" << k.structure_name(f.src) << "->" << k.structure_name(f.dst)
     << "[";
  for (size_t i = 0; i < f.map.size(); ++i)
    os << (i ? "," : "") << n.space.points[f.map[i]];
  os << "], " << n.space.points[e.point] << ")";
  return os.str();
}

// Co-cone pairs (g0, g1) with g0 after f0 equal to g1 after f1.
bool equalizes(const ToyClass& k, const Morphism& f0, const Morphism& f1,
               const Morphism& g0, const Morphism& g1) {
  if (g0.src != f0.dst || g1.src != f1.dst || g0.dst != g1.dst) return false;
  for (size_t i = 0; i < f0.map.size(); ++i)
    if (g0.map[f0.map[i]] != g1.map[f1.map[i]]) return false;
  return true;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::string ToyClass::structure_name(int i) const {
  if (i < static_cast<int>(names_.size()) && !names_[i].empty())
    return names_[i];
  return "S" + std::to_string(i);
}

std::vector<int> ToyClass::arrows_from(int src) const {
  std::vector<int> out;
  for (size_t i = 0; i < morphisms_.size(); ++i)
    if (morphisms_[i].src == src) out.push_back(static_cast<int>(i));
  return out;
}

ToyClass ToyClass::build(std::vector<VStructure> structures,
                         std::vector<Morphism> morphisms, int ls_bound) {
  if (structures.empty())
    throw std::invalid_argument("toy class: empty catalog");
  ToyClass k;
  k.structures_ = std::move(structures);
  k.ls_bound_ = ls_bound;

  for (size_t i = 0; i < k.structures_.size(); ++i) {
    Morphism id;
    id.src = id.dst = static_cast<int>(i);
    for (int p = 0; p < k.structures_[i].space.size(); ++p)
      id.map.push_back(p);
    morphisms.push_back(std::move(id));
  }

  auto contains = [&](const std::vector<Morphism>& v, const Morphism& m) {
    return std::find(v.begin(), v.end(), m) != v.end();
  };
  std::vector<Morphism> closed;
  for (const Morphism& m : morphisms)
    if (!contains(closed, m)) closed.push_back(m);
  bool grew = true;
  while (grew) {
    grew = false;
    size_t sz = closed.size();
    for (size_t i = 0; i < sz; ++i)
      for (size_t j = 0; j < sz; ++j) {
        if (closed[i].dst != closed[j].src) continue;
        Morphism comp;
        comp.src = closed[i].src;
        comp.dst = closed[j].dst;
        for (int x : closed[i].map) comp.map.push_back(closed[j].map[x]);
        if (!contains(closed, comp)) {
          closed.push_back(std::move(comp));
          grew = true;
        }
      }
  }

  for (const Morphism& m : closed) {
    if (m.src < 0 || m.src >= static_cast<int>(k.structures_.size()) ||
        m.dst < 0 || m.dst >= static_cast<int>(k.structures_.size()))
      throw std::invalid_argument("toy class: morphism endpoint out of range");
    EmbeddingMap h{&k.structures_[m.src], &k.structures_[m.dst], m.map};
    for (const auto& c : check_embedding(h))
      if (!c.pass)
        throw std::invalid_argument(
            "toy class: morphism " + std::to_string(m.src) + "->" +
            std::to_string(m.dst) + " fails " + c.name +
            (c.witnesses.empty() ? "" : " (" + c.witnesses.front() + ")"));
  }
  k.morphisms_ = std::move(closed);
  return k;
}

std::vector<CheckResult> check_ap(const ToyClass& k) {
  CheckResult ap{"class-amalgamation"};
  const auto& ms = k.morphisms();
  for (size_t i = 0; i < ms.size(); ++i)
    for (size_t j = 0; j < ms.size(); ++j) {
      if (ms[i].src != ms[j].src) continue;
      bool found = false;
      for (size_t a = 0; a < ms.size() && !found; ++a)
        for (size_t b = 0; b < ms.size() && !found; ++b)
          found = equalizes(k, ms[i], ms[j], ms[a], ms[b]);
      if (!found)
        ap.fail("span " + k.structure_name(ms[i].src) + " -> (" +
                k.structure_name(ms[i].dst) + ", " +
                k.structure_name(ms[j].dst) + ") has no amalgam");
    }
  return {ap};
}

bool ap_holds(const ToyClass& k) {
  for (const auto& c : check_ap(k))
    if (!c.pass) return false;
  return true;
}

int TypeSet::type_of(const PointedExt& e) const {
  for (size_t i = 0; i < exts.size(); ++i)
    if (exts[i] == e) return class_of[i];
  return -1;
}

TypeSet types_over(const ToyClass& k, int base) {
  if (!ap_holds(k))
    throw QuantaleError(
        "types_over: amalgamation fails, identification need not be an "
        "equivalence");
  TypeSet t;
  t.base = base;
  for (int mi : k.arrows_from(base)) {
    const Morphism& f = k.morphisms()[mi];
    for (int a = 0; a < k.structures()[f.dst].space.size(); ++a)
      t.exts.push_back({mi, a});
  }
  int n = static_cast<int>(t.exts.size());
  UnionFind uf(n);
  const auto& ms = k.morphisms();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (uf.find(i) == uf.find(j)) continue;
      const Morphism& f0 = ms[t.exts[i].morphism];
      const Morphism& f1 = ms[t.exts[j].morphism];
      bool eq = false;
      for (size_t a = 0; a < ms.size() && !eq; ++a)
        for (size_t b = 0; b < ms.size() && !eq; ++b)
          eq = equalizes(k, f0, f1, ms[a], ms[b]) &&
               ms[a].map[t.exts[i].point] == ms[b].map[t.exts[j].point];
      if (eq) uf.unite(i, j);
    }
  t.class_of.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    int root = uf.find(i);
    if (t.class_of[root] < 0) {
      t.class_of[root] = static_cast<int>(t.rep.size());
      t.rep.push_back(root);
    }
    t.class_of[i] = t.class_of[root];
  }
  return t;
}

Value type_distance(const ToyClass& k, const TypeSet& t, int p, int q) {
  const Quantale& qu = k.quantale();
  const auto& ms = k.morphisms();
  Value acc = qu.top();
  for (size_t i = 0; i < t.exts.size(); ++i) {
    if (t.class_of[i] != p) continue;
    for (size_t j = 0; j < t.exts.size(); ++j) {
      if (t.class_of[j] != q) continue;
      const Morphism& f0 = ms[t.exts[i].morphism];
      const Morphism& f1 = ms[t.exts[j].morphism];
      for (size_t a = 0; a < ms.size(); ++a)
        for (size_t b = 0; b < ms.size(); ++b) {
          if (!equalizes(k, f0, f1, ms[a], ms[b])) continue;
          const VSpace& target = k.structures()[ms[a].dst].space;
          acc = qu.meet2(acc, target.d(ms[a].map[t.exts[i].point],
                                       ms[b].map[t.exts[j].point]));
        }
    }
  }
  return acc;
}

bool type_distance_attained(const ToyClass& k, const TypeSet& t, int p,
                            int q) {
  const Quantale& qu = k.quantale();
  const auto& ms = k.morphisms();
  Value target_value = type_distance(k, t, p, q);
  for (size_t i = 0; i < t.exts.size(); ++i) {
    if (t.class_of[i] != p) continue;
    for (size_t j = 0; j < t.exts.size(); ++j) {
      if (t.class_of[j] != q) continue;
      const Morphism& f0 = ms[t.exts[i].morphism];
      const Morphism& f1 = ms[t.exts[j].morphism];
      for (size_t a = 0; a < ms.size(); ++a)
        for (size_t b = 0; b < ms.size(); ++b) {
          if (!equalizes(k, f0, f1, ms[a], ms[b])) continue;
          const VSpace& sp = k.structures()[ms[a].dst].space;
          if (qu.equal(sp.d(ms[a].map[t.exts[i].point],
                            ms[b].map[t.exts[j].point]),
                       target_value))
            return true;
        }
    }
  }
  return false;
}

std::vector<CheckResult> check_type_pseudometric(const ToyClass& k,
                                                 int base) {
  const Quantale& q = k.quantale();
  TypeSet t = types_over(k, base);
  int m = t.type_count();
  std::vector<std::vector<Value>> d(m, std::vector<Value>(m, q.zero()));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) d[i][j] = type_distance(k, t, i, j);

  std::vector<CheckResult> out;
  CheckResult refl{"typedist-reflexivity"};
  for (int i = 0; i < m; ++i)
    if (!q.equal(d[i][i], q.zero()))
      refl.fail("type " + std::to_string(i) + ": " + q.format(d[i][i]));
  out.push_back(std::move(refl));

  CheckResult sym{"typedist-symmetry"};
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (!q.equal(d[i][j], d[j][i]))
        sym.fail("types " + std::to_string(i) + "," + std::to_string(j));
  out.push_back(std::move(sym));

  CheckResult tri{"typedist-subadditivity"};
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int l = 0; l < m; ++l)
        if (!q.leq(d[i][j], q.add(d[i][l], d[l][j])))
          tri.fail("types (" + std::to_string(i) + "," + std::to_string(j) +
                   "," + std::to_string(l) + "): " + q.format(d[i][j]) +
                   " > " + q.format(q.add(d[i][l], d[l][j])));
  out.push_back(std::move(tri));
  return out;
}

std::vector<CheckResult> check_separation_and_ctp(const ToyClass& k, int base,
                                                  int safa_depth) {
  const Quantale& q = k.quantale();
  const auto& ms = k.morphisms();
  TypeSet t = types_over(k, base);
  int m = t.type_count();
  std::vector<CheckResult> out;

  CheckResult sep{"types-separated"};
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (q.equal(type_distance(k, t, i, j), q.zero()))
        sep.fail("types " + std::to_string(i) + " and " + std::to_string(j) +
                 " at distance zero");
  out.push_back(std::move(sep));

  CheckResult ctp{"types-continuity"};
  for (size_t e = 0; e < t.exts.size(); ++e) {
    for (int p = 0; p < m; ++p) {
      bool premise = true;
      for (int n = 0; n <= safa_depth && premise; ++n) {
        Value u = q.safa(n);
        bool close = false;
        const Morphism& f0 = ms[t.exts[e].morphism];
        for (size_t j = 0; j < t.exts.size() && !close; ++j) {
          if (t.class_of[j] != p) continue;
          const Morphism& f1 = ms[t.exts[j].morphism];
          for (size_t a = 0; a < ms.size() && !close; ++a)
            for (size_t b = 0; b < ms.size() && !close; ++b) {
              if (!equalizes(k, f0, f1, ms[a], ms[b])) continue;
              const VSpace& sp = k.structures()[ms[a].dst].space;
              close = q.leq(sp.d(ms[a].map[t.exts[e].point],
                                 ms[b].map[t.exts[j].point]),
                            u);
            }
        }
        premise = close;
      }
      if (premise && t.class_of[e] != p)
        ctp.fail("extension " + ext_text(k, t.exts[e]) +
                 " approximates type " + std::to_string(p) +
                 " without realizing it");
    }
  }
  out.push_back(std::move(ctp));
  return out;
}

int restrict_type(const ToyClass& k, const TypeSet& t, int p, int chi,
                  const TypeSet& over_source) {
  const auto& ms = k.morphisms();
  const Morphism& c = ms[chi];
  if (c.dst != t.base)
    throw QuantaleError("restrict_type: arrow does not land in the base");
  const PointedExt& rep = t.exts[t.rep[p]];
  const Morphism& f = ms[rep.morphism];
  Morphism comp;
  comp.src = c.src;
  comp.dst = f.dst;
  for (int x : c.map) comp.map.push_back(f.map[x]);
  for (size_t i = 0; i < ms.size(); ++i)
    if (ms[i] == comp) {
      int id = over_source.type_of({static_cast<int>(i), rep.point});
      if (id < 0)
        throw QuantaleError("restrict_type: restricted extension not found");
      return id;
    }
  throw QuantaleError("restrict_type: catalog not closed under composition");
}

TamenessReport check_tameness(const ToyClass& k, int kappa, const Value& eps,
                              const Value& delta) {
  const Quantale& q = k.quantale();
  q.require(eps);
  q.require(delta);
  if (!q.way_above(eps, q.zero()) || !q.way_above(delta, q.zero()))
    throw QuantaleError("check_tameness: eps and delta must be way above 0");

  TamenessReport report;
  CheckResult check{"class-tameness"};
  std::ostringstream note;
  note << "kappa=" << kappa << " eps=" << q.format(eps) << " delta="
       << q.format(delta);
  check.note = note.str();

  int ns = static_cast<int>(k.structures().size());
  std::vector<TypeSet> types;
  for (int i = 0; i < ns; ++i) types.push_back(types_over(k, i));

  for (int base = 0; base < ns; ++base) {
    const TypeSet& t = types[base];
    for (int p0 = 0; p0 < t.type_count(); ++p0)
      for (int p1 = p0 + 1; p1 < t.type_count(); ++p1) {
        bool premise = true;
        for (size_t chi = 0; chi < k.morphisms().size() && premise; ++chi) {
          const Morphism& c = k.morphisms()[chi];
          if (c.dst != base) continue;
          if (k.structures()[c.src].space.size() > kappa) continue;
          const TypeSet& ts = types[c.src];
          int r0 = restrict_type(k, t, p0, static_cast<int>(chi), ts);
          int r1 = restrict_type(k, t, p1, static_cast<int>(chi), ts);
          premise = q.way_above(delta, type_distance(k, ts, r0, r1));
        }
        if (premise && !q.way_above(eps, type_distance(k, t, p0, p1))) {
          report.violations.push_back({base, p0, p1});
          check.fail("base " + k.structure_name(base) + ": types " +
                     std::to_string(p0) + "," + std::to_string(p1) +
                     " delta-close on every small restriction but " +
                     q.format(type_distance(k, t, p0, p1)) + " apart");
        }
      }
  }
  report.checks.push_back(std::move(check));
  return report;
}

ToyClass discrete_truth_class(int max_points) {
  const Quantale& q = truth_quantale();
  std::vector<VStructure> structures;
  for (int size = 0; size <= max_points; ++size) {
    VStructure m;
    m.space.q = &q;
    for (int i = 0; i < size; ++i)
      m.space.points.push_back("x" + std::to_string(i));
    m.space.dist.assign(size, std::vector<Value>(size, q.top()));
    for (int i = 0; i < size; ++i) m.space.dist[i][i] = q.zero();
    m.space.separated_intent = true;
    structures.push_back(std::move(m));
  }
  std::vector<Morphism> morphisms;
  for (int s = 0; s <= max_points; ++s)
    for (int d = s; d <= max_points; ++d) {
      // every injection from s points into d points
      std::vector<int> map(s, -1);
      std::vector<bool> used(d, false);
      std::function<void(int)> rec = [&](int pos) {
        if (pos == s) {
          morphisms.push_back({s, d, map});
          return;
        }
        for (int v = 0; v < d; ++v) {
          if (used[v]) continue;
          used[v] = true;
          map[pos] = v;
          rec(pos + 1);
          used[v] = false;
        }
      };
      rec(0);
    }
  ToyClass k = ToyClass::build(std::move(structures), std::move(morphisms),
                               max_points);
  std::vector<std::string> names;
  for (int size = 0; size <= max_points; ++size)
    names.push_back("D" + std::to_string(size));
  k.set_names(std::move(names));
  return k;
}

ToyClass extreal_chain_class() {
  const Quantale& q = extreal_quantale();
  auto space = [&](std::vector<std::string> pts,
                   std::vector<std::vector<double>> d) {
    VStructure m;
    m.space.q = &q;
    m.space.points = std::move(pts);
    int n = m.space.size();
    m.space.dist.assign(n, std::vector<Value>(n, q.zero()));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.space.dist[i][j] = q.parse(
          std::to_string(d[i][j]));
    return m;
  };
  std::vector<VStructure> structures;
  structures.push_back(space({}, {}));
  structures.push_back(space({"p"}, {{0}}));
  structures.push_back(space({"p", "q"}, {{0, 1}, {1, 0}}));
  structures.push_back(
      space({"p", "q", "r"}, {{0, 1, 1}, {1, 0, 2}, {1, 2, 0}}));
  std::vector<Morphism> morphisms;
  morphisms.push_back({0, 1, {}});
  morphisms.push_back({1, 2, {0}});
  morphisms.push_back({2, 3, {0, 1}});
  ToyClass k = ToyClass::build(std::move(structures), std::move(morphisms), 3);
  k.set_names({"E", "P", "D", "T"});
  return k;
}

}  // namespace qmt
