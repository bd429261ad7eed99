#include "qmt/partial.hpp"

namespace qmt {

std::vector<CheckResult> check_partial_axioms(const PartialVSpace& s) {
  const Quantale& q = *s.q;
  int n = s.size();
  std::vector<CheckResult> out;

  CheckResult sym{"partial-symmetry"};
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (!q.equal(s.d(x, y), s.d(y, x)))
        sym.fail("d(" + s.points[x] + "," + s.points[y] + ")=" +
                 q.format(s.d(x, y)) + " vs " + q.format(s.d(y, x)));
  out.push_back(std::move(sym));

  CheckResult tri{"partial-subadditivity"};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (!q.leq(s.d(x, y), q.add(s.d(x, z), s.d(z, y))))
          tri.fail("(" + s.points[x] + "," + s.points[y] + "," + s.points[z] +
                   ")");
  out.push_back(std::move(tri));

  CheckResult self{"partial-small-self-distance"};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!q.leq(s.d(x, x), s.d(x, y)))
        self.fail("d(" + s.points[x] + "," + s.points[x] + ")=" +
                  q.format(s.d(x, x)) + " above d(" + s.points[x] + "," +
                  s.points[y] + ")=" + q.format(s.d(x, y)));
  out.push_back(std::move(self));
  return out;
}

bool is_frame(const Quantale& q) {
  if (q.kind() == Instance::Truth) return true;
  if (q.kind() != Instance::Lattice) return false;
  const auto& lat = static_cast<const LatticeQuantale&>(q).lattice();
  for (int a = 0; a < lat.size(); ++a)
    for (int b = 0; b < lat.size(); ++b) {
      auto j = lat.join(a, b);
      if (!j || lat.add(a, b) != *j) return false;
    }
  return true;
}

OmegaEqualitySet to_omega_set(const PartialVSpace& s) {
  if (!is_frame(*s.q))
    throw QuantaleError("to_omega_set: quantale is not a finite frame");
  OmegaEqualitySet o;
  o.frame = s.q;
  o.points = s.points;
  o.e = s.dist;
  return o;
}

PartialVSpace from_omega_set(const OmegaEqualitySet& o) {
  PartialVSpace s;
  s.q = o.frame;
  s.points = o.points;
  s.dist = o.e;
  return s;
}

std::vector<CheckResult> check_omega_laws(const OmegaEqualitySet& o) {
  const Quantale& q = *o.frame;
  int n = o.size();
  std::vector<CheckResult> out;

  CheckResult sym{"omega-symmetry"};
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (!q.equal(o.E(x, y), o.E(y, x)))
        sym.fail("E(" + o.points[x] + "," + o.points[y] + ")=" +
                 q.format(o.E(x, y)) + " vs " + q.format(o.E(y, x)));
  out.push_back(std::move(sym));

  // Dual reading: the equality meet of E(x,y) and E(y,z) must stay below
  // E(x,z), which in the frame's own order is a join bound.
  CheckResult trans{"omega-transitivity"};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (!q.leq(o.E(x, z), q.join2(o.E(x, y), o.E(y, z))))
          trans.fail("(" + o.points[x] + "," + o.points[y] + "," +
                     o.points[z] + ")");
  out.push_back(std::move(trans));

  CheckResult self{"omega-self-support"};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!q.leq(o.E(x, x), o.E(x, y)))
        self.fail("E(" + o.points[x] + "," + o.points[y] +
                  ") exceeds the self-equality of " + o.points[x]);
  out.push_back(std::move(self));

  CheckResult sep{"omega-separated"};
  std::string glued;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (q.equal(o.E(x, y), q.join2(o.E(x, x), o.E(y, y)))) {
        if (!glued.empty()) glued += ", ";
        glued += "(" + o.points[x] + "," + o.points[y] + ")";
      }
  sep.note = glued.empty() ? "separated" : "indistinguishable pairs: " + glued;
  out.push_back(std::move(sep));
  return out;
}

}  // namespace qmt
