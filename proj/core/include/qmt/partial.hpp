#pragma once

#include <string>
#include <vector>

#include "qmt/quantale.hpp"
#include "qmt/report.hpp"

namespace qmt {

/// A space whose self-distances need not be zero. Symmetry, subadditivity,
/// and the small-self-distance law d(x,x) <= d(x,y) are the axioms checked.
struct PartialVSpace {
  const Quantale* q = nullptr;
  std::vector<std::string> points;
  std::vector<std::vector<Value>> dist;

  int size() const { return static_cast<int>(points.size()); }
  const Value& d(int x, int y) const { return dist[x][y]; }
};

std::vector<CheckResult> check_partial_axioms(const PartialVSpace& s);

/// A set with lattice-valued equality, read in the order dual of the frame:
/// larger E means "more equal". Stored values are frame elements; all laws
/// below are phrased through the frame's own order.
struct OmegaEqualitySet {
  const Quantale* frame = nullptr;  // a lattice instance with add = join
  std::vector<std::string> points;
  std::vector<std::vector<Value>> e;

  int size() const { return static_cast<int>(points.size()); }
  const Value& E(int x, int y) const { return e[x][y]; }
};

/// True when the quantale is a finite lattice whose addition table is the
/// join of its order.
bool is_frame(const Quantale& q);

/// Reads a frame-valued partial space as an equality set: E(x,y) is the
/// distance reinterpreted in the dual order (no data changes; the dual
/// reading turns subadditivity into transitivity). Throws unless is_frame.
OmegaEqualitySet to_omega_set(const PartialVSpace& s);

/// The inverse reading, back to a partial space.
PartialVSpace from_omega_set(const OmegaEqualitySet& o);

/// Symmetry, transitivity (dual form: E(x,z) below the join of E(x,y) and
/// E(y,z)), and self-support (E(x,x) dominates E(x,y) dually). A fourth,
/// never-failing check reports whether the set is separated: distinct
/// points with E(x,y) equal to the dual meet of the self-equalities are
/// listed in the note.
std::vector<CheckResult> check_omega_laws(const OmegaEqualitySet& o);

}  // namespace qmt
