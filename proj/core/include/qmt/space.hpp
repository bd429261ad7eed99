#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qmt/quantale.hpp"
#include "qmt/report.hpp"

namespace qmt {

/// A finite point set with a quantale-valued distance matrix. The matrix is
/// stored fully (both triangles); constructors and loaders fill it in, and
/// check_axioms decides which of the pseudometric axioms actually hold.
struct VSpace {
  const Quantale* q = nullptr;
  std::vector<std::string> points;
  std::vector<std::vector<Value>> dist;
  bool separated_intent = false;  // declared by input; verified by check_axioms

  int size() const { return static_cast<int>(points.size()); }
  std::optional<int> index_of(const std::string& name) const;
  const Value& d(int x, int y) const { return dist[x][y]; }
};

/// Reflexivity, symmetry, subadditivity, and (when declared) separation,
/// each with witness tuples.
std::vector<CheckResult> check_axioms(const VSpace& s);

/// The k-fold power: points are k-tuples (named "(p,q,...)"), distance the
/// componentwise join. Throws when the tuple count exceeds `max_points`.
VSpace product_space(const VSpace& s, int k, int max_points = 4096);

/// The quantale as a metric space over itself on the given sample elements:
/// d(x,y) = (y - x) + (x - y) with truncated subtraction.
VSpace self_space(const Quantale& q, std::span<const Value> samples);

/// Points strictly within eps of the center: { y : eps way-above d(c,y) }.
/// Requires way_above(eps, 0).
std::vector<int> open_ball(const VSpace& s, int center, const Value& eps);

/// An eventually-constant point sequence: explicit prefix, then the last
/// prefix entry repeats (a constant sequence has a 1-entry prefix).
struct PointSequence {
  const VSpace* space = nullptr;
  std::vector<int> prefix;

  int at(int n) const {
    return n < static_cast<int>(prefix.size()) ? prefix[n] : prefix.back();
  }
};

/// Per-threshold outcome of a prefix diagnostic: the least index from which
/// the property holds through `depth`, if any.
struct ThresholdDiagnostic {
  std::string eps;
  std::optional<int> stable_from;
};

/// For each eps, the least N <= depth with eps way above d(x_n, x_m) for all
/// N <= n, m <= depth. Evidence of Cauchyness, not proof; conclusive for
/// eventually-constant sequences when depth covers the prefix.
std::vector<ThresholdDiagnostic> is_cauchy_prefix(const PointSequence& seq,
                                                  int depth,
                                                  std::span<const Value> eps_list);

/// For each eps, the least N <= depth with x_n in the eps-ball of the limit
/// for all n >= N.
std::vector<ThresholdDiagnostic> converges_to(const PointSequence& seq,
                                              int limit, int depth,
                                              std::span<const Value> eps_list);

/// The default threshold list for diagnostics: witness-sequence terms
/// u_0..u_{count-1}.
std::vector<Value> default_eps_list(const Quantale& q, int count = 16);

/// The zero-distance relation of a truth-valued space, with closure checks.
struct RelationReport {
  std::vector<std::pair<int, int>> pairs;
  bool reflexive = false;
  bool symmetric = false;
  bool transitive = false;
};

/// Requires a truth-valued space: relates x to y when d(x,y) = 0 and reports
/// which closure properties the relation has (an equivalence relation for
/// any pseudometric).
RelationReport truth_space_to_relation(const VSpace& s);

}  // namespace qmt
