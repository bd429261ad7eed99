#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmt/report.hpp"
#include "qmt/structure.hpp"

namespace qmt {

/// One arrow of a class catalog: an embedding between catalog structures,
/// stored by index.
struct Morphism {
  int src = -1;
  int dst = -1;
  std::vector<int> map;  // source point -> target point

  bool operator==(const Morphism&) const = default;
};

/// A finite catalog of structures and embeddings standing in for an
/// abstract class of metric structures at desk scale. The morphism set
/// contains all identities and is closed under composition (build() adds
/// both); every morphism must pass the embedding checks.
class ToyClass {
 public:
  /// Validates embeddings, adds identities, closes under composition.
  /// Throws std::invalid_argument on an invalid morphism.
  static ToyClass build(std::vector<VStructure> structures,
                        std::vector<Morphism> morphisms, int ls_bound = 0);

  const std::vector<VStructure>& structures() const { return structures_; }
  const std::vector<Morphism>& morphisms() const { return morphisms_; }
  int ls_bound() const { return ls_bound_; }
  const Quantale& quantale() const { return *structures_[0].space.q; }
  const std::vector<std::string>& names() const { return names_; }
  void set_names(std::vector<std::string> n) { names_ = std::move(n); }
  std::string structure_name(int i) const;

  /// Morphism indices with the given source structure.
  std::vector<int> arrows_from(int src) const;

 private:
  std::vector<VStructure> structures_;
  std::vector<Morphism> morphisms_;
  std::vector<std::string> names_;
  int ls_bound_ = 0;
};

/// Amalgamation: every span (f0: M -> M0, f1: M -> M1) extends to a
/// commuting square inside the catalog.
std::vector<CheckResult> check_ap(const ToyClass& k);
bool ap_holds(const ToyClass& k);

/// A pointed extension of the base structure: an arrow out of it plus a
/// point of the arrow's target.
struct PointedExt {
  int morphism = -1;
  int point = -1;

  bool operator==(const PointedExt&) const = default;
};

/// The orbit partition of pointed extensions of one base: two extensions
/// are identified when some co-cone in the catalog equalizes both the base
/// and the designated points.
struct TypeSet {
  int base = -1;
  std::vector<PointedExt> exts;
  std::vector<int> class_of;   // per extension, a canonical class id
  std::vector<int> rep;        // per class, index of the least member

  int type_count() const { return static_cast<int>(rep.size()); }
  int type_of(const PointedExt& e) const;
};

/// Partitions the pointed extensions of structure `base`. Requires the
/// amalgamation check to pass (otherwise the identification need not be
/// transitive); throws QuantaleError when it does not.
TypeSet types_over(const ToyClass& k, int base);

/// The distance of two types: the meet, over every pair of member
/// extensions and every equalizing co-cone, of the distance between the
/// designated points' images. Top (no co-cone) is reported by the caller.
Value type_distance(const ToyClass& k, const TypeSet& t, int p, int q);

/// Whether some single co-cone attains the meet in type_distance.
bool type_distance_attained(const ToyClass& k, const TypeSet& t, int p, int q);

/// Reflexivity, symmetry, and subadditivity of type_distance over all type
/// triples of the base.
std::vector<CheckResult> check_type_pseudometric(const ToyClass& k, int base);

/// Separation of distinct types, plus the finite continuity-of-types
/// analogue: an extension whose point is u_n-close to a realization of type
/// p inside a common extension, for every witness u_n up to safa_depth,
/// must itself realize p.
std::vector<CheckResult> check_separation_and_ctp(const ToyClass& k, int base,
                                                  int safa_depth);

/// The type of (f o chi, a) over chi's source, where (f, a) represents type
/// p over chi's target. chi is a morphism index with dst == t.base.
int restrict_type(const ToyClass& k, const TypeSet& t, int p, int chi,
                  const TypeSet& over_source);

struct TamenessViolation {
  int base;
  int p0;
  int p1;
};

struct TamenessReport {
  std::vector<CheckResult> checks;
  std::vector<TamenessViolation> violations;
};

/// The finite tameness check: for every base M and type pair over M, if
/// every restriction along an arrow from a structure of at most kappa
/// points keeps the restricted types delta-close (delta way above the
/// restricted distance), the types themselves must be eps-close. strong
/// mode forces delta = eps.
TamenessReport check_tameness(const ToyClass& k, int kappa, const Value& eps,
                              const Value& delta);

/// The catalog of all discrete truth-valued structures on 0..max_points
/// points (one per size) with every injection as a morphism.
ToyClass discrete_truth_class(int max_points = 3);

/// A chain of real-valued spaces (empty, 1, 2, 3 points; distances in
/// {0,1,2}) with inclusions, giving three types with distances 1 and 2.
ToyClass extreal_chain_class();

}  // namespace qmt
