#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>

#include "qmt/partial.hpp"
#include "qmt/space.hpp"
#include "qmt/structure.hpp"
#include "qmt/toy_class.hpp"

namespace qmt {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Resolves quantale selectors ("truth", "extreal", "unit", "errors",
/// "ddf", or "lattice:<path>") and owns any lattice instances it loads.
/// Lattice paths are cached, so every consumer of the same file shares one
/// instance (and Values stay comparable across them).
class QuantaleRegistry {
 public:
  /// base_dir resolves relative lattice paths (usually the directory of
  /// the referencing file). Throws ParseError for unknown selectors or
  /// invalid files.
  const Quantale* resolve(const std::string& selector,
                          const std::string& base_dir = "");

 private:
  std::map<std::string, std::unique_ptr<LatticeQuantale>> lattices_;
};

/// Line format: `elements:` (names), `leq: a b` pairs (reflexive-transitive
/// closure applied), `add: a b c` rows or the single line `add: join`,
/// `zero:`, `top:`, `#` comments. The order axioms are validated fail-fast;
/// the monoid laws are left to the law suite.
FiniteLattice load_lattice_file(const std::string& path);

/// Line format: `quantale:`, `points:`, `dist: x y <literal>`,
/// `self: x <literal>` (a diagonal entry), optional `separated: true`.
/// Missing mirror entries are copied from the given direction; if both
/// directions are given they are kept verbatim (the axiom checkers flag
/// asymmetry). Missing diagonal entries default to 0.
VSpace load_space_file(const std::string& path, QuantaleRegistry& reg);

PartialVSpace load_partial_space_file(const std::string& path,
                                      QuantaleRegistry& reg);

/// Adds to the space format: `constant: c p`, `function: f x.. y` (last
/// point is the value), `relation: R x.. <literal>`. Arities are inferred
/// from the first row of each symbol; totality is enforced. When
/// `require_nonexpanding` is set, interpretation rows must pass the
/// nonexpansion checks fail-fast (class loading); the structure checker
/// itself loads with it unset so defects reach the report.
VStructure load_structure_file(const std::string& path, QuantaleRegistry& reg,
                               bool require_nonexpanding = true);

/// Line format: `structure: NAME PATH` (relative to the class file),
/// `morphism: SRC DST p:q ...` (one pair per source point), optional
/// `ls-bound:`. The loader validates every morphism as an embedding and
/// closes the catalog under composition.
ToyClass load_class_file(const std::string& path, QuantaleRegistry& reg);

/// Same shape as a partial space file (`eq:` is accepted as a synonym for
/// `dist:`), read as lattice-valued equality data. The quantale must be a
/// finite frame. Missing diagonal entries default to the frame's bottom.
OmegaEqualitySet load_omega_file(const std::string& path,
                                 QuantaleRegistry& reg);

}  // namespace qmt
