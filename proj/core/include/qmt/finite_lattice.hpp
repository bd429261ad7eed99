#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qmt {

/// A finite lattice with an explicit monoid addition table, the table-driven
/// backing for user-supplied quantales. Construction does not validate;
/// call validate() (the file loader does, fail-fast) so that deliberately
/// corrupted tables can still be fed to the law checker.
class FiniteLattice {
 public:
  FiniteLattice(std::vector<std::string> element_names,
                std::vector<std::vector<bool>> leq_closure,
                std::vector<std::vector<int>> add_table, int zero_id,
                int top_id);

  /// Builds the lattice from an arbitrary leq relation (reflexive-transitive
  /// closure is applied) with addition given as a full table.
  static FiniteLattice from_relation(std::vector<std::string> element_names,
                                     const std::vector<std::pair<int, int>>& leq_pairs,
                                     std::vector<std::vector<int>> add_table,
                                     int zero_id, int top_id);

  /// A frame-style quantale on the same order: addition taken to be join.
  static FiniteLattice frame_from_relation(
      std::vector<std::string> element_names,
      const std::vector<std::pair<int, int>>& leq_pairs, int zero_id,
      int top_id);

  /// The boolean lattice 2^n (a frame), elements named by bitmask subsets.
  static FiniteLattice boolean(int n);

  /// Diamond: 0 < a, b < 1 with add = join.
  static FiniteLattice diamond();

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int id) const { return names_[id]; }
  std::optional<int> id_of(const std::string& name) const;

  bool leq(int a, int b) const { return leq_[a][b]; }
  int add(int a, int b) const { return add_[a][b]; }
  int zero() const { return zero_; }
  int top() const { return top_; }

  /// Greatest lower / least upper bound; nullopt when it does not exist
  /// (i.e. the order is not a lattice).
  std::optional<int> meet(int a, int b) const;
  std::optional<int> join(int a, int b) const;

  /// Exhaustive structural check: partial order, all binary meets/joins,
  /// and (unless monoid_laws is false) the monoid laws plus distributivity
  /// of add over meets. Returns the list of violated laws (empty means
  /// valid). Exhaustive checks are bounded to 64 elements. Loaders check
  /// only the order part so that corrupted addition tables can still be fed
  /// to the law suite.
  std::vector<std::string> validate(bool monoid_laws = true) const;

  /// Brute-force way-above decision: enumerates every codirected subset A
  /// with meet(A) <= b and checks each contains an element <= a. Exponential;
  /// intended as a test oracle and for lattices of modest size (<= ~16).
  bool way_above_bruteforce(int a, int b) const;

  /// Full way-above matrix from the same enumeration, sharing the
  /// codirectedness/meet tables across all pairs.
  std::vector<std::vector<bool>> way_above_bruteforce_matrix() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<int>> add_;
  int zero_;
  int top_;
};

}  // namespace qmt
