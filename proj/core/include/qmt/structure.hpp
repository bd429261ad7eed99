#pragma once

#include <map>
#include <string>
#include <vector>

#include "qmt/report.hpp"
#include "qmt/space.hpp"

namespace qmt {

/// A finitary signature: constants plus function and relation symbols with
/// their arities.
struct Signature {
  std::vector<std::string> constants;
  std::vector<std::pair<std::string, int>> functions;
  std::vector<std::pair<std::string, int>> relations;

  bool operator==(const Signature&) const = default;
};

/// A metric structure: a space plus total interpretations of every symbol.
/// Function and relation interpretations are expected to be nonexpanding
/// (check_structure verifies; the tuple distance is the componentwise join,
/// and relation values are compared in the quantale's metric on itself).
struct VStructure {
  VSpace space;
  Signature sig;
  std::map<std::string, int> constant_map;
  std::map<std::string, std::map<std::vector<int>, int>> function_maps;
  std::map<std::string, std::map<std::vector<int>, Value>> relation_maps;
};

/// All tuples of the given arity over n points, in lexicographic order.
std::vector<std::vector<int>> all_tuples(int n, int arity);

/// The componentwise-join distance between two equal-length tuples.
Value tuple_distance(const VSpace& s, const std::vector<int>& a,
                     const std::vector<int>& b);

/// Totality of all tables plus both nonexpansion conditions, exhaustively
/// over tuple pairs.
std::vector<CheckResult> check_structure(const VStructure& m);

struct EmbeddingMap {
  const VStructure* source = nullptr;
  const VStructure* target = nullptr;
  std::vector<int> point_map;  // indexed by source point
};

/// Injectivity, exact isometry, and preservation of constants, functions,
/// and relation values.
std::vector<CheckResult> check_embedding(const EmbeddingMap& h);

bool embedding_passes(const EmbeddingMap& h);

/// A substructure as a point subset (containing all constants, closed under
/// the function tables) with inherited interpretations, plus the map from
/// its points back into the parent.
struct Substructure {
  VStructure value;
  std::vector<int> inclusion;  // substructure point -> parent point
};

/// Every substructure on at most max_size points.
std::vector<Substructure> enumerate_substructures(const VStructure& m,
                                                  int max_size);

}  // namespace qmt
