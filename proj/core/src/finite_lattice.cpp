#include "qmt/finite_lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmt {

namespace {
std::vector<std::vector<bool>> closure(
    int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) leq[i][i] = true;
  for (auto& [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw std::invalid_argument("lattice: leq pair out of range");
    leq[a][b] = true;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (leq[i][k])
        for (int j = 0; j < n; ++j)
          if (leq[k][j]) leq[i][j] = true;
  return leq;
}
}  // namespace

FiniteLattice::FiniteLattice(std::vector<std::string> element_names,
                             std::vector<std::vector<bool>> leq_closure,
                             std::vector<std::vector<int>> add_table,
                             int zero_id, int top_id)
    : names_(std::move(element_names)),
      leq_(std::move(leq_closure)),
      add_(std::move(add_table)),
      zero_(zero_id),
      top_(top_id) {
  size_t n = names_.size();
  if (n == 0) throw std::invalid_argument("lattice: empty carrier");
  if (leq_.size() != n || add_.size() != n)
    throw std::invalid_argument("lattice: table size mismatch");
  for (auto& row : leq_)
    if (row.size() != n) throw std::invalid_argument("lattice: ragged leq");
  for (auto& row : add_) {
    if (row.size() != n) throw std::invalid_argument("lattice: ragged add");
    for (int v : row)
      if (v < 0 || v >= static_cast<int>(n))
        throw std::invalid_argument("lattice: add entry out of range");
  }
  if (zero_ < 0 || zero_ >= static_cast<int>(n) || top_ < 0 ||
      top_ >= static_cast<int>(n))
    throw std::invalid_argument("lattice: zero/top out of range");
}

FiniteLattice FiniteLattice::from_relation(
    std::vector<std::string> element_names,
    const std::vector<std::pair<int, int>>& leq_pairs,
    std::vector<std::vector<int>> add_table, int zero_id, int top_id) {
  int n = static_cast<int>(element_names.size());
  return FiniteLattice(std::move(element_names), closure(n, leq_pairs),
                       std::move(add_table), zero_id, top_id);
}

FiniteLattice FiniteLattice::frame_from_relation(
    std::vector<std::string> element_names,
    const std::vector<std::pair<int, int>>& leq_pairs, int zero_id,
    int top_id) {
  int n = static_cast<int>(element_names.size());
  auto leq = closure(n, leq_pairs);
  // add = join, computed from the order
  std::vector<std::vector<int>> add(n, std::vector<int>(n, top_id));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int best = -1;
      for (int c = 0; c < n; ++c) {
        if (!leq[a][c] || !leq[b][c]) continue;
        if (best < 0 || leq[c][best]) best = c;
      }
      if (best < 0) throw std::invalid_argument("frame: missing join");
      add[a][b] = best;
    }
  return FiniteLattice(std::move(element_names), std::move(leq),
                       std::move(add), zero_id, top_id);
}

FiniteLattice FiniteLattice::boolean(int n) {
  int size = 1 << n;
  std::vector<std::string> names(size);
  std::vector<std::pair<int, int>> pairs;
  for (int m = 0; m < size; ++m) {
    std::string nm = "{";
    for (int bit = 0; bit < n; ++bit)
      if (m & (1 << bit)) nm += static_cast<char>('a' + bit);
    nm += "}";
    names[m] = nm;
    for (int m2 = 0; m2 < size; ++m2)
      if ((m & m2) == m) pairs.emplace_back(m, m2);
  }
  return frame_from_relation(std::move(names), pairs, 0, size - 1);
}

FiniteLattice FiniteLattice::diamond() {
  return frame_from_relation({"0", "a", "b", "1"},
                             {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, 0, 3);
}

std::optional<int> FiniteLattice::id_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::optional<int> FiniteLattice::meet(int a, int b) const {
  int best = -1;
  for (int c = 0; c < size(); ++c) {
    if (!leq_[c][a] || !leq_[c][b]) continue;
    if (best < 0 || leq_[best][c]) best = c;
  }
  if (best < 0) return std::nullopt;
  for (int c = 0; c < size(); ++c)
    if (leq_[c][a] && leq_[c][b] && !leq_[c][best]) return std::nullopt;
  return best;
}

std::optional<int> FiniteLattice::join(int a, int b) const {
  int best = -1;
  for (int c = 0; c < size(); ++c) {
    if (!leq_[a][c] || !leq_[b][c]) continue;
    if (best < 0 || leq_[c][best]) best = c;
  }
  if (best < 0) return std::nullopt;
  for (int c = 0; c < size(); ++c)
    if (leq_[a][c] && leq_[b][c] && !leq_[best][c]) return std::nullopt;
  return best;
}

std::vector<std::string> FiniteLattice::validate(bool monoid_laws) const {
  std::vector<std::string> issues;
  int n = size();
  if (n > 64) {
    issues.push_back("lattice exceeds the 64-element validation bound");
    return issues;
  }
  auto witness2 = [&](const char* law, int a, int b) {
    issues.push_back(std::string(law) + " at (" + names_[a] + "," + names_[b] +
                     ")");
  };
  for (int a = 0; a < n; ++a) {
    if (!leq_[a][a]) issues.push_back("leq not reflexive at " + names_[a]);
    if (!leq_[zero_][a]) issues.push_back(names_[a] + " not above zero");
    if (!leq_[a][top_]) issues.push_back(names_[a] + " not below top");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a != b && leq_[a][b] && leq_[b][a])
        witness2("leq not antisymmetric", a, b);
      for (int c = 0; c < n; ++c)
        if (leq_[a][b] && leq_[b][c] && !leq_[a][c]) {
          witness2("leq not transitive", a, b);
          break;
        }
      if (!meet(a, b)) witness2("missing meet", a, b);
      if (!join(a, b)) witness2("missing join", a, b);
      if (issues.size() > 16) return issues;
    }
  if (!issues.empty() || !monoid_laws) return issues;
  for (int a = 0; a < n; ++a) {
    if (add_[zero_][a] != a || add_[a][zero_] != a)
      issues.push_back("add identity fails at " + names_[a]);
    for (int b = 0; b < n; ++b) {
      if (add_[a][b] != add_[b][a]) witness2("add not commutative", a, b);
      for (int c = 0; c < n; ++c) {
        if (add_[add_[a][b]][c] != add_[a][add_[b][c]]) {
          issues.push_back("add not associative at (" + names_[a] + "," +
                           names_[b] + "," + names_[c] + ")");
        }
        int lhs = add_[a][*meet(b, c)];
        int rhs = *meet(add_[a][b], add_[a][c]);
        if (lhs != rhs)
          issues.push_back("add does not distribute over meet at (" +
                           names_[a] + "," + names_[b] + "," + names_[c] +
                           ")");
        if (issues.size() > 16) return issues;
      }
    }
  }
  return issues;
}

bool FiniteLattice::way_above_bruteforce(int a, int b) const {
  return way_above_bruteforce_matrix()[a][b];
}

std::vector<std::vector<bool>> FiniteLattice::way_above_bruteforce_matrix()
    const {
  int n = size();
  if (n > 16)
    throw std::invalid_argument("way_above_bruteforce: lattice too large");
  std::uint32_t total = 1u << n;
  std::vector<bool> codirected(total, false);
  std::vector<int> meet_of(total, -1);
  std::vector<std::vector<int>> members(total);
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    std::vector<int>& fam = members[mask];
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) fam.push_back(i);
    bool ok = true;
    for (size_t i = 0; i < fam.size() && ok; ++i)
      for (size_t j = i + 1; j < fam.size() && ok; ++j) {
        bool found = false;
        for (int c : fam)
          if (leq_[c][fam[i]] && leq_[c][fam[j]]) {
            found = true;
            break;
          }
        ok = found;
      }
    codirected[mask] = ok;
    int m = fam[0];
    for (int x : fam) m = *meet(m, x);
    meet_of[mask] = m;
  }
  std::vector<std::vector<bool>> wa(n, std::vector<bool>(n, true));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (std::uint32_t mask = 1; mask < total && wa[a][b]; ++mask) {
        if (!codirected[mask] || !leq_[meet_of[mask]][b]) continue;
        bool has = false;
        for (int x : members[mask])
          if (leq_[x][a]) {
            has = true;
            break;
          }
        if (!has) wa[a][b] = false;
      }
    }
  return wa;
}

}  // namespace qmt
