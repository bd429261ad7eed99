#include "qmt/io.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace qmt {

namespace {

namespace fs = std::filesystem;

struct Line {
  int number;
  std::string key;
  std::vector<std::string> tokens;
};

std::vector<Line> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  std::vector<Line> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    std::string first;
    if (!(ss >> first)) continue;
    if (first.back() != ':')
      throw ParseError(path + ":" + std::to_string(number) +
                       ": expected 'key:' prefix, got '" + first + "'");
    Line line;
    line.number = number;
    line.key = first.substr(0, first.size() - 1);
    std::string tok;
    while (ss >> tok) line.tokens.push_back(tok);
    out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void fail(const std::string& path, const Line& line,
                       const std::string& message) {
  throw ParseError(path + ":" + std::to_string(line.number) + ": " + message);
}

int point_index(const std::string& path, const Line& line,
                const std::vector<std::string>& points,
                const std::string& name) {
  for (size_t i = 0; i < points.size(); ++i)
    if (points[i] == name) return static_cast<int>(i);
  fail(path, line, "unknown point '" + name + "'");
}

Value parse_literal(const std::string& path, const Line& line,
                    const Quantale& q, const std::string& text) {
  try {
    return q.parse(text);
  } catch (const std::exception& e) {
    fail(path, line, std::string("bad value literal '") + text + "': " +
                         e.what());
  }
}

// Shared space parsing: quantale, points, distance matrix with mirroring
// and diagonal defaults.
struct SpaceData {
  const Quantale* q = nullptr;
  std::vector<std::string> points;
  std::vector<std::vector<Value>> dist;
  bool separated = false;
};

SpaceData parse_space_lines(const std::string& path,
                            const std::vector<Line>& lines,
                            QuantaleRegistry& reg,
                            bool accept_eq_rows) {
  SpaceData s;
  std::string base_dir = fs::path(path).parent_path().string();
  std::vector<std::tuple<int, int, Value, const Line*>> entries;
  for (const Line& line : lines) {
    if (line.key == "quantale") {
      if (line.tokens.size() != 1) fail(path, line, "quantale: needs a name");
      s.q = reg.resolve(line.tokens[0], base_dir);
    } else if (line.key == "points") {
      s.points = line.tokens;
    } else if (line.key == "separated") {
      s.separated = !line.tokens.empty() && line.tokens[0] == "true";
    } else if (line.key == "dist" || (accept_eq_rows && line.key == "eq")) {
      if (!s.q) fail(path, line, "quantale must be declared before entries");
      if (line.tokens.size() != 3)
        fail(path, line, line.key + ": needs 'x y value'");
      int x = point_index(path, line, s.points, line.tokens[0]);
      int y = point_index(path, line, s.points, line.tokens[1]);
      entries.emplace_back(x, y, parse_literal(path, line, *s.q,
                                               line.tokens[2]),
                           &line);
    } else if (line.key == "self") {
      if (!s.q) fail(path, line, "quantale must be declared before entries");
      if (line.tokens.size() != 2) fail(path, line, "self: needs 'x value'");
      int x = point_index(path, line, s.points, line.tokens[0]);
      entries.emplace_back(x, x, parse_literal(path, line, *s.q,
                                               line.tokens[1]),
                           &line);
    }
  }
  if (!s.q) throw ParseError(path + ": no quantale declared");
  int n = static_cast<int>(s.points.size());
  std::vector<std::vector<std::optional<Value>>> m(
      n, std::vector<std::optional<Value>>(n));
  for (auto& [x, y, v, line] : entries) {
    if (m[x][y]) fail(path, *line, "duplicate entry");
    m[x][y] = v;
  }
  s.dist.assign(n, std::vector<Value>(n, s.q->zero()));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (m[x][y])
        s.dist[x][y] = *m[x][y];
      else if (m[y][x])
        s.dist[x][y] = *m[y][x];
      else if (x == y)
        s.dist[x][y] = s.q->zero();
      else
        throw ParseError(path + ": no distance given for (" + s.points[x] +
                         "," + s.points[y] + ")");
    }
  return s;
}

}  // namespace

const Quantale* QuantaleRegistry::resolve(const std::string& selector,
                                          const std::string& base_dir) {
  if (const Quantale* q = builtin_quantale(selector)) return q;
  const std::string prefix = "lattice:";
  if (selector.rfind(prefix, 0) == 0) {
    std::string rel = selector.substr(prefix.size());
    fs::path p(rel);
    if (p.is_relative() && !base_dir.empty()) p = fs::path(base_dir) / p;
    std::string key = fs::weakly_canonical(p).string();
    auto it = lattices_.find(key);
    if (it == lattices_.end()) {
      FiniteLattice lat = load_lattice_file(p.string());
      it = lattices_
               .emplace(key, std::make_unique<LatticeQuantale>(
                                 std::move(lat), selector))
               .first;
    }
    return it->second.get();
  }
  throw ParseError("unknown quantale selector '" + selector + "'");
}

FiniteLattice load_lattice_file(const std::string& path) {
  std::vector<Line> lines = read_lines(path);
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::tuple<int, int, int>> add_rows;
  bool add_is_join = false;
  std::optional<int> zero, top;

  auto id_of = [&](const Line& line, const std::string& name) {
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return static_cast<int>(i);
    fail(path, line, "unknown element '" + name + "'");
  };

  for (const Line& line : lines) {
    if (line.key == "elements") {
      names = line.tokens;
    } else if (line.key == "leq") {
      if (line.tokens.size() != 2) fail(path, line, "leq: needs 'a b'");
      pairs.emplace_back(id_of(line, line.tokens[0]),
                         id_of(line, line.tokens[1]));
    } else if (line.key == "add") {
      if (line.tokens.size() == 1 && line.tokens[0] == "join") {
        add_is_join = true;
      } else if (line.tokens.size() == 3) {
        add_rows.emplace_back(id_of(line, line.tokens[0]),
                              id_of(line, line.tokens[1]),
                              id_of(line, line.tokens[2]));
      } else {
        fail(path, line, "add: needs 'a b c' or 'join'");
      }
    } else if (line.key == "zero") {
      zero = id_of(line, line.tokens.at(0));
    } else if (line.key == "top") {
      top = id_of(line, line.tokens.at(0));
    } else {
      fail(path, line, "unknown key '" + line.key + "'");
    }
  }
  if (names.empty()) throw ParseError(path + ": no elements declared");
  if (!zero || !top) throw ParseError(path + ": zero and top are required");

  auto build = [&] {
    if (add_is_join)
      return FiniteLattice::frame_from_relation(names, pairs, *zero, *top);
    int n = static_cast<int>(names.size());
    std::vector<std::vector<int>> add(n, std::vector<int>(n, -1));
    for (auto& [a, b, c] : add_rows) add[a][b] = c;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (add[a][b] < 0)
          throw ParseError(path + ": add table missing entry for (" +
                           names[a] + "," + names[b] + ")");
    return FiniteLattice::from_relation(names, pairs, std::move(add), *zero,
                                        *top);
  };
  FiniteLattice lat = [&] {
    try {
      return build();
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(path + ": " + e.what());
    }
  }();

  std::vector<std::string> issues = lat.validate(/*monoid_laws=*/false);
  if (!issues.empty())
    throw ParseError(path + ": not a lattice order: " + issues.front());
  return lat;
}

VSpace load_space_file(const std::string& path, QuantaleRegistry& reg) {
  SpaceData s = parse_space_lines(path, read_lines(path), reg, false);
  VSpace out;
  out.q = s.q;
  out.points = std::move(s.points);
  out.dist = std::move(s.dist);
  out.separated_intent = s.separated;
  return out;
}

PartialVSpace load_partial_space_file(const std::string& path,
                                      QuantaleRegistry& reg) {
  SpaceData s = parse_space_lines(path, read_lines(path), reg, false);
  PartialVSpace out;
  out.q = s.q;
  out.points = std::move(s.points);
  out.dist = std::move(s.dist);
  return out;
}

VStructure load_structure_file(const std::string& path, QuantaleRegistry& reg,
                               bool require_nonexpanding) {
  std::vector<Line> lines = read_lines(path);
  SpaceData s = parse_space_lines(path, lines, reg, false);
  VStructure m;
  m.space.q = s.q;
  m.space.points = std::move(s.points);
  m.space.dist = std::move(s.dist);
  m.space.separated_intent = s.separated;

  auto arity_of = [&](std::vector<std::pair<std::string, int>>& list,
                      const Line& line, const std::string& name, int arity) {
    for (auto& [n, a] : list) {
      if (n != name) continue;
      if (a != arity) fail(path, line, "inconsistent arity for " + name);
      return;
    }
    list.emplace_back(name, arity);
  };

  for (const Line& line : lines) {
    if (line.key == "constant") {
      if (line.tokens.size() != 2) fail(path, line, "constant: needs 'c p'");
      m.sig.constants.push_back(line.tokens[0]);
      m.constant_map[line.tokens[0]] =
          point_index(path, line, m.space.points, line.tokens[1]);
    } else if (line.key == "function") {
      if (line.tokens.size() < 3)
        fail(path, line, "function: needs 'f args.. value'");
      std::string name = line.tokens[0];
      int arity = static_cast<int>(line.tokens.size()) - 2;
      arity_of(m.sig.functions, line, name, arity);
      std::vector<int> args;
      for (int i = 0; i < arity; ++i)
        args.push_back(
            point_index(path, line, m.space.points, line.tokens[i + 1]));
      int value =
          point_index(path, line, m.space.points, line.tokens.back());
      if (m.function_maps[name].count(args))
        fail(path, line, "duplicate function row");
      m.function_maps[name][args] = value;
    } else if (line.key == "relation") {
      if (line.tokens.size() < 3)
        fail(path, line, "relation: needs 'R args.. value'");
      std::string name = line.tokens[0];
      int arity = static_cast<int>(line.tokens.size()) - 2;
      arity_of(m.sig.relations, line, name, arity);
      std::vector<int> args;
      for (int i = 0; i < arity; ++i)
        args.push_back(
            point_index(path, line, m.space.points, line.tokens[i + 1]));
      if (m.relation_maps[name].count(args))
        fail(path, line, "duplicate relation row");
      m.relation_maps[name][args] =
          parse_literal(path, line, *m.space.q, line.tokens.back());
    }
  }

  std::vector<CheckResult> checks = check_structure(m);
  for (const CheckResult& c : checks) {
    if (c.pass) continue;
    bool totality = c.name == "structure-totality";
    if (totality || require_nonexpanding)
      throw ParseError(path + ": " + c.name + ": " +
                       (c.witnesses.empty() ? "failed" : c.witnesses.front()));
  }
  return m;
}

ToyClass load_class_file(const std::string& path, QuantaleRegistry& reg) {
  std::vector<Line> lines = read_lines(path);
  std::string base_dir = fs::path(path).parent_path().string();
  std::vector<std::string> names;
  std::vector<VStructure> structures;
  std::vector<Morphism> morphisms;
  int ls_bound = 0;

  auto index_of = [&](const Line& line, const std::string& name) {
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return static_cast<int>(i);
    fail(path, line, "unknown structure '" + name + "'");
  };

  for (const Line& line : lines) {
    if (line.key == "structure") {
      if (line.tokens.size() != 2)
        fail(path, line, "structure: needs 'name path'");
      names.push_back(line.tokens[0]);
      fs::path p(line.tokens[1]);
      if (p.is_relative()) p = fs::path(base_dir) / p;
      structures.push_back(load_structure_file(p.string(), reg, true));
    } else if (line.key == "morphism") {
      if (line.tokens.size() < 2)
        fail(path, line, "morphism: needs 'src dst pairs..'");
      Morphism mo;
      mo.src = index_of(line, line.tokens[0]);
      mo.dst = index_of(line, line.tokens[1]);
      const VStructure& src = structures[mo.src];
      const VStructure& dst = structures[mo.dst];
      mo.map.assign(src.space.size(), -1);
      for (size_t i = 2; i < line.tokens.size(); ++i) {
        auto colon = line.tokens[i].find(':');
        if (colon == std::string::npos)
          fail(path, line, "morphism pair must be 'from:to'");
        int from = point_index(path, line, src.space.points,
                               line.tokens[i].substr(0, colon));
        int to = point_index(path, line, dst.space.points,
                             line.tokens[i].substr(colon + 1));
        mo.map[from] = to;
      }
      for (int x : mo.map)
        if (x < 0) fail(path, line, "morphism map not total");
      morphisms.push_back(std::move(mo));
    } else if (line.key == "ls-bound") {
      ls_bound = std::stoi(line.tokens.at(0));
    } else {
      fail(path, line, "unknown key '" + line.key + "'");
    }
  }
  try {
    ToyClass k =
        ToyClass::build(std::move(structures), std::move(morphisms), ls_bound);
    k.set_names(std::move(names));
    return k;
  } catch (const std::invalid_argument& e) {
    throw ParseError(path + ": " + e.what());
  }
}

OmegaEqualitySet load_omega_file(const std::string& path,
                                 QuantaleRegistry& reg) {
  SpaceData s = parse_space_lines(path, read_lines(path), reg, true);
  if (!is_frame(*s.q))
    throw ParseError(path + ": quantale is not a finite frame");
  OmegaEqualitySet o;
  o.frame = s.q;
  o.points = std::move(s.points);
  o.e = std::move(s.dist);
  return o;
}

}  // namespace qmt
