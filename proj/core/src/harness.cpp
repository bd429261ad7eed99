#include "qmt/harness.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "qmt/io.hpp"
#include "qmt/laws.hpp"
#include "qmt/partial.hpp"
#include "qmt/space.hpp"
#include "qmt/structure.hpp"
#include "qmt/toy_class.hpp"

namespace qmt {

namespace {

std::string echo_command(const RunConfig& c) {
  std::ostringstream os;
  os << c.command;
  for (const auto& in : c.inputs) os << " " << in;
  if (c.command == "laws") os << " --quantale " << c.quantale;
  if (c.command == "laws") os << " --budget " << c.budget;
  if (!c.center.empty()) os << " --center " << c.center;
  if (!c.eps.empty()) os << " --eps " << c.eps;
  if (!c.delta.empty()) os << " --delta " << c.delta;
  if (!c.seq.empty()) os << " --seq " << c.seq;
  if (!c.limit.empty()) os << " --limit " << c.limit;
  if (!c.map.empty()) os << " --map " << c.map;
  if (!c.base.empty()) os << " --base " << c.base;
  if (c.command == "class-tame") os << " --kappa " << c.kappa;
  if (c.strong) os << " --strong";
  if (c.command == "space-cauchy" || c.command == "class-ctp")
    os << " --depth " << c.depth;
  return os.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

const std::string& only_input(const RunConfig& c) {
  if (c.inputs.size() != 1)
    throw std::invalid_argument(c.command + ": expected exactly one input file");
  return c.inputs[0];
}

int resolve_point(const VSpace& s, const std::string& name,
                  const char* what) {
  auto idx = s.index_of(name);
  if (!idx)
    throw std::invalid_argument(std::string(what) + ": unknown point '" +
                                name + "'");
  return *idx;
}

int resolve_base(const ToyClass& k, const std::string& name) {
  if (name.empty())
    throw std::invalid_argument("--base <structure name> is required");
  for (size_t i = 0; i < k.structures().size(); ++i)
    if (k.structure_name(static_cast<int>(i)) == name)
      return static_cast<int>(i);
  throw std::invalid_argument("unknown structure '" + name + "'");
}

void run_space_ball(const RunConfig& c, QuantaleRegistry& reg,
                    Report& report) {
  VSpace s = load_space_file(only_input(c), reg);
  if (c.center.empty() || c.eps.empty())
    throw std::invalid_argument("space-ball: --center and --eps are required");
  int center = resolve_point(s, c.center, "--center");
  Value eps = s.q->parse(c.eps);
  std::vector<int> members = open_ball(s, center, eps);
  CheckResult ball{"open-ball"};
  std::string text;
  for (int y : members) {
    if (!text.empty()) text += " ";
    text += s.points[y];
  }
  ball.note = "members: " + (text.empty() ? "(none)" : text);
  report.checks.push_back(std::move(ball));
}

void run_space_cauchy(const RunConfig& c, QuantaleRegistry& reg,
                      Report& report) {
  VSpace s = load_space_file(only_input(c), reg);
  if (c.seq.empty())
    throw std::invalid_argument("space-cauchy: --seq is required");
  PointSequence seq;
  seq.space = &s;
  for (const std::string& name : split(c.seq, ','))
    seq.prefix.push_back(resolve_point(s, name, "--seq"));
  if (seq.prefix.empty())
    throw std::invalid_argument("space-cauchy: empty sequence");

  std::vector<Value> eps_list;
  if (!c.eps.empty())
    eps_list.push_back(s.q->parse(c.eps));
  else
    eps_list = default_eps_list(*s.q);

  std::vector<ThresholdDiagnostic> diags;
  std::string kind;
  if (!c.limit.empty()) {
    diags = converges_to(seq, resolve_point(s, c.limit, "--limit"), c.depth,
                         eps_list);
    kind = "converges";
  } else {
    diags = is_cauchy_prefix(seq, c.depth, eps_list);
    kind = "cauchy";
  }
  for (const auto& d : diags) {
    CheckResult r{kind + " eps=" + d.eps};
    if (d.stable_from)
      r.note = "stable from index " + std::to_string(*d.stable_from);
    else
      r.fail("not within depth " + std::to_string(c.depth));
    report.checks.push_back(std::move(r));
  }
}

void run_struct_embed(const RunConfig& c, QuantaleRegistry& reg,
                      Report& report) {
  if (c.inputs.size() != 2)
    throw std::invalid_argument(
        "struct-embed: expected source and target structure files");
  VStructure src = load_structure_file(c.inputs[0], reg, false);
  VStructure dst = load_structure_file(c.inputs[1], reg, false);
  EmbeddingMap h{&src, &dst, {}};
  h.point_map.assign(src.space.size(), -1);
  for (const std::string& pair : split(c.map, ',')) {
    auto colon = pair.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("--map entries must be 'from:to'");
    int from = resolve_point(src.space, pair.substr(0, colon), "--map");
    int to = resolve_point(dst.space, pair.substr(colon + 1), "--map");
    h.point_map[from] = to;
  }
  for (int x : h.point_map)
    if (x < 0) throw std::invalid_argument("--map does not cover every point");
  report.checks = check_embedding(h);
}

void run_class_command(const RunConfig& c, QuantaleRegistry& reg,
                       Report& report) {
  ToyClass k = load_class_file(only_input(c), reg);
  const Quantale& q = k.quantale();
  if (c.command == "class-ap") {
    report.checks = check_ap(k);
    return;
  }
  if (c.command == "class-tame") {
    Value eps = q.parse(c.eps.empty() ? q.format(q.top()) : c.eps);
    Value delta = c.strong ? eps
                           : q.parse(c.delta.empty() ? q.format(q.top())
                                                     : c.delta);
    report.checks = check_tameness(k, c.kappa, eps, delta).checks;
    return;
  }
  int base = resolve_base(k, c.base);
  if (c.command == "class-types") {
    TypeSet t = types_over(k, base);
    CheckResult types{"class-types"};
    types.note = "count=" + std::to_string(t.type_count());
    report.checks.push_back(std::move(types));
    for (int p = 0; p < t.type_count(); ++p) {
      CheckResult one{"type-" + std::to_string(p)};
      const PointedExt& rep = t.exts[t.rep[p]];
      const Morphism& f = k.morphisms()[rep.morphism];
      one.note = "representative: " + k.structure_name(f.dst) + " point " +
                 k.structures()[f.dst].space.points[rep.point];
      report.checks.push_back(std::move(one));
    }
  } else if (c.command == "class-dist") {
    TypeSet t = types_over(k, base);
    CheckResult table{"typedist-table"};
    std::string text;
    for (int i = 0; i < t.type_count(); ++i)
      for (int j = 0; j < t.type_count(); ++j) {
        if (!text.empty()) text += "; ";
        text += "d(" + std::to_string(i) + "," + std::to_string(j) + ")=" +
                q.format(type_distance(k, t, i, j));
      }
    table.note = text;
    report.checks.push_back(std::move(table));
    for (CheckResult& r : check_type_pseudometric(k, base))
      report.checks.push_back(std::move(r));
  } else if (c.command == "class-ctp") {
    report.checks = check_separation_and_ctp(k, base, std::min(c.depth, 20));
  } else {
    throw std::invalid_argument("unknown class command " + c.command);
  }
}

}  // namespace

Report run(const RunConfig& c) {
  QuantaleRegistry reg;
  Report report;
  report.command = echo_command(c);
  report.version = kToolkitVersion;
  report.seed = c.seed;

  if (c.command == "laws") {
    const Quantale* q = reg.resolve(c.quantale);
    report.checks = check_quantale_laws(*q, c.budget, c.seed);
  } else if (c.command == "space-check") {
    report.checks = check_axioms(load_space_file(only_input(c), reg));
  } else if (c.command == "space-ball") {
    run_space_ball(c, reg, report);
  } else if (c.command == "space-cauchy") {
    run_space_cauchy(c, reg, report);
  } else if (c.command == "struct-check") {
    VStructure m = load_structure_file(only_input(c), reg, false);
    report.checks = check_axioms(m.space);
    for (CheckResult& r : check_structure(m))
      report.checks.push_back(std::move(r));
  } else if (c.command == "struct-embed") {
    run_struct_embed(c, reg, report);
  } else if (c.command.rfind("class-", 0) == 0) {
    run_class_command(c, reg, report);
  } else if (c.command == "omega-check") {
    report.checks = check_omega_laws(load_omega_file(only_input(c), reg));
  } else {
    throw std::invalid_argument("unknown command '" + c.command + "'");
  }
  return report;
}

int run_to_stream(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    Report report = run(c);
    std::string text =
        c.format == "json" ? report.render_json() : report.render_text();
    if (!c.out.empty()) {
      std::ofstream f(c.out);
      if (!f) {
        err << "error: cannot write " << c.out << "\n";
        return 2;
      }
      f << text;
    } else {
      out << text;
    }
    return report.all_pass() ? 0 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace qmt
