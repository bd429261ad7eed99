#include "qmt/quantale.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>
#include <sstream>

namespace qmt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt_double(double x) {
  if (x == kInf) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

double parse_double(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
  if (s == "inf" || s == "infinity") return kInf;
  size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw QuantaleError("bad numeric literal: " + text);
  }
  if (pos != s.size()) throw QuantaleError("bad numeric literal: " + text);
  return v;
}

}  // namespace

std::string instance_name(Instance k) {
  switch (k) {
    case Instance::Truth: return "truth";
    case Instance::ExtReal: return "extreal";
    case Instance::Unit: return "unit";
    case Instance::Errors: return "errors";
    case Instance::Ddf: return "ddf";
    case Instance::Lattice: return "lattice";
  }
  return "?";
}

void Quantale::require(const Value& v) const {
  if (v.tag != kind() || !carries(v))
    throw QuantaleError("value does not belong to quantale " + name());
}

Value Quantale::make_num(double x) const {
  Value v;
  v.tag = kind();
  v.num = x;
  return v;
}

bool Quantale::equal(const Value& a, const Value& b) const {
  return leq(a, b) && leq(b, a);
}

Value Quantale::meet(std::span<const Value> values) const {
  Value acc = top();
  for (const Value& v : values) acc = meet2(acc, v);
  return acc;
}

Value Quantale::join(std::span<const Value> values) const {
  Value acc = zero();
  for (const Value& v : values) acc = join2(acc, v);
  return acc;
}

Value Quantale::self_dist(const Value& a, const Value& b) const {
  return add(truncated_sub(b, a), truncated_sub(a, b));
}

std::optional<CodirectedFamily> way_above_refute(
    const Quantale& q, const Value& a, const Value& b,
    std::span<const CodirectedFamily> families) {
  for (const CodirectedFamily& fam : families) {
    if (fam.elements.empty())
      throw QuantaleError("refute family '" + fam.name + "' is empty");
    for (const Value& e : fam.elements)
      if (!q.leq(fam.meet, e))
        throw QuantaleError("refute family '" + fam.name +
                            "': meet is not a lower bound");
    if (!q.leq(fam.meet, b))
      throw QuantaleError("refute family '" + fam.name +
                          "': meet not below the target");
    for (size_t i = 0; i < fam.elements.size(); ++i)
      for (size_t j = i + 1; j < fam.elements.size(); ++j) {
        bool found = false;
        for (const Value& c : fam.elements)
          if (q.leq(c, fam.elements[i]) && q.leq(c, fam.elements[j])) {
            found = true;
            break;
          }
        if (!found)
          throw QuantaleError("refute family '" + fam.name +
                              "' is not codirected");
      }
    bool hit = false;
    for (const Value& e : fam.elements)
      if (q.leq(e, a)) {
        hit = true;
        break;
      }
    if (!hit) return fam;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Truth values {0, inf}, addition = join.

class TruthQuantale final : public Quantale {
 public:
  Instance kind() const override { return Instance::Truth; }
  std::string name() const override { return "truth"; }
  Value zero() const override { return make_num(0.0); }
  Value top() const override { return make_num(kInf); }
  bool carries(const Value& v) const override {
    return v.num == 0.0 || v.num == kInf;
  }
  bool leq(const Value& a, const Value& b) const override {
    require(a); require(b);
    return a.num <= b.num;
  }
  Value meet2(const Value& a, const Value& b) const override {
    require(a); require(b);
    return make_num(std::min(a.num, b.num));
  }
  Value join2(const Value& a, const Value& b) const override {
    require(a); require(b);
    return make_num(std::max(a.num, b.num));
  }
  Value add(const Value& a, const Value& b) const override {
    return join2(a, b);
  }
  bool way_above(const Value& a, const Value& b) const override {
    return leq(b, a);  // finite lattice: way above collapses to >=
  }
  Value truncated_sub(const Value& q, const Value& p) const override {
    require(q); require(p);
    return make_num(p.num >= q.num ? 0.0 : q.num);
  }
  Value halve(const Value& eps) const override {
    if (!way_above(eps, zero())) throw QuantaleError("halve: eps not >> 0");
    return eps;  // addition is join, so 2*eps = eps
  }
  Value safa(int) const override { return zero(); }
  Value interpolant(const Value& a, const Value& b) const override {
    require(a);
    return b;
  }
  double gauge(const Value& a, const Value& b) const override {
    return a.num == b.num ? 0.0 : 1.0;
  }
  std::string format(const Value& v) const override { return fmt_double(v.num); }
  Value parse(const std::string& text) const override {
    Value v = make_num(parse_double(text));
    require(v);
    return v;
  }
  std::vector<CodirectedFamily> standard_families(const Value& b,
                                                  int) const override {
    require(b);
    CodirectedFamily up{"upperset", {}, b};
    for (double x : {0.0, kInf})
      if (b.num <= x) up.elements.push_back(make_num(x));
    return {up};
  }
};

// ---------------------------------------------------------------------------
// Extended nonnegative reals [0, inf] with usual order and addition.

class ExtRealQuantale final : public Quantale {
 public:
  Instance kind() const override { return Instance::ExtReal; }
  std::string name() const override { return "extreal"; }
  Value zero() const override { return make_num(0.0); }
  Value top() const override { return make_num(kInf); }
  bool carries(const Value& v) const override {
    return v.num >= 0.0 && !std::isnan(v.num);
  }
  bool leq(const Value& a, const Value& b) const override {
    require(a); require(b);
    if (a.num == kInf) return b.num == kInf;
    return a.num <= b.num + kTol;
  }
  Value meet2(const Value& a, const Value& b) const override {
    require(a); require(b);
    return make_num(std::min(a.num, b.num));
  }
  Value join2(const Value& a, const Value& b) const override {
    require(a); require(b);
    return make_num(std::max(a.num, b.num));
  }
  Value add(const Value& a, const Value& b) const override {
    require(a); require(b);
    return make_num(a.num + b.num);
  }
  bool way_above(const Value& a, const Value& b) const override {
    require(a); require(b);
    return a.num == kInf || a.num > b.num + kTol;
  }
  Value truncated_sub(const Value& q, const Value& p) const override {
    require(q); require(p);
    if (q.num == kInf) return make_num(p.num == kInf ? 0.0 : kInf);
    if (p.num == kInf) return make_num(0.0);
    return make_num(std::max(q.num - p.num, 0.0));
  }
  Value halve(const Value& eps) const override {
    if (!way_above(eps, zero())) throw QuantaleError("halve: eps not >> 0");
    return make_num(eps.num == kInf ? 1.0 : eps.num / 4.0);
  }
  Value safa(int n) const override { return make_num(std::ldexp(1.0, -n)); }
  Value interpolant(const Value& a, const Value& b) const override {
    require(a); require(b);
    if (a.num == kInf) return make_num(b.num == kInf ? kInf : b.num + 1.0);
    return make_num(0.5 * (a.num + b.num));
  }
  double gauge(const Value& a, const Value& b) const override {
    if (a.num == kInf || b.num == kInf) return a.num == b.num ? 0.0 : kInf;
    return std::abs(a.num - b.num);
  }
  std::string format(const Value& v) const override { return fmt_double(v.num); }
  Value parse(const std::string& text) const override {
    Value v = make_num(parse_double(text));
    require(v);
    return v;
  }
  std::vector<CodirectedFamily> standard_families(const Value& b,
                                                  int depth) const override {
    require(b);
    std::vector<CodirectedFamily> out;
    out.push_back({"principal", {b}, b});
    if (b.num != kInf) {
      CodirectedFamily chain{"descending-chain", {}, b};
      for (int k = 1; k <= depth; ++k)
        chain.elements.push_back(make_num(b.num + 1.0 / k));
      out.push_back(std::move(chain));
    }
    return out;
  }
};

// ---------------------------------------------------------------------------
// Unit interval [0,1] with truncated addition.

class UnitQuantale final : public Quantale {
 public:
  Instance kind() const override { return Instance::Unit; }
  std::string name() const override { return "unit"; }
  Value zero() const override { return make_num(0.0); }
  Value top() const override { return make_num(1.0); }
  bool carries(const Value& v) const override {
    return v.num >= 0.0 && v.num <= 1.0;
  }
  bool leq(const Value& a, const Value& b) const override {
    require(a); require(b);
    return a.num <= b.num + kTol;
  }
  Value meet2(const Value& a, const Value& b) const override {
    require(a); require(b);
    return make_num(std::min(a.num, b.num));
  }
  Value join2(const Value& a, const Value& b) const override {
    require(a); require(b);
    return make_num(std::max(a.num, b.num));
  }
  Value add(const Value& a, const Value& b) const override {
    require(a); require(b);
    return make_num(std::min(a.num + b.num, 1.0));
  }
  bool way_above(const Value& a, const Value& b) const override {
    require(a); require(b);
    return a.num >= 1.0 - kTol || a.num > b.num + kTol;
  }
  Value truncated_sub(const Value& q, const Value& p) const override {
    require(q); require(p);
    return make_num(std::max(q.num - p.num, 0.0));
  }
  Value halve(const Value& eps) const override {
    if (!way_above(eps, zero())) throw QuantaleError("halve: eps not >> 0");
    return make_num(eps.num / 4.0);
  }
  Value safa(int n) const override { return make_num(std::ldexp(1.0, -n)); }
  Value interpolant(const Value& a, const Value& b) const override {
    require(a); require(b);
    return make_num(0.5 * (std::min(a.num, 1.0) + b.num));
  }
  double gauge(const Value& a, const Value& b) const override {
    return std::abs(a.num - b.num);
  }
  std::string format(const Value& v) const override { return fmt_double(v.num); }
  Value parse(const std::string& text) const override {
    Value v = make_num(parse_double(text));
    require(v);
    return v;
  }
  std::vector<CodirectedFamily> standard_families(const Value& b,
                                                  int depth) const override {
    require(b);
    std::vector<CodirectedFamily> out;
    out.push_back({"principal", {b}, b});
    CodirectedFamily chain{"descending-chain", {}, b};
    for (int k = 1; k <= depth; ++k)
      chain.elements.push_back(make_num(std::min(b.num + 1.0 / k, 1.0)));
    out.push_back(std::move(chain));
    return out;
  }
};

// ---------------------------------------------------------------------------
// Errors: the unit interval with the opposite order, x (+) y = max(x+y-1, 0).
// The payload is the numeric coordinate; 1 is the quantale's bottom and 0 its
// top.

class ErrorsQuantale final : public Quantale {
 public:
  Instance kind() const override { return Instance::Errors; }
  std::string name() const override { return "errors"; }
  Value zero() const override { return make_num(1.0); }
  Value top() const override { return make_num(0.0); }
  bool carries(const Value& v) const override {
    return v.num >= 0.0 && v.num <= 1.0;
  }
  bool leq(const Value& a, const Value& b) const override {
    require(a); require(b);
    return a.num >= b.num - kTol;
  }
  Value meet2(const Value& a, const Value& b) const override {
    require(a); require(b);
    return make_num(std::max(a.num, b.num));
  }
  Value join2(const Value& a, const Value& b) const override {
    require(a); require(b);
    return make_num(std::min(a.num, b.num));
  }
  Value add(const Value& a, const Value& b) const override {
    require(a); require(b);
    return make_num(std::max(a.num + b.num - 1.0, 0.0));
  }
  bool way_above(const Value& a, const Value& b) const override {
    require(a); require(b);
    return a.num <= kTol || a.num < b.num - kTol;
  }
  Value truncated_sub(const Value& q, const Value& p) const override {
    require(q); require(p);
    return make_num(std::min(q.num - p.num + 1.0, 1.0));
  }
  Value halve(const Value& eps) const override {
    if (!way_above(eps, zero())) throw QuantaleError("halve: eps not >> 0");
    return make_num((eps.num + 3.0) / 4.0);
  }
  Value safa(int n) const override {
    return make_num(1.0 - std::ldexp(1.0, -(n + 1)));
  }
  Value interpolant(const Value& a, const Value& b) const override {
    require(a); require(b);
    if (a.num <= kTol) return top();
    return make_num(0.5 * (a.num + b.num));
  }
  double gauge(const Value& a, const Value& b) const override {
    return std::abs(a.num - b.num);
  }
  std::string format(const Value& v) const override { return fmt_double(v.num); }
  Value parse(const std::string& text) const override {
    Value v = make_num(parse_double(text));
    require(v);
    return v;
  }
  std::vector<CodirectedFamily> standard_families(const Value& b,
                                                  int depth) const override {
    require(b);
    std::vector<CodirectedFamily> out;
    out.push_back({"principal", {b}, b});
    CodirectedFamily chain{"descending-chain", {}, b};
    for (int k = 1; k <= depth; ++k)
      chain.elements.push_back(make_num(std::max(b.num - 1.0 / k, 0.0)));
    out.push_back(std::move(chain));
    return out;
  }
};

// ---------------------------------------------------------------------------
// Distance distribution functions, ordered opposite-pointwise, with
// sup-convolution as addition.

class DdfQuantale final : public Quantale {
 public:
  Instance kind() const override { return Instance::Ddf; }
  std::string name() const override { return "ddf"; }
  Value zero() const override { return make_fn(Ddf::epsilon0()); }
  Value top() const override { return make_fn(Ddf::zero()); }
  bool carries(const Value&) const override { return true; }
  bool leq(const Value& a, const Value& b) const override {
    require(a); require(b);
    return ddf_pointwise_leq(b.fn, a.fn, kTol);
  }
  Value meet2(const Value& a, const Value& b) const override {
    require(a); require(b);
    return make_fn(ddf_pointwise_max(a.fn, b.fn));
  }
  Value join2(const Value& a, const Value& b) const override {
    require(a); require(b);
    return make_fn(ddf_pointwise_min(a.fn, b.fn));
  }
  Value add(const Value& a, const Value& b) const override {
    require(a); require(b);
    return make_fn(ddf_boxplus(a.fn, b.fn));
  }
  bool way_above(const Value& a, const Value& b) const override {
    require(a); require(b);
    return witness(a.fn, b.fn).has_value();
  }
  Value truncated_sub(const Value& qv, const Value& pv) const override {
    require(qv); require(pv);
    const Ddf& Q = qv.fn;
    const Ddf& P = pv.fn;
    // Residual of boxplus: the pointwise-largest R with P [+] R <= Q,
    // built on the breakpoint-difference candidate grid.
    std::set<double> cand;
    cand.insert(0.0);
    std::vector<double> pb = P.breakpoints();
    pb.push_back(0.0);
    for (double qb : Q.breakpoints())
      for (double p : pb)
        if (qb - p >= 0.0) cand.insert(qb - p);
    std::vector<double> c(cand.begin(), cand.end());
    auto rho = [&](double v) {
      std::set<double> us;
      us.insert(0.0);
      for (double p : P.breakpoints()) us.insert(p);
      for (double qb : Q.breakpoints())
        if (qb - v >= 0.0) us.insert(qb - v);
      double last = *us.rbegin();
      us.insert(last + 1.0);
      double inf = kInf;
      for (double u : us)
        inf = std::min(inf, Q.at_right(u + v) - P.at_right(u));
      return std::clamp(1.0 + inf, 0.0, 1.0);
    };
    std::vector<double> breaks, vals;
    for (size_t k = 0; k < c.size(); ++k) {
      double probe = (k + 1 < c.size()) ? 0.5 * (c[k] + c[k + 1]) : c[k] + 1.0;
      breaks.push_back(c[k]);
      vals.push_back(rho(probe));
    }
    return make_fn(Ddf(std::move(breaks), std::move(vals)));
  }
  Value halve(const Value& eps) const override {
    if (!way_above(eps, zero())) throw QuantaleError("halve: eps not >> 0");
    const Ddf& e = eps.fn;
    if (e.is_zero()) return make_fn(safa_term(0));
    double s = e.support_start();
    double m = 1.0 - e.sup();
    // Compress the time axis (pre-shifted left by s/2) and push the values
    // toward 1 by m/4; then D boxplus D dominates a right-shift of eps with
    // margin m/2.
    std::vector<double> breaks{s / 8.0};
    std::vector<double> vals{0.5 + m / 4.0};
    for (size_t i = 0; i < e.breakpoints().size(); ++i) {
      double t = (e.breakpoints()[i] - s / 2.0) / 2.0;
      double v = std::min(1.0 - m / 4.0,
                          (1.0 + e.values()[i]) / 2.0 + m / 4.0);
      breaks.push_back(t);
      vals.push_back(v);
    }
    return make_fn(Ddf(std::move(breaks), std::move(vals)));
  }
  Value safa(int n) const override { return make_fn(safa_term(n)); }
  Value interpolant(const Value& a, const Value& b) const override {
    require(a); require(b);
    auto w = witness(a.fn, b.fn);
    if (!w) return meet2(a, b);
    auto [delta, margin] = *w;
    if (margin == kInf) return a;
    // Midpoint between b and a half-shifted copy of a: the a term keeps the
    // vanishing region from outgrowing a's, the b term keeps the margin.
    // Midpoint of a pulled left by delta/2 and b pushed right by delta/4,
    // with the b term anchored at 0 so it never dips below b's start value.
    std::set<double> cand{0.0};
    for (double t : a.fn.breakpoints())
      cand.insert(std::max(t - delta / 2.0, 0.0));
    for (double t : b.fn.breakpoints()) cand.insert(t + delta / 4.0);
    std::vector<double> breaks, vals;
    for (double t : cand) {
      breaks.push_back(t);
      vals.push_back(0.5 * (a.fn.at_right(t + delta / 2.0) +
                            b.fn.at_right(std::max(t - delta / 4.0, 0.0))));
    }
    return make_fn(Ddf(std::move(breaks), std::move(vals)));
  }
  double gauge(const Value& a, const Value& b) const override {
    return ddf_levy_gauge(a.fn, b.fn);
  }
  std::string format(const Value& v) const override { return v.fn.to_string(); }
  Value parse(const std::string& text) const override {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
    if (s == "eps0") return zero();
    if (s.rfind("ddf(", 0) != 0 || s.back() != ')')
      throw QuantaleError("bad ddf literal: " + text);
    std::string body = s.substr(4, s.size() - 5);
    std::vector<double> breaks, vals;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto colon = item.find(':');
      if (colon == std::string::npos)
        throw QuantaleError("bad ddf literal: " + text);
      breaks.push_back(parse_double(item.substr(0, colon)));
      vals.push_back(parse_double(item.substr(colon + 1)));
    }
    return make_fn(Ddf(std::move(breaks), std::move(vals)));
  }
  std::vector<CodirectedFamily> standard_families(const Value& b,
                                                  int depth) const override {
    require(b);
    std::vector<CodirectedFamily> out;
    out.push_back({"principal", {b}, b});
    CodirectedFamily shifted{"shift-lowered", {}, b};
    for (int k = 1; k <= depth; ++k) {
      double h = 1.0 / k;
      std::vector<double> breaks, vals;
      for (size_t i = 0; i < b.fn.breakpoints().size(); ++i) {
        breaks.push_back(b.fn.breakpoints()[i] + h);
        vals.push_back(std::max(b.fn.values()[i] - h, 0.0));
      }
      shifted.elements.push_back(make_fn(Ddf(std::move(breaks), std::move(vals))));
    }
    out.push_back(std::move(shifted));
    CodirectedFamily support{"support-steps", {}, zero()};
    for (int k = 1; k <= depth; ++k)
      support.elements.push_back(make_fn(Ddf::step(1.0 / k, 1.0)));
    out.push_back(std::move(support));
    return out;
  }

 private:
  static Ddf safa_term(int n) {
    double h = std::ldexp(1.0, -n);
    return Ddf::step(h, 1.0 - h);
  }
  Value make_fn(Ddf f) const {
    Value v;
    v.tag = Instance::Ddf;
    v.fn = std::move(f);
    return v;
  }
  /// Shift-and-margin criterion for F way above G (quantale order):
  /// exists delta > 0, margin > 0 with, for all t,
  ///   F(t+delta) <= max(G(t) - margin, 0)  and F vanishing where G does.
  /// Returns (delta, margin); margin is +inf when no constraint binds.
  static std::optional<std::pair<double, double>> witness(const Ddf& F,
                                                          const Ddf& G) {
    constexpr double kExact = 1e-12;
    std::vector<double> pts;
    pts.push_back(0.0);
    for (double x : F.breakpoints()) pts.push_back(x);
    for (double x : G.breakpoints()) pts.push_back(x);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    double gap = kInf;
    for (size_t i = 1; i < pts.size(); ++i)
      gap = std::min(gap, pts[i] - pts[i - 1]);
    if (pts.size() >= 2 && pts[0] == 0.0) gap = std::min(gap, pts[1]);
    double delta = (gap == kInf) ? 0.5 : gap / 2.0;
    // Evaluation points: breaks of G and of F shifted left by delta.
    std::set<double> probes;
    probes.insert(0.0);
    for (double x : G.breakpoints()) probes.insert(x);
    for (double x : F.breakpoints())
      if (x - delta >= 0.0) probes.insert(x - delta);
    double margin = kInf;
    for (double t : probes) {
      double fv = F.at_right(t + delta);
      double gv = G.at_right(t);
      if (gv <= kExact) {
        if (fv > kExact) return std::nullopt;
      } else {
        margin = std::min(margin, gv - fv);
      }
    }
    if (margin <= kExact) return std::nullopt;
    return std::make_pair(delta, margin);
  }
};

// ---------------------------------------------------------------------------
// Table-backed finite lattices.

LatticeQuantale::LatticeQuantale(FiniteLattice lattice, std::string name)
    : lat_(std::make_unique<FiniteLattice>(std::move(lattice))),
      name_(std::move(name)) {}

Value LatticeQuantale::element(int id) const {
  if (id < 0 || id >= lat_->size())
    throw QuantaleError("lattice element id out of range");
  Value v;
  v.tag = Instance::Lattice;
  v.elem = id;
  v.lat = lat_.get();
  return v;
}

bool LatticeQuantale::carries(const Value& v) const {
  return v.lat == lat_.get() && v.elem >= 0 && v.elem < lat_->size();
}

Value LatticeQuantale::zero() const { return element(lat_->zero()); }
Value LatticeQuantale::top() const { return element(lat_->top()); }

bool LatticeQuantale::leq(const Value& a, const Value& b) const {
  require(a); require(b);
  return lat_->leq(a.elem, b.elem);
}

Value LatticeQuantale::meet2(const Value& a, const Value& b) const {
  require(a); require(b);
  auto m = lat_->meet(a.elem, b.elem);
  if (!m) throw QuantaleError("lattice has no meet for given pair");
  return element(*m);
}

Value LatticeQuantale::join2(const Value& a, const Value& b) const {
  require(a); require(b);
  auto j = lat_->join(a.elem, b.elem);
  if (!j) throw QuantaleError("lattice has no join for given pair");
  return element(*j);
}

Value LatticeQuantale::add(const Value& a, const Value& b) const {
  require(a); require(b);
  return element(lat_->add(a.elem, b.elem));
}

bool LatticeQuantale::way_above(const Value& a, const Value& b) const {
  return leq(b, a);  // meets are attained in finite codirected sets
}

Value LatticeQuantale::truncated_sub(const Value& q, const Value& p) const {
  require(q); require(p);
  Value acc = top();
  for (int r = 0; r < lat_->size(); ++r)
    if (lat_->leq(q.elem, lat_->add(p.elem, r))) acc = meet2(acc, element(r));
  return acc;
}

Value LatticeQuantale::halve(const Value& eps) const {
  if (!way_above(eps, zero())) throw QuantaleError("halve: eps not >> 0");
  if (lat_->leq(lat_->add(eps.elem, eps.elem), eps.elem)) return eps;
  return zero();
}

Value LatticeQuantale::safa(int) const { return zero(); }

Value LatticeQuantale::interpolant(const Value& a, const Value& b) const {
  require(a);
  return b;
}

double LatticeQuantale::gauge(const Value& a, const Value& b) const {
  require(a); require(b);
  return a.elem == b.elem ? 0.0 : 1.0;
}

std::string LatticeQuantale::format(const Value& v) const {
  require(v);
  return lat_->name(v.elem);
}

Value LatticeQuantale::parse(const std::string& text) const {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
  auto id = lat_->id_of(s);
  if (!id) throw QuantaleError("unknown lattice element: " + text);
  return element(*id);
}

std::vector<CodirectedFamily> LatticeQuantale::standard_families(
    const Value& b, int) const {
  require(b);
  CodirectedFamily up{"upperset", {}, b};
  for (int x = 0; x < lat_->size(); ++x)
    if (lat_->leq(b.elem, x)) up.elements.push_back(element(x));
  return {up};
}

// ---------------------------------------------------------------------------

const Quantale& truth_quantale() {
  static const TruthQuantale q;
  return q;
}
const Quantale& extreal_quantale() {
  static const ExtRealQuantale q;
  return q;
}
const Quantale& unit_quantale() {
  static const UnitQuantale q;
  return q;
}
const Quantale& errors_quantale() {
  static const ErrorsQuantale q;
  return q;
}
const Quantale& ddf_quantale() {
  static const DdfQuantale q;
  return q;
}

const Quantale* builtin_quantale(const std::string& name) {
  if (name == "truth") return &truth_quantale();
  if (name == "extreal") return &extreal_quantale();
  if (name == "unit") return &unit_quantale();
  if (name == "errors") return &errors_quantale();
  if (name == "ddf") return &ddf_quantale();
  return nullptr;
}

}  // namespace qmt
