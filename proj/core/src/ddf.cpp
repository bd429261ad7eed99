#include "qmt/ddf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qmt {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> merged_breaks(const Ddf& f, const Ddf& g) {
  std::vector<double> pts;
  pts.reserve(f.breakpoints().size() + g.breakpoints().size() + 1);
  pts.push_back(0.0);
  pts.insert(pts.end(), f.breakpoints().begin(), f.breakpoints().end());
  pts.insert(pts.end(), g.breakpoints().begin(), g.breakpoints().end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}
}  // namespace

Ddf::Ddf(std::vector<double> breakpoints, std::vector<double> values) {
  if (breakpoints.size() != values.size())
    throw std::invalid_argument("ddf: breakpoint/value length mismatch");
  std::vector<size_t> idx(breakpoints.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    return breakpoints[a] < breakpoints[b];
  });
  double last_val = 0.0;
  for (size_t i : idx) {
    double b = breakpoints[i];
    double v = std::clamp(values[i], 0.0, 1.0);
    if (b < 0.0 || !std::isfinite(b))
      throw std::invalid_argument("ddf: breakpoint out of range");
    if (v < last_val)
      throw std::invalid_argument("ddf: values must be nondecreasing");
    if (v <= last_val || v <= 0.0) continue;  // canonical: strictly increasing, positive
    if (!breaks_.empty() && b == breaks_.back()) {
      vals_.back() = v;
      last_val = v;
      continue;
    }
    breaks_.push_back(b);
    vals_.push_back(v);
    last_val = v;
  }
}

Ddf Ddf::zero() { return Ddf(); }

Ddf Ddf::epsilon0() { return Ddf({0.0}, {1.0}); }

Ddf Ddf::step(double at, double height) {
  if (height <= 0.0) return Ddf();
  return Ddf({at}, {height});
}

double Ddf::at(double t) const {
  // last breakpoint strictly below t
  auto it = std::lower_bound(breaks_.begin(), breaks_.end(), t);
  if (it == breaks_.begin()) return 0.0;
  return vals_[static_cast<size_t>(it - breaks_.begin()) - 1];
}

double Ddf::at_right(double t) const {
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), t);
  if (it == breaks_.begin()) return 0.0;
  return vals_[static_cast<size_t>(it - breaks_.begin()) - 1];
}

double Ddf::sup() const { return vals_.empty() ? 0.0 : vals_.back(); }

double Ddf::support_start() const {
  return breaks_.empty() ? kInf : breaks_.front();
}

Ddf Ddf::shift_right(double h) const {
  if (breaks_.empty()) return *this;
  std::vector<double> b(breaks_);
  for (double& x : b) x += h;
  Ddf out;
  out.breaks_ = std::move(b);
  out.vals_ = vals_;
  return out;
}

bool Ddf::operator==(const Ddf& other) const {
  return breaks_ == other.breaks_ && vals_ == other.vals_;
}

std::string Ddf::to_string() const {
  std::ostringstream os;
  os << "ddf(";
  for (size_t i = 0; i < breaks_.size(); ++i) {
    if (i) os << ",";
    os << breaks_[i] << ":" << vals_[i];
  }
  os << ")";
  return os.str();
}

Ddf ddf_pointwise_max(const Ddf& f, const Ddf& g) {
  std::vector<double> pts = merged_breaks(f, g);
  std::vector<double> b, v;
  for (double p : pts) {
    double val = std::max(f.at_right(p), g.at_right(p));
    if (val > (v.empty() ? 0.0 : v.back())) {
      b.push_back(p);
      v.push_back(val);
    }
  }
  return Ddf(std::move(b), std::move(v));
}

Ddf ddf_pointwise_min(const Ddf& f, const Ddf& g) {
  std::vector<double> pts = merged_breaks(f, g);
  std::vector<double> b, v;
  for (double p : pts) {
    double val = std::min(f.at_right(p), g.at_right(p));
    if (val > (v.empty() ? 0.0 : v.back())) {
      b.push_back(p);
      v.push_back(val);
    }
  }
  return Ddf(std::move(b), std::move(v));
}

bool ddf_pointwise_leq(const Ddf& f, const Ddf& g, double tol) {
  for (double p : merged_breaks(f, g))
    if (f.at_right(p) > g.at_right(p) + tol) return false;
  return true;
}

Ddf ddf_boxplus(const Ddf& f, const Ddf& g) {
  if (f.is_zero() || g.is_zero()) return Ddf::zero();
  // The sup is attained on pairs of breakpoints: the result jumps at
  // b_f + b_g to f_val + g_val - 1 (clamped below at 0).
  std::vector<std::pair<double, double>> jumps;
  for (size_t i = 0; i < f.breakpoints().size(); ++i)
    for (size_t j = 0; j < g.breakpoints().size(); ++j) {
      double val = f.values()[i] + g.values()[j] - 1.0;
      if (val > 0.0)
        jumps.emplace_back(f.breakpoints()[i] + g.breakpoints()[j], val);
    }
  std::sort(jumps.begin(), jumps.end());
  std::vector<double> b, v;
  double cur = 0.0;
  for (auto& [pos, val] : jumps) {
    if (val <= cur) continue;
    if (!b.empty() && b.back() == pos) {
      v.back() = val;
    } else {
      b.push_back(pos);
      v.push_back(val);
    }
    cur = val;
  }
  return Ddf(std::move(b), std::move(v));
}

double ddf_levy_gauge(const Ddf& f, const Ddf& g) {
  if (f == g) return 0.0;
  auto within = [&](double h) {
    Ddf fs = f.shift_right(h);
    Ddf gs = g.shift_right(h);
    // F(t) <= G(t+h)+h  <=>  F(t) - h <= G shifted left ... check on the
    // merged grid of the original and shifted functions.
    std::vector<double> pts = merged_breaks(f, g);
    for (double p : merged_breaks(fs, gs)) pts.push_back(p);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (double p : pts) {
      if (f.at_right(p) > g.at_right(p + h) + h + 1e-15) return false;
      if (g.at_right(p) > f.at_right(p + h) + h + 1e-15) return false;
    }
    return true;
  };
  double last_f = f.breakpoints().empty() ? 0.0 : f.breakpoints().back();
  double last_g = g.breakpoints().empty() ? 0.0 : g.breakpoints().back();
  double lo = 0.0, hi = std::max({1.0, last_f, last_g});
  while (!within(hi)) hi *= 2.0;
  for (int i = 0; i < 60; ++i) {
    double mid = 0.5 * (lo + hi);
    if (within(mid))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

}  // namespace qmt
