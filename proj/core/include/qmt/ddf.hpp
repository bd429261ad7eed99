#pragma once

#include <string>
#include <vector>

namespace qmt {

/// A distance distribution function: a monotone, left-continuous step
/// function [0,inf) -> [0,1], held in canonical form (strictly increasing
/// breakpoints, strictly increasing positive values).
///
/// F(t) is the value attached to the last breakpoint strictly below t, and
/// 0 below the first breakpoint, so each value is attained on a half-open
/// interval (b_i, b_{i+1}].
class Ddf {
 public:
  Ddf() = default;  // the constant-0 function
  Ddf(std::vector<double> breakpoints, std::vector<double> values);

  static Ddf zero();                          // constant 0 everywhere
  static Ddf epsilon0();                      // unit jump at 0
  static Ddf step(double at, double height);  // single jump

  double at(double t) const;        // F(t), left-continuous
  double at_right(double t) const;  // lim_{s -> t+} F(s)
  double sup() const;               // max value, 0 for the zero function

  /// inf { t : F(t) > 0 }; +inf for the zero function.
  double support_start() const;

  bool is_zero() const { return breaks_.empty(); }

  const std::vector<double>& breakpoints() const { return breaks_; }
  const std::vector<double>& values() const { return vals_; }

  /// Shift the graph right by h >= 0: result(t) = F(t - h).
  Ddf shift_right(double h) const;

  bool operator==(const Ddf& other) const;

  std::string to_string() const;

 private:
  std::vector<double> breaks_;
  std::vector<double> vals_;
};

/// Pointwise max / min; both stay left-continuous step functions.
Ddf ddf_pointwise_max(const Ddf& f, const Ddf& g);
Ddf ddf_pointwise_min(const Ddf& f, const Ddf& g);

/// f(t) <= g(t) + tol for all t.
bool ddf_pointwise_leq(const Ddf& f, const Ddf& g, double tol);

/// Sup-convolution (F [+] G)(x) = sup_{u+v<=x} max(F(u)+G(v)-1, 0),
/// computed exactly on the breakpoint-pair grid.
Ddf ddf_boxplus(const Ddf& f, const Ddf& g);

/// Levy-style closeness gauge: least h with
///   F(t) <= G(t+h)+h and G(t) <= F(t+h)+h for all t.
double ddf_levy_gauge(const Ddf& f, const Ddf& g);

}  // namespace qmt
