#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qmt/ddf.hpp"
#include "qmt/finite_lattice.hpp"

namespace qmt {

/// Comparison tolerance for the real-valued instances.
inline constexpr double kTol = 1e-9;

enum class Instance { Truth, ExtReal, Unit, Errors, Ddf, Lattice };

std::string instance_name(Instance);

/// One element of a quantale's carrier. The payload interpretation depends
/// on the instance tag:
///   Truth    - num in {0, inf}
///   ExtReal  - num in [0, inf]
///   Unit     - num in [0, 1]
///   Errors   - num in [0, 1], the quantale order is the reverse of <=
///   Ddf      - fn, ordered opposite-pointwise
///   Lattice  - elem, an id into the backing FiniteLattice
struct Value {
  Instance tag = Instance::ExtReal;
  double num = 0.0;
  Ddf fn;
  int elem = -1;
  const FiniteLattice* lat = nullptr;
};

struct QuantaleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A codirected sample family with a known meet, the raw material for the
/// way-above refutation oracle.
struct CodirectedFamily {
  std::string name;
  std::vector<Value> elements;
  Value meet;
};

/// A value domain for generalized distances: a complete lattice with bottom
/// 0 and top, a monoid addition distributing over meets, plus the derived
/// machinery (way-above, truncated subtraction, halving, SAFA witnesses).
///
/// All operations are pure; instances are immutable and safe for concurrent
/// use.
class Quantale {
 public:
  virtual ~Quantale() = default;

  virtual Instance kind() const = 0;
  virtual std::string name() const = 0;

  virtual Value zero() const = 0;
  virtual Value top() const = 0;

  virtual bool leq(const Value& a, const Value& b) const = 0;
  bool equal(const Value& a, const Value& b) const;

  virtual Value meet2(const Value& a, const Value& b) const = 0;
  virtual Value join2(const Value& a, const Value& b) const = 0;
  Value meet(std::span<const Value> values) const;  // empty -> top
  Value join(std::span<const Value> values) const;  // empty -> zero

  virtual Value add(const Value& a, const Value& b) const = 0;

  /// a is way above b: every codirected family with meet <= b contains an
  /// element <= a. Decided analytically per instance; exact everywhere
  /// except Ddf, where a sound shift-and-margin criterion is used.
  virtual bool way_above(const Value& a, const Value& b) const = 0;

  /// q with p removed: the least r with p + r >= q.
  virtual Value truncated_sub(const Value& q, const Value& p) const = 0;

  /// Some delta with delta >> 0 and eps >> delta + delta.
  /// Requires way_above(eps, zero()).
  virtual Value halve(const Value& eps) const = 0;

  /// The n-th term of a fixed witness sequence u_n with meet 0, each term
  /// way above 0, antitone.
  virtual Value safa(int n) const = 0;

  /// Some z with way_above(a, z) and way_above(z, b); valid whenever
  /// way_above(a, b) holds.
  virtual Value interpolant(const Value& a, const Value& b) const = 0;

  /// Numeric closeness gauge used by diagnostics and tolerance checks;
  /// 0 iff equal (up to representation).
  virtual double gauge(const Value& a, const Value& b) const = 0;

  /// d(x,y) = (y - x) + (x - y) with truncated subtraction: the quantale's
  /// metric on itself.
  Value self_dist(const Value& a, const Value& b) const;

  virtual std::string format(const Value& v) const = 0;
  virtual Value parse(const std::string& text) const = 0;

  /// Payload sanity: the value lies in this instance's carrier.
  virtual bool carries(const Value& v) const = 0;

  /// Standard codirected families with meet <= b, used to hunt for
  /// way-above counterexamples.
  virtual std::vector<CodirectedFamily> standard_families(const Value& b,
                                                          int depth) const = 0;

  /// Throws QuantaleError unless v belongs to this instance.
  void require(const Value& v) const;

 protected:
  Value make_num(double x) const;
};

/// Searches the families for one with no element <= a (a witness that a is
/// not way above b). Validates each family: codirected, meet a lower bound,
/// meet <= b. Absence of a counterexample proves nothing.
std::optional<CodirectedFamily> way_above_refute(
    const Quantale& q, const Value& a, const Value& b,
    std::span<const CodirectedFamily> families);

const Quantale& truth_quantale();
const Quantale& extreal_quantale();
const Quantale& unit_quantale();
const Quantale& errors_quantale();
const Quantale& ddf_quantale();

/// Wraps a table-backed finite lattice as a quantale. The lattice is copied
/// in and owned; Values carry a pointer to the owned copy.
class LatticeQuantale final : public Quantale {
 public:
  explicit LatticeQuantale(FiniteLattice lattice, std::string name = "lattice");

  Instance kind() const override { return Instance::Lattice; }
  std::string name() const override { return name_; }
  const FiniteLattice& lattice() const { return *lat_; }
  Value element(int id) const;

  Value zero() const override;
  Value top() const override;
  bool leq(const Value&, const Value&) const override;
  Value meet2(const Value&, const Value&) const override;
  Value join2(const Value&, const Value&) const override;
  Value add(const Value&, const Value&) const override;
  bool way_above(const Value&, const Value&) const override;
  Value truncated_sub(const Value&, const Value&) const override;
  Value halve(const Value&) const override;
  Value safa(int n) const override;
  Value interpolant(const Value&, const Value&) const override;
  double gauge(const Value&, const Value&) const override;
  std::string format(const Value&) const override;
  Value parse(const std::string&) const override;
  bool carries(const Value&) const override;
  std::vector<CodirectedFamily> standard_families(const Value&,
                                                  int) const override;

 private:
  std::unique_ptr<FiniteLattice> lat_;
  std::string name_;
};

/// Built-in instance by name: truth | extreal | unit | errors | ddf.
/// Returns nullptr for unknown names (lattice:<path> is resolved by the
/// file loader, see io.hpp).
const Quantale* builtin_quantale(const std::string& name);

}  // namespace qmt
