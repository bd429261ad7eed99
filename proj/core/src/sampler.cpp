#include "qmt/sampler.hpp"

#include <cmath>
#include <limits>

namespace qmt {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

Sampler::Sampler(const Quantale& q, std::uint64_t seed) : q_(q), rng_(seed) {}

Value Sampler::next() {
  std::size_t i = count_++;
  if (i == 0) return q_.zero();
  if (i == 1) return q_.top();
  if (i >= 2 && i <= 5) return q_.safa(static_cast<int>(i - 2));
  return random_value();
}

Ddf Sampler::random_rational_ddf(std::mt19937_64& rng, int max_breaks) {
  std::uniform_int_distribution<int> nbreaks(0, max_breaks);
  std::uniform_int_distribution<int> bgrid(0, 24);   // breaks in [0, 3]
  std::uniform_int_distribution<int> vgrid(1, 16);   // values in (0, 1]
  int n = nbreaks(rng);
  std::vector<double> breaks, vals;
  for (int k = 0; k < n; ++k) {
    breaks.push_back(bgrid(rng) / 8.0);
    vals.push_back(vgrid(rng) / 16.0);
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  vals.resize(breaks.size());
  std::sort(vals.begin(), vals.end());
  return Ddf(std::move(breaks), std::move(vals));
}

Value Sampler::random_value() {
  auto num = [&](double x) {
    Value v;
    v.tag = q_.kind();
    v.num = x;
    return v;
  };
  switch (q_.kind()) {
    case Instance::Truth: {
      std::uniform_int_distribution<int> coin(0, 1);
      return coin(rng_) ? q_.top() : q_.zero();
    }
    case Instance::ExtReal: {
      std::uniform_int_distribution<int> pick(0, 9);
      int c = pick(rng_);
      if (c == 0) return num(kInf);
      std::uniform_real_distribution<double> u(0.0, 1.0);
      if (c <= 4) return num(u(rng_));          // the unit interval
      if (c <= 7) return num(10.0 * u(rng_));   // moderate values
      return num(u(rng_) / 1000.0);             // near the bottom
    }
    case Instance::Unit:
    case Instance::Errors: {
      std::uniform_real_distribution<double> u(0.0, 1.0);
      return num(u(rng_));
    }
    case Instance::Ddf: {
      Value v;
      v.tag = Instance::Ddf;
      v.fn = random_rational_ddf(rng_);
      return v;
    }
    case Instance::Lattice: {
      const auto& lq = static_cast<const LatticeQuantale&>(q_);
      std::uniform_int_distribution<int> pick(0, lq.lattice().size() - 1);
      return lq.element(pick(rng_));
    }
  }
  return q_.zero();
}

}  // namespace qmt
