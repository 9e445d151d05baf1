#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace attrib::num {

// Raised when quadrature fails to converge or a root search finds no bracket.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct IntegrateOptions {
  double abs_tol = 1e-9;
  int max_depth = 40;
};

// Adaptive Simpson on [a, b]. The integrand is evaluated on each interval
// between consecutive breakpoints that fall inside (a, b), so kinks at known
// locations never have to be discovered by the refinement itself.
// Breakpoints must be sorted ascending. Throws NumericError on non-convergence.
double integrate(const std::function<double(double)>& f, double a, double b,
                 std::span<const double> breakpoints = {},
                 const IntegrateOptions& opts = {});

// Leftmost x in [lo, hi] with g(x) >= target, for non-decreasing g.
// Assumes g(hi) >= target; returns hi otherwise.
double bisect_leftmost(const std::function<double(double)>& g, double lo,
                       double hi, double target, double x_tol);

// Sign-change bisection: g(lo) and g(hi) must have opposite signs.
double bisect_root(const std::function<double(double)>& g, double lo,
                   double hi, double x_tol);

// Golden-section maximizer on [lo, hi] for a unimodal-ish objective.
double golden_max(const std::function<double(double)>& f, double lo, double hi,
                  double x_tol);

// Streaming mean/variance (Welford); merges are order-independent.
class RunningStat {
 public:
  void add(double x);
  void merge(const RunningStat& other);
  long long count() const { return n_; }
  double mean() const { return n_ > 0 ? mean_ : 0.0; }
  double variance() const;  // sample variance (n-1)
  double stderr_mean() const;

 private:
  long long n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

// splitmix64; used to derive independent per-worker seeds from a base seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

// Canonical uniform in [0, 1) from 53 random bits, engine-independent.
template <class Engine>
double uniform01(Engine& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Runs fn(0..k-1) on a small worker pool and collects results in index order.
std::vector<double> parallel_map(int k, const std::function<double(int)>& fn);
void parallel_for(int k, const std::function<void(int)>& fn);

}  // namespace attrib::num
