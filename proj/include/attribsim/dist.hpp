#pragma once

#include <memory>
#include <random>
#include <vector>

#include "attribsim/numeric.hpp"

namespace attrib {

// A click-time law on a sub-interval of (-inf, 0]. Implementations must be
// immutable after construction; TimeDist values share them freely across
// threads. The breakpoint list carries every kink of the density so that
// quadrature can split there instead of hunting for them.
class DistModel {
 public:
  virtual ~DistModel() = default;
  virtual double support_lo() const = 0;
  virtual double support_hi() const = 0;
  virtual double pdf(double t) const = 0;
  virtual double cdf(double t) const = 0;
  // Leftmost preimage of p under the cdf. Default: bisection on the cdf.
  virtual double quantile(double p) const;
  virtual const std::vector<double>& breakpoints() const = 0;
};

class TimeDist {
 public:
  TimeDist() = default;
  explicit TimeDist(std::shared_ptr<const DistModel> model)
      : model_(std::move(model)) {}

  double support_lo() const { return model_->support_lo(); }
  double support_hi() const { return model_->support_hi(); }
  double pdf(double t) const { return model_->pdf(t); }
  double cdf(double t) const { return model_->cdf(t); }
  double quantile(double p) const { return model_->quantile(p); }
  const std::vector<double>& breakpoints() const {
    return model_->breakpoints();
  }
  bool valid() const { return model_ != nullptr; }

 private:
  std::shared_ptr<const DistModel> model_;
};

// Independent per-platform laws; the joint law is the product.
struct DistProfile {
  std::vector<TimeDist> dists;

  explicit DistProfile(std::vector<TimeDist> d);
  static DistProfile homogeneous(const TimeDist& dist, int n);
  int n() const { return static_cast<int>(dists.size()); }
};

TimeDist make_uniform(double lo, double hi);

// Density c_M * (e^{-t} - 1) on [-M, 0] with c_M = 1 / (e^M - M - 1).
TimeDist make_fm_family(double M);
constexpr double kFmFamilyMaxM = 50.0;

// Density -2t on [-1, 0]; cdf 1 - t^2.
TimeDist make_linear();

struct Segment {
  double lo;
  double hi;
  double mass;
};

// Piecewise-constant density: mass / (hi - lo) on each segment. Segments must
// be disjoint, ordered, end at or below 0, and carry total mass 1 (tol 1e-12).
TimeDist make_piecewise_uniform(const std::vector<Segment>& segments);

// Tabulated cdf on a uniform grid lo + k*step, piecewise-linear in between.
// Values are forced monotone with endpoints exactly 0 and 1.
TimeDist make_tabulated(double lo, double step, std::vector<double> cdf_values);

// Law of max_{j != exclude} t_j: cdf is the product of the remaining cdfs.
TimeDist max_dist(const DistProfile& profile, int exclude);

// Same, over an explicit subset of platform indices (used by the tree rule).
TimeDist max_dist_subset(const DistProfile& profile,
                         const std::vector<int>& members);

// Inverse-transform draw; consumes exactly one uniform variate.
double sample(const TimeDist& dist, std::mt19937_64& rng);

}  // namespace attrib
