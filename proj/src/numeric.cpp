#include "attribsim/numeric.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <thread>

namespace attrib::num {

namespace {

struct SimpsonEval {
  double fa, fm, fb;
  double s;  // Simpson estimate over the interval
};

SimpsonEval simpson(const std::function<double(double)>& f, double a,
                    double fa, double b, double fb) {
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  return {fa, fm, fb, (b - a) / 6.0 * (fa + 4.0 * fm + fb)};
}

double adaptive(const std::function<double(double)>& f, double a, double fa,
                double b, double fb, double whole, double fm, double tol,
                int depth) {
  const double m = 0.5 * (a + b);
  const SimpsonEval left = simpson(f, a, fa, m, fm);
  const SimpsonEval right = simpson(f, m, fm, b, fb);
  const double delta = left.s + right.s - whole;
  if (std::abs(delta) <= 15.0 * tol || (b - a) < 1e-14 * (1.0 + std::abs(a))) {
    return left.s + right.s + delta / 15.0;
  }
  if (depth <= 0) {
    throw NumericError("quadrature did not converge");
  }
  return adaptive(f, a, fa, m, fm, left.s, left.fm, 0.5 * tol, depth - 1) +
         adaptive(f, m, fm, b, fb, right.s, right.fm, 0.5 * tol, depth - 1);
}

double integrate_segment(const std::function<double(double)>& f, double a,
                         double b, double tol, int max_depth) {
  if (!(b > a)) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const SimpsonEval whole = simpson(f, a, fa, b, fb);
  return adaptive(f, a, fa, b, fb, whole.s, whole.fm, tol, max_depth);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 std::span<const double> breakpoints,
                 const IntegrateOptions& opts) {
  if (!(b > a)) return 0.0;
  auto lo = std::upper_bound(breakpoints.begin(), breakpoints.end(), a);
  auto hi = std::lower_bound(breakpoints.begin(), breakpoints.end(), b);
  const double span = b - a;
  double total = 0.0;
  double prev = a;
  for (auto it = lo; it != hi; ++it) {
    const double cut = *it;
    if (cut - prev < 1e-15 * (1.0 + std::abs(cut))) continue;
    total += integrate_segment(f, prev, cut,
                               opts.abs_tol * (cut - prev) / span,
                               opts.max_depth);
    prev = cut;
  }
  total += integrate_segment(f, prev, b, opts.abs_tol * (b - prev) / span,
                             opts.max_depth);
  return total;
}

double bisect_leftmost(const std::function<double(double)>& g, double lo,
                       double hi, double target, double x_tol) {
  if (g(lo) >= target) return lo;
  while (hi - lo > x_tol) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) >= target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double bisect_root(const std::function<double(double)>& g, double lo,
                   double hi, double x_tol) {
  double glo = g(lo);
  double ghi = g(hi);
  if (glo == 0.0) return lo;
  if (ghi == 0.0) return hi;
  if ((glo > 0.0) == (ghi > 0.0)) {
    throw NumericError("bisect_root: endpoints do not bracket a root");
  }
  while (hi - lo > x_tol) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if (gm == 0.0) return mid;
    if ((gm > 0.0) == (glo > 0.0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double golden_max(const std::function<double(double)>& f, double lo, double hi,
                  double x_tol) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > x_tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    }
  }
  return 0.5 * (a + b);
}

void RunningStat::add(double x) {
  ++n_;
  const double d = x - mean_;
  mean_ += d / static_cast<double>(n_);
  m2_ += d * (x - mean_);
}

void RunningStat::merge(const RunningStat& other) {
  if (other.n_ == 0) return;
  if (n_ == 0) {
    *this = other;
    return;
  }
  const double d = other.mean_ - mean_;
  const long long n = n_ + other.n_;
  m2_ += other.m2_ + d * d * static_cast<double>(n_) *
                         static_cast<double>(other.n_) / static_cast<double>(n);
  mean_ += d * static_cast<double>(other.n_) / static_cast<double>(n);
  n_ = n;
}

double RunningStat::variance() const {
  return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0;
}

double RunningStat::stderr_mean() const {
  return n_ > 1 ? std::sqrt(variance() / static_cast<double>(n_)) : 0.0;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void parallel_for(int k, const std::function<void(int)>& fn) {
  const int hw = static_cast<int>(std::thread::hardware_concurrency());
  const int workers = std::max(1, std::min(k, hw > 0 ? hw : 4));
  if (workers == 1) {
    for (int i = 0; i < k; ++i) fn(i);
    return;
  }
  std::vector<std::future<void>> futs;
  futs.reserve(workers);
  std::atomic<int> next{0};
  for (int w = 0; w < workers; ++w) {
    futs.push_back(std::async(std::launch::async, [&]() {
      for (int i = next.fetch_add(1); i < k; i = next.fetch_add(1)) fn(i);
    }));
  }
  for (auto& f : futs) f.get();
}

std::vector<double> parallel_map(int k, const std::function<double(int)>& fn) {
  std::vector<double> out(static_cast<size_t>(k));
  parallel_for(k, [&](int i) { out[static_cast<size_t>(i)] = fn(i); });
  return out;
}

}  // namespace attrib::num
