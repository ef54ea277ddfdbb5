// Location and weight distributions for the Monte Carlo experiments, all
// driven by the deterministic SplitRng streams.
#ifndef UAV_DISTRIBUTIONS_HPP
#define UAV_DISTRIBUTIONS_HPP

#include <memory>
#include <string>
#include <vector>

#include "uav/rng.hpp"

namespace uav {

struct DistributionSpec {
  enum class Kind { Uniform01, Beta, TruncatedNormal, TruncatedLogistic };

  Kind kind = Kind::Uniform01;
  double p1 = 0.0;  // Beta a | normal mean | logistic mean
  double p2 = 0.0;  // Beta b | normal sd   | logistic scale

  static DistributionSpec uniform01() { return {}; }
  static DistributionSpec beta(double a, double b);
  // mean < 0 requests centering at the interval midpoint.
  static DistributionSpec truncated_normal(double mean, double sd);
  static DistributionSpec truncated_logistic(double mean, double scale);

  // Accepts "uniform", "beta(a,b)", "normal(mean,sd)", "logistic(mean,scale)".
  static DistributionSpec parse(const std::string& text);

  std::string label() const;
  void validate() const;
};

// Draws values on [0, extent]. Uniform and Beta samples are unit draws
// scaled by the extent; truncated specs sample in natural units and reject
// out-of-range draws (capped at 10^6 rejections).
class Sampler {
 public:
  Sampler(const DistributionSpec& spec, double extent);

  double draw(SplitRng& rng) const;
  const DistributionSpec& spec() const { return spec_; }

 private:
  double draw_unit_beta(SplitRng& rng) const;

  DistributionSpec spec_;
  double extent_;
  double mean_ = 0.0;  // resolved center for truncated kinds
  // Monotone CDF table on [0,1] for Beta inverse-CDF sampling.
  std::shared_ptr<const std::vector<double>> beta_cdf_;
};

// Regularized incomplete beta function I_x(a, b); the Beta(a,b) CDF.
double beta_cdf(double x, double a, double b);

}  // namespace uav

#endif
