#include "uav/distributions.hpp"

#include <boost/math/special_functions/beta.hpp>
#include <cmath>
#include <stdexcept>

namespace uav {

namespace {

constexpr int kBetaTablePoints = 10000;
constexpr int kMaxRejections = 1000000;

std::shared_ptr<const std::vector<double>> build_beta_table(double a, double b) {
  auto table = std::make_shared<std::vector<double>>(kBetaTablePoints + 1);
  for (int i = 0; i <= kBetaTablePoints; ++i)
    (*table)[i] = beta_cdf(static_cast<double>(i) / kBetaTablePoints, a, b);
  return table;
}

double parse_two_args(const std::string& text, std::size_t open, double* second) {
  const std::size_t comma = text.find(',', open);
  const std::size_t close = text.find(')', open);
  if (comma == std::string::npos || close == std::string::npos || comma > close)
    throw std::invalid_argument("distribution: expected two parameters in " + text);
  *second = std::stod(text.substr(comma + 1, close - comma - 1));
  return std::stod(text.substr(open + 1, comma - open - 1));
}

}  // namespace

double beta_cdf(double x, double a, double b) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return boost::math::ibeta(a, b, x);
}

DistributionSpec DistributionSpec::beta(double a, double b) {
  DistributionSpec s;
  s.kind = Kind::Beta;
  s.p1 = a;
  s.p2 = b;
  s.validate();
  return s;
}

DistributionSpec DistributionSpec::truncated_normal(double mean, double sd) {
  DistributionSpec s;
  s.kind = Kind::TruncatedNormal;
  s.p1 = mean;
  s.p2 = sd;
  s.validate();
  return s;
}

DistributionSpec DistributionSpec::truncated_logistic(double mean, double scale) {
  DistributionSpec s;
  s.kind = Kind::TruncatedLogistic;
  s.p1 = mean;
  s.p2 = scale;
  s.validate();
  return s;
}

DistributionSpec DistributionSpec::parse(const std::string& text) {
  if (text == "uniform" || text == "uniform01") return uniform01();
  const std::size_t open = text.find('(');
  if (open != std::string::npos) {
    const std::string name = text.substr(0, open);
    double second = 0.0;
    const double first = parse_two_args(text, open, &second);
    if (name == "beta") return beta(first, second);
    if (name == "normal") return truncated_normal(first, second);
    if (name == "logistic") return truncated_logistic(first, second);
  }
  throw std::invalid_argument("distribution: unrecognized spec '" + text + "'");
}

std::string DistributionSpec::label() const {
  auto fmt = [](double v) {
    std::string s = std::to_string(v);
    s.erase(s.find_last_not_of('0') + 1);
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
  };
  switch (kind) {
    case Kind::Uniform01:
      return "uniform";
    case Kind::Beta:
      return "beta(" + fmt(p1) + "," + fmt(p2) + ")";
    case Kind::TruncatedNormal:
      return "normal(" + fmt(p1) + "," + fmt(p2) + ")";
    case Kind::TruncatedLogistic:
      return "logistic(" + fmt(p1) + "," + fmt(p2) + ")";
  }
  return "unknown";
}

void DistributionSpec::validate() const {
  switch (kind) {
    case Kind::Uniform01:
      return;
    case Kind::Beta:
      if (!(p1 > 0.0) || !(p2 > 0.0))
        throw std::invalid_argument("beta: shape parameters must be positive");
      return;
    case Kind::TruncatedNormal:
    case Kind::TruncatedLogistic:
      if (!(p2 > 0.0))
        throw std::invalid_argument("distribution: spread parameter must be positive");
      return;
  }
}

Sampler::Sampler(const DistributionSpec& spec, double extent)
    : spec_(spec), extent_(extent) {
  spec_.validate();
  if (!(extent > 0.0)) throw std::invalid_argument("sampler: extent must be positive");
  if (spec_.kind == DistributionSpec::Kind::Beta)
    beta_cdf_ = build_beta_table(spec_.p1, spec_.p2);
  if (spec_.kind == DistributionSpec::Kind::TruncatedNormal ||
      spec_.kind == DistributionSpec::Kind::TruncatedLogistic)
    mean_ = spec_.p1 < 0.0 ? 0.5 * extent : spec_.p1;
}

double Sampler::draw_unit_beta(SplitRng& rng) const {
  const double u = rng.next_unit();
  const std::vector<double>& table = *beta_cdf_;
  // Bracket u in the monotone table, then bisect the piecewise-linear
  // interpolant to 1e-10 in x.
  std::size_t lo_i = 0, hi_i = table.size() - 1;
  while (hi_i - lo_i > 1) {
    const std::size_t mid = (lo_i + hi_i) / 2;
    if (table[mid] <= u)
      lo_i = mid;
    else
      hi_i = mid;
  }
  double lo = static_cast<double>(lo_i) / kBetaTablePoints;
  double hi = static_cast<double>(hi_i) / kBetaTablePoints;
  const double cdf_lo = table[lo_i];
  const double slope = (table[hi_i] - table[lo_i]) * kBetaTablePoints;
  const double x0 = lo;
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if (cdf_lo + (mid - x0) * slope <= u)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double Sampler::draw(SplitRng& rng) const {
  switch (spec_.kind) {
    case DistributionSpec::Kind::Uniform01:
      return rng.next_unit() * extent_;
    case DistributionSpec::Kind::Beta:
      return draw_unit_beta(rng) * extent_;
    case DistributionSpec::Kind::TruncatedNormal: {
      for (int i = 0; i < kMaxRejections; ++i) {
        // Box-Muller; the second coordinate is discarded to keep the draw
        // count per sample deterministic.
        const double u1 = rng.next_unit();
        const double u2 = rng.next_unit();
        const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
        const double z = r * std::cos(2.0 * M_PI * u2);
        const double v = mean_ + spec_.p2 * z;
        if (v >= 0.0 && v <= extent_) return v;
      }
      throw std::runtime_error("truncated normal: rejection cap reached");
    }
    case DistributionSpec::Kind::TruncatedLogistic: {
      for (int i = 0; i < kMaxRejections; ++i) {
        const double u = rng.next_unit();
        if (u <= 0.0 || u >= 1.0) continue;
        const double v = mean_ + spec_.p2 * std::log(u / (1.0 - u));
        if (v >= 0.0 && v <= extent_) return v;
      }
      throw std::runtime_error("truncated logistic: rejection cap reached");
    }
  }
  throw std::logic_error("sampler: unreachable");
}

}  // namespace uav
