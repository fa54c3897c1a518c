#include "shc/welch.hpp"

#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <limits>
#include <numeric>

#include "shc/error.hpp"

namespace shc {
namespace {

struct Moments {
  double mean;
  double variance;  // unbiased
  double count;
};

Moments moments(std::span<const double> x) {
  const double n = static_cast<double>(x.size());
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
  double ss = 0.0;
  for (double xi : x) ss += (xi - mean) * (xi - mean);
  return {mean, ss / (n - 1.0), n};
}

}  // namespace

WelchResult welch_t_test(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) throw Error(ErrorCode::InvalidArgument, "each sample needs at least 2 values");
  const Moments ma = moments(a);
  const Moments mb = moments(b);
  const double va = ma.variance / ma.count;
  const double vb = mb.variance / mb.count;
  const double diff = ma.mean - mb.mean;

  WelchResult r;
  if (va + vb == 0.0) {
    r.degrees_of_freedom = ma.count + mb.count - 2.0;
    if (diff == 0.0) {
      r.t_statistic = 0.0;
      r.p_value = 1.0;
    } else {
      r.t_statistic = std::copysign(std::numeric_limits<double>::infinity(), diff);
      r.p_value = 0.0;
    }
    return r;
  }

  r.t_statistic = diff / std::sqrt(va + vb);
  r.degrees_of_freedom = (va + vb) * (va + vb) / (va * va / (ma.count - 1.0) + vb * vb / (mb.count - 1.0));
  const boost::math::students_t dist(r.degrees_of_freedom);
  r.p_value = 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(r.t_statistic)));
  if (r.p_value > 1.0) r.p_value = 1.0;
  return r;
}

}  // namespace shc
