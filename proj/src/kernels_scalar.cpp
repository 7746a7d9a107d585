#include <cmath>

#include "kernels_impl.hpp"

namespace rfg::kernels::detail {

DegreeMoments degree_moments_scalar(std::span<const std::uint32_t> d) {
  DegreeMoments m;
  for (std::uint32_t v : d) {
    std::uint64_t v2 = std::uint64_t(v) * v;
    m.m1 += v;
    m.m2 += v2;
    m.m3 += u128(v2) * v;
    if (v > m.max) m.max = v;
    m.zeros += (v == 0);
    m.ones += (v == 1);
  }
  return m;
}

double fsum_scalar(std::span<const double> x) {
  double sum = 0.0, comp = 0.0;
  for (double v : x) {
    double t = sum + v;
    if (std::fabs(sum) >= std::fabs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }
  return sum + comp;
}

}  // namespace rfg::kernels::detail
