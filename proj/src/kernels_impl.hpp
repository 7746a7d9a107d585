#pragma once

#include "rfg/kernels.hpp"

namespace rfg::kernels::detail {

DegreeMoments degree_moments_scalar(std::span<const std::uint32_t> d);
double fsum_scalar(std::span<const double> x);

#if RFG_HAVE_AVX2_TU
DegreeMoments degree_moments_avx2(std::span<const std::uint32_t> d);
double fsum_avx2(std::span<const double> x);
#endif

}  // namespace rfg::kernels::detail
