#include <immintrin.h>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>

#include "kernels_impl.hpp"

#if RFG_HAVE_AVX2_TU

namespace rfg::kernels::detail {

namespace {

inline std::uint64_t hsum_u64(__m256i v) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

inline std::uint32_t hmax_u32(__m256i v) {
  alignas(32) std::uint32_t lanes[8];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  std::uint32_t m = lanes[0];
  for (int i = 1; i < 8; ++i) m = std::max(m, lanes[i]);
  return m;
}

inline void accumulate_scalar(DegreeMoments& m, const std::uint32_t* p, std::size_t cnt) {
  for (std::size_t i = 0; i < cnt; ++i) {
    std::uint32_t v = p[i];
    std::uint64_t v2 = std::uint64_t(v) * v;
    m.m1 += v;
    m.m2 += v2;
    m.m3 += u128(v2) * v;
    if (v > m.max) m.max = v;
    m.zeros += (v == 0);
    m.ones += (v == 1);
  }
}

}  // namespace

DegreeMoments degree_moments_avx2(std::span<const std::uint32_t> d) {
  DegreeMoments tot;
  const std::uint32_t* p = d.data();
  std::size_t n = d.size();
  std::size_t i = 0;

  // Per-block u64 lane accumulation is overflow-safe when all block values
  // fit 15 bits (d^3 <= 2^45, ~1k adds per lane per block). Larger values are
  // rare in degree data; such blocks take the scalar path.
  constexpr std::size_t kBlock = 4096;
  constexpr std::uint32_t kSmallMax = (1u << 15) - 1;

  const __m256i vzero = _mm256_setzero_si256();
  const __m256i vone = _mm256_set1_epi32(1);

  while (i + 8 <= n) {
    std::size_t bend = i + std::min(kBlock, (n - i) & ~std::size_t(7));

    __m256i vmax = vzero;
    for (std::size_t j = i; j < bend; j += 8)
      vmax = _mm256_max_epu32(vmax, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + j)));
    std::uint32_t bmax = hmax_u32(vmax);
    if (bmax > tot.max) tot.max = bmax;

    if (bmax > kSmallMax) {
      DegreeMoments part;
      accumulate_scalar(part, p + i, bend - i);
      tot.m1 += part.m1;
      tot.m2 += part.m2;
      tot.m3 += part.m3;
      tot.zeros += part.zeros;
      tot.ones += part.ones;
      i = bend;
      continue;
    }

    __m256i s1 = vzero, s2 = vzero, s3 = vzero;
    std::uint64_t zeros = 0, ones = 0;
    for (std::size_t j = i; j < bend; j += 8) {
      __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + j));

      __m256i lo = _mm256_cvtepu32_epi64(_mm256_castsi256_si128(v));
      __m256i hi = _mm256_cvtepu32_epi64(_mm256_extracti128_si256(v, 1));
      s1 = _mm256_add_epi64(s1, lo);
      s1 = _mm256_add_epi64(s1, hi);

      // even/odd u32 lanes widened through 64-bit multiplies
      __m256i odd = _mm256_srli_epi64(v, 32);
      __m256i d2e = _mm256_mul_epu32(v, v);
      __m256i d2o = _mm256_mul_epu32(odd, odd);
      s2 = _mm256_add_epi64(s2, d2e);
      s2 = _mm256_add_epi64(s2, d2o);
      __m256i d3e = _mm256_mul_epu32(d2e, v);
      __m256i d3o = _mm256_mul_epu32(d2o, odd);
      s3 = _mm256_add_epi64(s3, d3e);
      s3 = _mm256_add_epi64(s3, d3o);

      zeros += std::popcount(std::uint32_t(
          _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(v, vzero)))));
      ones += std::popcount(std::uint32_t(
          _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(v, vone)))));
    }
    tot.m1 += hsum_u64(s1);
    tot.m2 += hsum_u64(s2);
    tot.m3 += hsum_u64(s3);
    tot.zeros += zeros;
    tot.ones += ones;
    i = bend;
  }

  DegreeMoments tail;
  accumulate_scalar(tail, p + i, n - i);
  tot.m1 += tail.m1;
  tot.m2 += tail.m2;
  tot.m3 += tail.m3;
  tot.zeros += tail.zeros;
  tot.ones += tail.ones;
  if (tail.max > tot.max) tot.max = tail.max;
  return tot;
}

double fsum_avx2(std::span<const double> x) {
  const double* p = x.data();
  std::size_t n = x.size();
  std::size_t i = 0;

  __m256d sum = _mm256_setzero_pd();
  __m256d comp = _mm256_setzero_pd();
  const __m256d absmask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7FFFFFFFFFFFFFFFLL));

  for (; i + 4 <= n; i += 4) {
    __m256d v = _mm256_loadu_pd(p + i);
    __m256d t = _mm256_add_pd(sum, v);
    __m256d big_sum = _mm256_add_pd(_mm256_sub_pd(sum, t), v);
    __m256d big_v = _mm256_add_pd(_mm256_sub_pd(v, t), sum);
    __m256d take_sum = _mm256_cmp_pd(_mm256_and_pd(sum, absmask), _mm256_and_pd(v, absmask),
                                     _CMP_GE_OQ);
    comp = _mm256_add_pd(comp, _mm256_blendv_pd(big_v, big_sum, take_sum));
    sum = t;
  }

  alignas(32) double s[4], c[4];
  _mm256_store_pd(s, sum);
  _mm256_store_pd(c, comp);

  // finish with a scalar Neumaier pass over lane sums, compensations, tail
  std::array<double, 8> head = {s[0], s[1], s[2], s[3], c[0], c[1], c[2], c[3]};
  double acc = 0.0, cc = 0.0;
  auto feed = [&](double v) {
    double t = acc + v;
    if (std::fabs(acc) >= std::fabs(v))
      cc += (acc - t) + v;
    else
      cc += (v - t) + acc;
    acc = t;
  };
  for (double v : head) feed(v);
  for (; i < n; ++i) feed(p[i]);
  return acc + cc;
}

}  // namespace rfg::kernels::detail

#endif  // RFG_HAVE_AVX2_TU
