#include "rfg/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <mutex>

#include "kernels_impl.hpp"
#include "rfg/error.hpp"

namespace rfg::kernels {

namespace {

struct Dispatch {
  Isa isa = Isa::scalar;
  DegreeMoments (*moments)(std::span<const std::uint32_t>) = &detail::degree_moments_scalar;
  double (*fsum)(std::span<const double>) = &detail::fsum_scalar;
};

bool cpu_has_avx2() {
#if RFG_HAVE_AVX2_TU
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const Dispatch& dispatch() {
  static Dispatch d = [] {
    Dispatch r;
    const char* force = std::getenv("RFG_ISA");
    bool want_scalar = force != nullptr && std::strcmp(force, "scalar") == 0;
#if RFG_HAVE_AVX2_TU
    if (!want_scalar && cpu_has_avx2()) {
      r.isa = Isa::avx2;
      r.moments = &detail::degree_moments_avx2;
      r.fsum = &detail::fsum_avx2;
    }
#else
    (void)want_scalar;
#endif
    return r;
  }();
  return d;
}

}  // namespace

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "?";
}

bool isa_supported(Isa isa) {
  if (isa == Isa::scalar) return true;
  return cpu_has_avx2();
}

Isa active_isa() { return dispatch().isa; }

DegreeMoments degree_moments(std::span<const std::uint32_t> d) { return dispatch().moments(d); }

double fsum(std::span<const double> x) { return dispatch().fsum(x); }

DegreeMoments degree_moments_with(Isa isa, std::span<const std::uint32_t> d) {
  if (isa == Isa::scalar) return detail::degree_moments_scalar(d);
#if RFG_HAVE_AVX2_TU
  if (isa == Isa::avx2 && cpu_has_avx2()) return detail::degree_moments_avx2(d);
#endif
  throw Error(Errc::DomainError, std::string("kernel variant unavailable: ") + isa_name(isa));
}

double fsum_with(Isa isa, std::span<const double> x) {
  if (isa == Isa::scalar) return detail::fsum_scalar(x);
#if RFG_HAVE_AVX2_TU
  if (isa == Isa::avx2 && cpu_has_avx2()) return detail::fsum_avx2(x);
#endif
  throw Error(Errc::DomainError, std::string("kernel variant unavailable: ") + isa_name(isa));
}

std::string u128_to_string(u128 v) {
  if (v == 0) return "0";
  char buf[40];
  int pos = 40;
  while (v > 0) {
    buf[--pos] = char('0' + int(v % 10));
    v /= 10;
  }
  return std::string(buf + pos, buf + 40);
}

}  // namespace rfg::kernels
