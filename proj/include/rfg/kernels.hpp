#pragma once

#include <cstdint>
#include <span>
#include <string>

// Reduction kernels behind the degree-statistics and summation hot paths.
// Scalar reference implementations are the semantic ground truth; an AVX2
// variant is compiled where possible and selected at runtime (cpuid), with
// equivalence enforced by tests. RFG_ISA=scalar in the environment forces
// the scalar path.

namespace rfg::kernels {

using u128 = unsigned __int128;

struct DegreeMoments {
  u128 m1 = 0;           // sum d
  u128 m2 = 0;           // sum d^2
  u128 m3 = 0;           // sum d^3
  std::uint32_t max = 0; // Delta
  std::uint64_t zeros = 0;
  std::uint64_t ones = 0;

  bool operator==(const DegreeMoments&) const = default;
};

enum class Isa { scalar, avx2 };

const char* isa_name(Isa isa);

/// True if the variant is compiled in and the CPU supports it.
bool isa_supported(Isa isa);

/// The variant the dispatcher resolved to (after env override).
Isa active_isa();

DegreeMoments degree_moments(std::span<const std::uint32_t> d);

/// Neumaier-compensated sum.
double fsum(std::span<const double> x);

// Direct entry points for a specific variant (equivalence tests, benchmarks).
// Throws Error(DomainError) if the variant is unavailable.
DegreeMoments degree_moments_with(Isa isa, std::span<const std::uint32_t> d);
double fsum_with(Isa isa, std::span<const double> x);

std::string u128_to_string(u128 v);

}  // namespace rfg::kernels
