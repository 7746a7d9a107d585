#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "rfg/bigint.hpp"
#include "rfg/error.hpp"
#include "rfg/kernels.hpp"
#include "rfg/rng.hpp"

namespace rfg {

using Vertex = std::uint32_t;  // 0-based internally; files and CLI use 1-based [n]

/// Validated in-degree sequence: sum(d) == n, all entries >= 0.
class DegreeSequence {
 public:
  static DegreeSequence from_signed(const std::vector<std::int64_t>& raw);
  static DegreeSequence from(std::vector<std::uint32_t> d);

  std::size_t n() const { return d_.size(); }
  std::uint32_t degree(Vertex v) const { return d_[v]; }
  std::span<const std::uint32_t> degrees() const { return d_; }

  /// Degrees with one vertex removed (not a valid DegreeSequence; sums to n - d_v).
  std::vector<std::uint32_t> degrees_without(Vertex v) const;

 private:
  explicit DegreeSequence(std::vector<std::uint32_t> d) : d_(std::move(d)) {}
  std::vector<std::uint32_t> d_;
};

struct DegreeStats {
  std::uint64_t n = 0;
  std::uint32_t delta = 0;
  kernels::u128 m1 = 0, m2 = 0, m3 = 0;
  std::uint64_t num_deg0 = 0, num_deg1 = 0;
  BigRat sigma2;        // m2/n - 1, exact
  double sigma2_d = 0;  // same, rounded
  BigInt n_sigma2;      // m2 - n == sum (d_j - 1)^2
};

DegreeStats stats(const DegreeSequence& ds);

/// One finite-n ratio diagnostic for an asymptotic condition. The conditions
/// are statements about sequence families; at a single n only the ratio of
/// the two sides is reported, never used to gate computation.
struct AssumptionRatio {
  std::string name;     // e.g. "A2"
  std::string detail;   // e.g. "delta / sqrt(n*sigma2)"
  double lhs = 0, rhs = 0, ratio = 0;
  bool want_small = true;  // family condition is lhs = o(rhs); else omega
  bool degenerate = false;
};

struct AssumptionReport {
  std::uint64_t n = 0;
  double sigma2 = 0;
  std::uint32_t delta = 0;
  std::vector<AssumptionRatio> items;
};

AssumptionReport check_assumptions(const DegreeSequence& ds);

// ---- generators (test fixtures and CLI) ----

enum class GeneratorKind { two_zero, permutation, binary_mix, multinomial, custom };

struct GeneratorParams {
  // binary_mix: counts of vertices with degree 0..3
  std::uint64_t c0 = 0, c1 = 0, c2 = 0, c3 = 0;
  std::vector<std::uint32_t> custom;
};

DegreeSequence generate(GeneratorKind kind, std::uint64_t n, const GeneratorParams& params,
                        RngStream& rng);

DegreeSequence generate_two_zero(std::uint64_t n);
DegreeSequence generate_permutation(std::uint64_t n);
DegreeSequence generate_binary_mix(std::uint64_t n, std::uint64_t c0, std::uint64_t c1,
                                   std::uint64_t c2, std::uint64_t c3);
DegreeSequence generate_multinomial(std::uint64_t n, RngStream& rng);

/// Parses "generator:two_zero", "generator:binary_mix:c0=..,c1=..,c2=..,c3=..",
/// "generator:permutation", "generator:multinomial", or "file:PATH".
DegreeSequence degrees_from_spec(const std::string& spec, std::uint64_t n, RngStream& rng);

// ---- histogram ----

struct DegreeHistogram {
  // (degree value, count), sorted by value ascending
  std::vector<std::pair<std::uint32_t, std::uint64_t>> bins;
};

DegreeHistogram degree_histogram(const DegreeSequence& ds);

// ---- file I/O: one integer per line ('#' comments allowed) or CSV column ----

DegreeSequence read_degrees(const std::string& path);
void write_degrees(const DegreeSequence& ds, std::ostream& out);

}  // namespace rfg
