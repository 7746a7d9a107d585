#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "rfg/degrees.hpp"
#include "rfg/rng.hpp"

namespace rfg {

/// Trajectory lengths of the rho-shaped walk v, f(v), f^2(v), ...
/// six = first k with f^k(v) already on the path; six == tail + cycle.
struct WalkLengths {
  std::uint64_t six = 0;
  std::uint64_t tail = 0;
  std::uint64_t cycle = 0;

  bool operator==(const WalkLengths&) const = default;
};

/// A mapping f:[n]->[n] stored as its image array (0-based).
class FunctionalGraph {
 public:
  explicit FunctionalGraph(std::vector<Vertex> image);

  std::size_t n() const { return image_.size(); }
  Vertex image(Vertex v) const { return image_[v]; }
  std::span<const Vertex> images() const { return image_; }

 private:
  std::vector<Vertex> image_;
};

/// Uniform draw from the set of mappings with in-degree sequence ds:
/// shuffle the multiset slot list (vertex i repeated d_i times) and read it
/// off as the image array.
FunctionalGraph sample_uniform(const DegreeSequence& ds, RngStream& rng);

/// f^k(v); k = 0 returns v.
Vertex iterate(const FunctionalGraph& g, Vertex v, std::uint64_t k);

WalkLengths walk_lengths(const FunctionalGraph& g, Vertex v);

/// In-degree counts of g (for validating samples against ds).
std::vector<std::uint32_t> in_degrees(const FunctionalGraph& g);

// ---- lazy walk sampling ----

/// Draws WalkLengths with exactly the same joint law as
/// walk_lengths(sample_uniform(ds, rng), v), without materializing the graph:
/// a lazy Fisher-Yates draw from the virtual slot list, stopping at the first
/// value collision with the path. Expected O(six) work per sample after an
/// O(#degree-runs) index build.
class LazyWalkSampler {
 public:
  explicit LazyWalkSampler(const DegreeSequence& ds);

  WalkLengths sample(Vertex v, RngStream& rng) const;

  std::uint64_t n() const { return n_; }

 private:
  Vertex vertex_of_slot(std::uint64_t s) const;

  struct Run {
    std::uint64_t slot_begin;
    Vertex vertex_begin;
    std::uint32_t degree;
  };
  std::vector<Run> runs_;  // consecutive equal-degree vertices share a run
  std::uint64_t n_ = 0;
};

/// One-shot convenience wrapper (builds the sampler, O(n), then samples).
WalkLengths sample_walk_lazy(const DegreeSequence& ds, Vertex v, RngStream& rng);

// ---- CSV edge lists: "v,f(v)" lines, 1-based ids ----

void write_graph_csv(const FunctionalGraph& g, std::ostream& out);

/// Labeled form: vertex set may be a subset of [n] (used by reduce/extend).
/// Writes one line per vertex of g, using the provided original labels.
void write_graph_csv_labeled(const FunctionalGraph& g, std::span<const Vertex> labels,
                             std::ostream& out);

struct LabeledGraph {
  std::vector<Vertex> labels;  // sorted original 0-based ids
  std::vector<Vertex> image;   // image[i] = index into labels
};

/// Reads a CSV edge list; vertex ids may form any subset of positive integers.
LabeledGraph read_graph_csv(std::istream& in);

}  // namespace rfg
