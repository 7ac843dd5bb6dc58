#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "walkinv/graph.hpp"
#include "walkinv/rational.hpp"

namespace walkinv {

/// Monte Carlo settings. Walk i draws from its own std::mt19937_64 seeded by
/// std::seed_seq{seed, i} (both split into 32-bit halves), so estimates are
/// reproducible for a fixed configuration whatever the thread count.
struct WalkConfig {
  std::uint64_t seed = 1;
  std::size_t walks = 10000;
  /// Step cap per walk; 0 selects 100 n^3.
  std::uint64_t max_steps = 0;
};

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t walks = 0;
  std::size_t truncated = 0;
};

std::uint64_t default_max_steps(std::size_t n);

/// Sample mean and standard error with compensated (Kahan) sums.
Estimate summarize(std::span<const std::uint64_t> samples);

/// First-passage steps from x to y, averaged over cfg.walks walks.
/// Throws Truncation if any walk reaches the cap.
Estimate estimate_hitting(const Graph& g, Vertex x, Vertex y, const WalkConfig& cfg);

/// Steps until every vertex has been visited, starting from r.
/// Throws Truncation if any walk reaches the cap.
Estimate estimate_cover_time(const Graph& g, Vertex r, const WalkConfig& cfg);

inline constexpr std::size_t kMaxExactCoverOrder = 10;

/// Exact expected cover time from r, by backward induction over the
/// (visited set, position) chain: one |S| x |S| solve per visited set S.
/// Throws NTooLarge for n > 10.
Rational exact_cover_time_small(const Graph& g, Vertex r);

}  // namespace walkinv
