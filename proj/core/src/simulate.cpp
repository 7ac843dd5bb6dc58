#include "walkinv/simulate.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "walkinv/error.hpp"
#include "walkinv/linalg.hpp"
#include "walkinv/parallel.hpp"

namespace walkinv {

namespace {

std::mt19937_64 walk_engine(std::uint64_t seed, std::uint64_t walk) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(walk), static_cast<std::uint32_t>(walk >> 32)};
  return std::mt19937_64(seq);
}

Vertex step(const Graph& g, Vertex at, std::mt19937_64& rng) {
  const auto nbrs = g.neighbors(at);
  std::uniform_int_distribution<std::size_t> pick(0, nbrs.size() - 1);
  return nbrs[pick(rng)];
}

void require_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
}

std::uint64_t step_cap(const Graph& g, const WalkConfig& cfg) {
  return cfg.max_steps ? cfg.max_steps : default_max_steps(g.order());
}

Estimate finish(const std::vector<std::uint64_t>& steps, std::uint64_t cap, const char* what) {
  Estimate est = summarize(steps);
  for (std::uint64_t s : steps)
    if (s >= cap) ++est.truncated;
  if (est.truncated) {
    throw Error(ErrorCode::Truncation, std::string(what) + ": " + std::to_string(est.truncated) + " of " +
                                           std::to_string(steps.size()) + " walks hit the cap of " +
                                           std::to_string(cap) + " steps");
  }
  return est;
}

}  // namespace

std::uint64_t default_max_steps(std::size_t n) {
  const auto nn = static_cast<std::uint64_t>(n);
  return 100 * nn * nn * nn;
}

Estimate summarize(std::span<const std::uint64_t> samples) {
  Estimate est;
  est.walks = samples.size();
  if (samples.empty()) return est;
  // Kahan-compensated sums of x and of (x - shift)^2, shifted by the first
  // sample to keep the variance computation well conditioned.
  const double shift = static_cast<double>(samples.front());
  double sum = 0.0, sum_c = 0.0, sq = 0.0, sq_c = 0.0;
  const auto kahan = [](double& total, double& comp, double value) {
    const double y = value - comp;
    const double t = total + y;
    comp = (t - total) - y;
    total = t;
  };
  for (std::uint64_t s : samples) {
    const double centred = static_cast<double>(s) - shift;
    kahan(sum, sum_c, centred);
    kahan(sq, sq_c, centred * centred);
  }
  const double count = static_cast<double>(samples.size());
  const double mean_centred = sum / count;
  est.mean = shift + mean_centred;
  if (samples.size() > 1) {
    const double variance = std::max(0.0, (sq - count * mean_centred * mean_centred) / (count - 1.0));
    est.std_error = std::sqrt(variance / count);
  }
  return est;
}

Estimate estimate_hitting(const Graph& g, Vertex x, Vertex y, const WalkConfig& cfg) {
  require_vertex(g, x);
  require_vertex(g, y);
  if (x == y) throw Error(ErrorCode::VertexOutOfRange, "hitting estimate needs distinct endpoints");
  if (cfg.walks == 0) throw Error(ErrorCode::SizeTooSmall, "walks must be >= 1");
  const std::uint64_t cap = step_cap(g, cfg);
  std::vector<std::uint64_t> steps(cfg.walks);
  parallel_for(cfg.walks, [&](std::uint64_t i) {
    auto rng = walk_engine(cfg.seed, i);
    Vertex at = x;
    std::uint64_t t = 0;
    while (at != y && t < cap) {
      at = step(g, at, rng);
      ++t;
    }
    steps[i] = t;
  });
  return finish(steps, cap, "hitting estimate");
}

Estimate estimate_cover_time(const Graph& g, Vertex r, const WalkConfig& cfg) {
  require_vertex(g, r);
  if (cfg.walks == 0) throw Error(ErrorCode::SizeTooSmall, "walks must be >= 1");
  const std::uint64_t cap = step_cap(g, cfg);
  const std::size_t n = g.order();
  std::vector<std::uint64_t> steps(cfg.walks);
  parallel_for(cfg.walks, [&](std::uint64_t i) {
    auto rng = walk_engine(cfg.seed, i);
    std::vector<char> seen(n, 0);
    seen[r] = 1;
    std::size_t remaining = n - 1;
    Vertex at = r;
    std::uint64_t t = 0;
    while (remaining > 0 && t < cap) {
      at = step(g, at, rng);
      ++t;
      if (!seen[at]) {
        seen[at] = 1;
        --remaining;
      }
    }
    steps[i] = remaining > 0 ? cap : t;
  });
  return finish(steps, cap, "cover-time estimate");
}

Rational exact_cover_time_small(const Graph& g, Vertex r) {
  require_vertex(g, r);
  const std::size_t n = g.order();
  if (n > kMaxExactCoverOrder) {
    throw Error(ErrorCode::NTooLarge, "exact cover time limited to n <= 10, got " + std::to_string(n));
  }
  const std::uint32_t full = (1U << n) - 1;
  // expected[S][v]: remaining steps to cover from position v with visited set S.
  std::vector<std::vector<Rational>> expected(std::size_t{1} << n);
  expected[full].assign(n, Rational(0));

  // Visited sets only grow, so larger sets are solved first.
  for (int size = static_cast<int>(n) - 1; size >= 1; --size) {
    for (std::uint32_t s = 0; s < full; ++s) {
      if (std::popcount(s) != size || !(s >> r & 1U)) continue;
      std::vector<Vertex> members;
      for (Vertex v = 0; v < n; ++v)
        if (s >> v & 1U) members.push_back(v);
      std::vector<std::size_t> slot(n, n);
      for (std::size_t k = 0; k < members.size(); ++k) slot[members[k]] = k;

      // deg(v) E_v - sum_{u ~ v, u in S} E_u = deg(v) + sum_{u ~ v, u not in S} E[S+u][u]
      const std::size_t k = members.size();
      RationalMatrix system(k, k);
      std::vector<Rational> rhs(k);
      for (std::size_t i = 0; i < k; ++i) {
        const Vertex v = members[i];
        system(i, i) = static_cast<unsigned long>(g.degree(v));
        rhs[i] = static_cast<unsigned long>(g.degree(v));
        for (Vertex u : g.neighbors(v)) {
          if (s >> u & 1U) {
            system(i, slot[u]) -= 1;
          } else {
            rhs[i] += expected[s | (1U << u)][u];
          }
        }
      }
      const std::vector<Rational> solution = solve(system, rhs);
      auto& row = expected[s];
      row.assign(n, Rational(0));
      for (std::size_t i = 0; i < k; ++i) row[members[i]] = solution[i];
    }
  }
  return expected[1U << r][r];
}

}  // namespace walkinv
