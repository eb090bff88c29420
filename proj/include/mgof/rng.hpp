#pragma once

#include <cstdint>
#include <random>

namespace mgof {

using Rng = std::mt19937_64;

/// Independent stream for replication `stream` of a run seeded with `seed`.
/// The stream depends only on (seed, stream), never on scheduling order.
inline Rng make_stream(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32),
                    0x6d676f66u};
  return Rng(seq);
}

/// Uniform draw on the open interval (0, 1).
inline double uniform_open01(Rng& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

inline double standard_normal(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  return normal(rng);
}

}  // namespace mgof
