#pragma once

// Deterministic randomness utilities. Every replicate of an experiment owns
// named substreams derived from (master_seed, replicate, purpose), so results
// do not depend on worker count or scheduling. All samplers below are pinned
// algorithms (no std::*_distribution) to keep byte-identical output across
// standard library versions.

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>

namespace ringburst {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

enum class Stream : std::uint64_t { Graph = 1, Seeds = 2, PhaseOrder = 3 };

inline std::uint64_t stream_seed(std::uint64_t master, std::uint64_t replicate,
                                 Stream purpose) {
  std::uint64_t s = splitmix64(master);
  s = splitmix64(s ^ (0x9E3779B97F4A7C15ull * (replicate + 1)));
  s = splitmix64(s ^ (0xC2B2AE3D27D4EB4Full * static_cast<std::uint64_t>(purpose)));
  return s;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // uniform double in [0,1)
  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // uniform double in (0,1], safe as a log() argument
  double unit_pos() {
    return static_cast<double>((eng_() >> 11) + 1) * 0x1.0p-53;
  }

  // unbiased uniform integer in [0, bound), bound >= 1 (Lemire rejection)
  std::uint64_t below(std::uint64_t bound) {
    using u128 = unsigned __int128;
    std::uint64_t x = eng_();
    u128 m = static_cast<u128>(x) * bound;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
      std::uint64_t t = -bound % bound;
      while (lo < t) {
        x = eng_();
        m = static_cast<u128>(x) * bound;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  bool bernoulli(double p) { return unit() < p; }

 private:
  std::mt19937_64 eng_;
};

// Number of failures before the next success in an iid Bernoulli(p) sequence.
// Lets a generator touch only the successful positions: O(expected hits).
class GeometricSkip {
 public:
  explicit GeometricSkip(double p) {
    if (!(p > 0.0) || p > 1.0)
      throw std::invalid_argument("GeometricSkip: p must be in (0,1]");
    inv_log_q_ = (p >= 1.0) ? -0.0 : 1.0 / std::log1p(-p);
  }

  // may exceed any array bound; compare before casting
  double gap(Rng& r) const { return std::floor(std::log(r.unit_pos()) * inv_log_q_); }

 private:
  double inv_log_q_;
};

// Binomial(m, p) by pmf inversion; intended for moderate m*p (simulation
// helpers, not the reporting path).
inline std::uint64_t binomial_inv(Rng& r, std::uint64_t m, double p) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("binomial_inv: bad p");
  if (m == 0 || p == 0.0) return 0;
  if (p == 1.0) return m;
  double q = 1.0 - p;
  double pmf = std::pow(q, static_cast<double>(m));
  if (pmf < 1e-280)
    throw std::invalid_argument("binomial_inv: m*p too large for inversion");
  double u = r.unit();
  double cum = pmf;
  std::uint64_t k = 0;
  while (u >= cum && k < m) {
    pmf *= (static_cast<double>(m - k) * p) / (static_cast<double>(k + 1) * q);
    cum += pmf;
    ++k;
  }
  return k;
}

}  // namespace ringburst
