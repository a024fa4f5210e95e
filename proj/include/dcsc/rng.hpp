#ifndef DCSC_RNG_HPP
#define DCSC_RNG_HPP

#include <cstdint>
#include <initializer_list>
#include <random>

namespace dcsc {

// Deterministic random stream. All value mappings are implemented on top of
// the raw mt19937_64 word stream (which the standard pins bit-exactly), so
// identical seeds give identical draws on every platform and compiler.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi]; returns exactly lo when lo == hi.
  double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

  // Standard normal via Box-Muller; generates draws in pairs.
  double normal();

  // -1 or +1 with equal probability.
  double rademacher() { return (next_u64() >> 63) ? 1.0 : -1.0; }

  // Uniform index in [0, n); unbiased via rejection.
  std::size_t uniform_index(std::size_t n);

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// splitmix64-based derivation of child seeds from (root, path). Used to give
// every trial/layer/column its own independent stream so results do not
// depend on scheduling order.
std::uint64_t derive_seed(std::uint64_t root, std::initializer_list<std::uint64_t> path);

// Stream role tags for derive_seed paths.
namespace seed_tag {
inline constexpr std::uint64_t dictionary = 0x64696374;  // "dict"
inline constexpr std::uint64_t mask = 0x6d61736b;        // "mask"
inline constexpr std::uint64_t signal = 0x7369676e;      // "sign"
inline constexpr std::uint64_t noise = 0x6e6f6973;       // "nois"
inline constexpr std::uint64_t trial = 0x7472696c;       // "tril"
inline constexpr std::uint64_t column = 0x636f6c75;      // "colu"
}  // namespace seed_tag

}  // namespace dcsc

#endif
