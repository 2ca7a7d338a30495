#pragma once

#include <cstdint>
#include <string_view>

namespace olu {

// FNV-1a 64-bit. Used for stream-name mixing and artifact content hashes.
constexpr std::uint64_t fnv1a64(std::string_view bytes,
                                std::uint64_t h = 14695981039346656037ull) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

/// Counter-based generator (splitmix64) with named sub-streams.
///
/// Identical (seed, stream) pairs produce bitwise-identical draw sequences on
/// every platform; distinct stream names ("data", "s", "scales", ...) give
/// independent streams so one consumer cannot perturb another.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::string_view stream = "")
      : state_(fnv1a64(stream, seed ^ 0x9E3779B97F4A7C15ull)) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform on [0,1), 53-bit resolution.
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform on {0,...,n-1} via 128-bit multiply; n must be positive.
  long uniform_int(long n) {
    return long((static_cast<unsigned __int128>(next_u64()) *
                 static_cast<unsigned __int128>(n)) >> 64);
  }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::uint64_t state_;
};

}  // namespace olu
