#include "lwlab/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace lwlab::rng {
namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

struct Block {
  std::array<std::uint32_t, 4> x;
};

inline Block philox_round(Block b, std::uint32_t k0, std::uint32_t k1) {
  std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxM0) * b.x[0];
  std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxM1) * b.x[2];
  std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
  std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
  std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
  std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
  return Block{{hi1 ^ b.x[1] ^ k0, lo1, hi0 ^ b.x[3] ^ k1, lo0}};
}

Block philox10(Block b, std::uint32_t k0, std::uint32_t k1) {
  for (int round = 0; round < 10; ++round) {
    b = philox_round(b, k0, k1);
    k0 += kPhiloxW0;
    k1 += kPhiloxW1;
  }
  return b;
}

}  // namespace

RandomStream::RandomStream(const SeedSpec& seed) : seed_(seed) {
  std::uint64_t h = splitmix64(seed.root_seed);
  h = splitmix64(h ^ fnv1a64(seed.stream_label));
  std::uint64_t key = splitmix64(h ^ seed.replica_index);
  std::uint64_t sid = splitmix64(key ^ 0xA5A5A5A5A5A5A5A5ull);
  key_ = {static_cast<std::uint32_t>(key), static_cast<std::uint32_t>(key >> 32)};
  stream_id_ = {static_cast<std::uint32_t>(sid), static_cast<std::uint32_t>(sid >> 32)};
}

void RandomStream::refill() {
  Block ctr{{static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
             stream_id_[0], stream_id_[1]}};
  Block out = philox10(ctr, key_[0], key_[1]);
  buffer_[0] = (static_cast<std::uint64_t>(out.x[1]) << 32) | out.x[0];
  buffer_[1] = (static_cast<std::uint64_t>(out.x[3]) << 32) | out.x[2];
  buffered_ = 2;
  ++block_;
}

std::uint64_t RandomStream::next_u64() {
  if (buffered_ == 0) refill();
  return buffer_[2 - buffered_--];
}

double RandomStream::next_uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::next_gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_gaussian_;
  }
  for (;;) {
    double u = 2.0 * next_uniform() - 1.0;
    double v = 2.0 * next_uniform() - 1.0;
    double s = u * u + v * v;
    if (s >= 1.0 || s == 0.0) continue;
    double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_gaussian_ = v * f;
    has_spare_ = true;
    return u * f;
  }
}

std::vector<std::int8_t> rademacher_vector(const SeedSpec& seed, std::size_t n) {
  if (n == 0) throw std::invalid_argument("rademacher_vector: n must be >= 1");
  RandomStream stream(seed);
  std::vector<std::int8_t> out(n);
  std::size_t i = 0;
  while (i < n) {
    std::uint64_t bits = stream.next_u64();
    for (int b = 0; b < 64 && i < n; ++b, ++i) {
      out[i] = (bits >> b) & 1 ? 1 : -1;
    }
  }
  return out;
}

std::vector<double> gaussian_vector(const SeedSpec& seed, std::size_t n) {
  if (n == 0) throw std::invalid_argument("gaussian_vector: n must be >= 1");
  RandomStream stream(seed);
  std::vector<double> out(n);
  for (double& x : out) x = stream.next_gaussian();
  return out;
}

}  // namespace lwlab::rng
