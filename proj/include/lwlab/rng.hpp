#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace lwlab::rng {

/// Identifies one reproducible random stream. Equal specs always produce the
/// identical stream; distinct replica indices produce statistically
/// independent streams derived by a hash-based split of the key space.
struct SeedSpec {
  std::uint64_t root_seed = 0;
  std::string stream_label;
  std::uint64_t replica_index = 0;

  SeedSpec with_replica(std::uint64_t r) const {
    return SeedSpec{root_seed, stream_label, r};
  }
  SeedSpec with_label(std::string label) const {
    return SeedSpec{root_seed, std::move(label), replica_index};
  }
};

/// Counter-based generator: Philox4x32-10 (Salmon et al., Random123) keyed by
/// a SplitMix64 chain over (root_seed, FNV-1a(stream_label), replica_index).
/// The only mutable state is the block counter plus a cached spare Gaussian,
/// so streams are value types: copy one to fork a replay point. Any number of
/// streams may be consumed concurrently; nothing is shared.
class RandomStream {
 public:
  explicit RandomStream(const SeedSpec& seed);

  std::uint64_t next_u64();
  /// Uniform on [0,1) with 53 random bits.
  double next_uniform();
  /// Standard normal via the polar method (see kGaussianMethod).
  double next_gaussian();

  const SeedSpec& seed() const { return seed_; }

 private:
  void refill();

  SeedSpec seed_;
  std::array<std::uint32_t, 2> key_{};
  std::array<std::uint32_t, 2> stream_id_{};
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  int buffered_ = 0;
  double spare_gaussian_ = 0.0;
  bool has_spare_ = false;
};

/// n i.i.d. signs in {-1,+1}. Throws std::invalid_argument when n = 0.
std::vector<std::int8_t> rademacher_vector(const SeedSpec& seed, std::size_t n);

/// n i.i.d. standard normals. Throws std::invalid_argument when n = 0.
std::vector<double> gaussian_vector(const SeedSpec& seed, std::size_t n);

}  // namespace lwlab::rng
