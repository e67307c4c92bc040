#pragma once

#include <cstdint>

#include "erosion_lab/cyl_graph.hpp"

namespace elab {

/// xoshiro256++ sequence. Consumable generator handed to simulation code.
class RngSequence {
 public:
  RngSequence() { seed(0x9e3779b97f4a7c15ull); }
  explicit RngSequence(std::uint64_t s) { seed(s); }

  std::uint64_t next();

  /// Uniform on {0,...,n-1} by rejection; exact for any n >= 1.
  std::uint32_t uniform_int(std::uint32_t n);

  /// Uniform in [0,1).
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  Direction direction() { return static_cast<Direction>(next() >> 62); }

 private:
  void seed(std::uint64_t s);
  std::uint64_t s_[4];
};

/// Seed family keyed by (master_seed, replica); walker substreams are
/// derived deterministically, so identical (master_seed, replica, walker)
/// always yields the identical sequence within one build.
struct RngStream {
  std::uint64_t master_seed = 0;
  std::uint64_t replica = 0;

  RngSequence walker(std::uint64_t walker_id) const;

  /// Name of the generator family, recorded in run metadata.
  static const char* generator_name() { return "xoshiro256++/splitmix64"; }
};

std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace elab
