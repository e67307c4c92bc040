#include "erosion_lab/rng.hpp"

namespace elab {

namespace {

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

void RngSequence::seed(std::uint64_t s) {
  for (auto& w : s_) w = splitmix64(s);
}

std::uint64_t RngSequence::next() {
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

std::uint32_t RngSequence::uniform_int(std::uint32_t n) {
  if (n <= 1) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t r;
  do {
    r = next();
  } while (r >= limit);
  return static_cast<std::uint32_t>(r % n);
}

RngSequence RngStream::walker(std::uint64_t walker_id) const {
  std::uint64_t s = master_seed;
  std::uint64_t a = splitmix64(s);
  s ^= replica * 0xd1342543de82ef95ull + 0x2545f4914f6cdd1dull;
  std::uint64_t b = splitmix64(s);
  s ^= walker_id * 0xda942042e4dd58b5ull + 0x9e6c63d0a9e2b13bull;
  std::uint64_t c = splitmix64(s);
  return RngSequence(a ^ rotl(b, 21) ^ rotl(c, 42));
}

}  // namespace elab
