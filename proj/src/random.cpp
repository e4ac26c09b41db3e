#include "heegner/random.hpp"

#include "heegner/error.hpp"

namespace heegner {

SeededRandom SeededRandom::from_entropy() {
  std::random_device device;
  const std::uint64_t seed = (static_cast<std::uint64_t>(device()) << 32) ^ device();
  return SeededRandom(seed);
}

BigInt SeededRandom::uniform(const BigInt& lo, const BigInt& hi) {
  if (lo > hi) throw Error(ErrorCode::InvalidRange, "uniform: lo > hi");
  const BigInt span = hi - lo;  // draw from [0, span]
  if (span == 0) return lo;
  const std::size_t bits = bit_length(span);
  const std::size_t words = (bits + 63) / 64;
  const std::size_t top_bits = bits - 64 * (words - 1);
  const std::uint64_t top_mask =
      top_bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << top_bits) - 1;

  BigInt draw;
  do {
    draw = 0;
    for (std::size_t i = 0; i < words; ++i) {
      std::uint64_t word = engine_();
      if (i == 0) word &= top_mask;
      draw <<= 64;
      // mpz_class has no uint64 ctor on every platform; add in two halves.
      draw += BigInt(static_cast<unsigned long>(word >> 32)) << 32;
      draw += static_cast<unsigned long>(word & 0xffffffffu);
    }
  } while (draw > span);
  return lo + draw;
}

}  // namespace heegner
