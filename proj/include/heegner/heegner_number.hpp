#pragma once

#include <array>
#include <compare>

namespace heegner {

/// One of the nine d for which Q(sqrt(-d)) has class number one.
class HeegnerNumber {
 public:
  static constexpr std::array<int, 9> kAll = {1, 2, 3, 7, 11, 19, 43, 67, 163};

  /// Throws Error(NotHeegner) when value is not in kAll.
  explicit HeegnerNumber(int value);

  int value() const noexcept { return value_; }

  /// True for H = 3 mod 4, the only H for which (A^2 + H)/4 is integral.
  bool integral_constant() const noexcept { return value_ % 4 == 3; }

  static bool is_heegner(int value) noexcept;

  friend auto operator<=>(const HeegnerNumber&, const HeegnerNumber&) = default;

 private:
  int value_;
};

}  // namespace heegner
