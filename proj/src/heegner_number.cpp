#include "heegner/heegner_number.hpp"

#include <algorithm>
#include <string>

#include "heegner/error.hpp"

namespace heegner {

HeegnerNumber::HeegnerNumber(int value) : value_(value) {
  if (!is_heegner(value)) {
    throw Error(ErrorCode::NotHeegner,
                std::to_string(value) + " is not one of 1, 2, 3, 7, 11, 19, 43, 67, 163");
  }
}

bool HeegnerNumber::is_heegner(int value) noexcept {
  return std::find(kAll.begin(), kAll.end(), value) != kAll.end();
}

}  // namespace heegner
