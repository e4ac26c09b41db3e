#pragma once

#include <doctest.h>

#include "heegner/error.hpp"

// Passes when `expr` throws heegner::Error carrying `expected_code`.
#define CHECK_ERROR_CODE(expr, expected_code)                          \
  do {                                                                 \
    bool thrown_ = false;                                              \
    try {                                                              \
      (void)(expr);                                                    \
    } catch (const ::heegner::Error& e_) {                             \
      thrown_ = true;                                                  \
      CHECK_MESSAGE(e_.code() == (expected_code), e_.what());          \
    }                                                                  \
    CHECK_MESSAGE(thrown_, "expected " #expected_code " from " #expr); \
  } while (false)
