#pragma once

#include <doctest.h>

#include <random>

#include "atlas/error.hpp"

// Checks that `expr` throws atlas::Error carrying `code`.
#define CHECK_ERRC(expr, errc)                                   \
  do {                                                           \
    bool thrown_ = false;                                        \
    try {                                                        \
      (void)(expr);                                              \
    } catch (const atlas::Error& e_) {                           \
      thrown_ = true;                                            \
      CHECK_MESSAGE(e_.code() == (errc), atlas::errc_name(e_.code())); \
    }                                                            \
    CHECK_MESSAGE(thrown_, "no exception from " #expr);          \
  } while (0)

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(0x5eed2024);
  return g;
}
