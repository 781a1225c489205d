#pragma once

#include <doctest.h>

#include "qrec/error.hpp"

// Asserts that `expr` throws qrec::Error of the given kind.
#define CHECK_KIND(expr, k)                              \
  do {                                                   \
    bool caught_ = false;                                \
    try {                                                \
      (void)(expr);                                      \
    } catch (const qrec::Error& e_) {                    \
      caught_ = true;                                    \
      CHECK_MESSAGE(e_.kind() == (k), e_.what());        \
    }                                                    \
    CHECK_MESSAGE(caught_, "no qrec::Error from " #expr); \
  } while (0)
