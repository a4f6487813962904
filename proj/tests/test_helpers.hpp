#pragma once

#include <gtest/gtest.h>

#include "phinlab/error.hpp"

// Runs `body` and checks it throws phinlab::Error of the given kind.
#define EXPECT_ERROR_KIND(body, expected_kind)                        \
  do {                                                                \
    try {                                                             \
      body;                                                           \
      ADD_FAILURE() << "no error thrown";                             \
    } catch (const ::phinlab::Error& e) {                             \
      EXPECT_EQ(e.kind(), expected_kind) << e.what();                 \
    }                                                                 \
  } while (0)
