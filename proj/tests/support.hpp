#pragma once

#include <string>

#include <doctest.h>

#include "torelli/error.hpp"

// Expects `expr` to throw torelli::Error with the given code.
#define CHECK_CODE(expr, expected)                                  \
    do {                                                            \
        std::string got_ = "<no throw>";                            \
        try {                                                       \
            (void)(expr);                                           \
        } catch (const torelli::Error& e_) {                        \
            got_ = e_.code();                                       \
        }                                                           \
        CHECK(got_ == std::string(expected));                       \
    } while (0)
