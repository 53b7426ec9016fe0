#pragma once

#include "random.hpp"

#include <doctest.h>
#include <fano3lab/errors.hpp>

#include <string>

// CHECK that f throws fano3lab::Error of the given kind
#define CHECK_KIND(expr, k)                                   \
    do {                                                      \
        std::string kind_seen;                                \
        try {                                                 \
            (void)(expr);                                     \
        } catch (const fano3lab::Error& e) {                  \
            kind_seen = e.kind();                             \
        }                                                     \
        CHECK_MESSAGE(kind_seen == (k), "kind: " << kind_seen); \
    } while (0)

