#pragma once

#include "ldp/error.hpp"

#include <doctest.h>

#define CHECK_ERRC(expr, errc)                                                                                      \
    do {                                                                                                            \
        try {                                                                                                       \
            (void)(expr);                                                                                           \
            FAIL_CHECK("expected ldp::Error " #errc);                                                               \
        } catch (const ldp::Error& caught_) {                                                                       \
            CHECK_MESSAGE(caught_.code() == (errc), "got " << ldp::to_string(caught_.code()));                      \
        }                                                                                                           \
    } while (0)

#define CHECK_ERRC_TAG(expr, errc, tag_text)                                                                        \
    do {                                                                                                            \
        try {                                                                                                       \
            (void)(expr);                                                                                           \
            FAIL_CHECK("expected ldp::Error " #errc);                                                               \
        } catch (const ldp::Error& caught_) {                                                                       \
            CHECK_MESSAGE(caught_.code() == (errc), "got " << ldp::to_string(caught_.code()));                      \
            CHECK(caught_.tag() == std::string(tag_text));                                                          \
        }                                                                                                           \
    } while (0)
