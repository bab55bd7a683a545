#pragma once

#include <functional>

#include "sol3/error.hpp"

// Error code thrown by f, or nullopt-like sentinel when nothing is thrown.
inline int thrown_code(const std::function<void()>& f)
{
    try {
        f();
    } catch (const sol3::Error& e) {
        return static_cast<int>(e.code());
    }
    return -1;
}

#define CHECK_ERROR(expr, code) CHECK(thrown_code([&] { (void)(expr); }) == static_cast<int>(code))
