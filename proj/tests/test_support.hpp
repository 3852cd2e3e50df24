#pragma once

#include <optional>

#include "hadclique/error.hpp"

namespace hadclique::testing {

// Kind of the hadclique::Error thrown by f, or nullopt when f returns normally.
template <class F>
std::optional<ErrorKind> thrown_kind(F&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

} // namespace hadclique::testing
