#pragma once

#include <atomic>
#include <cstdio>
#include <string>

namespace tfps {

// Non-fatal diagnostics (e.g. a field that is not numerically periodic at the
// window boundary). Default handler writes to stderr; tests install their own.
using WarningHandler = void (*)(const std::string&);

namespace detail {
inline std::atomic<WarningHandler>& warning_handler_slot() {
    static std::atomic<WarningHandler> slot{nullptr};
    return slot;
}
}  // namespace detail

inline void set_warning_handler(WarningHandler h) {
    detail::warning_handler_slot().store(h);
}

inline void warn(const std::string& message) {
    if (WarningHandler h = detail::warning_handler_slot().load()) {
        h(message);
    } else {
        std::fprintf(stderr, "tfps: warning: %s\n", message.c_str());
    }
}

}  // namespace tfps
