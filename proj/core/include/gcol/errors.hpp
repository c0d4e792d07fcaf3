#pragma once

#include <stdexcept>
#include <string>

namespace gcol {

/// Deterministic-mode enumeration would exceed the configured budget.
/// Raised instead of silently answering No.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

/// A bound that only holds on K_{i,j}-free inputs was violated at runtime,
/// i.e. the caller's freeness declaration was wrong.
struct kij_error : std::runtime_error {
    explicit kij_error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {
[[noreturn]] inline void check_failed(const char* expr, const char* file, int line) {
    throw std::logic_error(std::string("invariant failed: ") + expr + " at " + file + ":" +
                           std::to_string(line));
}
} // namespace detail

/// Runtime invariant check, active in every build type. Used for the
/// structural guarantees the algorithms promise (claim properties, size
/// bounds, residual degrees), not for caller-input validation.
#define GCOL_CHECK(expr) \
    ((expr) ? (void)0 : ::gcol::detail::check_failed(#expr, __FILE__, __LINE__))

} // namespace gcol
