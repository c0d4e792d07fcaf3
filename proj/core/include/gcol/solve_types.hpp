#pragma once

#include <cstdint>

namespace gcol {

enum class SolveMode { rand, det };

enum class SolveAnswer { yes, no, no_witness_found };

inline const char* to_string(SolveAnswer a) {
    switch (a) {
        case SolveAnswer::yes: return "yes";
        case SolveAnswer::no: return "no";
        default: return "no_witness_found";
    }
}

/// Knobs shared by the solvers. All randomness flows from `seed`; a fixed
/// seed reproduces the full transcript regardless of `threads`.
struct SolveConfig {
    uint64_t seed = 0xC0FFEE;
    uint64_t trials = 2000;        ///< randomized-mode attempts
    uint64_t budget = 200'000'000; ///< det-mode work units before budget_error
    int threads = 1;
    int certified_cap = 20; ///< max n for certified covering families
    int max_grundy_k = 4;   ///< desk-scale guard for the Grundy solver
};

} // namespace gcol
