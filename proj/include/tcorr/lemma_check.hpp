#pragma once

#include "tcorr/tower.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tcorr {

struct IdentityCheck {
    std::string name;
    bool supported = true;     // false for rel_trace_xd in case B
    bool exhaustive = false;
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;

    bool passed() const { return !supported || failures == 0; }
};

struct LemmaCheckOptions {
    std::uint64_t seed = 1;
    /// (z, x) pairs are enumerated exhaustively up to these sizes, sampled above.
    std::uint64_t rel_pair_limit = 1'000'000;
    std::uint64_t abs_pair_limit = 1'000'000'000;
    std::uint64_t rel_samples = 100'000;
    /// Random z values when abs pairs are sampled; each is paired with every x.
    std::uint64_t abs_z_samples = 100'000;
};

/// Compares the closed trace forms with traces computed by powering in the
/// tower:
///   rel_trace_xd  Tr_r^n(x^d), every x (case A only)
///   rel_trace_zx  Tr_r^n(zx)
///   abs_trace_xd  Tr_1^n(x^d), every x
///   abs_trace_zx  Tr_1^n(zx)
std::vector<IdentityCheck> check_trace_identities(const TowerCtx& tower, const LemmaCheckOptions& opts = {});

}  // namespace tcorr
