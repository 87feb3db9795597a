#pragma once

// Exhaustive identity checks over all trees up to a degree bound. Each suite
// returns its checks in a fixed order; a check stops at its first counterexample.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace planar::verify {

struct CheckResult {
    std::string suite;
    std::string name;
    std::size_t cases = 0;
    std::optional<std::string> counterexample; // empty when the check passed

    bool passed() const noexcept { return !counterexample.has_value(); }
};

// binom1, binom2, powers, delta, derive, roots, catalan
const std::vector<std::string>& suite_names();

bool is_suite(std::string_view name);

// Runs one suite, or every suite for "all". Throws std::invalid_argument for an
// unknown suite name.
std::vector<CheckResult> run_suite(std::string_view suite, std::size_t max_degree);

} // namespace planar::verify
