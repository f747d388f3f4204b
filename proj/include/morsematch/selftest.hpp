#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace morsematch {

struct VerificationItem {
    int number = 0;
    std::string title;
    bool passed = false;
    std::string detail;  // problems on failure, a short data note otherwise
};

struct VerificationReport {
    std::vector<VerificationItem> items;

    bool all_passed() const;
    std::string text() const;  // one line per item, deterministic for a fixed seed
};

// The standard verification battery over the published values: counts,
// boundaries, homology, cancellation and the random-field equivalence sweep
// (driven by `seed`). Determinism is the caller's check: build the report
// twice and compare the bytes.
VerificationReport run_verification(std::uint64_t seed = 20260819);

}  // namespace morsematch
