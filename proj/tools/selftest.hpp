#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cyclic/semigroup.hpp"
#include "cyclic/words.hpp"

namespace cycid {

struct SelftestOptions {
    std::size_t max_sum = 6;      // all (h,d) with h+d <= max_sum
    std::size_t max_letters = 2;  // alphabet x, y, z, ...
    std::size_t max_length = 5;   // 1 <= |u|,|v| <= max_length
    std::uint64_t budget = cyclic::kDefaultOracleBudget;
    /// Mutation hook: flip every decide verdict. The sweep must then fail.
    bool corrupt_decide = false;
};

struct SelftestRow {
    cyclic::CyclicParams params;
    std::size_t identities = 0;
    std::size_t holds = 0;
    std::size_t certificates = 0;
};

struct SelftestReport {
    std::vector<SelftestRow> rows;
    std::size_t identities = 0;
    std::size_t holds = 0;
    std::size_t certificates = 0;
    /// First disagreement, as "h=.., d=..: identity: what".
    std::optional<std::string> disagreement;

    bool ok() const { return !disagreement; }
};

/// The first n letters of x, y, z, u, v, w, t1, t2, ...
std::vector<cyclic::Letter> sweep_alphabet(std::size_t n);

/// All words over the alphabet with lengths 1..max_length, shortest first.
std::vector<cyclic::Word> enumerate_words(const std::vector<cyclic::Letter>& alphabet,
                                          std::size_t max_length);

/// Cross-checks oracle, decide, the subdirect decomposition, derive and the
/// certificate checker on every identity of the sweep. Stops at the first
/// disagreement. Throws cyclic::BudgetExceeded.
SelftestReport run_selftest(const SelftestOptions& options);

void print_report(const SelftestReport& report, std::ostream& out);

}  // namespace cycid
