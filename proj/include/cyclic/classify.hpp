#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cyclic/semigroup.hpp"
#include "cyclic/words.hpp"

namespace cyclic {

enum class Classification {
    Balanced,
    DBalancedLong,
    DBalancedUniform,
    NotDBalanced,
    NeitherLongNorUniform,
};

std::string_view to_string(Classification c);

/// Outcome of the closed-form decision procedure.
///
/// `letter` names the offending letter for NotDBalanced and the letter
/// attaining the minimal unbalanced occurrence count for DBalancedUniform.
/// `length` is the shorter side's length for the long/short cases and the
/// minimal unbalanced occurrence count for DBalancedUniform.
struct Verdict {
    bool holds = false;
    Classification classification = Classification::NotDBalanced;
    std::optional<Letter> letter;
    std::optional<std::size_t> length;
    std::string reason;
};

/// Both sides have length at least h.
bool is_long(std::size_t h, const Identity& id);

/// Smallest of occ(x,lhs), occ(x,rhs) over the unbalanced letters x, with the
/// lexicographically least letter attaining it. Throws ContractViolation on a
/// balanced identity.
std::pair<std::size_t, Letter> min_unbalanced_occurrence(const Identity& id);

/// Equal contents, equal lengths, and |lhs| >= h - min_unbalanced_occurrence.
/// Throws ContractViolation on a balanced identity.
bool is_uniform(std::size_t h, const Identity& id);

bool holds_in_nilpotent(std::size_t h, const Identity& id);
bool holds_in_group(std::size_t d, const Identity& id);
bool holds_in_infinite(const Identity& id);

Verdict decide(const CyclicParams& p, const Identity& id);

}  // namespace cyclic
