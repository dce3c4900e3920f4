#include "cyclic/classify.hpp"

#include <algorithm>

namespace cyclic {

std::string_view to_string(Classification c) {
    switch (c) {
        case Classification::Balanced: return "balanced";
        case Classification::DBalancedLong: return "d-balanced, long";
        case Classification::DBalancedUniform: return "d-balanced, uniform";
        case Classification::NotDBalanced: return "not d-balanced";
        case Classification::NeitherLongNorUniform: return "d-balanced, neither long nor uniform";
    }
    return "?";
}

bool is_long(std::size_t h, const Identity& id) {
    return id.lhs.length() >= h && id.rhs.length() >= h;
}

std::pair<std::size_t, Letter> min_unbalanced_occurrence(const Identity& id) {
    const std::set<Letter> unbalanced = unbalanced_letters(id);
    if (unbalanced.empty()) {
        throw ContractViolation("uniformity is undefined for balanced identities");
    }
    std::optional<std::pair<std::size_t, Letter>> best;
    for (const Letter& x : unbalanced) {
        const std::size_t m = std::min(occ(x, id.lhs), occ(x, id.rhs));
        if (!best || m < best->first) best.emplace(m, x);
    }
    return *best;
}

bool is_uniform(std::size_t h, const Identity& id) {
    const std::size_t m = min_unbalanced_occurrence(id).first;
    if (id.lhs.content() != id.rhs.content()) return false;
    if (id.lhs.length() != id.rhs.length()) return false;
    return id.lhs.length() + m >= h;
}

bool holds_in_nilpotent(std::size_t h, const Identity& id) {
    return is_balanced(id) || is_long(h, id) || is_uniform(h, id);
}

bool holds_in_group(std::size_t d, const Identity& id) { return is_d_balanced(id, d); }

bool holds_in_infinite(const Identity& id) { return is_balanced(id); }

namespace {

std::string uniform_failure(const Identity& id) {
    if (id.lhs.content() != id.rhs.content()) return "sides have different contents";
    if (id.lhs.length() != id.rhs.length()) return "sides have different lengths";
    return "uniform length bound fails";
}

}  // namespace

Verdict decide(const CyclicParams& p, const Identity& id) {
    const std::size_t h = p.index;
    const std::size_t d = p.period;
    Verdict v;
    const std::set<Letter> unbalanced = unbalanced_letters(id);
    if (unbalanced.empty()) {
        v.holds = true;
        v.classification = Classification::Balanced;
        return v;
    }
    for (const Letter& x : unbalanced) {
        if (occ(x, id.lhs) % d != occ(x, id.rhs) % d) {
            v.classification = Classification::NotDBalanced;
            v.letter = x;
            v.reason = "letter " + x.name() + " occurs " + std::to_string(occ(x, id.lhs)) +
                       " vs " + std::to_string(occ(x, id.rhs)) + " times, not congruent mod " +
                       std::to_string(d);
            return v;
        }
    }
    const std::size_t shorter = std::min(id.lhs.length(), id.rhs.length());
    if (is_long(h, id)) {
        v.holds = true;
        v.classification = Classification::DBalancedLong;
        v.length = shorter;
        return v;
    }
    if (h > d + 2 && is_uniform(h, id)) {
        auto [m, x] = min_unbalanced_occurrence(id);
        v.holds = true;
        v.classification = Classification::DBalancedUniform;
        v.letter = x;
        v.length = m;
        return v;
    }
    v.classification = Classification::NeitherLongNorUniform;
    v.length = shorter;
    v.reason = "side of length " + std::to_string(shorter) + " < " + std::to_string(h) + " and ";
    v.reason += uniform_failure(id);
    return v;
}

}  // namespace cyclic
