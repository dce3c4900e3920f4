#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cyclic/derivation.hpp"

namespace cyclic::detail {

/// Appends deduction steps to a certificate under construction and tracks
/// each step's conclusion. Steps whose effect is trivial (identity
/// substitutions, empty multipliers, double symmetry) are elided, and
/// frequently reused steps are memoized.
class ProofBuilder {
public:
    explicit ProofBuilder(const CyclicParams& p) : params_(p) {}

    const CyclicParams& params() const noexcept { return params_; }
    const Identity& conclusion(StepIndex i) const { return conclusions_.at(i); }

    StepIndex axiom(const BasisAxiom& a);
    StepIndex reflexivity(const Letters& w);
    StepIndex substitute(StepIndex premise, const std::map<Letter, Letters>& images);
    StepIndex mul_left(StepIndex premise, const Letters& w);
    StepIndex mul_right(StepIndex premise, const Letters& w);
    /// prefix . lhs . suffix = prefix . rhs . suffix
    StepIndex embed(StepIndex premise, const Letters& prefix, const Letters& suffix);
    StepIndex symmetry(StepIndex premise);
    StepIndex transitivity(StepIndex left, StepIndex right);

    /// Transitive composition where either link may be absent.
    std::optional<StepIndex> chain(std::optional<StepIndex> left, std::optional<StepIndex> right);

    /// `a b = b a` as an instance of the commutative law.
    StepIndex swap_instance(const Letter& a, const Letter& b);

    /// Proof of `from = to` for a permutation `to` of `from` by adjacent
    /// transpositions; nullopt when the words already coincide.
    std::optional<StepIndex> permute(const Letters& from, const Letters& to);

    /// x^d = y^d (needs h <= d), derived once from com and phi.
    StepIndex equal_power();
    /// y^d x1..x(h-d) = x^d x1..x(h-d) (needs h > d), derived once from com and phi.
    StepIndex equal_power_tail();

    /// Certificate containing only the steps `goal` depends on, renumbered,
    /// with `goal` last.
    Certificate finish(StepIndex goal) const;

private:
    StepIndex push(Step step);

    CyclicParams params_;
    std::vector<Step> steps_;
    std::vector<Identity> conclusions_;
    std::map<std::pair<int, std::size_t>, StepIndex> axioms_;
    std::map<std::pair<Letter, Letter>, StepIndex> swaps_;
    std::map<StepIndex, StepIndex> symmetric_;
    std::optional<StepIndex> equal_power_;
    std::optional<StepIndex> equal_power_tail_;
};

/// `front` followed by the letters of `word` left after removing the leftmost
/// occurrence of each letter of `front`. Throws ContractViolation when `word`
/// lacks some of them.
Letters arrange(const Letters& word, const Letters& front);

}  // namespace cyclic::detail
