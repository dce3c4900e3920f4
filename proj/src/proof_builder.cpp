#include "proof_builder.hpp"

#include <algorithm>
#include <functional>

namespace cyclic::detail {

namespace {

const Letter kX{"x"};
const Letter kY{"y"};

Letters slice(const Letters& w, std::size_t from, std::size_t to) {
    return Letters(w.begin() + static_cast<std::ptrdiff_t>(from),
                   w.begin() + static_cast<std::ptrdiff_t>(to));
}

}  // namespace

StepIndex ProofBuilder::push(Step step) {
    const StepIndex self = steps_.size();
    conclusions_.push_back(apply_step(params_, step, self, conclusions_));
    steps_.push_back(std::move(step));
    return self;
}

StepIndex ProofBuilder::axiom(const BasisAxiom& a) {
    const auto key = std::make_pair(static_cast<int>(a.kind), a.r);
    if (auto it = axioms_.find(key); it != axioms_.end()) return it->second;
    const StepIndex i = push(rule::Axiom{a});
    axioms_.emplace(key, i);
    return i;
}

StepIndex ProofBuilder::reflexivity(const Letters& w) { return push(rule::Reflexivity{w}); }

StepIndex ProofBuilder::substitute(StepIndex premise, const std::map<Letter, Letters>& images) {
    std::map<Letter, Letters> used;
    bool trivial = true;
    for (const Letter& x : content(conclusion(premise))) {
        const Letters& image = images.at(x);
        trivial = trivial && image.size() == 1 && image.front() == x;
        used.emplace(x, image);
    }
    if (trivial) return premise;
    return push(rule::Substitute{premise, std::move(used)});
}

StepIndex ProofBuilder::mul_left(StepIndex premise, const Letters& w) {
    if (w.empty()) return premise;
    return push(rule::MulLeft{premise, w});
}

StepIndex ProofBuilder::mul_right(StepIndex premise, const Letters& w) {
    if (w.empty()) return premise;
    return push(rule::MulRight{premise, w});
}

StepIndex ProofBuilder::embed(StepIndex premise, const Letters& prefix, const Letters& suffix) {
    return mul_right(mul_left(premise, prefix), suffix);
}

StepIndex ProofBuilder::symmetry(StepIndex premise) {
    if (const auto* s = std::get_if<rule::Symmetry>(&steps_.at(premise))) return s->premise;
    if (auto it = symmetric_.find(premise); it != symmetric_.end()) return it->second;
    const StepIndex i = push(rule::Symmetry{premise});
    symmetric_.emplace(premise, i);
    return i;
}

StepIndex ProofBuilder::transitivity(StepIndex left, StepIndex right) {
    return push(rule::Transitivity{left, right});
}

std::optional<StepIndex> ProofBuilder::chain(std::optional<StepIndex> left,
                                             std::optional<StepIndex> right) {
    if (!left) return right;
    if (!right) return left;
    return transitivity(*left, *right);
}

StepIndex ProofBuilder::swap_instance(const Letter& a, const Letter& b) {
    const auto key = std::make_pair(a, b);
    if (auto it = swaps_.find(key); it != swaps_.end()) return it->second;
    const StepIndex i = substitute(axiom(BasisAxiom::com()), {{kX, {a}}, {kY, {b}}});
    swaps_.emplace(key, i);
    return i;
}

std::optional<StepIndex> ProofBuilder::permute(const Letters& from, const Letters& to) {
    if (occurrences(from) != occurrences(to)) {
        throw ContractViolation("permute: '" + render_word(to) + "' is not a permutation of '" +
                                render_word(from) + "'");
    }
    Letters current = from;
    std::optional<StepIndex> proof;
    for (std::size_t i = 0; i < current.size(); ++i) {
        if (current[i] == to[i]) continue;
        std::size_t j = i + 1;
        while (current[j] != to[i]) ++j;
        for (; j > i; --j) {
            const StepIndex swap = swap_instance(current[j - 1], current[j]);
            const StepIndex step = embed(swap, slice(current, 0, j - 1),
                                         slice(current, j + 1, current.size()));
            std::swap(current[j - 1], current[j]);
            proof = chain(proof, step);
        }
    }
    return proof;
}

StepIndex ProofBuilder::equal_power() {
    if (equal_power_) return *equal_power_;
    const std::size_t h = params_.index;
    const std::size_t d = params_.period;
    if (h > d) throw ContractViolation("x^d = y^d needs h <= d");

    // phi with every tail letter sent to y, then padded on the right:
    // x^d y^d = y^d.
    std::map<Letter, Letters> images{{kX, {kX}}};
    for (const Letter& t : fresh_letters(h)) images.emplace(t, Letters{kY});
    const StepIndex tails_to_y = substitute(axiom(BasisAxiom::phi()), images);
    const StepIndex absorb = mul_right(tails_to_y, power(kY, d - h));
    // y^d x^d = x^d
    const StepIndex absorb_swapped = substitute(absorb, {{kX, {kY}}, {kY, {kX}}});
    // x^d y^d = y^d x^d
    const StepIndex commute =
        substitute(axiom(BasisAxiom::com()), {{kX, power(kX, d)}, {kY, power(kY, d)}});

    const StepIndex left = transitivity(symmetry(absorb_swapped), symmetry(commute));
    equal_power_ = transitivity(left, absorb);
    return *equal_power_;
}

StepIndex ProofBuilder::equal_power_tail() {
    if (equal_power_tail_) return *equal_power_tail_;
    const std::size_t h = params_.index;
    const std::size_t d = params_.period;
    if (h <= d) throw ContractViolation("the tailed equal-power identity needs h > d");

    const Letters phi_tail = fresh_letters(h);
    const Letters tail = fresh_letters(h - d);
    // x^d y^d T = y^d T
    std::map<Letter, Letters> images{{kX, {kX}}};
    for (std::size_t i = 0; i < h; ++i) {
        images.emplace(phi_tail[i], i < d ? Letters{kY} : Letters{tail[i - d]});
    }
    const StepIndex absorb = substitute(axiom(BasisAxiom::phi()), images);
    // y^d x^d T = x^d T
    std::map<Letter, Letters> swap{{kX, {kY}}, {kY, {kX}}};
    for (const Letter& t : tail) swap.emplace(t, Letters{t});
    const StepIndex absorb_swapped = substitute(absorb, swap);
    // x^d y^d T = y^d x^d T
    const StepIndex commute = mul_right(
        substitute(axiom(BasisAxiom::com()), {{kX, power(kX, d)}, {kY, power(kY, d)}}), tail);

    const StepIndex left = transitivity(symmetry(absorb), commute);
    equal_power_tail_ = transitivity(left, absorb_swapped);
    return *equal_power_tail_;
}

Certificate ProofBuilder::finish(StepIndex goal) const {
    auto premises = [](const Step& s) {
        return std::visit(
            [](const auto& r) -> std::vector<StepIndex> {
                using T = std::decay_t<decltype(r)>;
                if constexpr (std::is_same_v<T, rule::Transitivity>) {
                    return {r.left, r.right};
                } else if constexpr (std::is_same_v<T, rule::Axiom> ||
                                     std::is_same_v<T, rule::Reflexivity>) {
                    return {};
                } else {
                    return {r.premise};
                }
            },
            s);
    };

    std::vector<bool> live(goal + 1, false);
    live[goal] = true;
    for (StepIndex i = goal + 1; i-- > 0;) {
        if (!live[i]) continue;
        for (StepIndex j : premises(steps_[i])) live[j] = true;
    }
    std::vector<StepIndex> renumber(goal + 1, 0);
    Certificate cert{params_, {}};
    for (StepIndex i = 0; i <= goal; ++i) {
        if (!live[i]) continue;
        renumber[i] = cert.steps.size();
        Step s = steps_[i];
        std::visit(
            [&](auto& r) {
                using T = std::decay_t<decltype(r)>;
                if constexpr (std::is_same_v<T, rule::Transitivity>) {
                    r.left = renumber[r.left];
                    r.right = renumber[r.right];
                } else if constexpr (!std::is_same_v<T, rule::Axiom> &&
                                     !std::is_same_v<T, rule::Reflexivity>) {
                    r.premise = renumber[r.premise];
                }
            },
            s);
        cert.steps.push_back(std::move(s));
    }
    return cert;
}

Letters arrange(const Letters& word, const Letters& front) {
    Occurrences pending = occurrences(front);
    Letters out = front;
    for (const Letter& x : word) {
        auto it = pending.find(x);
        if (it != pending.end() && it->second > 0) {
            --it->second;
        } else {
            out.push_back(x);
        }
    }
    if (std::any_of(pending.begin(), pending.end(), [](const auto& kv) { return kv.second > 0; })) {
        throw ContractViolation("arrange: '" + render_word(word) + "' does not contain '" +
                                render_word(front) + "'");
    }
    return out;
}

}  // namespace cyclic::detail
