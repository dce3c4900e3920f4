// Constructive derivations over the identity basis of C_{h,d}.
//
// A satisfied identity u = v is proved by rewriting its two sides
// independently until they become permutations of one another, then joining
// them with the commutative law. Each round of rewriting makes at least one
// more letter balanced:
//
//  * long identities, one unbalanced letter x: the excess x^(kd) is absorbed
//    with an instance of phi;
//  * long identities, several unbalanced letters: y^d is traded for x^d with
//    x^d = y^d (h <= d) or its tailed form (h > d) until y is balanced;
//  * uniform identities (h > d+2): x^(r+d) y^r is turned into x^r y^(r+d) with
//    psi[r] until x is balanced.

#include <algorithm>

#include "cyclic/derivation.hpp"
#include "proof_builder.hpp"

namespace cyclic {

namespace {

using detail::arrange;
using detail::ProofBuilder;

const Letter kX{"x"};
const Letter kY{"y"};

Letters slice(const Letters& w, std::size_t from, std::size_t to) {
    return Letters(w.begin() + static_cast<std::ptrdiff_t>(from),
                   w.begin() + static_cast<std::ptrdiff_t>(to));
}

Letters drop(const Letters& w, std::size_t n) { return slice(w, n, w.size()); }

/// One side of the goal together with a proof of `original = word`.
struct Side {
    Letters word;
    std::optional<StepIndex> proof;

    void advance(ProofBuilder& b, std::optional<StepIndex> step) {
        if (!step) return;
        if (b.conclusion(*step).lhs.sequence() != word) {
            throw std::logic_error("derive: rewrite step does not start at the current word");
        }
        proof = b.chain(proof, step);
        word = b.conclusion(*step).rhs.sequence();
    }
};

class Engine {
public:
    Engine(const CyclicParams& p, const Identity& goal)
        : b_(p), lhs_{goal.lhs.sequence(), {}}, rhs_{goal.rhs.sequence(), {}} {}

    Certificate run(std::vector<std::size_t>& trace) {
        const std::size_t h = b_.params().index;
        const bool long_case = lhs_.word.size() >= h && rhs_.word.size() >= h;
        while (true) {
            const std::set<Letter> unbalanced = unbalanced_letters(current());
            trace.push_back(unbalanced.size());
            if (unbalanced.empty()) break;
            if (trace.size() > 1 && trace.back() >= trace[trace.size() - 2]) {
                throw std::logic_error("derive: unbalanced letter count did not decrease");
            }
            if (!long_case) {
                uniform_round();
            } else if (unbalanced.size() == 1) {
                absorb_round(*unbalanced.begin());
            } else {
                auto it = unbalanced.begin();
                const Letter& y = *it++;
                exchange_round(y, *it);
            }
        }
        return join();
    }

private:
    Identity current() const { return {Word(lhs_.word), Word(rhs_.word)}; }

    std::pair<Side*, Side*> excess_side(const Letter& x) {
        if (occ(x, lhs_.word) > occ(x, rhs_.word)) return {&lhs_, &rhs_};
        return {&rhs_, &lhs_};
    }

    // Single unbalanced letter x, both sides of length >= h:
    // x^(kd) w = w is phi under x -> x^k, xi -> i-th letter of w, padded on the
    // right by the rest of w.
    void absorb_round(const Letter& x) {
        const std::size_t h = b_.params().index;
        const std::size_t d = b_.params().period;
        auto [side, other] = excess_side(x);
        const std::size_t excess = occ(x, side->word) - occ(x, other->word);
        const std::size_t k = excess / d;

        const Letters arranged = arrange(side->word, power(x, k * d));
        side->advance(b_, b_.permute(side->word, arranged));

        const Letters rest = drop(arranged, k * d);
        std::map<Letter, Letters> images{{kX, power(x, k)}};
        const Letters phi_tail = fresh_letters(h);
        for (std::size_t i = 0; i < h; ++i) images.emplace(phi_tail[i], Letters{rest[i]});
        const StepIndex instance = b_.substitute(b_.axiom(BasisAxiom::phi()), images);
        side->advance(b_, b_.mul_right(instance, drop(rest, h)));
    }

    // Several unbalanced letters, both sides of length >= h: rewrite y^d as
    // x^d on the side with surplus y until y is balanced.
    void exchange_round(const Letter& y, const Letter& x) {
        const std::size_t h = b_.params().index;
        const std::size_t d = b_.params().period;
        auto [side, other] = excess_side(y);
        while (occ(y, side->word) > occ(y, other->word)) {
            const Letters arranged = arrange(side->word, power(y, d));
            side->advance(b_, b_.permute(side->word, arranged));
            const Letters rest = drop(arranged, d);

            StepIndex step = 0;
            if (h <= d) {
                // x^d = y^d renamed to y^d = x^d.
                const StepIndex instance =
                    b_.substitute(b_.equal_power(), {{kX, Letters{y}}, {kY, Letters{x}}});
                step = b_.mul_right(instance, rest);
            } else {
                std::map<Letter, Letters> images{{kX, Letters{x}}, {kY, Letters{y}}};
                const Letters tail = fresh_letters(h - d);
                for (std::size_t i = 0; i < tail.size(); ++i) {
                    images.emplace(tail[i], Letters{rest[i]});
                }
                const StepIndex instance = b_.substitute(b_.equal_power_tail(), images);
                step = b_.mul_right(instance, drop(rest, h - d));
            }
            side->advance(b_, step);
        }
    }

    // Uniform, not long: x has the least unbalanced occurrence count r and y
    // compensates for it. Each psi application moves d occurrences from x to y
    // on the side where x is in surplus.
    void uniform_round() {
        const std::size_t h = b_.params().index;
        const std::size_t d = b_.params().period;
        const auto [r, x] = min_unbalanced_occurrence(current());
        Side* poor = occ(x, lhs_.word) == r ? &lhs_ : &rhs_;
        Side* rich = poor == &lhs_ ? &rhs_ : &lhs_;

        std::optional<Letter> y;
        for (const Letter& z : std::set<Letter>(poor->word.begin(), poor->word.end())) {
            if (occ(z, poor->word) > occ(z, rich->word)) {
                y = z;
                break;
            }
        }
        if (!y) throw std::logic_error("derive: no compensating letter");

        // psi[r] exists only for r <= floor((h-d)/3); a larger r is handled by
        // the largest psi, whose longer tail still fits in the word.
        const std::size_t rr = std::min(r, max_psi_r(b_.params()));
        const std::size_t head = 2 * rr + d;
        const std::size_t tail_len = h - 3 * rr - d;

        while (occ(x, rich->word) > r) {
            const Letters arranged =
                arrange(rich->word, concat(power(x, rr + d), power(*y, rr)));
            rich->advance(b_, b_.permute(rich->word, arranged));

            std::map<Letter, Letters> images{{kX, Letters{x}}, {kY, Letters{*y}}};
            const Letters tail = fresh_letters(tail_len);
            for (std::size_t i = 0; i < tail_len; ++i) {
                images.emplace(tail[i], Letters{arranged[head + i]});
            }
            const StepIndex instance = b_.substitute(b_.axiom(BasisAxiom::psi(rr)), images);
            rich->advance(b_, b_.mul_right(b_.symmetry(instance), drop(arranged, head + tail_len)));
        }
    }

    Certificate join() {
        const std::optional<StepIndex> bridge = b_.permute(lhs_.word, rhs_.word);
        std::optional<StepIndex> proof = b_.chain(lhs_.proof, bridge);
        if (rhs_.proof) proof = b_.chain(proof, b_.symmetry(*rhs_.proof));
        if (!proof) proof = b_.reflexivity(lhs_.word);
        return b_.finish(*proof);
    }

    ProofBuilder b_;
    Side lhs_;
    Side rhs_;
};

}  // namespace

Certificate derive_balanced(const Identity& id, const CyclicParams& p) {
    if (!is_balanced(id)) {
        throw ContractViolation("derive_balanced: '" + render_identity(id) + "' is not balanced");
    }
    ProofBuilder b(p);
    const std::optional<StepIndex> proof = b.permute(id.lhs.sequence(), id.rhs.sequence());
    return b.finish(proof ? *proof : b.reflexivity(id.lhs.sequence()));
}

Certificate derive_aux_equal_power(const CyclicParams& p) {
    if (p.index > p.period) throw ContractViolation("x^d = y^d needs h <= d");
    ProofBuilder b(p);
    return b.finish(b.equal_power());
}

Certificate derive_aux_equal_power_tail(const CyclicParams& p) {
    if (p.index <= p.period) {
        throw ContractViolation("the tailed equal-power identity needs h > d");
    }
    ProofBuilder b(p);
    return b.finish(b.equal_power_tail());
}

Derivation derive(const CyclicParams& p, const Identity& id) {
    Derivation out;
    out.verdict = decide(p, id);
    if (!out.verdict.holds) return out;
    out.certificate = Engine(p, id).run(out.unbalanced_trace);
    return out;
}

}  // namespace cyclic
