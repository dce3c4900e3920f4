#include "cyclic/derivation.hpp"

#include <type_traits>

namespace cyclic {

StepError::StepError(StepIndex step, const std::string& reason)
    : std::runtime_error("step " + std::to_string(step) + ": " + reason),
      step_(step),
      reason_(reason) {}

namespace {

const Identity& premise_of(StepIndex premise, StepIndex self, std::span<const Identity> earlier) {
    if (premise >= self) {
        throw StepError(self, "references step " + std::to_string(premise) +
                                  " which does not precede it");
    }
    if (premise >= earlier.size()) {
        throw StepError(self, "references unknown step " + std::to_string(premise));
    }
    return earlier[premise];
}

Word nonempty(const Letters& w, StepIndex self, const char* what) {
    if (w.empty()) throw StepError(self, std::string(what) + " is empty");
    return Word(w);
}

Word substitute(const Word& w, const std::map<Letter, Letters>& images) {
    Letters out;
    for (const Letter& x : w.letters()) {
        const Letters& image = images.at(x);
        out.insert(out.end(), image.begin(), image.end());
    }
    return Word(std::move(out));
}

}  // namespace

Identity apply_step(const CyclicParams& p, const Step& step, StepIndex self,
                    std::span<const Identity> earlier) {
    return std::visit(
        [&](const auto& s) -> Identity {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, rule::Axiom>) {
                if (!is_valid_axiom(p, s.axiom)) {
                    throw StepError(self, "axiom " + tag(s.axiom) + " is not in the basis for h=" +
                                              std::to_string(p.index) +
                                              ", d=" + std::to_string(p.period));
                }
                return axiom_identity(p, s.axiom);
            } else if constexpr (std::is_same_v<T, rule::Reflexivity>) {
                Word w = nonempty(s.word, self, "reflexivity word");
                return Identity{w, w};
            } else if constexpr (std::is_same_v<T, rule::Substitute>) {
                const Identity& prem = premise_of(s.premise, self, earlier);
                for (const auto& [x, image] : s.images) {
                    if (image.empty()) {
                        throw StepError(self, "image of letter " + x.name() + " is empty");
                    }
                }
                for (const Letter& x : content(prem)) {
                    if (!s.images.contains(x)) {
                        throw StepError(self, "substitution has no image for letter " + x.name());
                    }
                }
                return Identity{substitute(prem.lhs, s.images), substitute(prem.rhs, s.images)};
            } else if constexpr (std::is_same_v<T, rule::MulLeft>) {
                const Identity& prem = premise_of(s.premise, self, earlier);
                nonempty(s.word, self, "left multiplier");
                return Identity{Word(concat(s.word, prem.lhs.letters())),
                                Word(concat(s.word, prem.rhs.letters()))};
            } else if constexpr (std::is_same_v<T, rule::MulRight>) {
                const Identity& prem = premise_of(s.premise, self, earlier);
                nonempty(s.word, self, "right multiplier");
                return Identity{Word(concat(prem.lhs.letters(), s.word)),
                                Word(concat(prem.rhs.letters(), s.word))};
            } else if constexpr (std::is_same_v<T, rule::Symmetry>) {
                const Identity& prem = premise_of(s.premise, self, earlier);
                return Identity{prem.rhs, prem.lhs};
            } else {
                static_assert(std::is_same_v<T, rule::Transitivity>);
                const Identity& left = premise_of(s.left, self, earlier);
                const Identity& right = premise_of(s.right, self, earlier);
                if (left.rhs != right.lhs) {
                    throw StepError(self, "transitivity middle words differ: '" +
                                              render_word(left.rhs) + "' vs '" +
                                              render_word(right.lhs) + "'");
                }
                return Identity{left.lhs, right.rhs};
            }
        },
        step);
}

Identity step_conclusion(const Certificate& cert, StepIndex i) {
    if (i >= cert.steps.size()) {
        throw StepError(i, "no such step; certificate has " + std::to_string(cert.steps.size()));
    }
    std::vector<Identity> conclusions;
    conclusions.reserve(i + 1);
    for (StepIndex k = 0; k <= i; ++k) {
        conclusions.push_back(apply_step(cert.params, cert.steps[k], k, conclusions));
    }
    return conclusions.back();
}

CheckResult check_certificate(const Certificate& cert, const Identity& goal) {
    CheckResult result;
    if (cert.steps.empty()) {
        result.failing_step = 0;
        result.reason = "certificate has no steps";
        return result;
    }
    std::vector<Identity> conclusions;
    conclusions.reserve(cert.steps.size());
    for (StepIndex k = 0; k < cert.steps.size(); ++k) {
        try {
            conclusions.push_back(apply_step(cert.params, cert.steps[k], k, conclusions));
        } catch (const StepError& e) {
            result.failing_step = e.step();
            result.reason = e.reason();
            return result;
        }
    }
    result.conclusion = conclusions.back();
    if (conclusions.back() != goal) {
        result.failing_step = cert.steps.size() - 1;
        result.reason = "conclusion '" + render_identity(conclusions.back()) +
                        "' differs from goal '" + render_identity(goal) + "'";
        return result;
    }
    result.accepted = true;
    return result;
}

std::vector<BasisAxiom> axioms_used(const Certificate& cert) {
    std::vector<BasisAxiom> out;
    for (const Step& s : cert.steps) {
        if (const auto* a = std::get_if<rule::Axiom>(&s)) out.push_back(a->axiom);
    }
    return out;
}

}  // namespace cyclic
