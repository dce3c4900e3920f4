#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cyclic/basis.hpp"
#include "cyclic/classify.hpp"
#include "cyclic/semigroup.hpp"
#include "cyclic/words.hpp"

namespace cyclic {

using StepIndex = std::size_t;

/// Deduction rules. Words inside steps are plain letter sequences so that a
/// certificate read from disk can carry an empty word; the checker rejects
/// such steps rather than the loader.
namespace rule {

struct Axiom {
    BasisAxiom axiom;
    friend bool operator==(const Axiom&, const Axiom&) = default;
};

struct Reflexivity {
    Letters word;
    friend bool operator==(const Reflexivity&, const Reflexivity&) = default;
};

/// Simultaneous substitution; the map must cover every letter of the premise.
struct Substitute {
    StepIndex premise = 0;
    std::map<Letter, Letters> images;
    friend bool operator==(const Substitute&, const Substitute&) = default;
};

struct MulLeft {
    StepIndex premise = 0;
    Letters word;
    friend bool operator==(const MulLeft&, const MulLeft&) = default;
};

struct MulRight {
    StepIndex premise = 0;
    Letters word;
    friend bool operator==(const MulRight&, const MulRight&) = default;
};

struct Symmetry {
    StepIndex premise = 0;
    friend bool operator==(const Symmetry&, const Symmetry&) = default;
};

/// From u = w and w = v conclude u = v; the middle words must match exactly.
struct Transitivity {
    StepIndex left = 0;
    StepIndex right = 0;
    friend bool operator==(const Transitivity&, const Transitivity&) = default;
};

}  // namespace rule

using Step = std::variant<rule::Axiom, rule::Reflexivity, rule::Substitute, rule::MulLeft,
                          rule::MulRight, rule::Symmetry, rule::Transitivity>;

struct Certificate {
    CyclicParams params;
    std::vector<Step> steps;
};

/// A step that cannot be applied. Carries the offending step's index.
class StepError : public std::runtime_error {
public:
    StepError(StepIndex step, const std::string& reason);

    StepIndex step() const noexcept { return step_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    StepIndex step_;
    std::string reason_;
};

/// Conclusion of `step`, placed at position `self`, given the conclusions of
/// all earlier steps. Throws StepError.
Identity apply_step(const CyclicParams& p, const Step& step, StepIndex self,
                    std::span<const Identity> earlier);

/// Conclusion of step i of the certificate. Throws StepError.
Identity step_conclusion(const Certificate& cert, StepIndex i);

struct CheckResult {
    bool accepted = false;
    std::optional<StepIndex> failing_step;
    std::string reason;
    std::optional<Identity> conclusion;
};

CheckResult check_certificate(const Certificate& cert, const Identity& goal);

/// Axioms referenced by the certificate's Axiom steps, in step order.
std::vector<BasisAxiom> axioms_used(const Certificate& cert);

/// Derivation of a balanced identity from the commutative law alone.
/// Throws ContractViolation if the identity is not balanced.
Certificate derive_balanced(const Identity& id, const CyclicParams& p = CyclicParams{1, 1});

/// x^d = y^d from com and phi; requires h <= d.
Certificate derive_aux_equal_power(const CyclicParams& p);
/// y^d x1..x(h-d) = x^d x1..x(h-d) from com and phi; requires h > d.
Certificate derive_aux_equal_power_tail(const CyclicParams& p);

struct Derivation {
    Verdict verdict;
    /// Present exactly when the verdict holds.
    std::optional<Certificate> certificate;
    /// Number of unbalanced letters at each round of the induction, ending in 0.
    std::vector<std::size_t> unbalanced_trace;
};

/// Builds a certificate for id over basis(p), or reports the failing verdict.
Derivation derive(const CyclicParams& p, const Identity& id);

}  // namespace cyclic
