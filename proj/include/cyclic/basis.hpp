#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cyclic/semigroup.hpp"
#include "cyclic/words.hpp"

namespace cyclic {

/// Reference to a member of the identity basis of C_{h,d}: the commutative
/// law, the long identity phi, or the uniform identity psi[r].
struct BasisAxiom {
    enum class Kind { Com, Phi, Psi };

    Kind kind = Kind::Com;
    std::size_t r = 0;  // psi only

    static BasisAxiom com() { return {Kind::Com, 0}; }
    static BasisAxiom phi() { return {Kind::Phi, 0}; }
    static BasisAxiom psi(std::size_t r) { return {Kind::Psi, r}; }

    friend bool operator==(const BasisAxiom&, const BasisAxiom&) = default;
};

/// "com", "phi" or "psi[r]".
std::string tag(const BasisAxiom& a);

/// Largest admissible psi parameter, floor((h-d)/3), or 0 when h <= d+2.
std::size_t max_psi_r(const CyclicParams& p);
bool is_valid_axiom(const CyclicParams& p, const BasisAxiom& a);

/// x1, x2, ... in order.
Letters fresh_letters(std::size_t count);

Identity commutative_law();
/// x^d x1 ... xh = x1 ... xh
Identity phi(const CyclicParams& p);
/// x^r y^(r+d) x1 ... x(h-3r-d) = x^(r+d) y^r x1 ... x(h-3r-d)
Identity psi(const CyclicParams& p, std::size_t r);

/// The identity of an axiom; throws ContractViolation if it is not part of
/// the basis for p.
Identity axiom_identity(const CyclicParams& p, const BasisAxiom& a);

/// com, phi, then psi[1..floor((h-d)/3)] when h > d+2.
std::vector<std::pair<BasisAxiom, Identity>> basis(const CyclicParams& p);

/// x^d = y^d, a consequence of the basis when h <= d.
Identity aux_equal_power(std::size_t d);
/// y^d x1 ... x(h-d) = x^d x1 ... x(h-d), a consequence of the basis when h > d.
Identity aux_equal_power_tail(const CyclicParams& p);

}  // namespace cyclic
