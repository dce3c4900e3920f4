#include "cyclic/basis.hpp"

namespace cyclic {

namespace {

const Letter& letter_x() {
    static const Letter x{"x"};
    return x;
}

const Letter& letter_y() {
    static const Letter y{"y"};
    return y;
}

Word word_of(std::initializer_list<Letters> parts) {
    Letters out;
    for (const Letters& part : parts) out.insert(out.end(), part.begin(), part.end());
    return Word(std::move(out));
}

}  // namespace

std::string tag(const BasisAxiom& a) {
    switch (a.kind) {
        case BasisAxiom::Kind::Com: return "com";
        case BasisAxiom::Kind::Phi: return "phi";
        case BasisAxiom::Kind::Psi: return "psi[" + std::to_string(a.r) + "]";
    }
    return "?";
}

std::size_t max_psi_r(const CyclicParams& p) {
    if (p.index <= p.period + 2) return 0;
    return (p.index - p.period) / 3;
}

bool is_valid_axiom(const CyclicParams& p, const BasisAxiom& a) {
    if (a.kind != BasisAxiom::Kind::Psi) return true;
    return a.r >= 1 && a.r <= max_psi_r(p);
}

Letters fresh_letters(std::size_t count) {
    Letters out;
    out.reserve(count);
    for (std::size_t i = 1; i <= count; ++i) out.emplace_back("x" + std::to_string(i));
    return out;
}

Identity commutative_law() {
    return {Word{letter_x(), letter_y()}, Word{letter_y(), letter_x()}};
}

Identity phi(const CyclicParams& p) {
    const Letters tail = fresh_letters(p.index);
    return {word_of({power(letter_x(), p.period), tail}), Word(tail)};
}

Identity psi(const CyclicParams& p, std::size_t r) {
    if (!is_valid_axiom(p, BasisAxiom::psi(r))) {
        throw ContractViolation("psi[" + std::to_string(r) + "] is not defined for h=" +
                                std::to_string(p.index) + ", d=" + std::to_string(p.period));
    }
    const std::size_t d = p.period;
    const Letters tail = fresh_letters(p.index - 3 * r - d);
    return {word_of({power(letter_x(), r), power(letter_y(), r + d), tail}),
            word_of({power(letter_x(), r + d), power(letter_y(), r), tail})};
}

Identity axiom_identity(const CyclicParams& p, const BasisAxiom& a) {
    switch (a.kind) {
        case BasisAxiom::Kind::Com: return commutative_law();
        case BasisAxiom::Kind::Phi: return phi(p);
        case BasisAxiom::Kind::Psi: return psi(p, a.r);
    }
    throw ContractViolation("unknown axiom kind");
}

std::vector<std::pair<BasisAxiom, Identity>> basis(const CyclicParams& p) {
    std::vector<std::pair<BasisAxiom, Identity>> out;
    out.emplace_back(BasisAxiom::com(), commutative_law());
    out.emplace_back(BasisAxiom::phi(), phi(p));
    for (std::size_t r = 1; r <= max_psi_r(p); ++r) {
        out.emplace_back(BasisAxiom::psi(r), psi(p, r));
    }
    return out;
}

Identity aux_equal_power(std::size_t d) {
    if (d == 0) throw ContractViolation("period must be positive");
    return {Word(power(letter_x(), d)), Word(power(letter_y(), d))};
}

Identity aux_equal_power_tail(const CyclicParams& p) {
    if (p.index <= p.period) {
        throw ContractViolation("the tailed equal-power identity needs h > d");
    }
    const Letters tail = fresh_letters(p.index - p.period);
    return {word_of({power(letter_y(), p.period), tail}),
            word_of({power(letter_x(), p.period), tail})};
}

}  // namespace cyclic
