#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cyclic/words.hpp"

namespace cyclic {

/// Index h and period d of the cyclic semigroup <a | a^h = a^(h+d)>.
struct CyclicParams {
    std::size_t index = 1;
    std::size_t period = 1;

    CyclicParams() = default;
    CyclicParams(std::size_t h, std::size_t d);

    std::size_t order() const noexcept { return index + period - 1; }

    friend bool operator==(const CyclicParams&, const CyclicParams&) = default;
};

/// a^exponent, with exponent in [1, h+d-1].
struct Element {
    std::size_t exponent = 1;

    friend bool operator==(const Element&, const Element&) = default;
    friend auto operator<=>(const Element&, const Element&) = default;
};

using ElementSubstitution = std::map<Letter, Element>;

Element normalize(const CyclicParams& p, std::size_t e);
Element multiply(const CyclicParams& p, Element a, Element b);

/// Left fold of multiply over the images of w's letters. Throws
/// std::out_of_range when a letter has no image.
Element evaluate(const CyclicParams& p, std::span<const Letter> w, const ElementSubstitution& phi);
Element evaluate(const CyclicParams& p, const Word& w, const ElementSubstitution& phi);

/// Parses `x=3,y=1`. Exponents are reduced into the semigroup.
ElementSubstitution parse_substitution(const CyclicParams& p, std::string_view text);
std::string render_substitution(const ElementSubstitution& phi);

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::uint64_t required, std::uint64_t budget);

    std::uint64_t required() const noexcept { return required_; }

private:
    std::uint64_t required_;
};

struct OracleVerdict {
    bool holds = true;
    /// First failing substitution in enumeration order, when !holds.
    std::optional<ElementSubstitution> counterexample;
    std::uint64_t evaluated = 0;
};

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

/// (h+d-1)^n, saturating at UINT64_MAX.
std::uint64_t substitution_count(const CyclicParams& p, std::size_t letters);

/// Brute-force satisfaction check over every substitution of elements for
/// the letters of the identity. Letters are taken in lexicographic order and
/// the first letter varies fastest; exponents count up from 1.
OracleVerdict satisfies_oracle(const CyclicParams& p, const Identity& id,
                               std::uint64_t budget = kDefaultOracleBudget);

}  // namespace cyclic
