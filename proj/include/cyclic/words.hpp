#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cyclic {

/// Raised by the text parsers. `position()` is the 0-based offset into the
/// input where the problem was detected.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position);

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Thrown when a caller breaks an operation's precondition.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A variable name: a lowercase ASCII letter followed by ASCII letters,
/// digits or underscores.
class Letter {
public:
    explicit Letter(std::string name);

    static bool is_valid_name(std::string_view name) noexcept;

    const std::string& name() const noexcept { return name_; }

    friend bool operator==(const Letter&, const Letter&) = default;
    friend std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
        return a.name_.compare(b.name_) <=> 0;
    }

private:
    std::string name_;
};

/// Possibly empty letter sequence. Used where the empty word is a legitimate
/// intermediate (exponent 0, empty multipliers); `Word` is the non-empty one.
using Letters = std::vector<Letter>;

/// A non-empty word over letters.
class Word {
public:
    explicit Word(Letters letters);
    Word(std::initializer_list<Letter> letters) : Word(Letters(letters)) {}

    std::span<const Letter> letters() const noexcept { return letters_; }
    const Letters& sequence() const noexcept { return letters_; }
    std::size_t length() const noexcept { return letters_.size(); }
    const Letter& operator[](std::size_t i) const { return letters_[i]; }

    std::set<Letter> content() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    Letters letters_;
};

struct Identity {
    Word lhs;
    Word rhs;

    friend bool operator==(const Identity&, const Identity&) = default;
    friend auto operator<=>(const Identity&, const Identity&) = default;
};

/// Letter counts of a word, keyed in lexicographic letter order.
using Occurrences = std::map<Letter, std::size_t>;

// Text forms. Grammar: word := factor+, factor := IDENT ('^' INT)?, with
// factors separated by whitespace; identity := word '=' word.
Word parse_word(std::string_view text);
Identity parse_identity(std::string_view text);
std::string render_word(std::span<const Letter> w);
std::string render_word(const Word& w);
std::string render_identity(const Identity& id);

/// Like parse_word but maps blank input to the empty sequence.
Letters parse_letters(std::string_view text);

std::size_t occ(const Letter& x, std::span<const Letter> w);
std::size_t occ(const Letter& x, const Word& w);
Occurrences occurrences(std::span<const Letter> w);

std::set<Letter> content(const Identity& id);
bool is_balanced(const Identity& id);
bool is_d_balanced(const Identity& id, std::size_t d);
std::set<Letter> unbalanced_letters(const Identity& id);

/// Commutative canonical form: letters in lexicographic order of names.
Word sort_canonical(const Word& w);

/// `x^k` as a flat sequence; empty when k == 0.
Letters power(const Letter& x, std::size_t k);

Letters concat(std::span<const Letter> a, std::span<const Letter> b);

}  // namespace cyclic
