#include "cyclic/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace cyclic {

namespace {

constexpr std::size_t kMaxExponent = 1'000'000;

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_ident_tail(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}
bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

class WordParser {
public:
    WordParser(std::string_view text, std::size_t base) : text_(text), base_(base) {}

    Letters parse() {
        Letters out;
        skip_space();
        bool need_separator = false;
        while (pos_ < text_.size()) {
            if (need_separator && !separated_) {
                fail("expected whitespace between factors");
            }
            parse_factor(out);
            separated_ = skip_space();
            need_separator = true;
        }
        return out;
    }

private:
    void parse_factor(Letters& out) {
        if (!is_lower(text_[pos_])) {
            fail(std::string("expected letter, found '") + text_[pos_] + "'");
        }
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_ident_tail(text_[pos_])) ++pos_;
        Letter letter{std::string(text_.substr(start, pos_ - start))};

        std::size_t exponent = 1;
        const std::size_t before = pos_;
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            skip_space();
            exponent = parse_exponent();
        } else {
            pos_ = before;
        }
        out.insert(out.end(), exponent, letter);
    }

    std::size_t parse_exponent() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
        if (start == pos_) {
            fail("expected exponent after '^'", start);
        }
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (ec != std::errc{} || value > kMaxExponent) {
            fail("exponent too large", start);
        }
        if (value == 0) {
            fail("exponent must be positive", start);
        }
        return value;
    }

    bool skip_space() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
        return pos_ != start;
    }

    [[noreturn]] void fail(const std::string& what) { fail(what, pos_); }
    [[noreturn]] void fail(const std::string& what, std::size_t at) {
        throw ParseError(what, base_ + at);
    }

    std::string_view text_;
    std::size_t base_;
    std::size_t pos_ = 0;
    bool separated_ = false;
};

Word parse_word_at(std::string_view text, std::size_t base) {
    Letters letters = WordParser(text, base).parse();
    if (letters.empty()) {
        throw ParseError("empty word", base);
    }
    return Word(std::move(letters));
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error("column " + std::to_string(position + 1) + ": " + message),
      position_(position) {}

Letter::Letter(std::string name) : name_(std::move(name)) {
    if (!is_valid_name(name_)) {
        throw std::invalid_argument("invalid letter name '" + name_ + "'");
    }
}

bool Letter::is_valid_name(std::string_view name) noexcept {
    if (name.empty() || !is_lower(name.front())) return false;
    return std::all_of(name.begin(), name.end(), is_ident_tail);
}

Word::Word(Letters letters) : letters_(std::move(letters)) {
    if (letters_.empty()) {
        throw ContractViolation("a word must be non-empty");
    }
}

std::set<Letter> Word::content() const { return {letters_.begin(), letters_.end()}; }

Word parse_word(std::string_view text) { return parse_word_at(text, 0); }

Letters parse_letters(std::string_view text) { return WordParser(text, 0).parse(); }

Identity parse_identity(std::string_view text) {
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
        throw ParseError("expected '=' between the two sides", text.size());
    }
    const auto second = text.find('=', eq + 1);
    if (second != std::string_view::npos) {
        throw ParseError("unexpected second '='", second);
    }
    return Identity{parse_word_at(text.substr(0, eq), 0),
                    parse_word_at(text.substr(eq + 1), eq + 1)};
}

std::string render_word(std::span<const Letter> w) {
    std::string out;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!out.empty()) out += ' ';
        out += w[i].name();
        if (j - i > 1) {
            out += '^';
            out += std::to_string(j - i);
        }
        i = j;
    }
    return out;
}

std::string render_word(const Word& w) { return render_word(w.letters()); }

std::string render_identity(const Identity& id) {
    return render_word(id.lhs) + " = " + render_word(id.rhs);
}

std::size_t occ(const Letter& x, std::span<const Letter> w) {
    return static_cast<std::size_t>(std::count(w.begin(), w.end(), x));
}

std::size_t occ(const Letter& x, const Word& w) { return occ(x, w.letters()); }

Occurrences occurrences(std::span<const Letter> w) {
    Occurrences out;
    for (const Letter& x : w) ++out[x];
    return out;
}

std::set<Letter> content(const Identity& id) {
    std::set<Letter> out = id.lhs.content();
    for (const Letter& x : id.rhs.letters()) out.insert(x);
    return out;
}

bool is_balanced(const Identity& id) { return unbalanced_letters(id).empty(); }

bool is_d_balanced(const Identity& id, std::size_t d) {
    if (d == 0) throw ContractViolation("period must be positive");
    const Occurrences left = occurrences(id.lhs.letters());
    const Occurrences right = occurrences(id.rhs.letters());
    for (const Letter& x : content(id)) {
        const auto l = left.contains(x) ? left.at(x) : 0;
        const auto r = right.contains(x) ? right.at(x) : 0;
        if (l % d != r % d) return false;
    }
    return true;
}

std::set<Letter> unbalanced_letters(const Identity& id) {
    const Occurrences left = occurrences(id.lhs.letters());
    const Occurrences right = occurrences(id.rhs.letters());
    std::set<Letter> out;
    for (const Letter& x : content(id)) {
        const auto l = left.contains(x) ? left.at(x) : 0;
        const auto r = right.contains(x) ? right.at(x) : 0;
        if (l != r) out.insert(x);
    }
    return out;
}

Word sort_canonical(const Word& w) {
    Letters letters = w.sequence();
    std::sort(letters.begin(), letters.end());
    return Word(std::move(letters));
}

Letters power(const Letter& x, std::size_t k) { return Letters(k, x); }

Letters concat(std::span<const Letter> a, std::span<const Letter> b) {
    Letters out(a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace cyclic
