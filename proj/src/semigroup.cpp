#include "cyclic/semigroup.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <vector>

namespace cyclic {

CyclicParams::CyclicParams(std::size_t h, std::size_t d) : index(h), period(d) {
    if (h == 0 || d == 0) {
        throw ContractViolation("index and period must be positive");
    }
}

Element normalize(const CyclicParams& p, std::size_t e) {
    if (e == 0) throw ContractViolation("exponent must be positive");
    if (e < p.index) return Element{e};
    return Element{p.index + (e - p.index) % p.period};
}

Element multiply(const CyclicParams& p, Element a, Element b) {
    return normalize(p, a.exponent + b.exponent);
}

Element evaluate(const CyclicParams& p, std::span<const Letter> w, const ElementSubstitution& phi) {
    if (w.empty()) throw ContractViolation("cannot evaluate the empty word");
    auto image = [&](const Letter& x) {
        auto it = phi.find(x);
        if (it == phi.end()) {
            throw std::out_of_range("substitution has no image for letter '" + x.name() + "'");
        }
        return it->second;
    };
    Element acc = image(w.front());
    for (std::size_t i = 1; i < w.size(); ++i) acc = multiply(p, acc, image(w[i]));
    return acc;
}

Element evaluate(const CyclicParams& p, const Word& w, const ElementSubstitution& phi) {
    return evaluate(p, w.letters(), phi);
}

ElementSubstitution parse_substitution(const CyclicParams& p, std::string_view text) {
    ElementSubstitution out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t end = std::min(text.find(',', pos), text.size());
        std::string_view entry = text.substr(pos, end - pos);
        const auto eq = entry.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError("expected letter=exponent", pos);
        }
        auto trim = [](std::string_view s) {
            while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
            while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
            return s;
        };
        const std::string_view name = trim(entry.substr(0, eq));
        const std::string_view value = trim(entry.substr(eq + 1));
        if (!Letter::is_valid_name(name)) {
            throw ParseError("invalid letter name '" + std::string(name) + "'", pos);
        }
        std::size_t exponent = 0;
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), exponent);
        if (value.empty() || ec != std::errc{} || ptr != value.data() + value.size() || exponent == 0) {
            throw ParseError("exponent must be a positive integer", pos + eq + 1);
        }
        Letter letter{std::string(name)};
        if (out.contains(letter)) {
            throw ParseError("letter '" + letter.name() + "' assigned twice", pos);
        }
        out.emplace(std::move(letter), normalize(p, exponent));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return out;
}

std::string render_substitution(const ElementSubstitution& phi) {
    std::string out;
    for (const auto& [x, e] : phi) {
        if (!out.empty()) out += ',';
        out += x.name() + "=" + std::to_string(e.exponent);
    }
    return out;
}

BudgetExceeded::BudgetExceeded(std::uint64_t required, std::uint64_t budget)
    : std::runtime_error("oracle needs " + std::to_string(required) +
                         " evaluations, budget is " + std::to_string(budget)),
      required_(required) {}

std::uint64_t substitution_count(const CyclicParams& p, std::size_t letters) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 1;
    const std::uint64_t base = p.order();
    for (std::size_t i = 0; i < letters; ++i) {
        if (base != 0 && total > kMax / base) return kMax;
        total *= base;
    }
    return total;
}

OracleVerdict satisfies_oracle(const CyclicParams& p, const Identity& id, std::uint64_t budget) {
    const std::set<Letter> letters_set = content(id);
    const std::vector<Letter> letters(letters_set.begin(), letters_set.end());
    const std::uint64_t required = substitution_count(p, letters.size());
    if (required > budget) throw BudgetExceeded(required, budget);

    // Words as letter indices so the inner loop avoids map lookups.
    auto indices = [&](const Word& w) {
        std::vector<std::size_t> out;
        out.reserve(w.length());
        for (const Letter& x : w.letters()) {
            out.push_back(static_cast<std::size_t>(
                std::lower_bound(letters.begin(), letters.end(), x) - letters.begin()));
        }
        return out;
    };
    const auto lhs = indices(id.lhs);
    const auto rhs = indices(id.rhs);

    std::vector<Element> image(letters.size(), Element{1});
    auto value = [&](const std::vector<std::size_t>& w) {
        Element acc = image[w.front()];
        for (std::size_t i = 1; i < w.size(); ++i) acc = multiply(p, acc, image[w[i]]);
        return acc;
    };

    OracleVerdict verdict;
    const std::size_t top = p.order();
    while (true) {
        ++verdict.evaluated;
        if (value(lhs) != value(rhs)) {
            verdict.holds = false;
            ElementSubstitution phi;
            for (std::size_t i = 0; i < letters.size(); ++i) phi.emplace(letters[i], image[i]);
            verdict.counterexample = std::move(phi);
            return verdict;
        }
        // Odometer step, first letter fastest.
        std::size_t digit = 0;
        while (digit < image.size() && image[digit].exponent == top) {
            image[digit].exponent = 1;
            ++digit;
        }
        if (digit == image.size()) break;
        ++image[digit].exponent;
    }
    return verdict;
}

}  // namespace cyclic
