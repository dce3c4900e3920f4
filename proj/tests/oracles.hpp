#pragma once

// Test-only reference implementations. None of these call into the library's
// arithmetic; they follow the Cayley graph of <a | a^h = a^(h+d)> edge by edge.

#include <cstddef>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "cyclic/words.hpp"

namespace oracle {

/// Successor of a^e in the Cayley graph: a^(e+1), except that the last
/// element a^(h+d-1) steps back to a^h.
inline std::size_t successor(std::size_t h, std::size_t d, std::size_t e) {
    return e + 1 <= h + d - 1 ? e + 1 : h;
}

/// a^n reached by walking n-1 edges from a.
inline std::size_t power_of_generator(std::size_t h, std::size_t d, std::size_t n) {
    std::size_t e = 1;
    for (std::size_t i = 1; i < n; ++i) e = successor(h, d, e);
    return e;
}

/// a^i * a^j: walk j edges from a^i.
inline std::size_t product(std::size_t h, std::size_t d, std::size_t i, std::size_t j) {
    std::size_t e = i;
    for (std::size_t k = 0; k < j; ++k) e = successor(h, d, e);
    return e;
}

inline std::size_t value(std::size_t h, std::size_t d, const cyclic::Word& w,
                         const std::map<std::string, std::size_t>& phi) {
    std::size_t acc = phi.at(w[0].name());
    for (std::size_t i = 1; i < w.length(); ++i) acc = product(h, d, acc, phi.at(w[i].name()));
    return acc;
}

/// Independent satisfaction check; letters enumerated in lexicographic order,
/// first letter fastest. Returns the first failing assignment or empty.
inline std::map<std::string, std::size_t> first_counterexample(std::size_t h, std::size_t d,
                                                               const cyclic::Identity& id) {
    std::vector<std::string> names;
    for (const auto& x : cyclic::content(id)) names.push_back(x.name());
    std::vector<std::size_t> digits(names.size(), 1);
    while (true) {
        std::map<std::string, std::size_t> phi;
        for (std::size_t i = 0; i < names.size(); ++i) phi[names[i]] = digits[i];
        if (value(h, d, id.lhs, phi) != value(h, d, id.rhs, phi)) return phi;
        std::size_t k = 0;
        while (k < digits.size() && digits[k] == h + d - 1) digits[k++] = 1;
        if (k == digits.size()) return {};
        ++digits[k];
    }
}

inline bool holds(std::size_t h, std::size_t d, const cyclic::Identity& id) {
    return first_counterexample(h, d, id).empty();
}

inline cyclic::Word random_word(std::mt19937& rng, const std::vector<cyclic::Letter>& alphabet,
                                std::size_t min_len, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(min_len, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    cyclic::Letters out(len(rng), alphabet[0]);
    for (auto& x : out) x = alphabet[pick(rng)];
    return cyclic::Word(out);
}

}  // namespace oracle
