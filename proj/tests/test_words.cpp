#include "doctest.h"

#include <random>

#include "cyclic/words.hpp"
#include "oracles.hpp"

using namespace cyclic;

namespace {

Word w(const char* text) { return parse_word(text); }
Identity ident(const char* text) { return parse_identity(text); }
Letter L(const char* name) { return Letter{name}; }

}  // namespace

TEST_CASE("parse_word expands exponents") {
    CHECK(w("x^2 y") == Word{L("x"), L("x"), L("y")});
    CHECK(w("x1") == Word{L("x1")});
    CHECK(w("  x ^ 3  ") == Word{L("x"), L("x"), L("x")});
    CHECK(w("abc_1 x") == Word{L("abc_1"), L("x")});
}

TEST_CASE("parse_word rejects malformed input with a position") {
    CHECK_THROWS_AS(w("x^0"), ParseError);
    CHECK_THROWS_AS(w(""), ParseError);
    CHECK_THROWS_AS(w("   "), ParseError);
    CHECK_THROWS_AS(w("X"), ParseError);
    CHECK_THROWS_AS(w("1x"), ParseError);
    CHECK_THROWS_AS(w("x^"), ParseError);
    CHECK_THROWS_AS(w("x^-1"), ParseError);
    CHECK_THROWS_AS(w("x^2y"), ParseError);
    CHECK_THROWS_AS(w("x^99999999999999999999"), ParseError);

    try {
        w("x y ^ 0");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 6);
    }
    try {
        ident("x y = y $");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 8);
    }
}

TEST_CASE("parse_identity") {
    const Identity id = ident("x y^2 = x^2 y");
    CHECK(id.lhs == w("x y y"));
    CHECK(id.rhs == w("x x y"));
    CHECK_THROWS_AS(ident("x y"), ParseError);
    CHECK_THROWS_AS(ident("x = y = z"), ParseError);
    CHECK_THROWS_AS(ident("= y"), ParseError);
    CHECK_THROWS_AS(ident("x ="), ParseError);
}

TEST_CASE("render_word uses maximal runs") {
    CHECK(render_word(w("x x y")) == "x^2 y");
    CHECK(render_word(w("x")) == "x");
    CHECK(render_word(w("x y x")) == "x y x");
    CHECK(render_identity(ident("x y=y x")) == "x y = y x");
    CHECK(render_word(Letters{}).empty());
}

TEST_CASE("parse_letters allows the empty word") {
    CHECK(parse_letters("").empty());
    CHECK(parse_letters("x^2") == Letters{L("x"), L("x")});
}

TEST_CASE("Letter and Word invariants") {
    CHECK_THROWS(Letter{""});
    CHECK_THROWS(Letter{"Ab"});
    CHECK_THROWS(Letter{"a-b"});
    CHECK_THROWS_AS(Word(Letters{}), ContractViolation);
    CHECK(w("x y x").content() == std::set<Letter>{L("x"), L("y")});
}

TEST_CASE("occ") {
    CHECK(occ(L("x"), w("x x y")) == 2);
    CHECK(occ(L("z"), w("x x y")) == 0);
    CHECK(occ(L("y"), w("x y x y y")) == 3);
}

TEST_CASE("balance predicates") {
    CHECK(is_balanced(ident("x y = y x")));
    CHECK_FALSE(is_balanced(ident("x^2 y = x y")));
    CHECK(is_balanced(ident("x = x")));

    CHECK(is_d_balanced(ident("x^3 = x^5"), 2));
    CHECK_FALSE(is_d_balanced(ident("x^3 = x^5"), 3));
    CHECK(is_d_balanced(ident("x^2 y = z"), 1));
    CHECK_THROWS_AS(is_d_balanced(ident("x = x"), 0), ContractViolation);

    CHECK(unbalanced_letters(ident("x y^2 = x^2 y")) == std::set<Letter>{L("x"), L("y")});
    CHECK(unbalanced_letters(ident("x y = y x")).empty());
    CHECK(unbalanced_letters(ident("x y = y")) == std::set<Letter>{L("x")});
}

TEST_CASE("sort_canonical") {
    CHECK(sort_canonical(w("y x y")) == w("x y y"));
    CHECK(sort_canonical(w("x")) == w("x"));
    CHECK(sort_canonical(w("x1 x x1")) == w("x x1 x1"));
}

TEST_CASE("word properties on random words") {
    std::mt19937 rng(20261015);
    const std::vector<Letter> alphabet{L("x"), L("y"), L("x1"), L("z_2")};
    for (int trial = 0; trial < 2000; ++trial) {
        const Word u = oracle::random_word(rng, alphabet, 1, 9);
        const Word v = oracle::random_word(rng, alphabet, 1, 9);

        CHECK(parse_word(render_word(u)) == u);

        std::size_t total = 0;
        for (const Letter& x : u.content()) total += occ(x, u);
        CHECK(total == u.length());

        const Word s = sort_canonical(u);
        CHECK(sort_canonical(s) == s);
        for (const Letter& x : alphabet) CHECK(occ(x, s) == occ(x, u));

        const Identity id{u, v};
        CHECK(is_balanced(id) == (sort_canonical(u) == sort_canonical(v)));
        if (is_balanced(id)) {
            for (std::size_t d = 1; d <= 5; ++d) CHECK(is_d_balanced(id, d));
        }
        CHECK(parse_identity(render_identity(id)) == id);
    }
}
