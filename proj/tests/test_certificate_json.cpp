#include "doctest.h"

#include "cyclic/certificate_json.hpp"

using namespace cyclic;

namespace {

Identity ident(const char* text) { return parse_identity(text); }

}  // namespace

TEST_CASE("certificate document layout") {
    const Certificate cert{{2, 1}, {rule::Axiom{BasisAxiom::phi()}}};
    const std::string text = write_certificate({cert, phi({2, 1})});
    CHECK(text ==
          "{\n"
          "  \"params\": {\n"
          "    \"h\": 2,\n"
          "    \"d\": 1\n"
          "  },\n"
          "  \"goal\": \"x x1 x2 = x1 x2\",\n"
          "  \"steps\": [\n"
          "    {\n"
          "      \"rule\": \"axiom\",\n"
          "      \"axiom\": \"phi\"\n"
          "    }\n"
          "  ]\n"
          "}\n");
}

TEST_CASE("every rule survives a write/read cycle") {
    const Identity goal = ident("x y = y x");
    const Certificate cert{
        {9, 1},
        {rule::Axiom{BasisAxiom::com()}, rule::Axiom{BasisAxiom::phi()},
         rule::Axiom{BasisAxiom::psi(2)}, rule::Reflexivity{parse_letters("x^2 y")},
         rule::Substitute{0, {{Letter{"x"}, parse_letters("a b^3")}, {Letter{"y"}, {}}}},
         rule::MulLeft{1, parse_letters("z")}, rule::MulRight{2, parse_letters("x1 x1")},
         rule::Symmetry{3}, rule::Transitivity{4, 5}}};
    const CertificateDocument back = read_certificate(write_certificate({cert, goal}));
    CHECK(back.goal == goal);
    CHECK(back.certificate.params == cert.params);
    CHECK(back.certificate.steps == cert.steps);
}

TEST_CASE("step encodings") {
    CHECK(step_to_json(rule::Axiom{BasisAxiom::psi(3)}).dump() ==
          R"({"rule":"axiom","axiom":{"psi":3}})");
    CHECK(step_to_json(rule::Transitivity{1, 2}).dump() == R"({"rule":"trans","left":1,"right":2})");
    CHECK(step_to_json(rule::Substitute{0, {{Letter{"x"}, parse_letters("y y")}}}).dump() ==
          R"({"rule":"subst","step":0,"map":{"x":"y^2"}})");
}

TEST_CASE("malformed documents report a location") {
    auto location_of = [](const std::string& text) {
        try {
            read_certificate(text);
        } catch (const FormatError& e) {
            return e.location();
        }
        return std::string("<accepted>");
    };
    CHECK(location_of(R"({"params":{"h":2,"d":1},"goal":"x = x","steps":[)").rfind("byte", 0) == 0);
    CHECK(location_of(R"({"goal":"x = x","steps":[]})").empty());
    CHECK(location_of(R"({"params":{"h":0,"d":1},"goal":"x = x","steps":[]})") == "/params/h");
    CHECK(location_of(R"({"params":{"h":1,"d":1},"goal":"x","steps":[]})") == "/goal");
    CHECK(location_of(R"({"params":{"h":1,"d":1},"goal":"x = x","steps":{}})") == "/steps");
    CHECK(location_of(R"({"params":{"h":1,"d":1},"goal":"x = x","steps":[{"rule":"cut"}]})") ==
          "/steps/0/rule");
    CHECK(location_of(
              R"({"params":{"h":1,"d":1},"goal":"x = x","steps":[{"rule":"sym","step":-1}]})") ==
          "/steps/0/step");
    CHECK(location_of(
              R"({"params":{"h":1,"d":1},"goal":"x = x","steps":[{"rule":"axiom","axiom":"psi"}]})") ==
          "/steps/0/axiom");
    CHECK(location_of(
              R"({"params":{"h":1,"d":1},"goal":"x = x","steps":[{"rule":"subst","step":0,"map":{"X":"y"}}]})") ==
          "/steps/0/map/X");
    CHECK(location_of(
              R"({"params":{"h":1,"d":1},"goal":"x = x","steps":[{"rule":"refl","word":"x^0"}]})") ==
          "/steps/0/word");
}

TEST_CASE("empty words load and are left to the checker") {
    const CertificateDocument doc = read_certificate(
        R"({"params":{"h":1,"d":1},"goal":"x = x","steps":[{"rule":"refl","word":""}]})");
    const CheckResult result = check_certificate(doc.certificate, doc.goal);
    CHECK_FALSE(result.accepted);
    CHECK(result.failing_step == 0u);
}
