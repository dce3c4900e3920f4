#include "cyclic/certificate_json.hpp"

namespace cyclic {

using json = nlohmann::ordered_json;

FormatError::FormatError(std::string location, const std::string& message)
    : std::runtime_error(location.empty() ? message : location + ": " + message),
      location_(std::move(location)) {}

namespace {

const json& field(const json& j, const char* key, const std::string& location) {
    if (!j.is_object()) throw FormatError(location, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw FormatError(location, std::string("missing field '") + key + "'");
    return *it;
}

std::size_t index_field(const json& j, const char* key, const std::string& location) {
    const json& v = field(j, key, location);
    if (!v.is_number_unsigned()) {
        throw FormatError(location + "/" + key, "expected a non-negative integer");
    }
    return v.get<std::size_t>();
}

std::size_t positive_field(const json& j, const char* key, const std::string& location) {
    const std::size_t v = index_field(j, key, location);
    if (v == 0) throw FormatError(location + "/" + key, "must be positive");
    return v;
}

Letters letters_field(const json& j, const char* key, const std::string& location) {
    const json& v = field(j, key, location);
    if (!v.is_string()) throw FormatError(location + "/" + key, "expected a word string");
    try {
        return parse_letters(v.get<std::string>());
    } catch (const ParseError& e) {
        throw FormatError(location + "/" + key, e.what());
    }
}

}  // namespace

json axiom_to_json(const BasisAxiom& a) {
    switch (a.kind) {
        case BasisAxiom::Kind::Com: return "com";
        case BasisAxiom::Kind::Phi: return "phi";
        case BasisAxiom::Kind::Psi: return json{{"psi", a.r}};
    }
    return nullptr;
}

BasisAxiom axiom_from_json(const json& j, const std::string& location) {
    if (j == "com") return BasisAxiom::com();
    if (j == "phi") return BasisAxiom::phi();
    if (j.is_object() && j.size() == 1 && j.contains("psi")) {
        return BasisAxiom::psi(index_field(j, "psi", location));
    }
    throw FormatError(location, "expected \"com\", \"phi\" or {\"psi\": r}");
}

json step_to_json(const Step& step) {
    return std::visit(
        [](const auto& s) -> json {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, rule::Axiom>) {
                return {{"rule", "axiom"}, {"axiom", axiom_to_json(s.axiom)}};
            } else if constexpr (std::is_same_v<T, rule::Reflexivity>) {
                return {{"rule", "refl"}, {"word", render_word(s.word)}};
            } else if constexpr (std::is_same_v<T, rule::Substitute>) {
                json map = json::object();
                for (const auto& [x, w] : s.images) map[x.name()] = render_word(w);
                return {{"rule", "subst"}, {"step", s.premise}, {"map", std::move(map)}};
            } else if constexpr (std::is_same_v<T, rule::MulLeft>) {
                return {{"rule", "mul_left"}, {"step", s.premise}, {"word", render_word(s.word)}};
            } else if constexpr (std::is_same_v<T, rule::MulRight>) {
                return {{"rule", "mul_right"}, {"step", s.premise}, {"word", render_word(s.word)}};
            } else if constexpr (std::is_same_v<T, rule::Symmetry>) {
                return {{"rule", "sym"}, {"step", s.premise}};
            } else {
                return {{"rule", "trans"}, {"left", s.left}, {"right", s.right}};
            }
        },
        step);
}

Step step_from_json(const json& j, const std::string& location) {
    const json& rule_name = field(j, "rule", location);
    if (!rule_name.is_string()) throw FormatError(location + "/rule", "expected a string");
    const std::string name = rule_name.get<std::string>();
    if (name == "axiom") {
        return rule::Axiom{axiom_from_json(field(j, "axiom", location), location + "/axiom")};
    }
    if (name == "refl") return rule::Reflexivity{letters_field(j, "word", location)};
    if (name == "subst") {
        rule::Substitute s;
        s.premise = index_field(j, "step", location);
        const json& map = field(j, "map", location);
        if (!map.is_object()) throw FormatError(location + "/map", "expected an object");
        for (const auto& [key, value] : map.items()) {
            const std::string where = location + "/map/" + key;
            if (!Letter::is_valid_name(key)) throw FormatError(where, "invalid letter name");
            if (!value.is_string()) throw FormatError(where, "expected a word string");
            try {
                s.images.emplace(Letter{key}, parse_letters(value.get<std::string>()));
            } catch (const ParseError& e) {
                throw FormatError(where, e.what());
            }
        }
        return s;
    }
    if (name == "mul_left") {
        return rule::MulLeft{index_field(j, "step", location), letters_field(j, "word", location)};
    }
    if (name == "mul_right") {
        return rule::MulRight{index_field(j, "step", location), letters_field(j, "word", location)};
    }
    if (name == "sym") return rule::Symmetry{index_field(j, "step", location)};
    if (name == "trans") {
        return rule::Transitivity{index_field(j, "left", location),
                                  index_field(j, "right", location)};
    }
    throw FormatError(location + "/rule", "unknown rule '" + name + "'");
}

json to_json(const CertificateDocument& doc) {
    json steps = json::array();
    for (const Step& s : doc.certificate.steps) steps.push_back(step_to_json(s));
    return {{"params", {{"h", doc.certificate.params.index}, {"d", doc.certificate.params.period}}},
            {"goal", render_identity(doc.goal)},
            {"steps", std::move(steps)}};
}

CertificateDocument certificate_from_json(const json& j) {
    const json& params = field(j, "params", "");
    const CyclicParams p{positive_field(params, "h", "/params"),
                         positive_field(params, "d", "/params")};

    const json& goal_text = field(j, "goal", "");
    if (!goal_text.is_string()) throw FormatError("/goal", "expected an identity string");
    std::optional<Identity> goal;
    try {
        goal = parse_identity(goal_text.get<std::string>());
    } catch (const ParseError& e) {
        throw FormatError("/goal", e.what());
    }

    const json& steps = field(j, "steps", "");
    if (!steps.is_array()) throw FormatError("/steps", "expected an array");
    Certificate cert{p, {}};
    for (std::size_t i = 0; i < steps.size(); ++i) {
        cert.steps.push_back(step_from_json(steps[i], "/steps/" + std::to_string(i)));
    }
    return {std::move(cert), std::move(*goal)};
}

std::string write_certificate(const CertificateDocument& doc) { return to_json(doc).dump(2) + "\n"; }

CertificateDocument read_certificate(std::string_view text) {
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw FormatError("byte " + std::to_string(e.byte), e.what());
    }
    return certificate_from_json(j);
}

}  // namespace cyclic
