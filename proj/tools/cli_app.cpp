#include "cli_app.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "cyclic/basis.hpp"
#include "cyclic/certificate_json.hpp"
#include "cyclic/classify.hpp"
#include "cyclic/derivation.hpp"
#include "cyclic/semigroup.hpp"
#include "cyclic/words.hpp"
#include "selftest.hpp"

namespace cycid {

using namespace cyclic;
using json = nlohmann::ordered_json;

namespace {

enum class Format { Text, Json };

struct CliConfig {
    std::size_t h = 0;
    std::size_t d = 0;
    std::string text;  // identity or word
    std::string substitution;
    std::string certificate_path;
    std::string output_path;
    std::string goal;
    std::uint64_t budget = kDefaultOracleBudget;
    bool counterexample = false;
    SelftestOptions sweep;
    Format format = Format::Text;
};

std::string classification_slug(Classification c) {
    switch (c) {
        case Classification::Balanced: return "balanced";
        case Classification::DBalancedLong: return "d-balanced-long";
        case Classification::DBalancedUniform: return "d-balanced-uniform";
        case Classification::NotDBalanced: return "not-d-balanced";
        case Classification::NeitherLongNorUniform: return "neither-long-nor-uniform";
    }
    return "?";
}

json params_json(const CyclicParams& p) { return {{"h", p.index}, {"d", p.period}}; }

json substitution_json(const ElementSubstitution& phi) {
    json out = json::object();
    for (const auto& [x, e] : phi) out[x.name()] = e.exponent;
    return out;
}

std::string verdict_line(const Verdict& v) {
    std::string line = std::string(v.holds ? "holds" : "fails") + " (" +
                       std::string(to_string(v.classification)) + ")";
    if (!v.reason.empty()) line += ": " + v.reason;
    return line;
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_decide(const CliConfig& cfg, std::ostream& out) {
    const CyclicParams p{cfg.h, cfg.d};
    const Identity id = parse_identity(cfg.text);
    const Verdict v = decide(p, id);
    std::optional<OracleVerdict> oracle;
    if (cfg.counterexample && !v.holds) oracle = satisfies_oracle(p, id, cfg.budget);

    if (cfg.format == Format::Json) {
        json j{{"params", params_json(p)},
               {"identity", render_identity(id)},
               {"holds", v.holds},
               {"classification", classification_slug(v.classification)}};
        if (v.letter) j["letter"] = v.letter->name();
        if (v.length) j["length"] = *v.length;
        if (!v.reason.empty()) j["reason"] = v.reason;
        if (oracle && oracle->counterexample) {
            j["counterexample"] = substitution_json(*oracle->counterexample);
        }
        print_json(out, j);
    } else {
        out << verdict_line(v) << '\n';
        if (oracle && oracle->counterexample) {
            out << "counterexample: " << render_substitution(*oracle->counterexample) << '\n';
        }
    }
    return v.holds ? kHolds : kFails;
}

int cmd_oracle(const CliConfig& cfg, std::ostream& out) {
    const CyclicParams p{cfg.h, cfg.d};
    const Identity id = parse_identity(cfg.text);
    const OracleVerdict v = satisfies_oracle(p, id, cfg.budget);
    std::optional<std::pair<Element, Element>> values;
    if (v.counterexample) {
        values.emplace(evaluate(p, id.lhs, *v.counterexample),
                       evaluate(p, id.rhs, *v.counterexample));
    }
    if (cfg.format == Format::Json) {
        json j{{"params", params_json(p)},
               {"identity", render_identity(id)},
               {"holds", v.holds},
               {"evaluated", v.evaluated}};
        if (v.counterexample) {
            j["counterexample"] = substitution_json(*v.counterexample);
            j["values"] = {values->first.exponent, values->second.exponent};
        }
        print_json(out, j);
    } else if (v.holds) {
        out << "holds (" << v.evaluated << " substitutions)\n";
    } else {
        out << "fails\ncounterexample: " << render_substitution(*v.counterexample) << " (a^"
            << values->first.exponent << " != a^" << values->second.exponent << ")\n";
    }
    return v.holds ? kHolds : kFails;
}

int cmd_derive(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    const CyclicParams p{cfg.h, cfg.d};
    const Identity id = parse_identity(cfg.text);
    const Derivation derivation = derive(p, id);
    if (!derivation.certificate) {
        if (cfg.format == Format::Json) {
            print_json(out, {{"params", params_json(p)},
                             {"identity", render_identity(id)},
                             {"holds", false},
                             {"classification", classification_slug(derivation.verdict.classification)},
                             {"reason", derivation.verdict.reason}});
        } else {
            out << "not satisfied: " << verdict_line(derivation.verdict) << '\n';
        }
        return kFails;
    }
    const std::string document = write_certificate({*derivation.certificate, id});
    const std::size_t steps = derivation.certificate->steps.size();
    if (cfg.output_path.empty()) {
        out << document;
        return kHolds;
    }
    std::ofstream file(cfg.output_path);
    file << document;
    file.close();
    if (!file) {
        err << "error: cannot write " << cfg.output_path << '\n';
        return kIoError;
    }
    if (cfg.format == Format::Json) {
        print_json(out, {{"path", cfg.output_path}, {"steps", steps}});
    } else {
        out << "certificate: " << steps << " steps written to " << cfg.output_path << '\n';
    }
    return kHolds;
}

int cmd_check(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    std::ifstream file(cfg.certificate_path);
    if (!file) {
        err << "error: cannot read " << cfg.certificate_path << '\n';
        return kIoError;
    }
    std::stringstream buffer;
    buffer << file.rdbuf();

    std::optional<CertificateDocument> loaded;
    try {
        loaded = read_certificate(buffer.str());
    } catch (const FormatError& e) {
        err << "malformed certificate: " << e.what() << '\n';
        return kUsage;
    }
    const CertificateDocument& doc = *loaded;
    const Identity goal = cfg.goal.empty() ? doc.goal : parse_identity(cfg.goal);
    const CheckResult result = check_certificate(doc.certificate, goal);

    if (cfg.format == Format::Json) {
        json j{{"goal", render_identity(goal)},
               {"accepted", result.accepted},
               {"steps", doc.certificate.steps.size()}};
        if (result.failing_step) j["step"] = *result.failing_step;
        if (!result.accepted) j["reason"] = result.reason;
        print_json(out, j);
    } else if (result.accepted) {
        out << "accept (" << doc.certificate.steps.size() << " steps): " << render_identity(goal)
            << '\n';
    } else {
        out << "reject at step " << *result.failing_step << ": " << result.reason << '\n';
    }
    return result.accepted ? kHolds : kFails;
}

int cmd_basis(const CliConfig& cfg, std::ostream& out) {
    const CyclicParams p{cfg.h, cfg.d};
    const auto axioms = basis(p);
    if (cfg.format == Format::Json) {
        json j = json::array();
        for (const auto& [axiom, id] : axioms) {
            j.push_back({{"axiom", axiom_to_json(axiom)}, {"identity", render_identity(id)}});
        }
        print_json(out, j);
    } else {
        for (const auto& [axiom, id] : axioms) out << tag(axiom) << ": " << render_identity(id) << '\n';
    }
    return kHolds;
}

int cmd_eval(const CliConfig& cfg, std::ostream& out) {
    const CyclicParams p{cfg.h, cfg.d};
    const Word w = parse_word(cfg.text);
    const ElementSubstitution phi = parse_substitution(p, cfg.substitution);
    for (const Letter& x : w.content()) {
        if (!phi.contains(x)) throw ParseError("no value for letter '" + x.name() + "'", 0);
    }
    const Element value = evaluate(p, w, phi);
    if (cfg.format == Format::Json) {
        print_json(out, {{"params", params_json(p)},
                         {"word", render_word(w)},
                         {"substitution", substitution_json(phi)},
                         {"value", value.exponent}});
    } else {
        out << "a^" << value.exponent << '\n';
    }
    return kHolds;
}

int cmd_selftest(const CliConfig& cfg, std::ostream& out) {
    SelftestOptions options = cfg.sweep;
    options.budget = cfg.budget;
    const SelftestReport report = run_selftest(options);
    if (cfg.format == Format::Json) {
        json rows = json::array();
        for (const SelftestRow& row : report.rows) {
            rows.push_back({{"params", params_json(row.params)},
                            {"identities", row.identities},
                            {"holds", row.holds},
                            {"certificates", row.certificates}});
        }
        json j{{"rows", std::move(rows)},
               {"identities", report.identities},
               {"holds", report.holds},
               {"certificates", report.certificates},
               {"ok", report.ok()}};
        if (report.disagreement) j["disagreement"] = *report.disagreement;
        print_json(out, j);
    } else {
        print_report(report, out);
    }
    return report.ok() ? kHolds : kFails;
}

void add_params(CLI::App& cmd, CliConfig& cfg) {
    cmd.add_option("-h,--index", cfg.h, "index h of C_{h,d}")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd.add_option("-d,--period", cfg.d, "period d of C_{h,d}")
        ->required()
        ->check(CLI::PositiveNumber);
}

void add_format(CLI::App& cmd, CliConfig& cfg) {
    cmd.add_option("--format", cfg.format, "output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Format>{{"text", Format::Text}, {"json", Format::Json}}));
}

void add_budget(CLI::App& cmd, CliConfig& cfg) {
    cmd.add_option("--budget", cfg.budget, "maximum number of oracle evaluations")
        ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    CLI::App app{"Identities of finite cyclic semigroups C_{h,d}", "cycid"};
    app.set_help_flag("--help", "print help and exit");
    app.require_subcommand(1);

    CLI::App* decide_cmd = app.add_subcommand("decide", "decide whether an identity holds");
    add_params(*decide_cmd, cfg);
    decide_cmd->add_option("identity", cfg.text, "identity, e.g. \"x y^2 = x^2 y\"")->required();
    decide_cmd->add_flag("--counterexample", cfg.counterexample,
                         "on failure, print the oracle's first counterexample");
    add_budget(*decide_cmd, cfg);
    add_format(*decide_cmd, cfg);

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force check over all substitutions");
    add_params(*oracle_cmd, cfg);
    oracle_cmd->add_option("identity", cfg.text, "identity")->required();
    add_budget(*oracle_cmd, cfg);
    add_format(*oracle_cmd, cfg);

    CLI::App* derive_cmd = app.add_subcommand("derive", "write a certificate deriving the identity");
    add_params(*derive_cmd, cfg);
    derive_cmd->add_option("identity", cfg.text, "identity")->required();
    derive_cmd->add_option("-o,--output", cfg.output_path, "certificate file (default: stdout)");
    add_format(*derive_cmd, cfg);

    CLI::App* check_cmd = app.add_subcommand("check", "verify a certificate file");
    check_cmd->add_option("certificate", cfg.certificate_path, "certificate file")->required();
    check_cmd->add_option("--goal", cfg.goal, "identity to prove (default: the file's goal)");
    add_format(*check_cmd, cfg);

    CLI::App* basis_cmd = app.add_subcommand("basis", "print the identity basis of C_{h,d}");
    add_params(*basis_cmd, cfg);
    add_format(*basis_cmd, cfg);

    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a word under a substitution");
    add_params(*eval_cmd, cfg);
    eval_cmd->add_option("word", cfg.text, "word, e.g. \"x^2 y\"")->required();
    eval_cmd->add_option("--subst", cfg.substitution, "substitution, e.g. x=3,y=1")->required();
    add_format(*eval_cmd, cfg);

    CLI::App* selftest_cmd =
        app.add_subcommand("selftest", "cross-validate oracle, decide, derive and check");
    selftest_cmd->add_option("--max-sum", cfg.sweep.max_sum, "largest h+d")
        ->check(CLI::Range(std::size_t{2}, std::size_t{64}));
    selftest_cmd->add_option("--max-letters", cfg.sweep.max_letters, "alphabet size")
        ->check(CLI::PositiveNumber);
    selftest_cmd->add_option("--max-length", cfg.sweep.max_length, "longest side")
        ->check(CLI::PositiveNumber);
    selftest_cmd->add_flag("--corrupt-decide", cfg.sweep.corrupt_decide)->group("");
    add_budget(*selftest_cmd, cfg);
    add_format(*selftest_cmd, cfg);

    std::vector<const char*> argv{"cycid"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kHolds;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kHolds;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (decide_cmd->parsed()) return cmd_decide(cfg, out);
        if (oracle_cmd->parsed()) return cmd_oracle(cfg, out);
        if (derive_cmd->parsed()) return cmd_derive(cfg, out, err);
        if (check_cmd->parsed()) return cmd_check(cfg, out, err);
        if (basis_cmd->parsed()) return cmd_basis(cfg, out);
        if (eval_cmd->parsed()) return cmd_eval(cfg, out);
        if (selftest_cmd->parsed()) return cmd_selftest(cfg, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kBudget;
    } catch (const ContractViolation& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace cycid
