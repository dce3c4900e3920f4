#include "selftest.hpp"

#include <iomanip>

#include "cyclic/classify.hpp"
#include "cyclic/derivation.hpp"

namespace cycid {

using namespace cyclic;

std::vector<Letter> sweep_alphabet(std::size_t n) {
    static const char* const kNames[] = {"x", "y", "z", "u", "v", "w"};
    std::vector<Letter> out;
    for (std::size_t i = 0; i < n; ++i) {
        out.emplace_back(i < std::size(kNames) ? std::string(kNames[i])
                                               : "t" + std::to_string(i - std::size(kNames) + 1));
    }
    return out;
}

std::vector<Word> enumerate_words(const std::vector<Letter>& alphabet, std::size_t max_length) {
    std::vector<Word> out;
    std::vector<Letters> layer{Letters{}};
    for (std::size_t len = 1; len <= max_length; ++len) {
        std::vector<Letters> next;
        next.reserve(layer.size() * alphabet.size());
        for (const Letters& w : layer) {
            for (const Letter& x : alphabet) {
                Letters longer = w;
                longer.push_back(x);
                next.push_back(std::move(longer));
            }
        }
        for (const Letters& w : next) out.emplace_back(w);
        layer = std::move(next);
    }
    return out;
}

SelftestReport run_selftest(const SelftestOptions& options) {
    SelftestReport report;
    const std::vector<Word> words =
        enumerate_words(sweep_alphabet(options.max_letters), options.max_length);

    for (std::size_t h = 1; h < options.max_sum; ++h) {
        for (std::size_t d = 1; h + d <= options.max_sum; ++d) {
            const CyclicParams p{h, d};
            const CyclicParams nilpotent{h, 1};
            const CyclicParams group{1, d};
            SelftestRow row{p};
            auto disagree = [&](const Identity& id, const std::string& what) {
                report.disagreement = "h=" + std::to_string(h) + ", d=" + std::to_string(d) +
                                      ": " + render_identity(id) + ": " + what;
            };

            for (const Word& u : words) {
                for (const Word& v : words) {
                    const Identity id{u, v};
                    ++row.identities;
                    const bool oracle = satisfies_oracle(p, id, options.budget).holds;
                    Verdict verdict = decide(p, id);
                    if (options.corrupt_decide) verdict.holds = !verdict.holds;

                    if (verdict.holds != oracle) {
                        disagree(id, oracle ? "oracle holds, decide fails"
                                            : "oracle fails, decide holds");
                    } else if (oracle != (satisfies_oracle(nilpotent, id, options.budget).holds &&
                                          satisfies_oracle(group, id, options.budget).holds)) {
                        disagree(id, "subdirect decomposition disagrees with the oracle");
                    } else {
                        const Derivation derivation = derive(p, id);
                        if (derivation.certificate.has_value() != oracle) {
                            disagree(id, oracle ? "no certificate for a satisfied identity"
                                                : "certificate for a failing identity");
                        } else if (derivation.certificate) {
                            const CheckResult check = check_certificate(*derivation.certificate, id);
                            if (!check.accepted) {
                                disagree(id, "certificate rejected at step " +
                                                 std::to_string(*check.failing_step) + ": " +
                                                 check.reason);
                            }
                            ++row.certificates;
                        }
                    }
                    if (report.disagreement) break;
                    if (oracle) ++row.holds;
                }
                if (report.disagreement) break;
            }

            report.identities += row.identities;
            report.holds += row.holds;
            report.certificates += row.certificates;
            report.rows.push_back(row);
            if (report.disagreement) return report;
        }
    }
    return report;
}

void print_report(const SelftestReport& report, std::ostream& out) {
    out << std::setw(3) << "h" << std::setw(4) << "d" << std::setw(12) << "identities"
        << std::setw(8) << "holds" << std::setw(14) << "certificates" << '\n';
    for (const SelftestRow& row : report.rows) {
        out << std::setw(3) << row.params.index << std::setw(4) << row.params.period
            << std::setw(12) << row.identities << std::setw(8) << row.holds << std::setw(14)
            << row.certificates << '\n';
    }
    out << "total: " << report.identities << " identities, " << report.holds << " hold, "
        << report.certificates << " certificates checked\n";
    if (report.disagreement) {
        out << "DISAGREEMENT: " << *report.disagreement << '\n';
    } else {
        out << "no disagreements\n";
    }
}

}  // namespace cycid
