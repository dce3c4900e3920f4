#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "cyclic/derivation.hpp"

namespace cyclic {

/// A certificate together with the identity it claims to prove.
struct CertificateDocument {
    Certificate certificate;
    Identity goal;
};

/// Malformed certificate document. `location()` is a JSON-pointer-like path
/// ("/steps/3/map/x") or a byte offset for syntax errors.
class FormatError : public std::runtime_error {
public:
    FormatError(std::string location, const std::string& message);

    const std::string& location() const noexcept { return location_; }

private:
    std::string location_;
};

nlohmann::ordered_json axiom_to_json(const BasisAxiom& a);
BasisAxiom axiom_from_json(const nlohmann::ordered_json& j, const std::string& location = "");

nlohmann::ordered_json step_to_json(const Step& step);
Step step_from_json(const nlohmann::ordered_json& j, const std::string& location);

nlohmann::ordered_json to_json(const CertificateDocument& doc);
CertificateDocument certificate_from_json(const nlohmann::ordered_json& j);

/// Serialized document, two-space indented, trailing newline.
std::string write_certificate(const CertificateDocument& doc);
CertificateDocument read_certificate(std::string_view text);

}  // namespace cyclic
