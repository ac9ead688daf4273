#pragma once

#include <string>

#include <json.hpp>

#include "entsub/decompose.hpp"

namespace entsub {

/// Floating value as a decimal string with 17 significant digits (lossless
/// for doubles, deterministic across platforms with IEEE semantics).
std::string double_to_string(double v);
double double_from_string(const std::string& s);

/// State files: {"dims": [...], "terms": [{"index": [...], "re": "p/q",
/// "im": "p/q"}, ...]} with terms in ascending label order. Floating states
/// use 17-significant-digit decimal strings for re/im instead.
nlohmann::json ket_to_json(const Ket& k);
Ket ket_from_json(const nlohmann::json& j);
nlohmann::json cket_to_json(const CKet& k);
CKet cket_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerificationReport& r);

/// Decomposition files carry the spec (dims, k_sub, family tag), scheme,
/// seed, certified evaluation points, and the three parts as term lists with
/// squared-norm strings; an optional verification report may be attached.
/// Triangular-scheme files round-trip losslessly.
nlohmann::json decomposition_to_json(const Decomposition& dec,
                                     const VerificationReport* report = nullptr);
Decomposition decomposition_from_json(const nlohmann::json& j);

/// All parse failures throw ParseError with a path-ish message.

} // namespace entsub
