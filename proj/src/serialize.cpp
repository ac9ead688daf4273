#include "entsub/serialize.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "entsub/errors.hpp"

namespace entsub {

namespace {

const nlohmann::json& require_field(const nlohmann::json& j, const char* key) {
    if (!j.is_object()) throw ParseError("expected an object carrying '" + std::string(key) + "'");
    const auto it = j.find(key);
    if (it == j.end()) throw ParseError("missing field '" + std::string(key) + "'");
    return *it;
}

std::vector<int> int_list(const nlohmann::json& j, const char* what) {
    if (!j.is_array()) throw ParseError("field '" + std::string(what) + "' must be an array");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw ParseError("field '" + std::string(what) + "' must hold integers");
        out.push_back(v.get<int>());
    }
    return out;
}

std::string string_field(const nlohmann::json& j, const char* key) {
    const auto& v = require_field(j, key);
    if (!v.is_string()) throw ParseError("field '" + std::string(key) + "' must be a string");
    return v.get<std::string>();
}

nlohmann::json exact_terms_to_json(const Ket& k) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [idx, c] : k.terms()) {
        terms.push_back({{"index", idx},
                         {"re", rational_to_string(c.re)},
                         {"im", rational_to_string(c.im)}});
    }
    return terms;
}

Ket exact_terms_from_json(const nlohmann::json& terms, const LocalDims& dims) {
    if (!terms.is_array()) throw ParseError("field 'terms' must be an array");
    Ket k(dims);
    for (const auto& t : terms) {
        const auto idx = int_list(require_field(t, "index"), "index");
        try {
            k.set(idx, GaussianRational{rational_from_string(string_field(t, "re")),
                                        rational_from_string(string_field(t, "im"))});
        } catch (const RangeError&) {
            throw ParseError("term index out of range for the declared dims");
        }
    }
    return k;
}

nlohmann::json float_terms_to_json(const CKet& k) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [idx, c] : k.terms()) {
        terms.push_back({{"index", idx},
                         {"re", double_to_string(c.real())},
                         {"im", double_to_string(c.imag())}});
    }
    return terms;
}

CKet float_terms_from_json(const nlohmann::json& terms, const LocalDims& dims) {
    if (!terms.is_array()) throw ParseError("field 'terms' must be an array");
    CKet k(dims);
    for (const auto& t : terms) {
        const auto idx = int_list(require_field(t, "index"), "index");
        try {
            k.set(idx, {double_from_string(string_field(t, "re")),
                        double_from_string(string_field(t, "im"))});
        } catch (const RangeError&) {
            throw ParseError("term index out of range for the declared dims");
        }
    }
    return k;
}

double cket_norm_sq(const CKet& k) {
    double acc = 0.0;
    for (const auto& [idx, c] : k.terms()) acc += std::norm(c);
    return acc;
}

} // namespace

std::string double_to_string(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double double_from_string(const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0')
        throw ParseError("bad floating value '" + s + "'");
    return v;
}

nlohmann::json ket_to_json(const Ket& k) {
    return {{"dims", k.dims().as_vector()}, {"terms", exact_terms_to_json(k)}};
}

Ket ket_from_json(const nlohmann::json& j) {
    LocalDims dims(int_list(require_field(j, "dims"), "dims"));
    return exact_terms_from_json(require_field(j, "terms"), dims);
}

nlohmann::json cket_to_json(const CKet& k) {
    return {{"dims", k.dims().as_vector()}, {"terms", float_terms_to_json(k)}};
}

CKet cket_from_json(const nlohmann::json& j) {
    LocalDims dims(int_list(require_field(j, "dims"), "dims"));
    return float_terms_from_json(require_field(j, "terms"), dims);
}

nlohmann::json report_to_json(const VerificationReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    return {{"all_passed", r.all_passed()}, {"checks", checks}};
}

nlohmann::json decomposition_to_json(const Decomposition& dec, const VerificationReport* report) {
    nlohmann::json spec = {{"dims", dec.spec.dims().as_vector()},
                           {"family", family_name(dec.spec.family())}};
    spec["k_sub"] = dec.spec.homogeneous() ? nlohmann::json(dec.spec.k_sub())
                                           : nlohmann::json(nullptr);

    nlohmann::json points = nlohmann::json::array();
    for (const auto& p : dec.points) {
        nlohmann::json free_coords = nlohmann::json::array();
        for (const auto& f : p.free_coords) free_coords.push_back(rational_to_string(f));
        points.push_back({{"x", rational_to_string(p.x)}, {"free", free_coords}});
    }

    auto exact_part = [](const std::vector<Ket>& kets) {
        nlohmann::json part = nlohmann::json::array();
        for (const auto& k : kets) {
            part.push_back({{"terms", exact_terms_to_json(k)},
                            {"squared_norm", rational_to_string(norm_sq(k))}});
        }
        return part;
    };

    nlohmann::json out = {{"format", "entsub-decomposition-v1"},
                          {"spec", spec},
                          {"scheme", scheme_name(dec.scheme)},
                          {"seed", dec.seed},
                          {"points", points},
                          {"product_part", exact_part(dec.product_part)},
                          {"ges_basis", exact_part(dec.ges_basis)}};

    nlohmann::json ces = nlohmann::json::array();
    if (dec.scheme == Scheme::Triangular) {
        for (std::size_t i = 0; i < dec.ces_basis.size(); ++i) {
            ces.push_back({{"terms", exact_terms_to_json(dec.ces_basis[i])},
                           {"squared_norm", rational_to_string(dec.ces_squared_norms[i])}});
        }
    } else {
        for (const auto& k : dec.ces_basis_c) {
            ces.push_back({{"terms", float_terms_to_json(k)},
                           {"squared_norm", double_to_string(cket_norm_sq(k))}});
        }
    }
    out["ces_basis"] = ces;
    if (report != nullptr) out["report"] = report_to_json(*report);
    return out;
}

Decomposition decomposition_from_json(const nlohmann::json& j) {
    const auto& spec_json = require_field(j, "spec");
    LocalDims dims(int_list(require_field(spec_json, "dims"), "dims"));
    const auto& k_sub_json = require_field(spec_json, "k_sub");
    std::optional<int> k_sub;
    if (!k_sub_json.is_null()) {
        if (!k_sub_json.is_number_integer()) throw ParseError("field 'k_sub' must be an integer or null");
        k_sub = k_sub_json.get<int>();
    }
    EmbedSpec spec(dims, k_sub);
    if (string_field(spec_json, "family") != family_name(spec.family()))
        throw ParseError("family tag does not match the dims and k_sub");

    const auto scheme_str = string_field(j, "scheme");
    Scheme scheme;
    if (scheme_str == "triangular") {
        scheme = Scheme::Triangular;
    } else if (scheme_str == "dft") {
        scheme = Scheme::Dft;
    } else {
        throw ParseError("unknown scheme '" + scheme_str + "'");
    }

    const auto& seed_json = require_field(j, "seed");
    if (!seed_json.is_number_unsigned() && !seed_json.is_number_integer())
        throw ParseError("field 'seed' must be an integer");
    const auto seed = seed_json.get<std::uint64_t>();

    Decomposition dec{spec, scheme, seed, {}, {}, {}, {}, {}, {}};

    for (const auto& p : require_field(j, "points")) {
        EvaluationPoint point;
        point.x = rational_from_string(string_field(p, "x"));
        const auto& free_json = require_field(p, "free");
        if (!free_json.is_array()) throw ParseError("field 'free' must be an array");
        for (const auto& f : free_json) {
            if (!f.is_string()) throw ParseError("free coordinates must be rational strings");
            point.free_coords.push_back(rational_from_string(f.get<std::string>()));
        }
        dec.points.push_back(std::move(point));
    }

    for (const auto& v : require_field(j, "product_part")) {
        dec.product_part.push_back(exact_terms_from_json(require_field(v, "terms"), dims));
    }
    for (const auto& v : require_field(j, "ges_basis")) {
        dec.ges_basis.push_back(exact_terms_from_json(require_field(v, "terms"), dims));
    }
    for (const auto& v : require_field(j, "ces_basis")) {
        if (scheme == Scheme::Triangular) {
            dec.ces_basis.push_back(exact_terms_from_json(require_field(v, "terms"), dims));
            dec.ces_squared_norms.push_back(
                rational_from_string(string_field(v, "squared_norm")));
        } else {
            dec.ces_basis_c.push_back(float_terms_from_json(require_field(v, "terms"), dims));
        }
    }
    return dec;
}

} // namespace entsub
