#include <doctest.h>

#include <string>

#include "entsub/decompose.hpp"
#include "entsub/errors.hpp"
#include "entsub/serialize.hpp"

using namespace entsub;

namespace {

EmbedSpec spec_of(std::vector<int> dims, std::optional<int> k_sub = std::nullopt) {
    return EmbedSpec(LocalDims(std::move(dims)), k_sub);
}

} // namespace

TEST_CASE("rational strings round-trip") {
    CHECK(rational_to_string(Rational(3, 4)) == "3/4");
    CHECK(rational_to_string(Rational(-7)) == "-7/1");
    CHECK(rational_from_string("3/4") == Rational(3, 4));
    CHECK(rational_from_string("-12") == Rational(-12));
    CHECK(rational_from_string("6/4") == Rational(3, 2)); // normalized on parse
    CHECK_THROWS_AS(rational_from_string("1/0"), ParseError);
    CHECK_THROWS_AS(rational_from_string("a/2"), ParseError);
    CHECK_THROWS_AS(rational_from_string(""), ParseError);
    CHECK_THROWS_AS(rational_from_string("1/2/3"), ParseError);
}

TEST_CASE("floating strings keep 17 significant digits") {
    for (const double v : {1.0 / 3.0, -0.125, 6.02e23, 1e-300, 0.0, 123456789.123456789}) {
        CHECK(double_from_string(double_to_string(v)) == v);
    }
    CHECK(double_to_string(0.5) == "0.5");
    CHECK_THROWS_AS(double_from_string("fast"), ParseError);
    CHECK_THROWS_AS(double_from_string("1.5x"), ParseError);
}

TEST_CASE("state JSON round-trips exactly") {
    Ket k(LocalDims({2, 3}));
    k.set({0, 2}, GaussianRational{Rational(1, 2), Rational(-5, 7)});
    k.set({1, 0}, GaussianRational{Rational(3)});
    const nlohmann::json j = ket_to_json(k);
    CHECK(j["dims"] == nlohmann::json({2, 3}));
    CHECK(ket_from_json(j) == k);
    CHECK(ket_from_json(nlohmann::json::parse(j.dump())) == k);

    CKet c(LocalDims({2, 2}));
    c.set({1, 0}, {1.0 / 3.0, -2.75});
    const CKet back = cket_from_json(cket_to_json(c));
    CHECK(back.coeff({1, 0}) == c.coeff({1, 0}));

    CHECK_THROWS_AS(ket_from_json(nlohmann::json{{"terms", nlohmann::json::array()}}), ParseError);
    CHECK_THROWS_AS(ket_from_json(nlohmann::json{{"dims", {2, 3}}}), ParseError);
    nlohmann::json bad = ket_to_json(k);
    bad["terms"][0]["re"] = "x/y";
    CHECK_THROWS_AS(ket_from_json(bad), ParseError);
    nlohmann::json out_of_range = ket_to_json(k);
    out_of_range["terms"][0]["index"] = {0, 9};
    CHECK_THROWS_AS(ket_from_json(out_of_range), ParseError);
}

TEST_CASE("decomposition JSON round-trips byte for byte") {
    for (const auto& spec : {spec_of({2, 2, 2}), spec_of({2, 3, 4}), spec_of({3, 3, 3}, 0)}) {
        const Decomposition dec = decompose(spec, Scheme::Triangular, 5);
        const nlohmann::json j = decomposition_to_json(dec);
        const Decomposition back = decomposition_from_json(j);
        CHECK(back.product_part == dec.product_part);
        CHECK(back.ges_basis == dec.ges_basis);
        CHECK(back.ces_basis == dec.ces_basis);
        CHECK(back.ces_squared_norms == dec.ces_squared_norms);
        CHECK(back.seed == dec.seed);
        CHECK(back.scheme == dec.scheme);
        CHECK(back.spec == dec.spec);
        REQUIRE(back.points.size() == dec.points.size());
        for (std::size_t i = 0; i < dec.points.size(); ++i) {
            CHECK(back.points[i].x == dec.points[i].x);
            CHECK(back.points[i].free_coords == dec.points[i].free_coords);
        }
        CHECK(decomposition_to_json(back).dump(2) == j.dump(2));
    }
}

TEST_CASE("fourier decomposition JSON survives the float round-trip") {
    const Decomposition dec = decompose(spec_of({2, 2, 2, 2}), Scheme::Dft, 3);
    const nlohmann::json j = decomposition_to_json(dec);
    const Decomposition back = decomposition_from_json(j);
    REQUIRE(back.ces_basis_c.size() == dec.ces_basis_c.size());
    for (std::size_t i = 0; i < dec.ces_basis_c.size(); ++i) {
        CHECK(back.ces_basis_c[i].terms() == dec.ces_basis_c[i].terms());
    }
    CHECK(decomposition_to_json(back).dump(2) == j.dump(2));
}

TEST_CASE("reports embed into decomposition files on request") {
    const Decomposition dec = decompose(spec_of({2, 2, 2}), Scheme::Triangular, 0);
    const VerificationReport report = verify(dec, 3, 2, 4);
    const nlohmann::json without = decomposition_to_json(dec);
    CHECK_FALSE(without.contains("report"));
    const nlohmann::json with = decomposition_to_json(dec, &report);
    REQUIRE(with.contains("report"));
    CHECK(with["report"]["all_passed"] == true);
    CHECK(with["report"]["checks"].size() == report.checks.size());
    CHECK(with["format"] == "entsub-decomposition-v1");
}

TEST_CASE("malformed decomposition files are rejected") {
    const Decomposition dec = decompose(spec_of({2, 2, 2}), Scheme::Triangular, 0);
    nlohmann::json j = decomposition_to_json(dec);

    nlohmann::json wrong_family = j;
    wrong_family["spec"]["family"] = "heterogeneous";
    CHECK_THROWS_AS(decomposition_from_json(wrong_family), ParseError);

    nlohmann::json wrong_scheme = j;
    wrong_scheme["scheme"] = "spiral";
    CHECK_THROWS_AS(decomposition_from_json(wrong_scheme), ParseError);

    nlohmann::json missing = j;
    missing.erase("points");
    CHECK_THROWS_AS(decomposition_from_json(missing), ParseError);

    nlohmann::json bad_seed = j;
    bad_seed["seed"] = "zero";
    CHECK_THROWS_AS(decomposition_from_json(bad_seed), ParseError);
}

TEST_CASE("serialized output is canonical and deterministic") {
    const Decomposition a = decompose(spec_of({2, 3, 4}), Scheme::Triangular, 9);
    const Decomposition b = decompose(spec_of({2, 3, 4}), Scheme::Triangular, 9);
    CHECK(decomposition_to_json(a).dump(2) == decomposition_to_json(b).dump(2));
}
