#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "entsub/combinatorics.hpp"
#include "entsub/embeddings.hpp"
#include "entsub/errors.hpp"
#include "entsub/multirank.hpp"

using namespace entsub;

namespace {

EmbedSpec spec_of(std::vector<int> dims, std::optional<int> k_sub = std::nullopt) {
    return EmbedSpec(LocalDims(std::move(dims)), k_sub);
}

MultiIndex repeated(int n, int level) { return MultiIndex(static_cast<std::size_t>(n), level); }

} // namespace

TEST_CASE("EmbedSpec classifies families and validates the depth") {
    CHECK(spec_of({2, 2, 2}).family() == Family::QubitDicke);
    CHECK(spec_of({3, 3, 3}, 0).family() == Family::QuditVeronese);
    CHECK(spec_of({3, 3, 3}, 1).family() == Family::QuditGamma);
    CHECK(spec_of({3, 3, 3}).family() == Family::QuditGamma); // depth defaults to d-2
    CHECK(spec_of({3, 3, 3}).k_sub() == 1);
    CHECK(spec_of({4, 4, 4}, 1).family() == Family::QuditKSub);
    CHECK(spec_of({2, 3, 4}).family() == Family::Heterogeneous);
    CHECK(spec_of({2, 2}).k_sub() == 0);

    CHECK_THROWS_AS(spec_of({2, 3, 4}, 1), SpecMismatch);
    CHECK_THROWS_AS(spec_of({2, 3, 4}).k_sub(), SpecMismatch);
    CHECK_THROWS_AS(spec_of({3, 3, 3}, 2), RangeError);
    CHECK_THROWS_AS(spec_of({3, 3, 3}, -1), RangeError);

    CHECK(std::string(family_name(Family::QubitDicke)) == "qubit_dicke");
    CHECK(std::string(family_name(Family::Heterogeneous)) == "heterogeneous");
}

TEST_CASE("nupb_size follows the per-family counting formulas") {
    CHECK(nupb_size(spec_of({2, 2, 2})) == 4);          // n+1
    CHECK(nupb_size(spec_of({2, 2, 2, 2})) == 5);
    CHECK(nupb_size(spec_of({3, 3, 3}, 0)) == 10);      // C(n+d-1, d-1)
    CHECK(nupb_size(spec_of({3, 3, 3}, 1)) == 7);       // n(d-1)+1
    CHECK(nupb_size(spec_of({4, 4, 4}, 0)) == 20);
    CHECK(nupb_size(spec_of({4, 4, 4}, 1)) == 16);      // distinct monomials
    CHECK(nupb_size(spec_of({4, 4, 4}, 2)) == 10);
    CHECK(nupb_size(spec_of({2, 3, 4})) == 7);          // sum(d_j - 1) + 1
    CHECK(nupb_size(spec_of({2, 2, 3})) == 5);

    CHECK(free_coord_count(spec_of({4, 4, 4}, 0)) == 2);
    CHECK(free_coord_count(spec_of({4, 4, 4}, 1)) == 1);
    CHECK(free_coord_count(spec_of({4, 4, 4}, 2)) == 0);
    CHECK(free_coord_count(spec_of({2, 3, 4})) == 0);
}

TEST_CASE("site_coefficients substitutes powers and free coordinates") {
    // Fully substituted ququart site at x = 2: consecutive powers.
    const EmbedSpec gamma = spec_of({4, 4, 4}, 2);
    const EvaluationPoint p2{Rational(2), {}};
    CHECK(site_coefficients(gamma, 0, p2) ==
          std::vector<GaussianRational>{GaussianRational{1}, GaussianRational{2}, GaussianRational{4},
                                        GaussianRational{8}});

    // Depth 1 leaves one free coordinate after the powers 1, x, x^2.
    const EmbedSpec mid = spec_of({4, 4, 4}, 1);
    const EvaluationPoint p35{Rational(3), {Rational(5)}};
    CHECK(site_coefficients(mid, 0, p35) ==
          std::vector<GaussianRational>{GaussianRational{1}, GaussianRational{3}, GaussianRational{9},
                                        GaussianRational{5}});
    CHECK_THROWS_AS(site_coefficients(mid, 0, p2), SpecMismatch);

    // Qubit site: (1, x).
    const EvaluationPoint p0{Rational(0), {}};
    CHECK(site_coefficients(spec_of({2, 2, 2}), 1, p0) ==
          std::vector<GaussianRational>{GaussianRational{1}, GaussianRational{0}});

    // Heterogeneous sites carry powers up to their own dimension.
    const EmbedSpec het = spec_of({2, 3, 4});
    const EvaluationPoint p3{Rational(3), {}};
    CHECK(site_coefficients(het, 0, p3) ==
          std::vector<GaussianRational>{GaussianRational{1}, GaussianRational{3}});
    CHECK(site_coefficients(het, 2, p3) ==
          std::vector<GaussianRational>{GaussianRational{1}, GaussianRational{3}, GaussianRational{9},
                                        GaussianRational{27}});
}

TEST_CASE("nupb_member is the tensor product of the site coefficient lists") {
    const EmbedSpec het = spec_of({2, 3, 4});
    const EvaluationPoint p{Rational(2), {}};
    const Ket member = nupb_member(het, p);
    CHECK(member.term_count() == 24); // all coefficients are nonzero powers of 2
    // Coefficient of |i,j,l> is x^(i+j+l).
    CHECK(member.coeff({1, 2, 3}) == GaussianRational{64});
    CHECK(member.coeff({0, 1, 1}) == GaussianRational{4});
    CHECK(is_fully_product(member));

    // x = 0 collapses to |0...0>.
    const Ket origin = nupb_member(het, EvaluationPoint{Rational(0), {}});
    CHECK(origin.term_count() == 1);
    CHECK(origin.coeff({0, 0, 0}) == GaussianRational{1});
}

TEST_CASE("choose_generic_points certifies every family deterministically") {
    const std::vector<EmbedSpec> specs = {
        spec_of({2, 2, 2}),    spec_of({2, 2, 2, 2}), spec_of({3, 3, 3}, 0),
        spec_of({3, 3, 3}, 1), spec_of({4, 4, 4}, 1), spec_of({2, 3, 4}),
        spec_of({2, 2, 3}),
    };
    for (const auto& spec : specs) {
        CAPTURE(spec.dims().as_vector());
        const auto points = choose_generic_points(spec, 11);
        CHECK(BigInt(points.size()) == nupb_size(spec));
        // x-values are the consecutive integers 0, 1, 2, ...
        for (std::size_t i = 0; i < points.size(); ++i) {
            CHECK(points[i].x == Rational(static_cast<long long>(i)));
            CHECK(static_cast<int>(points[i].free_coords.size()) == free_coord_count(spec));
        }
        const auto again = choose_generic_points(spec, 11);
        for (std::size_t i = 0; i < points.size(); ++i) {
            CHECK(points[i].x == again[i].x);
            CHECK(points[i].free_coords == again[i].free_coords);
        }
        const Nupb nupb = build_nupb(spec, points); // throws if the certificate fails
        CHECK(BigInt(nupb.members.size()) == nupb_size(spec));
        CHECK(span_rank(nupb.members) == static_cast<long long>(nupb.members.size()));
        for (const auto& m : nupb.members) CHECK(is_fully_product(m));
    }
}

TEST_CASE("build_nupb reports colliding points") {
    const EmbedSpec spec = spec_of({2, 2, 2});
    auto points = choose_generic_points(spec, 0);
    points[2] = points[1]; // duplicate member can never enlarge the span
    bool caught = false;
    try {
        build_nupb(spec, points);
    } catch (const RankDeficient& e) {
        caught = true;
        REQUIRE(e.colliding().size() == 1);
        CHECK(e.colliding().front() == 2);
    }
    CHECK(caught);
    points.pop_back();
    CHECK_THROWS_AS(build_nupb(spec, points), RangeError);
}

TEST_CASE("generator_states spans the product basis with classified states") {
    struct Case {
        EmbedSpec spec;
        std::vector<MultiIndex> products;
    };
    const std::vector<Case> cases = {
        {spec_of({2, 2, 2}), {repeated(3, 0), repeated(3, 1)}},
        {spec_of({3, 3, 3}, 0), {repeated(3, 0), repeated(3, 1), repeated(3, 2)}},
        {spec_of({3, 3, 3}, 1), {repeated(3, 0), repeated(3, 2)}},
        {spec_of({4, 4, 4}, 1), {repeated(3, 0), repeated(3, 2), repeated(3, 3)}},
        {spec_of({2, 3, 4}), {{0, 0, 0}, {1, 2, 3}}},
    };
    for (const auto& c : cases) {
        CAPTURE(c.spec.dims().as_vector());
        const auto generators = generator_states(c.spec);
        CHECK(BigInt(generators.size()) == nupb_size(c.spec));

        // The product-class entries are exactly the expected simple tensors.
        std::vector<Ket> product_entries;
        for (const auto& g : generators) {
            if (g.cls == StateClass::Product) product_entries.push_back(g.state);
        }
        REQUIRE(product_entries.size() == c.products.size());
        std::set<MultiIndex> found;
        for (const auto& p : product_entries) {
            REQUIRE(p.term_count() == 1);
            found.insert(p.terms().begin()->first);
        }
        CHECK(found == std::set<MultiIndex>(c.products.begin(), c.products.end()));

        // Distinct generators have disjoint supports, hence vanish pairwise.
        for (std::size_t i = 0; i < generators.size(); ++i) {
            for (std::size_t j = i + 1; j < generators.size(); ++j) {
                CHECK(inner(generators[i].state, generators[j].state).is_zero());
            }
        }

        // Every entangled-class generator is genuinely entangled.
        for (const auto& g : generators) {
            if (g.cls == StateClass::Gme) {
                CHECK(is_gme(g.state).gme);
            } else {
                CHECK(is_fully_product(g.state));
            }
        }

        // Generators and product-basis members span the same subspace.
        const Nupb nupb = build_nupb(c.spec, choose_generic_points(c.spec, 5));
        ExactSpan generator_span;
        for (const auto& g : generators) CHECK(generator_span.insert(g.state));
        CHECK(BigInt(generator_span.rank()) == nupb_size(c.spec));
        for (const auto& m : nupb.members) CHECK(generator_span.contains(m));
        ExactSpan member_span;
        for (const auto& m : nupb.members) member_span.insert(m);
        for (const auto& g : generators) CHECK(member_span.contains(g.state));
    }
}

TEST_CASE("qubit generators are the Dicke ladder in weight order") {
    const auto generators = generator_states(spec_of({2, 2, 2, 2}));
    REQUIRE(generators.size() == 5);
    for (int k = 0; k <= 4; ++k) {
        CHECK(generators[static_cast<std::size_t>(k)].state == dicke(4, k));
    }
    CHECK(generators[0].cls == StateClass::Product);
    CHECK(generators[4].cls == StateClass::Product);
    for (int k = 1; k <= 3; ++k) CHECK(generators[static_cast<std::size_t>(k)].cls == StateClass::Gme);
}

TEST_CASE("fully generic generators follow descending occupations") {
    const auto generators = generator_states(spec_of({3, 3, 3}, 0));
    const auto occupations = enumerate_occupations(3, 3);
    REQUIRE(generators.size() == occupations.size());
    for (std::size_t i = 0; i < generators.size(); ++i) {
        CHECK(generators[i].state == generalized_dicke(3, 3, occupations[i]));
    }
    // Concentrated occupations are the product entries: (3,0,0),(0,3,0),(0,0,3).
    std::vector<std::size_t> product_positions;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].cls == StateClass::Product) product_positions.push_back(i);
    }
    CHECK(product_positions == std::vector<std::size_t>{0, 6, 9});
}

TEST_CASE("fixed-sum generators walk the total ascending") {
    const auto generators = generator_states(spec_of({3, 3, 3}, 1));
    REQUIRE(generators.size() == 7);
    for (int k = 0; k <= 6; ++k) {
        CHECK(generators[static_cast<std::size_t>(k)].state == g_state(3, 3, k));
    }
    const auto het = generator_states(spec_of({2, 3, 4}));
    REQUIRE(het.size() == 7);
    for (int k = 0; k <= 6; ++k) {
        CHECK(het[static_cast<std::size_t>(k)].state == frak_g_state(LocalDims({2, 3, 4}), k));
    }
}

TEST_CASE("split-family generators cover every monomial class once") {
    const EmbedSpec spec = spec_of({4, 4, 4}, 1);
    const auto generators = generator_states(spec);
    REQUIRE(BigInt(generators.size()) == count_distinct_monomials(3, 4, 1));
    // Blocks are keyed by (K descending, s ascending, tail descending); the
    // union of supports partitions the whole label set.
    std::set<MultiIndex> all_labels;
    std::size_t total_terms = 0;
    for (const auto& g : generators) {
        for (const auto& [idx, coeff] : g.state.terms()) {
            CHECK(coeff == GaussianRational{1});
            all_labels.insert(idx);
        }
        total_terms += g.state.term_count();
    }
    CHECK(all_labels.size() == total_terms); // supports are disjoint
    CHECK(total_terms == 64);                // and exhaustive
}
