#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "entsub/combinatorics.hpp"
#include "entsub/errors.hpp"

using namespace entsub;

namespace {

// Oracle: Pascal-triangle recursion, independent of the product formula used
// by the implementation.
BigInt pascal(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    static std::map<std::pair<long long, long long>, BigInt> memo;
    if (k == 0 || k == n) return 1;
    const auto key = std::make_pair(n, k);
    if (const auto it = memo.find(key); it != memo.end()) return it->second;
    const BigInt value = pascal(n - 1, k - 1) + pascal(n - 1, k);
    memo.emplace(key, value);
    return value;
}

// Oracle: odometer enumeration of every tuple 0 <= x_j <= caps[j], bucketing
// by sum. Exponential but fine at test sizes.
std::map<long long, std::vector<std::vector<int>>>
brute_bounded_tuples(const std::vector<int>& caps) {
    std::map<long long, std::vector<std::vector<int>>> buckets;
    std::vector<int> tuple(caps.size(), 0);
    while (true) {
        long long sum = 0;
        for (int v : tuple) sum += v;
        buckets[sum].push_back(tuple);
        std::size_t pos = caps.size();
        while (pos > 0) {
            --pos;
            if (tuple[pos] < caps[pos]) {
                ++tuple[pos];
                std::fill(tuple.begin() + static_cast<std::ptrdiff_t>(pos) + 1, tuple.end(), 0);
                break;
            }
            if (pos == 0) return buckets;
        }
    }
}

// Oracle: count distinct permutations of the multiset described by an
// occupation vector, via std::next_permutation.
long long brute_arrangements(int n, const std::vector<int>& occ) {
    std::vector<int> word;
    for (std::size_t level = 0; level < occ.size(); ++level) {
        for (int c = 0; c < occ[level]; ++c) word.push_back(static_cast<int>(level));
    }
    REQUIRE(static_cast<int>(word.size()) == n);
    std::sort(word.begin(), word.end());
    long long count = 0;
    do {
        ++count;
    } while (std::next_permutation(word.begin(), word.end()));
    return count;
}

// Oracle: enumerate all d^n ways of picking one alphabet symbol per factor
// from {x^0..x^{k_sub+1}, y_{k_sub+2}, .., y_{d-1}} and count the distinct
// products, each canonicalized as (x-degree, per-y multiplicities).
long long brute_monomial_count(int n, int d, int k_sub) {
    const int free_vars = d - k_sub - 2;
    std::set<std::pair<long long, std::vector<int>>> monomials;
    std::vector<int> choice(static_cast<std::size_t>(n), 0);
    while (true) {
        long long x_degree = 0;
        std::vector<int> y_mult(static_cast<std::size_t>(std::max(free_vars, 0)), 0);
        for (int c : choice) {
            if (c <= k_sub + 1) {
                x_degree += c;
            } else {
                ++y_mult[static_cast<std::size_t>(c - k_sub - 2)];
            }
        }
        monomials.emplace(x_degree, y_mult);
        int pos = n;
        while (pos > 0) {
            --pos;
            if (choice[static_cast<std::size_t>(pos)] < d - 1) {
                ++choice[static_cast<std::size_t>(pos)];
                std::fill(choice.begin() + pos + 1, choice.end(), 0);
                break;
            }
            if (pos == 0) return static_cast<long long>(monomials.size());
        }
    }
}

} // namespace

TEST_CASE("binomial matches the Pascal recursion and handles edges") {
    for (long long n = 0; n <= 25; ++n) {
        for (long long k = -1; k <= n + 1; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(binomial(n, k) == pascal(n, k));
        }
    }
    // Frozen spot values (hand-checked standard constants).
    CHECK(binomial(10, 5) == 252);
    CHECK(binomial(30, 12) == BigInt("86493225"));
    CHECK(binomial(52, 5) == BigInt("2598960"));
    CHECK(binomial(100, 50) == BigInt("100891344545564193334812497256"));
    CHECK_THROWS_AS(binomial(-1, 0), RangeError);
}

TEST_CASE("multinomial matches the next_permutation oracle") {
    // All occupation vectors with up to 4 levels and total up to 7.
    for (int n = 1; n <= 7; ++n) {
        for (const auto& [sum, tuples] : brute_bounded_tuples({n, n, n, n})) {
            if (sum != n) continue;
            for (const auto& occ : tuples) {
                CAPTURE(occ);
                CHECK(multinomial(n, occ) == brute_arrangements(n, occ));
            }
        }
    }
    CHECK(multinomial(4, {2, 1, 1}) == 12);
    CHECK(multinomial(6, {2, 2, 2}) == 90);
    CHECK(multinomial(3, {0, 3}) == 1);
    CHECK_THROWS_AS(multinomial(4, {2, 1}), TotalMismatch);
    CHECK_THROWS_AS(multinomial(1, {2, -1}), RangeError);
}

TEST_CASE("bounded_composition_count matches odometer enumeration") {
    const std::vector<std::vector<int>> cap_sets = {
        {1, 1}, {2, 2}, {3, 3}, {1, 2, 3}, {3, 3, 3}, {2, 3, 4}, {1, 1, 1, 1}, {3, 3, 3, 3},
        {1, 2, 2, 3},
    };
    for (const auto& caps : cap_sets) {
        const auto buckets = brute_bounded_tuples(caps);
        long long cap_sum = 0;
        for (int c : caps) cap_sum += c;
        for (long long k = -1; k <= cap_sum + 1; ++k) {
            CAPTURE(caps);
            CAPTURE(k);
            const auto it = buckets.find(k);
            const long long expected = it == buckets.end() ? 0 : static_cast<long long>(it->second.size());
            CHECK(bounded_composition_count(static_cast<int>(caps.size()), k, caps) == expected);
        }
    }
    // Frozen: x1<=1, x2<=2, x3<=3 with sum 3 has the six solutions
    // (0,0,3),(0,1,2),(0,2,1),(1,0,2),(1,1,1),(1,2,0).
    CHECK(bounded_composition_count(3, 3, {1, 2, 3}) == 6);
    CHECK_THROWS_AS(bounded_composition_count(2, 1, {1}), RangeError);
    CHECK_THROWS_AS(bounded_composition_count(2, 1, {1, 0}), RangeError);
}

TEST_CASE("enumerate_bounded_compositions agrees with its count and ordering") {
    const std::vector<std::vector<int>> cap_sets = {{1, 2, 3}, {2, 2, 2}, {3, 1}, {2, 3, 4}};
    for (const auto& caps : cap_sets) {
        const auto buckets = brute_bounded_tuples(caps);
        long long cap_sum = 0;
        for (int c : caps) cap_sum += c;
        for (long long k = 0; k <= cap_sum; ++k) {
            const auto got = enumerate_bounded_compositions(static_cast<int>(caps.size()), k, caps);
            CAPTURE(caps);
            CAPTURE(k);
            CHECK(BigInt(got.size()) == bounded_composition_count(static_cast<int>(caps.size()), k, caps));
            CHECK(std::is_sorted(got.begin(), got.end()));
            auto expected = buckets.count(k) ? buckets.at(k) : std::vector<std::vector<int>>{};
            std::sort(expected.begin(), expected.end());
            CHECK(got == expected);
        }
    }
}

TEST_CASE("sum of bounded composition counts telescopes to the full box") {
    for (int n = 2; n <= 5; ++n) {
        for (int d = 2; d <= 5; ++d) {
            const std::vector<int> caps(static_cast<std::size_t>(n), d - 1);
            BigInt total = 0;
            for (long long k = 0; k <= static_cast<long long>(n) * (d - 1); ++k) {
                total += bounded_composition_count(n, k, caps);
            }
            BigInt box = 1;
            for (int j = 0; j < n; ++j) box *= d;
            CHECK(total == box);
        }
    }
}

TEST_CASE("count_distinct_monomials matches the exhaustive product oracle") {
    for (int d = 2; d <= 5; ++d) {
        for (int n = 1; n <= 5; ++n) {
            for (int k_sub = 0; k_sub <= d - 2; ++k_sub) {
                CAPTURE(n);
                CAPTURE(d);
                CAPTURE(k_sub);
                CHECK(count_distinct_monomials(n, d, k_sub) == brute_monomial_count(n, d, k_sub));
            }
        }
    }
    // Frozen (exhaustive oracle above): three ququart sites.
    CHECK(count_distinct_monomials(3, 4, 0) == 20);
    CHECK(count_distinct_monomials(3, 4, 1) == 16);
    CHECK(count_distinct_monomials(3, 4, 2) == 10);
}

TEST_CASE("count_distinct_monomials closed-form specializations") {
    for (int d = 2; d <= 6; ++d) {
        for (int n = 1; n <= 6; ++n) {
            CHECK(count_distinct_monomials(n, d, 0) == binomial(n + d - 1, d - 1));
            CHECK(count_distinct_monomials(n, d, d - 2) ==
                  BigInt(static_cast<long long>(n) * (d - 1) + 1));
        }
    }
    CHECK_THROWS_AS(count_distinct_monomials(0, 3, 0), RangeError);
    CHECK_THROWS_AS(count_distinct_monomials(2, 1, 0), RangeError);
    CHECK_THROWS_AS(count_distinct_monomials(2, 3, 2), RangeError);
    CHECK_THROWS_AS(count_distinct_monomials(2, 3, -1), RangeError);
}

TEST_CASE("enumerate_occupations lists weak compositions descending") {
    for (int n = 0; n <= 5; ++n) {
        for (int d = 1; d <= 4; ++d) {
            const auto got = enumerate_occupations(n, d);
            CAPTURE(n);
            CAPTURE(d);
            CHECK(BigInt(got.size()) == binomial(n + d - 1, d - 1));
            CHECK(std::is_sorted(got.begin(), got.end(), std::greater<>()));
            std::set<std::vector<int>> seen;
            for (const auto& occ : got) {
                CHECK(static_cast<int>(occ.size()) == d);
                int sum = 0;
                for (int v : occ) {
                    CHECK(v >= 0);
                    sum += v;
                }
                CHECK(sum == n);
                seen.insert(occ);
            }
            CHECK(seen.size() == got.size());
        }
    }
    CHECK(enumerate_occupations(0, 3) == std::vector<std::vector<int>>{{0, 0, 0}});
    CHECK(enumerate_occupations(4, 1) == std::vector<std::vector<int>>{{4}});
    CHECK(enumerate_occupations(2, 2) ==
          std::vector<std::vector<int>>{{2, 0}, {1, 1}, {0, 2}});
    CHECK_THROWS_AS(enumerate_occupations(-1, 2), RangeError);
    CHECK_THROWS_AS(enumerate_occupations(2, 0), RangeError);
}

TEST_CASE("nth_prime serves the prime sequence") {
    const std::vector<long long> first = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                          31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
    for (std::size_t i = 0; i < first.size(); ++i) CHECK(nth_prime(i) == first[i]);
    CHECK(nth_prime(99) == 541); // the hundredth prime
    // Every returned value has no divisor in (1, v).
    for (std::size_t i = 0; i < 60; ++i) {
        const long long v = nth_prime(i);
        bool prime = v >= 2;
        for (long long f = 2; f * f <= v; ++f) {
            if (v % f == 0) prime = false;
        }
        CHECK(prime);
    }
}
