#include "entsub/combinatorics.hpp"

#include <mutex>
#include <numeric>

#include "entsub/errors.hpp"

namespace entsub {

BigInt binomial(long long n, long long k) {
    if (n < 0) throw RangeError("binomial: n must be non-negative");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i; // exact: product of i consecutive integers is divisible by i!
    }
    return result;
}

BigInt multinomial(long long n, const std::vector<int>& parts) {
    long long total = 0;
    for (int p : parts) {
        if (p < 0) throw RangeError("multinomial: negative part");
        total += p;
    }
    if (total != n) throw TotalMismatch("multinomial: parts do not sum to n");
    // Product of nested binomials: choose the positions of each part in turn.
    BigInt result = 1;
    long long used = 0;
    for (int p : parts) {
        used += p;
        result *= binomial(used, p);
    }
    return result;
}

BigInt bounded_composition_count(int num_vars, long long k, const std::vector<int>& caps) {
    if (num_vars < 0 || caps.size() != static_cast<std::size_t>(num_vars))
        throw RangeError("bounded_composition_count: caps length must equal num_vars");
    for (int c : caps)
        if (c < 1) throw RangeError("bounded_composition_count: caps must be >= 1");
    if (k < 0) return 0;
    if (num_vars == 0) return k == 0 ? 1 : 0;

    bool uniform = true;
    for (int c : caps)
        if (c != caps[0]) uniform = false;

    if (uniform) {
        // Grouped alternating sum: subsets of equal caps collapse to C(n, l).
        const long long d = caps[0] + 1;
        BigInt total = 0;
        for (long long l = 0; l <= num_vars && l * d <= k; ++l) {
            BigInt term = binomial(num_vars, l) * binomial(k - l * d + num_vars - 1, num_vars - 1);
            total += (l % 2 == 0) ? term : -term;
        }
        return total < 0 ? BigInt(0) : total;
    }

    // General alternating subset sum over which variables exceed their cap.
    BigInt total = 0;
    for (unsigned long long mask = 0; mask < (1ull << num_vars); ++mask) {
        long long excess = 0;
        int bits = 0;
        for (int j = 0; j < num_vars; ++j) {
            if (mask >> j & 1ull) {
                excess += caps[j] + 1;
                ++bits;
            }
        }
        if (excess > k) continue;
        BigInt term = binomial(k - excess + num_vars - 1, num_vars - 1);
        total += (bits % 2 == 0) ? term : -term;
    }
    return total < 0 ? BigInt(0) : total;
}

namespace {

void enumerate_bounded_rec(int pos, long long remaining, const std::vector<int>& caps,
                           std::vector<int>& current, std::vector<std::vector<int>>& out) {
    const int num_vars = static_cast<int>(caps.size());
    if (pos == num_vars) {
        if (remaining == 0) out.push_back(current);
        return;
    }
    long long tail_capacity = 0;
    for (int j = pos + 1; j < num_vars; ++j) tail_capacity += caps[j];
    const long long lo = std::max(0ll, remaining - tail_capacity);
    const long long hi = std::min<long long>(caps[pos], remaining);
    for (long long v = lo; v <= hi; ++v) {
        current[pos] = static_cast<int>(v);
        enumerate_bounded_rec(pos + 1, remaining - v, caps, current, out);
    }
    current[pos] = 0;
}

} // namespace

std::vector<std::vector<int>>
enumerate_bounded_compositions(int num_vars, long long k, const std::vector<int>& caps) {
    if (num_vars < 0 || caps.size() != static_cast<std::size_t>(num_vars))
        throw RangeError("enumerate_bounded_compositions: caps length must equal num_vars");
    for (int c : caps)
        if (c < 1) throw RangeError("enumerate_bounded_compositions: caps must be >= 1");
    std::vector<std::vector<int>> out;
    if (k < 0) return out;
    if (num_vars == 0) {
        if (k == 0) out.push_back({});
        return out;
    }
    std::vector<int> current(num_vars, 0);
    enumerate_bounded_rec(0, k, caps, current, out);
    return out;
}

BigInt count_distinct_monomials(int n, int d, int k_sub) {
    if (d < 2) throw RangeError("count_distinct_monomials: d must be >= 2");
    if (n < 1) throw RangeError("count_distinct_monomials: n must be >= 1");
    if (k_sub < 0 || k_sub > d - 2)
        throw RangeError("count_distinct_monomials: substitution parameter outside [0, d-2]");
    // A monomial is determined by (K, s, tail): K sites carry powers of the
    // substituted coordinate summing to s in [0, K(k_sub+1)], the remaining
    // n-K sites carry one free coordinate each (a degree-(n-K) monomial in
    // the f = d-k_sub-2 free coordinates).
    const int f = d - k_sub - 2;
    BigInt total = 0;
    for (int K = 0; K <= n; ++K) {
        const int tail_degree = n - K;
        BigInt tails;
        if (f == 0)
            tails = (tail_degree == 0) ? 1 : 0;
        else
            tails = binomial(tail_degree + f - 1, f - 1);
        total += BigInt(static_cast<long long>(K) * (k_sub + 1) + 1) * tails;
    }
    return total;
}

namespace {

void enumerate_occupations_rec(int remaining, int parts_left, std::vector<int>& current,
                               std::vector<std::vector<int>>& out) {
    if (parts_left == 1) {
        current.push_back(remaining);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (int v = remaining; v >= 0; --v) {
        current.push_back(v);
        enumerate_occupations_rec(remaining - v, parts_left - 1, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<std::vector<int>> enumerate_occupations(int n, int d) {
    if (n < 0) throw RangeError("enumerate_occupations: n must be >= 0");
    if (d < 1) throw RangeError("enumerate_occupations: d must be >= 1");
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    enumerate_occupations_rec(n, d, current, out);
    return out;
}

long long nth_prime(std::size_t index) {
    static std::vector<long long> cache{2, 3};
    static std::mutex mu;
    const std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= index) {
        long long cand = cache.back() + 2;
        for (;; cand += 2) {
            bool is_prime = true;
            for (long long q : cache) {
                if (q * q > cand) break;
                if (cand % q == 0) {
                    is_prime = false;
                    break;
                }
            }
            if (is_prime) break;
        }
        cache.push_back(cand);
    }
    return cache[index];
}

} // namespace entsub
