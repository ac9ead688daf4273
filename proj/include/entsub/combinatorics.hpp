#pragma once

#include <vector>

#include "entsub/rational.hpp"

namespace entsub {

/// C(n, k) for n >= 0; returns 0 when k < 0 or k > n. Exact for all sizes.
BigInt binomial(long long n, long long k);

/// n! / (k_0! k_1! ... k_m!) — the number of distinct arrangements of a
/// multiset with part multiplicities `parts`. Throws TotalMismatch unless
/// sum(parts) == n, RangeError on a negative part.
BigInt multinomial(long long n, const std::vector<int>& parts);

/// Number of integer solutions of x_1 + ... + x_{num_vars} = k with
/// 0 <= x_j <= caps[j], evaluated by the alternating (inclusion-exclusion)
/// subset sum over the caps. Returns 0 outside [0, sum(caps)].
/// Throws RangeError if caps.size() != num_vars or any cap < 1.
BigInt bounded_composition_count(int num_vars, long long k, const std::vector<int>& caps);

/// All solutions counted by bounded_composition_count, as tuples in ascending
/// lexicographic order. This enumeration is the authoritative oracle for the
/// counting formula and the term generator for the uniform state families.
std::vector<std::vector<int>>
enumerate_bounded_compositions(int num_vars, long long k, const std::vector<int>& caps);

/// Number of distinct monomials in the expansion of
///   (1 + x + x^2 + ... + x^{k_sub+1} + y_{k_sub+2} + ... + y_{d-1})^n,
/// i.e. the size of the interpolated product-basis family for n sites of
/// local dimension d with substitution parameter k_sub.
/// Specializes to C(n+d-1, d-1) at k_sub = 0 and to n(d-1)+1 at k_sub = d-2.
/// Throws RangeError unless d >= 2, n >= 1 and 0 <= k_sub <= d-2.
BigInt count_distinct_monomials(int n, int d, int k_sub);

/// All weak compositions (k_0, ..., k_{d-1}) of n into d parts, in
/// descending lexicographic order on the tuples. Length C(n+d-1, d-1);
/// n = 0 yields the single all-zero tuple. Throws RangeError on n < 0
/// or d < 1.
std::vector<std::vector<int>> enumerate_occupations(int n, int d);

/// The index-th prime (0 -> 2, 1 -> 3, ...), served from a growing shared
/// cache. Used to supply distinct generic coordinates.
long long nth_prime(std::size_t index);

} // namespace entsub
