#include "entsub/states.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "entsub/combinatorics.hpp"
#include "entsub/errors.hpp"

namespace entsub {

namespace {

/// Enumerates every label with entries drawn from `levels[j]` at site j such
/// that the entries sum to `target`, invoking `emit` on each.
void for_each_label_with_sum(const std::vector<std::vector<int>>& levels, int target,
                             const std::function<void(const MultiIndex&)>& emit) {
    const int n = static_cast<int>(levels.size());
    MultiIndex idx(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int site, int remaining) {
        if (site == n) {
            if (remaining == 0) emit(idx);
            return;
        }
        for (int v : levels[static_cast<std::size_t>(site)]) {
            if (v > remaining) continue;
            idx[static_cast<std::size_t>(site)] = v;
            rec(site + 1, remaining - v);
        }
    };
    rec(0, target);
}

std::vector<int> range_levels(int lo, int hi) {
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

} // namespace

LocalDims::LocalDims(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.size() < 2) throw RangeError("LocalDims: need at least 2 sites");
    for (int d : dims_) {
        if (d < 2) throw RangeError("LocalDims: each local dimension must be >= 2");
    }
}

long long LocalDims::total_dim() const {
    long long total = 1;
    for (int d : dims_) {
        if (total > (1LL << 50) / d) throw RangeError("LocalDims: total dimension too large");
        total *= d;
    }
    return total;
}

bool LocalDims::homogeneous() const {
    return std::all_of(dims_.begin(), dims_.end(), [&](int d) { return d == dims_.front(); });
}

bool LocalDims::valid_index(const MultiIndex& idx) const {
    if (idx.size() != dims_.size()) return false;
    for (std::size_t j = 0; j < idx.size(); ++j) {
        if (idx[j] < 0 || idx[j] >= dims_[j]) return false;
    }
    return true;
}

void Ket::set(const MultiIndex& idx, GaussianRational value) {
    if (!dims_.valid_index(idx)) throw RangeError("Ket::set: label out of range for declared dims");
    if (value.is_zero()) {
        coeffs_.erase(idx);
    } else {
        coeffs_[idx] = std::move(value);
    }
}

void Ket::accumulate(const MultiIndex& idx, const GaussianRational& value) {
    if (!dims_.valid_index(idx)) throw RangeError("Ket::accumulate: label out of range");
    auto it = coeffs_.find(idx);
    if (it == coeffs_.end()) {
        if (!value.is_zero()) coeffs_.emplace(idx, value);
        return;
    }
    it->second += value;
    if (it->second.is_zero()) coeffs_.erase(it);
}

GaussianRational Ket::coeff(const MultiIndex& idx) const {
    auto it = coeffs_.find(idx);
    return it == coeffs_.end() ? GaussianRational{} : it->second;
}

void CKet::set(const MultiIndex& idx, std::complex<double> value) {
    if (!dims_.valid_index(idx)) throw RangeError("CKet::set: label out of range");
    if (value == std::complex<double>{0.0, 0.0}) {
        coeffs_.erase(idx);
    } else {
        coeffs_[idx] = value;
    }
}

std::complex<double> CKet::coeff(const MultiIndex& idx) const {
    auto it = coeffs_.find(idx);
    return it == coeffs_.end() ? std::complex<double>{0.0, 0.0} : it->second;
}

Ket dicke(int n, int k) {
    if (n < 2) throw RangeError("dicke: need n >= 2");
    if (k < 0 || k > n) throw RangeError("dicke: need 0 <= k <= n");
    return g_state(n, 2, k);
}

Ket generalized_dicke(int n, int d, const std::vector<int>& occ) {
    if (n < 2) throw RangeError("generalized_dicke: need n >= 2");
    if (d < 2) throw RangeError("generalized_dicke: need d >= 2");
    if (static_cast<int>(occ.size()) != d)
        throw ShapeMismatch("generalized_dicke: occupation vector must have one entry per level");
    long long total = 0;
    for (int c : occ) {
        if (c < 0) throw RangeError("generalized_dicke: negative occupation");
        total += c;
    }
    if (total != n) throw TotalMismatch("generalized_dicke: occupations must sum to the site count");

    Ket out(LocalDims(std::vector<int>(static_cast<std::size_t>(n), d)));
    MultiIndex idx(static_cast<std::size_t>(n), 0);
    std::vector<int> left = occ;
    std::function<void(int)> rec = [&](int site) {
        if (site == n) {
            out.set(idx, GaussianRational{1});
            return;
        }
        for (int v = 0; v < d; ++v) {
            if (left[static_cast<std::size_t>(v)] == 0) continue;
            --left[static_cast<std::size_t>(v)];
            idx[static_cast<std::size_t>(site)] = v;
            rec(site + 1);
            ++left[static_cast<std::size_t>(v)];
        }
    };
    rec(0);
    return out;
}

Ket g_state(int n, int d, int k) {
    if (n < 2) throw RangeError("g_state: need n >= 2");
    if (d < 2) throw RangeError("g_state: need d >= 2");
    if (k < 0 || k > n * (d - 1)) throw RangeError("g_state: total sum out of range");

    Ket out(LocalDims(std::vector<int>(static_cast<std::size_t>(n), d)));
    std::vector<std::vector<int>> levels(static_cast<std::size_t>(n), range_levels(0, d - 1));
    for_each_label_with_sum(levels, k,
                            [&](const MultiIndex& idx) { out.set(idx, GaussianRational{1}); });
    return out;
}

Ket script_g_state(int n, int d, int k_sub, int K, int s, const std::vector<int>& tail_occ) {
    if (n < 2) throw RangeError("script_g_state: need n >= 2");
    if (d < 2) throw RangeError("script_g_state: need d >= 2");
    if (k_sub < 0 || k_sub > d - 2) throw RangeError("script_g_state: need 0 <= k_sub <= d-2");
    if (K < 0 || K > n) throw RangeError("script_g_state: need 0 <= K <= n");
    if (s < 0 || s > K * (k_sub + 1)) throw RangeError("script_g_state: low-range sum out of range");
    const int high_levels = d - k_sub - 2;
    if (static_cast<int>(tail_occ.size()) != high_levels)
        throw ShapeMismatch("script_g_state: tail occupation must have one entry per high level");
    long long tail_total = 0;
    for (int c : tail_occ) {
        if (c < 0) throw RangeError("script_g_state: negative tail occupation");
        tail_total += c;
    }
    if (tail_total != n - K)
        throw TotalMismatch("script_g_state: tail occupations must sum to n - K");

    Ket out(LocalDims(std::vector<int>(static_cast<std::size_t>(n), d)));

    // Enumerate which K of the n sites carry low-range values, then fill the
    // low sites with every bounded composition of s and the high sites with
    // every arrangement of the tail multiset.
    const auto low_fillings =
        K == 0 ? std::vector<std::vector<int>>{{}}
               : enumerate_bounded_compositions(K, s, std::vector<int>(static_cast<std::size_t>(K), k_sub + 1));

    MultiIndex idx(static_cast<std::size_t>(n), 0);
    std::vector<int> low_sites;     // chosen subset of {0..n-1}, ascending
    std::vector<int> high_sites;    // complement, ascending
    std::vector<int> high_left = tail_occ;

    std::function<void(std::size_t)> fill_high = [&](std::size_t pos) {
        if (pos == high_sites.size()) {
            out.set(idx, GaussianRational{1});
            return;
        }
        for (int lvl = 0; lvl < high_levels; ++lvl) {
            if (high_left[static_cast<std::size_t>(lvl)] == 0) continue;
            --high_left[static_cast<std::size_t>(lvl)];
            idx[static_cast<std::size_t>(high_sites[pos])] = k_sub + 2 + lvl;
            fill_high(pos + 1);
            ++high_left[static_cast<std::size_t>(lvl)];
        }
    };

    std::function<void(int)> pick = [&](int start) {
        if (static_cast<int>(low_sites.size()) == K) {
            high_sites.clear();
            std::size_t li = 0;
            for (int site = 0; site < n; ++site) {
                if (li < low_sites.size() && low_sites[li] == site) {
                    ++li;
                } else {
                    high_sites.push_back(site);
                }
            }
            for (const auto& low : low_fillings) {
                for (std::size_t p = 0; p < low.size(); ++p) {
                    idx[static_cast<std::size_t>(low_sites[p])] = low[p];
                }
                fill_high(0);
            }
            return;
        }
        for (int site = start; site < n; ++site) {
            if (n - site < K - static_cast<int>(low_sites.size())) break;
            low_sites.push_back(site);
            pick(site + 1);
            low_sites.pop_back();
        }
    };
    pick(0);
    return out;
}

Ket frak_g_state(const LocalDims& dims, int k) {
    long long cap_sum = 0;
    for (int d : dims.as_vector()) cap_sum += d - 1;
    if (k < 0 || k > cap_sum) throw RangeError("frak_g_state: total sum out of range");

    Ket out(dims);
    std::vector<std::vector<int>> levels;
    for (int d : dims.as_vector()) levels.push_back(range_levels(0, d - 1));
    for_each_label_with_sum(levels, k,
                            [&](const MultiIndex& idx) { out.set(idx, GaussianRational{1}); });
    return out;
}

Ket product_state(const LocalDims& dims, const std::vector<std::vector<GaussianRational>>& site_coeffs) {
    if (static_cast<int>(site_coeffs.size()) != dims.sites())
        throw ShapeMismatch("product_state: need one coefficient list per site");
    for (int j = 0; j < dims.sites(); ++j) {
        if (static_cast<int>(site_coeffs[static_cast<std::size_t>(j)].size()) != dims.dim(j))
            throw ShapeMismatch("product_state: coefficient list length must equal the local dimension");
    }

    Ket out(dims);
    const int n = dims.sites();
    MultiIndex idx(static_cast<std::size_t>(n), 0);
    std::function<void(int, GaussianRational)> rec = [&](int site, GaussianRational acc) {
        if (acc.is_zero()) return;
        if (site == n) {
            out.set(idx, acc);
            return;
        }
        for (int v = 0; v < dims.dim(site); ++v) {
            idx[static_cast<std::size_t>(site)] = v;
            rec(site + 1, acc * site_coeffs[static_cast<std::size_t>(site)][static_cast<std::size_t>(v)]);
        }
    };
    rec(0, GaussianRational{1});
    return out;
}

GaussianRational inner(const Ket& a, const Ket& b) {
    if (a.dims() != b.dims()) throw DimsMismatch("inner: states live on different spaces");
    GaussianRational acc;
    // Walk the smaller support.
    const Ket& small = a.term_count() <= b.term_count() ? a : b;
    const Ket& large = a.term_count() <= b.term_count() ? b : a;
    const bool small_is_a = &small == &a;
    for (const auto& [idx, c] : small.terms()) {
        const GaussianRational other = large.coeff(idx);
        if (other.is_zero()) continue;
        acc += small_is_a ? c.conj() * other : other.conj() * c;
    }
    return acc;
}

Rational norm_sq(const Ket& a) {
    Rational acc = 0;
    for (const auto& [idx, c] : a.terms()) acc += abs_sq(c);
    return acc;
}

Ket add(const Ket& a, const Ket& b) {
    if (a.dims() != b.dims()) throw DimsMismatch("add: states live on different spaces");
    Ket out = a;
    for (const auto& [idx, c] : b.terms()) out.accumulate(idx, c);
    return out;
}

Ket scale(const GaussianRational& c, const Ket& a) {
    Ket out(a.dims());
    if (c.is_zero()) return out;
    for (const auto& [idx, v] : a.terms()) out.set(idx, c * v);
    return out;
}

std::complex<double> inner_c(const CKet& a, const CKet& b) {
    if (a.dims() != b.dims()) throw DimsMismatch("inner_c: states live on different spaces");
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [idx, c] : a.terms()) {
        auto it = b.terms().find(idx);
        if (it == b.terms().end()) continue;
        acc += std::conj(c) * it->second;
    }
    return acc;
}

CKet to_cket(const Ket& a) {
    CKet out(a.dims());
    for (const auto& [idx, c] : a.terms()) {
        out.set(idx, std::complex<double>{static_cast<double>(c.re), static_cast<double>(c.im)});
    }
    return out;
}

} // namespace entsub
