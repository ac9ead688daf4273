#include "entsub/multirank.hpp"

#include <algorithm>
#include <functional>

#include "entsub/errors.hpp"

namespace entsub {

namespace {

void validate_subset(const LocalDims& dims, const std::vector<int>& subset) {
    const int n = dims.sites();
    if (subset.empty() || static_cast<int>(subset.size()) >= n)
        throw BadPartition("flatten: subset must be a nonempty proper part of the sites");
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (subset[i] < 0 || subset[i] >= n)
            throw BadPartition("flatten: site index out of range");
        if (i > 0 && subset[i] <= subset[i - 1])
            throw BadPartition("flatten: subset must be strictly ascending");
    }
}

std::vector<int> complement_of(int n, const std::vector<int>& subset) {
    std::vector<int> comp;
    std::size_t si = 0;
    for (int site = 0; site < n; ++site) {
        if (si < subset.size() && subset[si] == site) {
            ++si;
        } else {
            comp.push_back(site);
        }
    }
    return comp;
}

long long side_dim(const LocalDims& dims, const std::vector<int>& sites) {
    long long total = 1;
    for (int site : sites) total *= dims.dim(site);
    return total;
}

long long mixed_radix(const LocalDims& dims, const std::vector<int>& sites, const MultiIndex& idx) {
    long long value = 0;
    for (int site : sites) {
        value = value * dims.dim(site) + idx[static_cast<std::size_t>(site)];
    }
    return value;
}

} // namespace

std::vector<std::vector<int>> bipartitions(int n, int ell) {
    if (n < 2) throw RangeError("bipartitions: need at least 2 sites");
    if (ell < 1 || 2 * ell > n) throw RangeError("bipartitions: need 1 <= ell <= n/2");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    const bool halving = (2 * ell == n);
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == ell) {
            out.push_back(cur);
            return;
        }
        for (int site = start; site < n; ++site) {
            if (n - site < ell - static_cast<int>(cur.size())) break;
            cur.push_back(site);
            rec(site + 1);
            cur.pop_back();
        }
    };
    if (halving) {
        // Fix site 0 on the row side; the skipped subsets are complements of
        // the listed ones and carry the same rank.
        cur.push_back(0);
        rec(1);
    } else {
        rec(0);
    }
    return out;
}

FlatMatrix flatten(const Ket& psi, const std::vector<int>& subset) {
    validate_subset(psi.dims(), subset);
    const auto comp = complement_of(psi.dims().sites(), subset);
    const auto rows = static_cast<std::size_t>(side_dim(psi.dims(), subset));
    const auto cols = static_cast<std::size_t>(side_dim(psi.dims(), comp));
    FlatMatrix m(rows, std::vector<GaussianRational>(cols));
    for (const auto& [idx, c] : psi.terms()) {
        m[static_cast<std::size_t>(mixed_radix(psi.dims(), subset, idx))]
         [static_cast<std::size_t>(mixed_radix(psi.dims(), comp, idx))] = c;
    }
    return m;
}

CMatrix flatten_c(const CKet& psi, const std::vector<int>& subset) {
    validate_subset(psi.dims(), subset);
    const auto comp = complement_of(psi.dims().sites(), subset);
    const auto rows = static_cast<std::size_t>(side_dim(psi.dims(), subset));
    const auto cols = static_cast<std::size_t>(side_dim(psi.dims(), comp));
    CMatrix m(rows, std::vector<std::complex<double>>(cols));
    for (const auto& [idx, c] : psi.terms()) {
        m[static_cast<std::size_t>(mixed_radix(psi.dims(), subset, idx))]
         [static_cast<std::size_t>(mixed_radix(psi.dims(), comp, idx))] = c;
    }
    return m;
}

long long rank_exact(FlatMatrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    long long rank = 0;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows && m[sel][col].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[pivot_row]);
        const GaussianRational inv = GaussianRational{1} / m[pivot_row][col];
        for (std::size_t r = pivot_row + 1; r < rows; ++r) {
            if (m[r][col].is_zero()) continue;
            const GaussianRational f = m[r][col] * inv;
            for (std::size_t c = col; c < cols; ++c) {
                m[r][c] -= f * m[pivot_row][c];
            }
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

long long rank_tolerant(CMatrix m, double rel_threshold) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    double max_entry = 0.0;
    for (const auto& row : m) {
        for (const auto& v : row) max_entry = std::max(max_entry, std::abs(v));
    }
    if (max_entry == 0.0) return 0;
    const double threshold = rel_threshold * max_entry;

    long long rank = 0;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t sel = pivot_row;
        for (std::size_t r = pivot_row + 1; r < rows; ++r) {
            if (std::abs(m[r][col]) > std::abs(m[sel][col])) sel = r;
        }
        if (std::abs(m[sel][col]) <= threshold) continue;
        std::swap(m[sel], m[pivot_row]);
        for (std::size_t r = pivot_row + 1; r < rows; ++r) {
            const std::complex<double> f = m[r][col] / m[pivot_row][col];
            if (f == std::complex<double>{0.0, 0.0}) continue;
            for (std::size_t c = col; c < cols; ++c) {
                m[r][c] -= f * m[pivot_row][c];
            }
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

std::vector<long long> multirank(const Ket& psi, int ell) {
    std::vector<long long> ranks;
    for (const auto& subset : bipartitions(psi.dims().sites(), ell)) {
        ranks.push_back(rank_exact(flatten(psi, subset)));
    }
    return ranks;
}

MultirankReport is_gme(const Ket& psi) {
    if (psi.is_zero()) throw ZeroState("is_gme: the zero state has no entanglement class");
    MultirankReport report;
    report.gme = true;
    const int n = psi.dims().sites();
    for (int ell = 1; 2 * ell <= n; ++ell) {
        for (const auto& subset : bipartitions(n, ell)) {
            const long long r = rank_exact(flatten(psi, subset));
            report.entries.push_back({subset, r});
            if (r < 2) report.gme = false;
        }
    }
    return report;
}

bool is_gme_tolerant(const CKet& psi, double rel_threshold) {
    if (psi.term_count() == 0) throw ZeroState("is_gme_tolerant: zero state");
    const int n = psi.dims().sites();
    for (int ell = 1; 2 * ell <= n; ++ell) {
        for (const auto& subset : bipartitions(n, ell)) {
            if (rank_tolerant(flatten_c(psi, subset), rel_threshold) < 2) return false;
        }
    }
    return true;
}

bool is_fully_product(const Ket& psi) {
    if (psi.is_zero()) return false;
    const int n = psi.dims().sites();
    for (int site = 0; site < n; ++site) {
        if (rank_exact(flatten(psi, {site})) != 1) return false;
    }
    return true;
}

FlatMatrix catalecticant(const std::vector<GaussianRational>& z, int i) {
    const int n = static_cast<int>(z.size()) - 1;
    if (n < 2) throw RangeError("catalecticant: need a coefficient sequence of length >= 3");
    if (i < 1 || i > n - 1) throw RangeError("catalecticant: need 1 <= i <= n-1");
    FlatMatrix m(static_cast<std::size_t>(n - i + 1),
                 std::vector<GaussianRational>(static_cast<std::size_t>(i + 1)));
    for (std::size_t r = 0; r < m.size(); ++r) {
        for (std::size_t c = 0; c < m[r].size(); ++c) {
            m[r][c] = z[r + c];
        }
    }
    return m;
}

bool ExactSpan::insert(const Ket& psi) {
    if (!dims_) {
        dims_ = psi.dims();
    } else if (*dims_ != psi.dims()) {
        throw DimsMismatch("ExactSpan: states live on different spaces");
    }
    std::map<MultiIndex, GaussianRational> row = psi.terms();
    reduce(row);
    if (row.empty()) return false;
    const GaussianRational inv = GaussianRational{1} / row.begin()->second;
    for (auto& [idx, v] : row) v *= inv;
    const MultiIndex lead = row.begin()->first;
    rows_.emplace(lead, std::move(row));
    return true;
}

bool ExactSpan::contains(const Ket& psi) const {
    if (dims_ && *dims_ != psi.dims())
        throw DimsMismatch("ExactSpan: states live on different spaces");
    std::map<MultiIndex, GaussianRational> row = psi.terms();
    reduce(row);
    return row.empty();
}

void ExactSpan::reduce(std::map<MultiIndex, GaussianRational>& row) const {
    while (!row.empty()) {
        const auto it = rows_.find(row.begin()->first);
        if (it == rows_.end()) return;
        const GaussianRational f = row.begin()->second;
        for (const auto& [idx, v] : it->second) {
            const auto jt = row.find(idx);
            if (jt == row.end()) {
                GaussianRational nv = -(f * v);
                if (!nv.is_zero()) row.emplace(idx, std::move(nv));
            } else {
                jt->second -= f * v;
                if (jt->second.is_zero()) row.erase(jt);
            }
        }
    }
}

long long span_rank(const std::vector<Ket>& states) {
    ExactSpan span;
    for (const auto& s : states) span.insert(s);
    return span.rank();
}

std::vector<Ket> gram_schmidt(const std::vector<Ket>& states) {
    std::vector<Ket> ortho;
    std::vector<Rational> norms;
    for (const auto& s : states) {
        Ket v = s;
        for (std::size_t i = 0; i < ortho.size(); ++i) {
            const GaussianRational overlap = inner(ortho[i], v);
            if (overlap.is_zero()) continue;
            // v -= (<u|v> / <u|u>) u, kept exact and unnormalized
            v = add(v, scale(-(overlap / GaussianRational{norms[i]}), ortho[i]));
        }
        if (v.is_zero()) continue;
        norms.push_back(norm_sq(v));
        ortho.push_back(std::move(v));
    }
    return ortho;
}

} // namespace entsub
