#pragma once

#include <complex>
#include <map>
#include <vector>

#include "entsub/rational.hpp"

namespace entsub {

/// Canonical basis label (i_1, ..., i_n), one entry per site.
using MultiIndex = std::vector<int>;

/// Ordered list of local dimensions d_j >= 2 for n >= 2 sites.
class LocalDims {
  public:
    explicit LocalDims(std::vector<int> dims);

    int sites() const { return static_cast<int>(dims_.size()); }
    int dim(int site) const { return dims_.at(static_cast<std::size_t>(site)); }
    const std::vector<int>& as_vector() const { return dims_; }

    /// Product of all local dimensions (guarded against overflow; the tool
    /// targets desk-scale spaces).
    long long total_dim() const;

    bool homogeneous() const;
    bool valid_index(const MultiIndex& idx) const;

    friend bool operator==(const LocalDims& a, const LocalDims& b) { return a.dims_ == b.dims_; }
    friend bool operator!=(const LocalDims& a, const LocalDims& b) { return !(a == b); }

  private:
    std::vector<int> dims_;
};

/// Sparse unnormalized pure state: a finite map from canonical basis labels
/// to exact complex-rational coefficients. Zero coefficients are never
/// stored; term iteration is ascending lexicographic on the label.
class Ket {
  public:
    explicit Ket(LocalDims dims) : dims_(std::move(dims)) {}

    const LocalDims& dims() const { return dims_; }

    /// Sets (or erases, when zero) the coefficient of one basis label.
    /// Throws RangeError if the label is invalid for the declared dims.
    void set(const MultiIndex& idx, GaussianRational value);

    /// Adds `value` to the stored coefficient, erasing it if the sum is zero.
    void accumulate(const MultiIndex& idx, const GaussianRational& value);

    /// Coefficient of a basis label (zero when absent).
    GaussianRational coeff(const MultiIndex& idx) const;

    std::size_t term_count() const { return coeffs_.size(); }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<MultiIndex, GaussianRational>& terms() const { return coeffs_; }

    friend bool operator==(const Ket& a, const Ket& b) {
        return a.dims_ == b.dims_ && a.coeffs_ == b.coeffs_;
    }

  private:
    LocalDims dims_;
    std::map<MultiIndex, GaussianRational> coeffs_;
};

/// Floating complex counterpart of Ket, used only by the DFT scheme and the
/// structured three-qubit layers where roots of unity appear.
class CKet {
  public:
    explicit CKet(LocalDims dims) : dims_(std::move(dims)) {}

    const LocalDims& dims() const { return dims_; }
    void set(const MultiIndex& idx, std::complex<double> value);
    std::complex<double> coeff(const MultiIndex& idx) const;
    std::size_t term_count() const { return coeffs_.size(); }
    const std::map<MultiIndex, std::complex<double>>& terms() const { return coeffs_; }

  private:
    LocalDims dims_;
    std::map<MultiIndex, std::complex<double>> coeffs_;
};

// ---------------------------------------------------------------------------
// Generator-state families. All constructors produce unnormalized states
// whose coefficients are exactly 0 or 1, so norm_sq equals the term count
// and matches the corresponding counting formula.
// ---------------------------------------------------------------------------

/// n-qubit Dicke state: uniform sum over all weight-k bitstrings.
/// norm_sq == C(n, k). Throws RangeError unless n >= 2 and 0 <= k <= n.
Ket dicke(int n, int k);

/// n-qudit generalized Dicke state for an occupation vector (k_0,...,k_{d-1})
/// summing to n: uniform sum over all distinct arrangements of the multiset
/// {0^{k_0}, ..., (d-1)^{k_{d-1}}}. norm_sq == multinomial(n, occ).
Ket generalized_dicke(int n, int d, const std::vector<int>& occ);

/// Fixed-total-sum qudit state: uniform sum over all (i_1..i_n) with each
/// i_j in {0..d-1} and sum k. norm_sq == the bounded composition count with
/// caps d-1. Throws RangeError unless 0 <= k <= n(d-1).
Ket g_state(int n, int d, int k);

/// Split-family state: uniform sum over all labels with exactly K entries in
/// the low range {0..k_sub+1} summing to s, and the remaining n-K entries in
/// the high range {k_sub+2..d-1} realizing occupation tail_occ (one part per
/// high level). Reduces to g_state over the low range at K = n and to a
/// generalized Dicke state over the high levels at K = 0.
Ket script_g_state(int n, int d, int k_sub, int K, int s, const std::vector<int>& tail_occ);

/// Heterogeneous fixed-total-sum state: uniform sum over all (i_1..i_n) with
/// i_j in {0..d_j-1} and sum k. norm_sq == bounded composition count with
/// caps (d_1-1, ..., d_n-1). Throws RangeError unless 0 <= k <= sum(d_j-1).
Ket frak_g_state(const LocalDims& dims, int k);

/// Expansion of the simple tensor  (sum_i c_i^{(1)} |i>) x ... x (sum ...).
/// site_coeffs[j] must have length d_j (ShapeMismatch otherwise); zero
/// product coefficients are dropped, so an all-zero site yields an empty Ket.
Ket product_state(const LocalDims& dims, const std::vector<std::vector<GaussianRational>>& site_coeffs);

/// Hermitian inner product <a|b>, conjugate-linear in the first argument.
/// Throws DimsMismatch unless both states share the same LocalDims.
GaussianRational inner(const Ket& a, const Ket& b);

/// Exact squared norm <a|a> (a non-negative rational).
Rational norm_sq(const Ket& a);

/// Coefficient-wise sum; throws DimsMismatch on differing dims.
Ket add(const Ket& a, const Ket& b);

/// Scalar multiple c * a.
Ket scale(const GaussianRational& c, const Ket& a);

/// Hermitian inner product for floating states (conjugate-linear in the
/// first argument), used by the DFT-scheme tolerance checks.
std::complex<double> inner_c(const CKet& a, const CKet& b);

/// Lossy conversion of an exact state to floating coefficients.
CKet to_cket(const Ket& a);

} // namespace entsub
