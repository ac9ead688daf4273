#pragma once

#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "entsub/states.hpp"

namespace entsub {

/// Dense exact matrix (row-major) over the complex rationals.
using FlatMatrix = std::vector<std::vector<GaussianRational>>;

/// Dense floating complex matrix (row-major).
using CMatrix = std::vector<std::vector<std::complex<double>>>;

/// All ascending ell-element subsets of {0..n-1}, in lexicographic order.
/// When 2*ell == n only the subsets containing site 0 are listed, because a
/// flattening and its complement always have equal rank.
/// Requires 1 <= ell <= n/2.
std::vector<std::vector<int>> bipartitions(int n, int ell);

/// Matricization of a state along subset | complement: rows are indexed by
/// the joint label of `subset` (sites ascending, mixed radix, first site most
/// significant), columns by the complement's joint label. The subset must be
/// a nonempty proper ascending subset of the sites (BadPartition otherwise).
FlatMatrix flatten(const Ket& psi, const std::vector<int>& subset);
CMatrix flatten_c(const CKet& psi, const std::vector<int>& subset);

/// Rank over the complex rationals by exact Gaussian elimination.
long long rank_exact(FlatMatrix m);

/// Floating-point rank: Gaussian elimination with partial pivoting, counting
/// pivots whose magnitude exceeds rel_threshold times the largest entry
/// magnitude of the input matrix.
long long rank_tolerant(CMatrix m, double rel_threshold = 1e-9);

/// Flattening ranks across all bipartitions of size ell, in the order given
/// by bipartitions(n, ell). Requires 1 <= ell <= n/2.
std::vector<long long> multirank(const Ket& psi, int ell);

struct BipartitionRank {
    std::vector<int> subset;
    long long rank = 0;
};

struct MultirankReport {
    bool gme = false;
    std::vector<BipartitionRank> entries; ///< all bipartitions, ell = 1 .. n/2
};

/// Certifies genuine multipartite entanglement: the state is GME iff every
/// flattening across every bipartition has rank >= 2. Exact.
/// Throws ZeroState on the zero state.
MultirankReport is_gme(const Ket& psi);

/// Tolerant counterpart for floating states (same bipartition sweep).
bool is_gme_tolerant(const CKet& psi, double rel_threshold = 1e-9);

/// True iff every single-site flattening has rank exactly 1, i.e. the state
/// is a simple tensor. The zero state is not fully product.
bool is_fully_product(const Ket& psi);

/// Hankel matrix of a symmetric qubit state's coefficient sequence z_0..z_n
/// (the state sum_k z_k |D_n^k>): shape (n-i+1) x (i+1) with entry
/// (r, c) = z[r + c]. Requires 1 <= i <= n-1 where n = z.size() - 1.
/// Its exact rank equals the rank of any size-i flattening of the state.
FlatMatrix catalecticant(const std::vector<GaussianRational>& z, int i);

/// Incrementally maintained row space over the complex rationals. Rows are
/// sparse state-coefficient vectors; insertion keeps a reduced echelon set.
class ExactSpan {
  public:
    /// Adds a state's coefficient row. Returns true iff the rank grew.
    /// Throws DimsMismatch when states with different dims are mixed.
    bool insert(const Ket& psi);

    /// True iff psi already lies in the accumulated span.
    bool contains(const Ket& psi) const;

    long long rank() const { return static_cast<long long>(rows_.size()); }

  private:
    void reduce(std::map<MultiIndex, GaussianRational>& row) const;

    std::optional<LocalDims> dims_;
    // echelon rows keyed by leading label; leading coefficient normalized to 1
    std::map<MultiIndex, std::map<MultiIndex, GaussianRational>> rows_;
};

/// Rank of the span of a family of states (empty list has rank 0).
long long span_rank(const std::vector<Ket>& states);

/// Exact Gram-Schmidt: pairwise-orthogonal unnormalized states with the same
/// span as the input; zero vectors arising from dependent inputs are dropped.
std::vector<Ket> gram_schmidt(const std::vector<Ket>& states);

} // namespace entsub
