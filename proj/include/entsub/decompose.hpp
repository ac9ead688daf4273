#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "entsub/embeddings.hpp"
#include "entsub/multirank.hpp"

namespace entsub {

enum class Scheme { Triangular, Dft };

const char* scheme_name(Scheme s);

/// Deterministic term order used by both orthocomplement schemes: terms are
/// graded by support class — labels with two or more nonzero entries first
/// (fewer nonzeros earlier), labels with exactly one nonzero entry last —
/// and lexicographically within a class. The all-zeros label, when present,
/// is alone in its generator and sorts first.
std::vector<MultiIndex> scheme_term_order(const Ket& generator);

/// Triangular orthocomplement basis of a uniform generator with N terms:
/// vector t-1 (t = 2..N) puts coefficient 1 on the first t-1 terms of the
/// scheme term order and -(t-1) on term t, with squared norm t^2 - t.
/// The N-1 results are pairwise orthogonal and orthogonal to the generator,
/// exactly. Throws TooFewTerms when N < 2.
std::vector<std::pair<Ket, Rational>> triangular_ces(const Ket& generator);

/// Same construction over an explicit term order (a permutation of the
/// generator's terms); the span is independent of the order chosen.
std::vector<std::pair<Ket, Rational>> triangular_ces_ordered(const Ket& generator,
                                                             const std::vector<MultiIndex>& order);

/// Fourier orthocomplement basis: rows 2..N of the N-point DFT matrix
/// (omega = exp(2*pi*i/N)) applied to the scheme-ordered terms, each scaled
/// by N^{-1/2}. Pairwise orthonormal and orthogonal to the generator within
/// 1e-10. Throws TooFewTerms when N < 2.
std::vector<CKet> dft_ces(const Ket& generator);

/// Full decomposition of the Hilbert space into
///   span(product_part) + span(ges_basis) + span(ces_basis)
/// with all three parts mutually orthogonal and jointly spanning.
struct Decomposition {
    EmbedSpec spec;
    Scheme scheme;
    std::uint64_t seed = 0;
    std::vector<EvaluationPoint> points; ///< certified evaluation points
    std::vector<Ket> product_part;
    std::vector<Ket> ges_basis;
    std::vector<Ket> ces_basis;              ///< Triangular scheme
    std::vector<Rational> ces_squared_norms; ///< aligned with ces_basis
    std::vector<CKet> ces_basis_c;           ///< Dft scheme
};

/// Builds and certifies the decomposition: chooses evaluation points,
/// validates the product basis rank, then emits the product-class
/// generators, the GME-class generators, and the per-generator
/// orthocomplement vectors (concatenated in generator order).
Decomposition decompose(const EmbedSpec& spec, Scheme scheme, std::uint64_t seed = 0);

/// Grouping of the orthocomplement part into further genuinely entangled
/// layers. sizes lists (|product|, |ges|, layer sizes..., |residual|).
struct GesLayers {
    std::vector<std::vector<std::size_t>> layer_indices; ///< into the ces list
    std::vector<std::size_t> residual_indices;
    std::vector<std::size_t> sizes;
};

/// Triangular scheme: layer 1 collects each GME generator's final vector
/// (one per generator, same dimension as ges_basis); the rest is residual.
/// Dft scheme: layer j collects row j+1 from every generator while all
/// generators still have that row; leftover rows form the residual.
/// Throws SchemeUnsupported when the decomposition's parts are inconsistent
/// with its scheme tag.
GesLayers extract_ges_layers(const Decomposition& dec);

/// The structured partition of the three-qubit space into three genuinely
/// entangled subspaces of sizes (2,3,3): the two central Dicke states; the
/// +GHZ state with two cube-root phase states; the -GHZ state with the
/// conjugate pair. Mutually orthonormal within 1e-10, jointly spanning.
std::vector<std::vector<CKet>> three_qubit_ges_partition();

/// prod(d_j) - sum(d_j - 1) - 1, the largest dimension a subspace with no
/// product state can have.
BigInt max_ces_dim(const LocalDims& dims);

/// (d_1 - 1) * (prod_{j>=2} d_j - 1) for ascending-sorted dims, the largest
/// dimension a genuinely entangled subspace can have.
/// Throws RangeError when dims are not sorted ascending.
BigInt max_ges_dim(const LocalDims& dims);

/// C(n+d-1, d-1) - d, the largest dimension of a genuinely entangled
/// subspace of symmetric states.
BigInt max_sym_ges_dim(int n, int d);

struct CheckItem {
    std::string name;
    bool passed = false;
    std::string detail; ///< witness text on failure, summary on success
};

struct VerificationReport {
    std::vector<CheckItem> checks;
    bool all_passed() const;
};

/// Re-derives every certifiable consequence of the construction:
///  (a) part sizes match the family's dimension formulas;
///  (b) exhaustive pairwise orthogonality (exact; tolerant for Dft vectors);
///  (c) the three parts jointly span the whole space;
///  (d) every GES basis vector is GME;
///  (e) `trials` random combinations of the GES basis, with nonzero integer
///      components in [-9,9] drawn deterministically from `seed`, are GME;
///  (f) every CES vector is orthogonal to `fresh_points` new product-basis
///      members at unused evaluation points;
///  (g) the GES dimension respects the subspace bounds, with equality to
///      the symmetric bound in the fully generic regime.
/// Failures are reported with witnesses, never thrown.
VerificationReport verify(const Decomposition& dec, int trials, int fresh_points,
                          std::uint64_t seed);

} // namespace entsub
