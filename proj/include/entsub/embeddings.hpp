#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "entsub/combinatorics.hpp"
#include "entsub/states.hpp"

namespace entsub {

/// Construction family, determined by the dims and the substitution depth.
enum class Family {
    QubitDicke,    ///< homogeneous d = 2
    QuditVeronese, ///< homogeneous d >= 3, k_sub = 0 (fully generic points)
    QuditGamma,    ///< homogeneous d >= 3, k_sub = d-2 (fully substituted)
    QuditKSub,     ///< homogeneous d >= 3, 0 < k_sub < d-2
    Heterogeneous, ///< mixed dims (always fully substituted)
};

const char* family_name(Family f);

/// Problem statement for one construction: the local dimensions plus, for
/// homogeneous dims, the substitution depth k_sub (how many of the free
/// point coordinates are replaced by consecutive powers x^2..x^{k_sub+1}).
/// Omitting k_sub selects the fully substituted regime d-2. Heterogeneous
/// dims are always fully substituted and reject an explicit k_sub.
class EmbedSpec {
  public:
    explicit EmbedSpec(LocalDims dims, std::optional<int> k_sub = std::nullopt);

    const LocalDims& dims() const { return dims_; }
    Family family() const { return family_; }
    bool homogeneous() const { return dims_.homogeneous(); }

    /// Substitution depth; SpecMismatch for heterogeneous specs.
    int k_sub() const;

    friend bool operator==(const EmbedSpec& a, const EmbedSpec& b) {
        return a.dims_ == b.dims_ && a.k_sub_ == b.k_sub_;
    }

  private:
    LocalDims dims_;
    std::optional<int> k_sub_;
    Family family_;
};

/// One evaluation point of the embedding: the curve parameter x plus the
/// remaining unsubstituted coordinates (empty when fully substituted).
struct EvaluationPoint {
    Rational x;
    std::vector<Rational> free_coords;
};

/// A certified non-orthogonal unextendible product basis: product states
/// whose span rank equals nupb_size(spec).
struct Nupb {
    EmbedSpec spec;
    std::vector<EvaluationPoint> points;
    std::vector<Ket> members;
};

/// Number of members in the family's product basis:
/// n+1 (qubits) | C(n+d-1, d-1) (k_sub = 0) | n(d-1)+1 (k_sub = d-2) |
/// count_distinct_monomials (intermediate k_sub) | sum(d_j - 1) + 1 (mixed).
BigInt nupb_size(const EmbedSpec& spec);

/// Number of free point coordinates per evaluation point
/// (d - k_sub - 2 for homogeneous specs, 0 for heterogeneous ones).
int free_coord_count(const EmbedSpec& spec);

/// Single-site coefficient list of length d_j at an evaluation point:
/// (1, x, x^2, ..., x^{k_sub+1}, f_1, ..., f_{d-k_sub-2}) for homogeneous
/// specs and (1, x, x^2, ..., x^{d_j-1}) for heterogeneous ones.
/// Throws SpecMismatch when the point's free-coordinate count is wrong.
std::vector<GaussianRational> site_coefficients(const EmbedSpec& spec, int site,
                                                const EvaluationPoint& p);

/// The product state  tensor_j  site_coefficients(spec, j, p).
Ket nupb_member(const EmbedSpec& spec, const EvaluationPoint& p);

/// Builds the product basis at the given points and certifies that its span
/// rank equals nupb_size(spec). Requires |points| == nupb_size.
/// Throws RankDeficient listing the indices of points whose members failed
/// to enlarge the span.
Nupb build_nupb(const EmbedSpec& spec, const std::vector<EvaluationPoint>& points);

/// Deterministically picks evaluation points that certify: x-values are
/// 0, 1, 2, ...; free coordinates are distinct primes from a window offset
/// by the seed, re-drawn from the next window on a rank failure.
/// Throws ExhaustedRetries after 32 windows (only reachable for families
/// with free coordinates; fully substituted families certify on the first
/// attempt or not at all).
std::vector<EvaluationPoint> choose_generic_points(const EmbedSpec& spec, std::uint64_t seed);

enum class StateClass { Product, Gme };

struct Generator {
    Ket state;
    StateClass cls;
};

/// The ordered generator family spanning the same subspace as the product
/// basis: one uniform 0/1 state per monomial class, in a deterministic order
/// that puts the named product members at the block boundaries.
///   QubitDicke     -> Dicke states, weight ascending
///   QuditVeronese  -> generalized Dicke states, occupations descending
///   QuditGamma     -> fixed-sum states, total ascending
///   QuditKSub      -> split-family states: low-site count K descending,
///                     low sum s ascending, tail occupations descending
///   Heterogeneous  -> fixed-sum states, total ascending
/// Product-class entries are exactly the simple tensors |m...m>.
std::vector<Generator> generator_states(const EmbedSpec& spec);

} // namespace entsub
