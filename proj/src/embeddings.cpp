#include "entsub/embeddings.hpp"

#include "entsub/errors.hpp"
#include "entsub/multirank.hpp"

namespace entsub {

namespace {

std::size_t checked_size(const BigInt& size) {
    if (size > 1000000) throw RangeError("nupb size too large for construction");
    return static_cast<std::size_t>(size.convert_to<long long>());
}

} // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::QubitDicke: return "qubit_dicke";
        case Family::QuditVeronese: return "qudit_veronese";
        case Family::QuditGamma: return "qudit_gamma";
        case Family::QuditKSub: return "qudit_ksub";
        case Family::Heterogeneous: return "heterogeneous";
    }
    return "unknown";
}

EmbedSpec::EmbedSpec(LocalDims dims, std::optional<int> k_sub)
    : dims_(std::move(dims)), k_sub_(k_sub), family_(Family::Heterogeneous) {
    if (!dims_.homogeneous()) {
        if (k_sub_.has_value())
            throw SpecMismatch("EmbedSpec: heterogeneous dims are always fully substituted; "
                               "a substitution depth cannot be chosen");
        return;
    }
    const int d = dims_.dim(0);
    if (!k_sub_.has_value()) k_sub_ = d - 2;
    if (*k_sub_ < 0 || *k_sub_ > d - 2)
        throw RangeError("EmbedSpec: need 0 <= k_sub <= d-2");
    if (d == 2) {
        family_ = Family::QubitDicke;
    } else if (*k_sub_ == 0) {
        family_ = Family::QuditVeronese;
    } else if (*k_sub_ == d - 2) {
        family_ = Family::QuditGamma;
    } else {
        family_ = Family::QuditKSub;
    }
}

int EmbedSpec::k_sub() const {
    if (!k_sub_.has_value())
        throw SpecMismatch("EmbedSpec: heterogeneous specs have no substitution depth");
    return *k_sub_;
}

BigInt nupb_size(const EmbedSpec& spec) {
    const int n = spec.dims().sites();
    if (!spec.homogeneous()) {
        BigInt cap_sum = 0;
        for (int d : spec.dims().as_vector()) cap_sum += d - 1;
        return cap_sum + 1;
    }
    const int d = spec.dims().dim(0);
    switch (spec.family()) {
        case Family::QubitDicke: return BigInt(n + 1);
        case Family::QuditVeronese: return binomial(n + d - 1, d - 1);
        case Family::QuditGamma: return BigInt(static_cast<long long>(n) * (d - 1) + 1);
        default: return count_distinct_monomials(n, d, spec.k_sub());
    }
}

int free_coord_count(const EmbedSpec& spec) {
    if (!spec.homogeneous()) return 0;
    return spec.dims().dim(0) - spec.k_sub() - 2;
}

std::vector<GaussianRational> site_coefficients(const EmbedSpec& spec, int site,
                                                const EvaluationPoint& p) {
    const int d = spec.dims().dim(site);
    const int fc = free_coord_count(spec);
    if (static_cast<int>(p.free_coords.size()) != fc)
        throw SpecMismatch("site_coefficients: point carries the wrong number of free coordinates");

    std::vector<GaussianRational> coeffs;
    coeffs.reserve(static_cast<std::size_t>(d));
    const int power_top = spec.homogeneous() ? spec.k_sub() + 1 : d - 1;
    Rational power = 1;
    for (int i = 0; i <= power_top; ++i) {
        coeffs.emplace_back(power);
        power *= p.x;
    }
    for (const Rational& f : p.free_coords) coeffs.emplace_back(f);
    return coeffs;
}

Ket nupb_member(const EmbedSpec& spec, const EvaluationPoint& p) {
    std::vector<std::vector<GaussianRational>> site_lists;
    site_lists.reserve(static_cast<std::size_t>(spec.dims().sites()));
    for (int site = 0; site < spec.dims().sites(); ++site) {
        site_lists.push_back(site_coefficients(spec, site, p));
    }
    return product_state(spec.dims(), site_lists);
}

Nupb build_nupb(const EmbedSpec& spec, const std::vector<EvaluationPoint>& points) {
    const std::size_t size = checked_size(nupb_size(spec));
    if (points.size() != size)
        throw RangeError("build_nupb: need exactly one evaluation point per member");

    Nupb nupb{spec, points, {}};
    nupb.members.reserve(size);
    for (const auto& p : points) nupb.members.push_back(nupb_member(spec, p));

    ExactSpan span;
    std::vector<std::size_t> colliding;
    for (std::size_t l = 0; l < nupb.members.size(); ++l) {
        if (!span.insert(nupb.members[l])) colliding.push_back(l);
    }
    if (!colliding.empty())
        throw RankDeficient("build_nupb: members do not span the expected subspace", colliding);
    return nupb;
}

std::vector<EvaluationPoint> choose_generic_points(const EmbedSpec& spec, std::uint64_t seed) {
    const std::size_t size = checked_size(nupb_size(spec));
    const int fc = free_coord_count(spec);
    const std::size_t base = static_cast<std::size_t>(seed % 4096);
    const int max_attempts = 32;

    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<EvaluationPoint> points(size);
        const std::size_t window = base + static_cast<std::size_t>(attempt) * size *
                                              static_cast<std::size_t>(fc);
        for (std::size_t l = 0; l < size; ++l) {
            points[l].x = Rational(static_cast<long long>(l));
            for (int j = 0; j < fc; ++j) {
                points[l].free_coords.emplace_back(
                    nth_prime(window + l * static_cast<std::size_t>(fc) +
                              static_cast<std::size_t>(j)));
            }
        }
        try {
            build_nupb(spec, points);
            return points;
        } catch (const RankDeficient&) {
            // Distinct x-values alone certify the fully substituted families,
            // so a failure there is structural and retrying cannot help.
            if (fc == 0) throw;
        }
    }
    throw ExhaustedRetries("choose_generic_points: no certifying point set in 32 windows");
}

namespace {

bool concentrated(const std::vector<int>& occ, int n) {
    for (int c : occ) {
        if (c == n) return true;
    }
    return false;
}

std::vector<Generator> qubit_generators(int n) {
    std::vector<Generator> out;
    for (int k = 0; k <= n; ++k) {
        out.push_back({dicke(n, k),
                       (k == 0 || k == n) ? StateClass::Product : StateClass::Gme});
    }
    return out;
}

std::vector<Generator> veronese_generators(int n, int d) {
    std::vector<Generator> out;
    for (const auto& occ : enumerate_occupations(n, d)) {
        out.push_back({generalized_dicke(n, d, occ),
                       concentrated(occ, n) ? StateClass::Product : StateClass::Gme});
    }
    return out;
}

std::vector<Generator> gamma_generators(int n, int d) {
    std::vector<Generator> out;
    const int top = n * (d - 1);
    for (int k = 0; k <= top; ++k) {
        out.push_back({g_state(n, d, k),
                       (k == 0 || k == top) ? StateClass::Product : StateClass::Gme});
    }
    return out;
}

std::vector<Generator> ksub_generators(int n, int d, int k_sub) {
    std::vector<Generator> out;
    const int high_levels = d - k_sub - 2;
    for (int K = n; K >= 0; --K) {
        for (int s = 0; s <= K * (k_sub + 1); ++s) {
            for (const auto& tail : enumerate_occupations(n - K, high_levels)) {
                const bool product =
                    (K == n && (s == 0 || s == n * (k_sub + 1))) ||
                    (K == 0 && concentrated(tail, n));
                out.push_back({script_g_state(n, d, k_sub, K, s, tail),
                               product ? StateClass::Product : StateClass::Gme});
            }
        }
    }
    return out;
}

std::vector<Generator> heterogeneous_generators(const LocalDims& dims) {
    std::vector<Generator> out;
    int cap_sum = 0;
    for (int d : dims.as_vector()) cap_sum += d - 1;
    for (int k = 0; k <= cap_sum; ++k) {
        out.push_back({frak_g_state(dims, k),
                       (k == 0 || k == cap_sum) ? StateClass::Product : StateClass::Gme});
    }
    return out;
}

} // namespace

std::vector<Generator> generator_states(const EmbedSpec& spec) {
    const int n = spec.dims().sites();
    switch (spec.family()) {
        case Family::QubitDicke: return qubit_generators(n);
        case Family::QuditVeronese: return veronese_generators(n, spec.dims().dim(0));
        case Family::QuditGamma: return gamma_generators(n, spec.dims().dim(0));
        case Family::QuditKSub: return ksub_generators(n, spec.dims().dim(0), spec.k_sub());
        case Family::Heterogeneous: return heterogeneous_generators(spec.dims());
    }
    throw Error("generator_states: unreachable family");
}

} // namespace entsub
