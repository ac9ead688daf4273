#include "entsub/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <set>
#include <sstream>

#include "entsub/errors.hpp"

namespace entsub {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Uniform nonzero integer in [-9, 9].
long long draw_nonzero_digit(std::uint64_t& state) {
    const auto v = static_cast<long long>(splitmix64(state) % 18);
    return v < 9 ? v + 1 : 8 - v;
}

int support_class(const MultiIndex& idx, int sites) {
    int nonzero = 0;
    for (int v : idx) {
        if (v != 0) ++nonzero;
    }
    return nonzero == 1 ? sites + 1 : nonzero;
}

void require_uniform(const Ket& generator, const char* who) {
    for (const auto& [idx, c] : generator.terms()) {
        if (!(c == GaussianRational{1}))
            throw RangeError(std::string(who) + ": generator must have unit coefficients");
    }
}

std::string subset_to_string(const std::vector<int>& subset) {
    std::string s = "{";
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(subset[i]);
    }
    return s + "}";
}

} // namespace

const char* scheme_name(Scheme s) {
    return s == Scheme::Triangular ? "triangular" : "dft";
}

std::vector<MultiIndex> scheme_term_order(const Ket& generator) {
    const int sites = generator.dims().sites();
    std::vector<MultiIndex> order;
    order.reserve(generator.term_count());
    for (const auto& [idx, c] : generator.terms()) order.push_back(idx);
    std::stable_sort(order.begin(), order.end(), [sites](const MultiIndex& a, const MultiIndex& b) {
        const int ca = support_class(a, sites);
        const int cb = support_class(b, sites);
        if (ca != cb) return ca < cb;
        return a < b;
    });
    return order;
}

std::vector<std::pair<Ket, Rational>> triangular_ces_ordered(const Ket& generator,
                                                             const std::vector<MultiIndex>& order) {
    require_uniform(generator, "triangular_ces");
    const std::size_t N = generator.term_count();
    if (N < 2) throw TooFewTerms("triangular_ces: need a generator with at least 2 terms");
    if (order.size() != N)
        throw RangeError("triangular_ces: order must be a permutation of the generator's terms");
    for (const auto& idx : order) {
        if (generator.coeff(idx).is_zero())
            throw RangeError("triangular_ces: order contains a label outside the generator");
    }
    if (std::set<MultiIndex>(order.begin(), order.end()).size() != N)
        throw RangeError("triangular_ces: order repeats a label");

    std::vector<std::pair<Ket, Rational>> rows;
    rows.reserve(N - 1);
    for (std::size_t t = 2; t <= N; ++t) {
        Ket row(generator.dims());
        for (std::size_t i = 0; i + 1 < t; ++i) row.set(order[i], GaussianRational{1});
        row.set(order[t - 1], GaussianRational{-(static_cast<long long>(t) - 1)});
        rows.emplace_back(std::move(row),
                          Rational(static_cast<long long>(t) * static_cast<long long>(t) -
                                   static_cast<long long>(t)));
    }
    return rows;
}

std::vector<std::pair<Ket, Rational>> triangular_ces(const Ket& generator) {
    return triangular_ces_ordered(generator, scheme_term_order(generator));
}

std::vector<CKet> dft_ces(const Ket& generator) {
    require_uniform(generator, "dft_ces");
    const std::size_t N = generator.term_count();
    if (N < 2) throw TooFewTerms("dft_ces: need a generator with at least 2 terms");
    const auto order = scheme_term_order(generator);
    const double scale = 1.0 / std::sqrt(static_cast<double>(N));

    std::vector<CKet> rows;
    rows.reserve(N - 1);
    for (std::size_t j = 1; j < N; ++j) {
        CKet row(generator.dims());
        for (std::size_t l = 0; l < N; ++l) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(j * l) /
                                 static_cast<double>(N);
            row.set(order[l], scale * std::complex<double>{std::cos(angle), std::sin(angle)});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Decomposition decompose(const EmbedSpec& spec, Scheme scheme, std::uint64_t seed) {
    Decomposition dec{spec, scheme, seed, choose_generic_points(spec, seed), {}, {}, {}, {}, {}};
    for (const auto& gen : generator_states(spec)) {
        if (gen.cls == StateClass::Product) {
            dec.product_part.push_back(gen.state);
            continue;
        }
        dec.ges_basis.push_back(gen.state);
        if (scheme == Scheme::Triangular) {
            for (auto& [row, sq_norm] : triangular_ces(gen.state)) {
                dec.ces_basis.push_back(std::move(row));
                dec.ces_squared_norms.push_back(sq_norm);
            }
        } else {
            for (auto& row : dft_ces(gen.state)) {
                dec.ces_basis_c.push_back(std::move(row));
            }
        }
    }
    return dec;
}

GesLayers extract_ges_layers(const Decomposition& dec) {
    std::vector<std::size_t> block_sizes; // per GME generator: term count - 1
    std::size_t total = 0;
    for (const auto& gen : dec.ges_basis) {
        block_sizes.push_back(gen.term_count() - 1);
        total += gen.term_count() - 1;
    }
    const std::size_t ces_count =
        dec.scheme == Scheme::Triangular ? dec.ces_basis.size() : dec.ces_basis_c.size();
    const std::size_t other_count =
        dec.scheme == Scheme::Triangular ? dec.ces_basis_c.size() : dec.ces_basis.size();
    if (ces_count != total || other_count != 0)
        throw SchemeUnsupported("extract_ges_layers: parts inconsistent with the scheme tag");

    std::vector<std::size_t> offsets(block_sizes.size());
    std::size_t acc = 0;
    for (std::size_t g = 0; g < block_sizes.size(); ++g) {
        offsets[g] = acc;
        acc += block_sizes[g];
    }

    GesLayers layers;
    std::vector<bool> used(total, false);
    if (dec.scheme == Scheme::Triangular) {
        // One layer: each generator's final vector.
        std::vector<std::size_t> layer;
        for (std::size_t g = 0; g < block_sizes.size(); ++g) {
            layer.push_back(offsets[g] + block_sizes[g] - 1);
            used[layer.back()] = true;
        }
        layers.layer_indices.push_back(std::move(layer));
    } else {
        std::size_t min_rows = total;
        for (std::size_t b : block_sizes) min_rows = std::min(min_rows, b);
        for (std::size_t j = 0; j < min_rows; ++j) {
            std::vector<std::size_t> layer;
            for (std::size_t g = 0; g < block_sizes.size(); ++g) {
                layer.push_back(offsets[g] + j);
                used[layer.back()] = true;
            }
            layers.layer_indices.push_back(std::move(layer));
        }
    }
    for (std::size_t i = 0; i < total; ++i) {
        if (!used[i]) layers.residual_indices.push_back(i);
    }

    layers.sizes.push_back(dec.product_part.size());
    layers.sizes.push_back(dec.ges_basis.size());
    for (const auto& layer : layers.layer_indices) layers.sizes.push_back(layer.size());
    layers.sizes.push_back(layers.residual_indices.size());
    return layers;
}

std::vector<std::vector<CKet>> three_qubit_ges_partition() {
    const LocalDims dims({2, 2, 2});
    const double s3 = 1.0 / std::sqrt(3.0);
    const double s2 = 1.0 / std::sqrt(2.0);
    const std::complex<double> omega{std::cos(2.0 * std::numbers::pi / 3.0),
                                     std::sin(2.0 * std::numbers::pi / 3.0)};
    const std::complex<double> omega2 = omega * omega;

    auto phased = [&](const MultiIndex& a, const MultiIndex& b, const MultiIndex& c,
                      const std::complex<double>& w1, const std::complex<double>& w2) {
        CKet k(dims);
        k.set(a, {s3, 0.0});
        k.set(b, s3 * w1);
        k.set(c, s3 * w2);
        return k;
    };

    CKet d1(dims), d2(dims);
    const Ket w_low = dicke(3, 1);
    const Ket w_high = dicke(3, 2);
    for (const auto& [idx, c] : w_low.terms()) d1.set(idx, {s3, 0.0});
    for (const auto& [idx, c] : w_high.terms()) d2.set(idx, {s3, 0.0});

    CKet ghz_plus(dims), ghz_minus(dims);
    ghz_plus.set({0, 0, 0}, {s2, 0.0});
    ghz_plus.set({1, 1, 1}, {s2, 0.0});
    ghz_minus.set({0, 0, 0}, {s2, 0.0});
    ghz_minus.set({1, 1, 1}, {-s2, 0.0});

    const CKet chi11 = phased({0, 0, 1}, {0, 1, 0}, {1, 0, 0}, omega, omega2);
    const CKet chi12 = phased({0, 0, 1}, {0, 1, 0}, {1, 0, 0}, omega2, omega);
    const CKet chi21 = phased({0, 1, 1}, {1, 0, 1}, {1, 1, 0}, omega, omega2);
    const CKet chi22 = phased({0, 1, 1}, {1, 0, 1}, {1, 1, 0}, omega2, omega);

    return {{d1, d2}, {ghz_plus, chi11, chi22}, {ghz_minus, chi12, chi21}};
}

BigInt max_ces_dim(const LocalDims& dims) {
    BigInt product = 1;
    BigInt cap_sum = 0;
    for (int d : dims.as_vector()) {
        product *= d;
        cap_sum += d - 1;
    }
    return product - cap_sum - 1;
}

BigInt max_ges_dim(const LocalDims& dims) {
    const auto& v = dims.as_vector();
    if (!std::is_sorted(v.begin(), v.end()))
        throw RangeError("max_ges_dim: dims must be sorted ascending");
    BigInt rest = 1;
    for (std::size_t j = 1; j < v.size(); ++j) rest *= v[j];
    return BigInt(v[0] - 1) * (rest - 1);
}

BigInt max_sym_ges_dim(int n, int d) {
    if (n < 2) throw RangeError("max_sym_ges_dim: need n >= 2");
    if (d < 2) throw RangeError("max_sym_ges_dim: need d >= 2");
    return binomial(n + d - 1, d - 1) - d;
}

bool VerificationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckItem& c) { return c.passed; });
}

namespace {

constexpr double kTolerance = 1e-10;

double cket_norm(const CKet& k) {
    double acc = 0.0;
    for (const auto& [idx, c] : k.terms()) acc += std::norm(c);
    return std::sqrt(acc);
}

/// |<a|b>| / (||a|| ||b||) for the tolerant orthogonality checks.
double relative_overlap(const CKet& a, const CKet& b) {
    return std::abs(inner_c(a, b)) / (cket_norm(a) * cket_norm(b));
}

void check_part_sizes(const Decomposition& dec, VerificationReport& report) {
    const auto& spec = dec.spec;
    const BigInt size = nupb_size(spec);
    const BigInt total = BigInt(spec.dims().total_dim());
    const BigInt expected_product =
        spec.homogeneous() ? BigInt(spec.dims().dim(0) - spec.k_sub()) : BigInt(2);
    const BigInt expected_ges = size - expected_product;
    const BigInt expected_ces = total - size;
    const std::size_t ces_count =
        dec.scheme == Scheme::Triangular ? dec.ces_basis.size() : dec.ces_basis_c.size();

    std::ostringstream detail;
    detail << "product " << dec.product_part.size() << "/" << expected_product << ", ges "
           << dec.ges_basis.size() << "/" << expected_ges << ", ces " << ces_count << "/"
           << expected_ces;
    const bool ok = BigInt(dec.product_part.size()) == expected_product &&
                    BigInt(dec.ges_basis.size()) == expected_ges &&
                    BigInt(ces_count) == expected_ces;
    report.checks.push_back({"part_sizes", ok, detail.str()});
}

void check_orthogonality(const Decomposition& dec, VerificationReport& report) {
    std::vector<const Ket*> exact;
    for (const auto& k : dec.product_part) exact.push_back(&k);
    for (const auto& k : dec.ges_basis) exact.push_back(&k);
    for (const auto& k : dec.ces_basis) exact.push_back(&k);

    std::size_t checked = 0;
    for (std::size_t i = 0; i < exact.size(); ++i) {
        for (std::size_t j = i + 1; j < exact.size(); ++j) {
            ++checked;
            if (!inner(*exact[i], *exact[j]).is_zero()) {
                report.checks.push_back({"pairwise_orthogonality", false,
                                         "exact vectors " + std::to_string(i) + " and " +
                                             std::to_string(j) + " overlap"});
                return;
            }
        }
    }
    if (!dec.ces_basis_c.empty()) {
        std::vector<CKet> floats;
        for (const auto* k : exact) floats.push_back(to_cket(*k));
        for (const auto& k : dec.ces_basis_c) floats.push_back(k);
        for (std::size_t i = 0; i < floats.size(); ++i) {
            for (std::size_t j = std::max(i + 1, exact.size()); j < floats.size(); ++j) {
                ++checked;
                if (relative_overlap(floats[i], floats[j]) > kTolerance) {
                    report.checks.push_back({"pairwise_orthogonality", false,
                                             "vectors " + std::to_string(i) + " and " +
                                                 std::to_string(j) + " overlap beyond tolerance"});
                    return;
                }
            }
        }
    }
    report.checks.push_back(
        {"pairwise_orthogonality", true, std::to_string(checked) + " pairs orthogonal"});
}

void check_total_span(const Decomposition& dec, VerificationReport& report) {
    const long long total = dec.spec.dims().total_dim();
    long long rank = 0;
    if (dec.scheme == Scheme::Triangular) {
        ExactSpan span;
        for (const auto& k : dec.product_part) span.insert(k);
        for (const auto& k : dec.ges_basis) span.insert(k);
        for (const auto& k : dec.ces_basis) span.insert(k);
        rank = span.rank();
    } else {
        CMatrix rows;
        auto add_row = [&](const CKet& k) {
            std::vector<std::complex<double>> row(static_cast<std::size_t>(total));
            const auto& dims = dec.spec.dims();
            for (const auto& [idx, c] : k.terms()) {
                long long flat = 0;
                for (int site = 0; site < dims.sites(); ++site) {
                    flat = flat * dims.dim(site) + idx[static_cast<std::size_t>(site)];
                }
                row[static_cast<std::size_t>(flat)] = c;
            }
            rows.push_back(std::move(row));
        };
        for (const auto& k : dec.product_part) add_row(to_cket(k));
        for (const auto& k : dec.ges_basis) add_row(to_cket(k));
        for (const auto& k : dec.ces_basis_c) add_row(k);
        rank = rank_tolerant(rows);
    }
    report.checks.push_back({"total_span", rank == total,
                             "rank " + std::to_string(rank) + " of " + std::to_string(total)});
}

void check_ges_members(const Decomposition& dec, VerificationReport& report) {
    for (std::size_t i = 0; i < dec.ges_basis.size(); ++i) {
        const auto r = is_gme(dec.ges_basis[i]);
        if (!r.gme) {
            for (const auto& e : r.entries) {
                if (e.rank < 2) {
                    report.checks.push_back({"ges_members_gme", false,
                                             "ges vector " + std::to_string(i) +
                                                 " has rank " + std::to_string(e.rank) +
                                                 " across " + subset_to_string(e.subset)});
                    return;
                }
            }
        }
    }
    report.checks.push_back({"ges_members_gme", true,
                             std::to_string(dec.ges_basis.size()) + " basis vectors GME"});
}

void check_random_combinations(const Decomposition& dec, int trials, std::uint64_t seed,
                               VerificationReport& report) {
    std::uint64_t state = seed;
    for (int trial = 0; trial < trials; ++trial) {
        Ket combo(dec.spec.dims());
        for (const auto& v : dec.ges_basis) {
            const GaussianRational c{Rational(draw_nonzero_digit(state)),
                                     Rational(draw_nonzero_digit(state))};
            combo = add(combo, scale(c, v));
        }
        if (combo.is_zero() || !is_gme(combo).gme) {
            report.checks.push_back({"random_combinations_gme", false,
                                     "combination " + std::to_string(trial) + " is not GME"});
            return;
        }
    }
    report.checks.push_back({"random_combinations_gme", true,
                             std::to_string(trials) + " random combinations GME"});
}

void check_fresh_points(const Decomposition& dec, int fresh_points, std::uint64_t seed,
                        VerificationReport& report) {
    const auto& spec = dec.spec;
    const int fc = free_coord_count(spec);
    const std::size_t size = dec.points.size();

    // First integer x beyond every evaluation point used by the construction.
    long long start_x = static_cast<long long>(size);
    for (const auto& p : dec.points) {
        const BigInt floor_x = numerator(p.x) / denominator(p.x);
        const long long fx = floor_x.convert_to<long long>();
        start_x = std::max(start_x, fx + 1);
    }
    const std::size_t window =
        static_cast<std::size_t>(seed % 4096) + 32 * size * static_cast<std::size_t>(fc);

    for (int t = 0; t < fresh_points; ++t) {
        EvaluationPoint p;
        p.x = Rational(start_x + t);
        for (int j = 0; j < fc; ++j) {
            // Primes from the window beyond any used during construction.
            const std::size_t index =
                window + static_cast<std::size_t>(t) * static_cast<std::size_t>(fc) +
                static_cast<std::size_t>(j);
            p.free_coords.emplace_back(nth_prime(index));
        }
        const Ket member = nupb_member(spec, p);
        if (dec.scheme == Scheme::Triangular) {
            for (std::size_t i = 0; i < dec.ces_basis.size(); ++i) {
                if (!inner(dec.ces_basis[i], member).is_zero()) {
                    report.checks.push_back(
                        {"ces_fresh_point_orthogonality", false,
                         "ces vector " + std::to_string(i) + " overlaps the member at x=" +
                             rational_to_string(p.x)});
                    return;
                }
            }
        } else {
            const CKet member_c = to_cket(member);
            for (std::size_t i = 0; i < dec.ces_basis_c.size(); ++i) {
                if (relative_overlap(dec.ces_basis_c[i], member_c) > kTolerance) {
                    report.checks.push_back(
                        {"ces_fresh_point_orthogonality", false,
                         "ces vector " + std::to_string(i) + " overlaps the member at x=" +
                             rational_to_string(p.x)});
                    return;
                }
            }
        }
    }
    report.checks.push_back({"ces_fresh_point_orthogonality", true,
                             std::to_string(fresh_points) + " fresh members orthogonal to ces"});
}

void check_ges_bounds(const Decomposition& dec, VerificationReport& report) {
    const auto& spec = dec.spec;
    const BigInt ges_dim(dec.ges_basis.size());

    std::vector<int> sorted_dims = spec.dims().as_vector();
    std::sort(sorted_dims.begin(), sorted_dims.end());
    const BigInt ges_bound = max_ges_dim(LocalDims(sorted_dims));

    bool ok = ges_dim <= ges_bound;
    std::ostringstream detail;
    detail << "ges " << ges_dim << " <= bound " << ges_bound;
    if (spec.homogeneous()) {
        const BigInt sym_bound = max_sym_ges_dim(spec.dims().sites(), spec.dims().dim(0));
        ok = ok && ges_dim <= sym_bound;
        detail << ", <= symmetric bound " << sym_bound;
        if (spec.k_sub() == 0) {
            ok = ok && ges_dim == sym_bound;
            detail << " (equality required)";
        }
    }
    report.checks.push_back({"ges_dimension_bounds", ok, detail.str()});
}

} // namespace

VerificationReport verify(const Decomposition& dec, int trials, int fresh_points,
                          std::uint64_t seed) {
    VerificationReport report;
    check_part_sizes(dec, report);
    check_orthogonality(dec, report);
    check_total_span(dec, report);
    check_ges_members(dec, report);
    check_random_combinations(dec, trials, seed, report);
    check_fresh_points(dec, fresh_points, seed, report);
    check_ges_bounds(dec, report);
    return report;
}

} // namespace entsub
