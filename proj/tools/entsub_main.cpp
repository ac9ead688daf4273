// Command-line front end: construct, inspect, and verify orthogonal
// decompositions of multipartite state spaces into a product part, a
// genuinely entangled part, and a completely entangled part.
//
// Exit codes: 0 on success, 1 on usage or input errors, 2 when a
// requested verification reports a failed check.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "entsub/decompose.hpp"
#include "entsub/embeddings.hpp"
#include "entsub/errors.hpp"
#include "entsub/multirank.hpp"
#include "entsub/serialize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw entsub::ParseError("cannot open '" + path + "'");
    nlohmann::json j;
    in >> j;
    return j;
}

void emit_json(const nlohmann::json& j, const std::string& out_path) {
    const std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw entsub::ParseError("cannot write '" + out_path + "'");
        out << text;
    }
}

entsub::EmbedSpec make_spec(const std::vector<int>& dims, std::optional<int> k_sub) {
    return entsub::EmbedSpec(entsub::LocalDims(dims), k_sub);
}

entsub::Scheme scheme_from_name(const std::string& name) {
    if (name == "triangular") return entsub::Scheme::Triangular;
    if (name == "dft") return entsub::Scheme::Dft;
    throw entsub::ParseError("unknown scheme '" + name + "'");
}

int run_decompose(const std::vector<int>& dims, std::optional<int> k_sub,
                  const std::string& scheme_name, std::uint64_t seed,
                  const std::string& out_path, bool do_verify, int trials, int fresh) {
    const auto spec = make_spec(dims, k_sub);
    const auto dec = entsub::decompose(spec, scheme_from_name(scheme_name), seed);
    if (do_verify) {
        const auto report = entsub::verify(dec, trials, fresh, seed + 1);
        emit_json(entsub::decomposition_to_json(dec, &report), out_path);
        return report.all_passed() ? kExitOk : kExitVerifyFailed;
    }
    emit_json(entsub::decomposition_to_json(dec), out_path);
    return kExitOk;
}

int run_multirank(const std::string& state_path, std::optional<int> ell) {
    const auto ket = entsub::ket_from_json(read_json_file(state_path));
    const auto report = entsub::is_gme(ket);
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : report.entries) {
        if (ell && static_cast<int>(e.subset.size()) != *ell) continue;
        entries.push_back({{"subset", e.subset}, {"rank", e.rank}});
    }
    emit_json({{"dims", ket.dims().as_vector()},
               {"entries", entries},
               {"gme", report.gme},
               {"fully_product", entsub::is_fully_product(ket)}},
              "");
    return kExitOk;
}

int run_verify(const std::string& in_path, int trials, int fresh, std::uint64_t seed) {
    const auto dec = entsub::decomposition_from_json(read_json_file(in_path));
    const auto report = entsub::verify(dec, trials, fresh, seed);
    emit_json(entsub::report_to_json(report), "");
    return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

int run_counts(const std::vector<int>& dims, std::optional<int> k_sub) {
    const auto spec = make_spec(dims, k_sub);
    const entsub::BigInt total = spec.dims().total_dim();
    const entsub::BigInt members = entsub::nupb_size(spec);
    const entsub::BigInt product = spec.homogeneous()
                                       ? entsub::BigInt(spec.dims().dim(0) - spec.k_sub())
                                       : entsub::BigInt(2);
    nlohmann::json out = {{"dims", spec.dims().as_vector()},
                          {"family", entsub::family_name(spec.family())},
                          {"total_dim", total.str()},
                          {"member_count", members.str()},
                          {"product_dim", product.str()},
                          {"ges_dim", entsub::BigInt(members - product).str()},
                          {"ces_dim", entsub::BigInt(total - members).str()},
                          {"max_ces_dim", entsub::max_ces_dim(spec.dims()).str()}};
    out["k_sub"] = spec.homogeneous() ? nlohmann::json(spec.k_sub()) : nlohmann::json(nullptr);

    auto sorted = spec.dims().as_vector();
    std::sort(sorted.begin(), sorted.end());
    out["max_ges_dim"] = entsub::max_ges_dim(entsub::LocalDims(sorted)).str();
    if (spec.homogeneous()) {
        out["max_sym_ges_dim"] =
            entsub::max_sym_ges_dim(spec.dims().sites(), spec.dims().dim(0)).str();
    }
    emit_json(out, "");
    return kExitOk;
}

int run_layers(const std::string& in_path) {
    const auto dec = entsub::decomposition_from_json(read_json_file(in_path));
    const auto layers = entsub::extract_ges_layers(dec);
    nlohmann::json layer_json = nlohmann::json::array();
    for (const auto& layer : layers.layer_indices) layer_json.push_back(layer);
    emit_json({{"sizes", layers.sizes},
               {"layers", layer_json},
               {"residual", layers.residual_indices}},
              "");
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Orthogonal decompositions of multipartite state spaces into "
                 "product, genuinely entangled, and completely entangled parts"};
    app.require_subcommand(1);

    std::vector<int> dims;
    std::optional<int> k_sub;
    std::string scheme = "triangular";
    std::uint64_t seed = 0;
    std::string out_path;
    std::string in_path;
    std::string state_path;
    std::optional<int> ell;
    int trials = 50;
    int fresh = 8;
    bool do_verify = false;

    auto* cmd_decompose =
        app.add_subcommand("decompose", "Construct a decomposition and emit it as JSON");
    cmd_decompose->add_option("--dims", dims, "Local dimensions, e.g. 2,3,4")
        ->required()
        ->delimiter(',');
    cmd_decompose->add_option("--ksub", k_sub,
                              "Substitution depth for equal local dimensions");
    cmd_decompose->add_option("--scheme", scheme, "Completion scheme")
        ->check(CLI::IsMember({"triangular", "dft"}));
    cmd_decompose->add_option("--seed", seed, "Seed for evaluation-point retries");
    cmd_decompose->add_option("--out", out_path, "Output path (stdout when omitted)");
    cmd_decompose->add_flag("--verify", do_verify, "Run the verifier and embed its report");
    cmd_decompose->add_option("--trials", trials, "Random GME combinations when verifying");
    cmd_decompose->add_option("--fresh", fresh, "Fresh evaluation points when verifying");

    auto* cmd_multirank =
        app.add_subcommand("multirank", "Report every bipartition rank of a state");
    cmd_multirank->add_option("--state", state_path, "State JSON file")->required();
    cmd_multirank->add_option("--ell", ell, "Only print subsets of this size");

    auto* cmd_verify = app.add_subcommand("verify", "Re-check a stored decomposition");
    cmd_verify->add_option("--in", in_path, "Decomposition JSON file")->required();
    cmd_verify->add_option("--trials", trials, "Random GME combinations to test");
    cmd_verify->add_option("--fresh", fresh, "Fresh evaluation points to test");
    cmd_verify->add_option("--seed", seed, "Seed for the random checks");

    auto* cmd_counts =
        app.add_subcommand("counts", "Print part dimensions and dimension bounds");
    cmd_counts->add_option("--dims", dims, "Local dimensions, e.g. 2,3,4")
        ->required()
        ->delimiter(',');
    cmd_counts->add_option("--ksub", k_sub,
                           "Substitution depth for equal local dimensions");

    auto* cmd_layers =
        app.add_subcommand("layers", "Group the genuinely entangled basis into layers");
    cmd_layers->add_option("--in", in_path, "Decomposition JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(cmd_decompose)) {
            return run_decompose(dims, k_sub, scheme, seed, out_path, do_verify, trials,
                                 fresh);
        }
        if (app.got_subcommand(cmd_multirank)) return run_multirank(state_path, ell);
        if (app.got_subcommand(cmd_verify)) return run_verify(in_path, trials, fresh, seed);
        if (app.got_subcommand(cmd_counts)) return run_counts(dims, k_sub);
        if (app.got_subcommand(cmd_layers)) return run_layers(in_path);
    } catch (const entsub::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
