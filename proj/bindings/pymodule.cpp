// Python bindings. All structured data crosses the boundary as JSON text so
// the Python surface stays identical to the command-line output formats.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "entsub/decompose.hpp"
#include "entsub/embeddings.hpp"
#include "entsub/errors.hpp"
#include "entsub/multirank.hpp"
#include "entsub/serialize.hpp"

namespace py = pybind11;

namespace {

py::int_ big_to_py(const entsub::BigInt& v) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(v.str().c_str(), nullptr, 10));
}

entsub::EmbedSpec make_spec(const std::vector<int>& dims, std::optional<int> k_sub) {
    return entsub::EmbedSpec(entsub::LocalDims(dims), k_sub);
}

entsub::Scheme scheme_from_name(const std::string& name) {
    if (name == "triangular") return entsub::Scheme::Triangular;
    if (name == "dft") return entsub::Scheme::Dft;
    throw entsub::ParseError("unknown scheme '" + name + "'");
}

std::string decompose_json(const std::vector<int>& dims, std::optional<int> k_sub,
                           const std::string& scheme, std::uint64_t seed) {
    const auto dec = entsub::decompose(make_spec(dims, k_sub), scheme_from_name(scheme), seed);
    return entsub::decomposition_to_json(dec).dump(2);
}

std::string verify_json(const std::string& decomposition, int trials, int fresh,
                        std::uint64_t seed) {
    const auto dec = entsub::decomposition_from_json(nlohmann::json::parse(decomposition));
    const auto report = entsub::verify(dec, trials, fresh, seed);
    return entsub::report_to_json(report).dump(2);
}

std::string multirank_json(const std::string& state) {
    const auto ket = entsub::ket_from_json(nlohmann::json::parse(state));
    const auto report = entsub::is_gme(ket);
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : report.entries) {
        entries.push_back({{"subset", e.subset}, {"rank", e.rank}});
    }
    return nlohmann::json{{"dims", ket.dims().as_vector()},
                          {"entries", entries},
                          {"gme", report.gme},
                          {"fully_product", entsub::is_fully_product(ket)}}
        .dump(2);
}

std::string layers_json(const std::string& decomposition) {
    const auto dec = entsub::decomposition_from_json(nlohmann::json::parse(decomposition));
    const auto layers = entsub::extract_ges_layers(dec);
    nlohmann::json layer_json = nlohmann::json::array();
    for (const auto& layer : layers.layer_indices) layer_json.push_back(layer);
    return nlohmann::json{{"sizes", layers.sizes},
                          {"layers", layer_json},
                          {"residual", layers.residual_indices}}
        .dump(2);
}

} // namespace

PYBIND11_MODULE(_entsub, m) {
    m.doc() = "Orthogonal decompositions of multipartite state spaces into product, "
              "genuinely entangled, and completely entangled parts";

    py::register_exception<entsub::Error>(m, "Error");

    m.def("decompose", &decompose_json, py::arg("dims"), py::arg("k_sub") = std::nullopt,
          py::arg("scheme") = "triangular", py::arg("seed") = 0,
          "Construct a decomposition; returns its JSON text");
    m.def("verify", &verify_json, py::arg("decomposition"), py::arg("trials") = 50,
          py::arg("fresh") = 8, py::arg("seed") = 1,
          "Re-check a decomposition given as JSON text; returns the report JSON");
    m.def("multirank", &multirank_json, py::arg("state"),
          "Bipartition ranks and entanglement verdicts for a state JSON");
    m.def("layers", &layers_json, py::arg("decomposition"),
          "Group the genuinely entangled basis of a decomposition JSON into layers");

    m.def(
        "member_count",
        [](const std::vector<int>& dims, std::optional<int> k_sub) {
            return big_to_py(entsub::nupb_size(make_spec(dims, k_sub)));
        },
        py::arg("dims"), py::arg("k_sub") = std::nullopt,
        "Number of product members the construction places in the given space");
    m.def(
        "max_ces_dim",
        [](const std::vector<int>& dims) {
            return big_to_py(entsub::max_ces_dim(entsub::LocalDims(dims)));
        },
        py::arg("dims"), "Largest possible completely entangled subspace dimension");
    m.def(
        "max_ges_dim",
        [](const std::vector<int>& dims) {
            return big_to_py(entsub::max_ges_dim(entsub::LocalDims(dims)));
        },
        py::arg("dims"),
        "Largest possible genuinely entangled subspace dimension (ascending dims)");
    m.def(
        "max_sym_ges_dim",
        [](int sites, int dim) { return big_to_py(entsub::max_sym_ges_dim(sites, dim)); },
        py::arg("sites"), py::arg("dim"),
        "Largest genuinely entangled subspace dimension inside the symmetric subspace");
}
