#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "balance/adversary.hpp"
#include "balance/analysis.hpp"
#include "balance/game.hpp"
#include "balance/io.hpp"
#include "balance/montecarlo.hpp"
#include "balance/strategies.hpp"
#include "balance/verifier.hpp"

namespace py = pybind11;
using namespace balance;

namespace {

StrategyMatrix to_matrix(const std::vector<std::string>& rows) { return StrategyMatrix::from_strings(rows); }

py::dict hypothesis_dict(const Hypothesis& h) {
    py::dict d;
    d["coin"] = h.coin + 1;
    d["sign"] = h.sign == Sign::Heavy ? "heavy" : "light";
    return d;
}

py::list survivors_list(const std::vector<Hypothesis>& hs) {
    py::list out;
    for (const auto& h : hs) out.append(hypothesis_dict(h));
    return out;
}

py::object json_to_py(const io::Json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Predetermined balance game";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
    py::register_exception<CapacityError>(m, "CapacityError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

    m.def(
        "transcribe",
        [](const std::vector<std::string>& rows, const std::string& mask, const std::string& prior) {
            const auto o = transcribe(to_matrix(rows), Mask::parse(mask), prior_from_string(prior));
            std::vector<std::vector<std::string>> out(static_cast<std::size_t>(o.rows()));
            for (int i = 0; i < o.rows(); ++i)
                for (int j = 0; j < o.cols(); ++j) out[static_cast<std::size_t>(i)].push_back(to_string(o(i, j)));
            return out;
        },
        py::arg("rows"), py::arg("mask"), py::arg("prior") = "heavy");

    m.def(
        "surviving_hypotheses",
        [](const std::string& spec, const std::vector<std::string>& rows, const std::string& mask) {
            return survivors_list(surviving_hypotheses(GameSpec::parse(spec), to_matrix(rows), Mask::parse(mask)));
        },
        py::arg("spec"), py::arg("rows"), py::arg("mask"));

    m.def(
        "adjudicate",
        [](const std::string& spec, const std::vector<std::string>& rows, const std::string& mask) {
            return json_to_py(io::to_json(adjudicate(GameSpec::parse(spec), to_matrix(rows), Mask::parse(mask))));
        },
        py::arg("spec"), py::arg("rows"), py::arg("mask"));

    m.def(
        "certify",
        [](const std::string& spec, const std::vector<std::string>& rows) {
            return json_to_py(io::to_json(certify(GameSpec::parse(spec), to_matrix(rows))));
        },
        py::arg("spec"), py::arg("rows"));

    m.def(
        "find_winning_mask",
        [](const std::string& spec, const std::vector<std::string>& rows) -> py::object {
            const auto a = find_winning_mask(GameSpec::parse(spec), to_matrix(rows));
            return a ? json_to_py(io::to_json(*a)) : py::none();
        },
        py::arg("spec"), py::arg("rows"));

    m.def(
        "constructive_attack",
        [](const std::string& spec, const std::vector<std::string>& rows) -> py::object {
            const auto a = constructive_attack(GameSpec::parse(spec), to_matrix(rows));
            return a ? json_to_py(io::to_json(*a)) : py::none();
        },
        py::arg("spec"), py::arg("rows"));

    m.def(
        "game_value",
        [](const std::string& spec, bool exhaustive) {
            return json_to_py(io::to_json(
                game_value(GameSpec::parse(spec), exhaustive ? ProofMode::Exhaustive : ProofMode::Constructive)));
        },
        py::arg("spec"), py::arg("exhaustive") = false);

    m.def(
        "census_perfect",
        [](int n, int q, const std::string& prior, int k) { return census_perfect(n, q, prior_from_string(prior), k); },
        py::arg("n"), py::arg("q"), py::arg("prior") = "heavy", py::arg("k") = 0);

    m.def(
        "survivor_mass",
        [](const std::string& spec, const std::vector<std::string>& rows) {
            return survivor_mass(GameSpec::parse(spec), to_matrix(rows));
        },
        py::arg("spec"), py::arg("rows"));

    m.def("binary_strategy", [](int n, int q) { return binary_strategy(n, q).to_strings(); });
    m.def("ternary_strategy", [](int n, int q) { return ternary_strategy(n, q).to_strings(); });
    m.def("complement_free_strategy", [](int n, int q) { return complement_free_strategy(n, q).to_strings(); });
    m.def(
        "random_strategy",
        [](int n, int q, double r, std::uint64_t seed) { return random_strategy(n, q, {r, seed}).to_strings(); },
        py::arg("n"), py::arg("q"), py::arg("r"), py::arg("seed"));

    m.def(
        "simulate_random_player",
        [](const std::string& spec, double r, std::uint64_t trials, std::uint64_t seed) {
            return json_to_py(io::to_json(simulate_random_player(GameSpec::parse(spec), r, trials, seed)));
        },
        py::arg("spec"), py::arg("r"), py::arg("trials"), py::arg("seed"));
    m.def(
        "concentration_experiment",
        [](int q, double r, double delta, std::uint64_t trials, std::uint64_t seed) {
            return json_to_py(io::to_json(concentration_experiment(q, r, delta, trials, seed)));
        },
        py::arg("q"), py::arg("r"), py::arg("delta"), py::arg("trials"), py::arg("seed"));
    m.def(
        "random_perfect_rate",
        [](int n, int q, const std::string& prior, std::uint64_t trials, std::uint64_t seed) {
            return json_to_py(io::to_json(random_perfect_rate(n, q, prior_from_string(prior), trials, seed)));
        },
        py::arg("n"), py::arg("q"), py::arg("prior"), py::arg("trials"), py::arg("seed"));

    m.def("g_rate", &analysis::g_rate, py::arg("r"));
    m.def("v_rate", &analysis::v_rate, py::arg("r"), py::arg("r2"));
    m.def("binary_entropy", &analysis::binary_entropy, py::arg("p"));
    m.def(
        "optimal_r",
        [](double r2) {
            const auto o = analysis::optimal_r(r2);
            return py::make_tuple(o.argmax, o.max);
        },
        py::arg("r2"));
    m.def("phi", &analysis::phi, py::arg("p"), py::arg("r"), py::arg("q"));
    m.def("hamming_ball_volume", &analysis::hamming_ball_volume, py::arg("length"), py::arg("radius"), py::arg("arity"));
    m.def("entropy_lower_bound", &analysis::entropy_lower_bound, py::arg("n"), py::arg("hypotheses_per_coin"));
    m.def("adaptive_first_move_range", &analysis::adaptive_first_move_range, py::arg("n"), py::arg("q"));
    m.def("chernoff_tail_bound", &analysis::chernoff_tail_bound, py::arg("q"), py::arg("delta"));
}
