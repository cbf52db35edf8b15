// Python bindings for the exact BKP tau-function library. Rationals cross the
// boundary as "p/q" strings to keep arithmetic exact on both sides.

#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bkp/hirota.hpp"
#include "bkp/json_io.hpp"
#include "bkp/tau.hpp"
#include "bkp/wops.hpp"

namespace py = pybind11;
using namespace bkp;

namespace {

Rat rat_arg(const std::string& s) { return parse_rat(s); }

OddMonomial mono_arg(const std::map<int, int>& factors) {
    std::vector<std::pair<int, int>> f(factors.begin(), factors.end());
    return OddMonomial(std::move(f));
}

WeightData weights_arg(const std::vector<std::string>& u, const std::vector<std::string>& w) {
    WeightData wd;
    for (const auto& v : u) wd.numer_params.push_back(parse_rat(v));
    for (const auto& v : w) wd.denom_params.push_back(parse_rat(v));
    return wd;
}

std::map<int, Rat> s_arg(const std::map<int, std::string>& s) {
    std::map<int, Rat> out;
    for (const auto& [k, v] : s) out[k] = parse_rat(v);
    return out;
}

TauSpec spec_arg(const std::vector<std::string>& u, const std::vector<std::string>& w,
                 const std::map<int, std::string>& s, const std::string& hbar, int cutoff) {
    TauSpec spec;
    spec.weights = weights_arg(u, w);
    spec.hbar = parse_rat(hbar);
    spec.s_values = s.empty() ? std::map<int, Rat>{{1, spec.hbar / 2}} : s_arg(s);
    spec.cutoff = cutoff;
    return spec;
}

py::dict verdict_dict(const HirotaVerdict& v) {
    py::dict d;
    d["pass"] = v.pass;
    d["bidegree"] = py::make_tuple(v.dt, v.dts);
    if (!v.pass) {
        py::dict wt, ws;
        for (const auto& [k, e] : v.witness_t.factors()) wt[py::int_(k)] = e;
        for (const auto& [k, e] : v.witness_ts.factors()) ws[py::int_(k)] = e;
        d["witness_t"] = wt;
        d["witness_s"] = ws;
        d["value"] = rat_to_string(v.value);
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_bkp, m) {
    m.doc() = "Exact tau-functions of the BKP hierarchy";

    py::class_<StrictPartition>(m, "StrictPartition")
        .def(py::init<std::vector<int>>())
        .def_property_readonly("parts", &StrictPartition::parts)
        .def_property_readonly("size", &StrictPartition::size)
        .def_property_readonly("length", &StrictPartition::length)
        .def(py::self == py::self)
        .def("__repr__", [](const StrictPartition& p) {
            std::string s = "StrictPartition([";
            for (size_t i = 0; i < p.parts().size(); ++i)
                s += (i ? ", " : "") + std::to_string(p.parts()[i]);
            return s + "])";
        });

    m.def("enumerate_strict", &enumerate_strict, py::arg("weight"));
    m.def("enumerate_strict_upto", &enumerate_strict_upto, py::arg("max_weight"));

    py::class_<GradedSeries>(m, "GradedSeries")
        .def_property_readonly("cutoff", &GradedSeries::cutoff)
        .def("is_zero", &GradedSeries::is_zero)
        .def("constant_term",
             [](const GradedSeries& f) { return rat_to_string(f.constant_term()); })
        .def(
            "coefficient",
            [](const GradedSeries& f, const std::map<int, int>& mono) {
                return rat_to_string(f.coefficient(mono_arg(mono)));
            },
            py::arg("mono"), "Coefficient of the monomial {index: exponent} as a 'p/q' string")
        .def("to_json", [](const GradedSeries& f) { return dump_canonical(series_to_json(f)); })
        .def(py::self == py::self);

    m.def(
        "series_from_json",
        [](const std::string& text) { return series_from_json(Json::parse(text)); },
        py::arg("text"));

    m.def(
        "q_lambda",
        [](const std::vector<int>& parts, int cutoff) {
            StrictPartition p(parts);
            return q_lambda(p, cutoff > 0 ? cutoff : p.size());
        },
        py::arg("parts"), py::arg("cutoff") = 0);
    m.def(
        "q_lambda_half",
        [](const std::vector<int>& parts, int cutoff) {
            StrictPartition p(parts);
            return q_lambda_half(p, cutoff > 0 ? cutoff : p.size());
        },
        py::arg("parts"), py::arg("cutoff") = 0);

    m.def(
        "bgw_tau",
        [](const std::string& N, const std::string& hbar, int cutoff) {
            return bgw_tau(rat_arg(N), rat_arg(hbar), cutoff);
        },
        py::arg("N"), py::arg("hbar") = "1", py::arg("cutoff") = 6);
    m.def(
        "bgw_cutjoin",
        [](const std::string& N, const std::string& hbar, int cutoff) {
            return bgw_cutjoin(rat_arg(N), rat_arg(hbar), cutoff);
        },
        py::arg("N"), py::arg("hbar") = "1", py::arg("cutoff") = 6);

    m.def(
        "hypergeometric_tau",
        [](const std::vector<std::string>& u, const std::vector<std::string>& w,
           const std::map<int, std::string>& s, const std::string& hbar, int cutoff) {
            return hypergeometric_tau(spec_arg(u, w, s, hbar, cutoff));
        },
        py::arg("u") = std::vector<std::string>{}, py::arg("w") = std::vector<std::string>{},
        py::arg("s") = std::map<int, std::string>{}, py::arg("hbar") = "1",
        py::arg("cutoff") = 6);
    m.def(
        "cutjoin_tau",
        [](const std::vector<std::string>& u, const std::vector<std::string>& w,
           const std::map<int, std::string>& s, const std::string& hbar, int cutoff,
           const std::string& strategy) {
            CutjoinStrategy strat =
                strategy == "qbasis" ? CutjoinStrategy::QBasis : CutjoinStrategy::TSpace;
            return cutjoin_tau(spec_arg(u, w, s, hbar, cutoff), strat);
        },
        py::arg("u") = std::vector<std::string>{}, py::arg("w") = std::vector<std::string>{},
        py::arg("s") = std::map<int, std::string>{}, py::arg("hbar") = "1",
        py::arg("cutoff") = 6, py::arg("strategy") = "tspace");

    m.def(
        "is_bkp_tau",
        [](const GradedSeries& tau, int dt, int dts) { return verdict_dict(is_bkp_tau(tau, dt, dts)); },
        py::arg("tau"), py::arg("dt"), py::arg("dts"));

    m.def(
        "wave_function",
        [](const GradedSeries& tau, int K) {
            LaurentWindow w = wave_function(tau, K);
            std::map<int, std::string> out;
            for (int n = w.zmin; n <= w.zmax; ++n) out[n] = rat_to_string(w.coeff(n));
            return out;
        },
        py::arg("tau"), py::arg("window"),
        "Map z-power -> coefficient string on the trusted window");

    m.def(
        "hurwitz_table",
        [](const std::vector<std::string>& u, const std::vector<std::string>& w, int cutoff) {
            TauSpec spec;
            spec.weights = weights_arg(u, w);
            spec.formal_s = true;
            spec.cutoff = cutoff;
            spec.s_cutoff = cutoff;
            std::vector<std::tuple<std::vector<int>, std::vector<int>, std::string>> rows;
            for (const auto& [key, c] : hurwitz_table(spec))
                rows.emplace_back(key.first.parts(), key.second.parts(), rat_to_string(c));
            return rows;
        },
        py::arg("u") = std::vector<std::string>{}, py::arg("w") = std::vector<std::string>{},
        py::arg("cutoff") = 4);
}
