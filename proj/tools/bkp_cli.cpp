// Command-line driver: builds tau-functions, runs verification suites, and
// emits coefficient tables as canonical JSON or CSV.
//
// Exit codes: 0 success/pass, 1 verification failure, 2 usage error,
// 3 inconclusive (window exhaustion).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bkp/hirota.hpp"
#include "bkp/json_io.hpp"
#include "bkp/tau.hpp"
#include "bkp/wops.hpp"

using namespace bkp;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct ModelOpts {
    std::string N;
    std::string hbar = "1";
    std::vector<std::string> u;
    std::vector<std::string> w;
    std::vector<std::string> s;  // "k=v" entries
    int cutoff = 6;
};

void add_model_flags(CLI::App* cmd, ModelOpts& m) {
    cmd->add_option("--N", m.N, "Shorthand for the one-parameter model: weights u = [N]");
    cmd->add_option("--hbar", m.hbar, "Expansion parameter; default s = {1: hbar/2}");
    cmd->add_option("--u", m.u, "Numerator weight parameter (repeatable)");
    cmd->add_option("--w", m.w, "Denominator weight parameter (repeatable)");
    cmd->add_option("--s", m.s, "Time value k=v (repeatable, odd k)");
    cmd->add_option("--cutoff", m.cutoff, "Weight cutoff of the truncated series");
}

TauSpec make_spec(const ModelOpts& m) {
    TauSpec spec;
    if (!m.N.empty()) {
        if (!m.u.empty() || !m.w.empty())
            throw std::invalid_argument("--N is exclusive with --u/--w");
        spec.weights.numer_params = {parse_rat(m.N)};
    } else {
        for (const auto& v : m.u) spec.weights.numer_params.push_back(parse_rat(v));
        for (const auto& v : m.w) spec.weights.denom_params.push_back(parse_rat(v));
    }
    spec.hbar = parse_rat(m.hbar);
    if (m.s.empty()) {
        spec.s_values = {{1, spec.hbar / 2}};
    } else {
        for (const auto& kv : m.s) {
            auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("--s expects k=v, got: " + kv);
            spec.s_values[std::stoi(kv.substr(0, eq))] = parse_rat(kv.substr(eq + 1));
        }
    }
    spec.cutoff = m.cutoff;
    return spec;
}

StrictPartition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) parts.push_back(std::stoi(tok));
    return StrictPartition(std::move(parts));
}

std::string csv_partition(const StrictPartition& p) {
    std::string out;
    for (int part : p.parts()) {
        if (!out.empty()) out += ';';
        out += std::to_string(part);
    }
    return out;
}

std::string csv_monomial(const OddMonomial& m) {
    std::string out;
    for (const auto& [k, e] : m.factors()) {
        if (!out.empty()) out += ';';
        out += std::to_string(k) + "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

void emit_series(const GradedSeries& f, const std::string& format) {
    if (format == "csv") {
        std::cout << "mono,coeff\n";
        for (const auto& [key, c] : f.terms())
            std::cout << csv_monomial(key.first) << "," << rat_to_string(c) << "\n";
    } else {
        std::cout << dump_canonical(series_to_json(f));
    }
}

int status_exit(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return kExitPass;
        case CheckStatus::Fail: return kExitFail;
        case CheckStatus::Inconclusive: return kExitInconclusive;
    }
    return kExitUsage;
}

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

int run_qschur(const std::string& lambda_text, int cutoff, bool half,
               const std::string& format) {
    StrictPartition lambda = parse_partition(lambda_text);
    int D = cutoff > 0 ? cutoff : lambda.size();
    emit_series(half ? q_lambda_half(lambda, D) : q_lambda(lambda, D), format);
    return kExitPass;
}

int run_tau(const ModelOpts& m, const std::string& route, const std::string& strategy,
            const std::string& format) {
    TauSpec spec = make_spec(m);
    CutjoinStrategy strat =
        strategy == "qbasis" ? CutjoinStrategy::QBasis : CutjoinStrategy::TSpace;
    if (route == "sum") {
        emit_series(hypergeometric_tau(spec), format);
        return kExitPass;
    }
    if (route == "cutjoin") {
        emit_series(cutjoin_tau(spec, strat), format);
        return kExitPass;
    }
    // both
    GradedSeries sum = hypergeometric_tau(spec);
    GradedSeries cj = cutjoin_tau(spec, strat);
    Json j;
    j["sum"] = series_to_json(sum);
    j["cutjoin"] = series_to_json(cj);
    j["equal"] = (sum == cj);
    std::cout << dump_canonical(j);
    return sum == cj ? kExitPass : kExitFail;
}

int run_verify_hirota(const std::string& tau_file, const ModelOpts& m,
                      const std::vector<int>& bidegree) {
    if (bidegree.size() != 2) throw std::invalid_argument("--bidegree expects two integers");
    GradedSeries tau = [&] {
        if (!tau_file.empty()) {
            std::ifstream in(tau_file);
            if (!in) throw std::invalid_argument("cannot open " + tau_file);
            Json j = Json::parse(in);
            return series_from_json(j);
        }
        return hypergeometric_tau(make_spec(m));
    }();
    HirotaVerdict v = is_bkp_tau(tau, bidegree[0], bidegree[1]);
    std::cout << dump_canonical(hirota_to_json(v));
    return v.pass ? kExitPass : kExitFail;
}

int run_verify_cutjoin(const ModelOpts& m, const std::string& strategy) {
    TauSpec spec = make_spec(m);
    GradedSeries sum = hypergeometric_tau(spec);
    Json j;
    bool equal = true;
    if (strategy.empty() || strategy == "tspace") {
        if (spec.weights.denom_params.empty()) {
            bool e = cutjoin_tau(spec, CutjoinStrategy::TSpace) == sum;
            j["tspace_equal"] = e;
            equal = equal && e;
        }
    }
    if (strategy.empty() || strategy == "qbasis") {
        bool e = cutjoin_tau(spec, CutjoinStrategy::QBasis) == sum;
        j["qbasis_equal"] = e;
        equal = equal && e;
    }
    bool recursion_applicable = spec.weights.denom_params.empty();
    for (const auto& [k, v] : spec.s_values)
        if (k != 1 && v != 0) recursion_applicable = false;
    if (recursion_applicable) {
        RecursionReport r = degree_recursion_check(spec);
        j["degree_recursion"] = r.pass;
        if (!r.pass) j["failed_weight"] = r.failed_weight;
        equal = equal && r.pass;
    }
    j["verdict"] = equal ? "pass" : "fail";
    std::cout << dump_canonical(j);
    return equal ? kExitPass : kExitFail;
}

int run_verify_qsc(const ModelOpts& m, int window) {
    TauSpec spec = make_spec(m);
    int K = window > 0 ? window : spec.cutoff;
    LaurentWindow psi = wave_function(hypergeometric_tau(spec), K);
    SpectralVerdict v = annihilation_check(qsc_operator(spec.weights, spec.s_values), psi);
    Json j;
    j["verdict"] = status_name(v.status);
    j["window"] = Json::array({v.window_lo, v.window_hi});
    if (v.status == CheckStatus::Fail) {
        j["witness_power"] = v.witness_power;
        j["witness_value"] = rat_to_string(v.witness_value);
    }
    SpectralVerdict inv = ks_invariance_check(spec.weights, spec.s_values, 3, K);
    j["ks_invariance"] = status_name(inv.status);
    std::cout << dump_canonical(j);
    if (v.status == CheckStatus::Pass && inv.status != CheckStatus::Pass) return status_exit(inv.status);
    return status_exit(v.status);
}

int run_verify_walg(int window) {
    int checks = 0;
    bool ok = true;
    auto agree = [&](const DOperator& a, const DOperator& b, int w) {
        ++checks;
        if (a.restricted(w, w + 64) != b.restricted(w, w + 64)) ok = false;
    };
    const int w = window;
    // Heisenberg and Virasoro commutators, including the central terms
    auto id = [&](const Rat& c) {
        DOperator r;
        r.add_term(OddMonomial(), OddMonomial(), c);
        return r;
    };
    agree(commutator(J_op(1), J_op(-1)), id(2), w);
    agree(commutator(J_op(3), J_op(-3)), id(6), w);
    agree(commutator(J_op(1), L_op(2, w + 4)), J_op(3) * 2, w);
    agree(commutator(L_op(2, w + 4), L_op(-2, w + 4)), L_op(0, w) * 8 + id(2), w);
    agree(commutator(L_op(2, w + 6), L_op(2, w + 6)), DOperator(), w);
    agree(commutator(J_op(1), M_op(-1, w + 4)), L_op(0, w) * 4, w);
    // residue construction matches the closed combinations
    for (int k = -3; k <= 3; ++k) {
        for (int m = 0; m <= 2; ++m) {
            if ((k + m) % 2 == 0) continue;
            agree(faa_di_bruno_W(k, m, w), W_km_closed(k, m, w), w);
        }
    }
    Json j;
    j["verdict"] = ok ? "pass" : "fail";
    j["checks"] = checks;
    j["window"] = w;
    std::cout << dump_canonical(j);
    return ok ? kExitPass : kExitFail;
}

int run_wave(const ModelOpts& m, int window, const std::string& format) {
    TauSpec spec = make_spec(m);
    int K = window > 0 ? window : spec.cutoff;
    LaurentWindow psi = wave_function(hypergeometric_tau(spec), K);
    if (format == "csv") {
        std::cout << "power,coeff\n";
        for (int n = psi.zmax; n >= psi.zmin; --n)
            std::cout << n << "," << rat_to_string(psi.coeff(n)) << "\n";
    } else {
        std::cout << dump_canonical(window_to_json(psi));
    }
    return kExitPass;
}

int run_hurwitz_table(const ModelOpts& m, const std::string& format) {
    TauSpec spec = make_spec(m);
    spec.formal_s = true;
    spec.s_cutoff = spec.cutoff;
    auto table = hurwitz_table(spec);
    if (format == "csv") {
        std::cout << "lambda,mu,coeff\n";
        for (const auto& [key, c] : table)
            std::cout << csv_partition(key.first) << "," << csv_partition(key.second) << ","
                      << rat_to_string(c) << "\n";
    } else {
        Json j = Json::array();
        for (const auto& [key, c] : table) {
            Json row;
            row["lambda"] = partition_to_json(key.first);
            row["mu"] = partition_to_json(key.second);
            row["coeff"] = rat_to_string(c);
            j.push_back(std::move(row));
        }
        std::cout << dump_canonical(j);
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tau-functions of the BKP hierarchy: builders and verifiers"};
    app.require_subcommand(1);
    app.set_config("--config");
    std::string format = "json";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    ModelOpts qm, tm, hm, cm, sm, wm, um;

    auto* sub_qschur = app.add_subcommand("qschur", "Serialize a Schur Q-function");
    std::string lambda_text;
    int q_cutoff = 0;
    bool q_half = false;
    sub_qschur->add_option("--lambda", lambda_text, "Comma-separated strict partition")
        ->required();
    sub_qschur->add_option("--cutoff", q_cutoff, "Weight cutoff (default: |lambda|)");
    sub_qschur->add_flag("--half", q_half, "Emit Q_lambda(t/2) instead of Q_lambda(t)");

    auto* sub_tau = app.add_subcommand("tau", "Build a hypergeometric tau-function");
    add_model_flags(sub_tau, tm);
    std::string route = "sum", strategy = "tspace";
    sub_tau->add_option("--route", route, "Construction route")
        ->check(CLI::IsMember({"sum", "cutjoin", "both"}))
        ->capture_default_str();
    sub_tau->add_option("--strategy", strategy, "Cut-and-join strategy")
        ->check(CLI::IsMember({"tspace", "qbasis"}))
        ->capture_default_str();

    auto* sub_hirota = app.add_subcommand("verify-hirota", "Bilinear-identity residue check");
    add_model_flags(sub_hirota, hm);
    std::string tau_file;
    std::vector<int> bidegree{4, 4};
    sub_hirota->add_option("--tau-file", tau_file, "Series JSON file (overrides model flags)");
    sub_hirota->add_option("--bidegree", bidegree, "Joint truncation bidegree Dt Dt'")
        ->expected(2);

    auto* sub_cutjoin =
        app.add_subcommand("verify-cutjoin", "Cut-and-join routes against the partition sum");
    add_model_flags(sub_cutjoin, cm);
    std::string cj_strategy;
    sub_cutjoin->add_option("--strategy", cj_strategy, "Restrict to one strategy")
        ->check(CLI::IsMember({"tspace", "qbasis"}));

    auto* sub_qsc = app.add_subcommand("verify-qsc", "Quantum spectral curve annihilation");
    add_model_flags(sub_qsc, sm);
    int qsc_window = 0;
    sub_qsc->add_option("--window", qsc_window, "Trusted z-window depth (default: cutoff)");

    auto* sub_walg = app.add_subcommand("verify-walg", "Operator-algebra identity suite");
    int walg_window = 6;
    sub_walg->add_option("--window", walg_window, "Maximum input weight")
        ->capture_default_str();

    auto* sub_wave = app.add_subcommand("wave", "Principally specialized wave function");
    add_model_flags(sub_wave, wm);
    int wave_window = 0;
    sub_wave->add_option("--window", wave_window, "Trusted z-window depth (default: cutoff)");

    auto* sub_hurwitz = app.add_subcommand("hurwitz-table", "Double Q-expansion coefficients");
    add_model_flags(sub_hurwitz, um);

    for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (sub_qschur->parsed()) return run_qschur(lambda_text, q_cutoff, q_half, format);
        if (sub_tau->parsed()) return run_tau(tm, route, strategy, format);
        if (sub_hirota->parsed()) return run_verify_hirota(tau_file, hm, bidegree);
        if (sub_cutjoin->parsed()) return run_verify_cutjoin(cm, cj_strategy);
        if (sub_qsc->parsed()) return run_verify_qsc(sm, qsc_window);
        if (sub_walg->parsed()) return run_verify_walg(walg_window);
        if (sub_wave->parsed()) return run_wave(wm, wave_window, format);
        if (sub_hurwitz->parsed()) return run_hurwitz_table(um, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
