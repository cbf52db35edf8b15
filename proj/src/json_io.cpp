#include "bkp/json_io.hpp"

#include <stdexcept>

namespace bkp {

std::string alphabet_name(Alphabet a) {
    switch (a) {
        case Alphabet::T: return "T";
        case Alphabet::S: return "S";
        case Alphabet::TxS: return "TxS";
        case Alphabet::TxT2: return "TxT2";
    }
    throw std::logic_error("unknown alphabet");
}

Alphabet alphabet_from_name(const std::string& name) {
    if (name == "T") return Alphabet::T;
    if (name == "S") return Alphabet::S;
    if (name == "TxS") return Alphabet::TxS;
    if (name == "TxT2") return Alphabet::TxT2;
    throw std::invalid_argument("unknown alphabet name: " + name);
}

Json partition_to_json(const StrictPartition& p) {
    Json j = Json::array();
    for (int part : p.parts()) j.push_back(part);
    return j;
}

StrictPartition partition_from_json(const Json& j) {
    std::vector<int> parts;
    for (const auto& v : j) parts.push_back(v.get<int>());
    return StrictPartition(std::move(parts));
}

Json monomial_to_json(const OddMonomial& m) {
    Json j = Json::object();
    for (const auto& [k, e] : m.factors()) j[std::to_string(k)] = e;
    return j;
}

OddMonomial monomial_from_json(const Json& j) {
    std::vector<std::pair<int, int>> factors;
    for (const auto& [key, val] : j.items()) factors.emplace_back(std::stoi(key), val.get<int>());
    return OddMonomial(std::move(factors));
}

Json series_to_json(const GradedSeries& f) {
    Json j;
    j["alphabet"] = alphabet_name(f.alphabet());
    j["cutoff"] = f.cutoff();
    if (is_joint(f.alphabet())) j["cutoff2"] = f.cutoff_second();
    Json terms = Json::array();
    for (const auto& [key, c] : f.terms()) {
        Json t;
        t["mono"] = monomial_to_json(key.first);
        if (is_joint(f.alphabet())) t["mono2"] = monomial_to_json(key.second);
        t["coeff"] = rat_to_string(c);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

GradedSeries series_from_json(const Json& j) {
    Alphabet a = alphabet_from_name(j.at("alphabet").get<std::string>());
    int cutoff = j.at("cutoff").get<int>();
    GradedSeries f = is_joint(a) ? GradedSeries(a, cutoff, j.at("cutoff2").get<int>())
                                 : GradedSeries(a, cutoff);
    for (const auto& t : j.at("terms")) {
        OddMonomial m1 = monomial_from_json(t.at("mono"));
        Rat c = parse_rat(t.at("coeff").get<std::string>());
        if (is_joint(a))
            f.add_term(m1, monomial_from_json(t.at("mono2")), c);
        else
            f.add_term(m1, c);
    }
    return f;
}

Json qexpansion_to_json(const QExpansion& e) {
    Json j = Json::array();
    for (const auto& [lambda, c] : e.coeffs) {
        Json t;
        t["partition"] = partition_to_json(lambda);
        t["coeff"] = rat_to_string(c);
        j.push_back(std::move(t));
    }
    return j;
}

QExpansion qexpansion_from_json(const Json& j) {
    QExpansion e;
    for (const auto& t : j) {
        StrictPartition p = partition_from_json(t.at("partition"));
        e.add(p, parse_rat(t.at("coeff").get<std::string>()));
        e.cutoff = std::max(e.cutoff, p.size());
    }
    return e;
}

Json doperator_to_json(const DOperator& op) {
    Json j = Json::array();
    for (const auto& [key, c] : op.terms()) {
        Json t;
        t["creation"] = monomial_to_json(key.creation);
        t["annihilation"] = monomial_to_json(key.annihilation);
        t["coeff"] = rat_to_string(c);
        j.push_back(std::move(t));
    }
    return j;
}

Json window_to_json(const LaurentWindow& w) {
    Json j;
    j["zmin"] = w.zmin;
    j["zmax"] = w.zmax;
    Json coeffs = Json::object();
    for (const auto& [n, c] : w.coeffs) coeffs[std::to_string(n)] = rat_to_string(c);
    j["coeffs"] = std::move(coeffs);
    return j;
}

LaurentWindow window_from_json(const Json& j) {
    LaurentWindow w;
    w.zmin = j.at("zmin").get<int>();
    w.zmax = j.at("zmax").get<int>();
    for (const auto& [key, val] : j.at("coeffs").items())
        w.set(std::stoi(key), parse_rat(val.get<std::string>()));
    return w;
}

Json hirota_to_json(const HirotaVerdict& v) {
    Json j;
    j["verdict"] = v.pass ? "pass" : "fail";
    j["checked_bidegree"] = Json::array({v.dt, v.dts});
    if (!v.pass) {
        Json w;
        w["mono"] = monomial_to_json(v.witness_t);
        w["mono2"] = monomial_to_json(v.witness_ts);
        w["value"] = rat_to_string(v.value);
        j["witness"] = std::move(w);
    }
    return j;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace bkp
