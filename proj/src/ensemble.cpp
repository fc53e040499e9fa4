#include "statedist/ensemble.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "statedist/spectral.hpp"

namespace statedist {

namespace {

constexpr double kUnitNormTol = 1e-9;
constexpr double kProbSumTol = 1e-9;
constexpr double kDensityHermitianTol = 1e-10;
constexpr double kDensityEigenTol = 1e-10;
constexpr double kDensityTraceTol = 1e-9;

std::vector<double> checked_probs(std::vector<double> probs, std::size_t n) {
    if (probs.empty()) {
        probs.assign(n, 1.0 / static_cast<double>(n));
        return probs;
    }
    if (probs.size() != n)
        throw ValidationError("ensemble: probs length does not match state count");
    double sum = 0.0;
    for (double p : probs) {
        if (!std::isfinite(p)) throw ValidationError("ensemble: non-finite probability");
        if (p < 0.0) throw ValidationError("ensemble: negative probability");
        sum += p;
    }
    if (std::abs(sum - 1.0) > kProbSumTol)
        throw ValidationError("ensemble: probabilities do not sum to 1");
    for (double& p : probs) p /= sum;
    return probs;
}

}  // namespace

PureEnsemble make_pure_ensemble(std::vector<std::vector<cplx>> vectors,
                                std::vector<double> probs) {
    if (vectors.empty()) throw ValidationError("ensemble: no states");
    const std::size_t d = vectors[0].size();
    if (d == 0) throw ValidationError("ensemble: zero-dimensional state");
    for (const auto& v : vectors) {
        if (v.size() != d) throw ValidationError("ensemble: states have mismatched dimensions");
        double norm2 = 0.0;
        for (const cplx& a : v) {
            if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
                throw ValidationError("ensemble: non-finite amplitude");
            norm2 += std::norm(a);
        }
        if (std::abs(std::sqrt(norm2) - 1.0) > kUnitNormTol)
            throw ValidationError("ensemble: non-unit state");
    }
    PureEnsemble e;
    e.dim = d;
    e.probs = checked_probs(std::move(probs), vectors.size());
    e.states = std::move(vectors);
    return e;
}

MixedEnsemble make_mixed_ensemble(std::vector<ComplexMatrix> states,
                                  std::vector<double> probs) {
    if (states.empty()) throw ValidationError("ensemble: no states");
    const std::size_t d = states[0].rows();
    if (d == 0) throw ValidationError("ensemble: zero-dimensional state");
    for (const auto& rho : states) {
        if (rho.rows() != d || rho.cols() != d)
            throw ValidationError("ensemble: states have mismatched dimensions");
        if (!rho.all_finite()) throw ValidationError("ensemble: non-finite entry");
        if (rho.hermitian_deviation() > kDensityHermitianTol)
            throw ValidationError("ensemble: state not Hermitian");
        if (std::abs(rho.trace().real() - 1.0) > kDensityTraceTol ||
            std::abs(rho.trace().imag()) > kDensityTraceTol)
            throw ValidationError("ensemble: state trace not 1");
        const std::vector<double> eigs = eig_hermitian_values(rho);
        if (eigs.back() < -kDensityEigenTol)
            throw ValidationError("ensemble: state not positive semidefinite");
    }
    MixedEnsemble e;
    e.dim = d;
    e.probs = checked_probs(std::move(probs), states.size());
    e.states = std::move(states);
    return e;
}

ComplexMatrix state_matrix(const PureEnsemble& e) {
    ComplexMatrix s(e.dim, e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        const double w = std::sqrt(e.probs[i]);
        for (std::size_t k = 0; k < e.dim; ++k) s(k, i) = w * e.states[i][k];
    }
    return s;
}

GramMatrix gram(const PureEnsemble& e) {
    // computed as S^dag S and stored exactly Hermitian
    return GramMatrix{gram_of(state_matrix(e))};
}

ComplexMatrix density(const PureEnsemble& e) {
    return outer_gram_of(state_matrix(e));
}

ComplexMatrix density(const MixedEnsemble& e) {
    ComplexMatrix rho(e.dim, e.dim);
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e.probs[i] == 0.0) continue;
        rho += e.states[i] * e.probs[i];
    }
    rho.hermitize();
    return rho;
}

std::string format_decimal(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

void append_pair(std::string& out, const cplx& v) {
    out += '[';
    out += format_decimal(v.real());
    out += ", ";
    out += format_decimal(v.imag());
    out += ']';
}

std::string serialize_impl(std::size_t dim, const char* kind,
                           const std::vector<double>& probs,
                           const std::vector<std::vector<cplx>>& flat_states) {
    std::string out = "{\n  \"dim\": " + std::to_string(dim) + ",\n  \"kind\": \"" + kind +
                      "\",\n  \"probs\": [";
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (i) out += ", ";
        out += format_decimal(probs[i]);
    }
    out += "],\n  \"states\": [\n";
    for (std::size_t i = 0; i < flat_states.size(); ++i) {
        out += "    [";
        for (std::size_t k = 0; k < flat_states[i].size(); ++k) {
            if (k) out += ", ";
            append_pair(out, flat_states[i][k]);
        }
        out += (i + 1 < flat_states.size()) ? "],\n" : "]\n";
    }
    out += "  ]\n}\n";
    return out;
}

}  // namespace

std::string serialize_ensemble(const PureEnsemble& e) {
    return serialize_impl(e.dim, "pure", e.probs, e.states);
}

std::string serialize_ensemble(const MixedEnsemble& e) {
    std::vector<std::vector<cplx>> flat(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        flat[i].reserve(e.dim * e.dim);
        for (std::size_t r = 0; r < e.dim; ++r)
            for (std::size_t c = 0; c < e.dim; ++c) flat[i].push_back(e.states[i](r, c));
    }
    return serialize_impl(e.dim, "mixed", e.probs, flat);
}

std::string serialize_ensemble(const Ensemble& e) {
    return std::visit([](const auto& inner) { return serialize_ensemble(inner); }, e);
}

namespace {

using nlohmann::json;

cplx parse_pair(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError("ensemble document: amplitude must be a [re, im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

Ensemble deserialize_ensemble(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& ex) {
        throw ParseError(std::string("ensemble document: ") + ex.what());
    }
    if (!doc.is_object()) throw ParseError("ensemble document: top level must be an object");
    for (const char* field : {"dim", "kind", "probs", "states"})
        if (!doc.contains(field))
            throw ParseError(std::string("ensemble document: missing field '") + field + "'");
    if (!doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 1)
        throw ParseError("ensemble document: 'dim' must be a positive integer");
    const auto dim = doc["dim"].get<std::size_t>();
    const std::string kind = doc["kind"].is_string() ? doc["kind"].get<std::string>() : "";
    if (kind != "pure" && kind != "mixed")
        throw ParseError("ensemble document: 'kind' must be \"pure\" or \"mixed\"");
    if (!doc["probs"].is_array() || !doc["states"].is_array())
        throw ParseError("ensemble document: 'probs' and 'states' must be arrays");

    std::vector<double> probs;
    for (const auto& p : doc["probs"]) {
        if (!p.is_number()) throw ParseError("ensemble document: probabilities must be numbers");
        probs.push_back(p.get<double>());
    }

    if (kind == "pure") {
        std::vector<std::vector<cplx>> states;
        for (const auto& s : doc["states"]) {
            if (!s.is_array() || s.size() != dim)
                throw ParseError("ensemble document: each pure state needs 'dim' amplitudes");
            std::vector<cplx> v;
            v.reserve(dim);
            for (const auto& a : s) v.push_back(parse_pair(a));
            states.push_back(std::move(v));
        }
        return make_pure_ensemble(std::move(states), std::move(probs));
    }

    std::vector<ComplexMatrix> states;
    for (const auto& s : doc["states"]) {
        if (!s.is_array() || s.size() != dim * dim)
            throw ParseError("ensemble document: each mixed state needs dim*dim entries");
        ComplexMatrix rho(dim, dim);
        std::size_t idx = 0;
        for (const auto& a : s) {
            rho(idx / dim, idx % dim) = parse_pair(a);
            ++idx;
        }
        states.push_back(std::move(rho));
    }
    return make_mixed_ensemble(std::move(states), std::move(probs));
}

Ensemble load_ensemble(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open ensemble file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return deserialize_ensemble(buf.str());
}

void save_ensemble(const Ensemble& e, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write ensemble file: " + path);
    out << serialize_ensemble(e);
}

}  // namespace statedist
