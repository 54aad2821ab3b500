#include "hyperwalk/io.hpp"

#include <json.hpp>

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace hyperwalk {

namespace {

bool has_float_marker(const std::string& text) {
    for (char ch : text) {
        if (ch != '-' && !std::isdigit(static_cast<unsigned char>(ch))) {
            return true;
        }
    }
    return false;
}

Complex complex_from_json(const nlohmann::json& re, const nlohmann::json& im) {
    if (!re.is_number() || !im.is_number()) {
        throw std::invalid_argument("plate vector entries must be numbers");
    }
    return {re.get<double>(), im.get<double>()};
}

JonesVector vector_from_json(const nlohmann::json& j, const char* name) {
    if (!j.is_array() || j.size() != 4) {
        throw std::invalid_argument(std::string(name) +
                                    " must be an array [re, im, re, im]");
    }
    return {complex_from_json(j[0], j[1]), complex_from_json(j[2], j[3])};
}

Dof dof_from_token(const std::string& token) {
    if (token == "pol") return Dof::Polarization;
    if (token == "path") return Dof::Path;
    if (token == "oam") return Dof::Oam;
    throw std::invalid_argument("unknown degree of freedom: " + token);
}

}  // namespace

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.10g", value);
    std::string text(buffer);
    if (!has_float_marker(text)) {
        text += ".0";
    }
    return text;
}

double round_to_output_precision(double value) {
    return std::strtod(format_double(value).c_str(), nullptr);
}

void write_state_json(const WalkState& state, std::ostream& out) {
    nlohmann::ordered_json j;
    j["steps"] = state.step_count();
    j["amplitudes"] = nlohmann::ordered_json::array();
    for (const auto& [key, amp] : state.amplitudes()) {
        nlohmann::ordered_json record;
        record["coin"] = key.coin == Coin::H ? "H" : "V";
        record["x"] = key.x;
        record["m"] = key.m;
        record["re"] = round_to_output_precision(amp.real());
        record["im"] = round_to_output_precision(amp.imag());
        j["amplitudes"].push_back(std::move(record));
    }
    out << j.dump(2) << "\n";
}

void write_distribution_csv(const WalkState& state, std::ostream& out) {
    out << "x,m,probability\n";
    for (const auto& [site, probability] : state.probability_distribution()) {
        out << site.x << "," << site.m << "," << format_double(probability)
            << "\n";
    }
}

void write_curve_csv(const std::vector<std::pair<int, double>>& curve,
                     std::ostream& out) {
    out << "n,negativity\n";
    for (const auto& [n, value] : curve) {
        out << n << "," << format_double(value) << "\n";
    }
}

void write_sweep_csv(const std::vector<std::pair<double, double>>& points,
                     std::ostream& out) {
    out << "angle_rad,negativity\n";
    for (const auto& [angle, value] : points) {
        out << format_double(angle) << "," << format_double(value) << "\n";
    }
}

WalkVariant parse_variant_spec(const std::string& kind,
                               const std::string& plate) {
    WalkVariant variant;
    if (kind == "modified-pauli") {
        variant.kind = WalkKind::ModifiedPauli;
    } else if (kind == "pauli") {
        variant.kind = WalkKind::Pauli;
    } else if (kind == "alternate") {
        variant.kind = WalkKind::Alternate;
    } else if (kind == "modified-alternate") {
        variant.kind = WalkKind::ModifiedAlternate;
    } else {
        throw std::invalid_argument("unknown walk kind: " + kind);
    }

    if (plate == "q") {
        variant.plate = qplate_pair();
        return variant;
    }

    nlohmann::json j;
    try {
        j = nlohmann::json::parse(plate);
    } catch (const nlohmann::json::parse_error&) {
        throw std::invalid_argument("plate must be \"q\" or a JSON object");
    }
    if (!j.is_object()) {
        throw std::invalid_argument("plate must be \"q\" or a JSON object");
    }

    if (j.contains("xi") || j.contains("zeta") || j.contains("theta")) {
        for (const char* key : {"xi", "zeta", "theta"}) {
            if (!j.contains(key) || !j[key].is_number()) {
                throw std::invalid_argument(
                    "plate angles need numeric xi, zeta and theta");
            }
        }
        variant.plate = Su2Params{j["xi"].get<double>(), j["zeta"].get<double>(),
                                  j["theta"].get<double>()};
        return variant;
    }

    if (j.contains("u1") && j.contains("u2")) {
        OrthoPair pair{vector_from_json(j["u1"], "u1"),
                       vector_from_json(j["u2"], "u2")};
        if (!is_orthonormal(pair)) {
            throw std::invalid_argument("u1 and u2 must be orthonormal");
        }
        variant.plate = pair;
        return variant;
    }

    throw std::invalid_argument(
        "plate object needs either xi/zeta/theta or u1/u2");
}

std::pair<Dof, Dof> parse_dof_pair(const std::string& token) {
    const auto dash = token.find('-');
    if (dash == std::string::npos) {
        throw std::invalid_argument("pair must look like pol-oam");
    }
    const Dof first = dof_from_token(token.substr(0, dash));
    const Dof second = dof_from_token(token.substr(dash + 1));
    if (first == second) {
        throw std::invalid_argument("pair must name two distinct degrees of freedom");
    }
    return {first, second};
}

}  // namespace hyperwalk
