#include "gammaflow/seq_io.hpp"

#include <json.hpp>

namespace gammaflow {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void parse_fail(const std::string& why) {
    throw std::invalid_argument("sequence parse: " + why);
}

template <typename Seq>
std::string seq_to_json(const char* kind, const Seq& seq, int base_order) {
    ordered_json root;
    root["kind"] = kind;
    root["max_order"] = seq.max_order();
    ordered_json values = ordered_json::object();
    for (int o = base_order; o <= seq.max_order(); ++o) {
        values[std::to_string(o)] = rational_to_string(seq.at(o));
    }
    root["values"] = std::move(values);
    return root.dump();
}

/* Validates the envelope and returns (max_order, values object). */
ordered_json parse_envelope(const std::string& text, const char* kind, int base_order,
                            int* max_order_out) {
    ordered_json root;
    try {
        root = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        parse_fail(std::string("malformed JSON: ") + e.what());
    }
    if (!root.is_object() || root.size() != 3 || !root.contains("kind") ||
        !root.contains("max_order") || !root.contains("values")) {
        parse_fail("top level must be an object with exactly the keys "
                   "\"kind\", \"max_order\" and \"values\"");
    }
    if (!root["kind"].is_string() || root["kind"].get<std::string>() != kind) {
        parse_fail(std::string("\"kind\" must be \"") + kind + "\"");
    }
    const auto& jmax = root["max_order"];
    if (!jmax.is_number_integer() || jmax.get<long long>() < base_order ||
        jmax.get<long long>() > 1000000) {
        parse_fail("\"max_order\" must be an integer >= " + std::to_string(base_order));
    }
    int max_order = jmax.get<int>();
    const auto& jvalues = root["values"];
    if (!jvalues.is_object()) parse_fail("\"values\" must be an object");
    if (static_cast<int>(jvalues.size()) != max_order - base_order + 1) {
        parse_fail("\"values\" must list every order from " + std::to_string(base_order) +
                   " to " + std::to_string(max_order) + ", zeros included");
    }
    for (int o = base_order; o <= max_order; ++o) {
        const std::string key = std::to_string(o);
        if (!jvalues.contains(key) || !jvalues[key].is_string()) {
            parse_fail("\"values\" is missing a string entry for order " + key);
        }
    }
    *max_order_out = max_order;
    return jvalues;
}

Rational value_at(const ordered_json& values, int order) {
    try {
        return rational_from_string(values[std::to_string(order)].get<std::string>());
    } catch (const std::invalid_argument& e) {
        parse_fail("order " + std::to_string(order) + ": " + e.what());
    }
}

}

std::string cumulants_to_json(const CumulantSeq& k) {
    return seq_to_json("cumulants", k, 2);
}

std::string moments_to_json(const MomentSeq& m) {
    return seq_to_json("moments", m, 1);
}

std::string derivs_to_json(const DerivSeq& d) {
    return seq_to_json("mmse-derivs", d, 1);
}

CumulantSeq cumulants_from_json(const std::string& text) {
    int max_order = 0;
    ordered_json values = parse_envelope(text, "cumulants", 2, &max_order);
    CumulantSeq out(max_order, "from-file", false);
    for (int o = 2; o <= max_order; ++o) out.set(o, value_at(values, o));
    return out;
}

MomentSeq moments_from_json(const std::string& text) {
    int max_order = 0;
    ordered_json values = parse_envelope(text, "moments", 1, &max_order);
    MomentSeq out(max_order);
    for (int o = 1; o <= max_order; ++o) out.set(o, value_at(values, o));
    return out;
}

DerivSeq derivs_from_json(const std::string& text) {
    int max_order = 0;
    ordered_json values = parse_envelope(text, "mmse-derivs", 1, &max_order);
    DerivSeq out(max_order);
    for (int o = 1; o <= max_order; ++o) out.set(o, value_at(values, o));
    return out;
}

std::vector<std::pair<Rational, Rational>> atoms_from_json(const std::string& text) {
    ordered_json root;
    try {
        root = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        parse_fail(std::string("malformed JSON: ") + e.what());
    }
    if (!root.is_object() || root.size() != 1 || !root.contains("points")) {
        parse_fail("top level must be an object with exactly the key \"points\"");
    }
    const auto& jpoints = root["points"];
    if (!jpoints.is_array() || jpoints.empty()) {
        parse_fail("\"points\" must be a nonempty array");
    }
    std::vector<std::pair<Rational, Rational>> out;
    for (const auto& jp : jpoints) {
        if (!jp.is_object() || jp.size() != 2 || !jp.contains("x") || !jp.contains("p") ||
            !jp["x"].is_string() || !jp["p"].is_string()) {
            parse_fail("each point must be an object with exactly the string "
                       "keys \"x\" and \"p\"");
        }
        try {
            out.emplace_back(rational_from_string(jp["x"].get<std::string>()),
                             rational_from_string(jp["p"].get<std::string>()));
        } catch (const std::invalid_argument& e) {
            parse_fail(std::string("point value: ") + e.what());
        }
    }
    return out;
}

}
