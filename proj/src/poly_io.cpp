#include "gammaflow/poly_io.hpp"

#include <json.hpp>

#include <cctype>
#include <sstream>

namespace gammaflow {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void parse_fail(const std::string& why) {
    throw std::invalid_argument("polynomial parse: " + why);
}

/* Renders one monomial without sign, e.g. "T2*T3^2", or "1" for the
 * constant key. Parts are emitted in ascending variable order. */
std::string monomial_text(const Partition& key) {
    if (key.empty()) return "1";
    const auto& parts = key.parts();
    std::ostringstream out;
    bool first = true;
    /* parts are stored descending; walk backwards and group equal runs */
    for (int i = key.length() - 1; i >= 0;) {
        int var = parts[static_cast<std::size_t>(i)];
        int run = 0;
        while (i >= 0 && parts[static_cast<std::size_t>(i)] == var) {
            ++run;
            --i;
        }
        if (!first) out << '*';
        first = false;
        out << 'T' << var;
        if (run > 1) out << '^' << run;
    }
    return out.str();
}

}

std::string poly_to_json(const Poly& p, int order) {
    ordered_json root;
    root["n"] = order;
    root["terms"] = ordered_json::array();
    for (const auto& [key, coeff] : p.terms()) {
        ordered_json term;
        term["partition"] = key.parts();
        term["coeff"] = bigint_to_string(coeff);
        root["terms"].push_back(std::move(term));
    }
    return root.dump();
}

ParsedPoly poly_from_json(const std::string& text) {
    ordered_json root;
    try {
        root = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        parse_fail(std::string("malformed JSON: ") + e.what());
    }
    if (!root.is_object() || root.size() != 2 || !root.contains("n") || !root.contains("terms")) {
        parse_fail("top level must be an object with exactly the keys \"n\" and \"terms\"");
    }
    const auto& jn = root["n"];
    if (!jn.is_number_integer() || jn.get<long long>() < 0) parse_fail("\"n\" must be a nonnegative integer");
    ParsedPoly out;
    out.order = jn.get<int>();
    const auto& jterms = root["terms"];
    if (!jterms.is_array()) parse_fail("\"terms\" must be an array");
    for (const auto& jt : jterms) {
        if (!jt.is_object() || jt.size() != 2 || !jt.contains("partition") || !jt.contains("coeff")) {
            parse_fail("each term must be an object with exactly \"partition\" and \"coeff\"");
        }
        const auto& jp = jt["partition"];
        if (!jp.is_array()) parse_fail("\"partition\" must be an array");
        std::vector<int> parts;
        int prev = 0;
        for (const auto& jv : jp) {
            if (!jv.is_number_integer() || jv.get<long long>() < 1) {
                parse_fail("partition parts must be integers >= 1");
            }
            int part = jv.get<int>();
            if (!parts.empty() && part > prev) parse_fail("partition must be weakly decreasing");
            parts.push_back(part);
            prev = part;
        }
        const auto& jc = jt["coeff"];
        if (!jc.is_string()) parse_fail("\"coeff\" must be a string");
        BigInt coeff = bigint_from_string(jc.get<std::string>());
        if (coeff == 0) parse_fail("zero coefficient stored");
        Partition key(std::move(parts));
        if (out.poly.coeff_of(key) != 0) parse_fail("duplicate partition " + key.to_string());
        out.poly.add_term(key, coeff);
    }
    return out;
}

std::string poly_to_text(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, coeff] : p.terms()) {
        BigInt mag = coeff < 0 ? BigInt(-coeff) : coeff;
        if (first) {
            if (coeff < 0) out << '-';
            first = false;
        } else {
            out << (coeff < 0 ? " - " : " + ");
        }
        std::string mono = monomial_text(key);
        if (mag != 1) {
            out << bigint_to_string(mag);
            if (mono != "1") out << '*' << mono;
        } else {
            out << mono;
        }
    }
    return out.str();
}

namespace {

class TextParser {
public:
    explicit TextParser(const std::string& text) : text_(text) {}

    Poly run() {
        Poly out;
        skip_spaces();
        if (done()) parse_fail("empty polynomial text");
        if (text_ == "0") return out;
        int sign = 1;
        if (peek() == '-') {
            sign = -1;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        for (;;) {
            parse_term(out, sign);
            skip_spaces();
            if (done()) break;
            char c = peek();
            if (c == '+') sign = 1;
            else if (c == '-') sign = -1;
            else parse_fail(std::string("unexpected character '") + c + "'");
            ++pos_;
        }
        return out;
    }

private:
    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_spaces() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    std::string parse_digits() {
        skip_spaces();
        std::size_t start = pos_;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) parse_fail("bad number literal");
        return text_.substr(start, pos_ - start);
    }

    int parse_small_number() {
        std::string digits = parse_digits();
        if (digits.size() > 9) parse_fail("index literal too large");
        return std::stoi(digits);
    }

    void parse_term(Poly& out, int sign) {
        BigInt coeff(sign);
        std::vector<int> parts;
        bool saw_factor = false;
        for (;;) {
            skip_spaces();
            if (done()) break;
            char c = peek();
            if (c == 'T') {
                ++pos_;
                int var = parse_small_number();
                if (var < 1) parse_fail("variable index must be >= 1");
                int exp = 1;
                if (!done() && peek() == '^') {
                    ++pos_;
                    exp = parse_small_number();
                    if (exp < 1) parse_fail("exponent must be >= 1");
                }
                for (int i = 0; i < exp; ++i) parts.push_back(var);
                saw_factor = true;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= BigInt(parse_digits(), 10);
                saw_factor = true;
            } else {
                break;
            }
            skip_spaces();
            if (!done() && peek() == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        if (!saw_factor) parse_fail("empty term");
        out.add_term(Partition(std::move(parts)), coeff);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}

Poly poly_from_text(const std::string& text) {
    return TextParser(text).run();
}

}
