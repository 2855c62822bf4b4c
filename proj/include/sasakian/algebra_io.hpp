#pragma once
// The on-disk algebra format (JSON). Canonical serialization is deterministic:
// fixed key order, ascending indices, zero entries omitted, coefficients as
// reduced "p/q" strings. parse(serialize(A)) == A, and serialize(parse(s)) == s
// for canonically serialized s.

#include <nlohmann/json.hpp>

#include <string>
#include <utility>

#include "sasakian/graded_algebra.hpp"

namespace sasakian {

using json = nlohmann::ordered_json;

namespace detail {

inline json coeff_list(const QVec& v) {
    json out = json::array();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        out.push_back(json{{"index", i}, {"coeff", to_string(v[i])}});
    }
    return out;
}

inline QVec parse_coeff_list(const json& j, int dim, const std::string& where) {
    if (!j.is_array()) throw input_error(where + ": expected an array of {index, coeff}");
    QVec v(dim);
    for (const auto& item : j) {
        if (!item.is_object() || !item.contains("index") || !item.contains("coeff"))
            throw input_error(where + ": entries need \"index\" and \"coeff\"");
        if (!item["index"].is_number_integer())
            throw input_error(where + ": \"index\" must be an integer");
        const long long idx = item["index"].get<long long>();
        if (idx < 0 || idx >= dim)
            throw input_error(where + ": index " + std::to_string(idx) + " out of range [0," +
                              std::to_string(dim) + ")");
        if (!item["coeff"].is_string())
            throw input_error(where + ": \"coeff\" must be a string rational literal");
        v[static_cast<std::size_t>(idx)] = parse_rational(item["coeff"].get<std::string>());
    }
    return v;
}

} // namespace detail

inline std::string serialize_algebra(const GradedAlgebra& a) {
    json j;
    j["top_degree"] = a.top_degree;
    json basis = json::array();
    for (int d = 0; d <= a.top_degree; ++d) {
        if (a.dim(d) == 0) continue;
        basis.push_back(json{{"degree", d}, {"labels", a.basis[d]}});
    }
    j["basis"] = std::move(basis);
    json products = json::array();
    for (const auto& [key, table] : a.products) {
        const auto [p, q] = key;
        for (int i = 0; i < a.dim(p); ++i)
            for (int jj = 0; jj < a.dim(q); ++jj) {
                const QVec& val = table[static_cast<std::size_t>(i) * a.dim(q) + jj];
                if (is_zero(val)) continue;
                products.push_back(json{{"left", json::array({p, i})},
                                        {"right", json::array({q, jj})},
                                        {"value", detail::coeff_list(val)}});
            }
    }
    j["products"] = std::move(products);
    j["integration"] = detail::coeff_list(a.integration);
    if (a.omega) j["omega"] = detail::coeff_list(*a.omega);
    return j.dump(2) + "\n";
}

inline GradedAlgebra parse_algebra(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("syntax error: ") + e.what());
    }
    if (!j.is_object()) throw input_error("top level must be a JSON object");
    if (!j.contains("top_degree") || !j["top_degree"].is_number_integer())
        throw input_error("missing integer \"top_degree\"");
    GradedAlgebra a;
    a.top_degree = j["top_degree"].get<int>();
    if (a.top_degree < 0 || a.top_degree > 64) throw input_error("top_degree out of range");
    a.basis.assign(a.top_degree + 1, {});
    if (!j.contains("basis") || !j["basis"].is_array())
        throw input_error("missing \"basis\" array");
    for (const auto& b : j["basis"]) {
        if (!b.is_object() || !b.contains("degree") || !b.contains("labels"))
            throw input_error("basis entries need \"degree\" and \"labels\"");
        if (!b["degree"].is_number_integer()) throw input_error("basis degree must be an integer");
        const long long d = b["degree"].get<long long>();
        if (d < 0 || d > a.top_degree)
            throw input_error("basis degree " + std::to_string(d) + " out of range");
        if (!a.basis[static_cast<std::size_t>(d)].empty())
            throw input_error("duplicate basis block for degree " + std::to_string(d));
        if (!b["labels"].is_array()) throw input_error("basis labels must be an array");
        for (const auto& lab : b["labels"]) {
            if (!lab.is_string()) throw input_error("basis labels must be strings");
            a.basis[static_cast<std::size_t>(d)].push_back(lab.get<std::string>());
        }
    }
    a.init_product_tables();
    if (j.contains("products")) {
        if (!j["products"].is_array()) throw input_error("\"products\" must be an array");
        std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, bool> seen;
        for (const auto& prod : j["products"]) {
            if (!prod.is_object() || !prod.contains("left") || !prod.contains("right") ||
                !prod.contains("value"))
                throw input_error("product entries need \"left\", \"right\", \"value\"");
            auto read_side = [&](const json& side, const char* name) -> std::pair<int, int> {
                if (!side.is_array() || side.size() != 2 || !side[0].is_number_integer() ||
                    !side[1].is_number_integer())
                    throw input_error(std::string("product \"") + name +
                                      "\" must be [degree, index]");
                const int deg = side[0].get<int>();
                const int idx = side[1].get<int>();
                if (deg < 0 || deg > a.top_degree)
                    throw input_error("product degree " + std::to_string(deg) + " out of range");
                if (idx < 0 || idx >= a.dim(deg))
                    throw input_error("product index " + std::to_string(idx) +
                                      " out of range in degree " + std::to_string(deg));
                return {deg, idx};
            };
            const auto [p, i] = read_side(prod["left"], "left");
            const auto [q, jj] = read_side(prod["right"], "right");
            if (p > q)
                throw input_error("product entries must have left degree <= right degree");
            if (p + q > a.top_degree)
                throw input_error("product degrees " + std::to_string(p) + "+" +
                                  std::to_string(q) + " exceed top_degree");
            if (seen[{{p, i}, {q, jj}}])
                throw input_error("duplicate product entry for degrees (" + std::to_string(p) +
                                  "," + std::to_string(q) + ") indices (" + std::to_string(i) +
                                  "," + std::to_string(jj) + ")");
            seen[{{p, i}, {q, jj}}] = true;
            a.product_entry(p, q, i, jj) =
                detail::parse_coeff_list(prod["value"], a.dim(p + q), "product value");
        }
    }
    if (!j.contains("integration")) throw input_error("missing \"integration\" block");
    a.integration =
        detail::parse_coeff_list(j["integration"], a.dim(a.top_degree), "integration");
    if (j.contains("omega"))
        a.omega = detail::parse_coeff_list(j["omega"], a.dim(2), "omega");
    return a;
}

} // namespace sasakian
