#pragma once

#include "chernum/relations.hpp"

#include <json.hpp>

#include <string>

namespace chernum::relations {

// JSON shape: a report object carries
//   {relation, manifold, bundle, lhs, rhs, equal, degrees, millis}.
// Symmetric-function values serialize as sorted lists of
//   {y_partition, z_partition, numerator, denominator};
// scalars as {numerator, denominator}; polynomials as
//   {variable, coefficients:[{power, numerator, denominator}]}.
// Numerators and denominators are decimal strings so that arbitrary-precision
// values round-trip exactly.

inline nlohmann::json partition_to_json(const symfunc::Partition& p) {
    nlohmann::json a = nlohmann::json::array();
    for (int v : p.parts()) a.push_back(v);
    return a;
}
inline symfunc::Partition partition_from_json(const nlohmann::json& j) {
    std::vector<int> parts;
    for (const auto& v : j) parts.push_back(v.get<int>());
    return symfunc::Partition(std::move(parts));
}

inline nlohmann::json rational_fields(const Rational& q) {
    return {{"numerator", numerator(q).str()}, {"denominator", denominator(q).str()}};
}
inline Rational rational_from_fields(const nlohmann::json& j) {
    Int num(j.at("numerator").get<std::string>());
    Int den(j.at("denominator").get<std::string>());
    return Rational(num) / Rational(den);
}

inline nlohmann::json value_to_json(const Value& v) {
    if (std::holds_alternative<Rational>(v)) return rational_fields(std::get<Rational>(v));
    if (std::holds_alternative<Poly>(v)) {
        const Poly& p = std::get<Poly>(v);
        nlohmann::json coeffs = nlohmann::json::array();
        for (int k = 0; k <= p.degree(); ++k) {
            if (p.coeff(k) == 0) continue;
            nlohmann::json c = rational_fields(p.coeff(k));
            c["power"] = k;
            coeffs.push_back(std::move(c));
        }
        return {{"variable", "y"}, {"coefficients", std::move(coeffs)}};
    }
    const auto& b = std::get<symfunc::BigradedElement>(v);
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, c] : b.coeffs()) {
        nlohmann::json t = rational_fields(c);
        t["y_partition"] = partition_to_json(key.first);
        t["z_partition"] = partition_to_json(key.second);
        terms.push_back(std::move(t));
    }
    return terms;
}

inline Value value_from_json(const nlohmann::json& j) {
    if (j.is_array()) {
        symfunc::BigradedElement b;
        for (const auto& t : j)
            b.add_term(partition_from_json(t.at("y_partition")), partition_from_json(t.at("z_partition")),
                       rational_from_fields(t));
        return b;
    }
    if (j.contains("coefficients")) {
        std::vector<Rational> coeffs;
        for (const auto& c : j.at("coefficients")) {
            int k = c.at("power").get<int>();
            if (static_cast<int>(coeffs.size()) <= k) coeffs.resize(static_cast<std::size_t>(k) + 1, 0);
            coeffs[static_cast<std::size_t>(k)] = rational_from_fields(c);
        }
        return Poly(std::move(coeffs));
    }
    return rational_from_fields(j);
}

inline nlohmann::json report_to_json(const VerificationReport& r) {
    return {{"relation", r.relation}, {"manifold", r.manifold}, {"bundle", r.bundle},
            {"lhs", value_to_json(r.lhs)}, {"rhs", value_to_json(r.rhs)}, {"equal", r.equal},
            {"degrees", r.degrees},       {"millis", r.millis}};
}

inline VerificationReport report_from_json(const nlohmann::json& j) {
    VerificationReport r;
    r.relation = j.at("relation").get<std::string>();
    r.manifold = j.at("manifold").get<std::string>();
    r.bundle = j.at("bundle").get<std::string>();
    r.lhs = value_from_json(j.at("lhs"));
    r.rhs = value_from_json(j.at("rhs"));
    r.equal = j.at("equal").get<bool>();
    r.degrees = j.at("degrees").get<int>();
    r.millis = j.at("millis").get<std::int64_t>();
    return r;
}

}  // namespace chernum::relations
