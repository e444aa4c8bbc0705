#pragma once

// JSON interchange for fields, elements, matrices, codes, dial results, GRS
// specifications and EAQEC records. Elements are coefficient arrays with the
// constant term first.

#include <json.hpp>

#include "eaqec.hpp"

namespace hullkit {

using json = nlohmann::ordered_json;

namespace detail {

inline const json& member(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail(errc::parse_error, std::string("missing field '") + key + "'");
    return j.at(key);
}

template <class T>
T get_as(const json& j, const char* key) {
    try {
        return member(j, key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        fail(errc::parse_error, std::string("field '") + key + "': " + e.what());
    }
}

}  // namespace detail

inline json to_json(const FieldSpec& f) { return json{{"p", f.p()}, {"e", f.e()}, {"modulus", f.modulus()}}; }

inline FieldSpec field_from_json(const json& j) {
    const auto p = detail::get_as<std::uint32_t>(j, "p");
    const auto e = detail::get_as<std::uint32_t>(j, "e");
    auto modulus = detail::get_as<std::vector<std::uint32_t>>(j, "modulus");
    if (modulus.size() != e + 1) detail::fail(errc::parse_error, "modulus length does not match e");
    return make_field_with_modulus(p, std::move(modulus));
}

inline json to_json(const FieldElement& a) { return json(a.coeffs()); }

inline FieldElement element_from_json(const FieldSpec& f, const json& j) {
    if (!j.is_array() || j.size() != f.e()) detail::fail(errc::parse_error, "element must be an array of e coefficients");
    std::vector<std::uint32_t> c;
    try {
        c = j.get<std::vector<std::uint32_t>>();
    } catch (const nlohmann::json::exception& e) {
        detail::fail(errc::parse_error, e.what());
    }
    return f.from_coeffs(c);
}

inline json to_json(const std::vector<FieldElement>& v) {
    json out = json::array();
    for (const auto& a : v) out.push_back(to_json(a));
    return out;
}

inline std::vector<FieldElement> elements_from_json(const FieldSpec& f, const json& j) {
    if (!j.is_array()) detail::fail(errc::parse_error, "expected an element list");
    std::vector<FieldElement> out;
    for (const auto& x : j) out.push_back(element_from_json(f, x));
    return out;
}

inline json to_json(const FieldMatrix& m) {
    json entries = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) entries.push_back(to_json(m.row(r)));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

inline FieldMatrix matrix_from_json(const FieldSpec& f, const json& j) {
    const auto rows = detail::get_as<std::size_t>(j, "rows");
    const auto cols = detail::get_as<std::size_t>(j, "cols");
    const json& entries = detail::member(j, "entries");
    if (!entries.is_array() || entries.size() != rows) detail::fail(errc::parse_error, "entries must hold `rows` rows");
    FieldMatrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        auto row = elements_from_json(f, entries[r]);
        if (row.size() != cols) detail::fail(errc::parse_error, "row " + std::to_string(r) + " has the wrong length");
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, row[c]);
    }
    return m;
}

inline json to_json(const LinearCode& c) {
    return json{{"field", to_json(c.field())}, {"n", c.n()}, {"k", c.k()}, {"generator", to_json(c.generator())}};
}

inline LinearCode code_from_json(const json& j) {
    FieldSpec f = field_from_json(detail::member(j, "field"));
    FieldMatrix g = matrix_from_json(f, detail::member(j, "generator"));
    if (detail::get_as<std::size_t>(j, "n") != g.cols() || detail::get_as<std::size_t>(j, "k") != g.rows())
        detail::fail(errc::parse_error, "n, k do not match the generator shape");
    return LinearCode(std::move(g));
}

inline json to_json(const DialResult& r) {
    return json{{"code", to_json(r.code)},
                {"v", to_json(r.v.entries())},
                {"perm", r.perm},
                {"target_h", r.target_h},
                {"achieved_h", r.achieved_h}};
}

inline json to_json(const GrsSpec& g) {
    return json{{"eval_points", to_json(g.eval_points)},
                {"multipliers", to_json(g.multipliers.entries())},
                {"k", g.k},
                {"extended", g.extended}};
}

inline GrsSpec grs_from_json(const FieldSpec& f, const json& j) {
    GrsSpec g{f, elements_from_json(f, detail::member(j, "eval_points")),
              WeightVector(elements_from_json(f, detail::member(j, "multipliers"))), detail::get_as<std::size_t>(j, "k"),
              detail::get_as<bool>(j, "extended")};
    return g;
}

inline json to_json(const EaqecParams& p) {
    json j{{"q", p.q},
           {"n", p.n},
           {"k_q", p.k_q},
           {"d", p.d},
           {"c", p.c},
           {"family", p.source.families},
           {"witnessed", p.source.witnessed},
           {"mds", to_string(p.mds)},
           {"gate", p.gate() ? "pass" : "failed"}};
    if (!p.source.witness_digest.empty()) j["witness_digest"] = p.source.witness_digest;
    if (p.source.hull_dim) j["hull_dim"] = *p.source.hull_dim;
    if (!p.source.distance_verified) j["distance"] = "unverified-distance";
    return j;
}

inline EaqecParams params_from_json(const json& j) {
    EaqecParams p = make_params(detail::get_as<std::int64_t>(j, "q"), detail::get_as<std::int64_t>(j, "n"),
                                detail::get_as<std::int64_t>(j, "k_q"), detail::get_as<std::int64_t>(j, "d"),
                                detail::get_as<std::int64_t>(j, "c"));
    if (j.contains("family")) p.source.families = detail::get_as<std::vector<std::string>>(j, "family");
    if (j.contains("witnessed")) p.source.witnessed = detail::get_as<bool>(j, "witnessed");
    if (j.contains("witness_digest")) p.source.witness_digest = detail::get_as<std::string>(j, "witness_digest");
    if (j.contains("hull_dim")) p.source.hull_dim = detail::get_as<std::size_t>(j, "hull_dim");
    if (j.contains("distance")) p.source.distance_verified = detail::get_as<std::string>(j, "distance") != "unverified-distance";
    return p;
}

inline json to_json(const Verdict& v) {
    json j{{"status", to_string(v.status)}, {"mds", v.mds}, {"failures", v.failures}};
    if (v.witness_hull) j["witness_hull"] = *v.witness_hull;
    if (v.recomputed) j["recomputed"] = to_json(*v.recomputed);
    return j;
}

}  // namespace hullkit
