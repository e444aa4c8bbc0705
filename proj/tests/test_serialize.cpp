#include <gtest/gtest.h>

#include <hullkit/serialize.hpp>

#include "test_support.hpp"

using namespace hullkit;
using namespace testing_support;

TEST(Json, FieldRoundTrip) {
    for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 2}, {2, 4}, {5, 2}, {7, 1}, {3, 3}}) {
        const FieldSpec f = make_field(p, e);
        const json j = to_json(f);
        EXPECT_EQ(field_from_json(j), f);
        EXPECT_EQ(j["modulus"].size(), e + 1);
    }
    EXPECT_EQ(to_json(gf9()).dump(), R"({"p":3,"e":2,"modulus":[1,0,1]})");
}

TEST(Json, ElementsAreConstantTermFirst) {
    const FieldSpec f = gf9();
    EXPECT_EQ(to_json(omega()).dump(), "[0,1]");
    EXPECT_EQ(to_json(omega() + f.one()).dump(), "[1,1]");
    for (const auto& a : enumerate(f)) EXPECT_EQ(element_from_json(f, to_json(a)), a);
    EXPECT_HULLKIT_ERROR(element_from_json(f, json::parse("[1]")), errc::parse_error);
    EXPECT_HULLKIT_ERROR(element_from_json(f, json::parse(R"(["a", 1])")), errc::parse_error);
    EXPECT_HULLKIT_ERROR(element_from_json(f, json::parse("[3, 0]")), errc::bad_field);
}

TEST(Json, CodeRoundTrip) {
    std::mt19937_64 rng(60);
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
        const FieldSpec f = make_hermitian_field(q);
        const LinearCode c = random_code(f, 6, 3, rng);
        const LinearCode back = code_from_json(json::parse(to_json(c).dump()));
        EXPECT_EQ(back.generator(), c.generator());
        EXPECT_EQ(back.field(), f);
    }
}

TEST(Json, CodeParseErrors) {
    json j = to_json(rs(3, 2));
    json bad = j;
    bad["n"] = 8;
    EXPECT_HULLKIT_ERROR(code_from_json(bad), errc::parse_error);
    bad = j;
    bad.erase("generator");
    EXPECT_HULLKIT_ERROR(code_from_json(bad), errc::parse_error);
    bad = j;
    bad["generator"]["entries"][0].erase(0);
    EXPECT_HULLKIT_ERROR(code_from_json(bad), errc::parse_error);
    bad = j;
    bad["field"]["modulus"] = {1, 1, 1};  // x^2 + x + 1 = (x - 1)^2 over GF(3)
    EXPECT_HULLKIT_ERROR(code_from_json(bad), errc::bad_field);
    bad = j;
    bad["field"]["modulus"] = {1, 0, 0, 1};
    EXPECT_HULLKIT_ERROR(code_from_json(bad), errc::parse_error);
    EXPECT_HULLKIT_ERROR(code_from_json(json::array()), errc::parse_error);
    bad = j;
    bad["k"] = "two";
    EXPECT_HULLKIT_ERROR(code_from_json(bad), errc::parse_error);
}

TEST(Json, DialResult) {
    const DialResult r = dial_hull(rs(3, 2), 1);
    const json j = to_json(r);
    EXPECT_EQ(j["target_h"], 1);
    EXPECT_EQ(j["achieved_h"], 1);
    EXPECT_EQ(j["perm"].size(), 9u);
    EXPECT_EQ(j["v"].size(), 9u);
    EXPECT_EQ(code_from_json(j["code"]).generator(), r.code.generator());
    EXPECT_EQ(elements_from_json(gf9(), j["v"]), r.v.entries());
}

TEST(Json, GrsRoundTrip) {
    const FieldSpec f = gf9();
    const SolveOutcome out = solve_multipliers(f, {enumerate(f), 1, true});
    ASSERT_TRUE(out.grs);
    const GrsSpec back = grs_from_json(f, json::parse(to_json(*out.grs).dump()));
    EXPECT_EQ(back.eval_points, out.grs->eval_points);
    EXPECT_EQ(back.multipliers, out.grs->multipliers);
    EXPECT_EQ(back.k, 1u);
    EXPECT_TRUE(back.extended);
    EXPECT_EQ(grs_generator(back).generator(), grs_generator(*out.grs).generator());
}

TEST(Json, EaqecParamsRoundTrip) {
    const auto sweep = eaqec_sweep(rs(3, 2));
    for (const auto& r : sweep) {
        const json j = to_json(r.params);
        const EaqecParams back = params_from_json(json::parse(j.dump()));
        EXPECT_TRUE(back.same_parameters(r.params));
        EXPECT_EQ(back.mds, r.params.mds);
        EXPECT_EQ(back.source.witness_digest, r.params.source.witness_digest);
        EXPECT_EQ(back.source.hull_dim, r.params.source.hull_dim);
        EXPECT_TRUE(back.source.witnessed);
        EXPECT_EQ(j["gate"], "pass");
        EXPECT_FALSE(j.contains("distance"));
    }
    const auto row = enumerate_table1(3).front();
    const json j = to_json(row);
    EXPECT_EQ(j["family"], json::array({"q2plus1"}));
    EXPECT_EQ(j["distance"], "unverified-distance");
    EXPECT_EQ(j["mds"], "yes");
    EXPECT_FALSE(params_from_json(j).source.distance_verified);
    EXPECT_HULLKIT_ERROR(params_from_json(json::parse(R"({"q":3,"n":9})")), errc::parse_error);
}

TEST(Json, Verdict) {
    const Verdict v = verify_claim(make_params(3, 9, 6, 3, 1), dial_hull(rs(3, 2), 1).code);
    const json j = to_json(v);
    EXPECT_EQ(j["status"], "pass");
    EXPECT_EQ(j["mds"], true);
    EXPECT_EQ(j["witness_hull"], 1);
    EXPECT_EQ(j["recomputed"]["k_q"], 6);
    EXPECT_TRUE(j["failures"].empty());
}
