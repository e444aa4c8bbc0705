#pragma once

// Hermitian self-orthogonal generalized Reed-Solomon codes.
//
// GRS_k(a, v) is Hermitian self-orthogonal iff
//     sum_l v_l^{q+1} a_l^{i + jq} = 0    for all 0 <= i, j < k.
// With w_l = v_l^{q+1} in GF(q)* this is linear in w. Each GF(q^2)
// coefficient is split as c0 + c1 β over the basis {1, β} (β = x, the
// polynomial variable), giving a system over GF(q). Any null-space vector
// with all entries nonzero lifts back to multipliers through norm_preimage.
//
// Nothing constructed here is trusted: every returned spec is re-checked for
// a zero Gram matrix, and for MDS-ness when the distance is enumerable.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "code.hpp"

namespace hullkit {

struct GrsSpec {
    FieldSpec field;
    std::vector<FieldElement> eval_points;
    /// One multiplier per column; when extended the last one is v_∞.
    WeightVector multipliers;
    std::size_t k = 0;
    bool extended = false;

    std::size_t length() const { return eval_points.size() + (extended ? 1 : 0); }
};

namespace detail {

inline void require_distinct(const std::vector<FieldElement>& points) {
    std::set<Elem> seen;
    for (const auto& a : points)
        if (!seen.insert(a.index()).second)
            fail(errc::duplicate_eval_points, "evaluation point " + std::to_string(a.index()) + " repeated");
}

/// 0^0 = 1.
inline FieldElement power(const FieldElement& a, std::uint64_t n) { return a.pow(n); }

}  // namespace detail

/// Row i is (v_1 a_1^i, ..., v_n a_n^i); the infinity column is v_∞ on row k-1.
inline LinearCode grs_generator(const GrsSpec& g) {
    detail::require_distinct(g.eval_points);
    const std::size_t n = g.length();
    if (g.multipliers.size() != n)
        detail::fail(errc::shape_mismatch, "expected " + std::to_string(n) + " multipliers, got " + std::to_string(g.multipliers.size()));
    for (const auto& v : g.multipliers.entries())
        if (v.is_zero()) detail::fail(errc::zero_multiplier, "zero column multiplier");
    if (g.k > n) detail::fail(errc::bad_dimension, "k = " + std::to_string(g.k) + " exceeds length " + std::to_string(n));
    FieldMatrix gen(g.field, g.k, n);
    for (std::size_t i = 0; i < g.k; ++i)
        for (std::size_t l = 0; l < g.eval_points.size(); ++l)
            gen.set(i, l, g.multipliers[l] * detail::power(g.eval_points[l], i));
    if (g.extended && g.k > 0) gen.set(g.k - 1, n - 1, g.multipliers[n - 1]);
    return LinearCode(std::move(gen));
}

/// All of GF(q^2) as evaluation points with unit multipliers, 1 <= k <= q - 1.
inline GrsSpec full_field_rs(const FieldSpec& field, std::size_t k) {
    const std::uint32_t q = field.sub_order();
    if (k < 1 || k > q - 1)
        detail::fail(errc::bad_dimension, "full-field RS needs 1 <= k <= q - 1 = " + std::to_string(q - 1));
    GrsSpec g{field, enumerate(field), WeightVector::ones(field, field.size()), k, false};
    if (!is_hermitian_self_orthogonal(grs_generator(g)))
        detail::fail(errc::verification_failed, "full-field RS code is not Hermitian self-orthogonal");
    return g;
}

struct MultiplierProblem {
    std::vector<FieldElement> eval_points;
    std::size_t k = 0;
    bool extended = false;
};

enum class SolveStatus { found, no_solution, not_found_within_budget };

inline std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::found: return "found";
        case SolveStatus::no_solution: return "no_solution";
        case SolveStatus::not_found_within_budget: return "not_found_within_budget";
    }
    return "?";
}

struct SolveOutcome {
    SolveStatus status = SolveStatus::no_solution;
    std::optional<GrsSpec> grs;
    std::size_t nullity = 0;      // dimension of the GF(q) solution space for w
    std::uint64_t attempts = 0;   // candidate combinations examined
    bool exhaustive = false;      // the whole all-nonzero candidate set was scanned
};

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000;
inline constexpr std::uint64_t kDefaultSeed = 20240101;

namespace detail {

/// Coordinates (c0, c1) of a over GF(q) in the basis {1, β}.
struct SubfieldSplitter {
    FieldElement beta, beta_gap_inv;

    explicit SubfieldSplitter(const FieldSpec& field) {
        beta = field.element(field.p());  // the polynomial variable x
        if (field.e() == 1 || in_subfield(beta)) fail(errc::bad_field, "x does not generate GF(q^2) over GF(q)");
        beta_gap_inv = inv(beta - conj(beta));
    }
    std::pair<FieldElement, FieldElement> split(const FieldElement& a) const {
        const FieldElement c1 = (a - conj(a)) * beta_gap_inv;
        const FieldElement c0 = a - c1 * beta;
        return {c0, c1};
    }
};

inline std::vector<FieldElement> subfield_units(const FieldSpec& field) {
    std::vector<FieldElement> out;
    for (Elem i = 1; i < field.size(); ++i)
        if (in_subfield(field.element(i))) out.push_back(field.element(i));
    return out;
}

/// Rows: both GF(q) components of every Gram equation; columns: w_1..w_N.
inline FieldMatrix multiplier_system(const FieldSpec& field, const MultiplierProblem& p) {
    const std::uint64_t q = field.sub_order();
    const std::size_t n = p.eval_points.size();
    const std::size_t unknowns = n + (p.extended ? 1 : 0);
    const SubfieldSplitter splitter(field);
    FieldMatrix a(field, 2 * p.k * p.k, unknowns);
    std::size_t row = 0;
    for (std::size_t i = 0; i < p.k; ++i)
        for (std::size_t j = 0; j < p.k; ++j, row += 2) {
            for (std::size_t l = 0; l < n; ++l) {
                const auto [c0, c1] = splitter.split(power(p.eval_points[l], i + j * q));
                a.set(row, l, c0);
                a.set(row + 1, l, c1);
            }
            if (p.extended && i == p.k - 1 && j == p.k - 1) a.set(row, n, field.one());
        }
    return a;
}

}  // namespace detail

/// Searches for column multipliers making GRS_k(eval_points, v) (extended or
/// not) Hermitian self-orthogonal. The search is exhaustive when the
/// all-nonzero candidate set has at most `budget` members (so no_solution is a
/// proof of nonexistence for these points), otherwise `budget` seeded random
/// draws are tried.
inline SolveOutcome solve_multipliers(const FieldSpec& field, const MultiplierProblem& p,
                                      std::uint64_t seed = kDefaultSeed, std::uint64_t budget = kDefaultSearchBudget) {
    detail::require_distinct(p.eval_points);
    for (const auto& a : p.eval_points)
        if (a.field() != field) detail::fail(errc::spec_mismatch, "evaluation point from another field");
    if (p.k < 1) detail::fail(errc::bad_dimension, "k must be at least 1");
    const std::size_t unknowns = p.eval_points.size() + (p.extended ? 1 : 0);

    SolveOutcome out;
    if (2 * p.k > unknowns) {
        out.exhaustive = true;  // self-orthogonality forces k <= n/2
        return out;
    }
    const FieldMatrix basis = null_space(detail::multiplier_system(field, p));
    for (auto v : basis.raw_data())
        if (!in_subfield(field.element(v))) detail::fail(errc::verification_failed, "solution space left GF(q)");
    out.nullity = basis.rows();
    if (out.nullity == 0) {
        out.exhaustive = true;
        return out;
    }

    const auto units = detail::subfield_units(field);
    const auto& f = field.data();
    // Free coordinates of the null-space basis form an identity block, so an
    // all-nonzero solution needs every coefficient nonzero; scaling lets the
    // first coefficient be 1.
    std::vector<std::size_t> coeff(out.nullity, 0);
    std::vector<Elem> w(unknowns);
    auto evaluate = [&]() {
        std::fill(w.begin(), w.end(), 0);
        for (std::size_t t = 0; t < out.nullity; ++t) {
            const Elem c = units[coeff[t]].index();
            for (std::size_t l = 0; l < unknowns; ++l)
                if (basis.raw(t, l) != 0) w[l] = f.add(w[l], f.mul(c, basis.raw(t, l)));
        }
        ++out.attempts;
        return std::none_of(w.begin(), w.end(), [](Elem x) { return x == 0; });
    };

    std::uint64_t candidates = 1;
    for (std::size_t t = 1; t < out.nullity; ++t) candidates = detail::saturating_mul(candidates, units.size());
    bool found = false;
    if (candidates <= budget) {
        out.exhaustive = true;
        while (true) {
            if (evaluate()) {
                found = true;
                break;
            }
            std::size_t pos = 1;
            while (pos < out.nullity && ++coeff[pos] == units.size()) coeff[pos++] = 0;
            if (pos >= out.nullity) break;
        }
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, units.size() - 1);
        for (std::uint64_t attempt = 0; attempt < budget && !found; ++attempt) {
            for (std::size_t t = 1; t < out.nullity; ++t) coeff[t] = pick(rng);
            found = evaluate();
        }
    }
    if (!found) {
        out.status = out.exhaustive ? SolveStatus::no_solution : SolveStatus::not_found_within_budget;
        return out;
    }

    std::vector<FieldElement> multipliers;
    multipliers.reserve(unknowns);
    for (auto x : w) multipliers.push_back(norm_preimage(field.element(x)));
    GrsSpec g{field, p.eval_points, WeightVector(std::move(multipliers)), p.k, p.extended};
    if (!is_hermitian_self_orthogonal(grs_generator(g)))
        detail::fail(errc::verification_failed, "solved multipliers do not give a zero Gram matrix");
    out.status = SolveStatus::found;
    out.grs = std::move(g);
    return out;
}

inline FieldElement evaluate_polynomial(const std::vector<FieldElement>& coeffs, const FieldElement& x) {
    FieldElement acc = x.field().zero();
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

struct EvalSet {
    std::vector<FieldElement> points;
    bool degenerate = false;  // empty set
};

/// GF(q^2) minus the roots of x -> g(x) + g(x)^q, evaluated pointwise.
/// `g` holds coefficients, constant term first.
inline EvalSet ball_vilar_eval_set(const FieldSpec& field, const std::vector<FieldElement>& g) {
    field.sub_order();
    EvalSet out;
    for (const auto& x : enumerate(field)) {
        const FieldElement gx = evaluate_polynomial(g, x);
        if (!(gx + conj(gx)).is_zero()) out.points.push_back(x);
    }
    out.degenerate = out.points.empty();
    return out;
}

/// Coefficients of g(x) = f(x^{q+1}).
inline std::vector<FieldElement> compose_with_norm(const FieldSpec& field, const std::vector<FieldElement>& f) {
    const std::size_t q1 = field.sub_order() + 1;
    if (f.empty()) return {};
    std::vector<FieldElement> g((f.size() - 1) * q1 + 1, field.zero());
    for (std::size_t i = 0; i < f.size(); ++i) g[i * q1] = f[i];
    return g;
}

/// Monic f of the given degree in canonical coefficient order (at most
/// `limit` of them), each returned as g(x) = f(x^{q+1}).
inline std::vector<std::vector<FieldElement>> norm_composed_shapes(const FieldSpec& field, std::size_t degree,
                                                                   std::size_t limit) {
    std::vector<std::vector<FieldElement>> out;
    std::vector<Elem> lower(degree, 0);
    while (out.size() < limit) {
        std::vector<FieldElement> f;
        for (auto c : lower) f.push_back(field.element(c));
        f.push_back(field.one());
        out.push_back(compose_with_norm(field, f));
        std::size_t pos = 0;
        while (pos < degree && ++lower[pos] == field.size()) lower[pos++] = 0;
        if (pos == degree) break;
    }
    return out;
}

/// Union of the cosets γ^r H (r in `cosets`) of the subgroup H of index m in
/// GF(q^2)*, γ the canonical primitive element. cosets = {0} is H itself.
inline std::vector<FieldElement> coset_eval_set(const FieldSpec& field, std::size_t m, const std::vector<std::size_t>& cosets) {
    const std::size_t order = field.size() - 1;
    if (m == 0 || order % m != 0)
        detail::fail(errc::not_a_divisor, std::to_string(m) + " does not divide " + std::to_string(order));
    const FieldElement gamma = field.primitive();
    std::vector<FieldElement> out;
    std::set<std::size_t> used;
    for (auto r : cosets) {
        if (r >= m) detail::fail(errc::bad_index, "coset index " + std::to_string(r) + " >= " + std::to_string(m));
        if (!used.insert(r).second) continue;
        for (std::size_t j = 0; j < order / m; ++j) out.push_back(gamma.pow(r + m * j));
    }
    return out;
}

/// Union of the subgroups of index m1 and m2 (order (q^2-1)/m1 and (q^2-1)/m2).
inline std::vector<FieldElement> subgroup_union_eval_set(const FieldSpec& field, std::size_t m1, std::size_t m2) {
    auto out = coset_eval_set(field, m1, {0});
    std::set<Elem> seen;
    for (const auto& a : out) seen.insert(a.index());
    for (const auto& a : coset_eval_set(field, m2, {0}))
        if (seen.insert(a.index()).second) out.push_back(a);
    return out;
}

/// GF(q^2) minus {0}, t cosets of GF(q)* and u norm fibres, chosen disjoint
/// (odd-indexed cosets of GF(q)*, even-indexed cosets of the norm-one group),
/// so exactly 1 + t(q-1) + u(q+1) points are removed. q odd.
inline std::vector<FieldElement> punctured_eval_set(const FieldSpec& field, std::size_t t, std::size_t u) {
    const std::size_t q = field.sub_order();
    if (q % 2 == 0) detail::fail(errc::bad_family_params, "punctured family needs odd q");
    if (2 * t > q + 1 || 2 * u > q - 1) detail::fail(errc::bad_family_params, "too many cosets removed");
    const std::size_t order = q * q - 1;
    const FieldElement gamma = field.primitive();
    std::vector<bool> removed(field.size(), false);
    removed[0] = true;
    for (std::size_t c = 0; c < t; ++c)  // γ^{2c+1} GF(q)*, GF(q)* = <γ^{q+1}>
        for (std::size_t j = 0; j < q - 1; ++j) removed[gamma.pow(2 * c + 1 + (q + 1) * j).index()] = true;
    for (std::size_t c = 0; c < u; ++c)  // γ^{2c} μ_{q+1}, μ_{q+1} = <γ^{q-1}>
        for (std::size_t j = 0; j < q + 1; ++j) removed[gamma.pow((2 * c + (q - 1) * j) % order).index()] = true;
    std::vector<FieldElement> out;
    for (Elem i = 0; i < field.size(); ++i)
        if (!removed[i]) out.push_back(field.element(i));
    if (out.size() != q * q - 1 - t * (q - 1) - u * (q + 1))
        detail::fail(errc::verification_failed, "removed cosets overlap");
    return out;
}

/// Code families reachable by "evaluation set + multiplier solve + verify".
enum class Family { full_field, q2plus1, q2_minus_s, subgroup, coset_union, even_subgroup, ball_vilar, punctured };

inline std::string family_tag(Family f) {
    switch (f) {
        case Family::full_field: return "full-field";
        case Family::q2plus1: return "q2plus1";
        case Family::q2_minus_s: return "q2-minus-s";
        case Family::subgroup: return "subgroup";
        case Family::coset_union: return "coset-union";
        case Family::even_subgroup: return "even-subgroup";
        case Family::ball_vilar: return "ball-vilar";
        case Family::punctured: return "punctured";
    }
    return "?";
}

inline Family parse_family(std::string tag) {
    std::replace(tag.begin(), tag.end(), '_', '-');
    for (Family f : {Family::full_field, Family::q2plus1, Family::q2_minus_s, Family::subgroup, Family::coset_union, Family::even_subgroup,
                     Family::ball_vilar, Family::punctured})
        if (family_tag(f) == tag) return f;
    detail::fail(errc::bad_family_params, "unknown family '" + tag + "'");
}

struct FamilyParams {
    std::size_t k = 0;
    std::size_t m = 0;   // subgroup, even-subgroup
    std::size_t m1 = 0;  // coset-union
    std::size_t m2 = 0;
    std::size_t t = 0;   // punctured
    std::size_t u = 0;
    std::size_t s = 0;   // q2-minus-s
    std::vector<FieldElement> g = {};  // ball-vilar polynomial, constant term first
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t budget = kDefaultSearchBudget;
};

struct ForgeOutcome {
    Family family = Family::full_field;
    SolveStatus status = SolveStatus::no_solution;
    std::optional<GrsSpec> grs;
    std::optional<LinearCode> code;
    std::size_t n = 0;
    std::size_t k = 0;
    std::optional<std::size_t> distance;  // measured when enumerable
    std::size_t nullity = 0;
    std::uint64_t attempts = 0;
    bool exhaustive = false;
};

namespace detail {

inline void require(bool cond, const std::string& what) {
    if (!cond) fail(errc::bad_family_params, what);
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return b == 0 ? a : gcd(b, a % b); }

inline void finish_outcome(ForgeOutcome& out, std::uint64_t cap) {
    if (!out.grs) return;
    LinearCode code = grs_generator(*out.grs);
    if (!is_hermitian_self_orthogonal(code)) fail(errc::verification_failed, "forged code is not Hermitian self-orthogonal");
    try {
        out.distance = min_distance(code, cap);
    } catch (const hullkit_error& err) {
        if (err.code() != errc::too_large_to_enumerate) throw;
    }
    if (out.distance && *out.distance != code.n() - code.k() + 1)
        fail(errc::verification_failed, "forged GRS code is not MDS");
    out.code = std::move(code);
}

}  // namespace detail

/// Builds the evaluation set for a family, checks its side conditions, solves
/// for multipliers and verifies the result.
inline ForgeOutcome construct_family(const FieldSpec& field, Family family, const FamilyParams& params,
                                     std::uint64_t cap = default_enumeration_cap()) {
    using detail::require;
    const std::size_t q = field.sub_order();
    const std::size_t k = params.k;
    require(k >= 1, "k must be at least 1");
    ForgeOutcome out;
    out.family = family;
    out.k = k;

    MultiplierProblem problem;
    problem.k = k;
    switch (family) {
        case Family::full_field: {
            require(k <= q - 1, "full-field needs k <= q - 1");
            out.grs = full_field_rs(field, k);
            out.status = SolveStatus::found;
            out.exhaustive = true;
            out.n = field.size();
            detail::finish_outcome(out, cap);
            return out;
        }
        case Family::q2plus1:
            require(k <= q && k != q - 1, "q2plus1 needs k <= q and k != q - 1");
            problem.eval_points = enumerate(field);
            problem.extended = true;
            break;
        case Family::q2_minus_s:
            require(2 * params.s + 2 <= q, "q2-minus-s needs s <= q/2 - 1");
            require(q <= 2 * k && k + params.s + 1 <= q, "q2-minus-s needs q/2 <= k <= q - s - 1");
            problem.eval_points = enumerate(field);
            problem.eval_points.resize(field.size() - params.s);
            break;
        case Family::subgroup: {
            require(params.m >= 1 && params.m % 2 == 1 && (q + 1) % params.m == 0, "m must be an odd divisor of q + 1");
            const std::size_t half = (params.m - 1) / 2;
            require(k * (2 * half + 1) < (half + 1) * (q - 1), "dimension must satisfy w < (k+1)(q-1)/(2k+1)");
            problem.eval_points = coset_eval_set(field, params.m, {0});
            break;
        }
        case Family::coset_union:
            require(q % 2 == 1, "coset-union needs odd q");
            require(params.m1 % 2 == 1 && params.m2 % 2 == 1 && (q + 1) % params.m1 == 0 && (q + 1) % params.m2 == 0,
                    "m1, m2 must be odd divisors of q + 1");
            require(params.m1 != params.m2 && detail::gcd(params.m1, params.m2) == 1, "m1, m2 must be distinct and coprime");
            require(2 * k <= q - 1, "coset-union needs k <= (q - 1)/2");
            problem.eval_points = subgroup_union_eval_set(field, params.m1, params.m2);
            break;
        case Family::even_subgroup: {
            require(q % 2 == 1, "even-subgroup needs odd q");
            require(params.m >= 6 && params.m % 2 == 0 && (q - 1) % params.m == 0, "m must be an even divisor of q - 1, m >= 6");
            std::size_t a = q - 1, a1 = params.m;
            while (a % 2 == 0) a /= 2;
            while (a1 % 2 == 0) a1 /= 2;
            require(a % a1 == 0, "odd part of m must divide the odd part of q - 1");
            require(2 * k <= q + 1 + 2 * ((q - 1) / params.m) - 2, "k too large for the even-subgroup family");
            problem.eval_points = coset_eval_set(field, params.m, {0});
            break;
        }
        case Family::ball_vilar: {
            require(k <= q - 1, "ball-vilar needs k <= q - 1");
            std::size_t degree = params.g.size();
            while (degree > 0 && params.g[degree - 1].is_zero()) --degree;
            require(degree <= (q - k) * q, "deg g must be at most (q - k)q - 1");
            problem.eval_points = ball_vilar_eval_set(field, params.g).points;
            break;
        }
        case Family::punctured:
            require(q % 2 == 1, "punctured needs odd q");
            require(k <= q - 1, "punctured needs k <= q - 1");
            require(params.t >= 1 && ((q + 1) / 2) % params.t == 0, "t must divide (q + 1)/2");
            require(params.u >= 1 && 1 + params.u * (q + 1) + 1 <= (q - k) * q, "need 1 + u(q+1) <= (q-k)q - 1");
            problem.eval_points = punctured_eval_set(field, params.t, params.u);
            break;
    }
    out.n = problem.eval_points.size() + (problem.extended ? 1 : 0);
    require(out.n >= 1, "empty evaluation set");
    SolveOutcome solved = solve_multipliers(field, problem, params.seed, params.budget);
    out.status = solved.status;
    out.nullity = solved.nullity;
    out.attempts = solved.attempts;
    out.exhaustive = solved.exhaustive;
    out.grs = std::move(solved.grs);
    detail::finish_outcome(out, cap);
    return out;
}

}  // namespace hullkit
