#pragma once

// Dialing the hull dimension of a self-orthogonal code.
//
// Given C ⊆ C^{⊥H} of dimension k with standard-form generator (I_k | P1 | P2),
// P1 nonsingular, scaling the first k - h coordinates by λ_i with
// λ_i^{q+1} != 1 gives an equivalent code whose Hermitian hull has dimension
// exactly h. The l-Galois variant replaces q by p^l; reduce_hull applies the
// same scaling to the hull coordinates of an arbitrary code.
//
// Every transform re-measures the hull it produced and throws
// VerificationFailed if the measurement disagrees with the target.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "code.hpp"

namespace hullkit {

/// Where the λ values come from: the canonical deterministic choice, or a
/// seeded uniform draw among the admissible elements.
class LambdaSource {
   public:
    static LambdaSource canonical() { return LambdaSource(false, 0); }
    static LambdaSource seeded(std::uint64_t seed) { return LambdaSource(true, seed); }

    bool is_seeded() const { return seeded_; }
    std::uint64_t seed() const { return seed_; }

    /// `count` nonzero elements with x^{p^l + 1} != 1.
    std::vector<FieldElement> draw(const FieldSpec& field, std::uint32_t l, std::size_t count) const {
        if (!seeded_) return find_twisted_norm_non_one(field, l, count);
        std::uint64_t exponent = 1;
        for (std::uint32_t i = 0; i < l % field.e(); ++i) exponent *= field.p();
        ++exponent;
        std::vector<FieldElement> admissible;
        for (Elem i = 1; i < field.size(); ++i)
            if (!field.element(i).pow(exponent).is_one()) admissible.push_back(field.element(i));
        if (count > 0 && admissible.empty())
            detail::fail(errc::no_such_element, "no element with x^" + std::to_string(exponent) + " != 1");
        std::mt19937_64 rng(seed_);
        std::uniform_int_distribution<std::size_t> pick(0, admissible.empty() ? 0 : admissible.size() - 1);
        std::vector<FieldElement> out;
        out.reserve(count);
        for (std::size_t i = 0; i < count; ++i) out.push_back(admissible[pick(rng)]);
        return out;
    }

   private:
    LambdaSource(bool seeded, std::uint64_t seed) : seeded_(seeded), seed_(seed) {}
    bool seeded_;
    std::uint64_t seed_;
};

struct DialResult {
    LinearCode code;             // v . Perm(C)
    WeightVector v;
    Permutation perm;            // applied to the input's columns before scaling
    std::size_t target_h = 0;
    std::size_t achieved_h = 0;
    std::vector<FieldElement> lambdas;
    DualKind kind = DualKind::hermitian();
};

struct StandardFormGram {
    LinearCode code;   // generator (I_k | P)
    Permutation perm;
    FieldMatrix p;     // k x (n - k)
};

namespace detail {

inline void check_galois_index(const FieldSpec& field, std::uint32_t l) {
    if (l >= field.e())
        fail(errc::bad_galois_index, "l = " + std::to_string(l) + " outside [0, " + std::to_string(field.e()) + ")");
}

/// Standard form of a code with C ⊆ C^{⊥_l}, checking P (P^{p^l})^T = -I_k.
inline StandardFormGram standard_form_gram(const LinearCode& c, std::uint32_t l) {
    check_galois_index(c.field(), l);
    if (!is_galois_self_orthogonal(c, l)) fail(errc::not_self_orthogonal, "code is not self-orthogonal for the chosen form");
    const std::size_t k = c.k(), n = c.n();
    if (k > n - k)
        fail(errc::dimension_too_large,
             "k = " + std::to_string(k) + " > n - k = " + std::to_string(n - k) + " contradicts self-orthogonality");
    auto sf = standard_form(c.generator());
    std::vector<std::size_t> tail;
    for (std::size_t j = k; j < n; ++j) tail.push_back(j);
    FieldMatrix p = select_columns(sf.matrix, tail);
    const FieldMatrix gram = matmul(p, transpose(frobenius_entries(p, l)));
    if (!(gram == -FieldMatrix::identity(c.field(), k)))
        fail(errc::verification_failed, "P * P^T twisted is not -I_k");
    if (rank(p) != k) fail(errc::verification_failed, "P is not of full row rank");
    return {LinearCode(std::move(sf.matrix)), std::move(sf.perm), std::move(p)};
}

/// Greedy leftmost columns of P that extend the rank, placed first.
inline std::pair<LinearCode, Permutation> arrange_p1(const LinearCode& standard) {
    const std::size_t k = standard.k(), n = standard.n();
    if (n < 2 * k) fail(errc::length_too_short, "n = " + std::to_string(n) + " < 2k = " + std::to_string(2 * k));
    const FieldMatrix& g = standard.generator();
    std::vector<std::size_t> chosen, rest;
    FieldMatrix acc(g.field(), k, 0);
    for (std::size_t j = k; j < n; ++j) {
        if (chosen.size() < k) {
            FieldMatrix trial = hstack(acc, select_columns(g, {j}));
            if (rank(trial) == chosen.size() + 1) {
                acc = std::move(trial);
                chosen.push_back(j);
                continue;
            }
        }
        rest.push_back(j);
    }
    if (chosen.size() < k) fail(errc::rank_deficient, "P has rank " + std::to_string(chosen.size()) + " < k");
    Permutation perm = identity_permutation(k);
    perm.insert(perm.end(), chosen.begin(), chosen.end());
    perm.insert(perm.end(), rest.begin(), rest.end());
    return {permute(standard, perm), perm};
}

inline std::vector<FieldElement> draw_lambdas(const FieldSpec& field, std::uint32_t l, std::size_t count,
                                              const LambdaSource& source) {
    try {
        return source.draw(field, l, count);
    } catch (const hullkit_error& err) {
        if (err.code() == errc::no_such_element) fail(errc::small_field, err.what());
        throw;
    }
}

inline WeightVector leading_weights(const FieldSpec& field, std::size_t n, const std::vector<FieldElement>& lambdas) {
    std::vector<FieldElement> v(n, field.one());
    for (std::size_t i = 0; i < lambdas.size(); ++i) v[i] = lambdas[i];
    return WeightVector(std::move(v));
}

inline DialResult dial_twisted(const LinearCode& c, std::size_t h, std::uint32_t l, DualKind kind,
                               const LambdaSource& source) {
    const std::size_t k = c.k();
    if (h > k) fail(errc::bad_target, "target h = " + std::to_string(h) + " exceeds k = " + std::to_string(k));
    auto sfg = standard_form_gram(c, l);
    DialResult result;
    result.kind = kind;
    result.target_h = h;
    if (h == k) {
        result.code = c;
        result.v = WeightVector::ones(c.field(), c.n());
        result.perm = identity_permutation(c.n());
    } else {
        auto [arranged, arrange_perm] = arrange_p1(sfg.code);
        result.lambdas = draw_lambdas(c.field(), l, k - h, source);
        result.v = leading_weights(c.field(), c.n(), result.lambdas);
        result.perm = compose_permutations(sfg.perm, arrange_perm);
        result.code = scale(arranged, result.v);
    }
    result.achieved_h = hull(result.code, kind).dim;
    if (result.achieved_h != h)
        fail(errc::verification_failed,
             "achieved hull dimension " + std::to_string(result.achieved_h) + " != target " + std::to_string(h));
    return result;
}

inline void require_hermitian_q3(const FieldSpec& field) {
    if (field.sub_order() < 3) fail(errc::small_field, "hull dialing needs q >= 3 (GF(4) has no element of norm != 1)");
}

}  // namespace detail

/// Standard form (I_k | P) of a Hermitian self-orthogonal code, with
/// P conj(P)^T = -I_k and rank(P) = k verified.
inline StandardFormGram verify_standard_form_gram(const LinearCode& c) {
    c.field().sub_order();  // OddExtension outside GF(q^2)
    return detail::standard_form_gram(c, c.field().e() / 2);
}

/// Permutes a standard-form-reachable code into (I_k | P1 | P2) with P1 nonsingular.
inline std::pair<LinearCode, Permutation> arrange_p1_nonsingular(const LinearCode& c) {
    if (c.n() < 2 * c.k())
        detail::fail(errc::length_too_short, "n = " + std::to_string(c.n()) + " < 2k = " + std::to_string(2 * c.k()));
    auto sf = standard_form(c.generator());
    auto [arranged, perm] = detail::arrange_p1(LinearCode(std::move(sf.matrix)));
    return {std::move(arranged), compose_permutations(sf.perm, perm)};
}

/// Equivalent code with Hermitian hull of dimension exactly h, 0 <= h <= k.
inline DialResult dial_hull(const LinearCode& c, std::size_t h, const LambdaSource& source = LambdaSource::canonical()) {
    detail::require_hermitian_q3(c.field());
    return detail::dial_twisted(c, h, c.field().e() / 2, DualKind::hermitian(), source);
}

/// l-Galois variant: C ⊆ C^{⊥_l} becomes an equivalent code with l-Galois hull of dimension h.
inline DialResult dial_galois_hull(const LinearCode& c, std::size_t h, std::uint32_t l,
                                   const LambdaSource& source = LambdaSource::canonical()) {
    detail::check_galois_index(c.field(), l);
    return detail::dial_twisted(c, h, l, DualKind::galois(l), source);
}

/// Lowers the Hermitian hull of an arbitrary code from its measured dimension to l_prime.
inline DialResult reduce_hull(const LinearCode& c, std::size_t l_prime, const LambdaSource& source = LambdaSource::canonical()) {
    detail::require_hermitian_q3(c.field());
    const HullReport current = hull(c, DualKind::hermitian());
    if (l_prime > current.dim)
        detail::fail(errc::bad_target, "target " + std::to_string(l_prime) + " exceeds the current hull dimension " +
                                           std::to_string(current.dim));
    if (current.dim == c.k()) return dial_hull(c, l_prime, source);

    DialResult result;
    result.kind = DualKind::hermitian();
    result.target_h = l_prime;
    if (l_prime == current.dim) {
        result.code = c;
        result.v = WeightVector::ones(c.field(), c.n());
        result.perm = identity_permutation(c.n());
    } else {
        // Hull rows in RREF, remaining rows cleared on the hull pivot columns.
        const auto [hull_rref, pivots] = rref(current.basis);
        const auto& f = c.field().data();
        FieldMatrix rest = c.generator();
        for (std::size_t r = 0; r < rest.rows(); ++r)
            for (std::size_t i = 0; i < pivots.size(); ++i) {
                const Elem factor = rest.raw(r, pivots[i]);
                if (factor == 0) continue;
                for (std::size_t j = 0; j < rest.cols(); ++j)
                    rest.raw(r, j) = f.sub(rest.raw(r, j), f.mul(factor, hull_rref.raw(i, j)));
            }
        const FieldMatrix complement = row_basis(rest);
        if (complement.rows() + pivots.size() != c.k())
            detail::fail(errc::verification_failed, "hull and complement do not span the code");
        FieldMatrix gen = vstack(select_rows(hull_rref, 0, pivots.size()), complement);

        Permutation perm = pivots;
        std::vector<bool> is_pivot(c.n(), false);
        for (auto p : pivots) is_pivot[p] = true;
        for (std::size_t j = 0; j < c.n(); ++j)
            if (!is_pivot[j]) perm.push_back(j);

        result.lambdas = detail::draw_lambdas(c.field(), c.field().e() / 2, current.dim - l_prime, source);
        result.v = detail::leading_weights(c.field(), c.n(), result.lambdas);
        result.perm = perm;
        result.code = scale(LinearCode(permute_columns(gen, perm)), result.v);
    }
    result.achieved_h = hull(result.code, DualKind::hermitian()).dim;
    if (result.achieved_h != l_prime)
        detail::fail(errc::verification_failed, "achieved hull dimension " + std::to_string(result.achieved_h) +
                                                    " != target " + std::to_string(l_prime));
    return result;
}

/// Reconstruction of the dual generator B from the hull-dialing argument and
/// the checks it supports. Only meaningful for a dial_hull result with h < k.
struct DialMechanics {
    FieldMatrix b;                  // (n - k) x n
    bool b_full_rank = false;       // rank(B) = n - k
    bool b_orthogonal = false;      // B generates rows of (v . C)^{⊥H}
    bool rows_coincide = false;     // last h rows of (D_λ | P) equal rows k-h..k-1 of B
    bool shared_rows_in_hull = false;

    bool ok() const { return b_full_rank && b_orthogonal && rows_coincide && shared_rows_in_hull; }
};

inline DialMechanics check_dial_mechanics(const DialResult& r) {
    const LinearCode& code = r.code;
    const std::size_t n = code.n(), k = code.k(), h = r.target_h;
    const FieldSpec field = code.field();
    const FieldMatrix& g = code.generator();

    std::vector<std::size_t> p1_cols, p2_cols;
    for (std::size_t j = k; j < 2 * k; ++j) p1_cols.push_back(j);
    for (std::size_t j = 2 * k; j < n; ++j) p2_cols.push_back(j);
    const FieldMatrix p1 = select_columns(g, p1_cols);
    const FieldMatrix p2 = select_columns(g, p2_cols);

    FieldMatrix d_inv_conj(field, k, k);
    for (std::size_t i = 0; i < k; ++i) d_inv_conj.set(i, i, inv(conj(r.v[i])));

    const FieldMatrix top = hstack(hstack(d_inv_conj, p1), p2);
    const FieldMatrix bottom_left = matmul(-conj_transpose(p2), d_inv_conj);
    const FieldMatrix bottom = hstack(hstack(bottom_left, FieldMatrix(field, n - 2 * k, k)),
                                      FieldMatrix::identity(field, n - 2 * k));
    DialMechanics out;
    out.b = vstack(top, bottom);
    out.b_full_rank = rank(out.b) == n - k;
    out.b_orthogonal = matmul(g, conj_transpose(out.b)).is_zero();
    out.rows_coincide = select_rows(g, k - h, h) == select_rows(out.b, k - h, h);
    const HullReport hr = hull(code, DualKind::hermitian());
    out.shared_rows_in_hull = row_space_contains(hr.basis, select_rows(g, k - h, h));
    return out;
}

}  // namespace hullkit
