#pragma once

// Linear codes over GF(p^e), their Euclidean / Hermitian / l-Galois duals and
// hulls, equivalence transforms, and exact minimum distance.
//
// Codes keep the generator they were built from; two LinearCode values are the
// same code when their row spaces agree (see same_code), not when their
// generators are equal.

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace hullkit {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// The enumeration cap, overridable through HULLKIT_ENUM_CAP.
inline std::uint64_t default_enumeration_cap() {
    if (const char* env = std::getenv("HULLKIT_ENUM_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return kDefaultEnumerationCap;
}

class LinearCode {
   public:
    LinearCode() = default;

    /// `gen` must have full row rank.
    explicit LinearCode(FieldMatrix gen) : gen_(std::move(gen)) {
        if (rank(gen_) != gen_.rows())
            detail::fail(errc::rank_deficient, "generator rows are linearly dependent");
    }

    /// The code spanned by the rows of `m` (dependent rows are dropped).
    static LinearCode spanned_by(const FieldMatrix& m) { return LinearCode(row_basis(m)); }
    static LinearCode zero(FieldSpec field, std::size_t n) { return LinearCode(FieldMatrix(field, 0, n)); }
    static LinearCode full_space(FieldSpec field, std::size_t n) { return LinearCode(FieldMatrix::identity(field, n)); }

    FieldSpec field() const { return gen_.field(); }
    std::size_t n() const { return gen_.cols(); }
    std::size_t k() const { return gen_.rows(); }
    const FieldMatrix& generator() const { return gen_; }

   private:
    FieldMatrix gen_;
};

inline bool same_code(const LinearCode& a, const LinearCode& b) {
    return a.field() == b.field() && row_space_equal(a.generator(), b.generator());
}

/// Which bilinear / sesquilinear form a dual or hull refers to.
struct DualKind {
    enum class Form { euclidean, hermitian, galois };
    Form form = Form::euclidean;
    std::uint32_t l = 0;  // only meaningful for galois

    static DualKind euclidean() { return {Form::euclidean, 0}; }
    static DualKind hermitian() { return {Form::hermitian, 0}; }
    static DualKind galois(std::uint32_t l) { return {Form::galois, l}; }

    std::string name() const {
        switch (form) {
            case Form::euclidean: return "euclidean";
            case Form::hermitian: return "hermitian";
            case Form::galois: return "galois(" + std::to_string(l) + ")";
        }
        return "?";
    }
    friend bool operator==(const DualKind&, const DualKind&) = default;
};

struct HullReport {
    DualKind kind;
    FieldMatrix basis;
    std::size_t dim = 0;
};

/// A length-n vector with every entry nonzero.
class WeightVector {
   public:
    WeightVector() = default;
    explicit WeightVector(std::vector<FieldElement> entries) : entries_(std::move(entries)) {
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (entries_[i].is_zero())
                detail::fail(errc::zero_multiplier, "weight vector entry " + std::to_string(i) + " is zero");
            if (entries_[i].field() != entries_.front().field())
                detail::fail(errc::spec_mismatch, "weight vector mixes fields");
        }
    }
    static WeightVector ones(FieldSpec field, std::size_t n) {
        return WeightVector(std::vector<FieldElement>(n, field.one()));
    }

    std::size_t size() const { return entries_.size(); }
    const FieldElement& operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<FieldElement>& entries() const { return entries_; }

    /// v^{-q}, entrywise inv(conj(v_i)).
    WeightVector inverse_conjugate() const {
        std::vector<FieldElement> out;
        out.reserve(entries_.size());
        for (const auto& x : entries_) out.push_back(inv(conj(x)));
        return WeightVector(std::move(out));
    }

    /// Entrywise v_i^{-p^l}.
    WeightVector inverse_frobenius(std::uint32_t l) const {
        std::vector<FieldElement> out;
        out.reserve(entries_.size());
        for (const auto& x : entries_) out.push_back(inv(frobenius(x, l)));
        return WeightVector(std::move(out));
    }

    friend bool operator==(const WeightVector&, const WeightVector&) = default;

   private:
    std::vector<FieldElement> entries_;
};

inline LinearCode euclidean_dual(const LinearCode& c) { return LinearCode(null_space(c.generator())); }

/// {x : sum x_i c_i^q = 0 for all c in C}.
inline LinearCode hermitian_dual(const LinearCode& c) { return LinearCode(null_space(conjugate(c.generator()))); }

/// {x : sum x_i c_i^{p^l} = 0 for all c in C}, 0 <= l < e.
inline LinearCode galois_dual(const LinearCode& c, std::uint32_t l) {
    if (l >= c.field().e())
        detail::fail(errc::bad_galois_index, "l = " + std::to_string(l) + " outside [0, " + std::to_string(c.field().e()) + ")");
    return LinearCode(null_space(frobenius_entries(c.generator(), l)));
}

inline LinearCode dual(const LinearCode& c, DualKind kind) {
    switch (kind.form) {
        case DualKind::Form::euclidean: return euclidean_dual(c);
        case DualKind::Form::hermitian: return hermitian_dual(c);
        case DualKind::Form::galois: return galois_dual(c, kind.l);
    }
    return euclidean_dual(c);
}

inline HullReport hull(const LinearCode& c, DualKind kind) {
    FieldMatrix basis = intersect_row_spaces(c.generator(), dual(c, kind).generator());
    const std::size_t dim = basis.rows();
    return {kind, std::move(basis), dim};
}

/// G * conj(G)^T, the Hermitian Gram matrix of the generator.
inline FieldMatrix hermitian_gram(const LinearCode& c) { return matmul(c.generator(), conj_transpose(c.generator())); }

inline bool is_hermitian_self_orthogonal(const LinearCode& c) { return hermitian_gram(c).is_zero(); }

/// C ⊆ C^{⊥_l}.
inline bool is_galois_self_orthogonal(const LinearCode& c, std::uint32_t l) {
    if (l >= c.field().e()) detail::fail(errc::bad_galois_index, "l out of range");
    return matmul(c.generator(), transpose(frobenius_entries(c.generator(), l))).is_zero();
}

/// v . C: column j multiplied by v_j.
inline LinearCode scale(const LinearCode& c, const WeightVector& v) {
    if (v.size() != c.n())
        detail::fail(errc::shape_mismatch, "weight vector has length " + std::to_string(v.size()) + ", code length " + std::to_string(c.n()));
    FieldMatrix g = c.generator();
    const auto& f = g.field().data();
    for (std::size_t j = 0; j < g.cols(); ++j) {
        if (v[j].field() != g.field()) detail::fail(errc::spec_mismatch, "weight vector over a different field");
        for (std::size_t i = 0; i < g.rows(); ++i) g.raw(i, j) = f.mul(g.raw(i, j), v[j].index());
    }
    return LinearCode(std::move(g));
}

inline LinearCode permute(const LinearCode& c, const Permutation& perm) {
    return LinearCode(permute_columns(c.generator(), perm));
}

/// Subcode vanishing at coordinate i, with coordinate i deleted.
inline LinearCode shorten(const LinearCode& c, std::size_t i) {
    if (i >= c.n()) detail::fail(errc::bad_index, "coordinate " + std::to_string(i) + " out of range");
    const FieldMatrix column = transpose(select_columns(c.generator(), {i}));  // 1 x k
    const FieldMatrix messages = null_space(column);
    const FieldMatrix sub = matmul(messages, c.generator());
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < c.n(); ++j)
        if (j != i) keep.push_back(j);
    return LinearCode(select_columns(sub, keep));
}

enum class DistanceMethod {
    automatic,
    enumerate_messages,   // walk the message space
    column_dependencies,  // smallest dependent column set of a parity-check matrix
};

namespace detail {

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

inline std::uint64_t codeword_count(const LinearCode& c) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < c.k(); ++i) total = saturating_mul(total, c.field().size());
    return total;
}

/// Upper bound on the number of column subsets examined by the dependency route.
inline std::uint64_t dependency_work(const LinearCode& c) {
    const std::size_t n = c.n();
    const std::size_t max_w = std::min(n, n - c.k() + 1);
    std::uint64_t binom = 1, total = 0;
    for (std::size_t w = 1; w <= max_w; ++w) {
        binom = saturating_mul(binom, n - w + 1) / w;  // exact while unsaturated
        total = saturating_add(total, binom);
    }
    return total;
}

inline std::size_t distance_by_messages(const LinearCode& c) {
    const FieldMatrix& g = c.generator();
    const auto& f = c.field().data();
    const std::size_t n = c.n(), k = c.k();
    const Elem q = f.size;
    // Up to scalars, every nonzero message has leading entry 1 at some position t.
    std::size_t best = n;
    std::vector<Elem> word(n), digits;
    for (std::size_t t = 0; t < k && best > 1; ++t) {
        for (std::size_t j = 0; j < n; ++j) word[j] = g.raw(t, j);
        digits.assign(k - t - 1, 0);
        while (true) {
            std::size_t weight = 0;
            for (auto x : word) weight += (x != 0);
            best = std::min(best, weight);
            // odometer over the trailing digits
            std::size_t pos = 0;
            while (pos < digits.size()) {
                const Elem old = digits[pos];
                const Elem next = (old + 1) % q;
                const Elem delta = f.sub(next, old);
                const std::size_t r = t + 1 + pos;
                for (std::size_t j = 0; j < n; ++j)
                    if (g.raw(r, j) != 0) word[j] = f.add(word[j], f.mul(delta, g.raw(r, j)));
                digits[pos] = next;
                if (next != 0) break;
                ++pos;
            }
            if (pos == digits.size()) break;
        }
    }
    return best;
}

inline std::size_t distance_by_dependencies(const LinearCode& c) {
    const FieldMatrix h = null_space(c.generator());  // parity-check matrix, (n-k) x n
    const std::size_t n = c.n();
    for (std::size_t w = 1; w <= n; ++w) {
        std::vector<std::size_t> subset(w);
        std::iota(subset.begin(), subset.end(), std::size_t{0});
        while (true) {
            if (rank(select_columns(h, subset)) < w) return w;
            std::size_t i = w;
            while (i > 0 && subset[i - 1] == n - w + i - 1) --i;
            if (i == 0) break;
            ++subset[i - 1];
            for (std::size_t j = i; j < w; ++j) subset[j] = subset[j - 1] + 1;
        }
    }
    fail(errc::verification_failed, "no dependent column set in a parity-check matrix");
}

}  // namespace detail

/// Exact minimum Hamming weight, or TooLargeToEnumerate. The automatic method
/// picks whichever exact route is cheaper and within `cap`.
inline std::size_t min_distance(const LinearCode& c, std::uint64_t cap = default_enumeration_cap(),
                                DistanceMethod method = DistanceMethod::automatic) {
    if (c.k() == 0) detail::fail(errc::empty_code, "the zero code has no minimum distance");
    const std::uint64_t msg_work = detail::codeword_count(c);
    const std::uint64_t dep_work = detail::dependency_work(c);
    const bool msg_ok = msg_work <= cap;
    const bool dep_ok = dep_work <= cap;
    switch (method) {
        case DistanceMethod::enumerate_messages:
            if (!msg_ok) break;
            return detail::distance_by_messages(c);
        case DistanceMethod::column_dependencies:
            if (!dep_ok) break;
            return detail::distance_by_dependencies(c);
        case DistanceMethod::automatic:
            if (msg_ok && (!dep_ok || msg_work <= dep_work)) return detail::distance_by_messages(c);
            if (dep_ok) return detail::distance_by_dependencies(c);
            break;
    }
    detail::fail(errc::too_large_to_enumerate, "[" + std::to_string(c.n()) + ", " + std::to_string(c.k()) + "] code over GF(" +
                                                   std::to_string(c.field().size()) + ") exceeds the enumeration cap of " +
                                                   std::to_string(cap));
}

inline bool is_mds(const LinearCode& c, std::uint64_t cap = default_enumeration_cap()) {
    return min_distance(c, cap) == c.n() - c.k() + 1;
}

}  // namespace hullkit
