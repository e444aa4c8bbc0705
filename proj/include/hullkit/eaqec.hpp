#pragma once

// Entanglement-assisted quantum code parameters derived from classical codes
// with a known Hermitian hull, the quantum Singleton classification, and the
// formula-level parameter families of the MDS EAQEC table.
//
// From an [n, k, d]_{q^2} code with h-dimensional Hermitian hull and dual
// distance d':
//     [[n, k - h, d, n - k - h]]_q   and   [[n, n - k - h, d', k - h]]_q.
// The bound 2d + k <= n + c + 2 is only stated for d <= (n + 2)/2; records
// outside that gate are never labelled MDS or non-MDS.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "grs_forge.hpp"
#include "hull_dial.hpp"

namespace hullkit {

enum class SingletonClass { mds, not_mds, gate_failed };

inline std::string to_string(SingletonClass s) {
    switch (s) {
        case SingletonClass::mds: return "yes";
        case SingletonClass::not_mds: return "no";
        case SingletonClass::gate_failed: return "n/a";
    }
    return "?";
}

inline bool singleton_gate(std::int64_t n, std::int64_t d) { return 2 * d <= n + 2; }

inline SingletonClass classify(std::int64_t n, std::int64_t k, std::int64_t d, std::int64_t c) {
    if (!singleton_gate(n, d)) return SingletonClass::gate_failed;
    return 2 * d + k == n + c + 2 ? SingletonClass::mds : SingletonClass::not_mds;
}

struct Provenance {
    std::vector<std::string> families;    // formula families, in table order
    bool witnessed = false;               // backed by an explicit classical code
    std::string witness_digest;           // hex digest of the witness code
    std::optional<std::size_t> hull_dim;  // hull dimension used for the derivation
    bool distance_verified = true;        // false when distances were assumed, not enumerated
};

struct EaqecParams {
    std::int64_t q = 0;
    std::int64_t n = 0;
    std::int64_t k_q = 0;
    std::int64_t d = 0;
    std::int64_t c = 0;
    SingletonClass mds = SingletonClass::gate_failed;
    Provenance source;

    bool gate() const { return singleton_gate(n, d); }
    bool satisfies_bound() const { return !gate() || 2 * d + k_q <= n + c + 2; }
    bool same_parameters(const EaqecParams& o) const {
        return q == o.q && n == o.n && k_q == o.k_q && d == o.d && c == o.c;
    }
};

inline EaqecParams make_params(std::int64_t q, std::int64_t n, std::int64_t k_q, std::int64_t d, std::int64_t c) {
    EaqecParams p{q, n, k_q, d, c, classify(n, k_q, d, c), {}};
    return p;
}

/// Short stable digest of a code (field, shape, generator entries).
inline std::string code_digest(const LinearCode& code) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(code.field().p());
    for (auto c : code.field().modulus()) mix(c);
    mix(code.n());
    mix(code.k());
    for (auto v : code.generator().raw_data()) mix(v);
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

enum class DistancePolicy {
    exact,                  // enumerate or throw TooLargeToEnumerate
    assume_mds_when_large,  // fall back to d = n-k+1, d' = k+1 and mark unverified
};

/// Both parameter sets derived from a code over GF(q^2). If `asserted_h` is
/// given it must equal the measured Hermitian hull dimension.
inline std::pair<EaqecParams, EaqecParams> eaqec_from_code(const LinearCode& c, std::optional<std::size_t> asserted_h = {},
                                                           std::uint64_t cap = default_enumeration_cap(),
                                                           DistancePolicy policy = DistancePolicy::exact) {
    const std::int64_t q = c.field().sub_order();
    const std::size_t h = hull(c, DualKind::hermitian()).dim;
    if (asserted_h && *asserted_h != h)
        detail::fail(errc::hull_mismatch, "asserted hull dimension " + std::to_string(*asserted_h) + " but measured " +
                                              std::to_string(h));
    const std::int64_t n = c.n(), k = c.k(), hh = h;
    std::int64_t d = 0, d_dual = 0;
    bool verified = true;
    try {
        d = min_distance(c, cap);
        d_dual = min_distance(hermitian_dual(c), cap);
    } catch (const hullkit_error& err) {
        if (err.code() != errc::too_large_to_enumerate || policy == DistancePolicy::exact) throw;
        d = n - k + 1;
        d_dual = k + 1;
        verified = false;
    }
    EaqecParams first = make_params(q, n, k - hh, d, n - k - hh);
    EaqecParams second = make_params(q, n, n - k - hh, d_dual, k - hh);
    for (auto* p : {&first, &second}) {
        p->source.witnessed = verified;
        p->source.witness_digest = code_digest(c);
        p->source.hull_dim = h;
        p->source.distance_verified = verified;
    }
    return {first, second};
}

struct DialedEaqec {
    EaqecParams params;  // [[n, n-k-l, d', k-l]]
    DialResult dial;     // the witness with hull dimension l
};

/// Lowers the hull to l (any l up to the measured hull dimension) and derives
/// [[n, n - k - l, d', k - l]] from the resulting witness.
inline DialedEaqec eaqec_from_dial(const LinearCode& c, std::size_t l, const LambdaSource& source = LambdaSource::canonical(),
                                   std::uint64_t cap = default_enumeration_cap(), DistancePolicy policy = DistancePolicy::exact) {
    DialResult dial = reduce_hull(c, l, source);
    EaqecParams params = eaqec_from_code(dial.code, l, cap, policy).second;
    return {std::move(params), std::move(dial)};
}

/// One record for every l = 0..h, h the measured hull dimension of c.
inline std::vector<DialedEaqec> eaqec_sweep(const LinearCode& c, const LambdaSource& source = LambdaSource::canonical(),
                                            std::uint64_t cap = default_enumeration_cap(),
                                            DistancePolicy policy = DistancePolicy::exact) {
    const std::size_t h = hull(c, DualKind::hermitian()).dim;
    std::vector<DialedEaqec> out;
    for (std::size_t l = 0; l <= h; ++l) out.push_back(eaqec_from_dial(c, l, source, cap, policy));
    return out;
}

struct QeccParams {
    std::int64_t q = 0;
    std::int64_t n = 0;
    std::int64_t k_q = 0;
    std::int64_t d = 0;
    bool mds = false;  // 2d + k = n + 2
};

/// [[n, n - 2k, d']]_q from a Hermitian self-orthogonal [n, k] code.
inline QeccParams qecc_from_self_orthogonal(const LinearCode& c, std::uint64_t cap = default_enumeration_cap()) {
    if (!is_hermitian_self_orthogonal(c)) detail::fail(errc::not_self_orthogonal, "QECC needs a Hermitian self-orthogonal code");
    QeccParams out;
    out.q = c.field().sub_order();
    out.n = c.n();
    out.k_q = static_cast<std::int64_t>(c.n()) - 2 * static_cast<std::int64_t>(c.k());
    out.d = min_distance(hermitian_dual(c), cap);
    out.mds = 2 * out.d + out.k_q == out.n + 2;
    return out;
}

struct TableLimits {
    std::size_t max_rows = std::numeric_limits<std::size_t>::max();
    bool include_generic = true;
    std::int64_t generic_max_n = 0;  // 0 means q^2 + 1
};

namespace detail {

inline bool is_power_of_two(std::int64_t x) { return x > 0 && (x & (x - 1)) == 0; }

inline std::int64_t ilog2(std::int64_t x) {
    std::int64_t r = 0;
    while (x > 1) {
        x >>= 1;
        ++r;
    }
    return r;
}

inline bool is_prime_power(std::int64_t q) {
    if (q < 2) return false;
    std::int64_t p = 2;
    while (q % p != 0) ++p;
    while (q % p == 0) q /= p;
    return q == 1;
}

class TableBuilder {
   public:
    explicit TableBuilder(std::int64_t q) : q_(q) {}

    void add(const std::string& family, std::int64_t n, std::int64_t k_q, std::int64_t d, std::int64_t c) {
        if (n < 1 || k_q < 0 || c < 0 || d < 1 || !singleton_gate(n, d)) return;
        EaqecParams p = make_params(q_, n, k_q, d, c);
        for (auto& existing : rows_)
            if (existing.same_parameters(p)) {
                auto& fams = existing.source.families;
                if (std::find(fams.begin(), fams.end(), family) == fams.end()) fams.push_back(family);
                return;
            }
        p.source.families.push_back(family);
        p.source.distance_verified = false;
        rows_.push_back(std::move(p));
    }

    /// Rows grouped by the family that first produced them, in table order,
    /// then ordered by (n, k_q, d, c).
    std::vector<EaqecParams> take() {
        std::vector<std::string> order;
        for (const auto& r : rows_)
            if (std::find(order.begin(), order.end(), r.source.families.front()) == order.end())
                order.push_back(r.source.families.front());
        auto rank = [&](const EaqecParams& r) {
            return std::find(order.begin(), order.end(), r.source.families.front()) - order.begin();
        };
        std::stable_sort(rows_.begin(), rows_.end(), [&](const EaqecParams& a, const EaqecParams& b) {
            return std::tuple(rank(a), a.n, a.k_q, a.d, a.c) < std::tuple(rank(b), b.n, b.k_q, b.d, b.c);
        });
        return std::move(rows_);
    }

   private:
    std::int64_t q_;
    std::vector<EaqecParams> rows_;
};

}  // namespace detail

/// Formula-level reproduction of every table family whose side conditions
/// hold for q. Duplicate parameter sets are merged; their provenance lists
/// every family that produced them.
inline std::vector<EaqecParams> enumerate_table1(std::int64_t q, const TableLimits& limits = {}) {
    if (q < 3 || !detail::is_prime_power(q)) detail::fail(errc::bad_field, "table needs a prime power q >= 3");
    const std::int64_t qq = q * q;
    detail::TableBuilder table(q);

    // [q^2+1, k] self-orthogonal codes, 1 <= k <= q, k != q-1
    for (std::int64_t k = 1; k <= q; ++k) {
        if (k == q - 1) continue;
        for (std::int64_t h = 0; h <= k; ++h) table.add("q2plus1", qq + 1, qq + 1 - k - h, k + 1, k - h);
    }
    // characteristic 2, q = 2^r with r >= 3 odd
    if (detail::is_power_of_two(q) && detail::ilog2(q) >= 3 && detail::ilog2(q) % 2 == 1)
        for (std::int64_t h = 0; h <= q - 1; ++h) table.add("q2plus1-char2", qq + 1, qq + 2 - q - h, q, q - 1 - h);
    // n = q^2 - 1 - t(q-1) - u(q+1), q odd
    if (q % 2 == 1)
        for (std::int64_t k = 1; k <= q - 1; ++k)
            for (std::int64_t t = 1; t <= (q + 1) / 2; ++t) {
                if (((q + 1) / 2) % t != 0) continue;
                for (std::int64_t u = 1; 1 + u * (q + 1) <= (q - k) * q - 1; ++u) {
                    const std::int64_t n = qq - 1 - t * (q - 1) - u * (q + 1);
                    for (std::int64_t h = 0; h <= k; ++h) table.add("punctured", n, n - k - h, k + 1, k - h);
                }
            }
    // n = q^2 - s, 0 <= s <= q/2 - 1, q/2 <= k <= q - s - 1
    for (std::int64_t s = 0; 2 * s <= q - 2; ++s)
        for (std::int64_t k = (q + 1) / 2; k <= q - s - 1; ++k)
            for (std::int64_t h = 0; h <= k; ++h) table.add("q2-minus-s", qq - s, qq - s - k - h, k + 1, k - h);
    // n = (q^2+1)/5, q = 20m+3 or 20m+7
    if (q % 20 == 3 || q % 20 == 7)
        for (std::int64_t k = 1; k <= (q + 3) / 2; ++k)
            for (std::int64_t h = 0; h <= k; ++h) {
                const std::int64_t n = (qq + 1) / 5;
                table.add("q2plus1-over5", n, n - k - h, k + 1, k - h);
            }
    // n = 2t(q-1), 8 | q+1, t | q+1 odd
    if ((q + 1) % 8 == 0)
        for (std::int64_t t = 1; t <= q + 1; t += 2) {
            if ((q + 1) % t != 0) continue;
            for (std::int64_t k = 1; k <= 6 * t - 2; ++k)
                for (std::int64_t h = 0; h <= k; ++h) {
                    const std::int64_t n = 2 * t * (q - 1);
                    table.add("2t-q-minus-1", n, n - k - h, k + 1, k - h);
                }
        }
    // union of two subgroups, m1 < m2 coprime odd divisors of q+1
    for (std::int64_t m1 = 1; m1 <= q + 1; m1 += 2) {
        if ((q + 1) % m1 != 0) continue;
        for (std::int64_t m2 = m1 + 2; m2 <= q + 1; m2 += 2) {
            if ((q + 1) % m2 != 0 || detail::gcd(m1, m2) != 1) continue;
            const std::int64_t n = (qq - 1) / m1 + (qq - 1) / m2 - (qq - 1) / (m1 * m2);
            for (std::int64_t k = 1; 2 * k <= q - 1; ++k)
                for (std::int64_t h = 0; h <= k; ++h) table.add("coset-union", n, n - k - h, k + 1, k - h);
        }
    }
    // n = (q^2-1)/m, q odd, m >= 6 even divisor of q-1
    if (q % 2 == 1)
        for (std::int64_t m = 6; m <= q - 1; m += 2) {
            if ((q - 1) % m != 0) continue;
            const std::int64_t n = (qq - 1) / m;
            for (std::int64_t k = 1; 2 * k <= q + 1 + 2 * ((q - 1) / m) - 2; ++k)
                for (std::int64_t h = 0; h <= k; ++h) table.add("even-subgroup", n, n - k - h, k + 1, k - h);
        }
    // any length: a GRS code with its hull lowered to 0
    if (limits.include_generic) {
        const std::int64_t max_n = limits.generic_max_n > 0 ? std::min(limits.generic_max_n, qq + 1) : qq + 1;
        for (std::int64_t n = 2; n <= max_n; ++n)
            for (std::int64_t k = 1; 2 * k <= n; ++k) table.add("generic", n, n - k, k + 1, k);
    }

    auto rows = table.take();
    if (rows.size() > limits.max_rows) rows.resize(limits.max_rows);
    return rows;
}

struct Verdict {
    enum class Status { pass, fail, gate_not_applicable };
    Status status = Status::pass;
    bool mds = false;
    std::vector<std::string> failures;
    std::optional<std::size_t> witness_hull;
    std::optional<EaqecParams> recomputed;  // the witness-derived set matching the claim's c, if any
};

inline std::string to_string(Verdict::Status s) {
    switch (s) {
        case Verdict::Status::pass: return "pass";
        case Verdict::Status::fail: return "fail";
        case Verdict::Status::gate_not_applicable: return "gate-not-applicable";
    }
    return "?";
}

/// Arithmetic check of the quantum Singleton relation, plus full
/// recomputation from a witness code when one is supplied.
inline Verdict verify_claim(const EaqecParams& params, const std::optional<LinearCode>& witness = {},
                            std::uint64_t cap = default_enumeration_cap()) {
    Verdict v;
    if (params.n < 1 || params.k_q < 0 || params.d < 1 || params.c < 0) v.failures.push_back("parameters out of range");
    const bool gate = params.gate();
    if (gate) {
        const std::int64_t lhs = 2 * params.d + params.k_q, rhs = params.n + params.c + 2;
        if (lhs > rhs)
            v.failures.push_back("bound violated: 2d + k = " + std::to_string(lhs) + " > n + c + 2 = " + std::to_string(rhs));
        v.mds = lhs == rhs;
    }
    if (witness) {
        try {
            if (witness->field().sub_order() != params.q) v.failures.push_back("witness field does not match q");
            if (static_cast<std::int64_t>(witness->n()) != params.n) v.failures.push_back("witness length does not match n");
            if (v.failures.empty()) {
                auto [first, second] = eaqec_from_code(*witness, std::nullopt, cap);
                v.witness_hull = first.source.hull_dim;
                if (second.same_parameters(params))
                    v.recomputed = second;
                else if (first.same_parameters(params))
                    v.recomputed = first;
                else
                    v.failures.push_back("witness yields [[" + std::to_string(second.n) + "," + std::to_string(second.k_q) + "," +
                                         std::to_string(second.d) + "," + std::to_string(second.c) + "]] / [[" +
                                         std::to_string(first.n) + "," + std::to_string(first.k_q) + "," +
                                         std::to_string(first.d) + "," + std::to_string(first.c) + "]]");
            }
        } catch (const hullkit_error& err) {
            v.failures.push_back(err.what());
        }
    }
    if (!v.failures.empty())
        v.status = Verdict::Status::fail;
    else
        v.status = gate ? Verdict::Status::pass : Verdict::Status::gate_not_applicable;
    return v;
}

/// Outcome of looking for a witnessed MDS EAQEC code with c > 0 at one length.
struct LengthSearch {
    std::size_t n = 0;
    std::optional<DialedEaqec> record;
    std::vector<std::string> log;  // one line per attempted (k, route)
};

/// GRS codes of length n over GF(q^2) (extended when n = q^2 + 1): first a
/// Hermitian self-orthogonal one via the multiplier solver, dialed below k;
/// otherwise a unit-multiplier code with its hull lowered to 0.
inline LengthSearch mds_eaqec_for_length(const FieldSpec& field, std::size_t n, std::uint64_t seed = kDefaultSeed,
                                         std::uint64_t budget = kDefaultSearchBudget,
                                         std::uint64_t cap = default_enumeration_cap()) {
    const std::size_t qq = field.size();
    if (n < 2 || n > qq + 1) detail::fail(errc::bad_dimension, "length must lie in [2, q^2 + 1]");
    LengthSearch out;
    out.n = n;
    const bool extended = n == qq + 1;
    auto points = enumerate(field);
    points.resize(extended ? qq : n);

    auto accept = [&](const DialedEaqec& r) {
        return r.params.c > 0 && r.params.mds == SingletonClass::mds && r.params.source.distance_verified;
    };
    for (std::size_t k = 1; 2 * k <= n; ++k) {
        MultiplierProblem problem{points, k, extended};
        SolveOutcome solved = solve_multipliers(field, problem, seed, budget);
        out.log.push_back("k=" + std::to_string(k) + " self-orthogonal: " + to_string(solved.status) + " (nullity " +
                          std::to_string(solved.nullity) + ", " + std::to_string(solved.attempts) + " candidates)");
        if (solved.grs) {
            LinearCode code = grs_generator(*solved.grs);
            auto r = eaqec_from_dial(code, k - 1, LambdaSource::canonical(), cap);
            if (accept(r)) {
                out.record = std::move(r);
                return out;
            }
        }
    }
    for (std::size_t k = 1; 2 * k <= n; ++k) {
        GrsSpec plain{field, points, WeightVector::ones(field, n), k, extended};
        LinearCode code = grs_generator(plain);
        auto r = eaqec_from_dial(code, 0, LambdaSource::canonical(), cap);
        out.log.push_back("k=" + std::to_string(k) + " unit multipliers, hull lowered to 0: [[" + std::to_string(r.params.n) +
                          "," + std::to_string(r.params.k_q) + "," + std::to_string(r.params.d) + "," +
                          std::to_string(r.params.c) + "]] mds=" + to_string(r.params.mds));
        if (accept(r)) {
            out.record = std::move(r);
            return out;
        }
    }
    return out;
}

/// Tab-separated rows with a header line, LF line endings.
inline std::string to_tsv(const std::vector<EaqecParams>& rows) {
    std::ostringstream os;
    os << "q\tn\tk_q\td\tc\tfamily\twitnessed\tmds\tgate\n";
    for (const auto& r : rows) {
        std::string fam;
        for (std::size_t i = 0; i < r.source.families.size(); ++i) fam += (i ? "," : "") + r.source.families[i];
        if (fam.empty()) fam = r.source.witnessed ? "witness" : "-";
        os << r.q << '\t' << r.n << '\t' << r.k_q << '\t' << r.d << '\t' << r.c << '\t' << fam << '\t'
           << (r.source.witnessed ? "yes" : "no") << '\t' << to_string(r.mds) << '\t' << (r.gate() ? "pass" : "failed")
           << '\n';
    }
    return os.str();
}

}  // namespace hullkit
