#pragma once

// Exact arithmetic in GF(p^e).
//
// Elements are stored by their canonical index: the coefficient vector
// (c_0, ..., c_{e-1}) of the polynomial representative, read as the base-p
// number c_0 + c_1 p + ... + c_{e-1} p^{e-1}. Index 0 is zero, index 1 is one,
// and counting order on indices is the canonical enumeration order.
//
// Field descriptions are interned: make_field(p, e) always returns a handle to
// the same immutable table set, so handles compare by identity and elements
// stay cheap to copy.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "errors.hpp"

namespace hullkit {

/// Largest supported field order p^e.
inline constexpr std::uint64_t kFieldSizeCap = std::uint64_t{1} << 20;

/// Fields up to this order get full addition tables.
inline constexpr std::uint32_t kAddTableLimit = 1024;

using Elem = std::uint32_t;

namespace detail {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Dense polynomials over GF(p), constant term first, no trailing zeros
// (the zero polynomial is the empty vector).
namespace poly {

using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    // p is prime, so a^(p-2) is the inverse.
    std::uint64_t result = 1, base = a % p;
    std::uint32_t exp = p - 2;
    while (exp) {
        if (exp & 1) result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

inline Poly sub(Poly a, const Poly& b, std::uint32_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

inline Poly mod(Poly a, const Poly& m, std::uint32_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint32_t lead_inv = inv_mod(m.back(), p);
    while (a.size() > dm) {
        const std::size_t shift = a.size() - 1 - dm;
        const std::uint64_t factor = std::uint64_t{a.back()} * lead_inv % p;
        for (std::size_t i = 0; i <= dm; ++i)
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - factor * m[i] % p) % p);
        trim(a);
    }
    return a;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    return mod(std::move(r), m, p);
}

inline Poly powmod(Poly base, std::uint64_t exp, const Poly& m, std::uint32_t p) {
    Poly result{1};
    base = mod(std::move(base), m, p);
    while (exp) {
        if (exp & 1) result = mulmod(result, base, m, p);
        base = mulmod(base, base, m, p);
        exp >>= 1;
    }
    return result;
}

inline Poly gcd(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Rabin's test for a monic polynomial of degree e >= 1.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t e = f.size() - 1;
    if (e == 1) return true;
    if (f[0] == 0) return false;
    if (p <= 64) {
        for (std::uint64_t r = 1; r < p; ++r) {
            std::uint64_t acc = 0;
            for (std::size_t i = f.size(); i-- > 0;) acc = (acc * r + f[i]) % p;
            if (acc == 0) return false;
        }
    }
    const Poly x{0, 1};
    // x^{p^i} mod f for i = 0..e
    std::vector<Poly> frob(e + 1);
    frob[0] = mod(x, f, p);
    for (std::size_t i = 1; i <= e; ++i) frob[i] = powmod(frob[i - 1], p, f, p);
    if (sub(frob[e], frob[0], p) != Poly{}) return false;
    for (auto r : prime_factors(e)) {
        Poly g = gcd(f, sub(frob[e / r], frob[0], p), p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace poly

struct FieldData {
    std::uint32_t p = 0;
    std::uint32_t e = 0;
    std::uint32_t size = 0;
    std::vector<std::uint32_t> modulus;  // e + 1 coefficients, monic
    std::vector<std::uint32_t> pow_p;    // p^0 .. p^e
    Elem primitive = 0;
    std::vector<Elem> exp_table;         // length 2 (size - 1)
    std::vector<std::uint32_t> log_table;
    std::vector<Elem> add_table;         // size^2 when size <= kAddTableLimit
    std::vector<Elem> neg_table;

    std::vector<std::uint32_t> digits(Elem a) const {
        std::vector<std::uint32_t> out(e);
        for (std::uint32_t i = 0; i < e; ++i) {
            out[i] = a % p;
            a /= p;
        }
        return out;
    }

    Elem from_digits(const std::vector<std::uint32_t>& d) const {
        Elem out = 0;
        for (std::size_t i = d.size(); i-- > 0;) out = out * p + d[i];
        return out;
    }

    Elem add_slow(Elem a, Elem b) const {
        Elem out = 0;
        for (std::uint32_t i = 0; i < e; ++i) {
            const std::uint32_t da = (a / pow_p[i]) % p;
            const std::uint32_t db = (b / pow_p[i]) % p;
            out += ((da + db) % p) * pow_p[i];
        }
        return out;
    }

    Elem neg_slow(Elem a) const {
        Elem out = 0;
        for (std::uint32_t i = 0; i < e; ++i) {
            const std::uint32_t da = (a / pow_p[i]) % p;
            out += ((p - da) % p) * pow_p[i];
        }
        return out;
    }

    Elem mul_poly(Elem a, Elem b) const {
        poly::Poly pa = digits(a), pb = digits(b);
        poly::trim(pa);
        poly::trim(pb);
        poly::Poly r = poly::mulmod(pa, pb, modulus, p);
        r.resize(e, 0);
        return from_digits(r);
    }

    Elem add(Elem a, Elem b) const {
        if (p == 2) return a ^ b;
        if (!add_table.empty()) return add_table[std::size_t{a} * size + b];
        return add_slow(a, b);
    }
    Elem neg(Elem a) const {
        if (p == 2) return a;
        if (!neg_table.empty()) return neg_table[a];
        return neg_slow(a);
    }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        return exp_table[log_table[a] + log_table[b]];
    }
    Elem inv(Elem a) const {
        if (a == 0) fail(errc::division_by_zero, "inverse of zero");
        const std::uint32_t order = size - 1;
        return exp_table[(order - log_table[a]) % order];
    }
    // a^n with n taken modulo the multiplicative order; 0^0 = 1.
    Elem pow(Elem a, std::uint64_t n) const {
        if (n == 0) return 1;
        if (a == 0) return 0;
        const std::uint64_t order = size - 1;
        return exp_table[static_cast<std::uint32_t>((std::uint64_t{log_table[a]} * (n % order)) % order)];
    }
};

inline std::unique_ptr<FieldData> build_field(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus) {
    auto f = std::make_unique<FieldData>();
    f->p = p;
    f->e = e;
    f->modulus = std::move(modulus);
    f->pow_p.resize(e + 1);
    f->pow_p[0] = 1;
    for (std::uint32_t i = 1; i <= e; ++i) f->pow_p[i] = f->pow_p[i - 1] * p;
    f->size = f->pow_p[e];
    const std::uint32_t q = f->size;
    const std::uint64_t order = q - 1;

    // First element of full multiplicative order in canonical order.
    const auto factors = prime_factors(order);
    Elem g = 1;
    if (order > 1) {
        for (g = 2; g < q; ++g) {
            poly::Poly pg = f->digits(g);
            poly::trim(pg);
            bool primitive = true;
            for (auto r : factors) {
                poly::Poly t = poly::powmod(pg, order / r, f->modulus, p);
                if (t == poly::Poly{1}) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) break;
        }
    }
    f->primitive = g;

    f->exp_table.assign(2 * order + 1, 0);
    f->log_table.assign(q, 0);
    Elem cur = 1;
    for (std::uint64_t i = 0; i < order; ++i) {
        f->exp_table[i] = cur;
        f->log_table[cur] = static_cast<std::uint32_t>(i);
        cur = f->mul_poly(cur, g);
    }
    for (std::uint64_t i = order; i < f->exp_table.size(); ++i) f->exp_table[i] = f->exp_table[i - order];

    if (p != 2) {
        f->neg_table.resize(q);
        for (Elem a = 0; a < q; ++a) f->neg_table[a] = f->neg_slow(a);
        if (q <= kAddTableLimit) {
            f->add_table.resize(std::size_t{q} * q);
            for (Elem a = 0; a < q; ++a)
                for (Elem b = 0; b < q; ++b) f->add_table[std::size_t{a} * q + b] = f->add_slow(a, b);
        }
    }
    return f;
}

class FieldRegistry {
   public:
    static FieldRegistry& instance() {
        static FieldRegistry registry;
        return registry;
    }

    const FieldData* get(std::uint32_t p, std::uint32_t e, const std::vector<std::uint32_t>& modulus) {
        std::lock_guard lock(mutex_);
        auto key = std::make_tuple(p, e, modulus);
        auto it = fields_.find(key);
        if (it != fields_.end()) return it->second.get();
        auto data = build_field(p, e, modulus);
        const FieldData* ptr = data.get();
        fields_.emplace(std::move(key), std::move(data));
        return ptr;
    }

   private:
    std::mutex mutex_;
    std::map<std::tuple<std::uint32_t, std::uint32_t, std::vector<std::uint32_t>>, std::unique_ptr<FieldData>> fields_;
};

inline std::uint64_t checked_power(std::uint64_t p, std::uint64_t e) {
    std::uint64_t q = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        q *= p;
        if (q > kFieldSizeCap) fail(errc::cap_exceeded, "field order exceeds " + std::to_string(kFieldSizeCap));
    }
    return q;
}

}  // namespace detail

class FieldElement;

/// Handle to an interned GF(p^e). Cheap to copy; compares by identity.
class FieldSpec {
   public:
    FieldSpec() = default;
    explicit FieldSpec(const detail::FieldData* data) : data_(data) {}

    std::uint32_t p() const { return data_->p; }
    std::uint32_t e() const { return data_->e; }
    std::uint32_t size() const { return data_->size; }
    const std::vector<std::uint32_t>& modulus() const { return data_->modulus; }

    /// True when the field is GF(q^2) for some q, so conjugation x -> x^q exists.
    bool has_conjugation() const { return data_->e % 2 == 0; }

    /// q for GF(q^2); requires an even extension degree.
    std::uint32_t sub_order() const {
        if (!has_conjugation()) detail::fail(errc::odd_extension, "field GF(" + std::to_string(size()) + ") is not GF(q^2)");
        return data_->pow_p[data_->e / 2];
    }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement element(Elem index) const;
    FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
    FieldElement from_int(std::int64_t value) const;
    /// The first element of full multiplicative order in canonical order.
    FieldElement primitive() const;

    const detail::FieldData& data() const { return *data_; }
    const detail::FieldData* id() const { return data_; }
    bool valid() const { return data_ != nullptr; }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) { return a.data_ == b.data_; }

   private:
    const detail::FieldData* data_ = nullptr;
};

/// GF(p^e) with the lexicographically smallest monic irreducible modulus,
/// coefficients compared constant term first.
inline FieldSpec make_field(std::uint32_t p, std::uint32_t e) {
    if (!detail::is_prime(p)) detail::fail(errc::not_prime, std::to_string(p) + " is not prime");
    if (e == 0) detail::fail(errc::bad_field, "extension degree must be positive");
    const std::uint64_t q = detail::checked_power(p, e);

    std::vector<std::uint32_t> modulus(e + 1, 0);
    modulus[e] = 1;
    for (std::uint64_t idx = 0; idx < q; ++idx) {
        std::uint64_t rest = idx;
        for (std::uint32_t i = e; i-- > 0;) {
            modulus[e - 1 - i] = static_cast<std::uint32_t>(rest / detail::checked_power(p, i));
            rest %= detail::checked_power(p, i);
        }
        if (detail::poly::is_irreducible(modulus, p))
            return FieldSpec(detail::FieldRegistry::instance().get(p, e, modulus));
    }
    detail::fail(errc::bad_field, "no irreducible polynomial found");  // unreachable for prime p
}

/// GF(p^e) with a caller-supplied monic modulus (used when reading files).
inline FieldSpec make_field_with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
    if (!detail::is_prime(p)) detail::fail(errc::not_prime, std::to_string(p) + " is not prime");
    if (modulus.size() < 2) detail::fail(errc::bad_field, "modulus must have degree >= 1");
    const auto e = static_cast<std::uint32_t>(modulus.size() - 1);
    detail::checked_power(p, e);
    for (auto c : modulus)
        if (c >= p) detail::fail(errc::bad_field, "modulus coefficient out of range");
    if (modulus.back() != 1) detail::fail(errc::bad_field, "modulus must be monic");
    if (!detail::poly::is_irreducible(modulus, p)) detail::fail(errc::bad_field, "modulus is reducible");
    return FieldSpec(detail::FieldRegistry::instance().get(p, e, modulus));
}

/// GF(q^2) for a prime power q.
inline FieldSpec make_hermitian_field(std::uint32_t q) {
    if (q < 2) detail::fail(errc::bad_field, "q must be a prime power >= 2");
    std::uint32_t p = 0;
    for (std::uint32_t d = 2; d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    std::uint32_t e = 0, rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) detail::fail(errc::bad_field, std::to_string(q) + " is not a prime power");
    return make_field(p, 2 * e);
}

class FieldElement {
   public:
    FieldElement() = default;
    FieldElement(const detail::FieldData* field, Elem value) : field_(field), value_(value) {}

    FieldSpec field() const { return FieldSpec(field_); }
    Elem index() const { return value_; }
    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }
    /// Polynomial coefficients, constant term first, always length e.
    std::vector<std::uint32_t> coeffs() const { return field_->digits(value_); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        a.check(b);
        return {a.field_, a.field_->add(a.value_, b.value_)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        a.check(b);
        return {a.field_, a.field_->sub(a.value_, b.value_)};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        a.check(b);
        return {a.field_, a.field_->mul(a.value_, b.value_)};
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        a.check(b);
        return {a.field_, a.field_->mul(a.value_, b.field_->inv(b.value_))};
    }
    FieldElement operator-() const { return {field_, field_->neg(value_)}; }
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field_ == b.field_ && a.value_ == b.value_;
    }

    FieldElement pow(std::uint64_t n) const { return {field_, field_->pow(value_, n)}; }

   private:
    void check(const FieldElement& o) const {
        if (field_ != o.field_) detail::fail(errc::spec_mismatch, "operands belong to different fields");
    }

    const detail::FieldData* field_ = nullptr;
    Elem value_ = 0;
};

inline FieldElement FieldSpec::zero() const { return {data_, 0}; }
inline FieldElement FieldSpec::one() const { return {data_, 1}; }
inline FieldElement FieldSpec::element(Elem index) const {
    if (index >= size()) detail::fail(errc::bad_index, "element index " + std::to_string(index) + " out of range");
    return {data_, index};
}
inline FieldElement FieldSpec::from_coeffs(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() > e()) detail::fail(errc::bad_field, "too many coefficients for GF(" + std::to_string(size()) + ")");
    std::vector<std::uint32_t> d(e(), 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] >= p()) detail::fail(errc::bad_field, "coefficient out of range");
        d[i] = coeffs[i];
    }
    return {data_, data_->from_digits(d)};
}
inline FieldElement FieldSpec::from_int(std::int64_t value) const {
    const std::int64_t pp = p();
    const auto r = static_cast<std::uint32_t>(((value % pp) + pp) % pp);
    return {data_, r};
}
inline FieldElement FieldSpec::primitive() const { return {data_, data_->primitive}; }

inline FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }
inline FieldElement sub(const FieldElement& a, const FieldElement& b) { return a - b; }
inline FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }
inline FieldElement neg(const FieldElement& a) { return -a; }
inline FieldElement inv(const FieldElement& a) { return a.field().one() / a; }

/// a^{p^l}; l is reduced modulo e.
inline FieldElement frobenius(const FieldElement& a, std::uint64_t l) {
    const auto& f = a.field().data();
    std::uint64_t exponent = 1;
    for (std::uint64_t i = 0; i < l % f.e; ++i) exponent *= f.p;
    return a.pow(exponent);
}

/// a^q in GF(q^2).
inline FieldElement conj(const FieldElement& a) { return a.pow(a.field().sub_order()); }

/// Membership in the subfield GF(q) of GF(q^2).
inline bool in_subfield(const FieldElement& a) { return conj(a) == a; }

/// a^{q+1}, which lies in GF(q).
inline FieldElement norm(const FieldElement& a) {
    const FieldElement n = a.pow(std::uint64_t{a.field().sub_order()} + 1);
    if (!in_subfield(n)) detail::fail(errc::verification_failed, "norm left the subfield");
    return n;
}

/// All elements in canonical (counting) order.
inline std::vector<FieldElement> enumerate(const FieldSpec& spec) {
    std::vector<FieldElement> out;
    out.reserve(spec.size());
    for (Elem i = 0; i < spec.size(); ++i) out.push_back(spec.element(i));
    return out;
}

/// `count` nonzero elements whose (p^l + 1)-th power is not one: the first
/// qualifying elements in canonical order, cycling once they run out.
inline std::vector<FieldElement> find_twisted_norm_non_one(const FieldSpec& spec, std::uint64_t l, std::size_t count) {
    std::uint64_t exponent = 1;
    for (std::uint64_t i = 0; i < l % spec.e(); ++i) exponent *= spec.p();
    exponent += 1;
    std::vector<FieldElement> qualifying;
    for (Elem i = 1; i < spec.size() && qualifying.size() < count; ++i) {
        const FieldElement a = spec.element(i);
        if (!a.pow(exponent).is_one()) qualifying.push_back(a);
    }
    if (count > 0 && qualifying.empty())
        detail::fail(errc::no_such_element, "every nonzero element has x^" + std::to_string(exponent) + " = 1");
    std::vector<FieldElement> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(qualifying[i % qualifying.size()]);
    return out;
}

/// `count` nonzero elements of GF(q^2) with norm != 1.
inline std::vector<FieldElement> find_norm_non_one(const FieldSpec& spec, std::size_t count) {
    if (spec.sub_order() < 3) detail::fail(errc::no_such_element, "GF(4) has no element of norm != 1");
    return find_twisted_norm_non_one(spec, spec.e() / 2, count);
}

/// First v in canonical order with norm(v) = w.
inline FieldElement norm_preimage(const FieldElement& w) {
    if (w.is_zero()) detail::fail(errc::zero_input, "zero has no nonzero norm preimage");
    const FieldSpec spec = w.field();
    if (!in_subfield(w)) detail::fail(errc::bad_field, "norm preimage requested for an element outside GF(q)");
    const std::uint64_t exponent = std::uint64_t{spec.sub_order()} + 1;
    for (Elem i = 1; i < spec.size(); ++i) {
        const FieldElement v = spec.element(i);
        if (v.pow(exponent) == w) return v;
    }
    detail::fail(errc::verification_failed, "norm is not surjective");  // unreachable
}

}  // namespace hullkit
