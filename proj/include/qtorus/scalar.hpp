#pragma once

/**
 * @file scalar.hpp
 * Coefficient fields for the quantum-torus library.
 *
 * Everything above this layer is generic over a `coefficient_field`: a field
 * that knows how to produce integer powers of s = q^(1/2).  Two models ship:
 *
 *  - QHalfScalar: the exact rational-function field Q(s).  Elements are kept
 *    as a canonical fraction num/den of integer polynomials in s, so equality
 *    is structural and every identity check is exact.
 *  - EvalScalar: Q with s frozen at a chosen rational point.  Same interface,
 *    so the whole verification stack can run as a fast numeric preview; a
 *    numeric mismatch is a guaranteed symbolic mismatch (the converse is what
 *    the exact field is for).
 *
 * A scalar equal to q^k has s-exponent 2k; odd s-exponents are genuine
 * half-integer powers of q (they appear in the normalization of the
 * root-vector line B_{1,r}).
 */

#include "polynomial.hpp"

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace qtorus {

template <class S>
concept coefficient_field =
    std::regular<S> && requires(const S a, const S b, long k) {
        { S::zero() } -> std::same_as<S>;
        { S::one() } -> std::same_as<S>;
        { S::from_int(k) } -> std::same_as<S>;
        { S::s_power(k) } -> std::same_as<S>;
        { a + b } -> std::same_as<S>;
        { a - b } -> std::same_as<S>;
        { a * b } -> std::same_as<S>;
        { a / b } -> std::same_as<S>;
        { -a } -> std::same_as<S>;
        { a.inverse() } -> std::same_as<S>;
        { a.is_zero() } -> std::same_as<bool>;
        { a.is_one() } -> std::same_as<bool>;
        { a.to_text() } -> std::same_as<std::string>;
        { a.text_atomic() } -> std::same_as<bool>;
    };

/**
 * Exact element of Q(s), s = q^(1/2).
 *
 * Canonical form (unique per field value, so operator== is field equality):
 *  - num, den in Z[s] with den != 0;
 *  - num and den share no polynomial factor;
 *  - gcd(content(num), content(den)) = 1;
 *  - den has positive leading coefficient;
 *  - zero is 0/1.
 */
class QHalfScalar {
public:
    QHalfScalar() : num_(), den_(Int(1)) {}

    static QHalfScalar zero() { return {}; }
    static QHalfScalar one() { return from_int(1); }

    static QHalfScalar from_int(long v) {
        return QHalfScalar(IntPoly(Int(v)), IntPoly(Int(1)), canonical_tag{});
    }

    static QHalfScalar from_bigint(Int v) {
        return QHalfScalar(IntPoly(std::move(v)), IntPoly(Int(1)), canonical_tag{});
    }

    /// s^k = q^(k/2), any integer k.
    static QHalfScalar s_power(long k) {
        if (k >= 0)
            return QHalfScalar(IntPoly::monomial(static_cast<std::size_t>(k)),
                               IntPoly(Int(1)), canonical_tag{});
        return QHalfScalar(IntPoly(Int(1)),
                           IntPoly::monomial(static_cast<std::size_t>(-k)),
                           canonical_tag{});
    }

    /// num/den as given; reduced to canonical form.  Throws on zero denominator.
    static QHalfScalar from_fraction(IntPoly num, IntPoly den) {
        if (den.is_zero())
            throw std::domain_error("QHalfScalar: zero denominator");
        QHalfScalar r;
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        r.canonicalize();
        return r;
    }

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }

    friend bool operator==(const QHalfScalar&, const QHalfScalar&) = default;

    friend QHalfScalar operator+(const QHalfScalar& a, const QHalfScalar& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        return from_fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend QHalfScalar operator-(const QHalfScalar& a, const QHalfScalar& b) {
        if (b.is_zero()) return a;
        return from_fraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }

    QHalfScalar operator-() const {
        QHalfScalar r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend QHalfScalar operator*(const QHalfScalar& a, const QHalfScalar& b) {
        if (a.is_zero() || b.is_zero()) return {};
        // Cross-reduce before multiplying: keeps the gcd arguments small and
        // the products near-canonical.
        IntPoly g1 = IntPoly::gcd(a.num_, b.den_);
        IntPoly g2 = IntPoly::gcd(b.num_, a.den_);
        IntPoly n1 = exact_quotient(a.num_, g1);
        IntPoly d2 = exact_quotient(b.den_, g1);
        IntPoly n2 = exact_quotient(b.num_, g2);
        IntPoly d1 = exact_quotient(a.den_, g2);
        return from_fraction(n1 * n2, d1 * d2);
    }

    friend QHalfScalar operator/(const QHalfScalar& a, const QHalfScalar& b) {
        return a * b.inverse();
    }

    QHalfScalar inverse() const {
        if (is_zero())
            throw std::domain_error("QHalfScalar: inverse of zero");
        QHalfScalar r;
        r.num_ = den_;
        r.den_ = num_;
        if (r.den_.leading() < 0) {
            r.num_ = -r.num_;
            r.den_ = -r.den_;
        }
        return r;
    }

    /**
     * Evaluate at s = s0 (exact rational arithmetic).  Throws when s0 is a
     * pole of this scalar; s0 = 0 is a pole of any negative q-power.
     */
    Rational eval_at(const Rational& s0) const {
        Rational d = den_.eval(s0);
        if (d == 0)
            throw std::domain_error("QHalfScalar: evaluation at a pole");
        return num_.eval(s0) / d;
    }

    /**
     * Human-readable q-expression.  Powers of q are printed directly
     * ("q^2 - q^-2", "q^(1/2)"); a non-monomial denominator is printed as a
     * parenthesized fraction.  Deterministic: terms in descending q-power.
     */
    std::string to_text() const {
        if (is_zero()) return "0";
        const std::size_t v = den_.valuation();
        const IntPoly d = den_.shifted_down(v);
        std::string numtext = laurent_text(num_, -static_cast<long>(v));
        if (d == IntPoly(Int(1))) return numtext;
        if (d.is_constant()) {
            const std::string dt = d.leading().str();
            if (laurent_nnz(num_) == 1) return numtext + "/" + dt;
            return "(" + numtext + ")/" + dt;
        }
        return "(" + numtext + ")/(" + laurent_text(d, 0) + ")";
    }

    /// True when to_text() is a single product term (usable unparenthesized).
    bool text_atomic() const {
        if (is_zero()) return true;
        return laurent_nnz(num_) == 1 && den_.shifted_down(den_.valuation()).is_constant();
    }

private:
    IntPoly num_;
    IntPoly den_;

    struct canonical_tag {};
    QHalfScalar(IntPoly n, IntPoly d, canonical_tag)
        : num_(std::move(n)), den_(std::move(d)) {}

    static IntPoly exact_quotient(const IntPoly& a, const IntPoly& b) {
        IntPoly q;
        if (!IntPoly::divide_exact(a, b, q))
            throw std::logic_error("QHalfScalar: inexact division during reduction");
        return q;
    }

    void canonicalize() {
        if (num_.is_zero()) {
            den_ = IntPoly(Int(1));
            return;
        }
        IntPoly g = IntPoly::gcd(num_, den_);
        if (!(g == IntPoly(Int(1)))) {
            num_ = exact_quotient(num_, g);
            den_ = exact_quotient(den_, g);
        }
        const Int cn = num_.content();
        const Int cd = den_.content();
        const Int c = boost::multiprecision::gcd(cn, cd);
        if (c > 1) {
            num_ = exact_quotient(num_, IntPoly(c));
            den_ = exact_quotient(den_, IntPoly(c));
        }
        if (den_.leading() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    static std::size_t laurent_nnz(const IntPoly& p) {
        std::size_t n = 0;
        for (const auto& c : p.coeffs())
            if (c != 0) ++n;
        return n;
    }

    /// Render p * s^shift as a q-expression, descending exponents.
    static std::string laurent_text(const IntPoly& p, long shift) {
        std::string out;
        for (std::size_t i = p.coeffs().size(); i-- > 0;) {
            const Int& c = p.coeffs()[i];
            if (c == 0) continue;
            const long e = static_cast<long>(i) + shift;
            const bool negative = c < 0;
            if (out.empty()) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            Int mag = negative ? Int(-c) : c;
            const std::string pw = q_power_text(e);
            if (mag == 1 && !pw.empty())
                out += pw;
            else {
                out += mag.str();
                if (!pw.empty()) out += "·" + pw;
            }
        }
        return out;
    }

    /// "q^3", "q", "q^(1/2)", "q^-2", ... ; empty for e = 0 (s-exponent e).
    static std::string q_power_text(long e) {
        if (e == 0) return "";
        if (e % 2 == 0) {
            const long h = e / 2;
            if (h == 1) return "q";
            return "q^" + std::to_string(h);
        }
        return "q^(" + std::to_string(e) + "/2)";
    }
};

/**
 * Q with s frozen at a fixed nonzero rational point, for fast numeric
 * previews of the verification suites.  Set the point once via
 * set_eval_point() before constructing any values.
 */
class EvalScalar {
public:
    EvalScalar() : v_(0) {}

    /// Choose the evaluation point s0 != 0 (shared by all EvalScalar values).
    static void set_eval_point(Rational s0) {
        if (s0 == 0)
            throw std::domain_error("EvalScalar: evaluation point must be nonzero");
        point() = std::move(s0);
    }

    static const Rational& eval_point() { return point(); }

    static EvalScalar zero() { return {}; }
    static EvalScalar one() { return from_int(1); }
    static EvalScalar from_int(long v) {
        EvalScalar r;
        r.v_ = v;
        return r;
    }

    static EvalScalar s_power(long k) {
        const Rational& s0 = point();
        if (s0 == 0)
            throw std::domain_error("EvalScalar: evaluation point not set");
        EvalScalar r;
        r.v_ = 1;
        Rational base = k >= 0 ? s0 : Rational(1) / s0;
        for (long i = 0, n = k >= 0 ? k : -k; i < n; ++i) r.v_ *= base;
        return r;
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    friend bool operator==(const EvalScalar&, const EvalScalar&) = default;

    friend EvalScalar operator+(EvalScalar a, const EvalScalar& b) { a.v_ += b.v_; return a; }
    friend EvalScalar operator-(EvalScalar a, const EvalScalar& b) { a.v_ -= b.v_; return a; }
    friend EvalScalar operator*(EvalScalar a, const EvalScalar& b) { a.v_ *= b.v_; return a; }

    friend EvalScalar operator/(EvalScalar a, const EvalScalar& b) {
        if (b.is_zero())
            throw std::domain_error("EvalScalar: division by zero");
        a.v_ /= b.v_;
        return a;
    }

    EvalScalar operator-() const {
        EvalScalar r = *this;
        r.v_ = -r.v_;
        return r;
    }

    EvalScalar inverse() const {
        if (is_zero())
            throw std::domain_error("EvalScalar: inverse of zero");
        EvalScalar r;
        r.v_ = Rational(1) / v_;
        return r;
    }

    const Rational& value() const { return v_; }

    std::string to_text() const {
        return v_.str();
    }

    bool text_atomic() const { return true; }

private:
    Rational v_;

    static Rational& point() {
        static Rational s0{0};
        return s0;
    }
};

static_assert(coefficient_field<QHalfScalar>);
static_assert(coefficient_field<EvalScalar>);

/// q^k as a scalar (k may be negative).
template <coefficient_field S>
S q_power(long k) {
    return S::s_power(2 * k);
}

/// The balanced q-integer [n]_q = q^(n-1) + q^(n-3) + ... + q^(1-n), n >= 0.
template <coefficient_field S>
S q_int(long n) {
    if (n < 0)
        throw std::invalid_argument("q_int: negative index");
    S acc = S::zero();
    for (long j = 0; j < n; ++j) acc = acc + S::s_power(2 * (n - 1 - 2 * j));
    return acc;
}

/// 1 when m is even, else 0.
template <coefficient_field S>
S parity_indicator(long m) {
    return S::from_int(m % 2 == 0 ? 1 : 0);
}

/// q - q^-1, the ubiquitous normalization factor.
template <coefficient_field S>
S q_minus_inv() {
    return S::s_power(2) - S::s_power(-2);
}

}  // namespace qtorus
