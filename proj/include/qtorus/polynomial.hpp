#pragma once

/**
 * @file polynomial.hpp
 * Dense univariate polynomials over arbitrary-precision integers.
 *
 * These are the building blocks of the exact coefficient field Q(s): a scalar
 * is a quotient of two IntPoly values in the formal variable s.  Only
 * non-negative exponents are stored; negative powers of s live in the
 * denominator of the enclosing fraction.
 *
 * The coefficient vector is kept normalized (no trailing zero limbs), so the
 * zero polynomial is the empty vector and degree() of zero is -1.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qtorus {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class IntPoly {
public:
    /// Zero polynomial.
    IntPoly() = default;

    /// Constant polynomial.
    explicit IntPoly(Int constant) {
        if (constant != 0) coeff_.push_back(std::move(constant));
    }

    /// c * s^k.
    static IntPoly monomial(std::size_t k, Int c = Int(1)) {
        IntPoly p;
        if (c != 0) {
            p.coeff_.assign(k + 1, Int(0));
            p.coeff_[k] = std::move(c);
        }
        return p;
    }

    /// Build from low-to-high coefficient list, e.g. {-1, 0, 1} = s^2 - 1.
    static IntPoly from_coeffs(std::vector<Int> ascending) {
        IntPoly p;
        p.coeff_ = std::move(ascending);
        p.trim();
        return p;
    }

    bool is_zero() const { return coeff_.empty(); }

    /// Degree; -1 for the zero polynomial.
    std::ptrdiff_t degree() const {
        return static_cast<std::ptrdiff_t>(coeff_.size()) - 1;
    }

    /// Lowest exponent with a nonzero coefficient; 0 for the zero polynomial.
    std::size_t valuation() const {
        for (std::size_t i = 0; i < coeff_.size(); ++i)
            if (coeff_[i] != 0) return i;
        return 0;
    }

    /// Coefficient of s^k (zero beyond the stored range).
    const Int& operator[](std::size_t k) const {
        static const Int kZero{0};
        return k < coeff_.size() ? coeff_[k] : kZero;
    }

    /// Leading coefficient; 0 for the zero polynomial.
    const Int& leading() const {
        static const Int kZero{0};
        return coeff_.empty() ? kZero : coeff_.back();
    }

    /// True when exactly one coefficient is nonzero (c * s^k, c != 0).
    bool is_monomial() const {
        return !coeff_.empty() && valuation() == coeff_.size() - 1;
    }

    bool is_constant() const { return coeff_.size() <= 1; }

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    IntPoly& operator+=(const IntPoly& rhs) {
        if (coeff_.size() < rhs.coeff_.size()) coeff_.resize(rhs.coeff_.size());
        for (std::size_t i = 0; i < rhs.coeff_.size(); ++i) coeff_[i] += rhs.coeff_[i];
        trim();
        return *this;
    }

    IntPoly& operator-=(const IntPoly& rhs) {
        if (coeff_.size() < rhs.coeff_.size()) coeff_.resize(rhs.coeff_.size());
        for (std::size_t i = 0; i < rhs.coeff_.size(); ++i) coeff_[i] -= rhs.coeff_[i];
        trim();
        return *this;
    }

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }

    IntPoly operator-() const {
        IntPoly r = *this;
        for (auto& c : r.coeff_) c = -c;
        return r;
    }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        IntPoly r;
        r.coeff_.assign(a.coeff_.size() + b.coeff_.size() - 1, Int(0));
        // Schoolbook with zero-skipping: operands here are usually sparse
        // (q-powers are monomials), so iterating only nonzero limbs matters.
        for (std::size_t i = 0; i < a.coeff_.size(); ++i) {
            if (a.coeff_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeff_.size(); ++j) {
                if (b.coeff_[j] == 0) continue;
                r.coeff_[i + j] += a.coeff_[i] * b.coeff_[j];
            }
        }
        r.trim();
        return r;
    }

    friend IntPoly operator*(IntPoly a, const Int& c) {
        if (c == 0) return {};
        for (auto& x : a.coeff_) x *= c;
        return a;
    }

    /// Multiply by s^k.
    IntPoly shifted_up(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        IntPoly r;
        r.coeff_.assign(coeff_.size() + k, Int(0));
        for (std::size_t i = 0; i < coeff_.size(); ++i) r.coeff_[i + k] = coeff_[i];
        return r;
    }

    /// Divide by s^k; requires valuation() >= k.
    IntPoly shifted_down(std::size_t k) const {
        if (k == 0) return *this;
        if (valuation() < k && !is_zero())
            throw std::logic_error("IntPoly: shift below valuation");
        IntPoly r;
        if (coeff_.size() > k)
            r.coeff_.assign(coeff_.begin() + static_cast<std::ptrdiff_t>(k), coeff_.end());
        return r;
    }

    /// gcd of all coefficients, >= 0; zero for the zero polynomial.
    Int content() const {
        Int g{0};
        for (const auto& c : coeff_) {
            if (c == 0) continue;
            g = boost::multiprecision::gcd(g, c);
            if (g == 1) break;
        }
        return g;
    }

    /// this / content(); the zero polynomial stays zero.
    IntPoly primitive_part() const {
        Int c = content();
        if (c == 0 || c == 1) return *this;
        IntPoly r;
        if (!divide_exact(*this, IntPoly(c), r))
            throw std::logic_error("IntPoly: content division failed");
        return r;
    }

    /**
     * Exact division in Z[s]: on success writes a/b to q and returns true.
     * Returns false when b does not divide a (or b is zero).
     */
    static bool divide_exact(const IntPoly& a, const IntPoly& b, IntPoly& q) {
        if (b.is_zero()) return false;
        if (a.is_zero()) {
            q = IntPoly{};
            return true;
        }
        if (a.degree() < b.degree()) return false;
        IntPoly rem = a;
        const std::size_t qsize = a.coeff_.size() - b.coeff_.size() + 1;
        std::vector<Int> qc(qsize, Int(0));
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            Int step, r;
            boost::multiprecision::divide_qr(rem.leading(), b.leading(), step, r);
            if (r != 0) return false;
            const std::size_t shift =
                static_cast<std::size_t>(rem.degree() - b.degree());
            qc[shift] = step;
            for (std::size_t i = 0; i < b.coeff_.size(); ++i)
                rem.coeff_[i + shift] -= step * b.coeff_[i];
            rem.trim();
        }
        if (!rem.is_zero()) return false;
        q = from_coeffs(std::move(qc));
        return true;
    }

    /**
     * Content-aware gcd, normalized to positive leading coefficient:
     * gcd(content) * gcd(primitive parts) via the primitive PRS.
     * gcd(0, b) = |b| up to sign normalization; gcd(0, 0) = 0.
     */
    static IntPoly gcd(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero()) return normalize_sign(b);
        if (b.is_zero()) return normalize_sign(a);

        // Common s-power first: it both shrinks the operands and is the whole
        // answer's monomial part.  Scalars in this library are dominated by
        // q-power monomials, so this fast path carries most calls.
        const std::size_t v = std::min(a.valuation(), b.valuation());
        const Int c = boost::multiprecision::gcd(a.content(), b.content());

        if (a.is_monomial() || b.is_monomial())
            return monomial(v, c);

        IntPoly pa = a.shifted_down(a.valuation()).primitive_part();
        IntPoly pb = b.shifted_down(b.valuation()).primitive_part();
        if (pa.degree() < pb.degree()) std::swap(pa, pb);
        while (!pb.is_zero()) {
            if (pb.is_constant()) {
                pa = IntPoly(Int(1));
                break;
            }
            IntPoly r = pseudo_rem(pa, pb);
            pa = std::move(pb);
            pb = r.primitive_part();
        }
        IntPoly g = normalize_sign(pa);
        if (g.is_constant()) g = IntPoly(Int(1));
        return g.shifted_up(v) * c;
    }

    /// Horner evaluation at a rational point.
    Rational eval(const Rational& x) const {
        Rational acc{0};
        for (std::size_t i = coeff_.size(); i-- > 0;) {
            acc *= x;
            acc += Rational(coeff_[i]);
        }
        return acc;
    }

    /// Low-to-high coefficient access for serialization.
    const std::vector<Int>& coeffs() const { return coeff_; }

private:
    std::vector<Int> coeff_;

    void trim() {
        while (!coeff_.empty() && coeff_.back() == 0) coeff_.pop_back();
    }

    static IntPoly normalize_sign(IntPoly p) {
        if (p.leading() < 0) return -p;
        return p;
    }

    /// lc(b)^k * a mod b for some k; only used inside the primitive PRS,
    /// where the result is immediately reduced to its primitive part.
    static IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
        const Int& lcb = b.leading();
        while (!a.is_zero() && a.degree() >= b.degree()) {
            const std::size_t shift =
                static_cast<std::size_t>(a.degree() - b.degree());
            IntPoly t = b.shifted_up(shift) * a.leading();
            a = a * lcb - t;
        }
        return a;
    }
};

}  // namespace qtorus
