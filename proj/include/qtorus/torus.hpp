#pragma once

/**
 * @file torus.hpp
 * Exact arithmetic in the quantum torus T_q.
 *
 * T_q is generated by invertible x, y subject to the relation x·y = q²·y·x.
 * The monomials x^a y^b (a, b ∈ Z) form a basis, and every product is
 * renormalized into it on the spot: moving y^(b1) across x^(a2) costs
 * q^(−2·b1·a2), which is the single twist convention everything else in the
 * library is derived from.
 *
 * BasicTorusElement carries the relation exponent as a template parameter
 * (x·y = q^R·y·x, default R = 2).  The only intended use of a non-default R
 * is negative control: the verification suites instantiated over the
 * corrupted algebra R = −2 must detect that its q-Dolan–Grady identities
 * fail, demonstrating the checks are sensitive to the twist.
 */

#include "scalar.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace qtorus {

/// Basis symbol x^a y^b; (0,0) is the unit.  Ordered lexicographically.
struct Monomial {
    std::int64_t a = 0;
    std::int64_t b = 0;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

template <coefficient_field S, int RelPow = 2>
class BasicTorusElement {
public:
    using scalar_type = S;
    static constexpr int relation_power = RelPow;

    /// The zero element.
    BasicTorusElement() = default;

    static BasicTorusElement zero() { return {}; }
    static BasicTorusElement unit() { return single(0, 0); }

    /// c·x^a·y^b (the zero element when c = 0).
    static BasicTorusElement single(std::int64_t a, std::int64_t b, S c = S::one()) {
        BasicTorusElement u;
        if (!c.is_zero()) u.terms_.emplace(Monomial{a, b}, std::move(c));
        return u;
    }

    static BasicTorusElement from_scalar(S c) { return single(0, 0, std::move(c)); }

    static BasicTorusElement x() { return single(1, 0); }
    static BasicTorusElement y() { return single(0, 1); }
    static BasicTorusElement x_inv() { return single(-1, 0); }
    static BasicTorusElement y_inv() { return single(0, -1); }

    /// The symmetrized generators w_0 = x + x⁻¹ and w_1 = y + y⁻¹.
    static BasicTorusElement w(int i) {
        if (i == 0) return x() + x_inv();
        if (i == 1) return y() + y_inv();
        throw std::invalid_argument("BasicTorusElement::w: index must be 0 or 1");
    }

    /**
     * z^k for z = q·y·x = q⁻¹·x·y; in the standard basis z^k = q^(−k²)·x^k·y^k.
     * The z-line spans a commutative subalgebra.
     */
    static BasicTorusElement z_power(std::int64_t k) {
        return single(k, k, S::s_power(-2 * k * k));
    }

    /**
     * Normalize a product of two basis symbols:
     *   x^(a1)y^(b1) · x^(a2)y^(b2) = q^(−R·b1·a2) · x^(a1+a2) y^(b1+b2).
     */
    static std::pair<S, Monomial> mono_mul(const Monomial& m1, const Monomial& m2) {
        return {S::s_power(-2 * RelPow * m1.b * m2.a),
                Monomial{m1.a + m2.a, m1.b + m2.b}};
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, S>& terms() const { return terms_; }

    /// Coefficient of x^a y^b (zero when absent).
    S coeff(std::int64_t a, std::int64_t b) const {
        auto it = terms_.find(Monomial{a, b});
        return it == terms_.end() ? S::zero() : it->second;
    }

    friend bool operator==(const BasicTorusElement&, const BasicTorusElement&) = default;

    BasicTorusElement& operator+=(const BasicTorusElement& rhs) {
        for (const auto& [m, c] : rhs.terms_) add_term(m, c);
        return *this;
    }

    BasicTorusElement& operator-=(const BasicTorusElement& rhs) {
        for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
        return *this;
    }

    friend BasicTorusElement operator+(BasicTorusElement a, const BasicTorusElement& b) {
        return a += b;
    }
    friend BasicTorusElement operator-(BasicTorusElement a, const BasicTorusElement& b) {
        return a -= b;
    }

    BasicTorusElement operator-() const {
        BasicTorusElement r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    friend BasicTorusElement operator*(const S& c, const BasicTorusElement& u) {
        if (c.is_zero()) return {};
        BasicTorusElement r = u;
        for (auto& [m, x] : r.terms_) x = c * x;
        return r;
    }
    friend BasicTorusElement operator*(const BasicTorusElement& u, const S& c) {
        return c * u;
    }

    friend BasicTorusElement operator*(const BasicTorusElement& u,
                                       const BasicTorusElement& v) {
        BasicTorusElement r;
        for (const auto& [m1, c1] : u.terms_)
            for (const auto& [m2, c2] : v.terms_) {
                auto [tw, m] = mono_mul(m1, m2);
                r.add_term(m, c1 * c2 * tw);
            }
        return r;
    }

    BasicTorusElement& operator*=(const BasicTorusElement& v) {
        *this = *this * v;
        return *this;
    }

    /**
     * Exact commutativity test.  Two monomials x^a1·y^b1 and x^a2·y^b2 commute
     * exactly when b1·a2 = b2·a1 (the twists picked up on either side agree),
     * so pairwise-commuting supports settle the question with integer
     * arithmetic only; otherwise fall back to comparing the two products.
     */
    bool commutes_with(const BasicTorusElement& v) const {
        bool pairwise = true;
        for (const auto& [m1, c1] : terms_) {
            for (const auto& [m2, c2] : v.terms_) {
                if (static_cast<__int128>(m1.b) * m2.a != static_cast<__int128>(m2.b) * m1.a) {
                    pairwise = false;
                    break;
                }
            }
            if (!pairwise) break;
        }
        if (pairwise) return true;
        return *this * v == v * *this;
    }

    /**
     * Two-sided inverse; defined only for a single-term element c·x^a·y^b
     * (the invertible elements this library ever needs).
     */
    BasicTorusElement inverse() const {
        if (terms_.size() != 1)
            throw std::invalid_argument(
                "BasicTorusElement::inverse: only single-term elements are invertible");
        const auto& [m, c] = *terms_.begin();
        return single(-m.a, -m.b, c.inverse() * S::s_power(-2 * RelPow * m.a * m.b));
    }

    /// u^n; n < 0 requires a single-term element.
    BasicTorusElement pow(std::int64_t n) const {
        if (n < 0) return inverse().pow(-n);
        BasicTorusElement r = unit();
        for (std::int64_t i = 0; i < n; ++i) r *= *this;
        return r;
    }

    /**
     * Deterministic text form: terms sorted by (a, b) ascending, joined with
     * explicit signs, e.g. "(-1 + q^-4)·x^-1·y^-1 + (-1 + q^-4)·x·y".
     */
    std::string to_text() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            std::string t = term_text(m, c);
            if (out.empty()) {
                out = std::move(t);
            } else if (t.starts_with('-')) {
                out += " - " + t.substr(1);
            } else {
                out += " + " + t;
            }
        }
        return out;
    }

private:
    std::map<Monomial, S> terms_;

    void add_term(const Monomial& m, S c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, std::move(c));
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    static std::string power_text(const char* sym, std::int64_t e) {
        if (e == 0) return {};
        std::string out = sym;
        if (e != 1) out += "^" + std::to_string(e);
        return out;
    }

    static std::string term_text(const Monomial& m, const S& c) {
        std::string powers = power_text("x", m.a);
        {
            std::string py = power_text("y", m.b);
            if (!powers.empty() && !py.empty()) powers += "·";
            powers += py;
        }
        if (powers.empty()) return c.to_text();
        if (c.is_one()) return powers;
        if ((-c).is_one()) return "-" + powers;
        if (c.text_atomic()) return c.to_text() + "·" + powers;
        return "(" + c.to_text() + ")·" + powers;
    }
};

/// [u, v] = uv − vu.
template <coefficient_field S, int R>
BasicTorusElement<S, R> commutator(const BasicTorusElement<S, R>& u,
                                   const BasicTorusElement<S, R>& v) {
    return u * v - v * u;
}

/// [u, v]_r = r·uv − r⁻¹·vu; r must be nonzero.
template <coefficient_field S, int R>
BasicTorusElement<S, R> commutator(const BasicTorusElement<S, R>& u,
                                   const BasicTorusElement<S, R>& v, const S& r) {
    if (r.is_zero())
        throw std::domain_error("commutator: twist parameter must be nonzero");
    return r * (u * v) - r.inverse() * (v * u);
}

using TorusElement = BasicTorusElement<QHalfScalar>;

}  // namespace qtorus
