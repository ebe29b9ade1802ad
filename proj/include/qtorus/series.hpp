#pragma once

/**
 * @file series.hpp
 * Truncated formal power series in a central indeterminate t with
 * torus-element coefficients.
 *
 * A series of order N stores its coefficients c_0 … c_N and all arithmetic is
 * performed modulo t^(N+1).  t commutes with everything, so the Cauchy
 * product only multiplies coefficients (left factors stay on the left).
 *
 * exp and log use the standard formal recurrences
 *     n·B_n = Σ_{k=1}^{n} k·A_k·B_{n−k}        (B = exp A, B_0 = 1)
 *     L_n   = A_n − (1/n)·Σ_{k=1}^{n−1} k·L_k·A_{n−k}   (L = log A)
 * which are valid when the coefficients pairwise commute.  That precondition
 * is *checked*, not assumed: the generating functions this library feeds in
 * have commuting coefficients for a substantive reason, and the check is a
 * computational re-proof of that fact at each truncation order.
 */

#include "torus.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qtorus {

template <class Elem>
class TruncatedSeries {
public:
    using scalar_type = typename Elem::scalar_type;

    /// The zero series of the given truncation order.
    explicit TruncatedSeries(std::size_t order) : c_(order + 1) {}

    /// The constant series 1.
    static TruncatedSeries unit_series(std::size_t order) {
        TruncatedSeries s(order);
        s.c_[0] = Elem::unit();
        return s;
    }

    /**
     * Geometric expansion 1/(1 − m·t) = Σ m^n·t^n for a single-term m.
     * Powers of a multi-term element would blow up combinatorially and are
     * never needed; rejected as a usage error.
     */
    static TruncatedSeries geometric(const Elem& m, std::size_t order) {
        if (m.term_count() != 1)
            throw std::invalid_argument(
                "TruncatedSeries::geometric: expansion base must be a single term");
        TruncatedSeries s(order);
        s.c_[0] = Elem::unit();
        for (std::size_t n = 1; n <= order; ++n) s.c_[n] = s.c_[n - 1] * m;
        return s;
    }

    std::size_t order() const { return c_.size() - 1; }
    const std::vector<Elem>& coeffs() const { return c_; }

    const Elem& operator[](std::size_t n) const { return c_.at(n); }
    Elem& operator[](std::size_t n) { return c_.at(n); }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
        check_orders(a, b);
        for (std::size_t n = 0; n < a.c_.size(); ++n) a.c_[n] += b.c_[n];
        return a;
    }

    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
        check_orders(a, b);
        for (std::size_t n = 0; n < a.c_.size(); ++n) a.c_[n] -= b.c_[n];
        return a;
    }

    /// Cauchy product at fixed truncation; factor order is preserved.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        check_orders(a, b);
        TruncatedSeries r(a.order());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j < b.c_.size(); ++j) {
                if (b.c_[j].is_zero()) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    friend TruncatedSeries operator*(const scalar_type& c, TruncatedSeries a) {
        for (auto& e : a.c_) e = c * e;
        return a;
    }

    /// Multiply by the scalar polynomial (1 − c·t^k).
    TruncatedSeries poly_factor(const scalar_type& c, std::size_t k) const {
        TruncatedSeries r = *this;
        if (k == 0)
            throw std::invalid_argument("TruncatedSeries::poly_factor: k must be >= 1");
        for (std::size_t n = c_.size(); n-- > k;) r.c_[n] -= c * c_[n - k];
        return r;
    }

    /// True when all coefficient pairs commute in the torus.
    bool coefficients_commute() const {
        for (std::size_t i = 0; i + 1 < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (std::size_t j = i + 1; j < c_.size(); ++j)
                if (!commute(c_[i], c_[j])) return false;
        }
        return true;
    }

    /// exp of a series with zero constant term and commuting coefficients.
    TruncatedSeries exp() const {
        if (!c_[0].is_zero())
            throw std::domain_error("TruncatedSeries::exp: constant term must be zero");
        require_commuting("exp");
        TruncatedSeries b(order());
        b.c_[0] = Elem::unit();
        for (std::size_t n = 1; n < c_.size(); ++n) {
            Elem acc;
            for (std::size_t k = 1; k <= n; ++k)
                acc += scalar_type::from_int(static_cast<long>(k)) *
                       (c_[k] * b.c_[n - k]);
            b.c_[n] = scalar_type::from_int(static_cast<long>(n)).inverse() * acc;
        }
        return b;
    }

    /// log of a series with unit constant term and commuting coefficients.
    TruncatedSeries log() const {
        if (!(c_[0] == Elem::unit()))
            throw std::domain_error("TruncatedSeries::log: constant term must be one");
        require_commuting("log");
        TruncatedSeries l(order());
        for (std::size_t n = 1; n < c_.size(); ++n) {
            Elem acc;
            for (std::size_t k = 1; k < n; ++k)
                acc += scalar_type::from_int(static_cast<long>(k)) *
                       (l.c_[k] * c_[n - k]);
            l.c_[n] = c_[n] - scalar_type::from_int(static_cast<long>(n)).inverse() * acc;
        }
        return l;
    }

private:
    std::vector<Elem> c_;

    static void check_orders(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.c_.size() != b.c_.size())
            throw std::invalid_argument("TruncatedSeries: truncation orders differ");
    }

    void require_commuting(const char* op) const {
        if (!coefficients_commute())
            throw std::domain_error(std::string("TruncatedSeries::") + op +
                                    ": coefficients do not pairwise commute");
    }

    /// Prefer the element's own commutativity fast path when it has one.
    static bool commute(const Elem& a, const Elem& b) {
        if constexpr (requires { { a.commutes_with(b) } -> std::convertible_to<bool>; })
            return a.commutes_with(b);
        else
            return a * b == b * a;
    }
};

/**
 * The Θ′ generating function as a truncated product:
 *   (1 − q²t²)(1 − q⁻²t²) / ((1−xyt)(1−yxt)(1−x⁻¹y⁻¹t)(1−y⁻¹x⁻¹t)).
 * The four geometric factors live in the commutative z-line, so their order
 * is immaterial.  Coefficient of t^n is (q − q⁻¹)·Θ′_n.
 */
template <coefficient_field S, int R = 2>
TruncatedSeries<BasicTorusElement<S, R>> theta_prime_product_series(std::size_t order) {
    using Elem = BasicTorusElement<S, R>;
    using Ser = TruncatedSeries<Elem>;
    const Ser g = Ser::geometric(Elem::x() * Elem::y(), order) *
                  Ser::geometric(Elem::y() * Elem::x(), order) *
                  Ser::geometric(Elem::x_inv() * Elem::y_inv(), order) *
                  Ser::geometric(Elem::y_inv() * Elem::x_inv(), order);
    return g.poly_factor(q_power<S>(2), 2).poly_factor(q_power<S>(-2), 2);
}

/**
 * The Θ generating function: numerator (1 − t²)(1 − q²t²) over the same four
 * geometric factors.  Coefficient of t^n is (q − q⁻¹)·Θ_n.
 */
template <coefficient_field S, int R = 2>
TruncatedSeries<BasicTorusElement<S, R>> theta_product_series(std::size_t order) {
    using Elem = BasicTorusElement<S, R>;
    using Ser = TruncatedSeries<Elem>;
    const Ser g = Ser::geometric(Elem::x() * Elem::y(), order) *
                  Ser::geometric(Elem::y() * Elem::x(), order) *
                  Ser::geometric(Elem::x_inv() * Elem::y_inv(), order) *
                  Ser::geometric(Elem::y_inv() * Elem::x_inv(), order);
    return g.poly_factor(S::one(), 2).poly_factor(q_power<S>(2), 2);
}

}  // namespace qtorus
