#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include <qtorus/scalar.hpp>
#include <qtorus/series.hpp>
#include <qtorus/torus.hpp>

namespace qtorus {

/**
 * Constructs the distinguished element families of the quantum torus by two
 * independent routes:
 *
 *  - the defining recursions (seeded by the degree-one generators w0, w1) and,
 *    for the H family, the logarithm of the theta generating series;
 *  - closed standard-basis formulas.
 *
 * Agreement of the two routes for every family and index is the central
 * correctness property this library verifies.
 *
 * Recursive results are memoized per builder.  A builder is not synchronized;
 * confine each instance to a single thread (distinct builders are independent).
 */
template <coefficient_field S, int RelPow = 2>
class FamilyBuilder {
public:
    using Elem = BasicTorusElement<S, RelPow>;
    using Series = TruncatedSeries<Elem>;

    // ---- generators and fixed low-degree elements -------------------------

    static Elem w(int i) { return Elem::w(i); }

    /// q^-2·w1·w0 - w0·w1, the first diagonal element of the B family.
    static Elem b_delta() {
        const Elem w0 = Elem::w(0);
        const Elem w1 = Elem::w(1);
        return q_power<S>(-2) * (w1 * w0) - w0 * w1;
    }

    /// (q^2·w0·w1 - w1·w0) / (q·(q-q^-1)^2); equals theta(1) by either route.
    static Elem theta_one_from_generators() {
        const Elem w0 = Elem::w(0);
        const Elem w1 = Elem::w(1);
        const S d = q_power<S>(1) * q_minus_inv<S>() * q_minus_inv<S>();
        return (q_power<S>(2) * (w0 * w1) - w1 * w0) * d.inverse();
    }

    // ---- recursive / definitional routes ----------------------------------

    /// B(n·delta + alpha0): seeds w0 and w1 + q·[B_delta, w0]/((q-q^-1)(q^2-q^-2)),
    /// then steps by two in n with the same bracket.  Requires n >= 0.
    Elem b_alpha0_recursive(std::int64_t n) {
        require_nonnegative(n, "b_alpha0_recursive");
        return alpha_recursive(alpha0_, n, /*plus=*/true);
    }

    /// B(n·delta + alpha1): mirror recursion with the opposite bracket sign.
    Elem b_alpha1_recursive(std::int64_t n) {
        require_nonnegative(n, "b_alpha1_recursive");
        return alpha_recursive(alpha1_, n, /*plus=*/false);
    }

    /**
     * B(n·delta), the diagonal family.  B(0·delta) is the scalar q^-2 - 1;
     * for n >= 1,
     *   B(n·delta) = q^-2·B((n-1)delta+alpha1)·w0 - w0·B((n-1)delta+alpha1)
     *                + (q^-2 - 1)·sum_{l=0}^{n-2} B(l·delta+alpha1)·B((n-l-2)delta+alpha1).
     * Requires n >= 0.
     */
    Elem b_ndelta_recursive(std::int64_t n) {
        require_nonnegative(n, "b_ndelta_recursive");
        if (auto it = ndelta_.find(n); it != ndelta_.end()) return it->second;
        Elem result;
        if (n == 0) {
            result = Elem::from_scalar(q_power<S>(-2) - S::one());
        } else {
            const Elem w0 = Elem::w(0);
            const Elem a = b_alpha1_recursive(n - 1);
            result = q_power<S>(-2) * (a * w0) - w0 * a;
            Elem sum;
            for (std::int64_t l = 0; l + 2 <= n; ++l)
                sum += b_alpha1_recursive(l) * b_alpha1_recursive(n - l - 2);
            result += (q_power<S>(-2) - S::one()) * sum;
        }
        return ndelta_.emplace(n, std::move(result)).first->second;
    }

    /**
     * B(1,r) for any integer r, by the three-term recursion
     *   B(1,r) = B(1,r-2) + [theta(1), B(1,r-1)]/(q+q^-1)
     * run forward from the seeds B(1,0) = w1/(q^(1/2)(q-q^-1)) and
     * B(1,-1) = w0/(q^(1/2)(q-q^-1)), and backward via its rearrangement
     *   B(1,r) = B(1,r+2) - [theta(1), B(1,r+1)]/(q+q^-1).
     */
    Elem b1r_recursive(std::int64_t r) {
        if (auto it = b1r_.find(r); it != b1r_.end()) return it->second;
        Elem result;
        if (r == 0) {
            result = Elem::w(1) * b1_normalizer_inverse();
        } else if (r == -1) {
            result = Elem::w(0) * b1_normalizer_inverse();
        } else {
            const S step = (q_power<S>(1) + q_power<S>(-1)).inverse();
            if (r >= 1) {
                result = b1r_recursive(r - 2) +
                         commutator(theta_one_from_generators(), b1r_recursive(r - 1)) * step;
            } else {
                result = b1r_recursive(r + 2) -
                         commutator(theta_one_from_generators(), b1r_recursive(r + 1)) * step;
            }
        }
        return b1r_.emplace(r, std::move(result)).first->second;
    }

    /// theta'(n) = -q·B(n·delta)/(q-q^-1)^2 for n >= 0; zero for n < 0.
    Elem theta_prime_definitional(std::int64_t n) {
        if (n < 0) return Elem::zero();
        const S d = q_minus_inv<S>() * q_minus_inv<S>();
        return b_ndelta_recursive(n) * (-(q_power<S>(1) * d.inverse()));
    }

    /**
     * theta(n) from theta'(n) by the even-degree correction
     *   theta(n) = theta'(n) - [n even]·q^(1-n)
     *              - sum_{l=1}^{floor((n-1)/2)} (q^2-1)·q^(-2l)·theta'(n-2l)
     * for n >= 1; theta(0) = theta'(0) = 1/(q-q^-1); zero for n < 0.
     */
    Elem theta_definitional(std::int64_t n) {
        if (n < 0) return Elem::zero();
        if (n == 0) return theta_prime_definitional(0);
        Elem result = theta_prime_definitional(n);
        result -= Elem::from_scalar(parity_indicator<S>(n) * q_power<S>(1 - n));
        const S qsq = q_power<S>(2) - S::one();
        for (std::int64_t l = 1; 2 * l <= n - 1; ++l)
            result -= (qsq * q_power<S>(-2 * l)) * theta_prime_definitional(n - 2 * l);
        return result;
    }

    /// The truncated series (q-q^-1)·sum theta'(n)·t^n from the definitional route.
    Series theta_prime_series_definitional(std::int64_t order) {
        Series s(static_cast<std::size_t>(require_nonnegative(order, "theta_prime_series_definitional")));
        for (std::int64_t k = 0; k <= order; ++k)
            s[static_cast<std::size_t>(k)] = q_minus_inv<S>() * theta_prime_definitional(k);
        return s;
    }

    /// The truncated series (q-q^-1)·sum theta(n)·t^n from the definitional route.
    Series theta_series_definitional(std::int64_t order) {
        Series s(static_cast<std::size_t>(require_nonnegative(order, "theta_series_definitional")));
        for (std::int64_t k = 0; k <= order; ++k)
            s[static_cast<std::size_t>(k)] = q_minus_inv<S>() * theta_definitional(k);
        return s;
    }

    /**
     * H'(n) as the t^n coefficient of log of the theta' series, divided by
     * (q-q^-1).  The truncation order defaults to n and must be >= n.
     * Requires n >= 1.
     */
    Elem h_prime_from_series(std::int64_t n, std::int64_t order = -1) {
        return h_coefficient(hp_log_, /*prime=*/true, n, order);
    }

    /// H(n) from the logarithm of the theta series; same contract as h_prime_from_series.
    Elem h_from_series(std::int64_t n, std::int64_t order = -1) {
        return h_coefficient(h_log_, /*prime=*/false, n, order);
    }

    // ---- closed standard-basis routes -------------------------------------

    /// q^(-n(n+1))·(x^(n+1)·y^n + x^(-n-1)·y^(-n)); requires n >= 0.
    static Elem b_alpha0_closed(std::int64_t n) {
        require_nonnegative(n, "b_alpha0_closed");
        return q_power<S>(-n * (n + 1)) *
               (Elem::single(n + 1, n) + Elem::single(-n - 1, -n));
    }

    /// q^(-n(n+1))·(x^n·y^(n+1) + x^(-n)·y^(-n-1)); requires n >= 0.
    static Elem b_alpha1_closed(std::int64_t n) {
        require_nonnegative(n, "b_alpha1_closed");
        return q_power<S>(-n * (n + 1)) *
               (Elem::single(n, n + 1) + Elem::single(-n, -n - 1));
    }

    /**
     * (q^-2 - 1)·( q^(-n^2)·[n+1]·(x^n·y^n + x^(-n)·y^(-n))
     *              + sum_{l=1}^{n-1} (q^(n-2l)+q^(2l-n))·q^(-(n-2l)^2)·x^(n-2l)·y^(n-2l) )
     * for n >= 1; the scalar q^-2 - 1 for n = 0.  Requires n >= 0.
     */
    static Elem b_ndelta_closed(std::int64_t n) {
        require_nonnegative(n, "b_ndelta_closed");
        if (n == 0) return Elem::from_scalar(q_power<S>(-2) - S::one());
        return (q_power<S>(-2) - S::one()) * diagonal_core(n);
    }

    /// q^(-r(r+1))·(x^r·y^(r+1) + x^(-r)·y^(-r-1)) / (q^(1/2)·(q-q^-1)), any r.
    static Elem b1r_closed(std::int64_t r) {
        return (q_power<S>(-r * (r + 1)) * b1_normalizer_inverse()) *
               (Elem::single(r, r + 1) + Elem::single(-r, -r - 1));
    }

    /// The diagonal closed form of theta'(n); zero for n < 0, scalar 1/(q-q^-1) at n = 0.
    static Elem theta_prime_closed(std::int64_t n) {
        if (n < 0) return Elem::zero();
        if (n == 0) return Elem::from_scalar(q_minus_inv<S>().inverse());
        return diagonal_core(n) * q_minus_inv<S>().inverse();
    }

    /**
     * The diagonal closed form of theta(n):
     *   q^(-n^2)·[n+1]·(x^n·y^n + x^(-n)·y^(-n))/(q-q^-1)
     *   + ((q+q^-1)/(q-q^-1))·q^(1-n)·sum_{l=1}^{n-1} q^(-(n-2l)^2)·x^(n-2l)·y^(n-2l)
     * for n >= 1; zero for n < 0; scalar 1/(q-q^-1) at n = 0.
     */
    static Elem theta_closed(std::int64_t n) {
        if (n < 0) return Elem::zero();
        if (n == 0) return Elem::from_scalar(q_minus_inv<S>().inverse());
        Elem result = (q_power<S>(-n * n) * q_int<S>(n + 1)) *
                      (Elem::single(n, n) + Elem::single(-n, -n));
        const S corner = (q_power<S>(1) + q_power<S>(-1)) * q_power<S>(1 - n);
        for (std::int64_t l = 1; l <= n - 1; ++l) {
            const std::int64_t k = n - 2 * l;
            result += (corner * q_power<S>(-k * k)) * Elem::single(k, k);
        }
        return result * q_minus_inv<S>().inverse();
    }

    /// Closed form of H'(n); subtracts 2·(q^n + q^-n) for even n.  Requires n >= 1.
    static Elem h_prime_closed(std::int64_t n) {
        require_positive(n, "h_prime_closed");
        Elem result = h_core(n);
        if (n % 2 == 0)
            result -= Elem::from_scalar(S::from_int(2) * (q_power<S>(n) + q_power<S>(-n)));
        return result * h_denominator_inverse(n);
    }

    /// Closed form of H(n); subtracts 2·(q^n + 1) for even n.  Requires n >= 1.
    static Elem h_closed(std::int64_t n) {
        require_positive(n, "h_closed");
        Elem result = h_core(n);
        if (n % 2 == 0)
            result -= Elem::from_scalar(S::from_int(2) * (q_power<S>(n) + S::one()));
        return result * h_denominator_inverse(n);
    }

    // ---- product forms (generator-word expressions, a third cross-check) ---

    /// x·(y·x)^n + x^-1·(y^-1·x^-1)^n; requires n >= 0.
    static Elem b_alpha0_product(std::int64_t n) {
        require_nonnegative(n, "b_alpha0_product");
        const Elem yx = Elem::y() * Elem::x();
        const Elem yx_inv = Elem::y_inv() * Elem::x_inv();
        return Elem::x() * yx.pow(n) + Elem::x_inv() * yx_inv.pow(n);
    }

    /// y·(x·y)^n + y^-1·(x^-1·y^-1)^n; requires n >= 0.
    static Elem b_alpha1_product(std::int64_t n) {
        require_nonnegative(n, "b_alpha1_product");
        const Elem xy = Elem::x() * Elem::y();
        const Elem xy_inv = Elem::x_inv() * Elem::y_inv();
        return Elem::y() * xy.pow(n) + Elem::y_inv() * xy_inv.pow(n);
    }

    /// (y·(x·y)^r + y^-1·(x^-1·y^-1)^r) / (q^(1/2)·(q-q^-1)), any integer r.
    static Elem b1r_product(std::int64_t r) {
        const Elem xy = Elem::x() * Elem::y();
        const Elem xy_inv = Elem::x_inv() * Elem::y_inv();
        return (Elem::y() * xy.pow(r) + Elem::y_inv() * xy_inv.pow(r)) *
               b1_normalizer_inverse();
    }

    /**
     * (q^-2 - 1)·( q^-n·[n+1]·(xy)^n + q^n·[n+1]·(xy)^-n
     *              + sum_{l=1}^{n-1} (1 + q^(4l-2n))·(xy)^(n-2l) );
     * the (xy)-power expression of B(n·delta).  Requires n >= 1.
     */
    static Elem b_ndelta_product(std::int64_t n) {
        require_positive(n, "b_ndelta_product");
        const Elem xy = Elem::x() * Elem::y();
        Elem result = (q_power<S>(-n) * q_int<S>(n + 1)) * xy.pow(n) +
                      (q_power<S>(n) * q_int<S>(n + 1)) * xy.pow(-n);
        for (std::int64_t l = 1; l <= n - 1; ++l)
            result += (S::one() + q_power<S>(4 * l - 2 * n)) * xy.pow(n - 2 * l);
        return (q_power<S>(-2) - S::one()) * result;
    }

    /// 1/(q^(1/2)·(q-q^-1)), the scalar normalizer shared by the B(1,r) family.
    static S b1_normalizer_inverse() {
        return (S::s_power(1) * q_minus_inv<S>()).inverse();
    }

private:
    std::map<std::int64_t, Elem> alpha0_;
    std::map<std::int64_t, Elem> alpha1_;
    std::map<std::int64_t, Elem> ndelta_;
    std::map<std::int64_t, Elem> b1r_;
    std::optional<Series> hp_log_;
    std::optional<Series> h_log_;

    static std::int64_t require_nonnegative(std::int64_t n, const char* where) {
        if (n < 0)
            throw std::invalid_argument(std::string(where) + ": index must be >= 0");
        return n;
    }

    static void require_positive(std::int64_t n, const char* where) {
        if (n < 1)
            throw std::invalid_argument(std::string(where) + ": index must be >= 1");
    }

    Elem alpha_recursive(std::map<std::int64_t, Elem>& memo, std::int64_t n, bool plus) {
        if (auto it = memo.find(n); it != memo.end()) return it->second;
        Elem result;
        if (n == 0) {
            result = Elem::w(plus ? 0 : 1);
        } else {
            const S step =
                q_power<S>(1) *
                (q_minus_inv<S>() * (q_power<S>(2) - q_power<S>(-2))).inverse();
            const Elem prev = alpha_recursive(memo, n - 1, plus);
            const Elem bracket = commutator(b_delta(), prev) * step;
            Elem base = n == 1 ? Elem::w(plus ? 1 : 0) : alpha_recursive(memo, n - 2, plus);
            result = plus ? base + bracket : base - bracket;
        }
        return memo.emplace(n, std::move(result)).first->second;
    }

    /// Shared diagonal skeleton of B(n·delta)/(q^-2-1) and theta'(n)·(q-q^-1), n >= 1.
    static Elem diagonal_core(std::int64_t n) {
        Elem result = (q_power<S>(-n * n) * q_int<S>(n + 1)) *
                      (Elem::single(n, n) + Elem::single(-n, -n));
        for (std::int64_t l = 1; l <= n - 1; ++l) {
            const std::int64_t k = n - 2 * l;
            result += ((q_power<S>(k) + q_power<S>(-k)) * q_power<S>(-k * k)) *
                      Elem::single(k, k);
        }
        return result;
    }

    /// q^(-n^2)·(q^n + q^-n)·(x^n·y^n + x^(-n)·y^(-n)), the odd-degree H skeleton.
    static Elem h_core(std::int64_t n) {
        return (q_power<S>(-n * n) * (q_power<S>(n) + q_power<S>(-n))) *
               (Elem::single(n, n) + Elem::single(-n, -n));
    }

    static S h_denominator_inverse(std::int64_t n) {
        return (S::from_int(static_cast<long>(n)) * q_minus_inv<S>()).inverse();
    }

    Elem h_coefficient(std::optional<Series>& cache, bool prime, std::int64_t n,
                       std::int64_t order) {
        require_positive(n, prime ? "h_prime_from_series" : "h_from_series");
        if (order < 0) order = n;
        if (order < n)
            throw std::invalid_argument(
                std::string(prime ? "h_prime_from_series" : "h_from_series") +
                ": truncation order must be >= n");
        if (!cache || cache->order() < static_cast<std::size_t>(order)) {
            Series theta = prime ? theta_prime_series_definitional(order)
                                 : theta_series_definitional(order);
            cache = theta.log();
        }
        return (*cache)[static_cast<std::size_t>(n)] * q_minus_inv<S>().inverse();
    }
};

using Families = FamilyBuilder<QHalfScalar>;

}  // namespace qtorus
