#pragma once

/**
 * @file suites.hpp
 * Identity-verification suites over the quantum torus.
 *
 * Every check is phrased as "this element is exactly zero".  A suite runs its
 * checks in a fixed order and stops at the first nonzero difference, which is
 * captured verbatim (text and JSON) as the failure witness; localizing the
 * offending coefficient is the whole point of exact arithmetic.
 *
 * The suites are templated on the coefficient field and on the commutation
 * twist of the ambient algebra, so the same code verifies the true algebra
 * (exact field, twist q⁻²), runs fast numeric previews (evaluated field), and
 * demonstrates mutation sensitivity (corrupted twists make suites fail).
 */

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtorus/families.hpp"
#include "qtorus/json_io.hpp"
#include "qtorus/laurent.hpp"
#include "qtorus/scalar.hpp"
#include "qtorus/series.hpp"
#include "qtorus/torus.hpp"

namespace qtorus {

/// First failing check of a suite: which identity broke, and the nonzero
/// difference element that witnesses it.
struct CheckWitness {
    std::string check;
    std::string difference_text;
    ordered_json difference_json;
};

struct CheckReport {
    std::string suite;
    std::string params;
    bool pass = true;
    std::optional<CheckWitness> witness;
    std::int64_t elapsed_ms = 0;
};

/// {"suite", "params", "status", "witness", "elapsed_ms"}; witness is null on
/// pass, else {"check", "difference"} with the difference in element JSON.
inline ordered_json report_json(const CheckReport& r) {
    ordered_json w;
    if (r.witness)
        w = ordered_json{{"check", r.witness->check},
                         {"difference", r.witness->difference_json}};
    return ordered_json{{"suite", r.suite},
                        {"params", r.params},
                        {"status", r.pass ? "pass" : "fail"},
                        {"witness", std::move(w)},
                        {"elapsed_ms", r.elapsed_ms}};
}

inline std::string report_text(const CheckReport& r) {
    std::string out = r.suite;
    if (out.size() < 14) out.resize(14, ' ');
    out += r.pass ? "  pass" : "  FAIL";
    out += "  " + std::to_string(r.elapsed_ms) + " ms  (" + r.params + ")";
    if (r.witness) {
        out += "\n  failed check: " + r.witness->check;
        out += "\n  difference:   " + r.witness->difference_text;
    }
    return out;
}

namespace detail {

/// Bookkeeping shared by all suites: wall-clock timing plus first-failure
/// witness capture.
template <coefficient_field S, int RelPow>
class SuiteRun {
public:
    using Elem = BasicTorusElement<S, RelPow>;

    SuiteRun(std::string suite, std::string params)
        : t0_(std::chrono::steady_clock::now()) {
        rep_.suite = std::move(suite);
        rep_.params = std::move(params);
    }

    /// True when diff is exactly zero; otherwise records the witness (first
    /// failure only) and reports false so the caller can stop early.
    bool expect_zero(const Elem& diff, std::string check) {
        if (diff.is_zero()) return true;
        rep_.pass = false;
        rep_.witness =
            CheckWitness{std::move(check), diff.to_text(), element_json(diff)};
        return false;
    }

    /// Coefficient-wise series comparison under the same first-failure rule.
    bool expect_equal(const TruncatedSeries<Elem>& a, const TruncatedSeries<Elem>& b,
                      const std::string& check) {
        for (std::size_t n = 0; n <= a.order(); ++n)
            if (!expect_zero(a[n] - b[n],
                             check + ", coefficient of t^" + std::to_string(n)))
                return false;
        return true;
    }

    CheckReport finish() {
        rep_.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - t0_)
                              .count();
        return std::move(rep_);
    }

private:
    CheckReport rep_;
    std::chrono::steady_clock::time_point t0_;
};

}  // namespace detail

/**
 * The two q-Dolan–Grady relations and their commutator corollaries for the
 * generator pair w0 = x + x⁻¹, w1 = y + y⁻¹:
 *
 *   [w0, [w0, w1]_q]_{q⁻¹} = −(q²−q⁻²)²·w1      (and w0 ↔ w1),
 *   [w0, [w0, [w0, w1]_q]_{q⁻¹}] = −(q²−q⁻²)²·[w0, w1]   (and w0 ↔ w1).
 */
template <coefficient_field S = QHalfScalar, int RelPow = 2>
CheckReport suite_dolan_grady() {
    detail::SuiteRun<S, RelPow> run("dolan-grady", "fixed identity set");
    using E = BasicTorusElement<S, RelPow>;
    const E w0 = E::w(0);
    const E w1 = E::w(1);
    const S q = q_power<S>(1);
    const S qi = q_power<S>(-1);
    const S g = q_power<S>(2) - q_power<S>(-2);
    const S g2 = g * g;

    const E inner01 = commutator(w0, commutator(w0, w1, q), qi);
    if (!run.expect_zero(inner01 + g2 * w1,
                         "[w0,[w0,w1]_q]_(q^-1) + (q^2-q^-2)^2*w1"))
        return run.finish();
    const E inner10 = commutator(w1, commutator(w1, w0, q), qi);
    if (!run.expect_zero(inner10 + g2 * w0,
                         "[w1,[w1,w0]_q]_(q^-1) + (q^2-q^-2)^2*w0"))
        return run.finish();
    if (!run.expect_zero(commutator(w0, inner01) + g2 * commutator(w0, w1),
                         "[w0,[w0,[w0,w1]_q]_(q^-1)] + (q^2-q^-2)^2*[w0,w1]"))
        return run.finish();
    run.expect_zero(commutator(w1, inner10) + g2 * commutator(w1, w0),
                    "[w1,[w1,[w1,w0]_q]_(q^-1)] + (q^2-q^-2)^2*[w1,w0]");
    return run.finish();
}

/**
 * Route agreement for every element family: the recursive/series route, the
 * closed standard-basis route, and the generator-word product route must
 * produce identical elements, index by index.  Also checks the compact
 * geometric-quotient rewrites of the diagonal families, with the quotients
 * resolved by exact Laurent division on the z-line.
 */
template <coefficient_field S = QHalfScalar, int RelPow = 2>
CheckReport suite_closed_forms(std::int64_t maxN) {
    if (maxN < 0)
        throw std::invalid_argument("suite_closed_forms: maxN must be >= 0");
    detail::SuiteRun<S, RelPow> run("closed-forms",
                                    "|index| <= " + std::to_string(maxN));
    using F = FamilyBuilder<S, RelPow>;
    using ZL = ZLaurent<S>;
    F fb;

    const auto tag = [](const char* what, std::int64_t n) {
        return std::string(what) + ", index " + std::to_string(n);
    };

    for (std::int64_t n = 0; n <= maxN; ++n) {
        if (!run.expect_zero(fb.b_alpha0_recursive(n) - F::b_alpha0_closed(n),
                             tag("B_alpha0: recursive vs closed", n)))
            return run.finish();
        if (!run.expect_zero(F::b_alpha0_closed(n) - F::b_alpha0_product(n),
                             tag("B_alpha0: closed vs product", n)))
            return run.finish();
        if (!run.expect_zero(fb.b_alpha1_recursive(n) - F::b_alpha1_closed(n),
                             tag("B_alpha1: recursive vs closed", n)))
            return run.finish();
        if (!run.expect_zero(F::b_alpha1_closed(n) - F::b_alpha1_product(n),
                             tag("B_alpha1: closed vs product", n)))
            return run.finish();
        if (!run.expect_zero(fb.b_ndelta_recursive(n) - F::b_ndelta_closed(n),
                             tag("B_delta-line: recursive vs closed", n)))
            return run.finish();
        // The generator-word route merges its boundary terms at index 0, so
        // its domain starts at 1.
        if (n >= 1 &&
            !run.expect_zero(F::b_ndelta_closed(n) - F::b_ndelta_product(n),
                             tag("B_delta-line: closed vs product", n)))
            return run.finish();
        if (!run.expect_zero(fb.theta_prime_definitional(n) - F::theta_prime_closed(n),
                             tag("theta': definitional vs closed", n)))
            return run.finish();
        if (!run.expect_zero(fb.theta_definitional(n) - F::theta_closed(n),
                             tag("theta: definitional vs closed", n)))
            return run.finish();
    }

    for (std::int64_t n = 1; n <= maxN; ++n) {
        if (!run.expect_zero(fb.h_prime_from_series(n, maxN) - F::h_prime_closed(n),
                             tag("H': series vs closed", n)))
            return run.finish();
        if (!run.expect_zero(fb.h_from_series(n, maxN) - F::h_closed(n),
                             tag("H: series vs closed", n)))
            return run.finish();
    }

    for (std::int64_t r = -maxN; r <= maxN; ++r) {
        if (!run.expect_zero(fb.b1r_recursive(r) - F::b1r_closed(r),
                             tag("B1r: recursive vs closed", r)))
            return run.finish();
        if (!run.expect_zero(F::b1r_closed(r) - F::b1r_product(r),
                             tag("B1r: closed vs product", r)))
            return run.finish();
    }

    // Compact forms on the z-line: on the diagonal, (xy)^k = q^k·z^k and
    // (yx)^k = q^-k·z^k, so the formal quotients are exact Laurent divisions.
    const auto xy_pow = [](std::int64_t k) { return ZL::monomial(k, q_power<S>(k)); };
    const auto yx_pow = [](std::int64_t k) { return ZL::monomial(k, q_power<S>(-k)); };
    for (std::int64_t n = 1; n <= maxN; ++n) {
        const ZL fxy = divide_exact(xy_pow(n - 1) - xy_pow(1 - n),
                                    xy_pow(1) - xy_pow(-1));
        const ZL fyx = divide_exact(yx_pow(n - 1) - yx_pow(1 - n),
                                    yx_pow(1) - yx_pow(-1));
        const ZL core = q_int<S>(n + 1) *
                            (q_power<S>(-n) * xy_pow(n) + q_power<S>(n) * xy_pow(-n)) +
                        fxy + fyx;
        const auto core_elem = core.template to_element<RelPow>();
        if (!run.expect_zero(
                (q_power<S>(-2) - S::one()) * core_elem - F::b_ndelta_closed(n),
                tag("B_delta-line: compact geometric-quotient form", n)))
            return run.finish();
        if (!run.expect_zero(
                q_minus_inv<S>().inverse() * core_elem - F::theta_prime_closed(n),
                tag("theta': compact geometric-quotient form", n)))
            return run.finish();

        // theta_n as a two-quotient form in z = q·y·x:
        //   [n+1]_q/(q-q^-1) · (z^(n+1)-z^(-n-1))/(z-z^-1)
        //   - q^2·[n-1]_q/(q-q^-1) · (z^(n-1)-z^(1-n))/(z-z^-1).
        const ZL zstep = ZL::monomial(1) - ZL::monomial(-1);
        const ZL head = divide_exact(ZL::monomial(n + 1) - ZL::monomial(-n - 1), zstep);
        const ZL tail = divide_exact(ZL::monomial(n - 1) - ZL::monomial(1 - n), zstep);
        const ZL theta_two = (q_int<S>(n + 1) * q_minus_inv<S>().inverse()) * head -
                             (q_power<S>(2) * q_int<S>(n - 1) * q_minus_inv<S>().inverse()) * tail;
        if (!run.expect_zero(theta_two.template to_element<RelPow>() - F::theta_closed(n),
                             tag("theta: compact two-quotient form", n)))
            return run.finish();
    }

    return run.finish();
}

/**
 * Generating-function identities at a fixed truncation order:
 *  - the quotient product form of the theta'-series and theta-series matches
 *    the definitional coefficients (q−q⁻¹)·theta'_n / (q−q⁻¹)·theta_n;
 *  - the cleared ratio identity (1−q⁻²t²)·theta(t) = (1−t²)·theta'(t);
 *  - exp and log are mutually inverse on these series;
 *  - exp((q−q⁻¹)·H'(t)) and exp((q−q⁻¹)·H(t)) reproduce the two series from
 *    the closed forms of H'_n and H_n.
 */
template <coefficient_field S = QHalfScalar, int RelPow = 2>
CheckReport suite_series(std::int64_t maxOrder) {
    if (maxOrder < 2)
        throw std::invalid_argument("suite_series: maxOrder must be >= 2");
    detail::SuiteRun<S, RelPow> run("series",
                                    "truncation order " + std::to_string(maxOrder));
    using E = BasicTorusElement<S, RelPow>;
    using F = FamilyBuilder<S, RelPow>;
    const auto N = static_cast<std::size_t>(maxOrder);
    F fb;
    const S g = q_minus_inv<S>();

    const auto tp_prod = theta_prime_product_series<S, RelPow>(N);
    const auto t_prod = theta_product_series<S, RelPow>(N);

    if (!run.expect_zero(tp_prod[0] - E::unit(), "theta'-series: t^0 coefficient is 1"))
        return run.finish();
    if (!run.expect_zero(tp_prod[1] - g * fb.theta_prime_definitional(1),
                         "theta'-series: t^1 coefficient is (q-q^-1)*theta'_1"))
        return run.finish();

    if (!run.expect_equal(tp_prod, fb.theta_prime_series_definitional(maxOrder),
                          "theta'-series: product vs definitional"))
        return run.finish();
    if (!run.expect_equal(t_prod, fb.theta_series_definitional(maxOrder),
                          "theta-series: product vs definitional"))
        return run.finish();

    if (!run.expect_equal(t_prod.poly_factor(q_power<S>(-2), 2),
                          tp_prod.poly_factor(S::one(), 2),
                          "cleared ratio: (1-q^-2 t^2)*theta(t) vs (1-t^2)*theta'(t)"))
        return run.finish();

    if (!run.expect_equal(tp_prod.log().exp(), tp_prod,
                          "exp(log(theta'-series)) round trip"))
        return run.finish();
    if (!run.expect_equal(t_prod.log().exp(), t_prod,
                          "exp(log(theta-series)) round trip"))
        return run.finish();

    TruncatedSeries<E> hp(N);
    TruncatedSeries<E> h(N);
    for (std::int64_t n = 1; n <= maxOrder; ++n) {
        hp[static_cast<std::size_t>(n)] = F::h_prime_closed(n);
        h[static_cast<std::size_t>(n)] = F::h_closed(n);
    }
    if (!run.expect_equal((g * hp).exp(), tp_prod,
                          "exp((q-q^-1)*H'-series) vs theta'-series"))
        return run.finish();
    run.expect_equal((g * h).exp(), t_prod,
                     "exp((q-q^-1)*H-series) vs theta-series");
    return run.finish();
}

/**
 * The root-vector bracket relations, verified on the closed forms:
 *
 *   [theta'_m, theta'_n] = [theta_m, theta_n] = [H_m, H_n] = 0,
 *   [H'_m, B1r(r)] = [H_m, B1r(r)] = ([2m]_q/m)·(B1r(r+m) − B1r(r−m)),
 *   [theta'_m, B1r(r)] + [theta'_{m−2}, B1r(r)]
 *       = [theta'_{m−1}, B1r(r+1)]_{q²} + [theta'_{m−1}, B1r(r−1)]_{q⁻²},
 *   the same with theta in place of theta', and
 *   q[B1r(r), B1r(s+1)]_q − q[B1r(r+1), B1r(s)]_{q⁻¹}
 *       = theta_{s−r+1} − q⁻²·theta_{s−r−1} + theta_{r−s+1} − q⁻²·theta_{r−s−1},
 *
 * with theta_k = 0 for k < 0 and theta_0 = 1/(q−q⁻¹).
 */
template <coefficient_field S = QHalfScalar, int RelPow = 2>
CheckReport suite_root_vectors(std::int64_t maxM, std::int64_t rLo, std::int64_t rHi) {
    if (maxM < 1)
        throw std::invalid_argument("suite_root_vectors: maxM must be >= 1");
    if (rLo > rHi)
        throw std::invalid_argument("suite_root_vectors: empty r range");
    detail::SuiteRun<S, RelPow> run(
        "root-vectors", "m,n <= " + std::to_string(maxM) + "; r,s in [" +
                            std::to_string(rLo) + "," + std::to_string(rHi) + "]");
    using F = FamilyBuilder<S, RelPow>;
    const S q = q_power<S>(1);
    const S q2 = q_power<S>(2);

    const auto mn = [](const char* what, std::int64_t m, std::int64_t n) {
        return std::string(what) + ", m=" + std::to_string(m) + ", n=" + std::to_string(n);
    };
    const auto mr = [](const char* what, std::int64_t m, std::int64_t r) {
        return std::string(what) + ", m=" + std::to_string(m) + ", r=" + std::to_string(r);
    };

    for (std::int64_t m = 1; m <= maxM; ++m)
        for (std::int64_t n = m; n <= maxM; ++n) {
            if (!run.expect_zero(commutator(F::theta_prime_closed(m), F::theta_prime_closed(n)),
                                 mn("[theta'_m, theta'_n]", m, n)))
                return run.finish();
            if (!run.expect_zero(commutator(F::theta_closed(m), F::theta_closed(n)),
                                 mn("[theta_m, theta_n]", m, n)))
                return run.finish();
            if (!run.expect_zero(commutator(F::h_closed(m), F::h_closed(n)),
                                 mn("[H_m, H_n]", m, n)))
                return run.finish();
        }

    for (std::int64_t m = 1; m <= maxM; ++m) {
        const S step = q_int<S>(2 * m) * S::from_int(m).inverse();
        for (std::int64_t r = rLo; r <= rHi; ++r) {
            const auto ladder =
                step * (F::b1r_closed(r + m) - F::b1r_closed(r - m));
            if (!run.expect_zero(
                    commutator(F::h_prime_closed(m), F::b1r_closed(r)) - ladder,
                    mr("[H'_m, B1r(r)] vs ([2m]_q/m)-ladder", m, r)))
                return run.finish();
            if (!run.expect_zero(
                    commutator(F::h_closed(m), F::b1r_closed(r)) - ladder,
                    mr("[H_m, B1r(r)] vs ([2m]_q/m)-ladder", m, r)))
                return run.finish();

            const auto pair_lhs = [&](auto&& th) {
                return commutator(th(m), F::b1r_closed(r)) +
                       commutator(th(m - 2), F::b1r_closed(r));
            };
            const auto pair_rhs = [&](auto&& th) {
                return commutator(th(m - 1), F::b1r_closed(r + 1), q2) +
                       commutator(th(m - 1), F::b1r_closed(r - 1), q2.inverse());
            };
            const auto tprime = [](std::int64_t k) { return F::theta_prime_closed(k); };
            const auto theta = [](std::int64_t k) { return F::theta_closed(k); };
            if (!run.expect_zero(pair_lhs(tprime) - pair_rhs(tprime),
                                 mr("theta'/B1r exchange relation", m, r)))
                return run.finish();
            if (!run.expect_zero(pair_lhs(theta) - pair_rhs(theta),
                                 mr("theta/B1r exchange relation", m, r)))
                return run.finish();
        }
    }

    for (std::int64_t r = rLo; r <= rHi; ++r)
        for (std::int64_t s = rLo; s <= rHi; ++s) {
            const auto lhs =
                q * commutator(F::b1r_closed(r), F::b1r_closed(s + 1), q) -
                q * commutator(F::b1r_closed(r + 1), F::b1r_closed(s), q.inverse());
            const auto rhs = F::theta_closed(s - r + 1) -
                             q_power<S>(-2) * F::theta_closed(s - r - 1) +
                             F::theta_closed(r - s + 1) -
                             q_power<S>(-2) * F::theta_closed(r - s - 1);
            if (!run.expect_zero(lhs - rhs,
                                 "B1r/B1r reduction to theta, r=" + std::to_string(r) +
                                     ", s=" + std::to_string(s)))
                return run.finish();
        }

    return run.finish();
}

/**
 * The z-notation identities, z = q·y·x: the rewriting of every family through
 * powers of z, the symmetric bracket formula, the three-case bracket
 * reductions for theta' and theta (cases m = 1, m = 2, m ≥ 3), their compact
 * forms with formal z-fractions resolved by exact Laurent division, and the
 * five-case product relations for the B1r line.
 */
template <coefficient_field S = QHalfScalar, int RelPow = 2>
CheckReport suite_z_forms(std::int64_t maxM, std::int64_t rLo, std::int64_t rHi) {
    if (maxM < 1)
        throw std::invalid_argument("suite_z_forms: maxM must be >= 1");
    if (rLo > rHi)
        throw std::invalid_argument("suite_z_forms: empty r range");
    detail::SuiteRun<S, RelPow> run(
        "z-forms", "m <= " + std::to_string(maxM) + "; r,s in [" +
                       std::to_string(rLo) + "," + std::to_string(rHi) + "]");
    using E = BasicTorusElement<S, RelPow>;
    using F = FamilyBuilder<S, RelPow>;
    using ZL = ZLaurent<S>;

    const S q = q_power<S>(1);
    const S qi = q_power<S>(-1);
    const S q2 = q_power<S>(2);
    const S q2i = q_power<S>(-2);
    const S g = q_minus_inv<S>();
    const auto zp = [](std::int64_t k) { return E::z_power(k); };
    const auto zsym = [&](std::int64_t k) { return zp(k) + zp(-k); };
    /// y·z^t + y⁻¹·z^(−t), the un-normalized B1r core.
    const auto bare = [&](std::int64_t t) {
        return E::y() * zp(t) + E::y_inv() * zp(-t);
    };
    /// q^t·(y·z^t + y⁻¹·z^(−t)).
    const auto a_op = [&](std::int64_t t) { return q_power<S>(t) * bare(t); };

    // z relations: z = q·y·x = q⁻¹·x·y, its inverse, and the exchange rules.
    if (!run.expect_zero(zp(1) - q * (E::y() * E::x()), "z = q*y*x"))
        return run.finish();
    if (!run.expect_zero(zp(1) - qi * (E::x() * E::y()), "z = q^-1*x*y"))
        return run.finish();
    if (!run.expect_zero(zp(-1) - q * (E::y_inv() * E::x_inv()), "z^-1 = q*y^-1*x^-1"))
        return run.finish();
    if (!run.expect_zero(zp(-1) - qi * (E::x_inv() * E::y_inv()), "z^-1 = q^-1*x^-1*y^-1"))
        return run.finish();
    if (!run.expect_zero(zp(1) * E::y() - q2 * (E::y() * zp(1)), "z*y = q^2*y*z"))
        return run.finish();
    if (!run.expect_zero(zp(1) * E::x() - q2i * (E::x() * zp(1)), "z*x = q^-2*x*z"))
        return run.finish();

    // B1r in z-notation, both the y-form and the x-form.
    const S nu = F::b1_normalizer_inverse();
    for (std::int64_t r = rLo; r <= rHi; ++r) {
        if (!run.expect_zero(F::b1r_closed(r) - nu * a_op(r),
                             "B1r z-form (y-version), r=" + std::to_string(r)))
            return run.finish();
        const E xform = q_power<S>(r + 1) * (E::x_inv() * zp(r + 1)) +
                        q_power<S>(r + 1) * (E::x() * zp(-r - 1));
        if (!run.expect_zero(F::b1r_closed(r) - nu * xform,
                             "B1r z-form (x-version), r=" + std::to_string(r)))
            return run.finish();
    }

    // Family rewritings through powers of z.
    for (std::int64_t n = 1; n <= maxM; ++n) {
        E tp = q_int<S>(n + 1) * zsym(n);
        E t = tp;
        E ell_sum = E::zero();
        for (std::int64_t l = 1; l <= n - 1; ++l) {
            tp += (q_power<S>(n - 2 * l) + q_power<S>(2 * l - n)) * zp(n - 2 * l);
            ell_sum += zp(n - 2 * l);
        }
        t += (q_power<S>(2 - n) + q_power<S>(-n)) * ell_sum;
        if (!run.expect_zero(F::theta_prime_closed(n) - g.inverse() * tp,
                             "theta' z-form, n=" + std::to_string(n)))
            return run.finish();
        if (!run.expect_zero(F::theta_closed(n) - g.inverse() * t,
                             "theta z-form, n=" + std::to_string(n)))
            return run.finish();

        const S hden = (S::from_int(n) * g).inverse();
        const S qn_pair = q_power<S>(n) + q_power<S>(-n);
        E hp = qn_pair * zsym(n);
        E h = hp;
        if (n % 2 == 0) {
            hp -= E::from_scalar(S::from_int(2) * qn_pair);
            h -= E::from_scalar(S::from_int(2) * (q_power<S>(n) + S::one()));
        }
        if (!run.expect_zero(F::h_prime_closed(n) - hden * hp,
                             "H' z-form, n=" + std::to_string(n)))
            return run.finish();
        if (!run.expect_zero(F::h_closed(n) - hden * h,
                             "H z-form, n=" + std::to_string(n)))
            return run.finish();
    }

    // theta_n − q⁻²·theta_{n−2} collapses to a four-term z-expression.
    for (std::int64_t n = 3; n <= maxM; ++n) {
        const E rhs = g.inverse() * (q_int<S>(n + 1) * zsym(n) -
                                     q_int<S>(n - 3) * zsym(n - 2));
        if (!run.expect_zero(
                F::theta_closed(n) - q2i * F::theta_closed(n - 2) - rhs,
                "theta difference z-form, n=" + std::to_string(n)))
            return run.finish();
    }

    // Symmetric bracket: [z^m + z^-m, q^r(y z^r + y^-1 z^-r)].
    for (std::int64_t m = 1; m <= maxM; ++m)
        for (std::int64_t r = rLo; r <= rHi; ++r) {
            const E rhs = (q_power<S>(m) - q_power<S>(-m)) *
                          (a_op(r + m) - a_op(r - m));
            if (!run.expect_zero(commutator(zsym(m), a_op(r)) - rhs,
                                 "symmetric z-power bracket, m=" + std::to_string(m) +
                                     ", r=" + std::to_string(r)))
                return run.finish();
        }

    // Bracket reductions for theta' (cases m = 1, m = 2, m >= 3).
    for (std::int64_t r = rLo; r <= rHi; ++r) {
        if (!run.expect_zero(g.inverse() * commutator(zsym(1), a_op(r)) -
                                 (a_op(r + 1) - a_op(r - 1)),
                             "theta' bracket reduction, case m=1, r=" + std::to_string(r)))
            return run.finish();
        if (!run.expect_zero(
                q_int<S>(3) * commutator(zsym(2), a_op(r)) -
                    q_int<S>(2) * commutator(zsym(1), a_op(r + 1), q2) -
                    q_int<S>(2) * commutator(zsym(1), a_op(r - 1), q2.inverse()),
                "theta' bracket reduction, case m=2, r=" + std::to_string(r)))
            return run.finish();
    }
    for (std::int64_t m = 3; m <= maxM; ++m)
        for (std::int64_t r = rLo; r <= rHi; ++r) {
            E acc = q_int<S>(m + 1) * commutator(zsym(m), a_op(r));
            for (std::int64_t l = 1; l <= m - 1; ++l)
                acc += (q_power<S>(m - 2 * l) + q_power<S>(2 * l - m)) *
                       commutator(zp(m - 2 * l), a_op(r));
            acc += q_int<S>(m - 1) * commutator(zsym(m - 2), a_op(r));
            for (std::int64_t l = 1; l <= m - 3; ++l)
                acc += (q_power<S>(m - 2 * l - 2) + q_power<S>(2 * l - m + 2)) *
                       commutator(zp(m - 2 * l - 2), a_op(r));
            acc -= q_int<S>(m) * commutator(zsym(m - 1), a_op(r + 1), q2);
            for (std::int64_t l = 1; l <= m - 2; ++l)
                acc -= (q_power<S>(m - 2 * l - 1) + q_power<S>(2 * l - m + 1)) *
                       commutator(zp(m - 2 * l - 1), a_op(r + 1), q2);
            acc -= q_int<S>(m) * commutator(zsym(m - 1), a_op(r - 1), q2.inverse());
            for (std::int64_t l = 1; l <= m - 2; ++l)
                acc -= (q_power<S>(m - 2 * l - 1) + q_power<S>(2 * l - m + 1)) *
                       commutator(zp(m - 2 * l - 1), a_op(r - 1), q2.inverse());
            if (!run.expect_zero(acc, "theta' bracket reduction, case m>=3, m=" +
                                          std::to_string(m) + ", r=" + std::to_string(r)))
                return run.finish();
        }

    // Compact form of the theta' reduction (m >= 2): formal fractions over
    // (qz − q⁻¹z⁻¹)(q⁻¹z − qz⁻¹), resolved by exact division on the z-line.
    const ZL dsym = (ZL::monomial(1, q) - ZL::monomial(-1, qi)) *
                    (ZL::monomial(1, qi) - ZL::monomial(-1, q));
    const auto zsym_l = [](std::int64_t k) {
        return ZL::monomial(k) + ZL::monomial(-k);
    };
    const auto qpair = [](std::int64_t a) { return q_power<S>(a) + q_power<S>(-a); };
    const auto frac = [&](std::int64_t a) {
        const ZL num = qpair(a) * zsym_l(a + 2) - qpair(a + 2) * zsym_l(a);
        return divide_exact(num, dsym).template to_element<RelPow>();
    };
    for (std::int64_t m = 2; m <= maxM; ++m)
        for (std::int64_t r = rLo; r <= rHi; ++r) {
            const E f1 = frac(m - 3);
            const E f2 = frac(m - 2);
            const E f3 = frac(m - 4);
            E acc = q_int<S>(m + 1) * commutator(zsym(m), a_op(r)) +
                    q_int<S>(m - 1) * commutator(zsym(m - 2), a_op(r));
            acc -= q_int<S>(m) * commutator(zsym(m - 1), a_op(r + 1), q2);
            acc -= q_int<S>(m) * commutator(zsym(m - 1), a_op(r - 1), q2.inverse());
            acc -= commutator(f1, a_op(r + 1), q2);
            acc -= commutator(f1, a_op(r - 1), q2.inverse());
            acc += commutator(f2, a_op(r));
            acc += commutator(f3, a_op(r));
            if (!run.expect_zero(acc, "theta' bracket compact form, m=" +
                                          std::to_string(m) + ", r=" + std::to_string(r)))
                return run.finish();
        }

    // Bracket reductions for theta (cases m = 1, m = 2, m >= 3).
    for (std::int64_t r = rLo; r <= rHi; ++r) {
        if (!run.expect_zero(g.inverse() * commutator(zsym(1), a_op(r)) -
                                 (a_op(r + 1) - a_op(r - 1)),
                             "theta bracket reduction, case m=1, r=" + std::to_string(r)))
            return run.finish();
        if (!run.expect_zero(
                q_int<S>(3) * commutator(zsym(2), a_op(r)) -
                    q_int<S>(2) * commutator(zsym(1), a_op(r + 1), q2) -
                    q_int<S>(2) * commutator(zsym(1), a_op(r - 1), q2.inverse()),
                "theta bracket reduction, case m=2, r=" + std::to_string(r)))
            return run.finish();
    }
    for (std::int64_t m = 3; m <= maxM; ++m)
        for (std::int64_t r = rLo; r <= rHi; ++r) {
            E acc = q_int<S>(m + 1) * commutator(zsym(m), a_op(r));
            E sum_a = E::zero();
            for (std::int64_t l = 1; l <= m - 1; ++l)
                sum_a += commutator(zp(m - 2 * l), a_op(r));
            acc += (q_power<S>(2 - m) + q_power<S>(-m)) * sum_a;
            acc += q_int<S>(m - 1) * commutator(zsym(m - 2), a_op(r));
            E sum_b = E::zero();
            for (std::int64_t l = 1; l <= m - 3; ++l)
                sum_b += commutator(zp(m - 2 * l - 2), a_op(r));
            acc += (q_power<S>(4 - m) + q_power<S>(2 - m)) * sum_b;
            acc -= q_int<S>(m) * commutator(zsym(m - 1), a_op(r + 1), q2);
            E sum_c = E::zero();
            for (std::int64_t l = 1; l <= m - 2; ++l)
                sum_c += commutator(zp(m - 2 * l - 1), a_op(r + 1), q2);
            acc -= (q_power<S>(3 - m) + q_power<S>(1 - m)) * sum_c;
            acc -= q_int<S>(m) * commutator(zsym(m - 1), a_op(r - 1), q2.inverse());
            E sum_d = E::zero();
            for (std::int64_t l = 1; l <= m - 2; ++l)
                sum_d += commutator(zp(m - 2 * l - 1), a_op(r - 1), q2.inverse());
            acc -= (q_power<S>(3 - m) + q_power<S>(1 - m)) * sum_d;
            if (!run.expect_zero(acc, "theta bracket reduction, case m>=3, m=" +
                                          std::to_string(m) + ", r=" + std::to_string(r)))
                return run.finish();
        }

    // Compact form of the theta reduction (m >= 2): fractions over z − z⁻¹.
    const ZL zstep = ZL::monomial(1) - ZL::monomial(-1);
    for (std::int64_t m = 2; m <= maxM; ++m)
        for (std::int64_t r = rLo; r <= rHi; ++r) {
            const E g1 = divide_exact(ZL::monomial(m - 2) - ZL::monomial(2 - m), zstep)
                             .template to_element<RelPow>();
            const ZL g2num = q * (ZL::monomial(m - 3) - ZL::monomial(3 - m)) +
                             qi * (ZL::monomial(m - 1) - ZL::monomial(1 - m));
            const E g2e = divide_exact(g2num, zstep).template to_element<RelPow>();
            const S edge = q_power<S>(3 - m) + q_power<S>(1 - m);
            E acc = q_int<S>(m + 1) * commutator(zsym(m), a_op(r)) +
                    q_int<S>(m - 1) * commutator(zsym(m - 2), a_op(r));
            acc -= q_int<S>(m) * commutator(zsym(m - 1), a_op(r + 1), q2);
            acc -= q_int<S>(m) * commutator(zsym(m - 1), a_op(r - 1), q2.inverse());
            acc -= edge * commutator(g1, a_op(r + 1), q2);
            acc -= edge * commutator(g1, a_op(r - 1), q2.inverse());
            acc += edge * commutator(g2e, a_op(r));
            if (!run.expect_zero(acc, "theta bracket compact form, m=" +
                                          std::to_string(m) + ", r=" + std::to_string(r)))
                return run.finish();
        }

    // Five-case product relations for the un-normalized B1r cores.
    for (std::int64_t r = rLo; r <= rHi; ++r)
        for (std::int64_t s = rLo; s <= rHi; ++s) {
            const auto rs = [&](const char* which) {
                return std::string("B1r-core product relation, case ") + which +
                       ", r=" + std::to_string(r) + ", s=" + std::to_string(s);
            };
            E diff;
            const char* which = nullptr;
            if (s > r + 1) {
                which = "s>r+1";
                const E lhs = q_power<S>(r + s + 1) *
                              (commutator(bare(r), bare(s + 1), q) +
                               commutator(bare(s), bare(r + 1), q));
                const E rhs =
                    (q_power<S>(s - r + 2) - q_power<S>(r - s - 2)) * zsym(s - r + 1) -
                    (q_power<S>(s - r - 2) - q_power<S>(r - s + 2)) * zsym(s - r - 1);
                diff = lhs - rhs;
            } else if (r > s + 1) {
                which = "r>s+1";
                const E lhs = q_power<S>(r + s + 1) *
                              (commutator(bare(r), bare(s + 1), q) +
                               commutator(bare(s), bare(r + 1), q));
                const E rhs =
                    (q_power<S>(r - s + 2) - q_power<S>(s - r - 2)) * zsym(r - s + 1) -
                    (q_power<S>(r - s - 2) - q_power<S>(s - r + 2)) * zsym(r - s - 1);
                diff = lhs - rhs;
            } else if (s == r + 1) {
                which = "s=r+1";
                const E sq = bare(r + 1) * bare(r + 1);
                const E lhs = q_power<S>(2 * r + 2) *
                              (g * sq + commutator(bare(r), bare(r + 2), q));
                const E rhs = (q_power<S>(3) - q_power<S>(-3)) * zsym(2) +
                              S::from_int(2) * g * E::unit();
                diff = lhs - rhs;
            } else if (r == s + 1) {
                which = "r=s+1";
                const E sq = bare(s + 1) * bare(s + 1);
                const E lhs = q_power<S>(2 * s + 2) *
                              (g * sq + commutator(bare(s), bare(s + 2), q));
                const E rhs = (q_power<S>(3) - q_power<S>(-3)) * zsym(2) +
                              S::from_int(2) * g * E::unit();
                diff = lhs - rhs;
            } else {
                which = "s=r";
                const E lhs = q_power<S>(2 * r + 1) * commutator(bare(r), bare(r + 1), q);
                const E rhs = (q_power<S>(2) - q_power<S>(-2)) * zsym(1);
                diff = lhs - rhs;
            }
            if (!run.expect_zero(diff, rs(which))) return run.finish();
        }

    return run.finish();
}

/**
 * Mutual commutativity across the diagonal families:
 * [B_delta-line(m), B_delta-line(n)], [theta'_m, theta'_n], [theta_m, theta_n],
 * and [H_m, H_n] all vanish for every pair of indices up to the bound.
 */
template <coefficient_field S = QHalfScalar, int RelPow = 2>
CheckReport suite_commutation(std::int64_t maxN) {
    if (maxN < 2)
        throw std::invalid_argument("suite_commutation: maxN must be >= 2");
    detail::SuiteRun<S, RelPow> run("commutation", "m,n <= " + std::to_string(maxN));
    using F = FamilyBuilder<S, RelPow>;
    const auto mn = [](const char* what, std::int64_t m, std::int64_t n) {
        return std::string(what) + ", m=" + std::to_string(m) + ", n=" + std::to_string(n);
    };
    for (std::int64_t m = 1; m <= maxN; ++m)
        for (std::int64_t n = m; n <= maxN; ++n) {
            if (!run.expect_zero(commutator(F::b_ndelta_closed(m), F::b_ndelta_closed(n)),
                                 mn("[B_delta-line(m), B_delta-line(n)]", m, n)))
                return run.finish();
            if (!run.expect_zero(commutator(F::theta_prime_closed(m), F::theta_prime_closed(n)),
                                 mn("[theta'_m, theta'_n]", m, n)))
                return run.finish();
            if (!run.expect_zero(commutator(F::theta_closed(m), F::theta_closed(n)),
                                 mn("[theta_m, theta_n]", m, n)))
                return run.finish();
            if (!run.expect_zero(commutator(F::h_closed(m), F::h_closed(n)),
                                 mn("[H_m, H_n]", m, n)))
                return run.finish();
        }
    return run.finish();
}

/// Per-suite bounds with the library's default desk-scale ranges.
struct SuiteBounds {
    std::int64_t closed_forms_max = 12;
    std::int64_t series_order = 16;
    std::int64_t bracket_max_m = 6;
    std::int64_t range_lo = -3;
    std::int64_t range_hi = 3;
    std::int64_t commutation_max = 8;
};

/// Canonical suite order; reports are always aggregated in this order.
inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "dolan-grady", "closed-forms", "series",
        "root-vectors", "z-forms",     "commutation"};
    return names;
}

/// Run one suite by name.  Throws std::invalid_argument for an unknown name.
template <coefficient_field S = QHalfScalar, int RelPow = 2>
CheckReport run_suite(const std::string& name, const SuiteBounds& b = {}) {
    if (name == "dolan-grady") return suite_dolan_grady<S, RelPow>();
    if (name == "closed-forms") return suite_closed_forms<S, RelPow>(b.closed_forms_max);
    if (name == "series") return suite_series<S, RelPow>(b.series_order);
    if (name == "root-vectors")
        return suite_root_vectors<S, RelPow>(b.bracket_max_m, b.range_lo, b.range_hi);
    if (name == "z-forms")
        return suite_z_forms<S, RelPow>(b.bracket_max_m, b.range_lo, b.range_hi);
    if (name == "commutation") return suite_commutation<S, RelPow>(b.commutation_max);
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace qtorus
