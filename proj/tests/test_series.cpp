#include <catch2/catch_amalgamated.hpp>

#include <qtorus/series.hpp>

#include <random>

using qtorus::QHalfScalar;
using qtorus::TorusElement;
using Series = qtorus::TruncatedSeries<TorusElement>;

namespace {

QHalfScalar qp(long k) { return qtorus::q_power<QHalfScalar>(k); }
QHalfScalar qi(long n) { return qtorus::q_int<QHalfScalar>(n); }

const TorusElement X = TorusElement::x();
const TorusElement Y = TorusElement::y();
const TorusElement I = TorusElement::unit();

/// 1 + u·t at the given order.
Series linear(const TorusElement& u, std::size_t order) {
    Series s = Series::unit_series(order);
    s[1] = u;
    return s;
}

/// Random series whose coefficients are Laurent polynomials in z — these
/// commute pairwise, as exp/log require.
Series random_diagonal_series(std::mt19937_64& rng, std::size_t order) {
    std::uniform_int_distribution<std::int64_t> zexp(-3, 3);
    std::uniform_int_distribution<int> cnum(-4, 4);
    std::uniform_int_distribution<long> cexp(-4, 4);
    std::uniform_int_distribution<int> nterms(0, 3);
    Series s(order);
    for (std::size_t n = 1; n <= order; ++n)
        for (int i = 0, t = nterms(rng); i < t; ++i) {
            QHalfScalar c =
                QHalfScalar::from_int(cnum(rng)) * QHalfScalar::s_power(cexp(rng));
            s[n] += c * TorusElement::z_power(zexp(rng));
        }
    return s;
}

}  // namespace

TEST_CASE("Cauchy products at fixed truncation") {
    SECTION("unit series is the identity") {
        const Series a = linear(X, 3);
        CHECK(a * Series::unit_series(3) == a);
        CHECK(Series::unit_series(3) * a == a);
    }

    SECTION("truncation drops the cross term at order 1") {
        Series expect = Series::unit_series(1);
        expect[1] = X + Y;
        CHECK(linear(X, 1) * linear(Y, 1) == expect);
    }

    SECTION("cross term appears at order 2, in factor order") {
        Series expect = Series::unit_series(2);
        expect[1] = X + Y;
        expect[2] = X * Y;
        CHECK(linear(X, 2) * linear(Y, 2) == expect);

        // Reversing the factors reverses the coefficient product.
        Series expect_rev = Series::unit_series(2);
        expect_rev[1] = X + Y;
        expect_rev[2] = Y * X;
        CHECK(linear(Y, 2) * linear(X, 2) == expect_rev);
        CHECK_FALSE(expect == expect_rev);
    }

    SECTION("order mismatch is a usage error") {
        CHECK_THROWS_AS(linear(X, 2) * linear(Y, 3), std::invalid_argument);
        CHECK_THROWS_AS(linear(X, 2) + linear(Y, 3), std::invalid_argument);
    }

    SECTION("scalar-coefficient series are central") {
        std::mt19937_64 rng(0x5e210001);
        const Series a = random_diagonal_series(rng, 6);
        Series b = Series::unit_series(6);
        b[1] = TorusElement::from_scalar(qp(2));
        b[3] = TorusElement::from_scalar(qp(-1) - qp(3));
        CHECK(a * b == b * a);
    }
}

TEST_CASE("geometric expansions") {
    SECTION("powers of xy pick up the twist") {
        const Series g = Series::geometric(X * Y, 2);
        CHECK(g[0] == I);
        CHECK(g[1] == X * Y);
        CHECK(g[2] == TorusElement::single(2, 2, qp(-2)));
    }

    SECTION("unit base gives the scalar geometric series") {
        const Series g = Series::geometric(I, 4);
        for (std::size_t n = 0; n <= 4; ++n) CHECK(g[n] == I);
    }

    SECTION("normalized base y^-1·x^-1") {
        const Series g = Series::geometric(TorusElement::y_inv() * TorusElement::x_inv(), 1);
        CHECK(g[1] == TorusElement::single(-1, -1, qp(-2)));
    }

    SECTION("multi-term or zero base is a usage error") {
        CHECK_THROWS_AS(Series::geometric(X + Y, 3), std::invalid_argument);
        CHECK_THROWS_AS(Series::geometric(TorusElement::zero(), 3), std::invalid_argument);
    }
}

TEST_CASE("scalar polynomial factors") {
    SECTION("1 - q^2 t^2 applied to the unit series") {
        Series expect = Series::unit_series(3);
        expect[2] = TorusElement::from_scalar(-qp(2));
        CHECK(Series::unit_series(3).poly_factor(qp(2), 2) == expect);
    }

    SECTION("multiplying back by the matching geometric series is the identity") {
        std::mt19937_64 rng(0x5e210002);
        const Series a = random_diagonal_series(rng, 8);

        // (1 - c·t): invert with the geometric series of the scalar c.
        const QHalfScalar c = qp(2);
        const Series inv1 = Series::geometric(TorusElement::from_scalar(c), 8);
        CHECK(a.poly_factor(c, 1) * inv1 == a);

        // (1 - t^2): invert with 1 + t^2 + t^4 + ...
        Series inv2(8);
        for (std::size_t n = 0; n <= 8; n += 2) inv2[n] = I;
        CHECK(a.poly_factor(QHalfScalar::one(), 2) * inv2 == a);
    }
}

TEST_CASE("series exponentials") {
    SECTION("exp of zero") {
        CHECK(Series(3).exp() == Series::unit_series(3));
    }

    SECTION("exp(x·t) through order 2") {
        Series a(2);
        a[1] = X;
        Series expect = Series::unit_series(2);
        expect[1] = X;
        expect[2] = QHalfScalar::from_int(2).inverse() * (X * X);
        CHECK(a.exp() == expect);
    }

    SECTION("preconditions") {
        CHECK_THROWS_AS(Series::unit_series(3).exp(), std::domain_error);
        Series bad(3);
        bad[1] = X;
        bad[2] = Y;  // [x, y] != 0
        CHECK_THROWS_AS(bad.exp(), std::domain_error);
        CHECK_FALSE(bad.coefficients_commute());
    }
}

TEST_CASE("series logarithms") {
    SECTION("log of one") {
        CHECK(Series::unit_series(3).log() == Series(3));
    }

    SECTION("log of a geometric series is the dilogarithm-free expansion") {
        const Series l = Series::geometric(X * Y, 5).log();
        CHECK(l[0].is_zero());
        for (std::size_t n = 1; n <= 5; ++n)
            CHECK(l[n] == QHalfScalar::from_int(static_cast<long>(n)).inverse() *
                              (X * Y).pow(static_cast<std::int64_t>(n)));
    }

    SECTION("constant term must be one") {
        CHECK_THROWS_AS(Series(3).log(), std::domain_error);
    }

    SECTION("round trips on random commuting series") {
        std::mt19937_64 rng(0x5e210003);
        for (int i = 0; i < 5; ++i) {
            Series a = random_diagonal_series(rng, 10);
            CHECK(a.exp().log() == a);
            Series b = a;
            b[0] = I;
            b[1] = TorusElement::zero();  // keep it a log-domain series
            CHECK(b.log().exp() == b);
        }
    }
}

TEST_CASE("generating-function products") {
    const std::size_t N = 8;
    const Series tp = qtorus::theta_prime_product_series<QHalfScalar>(N);
    const Series t = qtorus::theta_product_series<QHalfScalar>(N);

    SECTION("low-order coefficients match hand expansion") {
        CHECK(tp[0] == I);
        // t^1: xy + yx + x^-1y^-1 + y^-1x^-1, normalized.
        const TorusElement deg1 =
            (QHalfScalar::one() + qp(-2)) *
            (TorusElement::single(1, 1) + TorusElement::single(-1, -1));
        CHECK(tp[1] == deg1);
        CHECK(t[1] == deg1);  // Θ_1 = Θ′_1
        // t^2 of Θ′: [3]_q·(z^2 + z^-2) + 2.
        const TorusElement z2 = TorusElement::z_power(2) + TorusElement::z_power(-2);
        CHECK(tp[2] == qi(3) * z2 + QHalfScalar::from_int(2) * I);
        // t^2 of Θ: [3]_q·(z^2 + z^-2) + 1 + q^-2.
        CHECK(t[2] == qi(3) * z2 + (QHalfScalar::one() + qp(-2)) * I);
    }

    SECTION("cleared denominator relation between the two products") {
        CHECK(t.poly_factor(qp(-2), 2) == tp.poly_factor(QHalfScalar::one(), 2));
    }

    SECTION("coefficients commute, so log is defined") {
        CHECK(tp.coefficients_commute());
        CHECK(t.coefficients_commute());
        CHECK_NOTHROW(tp.log());
        CHECK(tp.log().exp() == tp);
    }
}
