#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

#include "qtorus/scalar.hpp"
#include "qtorus/torus.hpp"

namespace qtorus {

/// Laurent polynomial in the diagonal-line variable z = q·y·x = q⁻¹·x·y.
///
/// Powers of z span a commutative subalgebra of the torus, so elements
/// supported on the diagonal admit ordinary Laurent-polynomial arithmetic.
/// This class exists for the one operation the noncommutative ambient
/// algebra cannot express: exact division.  Conversions to and from torus
/// elements use z^k = q^(-k²)·x^k·y^k.
template <coefficient_field S>
class ZLaurent {
public:
    ZLaurent() = default;

    static ZLaurent zero() { return {}; }

    static ZLaurent unit() { return monomial(0); }

    /// The single term c·z^k.
    static ZLaurent monomial(std::int64_t k, S c = S::one()) {
        ZLaurent u;
        if (!c.is_zero()) u.terms_.emplace(k, std::move(c));
        return u;
    }

    static ZLaurent from_scalar(S c) { return monomial(0, std::move(c)); }

    bool is_zero() const { return terms_.empty(); }

    /// Exponent → coefficient, ascending; zero coefficients never stored.
    const std::map<std::int64_t, S>& terms() const { return terms_; }

    friend ZLaurent operator+(const ZLaurent& u, const ZLaurent& v) {
        ZLaurent r = u;
        for (const auto& [k, c] : v.terms_) r.add_term(k, c);
        return r;
    }

    friend ZLaurent operator-(const ZLaurent& u, const ZLaurent& v) {
        ZLaurent r = u;
        for (const auto& [k, c] : v.terms_) r.add_term(k, S::zero() - c);
        return r;
    }

    ZLaurent operator-() const { return zero() - *this; }

    friend ZLaurent operator*(const ZLaurent& u, const ZLaurent& v) {
        ZLaurent r;
        for (const auto& [ku, cu] : u.terms_)
            for (const auto& [kv, cv] : v.terms_) r.add_term(ku + kv, cu * cv);
        return r;
    }

    friend ZLaurent operator*(const S& c, const ZLaurent& u) {
        ZLaurent r;
        for (const auto& [k, uc] : u.terms_) r.add_term(k, c * uc);
        return r;
    }

    friend bool operator==(const ZLaurent& u, const ZLaurent& v) {
        return u.terms_ == v.terms_;
    }

    /// Exact quotient u/v.  Throws std::domain_error when v is zero or when
    /// the division leaves a remainder; exactness is part of the contract,
    /// not a silent truncation.
    friend ZLaurent divide_exact(const ZLaurent& u, const ZLaurent& v) {
        if (v.is_zero())
            throw std::domain_error("ZLaurent: division by zero");
        if (u.is_zero()) return zero();
        // Shift both operands so the divisor becomes an ordinary polynomial
        // with nonzero constant term; the net shift moves to the quotient.
        const std::int64_t uv = u.terms_.begin()->first;
        const std::int64_t vv = v.terms_.begin()->first;
        std::map<std::int64_t, S> rem;
        for (const auto& [k, c] : u.terms_) rem.emplace(k - uv, c);
        const std::int64_t vdeg = v.terms_.rbegin()->first - vv;
        const S lead_inv = v.terms_.rbegin()->second.inverse();
        ZLaurent quot;
        while (!rem.empty()) {
            const std::int64_t rdeg = rem.rbegin()->first;
            if (rdeg < vdeg)
                throw std::domain_error("ZLaurent: division is not exact");
            const S qc = rem.rbegin()->second * lead_inv;
            const std::int64_t shift = rdeg - vdeg;
            quot.add_term(shift + uv - vv, qc);
            for (const auto& [k, c] : v.terms_) {
                const std::int64_t kk = k - vv + shift;
                auto it = rem.find(kk);
                S next = (it == rem.end() ? S::zero() : it->second) - qc * c;
                if (next.is_zero()) {
                    if (it != rem.end()) rem.erase(it);
                } else if (it == rem.end()) {
                    rem.emplace(kk, std::move(next));
                } else {
                    it->second = std::move(next);
                }
            }
        }
        return quot;
    }

    /// The torus element Σ cₖ·q^(-k²)·x^k·y^k this Laurent polynomial names.
    template <int RelPow = 2>
    BasicTorusElement<S, RelPow> to_element() const {
        auto e = BasicTorusElement<S, RelPow>::zero();
        for (const auto& [k, c] : terms_)
            e = e + BasicTorusElement<S, RelPow>::single(k, k, c * S::s_power(-2 * k * k));
        return e;
    }

    /// Inverse of to_element.  Throws std::invalid_argument when the element
    /// has support off the diagonal x^k·y^k.
    template <int RelPow>
    static ZLaurent from_element(const BasicTorusElement<S, RelPow>& e) {
        ZLaurent r;
        for (const auto& [m, c] : e.terms()) {
            if (m.a != m.b)
                throw std::invalid_argument(
                    "ZLaurent: element has support off the diagonal");
            r.add_term(m.a, c * S::s_power(2 * m.a * m.a));
        }
        return r;
    }

private:
    void add_term(std::int64_t k, S c) {
        if (c.is_zero()) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, std::move(c));
            return;
        }
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    std::map<std::int64_t, S> terms_;
};

}  // namespace qtorus
