#pragma once

/**
 * @file json_io.hpp
 * Deterministic JSON renderings of scalars, torus elements, and truncated
 * series.  These are the interchange formats of the command-line tool:
 *
 *  - scalar:  {"num": {"<s-exp>": "<int>", ...}, "den": {...}}  (exact field)
 *             {"value": "<rational>"}                           (numeric field)
 *  - element: {"terms": [{"a": int, "b": int, "coeff": <scalar>}, ...]}
 *  - series:  {"order": N, "coeffs": [<element>, ...]}
 *
 * Ordering is fixed everywhere (polynomial keys ascending, element terms in
 * the render order of BasicTorusElement), so output is reproducible
 * byte-for-byte for identical inputs.
 */

#include <cstddef>
#include <string>

#include <json.hpp>

#include "qtorus/polynomial.hpp"
#include "qtorus/scalar.hpp"
#include "qtorus/series.hpp"
#include "qtorus/torus.hpp"

namespace qtorus {

using ordered_json = nlohmann::ordered_json;

/// Z[s] polynomial as {"exponent": "coefficient"} with ascending exponents;
/// zero coefficients are omitted, so the zero polynomial is {}.
inline ordered_json poly_json(const IntPoly& p) {
    ordered_json o = ordered_json::object();
    const auto& cs = p.coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i)
        if (cs[i] != 0) o[std::to_string(i)] = cs[i].str();
    return o;
}

inline ordered_json scalar_json(const QHalfScalar& c) {
    return ordered_json{{"num", poly_json(c.num())}, {"den", poly_json(c.den())}};
}

inline ordered_json scalar_json(const EvalScalar& c) {
    return ordered_json{{"value", c.value().str()}};
}

template <coefficient_field S, int RelPow>
ordered_json element_json(const BasicTorusElement<S, RelPow>& u) {
    ordered_json terms = ordered_json::array();
    for (const auto& [m, c] : u.terms())
        terms.push_back(ordered_json{{"a", m.a}, {"b", m.b}, {"coeff", scalar_json(c)}});
    return ordered_json{{"terms", std::move(terms)}};
}

template <class Elem>
ordered_json series_json(const TruncatedSeries<Elem>& f) {
    ordered_json coeffs = ordered_json::array();
    for (std::size_t n = 0; n <= f.order(); ++n) coeffs.push_back(element_json(f[n]));
    return ordered_json{{"order", f.order()}, {"coeffs", std::move(coeffs)}};
}

}  // namespace qtorus
