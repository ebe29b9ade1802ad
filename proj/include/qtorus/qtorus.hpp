#pragma once

/**
 * @file qtorus.hpp
 * Umbrella header: exact symbolic computation in the quantum torus.
 *
 * The library models the Laurent-polynomial algebra generated by x^±1, y^±1
 * over Q(q^(1/2)) subject to x·y = q²·y·x, builds its distinguished element
 * families by independent routes (recursions, closed forms, generator words,
 * generating functions), and verifies the bracket identities that connect
 * them, all in exact arithmetic.
 */

#include "qtorus/scalar.hpp"
#include "qtorus/torus.hpp"
#include "qtorus/series.hpp"
#include "qtorus/families.hpp"
#include "qtorus/laurent.hpp"
#include "qtorus/json_io.hpp"
#include "qtorus/suites.hpp"
