#pragma once

// Umbrella header: exact golden (Fibonacci) calculus and Carlitz matrices.

#include "goldfib/carlitz.hpp"
#include "goldfib/golden_analytic.hpp"
#include "goldfib/golden_ring.hpp"
#include "goldfib/goldpoly.hpp"
#include "goldfib/poly.hpp"
#include "goldfib/render.hpp"
#include "goldfib/scalar.hpp"
#include "goldfib/sequences.hpp"
#include "goldfib/verify.hpp"
