#pragma once

#include "wigner/algebra_check.hpp"
#include "wigner/euclidean_plane.hpp"
#include "wigner/four_vector.hpp"
#include "wigner/grid.hpp"
#include "wigner/linalg.hpp"
#include "wigner/lorentz_algebra.hpp"
#include "wigner/momentum_space.hpp"
#include "wigner/oscillator.hpp"
#include "wigner/parton.hpp"
