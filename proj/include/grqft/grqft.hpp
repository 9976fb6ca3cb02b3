// grqft.hpp -- umbrella header pulling in the whole library.

#pragma once

#include "grqft/complex_matrix.hpp"
#include "grqft/discriminant.hpp"
#include "grqft/errors.hpp"
#include "grqft/galois_ring.hpp"
#include "grqft/hidden_linear.hpp"
#include "grqft/qft.hpp"
#include "grqft/serialize.hpp"
#include "grqft/verify.hpp"
#include "grqft/zmod.hpp"
