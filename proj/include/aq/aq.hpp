#pragma once

#include "aq/bipolar_nls.hpp"
#include "aq/complex_plane.hpp"
#include "aq/error.hpp"
#include "aq/extended_complex.hpp"
#include "aq/generic_two_qubit.hpp"
#include "aq/multi_qubit.hpp"
#include "aq/single_qubit.hpp"
#include "aq/state.hpp"
#include "aq/verify.hpp"
