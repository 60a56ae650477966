#pragma once

#include <vector>

#include "aq/aq.hpp"
#include "oracles.hpp"

namespace testutil {

template <std::size_t Dim>
oracle::Amps amps(const aq::StateVector<Dim>& s) {
  return {s.amp.begin(), s.amp.end()};
}

inline aq::TwoQubitState two_qubit(const oracle::Amps& a) { return {{a[0], a[1], a[2], a[3]}}; }

}  // namespace testutil
