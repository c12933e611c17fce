// Copyright 2026 The qdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

/**
 * @file simulator.hpp
 * @brief Small dense statevector simulator used as an equivalence oracle.
 *
 * Deliberately independent of the synthesis code: gate actions are written
 * out as amplitude updates rather than built from the matrices in
 * unitary.hpp, and qubit q is bit q of the basis index (little-endian).
 */

#include <complex>
#include <cstddef>
#include <vector>

#include "qdist/circuit.hpp"

namespace qdist {

inline constexpr std::size_t kMaxSimulatedQubits = 10;

class StateVector {
 public:
  /** |0...0> on `width` qubits. Throws WidthError above the cap. */
  explicit StateVector(std::size_t width);
  /** Computational basis state |index>. */
  static StateVector basis(std::size_t width, std::size_t index);

  std::size_t width() const { return width_; }
  const std::vector<std::complex<double>>& amplitudes() const { return amps_; }
  std::vector<std::complex<double>>& amplitudes() { return amps_; }
  double norm() const;

 private:
  std::size_t width_;
  std::vector<std::complex<double>> amps_;
};

/** Applies one gate in place. Throws MarkerPresentError on a marker. */
void apply_gate(const Gate& gate, StateVector& state);

/** Throws MarkerPresentError or WidthError. */
StateVector apply(const Circuit& circuit, StateVector state);

/**
 * Full unitary, column j = apply(circuit, |j>), stored column-major.
 */
std::vector<std::complex<double>> circuit_unitary(const Circuit& circuit);

/**
 * max_ij |U1_ij - lambda U2_ij| minimised over a single unit phase lambda
 * (chosen by least squares), for two equally sized column-major matrices.
 */
double unitary_phase_distance(const std::vector<std::complex<double>>& u1,
                              const std::vector<std::complex<double>>& u2);

/** Throws WidthError on mismatched widths or width above the cap. */
bool unitary_equal_up_to_phase(const Circuit& c1, const Circuit& c2, double tol);

}  // namespace qdist
