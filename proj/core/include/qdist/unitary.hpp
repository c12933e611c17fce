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

// Small dense matrices for gates acting on one or two qubits. Two-qubit
// matrices index the first qubit as the most significant bit, so
// kron(A, B) applies A to the first qubit and B to the second.

#include <array>
#include <complex>

#include <Eigen/Dense>

#include "qdist/circuit.hpp"

namespace qdist {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;

Mat2 rx_matrix(double theta);
Mat2 ry_matrix(double theta);
Mat2 rz_matrix(double theta);
Mat2 u3_matrix(double theta, double phi, double lambda);

/** Matrix of a 1-qubit gate. */
Mat2 one_qubit_matrix(const Gate& gate);

/** Matrix of CX/CZ/SWAP with gate.qubits[0] as the first (MSB) qubit. */
Mat4 two_qubit_matrix(GateKind kind);

Mat4 kron(const Mat2& a, const Mat2& b);

/** (theta, phi, lambda) with u == e^{i g} u3_matrix(theta, phi, lambda). */
std::array<double, 3> u3_angles(const Mat2& u);

/** max_ij |a_ij - lambda b_ij| minimised over the phase anchored at the
 *  largest entry of b. */
template <typename M>
double phase_distance(const M& a, const M& b) {
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(b(r, c)) == 0.0) return a.cwiseAbs().maxCoeff();
  Complex lambda = a(r, c) / b(r, c);
  const double mag = std::abs(lambda);
  if (mag == 0.0) return b.cwiseAbs().maxCoeff();
  lambda /= mag;
  return (a - lambda * b).cwiseAbs().maxCoeff();
}

/** max |U^dagger U - I| entry. */
template <typename M>
double unitarity_error(const M& u) {
  return (u.adjoint() * u - M::Identity(u.rows(), u.cols()))
      .cwiseAbs()
      .maxCoeff();
}

/** Wraps an angle into (-pi, pi]. */
double normalize_angle(double angle);

}  // namespace qdist
