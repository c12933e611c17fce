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
 * @file kak.hpp
 * @brief Cartan (KAK) decomposition of two-qubit unitaries and CX-optimal
 *        resynthesis.
 *
 * Every U in U(4) factors as
 *
 *     U = g (L0 (x) L1) exp(i (a XX + b YY + c ZZ)) (R0 (x) R1)
 *
 * with single-qubit L*, R* and a global phase g. After reduction into the
 * Weyl chamber (pi/4 >= a >= b >= |c|, c >= 0 when a = pi/4) the
 * interaction coefficients decide how many CX gates U needs:
 *
 *   - 0 if a = b = c = 0 (U is local)
 *   - 1 if a = pi/4 and b = c = 0 (U is locally a CX)
 *   - 2 if c = 0
 *   - 3 otherwise
 */

#include <vector>

#include "qdist/circuit.hpp"
#include "qdist/unitary.hpp"

namespace qdist {

/** Coefficients above this magnitude are non-zero. */
inline constexpr double kWeylTolerance = 1e-9;
/** Reconstruction tolerance (max entry, up to global phase). */
inline constexpr double kSynthesisTolerance = 1e-7;
/** Inputs with max |U^dagger U - I| above this are rejected. */
inline constexpr double kUnitarityTolerance = 1e-9;

struct WeylCoordinates {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

/** exp(i (a XX + b YY + c ZZ)). */
Mat4 canonical_gate(const WeylCoordinates& w);

struct KakDecomposition {
  Complex global_phase{1.0, 0.0};
  /** Applied after the interaction, on the first and second qubit. */
  Mat2 left_first = Mat2::Identity();
  Mat2 left_second = Mat2::Identity();
  /** Applied before the interaction. */
  Mat2 right_first = Mat2::Identity();
  Mat2 right_second = Mat2::Identity();
  WeylCoordinates coords;

  Mat4 matrix() const;
};

/** Throws NonUnitaryError. The coordinates are in the Weyl chamber. */
KakDecomposition kak_decompose(const Mat4& u);

/** 0..3 as described in the file comment. */
int minimal_cx_count(const WeylCoordinates& w);

/**
 * Gates on abstract qubits 0 and 1 (qubit 0 is the most significant in the
 * matrix convention) whose product equals u up to a global phase. Uses
 * minimal_cx_count CX gates with U3 gates between them; single-qubit layers
 * that are the identity up to phase are dropped.
 */
std::vector<Gate> kak_resynthesize(const Mat4& u);

/** Product of a gate list on qubits {0, 1}, first gate applied first. */
Mat4 two_qubit_product(const std::vector<Gate>& gates);

}  // namespace qdist
