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

#include "qdist/unitary.hpp"

#include <cmath>
#include <numbers>

#include "qdist/errors.hpp"

namespace qdist {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};
}  // namespace

Mat2 rx_matrix(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  Mat2 m;
  m << c, -kI * s, -kI * s, c;
  return m;
}

Mat2 ry_matrix(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  Mat2 m;
  m << c, -s, s, c;
  return m;
}

Mat2 rz_matrix(double theta) {
  Mat2 m;
  m << std::exp(-kI * (theta / 2)), 0, 0, std::exp(kI * (theta / 2));
  return m;
}

Mat2 u3_matrix(double theta, double phi, double lambda) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  Mat2 m;
  m << c, -std::exp(kI * lambda) * s, std::exp(kI * phi) * s,
      std::exp(kI * (phi + lambda)) * c;
  return m;
}

Mat2 one_qubit_matrix(const Gate& gate) {
  const double r = 1.0 / std::numbers::sqrt2;
  Mat2 m;
  switch (gate.kind) {
    case GateKind::I: return Mat2::Identity();
    case GateKind::X: m << 0, 1, 1, 0; return m;
    case GateKind::Y: m << 0, -kI, kI, 0; return m;
    case GateKind::Z: m << 1, 0, 0, -1; return m;
    case GateKind::H: m << r, r, r, -r; return m;
    case GateKind::S: m << 1, 0, 0, kI; return m;
    case GateKind::Sdg: m << 1, 0, 0, -kI; return m;
    case GateKind::T: m << 1, 0, 0, std::exp(kI * (kPi / 4)); return m;
    case GateKind::Tdg: m << 1, 0, 0, std::exp(-kI * (kPi / 4)); return m;
    case GateKind::RX: return rx_matrix(gate.params[0]);
    case GateKind::RY: return ry_matrix(gate.params[0]);
    case GateKind::RZ: return rz_matrix(gate.params[0]);
    case GateKind::U3:
      return u3_matrix(gate.params[0], gate.params[1], gate.params[2]);
    default:
      throw InvalidCircuitError("not a 1-qubit gate: " + to_string(gate));
  }
}

Mat4 two_qubit_matrix(GateKind kind) {
  Mat4 m = Mat4::Zero();
  switch (kind) {
    case GateKind::CX:
      m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
      return m;
    case GateKind::CZ:
      m(0, 0) = m(1, 1) = m(2, 2) = 1;
      m(3, 3) = -1;
      return m;
    case GateKind::SWAP:
      m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1;
      return m;
    default:
      throw InvalidCircuitError("not a 2-qubit gate kind");
  }
}

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return m;
}

std::array<double, 3> u3_angles(const Mat2& u) {
  const double c = std::abs(u(0, 0));
  const double s = std::abs(u(1, 0));
  const double theta = 2.0 * std::atan2(s, c);
  double phi, lambda;
  if (c >= s) {
    const double g = std::arg(u(0, 0));
    const double sum = std::arg(u(1, 1)) - g;
    if (s > 1e-14) {
      phi = std::arg(u(1, 0)) - g;
      lambda = sum - phi;
    } else {
      phi = 0.0;
      lambda = sum;
    }
  } else {
    const double g_plus_phi = std::arg(u(1, 0));
    const double g_plus_lambda = std::arg(-u(0, 1));
    if (c > 1e-14) {
      const double g = std::arg(u(0, 0));
      phi = g_plus_phi - g;
      lambda = g_plus_lambda - g;
    } else {
      phi = g_plus_phi - g_plus_lambda;
      lambda = 0.0;
    }
  }
  return {theta, normalize_angle(phi), normalize_angle(lambda)};
}

double normalize_angle(double angle) {
  double a = std::remainder(angle, 2 * kPi);  // [-pi, pi]
  if (a <= -kPi) a += 2 * kPi;
  return a;
}

}  // namespace qdist
