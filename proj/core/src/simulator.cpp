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

#include "qdist/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qdist/errors.hpp"

namespace qdist {

namespace {

using C = std::complex<double>;

constexpr std::size_t kColumnRunEntries = std::size_t{1} << 14;  // 256 KiB

void check_width(std::size_t width) {
  if (width > kMaxSimulatedQubits) {
    throw WidthError("simulator is limited to " + std::to_string(kMaxSimulatedQubits) +
                     " qubits, got " + std::to_string(width));
  }
}

// Plain complex product. operator* on std::complex takes the slow
// Annex G path for inf/nan handling, which dominates the oracle's runtime.
inline C mul(C a, C b) {
  return {a.real() * b.real() - a.imag() * b.imag(),
          a.real() * b.imag() + a.imag() * b.real()};
}

// Visits every index with bit q clear, as (base | offset).
template <typename F>
void for_each_pair(std::size_t dim, Qubit q, F&& f) {
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t base = 0; base < dim; base += 2 * bit)
    for (std::size_t i = base; i < base + bit; ++i) f(i, i | bit);
}

// Generic 2x2 action on qubit q: (a0, a1) <- (m00 a0 + m01 a1, m10 a0 + m11 a1).
void apply_1q(C* amps, std::size_t dim, Qubit q, C m00, C m01, C m10, C m11) {
  for_each_pair(dim, q, [&](std::size_t i0, std::size_t i1) {
    const C a0 = amps[i0], a1 = amps[i1];
    amps[i0] = mul(m00, a0) + mul(m01, a1);
    amps[i1] = mul(m10, a0) + mul(m11, a1);
  });
}

// Scales amplitudes by phase0 where bit q is clear and by phase1 where it is set.
void apply_diag(C* amps, std::size_t dim, Qubit q, C phase0, C phase1) {
  const bool scale0 = phase0 != C{1.0, 0.0};
  for_each_pair(dim, q, [&](std::size_t i0, std::size_t i1) {
    if (scale0) amps[i0] = mul(amps[i0], phase0);
    amps[i1] = mul(amps[i1], phase1);
  });
}

void apply_to(const Gate& g, C* amps, std::size_t dim) {
  const C i1{0.0, 1.0};
  const double r = 1.0 / std::numbers::sqrt2;
  auto bit = [&](std::size_t k) { return std::size_t{1} << g.qubits[k]; };
  switch (g.kind) {
    case GateKind::I:
      return;
    case GateKind::X:
      for_each_pair(dim, g.qubits[0], [&](std::size_t i0, std::size_t i1) {
        std::swap(amps[i0], amps[i1]);
      });
      return;
    case GateKind::Y:
      return apply_1q(amps, dim, g.qubits[0], 0, -i1, i1, 0);
    case GateKind::Z:
      return apply_diag(amps, dim, g.qubits[0], 1, -1);
    case GateKind::H:
      return apply_1q(amps, dim, g.qubits[0], r, r, r, -r);
    case GateKind::S:
      return apply_diag(amps, dim, g.qubits[0], 1, i1);
    case GateKind::Sdg:
      return apply_diag(amps, dim, g.qubits[0], 1, -i1);
    case GateKind::T:
      return apply_diag(amps, dim, g.qubits[0], 1, std::polar(1.0, std::numbers::pi / 4));
    case GateKind::Tdg:
      return apply_diag(amps, dim, g.qubits[0], 1, std::polar(1.0, -std::numbers::pi / 4));
    case GateKind::RX: {
      const double c = std::cos(g.params[0] / 2), s = std::sin(g.params[0] / 2);
      return apply_1q(amps, dim, g.qubits[0], c, -i1 * s, -i1 * s, c);
    }
    case GateKind::RY: {
      const double c = std::cos(g.params[0] / 2), s = std::sin(g.params[0] / 2);
      return apply_1q(amps, dim, g.qubits[0], c, -s, s, c);
    }
    case GateKind::RZ:
      return apply_diag(amps, dim, g.qubits[0], std::polar(1.0, -g.params[0] / 2),
                        std::polar(1.0, g.params[0] / 2));
    case GateKind::U3: {
      const double th = g.params[0], ph = g.params[1], la = g.params[2];
      const double c = std::cos(th / 2), s = std::sin(th / 2);
      return apply_1q(amps, dim, g.qubits[0], c, -std::polar(s, la), std::polar(s, ph),
                      std::polar(c, ph + la));
    }
    case GateKind::CX:
      for_each_pair(dim, g.qubits[1], [&](std::size_t i0, std::size_t i1) {
        if (i0 & bit(0)) std::swap(amps[i0], amps[i1]);
      });
      return;
    case GateKind::CZ:
      for (std::size_t i = 0; i < dim; ++i)
        if ((i & bit(0)) && (i & bit(1))) amps[i] = -amps[i];
      return;
    case GateKind::SWAP:
      for (std::size_t i = 0; i < dim; ++i)
        if ((i & bit(0)) && !(i & bit(1))) std::swap(amps[i], amps[(i ^ bit(0)) | bit(1)]);
      return;
    case GateKind::CCX:
      for_each_pair(dim, g.qubits[2], [&](std::size_t i0, std::size_t i1) {
        if ((i0 & bit(0)) && (i0 & bit(1))) std::swap(amps[i0], amps[i1]);
      });
      return;
    case GateKind::TelegateMarker:
      throw MarkerPresentError("the simulator cannot apply telegate markers");
  }
}

}  // namespace

StateVector::StateVector(std::size_t width) : width_(width) {
  check_width(width);
  amps_.assign(std::size_t{1} << width, C{0.0, 0.0});
  amps_[0] = 1.0;
}

StateVector StateVector::basis(std::size_t width, std::size_t index) {
  StateVector s(width);
  if (index >= s.amps_.size()) throw WidthError("basis index out of range");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

double StateVector::norm() const {
  double n = 0.0;
  for (const auto& a : amps_) n += std::norm(a);
  return std::sqrt(n);
}

void apply_gate(const Gate& gate, StateVector& state) {
  for (auto q : gate.qubits) {
    if (q >= state.width()) throw WidthError("gate qubit outside the state");
  }
  apply_to(gate, state.amplitudes().data(), state.amplitudes().size());
}

StateVector apply(const Circuit& circuit, StateVector state) {
  if (circuit.width() != state.width()) {
    throw WidthError("circuit and state widths differ");
  }
  for (const auto& g : circuit.gates()) apply_gate(g, state);
  return state;
}

std::vector<std::complex<double>> circuit_unitary(const Circuit& circuit) {
  check_width(circuit.width());
  if (circuit.has_markers()) {
    throw MarkerPresentError("the simulator cannot apply telegate markers");
  }
  const std::size_t dim = std::size_t{1} << circuit.width();
  std::vector<C> u(dim * dim, C{0.0, 0.0});
  for (std::size_t j = 0; j < dim; ++j) u[j * dim + j] = 1.0;
  // Row bits are the low bits of the flat column-major index, so a run of
  // whole columns can be swept as one vector. Runs are sized to stay in
  // cache while every gate is applied.
  const std::size_t run = std::max<std::size_t>(dim, kColumnRunEntries);
  for (std::size_t start = 0; start < dim * dim; start += run) {
    const std::size_t len = std::min(run, dim * dim - start);
    for (const auto& g : circuit.gates()) apply_to(g, u.data() + start, len);
  }
  return u;
}

double unitary_phase_distance(const std::vector<std::complex<double>>& u1,
                              const std::vector<std::complex<double>>& u2) {
  if (u1.size() != u2.size()) throw WidthError("matrix sizes differ");
  C overlap{0.0, 0.0};
  for (std::size_t i = 0; i < u1.size(); ++i) overlap += std::conj(u2[i]) * u1[i];
  const C lambda = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : C{1.0, 0.0};
  double worst = 0.0;
  for (std::size_t i = 0; i < u1.size(); ++i) {
    worst = std::max(worst, std::abs(u1[i] - lambda * u2[i]));
  }
  return worst;
}

bool unitary_equal_up_to_phase(const Circuit& c1, const Circuit& c2, double tol) {
  if (c1.width() != c2.width()) throw WidthError("circuit widths differ");
  return unitary_phase_distance(circuit_unitary(c1), circuit_unitary(c2)) <= tol;
}

}  // namespace qdist
