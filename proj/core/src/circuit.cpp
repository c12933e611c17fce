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

#include "qdist/circuit.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

#include "qdist/errors.hpp"

namespace qdist {

namespace {

struct KindInfo {
  GateKind kind;
  std::string_view name;
  std::size_t arity;
  std::size_t params;
};

constexpr std::array<KindInfo, kGateKindCount> kKinds = {{
    {GateKind::I, "id", 1, 0},
    {GateKind::X, "x", 1, 0},
    {GateKind::Y, "y", 1, 0},
    {GateKind::Z, "z", 1, 0},
    {GateKind::H, "h", 1, 0},
    {GateKind::S, "s", 1, 0},
    {GateKind::Sdg, "sdg", 1, 0},
    {GateKind::T, "t", 1, 0},
    {GateKind::Tdg, "tdg", 1, 0},
    {GateKind::RX, "rx", 1, 1},
    {GateKind::RY, "ry", 1, 1},
    {GateKind::RZ, "rz", 1, 1},
    {GateKind::U3, "u3", 1, 3},
    {GateKind::CX, "cx", 2, 0},
    {GateKind::CZ, "cz", 2, 0},
    {GateKind::SWAP, "swap", 2, 0},
    {GateKind::CCX, "ccx", 3, 0},
    {GateKind::TelegateMarker, "telegate", 0, 0},
}};

const KindInfo& info(GateKind kind) {
  return kKinds[static_cast<std::size_t>(kind)];
}

}  // namespace

std::size_t arity(GateKind kind) { return info(kind).arity; }
std::size_t param_count(GateKind kind) { return info(kind).params; }
std::string_view gate_name(GateKind kind) { return info(kind).name; }

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
  for (const auto& k : kKinds) {
    if (k.name == name && k.kind != GateKind::TelegateMarker) return k.kind;
  }
  return std::nullopt;
}

Gate make_gate(GateKind kind, std::vector<Qubit> qubits,
               std::vector<double> params) {
  if (kind == GateKind::TelegateMarker) {
    throw InvalidCircuitError("telegate markers are built with make_marker");
  }
  Gate g{kind, std::move(qubits), std::move(params), std::nullopt};
  if (g.qubits.size() != arity(kind)) {
    throw InvalidCircuitError(
        "gate " + std::string(gate_name(kind)) + " expects " +
        std::to_string(arity(kind)) + " qubits, got " +
        std::to_string(g.qubits.size()));
  }
  if (g.params.size() != param_count(kind)) {
    throw InvalidCircuitError(
        "gate " + std::string(gate_name(kind)) + " expects " +
        std::to_string(param_count(kind)) + " parameters, got " +
        std::to_string(g.params.size()));
  }
  return g;
}

Gate make_marker(std::vector<Qubit> local_qubits, GateKind remote_kind,
                 std::size_t telegate_id) {
  if (local_qubits.empty() || local_qubits.size() > 3) {
    throw InvalidCircuitError("telegate marker must touch 1 to 3 qubits");
  }
  return Gate{GateKind::TelegateMarker, std::move(local_qubits), {},
              TelegatePayload{remote_kind, telegate_id}};
}

void validate_gate(const Gate& gate, std::size_t width) {
  if (gate.is_marker()) {
    if (gate.qubits.empty() || gate.qubits.size() > 3 || !gate.telegate ||
        !gate.params.empty()) {
      throw InvalidCircuitError("malformed telegate marker");
    }
  } else {
    if (gate.qubits.size() != arity(gate.kind) ||
        gate.params.size() != param_count(gate.kind) || gate.telegate) {
      throw InvalidCircuitError("malformed gate " + to_string(gate));
    }
  }
  for (std::size_t i = 0; i < gate.qubits.size(); ++i) {
    if (gate.qubits[i] >= width) {
      throw InvalidCircuitError(
          "qubit " + std::to_string(gate.qubits[i]) +
          " out of range for width " + std::to_string(width));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (gate.qubits[i] == gate.qubits[j]) {
        throw InvalidCircuitError("repeated qubit in " + to_string(gate));
      }
    }
  }
}

std::string to_string(const Gate& gate) {
  std::string out(gate_name(gate.kind));
  if (!gate.params.empty()) {
    out += '(';
    for (std::size_t i = 0; i < gate.params.size(); ++i) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6g", gate.params[i]);
      if (i) out += ',';
      out += buf;
    }
    out += ')';
  }
  if (gate.telegate) {
    out += '<';
    out += gate_name(gate.telegate->remote_kind);
    out += '#' + std::to_string(gate.telegate->telegate_id) + '>';
  }
  for (std::size_t i = 0; i < gate.qubits.size(); ++i) {
    out += i ? ',' : ' ';
    out += std::to_string(gate.qubits[i]);
  }
  return out;
}

Circuit::Circuit(std::size_t width, std::string id)
    : width_(width), id_(std::move(id)) {
  if (width_ == 0) throw InvalidCircuitError("circuit width must be >= 1");
}

Circuit::Circuit(std::size_t width, std::vector<Gate> gates, std::string id)
    : Circuit(width, std::move(id)) {
  for (const auto& g : gates) validate_gate(g, width_);
  gates_ = std::move(gates);
}

Circuit& Circuit::add(Gate gate) {
  validate_gate(gate, width_);
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::add(GateKind kind, std::vector<Qubit> qubits,
                      std::vector<double> params) {
  return add(make_gate(kind, std::move(qubits), std::move(params)));
}

bool Circuit::has_markers() const {
  return std::any_of(gates_.begin(), gates_.end(),
                     [](const Gate& g) { return g.is_marker(); });
}

namespace {

std::size_t frontier_depth(const Circuit& circuit, bool count_markers) {
  std::vector<std::size_t> frontier(circuit.width(), 0);
  std::size_t best = 0;
  for (const auto& g : circuit.gates()) {
    if (g.is_marker() && !count_markers) continue;
    std::size_t layer = 0;
    for (auto q : g.qubits) layer = std::max(layer, frontier[q]);
    ++layer;
    for (auto q : g.qubits) frontier[q] = layer;
    best = std::max(best, layer);
  }
  return best;
}

}  // namespace

std::size_t depth(const Circuit& circuit) {
  return frontier_depth(circuit, true);
}

std::size_t depth_without_markers(const Circuit& circuit) {
  return frontier_depth(circuit, false);
}

GateCounts gate_counts(const Circuit& circuit) {
  GateCounts counts;
  for (const auto& g : circuit.gates()) {
    if (g.is_marker()) {
      ++counts.markers;
      continue;
    }
    switch (g.qubits.size()) {
      case 1: ++counts.one_qubit; break;
      case 2: ++counts.two_qubit; break;
      default: ++counts.three_qubit; break;
    }
  }
  return counts;
}

}  // namespace qdist
