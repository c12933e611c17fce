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
 * @file circuit.hpp
 * @brief Gate taxonomy, the Circuit value type and its structural metrics.
 *
 * The gate set is closed. Every kind has a fixed arity and parameter count,
 * except TelegateMarker, which stands in for one side of a remote gate and
 * touches between one and three local qubits.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qdist {

using Qubit = std::uint32_t;

enum class GateKind : std::uint8_t {
  I,
  X,
  Y,
  Z,
  H,
  S,
  Sdg,
  T,
  Tdg,
  RX,
  RY,
  RZ,
  U3,
  CX,
  CZ,
  SWAP,
  CCX,
  TelegateMarker,
};

inline constexpr std::size_t kGateKindCount = 18;

/** Number of qubits the kind acts on. Markers report 0 (variable). */
std::size_t arity(GateKind kind);
std::size_t param_count(GateKind kind);
/** Lower-case QASM mnemonic ("cx", "u3", ...). */
std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);

/** Opaque payload carried by a telegate marker. */
struct TelegatePayload {
  GateKind remote_kind = GateKind::I;
  std::size_t telegate_id = 0;
  bool operator==(const TelegatePayload&) const = default;
};

struct Gate {
  GateKind kind = GateKind::I;
  std::vector<Qubit> qubits;
  std::vector<double> params;
  std::optional<TelegatePayload> telegate;

  bool is_marker() const { return kind == GateKind::TelegateMarker; }
  bool operator==(const Gate&) const = default;
};

/** Build a gate and check its arity and parameter count. */
Gate make_gate(GateKind kind, std::vector<Qubit> qubits,
               std::vector<double> params = {});
Gate make_marker(std::vector<Qubit> local_qubits, GateKind remote_kind,
                 std::size_t telegate_id);

/** Throws InvalidCircuitError if the gate is malformed for a given width. */
void validate_gate(const Gate& gate, std::size_t width);

std::string to_string(const Gate& gate);

/**
 * An ordered gate list over a fixed register of `width` qubits.
 *
 * Circuits are built once and then treated as values: every rewrite in the
 * library produces a new Circuit.
 */
class Circuit {
 public:
  explicit Circuit(std::size_t width, std::string id = {});
  Circuit(std::size_t width, std::vector<Gate> gates, std::string id = {});

  std::size_t width() const { return width_; }
  const std::string& id() const { return id_; }
  void set_id(std::string id) { id_ = std::move(id); }
  std::span<const Gate> gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  const Gate& operator[](std::size_t i) const { return gates_[i]; }

  /** Appends after validating against the register. */
  Circuit& add(Gate gate);
  Circuit& add(GateKind kind, std::vector<Qubit> qubits,
               std::vector<double> params = {});

  bool has_markers() const;

  /** Gate lists and widths are equal; the id is ignored. */
  bool same_gates(const Circuit& other) const {
    return width_ == other.width_ && gates_ == other.gates_;
  }

 private:
  std::size_t width_;
  std::vector<Gate> gates_;
  std::string id_;
};

struct GateCounts {
  std::size_t one_qubit = 0;
  std::size_t two_qubit = 0;
  std::size_t three_qubit = 0;
  std::size_t markers = 0;

  std::size_t total() const { return one_qubit + two_qubit + three_qubit; }
  bool operator==(const GateCounts&) const = default;
};

/**
 * Length of the longest chain of gates that share qubits. A marker occupies
 * one layer on every local qubit it touches.
 */
std::size_t depth(const Circuit& circuit);

/** Depth with markers skipped entirely. */
std::size_t depth_without_markers(const Circuit& circuit);

/** Counts per arity class; markers are reported separately. */
GateCounts gate_counts(const Circuit& circuit);

}  // namespace qdist
