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

#include "qdist/optimizer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <map>

#include "qdist/kak.hpp"

namespace qdist {

namespace {

enum class Axis { None, X, Y, Z };

Axis wire_axis(const Gate& g, Qubit q) {
  switch (g.kind) {
    case GateKind::Z:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::T:
    case GateKind::Tdg:
    case GateKind::RZ:
    case GateKind::CZ:
      return Axis::Z;
    case GateKind::X:
    case GateKind::RX:
      return Axis::X;
    case GateKind::Y:
    case GateKind::RY:
      return Axis::Y;
    case GateKind::CX:
      return q == g.qubits[0] ? Axis::Z : Axis::X;
    case GateKind::CCX:
      return q == g.qubits[2] ? Axis::X : Axis::Z;
    default:
      return Axis::None;
  }
}

bool same_support(const Gate& g, const Gate& h) {
  if (g.qubits.size() != h.qubits.size()) return false;
  switch (g.kind) {
    case GateKind::CZ:
    case GateKind::SWAP:
      return (g.qubits[0] == h.qubits[0] && g.qubits[1] == h.qubits[1]) ||
             (g.qubits[0] == h.qubits[1] && g.qubits[1] == h.qubits[0]);
    case GateKind::CCX:
      return g.qubits[2] == h.qubits[2] &&
             ((g.qubits[0] == h.qubits[0] && g.qubits[1] == h.qubits[1]) ||
              (g.qubits[0] == h.qubits[1] && g.qubits[1] == h.qubits[0]));
    default:
      return g.qubits == h.qubits;
  }
}

bool overlaps(const Gate& g, const Gate& h) {
  for (auto q : g.qubits)
    for (auto r : h.qubits)
      if (q == r) return true;
  return false;
}

PassReport begin_report(std::string name, const Circuit& c) {
  PassReport r;
  r.pass = std::move(name);
  r.before = gate_counts(c);
  r.depth_before = depth(c);
  return r;
}

// Runs one sweep repeatedly until it stops changing the circuit.
PassResult to_fixpoint(const std::string& name, const Circuit& input,
                       const std::function<std::vector<Gate>(const Circuit&)>& sweep) {
  PassReport report = begin_report(name, input);
  Circuit current = input;
  report.iterations = 0;
  for (;;) {
    ++report.iterations;
    Circuit next(current.width(), sweep(current), current.id());
    const bool changed = !next.same_gates(current);
    current = std::move(next);
    if (!changed) break;
    report.changed = true;
  }
  report.after = gate_counts(current);
  report.depth_after = depth(current);
  return {std::move(current), std::move(report)};
}

// Shared skeleton of the two stack-based peephole sweeps: `combine` sees the
// gate currently on top of every wire of g and may delete, absorb into or
// keep it.
enum class Combine { Keep, Absorbed, Annihilated };

std::vector<Gate> stack_sweep(
    const Circuit& c,
    const std::function<Combine(Gate& top, const Gate& g)>& combine) {
  std::vector<Gate> out;
  std::vector<char> alive;
  std::vector<std::vector<std::size_t>> stacks(c.width());
  out.reserve(c.size());
  for (const auto& g : c.gates()) {
    if (!g.is_marker()) {
      const auto& s0 = stacks[g.qubits[0]];
      if (!s0.empty()) {
        const std::size_t top = s0.back();
        bool on_top = out[top].qubits.size() == g.qubits.size() &&
                      !out[top].is_marker();
        for (auto q : g.qubits) {
          on_top = on_top && !stacks[q].empty() && stacks[q].back() == top;
        }
        if (on_top) {
          const Combine r = combine(out[top], g);
          if (r == Combine::Annihilated) {
            alive[top] = 0;
            for (auto q : out[top].qubits) stacks[q].pop_back();
            continue;
          }
          if (r == Combine::Absorbed) continue;
        }
      }
    }
    for (auto q : g.qubits) stacks[q].push_back(out.size());
    out.push_back(g);
    alive.push_back(1);
  }
  std::vector<Gate> kept;
  kept.reserve(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (alive[i]) kept.push_back(std::move(out[i]));
  }
  return kept;
}

bool is_rotation(GateKind k) {
  return k == GateKind::RX || k == GateKind::RY || k == GateKind::RZ;
}

}  // namespace

bool is_inverse_pair(const Gate& g, const Gate& h) {
  if (g.is_marker() || h.is_marker() || !same_support(g, h)) return false;
  auto pair_of = [&](GateKind a, GateKind b) {
    return (g.kind == a && h.kind == b) || (g.kind == b && h.kind == a);
  };
  switch (g.kind) {
    case GateKind::I:
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::H:
    case GateKind::CX:
    case GateKind::CZ:
    case GateKind::SWAP:
    case GateKind::CCX:
      return h.kind == g.kind;
    case GateKind::S:
    case GateKind::Sdg:
      return pair_of(GateKind::S, GateKind::Sdg);
    case GateKind::T:
    case GateKind::Tdg:
      return pair_of(GateKind::T, GateKind::Tdg);
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
      return h.kind == g.kind &&
             std::abs(normalize_angle(g.params[0] + h.params[0])) < kAngleTolerance;
    case GateKind::U3:
      return h.kind == GateKind::U3 &&
             phase_distance(Mat2(one_qubit_matrix(h) * one_qubit_matrix(g)),
                            Mat2(Mat2::Identity())) < kAngleTolerance;
    default:
      return false;
  }
}

bool commutes(const Gate& g, const Gate& h) {
  if (!overlaps(g, h)) return true;
  if (g.is_marker() || h.is_marker()) return false;
  if (g.kind == GateKind::I || h.kind == GateKind::I) return true;
  for (auto q : g.qubits) {
    if (std::find(h.qubits.begin(), h.qubits.end(), q) == h.qubits.end()) continue;
    const Axis a = wire_axis(g, q);
    if (a == Axis::None || a != wire_axis(h, q)) return false;
  }
  return true;
}

PassResult cancel_inverse_pairs(const Circuit& circuit) {
  return to_fixpoint("cancel_inverse_pairs", circuit, [](const Circuit& c) {
    return stack_sweep(c, [](Gate& top, const Gate& g) {
      return is_inverse_pair(top, g) ? Combine::Annihilated : Combine::Keep;
    });
  });
}

PassResult merge_rotations(const Circuit& circuit) {
  return to_fixpoint("merge_rotations", circuit, [](const Circuit& c) {
    return stack_sweep(c, [](Gate& top, const Gate& g) {
      if (!is_rotation(g.kind) || top.kind != g.kind) return Combine::Keep;
      const double merged = normalize_angle(top.params[0] + g.params[0]);
      if (std::abs(merged) < kAngleTolerance) return Combine::Annihilated;
      top.params[0] = merged;
      return Combine::Absorbed;
    });
  });
}

PassResult commutative_cancellation(const Circuit& circuit) {
  return to_fixpoint("commutative_cancellation", circuit, [](const Circuit& c) {
    const auto gates = c.gates();
    const std::size_t n = gates.size();
    std::vector<std::vector<std::size_t>> wires(c.width());
    // position of gate i in the wire list of its k-th qubit
    std::vector<std::array<std::size_t, 3>> pos(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < gates[i].qubits.size(); ++k) {
        auto& w = wires[gates[i].qubits[k]];
        pos[i][k] = w.size();
        w.push_back(i);
      }
    }
    std::vector<char> alive(n, 1);
    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < n; ++i) {
      const Gate& g = gates[i];
      if (!alive[i] || g.is_marker()) continue;
      const std::size_t arity = g.qubits.size();
      std::array<std::size_t, 3> cursor{};
      for (std::size_t k = 0; k < arity; ++k) cursor[k] = pos[i][k] + 1;
      for (;;) {
        std::size_t next = kNone;
        for (std::size_t k = 0; k < arity; ++k) {
          const auto& w = wires[g.qubits[k]];
          while (cursor[k] < w.size() && !alive[w[cursor[k]]]) ++cursor[k];
          if (cursor[k] < w.size()) next = std::min(next, w[cursor[k]]);
        }
        if (next == kNone) break;
        for (std::size_t k = 0; k < arity; ++k) {
          const auto& w = wires[g.qubits[k]];
          if (cursor[k] < w.size() && w[cursor[k]] == next) ++cursor[k];
        }
        const Gate& h = gates[next];
        if (is_inverse_pair(g, h)) {
          alive[i] = alive[next] = 0;
          break;
        }
        if (!commutes(g, h)) break;
      }
    }
    std::vector<Gate> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      if (alive[i]) out.push_back(gates[i]);
    return out;
  });
}

std::vector<TwoQubitBlock> collect_blocks(const Circuit& circuit) {
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  const auto gates = circuit.gates();
  std::vector<TwoQubitBlock> blocks;
  std::vector<std::size_t> open(circuit.width(), kNone);
  std::vector<std::vector<std::size_t>> pending(circuit.width());

  auto close = [&](Qubit q) {
    const std::size_t b = open[q];
    if (b == kNone) return;
    open[blocks[b].first] = kNone;
    open[blocks[b].second] = kNone;
  };

  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    if (g.is_marker() || g.qubits.size() == 3) {
      for (auto q : g.qubits) {
        close(q);
        pending[q].clear();
      }
      continue;
    }
    if (g.qubits.size() == 1) {
      const Qubit q = g.qubits[0];
      if (open[q] != kNone) {
        blocks[open[q]].gate_indices.push_back(i);
      } else {
        pending[q].push_back(i);
      }
      continue;
    }
    const Qubit a = g.qubits[0], b = g.qubits[1];
    if (open[a] != kNone && open[a] == open[b]) {
      blocks[open[a]].gate_indices.push_back(i);
      ++blocks[open[a]].two_qubit_gates;
      continue;
    }
    close(a);
    close(b);
    TwoQubitBlock blk;
    blk.first = a;
    blk.second = b;
    blk.gate_indices = pending[a];
    blk.gate_indices.insert(blk.gate_indices.end(), pending[b].begin(),
                            pending[b].end());
    std::sort(blk.gate_indices.begin(), blk.gate_indices.end());
    blk.gate_indices.push_back(i);
    blk.two_qubit_gates = 1;
    pending[a].clear();
    pending[b].clear();
    open[a] = open[b] = blocks.size();
    blocks.push_back(std::move(blk));
  }

  for (auto& blk : blocks) {
    std::vector<Gate> local;
    local.reserve(blk.gate_indices.size());
    for (auto i : blk.gate_indices) {
      Gate g = gates[i];
      for (auto& q : g.qubits) q = q == blk.first ? 0 : 1;
      local.push_back(std::move(g));
    }
    blk.unitary = two_qubit_product(local);
  }
  return blocks;
}

PassResult collect_and_resynthesize_blocks(const Circuit& circuit) {
  return to_fixpoint("collect_and_resynthesize_blocks", circuit, [](const Circuit& c) {
    const auto gates = c.gates();
    std::vector<char> alive(gates.size(), 1);
    std::map<std::size_t, std::vector<Gate>> replacement;
    for (const auto& blk : collect_blocks(c)) {
      if (blk.two_qubit_gates < 2) continue;
      std::vector<Gate> synth = kak_resynthesize(blk.unitary);
      std::size_t synth_2q = 0;
      for (const auto& g : synth) synth_2q += g.qubits.size() == 2;
      const std::size_t old_2q = blk.two_qubit_gates;
      const std::size_t old_total = blk.gate_indices.size();
      const bool no_worse = synth_2q <= old_2q && synth.size() <= old_total;
      const bool better = synth_2q < old_2q || synth.size() < old_total;
      if (!no_worse || !better) continue;
      for (auto& g : synth) {
        for (auto& q : g.qubits) q = q == 0 ? blk.first : blk.second;
      }
      for (auto i : blk.gate_indices) alive[i] = 0;
      replacement[blk.gate_indices.back()] = std::move(synth);
    }
    std::vector<Gate> out;
    out.reserve(gates.size());
    for (std::size_t i = 0; i < gates.size(); ++i) {
      if (auto it = replacement.find(i); it != replacement.end()) {
        for (auto& g : it->second) out.push_back(std::move(g));
      } else if (alive[i]) {
        out.push_back(gates[i]);
      }
    }
    return out;
  });
}

OptimizeResult optimize(const Circuit& circuit, std::size_t max_iterations) {
  using Pass = PassResult (*)(const Circuit&);
  static constexpr Pass kPasses[] = {cancel_inverse_pairs, merge_rotations,
                                     commutative_cancellation,
                                     collect_and_resynthesize_blocks};
  OptimizeResult result{circuit, {}, 0};
  bool changed = true;
  while (changed && result.iterations < std::max<std::size_t>(1, max_iterations)) {
    changed = false;
    ++result.iterations;
    for (Pass pass : kPasses) {
      PassResult r = pass(result.circuit);
      changed = changed || r.report.changed;
      result.circuit = std::move(r.circuit);
      result.reports.push_back(std::move(r.report));
    }
  }
  return result;
}

}  // namespace qdist
