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

#include "qdist/distributor.hpp"

#include <algorithm>
#include <limits>

#include "qdist/errors.hpp"

namespace qdist {

DistributedCircuit distribute(const Circuit& circuit, const Partition& p) {
  if (circuit.has_markers()) {
    throw MarkerPresentError("cannot distribute a circuit that already has markers");
  }
  if (p.assignment.size() != circuit.width()) {
    throw WidthError("assignment covers " + std::to_string(p.assignment.size()) +
                     " qubits, circuit has " + std::to_string(circuit.width()));
  }
  for (auto part : p.assignment) {
    if (part >= p.k) throw WidthError("assignment refers to a part >= k");
  }

  DistributedCircuit d;
  d.width = circuit.width();
  d.id = circuit.id();
  std::vector<Qubit> local(circuit.width());
  std::vector<std::vector<Qubit>> members(p.k);
  for (Qubit q = 0; q < circuit.width(); ++q) {
    local[q] = static_cast<Qubit>(members[p.assignment[q]].size());
    members[p.assignment[q]].push_back(q);
  }
  std::vector<std::vector<Gate>> gates(p.k);
  std::vector<std::vector<std::size_t>> positions(p.k);

  const auto source = circuit.gates();
  for (std::size_t i = 0; i < source.size(); ++i) {
    const Gate& g = source[i];
    std::vector<PartId> touched;
    for (auto q : g.qubits) touched.push_back(p.assignment[q]);
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());

    if (touched.size() == 1) {
      Gate copy = g;
      for (auto& q : copy.qubits) q = local[q];
      gates[touched[0]].push_back(std::move(copy));
      positions[touched[0]].push_back(i);
      continue;
    }
    const std::size_t id = d.telegates.size();
    for (auto part : touched) {
      std::vector<Qubit> mine;
      for (auto q : g.qubits)
        if (p.assignment[q] == part) mine.push_back(local[q]);
      gates[part].push_back(make_marker(std::move(mine), g.kind, id));
      positions[part].push_back(i);
    }
    d.telegates.push_back({g, std::move(touched), i});
  }

  for (std::size_t part = 0; part < p.k; ++part) {
    const std::size_t width = std::max<std::size_t>(1, members[part].size());
    d.parts.push_back({Circuit(width, std::move(gates[part]), circuit.id()),
                       std::move(members[part]), std::move(positions[part])});
  }
  return d;
}

DistributedMetrics distributed_metrics(const DistributedCircuit& d) {
  DistributedMetrics m;
  m.n_nonlocal = d.telegates.size();
  for (const auto& t : d.telegates) {
    if (t.gate.qubits.size() == 2) ++m.nonlocal_counts.two_qubit;
    else ++m.nonlocal_counts.three_qubit;
  }
  for (const auto& part : d.parts) {
    const GateCounts c = gate_counts(part.circuit);
    m.counts.one_qubit += c.one_qubit;
    m.counts.two_qubit += c.two_qubit;
    m.counts.three_qubit += c.three_qubit;
    m.counts.markers += c.markers;
    const std::size_t dep = depth(part.circuit);
    const std::size_t dep_local = depth_without_markers(part.circuit);
    m.depth_max = std::max(m.depth_max, dep);
    m.depth_max_without_markers = std::max(m.depth_max_without_markers, dep_local);
    m.depth_mean += static_cast<double>(dep);
    m.depth_mean_without_markers += static_cast<double>(dep_local);
  }
  if (!d.parts.empty()) {
    m.depth_mean /= static_cast<double>(d.parts.size());
    m.depth_mean_without_markers /= static_cast<double>(d.parts.size());
  }
  return m;
}

namespace {

Gate to_global(const Gate& g, const Subcircuit& part) {
  Gate out = g;
  for (auto& q : out.qubits) q = part.local_to_global.at(q);
  return out;
}

Circuit reassemble_by_position(const DistributedCircuit& d) {
  std::vector<std::pair<std::size_t, Gate>> tagged;
  std::vector<char> emitted(d.telegates.size(), 0);
  for (const auto& part : d.parts) {
    const auto gates = part.circuit.gates();
    for (std::size_t i = 0; i < gates.size(); ++i) {
      if (!gates[i].is_marker()) {
        tagged.emplace_back(part.source_positions[i], to_global(gates[i], part));
        continue;
      }
      const std::size_t id = gates[i].telegate->telegate_id;
      if (id >= d.telegates.size()) throw InvalidCircuitError("unknown telegate id");
      if (!emitted[id]) {
        emitted[id] = 1;
        tagged.emplace_back(d.telegates[id].position, d.telegates[id].gate);
      }
    }
  }
  std::stable_sort(tagged.begin(), tagged.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  Circuit c(d.width, d.id);
  for (auto& [pos, g] : tagged) c.add(std::move(g));
  return c;
}

Circuit reassemble_by_markers(const DistributedCircuit& d) {
  Circuit c(d.width, d.id);
  std::vector<std::size_t> cursor(d.parts.size(), 0);
  auto flush_until_marker = [&](std::size_t p, std::size_t telegate_id) {
    const auto gates = d.parts[p].circuit.gates();
    for (; cursor[p] < gates.size(); ++cursor[p]) {
      const Gate& g = gates[cursor[p]];
      if (g.is_marker()) {
        if (telegate_id == std::numeric_limits<std::size_t>::max() ||
            g.telegate->telegate_id != telegate_id) {
          throw InvalidCircuitError("marker order does not match telegate records");
        }
        ++cursor[p];
        return;
      }
      c.add(to_global(g, d.parts[p]));
    }
    if (telegate_id != std::numeric_limits<std::size_t>::max()) {
      throw InvalidCircuitError("missing marker for telegate " + std::to_string(telegate_id));
    }
  };
  for (std::size_t t = 0; t < d.telegates.size(); ++t) {
    for (auto p : d.telegates[t].parts) flush_until_marker(p, t);
    c.add(d.telegates[t].gate);
  }
  for (std::size_t p = 0; p < d.parts.size(); ++p) {
    flush_until_marker(p, std::numeric_limits<std::size_t>::max());
  }
  return c;
}

}  // namespace

Circuit reassemble(const DistributedCircuit& d) {
  const bool positioned = std::all_of(d.parts.begin(), d.parts.end(), [](const auto& p) {
    return p.source_positions.size() == p.circuit.size();
  });
  return positioned ? reassemble_by_position(d) : reassemble_by_markers(d);
}

}  // namespace qdist
