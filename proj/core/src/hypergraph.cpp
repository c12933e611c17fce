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

#include "qdist/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "qdist/errors.hpp"

namespace qdist {

std::uint64_t Hypergraph::total_weight() const {
  std::uint64_t w = 0;
  for (const auto& n : nets) w += n.weight;
  return w;
}

void Hypergraph::validate() const {
  for (const auto& n : nets) {
    if (n.vertices.size() < 2 || n.vertices.size() > 3 || n.weight == 0) {
      throw InvalidCircuitError("net must have 2-3 vertices and weight >= 1");
    }
    for (std::size_t i = 0; i < n.vertices.size(); ++i) {
      if (n.vertices[i] >= vertex_count ||
          (i > 0 && n.vertices[i] <= n.vertices[i - 1])) {
        throw InvalidCircuitError("net vertices must be sorted, distinct and in range");
      }
    }
  }
}

Hypergraph build_hypergraph(const Circuit& circuit) {
  Hypergraph h;
  h.vertex_count = circuit.width();
  std::map<std::vector<Vertex>, std::size_t> index;
  for (const auto& g : circuit.gates()) {
    if (g.is_marker() || g.qubits.size() < 2) continue;
    std::vector<Vertex> support(g.qubits.begin(), g.qubits.end());
    std::sort(support.begin(), support.end());
    auto [it, inserted] = index.emplace(support, h.nets.size());
    if (inserted) {
      h.nets.push_back({std::move(support), 1});
    } else {
      ++h.nets[it->second].weight;
    }
  }
  return h;
}

std::vector<std::size_t> Partition::part_sizes() const {
  std::vector<std::size_t> sizes(k, 0);
  for (auto p : assignment) ++sizes.at(p);
  return sizes;
}

std::size_t Partition::max_part_size() const {
  const auto sizes = part_sizes();
  return sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
}

std::size_t balance_bound(std::size_t vertex_count, std::size_t k, double epsilon) {
  if (k == 0) throw InfeasiblePartitionError("k must be >= 1");
  const double exact = (1.0 + epsilon) * static_cast<double>(vertex_count) /
                       static_cast<double>(k);
  // Guard against 1.03 * 100 landing a hair above an integer.
  return static_cast<std::size_t>(std::ceil(exact - 1e-9));
}

bool is_balanced(const Partition& p) {
  const auto sizes = p.part_sizes();
  const std::size_t bound = balance_bound(p.assignment.size(), p.k, p.epsilon);
  for (auto s : sizes) {
    if (s > bound) return false;
    if (s == 0 && p.k <= p.assignment.size()) return false;
  }
  return true;
}

namespace {

std::size_t parts_touched(const Net& n, const Partition& p) {
  PartId seen[3];
  std::size_t count = 0;
  for (auto v : n.vertices) {
    const PartId part = p.assignment.at(v);
    if (std::find(seen, seen + count, part) == seen + count) seen[count++] = part;
  }
  return count;
}

}  // namespace

std::uint64_t cut_cost(const Hypergraph& h, const Partition& p) {
  std::uint64_t cost = 0;
  for (const auto& n : h.nets) {
    if (parts_touched(n, p) > 1) cost += n.weight;
  }
  return cost;
}

std::uint64_t connectivity_minus_1(const Hypergraph& h, const Partition& p) {
  std::uint64_t cost = 0;
  for (const auto& n : h.nets) cost += n.weight * (parts_touched(n, p) - 1);
  return cost;
}

}  // namespace qdist
