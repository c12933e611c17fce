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

#include "qdist/partitioner.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <tuple>

#include "qdist/errors.hpp"
#include "qdist/random.hpp"

namespace qdist {

namespace {

constexpr std::size_t kInitialTries = 8;
constexpr std::size_t kMaxFmPasses = 8;
constexpr std::size_t kMaxFruitlessMoves = 64;

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Level {
  std::size_t n = 0;
  std::vector<std::size_t> vertex_weight;
  std::vector<std::vector<Vertex>> pins;
  std::vector<std::int64_t> net_weight;
  std::vector<std::vector<std::uint32_t>> incident;
  /** Vertex of this level -> vertex of the next coarser level. */
  std::vector<Vertex> to_coarse;

  void build_incidence() {
    incident.assign(n, {});
    for (std::uint32_t e = 0; e < pins.size(); ++e)
      for (auto v : pins[e]) incident[v].push_back(e);
  }
};

Level from_hypergraph(const Hypergraph& h) {
  Level l;
  l.n = h.vertex_count;
  l.vertex_weight.assign(l.n, 1);
  for (const auto& net : h.nets) {
    l.pins.push_back(net.vertices);
    l.net_weight.push_back(static_cast<std::int64_t>(net.weight));
  }
  l.build_incidence();
  return l;
}

// Heavy-net matching. Returns nullopt when it would shrink the level by
// less than 5%.
std::optional<Level> coarsen(Level& fine, std::size_t cap, Rng& rng) {
  std::vector<Vertex> order(fine.n);
  std::iota(order.begin(), order.end(), 0);
  shuffle(order, rng);

  constexpr Vertex kUnmatched = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> mate(fine.n, kUnmatched);
  std::vector<double> score(fine.n, 0.0);
  std::vector<Vertex> touched;
  for (auto u : order) {
    if (mate[u] != kUnmatched) continue;
    touched.clear();
    for (auto e : fine.incident[u]) {
      const double r = static_cast<double>(fine.net_weight[e]) /
                       static_cast<double>(fine.pins[e].size() - 1);
      for (auto v : fine.pins[e]) {
        if (v == u || mate[v] != kUnmatched) continue;
        if (fine.vertex_weight[u] + fine.vertex_weight[v] > cap) continue;
        if (score[v] == 0.0) touched.push_back(v);
        score[v] += r;
      }
    }
    Vertex best = kUnmatched;
    for (auto v : touched) {
      if (best == kUnmatched || score[v] > score[best] ||
          (score[v] == score[best] &&
           std::tie(fine.vertex_weight[v], v) < std::tie(fine.vertex_weight[best], best))) {
        best = v;
      }
    }
    for (auto v : touched) score[v] = 0.0;
    mate[u] = best == kUnmatched ? u : best;
    if (best != kUnmatched) mate[best] = u;
  }

  Level coarse;
  fine.to_coarse.assign(fine.n, kUnmatched);
  for (Vertex v = 0; v < fine.n; ++v) {
    if (fine.to_coarse[v] != kUnmatched) continue;
    const auto c = static_cast<Vertex>(coarse.n++);
    fine.to_coarse[v] = c;
    fine.to_coarse[mate[v]] = c;
    coarse.vertex_weight.push_back(fine.vertex_weight[v] +
                                   (mate[v] != v ? fine.vertex_weight[mate[v]] : 0));
  }
  if (coarse.n * 20 > fine.n * 19) return std::nullopt;

  std::map<std::vector<Vertex>, std::size_t> index;
  for (std::size_t e = 0; e < fine.pins.size(); ++e) {
    std::vector<Vertex> p;
    for (auto v : fine.pins[e]) p.push_back(fine.to_coarse[v]);
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    if (p.size() < 2) continue;
    auto [it, inserted] = index.emplace(p, coarse.pins.size());
    if (inserted) {
      coarse.pins.push_back(std::move(p));
      coarse.net_weight.push_back(fine.net_weight[e]);
    } else {
      coarse.net_weight[it->second] += fine.net_weight[e];
    }
  }
  coarse.build_incidence();
  return coarse;
}

// k-way FM state on one level.
class Refiner {
 public:
  Refiner(const Level& l, std::size_t k, std::size_t bound, std::vector<PartId>& part)
      : l_(l), k_(k), bound_(bound), part_(part) {
    pc_.assign(l.pins.size() * k, 0);
    weight_.assign(k, 0);
    count_.assign(k, 0);
    for (Vertex v = 0; v < l.n; ++v) {
      weight_[part_[v]] += l.vertex_weight[v];
      ++count_[part_[v]];
    }
    for (std::size_t e = 0; e < l.pins.size(); ++e)
      for (auto v : l.pins[e]) ++pc_[e * k + part_[v]];
    gain_.assign(l.n * k, 0);
    for (Vertex v = 0; v < l.n; ++v) recompute(v);
    cut_ = 0;
    for (std::size_t e = 0; e < l.pins.size(); ++e)
      if (!uncut(e)) cut_ += l.net_weight[e];
  }

  std::int64_t cut() const { return cut_; }

  void run() {
    for (std::size_t pass = 0; pass < kMaxFmPasses; ++pass) {
      const std::int64_t start = cut_;
      std::int64_t best = cut_;
      std::vector<std::pair<Vertex, PartId>> log;  // (vertex, source part)
      std::size_t best_len = 0;
      std::vector<char> locked(l_.n, 0);
      for (;;) {
        auto move = select(locked);
        if (!move) break;
        const auto [v, to] = *move;
        log.emplace_back(v, part_[v]);
        apply(v, to);
        locked[v] = 1;
        if (cut_ < best) {
          best = cut_;
          best_len = log.size();
        } else if (log.size() - best_len > kMaxFruitlessMoves) {
          break;
        }
      }
      while (log.size() > best_len) {
        apply(log.back().first, log.back().second);
        log.pop_back();
      }
      if (cut_ >= start) break;
    }
  }

 private:
  bool uncut(std::size_t e) const {
    for (std::size_t p = 0; p < k_; ++p)
      if (pc_[e * k_ + p] == l_.pins[e].size()) return true;
    return false;
  }

  void contribute(std::size_t e, Vertex u, std::int64_t sign) {
    const std::size_t s = l_.pins[e].size();
    const PartId a = part_[u];
    const std::int64_t w = sign * l_.net_weight[e];
    const std::int64_t before = pc_[e * k_ + a] != s;
    for (std::size_t x = 0; x < k_; ++x) {
      if (x == a) continue;
      const std::int64_t after = pc_[e * k_ + x] != s - 1;
      gain_[u * k_ + x] += w * (before - after);
    }
  }

  void recompute(Vertex v) {
    std::fill_n(gain_.begin() + v * k_, k_, 0);
    for (auto e : l_.incident[v]) contribute(e, v, 1);
  }

  std::optional<std::pair<Vertex, PartId>> select(const std::vector<char>& locked) const {
    std::optional<std::pair<Vertex, PartId>> best;
    std::int64_t best_gain = 0;
    std::size_t best_weight = 0;
    for (Vertex v = 0; v < l_.n; ++v) {
      if (locked[v] || count_[part_[v]] <= 1) continue;
      const std::size_t w = l_.vertex_weight[v];
      for (PartId x = 0; x < k_; ++x) {
        if (x == part_[v] || weight_[x] + w > bound_) continue;
        const std::int64_t g = gain_[v * k_ + x];
        if (!best || g > best_gain || (g == best_gain && weight_[x] < best_weight)) {
          best = {v, x};
          best_gain = g;
          best_weight = weight_[x];
        }
      }
    }
    return best;
  }

  void apply(Vertex v, PartId to) {
    const PartId from = part_[v];
    cut_ -= gain_[v * k_ + to];
    for (auto e : l_.incident[v]) {
      for (auto u : l_.pins[e])
        if (u != v) contribute(e, u, -1);
      --pc_[e * k_ + from];
      ++pc_[e * k_ + to];
      for (auto u : l_.pins[e])
        if (u != v) contribute(e, u, 1);
    }
    weight_[from] -= l_.vertex_weight[v];
    weight_[to] += l_.vertex_weight[v];
    --count_[from];
    ++count_[to];
    part_[v] = to;
    recompute(v);
  }

  const Level& l_;
  std::size_t k_;
  std::size_t bound_;
  std::vector<PartId>& part_;
  std::vector<std::uint32_t> pc_;
  std::vector<std::size_t> weight_;
  std::vector<std::size_t> count_;
  std::vector<std::int64_t> gain_;
  std::int64_t cut_ = 0;
};

// Largest weight first onto the lightest part.
std::optional<std::vector<PartId>> initial_lpt(const Level& l, std::size_t k,
                                               std::size_t bound) {
  std::vector<Vertex> order(l.n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return l.vertex_weight[a] > l.vertex_weight[b];
  });
  std::vector<std::size_t> weight(k, 0);
  std::vector<PartId> part(l.n, 0);
  for (auto v : order) {
    const auto p = static_cast<PartId>(
        std::min_element(weight.begin(), weight.end()) - weight.begin());
    weight[p] += l.vertex_weight[v];
    if (weight[p] > bound) return std::nullopt;
    part[v] = p;
  }
  return part;
}

// Seeded greedy growing: each vertex joins the part it is most connected to.
std::optional<std::vector<PartId>> initial_greedy(const Level& l, std::size_t k,
                                                  std::size_t bound, Rng& rng) {
  std::vector<Vertex> order(l.n);
  std::iota(order.begin(), order.end(), 0);
  shuffle(order, rng);
  constexpr PartId kNone = std::numeric_limits<PartId>::max();
  std::vector<PartId> part(l.n, kNone);
  std::vector<std::size_t> weight(k, 0), count(k, 0);
  std::vector<std::int64_t> affinity(k);
  std::size_t empty = k;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex v = order[i];
    const bool force_empty = order.size() - i <= empty;
    std::fill(affinity.begin(), affinity.end(), 0);
    for (auto e : l.incident[v])
      for (auto u : l.pins[e])
        if (part[u] != kNone) affinity[part[u]] += l.net_weight[e];
    PartId best = kNone;
    for (PartId p = 0; p < k; ++p) {
      if (weight[p] + l.vertex_weight[v] > bound) continue;
      if (force_empty && count[p] != 0) continue;
      if (best == kNone || affinity[p] > affinity[best] ||
          (affinity[p] == affinity[best] && weight[p] < weight[best])) {
        best = p;
      }
    }
    if (best == kNone) return std::nullopt;
    part[v] = best;
    weight[best] += l.vertex_weight[v];
    if (count[best]++ == 0) --empty;
  }
  return part;
}

bool all_nonempty(const std::vector<PartId>& part, std::size_t k) {
  std::vector<char> seen(k, 0);
  for (auto p : part) seen[p] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

}  // namespace

Partition partition(const Hypergraph& h, std::size_t k, double epsilon,
                    std::uint64_t seed) {
  if (k == 0) throw InfeasiblePartitionError("k must be >= 1");
  if (!(epsilon >= 0.0)) throw InfeasiblePartitionError("epsilon must be >= 0");
  if (k > h.vertex_count) {
    throw InfeasiblePartitionError("k = " + std::to_string(k) + " exceeds " +
                                   std::to_string(h.vertex_count) + " vertices");
  }
  h.validate();
  Partition result;
  result.k = k;
  result.epsilon = epsilon;
  result.assignment.assign(h.vertex_count, 0);
  if (k == 1) return result;

  Rng rng(splitmix(seed ^ splitmix(k * 0x100000001ULL + h.vertex_count)));
  const std::size_t bound = balance_bound(h.vertex_count, k, epsilon);
  const std::size_t cap = std::max<std::size_t>(1, bound / 2);

  std::vector<Level> levels;
  levels.push_back(from_hypergraph(h));
  while (levels.back().n > 2 * k) {
    auto next = coarsen(levels.back(), cap, rng);
    if (!next) break;
    levels.push_back(std::move(*next));
  }

  // Initial partition at the coarsest level that admits a balanced one.
  std::vector<PartId> part;
  std::size_t level = levels.size();
  while (part.empty()) {
    --level;
    const Level& l = levels[level];
    std::int64_t best_cut = std::numeric_limits<std::int64_t>::max();
    for (std::size_t t = 0; t < kInitialTries; ++t) {
      auto candidate = t == 0 ? initial_lpt(l, k, bound) : initial_greedy(l, k, bound, rng);
      if (!candidate || !all_nonempty(*candidate, k)) continue;
      Refiner r(l, k, bound, *candidate);
      r.run();
      if (r.cut() < best_cut) {
        best_cut = r.cut();
        part = std::move(*candidate);
      }
    }
    if (part.empty() && level == 0) {
      throw InfeasiblePartitionError("no balanced initial partition found");
    }
  }

  while (level > 0) {
    --level;
    const Level& fine = levels[level];
    std::vector<PartId> projected(fine.n);
    for (Vertex v = 0; v < fine.n; ++v) projected[v] = part[fine.to_coarse[v]];
    part = std::move(projected);
    Refiner(fine, k, bound, part).run();
  }
  result.assignment = std::move(part);
  return result;
}

}  // namespace qdist
