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

#include "qdist/corpus.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "qdist/errors.hpp"
#include "qdist/qasm.hpp"
#include "qdist/random.hpp"

namespace qdist {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 6> kFamilies = {{
    {Family::Ghz, "ghz"},
    {Family::WChain, "wchain"},
    {Family::Qft, "qft"},
    {Family::QaoaRing, "qaoa_ring"},
    {Family::GroverLike, "grover_like"},
    {Family::Random, "random"},
}};

constexpr double kPi = std::numbers::pi;

std::uint64_t mix_seed(Family f, std::size_t width, std::uint64_t seed) {
  // splitmix64 finaliser over the instance key
  std::uint64_t z = seed * 0x9E3779B97F4A7C15ULL +
                    (static_cast<std::uint64_t>(f) << 32) + width;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::string instance_id(Family f, std::size_t width,
                        std::optional<std::uint64_t> seed) {
  char buf[64];
  if (seed) {
    std::snprintf(buf, sizeof buf, "%s_n%03zu_s%llu",
                  std::string(family_name(f)).c_str(), width,
                  static_cast<unsigned long long>(*seed));
  } else {
    std::snprintf(buf, sizeof buf, "%s_n%03zu",
                  std::string(family_name(f)).c_str(), width);
  }
  return buf;
}

Qubit qb(std::size_t i) { return static_cast<Qubit>(i); }

Circuit ghz(std::size_t n) {
  Circuit c(n);
  c.add(GateKind::H, {0});
  for (std::size_t i = 0; i + 1 < n; ++i) c.add(GateKind::CX, {qb(i), qb(i + 1)});
  return c;
}

// Linear W-state preparation; each controlled-RY is expanded into
// RY, CX, RY, CX.
Circuit wchain(std::size_t n) {
  Circuit c(n);
  c.add(GateKind::X, {0});
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double theta =
        2.0 * std::acos(std::sqrt(1.0 / static_cast<double>(n - i)));
    c.add(GateKind::RY, {qb(i + 1)}, {theta / 2});
    c.add(GateKind::CX, {qb(i), qb(i + 1)});
    c.add(GateKind::RY, {qb(i + 1)}, {-theta / 2});
    c.add(GateKind::CX, {qb(i), qb(i + 1)});
    c.add(GateKind::CX, {qb(i + 1), qb(i)});
  }
  return c;
}

// Textbook QFT layout; each controlled phase is one CZ sandwiched by RZs.
Circuit qft(std::size_t n) {
  Circuit c(n);
  for (std::size_t i = 0; i < n; ++i) {
    c.add(GateKind::H, {qb(i)});
    for (std::size_t j = i + 1; j < n; ++j) {
      const double phi = kPi / std::ldexp(1.0, static_cast<int>(j - i));
      c.add(GateKind::RZ, {qb(j)}, {phi / 2});
      c.add(GateKind::CZ, {qb(j), qb(i)});
      c.add(GateKind::RZ, {qb(i)}, {phi / 2});
    }
  }
  return c;
}

Circuit qaoa_ring(std::size_t n, Rng& rng) {
  constexpr int kLayers = 2;
  Circuit c(n);
  for (std::size_t q = 0; q < n; ++q) c.add(GateKind::H, {qb(q)});
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = (i + 1) % n;
    if (n == 2 && i == 1) break;
    edges.emplace_back(i, j);
  }
  for (int layer = 0; layer < kLayers; ++layer) {
    const double gamma = uniform_real(rng, 0.0, kPi);
    const double beta = uniform_real(rng, 0.0, kPi);
    for (auto [i, j] : edges) {
      c.add(GateKind::CX, {qb(i), qb(j)});
      c.add(GateKind::RZ, {qb(j)}, {2 * gamma});
      c.add(GateKind::CX, {qb(i), qb(j)});
    }
    for (std::size_t q = 0; q < n; ++q) c.add(GateKind::RX, {qb(q)}, {2 * beta});
  }
  return c;
}

Circuit grover_like(std::size_t n) {
  constexpr int kIterations = 2;
  Circuit c(n);
  auto all = [&](GateKind k) {
    for (std::size_t q = 0; q < n; ++q) c.add(k, {qb(q)});
  };
  all(GateKind::H);
  for (int it = 0; it < kIterations; ++it) {
    if (n == 2) {
      c.add(GateKind::CZ, {0, 1});
    } else {
      for (std::size_t i = 0; i + 2 < n; ++i) {
        c.add(GateKind::CCX, {qb(i), qb(i + 1), qb(i + 2)});
      }
      c.add(GateKind::Z, {qb(n - 1)});
      for (std::size_t i = n - 2; i-- > 0;) {
        c.add(GateKind::CCX, {qb(i), qb(i + 1), qb(i + 2)});
      }
    }
    all(GateKind::H);
    all(GateKind::X);
    if (n == 2) {
      c.add(GateKind::CZ, {0, 1});
    } else {
      c.add(GateKind::H, {qb(n - 1)});
      c.add(GateKind::CCX, {qb(n - 3), qb(n - 2), qb(n - 1)});
      c.add(GateKind::H, {qb(n - 1)});
    }
    all(GateKind::X);
    all(GateKind::H);
  }
  return c;
}

Circuit random_circuit(std::size_t n, Rng& rng) {
  static constexpr std::array<GateKind, 5> kPool = {
      GateKind::H, GateKind::T, GateKind::RZ, GateKind::CX, GateKind::CCX};
  const std::size_t pool = n >= 3 ? 5 : 4;
  Circuit c(n);
  std::vector<Qubit> order(n);
  for (std::size_t step = 0; step < 10 * n; ++step) {
    const GateKind kind = kPool[uniform_index(rng, pool)];
    // partial Fisher-Yates: the first arity entries are distinct and uniform
    for (std::size_t i = 0; i < n; ++i) order[i] = qb(i);
    const std::size_t k = arity(kind);
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t j = i + uniform_index(rng, n - i);
      std::swap(order[i], order[j]);
    }
    std::vector<Qubit> qubits(order.begin(), order.begin() + k);
    std::vector<double> params;
    if (kind == GateKind::RZ) params.push_back(kPi - uniform_real(rng, 0.0, 2 * kPi));
    c.add(kind, std::move(qubits), std::move(params));
  }
  return c;
}

}  // namespace

std::string_view family_name(Family f) {
  for (auto [fam, name] : kFamilies) {
    if (fam == f) return name;
  }
  return "unknown";
}

std::optional<Family> family_from_name(std::string_view name) {
  for (auto [fam, n] : kFamilies) {
    if (n == name) return fam;
  }
  return std::nullopt;
}

std::vector<Family> all_families() {
  std::vector<Family> out;
  for (auto [fam, name] : kFamilies) out.push_back(fam);
  return out;
}

Circuit generate(Family family, std::size_t width, std::uint64_t seed) {
  if (width < kMinCorpusWidth) {
    throw WidthError("generator width must be >= 2, got " + std::to_string(width));
  }
  Rng rng(mix_seed(family, width, seed));
  Circuit c(1);
  switch (family) {
    case Family::Ghz: c = ghz(width); break;
    case Family::WChain: c = wchain(width); break;
    case Family::Qft: c = qft(width); break;
    case Family::QaoaRing: c = qaoa_ring(width, rng); break;
    case Family::GroverLike: c = grover_like(width); break;
    case Family::Random: c = random_circuit(width, rng); break;
  }
  c.set_id(instance_id(family, width,
                       family == Family::Random ? std::optional(seed)
                                                : std::nullopt));
  return c;
}

CorpusSpec default_corpus_spec(std::uint64_t seed) {
  CorpusSpec spec;
  for (std::size_t w = 2; w <= 128; w += 2) spec.widths.push_back(w);
  spec.seed = seed;
  return spec;
}

std::vector<Circuit> generate_corpus(const CorpusSpec& spec) {
  std::vector<Circuit> out;
  for (Family f : spec.families) {
    for (std::size_t w : spec.widths) {
      if (w < kMinCorpusWidth || w > kMaxCorpusWidth) {
        throw WidthError("corpus width " + std::to_string(w) +
                         " outside [2, 130]");
      }
      if (f == Family::Random) {
        for (auto s : spec.random_seeds) out.push_back(generate(f, w, s));
      } else {
        out.push_back(generate(f, w, spec.seed));
      }
    }
  }
  return out;
}

std::vector<std::filesystem::path> write_corpus(
    const std::vector<Circuit>& corpus, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> paths;
  for (const auto& c : corpus) {
    auto p = dir / (c.id() + ".qasm");
    write_qasm_file(c, p);
    paths.push_back(std::move(p));
  }
  return paths;
}

std::vector<Circuit> load_corpus(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw QdistError("corpus directory not found: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".qasm") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<Circuit> out;
  out.reserve(files.size());
  for (const auto& f : files) out.push_back(read_qasm_file(f));
  return out;
}

}  // namespace qdist
