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

#include "qdist/kak.hpp"

#include <cmath>
#include <numbers>
#include <variant>

#include <Eigen/Eigenvalues>

#include "qdist/errors.hpp"

namespace qdist {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

Mat2 pauli_x() {
  Mat2 m;
  m << 0, 1, 1, 0;
  return m;
}
Mat2 pauli_y() {
  Mat2 m;
  m << 0, -kI, kI, 0;
  return m;
}
Mat2 pauli_z() {
  Mat2 m;
  m << 1, 0, 0, -1;
  return m;
}
Mat2 hadamard() {
  const double r = 1.0 / std::numbers::sqrt2;
  Mat2 m;
  m << r, r, r, -r;
  return m;
}
Mat2 phase_s() {
  Mat2 m;
  m << 1, 0, 0, kI;
  return m;
}

// Magic basis: B^dagger (A (x) C) B is real orthogonal for A, C in SU(2) and
// B^dagger {XX, YY, ZZ} B are diagonal with the sign patterns below.
Mat4 magic_basis() {
  const double r = 1.0 / std::numbers::sqrt2;
  Mat4 b;
  b << r, 0, 0, kI * r,
       0, kI * r, r, 0,
       0, kI * r, -r, 0,
       r, 0, 0, -kI * r;
  return b;
}

constexpr double kSignXX[4] = {1, 1, -1, -1};
constexpr double kSignYY[4] = {-1, 1, -1, 1};
constexpr double kSignZZ[4] = {1, -1, -1, 1};

/** Splits M = A (x) C, normalising det(A) = 1. */
std::pair<Mat2, Mat2> split_kron(const Mat4& m) {
  // Realigned matrix R[(i,j),(k,l)] = M[2i+k, 2j+l] = A_ij C_kl is rank one.
  Mat4 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) r(2 * i + j, 2 * k + l) = m(2 * i + k, 2 * j + l);
  Eigen::Index p = 0, q = 0;
  r.cwiseAbs().maxCoeff(&p, &q);
  Mat2 a, c;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      a(i, j) = r(2 * i + j, q) / r(p, q);
      c(i, j) = r(p, 2 * i + j);
    }
  const Complex d = std::sqrt(a.determinant());
  return {a / d, c * d};
}

/** Real orthogonal P with P^T M P diagonal, for symmetric unitary M. */
Eigen::Matrix4d diagonalize_symmetric_unitary(const Mat4& m) {
  const Eigen::Matrix4d re = m.real();
  const Eigen::Matrix4d im = m.imag();
  // Re(M) and Im(M) are commuting real symmetric matrices; a generic
  // combination of the two has their joint eigenbasis.
  static constexpr double kMix[] = {1.0, 0.5497, 2.1133, -0.3817, 7.6391,
                                    0.1291, -3.4471, 0.8632};
  Eigen::Matrix4d best;
  double best_err = INFINITY;
  for (double r : kMix) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(re + r * im);
    const Eigen::Matrix4d p = es.eigenvectors();
    Mat4 d = p.transpose().cast<Complex>() * m * p.cast<Complex>();
    d.diagonal().setZero();
    const double err = d.cwiseAbs().maxCoeff();
    if (err < best_err) {
      best_err = err;
      best = p;
    }
    if (err < 1e-13) break;
  }
  return best;
}

// Moves that change the interaction coefficients while folding local
// gates into the outer factors.
class Canonicalizer {
 public:
  explicit Canonicalizer(KakDecomposition& k) : k_(k) {}

  // Can(x) = Can(x - n pi/2 e_axis) (i P(x)P)^n
  void apply_shift(int axis, long n) {
    double& x = axis == 0 ? k_.coords.a : axis == 1 ? k_.coords.b : k_.coords.c;
    x -= static_cast<double>(n) * kPi / 2;
    const Mat2 p = axis == 0 ? pauli_x() : axis == 1 ? pauli_y() : pauli_z();
    if (n % 2 != 0) {
      k_.right_first = p * k_.right_first;
      k_.right_second = p * k_.right_second;
    }
    static constexpr Complex kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    k_.global_phase *= kPowers[((n % 4) + 4) % 4];
  }

  /** Moves the coefficient into [-pi/4, pi/4]. */
  void reduce(int axis) {
    const double x = axis == 0 ? k_.coords.a : axis == 1 ? k_.coords.b : k_.coords.c;
    const long n = std::lround(x / (kPi / 2));
    if (n != 0) apply_shift(axis, n);
  }

  // Can(x) = (V (x) V) Can(perm(x)) (V^dagger (x) V^dagger)
  void conjugate_both(const Mat2& v) {
    k_.left_first = k_.left_first * v;
    k_.left_second = k_.left_second * v;
    k_.right_first = v.adjoint() * k_.right_first;
    k_.right_second = v.adjoint() * k_.right_second;
  }

  void swap_ab() {
    conjugate_both(phase_s().adjoint());
    std::swap(k_.coords.a, k_.coords.b);
  }
  void swap_ac() {
    conjugate_both(hadamard());
    std::swap(k_.coords.a, k_.coords.c);
  }
  void swap_bc() {
    conjugate_both(rx_matrix(kPi / 2));
    std::swap(k_.coords.b, k_.coords.c);
  }

  // Can(x) = (P (x) I) Can(x with two signs flipped) (P (x) I)
  void flip(const Mat2& p) {
    k_.left_first = k_.left_first * p;
    k_.right_first = p * k_.right_first;
  }
  void flip_ab() {
    flip(pauli_z());
    k_.coords.a = -k_.coords.a;
    k_.coords.b = -k_.coords.b;
  }
  void flip_bc() {
    flip(pauli_x());
    k_.coords.b = -k_.coords.b;
    k_.coords.c = -k_.coords.c;
  }
  void flip_ac() {
    flip(pauli_y());
    k_.coords.a = -k_.coords.a;
    k_.coords.c = -k_.coords.c;
  }

  void run() {
    auto& w = k_.coords;
    reduce(0);
    reduce(1);
    reduce(2);
    if (std::abs(w.b) > std::abs(w.a)) swap_ab();
    if (std::abs(w.c) > std::abs(w.b)) swap_bc();
    if (std::abs(w.b) > std::abs(w.a)) swap_ab();
    if (w.a < 0 && w.b < 0) {
      flip_ab();
    } else if (w.a < 0) {
      flip_ac();
    } else if (w.b < 0) {
      flip_bc();
    }
    // On the a = pi/4 face, (pi/4, b, c) ~ (pi/4, b, -c).
    if (w.c < 0 && std::abs(w.a - kPi / 4) < 1e-12) {
      apply_shift(0, 1);  // a -> -pi/4
      flip_ac();
    }
  }

 private:
  KakDecomposition& k_;
};

// A gate sequence in time order: single-qubit layers and CX gates.
struct LocalLayer {
  Mat2 first;
  Mat2 second;
};
struct CxStep {
  Qubit control;
};
using Step = std::variant<LocalLayer, CxStep>;

LocalLayer local(const Mat2& a, const Mat2& b) { return {a, b}; }

std::vector<Step> interaction_template(int cx, const WeylCoordinates& w) {
  const Mat2 id = Mat2::Identity();
  switch (cx) {
    case 0:
      return {};
    case 1: {
      // CX = g (Lr0 (x) Lr1) exp(i pi/4 XX) (Rr0 (x) Rr1); anchoring on the
      // decomposition of CX itself makes the outer layers cancel exactly
      // when the input is a CX.
      static const KakDecomposition ref =
          kak_decompose(two_qubit_matrix(GateKind::CX));
      return {local(ref.right_first.adjoint(), ref.right_second.adjoint()),
              CxStep{0},
              local(ref.left_first.adjoint(), ref.left_second.adjoint())};
    }
    case 2:
      // exp(i (a XX + c ZZ)) = CX (Rx(-2a) (x) Rz(-2c)) CX; the caller has
      // already moved the second coefficient into the ZZ slot.
      return {CxStep{0}, local(rx_matrix(-2 * w.a), rz_matrix(-2 * w.c)),
              CxStep{0}};
    default:
      return {local(id, rz_matrix(kPi / 2)),
              CxStep{1},
              local(rz_matrix(kPi / 2 - 2 * w.c), ry_matrix(kPi / 2 - 2 * w.a)),
              CxStep{0},
              local(id, ry_matrix(2 * w.b - kPi / 2)),
              CxStep{1},
              local(rz_matrix(-kPi / 2), id)};
  }
}

bool is_identity_up_to_phase(const Mat2& m) {
  return phase_distance(m, Mat2(Mat2::Identity())) < 1e-10;
}

void emit_u3(std::vector<Gate>& out, const Mat2& m, Qubit q) {
  if (is_identity_up_to_phase(m)) return;
  auto [theta, phi, lambda] = u3_angles(m);
  out.push_back(make_gate(GateKind::U3, {q}, {theta, phi, lambda}));
}

}  // namespace

Mat4 canonical_gate(const WeylCoordinates& w) {
  const Mat2 x = pauli_x(), y = pauli_y(), z = pauli_z();
  auto factor = [](double t, const Mat4& pp) -> Mat4 {
    return std::cos(t) * Mat4::Identity() + kI * std::sin(t) * pp;
  };
  return factor(w.a, kron(x, x)) * factor(w.b, kron(y, y)) *
         factor(w.c, kron(z, z));
}

Mat4 KakDecomposition::matrix() const {
  return global_phase * kron(left_first, left_second) * canonical_gate(coords) *
         kron(right_first, right_second);
}

KakDecomposition kak_decompose(const Mat4& u) {
  if (!u.allFinite() || unitarity_error(u) > kUnitarityTolerance) {
    throw NonUnitaryError("kak_decompose: input is not unitary");
  }
  const Complex root = std::pow(u.determinant(), 0.25);
  const Mat4 su = u / root;
  const Mat4 b = magic_basis();
  const Mat4 up = b.adjoint() * su * b;
  const Mat4 m = up.transpose() * up;

  Eigen::Matrix4d p = diagonalize_symmetric_unitary(m);
  if (p.determinant() < 0) p.col(0) *= -1.0;
  const Mat4 pc = p.cast<Complex>();
  const Mat4 d = pc.transpose() * m * pc;

  double theta[4];
  double sum = 0.0;
  for (int j = 0; j < 4; ++j) {
    theta[j] = std::arg(d(j, j)) / 2;
    sum += theta[j];
  }
  // sum is a multiple of pi; make it even so K1 lands in SO(4).
  if (std::cos(sum) < 0) {
    theta[0] += kPi;
    sum += kPi;
  }
  Mat4 inv_phase = Mat4::Zero();
  for (int j = 0; j < 4; ++j) inv_phase(j, j) = std::exp(-kI * theta[j]);
  const Mat4 k1 = up * pc * inv_phase;

  KakDecomposition out;
  auto [l0, l1] = split_kron(b * k1 * b.adjoint());
  auto [r0, r1] = split_kron(b * pc.transpose() * b.adjoint());
  out.left_first = l0;
  out.left_second = l1;
  out.right_first = r0;
  out.right_second = r1;
  for (int j = 0; j < 4; ++j) {
    out.coords.a += theta[j] * kSignXX[j] / 4;
    out.coords.b += theta[j] * kSignYY[j] / 4;
    out.coords.c += theta[j] * kSignZZ[j] / 4;
  }
  out.global_phase = root * std::exp(kI * (sum / 4));
  // split_kron fixes each factor only up to a scalar; absorb the residue.
  const Mat4 approx = out.matrix();
  Eigen::Index r = 0, c = 0;
  u.cwiseAbs().maxCoeff(&r, &c);
  out.global_phase *= u(r, c) / approx(r, c);

  Canonicalizer(out).run();
  return out;
}

int minimal_cx_count(const WeylCoordinates& w) {
  constexpr double tol = kWeylTolerance;
  if (std::abs(w.a) < tol && std::abs(w.b) < tol && std::abs(w.c) < tol) return 0;
  if (std::abs(w.a - kPi / 4) < tol && std::abs(w.b) < tol && std::abs(w.c) < tol) {
    return 1;
  }
  if (std::abs(w.c) < tol) return 2;
  return 3;
}

std::vector<Gate> kak_resynthesize(const Mat4& u) {
  KakDecomposition k = kak_decompose(u);
  const int cx = minimal_cx_count(k.coords);
  if (cx == 2) {
    // Bring the two non-zero coefficients into the XX and ZZ slots.
    Canonicalizer(k).swap_bc();
  }

  std::vector<Step> steps;
  steps.emplace_back(local(k.right_first, k.right_second));
  for (auto& s : interaction_template(cx, k.coords)) steps.push_back(std::move(s));
  steps.emplace_back(local(k.left_first, k.left_second));

  // Fold consecutive local layers, then emit.
  std::vector<Step> merged;
  for (auto& s : steps) {
    if (!merged.empty() && std::holds_alternative<LocalLayer>(s) &&
        std::holds_alternative<LocalLayer>(merged.back())) {
      auto& prev = std::get<LocalLayer>(merged.back());
      const auto& next = std::get<LocalLayer>(s);
      prev.first = next.first * prev.first;
      prev.second = next.second * prev.second;
    } else {
      merged.push_back(s);
    }
  }

  std::vector<Gate> out;
  for (const auto& s : merged) {
    if (const auto* l = std::get_if<LocalLayer>(&s)) {
      emit_u3(out, l->first, 0);
      emit_u3(out, l->second, 1);
    } else {
      const Qubit ctl = std::get<CxStep>(s).control;
      out.push_back(make_gate(GateKind::CX, {ctl, 1 - ctl}));
    }
  }

  const double err = phase_distance(two_qubit_product(out), u);
  if (!(err <= kSynthesisTolerance)) {
    throw QdistError("kak_resynthesize: reconstruction error " +
                     std::to_string(err));
  }
  return out;
}

Mat4 two_qubit_product(const std::vector<Gate>& gates) {
  Mat4 acc = Mat4::Identity();
  const Mat4 swap = two_qubit_matrix(GateKind::SWAP);
  for (const auto& g : gates) {
    Mat4 m;
    if (g.qubits.size() == 1) {
      const Mat2 one = one_qubit_matrix(g);
      m = g.qubits[0] == 0 ? kron(one, Mat2::Identity())
                           : kron(Mat2::Identity(), one);
    } else if (g.qubits.size() == 2) {
      m = two_qubit_matrix(g.kind);
      if (g.qubits[0] == 1) m = swap * m * swap;
    } else {
      throw InvalidCircuitError("two_qubit_product: gate " + to_string(g));
    }
    acc = m * acc;
  }
  return acc;
}

}  // namespace qdist
