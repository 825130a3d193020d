// Copyright 2026 The telesim Authors
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

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <complex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

// Exact finite-dimensional state and operator algebra for polarization
// qubits: state vectors, density matrices, Pauli/Bell constants, tensor
// composition, projection and fidelity.
//
// Basis convention, fixed across the whole library:
//   |H> -> 0, |V> -> 1, and amplitude index i encodes qubit 0 in the most
//   significant position (qubit-0-major), i.e. bit of qubit q in index i is
//   (i >> (n-1-q)) & 1.

namespace telesim {

using Complex = std::complex<double>;

inline constexpr double kNormTolerance = 1e-9;     // normalization/Hermiticity
inline constexpr double kExactTolerance = 1e-12;   // exact algebraic identities
inline constexpr double kZeroBranchProbability = 1e-12;

class StateVector {
 public:
  StateVector(int num_qubits, Eigen::VectorXcd amplitudes)
      : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    if (num_qubits_ < 1) throw std::invalid_argument("StateVector: need at least one qubit");
    if (amplitudes_.size() != (Eigen::Index{1} << num_qubits_))
      throw std::invalid_argument("StateVector: amplitude count must be 2^num_qubits");
    const double norm = amplitudes_.norm();
    if (norm < kNormTolerance)
      throw std::invalid_argument("StateVector: zero vector cannot be normalized");
    amplitudes_ /= norm;
  }

  static StateVector basis(int num_qubits, Eigen::Index index) {
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(Eigen::Index{1} << num_qubits);
    amps(index) = 1.0;
    return StateVector(num_qubits, std::move(amps));
  }

  int num_qubits() const { return num_qubits_; }
  Eigen::Index dim() const { return amplitudes_.size(); }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  Complex amplitude(Eigen::Index i) const { return amplitudes_(i); }

  // Bit of qubit q within basis index i, per the qubit-0-major convention.
  int bit(Eigen::Index index, int qubit) const {
    return static_cast<int>((index >> (num_qubits_ - 1 - qubit)) & 1);
  }

 private:
  int num_qubits_;
  Eigen::VectorXcd amplitudes_;
};

inline Complex inner(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits())
    throw std::invalid_argument("inner: qubit count mismatch");
  return a.amplitudes().dot(b.amplitudes());  // Eigen's dot conjugates the left argument
}

// Global-phase-insensitive equality measure: 1 for physically identical states.
inline double overlap_magnitude(const StateVector& a, const StateVector& b) {
  return std::abs(inner(a, b));
}

// --- single-qubit constants -------------------------------------------------

inline StateVector ket_h() { return StateVector::basis(1, 0); }
inline StateVector ket_v() { return StateVector::basis(1, 1); }

inline StateVector ket_plus() {
  Eigen::VectorXcd a(2); a << 1, 1;
  return StateVector(1, a);
}
inline StateVector ket_minus() {
  Eigen::VectorXcd a(2); a << 1, -1;
  return StateVector(1, a);
}
// Left / right circular polarization: |L> = (|H> + i|V>)/sqrt2, |R> = (|H> - i|V>)/sqrt2.
inline StateVector ket_left() {
  Eigen::VectorXcd a(2); a << 1.0, Complex(0, 1);
  return StateVector(1, a);
}
inline StateVector ket_right() {
  Eigen::VectorXcd a(2); a << 1.0, Complex(0, -1);
  return StateVector(1, a);
}

// --- Pauli operators ----------------------------------------------------------

enum class Pauli { I, X, Y, Z };

inline Eigen::Matrix2cd pauli_matrix(Pauli p) {
  Eigen::Matrix2cd m;
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, Complex(0, -1), Complex(0, 1), 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

inline std::string to_string(Pauli p) {
  switch (p) {
    case Pauli::I: return "I";
    case Pauli::X: return "X";
    case Pauli::Y: return "Y";
    case Pauli::Z: return "Z";
  }
  return "?";
}

// --- Bell states --------------------------------------------------------------

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

inline constexpr std::array<BellKind, 4> kBellKinds = {
    BellKind::PhiPlus, BellKind::PhiMinus, BellKind::PsiPlus, BellKind::PsiMinus};

inline StateVector bell_state(BellKind kind) {
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(4);
  switch (kind) {
    case BellKind::PhiPlus:  a(0) = 1; a(3) = 1; break;   // (|HH> + |VV>)/sqrt2
    case BellKind::PhiMinus: a(0) = 1; a(3) = -1; break;
    case BellKind::PsiPlus:  a(1) = 1; a(2) = 1; break;   // (|HV> + |VH>)/sqrt2
    case BellKind::PsiMinus: a(1) = 1; a(2) = -1; break;
  }
  return StateVector(2, a);
}

inline std::string to_string(BellKind kind) {
  switch (kind) {
    case BellKind::PhiPlus: return "phi-plus";
    case BellKind::PhiMinus: return "phi-minus";
    case BellKind::PsiPlus: return "psi-plus";
    case BellKind::PsiMinus: return "psi-minus";
  }
  return "?";
}

// --- operator helpers ----------------------------------------------------------

inline bool is_unitary(const Eigen::MatrixXcd& u, double tol = kNormTolerance) {
  if (u.rows() != u.cols()) return false;
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(u.rows(), u.cols());
  return (u * u.adjoint() - id).cwiseAbs().maxCoeff() < tol;
}

inline bool is_hermitian(const Eigen::MatrixXcd& m, double tol = kNormTolerance) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() < tol;
}

// Kronecker product with qubit-0-major ordering: `a` occupies the leading qubits.
inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline StateVector tensor(const StateVector& a, const StateVector& b) {
  Eigen::VectorXcd out(a.dim() * b.dim());
  for (Eigen::Index i = 0; i < a.dim(); ++i)
    for (Eigen::Index j = 0; j < b.dim(); ++j)
      out(i * b.dim() + j) = a.amplitude(i) * b.amplitude(j);
  return StateVector(a.num_qubits() + b.num_qubits(), std::move(out));
}

inline StateVector apply_one_qubit(const StateVector& state, const Eigen::Matrix2cd& u,
                                   int target) {
  if (target < 0 || target >= state.num_qubits())
    throw std::out_of_range("apply_one_qubit: target qubit out of range");
  if (!is_unitary(u)) throw std::invalid_argument("apply_one_qubit: matrix is not unitary");
  const int shift = state.num_qubits() - 1 - target;
  const Eigen::Index mask = Eigen::Index{1} << shift;
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(state.dim());
  for (Eigen::Index i = 0; i < state.dim(); ++i) {
    const Eigen::Index i0 = i & ~mask;  // target bit cleared
    const Eigen::Index i1 = i | mask;
    const int b = (i & mask) ? 1 : 0;
    out(i0) += u(0, b) * state.amplitude(i);
    out(i1) += u(1, b) * state.amplitude(i);
  }
  return StateVector(state.num_qubits(), std::move(out));
}

struct Projection {
  double probability = 0.0;
  // Renormalized state of the remaining qubits (original order); absent on a
  // zero-probability branch so that branch enumeration never divides by zero.
  std::optional<StateVector> conditional;
};

// Projects `subsystem` onto `onto` (onto's qubit k pairs with subsystem[k]).
inline Projection project(const StateVector& state, std::span<const int> subsystem,
                          const StateVector& onto) {
  const int n = state.num_qubits();
  const int m = onto.num_qubits();
  if (static_cast<int>(subsystem.size()) != m)
    throw std::invalid_argument("project: subsystem size must match onto's qubit count");
  std::vector<bool> used(n, false);
  for (int q : subsystem) {
    if (q < 0 || q >= n) throw std::out_of_range("project: qubit index out of range");
    if (used[q]) throw std::invalid_argument("project: duplicate qubit index");
    used[q] = true;
  }
  std::vector<int> rest;
  for (int q = 0; q < n; ++q)
    if (!used[q]) rest.push_back(q);
  const int r = static_cast<int>(rest.size());

  Eigen::VectorXcd cond = Eigen::VectorXcd::Zero(Eigen::Index{1} << std::max(r, 1));
  for (Eigen::Index i = 0; i < state.dim(); ++i) {
    Eigen::Index s = 0;
    for (int k = 0; k < m; ++k) s = (s << 1) | state.bit(i, subsystem[k]);
    Eigen::Index t = 0;
    for (int k = 0; k < r; ++k) t = (t << 1) | state.bit(i, rest[k]);
    cond(t) += std::conj(onto.amplitude(s)) * state.amplitude(i);
  }
  Projection result;
  result.probability = cond.squaredNorm();
  if (result.probability > kZeroBranchProbability && r > 0)
    result.conditional = StateVector(r, std::move(cond));
  return result;
}

// --- density matrices ----------------------------------------------------------

class DensityMatrix {
 public:
  DensityMatrix(int num_qubits, Eigen::MatrixXcd matrix)
      : num_qubits_(num_qubits), matrix_(std::move(matrix)) {
    const Eigen::Index d = Eigen::Index{1} << num_qubits_;
    if (matrix_.rows() != d || matrix_.cols() != d)
      throw std::invalid_argument("DensityMatrix: dimension must be 2^num_qubits");
    if (!is_hermitian(matrix_))
      throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
    if (std::abs(matrix_.trace().real() - 1.0) > kNormTolerance ||
        std::abs(matrix_.trace().imag()) > kNormTolerance)
      throw std::invalid_argument("DensityMatrix: trace must be 1");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix_, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -kNormTolerance)
      throw std::invalid_argument("DensityMatrix: matrix is not positive semidefinite");
  }

  int num_qubits() const { return num_qubits_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

 private:
  int num_qubits_;
  Eigen::MatrixXcd matrix_;
};

inline DensityMatrix density_from_pure(const StateVector& chi) {
  return DensityMatrix(chi.num_qubits(), chi.amplitudes() * chi.amplitudes().adjoint());
}

inline DensityMatrix maximally_mixed(int num_qubits) {
  const Eigen::Index d = Eigen::Index{1} << num_qubits;
  return DensityMatrix(num_qubits,
                       Eigen::MatrixXcd::Identity(d, d) / static_cast<double>(d));
}

// F = Tr(rho |chi><chi|) = <chi| rho |chi>, clamped to [0, 1].
inline double fidelity(const DensityMatrix& rho, const StateVector& chi) {
  if (rho.num_qubits() != chi.num_qubits())
    throw std::invalid_argument("fidelity: dimension mismatch");
  const Complex value = chi.amplitudes().dot(rho.matrix() * chi.amplitudes());
  return std::clamp(value.real(), 0.0, 1.0);
}

inline double expectation(const DensityMatrix& rho, const Eigen::MatrixXcd& obs) {
  if (obs.rows() != rho.dim() || obs.cols() != rho.dim())
    throw std::invalid_argument("expectation: dimension mismatch");
  if (!is_hermitian(obs))
    throw std::invalid_argument("expectation: observable is not Hermitian");
  return (rho.matrix() * obs).trace().real();
}

inline DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  const int n = rho.num_qubits();
  std::vector<bool> kept(n, false);
  for (int q : keep) {
    if (q < 0 || q >= n) throw std::out_of_range("partial_trace: qubit index out of range");
    if (kept[q]) throw std::invalid_argument("partial_trace: duplicate qubit index");
    kept[q] = true;
  }
  std::vector<int> traced;
  for (int q = 0; q < n; ++q)
    if (!kept[q]) traced.push_back(q);
  const int k = static_cast<int>(keep.size());
  const int t = static_cast<int>(traced.size());
  if (k == 0) throw std::invalid_argument("partial_trace: must keep at least one qubit");

  auto full_index = [&](Eigen::Index keep_bits, Eigen::Index traced_bits) {
    Eigen::Index i = 0;
    for (int q = 0; q < k; ++q)
      if ((keep_bits >> (k - 1 - q)) & 1) i |= Eigen::Index{1} << (n - 1 - keep[q]);
    for (int q = 0; q < t; ++q)
      if ((traced_bits >> (t - 1 - q)) & 1) i |= Eigen::Index{1} << (n - 1 - traced[q]);
    return i;
  };

  const Eigen::Index dk = Eigen::Index{1} << k;
  const Eigen::Index dt = Eigen::Index{1} << t;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dk, dk);
  for (Eigen::Index a = 0; a < dk; ++a)
    for (Eigen::Index b = 0; b < dk; ++b)
      for (Eigen::Index c = 0; c < dt; ++c)
        out(a, b) += rho.matrix()(full_index(a, c), full_index(b, c));
  return DensityMatrix(k, std::move(out));
}

// n-qubit operator acting with `op` on `target` and identity elsewhere.
inline Eigen::MatrixXcd embed_one_qubit(const Eigen::Matrix2cd& op, int target, int num_qubits) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (int q = 0; q < num_qubits; ++q)
    out = kron(out, q == target ? Eigen::MatrixXcd(op)
                                : Eigen::MatrixXcd(Eigen::Matrix2cd::Identity()));
  return out;
}

// Two-qubit correlator observable sigma_p (x) sigma_p.
inline Eigen::MatrixXcd pauli_pair(Pauli p) {
  return kron(pauli_matrix(p), pauli_matrix(p));
}

}  // namespace telesim
