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

#include "telesim/states.hpp"

#include <cmath>

// Polarization analysis bases and the Jones matrices that realize them.
// An analyzer is described by the unitary that rotates the registered
// outcome onto |H> in front of an H-passing polarizer.

namespace telesim {

enum class Basis { HV, PM, LR };  // sigma_z, sigma_x, sigma_y eigenbases

inline std::string to_string(Basis b) {
  switch (b) {
    case Basis::HV: return "h_v";
    case Basis::PM: return "p_m";
    case Basis::LR: return "l_r";
  }
  return "?";
}

inline Basis basis_from_string(const std::string& s) {
  if (s == "h_v") return Basis::HV;
  if (s == "p_m") return Basis::PM;
  if (s == "l_r") return Basis::LR;
  throw std::invalid_argument("unknown analysis basis: " + s);
}

// Outcome index 0 is the +1 eigenvector of the basis' Pauli operator
// (H, + or L), outcome 1 the -1 eigenvector (V, - or R).
inline StateVector basis_outcome_state(Basis b, int outcome) {
  switch (b) {
    case Basis::HV: return outcome == 0 ? ket_h() : ket_v();
    case Basis::PM: return outcome == 0 ? ket_plus() : ket_minus();
    case Basis::LR: return outcome == 0 ? ket_left() : ket_right();
  }
  throw std::invalid_argument("bad basis");
}

inline char basis_outcome_symbol(Basis b, int outcome) {
  switch (b) {
    case Basis::HV: return outcome == 0 ? 'H' : 'V';
    case Basis::PM: return outcome == 0 ? '+' : '-';
    case Basis::LR: return outcome == 0 ? 'L' : 'R';
  }
  return '?';
}

inline Pauli basis_pauli(Basis b) {
  switch (b) {
    case Basis::HV: return Pauli::Z;
    case Basis::PM: return Pauli::X;
    case Basis::LR: return Pauli::Y;
  }
  return Pauli::I;
}

// Unitary mapping the requested outcome state onto |H> (rows of the basis'
// eigenvector matrix, with the registered outcome first).
inline Eigen::Matrix2cd analyzer_rotation(Basis b, int outcome) {
  const StateVector pass = basis_outcome_state(b, outcome);
  const StateVector block = basis_outcome_state(b, 1 - outcome);
  Eigen::Matrix2cd u;
  u.row(0) = pass.amplitudes().adjoint();
  u.row(1) = block.amplitudes().adjoint();
  return u;
}

// Half-wave plate at angle theta (radians from the H axis).
inline Eigen::Matrix2cd half_wave_plate(double theta) {
  const double c = std::cos(2 * theta), s = std::sin(2 * theta);
  Eigen::Matrix2cd m;
  m << c, s, s, -c;
  return m;
}

// Quarter-wave plate at angle theta, up to a global phase.
inline Eigen::Matrix2cd quarter_wave_plate(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  const Complex i(0, 1);
  Eigen::Matrix2cd m;
  m << c * c + i * s * s, (1.0 - i) * s * c,
       (1.0 - i) * s * c, s * s + i * c * c;
  return m;
}

}  // namespace telesim
