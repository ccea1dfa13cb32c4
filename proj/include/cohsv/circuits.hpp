// Copyright 2026 The cohsv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COHSV_CIRCUITS_HPP
#define COHSV_CIRCUITS_HPP

#include <string>
#include <string_view>

#include "cohsv/gaussian_state.hpp"
#include "cohsv/linear_map.hpp"

namespace cohsv {

// Amplitude matrices of the optical elements, acting as alpha_out = M alpha_in.

/// (1/sqrt 2) [[1, i], [i, 1]].
Eigen::Matrix2cd beam_splitter_amplitude();
/// diag(1, exp(-i phi)): the phase is picked up by the second mode.
Eigen::Matrix2cd phase_shifter_amplitude(double phi);
/// BS * M_phi * BS = i exp(-i phi/2) [[sin(phi/2), cos(phi/2)], [cos(phi/2), -sin(phi/2)]].
Eigen::Matrix2cd mzi_amplitude(double phi);

/// Embeds a two-mode scattering matrix on modes (i, j) of an n-mode system.
LinearMap two_mode_map(const Eigen::Matrix2cd& u, int i, int j, int n_modes);

/// 50-50 beam splitter between modes i and j. n_modes defaults to max(i, j) + 1.
LinearMap beam_splitter_5050(int i, int j, int n_modes = 0);

/// Rotates the phase-space plane of `mode` by -phi (alpha -> exp(-i phi) alpha).
LinearMap phase_shifter(int mode, double phi, int n_modes = 0);

/// Mach-Zehnder interferometer on two modes, including its global phase.
LinearMap mzi(double phi);

/// Finite-T local-oscillator injection. The mixer acts on n_modes + 1 modes,
/// the last one being the ancilla that must be prepared in `ancilla`.
struct LoInjection {
    GaussianState ancilla;
    LinearMap mixer;
};

/// Mixes a coherent local oscillator into `mode` through a beam splitter of
/// transmissivity T. The target keeps the reflected signal (amplitude
/// i sqrt(1-T)) plus the transmitted LO; the ancilla carries
/// n_lo / T photons so that n_lo photons enter the target.
LoInjection lo_injection(int mode, double n_lo, double phi_lo, double T, int n_modes);

/// The T -> 0 limit of lo_injection: the reflection phase i on `mode`
/// followed by a displacement sqrt(n_lo) exp(-i phi_lo). No ancilla.
LinearMap lo_displacement(int mode, double n_lo, double phi_lo, int n_modes);

enum class PresetName { parity_mzi, ono_hofmann };
enum class LoModel { displacement, finite_t };

std::string_view to_string(PresetName name);
std::string_view to_string(LoModel model);
PresetName preset_name_from_string(std::string_view name);
LoModel lo_model_from_string(std::string_view name);

/// Interferometer parameters. Photon numbers are mean photon numbers,
/// angles are in radians.
struct CircuitPreset {
    PresetName name = PresetName::parity_mzi;
    double phi = 0.0;
    double phi_c = 0.0;
    double n_c = 0.0;
    double n_s = 0.0;
    // Only used by ono_hofmann.
    double n_lo = 0.0;
    double phi_lo = 0.0;
    double T = 1e-6;
    double control_phase = 0.0;
    LoModel lo_model = LoModel::displacement;

    void validate() const;
};

struct BuiltCircuit {
    GaussianState input;
    LinearMap map;
    int mode_c;
    int mode_d;

    GaussianState output() const { return apply(map, input); }
};

/// Assembles input state, propagation map and detection modes.
///
/// parity_mzi: coherent(n_c, phi_c) x squeezed(n_s) through mzi(phi);
/// parity is read on mode_c (= a_f).
///
/// ono_hofmann: after mzi(phi), the output beam splitter of the first MZI
/// also serves as the entry of a second MZI. Its arms get the control phase
/// (on b) and the local-oscillator mixer (on a); a final 50-50 beam splitter
/// recombines them and the intensity difference n_c - n_d is measured. With
/// this port assignment the mean signal is
///   -2 sqrt(n_c n_lo) cos(phi/2) cos(phi/2 + phi_c - phi_lo) + (n_c - n_s) sin(phi).
BuiltCircuit build(const CircuitPreset& preset);

}  // namespace cohsv

#endif  // COHSV_CIRCUITS_HPP
