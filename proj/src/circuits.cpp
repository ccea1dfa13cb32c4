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

#include "cohsv/circuits.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "cohsv/errors.hpp"

namespace cohsv {

using namespace std::complex_literals;

namespace {

int resolve_modes(int n_modes, int needed) {
    if (n_modes == 0) {
        return needed;
    }
    if (n_modes < needed) {
        throw UsageError("map needs at least " + std::to_string(needed) + " modes, got " + std::to_string(n_modes));
    }
    return n_modes;
}

void check_angle(double value, const char* name) {
    if (!std::isfinite(value)) {
        throw DomainError(std::string(name) + " must be finite");
    }
}

void check_photons(double value, const char* name) {
    if (!std::isfinite(value) || value < 0.0) {
        throw DomainError(std::string(name) + " must be finite and >= 0");
    }
}

}  // namespace

Eigen::Matrix2cd beam_splitter_amplitude() {
    Eigen::Matrix2cd m;
    m << 1.0, 1.0i, 1.0i, 1.0;
    return m / std::numbers::sqrt2;
}

Eigen::Matrix2cd phase_shifter_amplitude(double phi) {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(0, 0) = 1.0;
    m(1, 1) = std::exp(-1.0i * phi);
    return m;
}

Eigen::Matrix2cd mzi_amplitude(double phi) {
    const Eigen::Matrix2cd bs = beam_splitter_amplitude();
    return bs * phase_shifter_amplitude(phi) * bs;
}

LinearMap two_mode_map(const Eigen::Matrix2cd& u, int i, int j, int n_modes) {
    if (i < 0 || j < 0 || i == j) {
        throw UsageError("two-mode element needs two distinct, non-negative mode indices");
    }
    const int n = resolve_modes(n_modes, std::max(i, j) + 1);
    Eigen::MatrixXcd full = Eigen::MatrixXcd::Identity(n, n);
    full(i, i) = u(0, 0);
    full(i, j) = u(0, 1);
    full(j, i) = u(1, 0);
    full(j, j) = u(1, 1);
    return LinearMap::from_amplitude_matrix(full);
}

LinearMap beam_splitter_5050(int i, int j, int n_modes) {
    return two_mode_map(beam_splitter_amplitude(), i, j, n_modes);
}

LinearMap phase_shifter(int mode, double phi, int n_modes) {
    if (mode < 0) {
        throw UsageError("mode index must be non-negative");
    }
    check_angle(phi, "phi");
    const int n = resolve_modes(n_modes, mode + 1);
    Eigen::MatrixXcd full = Eigen::MatrixXcd::Identity(n, n);
    full(mode, mode) = std::exp(-1.0i * phi);
    return LinearMap::from_amplitude_matrix(full);
}

LinearMap mzi(double phi) {
    check_angle(phi, "phi");
    return LinearMap::from_amplitude_matrix(mzi_amplitude(phi));
}

LoInjection lo_injection(int mode, double n_lo, double phi_lo, double T, int n_modes) {
    check_photons(n_lo, "n_lo");
    check_angle(phi_lo, "phi_lo");
    if (!(T > 0.0) || T > 1.0) {
        throw DomainError("LO beam splitter transmissivity must lie in (0, 1], got " + std::to_string(T));
    }
    if (mode < 0 || mode >= n_modes) {
        throw UsageError("LO target mode out of range");
    }
    const double t = std::sqrt(T);
    const double r = std::sqrt(1.0 - T);
    Eigen::Matrix2cd u;
    u << 1.0i * r, t, t, 1.0i * r;
    return {coherent_state(n_lo / T, phi_lo), two_mode_map(u, mode, n_modes, n_modes + 1)};
}

LinearMap lo_displacement(int mode, double n_lo, double phi_lo, int n_modes) {
    check_photons(n_lo, "n_lo");
    check_angle(phi_lo, "phi_lo");
    if (mode < 0 || mode >= n_modes) {
        throw UsageError("LO target mode out of range");
    }
    Eigen::MatrixXcd reflect = Eigen::MatrixXcd::Identity(n_modes, n_modes);
    reflect(mode, mode) = 1.0i;
    Eigen::VectorXcd shift = Eigen::VectorXcd::Zero(n_modes);
    shift(mode) = std::sqrt(n_lo) * std::exp(-1.0i * phi_lo);
    return LinearMap::from_amplitude_matrix(reflect).then(LinearMap::displacement(shift));
}

std::string_view to_string(PresetName name) {
    switch (name) {
        case PresetName::parity_mzi:
            return "parity_mzi";
        case PresetName::ono_hofmann:
            return "ono_hofmann";
    }
    return "unknown";
}

std::string_view to_string(LoModel model) {
    switch (model) {
        case LoModel::displacement:
            return "displacement";
        case LoModel::finite_t:
            return "finite_t";
    }
    return "unknown";
}

PresetName preset_name_from_string(std::string_view name) {
    if (name == "parity_mzi") return PresetName::parity_mzi;
    if (name == "ono_hofmann") return PresetName::ono_hofmann;
    throw UsageError("unknown circuit preset '" + std::string(name) + "'");
}

LoModel lo_model_from_string(std::string_view name) {
    if (name == "displacement") return LoModel::displacement;
    if (name == "finite_t") return LoModel::finite_t;
    throw UsageError("unknown LO model '" + std::string(name) + "'");
}

void CircuitPreset::validate() const {
    check_angle(phi, "phi");
    check_angle(phi_c, "phi_c");
    check_photons(n_c, "n_c");
    check_photons(n_s, "n_s");
    if (name == PresetName::ono_hofmann) {
        check_photons(n_lo, "n_lo");
        check_angle(phi_lo, "phi_lo");
        check_angle(control_phase, "control_phase");
        if (!(T > 0.0) || T > 1.0) {
            throw DomainError("T must lie in (0, 1]");
        }
    }
}

BuiltCircuit build(const CircuitPreset& preset) {
    preset.validate();
    const GaussianState input = tensor(coherent_state(preset.n_c, preset.phi_c), squeezed_vacuum(preset.n_s));
    const LinearMap first = mzi(preset.phi);
    if (preset.name == PresetName::parity_mzi) {
        return {input, first, 0, 1};
    }

    const LinearMap arms = phase_shifter(1, preset.control_phase, 2);
    const LinearMap recombine = beam_splitter_5050(0, 1, 2);
    if (preset.lo_model == LoModel::displacement) {
        const LinearMap lo = lo_displacement(0, preset.n_lo, preset.phi_lo, 2);
        return {input, first.then(arms).then(lo).then(recombine), 0, 1};
    }
    const LoInjection lo = lo_injection(0, preset.n_lo, preset.phi_lo, preset.T, 2);
    const LinearMap map = first.extended(1).then(arms.extended(1)).then(lo.mixer).then(recombine.extended(1));
    return {tensor(input, lo.ancilla), map, 0, 1};
}

}  // namespace cohsv
