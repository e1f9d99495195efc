// Copyright 2026 The SQOA Authors
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

#include "sqoa/pauli.hpp"

#include <cmath>

#include "sqoa/errors.hpp"

namespace sqoa {

char axis_char(PauliAxis a) {
    switch (a) {
        case PauliAxis::X:
            return 'X';
        case PauliAxis::Y:
            return 'Y';
        case PauliAxis::Z:
            return 'Z';
    }
    return '?';
}

PauliAxis parse_axis(std::string_view s) {
    if (s == "X" || s == "x") return PauliAxis::X;
    if (s == "Y" || s == "y") return PauliAxis::Y;
    if (s == "Z" || s == "z") return PauliAxis::Z;
    throw ValidationError("unknown Pauli axis '" + std::string(s) + "'");
}

namespace {

void check_width(int width) {
    if (width < 0 || width > kMaxQubits) {
        throw ValidationError("Pauli width " + std::to_string(width) + " outside [0, " +
                              std::to_string(kMaxQubits) + "]");
    }
}

}  // namespace

PauliString PauliString::identity(int width) {
    check_width(width);
    return PauliString{0, 0, width};
}

PauliString PauliString::single(int width, int qubit, PauliAxis axis) {
    check_width(width);
    if (qubit < 0 || qubit >= width) {
        throw ValidationError("qubit " + std::to_string(qubit) + " outside width " + std::to_string(width));
    }
    PauliString p{0, 0, width};
    uint64_t bit = 1ULL << qubit;
    if (axis != PauliAxis::Z) p.x_mask = bit;
    if (axis != PauliAxis::X) p.z_mask = bit;
    return p;
}

PauliString PauliString::from_label(std::string_view label) {
    const int width = static_cast<int>(label.size());
    check_width(width);
    PauliString p{0, 0, width};
    for (int i = 0; i < width; ++i) {
        uint64_t bit = 1ULL << (width - 1 - i);
        switch (label[i]) {
            case 'I':
            case '_':
                break;
            case 'X':
                p.x_mask |= bit;
                break;
            case 'Y':
                p.x_mask |= bit;
                p.z_mask |= bit;
                break;
            case 'Z':
                p.z_mask |= bit;
                break;
            default:
                throw ValidationError("bad Pauli label character '" + std::string(1, label[i]) + "'");
        }
    }
    return p;
}

std::string PauliString::label() const {
    std::string out(width, 'I');
    for (int q = 0; q < width; ++q) {
        bool x = (x_mask >> q) & 1ULL;
        bool z = (z_mask >> q) & 1ULL;
        out[width - 1 - q] = x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
    }
    return out;
}

std::complex<double> PauliString::y_phase() const {
    static constexpr std::complex<double> powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return powers[y_count() & 3];
}

PauliString PauliString::tensor(const PauliString& other) const {
    if (width != other.width) {
        throw ValidationError("Pauli width mismatch");
    }
    if (((x_mask | z_mask) & (other.x_mask | other.z_mask)) != 0) {
        throw ValidationError("tensor of Pauli strings with overlapping support");
    }
    return PauliString{x_mask | other.x_mask, z_mask | other.z_mask, width};
}

bool strings_commute(const PauliString& a, const PauliString& b) {
    if (a.width != b.width) {
        throw ValidationError("strings_commute: width mismatch (" + std::to_string(a.width) + " vs " +
                              std::to_string(b.width) + ")");
    }
    return (std::popcount(a.x_mask & b.z_mask) + std::popcount(a.z_mask & b.x_mask)) % 2 == 0;
}

Observable::Observable(int n_qubits, double offset) : n_qubits_(n_qubits), offset_(offset) {
    check_width(n_qubits);
    if (!std::isfinite(offset)) {
        throw ValidationError("observable offset must be finite");
    }
}

void Observable::add_term(double coeff, const PauliString& pauli) {
    if (!std::isfinite(coeff)) {
        throw ValidationError("observable coefficients must be finite");
    }
    if (pauli.width != n_qubits_) {
        throw ValidationError("term width " + std::to_string(pauli.width) + " does not match observable width " +
                              std::to_string(n_qubits_));
    }
    if (pauli.is_identity()) {
        offset_ += coeff;
        return;
    }
    auto key = std::make_pair(pauli.x_mask, pauli.z_mask);
    if (auto it = index_.find(key); it != index_.end()) {
        terms_[it->second].coeff += coeff;
        return;
    }
    index_.emplace(key, terms_.size());
    terms_.push_back({coeff, pauli});
}

void Observable::add_offset(double value) {
    if (!std::isfinite(value)) {
        throw ValidationError("observable offset must be finite");
    }
    offset_ += value;
}

double Observable::coefficient_norm() const {
    double s = 0.0;
    for (const PauliTerm& t : terms_) {
        s += std::abs(t.coeff);
    }
    return s;
}

Observable uniform_pauli_sum(int n_qubits, PauliAxis axis) {
    Observable h(n_qubits);
    for (int q = 0; q < n_qubits; ++q) {
        h.add_term(1.0, PauliString::single(n_qubits, q, axis));
    }
    return h;
}

}  // namespace sqoa
