// Copyright 2026 The qhide Authors
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

#include "qhide/state_vector.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "matrix.h"
#include "qhide/errors.h"

namespace qhide {

namespace {

constexpr std::size_t dim_for(int qubit_count) {
    return std::size_t{1} << qubit_count;
}

void require_qubits(const StateVector &state, int expected, const char *op) {
    if (state.qubit_count() != expected) {
        throw std::invalid_argument(std::string(op) + " requires a " + std::to_string(expected) +
                                    "-qubit register, got " + std::to_string(state.qubit_count()));
    }
}

}  // namespace

StateVector::StateVector(int qubit_count, std::vector<double> amplitudes)
    : qubit_count_(qubit_count), amplitudes_(std::move(amplitudes)) {
    if (qubit_count != 2 && qubit_count != 3) {
        throw std::invalid_argument("qubit_count must be 2 or 3");
    }
    if (amplitudes_.size() != dim_for(qubit_count)) {
        throw std::invalid_argument("expected " + std::to_string(dim_for(qubit_count)) + " amplitudes, got " +
                                    std::to_string(amplitudes_.size()));
    }
    for (double a : amplitudes_) {
        if (!std::isfinite(a)) {
            throw std::invalid_argument("amplitudes must be finite");
        }
    }
    if (std::abs(squared_norm() - 1.0) > kAmplitudeTolerance) {
        throw std::invalid_argument("state is not normalized");
    }
}

StateVector StateVector::basis(int qubit_count, BasisIndex index) {
    if (qubit_count != 2 && qubit_count != 3) {
        throw std::invalid_argument("qubit_count must be 2 or 3");
    }
    std::vector<double> amps(dim_for(qubit_count), 0.0);
    if (index >= amps.size()) {
        throw std::invalid_argument("basis index out of range");
    }
    amps[index] = 1.0;
    return StateVector(qubit_count, std::move(amps));
}

StateVector StateVector::normalized(int qubit_count, std::vector<double> raw) {
    double sq = 0.0;
    for (double a : raw) {
        sq += a * a;
    }
    if (!(sq > 0.0) || !std::isfinite(sq)) {
        throw std::invalid_argument("cannot normalize a zero or non-finite vector");
    }
    double inv = 1.0 / std::sqrt(sq);
    for (double &a : raw) {
        a *= inv;
    }
    return StateVector(qubit_count, std::move(raw));
}

double StateVector::squared_norm() const {
    double sq = 0.0;
    for (double a : amplitudes_) {
        sq += a * a;
    }
    return sq;
}

std::vector<BasisIndex> StateVector::support(double tolerance) const {
    std::vector<BasisIndex> out;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        if (std::abs(amplitudes_[i]) > tolerance) {
            out.push_back(static_cast<BasisIndex>(i));
        }
    }
    return out;
}

bool StateVector::approx_equal(const StateVector &other, double tolerance) const {
    if (qubit_count_ != other.qubit_count_) {
        return false;
    }
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        if (std::abs(amplitudes_[i] - other.amplitudes_[i]) > tolerance) {
            return false;
        }
    }
    return true;
}

StateVector uniform_data_state() {
    return StateVector(2, {0.5, 0.5, 0.5, 0.5});
}

StateVector pair_state(BasisIndex x, BasisIndex y) {
    if (x >= kDataDim || y >= kDataDim || x == y) {
        throw std::invalid_argument("pair_state needs two distinct data basis indices");
    }
    std::vector<double> amps(kDataDim, 0.0);
    amps[x] = kInvSqrt2;
    amps[y] = kInvSqrt2;
    return StateVector(2, std::move(amps));
}

StateVector with_extra_qubit(const StateVector &data) {
    require_qubits(data, 2, "with_extra_qubit");
    std::vector<double> amps(8, 0.0);
    for (BasisIndex x = 0; x < kDataDim; ++x) {
        amps[x * 2] = data[x];
    }
    return StateVector(3, std::move(amps));
}

StateVector apply_oracle(const StateVector &state, const PairOracle &oracle) {
    require_qubits(state, 3, "apply_oracle");
    std::vector<double> out(8, 0.0);
    for (BasisIndex x = 0; x < kDataDim; ++x) {
        BasisIndex f = oracle.marks(x) ? 1 : 0;
        for (BasisIndex a = 0; a < 2; ++a) {
            out[x * 2 + (a ^ f)] = state[x * 2 + a];
        }
    }
    return StateVector(3, std::move(out));
}

StateVector apply_dp(const StateVector &state) {
    require_qubits(state, 3, "apply_dp");
    double mean = 0.0;
    for (BasisIndex x = 0; x < kDataDim; ++x) {
        mean += state[x * 2];
    }
    mean /= 4.0;
    std::vector<double> out(8);
    for (BasisIndex x = 0; x < kDataDim; ++x) {
        out[x * 2] = 2.0 * mean - state[x * 2];
        out[x * 2 + 1] = -state[x * 2 + 1];
    }
    return StateVector(3, std::move(out));
}

StateVector apply_dp_matrix(const StateVector &state) {
    require_qubits(state, 3, "apply_dp_matrix");
    static const RealMatrix op = [] {
        RealMatrix h = RealMatrix::hadamard();
        RealMatrix w = kron(kron(h, h), RealMatrix::identity(2));
        return w * RealMatrix::zero_reflection(8) * w;
    }();
    return StateVector(3, op.apply(state.amplitudes()));
}

StateVector apply_g(const StateVector &state) {
    require_qubits(state, 2, "apply_g");
    double mean = 0.0;
    for (double a : state.amplitudes()) {
        mean += a;
    }
    mean /= 4.0;
    std::vector<double> out(kDataDim);
    for (BasisIndex x = 0; x < kDataDim; ++x) {
        out[x] = -state[x] + 2.0 * mean;
    }
    return StateVector(2, std::move(out));
}

StateVector apply_g_matrix(const StateVector &state) {
    require_qubits(state, 2, "apply_g_matrix");
    static const RealMatrix op = [] {
        RealMatrix h = RealMatrix::hadamard();
        RealMatrix w = kron(h, h);
        return w * RealMatrix::zero_reflection(4) * w;
    }();
    return StateVector(2, op.apply(state.amplitudes()));
}

OutcomeDistribution measurement_distribution(const StateVector &state) {
    OutcomeDistribution dist;
    dist.probabilities.reserve(state.size());
    for (double a : state.amplitudes()) {
        dist.probabilities.push_back(a * a);
    }
    return dist;
}

Measurement measure(const StateVector &state, RandomStream &rng) {
    OutcomeDistribution dist = measurement_distribution(state);
    double u = rng.next_unit();
    double acc = 0.0;
    BasisIndex chosen = 0;
    bool found = false;
    BasisIndex last_nonzero = 0;
    for (BasisIndex i = 0; i < dist.size(); ++i) {
        if (dist[i] <= 0.0) {
            continue;
        }
        last_nonzero = i;
        acc += dist[i];
        if (!found && u < acc) {
            chosen = i;
            found = true;
        }
    }
    if (!found) {
        // u landed in the rounding gap above the accumulated total.
        chosen = last_nonzero;
    }
    return Measurement{chosen, StateVector::basis(state.qubit_count(), chosen)};
}

double entanglement_residual(const StateVector &state) {
    require_qubits(state, 3, "entanglement_residual");
    // Rows are data indices, columns the extra qubit. For a 4x2 matrix M,
    // det(M^T M) equals the sum of squared 2x2 minors, so
    // sigma_2 = sqrt(sum minors^2) / sigma_1 without cancellation.
    double minors_sq = 0.0;
    for (BasisIndex x = 0; x < kDataDim; ++x) {
        for (BasisIndex y = x + 1; y < kDataDim; ++y) {
            double m = state[x * 2] * state[y * 2 + 1] - state[x * 2 + 1] * state[y * 2];
            minors_sq += m * m;
        }
    }
    double c00 = 0.0, c11 = 0.0, c01 = 0.0;
    for (BasisIndex x = 0; x < kDataDim; ++x) {
        c00 += state[x * 2] * state[x * 2];
        c11 += state[x * 2 + 1] * state[x * 2 + 1];
        c01 += state[x * 2] * state[x * 2 + 1];
    }
    double tr = c00 + c11;
    double disc = std::sqrt(std::max(0.0, (c00 - c11) * (c00 - c11) + 4.0 * c01 * c01));
    double sigma1_sq = 0.5 * (tr + disc);
    if (sigma1_sq <= 0.0) {
        return 0.0;
    }
    return std::sqrt(minors_sq / sigma1_sq);
}

StateVector extract_data_register(const StateVector &state) {
    require_qubits(state, 3, "extract_data_register");
    double residual = entanglement_residual(state);
    if (residual >= kSeparabilityTolerance) {
        throw NotSeparable("extra qubit is entangled with the data register (second singular value " +
                           std::to_string(residual) + ")");
    }
    double norm0 = 0.0, norm1 = 0.0;
    for (BasisIndex x = 0; x < kDataDim; ++x) {
        norm0 += state[x * 2] * state[x * 2];
        norm1 += state[x * 2 + 1] * state[x * 2 + 1];
    }
    BasisIndex column = norm0 >= norm1 ? 0 : 1;
    std::vector<double> data(kDataDim);
    for (BasisIndex x = 0; x < kDataDim; ++x) {
        data[x] = state[x * 2 + column];
    }
    for (double a : data) {
        if (std::abs(a) > kAmplitudeTolerance) {
            if (a < 0.0) {
                for (double &b : data) {
                    b = -b;
                }
            }
            break;
        }
    }
    return StateVector::normalized(2, std::move(data));
}

Bit bit_at(BasisIndex index, Position position) {
    if (index >= kDataDim) {
        throw std::invalid_argument("bit_at expects a 2-qubit basis index");
    }
    unsigned shift = position == Position::kFirst ? 1 : 0;
    return static_cast<Bit>((index >> shift) & 1U);
}

}  // namespace qhide
