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

#ifndef QHIDE_STATE_VECTOR_H
#define QHIDE_STATE_VECTOR_H

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

#include "qhide/oracle.h"
#include "qhide/random.h"
#include "qhide/types.h"

namespace qhide {

/// Absolute tolerance for floating amplitude comparisons and the norm check.
inline constexpr double kAmplitudeTolerance = 1e-12;
inline constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
/// Bound on the second singular value accepted as "separable".
inline constexpr double kSeparabilityTolerance = 1e-9;

/// Normalized real amplitudes over a 2-qubit data register or a 3-qubit
/// register (data plus one extra marking qubit).
///
/// Index layout: for 2 qubits, index = q1*2 + q2 (position 1 is the most
/// significant bit). For 3 qubits the extra qubit is the least significant
/// bit, index = q1*4 + q2*2 + a, so the even indices hold the extra=|0>
/// subspace and the odd indices the extra=|1> subspace.
class StateVector {
   public:
    /// Throws std::invalid_argument unless qubit_count is 2 or 3, the length
    /// is 2^qubit_count and the squared norm is 1 within kAmplitudeTolerance.
    StateVector(int qubit_count, std::vector<double> amplitudes);

    static StateVector basis(int qubit_count, BasisIndex index);
    /// Rescales `raw` to unit norm. Throws on a zero vector.
    static StateVector normalized(int qubit_count, std::vector<double> raw);

    int qubit_count() const {
        return qubit_count_;
    }
    std::size_t size() const {
        return amplitudes_.size();
    }
    double operator[](BasisIndex index) const {
        return amplitudes_[index];
    }
    std::span<const double> amplitudes() const {
        return amplitudes_;
    }

    double squared_norm() const;
    /// Basis indices whose amplitude magnitude exceeds `tolerance`.
    std::vector<BasisIndex> support(double tolerance = kAmplitudeTolerance) const;
    bool approx_equal(const StateVector &other, double tolerance = kAmplitudeTolerance) const;

   private:
    int qubit_count_;
    std::vector<double> amplitudes_;
};

/// Born-rule probabilities indexed by basis index.
struct OutcomeDistribution {
    std::vector<double> probabilities;

    double operator[](BasisIndex index) const {
        return probabilities[index];
    }
    std::size_t size() const {
        return probabilities.size();
    }
};

struct Measurement {
    BasisIndex outcome;
    StateVector collapsed;
};

/// (1/2)(|00> + |01> + |10> + |11>).
StateVector uniform_data_state();
/// (1/sqrt 2)(|x> + |y>) on the data register; x != y.
StateVector pair_state(BasisIndex x, BasisIndex y);
/// data (x) |0> on the 3-qubit register.
StateVector with_extra_qubit(const StateVector &data);

/// |x, a> -> |x, a xor f(x)>.
StateVector apply_oracle(const StateVector &state, const PairOracle &oracle);

/// Partial diffusion: inversion about the mean on the extra=|0> subspace and
/// sign flip on the extra=|1> subspace. Amplitude-map form.
StateVector apply_dp(const StateVector &state);
/// Partial diffusion as the product (W(x)W(x)I)(2|0><0| - I)(W(x)W(x)I).
StateVector apply_dp_matrix(const StateVector &state);

/// Grover diffusion on the data register: a_j -> 2<a> - a_j.
StateVector apply_g(const StateVector &state);
/// Grover diffusion as the product (W(x)W)(2|0><0| - I)(W(x)W).
StateVector apply_g_matrix(const StateVector &state);

OutcomeDistribution measurement_distribution(const StateVector &state);
Measurement measure(const StateVector &state, RandomStream &rng);

/// Second singular value of the 3-qubit state reshaped as a 4x2 (data x
/// extra) matrix. Zero exactly when the extra qubit factors out.
double entanglement_residual(const StateVector &state);

/// Returns the data factor of a separable 3-qubit state, with the global
/// sign fixed so the first nonzero amplitude is positive. Throws
/// NotSeparable when the extra qubit is entangled with the data.
StateVector extract_data_register(const StateVector &state);

/// Bit of a 2-qubit basis index at `position`.
Bit bit_at(BasisIndex index, Position position);

}  // namespace qhide

#endif  // QHIDE_STATE_VECTOR_H
