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

#include "matrix.h"

#include <cmath>
#include <stdexcept>

namespace qhide {

RealMatrix RealMatrix::identity(std::size_t n) {
    RealMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

RealMatrix RealMatrix::hadamard() {
    const double h = 1.0 / std::sqrt(2.0);
    RealMatrix m(2, 2);
    m(0, 0) = h;
    m(0, 1) = h;
    m(1, 0) = h;
    m(1, 1) = -h;
    return m;
}

RealMatrix RealMatrix::zero_reflection(std::size_t n) {
    RealMatrix m = identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = -1.0;
    }
    m(0, 0) = 1.0;
    return m;
}

std::vector<double> RealMatrix::apply(std::span<const double> v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("matrix/vector dimension mismatch");
    }
    std::vector<double> out(rows_, 0.0);
    for (std::size_t r = 0; r < rows_; ++r) {
        double acc = 0.0;
        for (std::size_t c = 0; c < cols_; ++c) {
            acc += (*this)(r, c) * v[c];
        }
        out[r] = acc;
    }
    return out;
}

RealMatrix operator*(const RealMatrix &a, const RealMatrix &b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matrix dimension mismatch");
    }
    RealMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            double aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

RealMatrix kron(const RealMatrix &a, const RealMatrix &b) {
    RealMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

}  // namespace qhide
