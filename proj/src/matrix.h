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

#ifndef QHIDE_MATRIX_H
#define QHIDE_MATRIX_H

#include <cstddef>
#include <span>
#include <vector>

namespace qhide {

/// Dense row-major real matrix. Only used for the explicit operator-product
/// forms; the sizes involved never exceed 8x8.
class RealMatrix {
   public:
    RealMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {
    }

    static RealMatrix identity(std::size_t n);
    static RealMatrix hadamard();
    /// 2|0><0| - I of dimension n.
    static RealMatrix zero_reflection(std::size_t n);

    std::size_t rows() const {
        return rows_;
    }
    std::size_t cols() const {
        return cols_;
    }
    double &operator()(std::size_t r, std::size_t c) {
        return data_[r * cols_ + c];
    }
    double operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    std::vector<double> apply(std::span<const double> v) const;

   private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> data_;
};

RealMatrix operator*(const RealMatrix &a, const RealMatrix &b);
RealMatrix kron(const RealMatrix &a, const RealMatrix &b);

}  // namespace qhide

#endif  // QHIDE_MATRIX_H
