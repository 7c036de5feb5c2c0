// Copyright 2026 The qhist Authors
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

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qhist {

using cdouble = std::complex<double>;

/// Dense row-major complex matrix.
struct CMatrix {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<cdouble> entries;

    CMatrix() = default;
    CMatrix(size_t rows, size_t cols) : rows(rows), cols(cols), entries(rows * cols) {}

    cdouble &at(size_t r, size_t c) { return entries[r * cols + c]; }
    cdouble at(size_t r, size_t c) const { return entries[r * cols + c]; }

    bool is_square() const { return rows == cols; }

    static CMatrix identity(size_t dim);

    bool operator==(const CMatrix &) const = default;
};

using CVector = std::vector<cdouble>;

CVector basis_vector(size_t dim, size_t index);

// Core kernels. The hot loops are OpenMP-parallel above a size threshold;
// linalg_serial.hpp keeps plain single-threaded versions of the same kernels
// as the reference for tests and the kernel benchmark.

/// Kronecker product; dimensions multiply.
CMatrix tensor_product(const CMatrix &a, const CMatrix &b);
CVector tensor_product(const CVector &a, const CVector &b);

CMatrix mat_mul(const CMatrix &a, const CMatrix &b);
CVector mat_apply(const CMatrix &m, const CVector &v);

/// Conjugate transpose.
CMatrix adjoint(const CMatrix &m);

/// |u><v|
CMatrix outer_product(const CVector &u, const CVector &v);

cdouble trace(const CMatrix &m);

/// <u|v>; conjugates the left argument.
cdouble inner_product(const CVector &u, const CVector &v);

double squared_norm(const CVector &v);

CMatrix scaled(const CMatrix &m, cdouble factor);

/// True iff no entry differs by more than `tol` in absolute value.
bool frobenius_close(const CMatrix &a, const CMatrix &b, double tol);

bool is_unitary(const CMatrix &m, double tol);
bool is_hermitian(const CMatrix &m, double tol);
bool all_finite(const CMatrix &m);
bool all_finite(const CVector &v);

}  // namespace qhist
