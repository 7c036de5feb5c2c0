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

#include "qhist/linalg.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace qhist {

// Per-output-entry work below this many flops is not worth a parallel region.
static constexpr size_t kParallelGrain = 1 << 12;

CMatrix CMatrix::identity(size_t dim) {
    CMatrix m(dim, dim);
    for (size_t i = 0; i < dim; i++) {
        m.at(i, i) = 1.0;
    }
    return m;
}

CVector basis_vector(size_t dim, size_t index) {
    if (index >= dim) {
        throw std::invalid_argument("basis_vector: index out of range");
    }
    CVector v(dim);
    v[index] = 1.0;
    return v;
}

CMatrix tensor_product(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows * b.rows, a.cols * b.cols);
    const int64_t arows = static_cast<int64_t>(a.rows);
#pragma omp parallel for if (out.entries.size() >= kParallelGrain)
    for (int64_t i = 0; i < arows; i++) {
        for (size_t k = 0; k < b.rows; k++) {
            for (size_t j = 0; j < a.cols; j++) {
                const cdouble aij = a.at(static_cast<size_t>(i), j);
                for (size_t l = 0; l < b.cols; l++) {
                    out.at(static_cast<size_t>(i) * b.rows + k, j * b.cols + l) =
                        aij * b.at(k, l);
                }
            }
        }
    }
    return out;
}

CVector tensor_product(const CVector &a, const CVector &b) {
    CVector out(a.size() * b.size());
    for (size_t i = 0; i < a.size(); i++) {
        for (size_t j = 0; j < b.size(); j++) {
            out[i * b.size() + j] = a[i] * b[j];
        }
    }
    return out;
}

CMatrix mat_mul(const CMatrix &a, const CMatrix &b) {
    if (a.cols != b.rows) {
        throw std::invalid_argument("mat_mul: inner dimensions do not match");
    }
    CMatrix out(a.rows, b.cols);
    const int64_t arows = static_cast<int64_t>(a.rows);
#pragma omp parallel for if (a.rows * b.cols * a.cols >= kParallelGrain)
    for (int64_t i = 0; i < arows; i++) {
        cdouble *out_row = &out.entries[static_cast<size_t>(i) * out.cols];
        for (size_t k = 0; k < a.cols; k++) {
            const cdouble aik = a.at(static_cast<size_t>(i), k);
            if (aik == cdouble{}) {
                continue;
            }
            const cdouble *b_row = &b.entries[k * b.cols];
            for (size_t j = 0; j < b.cols; j++) {
                out_row[j] += aik * b_row[j];
            }
        }
    }
    return out;
}

CVector mat_apply(const CMatrix &m, const CVector &v) {
    if (m.cols != v.size()) {
        throw std::invalid_argument("mat_apply: dimension mismatch");
    }
    CVector out(m.rows);
    const int64_t rows = static_cast<int64_t>(m.rows);
#pragma omp parallel for if (m.rows * m.cols >= kParallelGrain)
    for (int64_t i = 0; i < rows; i++) {
        cdouble acc = 0.0;
        const cdouble *row = &m.entries[static_cast<size_t>(i) * m.cols];
        for (size_t j = 0; j < m.cols; j++) {
            acc += row[j] * v[j];
        }
        out[static_cast<size_t>(i)] = acc;
    }
    return out;
}

CMatrix adjoint(const CMatrix &m) {
    CMatrix out(m.cols, m.rows);
    const int64_t rows = static_cast<int64_t>(m.rows);
#pragma omp parallel for if (m.entries.size() >= kParallelGrain)
    for (int64_t i = 0; i < rows; i++) {
        for (size_t j = 0; j < m.cols; j++) {
            out.at(j, static_cast<size_t>(i)) = std::conj(m.at(static_cast<size_t>(i), j));
        }
    }
    return out;
}

CMatrix outer_product(const CVector &u, const CVector &v) {
    CMatrix out(u.size(), v.size());
    const int64_t rows = static_cast<int64_t>(u.size());
#pragma omp parallel for if (u.size() * v.size() >= kParallelGrain)
    for (int64_t i = 0; i < rows; i++) {
        const cdouble ui = u[static_cast<size_t>(i)];
        for (size_t j = 0; j < v.size(); j++) {
            out.at(static_cast<size_t>(i), j) = ui * std::conj(v[j]);
        }
    }
    return out;
}

cdouble trace(const CMatrix &m) {
    if (!m.is_square()) {
        throw std::invalid_argument("trace: matrix is not square");
    }
    cdouble acc = 0.0;
    for (size_t i = 0; i < m.rows; i++) {
        acc += m.at(i, i);
    }
    return acc;
}

cdouble inner_product(const CVector &u, const CVector &v) {
    if (u.size() != v.size()) {
        throw std::invalid_argument("inner_product: dimension mismatch");
    }
    cdouble acc = 0.0;
    for (size_t i = 0; i < u.size(); i++) {
        acc += std::conj(u[i]) * v[i];
    }
    return acc;
}

double squared_norm(const CVector &v) {
    double acc = 0.0;
    for (const cdouble &x : v) {
        acc += std::norm(x);
    }
    return acc;
}

CMatrix scaled(const CMatrix &m, cdouble factor) {
    CMatrix out = m;
    for (cdouble &x : out.entries) {
        x *= factor;
    }
    return out;
}

bool frobenius_close(const CMatrix &a, const CMatrix &b, double tol) {
    if (a.rows != b.rows || a.cols != b.cols) {
        throw std::invalid_argument("frobenius_close: dimension mismatch");
    }
    for (size_t i = 0; i < a.entries.size(); i++) {
        if (std::abs(a.entries[i] - b.entries[i]) > tol) {
            return false;
        }
    }
    return true;
}

bool is_unitary(const CMatrix &m, double tol) {
    if (!m.is_square()) {
        return false;
    }
    return frobenius_close(mat_mul(m, adjoint(m)), CMatrix::identity(m.rows), tol);
}

bool is_hermitian(const CMatrix &m, double tol) {
    if (!m.is_square()) {
        return false;
    }
    for (size_t i = 0; i < m.rows; i++) {
        for (size_t j = i; j < m.cols; j++) {
            if (std::abs(m.at(i, j) - std::conj(m.at(j, i))) > tol) {
                return false;
            }
        }
    }
    return true;
}

bool all_finite(const CMatrix &m) {
    for (const cdouble &x : m.entries) {
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
            return false;
        }
    }
    return true;
}

bool all_finite(const CVector &v) {
    for (const cdouble &x : v) {
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
            return false;
        }
    }
    return true;
}

}  // namespace qhist
