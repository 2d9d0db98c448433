/*
   Copyright 2026 The qudit-algebra Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file matrix.hpp
 * @brief Dense square operator matrices over a scalar field.
 *
 * Operators act on column vectors; basis ket |k> is the k-th standard basis
 * column. Storage is row-major. Matrices are values: every operation returns
 * a new matrix.
 */

#ifndef QUDIT_MATRIX_HPP
#define QUDIT_MATRIX_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace qudit {

template <ScalarField F>
class OperatorMatrix {
   public:
    using field_type = F;
    using value_type = typename F::value_type;

    OperatorMatrix(F field, std::size_t dim, std::vector<value_type> entries)
        : field_(std::move(field)), dim_(dim), entries_(std::move(entries)) {
        if (dim_ == 0) throw DimensionMismatch("operator dimension must be >= 1");
        if (entries_.size() != dim_ * dim_)
            throw DimensionMismatch("expected " + std::to_string(dim_ * dim_) + " entries, got " +
                                    std::to_string(entries_.size()));
    }

    static OperatorMatrix zeros(std::size_t dim, const F& field) {
        return OperatorMatrix(field, dim, std::vector<value_type>(dim * dim, field.zero()));
    }

    static OperatorMatrix identity(std::size_t dim, const F& field) {
        auto m = zeros(dim, field);
        for (std::size_t i = 0; i < dim; ++i) m.entries_[i * dim + i] = field.one();
        return m;
    }

    /// entries(r, c) = fn(r, c)
    template <class Fn>
    static OperatorMatrix generate(std::size_t dim, const F& field, Fn&& fn) {
        std::vector<value_type> e;
        e.reserve(dim * dim);
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c) e.push_back(fn(r, c));
        return OperatorMatrix(field, dim, std::move(e));
    }

    std::size_t dim() const { return dim_; }
    const F& field() const { return field_; }
    const value_type& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
    const std::vector<value_type>& entries() const { return entries_; }

    OperatorMatrix& operator+=(const OperatorMatrix& o) {
        check_compatible(o, "add");
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] = entries_[i] + o.entries_[i];
        return *this;
    }

    OperatorMatrix& operator-=(const OperatorMatrix& o) {
        check_compatible(o, "sub");
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] = entries_[i] - o.entries_[i];
        return *this;
    }

    friend OperatorMatrix operator+(OperatorMatrix a, const OperatorMatrix& b) { return a += b; }
    friend OperatorMatrix operator-(OperatorMatrix a, const OperatorMatrix& b) { return a -= b; }

    OperatorMatrix operator-() const {
        OperatorMatrix out = *this;
        for (auto& e : out.entries_) e = -e;
        return out;
    }

    friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
        a.check_compatible(b, "matmul");
        const std::size_t n = a.dim_;
        auto out = zeros(n, a.field_);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                const value_type& lhs = a.entries_[i * n + k];
                if (F::is_zero(lhs)) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    const value_type& rhs = b.entries_[k * n + j];
                    if (F::is_zero(rhs)) continue;
                    out.entries_[i * n + j] = out.entries_[i * n + j] + lhs * rhs;
                }
            }
        }
        return out;
    }

    friend OperatorMatrix operator*(const value_type& s, const OperatorMatrix& a) {
        OperatorMatrix out = a;
        if (F::is_zero(s)) return zeros(a.dim_, a.field_);
        for (auto& e : out.entries_)
            if (!F::is_zero(e)) e = s * e;
        return out;
    }

    friend bool operator==(const OperatorMatrix& a, const OperatorMatrix& b) {
        return a.dim_ == b.dim_ && a.field_ == b.field_ && a.entries_ == b.entries_;
    }

   private:
    void check_compatible(const OperatorMatrix& o, const char* op) const {
        if (dim_ != o.dim_)
            throw DimensionMismatch(std::string(op) + ": dimension " + std::to_string(dim_) + " vs " +
                                    std::to_string(o.dim_));
        if (!(field_ == o.field_)) throw DimensionMismatch(std::string(op) + ": operands use different scalar fields");
    }

    F field_;
    std::size_t dim_;
    std::vector<value_type> entries_;
};

template <ScalarField F>
OperatorMatrix<F> identity(std::size_t dim, const F& field) {
    return OperatorMatrix<F>::identity(dim, field);
}

template <ScalarField F>
OperatorMatrix<F> zeros(std::size_t dim, const F& field) {
    return OperatorMatrix<F>::zeros(dim, field);
}

/// |row><col|
template <ScalarField F>
OperatorMatrix<F> matrix_unit(std::size_t dim, const F& field, std::size_t row, std::size_t col) {
    if (row >= dim || col >= dim) throw IndexRangeError("matrix_unit: index outside 0.." + std::to_string(dim - 1));
    return OperatorMatrix<F>::generate(dim, field, [&](std::size_t r, std::size_t c) {
        return (r == row && c == col) ? field.one() : field.zero();
    });
}

template <ScalarField F>
OperatorMatrix<F> adjoint(const OperatorMatrix<F>& a) {
    return OperatorMatrix<F>::generate(a.dim(), a.field(),
                                       [&](std::size_t r, std::size_t c) { return F::conj(a(c, r)); });
}

/// a^k by repeated squaring; a^0 is the identity.
template <ScalarField F, std::integral I>
OperatorMatrix<F> matpow(const OperatorMatrix<F>& a, I k) {
    if constexpr (std::is_signed_v<I>) {
        if (k < 0) throw IndexRangeError("matpow: negative exponent " + std::to_string(k));
    }
    auto result = identity(a.dim(), a.field());
    auto base = a;
    auto e = static_cast<unsigned long long>(k);
    while (e > 0) {
        if (e & 1ULL) result = result * base;
        e >>= 1ULL;
        if (e > 0) base = base * base;
    }
    return result;
}

/// Re-express every entry in a larger field (exact mode: q_n = q_N^{N/n}).
template <ScalarField F>
OperatorMatrix<F> lift(const OperatorMatrix<F>& a, const F& target) {
    if (a.field() == target) return a;
    return OperatorMatrix<F>::generate(a.dim(), target,
                                       [&](std::size_t r, std::size_t c) { return target.lift(a(r, c)); });
}

/// Kronecker product, (A (x) B)[i*dB + k, j*dB + l] = A[i,j] B[k,l]. Exact
/// operands over different cyclotomic fields are first embedded in their
/// common field.
template <ScalarField F>
OperatorMatrix<F> kron(const OperatorMatrix<F>& a, const OperatorMatrix<F>& b) {
    const F field = F::common(a.field(), b.field());
    const auto la = lift(a, field);
    const auto lb = lift(b, field);
    const std::size_t da = a.dim(), db = b.dim();
    return OperatorMatrix<F>::generate(da * db, field, [&](std::size_t r, std::size_t c) {
        const auto& x = la(r / db, c / db);
        if (F::is_zero(x)) return field.zero();
        return x * lb(r % db, c % db);
    });
}

/// Largest entry-wise |A - B| after embedding in C.
template <ScalarField F>
double max_residual(const OperatorMatrix<F>& a, const OperatorMatrix<F>& b) {
    if (a.dim() != b.dim())
        throw DimensionMismatch("max_residual: dimension " + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
    if constexpr (F::is_exact) {
        if (a == b) return 0.0;
    }
    const auto diff = a - b;
    double worst = 0.0;
    for (const auto& e : diff.entries()) worst = std::max(worst, std::abs(std::complex<double>(F::to_complex(e))));
    return worst;
}

/// Exact mode: structural equality (tolerance ignored). Float mode:
/// max_residual <= tolerance.
template <ScalarField F>
bool equals(const OperatorMatrix<F>& a, const OperatorMatrix<F>& b, double tolerance = 1e-10) {
    if (a.dim() != b.dim())
        throw DimensionMismatch("equals: dimension " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
    if constexpr (F::is_exact) {
        return a == b;
    } else {
        return max_residual(a, b) <= tolerance;
    }
}

}  // namespace qudit

#endif  // QUDIT_MATRIX_HPP
