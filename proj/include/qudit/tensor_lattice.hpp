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
 * @file tensor_lattice.hpp
 * @brief Translation operators of a d1 x d2 lattice from the one-dimensional
 *        factors.
 *
 * The product basis is |j> (x) |i>: the first factor (d2 points) is the row
 * j, the second (d1 points) the column i. Walking the lattice row by row
 * gives the flat chain index n = j*d1 + i of a D = d1*d2 point lattice.
 *
 *   Delta(a^dag) = 1_{d2} (x) a^dag_{d1} + a^dag_{d2} (x) a^{d1-1}_{d1}
 *   Delta(U)     = Delta(a^dag) + a^{d2-1}_{d2} (x) a^{d1-1}_{d1}
 *
 * The first term steps right within a row, the second jumps from the end of
 * row j to the start of row j+1, the third closes the periodic chain.
 */

#ifndef QUDIT_TENSOR_LATTICE_HPP
#define QUDIT_TENSOR_LATTICE_HPP

#include <cstddef>
#include <numeric>
#include <string>

#include "errors.hpp"
#include "lattice.hpp"
#include "matrix.hpp"
#include "scalar.hpp"

namespace qudit {

template <ScalarField F>
struct ProductLatticeConfig {
    using field_type = F;

    int d1;  ///< horizontal points (second tensor factor)
    int d2;  ///< vertical points (first tensor factor)
    F field;
    double tolerance;

    std::size_t dim() const { return static_cast<std::size_t>(d1) * static_cast<std::size_t>(d2); }

    LatticeConfig<F> horizontal() const { return make_lattice(d1, field, 1, tolerance); }
    LatticeConfig<F> vertical() const { return make_lattice(d2, field, 1, tolerance); }
    /// The flattened D-point chain, over the same scalar field.
    LatticeConfig<F> flat() const { return make_lattice(static_cast<int>(dim()), field, 1, tolerance); }
};

template <ScalarField F>
ProductLatticeConfig<F> make_product_lattice(int d1, int d2, F field, double tolerance = 1e-10) {
    if (d1 < 2 || d2 < 2)
        throw ConfigError("product lattice needs d1, d2 >= 2, got " + std::to_string(d1) + "x" + std::to_string(d2));
    if (!(tolerance >= 0.0)) throw ConfigError("tolerance must be >= 0");
    return ProductLatticeConfig<F>{d1, d2, std::move(field), tolerance};
}

/// Exact product lattice over Q(q_L), L = lcm(d1, d2), so both factors'
/// roots of unity are available.
inline ProductLatticeConfig<CycloField> exact_product_lattice(int d1, int d2) {
    if (d1 < 2 || d2 < 2)
        throw ConfigError("product lattice needs d1, d2 >= 2, got " + std::to_string(d1) + "x" + std::to_string(d2));
    return make_product_lattice(d1, d2, CycloField(std::lcm(d1, d2)));
}

inline ProductLatticeConfig<ComplexField> float_product_lattice(int d1, int d2, double tolerance = 1e-10) {
    return make_product_lattice(d1, d2, ComplexField{}, tolerance);
}

template <ScalarField F>
OperatorMatrix<F> coproduct_a_dagger(const ProductLatticeConfig<F>& pcfg) {
    const auto h = pcfg.horizontal();
    const auto v = pcfg.vertical();
    const auto a_h = make_a(h);
    return kron(identity(v.dim(), pcfg.field), make_a_dagger(h)) +
           kron(make_a_dagger(v), matpow(a_h, h.d - 1));
}

template <ScalarField F>
OperatorMatrix<F> coproduct_U(const ProductLatticeConfig<F>& pcfg) {
    const auto h = pcfg.horizontal();
    const auto v = pcfg.vertical();
    return coproduct_a_dagger(pcfg) + kron(matpow(make_a(v), v.d - 1), matpow(make_a(h), h.d - 1));
}

/// Index of |j> (x) |i> in the kron layout: j * d1 + i.
template <ScalarField F>
std::size_t tensor_index(const ProductLatticeConfig<F>& pcfg, std::size_t row, std::size_t col) {
    return row * static_cast<std::size_t>(pcfg.d1) + col;
}

/// Permutation S with S|n> = |j> (x) |i> for the flat index n = j*d1 + i, so
/// that S a^dag_D S^dag = Delta(a^dag) and S U_D S^dag = Delta(U).
template <ScalarField F>
OperatorMatrix<F> flatten_permutation(const ProductLatticeConfig<F>& pcfg) {
    const std::size_t d1 = static_cast<std::size_t>(pcfg.d1);
    return OperatorMatrix<F>::generate(pcfg.dim(), pcfg.field, [&](std::size_t r, std::size_t n) {
        return tensor_index(pcfg, n / d1, n % d1) == r ? pcfg.field.one() : pcfg.field.zero();
    });
}

}  // namespace qudit

#endif  // QUDIT_TENSOR_LATTICE_HPP
