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
 * @file lattice.hpp
 * @brief Operators of the clock-and-shift algebra and of the almost-unitary
 *        shift algebra on a d-point lattice.
 *
 * Canonical representation: the truncated up-shift a^dag |n> = |n+1>,
 * a^dag |d-1> = 0, i.e. a^dag[m, n] = delta_{m, n+1}. Everything else is
 * built from it by the closed-form expressions below:
 *
 *   P_n = a^dag^n a^n                      R_n = a^n a^dag^n
 *   X   = beta * sum_{m=1}^{d-1} P_m
 *   U   = a^dag + a^{d-1}                  (cyclic shift)
 *   V   = sum_n q^n (P_n - P_{n+1})        (clock, diag(1, q, ..., q^{d-1}))
 *   SP_n = (1/d) sum_j q^{jn} V^j           SR_n = 1 - SP_n
 *
 * and the inverse direction a^dag = U - SP_0 U.
 *
 * SP_n / SR_n are the spectral projectors of V ("script" P and R).
 */

#ifndef QUDIT_LATTICE_HPP
#define QUDIT_LATTICE_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>

#include "cyclo.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "scalar.hpp"

namespace qudit {

/// Deliberate corruption of one constructor. Used only to show that the
/// verifier can fail.
enum class Fault {
    none,
    clock_root_squared,  ///< make_V uses q^{2n} instead of q^n
};

template <ScalarField F>
struct LatticeConfig {
    using field_type = F;
    using value_type = typename F::value_type;

    int d;
    mpq_class beta;
    F field;
    double tolerance;
    Fault fault = Fault::none;

    std::size_t dim() const { return static_cast<std::size_t>(d); }

    /// q^k with q = exp(2 pi i / d).
    value_type q_power(long k) const { return field.root_of_unity(d, k); }
};

template <ScalarField F>
LatticeConfig<F> make_lattice(int d, F field, mpq_class beta = 1, double tolerance = 1e-10,
                              Fault fault = Fault::none) {
    if (d < 2) throw ConfigError("lattice size d must be >= 2, got " + std::to_string(d));
    if (sgn(beta) <= 0) throw ConfigError("grid spacing beta must be > 0, got " + beta.get_str());
    if (!(tolerance >= 0.0)) throw ConfigError("tolerance must be >= 0");
    return LatticeConfig<F>{d, std::move(beta), std::move(field), tolerance, fault};
}

inline LatticeConfig<CycloField> exact_lattice(int d, mpq_class beta = 1) {
    if (d < 2) throw ConfigError("lattice size d must be >= 2, got " + std::to_string(d));
    return make_lattice(d, CycloField(d), std::move(beta));
}

inline LatticeConfig<ComplexField> float_lattice(int d, mpq_class beta = 1, double tolerance = 1e-10) {
    return make_lattice(d, ComplexField{}, std::move(beta), tolerance);
}

namespace detail {

template <ScalarField F>
void require_dim(const LatticeConfig<F>& cfg, const OperatorMatrix<F>& m, const char* what) {
    if (m.dim() != cfg.dim())
        throw DimensionMismatch(std::string(what) + ": operator has dimension " + std::to_string(m.dim()) +
                                ", lattice has d = " + std::to_string(cfg.d));
}

inline void require_index(long n, long lo, long hi, const char* what) {
    if (n < lo || n > hi)
        throw IndexRangeError(std::string(what) + ": index " + std::to_string(n) + " outside " + std::to_string(lo) +
                              ".." + std::to_string(hi));
}

}  // namespace detail

template <ScalarField F>
OperatorMatrix<F> make_a_dagger(const LatticeConfig<F>& cfg) {
    return OperatorMatrix<F>::generate(cfg.dim(), cfg.field, [&](std::size_t m, std::size_t n) {
        return m == n + 1 ? cfg.field.one() : cfg.field.zero();
    });
}

template <ScalarField F>
OperatorMatrix<F> make_a(const LatticeConfig<F>& cfg) {
    return adjoint(make_a_dagger(cfg));
}

/// P_n = a^dag^n a^n for n in 0..d (P_0 = 1, P_d = 0).
template <ScalarField F>
OperatorMatrix<F> proj_P(const LatticeConfig<F>& cfg, int n) {
    detail::require_index(n, 0, cfg.d, "proj_P");
    return matpow(make_a_dagger(cfg), n) * matpow(make_a(cfg), n);
}

/// R_n = a^n a^dag^n for n in 0..d (R_0 = 1, R_d = 0).
template <ScalarField F>
OperatorMatrix<F> proj_R(const LatticeConfig<F>& cfg, int n) {
    detail::require_index(n, 0, cfg.d, "proj_R");
    return matpow(make_a(cfg), n) * matpow(make_a_dagger(cfg), n);
}

/// X = beta * (P_1 + ... + P_{d-1}); X|n> = beta n |n>.
template <ScalarField F>
OperatorMatrix<F> position_X(const LatticeConfig<F>& cfg) {
    auto sum = zeros(cfg.dim(), cfg.field);
    for (int m = 1; m < cfg.d; ++m) sum += proj_P(cfg, m);
    return cfg.field.rational(cfg.beta) * sum;
}

/// U = a^dag + a^{d-1} from a supplied ladder pair.
template <ScalarField F>
OperatorMatrix<F> shift_from_ladder(const LatticeConfig<F>& cfg, const OperatorMatrix<F>& a,
                                    const OperatorMatrix<F>& a_dag) {
    detail::require_dim(cfg, a, "shift_from_ladder");
    detail::require_dim(cfg, a_dag, "shift_from_ladder");
    return a_dag + matpow(a, cfg.d - 1);
}

/// V = sum_{n=0}^{d-1} q^n (P_n - P_{n+1}) with P_n = a^dag^n a^n from the
/// supplied pair. P_d = a^dag^d a^d vanishes by nilpotency.
template <ScalarField F>
OperatorMatrix<F> clock_from_ladder(const LatticeConfig<F>& cfg, const OperatorMatrix<F>& a,
                                    const OperatorMatrix<F>& a_dag) {
    detail::require_dim(cfg, a, "clock_from_ladder");
    detail::require_dim(cfg, a_dag, "clock_from_ladder");
    const long twist = cfg.fault == Fault::clock_root_squared ? 2 : 1;
    auto projector = [&](int n) { return matpow(a_dag, n) * matpow(a, n); };
    auto v = zeros(cfg.dim(), cfg.field);
    auto current = projector(0);
    for (int n = 0; n < cfg.d; ++n) {
        auto next = projector(n + 1);
        v += cfg.q_power(twist * n) * (current - next);
        current = std::move(next);
    }
    return v;
}

template <ScalarField F>
OperatorMatrix<F> make_U(const LatticeConfig<F>& cfg) {
    return shift_from_ladder(cfg, make_a(cfg), make_a_dagger(cfg));
}

template <ScalarField F>
OperatorMatrix<F> make_V(const LatticeConfig<F>& cfg) {
    return clock_from_ladder(cfg, make_a(cfg), make_a_dagger(cfg));
}

/// (1/d) sum_{j=0}^{d-1} q^{jn} V^j for the supplied V. n is used as given.
template <ScalarField F>
OperatorMatrix<F> script_projector(const LatticeConfig<F>& cfg, const OperatorMatrix<F>& v, long n) {
    detail::require_dim(cfg, v, "script_projector");
    auto sum = zeros(cfg.dim(), cfg.field);
    auto v_power = identity(cfg.dim(), cfg.field);
    for (long j = 0; j < cfg.d; ++j) {
        sum += cfg.q_power(j * n) * v_power;
        v_power = v_power * v;
    }
    return cfg.field.rational(mpq_class(1, cfg.d)) * sum;
}

/// SP_n, any integer n (reduced mod d).
template <ScalarField F>
OperatorMatrix<F> proj_scriptP(const LatticeConfig<F>& cfg, long n) {
    return script_projector(cfg, make_V(cfg), detail::positive_mod(n, cfg.d));
}

/// SR_n = 1 - SP_n.
template <ScalarField F>
OperatorMatrix<F> proj_scriptR(const LatticeConfig<F>& cfg, long n) {
    return identity(cfg.dim(), cfg.field) - proj_scriptP(cfg, n);
}

/// a^dag = U - SP_0 U with SP_0 built from the supplied V.
template <ScalarField F>
OperatorMatrix<F> a_dagger_from_UV(const LatticeConfig<F>& cfg, const OperatorMatrix<F>& u,
                                   const OperatorMatrix<F>& v) {
    detail::require_dim(cfg, u, "a_dagger_from_UV");
    return u - script_projector(cfg, v, 0) * u;
}

template <ScalarField F>
OperatorMatrix<F> a_from_UV(const LatticeConfig<F>& cfg, const OperatorMatrix<F>& u, const OperatorMatrix<F>& v) {
    return adjoint(a_dagger_from_UV(cfg, u, v));
}

template <ScalarField F>
struct EdgePowers {
    OperatorMatrix<F> raise;  ///< a^dag^{d-1} = U^{d-1} SP_0
    OperatorMatrix<F> lower;  ///< a^{d-1}     = SP_0 U^dag^{d-1}
};

template <ScalarField F>
EdgePowers<F> edge_powers_from_UV(const LatticeConfig<F>& cfg, const OperatorMatrix<F>& u,
                                  const OperatorMatrix<F>& v) {
    detail::require_dim(cfg, u, "edge_powers_from_UV");
    const auto p0 = script_projector(cfg, v, 0);
    return {matpow(u, cfg.d - 1) * p0, p0 * matpow(adjoint(u), cfg.d - 1)};
}

/// e_mn = a^dag^m R_{d-1} a^n.
template <ScalarField F>
OperatorMatrix<F> matrix_unit_shift(const LatticeConfig<F>& cfg, int m, int n) {
    detail::require_index(m, 0, cfg.d - 1, "matrix_unit_shift");
    detail::require_index(n, 0, cfg.d - 1, "matrix_unit_shift");
    return matpow(make_a_dagger(cfg), m) * proj_R(cfg, cfg.d - 1) * matpow(make_a(cfg), n);
}

/// e_mn = U^{m-n} SP_{d-n} (m > n), SP_{d-n} (m = n), U^dag^{n-m} SP_{d-n} (m < n).
template <ScalarField F>
OperatorMatrix<F> matrix_unit_schwinger(const LatticeConfig<F>& cfg, int m, int n) {
    detail::require_index(m, 0, cfg.d - 1, "matrix_unit_schwinger");
    detail::require_index(n, 0, cfg.d - 1, "matrix_unit_schwinger");
    const auto p = proj_scriptP(cfg, cfg.d - n);
    if (m > n) return matpow(make_U(cfg), m - n) * p;
    if (m < n) return matpow(adjoint(make_U(cfg)), n - m) * p;
    return p;
}

}  // namespace qudit

#endif  // QUDIT_LATTICE_HPP
