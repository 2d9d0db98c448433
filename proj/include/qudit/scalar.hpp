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
 * @file scalar.hpp
 * @brief The two scalar modes operators are built over.
 *
 * A scalar field is a small value type that creates scalars (zero, one,
 * rationals, roots of unity) and knows how to conjugate, embed and compare
 * them. Scalars themselves provide +, -, * and unary minus.
 *
 *  - CycloField  (cyclo.hpp): exact, equality is structural.
 *  - ComplexField:            std::complex<double>, equality is up to a tolerance.
 */

#ifndef QUDIT_SCALAR_HPP
#define QUDIT_SCALAR_HPP

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <concepts>

#include "cyclo.hpp"

namespace qudit {

class ComplexField {
   public:
    using value_type = std::complex<double>;
    static constexpr bool is_exact = false;
    static constexpr const char* mode_name = "float";

    value_type zero() const { return {0.0, 0.0}; }
    value_type one() const { return {1.0, 0.0}; }
    value_type rational(const mpq_class& r) const { return {r.get_d(), 0.0}; }

    value_type root_of_unity(int d, long k) const {
        const long r = detail::positive_mod(k, d);
        if (r == 0) return one();
        const double angle = 2.0 * M_PI * static_cast<double>(r) / static_cast<double>(d);
        return {std::cos(angle), std::sin(angle)};
    }

    bool has_roots_of_order(int d) const { return d >= 1; }
    value_type lift(const value_type& v) const { return v; }

    static value_type conj(const value_type& v) { return std::conj(v); }
    static value_type to_complex(const value_type& v) { return v; }
    static bool is_zero(const value_type& v) { return v == value_type{}; }
    static bool equal(const value_type& a, const value_type& b) { return a == b; }
    static ComplexField common(const ComplexField&, const ComplexField&) { return {}; }

    friend bool operator==(const ComplexField&, const ComplexField&) { return true; }
};

template <class F>
concept ScalarField = std::copyable<F> && std::equality_comparable<F> &&
                      requires(const F& f, const typename F::value_type& v, const mpq_class& r) {
                          typename F::value_type;
                          { F::is_exact } -> std::convertible_to<bool>;
                          { f.zero() } -> std::same_as<typename F::value_type>;
                          { f.one() } -> std::same_as<typename F::value_type>;
                          { f.rational(r) } -> std::same_as<typename F::value_type>;
                          { f.root_of_unity(2, 1L) } -> std::same_as<typename F::value_type>;
                          { f.lift(v) } -> std::same_as<typename F::value_type>;
                          { F::conj(v) } -> std::same_as<typename F::value_type>;
                          { F::to_complex(v) } -> std::convertible_to<std::complex<double>>;
                          { F::is_zero(v) } -> std::convertible_to<bool>;
                          { F::common(f, f) } -> std::same_as<F>;
                          { v + v } -> std::convertible_to<typename F::value_type>;
                          { v - v } -> std::convertible_to<typename F::value_type>;
                          { v * v } -> std::convertible_to<typename F::value_type>;
                          { -v } -> std::convertible_to<typename F::value_type>;
                      };

static_assert(ScalarField<CycloField>);
static_assert(ScalarField<ComplexField>);

}  // namespace qudit

#endif  // QUDIT_SCALAR_HPP
