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

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "qudit/cyclo.hpp"
#include "qudit/errors.hpp"

namespace {

using qudit::CycloField;
using qudit::CycloScalar;

// Test-side oracle for Phi_d: prod_{k | d} (x^k - 1)^{mu(d/k)} with plain
// integer polynomials, sharing no code with the library.
using Poly = std::vector<long long>;

int mobius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    return n > 1 ? -result : result;
}

Poly mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

Poly x_pow_minus_one(int k) {
    Poly p(static_cast<std::size_t>(k) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(k)] = 1;
    return p;
}

// Exact division by a monic polynomial.
Poly divide(Poly num, const Poly& den) {
    const std::size_t n = num.size(), m = den.size();
    Poly q(n - m + 1, 0);
    for (std::size_t i = n - m + 1; i-- > 0;) {
        q[i] = num[i + m - 1];
        for (std::size_t j = 0; j < m; ++j) num[i + j] -= q[i] * den[j];
    }
    for (long long c : num) EXPECT_EQ(c, 0);
    return q;
}

Poly oracle_cyclotomic(int d) {
    Poly num{1}, den{1};
    for (int k = 1; k <= d; ++k) {
        if (d % k != 0) continue;
        const int mu = mobius(d / k);
        if (mu == 1) num = mul(num, x_pow_minus_one(k));
        if (mu == -1) den = mul(den, x_pow_minus_one(k));
    }
    return divide(num, den);
}

CycloScalar random_element(const CycloField& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    std::vector<mpq_class> poly(static_cast<std::size_t>(f.conductor()));
    for (auto& c : poly) c = mpq_class(num(rng), den(rng));
    for (auto& c : poly) c.canonicalize();
    return CycloScalar(f, poly);
}

void expect_close(std::complex<double> a, std::complex<double> b, double tol) {
    EXPECT_NEAR(a.real(), b.real(), tol);
    EXPECT_NEAR(a.imag(), b.imag(), tol);
}

}  // namespace

TEST(CyclotomicPolynomial, MatchesMobiusProductOracle) {
    for (int d = 1; d <= 30; ++d) {
        const auto phi = qudit::cyclotomic_polynomial(d);
        const Poly expected = oracle_cyclotomic(d);
        ASSERT_EQ(phi.coefficients().size(), expected.size()) << "d=" << d;
        for (std::size_t i = 0; i < expected.size(); ++i)
            EXPECT_EQ(phi[i].get_si(), expected[i]) << "d=" << d << " coefficient " << i;
        EXPECT_EQ(phi.degree(), qudit::euler_phi(d));
    }
}

TEST(CyclotomicPolynomial, SmallOrders) {
    EXPECT_EQ(qudit::cyclotomic_polynomial(1).to_string(), "x - 1");
    EXPECT_EQ(qudit::cyclotomic_polynomial(4).to_string(), "x^2 + 1");
    EXPECT_EQ(qudit::cyclotomic_polynomial(6).to_string(), "x^2 - x + 1");
    EXPECT_EQ(qudit::cyclotomic_polynomial(8).to_string(), "x^4 + 1");
}

TEST(CyclotomicPolynomial, RejectsNonPositiveOrder) {
    EXPECT_THROW(qudit::cyclotomic_polynomial(0), qudit::ConfigError);
    EXPECT_THROW(CycloField(0), qudit::ConfigError);
}

TEST(RootPower, Basics) {
    for (int d = 1; d <= 9; ++d) EXPECT_EQ(qudit::root_power(d, 0), CycloField(d).one());
    EXPECT_EQ(qudit::root_power(2, 1), CycloField(2).rational(-1));
    EXPECT_EQ(qudit::root_power(5, 3) * qudit::root_power(5, 2), CycloField(5).one());
    for (int d = 2; d <= 12; ++d) {
        EXPECT_EQ(qudit::root_power(d, d), CycloField(d).one()) << d;
        EXPECT_EQ(qudit::root_power(d, -1), qudit::root_power(d, d - 1)) << d;
    }
}

TEST(CycloScalar, AdditionAndReduction) {
    const CycloField f3(3);
    const auto q = f3.root_of_unity(3, 1);
    EXPECT_TRUE((q + (-q)).is_zero());
    EXPECT_TRUE((f3.one() + q + q * q).is_zero());

    const CycloField f4(4);
    const auto i = f4.root_of_unity(4, 1);
    const auto i2 = i * i;
    EXPECT_EQ(i2, f4.rational(-1));
    EXPECT_EQ(i2 * i2, f4.one());
}

TEST(CycloScalar, RootsOfUnitySumToZero) {
    for (int d = 2; d <= 16; ++d) {
        const CycloField f(d);
        auto sum = f.zero();
        for (int k = 0; k < d; ++k) sum += f.root_of_unity(d, k);
        EXPECT_TRUE(sum.is_zero()) << "d=" << d;
    }
}

TEST(CycloScalar, Inverse) {
    for (int d = 2; d <= 12; ++d) {
        const CycloField f(d);
        EXPECT_EQ(qudit::invert(f.one()), f.one());
        EXPECT_EQ(qudit::invert(f.root_of_unity(d, 1)), f.root_of_unity(d, d - 1));
    }
    const CycloField f3(3);
    const auto q = f3.root_of_unity(3, 1);
    const auto inv = qudit::invert(f3.one() - q);
    EXPECT_EQ(inv, f3.rational(mpq_class(1, 3)) * (f3.one() - q * q));
    EXPECT_EQ(inv * (f3.one() - q), f3.one());
    EXPECT_THROW(qudit::invert(f3.zero()), qudit::DivisionByZero);
}

TEST(CycloScalar, Conjugate) {
    const CycloField f(7);
    const auto q = f.root_of_unity(7, 1);
    EXPECT_EQ(qudit::conjugate(f.rational(mpq_class(-5, 3))), f.rational(mpq_class(-5, 3)));
    EXPECT_EQ(qudit::conjugate(q), f.root_of_unity(7, 6));
    EXPECT_EQ(qudit::conjugate(q) * q, f.one());
}

TEST(CycloScalar, ToComplex) {
    expect_close(CycloField(5).one().to_complex(), {1.0, 0.0}, 1e-15);
    expect_close(qudit::root_power(4, 1).to_complex(), {0.0, 1.0}, 1e-15);
    expect_close(qudit::root_power(3, 1).to_complex(), {-0.5, std::sqrt(3.0) / 2.0}, 1e-15);
}

TEST(CycloScalar, RandomFieldAxioms) {
    std::mt19937_64 rng(20261018);
    for (int n : {2, 3, 4, 5, 6, 8, 9, 10, 12, 15}) {
        const CycloField f(n);
        for (int trial = 0; trial < 20; ++trial) {
            const auto a = random_element(f, rng), b = random_element(f, rng), c = random_element(f, rng);
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * b, b * a);
            EXPECT_EQ(qudit::conjugate(a * b), qudit::conjugate(a) * qudit::conjugate(b));
            EXPECT_EQ(qudit::conjugate(qudit::conjugate(a)), a);
            expect_close((a * b).to_complex(), a.to_complex() * b.to_complex(), 1e-9);
            expect_close(qudit::conjugate(a).to_complex(), std::conj(a.to_complex()), 1e-9);
            if (!a.is_zero()) {
                EXPECT_EQ(a * qudit::invert(a), f.one());
                EXPECT_EQ((b / a) * a, b);
            }
        }
    }
}

TEST(CycloScalar, ReductionIsByCyclotomicNotByXnMinusOne) {
    // In Q(q_4), 1 + q^2 = 0 although x^2 + 1 is not a multiple of x^4 - 1.
    const CycloField f(4);
    EXPECT_TRUE((f.one() + f.monomial(2)).is_zero());
    EXPECT_EQ(f.monomial(3), -f.monomial(1));
    EXPECT_EQ(f.degree(), 2);
    EXPECT_EQ(f.monomial(1).coefficients().size(), 2u);
}

TEST(CycloScalar, LiftBetweenFields) {
    const CycloField f6(6);
    const auto q3 = qudit::root_power(3, 1);
    const auto lifted = f6.lift(q3);
    EXPECT_EQ(lifted, f6.root_of_unity(3, 1));
    EXPECT_EQ(lifted, f6.monomial(2));
    expect_close(lifted.to_complex(), q3.to_complex(), 1e-15);
    EXPECT_EQ(CycloField::common(CycloField(4), CycloField(6)).conductor(), 12);
}

TEST(CycloScalar, MixingFieldsIsRejected) {
    EXPECT_THROW(qudit::root_power(3, 1) + qudit::root_power(4, 1), qudit::DimensionMismatch);
}

TEST(CycloScalar, ToString) {
    const CycloField f(3);
    const auto q = f.root_of_unity(3, 1);
    EXPECT_EQ(f.zero().to_string(), "0");
    EXPECT_EQ((f.rational(mpq_class(1, 3)) - f.rational(mpq_class(2, 3)) * q).to_string(), "1/3 - 2/3 q");
}
