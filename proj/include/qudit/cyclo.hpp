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
 * @file cyclo.hpp
 * @brief Exact arithmetic in the cyclotomic field Q(q), q = exp(2 pi i / N).
 *
 * An element is a polynomial in q with rational coefficients, kept fully
 * reduced modulo the N-th cyclotomic polynomial Phi_N. Phi_N is the minimal
 * polynomial of a primitive N-th root of unity, so the representation is
 * canonical: two elements are equal iff their coefficient vectors are equal,
 * and every identity that holds in C holds here as literal equality.
 *
 * Reducing modulo x^N - 1 instead would not give a field for N > 1, and
 * root-of-unity sums such as 1 + q^k + ... + q^{(N-1)k} would no longer
 * vanish.
 *
 * Coefficients are GMP rationals; scalars are immutable values.
 */

#ifndef QUDIT_CYCLO_HPP
#define QUDIT_CYCLO_HPP

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace qudit {

namespace detail {

using IntPoly = std::vector<mpz_class>;  // coefficient of x^i at index i
using RatPoly = std::vector<mpq_class>;

template <class Poly>
void trim(Poly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline IntPoly int_poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

/// num / den for monic den; the division must be exact.
inline IntPoly int_poly_exact_div(IntPoly num, const IntPoly& den) {
    trim(num);
    const std::size_t dn = den.size() - 1;
    if (num.size() < den.size()) return {};
    IntPoly quot(num.size() - dn, 0);
    for (std::size_t k = num.size(); k-- > dn;) {
        const mpz_class c = num[k];
        if (sgn(c) == 0) continue;
        quot[k - dn] = c;
        for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
    }
    trim(num);
    if (!num.empty()) throw std::logic_error("int_poly_exact_div: nonzero remainder");
    trim(quot);
    return quot;
}

/// Polynomial long division over Q. Divisor must be nonzero (trimmed).
inline std::pair<RatPoly, RatPoly> rat_poly_divmod(RatPoly num, const RatPoly& den) {
    trim(num);
    if (num.size() < den.size()) return {RatPoly{}, num};
    const std::size_t dn = den.size() - 1;
    const mpq_class lead = den.back();
    RatPoly quot(num.size() - dn, 0);
    for (std::size_t k = num.size(); k-- > dn;) {
        if (sgn(num[k]) == 0) continue;
        const mpq_class c = num[k] / lead;
        quot[k - dn] = c;
        for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
    }
    trim(num);
    trim(quot);
    return {quot, num};
}

inline RatPoly rat_poly_mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (sgn(b[j]) == 0) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    trim(out);
    return out;
}

inline RatPoly rat_poly_sub(RatPoly a, const RatPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

inline long positive_mod(long k, long n) {
    const long r = k % n;
    return r < 0 ? r + n : r;
}

}  // namespace detail

inline long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

/// Phi_d with integer coefficients, lowest degree first. Monic of degree phi(d).
class CyclotomicPolynomial {
   public:
    CyclotomicPolynomial(int order, std::vector<mpz_class> coeffs)
        : order_(order), coeffs_(std::move(coeffs)) {}

    int order() const { return order_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<mpz_class>& coefficients() const { return coeffs_; }
    const mpz_class& operator[](std::size_t i) const { return coeffs_[i]; }

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            const mpz_class& c = coeffs_[k];
            if (sgn(c) == 0) continue;
            mpz_class mag = abs(c);
            if (!first) os << (sgn(c) < 0 ? " - " : " + ");
            else if (sgn(c) < 0) os << "-";
            if (mag != 1 || k == 0) os << mag.get_str();
            if (k >= 1) os << "x";
            if (k >= 2) os << "^" << k;
            first = false;
        }
        return first ? std::string("0") : os.str();
    }

    friend bool operator==(const CyclotomicPolynomial& a, const CyclotomicPolynomial& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }

   private:
    int order_;
    std::vector<mpz_class> coeffs_;
};

namespace detail {

inline CyclotomicPolynomial compute_cyclotomic(int d, std::map<int, CyclotomicPolynomial>& memo) {
    if (auto it = memo.find(d); it != memo.end()) return it->second;
    // Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e
    IntPoly num(static_cast<std::size_t>(d) + 1, 0);
    num[0] = -1;
    num[static_cast<std::size_t>(d)] = 1;
    IntPoly den{1};
    for (int e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        den = int_poly_mul(den, compute_cyclotomic(e, memo).coefficients());
    }
    CyclotomicPolynomial phi(d, int_poly_exact_div(std::move(num), den));
    memo.emplace(d, phi);
    return phi;
}

}  // namespace detail

/// The d-th cyclotomic polynomial, computed by exact division of x^d - 1 by
/// the cyclotomic polynomials of the proper divisors of d.
inline CyclotomicPolynomial cyclotomic_polynomial(int d) {
    if (d < 1) throw ConfigError("cyclotomic_polynomial: order must be >= 1, got " + std::to_string(d));
    static std::mutex mutex;
    static std::map<int, CyclotomicPolynomial> memo;
    std::lock_guard lock(mutex);
    return detail::compute_cyclotomic(d, memo);
}

namespace detail {

struct CycloFieldData {
    int conductor;
    int degree;
    IntPoly modulus;
    // x^e mod Phi_N for e in [0, N); x^N = 1 in the quotient, so any
    // exponent reduces mod N first.
    std::vector<IntPoly> powers;
};

inline const CycloFieldData* cyclo_field_data(int n) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<const CycloFieldData>> registry;
    {
        std::lock_guard lock(mutex);
        if (auto it = registry.find(n); it != registry.end()) return it->second.get();
    }
    const CyclotomicPolynomial phi = cyclotomic_polynomial(n);
    auto data = std::make_unique<CycloFieldData>();
    data->conductor = n;
    data->degree = phi.degree();
    data->modulus = phi.coefficients();
    const auto deg = static_cast<std::size_t>(data->degree);
    IntPoly cur(deg, 0);
    if (deg > 0) cur[0] = 1;
    data->powers.reserve(static_cast<std::size_t>(n));
    for (int e = 0; e < n; ++e) {
        data->powers.push_back(cur);
        if (deg == 0) continue;
        // multiply by x, then fold the x^deg term back using monic Phi
        mpz_class top = cur[deg - 1];
        for (std::size_t i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (sgn(top) != 0) {
            for (std::size_t i = 0; i < deg; ++i) cur[i] -= top * data->modulus[i];
        }
    }
    std::lock_guard lock(mutex);
    auto [it, inserted] = registry.emplace(n, std::move(data));
    return it->second.get();
}

}  // namespace detail

class CycloScalar;

/// Handle to Q(q_N). Cheap to copy; all handles with the same conductor
/// refer to one shared, immutable table.
class CycloField {
   public:
    using value_type = CycloScalar;
    static constexpr bool is_exact = true;
    static constexpr const char* mode_name = "exact";

    explicit CycloField(int conductor) {
        if (conductor < 1) throw ConfigError("cyclotomic conductor must be >= 1, got " + std::to_string(conductor));
        data_ = detail::cyclo_field_data(conductor);
    }

    int conductor() const { return data_->conductor; }
    int degree() const { return data_->degree; }
    CyclotomicPolynomial modulus() const { return CyclotomicPolynomial(data_->conductor, data_->modulus); }

    /// True if the d-th roots of unity live in this field (d divides N).
    bool has_roots_of_order(int d) const { return d >= 1 && data_->conductor % d == 0; }

    inline value_type zero() const;
    inline value_type one() const;
    inline value_type rational(const mpq_class& r) const;
    /// q_d^k with q_d = exp(2 pi i / d), embedded as q_N^{k N / d}.
    inline value_type root_of_unity(int d, long k) const;
    /// x^e reduced; e may be any integer.
    inline value_type monomial(long e) const;
    /// Embed an element of a subfield Q(q_n), n | N, via q_n = q_N^{N/n}.
    inline value_type lift(const value_type& v) const;

    static inline value_type conj(const value_type& v);
    static inline std::complex<double> to_complex(const value_type& v);
    static inline bool is_zero(const value_type& v);
    static inline bool equal(const value_type& a, const value_type& b);

    /// Smallest field containing both: conductor lcm(N1, N2).
    static CycloField common(const CycloField& a, const CycloField& b) {
        return CycloField(std::lcm(a.conductor(), b.conductor()));
    }

    friend bool operator==(const CycloField& a, const CycloField& b) { return a.data_ == b.data_; }

   private:
    friend class CycloScalar;
    explicit CycloField(const detail::CycloFieldData* data) : data_(data) {}
    const detail::CycloFieldData* data_;
};

/// Element of Q(q_N) in canonical reduced form: exactly phi(N) coefficients.
class CycloScalar {
   public:
    /// Reduces an arbitrary-length coefficient vector (x^e at index e).
    CycloScalar(CycloField field, const std::vector<mpq_class>& poly) : data_(field.data_) {
        coeffs_.assign(static_cast<std::size_t>(data_->degree), 0);
        for (std::size_t e = 0; e < poly.size(); ++e) accumulate(e, poly[e]);
    }

    CycloField field() const { return CycloField(data_); }
    int conductor() const { return data_->conductor; }
    const std::vector<mpq_class>& coefficients() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (sgn(c) != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (sgn(coeffs_[i]) != 0) return false;
        return true;
    }

    CycloScalar operator-() const {
        CycloScalar out = *this;
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }

    CycloScalar& operator+=(const CycloScalar& o) {
        check_same(o, "add");
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }

    CycloScalar& operator-=(const CycloScalar& o) {
        check_same(o, "sub");
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }

    CycloScalar& operator*=(const CycloScalar& o) {
        *this = *this * o;
        return *this;
    }

    friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
    friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }

    friend CycloScalar operator*(const CycloScalar& a, const CycloScalar& b) {
        a.check_same(b, "mul");
        const std::size_t deg = a.coeffs_.size();
        CycloScalar out(a.data_);
        if (a.is_zero() || b.is_zero()) return out;
        if (b.is_rational()) {
            out.coeffs_ = a.coeffs_;
            for (auto& c : out.coeffs_) c *= b.coeffs_[0];
            return out;
        }
        if (a.is_rational()) {
            out.coeffs_ = b.coeffs_;
            for (auto& c : out.coeffs_) c *= a.coeffs_[0];
            return out;
        }
        std::vector<mpq_class> prod(2 * deg - 1, 0);
        for (std::size_t i = 0; i < deg; ++i) {
            if (sgn(a.coeffs_[i]) == 0) continue;
            for (std::size_t j = 0; j < deg; ++j) {
                if (sgn(b.coeffs_[j]) == 0) continue;
                prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        for (std::size_t e = 0; e < prod.size(); ++e) out.accumulate(e, prod[e]);
        return out;
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Phi_N.
    CycloScalar inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero in Q(q_" + std::to_string(conductor()) + ")");
        using detail::RatPoly;
        RatPoly r0(data_->modulus.begin(), data_->modulus.end());
        RatPoly r1 = coeffs_;
        detail::trim(r1);
        RatPoly s0{}, s1{1};
        while (!r1.empty()) {
            auto [quot, rem] = detail::rat_poly_divmod(r0, r1);
            r0 = std::move(r1);
            r1 = std::move(rem);
            RatPoly next = detail::rat_poly_sub(s0, detail::rat_poly_mul(quot, s1));
            s0 = std::move(s1);
            s1 = std::move(next);
        }
        // Phi_N is irreducible, so the gcd r0 is a nonzero constant.
        const mpq_class g = r0.front();
        for (auto& c : s0) c /= g;
        return CycloScalar(field(), s0);
    }

    friend CycloScalar operator/(const CycloScalar& a, const CycloScalar& b) { return a * b.inverse(); }

    /// Complex conjugation: q -> q^{N-1}.
    CycloScalar conjugate() const {
        CycloScalar out(data_);
        const long n = data_->conductor;
        for (std::size_t e = 0; e < coeffs_.size(); ++e)
            out.accumulate(static_cast<std::size_t>(detail::positive_mod(-static_cast<long>(e), n)), coeffs_[e]);
        return out;
    }

    /// Evaluate at exp(2 pi i / N) in double precision.
    std::complex<double> to_complex() const {
        const double n = data_->conductor;
        double re = 0.0, im = 0.0;
        for (std::size_t e = 0; e < coeffs_.size(); ++e) {
            if (sgn(coeffs_[e]) == 0) continue;
            const double c = coeffs_[e].get_d();
            if (e == 0) {
                re += c;
                continue;
            }
            const double angle = 2.0 * M_PI * static_cast<double>(e) / n;
            re += c * std::cos(angle);
            im += c * std::sin(angle);
        }
        return {re, im};
    }

    /// Human-readable form, e.g. "1/3 - 2/3 q + q^2".
    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t e = 0; e < coeffs_.size(); ++e) {
            const mpq_class& c = coeffs_[e];
            if (sgn(c) == 0) continue;
            const mpq_class mag = abs(c);
            if (!first) os << (sgn(c) < 0 ? " - " : " + ");
            else if (sgn(c) < 0) os << "-";
            if (e == 0) os << mag.get_str();
            else {
                if (mag != 1) os << mag.get_str() << " ";
                os << "q";
                if (e >= 2) os << "^" << e;
            }
            first = false;
        }
        return first ? std::string("0") : os.str();
    }

    friend bool operator==(const CycloScalar& a, const CycloScalar& b) {
        return a.data_ == b.data_ && a.coeffs_ == b.coeffs_;
    }

   private:
    friend class CycloField;

    explicit CycloScalar(const detail::CycloFieldData* data)
        : data_(data), coeffs_(static_cast<std::size_t>(data->degree), 0) {}

    void check_same(const CycloScalar& o, const char* op) const {
        if (data_ != o.data_)
            throw DimensionMismatch(std::string("cyclotomic ") + op + ": Q(q_" + std::to_string(conductor()) +
                                    ") vs Q(q_" + std::to_string(o.conductor()) + ")");
    }

    void accumulate(std::size_t e, const mpq_class& c) {
        if (sgn(c) == 0) return;
        const std::size_t deg = coeffs_.size();
        const std::size_t r = e % static_cast<std::size_t>(data_->conductor);
        if (r < deg) {
            coeffs_[r] += c;
            return;
        }
        const auto& p = data_->powers[r];
        for (std::size_t i = 0; i < deg; ++i)
            if (sgn(p[i]) != 0) coeffs_[i] += c * p[i];
    }

    const detail::CycloFieldData* data_;
    std::vector<mpq_class> coeffs_;
};

inline CycloScalar CycloField::zero() const { return CycloScalar(data_); }

inline CycloScalar CycloField::one() const { return rational(1); }

inline CycloScalar CycloField::rational(const mpq_class& r) const {
    return CycloScalar(*this, std::vector<mpq_class>{r});
}

inline CycloScalar CycloField::monomial(long e) const {
    const long n = data_->conductor;
    std::vector<mpq_class> poly(static_cast<std::size_t>(detail::positive_mod(e, n)) + 1, 0);
    poly.back() = 1;
    return CycloScalar(*this, poly);
}

inline CycloScalar CycloField::root_of_unity(int d, long k) const {
    if (!has_roots_of_order(d))
        throw DimensionMismatch("Q(q_" + std::to_string(conductor()) + ") has no primitive " + std::to_string(d) +
                                "-th root of unity");
    const long step = data_->conductor / d;
    return monomial(detail::positive_mod(k, d) * step);
}

inline CycloScalar CycloField::lift(const CycloScalar& v) const {
    if (v.data_ == data_) return v;
    const int src = v.conductor();
    if (data_->conductor % src != 0)
        throw DimensionMismatch("cannot embed Q(q_" + std::to_string(src) + ") in Q(q_" + std::to_string(conductor()) +
                                ")");
    const std::size_t step = static_cast<std::size_t>(data_->conductor / src);
    CycloScalar out(data_);
    for (std::size_t e = 0; e < v.coeffs_.size(); ++e) out.accumulate(e * step, v.coeffs_[e]);
    return out;
}

inline CycloScalar CycloField::conj(const CycloScalar& v) { return v.conjugate(); }
inline std::complex<double> CycloField::to_complex(const CycloScalar& v) { return v.to_complex(); }
inline bool CycloField::is_zero(const CycloScalar& v) { return v.is_zero(); }
inline bool CycloField::equal(const CycloScalar& a, const CycloScalar& b) { return a == b; }

/// q^k in Q(q_d).
inline CycloScalar root_power(int d, long k) { return CycloField(d).root_of_unity(d, k); }

inline CycloScalar invert(const CycloScalar& a) { return a.inverse(); }
inline CycloScalar conjugate(const CycloScalar& a) { return a.conjugate(); }
inline std::complex<double> to_complex(const CycloScalar& a) { return a.to_complex(); }

}  // namespace qudit

#endif  // QUDIT_CYCLO_HPP
