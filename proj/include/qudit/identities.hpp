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
 * @file identities.hpp
 * @brief Catalogue of algebraic identities as named, evaluable checks.
 *
 * Each check pairs a left-hand and a right-hand operator builder, optionally
 * quantified over integer indices. Running a check evaluates every index
 * case and reports the worst residual. An identity that does not hold is a
 * failed result, never an exception; only configuration errors throw.
 *
 * Suites:
 *   schwinger       clock-and-shift relations
 *   almost_unitary  defining relations of a, a^dag
 *   proj_PR         calculus of P_n = a^dag^n a^n and R_n = a^n a^dag^n
 *   proj_script     calculus of the spectral projectors SP_n of V
 *   conversions     a, a^dag rebuilt from U, V and back
 *   matrix_units    both constructions of the standard basis e_mn
 *   commutator      position operator
 *   tensor          d1 x d2 lattice via the coproduct (needs a product config)
 */

#ifndef QUDIT_IDENTITIES_HPP
#define QUDIT_IDENTITIES_HPP

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "lattice.hpp"
#include "matrix.hpp"
#include "scalar.hpp"
#include "tensor_lattice.hpp"

namespace qudit {

inline constexpr std::array<std::string_view, 8> kSuiteNames = {
    "schwinger", "almost_unitary", "proj_PR", "proj_script", "conversions", "matrix_units", "commutator", "tensor"};

inline bool is_known_suite(std::string_view name) {
    return std::find(kSuiteNames.begin(), kSuiteNames.end(), name) != kSuiteNames.end();
}

/// Named integer indices of one case of a quantified check, in declaration order.
class Indices {
   public:
    Indices() = default;
    Indices(std::initializer_list<std::pair<std::string, long>> values) : values_(values) {}

    long operator[](std::string_view name) const {
        for (const auto& [k, v] : values_)
            if (k == name) return v;
        throw std::out_of_range("no index named " + std::string(name));
    }

    const std::vector<std::pair<std::string, long>>& values() const { return values_; }
    bool empty() const { return values_.empty(); }

    std::string to_string() const {
        std::string out;
        for (const auto& [k, v] : values_) {
            if (!out.empty()) out += ",";
            out += k + "=" + std::to_string(v);
        }
        return out;
    }

    friend bool operator==(const Indices&, const Indices&) = default;

   private:
    std::vector<std::pair<std::string, long>> values_;
};

/// What a check runs against. Lattice suites need `lattice`, the tensor
/// suite needs `product`.
template <ScalarField F>
struct CheckEnv {
    std::optional<LatticeConfig<F>> lattice;
    std::optional<ProductLatticeConfig<F>> product;
    std::uint64_t seed = 0;  ///< for sampled index quadruples
};

/// Memoized operators of one lattice, local to a single check evaluation.
template <ScalarField F>
class LatticeWorkspace {
   public:
    using M = OperatorMatrix<F>;
    using value_type = typename F::value_type;

    explicit LatticeWorkspace(const LatticeConfig<F>& cfg) : cfg_(cfg) {}

    const LatticeConfig<F>& cfg() const { return cfg_; }
    int d() const { return cfg_.d; }
    const F& field() const { return cfg_.field; }
    M one() const { return identity(cfg_.dim(), cfg_.field); }
    M zero() const { return zeros(cfg_.dim(), cfg_.field); }
    value_type q(long k) const { return cfg_.q_power(k); }
    value_type rational(const mpq_class& r) const { return cfg_.field.rational(r); }

    const M& a() { return memo(single_, 0, [&] { return make_a(cfg_); }); }
    const M& ad() { return memo(single_, 1, [&] { return make_a_dagger(cfg_); }); }
    const M& U() { return memo(single_, 2, [&] { return make_U(cfg_); }); }
    const M& Ud() { return memo(single_, 3, [&] { return adjoint(U()); }); }
    const M& V() { return memo(single_, 4, [&] { return make_V(cfg_); }); }
    const M& X() { return memo(single_, 5, [&] { return position_X(cfg_); }); }

    const M& a_pow(int n) { return memo(a_pow_, n, [&] { return matpow(a(), n); }); }
    const M& ad_pow(int n) { return memo(ad_pow_, n, [&] { return matpow(ad(), n); }); }
    const M& U_pow(int n) { return memo(U_pow_, n, [&] { return matpow(U(), n); }); }
    const M& Ud_pow(int n) { return memo(Ud_pow_, n, [&] { return matpow(Ud(), n); }); }
    const M& V_pow(int n) { return memo(V_pow_, n, [&] { return matpow(V(), n); }); }

    const M& P(int n) { return memo(P_, n, [&] { return proj_P(cfg_, n); }); }
    const M& R(int n) { return memo(R_, n, [&] { return proj_R(cfg_, n); }); }
    const M& sP(long n) {
        const long key = detail::positive_mod(n, cfg_.d);
        return memo(sP_, key, [&] { return proj_scriptP(cfg_, key); });
    }
    const M& sR(long n) {
        const long key = detail::positive_mod(n, cfg_.d);
        return memo(sR_, key, [&] { return proj_scriptR(cfg_, key); });
    }

    const M& e_shift(int m, int n) {
        return memo(e_shift_, m * cfg_.d + n, [&] { return matrix_unit_shift(cfg_, m, n); });
    }
    const M& e_schwinger(int m, int n) {
        return memo(e_schwinger_, m * cfg_.d + n, [&] { return matrix_unit_schwinger(cfg_, m, n); });
    }

    /// |m><n|
    M unit(int m, int n) const {
        return matrix_unit(cfg_.dim(), cfg_.field, static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    }

   private:
    template <class Fn>
    static const M& memo(std::map<long, M>& cache, long key, Fn&& fn) {
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, fn()).first;
        return it->second;
    }

    LatticeConfig<F> cfg_;
    std::map<long, M> single_, a_pow_, ad_pow_, U_pow_, Ud_pow_, V_pow_, P_, R_, sP_, sR_, e_shift_, e_schwinger_;
};

template <ScalarField F>
class ProductWorkspace {
   public:
    using M = OperatorMatrix<F>;

    explicit ProductWorkspace(const ProductLatticeConfig<F>& pcfg) : pcfg_(pcfg) {}

    const ProductLatticeConfig<F>& cfg() const { return pcfg_; }
    std::size_t dim() const { return pcfg_.dim(); }
    M one() const { return identity(pcfg_.dim(), pcfg_.field); }
    M zero() const { return zeros(pcfg_.dim(), pcfg_.field); }

    const M& delta_ad() { return memo(0, [&] { return coproduct_a_dagger(pcfg_); }); }
    const M& delta_a() { return memo(1, [&] { return adjoint(delta_ad()); }); }
    const M& delta_U() { return memo(2, [&] { return coproduct_U(pcfg_); }); }
    const M& flatten() { return memo(3, [&] { return flatten_permutation(pcfg_); }); }
    const M& flat_ad() { return memo(4, [&] { return make_a_dagger(pcfg_.flat()); }); }
    const M& flat_U() { return memo(5, [&] { return make_U(pcfg_.flat()); }); }

   private:
    template <class Fn>
    const M& memo(int key, Fn&& fn) {
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, fn()).first;
        return it->second;
    }

    ProductLatticeConfig<F> pcfg_;
    std::map<int, M> cache_;
};

template <ScalarField F>
class Workspace {
   public:
    explicit Workspace(const CheckEnv<F>& env) : env_(env) {
        if (env.lattice) lattice_.emplace(*env.lattice);
        if (env.product) product_.emplace(*env.product);
    }

    const CheckEnv<F>& env() const { return env_; }
    LatticeWorkspace<F>& lattice() { return *lattice_; }
    ProductWorkspace<F>& product() { return *product_; }

   private:
    const CheckEnv<F>& env_;
    std::optional<LatticeWorkspace<F>> lattice_;
    std::optional<ProductWorkspace<F>> product_;
};

template <ScalarField F>
struct IdentityCheck {
    using M = OperatorMatrix<F>;
    using CaseFn = std::function<std::vector<Indices>(const CheckEnv<F>&)>;
    using BuildFn = std::function<M(Workspace<F>&, const Indices&)>;

    std::string name;      ///< "<suite>.<check>", unique
    std::string relation;  ///< the identity, written out
    CaseFn cases;          ///< empty: a single unquantified case
    BuildFn lhs;
    BuildFn rhs;

    std::string suite() const { return name.substr(0, name.find('.')); }
    bool quantified() const { return static_cast<bool>(cases); }
};

struct CheckResult {
    std::string name;
    std::string relation;
    int d = 0;  ///< lattice size; d1*d2 for tensor checks
    std::string mode;
    std::optional<std::pair<int, int>> factors;  ///< (d1, d2) for tensor checks
    std::optional<Indices> indices;              ///< worst case of a quantified check
    std::size_t cases = 0;
    bool pass = false;
    double max_residual = 0.0;
    std::chrono::nanoseconds elapsed{0};
};

struct SuiteReport {
    std::string suite;
    int d = 0;
    std::string mode;
    std::optional<double> tolerance;  ///< float mode only
    std::optional<std::pair<int, int>> factors;
    std::vector<CheckResult> results;

    std::size_t total() const { return results.size(); }
    std::size_t passed() const {
        return static_cast<std::size_t>(
            std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; }));
    }
    std::size_t failed() const { return total() - passed(); }
    bool all_passed() const { return failed() == 0; }
};

namespace detail {

inline std::vector<Indices> range1(const char* name, long lo, long hi) {
    std::vector<Indices> out;
    for (long n = lo; n <= hi; ++n) out.push_back(Indices{{name, n}});
    return out;
}

template <class Pred>
std::vector<Indices> range2(const char* first, long lo1, long hi1, const char* second, long lo2, long hi2,
                            Pred&& keep) {
    std::vector<Indices> out;
    for (long x = lo1; x <= hi1; ++x)
        for (long y = lo2; y <= hi2; ++y)
            if (keep(x, y)) out.push_back(Indices{{first, x}, {second, y}});
    return out;
}

inline std::vector<Indices> range2(const char* first, long lo1, long hi1, const char* second, long lo2, long hi2) {
    return range2(first, lo1, hi1, second, lo2, hi2, [](long, long) { return true; });
}

inline constexpr int kExhaustiveQuadrupleLimit = 4;
inline constexpr int kSampledQuadruples = 64;

/// All (i, j, k, l) in [0, d)^4 for d <= 4, otherwise 64 seeded samples.
inline std::vector<Indices> quadruples(int d, std::uint64_t seed) {
    std::vector<Indices> out;
    if (d <= kExhaustiveQuadrupleLimit) {
        for (long i = 0; i < d; ++i)
            for (long j = 0; j < d; ++j)
                for (long k = 0; k < d; ++k)
                    for (long l = 0; l < d; ++l) out.push_back(Indices{{"i", i}, {"j", j}, {"k", k}, {"l", l}});
        return out;
    }
    // mt19937_64 output is fully specified by the standard; reducing with %
    // keeps the samples identical across standard libraries.
    std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(d)));
    const auto ud = static_cast<std::uint64_t>(d);
    for (int s = 0; s < kSampledQuadruples; ++s) {
        const long i = static_cast<long>(rng() % ud), j = static_cast<long>(rng() % ud);
        // force j = k on every other sample so both branches of delta_jk are hit
        const long k = (s % 2 == 0) ? j : static_cast<long>(rng() % ud);
        const long l = static_cast<long>(rng() % ud);
        out.push_back(Indices{{"i", i}, {"j", j}, {"k", k}, {"l", l}});
    }
    return out;
}

template <ScalarField F>
int lattice_d(const CheckEnv<F>& env) {
    return env.lattice->d;
}

template <ScalarField F>
std::vector<IdentityCheck<F>> build_catalogue() {
    using M = OperatorMatrix<F>;
    using WS = Workspace<F>;
    using Check = IdentityCheck<F>;
    using CaseFn = typename Check::CaseFn;
    std::vector<Check> out;

    auto add = [&](std::string name, std::string relation, CaseFn cases, typename Check::BuildFn lhs,
                   typename Check::BuildFn rhs) {
        out.push_back(Check{std::move(name), std::move(relation), std::move(cases), std::move(lhs), std::move(rhs)});
    };
    const CaseFn none{};
    auto over_n = [](const char* name, int lo_off, int hi_off) -> CaseFn {
        // name in lo_off .. d + hi_off
        return [=](const CheckEnv<F>& env) { return range1(name, lo_off, lattice_d(env) + hi_off); };
    };
    auto L = [](WS& ws) -> LatticeWorkspace<F>& { return ws.lattice(); };
    auto T = [](WS& ws) -> ProductWorkspace<F>& { return ws.product(); };
    auto idx = [](const Indices& ix, std::string_view name) { return static_cast<int>(ix[name]); };

    // ---- schwinger ---------------------------------------------------------
    add("schwinger.VU_eq_qUV", "V U = q U V", none, [=](WS& ws, const Indices&) { return L(ws).V() * L(ws).U(); },
        [=](WS& ws, const Indices&) { return L(ws).q(1) * (L(ws).U() * L(ws).V()); });
    add("schwinger.U_order_d", "U^d = 1", none, [=](WS& ws, const Indices&) { return L(ws).U_pow(L(ws).d()); },
        [=](WS& ws, const Indices&) { return L(ws).one(); });
    add("schwinger.V_order_d", "V^d = 1", none, [=](WS& ws, const Indices&) { return L(ws).V_pow(L(ws).d()); },
        [=](WS& ws, const Indices&) { return L(ws).one(); });
    add("schwinger.UUdag_eq_1", "U U^dag = 1", none, [=](WS& ws, const Indices&) { return L(ws).U() * L(ws).Ud(); },
        [=](WS& ws, const Indices&) { return L(ws).one(); });
    add("schwinger.UdagU_eq_1", "U^dag U = 1", none, [=](WS& ws, const Indices&) { return L(ws).Ud() * L(ws).U(); },
        [=](WS& ws, const Indices&) { return L(ws).one(); });
    add("schwinger.VVdag_eq_1", "V V^dag = 1", none,
        [=](WS& ws, const Indices&) { return L(ws).V() * adjoint(L(ws).V()); },
        [=](WS& ws, const Indices&) { return L(ws).one(); });
    add("schwinger.VdagV_eq_1", "V^dag V = 1", none,
        [=](WS& ws, const Indices&) { return adjoint(L(ws).V()) * L(ws).V(); },
        [=](WS& ws, const Indices&) { return L(ws).one(); });
    add("schwinger.V_power_step", "V V^k = sum_{n=0}^{d-1} q^{(k+1)n} (P_n - P_{n+1}), k = 0..d-1",
        over_n("k", 0, -1), [=](WS& ws, const Indices& ix) { return L(ws).V() * L(ws).V_pow(idx(ix, "k")); },
        [=](WS& ws, const Indices& ix) {
            auto& l = L(ws);
            const long k = ix["k"];
            M sum = l.zero();
            for (int n = 0; n < l.d(); ++n) sum += l.q((k + 1) * n) * (l.P(n) - l.P(n + 1));
            return sum;
        });
    add("schwinger.U_power_step", "U U^n = a^dag^{n+1} + a^{d-(n+1)}, n = 0..d-1", over_n("n", 0, -1),
        [=](WS& ws, const Indices& ix) { return L(ws).U() * L(ws).U_pow(idx(ix, "n")); },
        [=](WS& ws, const Indices& ix) {
            const int n = idx(ix, "n");
            return L(ws).ad_pow(n + 1) + L(ws).a_pow(L(ws).d() - (n + 1));
        });

    // ---- almost_unitary ----------------------------------------------------
    add("almost_unitary.a_adag_defect", "a a^dag = 1 - a^dag^{d-1} a^{d-1}", none,
        [=](WS& ws, const Indices&) { return L(ws).a() * L(ws).ad(); },
        [=](WS& ws, const Indices&) {
            auto& l = L(ws);
            return l.one() - l.ad_pow(l.d() - 1) * l.a_pow(l.d() - 1);
        });
    add("almost_unitary.adag_a_defect", "a^dag a = 1 - a^{d-1} a^dag^{d-1}", none,
        [=](WS& ws, const Indices&) { return L(ws).ad() * L(ws).a(); },
        [=](WS& ws, const Indices&) {
            auto& l = L(ws);
            return l.one() - l.a_pow(l.d() - 1) * l.ad_pow(l.d() - 1);
        });
    add("almost_unitary.a_dag_nilpotent", "a^dag^d = 0", none,
        [=](WS& ws, const Indices&) { return L(ws).ad_pow(L(ws).d()); },
        [=](WS& ws, const Indices&) { return L(ws).zero(); });
    add("almost_unitary.a_nilpotent", "a^d = 0", none, [=](WS& ws, const Indices&) { return L(ws).a_pow(L(ws).d()); },
        [=](WS& ws, const Indices&) { return L(ws).zero(); });

    // ---- proj_PR -----------------------------------------------------------
    add("proj_PR.P0_eq_1", "P_0 = 1", none, [=](WS& ws, const Indices&) { return L(ws).P(0); },
        [=](WS& ws, const Indices&) { return L(ws).one(); });
    add("proj_PR.R0_eq_1", "R_0 = 1", none, [=](WS& ws, const Indices&) { return L(ws).R(0); },
        [=](WS& ws, const Indices&) { return L(ws).one(); });
    add("proj_PR.Pd_eq_0", "P_d = a^dag^d a^d = 0", none, [=](WS& ws, const Indices&) { return L(ws).P(L(ws).d()); },
        [=](WS& ws, const Indices&) { return L(ws).zero(); });
    add("proj_PR.P_hermitian", "P_n^dag = P_n, n = 0..d", over_n("n", 0, 0),
        [=](WS& ws, const Indices& ix) { return adjoint(L(ws).P(idx(ix, "n"))); },
        [=](WS& ws, const Indices& ix) { return L(ws).P(idx(ix, "n")); });
    add("proj_PR.power_pair_complement", "a^n a^dag^n = 1 - P_{d-n}, n = 0..d", over_n("n", 0, 0),
        [=](WS& ws, const Indices& ix) { return L(ws).a_pow(idx(ix, "n")) * L(ws).ad_pow(idx(ix, "n")); },
        [=](WS& ws, const Indices& ix) { return L(ws).one() - L(ws).P(L(ws).d() - idx(ix, "n")); });
    add("proj_PR.P_eq_1_minus_R", "P_n = 1 - R_{d-n}, n = 0..d", over_n("n", 0, 0),
        [=](WS& ws, const Indices& ix) { return L(ws).P(idx(ix, "n")); },
        [=](WS& ws, const Indices& ix) { return L(ws).one() - L(ws).R(L(ws).d() - idx(ix, "n")); });
    add("proj_PR.R_eq_1_minus_P", "R_n = 1 - P_{d-n}, n = 0..d", over_n("n", 0, 0),
        [=](WS& ws, const Indices& ix) { return L(ws).R(idx(ix, "n")); },
        [=](WS& ws, const Indices& ix) { return L(ws).one() - L(ws).P(L(ws).d() - idx(ix, "n")); });
    add("proj_PR.P_adag_intertwine", "P_m a^dag = a^dag P_{m-1}, m = 1..d", over_n("m", 1, 0),
        [=](WS& ws, const Indices& ix) { return L(ws).P(idx(ix, "m")) * L(ws).ad(); },
        [=](WS& ws, const Indices& ix) { return L(ws).ad() * L(ws).P(idx(ix, "m") - 1); });
    add("proj_PR.a_P_intertwine", "a P_m = P_{m-1} a, m = 1..d", over_n("m", 1, 0),
        [=](WS& ws, const Indices& ix) { return L(ws).a() * L(ws).P(idx(ix, "m")); },
        [=](WS& ws, const Indices& ix) { return L(ws).P(idx(ix, "m") - 1) * L(ws).a(); });
    add("proj_PR.P_a_intertwine", "P_m a = a P_{m+1}, m = 0..d-1", over_n("m", 0, -1),
        [=](WS& ws, const Indices& ix) { return L(ws).P(idx(ix, "m")) * L(ws).a(); },
        [=](WS& ws, const Indices& ix) { return L(ws).a() * L(ws).P(idx(ix, "m") + 1); });
    add("proj_PR.P_product_max", "P_n P_m = P_max(n,m), n,m = 0..d",
        [](const CheckEnv<F>& env) { return range2("n", 0, lattice_d(env), "m", 0, lattice_d(env)); },
        [=](WS& ws, const Indices& ix) { return L(ws).P(idx(ix, "n")) * L(ws).P(idx(ix, "m")); },
        [=](WS& ws, const Indices& ix) { return L(ws).P(std::max(idx(ix, "n"), idx(ix, "m"))); });
    auto vanishing = [](const CheckEnv<F>& env) {
        const int d = lattice_d(env);
        return range2("n", 0, d, "m", 0, d, [d](long n, long m) { return n + m >= d; });
    };
    add("proj_PR.P_a_power_vanish", "P_m a^n = 0 for n + m >= d", vanishing,
        [=](WS& ws, const Indices& ix) { return L(ws).P(idx(ix, "m")) * L(ws).a_pow(idx(ix, "n")); },
        [=](WS& ws, const Indices&) { return L(ws).zero(); });
    add("proj_PR.adag_power_P_vanish", "a^dag^n P_m = 0 for n + m >= d", vanishing,
        [=](WS& ws, const Indices& ix) { return L(ws).ad_pow(idx(ix, "n")) * L(ws).P(idx(ix, "m")); },
        [=](WS& ws, const Indices&) { return L(ws).zero(); });
    add("proj_PR.R_adag_intertwine", "R_m a^dag = a^dag R_{m+1}, m = 0..d-1", over_n("m", 0, -1),
        [=](WS& ws, const Indices& ix) { return L(ws).R(idx(ix, "m")) * L(ws).ad(); },
        [=](WS& ws, const Indices& ix) { return L(ws).ad() * L(ws).R(idx(ix, "m") + 1); });
    add("proj_PR.a_R_intertwine", "a R_m = R_{m+1} a, m = 0..d-1", over_n("m", 0, -1),
        [=](WS& ws, const Indices& ix) { return L(ws).a() * L(ws).R(idx(ix, "m")); },
        [=](WS& ws, const Indices& ix) { return L(ws).R(idx(ix, "m") + 1) * L(ws).a(); });
    add("proj_PR.R_product_max", "R_n R_m = R_max(n,m), n,m = 0..d",
        [](const CheckEnv<F>& env) { return range2("n", 0, lattice_d(env), "m", 0, lattice_d(env)); },
        [=](WS& ws, const Indices& ix) { return L(ws).R(idx(ix, "n")) * L(ws).R(idx(ix, "m")); },
        [=](WS& ws, const Indices& ix) { return L(ws).R(std::max(idx(ix, "n"), idx(ix, "m"))); });
    add("proj_PR.a_power_R_vanish", "a^n R_m = 0 for n + m >= d", vanishing,
        [=](WS& ws, const Indices& ix) { return L(ws).a_pow(idx(ix, "n")) * L(ws).R(idx(ix, "m")); },
        [=](WS& ws, const Indices&) { return L(ws).zero(); });
    add("proj_PR.R_adag_power_vanish", "R_m a^dag^n = 0 for n + m >= d", vanishing,
        [=](WS& ws, const Indices& ix) { return L(ws).R(idx(ix, "m")) * L(ws).ad_pow(idx(ix, "n")); },
        [=](WS& ws, const Indices&) { return L(ws).zero(); });

    // ---- proj_script -------------------------------------------------------
    add("proj_script.root_sum_vanishes", "sum_{j=0}^{d-1} q^{jk} = 0, k = 1..d-1", over_n("k", 1, -1),
        [=](WS& ws, const Indices& ix) {
            auto& l = L(ws);
            auto s = l.field().zero();
            for (long j = 0; j < l.d(); ++j) s = s + l.q(j * ix["k"]);
            return s * l.one();
        },
        [=](WS& ws, const Indices&) { return L(ws).zero(); });
    add("proj_script.hermitian", "SP_n^dag = SP_n, n = 0..d-1", over_n("n", 0, -1),
        [=](WS& ws, const Indices& ix) { return adjoint(L(ws).sP(ix["n"])); },
        [=](WS& ws, const Indices& ix) { return L(ws).sP(ix["n"]); });
    add("proj_script.idempotent", "SP_n SP_n = SP_n, n = 0..d-1", over_n("n", 0, -1),
        [=](WS& ws, const Indices& ix) { return L(ws).sP(ix["n"]) * L(ws).sP(ix["n"]); },
        [=](WS& ws, const Indices& ix) { return L(ws).sP(ix["n"]); });
    add("proj_script.orthogonal", "SP_n SP_m = delta_nm SP_n, n,m = 0..d-1",
        [](const CheckEnv<F>& env) { return range2("n", 0, lattice_d(env) - 1, "m", 0, lattice_d(env) - 1); },
        [=](WS& ws, const Indices& ix) { return L(ws).sP(ix["n"]) * L(ws).sP(ix["m"]); },
        [=](WS& ws, const Indices& ix) { return ix["n"] == ix["m"] ? L(ws).sP(ix["n"]) : L(ws).zero(); });
    add("proj_script.partition_of_unity", "sum_{n=0}^{d-1} SP_n = 1", none,
        [=](WS& ws, const Indices&) {
            auto& l = L(ws);
            M sum = l.zero();
            for (int n = 0; n < l.d(); ++n) sum += l.sP(n);
            return sum;
        },
        [=](WS& ws, const Indices&) { return L(ws).one(); });
    add("proj_script.scriptR_sum", "sum_{n=0}^{d-1} SR_n = (d-1) 1", none,
        [=](WS& ws, const Indices&) {
            auto& l = L(ws);
            M sum = l.zero();
            for (int n = 0; n < l.d(); ++n) sum += l.sR(n);
            return sum;
        },
        [=](WS& ws, const Indices&) { return L(ws).rational(L(ws).d() - 1) * L(ws).one(); });
    add("proj_script.periodic", "SP_{n+d} = SP_n, n = 0..d-1", over_n("n", 0, -1),
        [=](WS& ws, const Indices& ix) {
            auto& l = L(ws);
            return script_projector(l.cfg(), l.V(), ix["n"] + l.d());
        },
        [=](WS& ws, const Indices& ix) { return L(ws).sP(ix["n"]); });
    add("proj_script.reflection", "SP_{d-l} = SP_{-l}, l = 0..d-1", over_n("l", 0, -1),
        [=](WS& ws, const Indices& ix) {
            auto& l = L(ws);
            return script_projector(l.cfg(), l.V(), l.d() - ix["l"]);
        },
        [=](WS& ws, const Indices& ix) { return script_projector(L(ws).cfg(), L(ws).V(), -ix["l"]); });
    auto nm_square = [](const CheckEnv<F>& env) {
        return range2("n", 0, lattice_d(env) - 1, "m", 0, lattice_d(env) - 1);
    };
    add("proj_script.U_intertwine", "SP_n U^m = U^m SP_{n+m}, n,m = 0..d-1", nm_square,
        [=](WS& ws, const Indices& ix) { return L(ws).sP(ix["n"]) * L(ws).U_pow(idx(ix, "m")); },
        [=](WS& ws, const Indices& ix) { return L(ws).U_pow(idx(ix, "m")) * L(ws).sP(ix["n"] + ix["m"]); });
    add("proj_script.Udag_intertwine", "U^dag^m SP_n = SP_{n+m} U^dag^m, n,m = 0..d-1", nm_square,
        [=](WS& ws, const Indices& ix) { return L(ws).Ud_pow(idx(ix, "m")) * L(ws).sP(ix["n"]); },
        [=](WS& ws, const Indices& ix) { return L(ws).sP(ix["n"] + ix["m"]) * L(ws).Ud_pow(idx(ix, "m")); });

    // ---- conversions -------------------------------------------------------
    auto ad_uv = [=](WS& ws) { return a_dagger_from_UV(L(ws).cfg(), L(ws).U(), L(ws).V()); };
    add("conversions.adag_from_UV_canonical", "U - SP_0 U = a^dag", none,
        [=](WS& ws, const Indices&) { return ad_uv(ws); }, [=](WS& ws, const Indices&) { return L(ws).ad(); });
    add("conversions.adag_from_UV_nilpotent", "(U - SP_0 U)^d = 0", none,
        [=](WS& ws, const Indices&) { return matpow(ad_uv(ws), L(ws).d()); },
        [=](WS& ws, const Indices&) { return L(ws).zero(); });
    add("conversions.adag_from_UV_power", "a^dag a^dag^l = U^{l+1} (1 - SP_1 - ... - SP_{l+1}), l = 0..d-1",
        over_n("l", 0, -1),
        [=](WS& ws, const Indices& ix) {
            const auto ad = ad_uv(ws);
            return ad * matpow(ad, ix["l"]);
        },
        [=](WS& ws, const Indices& ix) {
            auto& l = L(ws);
            const int top = idx(ix, "l") + 1;
            M bracket = l.one();
            for (int n = 1; n <= top; ++n) bracket -= l.sP(n);
            return l.U_pow(top) * bracket;
        });
    add("conversions.a_adag_from_UV", "a a^dag = 1 - SP_1 with a^dag = U - SP_0 U", none,
        [=](WS& ws, const Indices&) {
            const auto ad = ad_uv(ws);
            return adjoint(ad) * ad;
        },
        [=](WS& ws, const Indices&) { return L(ws).one() - L(ws).sP(1); });
    auto edges = [=](WS& ws) { return edge_powers_from_UV(L(ws).cfg(), L(ws).U(), L(ws).V()); };
    add("conversions.edge_raise", "U^{d-1} SP_0 = a^dag^{d-1}", none,
        [=](WS& ws, const Indices&) { return edges(ws).raise; },
        [=](WS& ws, const Indices&) { return L(ws).ad_pow(L(ws).d() - 1); });
    add("conversions.edge_lower", "SP_0 U^dag^{d-1} = a^{d-1}", none,
        [=](WS& ws, const Indices&) { return edges(ws).lower; },
        [=](WS& ws, const Indices&) { return L(ws).a_pow(L(ws).d() - 1); });
    add("conversions.edge_adjoint", "(U^{d-1} SP_0)^dag = SP_0 U^dag^{d-1}", none,
        [=](WS& ws, const Indices&) { return adjoint(edges(ws).raise); },
        [=](WS& ws, const Indices&) { return edges(ws).lower; });
    add("conversions.defect_from_UV", "1 - a^dag^{d-1} a^{d-1} = 1 - SP_1 (edge powers from U, V)", none,
        [=](WS& ws, const Indices&) {
            const auto e = edges(ws);
            return L(ws).one() - e.raise * e.lower;
        },
        [=](WS& ws, const Indices&) { return L(ws).one() - L(ws).sP(1); });
    add("conversions.shift_is_cycle", "a^dag + a^{d-1} = cyclic shift |n> -> |n+1 mod d>", none,
        [=](WS& ws, const Indices&) { return L(ws).U(); },
        [=](WS& ws, const Indices&) {
            auto& l = L(ws);
            const auto d = static_cast<std::size_t>(l.d());
            return M::generate(d, l.field(), [&](std::size_t r, std::size_t c) {
                return r == (c + 1) % d ? l.field().one() : l.field().zero();
            });
        });
    add("conversions.clock_is_diagonal", "sum_n q^n (P_n - P_{n+1}) = diag(1, q, ..., q^{d-1})", none,
        [=](WS& ws, const Indices&) { return L(ws).V(); },
        [=](WS& ws, const Indices&) {
            auto& l = L(ws);
            return M::generate(l.cfg().dim(), l.field(), [&](std::size_t r, std::size_t c) {
                return r == c ? l.q(static_cast<long>(r)) : l.field().zero();
            });
        });
    add("conversions.roundtrip_U", "U(a(U,V), a^dag(U,V)) = U", none,
        [=](WS& ws, const Indices&) {
            const auto ad = ad_uv(ws);
            return shift_from_ladder(L(ws).cfg(), adjoint(ad), ad);
        },
        [=](WS& ws, const Indices&) { return L(ws).U(); });
    add("conversions.roundtrip_V", "V(a(U,V), a^dag(U,V)) = V", none,
        [=](WS& ws, const Indices&) {
            const auto ad = ad_uv(ws);
            return clock_from_ladder(L(ws).cfg(), adjoint(ad), ad);
        },
        [=](WS& ws, const Indices&) { return L(ws).V(); });

    // ---- matrix_units ------------------------------------------------------
    auto mn_all = [](const CheckEnv<F>& env) {
        return range2("m", 0, lattice_d(env) - 1, "n", 0, lattice_d(env) - 1);
    };
    auto quads = [](const CheckEnv<F>& env) { return quadruples(lattice_d(env), env.seed); };
    add("matrix_units.shift_standard", "a^dag^m R_{d-1} a^n = |m><n|", mn_all,
        [=](WS& ws, const Indices& ix) { return L(ws).e_shift(idx(ix, "m"), idx(ix, "n")); },
        [=](WS& ws, const Indices& ix) { return L(ws).unit(idx(ix, "m"), idx(ix, "n")); });
    add("matrix_units.schwinger_standard", "U^{m-n} SP_{d-n} | SP_{d-n} | U^dag^{n-m} SP_{d-n} = |m><n|", mn_all,
        [=](WS& ws, const Indices& ix) { return L(ws).e_schwinger(idx(ix, "m"), idx(ix, "n")); },
        [=](WS& ws, const Indices& ix) { return L(ws).unit(idx(ix, "m"), idx(ix, "n")); });
    add("matrix_units.shift_eq_schwinger", "e_mn (shift form) = e_mn (clock-and-shift form)", mn_all,
        [=](WS& ws, const Indices& ix) { return L(ws).e_shift(idx(ix, "m"), idx(ix, "n")); },
        [=](WS& ws, const Indices& ix) { return L(ws).e_schwinger(idx(ix, "m"), idx(ix, "n")); });
    auto product_rhs = [=](auto unit_fn) {
        return [=](WS& ws, const Indices& ix) {
            return ix["j"] == ix["k"] ? unit_fn(L(ws), idx(ix, "i"), idx(ix, "l")) : L(ws).zero();
        };
    };
    auto shift_unit = [](LatticeWorkspace<F>& l, int m, int n) { return l.e_shift(m, n); };
    auto schwinger_unit = [](LatticeWorkspace<F>& l, int m, int n) { return l.e_schwinger(m, n); };
    add("matrix_units.shift_product", "e_ij e_kl = delta_jk e_il (shift form)", quads,
        [=](WS& ws, const Indices& ix) {
            return L(ws).e_shift(idx(ix, "i"), idx(ix, "j")) * L(ws).e_shift(idx(ix, "k"), idx(ix, "l"));
        },
        product_rhs(shift_unit));
    add("matrix_units.schwinger_product", "e_ij e_kl = delta_jk e_il (clock-and-shift form)", quads,
        [=](WS& ws, const Indices& ix) {
            return L(ws).e_schwinger(idx(ix, "i"), idx(ix, "j")) * L(ws).e_schwinger(idx(ix, "k"), idx(ix, "l"));
        },
        product_rhs(schwinger_unit));
    add("matrix_units.shift_adjoint", "e_mn^dag = e_nm (shift form)", mn_all,
        [=](WS& ws, const Indices& ix) { return adjoint(L(ws).e_shift(idx(ix, "m"), idx(ix, "n"))); },
        [=](WS& ws, const Indices& ix) { return L(ws).e_shift(idx(ix, "n"), idx(ix, "m")); });
    add("matrix_units.schwinger_adjoint", "e_mn^dag = e_nm (clock-and-shift form)", mn_all,
        [=](WS& ws, const Indices& ix) { return adjoint(L(ws).e_schwinger(idx(ix, "m"), idx(ix, "n"))); },
        [=](WS& ws, const Indices& ix) { return L(ws).e_schwinger(idx(ix, "n"), idx(ix, "m")); });

    // ---- commutator --------------------------------------------------------
    add("commutator.X_spectrum", "X |n> = beta n |n>, X = beta sum_{m=1}^{d-1} P_m", none,
        [=](WS& ws, const Indices&) { return L(ws).X(); },
        [=](WS& ws, const Indices&) {
            auto& l = L(ws);
            const mpq_class beta = l.cfg().beta;
            return M::generate(l.cfg().dim(), l.field(), [&](std::size_t r, std::size_t c) {
                return r == c ? l.rational(beta * static_cast<long>(r)) : l.field().zero();
            });
        });
    add("commutator.X_adag", "[X, a^dag] = beta a^dag", none,
        [=](WS& ws, const Indices&) { return L(ws).X() * L(ws).ad() - L(ws).ad() * L(ws).X(); },
        [=](WS& ws, const Indices&) { return L(ws).rational(L(ws).cfg().beta) * L(ws).ad(); });

    // ---- tensor ------------------------------------------------------------
    add("tensor.delta_adag_arrows",
        "1 (x) a^dag + a^dag (x) a^{d1-1} steps right along each row and jumps from row end to next row start",
        none, [=](WS& ws, const Indices&) { return T(ws).delta_ad(); },
        [=](WS& ws, const Indices&) {
            const auto& p = T(ws).cfg();
            const auto d1 = static_cast<std::size_t>(p.d1), d2 = static_cast<std::size_t>(p.d2);
            // arrow (j, i) -> successor, written directly on the product basis
            return M::generate(p.dim(), p.field, [&](std::size_t r, std::size_t c) {
                const std::size_t j = c / d1, i = c % d1;
                std::optional<std::size_t> target;
                if (i + 1 < d1) target = tensor_index(p, j, i + 1);
                else if (j + 1 < d2) target = tensor_index(p, j + 1, 0);
                return target == r ? p.field.one() : p.field.zero();
            });
        });
    add("tensor.delta_adag_nilpotent", "Delta(a^dag)^D = 0, D = d1 d2", none,
        [=](WS& ws, const Indices&) { return matpow(T(ws).delta_ad(), T(ws).dim()); },
        [=](WS& ws, const Indices&) { return T(ws).zero(); });
    add("tensor.delta_a_nilpotent", "Delta(a)^D = 0", none,
        [=](WS& ws, const Indices&) { return matpow(T(ws).delta_a(), T(ws).dim()); },
        [=](WS& ws, const Indices&) { return T(ws).zero(); });
    add("tensor.delta_a_adag_defect", "Delta(a) Delta(a^dag) = 1 - Delta(a^dag)^{D-1} Delta(a)^{D-1}", none,
        [=](WS& ws, const Indices&) { return T(ws).delta_a() * T(ws).delta_ad(); },
        [=](WS& ws, const Indices&) {
            auto& t = T(ws);
            return t.one() - matpow(t.delta_ad(), t.dim() - 1) * matpow(t.delta_a(), t.dim() - 1);
        });
    add("tensor.delta_adag_a_defect", "Delta(a^dag) Delta(a) = 1 - Delta(a)^{D-1} Delta(a^dag)^{D-1}", none,
        [=](WS& ws, const Indices&) { return T(ws).delta_ad() * T(ws).delta_a(); },
        [=](WS& ws, const Indices&) {
            auto& t = T(ws);
            return t.one() - matpow(t.delta_a(), t.dim() - 1) * matpow(t.delta_ad(), t.dim() - 1);
        });
    add("tensor.delta_U_order", "Delta(U)^D = 1", none,
        [=](WS& ws, const Indices&) { return matpow(T(ws).delta_U(), T(ws).dim()); },
        [=](WS& ws, const Indices&) { return T(ws).one(); });
    add("tensor.delta_U_unitary", "Delta(U) Delta(U)^dag = 1", none,
        [=](WS& ws, const Indices&) { return T(ws).delta_U() * adjoint(T(ws).delta_U()); },
        [=](WS& ws, const Indices&) { return T(ws).one(); });
    add("tensor.delta_U_unitary_left", "Delta(U)^dag Delta(U) = 1", none,
        [=](WS& ws, const Indices&) { return adjoint(T(ws).delta_U()) * T(ws).delta_U(); },
        [=](WS& ws, const Indices&) { return T(ws).one(); });
    add("tensor.delta_U_wrap_term", "Delta(U) - Delta(a^dag) = a^{d2-1} (x) a^{d1-1}", none,
        [=](WS& ws, const Indices&) { return T(ws).delta_U() - T(ws).delta_ad(); },
        [=](WS& ws, const Indices&) {
            const auto& p = T(ws).cfg();
            const auto h = p.horizontal(), v = p.vertical();
            return kron(matpow(make_a(v), v.d - 1), matpow(make_a(h), h.d - 1));
        });
    add("tensor.flatten_is_permutation", "S S^dag = 1", none,
        [=](WS& ws, const Indices&) { return T(ws).flatten() * adjoint(T(ws).flatten()); },
        [=](WS& ws, const Indices&) { return T(ws).one(); });
    add("tensor.flatten_intertwines_adag", "S a^dag_D S^dag = Delta(a^dag)", none,
        [=](WS& ws, const Indices&) {
            auto& t = T(ws);
            return t.flatten() * t.flat_ad() * adjoint(t.flatten());
        },
        [=](WS& ws, const Indices&) { return T(ws).delta_ad(); });
    add("tensor.flatten_intertwines_U", "S U_D S^dag = Delta(U)", none,
        [=](WS& ws, const Indices&) {
            auto& t = T(ws);
            return t.flatten() * t.flat_U() * adjoint(t.flatten());
        },
        [=](WS& ws, const Indices&) { return T(ws).delta_U(); });

    return out;
}

}  // namespace detail

/// Every check, in report order. Built once; immutable.
template <ScalarField F>
const std::vector<IdentityCheck<F>>& catalogue() {
    static const std::vector<IdentityCheck<F>> checks = detail::build_catalogue<F>();
    return checks;
}

template <ScalarField F>
const IdentityCheck<F>& find_check(std::string_view name) {
    for (const auto& c : catalogue<F>())
        if (c.name == name) return c;
    throw std::invalid_argument("unknown check: " + std::string(name));
}

/// Evaluate one check over all its index cases. Exact mode passes iff every
/// case is structurally equal; the residual of a failing exact case is its
/// embedding in C. Float mode passes iff the worst residual <= tolerance.
template <ScalarField F>
CheckResult run_check(const IdentityCheck<F>& check, const CheckEnv<F>& env) {
    const bool tensor = check.suite() == "tensor";
    if (tensor && !env.product) throw ConfigError(check.name + " needs a product lattice configuration");
    if (!tensor && !env.lattice) throw ConfigError(check.name + " needs a lattice configuration");
    const double tolerance = tensor ? env.product->tolerance : env.lattice->tolerance;

    const auto start = std::chrono::steady_clock::now();
    CheckResult result;
    result.name = check.name;
    result.relation = check.relation;
    result.mode = F::mode_name;
    if (tensor) {
        result.d = static_cast<int>(env.product->dim());
        result.factors = std::pair{env.product->d1, env.product->d2};
    } else {
        result.d = env.lattice->d;
    }

    Workspace<F> ws(env);
    const std::vector<Indices> cases = check.quantified() ? check.cases(env) : std::vector<Indices>{Indices{}};
    result.cases = cases.size();
    result.pass = true;
    bool first = true;
    for (const auto& ix : cases) {
        const auto lhs = check.lhs(ws, ix);
        const auto rhs = check.rhs(ws, ix);
        double residual = 0.0;
        bool ok = false;
        if constexpr (F::is_exact) {
            ok = lhs == rhs;
            if (!ok) residual = max_residual(lhs, rhs);
        } else {
            residual = max_residual(lhs, rhs);
            ok = residual <= tolerance;
        }
        if (!ok) result.pass = false;
        if (first || residual > result.max_residual) {
            result.max_residual = residual;
            if (check.quantified()) result.indices = ix;
        }
        first = false;
    }
    result.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
    return result;
}

template <ScalarField F>
SuiteReport run_suite(std::string_view suite, const CheckEnv<F>& env) {
    if (!is_known_suite(suite)) throw UnknownSuite("unknown suite: " + std::string(suite));
    SuiteReport report;
    report.suite = std::string(suite);
    report.mode = F::mode_name;
    const bool tensor = suite == "tensor";
    if (tensor && !env.product) throw ConfigError("suite tensor needs a product lattice configuration");
    if (!tensor && !env.lattice) throw ConfigError("suite " + report.suite + " needs a lattice configuration");
    if (tensor) {
        report.d = static_cast<int>(env.product->dim());
        report.factors = std::pair{env.product->d1, env.product->d2};
        if (!F::is_exact) report.tolerance = env.product->tolerance;
    } else {
        report.d = env.lattice->d;
        if (!F::is_exact) report.tolerance = env.lattice->tolerance;
    }
    for (const auto& check : catalogue<F>())
        if (check.suite() == suite) report.results.push_back(run_check(check, env));
    return report;
}

/// Every suite the environment can run: lattice suites if `lattice` is set,
/// the tensor suite if `product` is set.
template <ScalarField F>
std::vector<SuiteReport> run_all(const CheckEnv<F>& env) {
    std::vector<SuiteReport> reports;
    for (const auto suite : kSuiteNames) {
        const bool tensor = suite == "tensor";
        if (tensor ? env.product.has_value() : env.lattice.has_value()) reports.push_back(run_suite(suite, env));
    }
    return reports;
}

}  // namespace qudit

#endif  // QUDIT_IDENTITIES_HPP
