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
#include <set>
#include <string>

#include "qudit/errors.hpp"
#include "qudit/identities.hpp"

namespace {

using qudit::CheckEnv;
using qudit::ComplexField;
using qudit::CycloField;

CheckEnv<CycloField> exact_env(int d, std::uint64_t seed = 0) {
    CheckEnv<CycloField> env;
    env.lattice = qudit::exact_lattice(d);
    env.seed = seed;
    return env;
}

CheckEnv<ComplexField> float_env(int d, double tol = 1e-10) {
    CheckEnv<ComplexField> env;
    env.lattice = qudit::float_lattice(d, 1, tol);
    return env;
}

template <qudit::ScalarField F>
CheckEnv<F> product_env(qudit::ProductLatticeConfig<F> p) {
    CheckEnv<F> env;
    env.product = std::move(p);
    return env;
}

}  // namespace

TEST(Catalogue, NamesAreUniqueAndCoverEverySuite) {
    const auto& cat = qudit::catalogue<CycloField>();
    std::set<std::string> names, suites;
    for (const auto& c : cat) {
        EXPECT_TRUE(names.insert(c.name).second) << "duplicate " << c.name;
        EXPECT_TRUE(qudit::is_known_suite(c.suite())) << c.name;
        EXPECT_FALSE(c.relation.empty()) << c.name;
        suites.insert(c.suite());
    }
    EXPECT_GE(names.size(), 30u);
    EXPECT_EQ(suites.size(), qudit::kSuiteNames.size());
    for (const char* required :
         {"schwinger.VU_eq_qUV", "schwinger.U_order_d", "schwinger.V_order_d", "proj_script.partition_of_unity",
          "almost_unitary.a_dag_nilpotent", "almost_unitary.a_adag_defect", "proj_PR.P_eq_1_minus_R",
          "proj_PR.P_product_max", "proj_script.idempotent", "conversions.adag_from_UV_canonical",
          "conversions.edge_raise", "matrix_units.shift_product", "matrix_units.shift_eq_schwinger",
          "commutator.X_adag", "tensor.flatten_intertwines_adag", "tensor.flatten_intertwines_U"})
        EXPECT_TRUE(names.count(required)) << required;

    // both modes expose the same catalogue
    const auto& fcat = qudit::catalogue<ComplexField>();
    ASSERT_EQ(fcat.size(), cat.size());
    for (std::size_t i = 0; i < cat.size(); ++i) EXPECT_EQ(fcat[i].name, cat[i].name);
}

TEST(RunCheck, Examples) {
    const auto r = qudit::run_check(qudit::find_check<CycloField>("schwinger.U_order_d"), exact_env(5));
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.max_residual, 0.0);
    EXPECT_EQ(r.d, 5);
    EXPECT_EQ(r.mode, "exact");

    const auto f = qudit::run_check(qudit::find_check<ComplexField>("schwinger.VU_eq_qUV"), float_env(3));
    EXPECT_TRUE(f.pass);
    EXPECT_LT(f.max_residual, 1e-14);
    EXPECT_EQ(f.mode, "float");

    EXPECT_THROW(qudit::find_check<CycloField>("schwinger.nope"), std::invalid_argument);
}

TEST(RunCheck, CorruptedCheckFails) {
    // q replaced by q^2 in the commutation relation; |q - q^2| = sqrt(2) at d = 4
    using WS = qudit::Workspace<CycloField>;
    qudit::IdentityCheck<CycloField> bad{
        "schwinger.corrupted", "V U = q^2 U V", {},
        [](WS& ws, const qudit::Indices&) { return ws.lattice().V() * ws.lattice().U(); },
        [](WS& ws, const qudit::Indices&) { return ws.lattice().q(2) * (ws.lattice().U() * ws.lattice().V()); }};
    const auto r = qudit::run_check(bad, exact_env(4));
    EXPECT_FALSE(r.pass);
    EXPECT_GT(r.max_residual, 0.5);
    EXPECT_NEAR(r.max_residual, std::sqrt(2.0), 1e-12);
}

TEST(RunCheck, InjectedClockFaultIsCaught) {
    CheckEnv<CycloField> env;
    env.lattice = qudit::make_lattice(4, CycloField(4), 1, 1e-10, qudit::Fault::clock_root_squared);
    const auto r = qudit::run_check(qudit::find_check<CycloField>("schwinger.VU_eq_qUV"), env);
    EXPECT_FALSE(r.pass);
    EXPECT_NEAR(r.max_residual, std::sqrt(2.0), 1e-12);

    CheckEnv<ComplexField> fenv;
    fenv.lattice = qudit::make_lattice(4, ComplexField{}, 1, 1e-10, qudit::Fault::clock_root_squared);
    std::size_t failed = 0;
    for (const auto& s : qudit::run_all(fenv)) failed += s.failed();
    EXPECT_GE(failed, 1u);
}

TEST(RunCheck, MissingEnvironment) {
    CheckEnv<CycloField> empty;
    EXPECT_THROW(qudit::run_check(qudit::find_check<CycloField>("schwinger.VU_eq_qUV"), empty), qudit::ConfigError);
    EXPECT_THROW(qudit::run_check(qudit::find_check<CycloField>("tensor.delta_U_order"), exact_env(3)),
                 qudit::ConfigError);
    EXPECT_THROW(qudit::run_suite("tensor", exact_env(3)), qudit::ConfigError);
    EXPECT_THROW(qudit::run_suite("no_such_suite", exact_env(3)), qudit::UnknownSuite);
}

TEST(RunSuite, AllSuitesPassAtD2) {
    const auto reports = qudit::run_all(exact_env(2));
    EXPECT_EQ(reports.size(), qudit::kSuiteNames.size() - 1);  // no product lattice
    for (const auto& s : reports) {
        EXPECT_TRUE(s.all_passed()) << s.suite;
        for (const auto& r : s.results) EXPECT_EQ(r.max_residual, 0.0) << r.name;
    }
}

TEST(RunSuite, MatrixUnitsExhaustiveAtD4) {
    const auto report = qudit::run_suite("matrix_units", exact_env(4));
    EXPECT_TRUE(report.all_passed());
    bool saw_product = false;
    for (const auto& r : report.results) {
        if (r.name == "matrix_units.shift_product" || r.name == "matrix_units.schwinger_product") {
            EXPECT_EQ(r.cases, 256u);
            saw_product = true;
        }
    }
    EXPECT_TRUE(saw_product);
}

TEST(RunSuite, SampledQuadruplesAreSeeded) {
    const auto a = qudit::detail::quadruples(7, 11);
    const auto b = qudit::detail::quadruples(7, 11);
    const auto c = qudit::detail::quadruples(7, 12);
    ASSERT_EQ(a.size(), 64u);
    std::string sa, sb, sc;
    for (const auto& ix : a) sa += ix.to_string() + ";";
    for (const auto& ix : b) sb += ix.to_string() + ";";
    for (const auto& ix : c) sc += ix.to_string() + ";";
    EXPECT_EQ(sa, sb);
    EXPECT_NE(sa, sc);
    std::size_t jk = 0;
    for (const auto& ix : a) jk += ix["j"] == ix["k"];
    EXPECT_GE(jk, 32u);

    const auto report = qudit::run_suite("matrix_units", exact_env(7, 11));
    EXPECT_TRUE(report.all_passed());
}

TEST(RunSuite, TensorFourByThree) {
    const auto report = qudit::run_suite("tensor", product_env(qudit::exact_product_lattice(4, 3)));
    EXPECT_TRUE(report.all_passed());
    EXPECT_EQ(report.d, 12);
    ASSERT_TRUE(report.factors.has_value());
    EXPECT_EQ(report.factors->first, 4);
    EXPECT_EQ(report.factors->second, 3);

    const auto freport = qudit::run_suite("tensor", product_env(qudit::float_product_lattice(4, 3)));
    EXPECT_TRUE(freport.all_passed());
}

TEST(RunSuite, CompositeOrdersExact) {
    for (int d : {4, 6, 8}) {
        for (const auto& s : qudit::run_all(exact_env(d))) EXPECT_TRUE(s.all_passed()) << s.suite << " d=" << d;
    }
}

TEST(RunSuite, FloatSweepAgreesWithExact) {
    for (int d = 2; d <= 8; ++d) {
        const auto exact = qudit::run_all(exact_env(d));
        const auto fl = qudit::run_all(float_env(d));
        ASSERT_EQ(exact.size(), fl.size());
        for (std::size_t s = 0; s < exact.size(); ++s) {
            ASSERT_EQ(exact[s].results.size(), fl[s].results.size());
            EXPECT_EQ(fl[s].tolerance, 1e-10);
            EXPECT_FALSE(exact[s].tolerance.has_value());
            for (std::size_t i = 0; i < exact[s].results.size(); ++i) {
                EXPECT_EQ(exact[s].results[i].name, fl[s].results[i].name);
                EXPECT_EQ(exact[s].results[i].pass, fl[s].results[i].pass) << fl[s].results[i].name << " d=" << d;
                EXPECT_LE(fl[s].results[i].max_residual, 1e-10);
            }
        }
    }
}

TEST(RunSuite, FloatToleranceIsEnforced) {
    // A tolerance of zero is below float round-off for VU = qU V at d = 3.
    const auto r = qudit::run_check(qudit::find_check<ComplexField>("schwinger.VU_eq_qUV"), float_env(3, 0.0));
    EXPECT_EQ(r.pass, r.max_residual == 0.0);
}

TEST(RunSuite, WorstCaseIndicesReported) {
    const auto r = qudit::run_check(qudit::find_check<CycloField>("proj_PR.P_product_max"), exact_env(3));
    EXPECT_TRUE(r.pass);
    EXPECT_GT(r.cases, 1u);
    ASSERT_TRUE(r.indices.has_value());
    EXPECT_FALSE(r.indices->empty());
}
