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

// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qudit/identities.hpp"
#include "qudit/lattice.hpp"
#include "qudit/tensor_lattice.hpp"

namespace {

using qudit::ComplexField;
using qudit::CycloField;

constexpr double kTolerance = 1e-10;
constexpr double kRuntimeLimitSeconds = 60.0;

struct Process {
    int status = -1;
    std::string out;
    double seconds = 0.0;
};

Process run_cli(const std::string& args) {
    const std::string cmd = std::string(QUDIT_CLI_PATH) + " " + args + " 2>/dev/null";
    Process p;
    const auto start = std::chrono::steady_clock::now();
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return p;
    char buf[65536];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) p.out.append(buf, n);
    const int raw = pclose(pipe);
    p.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    p.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return p;
}

struct Tally {
    std::size_t checks = 0, failed = 0;
    double worst = 0.0;
};

Tally tally(const std::string& report) {
    Tally t;
    const auto doc = nlohmann::json::parse(report);
    for (const auto& run : doc["runs"])
        for (const auto& suite : run["suites"])
            for (const auto& check : suite["checks"]) {
                ++t.checks;
                if (!check["pass"].get<bool>()) ++t.failed;
                t.worst = std::max(t.worst, std::stod(check["max_residual"].get<std::string>()));
            }
    return t;
}

template <qudit::ScalarField F>
double distance(const qudit::OperatorMatrix<CycloField>& e, const qudit::OperatorMatrix<F>& f) {
    double worst = 0.0;
    for (std::size_t r = 0; r < e.dim(); ++r)
        for (std::size_t c = 0; c < e.dim(); ++c)
            worst = std::max(worst, std::abs(e(r, c).to_complex() - F::to_complex(f(r, c))));
    return worst;
}

/// Worst exact-vs-float entry distance over every constructor, d in 2..8.
double constructor_agreement() {
    double worst = 0.0;
    for (int d = 2; d <= 8; ++d) {
        const auto e = qudit::exact_lattice(d, mpq_class(1, 2));
        const auto f = qudit::float_lattice(d, mpq_class(1, 2));
        auto cmp = [&](const auto& a, const auto& b) { worst = std::max(worst, distance(a, b)); };
        cmp(qudit::make_a_dagger(e), qudit::make_a_dagger(f));
        cmp(qudit::make_a(e), qudit::make_a(f));
        cmp(qudit::make_U(e), qudit::make_U(f));
        cmp(qudit::make_V(e), qudit::make_V(f));
        cmp(qudit::position_X(e), qudit::position_X(f));
        for (int n = 0; n <= d; ++n) {
            cmp(qudit::proj_P(e, n), qudit::proj_P(f, n));
            cmp(qudit::proj_R(e, n), qudit::proj_R(f, n));
        }
        for (int n = 0; n < d; ++n) {
            cmp(qudit::proj_scriptP(e, n), qudit::proj_scriptP(f, n));
            cmp(qudit::proj_scriptR(e, n), qudit::proj_scriptR(f, n));
        }
        cmp(qudit::a_dagger_from_UV(e, qudit::make_U(e), qudit::make_V(e)),
            qudit::a_dagger_from_UV(f, qudit::make_U(f), qudit::make_V(f)));
        const auto ee = qudit::edge_powers_from_UV(e, qudit::make_U(e), qudit::make_V(e));
        const auto fe = qudit::edge_powers_from_UV(f, qudit::make_U(f), qudit::make_V(f));
        cmp(ee.raise, fe.raise);
        cmp(ee.lower, fe.lower);
        for (int m = 0; m < d; ++m)
            for (int n = 0; n < d; ++n) {
                cmp(qudit::matrix_unit_shift(e, m, n), qudit::matrix_unit_shift(f, m, n));
                cmp(qudit::matrix_unit_schwinger(e, m, n), qudit::matrix_unit_schwinger(f, m, n));
            }
    }
    for (const auto& [d1, d2] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {4, 3}, {3, 5}}) {
        const auto e = qudit::exact_product_lattice(d1, d2);
        const auto f = qudit::float_product_lattice(d1, d2);
        worst = std::max(worst, distance(qudit::coproduct_a_dagger(e), qudit::coproduct_a_dagger(f)));
        worst = std::max(worst, distance(qudit::coproduct_U(e), qudit::coproduct_U(f)));
        worst = std::max(worst, distance(qudit::flatten_permutation(e), qudit::flatten_permutation(f)));
    }
    return worst;
}

struct Outcome {
    bool pass;
    std::string detail;
};

const std::string kSweep = "verify --d 2..8 --suites all --mode exact --deterministic";

Outcome criterion_1(std::string& report) {
    const auto p = run_cli(kSweep);
    report = p.out;
    if (p.status != 0) return {false, "exit status " + std::to_string(p.status)};
    const auto t = tally(p.out);
    std::ostringstream os;
    os << t.checks << " checks, " << t.failed << " failed, max residual " << t.worst << ", " << p.seconds
       << " s (limit " << kRuntimeLimitSeconds << " s)";
    return {t.failed == 0 && t.worst == 0.0 && t.checks > 0 && p.seconds < kRuntimeLimitSeconds, os.str()};
}

Outcome criterion_2() {
    const auto p = run_cli("verify --d 2..8 --suites all --mode float --tol 1e-10 --deterministic");
    if (p.status != 0) return {false, "exit status " + std::to_string(p.status)};
    const auto t = tally(p.out);
    const double agreement = constructor_agreement();
    std::ostringstream os;
    os << t.checks << " float checks, " << t.failed << " failed, max residual " << t.worst
       << "; exact-vs-float constructor distance " << agreement << " (tol " << kTolerance << ")";
    return {t.failed == 0 && t.worst <= kTolerance && agreement <= kTolerance, os.str()};
}

Outcome criterion_3() {
    const auto p = run_cli("verify --d 4,6,8 --suites all --mode exact --deterministic");
    const auto t = tally(p.out);
    bool cyclotomic = true;
    std::ostringstream os;
    for (int d : {4, 6, 8}) {
        const CycloField f(d);
        cyclotomic = cyclotomic && f.degree() == qudit::euler_phi(d) && f.degree() < d;
        os << "Q(q_" << d << ") mod " << f.modulus().to_string() << "; ";
    }
    os << t.checks << " checks, " << t.failed << " failed";
    return {p.status == 0 && t.failed == 0 && t.worst == 0.0 && cyclotomic, os.str()};
}

Outcome criterion_4() {
    bool ok = true;
    std::size_t units = 0;
    for (int d = 2; d <= 6; ++d) {
        const auto cfg = qudit::exact_lattice(d);
        for (int m = 0; m < d; ++m)
            for (int n = 0; n < d; ++n) {
                const auto standard = qudit::matrix_unit(cfg.dim(), cfg.field, static_cast<std::size_t>(m),
                                                         static_cast<std::size_t>(n));
                ok = ok && qudit::matrix_unit_shift(cfg, m, n) == standard &&
                     qudit::matrix_unit_schwinger(cfg, m, n) == standard;
                ++units;
            }
    }
    std::size_t products = 0;
    for (int d = 2; d <= 4; ++d) {
        qudit::CheckEnv<CycloField> env;
        env.lattice = qudit::exact_lattice(d);
        for (const char* name : {"matrix_units.shift_product", "matrix_units.schwinger_product"}) {
            const auto r = qudit::run_check(qudit::find_check<CycloField>(name), env);
            ok = ok && r.pass && r.cases == static_cast<std::size_t>(d * d * d * d);
            if (d == 4) products += r.cases;
        }
    }
    std::ostringstream os;
    os << units << " units equal across both forms for d<=6; " << products
       << " quadruple products exact at d=4 (256 per form)";
    return {ok && products == 512, os.str()};
}

Outcome criterion_5() {
    bool ok = true;
    for (int d = 2; d <= 8; ++d) {
        const auto cfg = qudit::exact_lattice(d);
        const auto u = qudit::make_U(cfg), v = qudit::make_V(cfg);
        ok = ok && qudit::a_dagger_from_UV(cfg, u, v) == qudit::make_a_dagger(cfg);
        const auto cycle = qudit::OperatorMatrix<CycloField>::generate(
            cfg.dim(), cfg.field, [&](std::size_t r, std::size_t c) {
                return r == (c + 1) % cfg.dim() ? cfg.field.one() : cfg.field.zero();
            });
        ok = ok && qudit::shift_from_ladder(cfg, qudit::make_a(cfg), qudit::make_a_dagger(cfg)) == cycle;
        const auto edges = qudit::edge_powers_from_UV(cfg, u, v);
        ok = ok && edges.raise == qudit::matpow(qudit::make_a_dagger(cfg), d - 1) &&
             edges.lower == qudit::matpow(qudit::make_a(cfg), d - 1);
    }
    return {ok, "a^dag from (U, V), U from (a, a^dag), edge powers exact for d = 2..8"};
}

Outcome criterion_6() {
    bool ok = true;
    std::ostringstream os;
    for (const auto& [d1, d2] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {4, 3}, {3, 5}}) {
        const auto p = qudit::exact_product_lattice(d1, d2);
        const auto s = qudit::flatten_permutation(p);
        const auto sd = qudit::adjoint(s);
        const bool adag = s * qudit::make_a_dagger(p.flat()) * sd == qudit::coproduct_a_dagger(p);
        const bool shift = s * qudit::make_U(p.flat()) * sd == qudit::coproduct_U(p);
        ok = ok && adag && shift;
        os << d1 << "x" << d2 << (adag && shift ? " ok; " : " MISMATCH; ");
    }
    // 4x3 arrows: right step inside a row, jump from row end to the next row
    // start, nothing leaves the last site.
    const auto p = qudit::exact_product_lattice(4, 3);
    const auto dad = qudit::coproduct_a_dagger(p);
    std::size_t arrows = 0;
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < 4; ++i) {
            const std::size_t col = j * 4 + i;
            long target = -1;
            if (i + 1 < 4) target = static_cast<long>(col + 1);
            else if (j + 1 < 3) target = static_cast<long>((j + 1) * 4);
            for (std::size_t r = 0; r < 12; ++r) {
                const bool hit = static_cast<long>(r) == target;
                ok = ok && dad(r, col) == (hit ? p.field.one() : p.field.zero());
                arrows += hit;
            }
        }
    os << "4x3 figure arrows " << arrows << "/11";
    return {ok && arrows == 11, os.str()};
}

Outcome criterion_7() {
    const auto p = run_cli("verify --d 4 --suites all --inject-fault clock-q-squared");
    const auto t = tally(p.out);
    std::ostringstream os;
    os << "clock built with q^2 at d=4: " << t.failed << " of " << t.checks << " checks failed, max residual "
       << t.worst << ", exit status " << p.status;
    return {p.status == 1 && t.failed >= 1 && t.worst > 0.0, os.str()};
}

Outcome criterion_8(const std::string& first) {
    const auto second = run_cli(kSweep);
    const bool same = !first.empty() && first == second.out;
    return {same, std::to_string(first.size()) + " bytes, " + (same ? "identical" : "different")};
}

}  // namespace

int main() {
    std::string sweep_report;
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"exact sweep d=2..8, all suites, zero residual, under 60 s", [&] { return criterion_1(sweep_report); }},
        {"float sweep at tol 1e-10 and exact/float constructor agreement", criterion_2},
        {"composite d in {4,6,8} exact", criterion_3},
        {"matrix-unit equivalence and products", criterion_4},
        {"conversion round-trip", criterion_5},
        {"tensor isomorphism via flatten permutation", criterion_6},
        {"negative control exits 1", criterion_7},
        {"deterministic reports byte-identical", [&] { return criterion_8(sweep_report); }},
    };
    int failures = 0;
    int index = 1;
    for (const auto& [title, fn] : criteria) {
        Outcome o{false, ""};
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << "criterion " << index++ << ": " << (o.pass ? "PASS" : "FAIL") << " - " << title << " ["
                  << o.detail << "]" << std::endl;
        failures += !o.pass;
    }
    std::cout << (failures == 0 ? "acceptance: PASS" : "acceptance: FAIL") << std::endl;
    return failures == 0 ? 0 : 1;
}
