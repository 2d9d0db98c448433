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
 * @file cli.hpp
 * @brief The qudit-algebra command line: `verify` and `emit`.
 *
 *   qudit-algebra verify --d 2..8 --suites all --mode exact [--format json|text]
 *   qudit-algebra emit   --d 3 --op V --mode float
 *
 * Exit status: 0 every check passed, 1 at least one check failed,
 * 2 usage or configuration error.
 */

#ifndef QUDIT_CLI_HPP
#define QUDIT_CLI_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "errors.hpp"
#include "identities.hpp"
#include "lattice.hpp"
#include "report.hpp"
#include "tensor_lattice.hpp"

namespace qudit::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::invalid_argument {
   public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

struct RunSpec {
    std::vector<int> ds;
    std::vector<std::string> suites;  ///< resolved; never "all"
    std::string mode = "exact";
    double tolerance = 1e-10;
    mpq_class beta = 1;
    std::vector<std::pair<int, int>> tensor_pairs;  ///< (d1, d2)
    std::string format = "json";
    std::string output;  ///< empty: standard output
    std::uint64_t seed = 0;
    bool deterministic = false;
    Fault fault = Fault::none;
};

inline const std::vector<std::pair<int, int>>& default_tensor_pairs() {
    static const std::vector<std::pair<int, int>> pairs{{2, 2}, {2, 3}, {3, 2}, {4, 3}, {3, 5}};
    return pairs;
}

inline int parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw UsageError("invalid " + what + ": '" + s + "'");
    }
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

/// "5", "2..8", or a comma list of either.
inline std::vector<int> parse_d_values(const std::string& text) {
    std::vector<int> out;
    for (const auto& part : split(text, ',')) {
        if (const auto dots = part.find(".."); dots != std::string::npos) {
            const int lo = parse_int(part.substr(0, dots), "d range");
            const int hi = parse_int(part.substr(dots + 2), "d range");
            if (hi < lo) throw UsageError("empty d range '" + part + "'");
            for (int d = lo; d <= hi; ++d) out.push_back(d);
        } else {
            out.push_back(parse_int(part, "d"));
        }
    }
    if (out.empty()) throw UsageError("no d values given");
    for (int d : out)
        if (d < 2) throw ConfigError("lattice size d must be >= 2 (got d = " + std::to_string(d) + ")");
    return out;
}

/// "4x3,2x2" -> {(4,3), (2,2)} as (d1, d2).
inline std::vector<std::pair<int, int>> parse_tensor_pairs(const std::string& text) {
    std::vector<std::pair<int, int>> out;
    for (const auto& part : split(text, ',')) {
        const auto x = part.find('x');
        if (x == std::string::npos) throw UsageError("tensor pair must look like d1xd2, got '" + part + "'");
        const int d1 = parse_int(part.substr(0, x), "tensor d1");
        const int d2 = parse_int(part.substr(x + 1), "tensor d2");
        if (d1 < 2 || d2 < 2) throw ConfigError("tensor factors must be >= 2, got " + part);
        out.emplace_back(d1, d2);
    }
    return out;
}

/// Exact rational from "3", "-1/2", "0.25" or "2.5e-1".
inline mpq_class parse_rational(const std::string& text) {
    if (text.empty()) throw UsageError("empty number");
    if (text.find('/') != std::string::npos) {
        mpq_class q;
        if (q.set_str(text, 10) != 0 || q.get_den() == 0) throw UsageError("invalid rational '" + text + "'");
        q.canonicalize();
        return q;
    }
    std::string mantissa = text;
    long exponent = 0;
    if (const auto e = text.find_first_of("eE"); e != std::string::npos) {
        mantissa = text.substr(0, e);
        exponent = parse_int(text.substr(e + 1), "exponent");
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_point = false;
    for (std::size_t i = 0; i < mantissa.size(); ++i) {
        const char c = mantissa[i];
        if ((c == '-' || c == '+') && i == 0) {
            if (c == '-') digits += c;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
            if (seen_point) ++frac_digits;
        } else {
            throw UsageError("invalid number '" + text + "'");
        }
    }
    if (digits.empty() || digits == "-") throw UsageError("invalid number '" + text + "'");
    mpq_class q(mpz_class(digits, 10));
    const long shift = exponent - frac_digits;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    if (shift >= 0) q *= scale;
    else q /= scale;
    return q;
}

inline Fault parse_fault(const std::string& name) {
    if (name.empty() || name == "none") return Fault::none;
    if (name == "clock-q-squared") return Fault::clock_root_squared;
    throw UsageError("unknown fault '" + name + "' (known: none, clock-q-squared)");
}

namespace detail {

template <ScalarField F>
std::vector<RunRecord> run_verify(const RunSpec& spec) {
    std::vector<RunRecord> runs;
    std::vector<std::string> lattice_suites;
    bool tensor = false;
    for (const auto& s : spec.suites) {
        if (s == "tensor") tensor = true;
        else lattice_suites.push_back(s);
    }
    const std::optional<double> tol =
        F::is_exact ? std::nullopt : std::optional<double>(spec.tolerance);

    if (!lattice_suites.empty()) {
        for (int d : spec.ds) {
            F field = [&] {
                if constexpr (F::is_exact) return F(d);
                else return F{};
            }();
            CheckEnv<F> env;
            env.lattice = make_lattice(d, field, spec.beta, spec.tolerance, spec.fault);
            env.seed = spec.seed;
            RunRecord run{d, F::mode_name, tol, std::nullopt, {}};
            for (const auto& s : lattice_suites) run.suites.push_back(run_suite(s, env));
            runs.push_back(std::move(run));
        }
    }
    if (tensor) {
        const auto& pairs = spec.tensor_pairs.empty() ? default_tensor_pairs() : spec.tensor_pairs;
        for (const auto& [d1, d2] : pairs) {
            F field = [&] {
                if constexpr (F::is_exact) return F(std::lcm(d1, d2));
                else return F{};
            }();
            CheckEnv<F> env;
            env.product = make_product_lattice(d1, d2, field, spec.tolerance);
            env.seed = spec.seed;
            RunRecord run{d1 * d2, F::mode_name, tol, std::pair{d1, d2}, {}};
            run.suites.push_back(run_suite("tensor", env));
            runs.push_back(std::move(run));
        }
    }
    return runs;
}

struct OpRequest {
    std::string name;
    std::vector<long> args;
};

inline OpRequest parse_op(const std::string& text) {
    OpRequest req;
    const auto colon = text.find(':');
    req.name = text.substr(0, colon);
    if (colon != std::string::npos) {
        for (const auto& a : split(text.substr(colon + 1), ','))
            req.args.push_back(parse_int(a, "operator index"));
    }
    return req;
}

inline void expect_args(const OpRequest& req, std::size_t n) {
    if (req.args.size() != n)
        throw UsageError("operator " + req.name + " takes " + std::to_string(n) + " index argument(s), got " +
                         std::to_string(req.args.size()));
}

inline bool is_tensor_op(const std::string& name) {
    return name == "delta_a_dagger" || name == "delta_U" || name == "flatten";
}

template <ScalarField F>
std::pair<int, OperatorMatrix<F>> build_operator(const OpRequest& req, std::optional<int> d, const mpq_class& beta,
                                                 const std::string& rep) {
    if (is_tensor_op(req.name)) {
        expect_args(req, 2);
        const int d1 = static_cast<int>(req.args[0]), d2 = static_cast<int>(req.args[1]);
        if (d1 < 2 || d2 < 2) throw ConfigError("tensor factors must be >= 2");
        F field = [&] {
            if constexpr (F::is_exact) return F(std::lcm(d1, d2));
            else return F{};
        }();
        const auto pcfg = make_product_lattice(d1, d2, field);
        if (req.name == "delta_a_dagger") return {d1 * d2, coproduct_a_dagger(pcfg)};
        if (req.name == "delta_U") return {d1 * d2, coproduct_U(pcfg)};
        return {d1 * d2, flatten_permutation(pcfg)};
    }
    if (!d) throw UsageError("--d is required for operator " + req.name);
    F field = [&] {
        if constexpr (F::is_exact) {
            if (*d < 2) throw ConfigError("lattice size d must be >= 2 (got d = " + std::to_string(*d) + ")");
            return F(*d);
        } else {
            return F{};
        }
    }();
    const auto cfg = make_lattice(*d, field, beta);
    const auto& n = req.name;
    auto arg = [&](std::size_t i) { return static_cast<int>(req.args[i]); };
    if (n == "a") return expect_args(req, 0), std::pair{*d, make_a(cfg)};
    if (n == "a_dagger") return expect_args(req, 0), std::pair{*d, make_a_dagger(cfg)};
    if (n == "U") return expect_args(req, 0), std::pair{*d, make_U(cfg)};
    if (n == "V") return expect_args(req, 0), std::pair{*d, make_V(cfg)};
    if (n == "X") return expect_args(req, 0), std::pair{*d, position_X(cfg)};
    if (n == "P") return expect_args(req, 1), std::pair{*d, proj_P(cfg, arg(0))};
    if (n == "R") return expect_args(req, 1), std::pair{*d, proj_R(cfg, arg(0))};
    if (n == "sP") return expect_args(req, 1), std::pair{*d, proj_scriptP(cfg, req.args[0])};
    if (n == "sR") return expect_args(req, 1), std::pair{*d, proj_scriptR(cfg, req.args[0])};
    if (n == "e") {
        expect_args(req, 2);
        if (rep == "shift") return {*d, matrix_unit_shift(cfg, arg(0), arg(1))};
        if (rep == "schwinger") return {*d, matrix_unit_schwinger(cfg, arg(0), arg(1))};
        throw UsageError("--rep must be shift or schwinger, got '" + rep + "'");
    }
    throw UsageError("unknown operator '" + n +
                     "' (known: a, a_dagger, U, V, X, P:n, R:n, sP:n, sR:n, e:m,n, delta_a_dagger:d1,d2, "
                     "delta_U:d1,d2, flatten:d1,d2)");
}

template <ScalarField F>
std::string emit(const std::string& op_text, std::optional<int> d, const mpq_class& beta, const std::string& rep,
                 const std::string& format) {
    const auto req = parse_op(op_text);
    const auto [dd, m] = build_operator<F>(req, d, beta, rep);
    if (format == "text") return matrix_dump_text(dd, op_text, m);
    return matrix_dump_json(dd, op_text, m).dump(2) + "\n";
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open output file '" + path + "'");
    f << text;
}

}  // namespace detail

inline std::vector<std::string> resolve_suites(const std::string& text) {
    std::vector<std::string> out;
    for (const auto& s : split(text, ',')) {
        if (s == "all") return {kSuiteNames.begin(), kSuiteNames.end()};
        if (!is_known_suite(s)) throw UsageError("unknown suite '" + s + "'");
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    }
    if (out.empty()) throw UsageError("no suites selected");
    // report order follows the catalogue, not the command line
    std::vector<std::string> ordered;
    for (const auto name : kSuiteNames)
        if (std::find(out.begin(), out.end(), name) != out.end()) ordered.emplace_back(name);
    return ordered;
}

/// Run the verifier; returns the process exit status.
inline int cmd_verify(const RunSpec& spec, std::ostream& out) {
    const auto runs = spec.mode == "exact" ? detail::run_verify<CycloField>(spec) : detail::run_verify<ComplexField>(spec);
    const std::string text = spec.format == "text" ? report_to_text(runs, spec.deterministic)
                                                   : report_to_json(runs, spec.deterministic).dump(2) + "\n";
    detail::write_output(spec.output, text, out);
    for (const auto& r : runs)
        if (!r.all_passed()) return kExitFail;
    return kExitPass;
}

/// Entry point shared by the executable and the tests. args excludes argv[0].
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Build and verify the clock-and-shift and almost-unitary shift algebras on finite lattices",
                 "qudit-algebra"};
    app.require_subcommand(1);

    std::string d_text, suites_text = "all", mode = "exact", beta_text = "1", tensor_text, format = "json", output,
                          fault_text;
    double tolerance = 1e-10;
    std::uint64_t seed = 0;
    bool deterministic = false;

    auto* verify = app.add_subcommand("verify", "Run identity suites and write a report");
    verify->add_option("--d", d_text, "Lattice size(s): 5, 2..8 or a comma list")->required();
    verify->add_option("--suites", suites_text, "Comma list of suites, or all")->capture_default_str();
    verify->add_option("--mode", mode, "exact or float")->capture_default_str();
    verify->add_option("--tol", tolerance, "Float-mode tolerance (absolute, entry-wise)")->capture_default_str();
    verify->add_option("--beta", beta_text, "Grid spacing, e.g. 1, 1/2, 0.25")->capture_default_str();
    verify->add_option("--tensor", tensor_text, "Product lattices d1xd2, comma separated (tensor suite)");
    verify->add_option("--format", format, "json or text")->capture_default_str();
    verify->add_option("--output", output, "Output file (default: standard output)");
    verify->add_option("--seed", seed, "Seed for sampled matrix-unit quadruples")->capture_default_str();
    verify->add_flag("--deterministic", deterministic, "Omit timings so repeated runs are byte-identical");
    verify->add_option("--inject-fault", fault_text, "Corrupt a constructor on purpose: clock-q-squared")
        ->group("Testing");

    std::string op, rep = "shift";
    auto* emit = app.add_subcommand("emit", "Write one operator matrix");
    auto* emit_d = emit->add_option("--d", d_text, "Lattice size");
    emit->add_option("--op", op,
                     "a, a_dagger, U, V, X, P:n, R:n, sP:n, sR:n, e:m,n, delta_a_dagger:d1,d2, delta_U:d1,d2, "
                     "flatten:d1,d2")
        ->required();
    emit->add_option("--mode", mode, "exact or float")->capture_default_str();
    emit->add_option("--beta", beta_text, "Grid spacing (for X)")->capture_default_str();
    emit->add_option("--rep", rep, "Matrix-unit construction: shift or schwinger")->capture_default_str();
    emit->add_option("--format", format, "json or text")->capture_default_str();
    emit->add_option("--output", output, "Output file (default: standard output)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (mode != "exact" && mode != "float") throw UsageError("--mode must be exact or float, got '" + mode + "'");
        if (format != "json" && format != "text") throw UsageError("--format must be json or text");
        const mpq_class beta = parse_rational(beta_text);
        if (sgn(beta) <= 0) throw ConfigError("grid spacing beta must be > 0");

        if (verify->parsed()) {
            RunSpec spec;
            spec.ds = parse_d_values(d_text);
            spec.suites = resolve_suites(suites_text);
            spec.mode = mode;
            if (mode == "float" && !(tolerance > 0.0)) throw ConfigError("--tol must be > 0 in float mode");
            spec.tolerance = tolerance;
            spec.beta = beta;
            if (!tensor_text.empty()) spec.tensor_pairs = parse_tensor_pairs(tensor_text);
            spec.format = format;
            spec.output = output;
            spec.seed = seed;
            spec.deterministic = deterministic;
            spec.fault = parse_fault(fault_text);
            return cmd_verify(spec, out);
        }

        std::optional<int> d;
        if (emit_d->count() > 0) {
            d = parse_int(d_text, "d");
            if (*d < 2) throw ConfigError("lattice size d must be >= 2 (got d = " + std::to_string(*d) + ")");
        }
        const std::string text = mode == "exact" ? detail::emit<CycloField>(op, d, beta, rep, format)
                                                 : detail::emit<ComplexField>(op, d, beta, rep, format);
        detail::write_output(output, text, out);
        return kExitPass;
    } catch (const std::invalid_argument& e) {  // usage, config, unknown suite, dimension
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {  // operator index out of range
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace qudit::cli

#endif  // QUDIT_CLI_HPP
