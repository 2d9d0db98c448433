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
 * @file report.hpp
 * @brief JSON and text serialization of suite reports and operator dumps.
 *
 * Report document:
 *
 *   { "artifact": "qudit-algebra", "version": "...",
 *     "runs": [ { "d": int, "mode": "exact"|"float", "tolerance": number|null,
 *                 "suites": [ { "name", "passed", "failed",
 *                               "checks": [ { "name", "paper_ref", "indices",
 *                                             "pass", "max_residual" } ] } ] } ] }
 *
 * Tensor runs additionally carry "factors": [d1, d2]. Checks carry
 * "elapsed_ms" unless the report is deterministic.
 *
 * Matrix dump:
 *
 *   { "d": int, "dim": int, "mode": ..., "op": string, "entries": [[scalar]] }
 *
 * with scalar = {"num": [...], "den": [...]} (exact; coefficient i belongs to
 * q^i, q the primitive root of the dump's field, decimal strings) or
 * {"re": number, "im": number} (float).
 */

#ifndef QUDIT_REPORT_HPP
#define QUDIT_REPORT_HPP

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "identities.hpp"
#include "json.hpp"
#include "matrix.hpp"
#include "scalar.hpp"

namespace qudit {

inline constexpr const char* kArtifactName = "qudit-algebra";
inline constexpr const char* kArtifactVersion = "1.0.0";

using ordered_json = nlohmann::ordered_json;

/// One d (or one product lattice) worth of suite reports.
struct RunRecord {
    int d = 0;
    std::string mode;
    std::optional<double> tolerance;
    std::optional<std::pair<int, int>> factors;
    std::vector<SuiteReport> suites;

    bool all_passed() const {
        for (const auto& s : suites)
            if (!s.all_passed()) return false;
        return true;
    }
};

/// "0" for an exact zero, otherwise 17 significant digits.
inline std::string format_residual(double r) {
    if (r == 0.0) return "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", r);
    return buf;
}

inline ordered_json scalar_to_json(const CycloScalar& s) {
    ordered_json num = ordered_json::array(), den = ordered_json::array();
    for (const auto& c : s.coefficients()) {
        num.push_back(c.get_num().get_str());
        den.push_back(c.get_den().get_str());
    }
    return ordered_json{{"num", std::move(num)}, {"den", std::move(den)}};
}

inline ordered_json scalar_to_json(const std::complex<double>& s) {
    return ordered_json{{"re", s.real()}, {"im", s.imag()}};
}

inline std::string scalar_to_text(const CycloScalar& s) { return s.to_string(); }

inline std::string scalar_to_text(const std::complex<double>& s) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", s.real(), s.imag());
    return buf;
}

template <ScalarField F>
ordered_json matrix_dump_json(int d, const std::string& op, const OperatorMatrix<F>& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(scalar_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    ordered_json out;
    out["d"] = d;
    out["dim"] = m.dim();
    out["mode"] = F::mode_name;
    if constexpr (F::is_exact) out["conductor"] = m.field().conductor();
    out["op"] = op;
    out["entries"] = std::move(rows);
    return out;
}

/// One row per line, entries separated by " | ".
template <ScalarField F>
std::string matrix_dump_text(int d, const std::string& op, const OperatorMatrix<F>& m) {
    std::ostringstream os;
    os << "# op=" << op << " d=" << d << " dim=" << m.dim() << " mode=" << F::mode_name;
    if constexpr (F::is_exact) os << " q=exp(2 pi i/" << m.field().conductor() << ")";
    os << "\n";
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) {
            if (c > 0) os << " | ";
            os << scalar_to_text(m(r, c));
        }
        os << "\n";
    }
    return os.str();
}

inline ordered_json indices_to_json(const std::optional<Indices>& ix) {
    if (!ix) return nullptr;
    ordered_json obj = ordered_json::object();
    for (const auto& [k, v] : ix->values()) obj[k] = v;
    return obj;
}

inline ordered_json check_to_json(const CheckResult& r, bool deterministic) {
    ordered_json j;
    j["name"] = r.name;
    j["paper_ref"] = r.relation;
    j["indices"] = indices_to_json(r.indices);
    j["pass"] = r.pass;
    j["max_residual"] = format_residual(r.max_residual);
    if (!deterministic) j["elapsed_ms"] = static_cast<double>(r.elapsed.count()) / 1e6;
    return j;
}

inline ordered_json report_to_json(const std::vector<RunRecord>& runs, bool deterministic) {
    ordered_json doc;
    doc["artifact"] = kArtifactName;
    doc["version"] = kArtifactVersion;
    ordered_json jruns = ordered_json::array();
    for (const auto& run : runs) {
        ordered_json jr;
        jr["d"] = run.d;
        jr["mode"] = run.mode;
        jr["tolerance"] = run.tolerance ? ordered_json(*run.tolerance) : ordered_json(nullptr);
        if (run.factors) jr["factors"] = {run.factors->first, run.factors->second};
        ordered_json suites = ordered_json::array();
        for (const auto& s : run.suites) {
            ordered_json js;
            js["name"] = s.suite;
            js["passed"] = s.passed();
            js["failed"] = s.failed();
            ordered_json checks = ordered_json::array();
            for (const auto& r : s.results) checks.push_back(check_to_json(r, deterministic));
            js["checks"] = std::move(checks);
            suites.push_back(std::move(js));
        }
        jr["suites"] = std::move(suites);
        jruns.push_back(std::move(jr));
    }
    doc["runs"] = std::move(jruns);
    return doc;
}

/// One line per check: name, d, PASS/FAIL, residual.
inline std::string report_to_text(const std::vector<RunRecord>& runs, bool deterministic) {
    std::ostringstream os;
    std::size_t passed = 0, failed = 0;
    for (const auto& run : runs) {
        os << "# run d=" << run.d << " mode=" << run.mode;
        if (run.factors) os << " lattice=" << run.factors->first << "x" << run.factors->second;
        if (run.tolerance) os << " tolerance=" << format_residual(*run.tolerance);
        os << "\n";
        for (const auto& s : run.suites) {
            for (const auto& r : s.results) {
                os << r.name << " d=" << r.d << " " << (r.pass ? "PASS" : "FAIL")
                   << " residual=" << format_residual(r.max_residual);
                if (r.indices) os << " worst=" << r.indices->to_string();
                if (!deterministic) os << " elapsed_ms=" << static_cast<double>(r.elapsed.count()) / 1e6;
                os << "\n";
            }
            passed += s.passed();
            failed += s.failed();
        }
    }
    os << "# total checks=" << passed + failed << " passed=" << passed << " failed=" << failed << "\n";
    return os.str();
}

}  // namespace qudit

#endif  // QUDIT_REPORT_HPP
