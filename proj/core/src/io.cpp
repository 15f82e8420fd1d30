// Copyright 2026 The extremal-states Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "extremal/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "extremal/eigh.hpp"

namespace extremal {

namespace {

using nlohmann::json;

constexpr const char* kSchemaVersion = "v1";

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& j, const char* what) {
    if (!j.is_array() || j.empty()) {
        throw FileFormatError(std::string(what) + ": expected a non-empty array of rows");
    }
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = j[i];
        if (!row.is_array() || row.size() != cols) {
            throw FileFormatError(std::string(what) + ": ragged rows");
        }
        for (std::size_t jj = 0; jj < cols; ++jj) {
            const json& cell = row[jj];
            if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
                !cell[1].is_number()) {
                throw FileFormatError(std::string(what) +
                                      ": entries must be [re, im] number pairs");
            }
            m(i, jj) = Complex(cell[0].get<double>(), cell[1].get<double>());
        }
    }
    return m;
}

json parse_text(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw FileFormatError(std::string(what) + ": not valid JSON");
    }
    return j;
}

json read_json(const std::filesystem::path& path, const char* what) {
    std::ifstream in(path);
    if (!in) {
        throw FileFormatError(std::string(what) + ": cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_text(buffer.str(), what);
}

void write_text(const std::filesystem::path& path, const std::string& text, const char* what) {
    std::ofstream out(path);
    if (!out) {
        throw FileFormatError(std::string(what) + ": cannot open " + path.string() +
                              " for writing");
    }
    out << text << '\n';
    if (!out) {
        throw FileFormatError(std::string(what) + ": write failed for " + path.string());
    }
}

void require_version(const json& j, const char* what) {
    if (!j.is_object() || !j.contains("version") || j["version"] != kSchemaVersion) {
        throw FileFormatError(std::string(what) + ": missing or unsupported schema version");
    }
}

double number_field(const json& j, const char* key, const char* what) {
    if (!j.contains(key) || !j[key].is_number()) {
        throw FileFormatError(std::string(what) + ": missing numeric field '" + key + "'");
    }
    return j[key].get<double>();
}

std::size_t count_field(const json& j, const char* key, const char* what) {
    if (!j.contains(key) || !j[key].is_number_unsigned()) {
        throw FileFormatError(std::string(what) + ": missing count field '" + key + "'");
    }
    return j[key].get<std::size_t>();
}

HermitianMatrix hermitian_from_json(const json& j, const char* what) {
    const Matrix m = matrix_from_json(j, what);
    if (!m.is_square() || !m.is_hermitian(1e-12 * std::max(1.0, m.max_abs()))) {
        throw FileFormatError(std::string(what) + ": matrix is not hermitian");
    }
    return HermitianMatrix::symmetrized(m);
}

const char* tag_name(ExtremalityVerdict::Tag tag) {
    switch (tag) {
        case ExtremalityVerdict::Tag::Extremal:
            return "extremal";
        case ExtremalityVerdict::Tag::NotExtremal:
            return "not_extremal";
        case ExtremalityVerdict::Tag::NotInC:
            return "not_in_c";
    }
    return "unknown";
}

ExtremalityVerdict::Tag tag_from_name(const std::string& name) {
    if (name == "extremal") {
        return ExtremalityVerdict::Tag::Extremal;
    }
    if (name == "not_extremal") {
        return ExtremalityVerdict::Tag::NotExtremal;
    }
    if (name == "not_in_c") {
        return ExtremalityVerdict::Tag::NotInC;
    }
    throw FileFormatError("certificate: unknown verdict '" + name + "'");
}

const char* route_name(ExtremalityVerdict::Route route) {
    switch (route) {
        case ExtremalityVerdict::Route::DSpace:
            return "d_space";
        case ExtremalityVerdict::Route::FullRankShortcut:
            return "full_rank_shortcut";
        case ExtremalityVerdict::Route::Singleton:
            return "singleton";
    }
    return "unknown";
}

ExtremalityVerdict::Route route_from_name(const std::string& name) {
    if (name == "d_space") {
        return ExtremalityVerdict::Route::DSpace;
    }
    if (name == "full_rank_shortcut") {
        return ExtremalityVerdict::Route::FullRankShortcut;
    }
    if (name == "singleton") {
        return ExtremalityVerdict::Route::Singleton;
    }
    throw FileFormatError("certificate: unknown route '" + name + "'");
}

Violation::Kind violation_kind_from_name(const std::string& name) {
    for (Violation::Kind kind :
         {Violation::Kind::NotHermitian, Violation::Kind::NotPositiveSemidefinite,
          Violation::Kind::Trace, Violation::Kind::Marginal1, Violation::Kind::Marginal2}) {
        if (name == violation_kind_name(kind)) {
            return kind;
        }
    }
    throw FileFormatError("certificate: unknown violation kind '" + name + "'");
}

json state_file_to_json(const StateFile& file) {
    json j;
    j["version"] = kSchemaVersion;
    j["d1"] = file.dims.d1;
    j["d2"] = file.dims.d2;
    j["rho"] = matrix_to_json(file.rho);
    if (file.rho1) {
        j["rho1"] = matrix_to_json(*file.rho1);
    }
    if (file.rho2) {
        j["rho2"] = matrix_to_json(*file.rho2);
    }
    return j;
}

StateFile state_file_from_json(const json& j) {
    const char* what = "state file";
    require_version(j, what);
    const DimensionPair dims(count_field(j, "d1", what), count_field(j, "d2", what));
    if (!j.contains("rho")) {
        throw FileFormatError("state file: missing 'rho'");
    }
    Matrix rho = matrix_from_json(j["rho"], "state file rho");
    if (rho.rows() != dims.n() || rho.cols() != dims.n()) {
        throw FileFormatError("state file: rho shape does not match d1*d2");
    }
    StateFile out{dims, std::move(rho), std::nullopt, std::nullopt};
    if (j.contains("rho1")) {
        Matrix m = matrix_from_json(j["rho1"], "state file rho1");
        if (m.rows() != dims.d1 || m.cols() != dims.d1) {
            throw FileFormatError("state file: rho1 shape does not match d1");
        }
        out.rho1 = std::move(m);
    }
    if (j.contains("rho2")) {
        Matrix m = matrix_from_json(j["rho2"], "state file rho2");
        if (m.rows() != dims.d2 || m.cols() != dims.d2) {
            throw FileFormatError("state file: rho2 shape does not match d2");
        }
        out.rho2 = std::move(m);
    }
    return out;
}

json certificate_to_json(const Certificate& cert) {
    json j;
    j["version"] = kSchemaVersion;
    j["d1"] = cert.dims.d1;
    j["d2"] = cert.dims.d2;
    j["verdict"] = tag_name(cert.verdict.tag);
    j["route"] = route_name(cert.verdict.route);
    j["rank"] = cert.verdict.rank;
    j["rank_bound"] = rank_bound(cert.dims);
    j["tolerances"] = {{"membership", cert.membership_tol}, {"rank", cert.rank_tol}};
    j["rho1"] = matrix_to_json(cert.rho1.matrix());
    j["rho2"] = matrix_to_json(cert.rho2.matrix());
    if (cert.verdict.report) {
        j["k_squared"] = cert.verdict.report->k_squared;
        j["dim_d"] = cert.verdict.report->dim_d;
        j["dperp_dim"] = cert.verdict.report->dperp_dim;
    }
    if (cert.verdict.witness) {
        const NonExtremalityWitness& w = *cert.verdict.witness;
        j["witness"] = {{"l", matrix_to_json(w.L.matrix())},
                        {"epsilon", w.epsilon},
                        {"rho_plus", matrix_to_json(w.rho_plus.rho)},
                        {"rho_minus", matrix_to_json(w.rho_minus.rho)}};
    }
    if (cert.verdict.violation) {
        j["violation"] = {{"kind", violation_kind_name(cert.verdict.violation->kind)},
                          {"magnitude", cert.verdict.violation->magnitude},
                          {"message", cert.verdict.violation->message}};
    }
    return j;
}

Certificate certificate_from_json(const json& j) {
    const char* what = "certificate";
    require_version(j, what);
    const DimensionPair dims(count_field(j, "d1", what), count_field(j, "d2", what));
    if (!j.contains("verdict") || !j["verdict"].is_string() || !j.contains("tolerances")) {
        throw FileFormatError("certificate: missing verdict or tolerances");
    }

    ExtremalityVerdict verdict;
    verdict.tag = tag_from_name(j["verdict"].get<std::string>());
    if (j.contains("route") && j["route"].is_string()) {
        verdict.route = route_from_name(j["route"].get<std::string>());
    }
    verdict.rank = count_field(j, "rank", what);
    if (j.contains("dim_d")) {
        PerturbationSpaceReport report;
        report.k = verdict.rank;
        report.dim_d = count_field(j, "dim_d", what);
        report.k_squared = count_field(j, "k_squared", what);
        report.dperp_dim = count_field(j, "dperp_dim", what);
        verdict.report = std::move(report);
    }
    if (j.contains("witness")) {
        const json& w = j["witness"];
        Matrix plus = matrix_from_json(w.at("rho_plus"), "certificate witness rho_plus");
        Matrix minus = matrix_from_json(w.at("rho_minus"), "certificate witness rho_minus");
        if (plus.rows() != dims.n() || minus.rows() != dims.n()) {
            throw FileFormatError("certificate: witness state shape mismatch");
        }
        verdict.witness = NonExtremalityWitness{
            hermitian_from_json(w.at("l"), "certificate witness l"),
            number_field(w, "epsilon", "certificate witness"),
            CoupledState(dims, std::move(plus)), CoupledState(dims, std::move(minus))};
    }
    if (j.contains("violation")) {
        const json& v = j["violation"];
        verdict.violation =
            Violation{violation_kind_from_name(v.at("kind").get<std::string>()),
                      number_field(v, "magnitude", "certificate violation"),
                      v.at("message").get<std::string>()};
    }

    Certificate cert{dims,
                     number_field(j["tolerances"], "membership", "certificate tolerances"),
                     number_field(j["tolerances"], "rank", "certificate tolerances"),
                     hermitian_from_json(j.at("rho1"), "certificate rho1"),
                     hermitian_from_json(j.at("rho2"), "certificate rho2"),
                     std::move(verdict)};
    if (cert.rho1.order() != dims.d1 || cert.rho2.order() != dims.d2) {
        throw FileFormatError("certificate: marginal shapes do not match (d1, d2)");
    }
    return cert;
}

}  // namespace

StateFile load_state_file(const std::filesystem::path& path) {
    return state_file_from_json(read_json(path, "state file"));
}

StateFile parse_state_file(const std::string& text) {
    return state_file_from_json(parse_text(text, "state file"));
}

void save_state_file(const std::filesystem::path& path, const StateFile& file) {
    write_text(path, state_file_to_json(file).dump(2), "state file");
}

std::string state_file_to_string(const StateFile& file) {
    return state_file_to_json(file).dump(2);
}

MarginalPair resolve_marginals(const StateFile& file, double tol) {
    // A valid state always yields valid computed marginals, so failures on
    // the defaulted path trace back to rho itself; say so.
    if (!file.rho1 || !file.rho2) {
        const Matrix& rho = file.rho;
        if (!rho.is_hermitian(tol) || std::abs(rho.trace() - Complex(1.0, 0.0)) > tol ||
            !is_psd(HermitianMatrix::symmetrized(rho), tol)) {
            throw FileFormatError(
                "state file: rho is not a density matrix within tolerance and no target "
                "marginals were declared; declare rho1/rho2 (or pass --marginals) to get a "
                "membership verdict instead");
        }
    }
    Matrix m1 = file.rho1 ? *file.rho1 : partial_trace_over_2(file.rho, file.dims);
    Matrix m2 = file.rho2 ? *file.rho2 : partial_trace_over_1(file.rho, file.dims);
    if (!m1.is_hermitian(tol) || !m2.is_hermitian(tol)) {
        throw FileFormatError("marginals: matrix is not hermitian within tolerance");
    }
    return MarginalPair(HermitianMatrix::symmetrized(m1), HermitianMatrix::symmetrized(m2), tol);
}

MarginalPair load_marginals_file(const std::filesystem::path& path, double tol) {
    const json j = read_json(path, "marginals file");
    require_version(j, "marginals file");
    if (!j.contains("rho1") || !j.contains("rho2")) {
        throw FileFormatError("marginals file: needs both rho1 and rho2");
    }
    return MarginalPair(hermitian_from_json(j["rho1"], "marginals rho1"),
                        hermitian_from_json(j["rho2"], "marginals rho2"), tol);
}

Certificate make_certificate(const DimensionPair& dims,
                             const MarginalPair& marginals,
                             const ExtremalityVerdict& verdict,
                             const CertifierOptions& opts) {
    Certificate cert{dims, opts.membership_tol, opts.rank_tol,
                     marginals.rho1, marginals.rho2, verdict};
    if (cert.verdict.report) {
        cert.verdict.report->generators.clear();  // not persisted
    }
    return cert;
}

void save_certificate(const std::filesystem::path& path, const Certificate& cert) {
    write_text(path, certificate_to_json(cert).dump(2), "certificate");
}

Certificate load_certificate(const std::filesystem::path& path) {
    return certificate_from_json(read_json(path, "certificate"));
}

std::string certificate_to_string(const Certificate& cert) {
    return certificate_to_json(cert).dump(2);
}

Certificate parse_certificate(const std::string& text) {
    return certificate_from_json(parse_text(text, "certificate"));
}

std::vector<std::string> verify_certificate(const Certificate& cert, const StateFile& input) {
    std::vector<std::string> issues;
    auto complain = [&issues](const std::string& msg) { issues.push_back(msg); };

    if (input.dims != cert.dims) {
        complain("input dimensions do not match the certificate");
        return issues;
    }

    CertifierOptions opts;
    opts.membership_tol = cert.membership_tol;
    opts.rank_tol = cert.rank_tol;

    CoupledState state(cert.dims, input.rho);
    std::optional<MarginalPair> marginals;
    try {
        marginals.emplace(cert.rho1, cert.rho2, cert.membership_tol);
    } catch (const std::invalid_argument& e) {
        complain(std::string("certificate marginals are not valid states: ") + e.what());
        return issues;
    }

    ExtremalityVerdict fresh = check_extremal(state, *marginals, opts);
    if (fresh.tag != cert.verdict.tag) {
        complain(std::string("verdict mismatch: certificate says ") + tag_name(cert.verdict.tag) +
                 ", recomputation says " + tag_name(fresh.tag));
    }

    switch (cert.verdict.tag) {
        case ExtremalityVerdict::Tag::Extremal: {
            if (fresh.rank != cert.verdict.rank) {
                complain("rank mismatch on extremal verdict");
            }
            const std::size_t bound = rank_bound(cert.dims);
            if (cert.verdict.rank > bound) {
                complain("extremal rank exceeds the rank bound");
            }
            if (cert.verdict.report && fresh.report &&
                cert.verdict.report->dim_d != fresh.report->dim_d) {
                complain("dim D mismatch on extremal verdict");
            }
            break;
        }
        case ExtremalityVerdict::Tag::NotExtremal: {
            if (!cert.verdict.witness) {
                complain("not_extremal certificate carries no witness");
                break;
            }
            const NonExtremalityWitness& w = *cert.verdict.witness;
            Matrix average = w.rho_plus.rho + w.rho_minus.rho;
            average *= Complex(0.5, 0.0);
            if ((average - input.rho).max_abs() > cert.membership_tol) {
                complain("witness states do not average to the input state");
            }
            if ((w.rho_plus.rho - w.rho_minus.rho).max_abs() <= 1e-10) {
                complain("witness states are not distinct");
            }
            if (w.L.max_abs() == 0.0 || !(w.epsilon > 0.0)) {
                complain("witness direction or step is degenerate");
            }
            if (validate_membership(w.rho_plus, *marginals, cert.membership_tol)) {
                complain("witness state rho_plus is not in C");
            }
            if (validate_membership(w.rho_minus, *marginals, cert.membership_tol)) {
                complain("witness state rho_minus is not in C");
            }
            break;
        }
        case ExtremalityVerdict::Tag::NotInC: {
            if (!cert.verdict.violation) {
                complain("not_in_c certificate carries no violation");
                break;
            }
            auto violation = validate_membership(state, *marginals, cert.membership_tol);
            if (!violation) {
                complain("certificate claims a violation but the state validates");
            } else if (violation->kind != cert.verdict.violation->kind) {
                complain("violation kind mismatch");
            }
            break;
        }
    }
    return issues;
}

namespace {

json walk_result_to_json(const FacialWalkTrace& trace, const Certificate& final_cert) {
    json steps = json::array();
    for (const WalkStep& s : trace.steps) {
        steps.push_back({{"rank_before", s.rank_before},
                         {"t_star", s.t_star},
                         {"rank_after", s.rank_after}});
    }
    StateFile final_file{trace.final_state.dims, trace.final_state.rho,
                         final_cert.rho1.matrix(), final_cert.rho2.matrix()};
    json j;
    j["version"] = kSchemaVersion;
    j["start_rank"] = trace.start_rank;
    j["steps"] = std::move(steps);
    j["final_state"] = state_file_to_json(final_file);
    j["final_certificate"] = certificate_to_json(final_cert);
    return j;
}

}  // namespace

std::string walk_result_to_string(const FacialWalkTrace& trace, const Certificate& final_cert) {
    return walk_result_to_json(trace, final_cert).dump(2);
}

void save_walk_result(const std::filesystem::path& path,
                      const FacialWalkTrace& trace,
                      const Certificate& final_cert) {
    write_text(path, walk_result_to_json(trace, final_cert).dump(2), "walk result");
}

}  // namespace extremal
