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

#ifndef EXTREMAL_IO_HPP
#define EXTREMAL_IO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "extremal/certifier.hpp"
#include "extremal/sampler.hpp"
#include "extremal/state.hpp"

namespace extremal {

/// A file could not be read, was not valid JSON, or did not match the
/// schema. The CLI maps this to exit code 2.
struct FileFormatError : Error {
    using Error::Error;
};

/// On-disk description of a coupled state (schema "v1"): dimensions, the
/// n x n matrix as [re, im] pairs, and optionally declared target marginals.
struct StateFile {
    DimensionPair dims;
    Matrix rho;
    std::optional<Matrix> rho1;
    std::optional<Matrix> rho2;
};

StateFile load_state_file(const std::filesystem::path& path);
void save_state_file(const std::filesystem::path& path, const StateFile& file);
std::string state_file_to_string(const StateFile& file);
StateFile parse_state_file(const std::string& text);

/// Marginal targets for a loaded state: the declared rho1/rho2 when present,
/// otherwise the computed partial traces of rho.
MarginalPair resolve_marginals(const StateFile& file, double tol);

/// Standalone marginal-pair file ({"version": "v1", "rho1": ..., "rho2": ...}).
MarginalPair load_marginals_file(const std::filesystem::path& path, double tol);

/// Self-contained record of a verdict: everything needed to re-check the
/// claims given only the certified input state.
struct Certificate {
    DimensionPair dims;
    double membership_tol;
    double rank_tol;
    HermitianMatrix rho1;  // targets the verdict was computed against
    HermitianMatrix rho2;
    ExtremalityVerdict verdict;  // report generators are not persisted
};

Certificate make_certificate(const DimensionPair& dims,
                             const MarginalPair& marginals,
                             const ExtremalityVerdict& verdict,
                             const CertifierOptions& opts);

void save_certificate(const std::filesystem::path& path, const Certificate& cert);
Certificate load_certificate(const std::filesystem::path& path);
std::string certificate_to_string(const Certificate& cert);
Certificate parse_certificate(const std::string& text);

/// Re-check every claim a certificate makes about a state: the verdict tag
/// and rank data against a fresh computation, witness invariants (average,
/// membership of both halves, distinctness), violation reproduction, and the
/// rank bound on extremal verdicts. Returns human-readable discrepancies;
/// empty means verified.
std::vector<std::string> verify_certificate(const Certificate& cert, const StateFile& input);

/// Serialized extremize output: walk trace, final state, final certificate.
std::string walk_result_to_string(const FacialWalkTrace& trace, const Certificate& final_cert);
void save_walk_result(const std::filesystem::path& path,
                      const FacialWalkTrace& trace,
                      const Certificate& final_cert);

}  // namespace extremal

#endif
