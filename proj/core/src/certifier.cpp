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

#include "extremal/certifier.hpp"

#include <cmath>
#include <sstream>

#include "extremal/eigh.hpp"
#include "extremal/real_span.hpp"

namespace extremal {

namespace {

std::string format_violation(const char* what, double magnitude) {
    std::ostringstream oss;
    oss << what << " mismatch, magnitude " << magnitude;
    return oss.str();
}

}  // namespace

MarginalPair::MarginalPair(HermitianMatrix r1, HermitianMatrix r2, double tol)
    : rho1(std::move(r1)), rho2(std::move(r2)) {
    for (const HermitianMatrix* rho : {&rho1, &rho2}) {
        if (rho->order() < 1) {
            throw std::invalid_argument("MarginalPair: marginals must have order >= 1");
        }
        if (!is_psd(*rho, tol)) {
            throw std::invalid_argument("MarginalPair: marginal is not PSD within tolerance");
        }
        if (std::abs(rho->trace() - 1.0) > tol) {
            throw std::invalid_argument("MarginalPair: marginal trace is not 1 within tolerance");
        }
    }
}

const char* violation_kind_name(Violation::Kind kind) {
    switch (kind) {
        case Violation::Kind::NotHermitian:
            return "hermiticity";
        case Violation::Kind::NotPositiveSemidefinite:
            return "positivity";
        case Violation::Kind::Trace:
            return "trace";
        case Violation::Kind::Marginal1:
            return "marginal-1";
        case Violation::Kind::Marginal2:
            return "marginal-2";
    }
    return "unknown";
}

std::optional<Violation> validate_membership(const CoupledState& state,
                                             const MarginalPair& marginals,
                                             double tol) {
    const DimensionPair dims = state.dims;
    if (marginals.rho1.order() != dims.d1 || marginals.rho2.order() != dims.d2) {
        throw DimensionError("validate_membership: marginal orders do not match (d1, d2)");
    }

    double herm_err = 0.0;
    for (std::size_t i = 0; i < state.rho.rows(); ++i) {
        for (std::size_t j = i; j < state.rho.cols(); ++j) {
            herm_err = std::max(herm_err, std::abs(state.rho(i, j) - std::conj(state.rho(j, i))));
        }
    }
    if (herm_err > tol) {
        return Violation{Violation::Kind::NotHermitian, herm_err,
                         format_violation(violation_kind_name(Violation::Kind::NotHermitian), herm_err)};
    }

    const HermitianMatrix h = HermitianMatrix::symmetrized(state.rho);
    if (!is_psd(h, tol)) {
        const double lambda_min = min_eigenvalue(h);
        const double mag = std::max(0.0, -lambda_min);
        return Violation{Violation::Kind::NotPositiveSemidefinite, mag,
                         format_violation(violation_kind_name(Violation::Kind::NotPositiveSemidefinite), mag)};
    }

    const double trace_err = std::abs(state.rho.trace() - Complex(1.0, 0.0));
    if (trace_err > tol) {
        return Violation{Violation::Kind::Trace, trace_err,
                         format_violation(violation_kind_name(Violation::Kind::Trace), trace_err)};
    }

    const double m1_err = (partial_trace_over_2(state.rho, dims) - marginals.rho1.matrix()).max_abs();
    if (m1_err > tol) {
        return Violation{Violation::Kind::Marginal1, m1_err,
                         format_violation(violation_kind_name(Violation::Kind::Marginal1), m1_err)};
    }

    const double m2_err = (partial_trace_over_1(state.rho, dims) - marginals.rho2.matrix()).max_abs();
    if (m2_err > tol) {
        return Violation{Violation::Kind::Marginal2, m2_err,
                         format_violation(violation_kind_name(Violation::Kind::Marginal2), m2_err)};
    }
    return std::nullopt;
}

std::vector<HermitianMatrix> perturbation_generators(const BlockDecomposition& dec,
                                                     const DimensionPair& dims) {
    if (dims.n() != dec.n) {
        throw DimensionError("perturbation_generators: dims inconsistent with decomposition");
    }
    const std::size_t k = dec.k;
    const std::size_t n = dec.n;
    const Matrix a_dag = dec.A.adjoint();

    std::vector<HermitianMatrix> generators;
    generators.reserve(dims.d1 * dims.d1 + dims.d2 * dims.d2);

    auto compress = [&](const Matrix& op) {
        // [I_k | A] Y [I_k ; A^dagger] for Y = sigma op sigma^-1, written on
        // the permuted block partition as Y11 + Y12 A^dag + A Y21 + A Y22 A^dag.
        const Matrix y = dec.perm.conjugate(op);
        Matrix y11(k, k), y12(k, n - k), y21(n - k, k), y22(n - k, n - k);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i < k && j < k) {
                    y11(i, j) = y(i, j);
                } else if (i < k) {
                    y12(i, j - k) = y(i, j);
                } else if (j < k) {
                    y21(i - k, j) = y(i, j);
                } else {
                    y22(i - k, j - k) = y(i, j);
                }
            }
        }
        Matrix m = y11;
        if (n > k) {
            m += y12 * a_dag;
            m += dec.A * y21;
            m += dec.A * (y22 * a_dag);
        }
        generators.push_back(HermitianMatrix::symmetrized(m));
    };

    const Matrix eye1 = Matrix::identity(dims.d1);
    const Matrix eye2 = Matrix::identity(dims.d2);
    for (const HermitianMatrix& x1 : hermitian_basis(dims.d1)) {
        compress(kron(x1.matrix(), eye2));
    }
    for (const HermitianMatrix& x2 : hermitian_basis(dims.d2)) {
        compress(kron(eye1, x2.matrix()));
    }
    return generators;
}

DSpace d_space_rank(const std::vector<HermitianMatrix>& generators, double rank_tol) {
    if (generators.empty()) {
        throw std::invalid_argument("d_space_rank: no generators");
    }
    const std::size_t k = generators.front().order();
    std::vector<std::vector<double>> rows;
    rows.reserve(generators.size());
    for (const HermitianMatrix& g : generators) {
        if (g.order() != k) {
            throw DimensionError("d_space_rank: generators of unequal order");
        }
        rows.push_back(vec_hermitian(g));
    }
    const SpanAnalysis span = analyze_row_span(rows, k * k, rank_tol);

    DSpace out;
    out.dim_d = span.rank;
    out.dperp_basis.reserve(span.null_basis.size());
    for (const auto& coords : span.null_basis) {
        out.dperp_basis.push_back(unvec_hermitian(coords, k));
    }
    return out;
}

NonExtremalityWitness make_witness(const CoupledState& state,
                                   const BlockDecomposition& dec,
                                   const HermitianMatrix& l,
                                   double tol) {
    if (l.order() != dec.k) {
        throw DimensionError("make_witness: direction order != decomposition rank");
    }
    if (l.max_abs() == 0.0) {
        throw DirectionError("make_witness: zero perturbation direction");
    }

    const HermitianMatrix delta = lift_through(dec, l);
    const Matrix delta_m = delta.matrix();
    const double leak_tol = tol * std::max(1.0, delta.max_abs());
    const double leak1 = partial_trace_over_2(delta_m, state.dims).max_abs();
    const double leak2 = partial_trace_over_1(delta_m, state.dims).max_abs();
    if (leak1 > leak_tol || leak2 > leak_tol) {
        throw DirectionError("make_witness: lifted direction leaks into the marginals");
    }

    const double lambda_min = min_eigenvalue(dec.K);
    if (!(lambda_min > 0.0)) {
        throw DecompositionError("make_witness: decomposition block is not strictly PD");
    }
    const double epsilon = 0.5 * lambda_min / spectral_norm(l);

    Matrix plus = state.rho;
    Matrix minus = state.rho;
    plus += epsilon * delta_m;
    minus -= epsilon * delta_m;
    return NonExtremalityWitness{l, epsilon, CoupledState(state.dims, std::move(plus)),
                                 CoupledState(state.dims, std::move(minus))};
}

namespace {

// sigma (L1 (x) L2) sigma^-1 for L1, L2 the first traceless diagonal units;
// the witness direction behind the full-rank shortcut.
HermitianMatrix full_rank_direction(const BlockDecomposition& dec, const DimensionPair& dims) {
    Matrix l1 = Matrix::zero(dims.d1, dims.d1);
    l1(0, 0) = 1.0;
    l1(1, 1) = -1.0;
    Matrix l2 = Matrix::zero(dims.d2, dims.d2);
    l2(0, 0) = 1.0;
    l2(1, 1) = -1.0;
    return HermitianMatrix::symmetrized(dec.perm.conjugate(kron(l1, l2)));
}

PerturbationSpaceReport build_report(const BlockDecomposition& dec,
                                     std::vector<HermitianMatrix> generators,
                                     const DSpace& dspace) {
    PerturbationSpaceReport report;
    report.k = dec.k;
    report.generators = std::move(generators);
    report.dim_d = dspace.dim_d;
    report.k_squared = dec.k * dec.k;
    report.dperp_dim = dspace.dperp_basis.size();
    return report;
}

}  // namespace

ExtremalityVerdict check_extremal(const CoupledState& state,
                                  const MarginalPair& marginals,
                                  const CertifierOptions& opts) {
    ExtremalityVerdict verdict;

    if (auto violation = validate_membership(state, marginals, opts.membership_tol)) {
        verdict.violation = std::move(violation);
        return verdict;
    }

    const DimensionPair dims = state.dims;
    const HermitianMatrix h = HermitianMatrix::symmetrized(state.rho);
    const std::size_t rank = rank_eps(h, opts.rank_tol);
    verdict.rank = rank;

    // Both marginals pure: C(rho1, rho2) is the singleton {rho1 (x) rho2},
    // whose only member is trivially extreme. The D-space arithmetic is
    // bypassed on purpose; the report records the conclusion.
    if (rank_eps(marginals.rho1, opts.rank_tol) == 1 &&
        rank_eps(marginals.rho2, opts.rank_tol) == 1) {
        verdict.tag = ExtremalityVerdict::Tag::Extremal;
        verdict.route = ExtremalityVerdict::Route::Singleton;
        PerturbationSpaceReport report;
        report.k = rank;
        report.dim_d = rank * rank;
        report.k_squared = rank * rank;
        report.dperp_dim = 0;
        verdict.report = std::move(report);
        return verdict;
    }

    // Nonsingular states are never extreme once both factors admit traceless
    // directions; with d_i = 1 the criterion does not apply (a full-rank
    // member can be the whole set), so fall through to the D-space test.
    if (opts.full_rank_shortcut && dims.n() > 1 && rank == dims.n() && dims.d1 >= 2 &&
        dims.d2 >= 2) {
        BlockDecomposition dec = block_decompose(h, opts.rank_tol);
        const HermitianMatrix direction = full_rank_direction(dec, dims);
        verdict.tag = ExtremalityVerdict::Tag::NotExtremal;
        verdict.route = ExtremalityVerdict::Route::FullRankShortcut;
        verdict.witness = make_witness(state, dec, direction, opts.membership_tol);
        if (opts.always_analyze) {
            auto generators = perturbation_generators(dec, dims);
            const DSpace dspace = d_space_rank(generators, opts.rank_tol);
            verdict.report = build_report(dec, std::move(generators), dspace);
        }
        return verdict;
    }

    BlockDecomposition dec = block_decompose(h, opts.rank_tol);
    auto generators = perturbation_generators(dec, dims);
    const DSpace dspace = d_space_rank(generators, opts.rank_tol);
    const bool extremal = dspace.dim_d == dec.k * dec.k;
    verdict.report = build_report(dec, std::move(generators), dspace);
    if (extremal) {
        verdict.tag = ExtremalityVerdict::Tag::Extremal;
    } else {
        verdict.tag = ExtremalityVerdict::Tag::NotExtremal;
        verdict.witness = make_witness(state, dec, dspace.dperp_basis.front(), opts.membership_tol);
    }
    return verdict;
}

bool oracle_extremal(const CoupledState& state,
                     const MarginalPair& marginals,
                     const CertifierOptions& opts) {
    if (auto violation = validate_membership(state, marginals, opts.membership_tol)) {
        throw MembershipError("oracle_extremal: " + violation->message);
    }
    const DimensionPair dims = state.dims;
    const std::size_t n = dims.n();

    const HermitianMatrix h = HermitianMatrix::symmetrized(state.rho);
    const auto eig = eigh(h);
    double max_abs_lambda = 0.0;
    for (double lambda : eig.eigenvalues) {
        max_abs_lambda = std::max(max_abs_lambda, std::abs(lambda));
    }
    const double threshold = opts.rank_tol * std::max(1.0, max_abs_lambda);

    std::vector<std::size_t> kept;
    for (std::size_t m = 0; m < n; ++m) {
        if (eig.eigenvalues[m] > threshold) {
            kept.push_back(m);
        }
    }
    const std::size_t k = kept.size();
    Matrix s(n, k);
    for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t i = 0; i < n; ++i) {
            s(i, c) = eig.eigenvectors(i, kept[c]);
        }
    }
    const Matrix s_dag = s.adjoint();

    // Constraint matrix of the homogeneous system Tr_2(S L S^dag) = 0,
    // Tr_1(S L S^dag) = 0 over hermitian k x k L in real coordinates; one
    // row per real marginal coordinate, one column per basis element of L.
    const auto basis = hermitian_basis(k);
    const std::size_t eqns = dims.d1 * dims.d1 + dims.d2 * dims.d2;
    std::vector<std::vector<double>> constraint(eqns, std::vector<double>(k * k, 0.0));
    for (std::size_t m = 0; m < basis.size(); ++m) {
        const Matrix lifted = s * (basis[m].matrix() * s_dag);
        const auto v1 = vec_hermitian(HermitianMatrix::symmetrized(partial_trace_over_2(lifted, dims)));
        const auto v2 = vec_hermitian(HermitianMatrix::symmetrized(partial_trace_over_1(lifted, dims)));
        for (std::size_t r = 0; r < v1.size(); ++r) {
            constraint[r][m] = v1[r];
        }
        for (std::size_t r = 0; r < v2.size(); ++r) {
            constraint[v1.size() + r][m] = v2[r];
        }
    }
    const SpanAnalysis span = analyze_row_span(constraint, k * k, opts.rank_tol);
    return span.null_basis.empty();
}

std::size_t rank_bound(const DimensionPair& dims) {
    const std::size_t x = dims.d1 * dims.d1 + dims.d2 * dims.d2 - 1;
    std::size_t r = static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(x))));
    while ((r + 1) * (r + 1) <= x) {
        ++r;
    }
    while (r * r > x) {
        --r;
    }
    return r;
}

}  // namespace extremal
