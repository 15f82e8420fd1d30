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
//
// Acceptance suite: one criterion per function, one pass/fail line each.
// Exit status 0 iff every criterion passes.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "extremal/certifier.hpp"
#include "extremal/eigh.hpp"
#include "extremal/io.hpp"
#include "extremal/qubit.hpp"
#include "extremal/sampler.hpp"
#include "../tests/support.hpp"

using namespace extremal;
using namespace extremal::testing;

namespace {

namespace fs = std::filesystem;

struct Context {
    fs::path tmpdir;
    // Every Extremal verdict seen while running criteria 1-7: (rank, dims).
    std::vector<std::pair<std::size_t, DimensionPair>> extremal_seen;
    // Every certificate produced while running criteria 1-7, with its input.
    std::vector<std::pair<Certificate, StateFile>> certificates;

    void record(const DimensionPair& dims,
                const MarginalPair& marginals,
                const ExtremalityVerdict& verdict,
                const CertifierOptions& opts,
                const Matrix& input_rho) {
        if (verdict.tag == ExtremalityVerdict::Tag::Extremal) {
            extremal_seen.emplace_back(verdict.rank, dims);
        }
        certificates.emplace_back(make_certificate(dims, marginals, verdict, opts),
                                  StateFile{dims, input_rho, marginals.rho1.matrix(),
                                            marginals.rho2.matrix()});
    }
};

struct Result {
    int number;
    std::string summary;
    bool pass;
};

bool witness_ok(const NonExtremalityWitness& w,
                const CoupledState& state,
                const MarginalPair& marginals) {
    Matrix average = w.rho_plus.rho + w.rho_minus.rho;
    average *= Complex(0.5, 0.0);
    return (average - state.rho).max_abs() <= 1e-8 &&
           !validate_membership(w.rho_plus, marginals, 1e-8) &&
           !validate_membership(w.rho_minus, marginals, 1e-8) &&
           (w.rho_plus.rho - w.rho_minus.rho).max_abs() > 1e-10;
}

// Criterion 1: 100 Haar-random maximally entangled states are all extremal,
// in under five seconds.
Result criterion_1(Context& ctx) {
    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(1001u);
    const MarginalPair mm = maximally_mixed_marginals(DimensionPair(2, 2));
    const CertifierOptions opts;
    int extremal = 0;
    for (int i = 0; i < 100; ++i) {
        const CoupledState state = max_entangled(MaxEntangledSpec(haar_unitary(2, rng)));
        const ExtremalityVerdict verdict = check_extremal(state, mm, opts);
        if (verdict.tag == ExtremalityVerdict::Tag::Extremal) {
            ++extremal;
        }
        ctx.record(state.dims, mm, verdict, opts, state.rho);
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream oss;
    oss << "maximally entangled states are extremal: " << extremal << "/100 extremal in " << seconds << " s";
    return {1, oss.str(), extremal == 100 && seconds < 5.0};
}

// Criterion 2: 200 rank-2 members of C(I/2, I/2) (mixture route and kernel
// route) are all rejected, each with a machine-checked witness.
Result criterion_2(Context& ctx) {
    Rng rng(1002u);
    const MarginalPair mm = maximally_mixed_marginals(DimensionPair(2, 2));
    const CertifierOptions opts;
    int rejected = 0;
    int witnesses_ok = 0;
    for (int i = 0; i < 200; ++i) {
        CoupledState state = [&]() {
            if (i < 100) {
                return random_rank2_member(rng);
            }
            const QubitRank2Params params = sample_valid_rank2_params(rng);
            return CoupledState(DimensionPair(2, 2), rank2_kernel(params).matrix.matrix());
        }();
        const ExtremalityVerdict verdict = check_extremal(state, mm, opts);
        if (verdict.tag == ExtremalityVerdict::Tag::NotExtremal) {
            ++rejected;
            if (verdict.witness && witness_ok(*verdict.witness, state, mm)) {
                ++witnesses_ok;
            }
        }
        ctx.record(state.dims, mm, verdict, opts, state.rho);
    }
    std::ostringstream oss;
    oss << "rank-2 exclusion: " << rejected << "/200 rejected, "
        << witnesses_ok << "/200 witnesses valid";
    return {2, oss.str(), rejected == 200 && witnesses_ok == 200};
}

// Criterion 3: 50 full-rank members are rejected by the shortcut, and the
// D-space route agrees on every one.
Result criterion_3(Context& ctx) {
    Rng rng(1003u);
    const std::vector<DimensionPair> all_dims{DimensionPair(2, 2), DimensionPair(2, 3),
                                              DimensionPair(3, 3)};
    const CertifierOptions opts;
    CertifierOptions direct = opts;
    direct.full_rank_shortcut = false;

    int shortcut_rejections = 0;
    int agreements = 0;
    for (int i = 0; i < 50; ++i) {
        const DimensionPair dims = all_dims[i % all_dims.size()];
        const MarginalPair marginals(random_pd_density(dims.d1, rng),
                                     random_pd_density(dims.d2, rng));
        const CoupledState state = sample_interior(marginals, rng, 0.6);

        const ExtremalityVerdict fast = check_extremal(state, marginals, opts);
        if (fast.tag == ExtremalityVerdict::Tag::NotExtremal &&
            fast.route == ExtremalityVerdict::Route::FullRankShortcut) {
            ++shortcut_rejections;
        }
        const ExtremalityVerdict slow = check_extremal(state, marginals, direct);
        if (slow.tag == ExtremalityVerdict::Tag::NotExtremal && slow.report &&
            slow.report->dim_d < slow.report->k_squared) {
            ++agreements;
        }
        ctx.record(dims, marginals, fast, opts, state.rho);
    }
    std::ostringstream oss;
    oss << "full-rank states never extremal: " << shortcut_rejections
        << "/50 via shortcut, D-space agreed on " << agreements << "/50";
    return {3, oss.str(), shortcut_rejections == 50 && agreements == 50};
}

// Criterion 5: the range-basis oracle and the certifier agree on 300 random
// instances of mixed rank and dimension.
Result criterion_5(Context& ctx) {
    Rng rng(1005u);
    const std::vector<DimensionPair> all_dims{DimensionPair(2, 2), DimensionPair(2, 3),
                                              DimensionPair(3, 3)};
    const CertifierOptions opts;
    int agree = 0;
    for (int i = 0; i < 300; ++i) {
        const DimensionPair dims = all_dims[i % all_dims.size()];
        const std::size_t rank = 1 + static_cast<std::size_t>(i / 3) % dims.n();
        const auto member = random_member_own_marginals(dims, rank, rng);
        const ExtremalityVerdict verdict = check_extremal(member.state, member.marginals, opts);
        const bool oracle = oracle_extremal(member.state, member.marginals, opts);
        if (oracle == verdict.is_extremal()) {
            ++agree;
        }
        ctx.record(dims, member.marginals, verdict, opts, member.state.rho);
    }
    std::ostringstream oss;
    oss << "oracle agreement: " << agree << "/300 instances identical";
    return {5, oss.str(), agree == 300};
}

// Criterion 6: 500 block decompositions reconstruct to within 1e-8.
Result criterion_6(Context&) {
    Rng rng(1006u);
    const std::vector<std::size_t> orders{4, 6, 9};
    double worst = 0.0;
    int count = 0;
    for (int i = 0; i < 500; ++i) {
        const std::size_t order = orders[i % orders.size()];
        const std::size_t rank = 1 + static_cast<std::size_t>(i) % order;
        const HermitianMatrix rho = random_density(order, rank, rng);
        const BlockDecomposition dec = block_decompose(rho, 1e-9);
        const double err = (reconstruct(dec).matrix() - rho.matrix()).max_abs();
        worst = std::max(worst, err);
        ++count;
    }
    std::ostringstream oss;
    oss << "decomposition round trip: " << count << " matrices, max error " << worst;
    return {6, oss.str(), count == 500 && worst <= 1e-8};
}

// Criterion 7: the walk from I/4 reaches a maximally entangled pure state in
// at most three steps.
Result criterion_7(Context& ctx) {
    Rng rng(1007u);
    const DimensionPair dims(2, 2);
    const MarginalPair mm = maximally_mixed_marginals(dims);
    const CertifierOptions opts;
    const CoupledState start(dims, 0.25 * Matrix::identity(4));

    const FacialWalkTrace trace = extremize(start, mm, rng, opts);
    const double purity = (trace.final_state.rho * trace.final_state.rho).trace().real();
    const Matrix half_eye = 0.5 * Matrix::identity(2);
    const double marg_err =
        std::max((partial_trace_over_2(trace.final_state.rho, dims) - half_eye).max_abs(),
                 (partial_trace_over_1(trace.final_state.rho, dims) - half_eye).max_abs());
    const bool entangled = is_max_entangled(trace.final_state, 1e-8);

    const ExtremalityVerdict final_verdict = check_extremal(trace.final_state, mm, opts);
    ctx.record(dims, mm, final_verdict, opts, trace.final_state.rho);

    std::ostringstream oss;
    oss << "walk from I/4: " << trace.steps.size() << " steps, purity deficit "
        << std::abs(purity - 1.0) << ", marginal error " << marg_err << ", maximally entangled "
        << (entangled ? "yes" : "no");
    return {7, oss.str(),
            trace.steps.size() <= 3 && std::abs(purity - 1.0) <= 1e-6 && marg_err <= 1e-8 &&
                entangled && final_verdict.tag == ExtremalityVerdict::Tag::Extremal};
}

// Criterion 4: every extremal verdict recorded by criteria 1-7 obeys the
// rank bound, and 50 walks over (3,3) end at rank <= 4.
Result criterion_4(Context& ctx) {
    bool bound_ok = true;
    for (const auto& [rank, dims] : ctx.extremal_seen) {
        if (rank * rank > dims.d1 * dims.d1 + dims.d2 * dims.d2 - 1) {
            bound_ok = false;
        }
    }

    Rng rng(1004u);
    const DimensionPair dims(3, 3);
    const MarginalPair mm = maximally_mixed_marginals(dims);
    const CertifierOptions opts;
    int walks_ok = 0;
    std::size_t max_final_rank = 0;
    for (int i = 0; i < 50; ++i) {
        const CoupledState start = sample_interior(mm, rng, 0.7);
        const FacialWalkTrace trace = extremize(start, mm, rng, opts);
        const std::size_t final_rank =
            rank_eps(HermitianMatrix::symmetrized(trace.final_state.rho), 1e-9);
        max_final_rank = std::max(max_final_rank, final_rank);
        if (final_rank <= 4) {
            ++walks_ok;
        }
    }
    std::ostringstream oss;
    oss << "rank bound: " << ctx.extremal_seen.size() << " extremal verdicts within bound, "
        << walks_ok << "/50 walks over (3,3) ended at rank <= 4 (max seen " << max_final_rank
        << ")";
    return {4, oss.str(), bound_ok && walks_ok == 50 && !ctx.extremal_seen.empty()};
}

// Criterion 8: the zero-marginal space has dimension n^2 - d1^2 - d2^2 + 1
// for every d1, d2 in {1..4}.
Result criterion_8(Context&) {
    int checked = 0;
    bool ok = true;
    for (std::size_t d1 = 1; d1 <= 4; ++d1) {
        for (std::size_t d2 = 1; d2 <= 4; ++d2) {
            const DimensionPair dims(d1, d2);
            const std::size_t n = dims.n();
            const std::size_t expected = n * n - d1 * d1 - d2 * d2 + 1;
            if (zero_marginal_basis(dims).size() != expected) {
                ok = false;
            }
            ++checked;
        }
    }
    std::ostringstream oss;
    oss << "zero-marginal dimension formula: " << checked << "/16 dimension pairs exact";
    return {8, oss.str(), ok && checked == 16};
}

// Criterion 9: 1000 draws satisfying the degenerate off-diagonal premises
// produce no PSD rank-2 kernel.
Result criterion_9(Context&) {
    Rng rng(1009u);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> normal(0.0, 0.3);
    int invalid = 0;
    for (int i = 0; i < 1000; ++i) {
        const double a = 0.05 + 0.9 * unit(rng);
        const double r = 0.5 * std::sqrt(a * (1.0 - a));
        const Complex x = std::polar(r, 2.0 * M_PI * unit(rng));
        const Complex y = std::polar(r, 2.0 * M_PI * unit(rng));
        Complex z, t;
        if (i % 2 == 0) {
            z = std::polar(0.5 * a * 0.999 * unit(rng), 2.0 * M_PI * unit(rng));
            t = Complex(normal(rng), normal(rng));
        } else {
            t = std::polar(0.5 * (1.0 - a) * 0.999 * unit(rng), 2.0 * M_PI * unit(rng));
            z = Complex(normal(rng), normal(rng));
        }
        if (!rank2_kernel(QubitRank2Params(a, x, y, z, t)).valid) {
            ++invalid;
        }
    }
    std::ostringstream oss;
    oss << "degenerate kernel family is empty: " << invalid << "/1000 draws invalid";
    return {9, oss.str(), invalid == 1000};
}

int run_cli(const std::string& cli, const std::string& args, const fs::path& workdir) {
    const std::string cmd = "cd " + workdir.string() + " && " + cli + " " + args +
                            " > cli_out.txt 2> cli_err.txt";
    const int status = std::system(cmd.c_str());
    if (status == -1) {
        return -1;
    }
    return WEXITSTATUS(status);
}

// Criterion 10: CLI contract (demo exits 0, malformed input exits 2) and
// self-verification of every certificate produced by criteria 1-7, with a
// sample pushed through the actual binary.
Result criterion_10(Context& ctx, const std::string& cli) {
    const int demo_rc = run_cli(cli, "demo", ctx.tmpdir);

    const fs::path broken = ctx.tmpdir / "broken.json";
    {
        std::ofstream out(broken);
        out << "{\"version\": \"v1\", \"d1\": 2";
    }
    const int malformed_rc = run_cli(cli, "check broken.json", ctx.tmpdir);

    std::size_t verified = 0;
    for (const auto& [cert, input] : ctx.certificates) {
        if (verify_certificate(cert, input).empty()) {
            ++verified;
        }
    }

    // Push a spread-out sample of the certificates through the binary.
    std::size_t binary_checked = 0;
    std::size_t binary_ok = 0;
    const std::size_t stride = std::max<std::size_t>(1, ctx.certificates.size() / 12);
    for (std::size_t i = 0; i < ctx.certificates.size(); i += stride) {
        const auto& [cert, input] = ctx.certificates[i];
        const fs::path state_path = ctx.tmpdir / ("accept_state_" + std::to_string(i) + ".json");
        const fs::path cert_path = ctx.tmpdir / ("accept_cert_" + std::to_string(i) + ".json");
        save_state_file(state_path, input);
        save_certificate(cert_path, cert);
        ++binary_checked;
        if (run_cli(cli,
                    "check " + state_path.string() + " --verify-certificate " +
                        cert_path.string(),
                    ctx.tmpdir) == 0) {
            ++binary_ok;
        }
    }

    std::ostringstream oss;
    oss << "CLI contract: demo rc " << demo_rc << ", malformed rc " << malformed_rc << ", "
        << verified << "/" << ctx.certificates.size() << " certificates re-verified, "
        << binary_ok << "/" << binary_checked << " through the binary";
    return {10, oss.str(),
            demo_rc == 0 && malformed_rc == 2 && verified == ctx.certificates.size() &&
                binary_checked > 0 && binary_ok == binary_checked};
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli = EXTREMAL_CLI_PATH;
    if (argc > 1) {
        cli = argv[1];
    }

    Context ctx;
    ctx.tmpdir = fs::temp_directory_path() /
                 ("extremal_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(ctx.tmpdir);

    std::vector<Result> results;
    results.push_back(criterion_1(ctx));
    results.push_back(criterion_2(ctx));
    results.push_back(criterion_3(ctx));
    results.push_back(criterion_5(ctx));
    results.push_back(criterion_6(ctx));
    results.push_back(criterion_7(ctx));
    results.push_back(criterion_4(ctx));  // consumes the records of 1-7
    results.push_back(criterion_8(ctx));
    results.push_back(criterion_9(ctx));
    results.push_back(criterion_10(ctx, cli));

    std::sort(results.begin(), results.end(),
              [](const Result& a, const Result& b) { return a.number < b.number; });

    bool all_pass = true;
    for (const Result& r : results) {
        std::cout << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << r.number << ": "
                  << r.summary << "\n";
        all_pass &= r.pass;
    }

    fs::remove_all(ctx.tmpdir);
    return all_pass ? 0 : 1;
}
