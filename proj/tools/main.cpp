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

#include <atomic>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "extremal/certifier.hpp"
#include "extremal/eigh.hpp"
#include "extremal/io.hpp"
#include "extremal/qubit.hpp"
#include "extremal/sampler.hpp"

namespace fs = std::filesystem;
using namespace extremal;

namespace {

// Exit contract: 0 verdict computed, 1 assertion/verification failed,
// 2 input error, 3 membership error.
constexpr int kExitOk = 0;
constexpr int kExitAssert = 1;
constexpr int kExitInput = 2;
constexpr int kExitMembership = 3;

struct CommonFlags {
    double tol = 1e-8;
    std::string marginals_path;

    CertifierOptions options() const {
        CertifierOptions opts;
        opts.membership_tol = tol;
        opts.rank_tol = tol / 10.0;
        return opts;
    }
};

MarginalPair pick_marginals(const StateFile& file, const CommonFlags& flags) {
    if (!flags.marginals_path.empty()) {
        return load_marginals_file(flags.marginals_path, flags.tol);
    }
    return resolve_marginals(file, flags.tol);
}

const char* verdict_word(ExtremalityVerdict::Tag tag) {
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

struct CheckArgs {
    CommonFlags common;
    std::vector<std::string> inputs;
    std::string output;
    std::string verify_path;
    bool assert_extremal = false;
    unsigned jobs = 1;
};

int run_verify(const CheckArgs& args) {
    if (args.inputs.size() != 1) {
        std::cerr << "check --verify-certificate expects exactly one input state\n";
        return kExitInput;
    }
    const StateFile input = load_state_file(args.inputs.front());
    const Certificate cert = load_certificate(args.verify_path);
    const auto issues = verify_certificate(cert, input);
    if (issues.empty()) {
        std::cout << "certificate verified: every claim reproduced\n";
        return kExitOk;
    }
    for (const std::string& issue : issues) {
        std::cerr << "verification failed: " << issue << "\n";
    }
    return kExitAssert;
}

int run_check(const CheckArgs& args) {
    if (!args.verify_path.empty()) {
        return run_verify(args);
    }
    if (args.inputs.empty()) {
        std::cerr << "check: no input files\n";
        return kExitInput;
    }

    struct Result {
        std::string input;
        std::optional<Certificate> cert;
        std::string error;
    };
    std::vector<Result> results(args.inputs.size());

    const CertifierOptions opts = args.common.options();
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= args.inputs.size()) {
                return;
            }
            Result& r = results[idx];
            r.input = args.inputs[idx];
            try {
                const StateFile file = load_state_file(r.input);
                const MarginalPair marginals = pick_marginals(file, args.common);
                const CoupledState state(file.dims, file.rho);
                const ExtremalityVerdict verdict = check_extremal(state, marginals, opts);
                r.cert = make_certificate(file.dims, marginals, verdict, opts);
            } catch (const std::exception& e) {
                r.error = e.what();
            }
        }
    };
    const unsigned jobs = std::max(1u, args.jobs);
    if (jobs == 1 || args.inputs.size() == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < std::min<std::size_t>(jobs, args.inputs.size()); ++t) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }

    const bool single = args.inputs.size() == 1;
    bool any_error = false;
    bool any_not_extremal = false;
    for (const Result& r : results) {
        if (!r.cert) {
            std::cerr << r.input << ": " << r.error << "\n";
            any_error = true;
            continue;
        }
        if (r.cert->verdict.tag != ExtremalityVerdict::Tag::Extremal) {
            any_not_extremal = true;
        }
        if (single) {
            if (args.output.empty()) {
                std::cout << certificate_to_string(*r.cert) << "\n";
            } else {
                save_certificate(args.output, *r.cert);
                std::cout << r.input << ": " << verdict_word(r.cert->verdict.tag) << " -> "
                          << args.output << "\n";
            }
        } else {
            fs::path dest;
            if (args.output.empty()) {
                dest = fs::path(r.input).concat(".cert.json");
            } else {
                fs::create_directories(args.output);
                dest = fs::path(args.output) /
                       fs::path(r.input).filename().concat(".cert.json");
            }
            save_certificate(dest, *r.cert);
            std::cout << r.input << ": " << verdict_word(r.cert->verdict.tag) << " -> "
                      << dest.string() << "\n";
        }
    }
    if (any_error) {
        return kExitInput;
    }
    if (args.assert_extremal && any_not_extremal) {
        return kExitAssert;
    }
    return kExitOk;
}

struct SampleArgs {
    CommonFlags common;
    std::size_t d1 = 0;
    std::size_t d2 = 0;
    std::string marginals_spec = "maximally-mixed";
    std::uint64_t seed = 0;
    std::size_t count = 1;
    double spread = 0.5;
    std::string output = ".";
};

int run_sample(const SampleArgs& args) {
    MarginalPair marginals = [&]() -> MarginalPair {
        if (args.marginals_spec == "maximally-mixed") {
            if (args.d1 < 1 || args.d2 < 1) {
                throw FileFormatError("sample: maximally-mixed marginals need --d1 and --d2");
            }
            HermitianMatrix r1 = HermitianMatrix::identity(args.d1);
            r1 *= 1.0 / static_cast<double>(args.d1);
            HermitianMatrix r2 = HermitianMatrix::identity(args.d2);
            r2 *= 1.0 / static_cast<double>(args.d2);
            return MarginalPair(std::move(r1), std::move(r2));
        }
        return load_marginals_file(args.marginals_spec, args.common.tol);
    }();

    const DimensionPair dims = marginals.dims();
    fs::create_directories(args.output);
    Rng rng(args.seed);
    for (std::size_t i = 0; i < args.count; ++i) {
        const CoupledState state = sample_interior(marginals, rng, args.spread);
        std::ostringstream name;
        name << "member_" << std::setw(3) << std::setfill('0') << i << ".json";
        const fs::path dest = fs::path(args.output) / name.str();
        save_state_file(dest, StateFile{dims, state.rho, marginals.rho1.matrix(),
                                        marginals.rho2.matrix()});
        std::cout << dest.string() << "\n";
    }
    return kExitOk;
}

struct ExtremizeArgs {
    CommonFlags common;
    std::string input;
    std::uint64_t seed = 0;
    std::string output;
};

int run_extremize(const ExtremizeArgs& args) {
    const StateFile file = load_state_file(args.input);
    const MarginalPair marginals = pick_marginals(file, args.common);
    const CertifierOptions opts = args.common.options();
    Rng rng(args.seed);

    const FacialWalkTrace trace =
        extremize(CoupledState(file.dims, file.rho), marginals, rng, opts);
    const ExtremalityVerdict final_verdict = check_extremal(trace.final_state, marginals, opts);
    const Certificate final_cert =
        make_certificate(file.dims, marginals, final_verdict, opts);

    if (args.output.empty()) {
        std::cout << walk_result_to_string(trace, final_cert) << "\n";
    } else {
        save_walk_result(args.output, trace, final_cert);
        std::cout << args.input << ": rank " << trace.start_rank << " -> "
                  << final_verdict.rank << " in " << trace.steps.size() << " steps -> "
                  << args.output << "\n";
    }
    return kExitOk;
}

int run_demo(std::uint64_t seed) {
    const DimensionPair dims(2, 2);
    HermitianMatrix half_eye(2);
    half_eye.set(0, 0, 0.5);
    half_eye.set(1, 1, 0.5);
    const MarginalPair mm(half_eye, half_eye);

    std::cout << "Extreme points of the set of two-qubit states with both marginals I/2\n";
    std::cout << "=====================================================================\n\n";

    std::cout << "[1] Bell state |Phi+><Phi+|\n";
    const CoupledState bell = max_entangled(MaxEntangledSpec(Matrix::identity(2)));
    const ExtremalityVerdict bell_verdict = check_extremal(bell, mm);
    std::cout << "    verdict: " << verdict_word(bell_verdict.tag) << " (rank "
              << bell_verdict.rank << ", dim D = " << bell_verdict.report->dim_d
              << " = k^2, rank bound " << rank_bound(dims) << ")\n\n";

    std::cout << "[2] Equal mixture of |Phi+> and |Phi-> projectors (rank 2)\n";
    Matrix u_minus = Matrix::identity(2);
    u_minus(1, 1) = -1.0;
    Matrix mixture = bell.rho + max_entangled(MaxEntangledSpec(u_minus)).rho;
    mixture *= Complex(0.5, 0.0);
    const CoupledState mixed(dims, std::move(mixture));
    const ExtremalityVerdict mixed_verdict = check_extremal(mixed, mm);
    std::cout << "    verdict: " << verdict_word(mixed_verdict.tag) << " (rank "
              << mixed_verdict.rank << ")\n";
    if (mixed_verdict.witness) {
        const NonExtremalityWitness& w = *mixed_verdict.witness;
        Matrix average = w.rho_plus.rho + w.rho_minus.rho;
        average *= Complex(0.5, 0.0);
        std::cout << "    witness: epsilon = " << w.epsilon
                  << ", |(rho+ + rho-)/2 - rho|_max = " << (average - mixed.rho).max_abs()
                  << ", both halves in C: "
                  << (!validate_membership(w.rho_plus, mm, 1e-8) &&
                              !validate_membership(w.rho_minus, mm, 1e-8)
                          ? "yes"
                          : "no")
                  << "\n\n";
    }

    std::cout << "[3] Facial walk from the maximally mixed state I/4\n";
    Rng rng(seed);
    const CoupledState start(dims, 0.25 * Matrix::identity(4));
    const FacialWalkTrace trace = extremize(start, mm, rng);
    std::cout << "    start rank " << trace.start_rank << "\n";
    for (const WalkStep& step : trace.steps) {
        std::cout << "    step: rank " << step.rank_before << " -> " << step.rank_after
                  << " (t* = " << step.t_star << ")\n";
    }
    const double purity =
        (trace.final_state.rho * trace.final_state.rho).trace().real();
    std::cout << "    final purity Tr rho^2 = " << purity << ", maximally entangled: "
              << (is_max_entangled(trace.final_state, 1e-8) ? "yes" : "no") << "\n";
    return kExitOk;
}

void add_tol(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--tol", flags.tol, "membership tolerance (rank tolerance is tol/10)")
        ->check(CLI::PositiveNumber);
}

void add_marginals_path(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--marginals", flags.marginals_path,
                    "path to a marginals file with target rho1, rho2");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certify extreme points of bipartite states with prescribed marginals"};
    app.require_subcommand(1);

    CheckArgs check_args;
    CLI::App* check = app.add_subcommand(
        "check", "certify extremality of states and emit certificates");
    add_tol(check, check_args.common);
    add_marginals_path(check, check_args.common);
    check->add_option("inputs", check_args.inputs, "state files to certify");
    check->add_option("--output", check_args.output,
                      "certificate path (single input) or directory (several)");
    check->add_option("--verify-certificate", check_args.verify_path,
                      "re-verify this certificate against the input state");
    check->add_flag("--assert-extremal", check_args.assert_extremal,
                    "exit 1 unless every verdict is extremal");
    check->add_option("--jobs", check_args.jobs, "parallel workers for batch checks")
        ->check(CLI::PositiveNumber);

    SampleArgs sample_args;
    CLI::App* sample =
        app.add_subcommand("sample", "draw random members of C(rho1, rho2)");
    add_tol(sample, sample_args.common);
    sample->add_option("--d1", sample_args.d1, "first local dimension");
    sample->add_option("--d2", sample_args.d2, "second local dimension");
    sample->add_option("--marginals", sample_args.marginals_spec,
                       "marginals file or 'maximally-mixed'");
    sample->add_option("--seed", sample_args.seed, "RNG seed");
    sample->add_option("--count", sample_args.count, "number of states to write");
    sample->add_option("--spread", sample_args.spread,
                       "perturbation size in (0,1); smaller stays closer to rho1 (x) rho2");
    sample->add_option("--output", sample_args.output, "output directory");

    ExtremizeArgs ext_args;
    CLI::App* ext = app.add_subcommand(
        "extremize", "walk a member of C(rho1, rho2) down to an extreme point");
    add_tol(ext, ext_args.common);
    add_marginals_path(ext, ext_args.common);
    ext->add_option("input", ext_args.input, "state file to extremize")->required();
    ext->add_option("--seed", ext_args.seed, "RNG seed for walk directions");
    ext->add_option("--output", ext_args.output, "walk result path (default: stdout)");

    std::uint64_t demo_seed = 0;
    CLI::App* demo = app.add_subcommand("demo", "run the two-qubit demonstration");
    demo->add_option("--seed", demo_seed, "RNG seed for the walk");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*check) {
            return run_check(check_args);
        }
        if (*sample) {
            return run_sample(sample_args);
        }
        if (*ext) {
            return run_extremize(ext_args);
        }
        if (*demo) {
            return run_demo(demo_seed);
        }
    } catch (const FileFormatError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const MembershipError& e) {
        std::cerr << "membership error: " << e.what() << "\n";
        return kExitMembership;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAssert;
    }
    return kExitOk;
}
