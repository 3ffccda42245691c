#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cache.hpp"
#include "gtv/canonical.hpp"
#include "gtv/errors.hpp"
#include "gtv/group_spec.hpp"
#include "gtv/hilbert.hpp"
#include "gtv/invariants.hpp"
#include "gtv/rl.hpp"
#include "gtv/serialize.hpp"
#include "gtv/toric.hpp"
#include "json.hpp"
#include "sweep.hpp"

namespace {

// Exit codes: 0 ok, 1 internal/check failure, 2 spec or config validation,
// 3 not level-GT (cohomology on an unsupported ring), 4 resource bound or I/O.
constexpr int kExitValidation = 2;
constexpr int kExitNotLevelGt = 3;
constexpr int kExitResource = 4;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonOptions {
    long long d = 0;
    std::vector<long long> alphas;
    std::string format = "table";
    std::string out_path;
    bool no_cache = false;
    std::string cache_dir;
    std::uint64_t seed = gtv::kDefaultSeed;
    int threads = 1;
};

void add_common_options(CLI::App* cmd, CommonOptions& options) {
    cmd->add_option("--d", options.d, "group order d")->required();
    cmd->add_option("--alphas", options.alphas, "comma-separated residues a0,a1,...,an")
        ->required()
        ->delimiter(',');
    cmd->add_option("--format", options.format, "output format")
        ->check(CLI::IsMember({"json", "table", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", options.out_path, "write output to this file instead of stdout");
    cmd->add_flag("--no-cache", options.no_cache, "bypass the result cache");
    cmd->add_option("--cache-dir", options.cache_dir, "cache directory (default: user cache)");
    cmd->add_option("--seed", options.seed, "seed for sampled computations")
        ->capture_default_str();
    cmd->add_option("--threads", options.threads, "worker threads for parallel stages")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

gtvtool::CacheConfig cache_config(const CommonOptions& options) {
    gtvtool::CacheConfig config;
    config.enabled = !options.no_cache;
    config.dir = options.cache_dir.empty() ? gtvtool::default_cache_dir()
                                           : std::filesystem::path(options.cache_dir);
    return config;
}

void emit(const CommonOptions& options, const std::string& output) {
    if (options.out_path.empty() || options.out_path == "-") {
        std::cout << output;
        return;
    }
    std::ofstream out(options.out_path, std::ios::trunc);
    if (!out) throw IoError("cannot open " + options.out_path + " for writing");
    out << output;
    if (!out.good()) throw IoError("failed writing " + options.out_path);
}

// Runs compute() (which returns the rendered output) through the cache.
std::string cached(const CommonOptions& options, const std::string& request,
                   const std::function<std::string()>& compute) {
    const auto cache = cache_config(options);
    if (auto hit = gtvtool::cache_lookup(cache, request)) return *hit;
    std::string output = compute();
    gtvtool::cache_store(cache, request, output);
    return output;
}

std::string request_key(const gtv::GroupSpec& spec, const std::string& op,
                        const std::string& params, const std::string& format) {
    return "gtv-v1|" + op + "|" + spec.str() + "|" + params + "|" + format;
}

int run_invariants(const CommonOptions& options, int t) {
    const auto spec = gtv::normalize_spec(options.d, options.alphas);
    const auto output = cached(options, request_key(spec, "invariants", "t=" + std::to_string(t),
                                                    options.format),
                               [&] {
                                   const auto basis = gtv::enumerate_invariants(spec, t);
                                   if (options.format == "json") return gtv::to_json(basis);
                                   if (options.format == "csv") return gtv::to_csv(basis);
                                   return gtv::to_table(basis);
                               });
    emit(options, output);
    return 0;
}

int run_classify(const CommonOptions& options, int wlp_samples) {
    const auto spec = gtv::normalize_spec(options.d, options.alphas);
    std::ostringstream params;
    params << "wlp=" << wlp_samples;
    if (wlp_samples > 0) params << ",seed=" << options.seed;
    const auto output =
        cached(options, request_key(spec, "classify", params.str(), options.format), [&] {
            const auto cls = gtv::classify_gt(spec, wlp_samples, options.seed);
            if (options.format == "json") return gtv::to_json(spec, cls);
            if (options.format == "csv") return gtv::to_csv(spec, cls);
            return gtv::to_table(spec, cls);
        });
    emit(options, output);
    return 0;
}

int run_ideal(const CommonOptions& options, int kmax) {
    const auto spec = gtv::normalize_spec(options.d, options.alphas);
    const auto output =
        cached(options, request_key(spec, "ideal", "kmax=" + std::to_string(kmax), options.format),
               [&] {
                   gtv::ToricOptions toric;
                   toric.threads = options.threads;
                   const auto gens = gtv::generators(spec, toric);
                   std::optional<gtv::DegreeBoundCertification> cert;
                   if (kmax >= 4) cert = gtv::certify_degree_bound(spec, kmax, toric);
                   if (options.format == "json") return gtv::to_json(spec, gens, cert);
                   if (options.format == "csv") return gtv::to_csv(spec, gens);
                   return gtv::to_table(spec, gens, cert);
               });
    emit(options, output);
    return 0;
}

int run_canonical(const CommonOptions& options) {
    const auto spec = gtv::normalize_spec(options.d, options.alphas);
    const auto output = cached(options, request_key(spec, "canonical", "", options.format), [&] {
        const auto canonical = gtv::compute_canonical(spec);
        const auto ring = gtv::classify_ring(spec);
        if (options.format == "json") return gtv::to_json(canonical, ring);
        if (options.format == "csv") return gtv::to_csv(canonical, ring);
        return gtv::to_table(canonical, ring);
    });
    emit(options, output);
    return 0;
}

int run_hilbert(const CommonOptions& options, int t) {
    const auto spec = gtv::normalize_spec(options.d, options.alphas);
    const auto output =
        cached(options, request_key(spec, "hilbert", "t=" + std::to_string(t), options.format),
               [&] {
                   const auto data = gtv::compute_hilbert(spec);
                   std::string rendered;
                   if (options.format == "json") {
                       rendered = gtv::to_json(data);
                       if (t >= 0) {
                           auto doc = nlohmann::json::parse(rendered);
                           doc["hf"] = nlohmann::json{
                               {"t", t}, {"value", gtv::hilbert_function(data, t).str()}};
                           rendered = doc.dump(2) + "\n";
                       }
                   } else if (options.format == "csv") {
                       rendered = gtv::to_csv(data);
                       if (t >= 0) {
                           rendered += "hf_" + std::to_string(t) + "," +
                                       gtv::hilbert_function(data, t).str() + "\n";
                       }
                   } else {
                       rendered = gtv::to_table(data);
                       if (t >= 0) {
                           rendered += "HF(" + std::to_string(t) +
                                       ") = " + gtv::hilbert_function(data, t).str() + "\n";
                       }
                   }
                   return rendered;
               });
    emit(options, output);
    return 0;
}

int run_cohomology(const CommonOptions& options, std::optional<int> jmin, std::optional<int> jmax) {
    const auto spec = gtv::normalize_spec(options.d, options.alphas);
    const int lo = jmin.value_or(-(spec.d() + spec.n() + 4));
    const int hi = jmax.value_or(0);
    if (lo > hi) {
        std::cerr << "error: --jmin must be <= --jmax\n";
        return kExitValidation;
    }
    std::ostringstream params;
    params << "jmin=" << lo << ",jmax=" << hi;
    const auto output =
        cached(options, request_key(spec, "cohomology", params.str(), options.format), [&] {
            const auto rl = gtv::build_rl(spec);
            const auto grid = gtv::table(rl, lo, hi);
            if (options.format == "json") return gtv::to_json(rl, grid);
            if (options.format == "csv") return gtv::to_csv(grid);
            return gtv::render_table(grid);
        });
    emit(options, output);
    return 0;
}

int run_sweep_cmd(const std::string& config_path, const std::string& out_override, int threads,
                  bool timings) {
    auto config = gtvtool::load_sweep_config(config_path);
    if (!out_override.empty()) config.output_path = out_override;

    const auto outcome = gtvtool::run_sweep(config, threads, timings);

    if (config.output_path.empty() || config.output_path == "-") {
        std::cout << outcome.rendered;
    } else {
        std::ofstream out(config.output_path, std::ios::trunc);
        if (!out) throw IoError("cannot open " + config.output_path + " for writing");
        out << outcome.rendered;
        if (!out.good()) throw IoError("failed writing " + config.output_path);
    }
    std::cerr << outcome.summary_line << '\n';
    return outcome.check_failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariant-theory toolkit for cyclic diagonal group actions:\n"
                 "monomial invariants, toric ideal generators, canonical modules,\n"
                 "Hilbert series, and normal-bundle cohomology tables"};
    app.require_subcommand(1);

    CommonOptions options;

    int t_invariants = 1;
    auto* cmd_invariants =
        app.add_subcommand("invariants", "enumerate the monomial invariants of degree t*d");
    add_common_options(cmd_invariants, options);
    cmd_invariants->add_option("--t", t_invariants, "degree multiplier t")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    int wlp_samples = 0;
    auto* cmd_classify =
        app.add_subcommand("classify", "Togliatti bound check, optionally with a WLP rank report");
    add_common_options(cmd_classify, options);
    cmd_classify->add_option("--wlp-samples", wlp_samples,
                             "random linear forms to sample for the WLP report (0 = skip)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    int kmax = 0;
    auto* cmd_ideal =
        app.add_subcommand("ideal", "quadric/cubic generators of the toric ideal, with optional "
                                    "degree-bound certification");
    add_common_options(cmd_ideal, options);
    cmd_ideal->add_option("--kmax", kmax,
                          "certify fiber connectivity for degrees 4..kmax (0 = skip)");

    auto* cmd_canonical =
        app.add_subcommand("canonical", "canonical module generators and level/Gorenstein flags");
    add_common_options(cmd_canonical, options);

    int t_hilbert = -1;
    auto* cmd_hilbert =
        app.add_subcommand("hilbert", "Hilbert series numerator, degree, secondary invariants");
    add_common_options(cmd_hilbert, options);
    cmd_hilbert->add_option("--t", t_hilbert, "also evaluate the Hilbert function at t");

    std::optional<int> jmin, jmax;
    auto* cmd_cohomology = app.add_subcommand(
        "cohomology", "normal-bundle cohomology table of the projected Veronese variety");
    add_common_options(cmd_cohomology, options);
    cmd_cohomology->add_option("--jmin", jmin, "leftmost table column (default -(d+n+4))");
    cmd_cohomology->add_option("--jmax", jmax, "rightmost table column (default 0)");

    std::string sweep_config_path, sweep_out;
    int sweep_threads = 1;
    bool sweep_timings = false;
    auto* cmd_sweep = app.add_subcommand("sweep", "batch-evaluate a corpus of specs from a JSON "
                                                  "config and run property checks");
    cmd_sweep->add_option("config", sweep_config_path, "sweep config JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd_sweep->add_option("--out", sweep_out, "override the config's output_path");
    cmd_sweep->add_option("--threads", sweep_threads, "worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_sweep->add_flag("--timings", sweep_timings,
                        "include wall-clock timings (output no longer reproducible)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(cmd_invariants)) return run_invariants(options, t_invariants);
        if (app.got_subcommand(cmd_classify)) return run_classify(options, wlp_samples);
        if (app.got_subcommand(cmd_ideal)) {
            if (kmax != 0 && kmax < 4) {
                std::cerr << "error: --kmax must be 0 (skip) or >= 4\n";
                return kExitValidation;
            }
            return run_ideal(options, kmax);
        }
        if (app.got_subcommand(cmd_canonical)) return run_canonical(options);
        if (app.got_subcommand(cmd_hilbert)) return run_hilbert(options, t_hilbert);
        if (app.got_subcommand(cmd_cohomology)) return run_cohomology(options, jmin, jmax);
        if (app.got_subcommand(cmd_sweep)) {
            return run_sweep_cmd(sweep_config_path, sweep_out, sweep_threads, sweep_timings);
        }
    } catch (const gtv::SpecError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const gtv::NotLevelGt& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNotLevelGt;
    } catch (const gtv::ResourceBound& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const gtv::Error& e) {
        // config errors from the sweep parser are validation failures
        std::cerr << "error: " << e.what() << '\n';
        return app.got_subcommand(cmd_sweep) ? kExitValidation : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
