#include "sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "gtv/bigint.hpp"
#include "gtv/canonical.hpp"
#include "gtv/errors.hpp"
#include "gtv/group_spec.hpp"
#include "gtv/hilbert.hpp"
#include "gtv/invariants.hpp"
#include "gtv/rl.hpp"
#include "gtv/toric.hpp"
#include "json.hpp"

namespace gtvtool {

namespace {

using gtv::BigInt;
using gtv::GroupSpec;
using nlohmann::json;

struct ResultRecord {
    std::optional<GroupSpec> spec;
    BigInt mu = 0;
    bool is_gt = false;
    std::optional<BigInt> quadric_count;  // absent when skipped
    std::optional<BigInt> cubic_count;
    int eta = 0;
    bool level = false, gorenstein = false, level_gt = false;
    int regularity = 0;
    std::vector<BigInt> numerator;
    std::vector<std::string> failed_checks;
    std::string skipped;  // reason, empty when fully computed
    double elapsed_ms = 0.0;
};

// Everything a property check may want, computed once per record.
struct RecordContext {
    const GroupSpec& spec;
    const gtv::GtClassification& gt;
    const gtv::CanonicalModule& canonical;
    const gtv::RingClassification& ring;
    const gtv::HilbertData& hilbert;
};

bool run_check(const std::string& name, const RecordContext& ctx) {
    const int n = ctx.spec.n();
    if (name == "three_distinct") {
        return gtv::check_three_distinct(ctx.spec).implication_holds;
    }
    if (name == "degree_total") {
        BigInt expected = 1;
        for (int i = 1; i < n; ++i) expected *= ctx.spec.d();
        return ctx.hilbert.degree_of_variety == expected;
    }
    if (name == "e1_matches_mu") {
        return ctx.hilbert.e[1] == ctx.gt.mu_d - (n + 1);
    }
    if (name == "regularity_iff") {
        const bool reg_top = ctx.ring.regularity == n + 1;
        const bool c1_nonempty = !ctx.canonical.c1.empty();
        const bool en_positive = ctx.hilbert.e[static_cast<std::size_t>(n)] > 0;
        return reg_top == c1_nonempty && c1_nonempty == en_positive;
    }
    if (name == "hilbert_function") {
        for (int t = 0; t <= 3; ++t) {
            const BigInt direct = (t == 0)
                                      ? BigInt(1)
                                      : BigInt(static_cast<std::uint64_t>(
                                            gtv::enumerate_invariants(ctx.spec, t).mu()));
            if (gtv::hilbert_function(ctx.hilbert, t) != direct) return false;
        }
        return true;
    }
    if (name == "generation_bound") {
        return gtv::verify_generation_bound(ctx.spec, 3).ok;
    }
    if (name == "euler") {
        if (!ctx.ring.is_level_gt) return true;  // vacuous off the level-GT locus
        const auto rl = gtv::build_rl(ctx.spec);
        const int top = ctx.spec.d() + n + 5;
        return gtv::euler_check(rl, -5, top).ok;
    }
    if (name == "wlp") {
        if (!ctx.gt.is_gt_system) return true;
        if (ctx.gt.mu_d > 200 || gtv::binom(n + ctx.spec.d() - 1, n) > 2000) {
            return true;  // matrix too large for a sweep; covered by unit tests
        }
        return gtv::check_wlp_failure(ctx.spec, 1).deficiency_witnessed;
    }
    throw gtv::Error("unknown property check: " + name);
}

ResultRecord evaluate_spec(const GroupSpec& spec, const std::vector<std::string>& checks) {
    ResultRecord record;
    record.spec = spec;

    const auto gt = gtv::classify_gt(spec);
    record.mu = gt.mu_d;
    record.is_gt = gt.is_gt_system;

    const auto canonical = gtv::compute_canonical(spec);
    const auto ring = gtv::classify_ring(spec);
    record.eta = static_cast<int>(canonical.eta_d());
    record.level = ring.is_level;
    record.gorenstein = ring.is_gorenstein;
    record.level_gt = ring.is_level_gt;
    record.regularity = ring.regularity;

    const auto hilbert = gtv::compute_hilbert(spec);
    record.numerator = hilbert.e;

    try {
        record.quadric_count = gtv::minimal_generator_count(spec, 2);
        record.cubic_count = gtv::minimal_generator_count(spec, 3);
    } catch (const gtv::ResourceBound& rb) {
        record.skipped = std::string("toric counts: ") + rb.what();
    }

    const RecordContext ctx{spec, gt, canonical, ring, hilbert};
    for (const auto& name : checks) {
        if (!run_check(name, ctx)) record.failed_checks.push_back(name);
    }
    return record;
}

std::vector<GroupSpec> exhaustive_corpus(const SweepConfig& config) {
    std::vector<GroupSpec> corpus;
    for (int n = config.n_min; n <= config.n_max; ++n) {
        for (int d = std::max(config.d_min, n + 1); d <= config.d_max; ++d) {
            std::vector<long long> alphas(static_cast<std::size_t>(n) + 1, 0);
            auto rec = [&](auto&& self, std::size_t pos, long long low) -> void {
                if (pos == alphas.size()) {
                    try {
                        corpus.push_back(gtv::normalize_spec(d, alphas));
                    } catch (const gtv::SpecError&) {
                        // degenerate or non-faithful tuple: not part of the corpus
                    }
                    return;
                }
                for (long long a = low; a < d; ++a) {
                    alphas[pos] = a;
                    self(self, pos + 1, a);
                }
            };
            rec(rec, 0, 0);
        }
    }
    return corpus;
}

std::vector<GroupSpec> sampled_corpus(const SweepConfig& config) {
    std::vector<GroupSpec> corpus;
    std::set<std::pair<int, std::vector<int>>> seen;
    std::mt19937_64 gen(config.sample_seed);
    const long long max_attempts = static_cast<long long>(config.sample_count) * 10000;
    for (long long attempt = 0;
         attempt < max_attempts && corpus.size() < static_cast<std::size_t>(config.sample_count);
         ++attempt) {
        const int n = config.n_min + static_cast<int>(gen() % (config.n_max - config.n_min + 1ull));
        const int d = config.d_min + static_cast<int>(gen() % (config.d_max - config.d_min + 1ull));
        if (d <= n) continue;
        std::vector<long long> alphas(static_cast<std::size_t>(n) + 1);
        for (auto& a : alphas) a = static_cast<long long>(gen() % static_cast<unsigned>(d));
        try {
            GroupSpec spec = gtv::normalize_spec(d, alphas);
            if (seen.emplace(spec.d(), spec.alphas()).second) corpus.push_back(spec);
        } catch (const gtv::SpecError&) {
        }
    }
    return corpus;
}

json big_to_json(const BigInt& value) {
    if (value >= std::numeric_limits<std::int64_t>::min() &&
        value <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(value);
    }
    return value.str();
}

json record_to_json(const ResultRecord& record, bool with_timings) {
    json j;
    if (record.spec) {
        j["spec"] = json{{"n", record.spec->n()},
                         {"d", record.spec->d()},
                         {"alphas", record.spec->alphas()}};
    }
    j["mu"] = big_to_json(record.mu);
    j["is_gt"] = record.is_gt;
    j["quadrics"] = record.quadric_count ? big_to_json(*record.quadric_count) : json();
    j["cubics"] = record.cubic_count ? big_to_json(*record.cubic_count) : json();
    j["eta"] = record.eta;
    j["level"] = record.level;
    j["gorenstein"] = record.gorenstein;
    j["level_gt"] = record.level_gt;
    j["regularity"] = record.regularity;
    json numerator = json::array();
    for (const auto& e : record.numerator) numerator.push_back(big_to_json(e));
    j["numerator"] = numerator;
    j["failed_checks"] = record.failed_checks;
    if (!record.skipped.empty()) j["skipped"] = record.skipped;
    if (with_timings) j["elapsed_ms"] = record.elapsed_ms;
    return j;
}

std::string record_to_csv(const ResultRecord& record) {
    std::ostringstream out;
    auto join = [](const auto& values, char sep) {
        std::ostringstream s;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) s << sep;
            s << values[i];
        }
        return s.str();
    };
    out << record.spec->n() << ',' << record.spec->d() << ',' << join(record.spec->alphas(), ' ')
        << ',' << record.mu << ',' << (record.is_gt ? "true" : "false") << ','
        << (record.quadric_count ? record.quadric_count->str() : "") << ','
        << (record.cubic_count ? record.cubic_count->str() : "") << ',' << record.eta << ','
        << (record.level ? "true" : "false") << ',' << (record.gorenstein ? "true" : "false")
        << ',' << (record.level_gt ? "true" : "false") << ',' << record.regularity << ','
        << join(record.numerator, ' ') << ',' << join(record.failed_checks, ';') << ','
        << '"' << record.skipped << '"';
    return out.str();
}

}  // namespace

const std::vector<std::string>& registered_checks() {
    static const std::vector<std::string> names = {
        "three_distinct", "degree_total",     "e1_matches_mu", "regularity_iff",
        "hilbert_function", "generation_bound", "euler",         "wlp",
    };
    return names;
}

SweepConfig parse_sweep_config(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw gtv::Error(std::string("sweep config: invalid JSON: ") + e.what());
    }

    SweepConfig config;
    try {
        const auto& n_range = doc.at("n_range");
        const auto& d_range = doc.at("d_range");
        config.n_min = n_range.at(0).get<int>();
        config.n_max = n_range.at(1).get<int>();
        config.d_min = d_range.at(0).get<int>();
        config.d_max = d_range.at(1).get<int>();

        if (doc.contains("alpha_mode")) {
            const auto& mode = doc.at("alpha_mode");
            if (mode.is_string() && mode.get<std::string>() == "exhaustive") {
                config.exhaustive = true;
            } else if (mode.is_object()) {
                const auto name = mode.at("mode").get<std::string>();
                if (name == "exhaustive") {
                    config.exhaustive = true;
                } else if (name == "sampled") {
                    config.exhaustive = false;
                    config.sample_count = mode.at("count").get<int>();
                    config.sample_seed = mode.value("seed", 0ull);
                } else {
                    throw gtv::Error("sweep config: alpha_mode must be exhaustive or sampled");
                }
            } else {
                throw gtv::Error("sweep config: malformed alpha_mode");
            }
        }
        if (doc.contains("checks")) {
            config.checks = doc.at("checks").get<std::vector<std::string>>();
        } else {
            config.checks = {"three_distinct", "degree_total", "e1_matches_mu", "regularity_iff"};
        }
        config.output_path = doc.value("output_path", std::string("-"));
        config.format = doc.value("format", std::string("json"));
    } catch (const json::exception& e) {
        throw gtv::Error(std::string("sweep config: ") + e.what());
    }

    if (config.n_min > config.n_max || config.d_min > config.d_max) {
        throw gtv::Error("sweep config: empty n_range or d_range");
    }
    if (config.n_min < 2) throw gtv::Error("sweep config: n_range must start at 2 or higher");
    if (!config.exhaustive && config.sample_count < 1) {
        throw gtv::Error("sweep config: sampled count must be >= 1");
    }
    if (config.format != "json" && config.format != "csv") {
        throw gtv::Error("sweep config: format must be json or csv");
    }
    const auto& registry = registered_checks();
    for (const auto& name : config.checks) {
        if (std::find(registry.begin(), registry.end(), name) == registry.end()) {
            throw gtv::Error("sweep config: unknown check '" + name + "'");
        }
    }
    return config;
}

SweepConfig load_sweep_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw gtv::Error("sweep config: cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_sweep_config(buffer.str());
}

SweepOutcome run_sweep(const SweepConfig& config, int threads, bool with_timings) {
    const std::vector<GroupSpec> corpus =
        config.exhaustive ? exhaustive_corpus(config) : sampled_corpus(config);

    std::vector<ResultRecord> records(corpus.size());
    const std::size_t workers =
        std::min<std::size_t>(std::max(threads, 1), std::max<std::size_t>(corpus.size(), 1));
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (std::size_t i = next.fetch_add(1); i < corpus.size(); i = next.fetch_add(1)) {
            const auto start = std::chrono::steady_clock::now();
            try {
                records[i] = evaluate_spec(corpus[i], config.checks);
            } catch (const std::exception& e) {
                records[i].spec = corpus[i];
                records[i].skipped = e.what();
            }
            records[i].elapsed_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                    .count();
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    std::size_t gt = 0, level = 0, gorenstein = 0, level_gt = 0, failures = 0;
    for (const auto& r : records) {
        gt += r.is_gt;
        level += r.level;
        gorenstein += r.gorenstein;
        level_gt += r.level_gt;
        failures += r.failed_checks.size();
    }

    SweepOutcome outcome;
    outcome.records = records.size();
    outcome.check_failures = failures;
    {
        std::ostringstream line;
        line << "sweep: " << records.size() << " specs, " << gt << " GT, " << level << " level, "
             << gorenstein << " Gorenstein, " << level_gt << " level-GT, " << failures
             << " check failures";
        outcome.summary_line = line.str();
    }

    if (config.format == "json") {
        json report;
        report["config"] = json{{"n_range", {config.n_min, config.n_max}},
                                {"d_range", {config.d_min, config.d_max}},
                                {"alpha_mode", config.exhaustive
                                                   ? json("exhaustive")
                                                   : json{{"mode", "sampled"},
                                                          {"count", config.sample_count},
                                                          {"seed", config.sample_seed}}},
                                {"checks", config.checks},
                                {"format", config.format}};
        json rows = json::array();
        for (const auto& r : records) rows.push_back(record_to_json(r, with_timings));
        report["records"] = rows;
        report["summary"] = json{{"records", records.size()},
                                 {"gt", gt},
                                 {"level", level},
                                 {"gorenstein", gorenstein},
                                 {"level_gt", level_gt},
                                 {"check_failures", failures}};
        outcome.rendered = report.dump(2) + "\n";
    } else {
        std::ostringstream out;
        out << "n,d,alphas,mu,is_gt,quadrics,cubics,eta,level,gorenstein,level_gt,regularity,"
               "numerator,failed_checks,skipped\n";
        for (const auto& r : records) out << record_to_csv(r) << '\n';
        outcome.rendered = out.str();
    }
    return outcome;
}

}  // namespace gtvtool
