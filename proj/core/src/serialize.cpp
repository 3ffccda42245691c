#include "gtv/serialize.hpp"

#include <cstdint>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace gtv {

namespace {

using nlohmann::json;

// BigInts serialize as JSON numbers while they fit in int64 (every quantity
// in the supported parameter ranges does), falling back to decimal strings
// beyond that so nothing is ever rounded.
json big_to_json(const BigInt& value) {
    if (value >= std::numeric_limits<std::int64_t>::min() &&
        value <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(value);
    }
    return value.str();
}

json spec_to_json(const GroupSpec& spec) {
    return json{{"n", spec.n()}, {"d", spec.d()}, {"alphas", spec.alphas()}};
}

json monomials_to_json(const std::vector<ExponentVector>& monomials) {
    json out = json::array();
    for (const auto& m : monomials) out.push_back(m.exps());
    return out;
}

json indices_to_json(const IndexMultiset& indices) {
    json out = json::array();
    for (int i : indices) out.push_back(i + 1);  // w_1..w_mu numbering
    return out;
}

json binomial_to_json(const SuitableBinomial& b) {
    return json{{"plus", indices_to_json(b.plus)}, {"minus", indices_to_json(b.minus)}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

std::string join_indices(const IndexMultiset& indices) {
    std::ostringstream out;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i) out << ' ';
        out << indices[i] + 1;
    }
    return out.str();
}

}  // namespace

std::string binomial_str(const SuitableBinomial& b) {
    auto side = [](const IndexMultiset& indices) {
        std::ostringstream out;
        for (std::size_t i = 0; i < indices.size();) {
            std::size_t run = i;
            while (run < indices.size() && indices[run] == indices[i]) ++run;
            if (i) out << '*';
            out << 'w' << indices[i] + 1;
            if (run - i > 1) out << '^' << run - i;
            i = run;
        }
        return out.str();
    };
    return side(b.plus) + " - " + side(b.minus);
}

// --- JSON --------------------------------------------------------------

std::string to_json(const InvariantBasis& basis) {
    json j{{"spec", spec_to_json(basis.spec)},
           {"t", basis.t},
           {"mu", basis.mu()},
           {"monomials", monomials_to_json(basis.monomials)}};
    return dump(j);
}

std::string to_json(const GroupSpec& spec, const GtClassification& cls) {
    json j{{"spec", spec_to_json(spec)},
           {"mu", big_to_json(cls.mu_d)},
           {"togliatti_bound", big_to_json(cls.togliatti_bound)},
           {"is_gt_system", cls.is_gt_system}};
    if (cls.wlp_report) {
        json samples = json::array();
        for (const auto& [seed, rank] : cls.wlp_report->sampled_ranks) {
            samples.push_back(json{{"seed", seed}, {"rank", big_to_json(rank)}});
        }
        j["wlp"] = json{{"domain_dim", big_to_json(cls.wlp_report->domain_dim)},
                        {"codomain_dim", big_to_json(cls.wlp_report->codomain_dim)},
                        {"sampled_ranks", samples},
                        {"deficiency_witnessed", cls.wlp_report->deficiency_witnessed}};
    }
    return dump(j);
}

std::string to_json(const GroupSpec& spec, const GeneratorSets& gens,
                    const std::optional<DegreeBoundCertification>& cert) {
    json quadrics = json::array();
    for (const auto& b : gens.quadrics) quadrics.push_back(binomial_to_json(b));
    json cubics = json::array();
    for (const auto& b : gens.cubics) cubics.push_back(binomial_to_json(b));
    json j{{"spec", spec_to_json(spec)},
           {"quadric_count", gens.quadrics.size()},
           {"cubic_count", gens.cubics.size()},
           {"quadrics", quadrics},
           {"cubics", cubics}};
    if (cert) {
        json disconnected = json::array();
        for (const auto& [k, key] : cert->disconnected) {
            disconnected.push_back(json{{"k", k}, {"key", key.exps()}});
        }
        j["certification"] = json{{"k_min", cert->k_min},
                                  {"k_max", cert->k_max},
                                  {"fibers_checked", cert->fibers_checked},
                                  {"disconnected", disconnected},
                                  {"certified", cert->certified}};
    }
    return dump(j);
}

std::string to_json(const CanonicalModule& canonical, const RingClassification& cls) {
    json c2_minimal = json::array();
    for (std::size_t i = canonical.c1.size(); i < canonical.minimal_gens.size(); ++i) {
        c2_minimal.push_back(canonical.minimal_gens[i].exps());
    }
    json j{{"spec", spec_to_json(canonical.spec)},
           {"c1", monomials_to_json(canonical.c1)},
           {"c2_minimal", c2_minimal},
           {"eta", canonical.eta_d()},
           {"level", cls.is_level},
           {"gorenstein", cls.is_gorenstein},
           {"regularity", cls.regularity},
           {"level_gt", cls.is_level_gt}};
    return dump(j);
}

std::string to_json(const HilbertData& data) {
    json e = json::array();
    for (const auto& value : data.e) e.push_back(big_to_json(value));
    json j{{"spec", spec_to_json(data.spec)},
           {"e", e},
           {"numerator", e},
           {"degree", big_to_json(data.degree_of_variety)}};
    return dump(j);
}

std::string to_json(const RlSpec& rl, const CohomologyTable& t) {
    json rows;
    for (int i = 0; i <= t.n; ++i) {
        json row = json::array();
        for (int j = t.j_min; j <= t.j_max; ++j) {
            row.push_back(big_to_json(t.entries.at({i, i - j})));
        }
        rows[std::to_string(i)] = row;
    }
    json j{{"spec", spec_to_json(rl.spec)},
           {"eta", rl.eta},
           {"N", big_to_json(rl.big_n)},
           {"j_min", t.j_min},
           {"j_max", t.j_max},
           {"rows", rows}};
    return dump(j);
}

// --- CSV ---------------------------------------------------------------

std::string to_csv(const InvariantBasis& basis) {
    std::ostringstream out;
    for (int i = 0; i < basis.spec.nvars(); ++i) out << 'x' << i << ',';
    out << "monomial\n";
    for (const auto& m : basis.monomials) {
        for (std::size_t i = 0; i < m.nvars(); ++i) out << m[i] << ',';
        out << csv_escape(m.str()) << '\n';
    }
    return out.str();
}

std::string to_csv(const GroupSpec& spec, const GtClassification& cls) {
    std::ostringstream out;
    out << "key,value\n";
    out << "spec," << csv_escape(spec.str()) << '\n';
    out << "mu," << cls.mu_d << '\n';
    out << "togliatti_bound," << cls.togliatti_bound << '\n';
    out << "is_gt_system," << bool_str(cls.is_gt_system) << '\n';
    if (cls.wlp_report) {
        out << "wlp_domain_dim," << cls.wlp_report->domain_dim << '\n';
        out << "wlp_codomain_dim," << cls.wlp_report->codomain_dim << '\n';
        for (const auto& [seed, rank] : cls.wlp_report->sampled_ranks) {
            out << "wlp_rank_seed_" << seed << ',' << rank << '\n';
        }
        out << "wlp_deficiency_witnessed," << bool_str(cls.wlp_report->deficiency_witnessed)
            << '\n';
    }
    return out.str();
}

std::string to_csv(const GroupSpec& spec, const GeneratorSets& gens) {
    (void)spec;
    std::ostringstream out;
    out << "degree,plus,minus\n";
    for (const auto& b : gens.quadrics) {
        out << 2 << ',' << join_indices(b.plus) << ',' << join_indices(b.minus) << '\n';
    }
    for (const auto& b : gens.cubics) {
        out << 3 << ',' << join_indices(b.plus) << ',' << join_indices(b.minus) << '\n';
    }
    return out.str();
}

std::string to_csv(const CanonicalModule& canonical, const RingClassification& cls) {
    std::ostringstream out;
    out << "key,value\n";
    out << "spec," << csv_escape(canonical.spec.str()) << '\n';
    out << "eta," << canonical.eta_d() << '\n';
    out << "level," << bool_str(cls.is_level) << '\n';
    out << "gorenstein," << bool_str(cls.is_gorenstein) << '\n';
    out << "regularity," << cls.regularity << '\n';
    out << "level_gt," << bool_str(cls.is_level_gt) << '\n';
    for (const auto& m : canonical.c1) out << "c1," << csv_escape(m.str()) << '\n';
    for (std::size_t i = canonical.c1.size(); i < canonical.minimal_gens.size(); ++i) {
        out << "c2_minimal," << csv_escape(canonical.minimal_gens[i].str()) << '\n';
    }
    return out.str();
}

std::string to_csv(const HilbertData& data) {
    std::ostringstream out;
    out << "key,value\n";
    out << "spec," << csv_escape(data.spec.str()) << '\n';
    for (std::size_t j = 0; j < data.e.size(); ++j) {
        out << 'e' << j << ',' << data.e[j] << '\n';
    }
    out << "degree," << data.degree_of_variety << '\n';
    return out.str();
}

std::string to_csv(const CohomologyTable& t) {
    std::ostringstream out;
    out << "i,k,value\n";
    for (int i = 0; i <= t.n; ++i) {
        for (int j = t.j_max; j >= t.j_min; --j) {  // ascending k within each row
            out << i << ',' << i - j << ',' << t.entries.at({i, i - j}) << '\n';
        }
    }
    return out.str();
}

// --- plain text ----------------------------------------------------------

std::string to_table(const InvariantBasis& basis) {
    std::ostringstream out;
    for (const auto& m : basis.monomials) out << m.str() << '\n';
    return out.str();
}

std::string to_table(const GroupSpec& spec, const GtClassification& cls) {
    std::ostringstream out;
    out << "spec = " << spec.str() << '\n';
    out << "mu = " << cls.mu_d << '\n';
    out << "togliatti_bound = " << cls.togliatti_bound << '\n';
    out << "is_gt_system = " << bool_str(cls.is_gt_system) << '\n';
    if (cls.wlp_report) {
        out << "wlp domain_dim = " << cls.wlp_report->domain_dim
            << ", codomain_dim = " << cls.wlp_report->codomain_dim << '\n';
        for (const auto& [seed, rank] : cls.wlp_report->sampled_ranks) {
            out << "wlp rank (seed " << seed << ") = " << rank << '\n';
        }
        out << "wlp deficiency_witnessed = " << bool_str(cls.wlp_report->deficiency_witnessed)
            << '\n';
    }
    return out.str();
}

std::string to_table(const GroupSpec& spec, const GeneratorSets& gens,
                     const std::optional<DegreeBoundCertification>& cert) {
    std::ostringstream out;
    out << "spec = " << spec.str() << '\n';
    out << "quadrics = " << gens.quadrics.size() << '\n';
    out << "cubics = " << gens.cubics.size() << '\n';
    for (const auto& b : gens.quadrics) out << binomial_str(b) << '\n';
    for (const auto& b : gens.cubics) out << binomial_str(b) << '\n';
    if (cert) {
        out << "certified degrees " << cert->k_min << ".." << cert->k_max << ": "
            << (cert->certified ? "all fiber graphs connected" : "DISCONNECTED FIBERS FOUND")
            << " (" << cert->fibers_checked << " fibers)" << '\n';
        for (const auto& [k, key] : cert->disconnected) {
            out << "disconnected fiber at k=" << k << ": " << key.str() << '\n';
        }
    }
    return out.str();
}

std::string to_table(const CanonicalModule& canonical, const RingClassification& cls) {
    std::ostringstream out;
    out << "spec = " << canonical.spec.str() << '\n';
    out << "eta = " << canonical.eta_d() << '\n';
    out << "level = " << bool_str(cls.is_level) << '\n';
    out << "gorenstein = " << bool_str(cls.is_gorenstein) << '\n';
    out << "regularity = " << cls.regularity << '\n';
    out << "level_gt = " << bool_str(cls.is_level_gt) << '\n';
    out << "minimal generators (" << canonical.minimal_gens.size() << "):\n";
    for (const auto& m : canonical.minimal_gens) out << "  " << m.str() << '\n';
    return out.str();
}

std::string to_table(const HilbertData& data) {
    std::ostringstream out;
    out << "spec = " << data.spec.str() << '\n';
    out << render_series(data) << '\n';
    out << "degree = " << data.degree_of_variety << '\n';
    return out.str();
}

}  // namespace gtv
