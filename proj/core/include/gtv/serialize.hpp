#pragma once

#include <optional>
#include <string>

#include "gtv/canonical.hpp"
#include "gtv/group_spec.hpp"
#include "gtv/hilbert.hpp"
#include "gtv/invariants.hpp"
#include "gtv/rl.hpp"
#include "gtv/toric.hpp"

namespace gtv {

// Serializers for the result types, used by the command-line tool and the
// sweep runner. All output is deterministic: fixed key order in JSON, fixed
// column order in CSV, no timestamps. Exponent vectors serialize as integer
// arrays; generator indices are 1-based to match the w_1..w_mu numbering.

// "w1*w15 - w4^2" (1-based, caret powers for repeated indices).
std::string binomial_str(const SuitableBinomial& b);

// --- JSON (one trailing newline, 2-space indent) ---
std::string to_json(const InvariantBasis& basis);
std::string to_json(const GroupSpec& spec, const GtClassification& cls);
std::string to_json(const GroupSpec& spec, const GeneratorSets& gens,
                    const std::optional<DegreeBoundCertification>& cert);
std::string to_json(const CanonicalModule& canonical, const RingClassification& cls);
std::string to_json(const HilbertData& data);
std::string to_json(const RlSpec& rl, const CohomologyTable& t);

// --- CSV ---
std::string to_csv(const InvariantBasis& basis);
std::string to_csv(const GroupSpec& spec, const GtClassification& cls);
std::string to_csv(const GroupSpec& spec, const GeneratorSets& gens);
std::string to_csv(const CanonicalModule& canonical, const RingClassification& cls);
std::string to_csv(const HilbertData& data);
std::string to_csv(const CohomologyTable& t);

// --- plain text ---
std::string to_table(const InvariantBasis& basis);
std::string to_table(const GroupSpec& spec, const GtClassification& cls);
std::string to_table(const GroupSpec& spec, const GeneratorSets& gens,
                     const std::optional<DegreeBoundCertification>& cert);
std::string to_table(const CanonicalModule& canonical, const RingClassification& cls);
std::string to_table(const HilbertData& data);
// Plain text for CohomologyTable is render_table (rl.hpp).

}  // namespace gtv
