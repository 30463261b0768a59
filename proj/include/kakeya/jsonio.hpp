#pragma once

#include <json.hpp>

#include "kakeya/covers.hpp"
#include "kakeya/dirsets.hpp"
#include "kakeya/kakeyasets.hpp"
#include "kakeya/localgeom.hpp"

namespace kakeya {

using json = nlohmann::json;

// Reports (one-way: toolkit -> JSON). Key order is alphabetical and the
// content is deterministic; wall-clock timings are deliberately absent.
json report_to_json(const VerificationReport& rep, const std::string& set_name,
                    bool include_witnesses = true);
json diagnosis_to_json(const DiagnosisReport& rep);
json direction_set_to_json(const DirectionSet& delta);
json subvariety_report_to_json(const KakeyaSubvarietyReport& rep);
json cover_report_to_json(const CoverReport& rep);

// Constructible sets and certificates (round-trip). The certificate schema
// is {"cases":[{"guard":{"vanish":[...],"nonvanish":[...]},"base":[...],
// "dir":[...],"denominators":[...]}]} with expressions over v1..vn.
json set_to_json(const ConstructibleSet& E, const KakeyaCertificate* cert);
std::pair<ConstructibleSet, std::optional<KakeyaCertificate>> set_from_json(const json& j);

json certificate_to_json(const KakeyaCertificate& cert);
KakeyaCertificate certificate_from_json(const json& j, unsigned ambient_dim);

// Cover specs (round-trip).
json cover_spec_to_json(const CoverSpec& spec);
CoverSpec cover_spec_from_json(const json& j);

}  // namespace kakeya
