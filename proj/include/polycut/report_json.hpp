#ifndef POLYCUT_REPORT_JSON_HPP
#define POLYCUT_REPORT_JSON_HPP

#include <json.hpp>

#include "polycut/complex.hpp"
#include "polycut/constructions.hpp"
#include "polycut/cuts.hpp"
#include "polycut/verifier.hpp"

namespace polycut {

// Reports are emitted as ordered_json so keys appear in declaration order and
// output is byte-stable for a given input.
using Json = nlohmann::ordered_json;

Json to_json(const ValidationReport& report);
Json to_json(const EdgeCut& cut);
Json to_json(const CutClassification& c);
Json to_json(const VerificationReport& report);
Json to_json(const LinkReport& report);
Json instance_to_json(const CampaignInstance& instance);
Json to_json(const CampaignSummary& summary);

/// Labels sidecar: {"labels": {...}, "f0": [...], "f1": [...], "designated_cut": [[u,v],...]}
Json labels_sidecar(const LabeledConstruction& construction);

}  // namespace polycut

#endif  // POLYCUT_REPORT_JSON_HPP
