#pragma once

#include <iosfwd>
#include <json.hpp>

#include "hartogs/extension.hpp"
#include "hartogs/worked_examples.hpp"

namespace hartogs {

using Json = nlohmann::json;

// Input format A (mode form): {"m": int, "components": [[{"n": int,
// "profile": {...}}, ...], ...]} with profile kinds poly, cutoff,
// cutoff_over_r, wermer, samples. Format B (sample form): CSV with header
// r,theta,j,re,im. load_series dispatches on the file extension.
RadialModeSeries parse_mode_json(const Json& j);
RadialModeSeries parse_sample_csv(std::istream& in, int max_mode);
RadialModeSeries load_series(const std::string& path, int max_mode = 8);

Json approximant_to_json(const SmoothApproximant& g, bool embed_source = true);
SmoothApproximant approximant_from_json(const Json& j);
SmoothApproximant load_approximant(const std::string& path);

Json hypothesis_to_json(const HypothesisReport& rep);
Json ledger_to_json(const BudgetLedger& led);
Json verify_to_json(const VerifyReport& rep);
Json certificate_to_json(const KontinuitaetssatzCertificate& cert);
Json limit_graph_to_json(const LimitGraph& lg);
Json example_to_json(const ExampleReport& rep);
Json extension_report_to_json(const ExtensionConsistencyReport& rep);

// r, eta_index, |zeta|, arg zeta, component, re, im
void dump_slice_csv(std::ostream& out, const FamilySlice& slice,
                    int eta_index, bool header);

std::string fnv1a_hex(const std::string& bytes);

// Report envelope: schema, version, digest, then the given blocks.
Json make_run_report(const std::string& input_digest,
                     const std::string& command);

}  // namespace hartogs
