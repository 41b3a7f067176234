// JSON forms of certificates, Reiter functions, verdicts and reports.

#ifndef AMENLAB_CORE_JSON_IO_HPP_
#define AMENLAB_CORE_JSON_IO_HPP_

#include <json.hpp>

#include "folner.hpp"
#include "paradox.hpp"
#include "reiter.hpp"
#include "witness.hpp"

namespace amenlab {

using nlohmann::json;

json codes_to_json(const CodeSet& s);
CodeSet codes_from_json(const json& j);

json defects_to_json(const DefectList& d);

// {spec, D, n, F, defects: {code: "p/q"}}
json to_json(const FolnerCertificate& c);
FolnerCertificate certificate_from_json(const json& j);

// {support, values: {code: "p/q"}}
json to_json(const ReiterFunction& f);
ReiterFunction reiter_from_json(const json& j);

// [[codes], ...]
SupportPartition partition_from_json(const json& j);

// {verdict, evidence: {pair} | {certificate} | null, rationale}
json to_json(const WitnessVerdict& v);

// {n1, K, resolved: [{m, theta1, theta2, psi1, psi2}], violations}
json decomposition_report(const DecompositionView& d, std::uint64_t n1,
                          const VerifyReport& r);

const char* to_string(KappaVerdict v) noexcept;

}  // namespace amenlab

#endif  // AMENLAB_CORE_JSON_IO_HPP_
