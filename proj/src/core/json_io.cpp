#include "json_io.hpp"

namespace amenlab {

namespace {

Code code_key(const std::string& key) {
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(key, &used);
    if (used != key.size()) throw std::invalid_argument(key);
    return code(v);
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::kMalformedInput, "bad code key '" + key + "'");
  }
}

Rational rational_value(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw Error(ErrorCode::kMalformedInput, "rational must be a \"p/q\" string");
}

}  // namespace

json codes_to_json(const CodeSet& s) {
  json a = json::array();
  for (Code c : s) a.push_back(value(c));
  return a;
}

CodeSet codes_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kMalformedInput, "expected a code list");
  std::vector<Code> out;
  for (const auto& e : j) {
    if (!e.is_number_unsigned() && !(e.is_number_integer() && e.get<std::int64_t>() >= 0)) {
      throw Error(ErrorCode::kMalformedInput, "codes are natural numbers");
    }
    out.push_back(code(e.get<std::uint64_t>()));
  }
  return make_set(std::move(out));
}

json defects_to_json(const DefectList& d) {
  json o = json::object();
  for (const auto& [x, r] : d) o[std::to_string(value(x))] = to_string(r);
  return o;
}

json to_json(const FolnerCertificate& c) {
  return json{{"spec", c.spec},
              {"D", codes_to_json(c.D)},
              {"n", c.n},
              {"F", codes_to_json(c.F)},
              {"defects", defects_to_json(c.defects)}};
}

FolnerCertificate certificate_from_json(const json& j) {
  try {
    FolnerCertificate c;
    c.spec = j.at("spec").get<std::string>();
    c.D = codes_from_json(j.at("D"));
    c.n = j.at("n").get<std::uint64_t>();
    c.F = codes_from_json(j.at("F"));
    if (j.contains("defects")) {
      for (const auto& [k, v] : j.at("defects").items()) {
        c.defects.emplace_back(code_key(k), rational_value(v));
      }
    }
    return c;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kMalformedInput, e.what());
  }
}

json to_json(const ReiterFunction& f) {
  json values = json::object();
  for (const auto& [c, v] : f.values()) values[std::to_string(value(c))] = to_string(v);
  return json{{"support", codes_to_json(f.support())}, {"values", values}};
}

ReiterFunction reiter_from_json(const json& j) {
  try {
    std::map<Code, Rational> m;
    for (const auto& [k, v] : j.at("values").items()) m[code_key(k)] = rational_value(v);
    if (j.contains("support")) {
      CodeSet declared = codes_from_json(j.at("support"));
      CodeSet actual;
      for (const auto& kv : m) actual.push_back(kv.first);
      if (declared != actual) {
        throw Error(ErrorCode::kMalformedInput, "support does not match values");
      }
    }
    return ReiterFunction(std::move(m));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kMalformedInput, e.what());
  }
}

SupportPartition partition_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kMalformedInput, "partition is a list of blocks");
  std::vector<CodeSet> blocks;
  for (const auto& b : j) blocks.push_back(codes_from_json(b));
  return SupportPartition(std::move(blocks));
}

json to_json(const WitnessVerdict& v) {
  json evidence = nullptr;
  if (v.pair) {
    evidence = json{{"pair", {value(v.pair->first), value(v.pair->second)}}};
  } else if (v.certificate) {
    evidence = json{{"certificate", to_json(*v.certificate)}};
  }
  return json{{"verdict", to_string(v.verdict)},
              {"evidence", evidence},
              {"rationale", v.rationale}};
}

json decomposition_report(const DecompositionView& d, std::uint64_t n1,
                          const VerifyReport& r) {
  json resolved = json::array();
  for (const auto& x : r.resolved) {
    resolved.push_back({{"m", value(x.m)},
                        {"theta1", value(x.theta1)},
                        {"theta2", value(x.theta2)},
                        {"psi1", value(x.psi1)},
                        {"psi2", value(x.psi2)}});
  }
  json unresolved = json::array();
  for (Code c : r.unresolved) unresolved.push_back(value(c));
  return json{{"n1", n1},
              {"K", codes_to_json(d.key())},
              {"resolved", resolved},
              {"unresolved", unresolved},
              {"violations", r.violations}};
}

const char* to_string(KappaVerdict v) noexcept {
  switch (v) {
    case KappaVerdict::kInvariant: return "INVARIANT";
    case KappaVerdict::kNotInvariant: return "NOT_INVARIANT";
    case KappaVerdict::kUnknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

}  // namespace amenlab
