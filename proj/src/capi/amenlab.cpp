#include "amenlab/amenlab.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "folner.hpp"
#include "group.hpp"
#include "harem.hpp"
#include "json_io.hpp"
#include "paradox.hpp"
#include "reiter.hpp"
#include "witness.hpp"
#include "word_problem.hpp"

struct amenlab_group {
  amenlab::Group g;
};

struct amenlab_harem {
  std::unique_ptr<amenlab::HaremState> state;
};

struct amenlab_decomp {
  std::unique_ptr<amenlab::DecompositionView> d;
  std::uint64_t n1 = 0;  // 0 for fixtures without an expanded key
};

namespace {

using namespace amenlab;

thread_local std::string g_last_error;

amenlab_status status_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::kMalformedSpec: return AMENLAB_ERR_MALFORMED_SPEC;
    case ErrorCode::kMalformedInput: return AMENLAB_ERR_MALFORMED_INPUT;
    case ErrorCode::kEmptySet: return AMENLAB_ERR_EMPTY_SET;
    case ErrorCode::kEmptySupport: return AMENLAB_ERR_EMPTY_SUPPORT;
    case ErrorCode::kNoLevelSet: return AMENLAB_ERR_NO_LEVEL_SET;
    case ErrorCode::kInternalInfeasible: return AMENLAB_ERR_INTERNAL_INFEASIBLE;
    case ErrorCode::kKeyNotInK: return AMENLAB_ERR_KEY_NOT_IN_K;
    case ErrorCode::kUnsupportedFamily: return AMENLAB_ERR_UNSUPPORTED_FAMILY;
    case ErrorCode::kPreconditionFailed: return AMENLAB_ERR_PRECONDITION_FAILED;
    case ErrorCode::kWrongMode: return AMENLAB_ERR_WRONG_MODE;
    case ErrorCode::kOverflow: return AMENLAB_ERR_OVERFLOW;
  }
  return AMENLAB_ERR_INTERNAL;
}

struct NullArgument {
  std::string what;
};

template <class Fn>
amenlab_status guard(Fn&& fn) noexcept {
  try {
    g_last_error.clear();
    return fn();
  } catch (const NullArgument& e) {
    g_last_error = e.what;
    return AMENLAB_ERR_NULL_ARGUMENT;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return AMENLAB_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown exception";
    return AMENLAB_ERR_INTERNAL;
  }
}

void need(const void* p, const char* name) {
  if (p == nullptr) throw NullArgument{std::string(name) + " is null"};
}

Budget budget_of(uint64_t b) { return Budget{b == 0 ? Budget{}.steps : b}; }

CodeSet to_set(const uint64_t* codes, size_t n) {
  if (n > 0 && codes == nullptr) throw NullArgument{"code list is null"};
  std::vector<Code> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) out.push_back(code(codes[i]));
  return make_set(std::move(out));
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put_string(char** out, const std::string& s) {
  if (out) *out = dup_string(s);
}

void put_codes(const std::vector<Code>& codes, uint64_t** out, size_t* count) {
  need(out, "out");
  need(count, "count");
  auto* buf = static_cast<uint64_t*>(std::malloc(sizeof(uint64_t) * (codes.size() + 1)));
  if (!buf) throw std::bad_alloc();
  for (size_t i = 0; i < codes.size(); ++i) buf[i] = value(codes[i]);
  *out = buf;
  *count = codes.size();
}

json parse_json(const char* text) {
  need(text, "json");
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kMalformedInput, e.what());
  }
}

const Group& group_of(const amenlab_group* g) {
  need(g, "group");
  return g->g;
}

}  // namespace

extern "C" {

const char* amenlab_last_error(void) { return g_last_error.c_str(); }

const char* amenlab_status_name(amenlab_status s) {
  switch (s) {
    case AMENLAB_OK: return "OK";
    case AMENLAB_UNKNOWN: return "UNKNOWN";
    case AMENLAB_ERR_MALFORMED_SPEC: return "MALFORMED_SPEC";
    case AMENLAB_ERR_MALFORMED_INPUT: return "MALFORMED_INPUT";
    case AMENLAB_ERR_EMPTY_SET: return "EMPTY_SET";
    case AMENLAB_ERR_EMPTY_SUPPORT: return "EMPTY_SUPPORT";
    case AMENLAB_ERR_NO_LEVEL_SET: return "NO_LEVEL_SET";
    case AMENLAB_ERR_INTERNAL_INFEASIBLE: return "INTERNAL_INFEASIBLE";
    case AMENLAB_ERR_KEY_NOT_IN_K: return "KEY_NOT_IN_K";
    case AMENLAB_ERR_UNSUPPORTED_FAMILY: return "UNSUPPORTED_FAMILY";
    case AMENLAB_ERR_PRECONDITION_FAILED: return "PRECONDITION_FAILED";
    case AMENLAB_ERR_WRONG_MODE: return "WRONG_MODE";
    case AMENLAB_ERR_OVERFLOW: return "OVERFLOW";
    case AMENLAB_ERR_NULL_ARGUMENT: return "NULL_ARGUMENT";
    case AMENLAB_ERR_INTERNAL: return "INTERNAL";
  }
  return "INVALID_STATUS";
}

void amenlab_string_free(char* s) { std::free(s); }
void amenlab_codes_free(uint64_t* codes) { std::free(codes); }

// ---- groups -----------------------------------------------------------------

amenlab_status amenlab_group_new(const char* spec, amenlab_group** out) {
  return guard([&] {
    need(spec, "spec");
    need(out, "out");
    *out = new amenlab_group{make_group(spec)};
    return AMENLAB_OK;
  });
}

amenlab_status amenlab_group_as_ce(const amenlab_group* g, amenlab_group** out) {
  return guard([&] {
    need(out, "out");
    *out = new amenlab_group{as_ce(group_of(g))};
    return AMENLAB_OK;
  });
}

void amenlab_group_free(amenlab_group* g) { delete g; }

int amenlab_group_is_ce(const amenlab_group* g) {
  return g != nullptr && g->g.mode() == Mode::kCe;
}

amenlab_status amenlab_group_parse(const amenlab_group* g, const char* literal,
                                   uint64_t* out) {
  return guard([&] {
    need(literal, "literal");
    need(out, "out");
    *out = value(parse_element(group_of(g), literal));
    return AMENLAB_OK;
  });
}

amenlab_status amenlab_group_parse_list(const amenlab_group* g, const char* text,
                                        uint64_t** out, size_t* count) {
  return guard([&] {
    need(text, "text");
    put_codes(parse_element_list(group_of(g), text), out, count);
    return AMENLAB_OK;
  });
}

amenlab_status amenlab_group_format(const amenlab_group* g, uint64_t x,
                                    char** out) {
  return guard([&] {
    need(out, "out");
    *out = dup_string(group_of(g).family().format(code(x)));
    return AMENLAB_OK;
  });
}

amenlab_status amenlab_group_mult(const amenlab_group* g, uint64_t x,
                                  uint64_t y, uint64_t* out) {
  return guard([&] {
    need(out, "out");
    *out = value(group_of(g).mult(code(x), code(y)));
    return AMENLAB_OK;
  });
}

amenlab_status amenlab_group_inv(const amenlab_group* g, uint64_t x,
                                 uint64_t* out) {
  return guard([&] {
    need(out, "out");
    *out = value(group_of(g).inv(code(x)));
    return AMENLAB_OK;
  });
}

amenlab_status amenlab_group_eq(const amenlab_group* g, uint64_t x, uint64_t y,
                                int* equal) {
  return guard([&] {
    need(equal, "equal");
    *equal = group_of(g).eq(code(x), code(y)) ? 1 : 0;
    return AMENLAB_OK;
  });
}

amenlab_status amenlab_group_eq_semidecide(const amenlab_group* g, uint64_t x,
                                           uint64_t y, uint64_t budget,
                                           int* equal) {
  return guard([&] {
    need(equal, "equal");
    auto d = eq_semidecide(group_of(g), code(x), code(y), budget_of(budget));
    if (d.outcome == EqOutcome::kUnknown) return AMENLAB_UNKNOWN;
    *equal = 1;
    return AMENLAB_OK;
  });
}

amenlab_status amenlab_group_ball(const amenlab_group* g, const uint64_t* gens,
                                  size_t n_gens, unsigned radius, uint64_t** out,
                                  size_t* count) {
  return guard([&] {
    put_codes(ball(group_of(g), to_set(gens, n_gens), radius), out, count);
    return AMENLAB_OK;
  });
}

// ---- Følner -----------------------------------------------------------------

amenlab_status amenlab_is_n_folner(const amenlab_group* g, const uint64_t* F,
                                   size_t n_F, const uint64_t* D, size_t n_D,
                                   uint64_t n, int* ok, char** defects_json) {
  return guard([&] {
    need(ok, "ok");
    auto r = is_n_folner(group_of(g), to_set(F, n_F), to_set(D, n_D), n);
    *ok = r.ok ? 1 : 0;
    put_string(defects_json, defects_to_json(r.defects).dump());
    return AMENLAB_OK;
  });
}

amenlab_status amenlab_is_n_folner_complement(const amenlab_group* g,
                                              const uint64_t* F, size_t n_F,
                                              const uint64_t* D, size_t n_D,
                                              uint64_t n, int* ok) {
  return guard([&] {
    need(ok, "ok");
    *ok = is_n_folner_complement(group_of(g), to_set(F, n_F), to_set(D, n_D), n);
    return AMENLAB_OK;
  });
}

amenlab_status amenlab_search_folner(const amenlab_group* g, const uint64_t* D,
                                     size_t n_D, uint64_t n, uint64_t budget,
                                     char** certificate_json, uint64_t* steps) {
  return guard([&] {
    need(certificate_json, "certificate_json");
    auto r = search_folner(group_of(g), to_set(D, n_D), n, budget_of(budget));
    if (steps) *steps = r.steps;
    if (!r.certificate) return AMENLAB_UNKNOWN;
    *certificate_json = dup_string(to_json(*r.certificate).dump());
    return AMENLAB_OK;
  });
}

amenlab_status amenlab_folner_function(const amenlab_group* g, const uint64_t* D,
                                       size_t n_D, uint64_t n, uint64_t budget,
                                       char** report_json) {
  return guard([&] {
    need(report_json, "report_json");
    auto r = folner_function(group_of(g), to_set(D, n_D), n, budget_of(budget));
    json j{{"scope", r.scope}, {"steps", r.steps}, {"budget", budget_of(budget).steps}};
    if (r.min_size) {
      j["min_size"] = *r.min_size;
      j["witness"] = codes_to_json(r.witness);
    } else {
      j["min_size"] = nullptr;
    }
    *report_json = dup_string(j.dump());
    return r.min_size ? AMENLAB_OK : AMENLAB_UNKNOWN;
  });
}

amenlab_status amenlab_folner_sequence(const amenlab_group* g, uint64_t j,
                                       uint64_t budget, char** certificate_json) {
  return guard([&] {
    need(certificate_json, "certificate_json");
    auto r = folner_sequence(group_of(g), j, budget_of(budget));
    if (!r.certificate) return AMENLAB_UNKNOWN;
    *certificate_json = dup_string(to_json(*r.certificate).dump());
    return AMENLAB_OK;
  });
}

amenlab_status amenlab_reiter_defect(const amenlab_group* g, const char* f_json,
                                     const uint64_t* D, size_t n_D,
                                     char** defects_json) {
  return guard([&] {
    need(defects_json, "defects_json");
    auto f = reiter_from_json(parse_json(f_json));
    auto d = reiter_defect(group_of(g), f, to_set(D, n_D));
    *defects_json = dup_string(defects_to_json(d).dump());
    return AMENLAB_OK;
  });
}

amenlab_status amenlab_partition_defect(const amenlab_group* g,
                                        const char* f_json,
                                        const char* partition_json, uint64_t x,
                                        char** rational) {
  return guard([&] {
    need(rational, "rational");
    const Group& G = group_of(g);
    auto f = reiter_from_json(parse_json(f_json));
    auto p = partition_from_json(parse_json(partition_json));
    auto m = partition_defect(f, p, code(x),
                              [&](Code a, Code b) { return G.mult(a, b); });
    *rational = dup_string(to_string(m));
    return AMENLAB_OK;
  });
}

amenlab_status amenlab_kappa_verify(const amenlab_group* g, uint64_t n,
                                    const uint64_t* D, size_t n_D,
                                    const char* f_json, uint64_t budget,
                                    char** report_json) {
  return guard([&] {
    need(report_json, "report_json");
    auto f = reiter_from_json(parse_json(f_json));
    auto r = kappa_verify(group_of(g), n, to_set(D, n_D), f, budget_of(budget));
    json j{{"verdict", to_string(r.verdict)},
           {"steps", r.steps},
           {"budget", budget_of(budget).steps},
           {"merges", r.merges},
           {"defects", defects_to_json(r.last_defects)}};
    *report_json = dup_string(j.dump());
    return r.verdict == KappaVerdict::kUnknown ? AMENLAB_UNKNOWN : AMENLAB_OK;
  });
}

amenlab_status amenlab_extract_folner(const amenlab_group* g, const char* h_json,
                                      const uint64_t* D, size_t n_D, uint64_t n,
                                      uint64_t** out, size_t* count) {
  return guard([&] {
    auto h = reiter_from_json(parse_json(h_json));
    put_codes(extract_folner_from_reiter(group_of(g), h, to_set(D, n_D), n), out,
              count);
    return AMENLAB_OK;
  });
}

amenlab_status amenlab_decide_mult(const amenlab_group* g, uint64_t n1,
                                   uint64_t n2, uint64_t n3, uint64_t budget,
                                   int* equal, char** report_json) {
  return guard([&] {
    need(equal, "equal");
    const Group& G = group_of(g);
    if (G.mode() != Mode::kComputable) {
      throw Error(ErrorCode::kWrongMode,
                  "the Følner oracle searches a computable presentation");
    }
    auto r = decide_mult_from_folner(as_ce(G), search_oracle(G, budget_of(budget)),
                                     code(n1), code(n2), code(n3),
                                     budget_of(budget));
    json j{{"k", r.k},
           {"sigma", {r.sigma_sizes[0], r.sigma_sizes[1], r.sigma_sizes[2]}},
           {"witnesses", r.witnesses},
           {"steps", r.steps},
           {"budget", budget_of(budget).steps}};
    j["equal"] = r.equal ? json(*r.equal) : json(nullptr);
    put_string(report_json, j.dump());
    if (!r.equal) return AMENLAB_UNKNOWN;
    *equal = *r.equal ? 1 : 0;
    return AMENLAB_OK;
  });
}

// ---- harem ------------------------------------------------------------------

amenlab_status amenlab_harem_new_cayley(const amenlab_group* g, const uint64_t* K,
                                        size_t n_K, unsigned k, int64_t slope,
                                        int64_t intercept, unsigned radius_cap,
                                        amenlab_harem** out) {
  return guard([&] {
    need(out, "out");
    auto graph = std::make_shared<CayleyBipartite>(group_of(g), to_set(K, n_K));
    HaremOptions opt;
    if (radius_cap > 0) opt.max_radius = radius_cap;
    auto st = std::make_unique<HaremState>(
        graph, HallWitnessFn::affine(slope, intercept), k, opt);
    *out = new amenlab_harem{std::move(st)};
    return AMENLAB_OK;
  });
}

void amenlab_harem_free(amenlab_harem* h) { delete h; }

amenlab_status amenlab_harem_step(amenlab_harem* h) {
  return guard([&] {
    need(h, "harem");
    h->state->step();
    return AMENLAB_OK;
  });
}

uint64_t amenlab_harem_steps(const amenlab_harem* h) {
  return h ? h->state->steps() : 0;
}

amenlab_status amenlab_harem_query(amenlab_harem* h, uint64_t v, uint64_t budget,
                                   uint64_t** out, size_t* count) {
  return guard([&] {
    need(h, "harem");
    auto p = harem_query(*h->state, code(v), budget_of(budget));
    if (!p) return AMENLAB_UNKNOWN;
    put_codes(*p, out, count);
    return AMENLAB_OK;
  });
}

amenlab_status amenlab_harem_dump(const amenlab_harem* h, char** text) {
  return guard([&] {
    need(h, "harem");
    need(text, "text");
    *text = dup_string(h->state->dump());
    return AMENLAB_OK;
  });
}

// ---- paradox ----------------------------------------------------------------

amenlab_status amenlab_decomp_build(const amenlab_group* g, const uint64_t* K0,
                                    size_t n_K0, uint64_t n, unsigned radius_cap,
                                    amenlab_decomp** out) {
  return guard([&] {
    need(out, "out");
    HaremOptions opt;
    if (radius_cap > 0) opt.max_radius = radius_cap;
    auto d = build_decomposition(group_of(g), to_set(K0, n_K0), n, opt);
    const std::uint64_t n1 = d->expanded_key().n1;
    *out = new amenlab_decomp{std::move(d), n1};
    return AMENLAB_OK;
  });
}

amenlab_status amenlab_decomp_classical(amenlab_decomp** out) {
  return guard([&] {
    need(out, "out");
    *out = new amenlab_decomp{std::make_unique<ClassicalFreeDecomposition>(), 0};
    return AMENLAB_OK;
  });
}

void amenlab_decomp_free(amenlab_decomp* d) { delete d; }

amenlab_status amenlab_decomp_key(const amenlab_decomp* d, uint64_t** K,
                                  size_t* count, uint64_t* n1) {
  return guard([&] {
    need(d, "decomposition");
    put_codes(d->d->key(), K, count);
    if (n1) *n1 = d->n1;
    return AMENLAB_OK;
  });
}

amenlab_status amenlab_decomp_membership(amenlab_decomp* d, uint64_t k,
                                         uint64_t m, int side, uint64_t budget,
                                         int* in) {
  return guard([&] {
    need(d, "decomposition");
    need(in, "in");
    if (side != 0 && side != 1) {
      throw Error(ErrorCode::kMalformedInput, "side must be 0 (A) or 1 (B)");
    }
    auto r = decomp_membership(*d->d, code(k), code(m),
                               side == 0 ? Side::kA : Side::kB, budget_of(budget));
    if (r == Membership::kUnknown) return AMENLAB_UNKNOWN;
    *in = r == Membership::kIn ? 1 : 0;
    return AMENLAB_OK;
  });
}

amenlab_status amenlab_decomp_verify(amenlab_decomp* d, uint64_t count,
                                     uint64_t budget, char** report_json) {
  return guard([&] {
    need(d, "decomposition");
    need(report_json, "report_json");
    auto r = verify_decomposition_prefix(*d->d, count, budget_of(budget));
    json j = decomposition_report(*d->d, d->n1, r);
    j["budget"] = budget_of(budget).steps;
    *report_json = dup_string(j.dump());
    return r.unresolved.empty() ? AMENLAB_OK : AMENLAB_UNKNOWN;
  });
}

// ---- witnesses --------------------------------------------------------------

amenlab_status amenlab_witness_commutation(const amenlab_group* g,
                                           const uint64_t* K, size_t n_K,
                                           char** verdict_json) {
  return guard([&] {
    need(verdict_json, "verdict_json");
    auto v = decide_witness_commutation(group_of(g), to_set(K, n_K));
    *verdict_json = dup_string(to_json(v).dump());
    return AMENLAB_OK;
  });
}

amenlab_status amenlab_witness_refute(const amenlab_group* g, const uint64_t* K,
                                      size_t n_K, uint64_t n,
                                      uint64_t size_bound, uint64_t budget,
                                      char** report_json) {
  return guard([&] {
    need(report_json, "report_json");
    auto r = refute_witness_bounded(group_of(g), to_set(K, n_K), n, size_bound,
                                    budget_of(budget));
    const char* result = r.status == RefuteStatus::kFound       ? "FOUND"
                         : r.status == RefuteStatus::kNoneFound ? "NONE_FOUND"
                                                                : "UNKNOWN";
    json j{{"result", result},
           {"subsets", r.subsets},
           {"steps", r.steps},
           {"budget", budget_of(budget).steps}};
    j["certificate"] = r.certificate ? to_json(*r.certificate) : json(nullptr);
    *report_json = dup_string(j.dump());
    return r.status == RefuteStatus::kUnknown ? AMENLAB_UNKNOWN : AMENLAB_OK;
  });
}

amenlab_status amenlab_subgroup_contains(const amenlab_group* g,
                                         const uint64_t* K, size_t n_K,
                                         uint64_t x, int* member) {
  return guard([&] {
    need(member, "member");
    *member = subgroup_membership(group_of(g), to_set(K, n_K))->contains(code(x));
    return AMENLAB_OK;
  });
}

amenlab_status amenlab_restrict_folner(const amenlab_group* g, const uint64_t* K,
                                       size_t n_K, uint64_t n,
                                       const uint64_t* F_m, size_t n_F,
                                       uint64_t** out, size_t* count) {
  return guard([&] {
    auto S = restrict_folner_to_subgroup(group_of(g), to_set(K, n_K), n,
                                         to_set(F_m, n_F));
    put_codes(S, out, count);
    return AMENLAB_OK;
  });
}

}  // extern "C"
