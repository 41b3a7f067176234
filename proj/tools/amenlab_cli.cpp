// amenlab command-line front end. Talks to the library only through the C API.
//
// Exit codes: 0 definite answer, 2 UNKNOWN (budget), 3 precondition
// violation or failed verification, 4 malformed input, 1 internal error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "amenlab/amenlab.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitMalformed = 4;

struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(amenlab_status s) {
  switch (s) {
    case AMENLAB_OK: return kExitOk;
    case AMENLAB_UNKNOWN: return kExitUnknown;
    case AMENLAB_ERR_MALFORMED_SPEC:
    case AMENLAB_ERR_MALFORMED_INPUT:
    case AMENLAB_ERR_NULL_ARGUMENT: return kExitMalformed;
    case AMENLAB_ERR_INTERNAL: return kExitInternal;
    default: return kExitPrecondition;
  }
}

// Throws Failure on anything other than OK or (when allowed) UNKNOWN.
amenlab_status check(amenlab_status s, bool unknown_ok = false) {
  if (s == AMENLAB_OK || (unknown_ok && s == AMENLAB_UNKNOWN)) return s;
  throw Failure{exit_code_for(s), std::string(amenlab_status_name(s)) + ": " +
                                      amenlab_last_error()};
}

struct GroupDeleter {
  void operator()(amenlab_group* g) const { amenlab_group_free(g); }
};
struct DecompDeleter {
  void operator()(amenlab_decomp* d) const { amenlab_decomp_free(d); }
};
struct HaremDeleter {
  void operator()(amenlab_harem* h) const { amenlab_harem_free(h); }
};
using GroupPtr = std::unique_ptr<amenlab_group, GroupDeleter>;

std::string take(char* s) {
  std::string out = s ? s : "";
  amenlab_string_free(s);
  return out;
}

std::vector<uint64_t> take(uint64_t* codes, size_t n) {
  std::vector<uint64_t> out(codes, codes + n);
  amenlab_codes_free(codes);
  return out;
}

struct Options {
  std::string group;
  std::string d, k, k0, f, in, out, mult;
  uint64_t n = 0;
  uint64_t budget = 1000000;
  uint64_t verify = 0;
  uint64_t size_bound = 6;
  uint64_t steps = 10;
  unsigned radius_cap = 0;
  unsigned match_k = 1;
  bool json = false;
  bool classical = false;
};

class Session {
 public:
  explicit Session(const Options& o) : o_(o) {
    amenlab_group* g = nullptr;
    check(amenlab_group_new(o.group.c_str(), &g));
    g_.reset(g);
  }

  amenlab_group* g() const { return g_.get(); }

  std::vector<uint64_t> codes(const std::string& text, const char* flag) const {
    if (text.empty()) {
      throw Failure{kExitMalformed, std::string("missing ") + flag};
    }
    uint64_t* out = nullptr;
    size_t n = 0;
    check(amenlab_group_parse_list(g(), text.c_str(), &out, &n));
    return take(out, n);
  }

  std::string format(uint64_t c) const {
    char* s = nullptr;
    check(amenlab_group_format(g(), c, &s));
    return take(s);
  }

  std::string format_list(const json& codes) const {
    std::string out = "{";
    bool first = true;
    for (const auto& c : codes) {
      out += (first ? "" : ", ") + format(c.get<uint64_t>());
      first = false;
    }
    return out + "}";
  }

 private:
  const Options& o_;
  GroupPtr g_;
};

void write_out(const Options& o, const json& j) {
  if (o.out.empty()) return;
  std::ofstream f(o.out);
  if (!f) throw Failure{kExitMalformed, "cannot write " + o.out};
  f << j.dump(2) << "\n";
}

json read_json_arg(const std::string& text) {
  std::string src = text;
  if (!text.empty() && text.front() != '{' && text.front() != '[') {
    std::ifstream f(text);
    if (!f) throw Failure{kExitMalformed, "cannot read " + text};
    std::stringstream ss;
    ss << f.rdbuf();
    src = ss.str();
  }
  try {
    return json::parse(src);
  } catch (const json::exception& e) {
    throw Failure{kExitMalformed, std::string("bad JSON: ") + e.what()};
  }
}

void require_n(const Options& o) {
  if (o.n == 0) throw Failure{kExitMalformed, "--n must be >= 1"};
}

void print_unknown(const Options& o, json report) {
  report["result"] = "UNKNOWN";
  report["budget"] = o.budget;
  if (o.json) {
    std::cout << report.dump() << "\n";
  } else {
    std::cout << "UNKNOWN after " << report.value("steps", o.budget)
              << " steps (budget " << o.budget << ")\n";
  }
}

void print_certificate(const Session& s, const json& cert) {
  std::cout << "F = " << s.format_list(cert["F"]) << " (|F| = " << cert["F"].size()
            << ")\n";
  for (const auto& [x, r] : cert["defects"].items()) {
    std::cout << "  defect " << s.format(std::stoull(x)) << ": "
              << r.get<std::string>() << "\n";
  }
}

// ---- commands ---------------------------------------------------------------

int cmd_folner_search(const Options& o) {
  require_n(o);
  Session s(o);
  auto D = s.codes(o.d, "--d");
  char* cert = nullptr;
  uint64_t steps = 0;
  auto st = check(amenlab_search_folner(s.g(), D.data(), D.size(), o.n, o.budget,
                                        &cert, &steps),
                  true);
  if (st == AMENLAB_UNKNOWN) {
    print_unknown(o, json{{"steps", steps}});
    return kExitUnknown;
  }
  json j = json::parse(take(cert));
  write_out(o, j);
  if (o.json) {
    std::cout << j.dump() << "\n";
  } else {
    print_certificate(s, j);
  }
  return kExitOk;
}

int cmd_folner_function(const Options& o) {
  require_n(o);
  Session s(o);
  auto D = s.codes(o.d, "--d");
  char* rep = nullptr;
  auto st = check(
      amenlab_folner_function(s.g(), D.data(), D.size(), o.n, o.budget, &rep), true);
  json j = json::parse(take(rep));
  if (st == AMENLAB_UNKNOWN) {
    print_unknown(o, j);
    return kExitUnknown;
  }
  write_out(o, j);
  if (o.json) {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "min_size: " << j["min_size"] << " (" << j["scope"].get<std::string>()
              << ")\nwitness: " << s.format_list(j["witness"]) << "\n";
  }
  return kExitOk;
}

int cmd_folner_seq(const Options& o) {
  require_n(o);
  Session s(o);
  char* cert = nullptr;
  auto st = check(amenlab_folner_sequence(s.g(), o.n, o.budget, &cert), true);
  if (st == AMENLAB_UNKNOWN) {
    print_unknown(o, json::object());
    return kExitUnknown;
  }
  json j = json::parse(take(cert));
  write_out(o, j);
  if (o.json) {
    std::cout << j.dump() << "\n";
  } else {
    print_certificate(s, j);
  }
  return kExitOk;
}

int cmd_reiter_check(const Options& o) {
  Session s(o);
  if (o.f.empty()) throw Failure{kExitMalformed, "missing --f"};
  std::string f = read_json_arg(o.f).dump();
  auto D = s.codes(o.d, "--d");
  char* d = nullptr;
  check(amenlab_reiter_defect(s.g(), f.c_str(), D.data(), D.size(), &d));
  json j{{"defects", json::parse(take(d))}};
  if (o.n > 0) {
    uint64_t* F = nullptr;
    size_t nF = 0;
    auto st = amenlab_extract_folner(s.g(), f.c_str(), D.data(), D.size(), o.n, &F, &nF);
    if (st == AMENLAB_OK) {
      json level = json::array();
      for (uint64_t c : take(F, nF)) level.push_back(c);
      j["level_set"] = level;
    } else if (st == AMENLAB_ERR_PRECONDITION_FAILED) {
      j["level_set"] = nullptr;
      j["note"] = "defects are not all below 1/n";
    } else {
      check(st);
    }
  }
  write_out(o, j);
  if (o.json) {
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& [x, r] : j["defects"].items()) {
      std::cout << "defect " << s.format(std::stoull(x)) << ": " << r.get<std::string>()
                << "\n";
    }
    if (j.contains("level_set")) {
      std::cout << "level set: "
                << (j["level_set"].is_null() ? std::string("none (precondition fails)")
                                             : s.format_list(j["level_set"]))
                << "\n";
    }
  }
  return kExitOk;
}

int cmd_kappa(const Options& o) {
  require_n(o);
  Session s(o);
  if (o.f.empty()) throw Failure{kExitMalformed, "missing --f"};
  std::string f = read_json_arg(o.f).dump();
  auto D = s.codes(o.d, "--d");
  GroupPtr ce;
  const amenlab_group* g = s.g();
  if (!amenlab_group_is_ce(g)) {
    amenlab_group* c = nullptr;
    check(amenlab_group_as_ce(g, &c));
    ce.reset(c);
    g = c;
  }
  char* rep = nullptr;
  auto st = check(
      amenlab_kappa_verify(g, o.n, D.data(), D.size(), f.c_str(), o.budget, &rep), true);
  json j = json::parse(take(rep));
  write_out(o, j);
  if (o.json) {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << j["verdict"].get<std::string>() << " after " << j["steps"]
              << " steps (" << j["merges"] << " merges, budget " << o.budget << ")\n";
  }
  return st == AMENLAB_UNKNOWN ? kExitUnknown : kExitOk;
}

int cmd_wp(const Options& o) {
  Session s(o);
  auto t = s.codes(o.mult, "--mult");
  if (t.size() != 3) throw Failure{kExitMalformed, "--mult takes three elements"};
  int equal = 0;
  char* rep = nullptr;
  auto st = check(amenlab_decide_mult(s.g(), t[0], t[1], t[2], o.budget, &equal, &rep),
                  true);
  json j = json::parse(take(rep));
  if (st == AMENLAB_UNKNOWN) {
    print_unknown(o, j);
    return kExitUnknown;
  }
  write_out(o, j);
  if (o.json) {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << s.format(t[0]) << " * " << s.format(t[1]) << (equal ? " = " : " != ")
              << s.format(t[2]) << "  (|F| = " << j["k"] << ", |Sigma| = "
              << j["witnesses"] << ")\n";
  }
  return kExitOk;
}

int cmd_harem_demo(const Options& o) {
  Session s(o);
  std::vector<uint64_t> K;
  if (o.k.empty()) {
    // Radius-1 ball over the generators a, b (b only if the group has one).
    uint64_t* codes = nullptr;
    size_t n = 0;
    check(amenlab_group_parse_list(s.g(), "a", &codes, &n));
    std::vector<uint64_t> seeds = take(codes, n);
    if (amenlab_group_parse_list(s.g(), "b", &codes, &n) == AMENLAB_OK) {
      for (uint64_t c : take(codes, n)) seeds.push_back(c);
    }
    check(amenlab_group_ball(s.g(), seeds.data(), seeds.size(), 1, &codes, &n));
    K = take(codes, n);
  } else {
    K = s.codes(o.k, "--k");
  }
  amenlab_harem* h = nullptr;
  const unsigned cap = o.radius_cap == 0 ? 5 : o.radius_cap;
  check(amenlab_harem_new_cayley(s.g(), K.data(), K.size(), o.match_k,
                                 static_cast<int64_t>(o.match_k), 0, cap, &h));
  std::unique_ptr<amenlab_harem, HaremDeleter> hp(h);
  for (uint64_t i = 0; i < o.steps; ++i) check(amenlab_harem_step(h));
  char* dump = nullptr;
  check(amenlab_harem_dump(h, &dump));
  std::string text = take(dump);
  json j{{"steps", o.steps}, {"k", o.match_k}, {"radius_cap", cap}, {"dump", text}};
  write_out(o, j);
  if (o.json) {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << text;
  }
  return kExitOk;
}

int print_decomposition_report(const Options& o, const Session& s, json j) {
  write_out(o, j);
  const bool clean = j["violations"].empty();
  if (o.json) {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "n1 = " << j["n1"] << ", |K| = " << j["K"].size() << "\n";
    for (const auto& r : j["resolved"]) {
      std::cout << "m=" << s.format(r["m"]) << "  theta1=" << s.format(r["theta1"])
                << " theta2=" << s.format(r["theta2"])
                << "  psi1=" << s.format(r["psi1"]) << " psi2=" << s.format(r["psi2"])
                << "\n";
    }
    std::cout << "violations: " << j["violations"].size() << "\n";
    for (const auto& v : j["violations"]) std::cout << "  " << v.get<std::string>() << "\n";
  }
  if (!clean) return kExitPrecondition;
  if (j.contains("unresolved") && !j["unresolved"].empty()) return kExitUnknown;
  return kExitOk;
}

int cmd_paradox(const Options& o) {
  require_n(o);
  Session s(o);
  auto K0 = s.codes(o.k0, "--k0");
  amenlab_decomp* d = nullptr;
  const unsigned cap = o.radius_cap == 0 ? 3 : o.radius_cap;
  check(amenlab_decomp_build(s.g(), K0.data(), K0.size(), o.n, cap, &d));
  std::unique_ptr<amenlab_decomp, DecompDeleter> dp(d);
  char* rep = nullptr;
  check(amenlab_decomp_verify(d, o.verify, o.budget, &rep), true);
  json j = json::parse(take(rep));
  j["radius_cap"] = cap;
  return print_decomposition_report(o, s, j);
}

// Re-checks a saved decomposition report using group multiplication only.
int cmd_paradox_verify(const Options& o) {
  Session s(o);
  json rep;
  if (o.classical) {
    amenlab_decomp* d = nullptr;
    check(amenlab_decomp_classical(&d));
    std::unique_ptr<amenlab_decomp, DecompDeleter> dp(d);
    char* r = nullptr;
    check(amenlab_decomp_verify(d, o.verify == 0 ? 12 : o.verify, o.budget, &r), true);
    rep = json::parse(take(r));
  } else {
    if (o.in.empty()) throw Failure{kExitMalformed, "missing --in (or --classical)"};
    rep = read_json_arg(o.in);
  }
  json violations = json::array();
  std::vector<uint64_t> K;
  try {
    K = rep.at("K").get<std::vector<uint64_t>>();
    std::map<uint64_t, uint64_t> seen1, seen2;
    for (const auto& r : rep.at("resolved")) {
      uint64_t m = r.at("m"), t1 = r.at("theta1"), t2 = r.at("theta2");
      uint64_t p1 = r.at("psi1"), p2 = r.at("psi2");
      const std::string tag = "m=" + std::to_string(m) + ": ";
      for (auto [t, p, name] : {std::tuple{t1, p1, "1"}, std::tuple{t2, p2, "2"}}) {
        if (std::find(K.begin(), K.end(), t) == K.end()) {
          violations.push_back(tag + "theta" + name + " not in K");
        }
        uint64_t prod = 0;
        check(amenlab_group_mult(s.g(), t, m, &prod));
        if (prod != p) violations.push_back(tag + "theta" + name + "*m != psi" + name);
      }
      if (p1 == p2) violations.push_back(tag + "psi1 = psi2");
      if (!seen1.emplace(p1, m).second) violations.push_back(tag + "psi1 repeats");
      if (!seen2.emplace(p2, m).second) violations.push_back(tag + "psi2 repeats");
    }
    for (const auto& [p, m] : seen1) {
      if (seen2.count(p)) {
        violations.push_back("psi1(" + std::to_string(m) + ") is also a psi2 value");
      }
    }
  } catch (const json::exception& e) {
    throw Failure{kExitMalformed, std::string("bad report: ") + e.what()};
  }
  rep["violations"] = violations;
  return print_decomposition_report(o, s, rep);
}

int cmd_witness(const Options& o) {
  Session s(o);
  auto K = s.codes(o.k, "--k");
  char* v = nullptr;
  check(amenlab_witness_commutation(s.g(), K.data(), K.size(), &v));
  json j = json::parse(take(v));
  int code = kExitOk;
  if (o.n > 0) {
    char* r = nullptr;
    auto st = check(amenlab_witness_refute(s.g(), K.data(), K.size(), o.n,
                                           o.size_bound, o.budget, &r),
                    true);
    j["refutation"] = json::parse(take(r));
    if (st == AMENLAB_UNKNOWN) code = kExitUnknown;
  }
  write_out(o, j);
  if (o.json) {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << j["verdict"].get<std::string>() << " (" << j["rationale"].get<std::string>()
              << ")\n";
    if (j["evidence"].is_object() && j["evidence"].contains("pair")) {
      std::cout << "  non-commuting: " << s.format(j["evidence"]["pair"][0]) << ", "
                << s.format(j["evidence"]["pair"][1]) << "\n";
    }
    if (j.contains("refutation")) {
      const auto& r = j["refutation"];
      std::cout << "bounded refutation (n=" << o.n << ", |F| <= " << o.size_bound
                << "): " << r["result"].get<std::string>() << " after " << r["subsets"]
                << " candidate sets\n";
      if (r["certificate"].is_object()) print_certificate(s, r["certificate"]);
    }
  }
  return code;
}

int cmd_restrict(const Options& o) {
  require_n(o);
  Session s(o);
  auto K = s.codes(o.k, "--k");
  std::vector<uint64_t> F;
  if (o.f.empty()) {
    // m = n|K|, obtained from the Følner search.
    uint64_t m = o.n * K.size();
    char* cert = nullptr;
    uint64_t steps = 0;
    auto st = check(amenlab_search_folner(s.g(), K.data(), K.size(), m, o.budget,
                                          &cert, &steps),
                    true);
    if (st == AMENLAB_UNKNOWN) {
      print_unknown(o, json{{"steps", steps}});
      return kExitUnknown;
    }
    F = json::parse(take(cert))["F"].get<std::vector<uint64_t>>();
  } else {
    F = s.codes(o.f, "--f");
  }
  uint64_t* out = nullptr;
  size_t n = 0;
  check(amenlab_restrict_folner(s.g(), K.data(), K.size(), o.n, F.data(), F.size(),
                                &out, &n));
  auto S = take(out, n);
  json j{{"F_m", F}, {"slice", S}};
  write_out(o, j);
  if (o.json) {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "F_m   = " << s.format_list(j["F_m"]) << "\nslice = "
              << s.format_list(j["slice"]) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"amenlab: Følner sets, harem matchings and paradoxical decompositions"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c) {
    c->add_option("--group", o.group, "group spec")->required();
    c->add_option("--budget", o.budget, "oracle-call budget")->check(CLI::PositiveNumber);
    c->add_flag("--json", o.json, "JSON output");
    c->add_option("--out", o.out, "write the report or certificate here");
  };
  struct Entry {
    const char* name;
    const char* help;
    int (*run)(const Options&);
  };
  const Entry entries[] = {
      {"folner-search", "find an n-Følner set w.r.t. D", cmd_folner_search},
      {"folner-function", "minimal size of an n-Følner set", cmd_folner_function},
      {"folner-seq", "n-th member of the effective Følner sequence", cmd_folner_seq},
      {"reiter-check", "Reiter defects and level-set extraction", cmd_reiter_check},
      {"kappa", "verify a Reiter function under enumerable equality", cmd_kappa},
      {"wp-from-folner", "decide a product from a Følner oracle", cmd_wp},
      {"harem-demo", "run the (1,k)-matching on a Cayley graph", cmd_harem_demo},
      {"paradox", "build and verify a paradoxical decomposition", cmd_paradox},
      {"paradox-verify", "re-check a decomposition report", cmd_paradox_verify},
      {"witness", "decide a non-amenability witness", cmd_witness},
      {"restrict-folner", "restrict a Følner set to <K>", cmd_restrict},
  };
  std::vector<std::pair<CLI::App*, const Entry*>> subs;
  for (const auto& e : entries) {
    CLI::App* c = app.add_subcommand(e.name, e.help);
    common(c);
    subs.emplace_back(c, &e);
  }
  auto sub = [&](const char* name) { return app.get_subcommand(name); };
  for (const char* name : {"folner-search", "folner-function", "reiter-check", "kappa"}) {
    sub(name)->add_option("--d", o.d, "elements of D, comma separated");
  }
  for (const char* name : {"folner-search", "folner-function", "folner-seq",
                           "reiter-check", "kappa", "paradox", "witness",
                           "restrict-folner"}) {
    sub(name)->add_option("--n", o.n, "Følner parameter");
  }
  sub("reiter-check")->add_option("--f", o.f, "Reiter function JSON (inline or file)");
  sub("kappa")->add_option("--f", o.f, "Reiter function JSON (inline or file)");
  sub("wp-from-folner")->add_option("--mult", o.mult, "n1,n2,n3: decide n1*n2 = n3");
  sub("harem-demo")->add_option("--k", o.k, "key K (default: radius-1 ball)");
  sub("harem-demo")->add_option("--match-k", o.match_k, "partners per left vertex");
  sub("harem-demo")->add_option("--steps", o.steps, "back-and-forth steps");
  sub("harem-demo")->add_option("--radius-cap", o.radius_cap, "cap on the ball radius");
  sub("paradox")->add_option("--k0", o.k0, "witness K0");
  sub("paradox")->add_option("--verify", o.verify, "resolve and check codes 0..count-1");
  sub("paradox")->add_option("--radius-cap", o.radius_cap, "cap on the ball radius");
  sub("paradox-verify")->add_option("--in", o.in, "report JSON (inline or file)");
  sub("paradox-verify")->add_flag("--classical", o.classical,
                                  "check the first-letter decomposition of free:2");
  sub("paradox-verify")->add_option("--verify", o.verify, "codes to check with --classical");
  sub("witness")->add_option("--k", o.k, "candidate witness K");
  sub("witness")->add_option("--size-bound", o.size_bound, "largest F tried");
  sub("restrict-folner")->add_option("--k", o.k, "generators K of the subgroup");
  sub("restrict-folner")->add_option("--f", o.f, "F_m (default: searched)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitMalformed;
  }
  for (auto [c, e] : subs) {
    if (!c->parsed()) continue;
    try {
      return e->run(o);
    } catch (const Failure& f) {
      std::cerr << "amenlab: " << f.message << "\n";
      return f.exit_code;
    } catch (const std::exception& ex) {
      std::cerr << "amenlab: " << ex.what() << "\n";
      return kExitInternal;
    }
  }
  return kExitMalformed;
}
