#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qlef/genfun.hpp"
#include "qlef/hypertail.hpp"
#include "qlef/loc0.hpp"
#include "qlef/rational.hpp"
#include "qlef/series.hpp"
#include "qlef/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace qlef;

// Exit codes: 0 success, 1 verification failure, 2 bad flags, 3 resource guard.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void emit_pairs(const std::vector<std::pair<std::string, std::string>>& kv,
                const std::string& format, const std::string& key_header) {
  if (format == "csv") {
    std::cout << key_header << ",value\n";
    for (const auto& [k, v] : kv) std::cout << csv_escape(k) << "," << csv_escape(v) << "\n";
  } else {
    ordered_json o = ordered_json::object();
    for (const auto& [k, v] : kv) o[k] = v;
    std::cout << o.dump() << "\n";
  }
}

// ---------------------------------------------------------------------------
// caps profile: QLEF_CAPS environment variable, then --caps overrides
// ---------------------------------------------------------------------------

HypertailCaps apply_caps(HypertailCaps caps, const std::string& s, const std::string& origin) {
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError(origin + ": expected key=value, got '" + item + "'");
    std::string key = item.substr(0, eq);
    int value = 0;
    try {
      size_t used = 0;
      value = std::stoi(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("trailing junk");
    } catch (const std::exception&) {
      throw UsageError(origin + ": bad integer in '" + item + "'");
    }
    if (key == "d1")
      caps.d1 = value;
    else if (key == "d2")
      caps.d2 = value;
    else if (key == "z")
      caps.z = value;
    else if (key == "h")
      caps.h = value;
    else if (key == "lam")
      caps.lam = value;
    else
      throw UsageError(origin + ": unknown cap '" + key + "' (expected d1,d2,z,h,lam)");
  }
  return caps;
}

HypertailCaps caps_profile(const std::string& flag) {
  HypertailCaps caps;
  if (const char* env = std::getenv("QLEF_CAPS")) caps = apply_caps(caps, env, "QLEF_CAPS");
  if (!flag.empty()) caps = apply_caps(caps, flag, "--caps");
  return caps;
}

// ---------------------------------------------------------------------------
// fdg
// ---------------------------------------------------------------------------

struct FdgOpts {
  int d = 1;
  int g = 0;
  int order = 8;
  std::string route = "all";
  std::string format = "json";
};

void register_fdg(CLI::App* cmd, FdgOpts& o) {
  cmd->add_option("--d", o.d, "curve degree d")->required();
  cmd->add_option("--g", o.g, "genus parameter g")->required();
  cmd->add_option("--order", o.order, "z-order of the emitted series (default 8)");
  cmd->add_option("--route", o.route, "r1|r2|r3|all (default all: check agreement, print the series)")
      ->check(CLI::IsMember({"r1", "r2", "r3", "all"}));
  cmd->add_option("--format", o.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
}

int run_fdg(const FdgOpts& o) {
  if (o.d < 0 || o.d > 6 || o.g < 0 || o.g > 10 || o.order < 0 || o.order > 30)
    throw GuardError("fdg works at desk scale: 0 <= d <= 6, 0 <= g <= 10, 0 <= order <= 30");
  FdgResult r = F_dg(o.d, o.g, o.order);
  const RationalSeries* pick = nullptr;
  if (o.route == "r1") pick = &r.r1;
  if (o.route == "r2") pick = &r.r2;
  if (o.route == "r3") pick = &r.r3;
  if (pick != nullptr) {
    emit_pairs(pick->to_ordered_strings(), o.format, "monomial");
    return 0;
  }
  if (!r.agree) {
    ordered_json bad;
    bad["error"] = "routes disagree";
    for (auto [name, s] : {std::pair<const char*, const RationalSeries*>{"r1", &r.r1},
                           {"r2", &r.r2},
                           {"r3", &r.r3}}) {
      ordered_json m = ordered_json::object();
      for (const auto& [k, v] : s->to_ordered_strings()) m[k] = v;
      bad[name] = m;
    }
    std::cout << bad.dump() << "\n";
    return 1;
  }
  emit_pairs(r.r2.to_ordered_strings(), o.format, "monomial");
  return 0;
}

// ---------------------------------------------------------------------------
// hypertail dump
// ---------------------------------------------------------------------------

struct HtOpts {
  std::string locus = "Q0";
  std::string caps;
  std::string format = "json";
};

void register_hypertail(CLI::App* cmd, HtOpts& o) {
  cmd->add_option("--locus", o.locus, "Q0|X0 (default Q0)")->check(CLI::IsMember({"Q0", "X0"}));
  cmd->add_option("--caps", o.caps, "truncation overrides, e.g. d1=2,d2=6,z=6,h=4,lam=8");
  cmd->add_option("--format", o.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
}

int run_hypertail(const HtOpts& o) {
  HypertailCaps caps = caps_profile(o.caps);
  if (caps.d1 < 0 || caps.d1 > 4 || caps.d2 < 1 || caps.d2 > 8 || caps.z < 0 || caps.z > 16 ||
      caps.h < 1 || caps.h > 6 || caps.lam < 1 || caps.lam > 16)
    throw GuardError("hypertail caps guard: 0<=d1<=4, 1<=d2<=8, 0<=z<=16, 1<=h<=6, 1<=lam<=16");
  FixedLocus locus = o.locus == "X0" ? FixedLocus::X0 : FixedLocus::Q0;
  HypertailSeries t = extract_hypertail(mirror_transform_small(i_restricted(locus, caps)), caps);
  emit_pairs(hypertail_dump(t), o.format, "d1,d2,zk,hj");
  return 0;
}

// ---------------------------------------------------------------------------
// loc0 invariant / loc0 pipeline
// ---------------------------------------------------------------------------

struct InvOpts {
  int N = 4;
  int d = 1;
  std::string twist;
  std::string ins;
  std::string weights = "v0";
  std::string format = "json";
};

void register_invariant(CLI::App* cmd, InvOpts& o) {
  cmd->add_option("--N", o.N, "ambient projective space dimension")->required();
  cmd->add_option("--d", o.d, "curve degree")->required();
  cmd->add_option("--twist", o.twist, "twisting bundle, e.g. \"O(-5)-\" (omit for untwisted)");
  cmd->add_option("--ins", o.ins, "comma-separated insertions, e.g. \"psi^2 H,H^2,1\"");
  cmd->add_option("--weights", o.weights, "v0|v1|v2 or explicit comma-separated rationals");
  cmd->add_option("--format", o.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
}

std::optional<TwistSpec> parse_twist(const std::string& s) {
  if (s.empty() || s == "none") return std::nullopt;
  if (s.size() < 4 || s[0] != 'O' || s[1] != '(' || (s.back() != '+' && s.back() != '-') ||
      s[s.size() - 2] != ')')
    throw UsageError("--twist: expected O(<integer>)+ or O(<integer>)-, got '" + s + "'");
  int k = 0;
  try {
    size_t used = 0;
    std::string body = s.substr(2, s.size() - 4);
    k = std::stoi(body, &used);
    if (used != body.size()) throw std::invalid_argument("trailing junk");
  } catch (const std::exception&) {
    throw UsageError("--twist: bad bundle degree in '" + s + "'");
  }
  return TwistSpec{k, s.back() == '+' ? TwistSign::Plus : TwistSign::Minus, true};
}

std::vector<std::pair<int, int>> parse_insertions(const std::string& s) {
  std::vector<std::pair<int, int>> out;
  if (s.empty()) return out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, ',')) {
    int a = 0, b = 0;
    std::stringstream toks(part);
    std::string tok;
    bool any = false;
    while (toks >> tok) {
      any = true;
      int* slot = nullptr;
      std::string rest;
      if (tok.rfind("psi", 0) == 0) {
        slot = &a;
        rest = tok.substr(3);
      } else if (tok.rfind("H", 0) == 0) {
        slot = &b;
        rest = tok.substr(1);
      } else if (tok == "1") {
        continue;
      } else {
        throw UsageError("--ins: unknown token '" + tok + "' (expected psi^a, H^b or 1)");
      }
      if (rest.empty()) {
        *slot += 1;
      } else if (rest[0] == '^') {
        try {
          size_t used = 0;
          int e = std::stoi(rest.substr(1), &used);
          if (used != rest.size() - 1 || e < 0) throw std::invalid_argument("bad exponent");
          *slot += e;
        } catch (const std::exception&) {
          throw UsageError("--ins: bad exponent in '" + tok + "'");
        }
      } else {
        throw UsageError("--ins: unknown token '" + tok + "'");
      }
    }
    if (!any) throw UsageError("--ins: empty insertion entry");
    out.emplace_back(a, b);
  }
  return out;
}

TorusWeights parse_weights(const std::string& s, int N) {
  if (s == "v0" || s == "v1" || s == "v2") return default_weights(N, s[1] - '0');
  std::vector<BigRational> ws;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      ws.push_back(parse_rational(part));
    } catch (const std::exception&) {
      throw UsageError("--weights: bad rational '" + part + "'");
    }
  }
  if (static_cast<int>(ws.size()) != N + 1)
    throw UsageError("--weights: expected " + std::to_string(N + 1) + " values");
  for (size_t i = 0; i < ws.size(); ++i)
    for (size_t j = i + 1; j < ws.size(); ++j)
      if (ws[i] == ws[j]) throw UsageError("--weights: values must be pairwise distinct");
  return TorusWeights{N, ws};
}

std::string insertion_str(const std::pair<int, int>& p) {
  if (p.first == 0 && p.second == 0) return "1";
  std::ostringstream out;
  if (p.first > 0) {
    out << "psi";
    if (p.first > 1) out << "^" << p.first;
  }
  if (p.second > 0) {
    if (p.first > 0) out << " ";
    out << "H";
    if (p.second > 1) out << "^" << p.second;
  }
  return out.str();
}

int run_invariant(const InvOpts& o) {
  auto twist = parse_twist(o.twist);
  auto pairs = parse_insertions(o.ins);
  TorusWeights w = parse_weights(o.weights, o.N);
  std::vector<MarkingInsertion> ins;
  ins.reserve(pairs.size());
  for (const auto& p : pairs) ins.push_back(MarkingInsertion::descendant(p.first, p.second));
  InvariantRecord rec = descendant_invariant_record(o.N, o.d, ins, twist, w);
  std::vector<std::pair<std::string, std::string>> kv;
  kv.emplace_back("N", std::to_string(o.N));
  kv.emplace_back("d", std::to_string(o.d));
  kv.emplace_back("twist", o.twist.empty() ? "none" : o.twist);
  std::ostringstream insjoin;
  for (size_t i = 0; i < pairs.size(); ++i) insjoin << (i ? "," : "") << insertion_str(pairs[i]);
  kv.emplace_back("insertions", insjoin.str());
  kv.emplace_back("vdim", std::to_string(rec.vdim));
  kv.emplace_back("raw", rec.raw.str());
  kv.emplace_back("lambda_power", std::to_string(rec.honest_power));
  kv.emplace_back("value", rec.honest.str());
  emit_pairs(kv, o.format, "key");
  return 0;
}

struct PipeOpts {
  std::string target;
  bool degree2 = false;
  std::string format = "json";
};

void register_pipeline(CLI::App* cmd, PipeOpts& o) {
  cmd->add_option("target", o.target, "p2|quintic1")
      ->required()
      ->check(CLI::IsMember({"p2", "quintic1"}));
  cmd->add_flag("--degree2", o.degree2, "also report the degree-2 count from the mirror oracle");
  cmd->add_option("--format", o.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
}

int run_pipeline(const PipeOpts& o) {
  PipelineReport rep = o.target == "p2" ? pipeline_p2_example() : pipeline_quintic_degree1(o.degree2);
  if (o.format == "csv") {
    std::vector<std::pair<std::string, std::string>> kv;
    kv.emplace_back("name", rep.name);
    kv.emplace_back("value", to_string(rep.value));
    kv.emplace_back("lambda_power", std::to_string(rep.lambda_power));
    for (const auto& [k, v] : rep.details) kv.emplace_back(k, v);
    emit_pairs(kv, "csv", "key");
    return 0;
  }
  ordered_json out;
  out["name"] = rep.name;
  out["value"] = to_string(rep.value);
  out["lambda_power"] = rep.lambda_power;
  ordered_json det = ordered_json::object();
  for (const auto& [k, v] : rep.details) det[k] = v;
  out["details"] = det;
  std::cout << out.dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyOpts {
  std::string suite = "all";
  unsigned seed = 1;
  std::string format = "json";
};

void register_verify(CLI::App* cmd, VerifyOpts& o) {
  cmd->add_option("--suite", o.suite, "all|p2|quintic1|fdg|harmonic|binomial|hypertail|oracles|structural|appendix")
      ->check(CLI::IsMember({"all", "p2", "quintic1", "fdg", "harmonic", "binomial", "hypertail",
                             "oracles", "structural", "appendix"}));
  cmd->add_option("--seed", o.seed, "seed for the randomized property checks (default 1)");
  cmd->add_option("--format", o.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
}

int run_verify(const VerifyOpts& o) {
  std::vector<CriterionResult> res = run_acceptance(o.suite, o.seed);
  bool all_pass = true;
  for (const auto& r : res) all_pass = all_pass && r.pass;
  if (o.format == "csv") {
    std::cout << "criterion,expected,got,pass\n";
    for (const auto& r : res)
      std::cout << csv_escape(r.id) << "," << csv_escape(r.expected) << "," << csv_escape(r.got)
                << "," << (r.pass ? "true" : "false") << "\n";
  } else {
    ordered_json arr = ordered_json::array();
    for (const auto& r : res) {
      ordered_json e;
      e["criterion"] = r.id;
      e["expected"] = r.expected;
      e["got"] = r.got;
      e["pass"] = r.pass;
      arr.push_back(e);
    }
    std::cout << arr.dump(2) << "\n";
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic localization toolkit for hypersurface Gromov-Witten invariants"};
  app.require_subcommand(1);

  FdgOpts fdg_top_opts, fdg_sub_opts;
  CLI::App* fdg_top = app.add_subcommand("fdg", "F_{d,g} series by three routes");
  register_fdg(fdg_top, fdg_top_opts);
  CLI::App* genfun = app.add_subcommand("genfun", "generating-function identities");
  genfun->require_subcommand(1);
  CLI::App* fdg_sub = genfun->add_subcommand("fdg", "F_{d,g} series by three routes");
  register_fdg(fdg_sub, fdg_sub_opts);

  HtOpts ht_opts;
  CLI::App* hypertail = app.add_subcommand("hypertail", "restricted I-function tail series");
  hypertail->require_subcommand(1);
  CLI::App* ht_dump = hypertail->add_subcommand("dump", "tail coefficients keyed d1,d2,zk,hj");
  register_hypertail(ht_dump, ht_opts);

  InvOpts inv_opts;
  PipeOpts pipe_opts;
  CLI::App* loc0 = app.add_subcommand("loc0", "genus-0 torus localization on P^N");
  loc0->require_subcommand(1);
  CLI::App* invariant = loc0->add_subcommand("invariant", "descendant invariant by fixed-graph sum");
  register_invariant(invariant, inv_opts);
  CLI::App* pipeline = loc0->add_subcommand("pipeline", "worked end-to-end computations");
  register_pipeline(pipeline, pipe_opts);

  VerifyOpts verify_opts;
  CLI::App* verify = app.add_subcommand("verify", "acceptance checklist");
  register_verify(verify, verify_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (fdg_top->parsed()) return run_fdg(fdg_top_opts);
    if (fdg_sub->parsed()) return run_fdg(fdg_sub_opts);
    if (ht_dump->parsed()) return run_hypertail(ht_opts);
    if (invariant->parsed()) return run_invariant(inv_opts);
    if (pipeline->parsed()) return run_pipeline(pipe_opts);
    if (verify->parsed()) return run_verify(verify_opts);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const GuardError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
