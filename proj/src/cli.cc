// Copyright 2026 The padlcheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "padl/cli.h"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "padl/aut.h"
#include "padl/equivalence.h"
#include "padl/parser.h"
#include "padl/topology.h"
#include "padl/validate.h"

namespace padl {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void Emit(const RunConfig& config, const std::string& text, std::ostream& out) {
  if (config.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(config.out_path, std::ios::binary);
  if (!f || !(f << text)) throw UsageError("cannot write " + config.out_path);
}

std::optional<ValidatedArchitecture> Load(const std::string& path, std::ostream& err) {
  const std::string source = ReadFile(path);
  ParseResult parsed = Parse(source);
  Diagnostics diags = parsed.diagnostics;
  std::optional<ValidatedArchitecture> arch;
  if (parsed.ok()) {
    ValidationResult v = Validate(*parsed.description);
    diags.insert(diags.end(), v.diagnostics.begin(), v.diagnostics.end());
    arch = std::move(v.architecture);
  }
  for (const Diagnostic& d : diags) err << FormatDiagnostic(d, path) << "\n";
  return arch;
}

std::string Join(const std::vector<std::string>& v, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::string Braced(const Json& names) {
  return "{" + Join(names.get<std::vector<std::string>>()) + "}";
}

Json FormulaJson(const FormulaPtr& f) {
  return f ? Json(ToString(*f, Modality::kWeak)) : Json(nullptr);
}

Json DecompositionJson(const Decomposition& d) {
  Json unions = Json::array();
  for (const CyclicUnion& cu : d.cyclic_unions) {
    unions.push_back({{"members", cu.members}, {"frontier", cu.frontier}});
  }
  Json stars = Json::array();
  for (const Star& s : d.stars) stars.push_back({{"center", s.center}, {"border", s.border}});
  return {{"components", d.components},
          {"cyclic_unions", unions},
          {"stars", stars},
          {"acyclic", d.acyclic}};
}

Json ReductionJson(const ReductionReport& r, bool timings) {
  Json aeis = Json::array();
  for (const AeiStatus& s : r.aeis) {
    aeis.push_back(
        {{"aei", s.aei}, {"deadlock_free", ToString(s.deadlock_free)}, {"states", s.states}});
  }
  Json checks = Json::array();
  for (const CheckRecord& c : r.checks) {
    Json j = {{"kind", ToString(c.kind)},
              {"subject", c.subject},
              {"partners", c.partners},
              {"verdict", ToString(c.verdict)},
              {"formula", FormulaJson(c.formula)},
              {"lhs_states", c.lhs_states},
              {"rhs_states", c.rhs_states},
              {"capacity_saturated", c.capacity_saturated},
              {"error", c.error}};
    if (timings) j["seconds"] = c.seconds;
    checks.push_back(std::move(j));
  }
  Json conditions = Json::array();
  for (const ConditionRecord& c : r.conditions) {
    conditions.push_back({{"id", c.id},
                          {"subject", c.subject},
                          {"partners", c.partners},
                          {"verdict", ToString(c.verdict)},
                          {"checks", c.checks}});
  }
  Json j = {{"conclusion", ToString(r.conclusion)},
            {"witness", r.witness},
            {"trace", r.trace},
            {"decomposition", DecompositionJson(r.decomposition)},
            {"aeis", aeis},
            {"checks", checks},
            {"conditions", conditions}};
  if (timings) j["seconds"] = r.seconds;
  return j;
}

Json DirectJson(const DirectReport& d, bool timings) {
  Json j = {{"verdict", ToString(d.deadlock_free)},
            {"trace", d.trace},
            {"states", d.states},
            {"transitions", d.transitions},
            {"capacity_saturated", d.capacity_saturated},
            {"error", d.error}};
  if (timings) j["seconds"] = d.seconds;
  return j;
}

int CodeOfConclusion(const std::string& c) {
  if (c == "deadlock_free") return kExitOk;
  if (c == "inconclusive") return kExitInconclusive;
  return kExitFailed;
}

int CodeOfVerdict(const std::string& v) {
  if (v == "holds") return kExitOk;
  if (v == "inconclusive") return kExitInconclusive;
  return kExitFailed;
}

int CheckExitCode(const Json& report) {
  std::vector<int> codes;
  if (report.contains("reduction")) {
    codes.push_back(CodeOfConclusion(report["reduction"]["conclusion"].get<std::string>()));
  }
  if (report.contains("direct")) {
    codes.push_back(CodeOfVerdict(report["direct"]["verdict"].get<std::string>()));
  }
  if (report.contains("agreement") && report["agreement"] == false) return kExitFailed;
  if (std::count(codes.begin(), codes.end(), kExitFailed)) return kExitFailed;
  if (std::count(codes.begin(), codes.end(), kExitInconclusive)) return kExitInconclusive;
  return kExitOk;
}

std::string Seconds(const Json& j) {
  if (!j.contains("seconds")) return "";
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << ", " << j["seconds"].get<double>() << " s";
  return os.str();
}

std::string TraceText(const Json& trace) {
  return trace.empty() ? "(empty)" : Join(trace.get<std::vector<std::string>>(), " ");
}

std::string CheckText(const Json& r) {
  std::ostringstream os;
  const Json& cfg = r["config"];
  os << "architecture " << r["architecture"].get<std::string>() << "\n";
  os << "configuration: queue capacity " << cfg["queue_capacity"] << ", state limit "
     << cfg["state_limit"] << ", " << cfg["deadlock"].get<std::string>() << " deadlock, mode "
     << cfg["mode"].get<std::string>() << "\n";
  bool saturated = false;
  if (r.contains("reduction")) {
    const Json& red = r["reduction"];
    const Json& d = red["decomposition"];
    os << "decomposition:\n";
    for (const Json& cu : d["cyclic_unions"]) {
      os << "  cyclic union " << Braced(cu["members"]) << ", frontier " << Braced(cu["frontier"])
         << "\n";
    }
    for (const Json& s : d["stars"]) {
      os << "  star " << s["center"].get<std::string>() << " with border " << Braced(s["border"])
         << "\n";
    }
    if (d["cyclic_unions"].empty() && d["stars"].empty()) os << "  no attachments\n";
    os << "reduction:\n";
    for (const Json& a : red["aeis"]) {
      os << "  instance " << a["aei"].get<std::string>() << ": deadlock freedom "
         << a["deadlock_free"].get<std::string>() << " (" << a["states"] << " states)\n";
    }
    std::size_t index = 0;
    for (const Json& c : red["checks"]) {
      const bool compat = c["kind"] == "compatibility";
      os << "  check " << index++ << ": " << c["kind"].get<std::string>() << " of "
         << c["subject"].get<std::string>() << (compat ? " with " : " in ")
         << Braced(c["partners"]) << ": " << c["verdict"].get<std::string>() << " ("
         << c["lhs_states"] << " vs " << c["rhs_states"] << " states" << Seconds(c) << ")\n";
      if (!c["formula"].is_null()) {
        os << "    distinguishing formula: " << c["formula"].get<std::string>() << "\n";
      }
      if (!c["error"].get<std::string>().empty()) {
        os << "    " << c["error"].get<std::string>() << "\n";
      }
      saturated = saturated || c["capacity_saturated"].get<bool>();
    }
    for (const Json& c : red["conditions"]) {
      os << "  condition " << c["id"].get<std::string>() << " for "
         << c["subject"].get<std::string>() << " " << Braced(c["partners"]) << ": "
         << c["verdict"].get<std::string>() << "\n";
    }
    os << "  conclusion: " << red["conclusion"].get<std::string>();
    if (!red["witness"].get<std::string>().empty()) {
      os << " (witness " << red["witness"].get<std::string>() << ")";
    }
    os << Seconds(red) << "\n";
    if (red["conclusion"] == "deadlock_found") {
      os << "  trace of the witness: " << TraceText(red["trace"]) << "\n";
    }
  }
  if (r.contains("direct")) {
    const Json& d = r["direct"];
    os << "direct:\n";
    os << "  deadlock freedom " << d["verdict"].get<std::string>() << " (" << d["states"]
       << " states, " << d["transitions"] << " transitions" << Seconds(d) << ")\n";
    if (d["verdict"] == "fails") os << "  trace to deadlock: " << TraceText(d["trace"]) << "\n";
    if (!d["error"].get<std::string>().empty()) {
      os << "  " << d["error"].get<std::string>() << "\n";
    }
    saturated = saturated || d["capacity_saturated"].get<bool>();
  }
  if (r.contains("agreement")) {
    os << "agreement: " << (r["agreement"] == true ? "yes" : "no") << "\n";
  }
  if (saturated) {
    os << "note: some queue reached capacity " << cfg["queue_capacity"]
       << "; consider a larger --queue-capacity\n";
  }
  return os.str();
}

int RunCheck(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::optional<ValidatedArchitecture> arch = Load(config.inputs.at(0), err);
  if (!arch) return kExitUsage;
  Elaboration e = Elaborate(*arch, config.queue_capacity);

  VerifyOptions options;
  options.state_limit = config.state_limit;
  options.notion = config.notion;
  options.threads = config.threads;

  Json report;
  report["schema_version"] = kReportSchemaVersion;
  report["command"] = "check";
  report["architecture"] = arch->name();
  report["config"] = {{"queue_capacity", config.queue_capacity},
                      {"state_limit", config.state_limit},
                      {"deadlock", config.notion == DeadlockNotion::kWeak ? "weak" : "strict"},
                      {"mode", config.mode}};
  Json queues = Json::array();
  for (const QueueElement& q : e.queues()) queues.push_back(q.name);
  report["elaboration"] = {{"instances", e.instance_names()},
                           {"queues", queues},
                           {"links", e.links().size()}};
  std::optional<Conclusion> reduced;
  std::optional<Verdict> direct;
  if (config.mode != "direct") {
    ReductionReport r = VerifyDeadlockByReduction(e, options);
    reduced = r.conclusion;
    report["reduction"] = ReductionJson(r, config.timings);
  }
  if (config.mode != "reduce") {
    DirectReport d = VerifyDeadlockDirect(e, options);
    direct = d.deadlock_free;
    report["direct"] = DirectJson(d, config.timings);
  }
  if (reduced && direct && direct != Verdict::kInconclusive &&
      (reduced == Conclusion::kDeadlockFree || reduced == Conclusion::kDeadlockFound)) {
    report["agreement"] = (reduced == Conclusion::kDeadlockFree) == (direct == Verdict::kHolds);
  }
  if (!config.dot_path.empty()) {
    FlowGraph g = BuildFlowGraph(*arch);
    std::ofstream f(config.dot_path, std::ios::binary);
    if (!f || !(f << FlowGraphToDot(arch->name(), g, Decompose(g)))) {
      throw UsageError("cannot write " + config.dot_path);
    }
  }
  Emit(config, config.format == "json" ? report.dump(2) + "\n" : CheckText(report), out);
  return CheckExitCode(report);
}

Closure ParseVariant(const std::string& variant, bool* without_buffers) {
  std::string base = variant;
  *without_buffers = false;
  if (base.size() > 4 && base.compare(base.size() - 4, 4, "-wob") == 0) {
    *without_buffers = true;
    base.resize(base.size() - 4);
  }
  if (base == "open") return Closure::kOpen;
  if (base == "pc") return Closure::kPartial;
  if (base == "tc") return Closure::kTotal;
  throw UsageError("unknown variant '" + variant +
                   "'; expected open, pc, or tc, optionally with -wob");
}

int RunLts(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::optional<ValidatedArchitecture> arch = Load(config.inputs.at(0), err);
  if (!arch) return kExitUsage;
  bool wob = false;
  const Closure closure = ParseVariant(config.variant, &wob);
  Elaboration e = Elaborate(*arch, config.queue_capacity);
  const std::vector<std::string> all = e.instance_names();
  auto check_names = [&](const std::vector<std::string>& names) {
    for (const std::string& n : names) {
      if (std::find(all.begin(), all.end(), n) == all.end()) {
        throw UsageError("unknown instance '" + n + "'");
      }
    }
  };
  std::vector<std::string> context = config.context.empty() ? all : config.context;
  check_names(context);
  check_names(config.buffers);
  if (wob && !config.buffers.empty()) throw UsageError("--buffers conflicts with a -wob variant");
  std::vector<std::string> buffers = wob ? std::vector<std::string>{}
                                         : (config.buffers.empty() ? context : config.buffers);
  Lts lts;
  std::string name = arch->name();
  try {
    if (config.aei.empty()) {
      SemanticsRequest req;
      req.subject = all;
      req.context = context;
      req.closure = closure;
      req.buffers_for = buffers;
      req.state_limit = config.state_limit;
      lts = e.CompositeSemantics(req);
    } else {
      check_names({config.aei});
      name = config.aei;
      if (std::find(context.begin(), context.end(), config.aei) == context.end()) {
        context.push_back(config.aei);
      }
      lts = e.AeiSemantics(config.aei, context, closure, buffers, config.state_limit);
    }
  } catch (const StateLimitExceeded& ex) {
    err << "padlcheck: " << ex.what() << "\n";
    return kExitInconclusive;
  }
  Emit(config, config.format == "dot" ? WriteDot(lts, name) : WriteAut(lts), out);
  return kExitOk;
}

int RunGraph(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::optional<ValidatedArchitecture> arch = Load(config.inputs.at(0), err);
  if (!arch) return kExitUsage;
  FlowGraph g = BuildFlowGraph(*arch);
  Emit(config, FlowGraphToDot(arch->name(), g, Decompose(g)), out);
  return kExitOk;
}

int RunEquiv(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<Lts> operands;
  for (const std::string& path : config.inputs) {
    try {
      operands.push_back(ReadAut(ReadFile(path)));
    } catch (const AutError& ex) {
      throw UsageError(path + ": " + ex.what());
    }
  }
  const Modality m = config.strong ? Modality::kStrong : Modality::kWeak;
  EquivalenceResult r = config.strong ? StrongBisimCheck(operands[0], operands[1])
                                      : WeakBisimCheck(operands[0], operands[1]);
  Json report;
  report["schema_version"] = kReportSchemaVersion;
  report["command"] = "equiv";
  report["relation"] = config.strong ? "strong" : "weak";
  report["first"] = {{"path", config.inputs[0]},
                     {"states", operands[0].num_states()},
                     {"transitions", operands[0].num_transitions()}};
  report["second"] = {{"path", config.inputs[1]},
                      {"states", operands[1].num_states()},
                      {"transitions", operands[1].num_transitions()}};
  report["equivalent"] = r.equivalent;
  report["formula"] = r.formula ? Json(ToString(*r.formula, m)) : Json(nullptr);
  report["rounds"] = r.rounds;

  std::string text;
  if (config.format == "json") {
    text = report.dump(2) + "\n";
  } else {
    text = std::string(report["equivalent"] == true ? "equivalent" : "distinct") + " (" +
           report["relation"].get<std::string>() + " bisimilarity)\n";
    if (!report["formula"].is_null()) {
      text += "distinguishing formula: " + report["formula"].get<std::string>() + "\n";
      text += "holds on " + config.inputs[0] + ", fails on " + config.inputs[1] + "\n";
    }
  }
  Emit(config, text, out);
  return report["equivalent"] == true ? kExitOk : kExitFailed;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Deadlock verification of PADL architectural descriptions", "padlcheck"};
  app.require_subcommand(1);
  std::string notion = "weak";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--queue-capacity", config.queue_capacity, "Bound of every queue element")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--state-limit", config.state_limit, "Largest state space to build")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--out", config.out_path, "Write the output to PATH");
  };

  CLI::App* check = app.add_subcommand("check", "Verify deadlock freedom");
  check->add_option("file", config.inputs, "Architecture description")->required()->expected(1);
  add_common(check);
  check->add_option("--deadlock", notion, "Deadlock notion of the direct check")
      ->check(CLI::IsMember({"weak", "strict"}));
  check->add_option("--mode", config.mode, "Verification route")
      ->check(CLI::IsMember({"reduce", "direct", "both"}));
  check->add_option("--format", config.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  check->add_option("--dot", config.dot_path, "Also write the flow graph to PATH");
  bool no_timings = false;
  check->add_flag("--no-timings", no_timings, "Omit timings from the report");
  check->add_option("--threads", config.threads, "Worker threads; 0 uses every core")
      ->check(CLI::NonNegativeNumber);

  CLI::App* lts = app.add_subcommand("lts", "Export a semantics as AUT or DOT");
  lts->add_option("file", config.inputs, "Architecture description")->required()->expected(1);
  add_common(lts);
  lts->add_option("--aei", config.aei, "Instance; the whole architecture when omitted");
  lts->add_option("--variant", config.variant, "open, pc or tc, optionally with -wob");
  lts->add_option("--context", config.context, "Context instances; all when omitted")
      ->delimiter(',');
  lts->add_option("--buffers", config.buffers, "Instances whose queues are included")
      ->delimiter(',');
  lts->add_option("--format", config.format, "Output format")->check(CLI::IsMember({"aut", "dot"}));

  CLI::App* graph = app.add_subcommand("graph", "Export the abstract flow graph as DOT");
  graph->add_option("file", config.inputs, "Architecture description")->required()->expected(1);
  graph->add_option("--out", config.out_path, "Write the output to PATH");

  CLI::App* equiv = app.add_subcommand("equiv", "Compare two AUT files");
  equiv->add_option("first", config.inputs, "AUT files")->required()->expected(2);
  equiv->add_flag("--strong", config.strong, "Strong instead of weak bisimilarity");
  equiv->add_option("--format", config.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  equiv->add_option("--out", config.out_path, "Write the output to PATH");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    return app.exit(ex, out, err) == 0 ? kExitOk : kExitUsage;
  }
  config.timings = !no_timings;
  config.notion = notion == "strict" ? DeadlockNotion::kStrict : DeadlockNotion::kWeak;

  try {
    if (check->parsed()) return RunCheck(config, out, err);
    if (lts->parsed()) return RunLts(config, out, err);
    if (graph->parsed()) return RunGraph(config, out, err);
    return RunEquiv(config, out, err);
  } catch (const UsageError& ex) {
    err << "padlcheck: " << ex.what() << "\n";
  } catch (const ElaborationError& ex) {
    err << "padlcheck: " << ex.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace padl
