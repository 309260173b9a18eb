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

#include <random>
#include <string>

#include "gtest/gtest.h"
#include "padl/parser.h"
#include "padl/printer.h"
#include "padl/validate.h"
#include "test_util.h"

namespace padl {
namespace {

using ::padl::testing::LoadFixture;
using ::padl::testing::ReadFixture;
using ::padl::testing::ReplaceOnce;

const char* const kFixtures[] = {"cs_sync.padl", "cs_async.padl", "cruise.padl"};

Diagnostics ValidateText(const std::string& text) {
  ParseResult p = Parse(text);
  if (!p.ok()) return p.diagnostics;
  return Validate(*p.description).diagnostics;
}

TEST(Parse, ClientServerShape) {
  ParseResult p = Parse(ReadFixture("cs_sync.padl"));
  ASSERT_TRUE(p.ok());
  EXPECT_TRUE(p.diagnostics.empty());
  const ArchiDescription& a = *p.description;
  EXPECT_EQ(a.aets.size(), 2u);
  EXPECT_EQ(a.instances.size(), 3u);
  EXPECT_EQ(a.attachments.size(), 4u);
  EXPECT_TRUE(a.archi_interactions.empty());
  EXPECT_EQ(a.attachments[0].from.Dotted(), "C_1.send_request");
  EXPECT_EQ(a.attachments[0].to.Dotted(), "S.receive_request");

  const InteractionDecl* out = a.aets[0].FindInteraction("send_response");
  ASSERT_NE(out, nullptr);
  EXPECT_EQ(out->multiplicity, Multiplicity::kOr);
  EXPECT_EQ(out->synchronicity, Synchronicity::kSync);
  EXPECT_EQ(out->dep_on, "receive_request");
}

TEST(Parse, QualifiersAndImplicitGroups) {
  ParseResult p = Parse(ReadFixture("cruise.padl"));
  ASSERT_TRUE(p.ok());
  const AetDef* sensor = p.description->FindAet("Sensor_Type");
  ASSERT_NE(sensor, nullptr);
  EXPECT_EQ(sensor->FindInteraction("press_resume")->multiplicity, Multiplicity::kUni);
  EXPECT_EQ(sensor->FindInteraction("turn_engine_on")->multiplicity, Multiplicity::kAnd);
  EXPECT_EQ(sensor->FindInteraction("turn_engine_off")->direction, Direction::kOutput);

  const AetDef* panel = p.description->FindAet("Panel_Type");
  EXPECT_EQ(panel->FindInteraction("signal_brake")->synchronicity, Synchronicity::kSsync);
  EXPECT_EQ(panel->FindInteraction("init_applet")->synchronicity, Synchronicity::kSync);
  EXPECT_EQ(p.description->archi_interactions.size(), 4u);

  // `Checking(signal_on.success)` reads the implicit success variable.
  const Process& active = panel->FindEquation("Active")->body;
  const Process& invoke = active.children[3].continuation();
  ASSERT_EQ(invoke.kind, Process::Kind::kInvoke);
  EXPECT_EQ(invoke.args[0].kind, Expr::Kind::kSuccess);
  EXPECT_EQ(invoke.args[0].name, "signal_on");
}

TEST(Parse, MissingEndReportsEndOfFile) {
  std::string text = ReadFixture("cs_sync.padl");
  text = text.substr(0, text.rfind("END"));
  ParseResult p = Parse(text);
  ASSERT_FALSE(p.ok());
  ASSERT_EQ(p.diagnostics.size(), 1u);
  EXPECT_EQ(p.diagnostics[0].code, "E_SYNTAX");
  EXPECT_NE(p.diagnostics[0].message.find("end of file"), std::string::npos);
  int lines = static_cast<int>(std::count(text.begin(), text.end(), '\n'));
  EXPECT_EQ(p.diagnostics[0].location.line, lines + 1);
}

TEST(Parse, KeywordsAreCaseSensitive) {
  std::string text = ReplaceOnce(ReadFixture("cs_sync.padl"), "ARCHI_TOPOLOGY", "archi_topology");
  EXPECT_FALSE(Parse(text).ok());
}

TEST(Parse, DiagnosticFormat) {
  ParseResult p = Parse("ARCHI_TYPE X(void) $");
  ASSERT_FALSE(p.ok());
  EXPECT_EQ(FormatDiagnostic(p.diagnostics[0], "x.padl"),
            "x.padl:1:20: error[E_LEX]: unexpected character '$'");
}

TEST(Parse, TruncatedAndCorruptedInputNeverThrows) {
  std::mt19937 rng(7);
  for (const char* f : kFixtures) {
    std::string text = ReadFixture(f);
    for (size_t cut = 0; cut < text.size(); cut += 3) {
      EXPECT_NO_THROW(Parse(text.substr(0, cut)));
    }
    for (int i = 0; i < 300; ++i) {
      std::string mutated = text;
      for (int k = 0; k < 4; ++k) {
        mutated[rng() % mutated.size()] = static_cast<char>(rng() % 128);
      }
      ParseResult p;
      EXPECT_NO_THROW(p = Parse(mutated));
      if (p.ok()) EXPECT_NO_THROW(Validate(*p.description));
      else EXPECT_FALSE(p.diagnostics.empty());
    }
  }
}

TEST(Parse, Expressions) {
  Diagnostics d;
  auto e = ParseExpression("not a and b or n + 1 <= 3 - -2", &d);
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(PrintExpr(*e), "not a and b or n + 1 <= 3 - -2");
  EXPECT_EQ(e->op, "or");
  auto paren = ParseExpression("(a or b) and c", &d);
  EXPECT_EQ(PrintExpr(*paren), "(a or b) and c");
  auto sub = ParseExpression("n - (m - 1)", &d);
  EXPECT_EQ(PrintExpr(*sub), "n - (m - 1)");
  EXPECT_FALSE(ParseExpression("x.failure", &d).has_value());
}

TEST(Validate, FixturesHaveNoDiagnostics) {
  for (const char* f : kFixtures) {
    ParseResult p = Parse(ReadFixture(f));
    ASSERT_TRUE(p.ok()) << f;
    ValidationResult v = Validate(*p.description);
    EXPECT_TRUE(v.ok()) << f;
    EXPECT_TRUE(v.diagnostics.empty()) << f;
  }
}

struct Violation {
  const char* fixture;
  const char* from;
  const char* to;
  const char* code;
};

class ValidateViolation : public ::testing::TestWithParam<Violation> {};

TEST_P(ValidateViolation, ReportsCode) {
  const Violation& v = GetParam();
  std::string text = ReplaceOnce(ReadFixture(v.fixture), v.from, v.to);
  ParseResult p = Parse(text);
  ASSERT_TRUE(p.ok()) << (p.diagnostics.empty() ? "" : p.diagnostics[0].message);
  ValidationResult r = Validate(*p.description);
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(HasCode(r.diagnostics, v.code))
      << "got " << (r.diagnostics.empty() ? "nothing" : r.diagnostics[0].code);
}

INSTANTIATE_TEST_SUITE_P(
    Codes, ValidateViolation,
    ::testing::Values(
        Violation{"cs_sync.padl", "FROM S.send_response  TO C_1.receive_response",
                  "FROM S.receive_request TO C_1.receive_response", "E_ATTACH_DIR"},
        Violation{"cs_sync.padl", "FROM C_2.send_request TO S.receive_request",
                  "FROM C_1.send_request TO S.receive_request", "E_UNI_FANOUT"},
        Violation{"cs_sync.padl", "FROM C_2.send_request TO S.receive_request",
                  "FROM C_2.send_request TO C_1.receive_response", "E_DEP_COUNT"},
        Violation{"cs_sync.padl", "OUTPUT_INTERACTIONS UNI send_request",
                  "OUTPUT_INTERACTIONS AND send_request", "E_ANDOR_TO_NONUNI"},
        Violation{"cs_sync.padl", "FROM C_2.send_request TO S.receive_request",
                  "FROM C_2.send_request TO C_2.receive_response", "E_ATTACH_SELF"},
        Violation{"cs_sync.padl", "INPUT_INTERACTIONS  OR receive_request",
                  "INPUT_INTERACTIONS  UNI receive_request", "E_DEP_INVALID"},
        Violation{"cs_sync.padl", "C_2 : Client_Type()", "C_2 : Klient_Type()",
                  "E_UNKNOWN_AET"},
        Violation{"cs_sync.padl", "C_2 : Client_Type()", "C_2 : Client_Type(1)",
                  "E_PARAM_ARITY"},
        Violation{"cs_sync.padl", "FROM C_1.send_request TO S.receive_request",
                  "FROM C_3.send_request TO S.receive_request", "E_UNKNOWN_AEI"},
        Violation{"cs_sync.padl", "FROM C_1.send_request TO S.receive_request",
                  "FROM C_1.send_reqest TO S.receive_request", "E_UNKNOWN_INTERACTION"},
        Violation{"cs_sync.padl", "send_response . Server()", "send_response . Servr()",
                  "E_UNKNOWN_EQUATION"},
        Violation{"cs_sync.padl", "send_response . Server()", "send_response . Server(1)",
                  "E_INVOKE_ARITY"},
        Violation{"cs_sync.padl", "process . send_request", "process . skip",
                  "E_INTERACTION_UNUSED"},
        Violation{"cs_sync.padl", "C_2 : Client_Type()", "S : Client_Type()", "E_DUP_NAME"},
        Violation{"cs_sync.padl", "C_2 : Client_Type()", "OAQ_1 : Client_Type()",
                  "E_RESERVED_NAME"},
        Violation{"cs_sync.padl", "ARCHI_INTERACTIONS\n     void",
                  "ARCHI_INTERACTIONS\n     C_1.send_request", "E_ARCHI_ATTACHED"},
        Violation{"cs_sync.padl", "FROM S.send_response  TO C_2.receive_response",
                  "FROM S.send_response  TO C_1.receive_response", "E_DUP_ATTACHMENT"},
        Violation{"cs_async.padl", "cond(send_request.success = true)",
                  "cond(receive_response.success = true)", "E_SUCCESS_NON_SSYNC"},
        Violation{"cs_async.padl", "cond(send_request.success = true)", "cond(1 + 1)",
                  "E_GUARD_TYPE"},
        Violation{"cs_async.padl", "cond(send_request.success = true)", "cond(busy)",
                  "E_UNKNOWN_VAR"},
        Violation{"cs_async.padl", "keep_processing . Client_Interacting()",
                  "Client_Interacting()", "E_UNGUARDED_BRANCH"},
        Violation{"cs_async.padl", "Client_Internal(void; void)",
                  "Client_Internal(int n; void)", "E_UNBOUNDED_INT"},
        Violation{"cs_async.padl", "Client_Internal(void; void)",
                  "Client_Internal(int(0..2) n; void)", "E_MISSING_DEFAULT"},
        Violation{"cruise.padl", "cond(success = true)", "cond(success = 1)", "E_TYPE"},
        Violation{"cruise.padl", "Checking(signal_on.success)", "Checking(3)",
                  "E_PARAM_TYPE"}),
    [](const ::testing::TestParamInfo<Violation>& info) {
      return std::string(info.param.code).substr(2) + "_" + std::to_string(info.index);
    });

TEST(Validate, CollectsEveryViolation) {
  std::string text = ReadFixture("cs_sync.padl");
  text = ReplaceOnce(text, "FROM C_2.send_request TO S.receive_request",
                     "FROM C_2.receive_response TO S.receive_request");
  text = ReplaceOnce(text, "send_response . Server()", "send_response . Servr()");
  Diagnostics d = ValidateText(text);
  EXPECT_TRUE(HasCode(d, "E_ATTACH_DIR"));
  EXPECT_TRUE(HasCode(d, "E_UNKNOWN_EQUATION"));
}

TEST(Validate, BoundedIntParametersAreAccepted) {
  std::string text = ReadFixture("cs_sync.padl");
  text = ReplaceOnce(text, "Client(void; void) =\n       process . send_request . receive_response . Client()",
                     "Client(int(0..2) k := 0; void) =\n       choice { cond(k < 2) -> process . send_request . "
                     "receive_response . Client(k + 1), cond(k = 2) -> send_request . "
                     "receive_response . Client(0) }");
  EXPECT_TRUE(ValidateText(text).empty());
}

TEST(AttachNo, Counts) {
  ValidatedArchitecture cs = LoadFixture("cs_sync.padl");
  EXPECT_EQ(AttachNo(cs, {"S", "receive_request", {}}), 2);
  EXPECT_EQ(AttachNo(cs, {"S", "send_response", {}}), 2);
  EXPECT_EQ(AttachNo(cs, {"C_1", "send_request", {}}), 1);
  EXPECT_THROW(AttachNo(cs, {"C_1", "nope", {}}), std::out_of_range);
  EXPECT_THROW(AttachNo(cs, {"X", "send_request", {}}), std::out_of_range);

  ValidatedArchitecture cc = LoadFixture("cruise.padl");
  EXPECT_EQ(AttachNo(cc, {"P", "init_applet", {}}), 0);
  EXPECT_EQ(AttachNo(cc, {"S", "turn_engine_on", {}}), 2);
}

TEST(AttachNo, SumsMatchAttachmentCount) {
  for (const char* f : kFixtures) {
    ValidatedArchitecture a = LoadFixture(f);
    int outputs = 0, inputs = 0;
    for (const Instance& inst : a.instances()) {
      for (const InteractionDecl& d : a.aet_of(inst.name).interactions) {
        int n = AttachNo(a, {inst.name, d.name, {}});
        (d.direction == Direction::kOutput ? outputs : inputs) += n;
      }
    }
    EXPECT_EQ(outputs, static_cast<int>(a.attachments().size())) << f;
    EXPECT_EQ(inputs, static_cast<int>(a.attachments().size())) << f;
  }
}

TEST(PrettyPrint, RoundTripsFixtures) {
  for (const char* f : kFixtures) {
    ParseResult first = Parse(ReadFixture(f));
    ASSERT_TRUE(first.ok()) << f;
    std::string printed = PrettyPrint(*first.description);
    ParseResult second = Parse(printed);
    ASSERT_TRUE(second.ok()) << f << "\n" << printed;
    EXPECT_EQ(*first.description, *second.description) << f;
    EXPECT_EQ(PrettyPrint(*second.description), printed) << f;
  }
}

TEST(PrettyPrint, EmitsListingConventions) {
  std::string text = PrettyPrint(LoadFixture("cs_sync.padl").description());
  EXPECT_NE(text.find("OR send_response DEP receive_request"), std::string::npos);
  EXPECT_NE(text.find("ARCHI_ELEM_TYPE Server_Type(void)"), std::string::npos);
  EXPECT_NE(text.find("ARCHI_INTERACTIONS\n    void"), std::string::npos);
}

TEST(AstEquality, IgnoresLayout) {
  std::string text = ReadFixture("cs_sync.padl");
  std::string compact = ReplaceOnce(text, "S   : Server_Type();", "S:Server_Type();");
  EXPECT_EQ(*Parse(text).description, *Parse(compact).description);
}

}  // namespace
}  // namespace padl
