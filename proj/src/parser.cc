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

#include "padl/parser.h"

#include <cctype>
#include <charconv>
#include <set>
#include <string>

namespace padl {
namespace {

enum class TokKind { kIdent, kNumber, kSymbol, kEof };

struct Token {
  TokKind kind = TokKind::kEof;
  std::string text;
  SourceLocation location;
};

const std::set<std::string>& Keywords() {
  static const std::set<std::string> kKeywords = {
      "ARCHI_TYPE", "ARCHI_BEHAVIOR", "ARCHI_ELEM_TYPE", "BEHAVIOR",
      "INPUT_INTERACTIONS", "OUTPUT_INTERACTIONS", "ARCHI_TOPOLOGY",
      "ARCHI_ELEM_INSTANCES", "ARCHI_INTERACTIONS", "ARCHI_ATTACHMENTS",
      "END", "FROM", "TO", "UNI", "AND", "OR", "DEP", "SYNC", "SSYNC",
      "ASYNC", "void", "stop", "choice", "cond", "true", "false", "const",
      "boolean", "bool", "int", "integer", "and", "or", "not"};
  return kKeywords;
}

struct ParseFailure {
  Diagnostic diagnostic;
};

[[noreturn]] void Fail(SourceLocation loc, std::string code, std::string msg) {
  throw ParseFailure{Diagnostic{Severity::kError, loc, std::move(code), std::move(msg)}};
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> Run() {
    std::vector<Token> out;
    for (;;) {
      SkipSpaceAndComments();
      Token t;
      t.location = {line_, col_};
      if (pos_ >= src_.size()) {
        t.kind = TokKind::kEof;
        out.push_back(t);
        return out;
      }
      char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        t.kind = TokKind::kIdent;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
          t.text.push_back(Advance());
        }
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        t.kind = TokKind::kNumber;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
          t.text.push_back(Advance());
        }
      } else {
        t.kind = TokKind::kSymbol;
        static const char* kTwoChar[] = {"..", ":=", "!=", "<=", ">=", "->"};
        bool matched = false;
        for (const char* two : kTwoChar) {
          if (src_.substr(pos_, 2) == two) {
            t.text = two;
            Advance();
            Advance();
            matched = true;
            break;
          }
        }
        if (!matched) {
          static const std::string kSingle = "(){};,.:=<>+-*";
          if (kSingle.find(c) == std::string::npos) {
            Fail(t.location, "E_LEX",
                 std::string("unexpected character '") + c + "'");
          }
          t.text = std::string(1, Advance());
        }
      }
      out.push_back(std::move(t));
    }
  }

 private:
  char Advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void SkipSpaceAndComments() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        Advance();
      } else if (c == '%' || src_.substr(pos_, 2) == "//") {
        while (pos_ < src_.size() && src_[pos_] != '\n') Advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  ArchiDescription ParseArchi() {
    ArchiDescription a;
    Expect("ARCHI_TYPE");
    a.name = ExpectIdent("architectural type name");
    Expect("(");
    a.params = ParseParamList(/*allow_locals=*/false);
    Expect(")");
    Expect("ARCHI_BEHAVIOR");
    do {
      a.aets.push_back(ParseAet());
    } while (Is("ARCHI_ELEM_TYPE"));
    Expect("ARCHI_TOPOLOGY");
    Expect("ARCHI_ELEM_INSTANCES");
    do {
      a.instances.push_back(ParseInstance());
    } while (Accept(";"));
    Expect("ARCHI_INTERACTIONS");
    if (!Accept("void")) {
      do {
        a.archi_interactions.push_back(ParseEndpoint());
      } while (Accept(";"));
    }
    Expect("ARCHI_ATTACHMENTS");
    if (!Accept("void")) {
      do {
        Attachment att;
        att.location = Peek().location;
        Expect("FROM");
        att.from = ParseEndpoint();
        Expect("TO");
        att.to = ParseEndpoint();
        a.attachments.push_back(std::move(att));
      } while (Accept(";"));
    }
    Expect("END");
    ExpectEof();
    return a;
  }

  std::vector<Equation> ParseEquationList() {
    std::vector<Equation> eqs;
    do {
      eqs.push_back(ParseEquation());
    } while (Accept(";"));
    return eqs;
  }

  Expr ParseStandaloneExpr() {
    Expr e = ParseExpr();
    ExpectEof();
    return e;
  }

  void ExpectEof() {
    if (Peek().kind != TokKind::kEof) {
      Fail(Peek().location, "E_SYNTAX", "unexpected '" + Peek().text + "' after end of input");
    }
  }

 private:
  const Token& Peek(size_t ahead = 0) const {
    size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }

  bool Is(std::string_view text) const {
    const Token& t = Peek();
    return t.kind != TokKind::kEof && t.kind != TokKind::kNumber && t.text == text;
  }

  bool Accept(std::string_view text) {
    if (Is(text)) {
      ++pos_;
      return true;
    }
    return false;
  }

  static std::string Describe(const Token& t) {
    return t.kind == TokKind::kEof ? "end of file" : "'" + t.text + "'";
  }

  void Expect(std::string_view text) {
    if (!Accept(text)) {
      Fail(Peek().location, "E_SYNTAX",
           "expected '" + std::string(text) + "' but found " + Describe(Peek()));
    }
  }

  bool IsPlainIdent(const Token& t) const {
    return t.kind == TokKind::kIdent && !Keywords().count(t.text);
  }

  std::string ExpectIdent(std::string_view what) {
    const Token& t = Peek();
    if (!IsPlainIdent(t)) {
      Fail(t.location, "E_SYNTAX",
           "expected " + std::string(what) + " but found " + Describe(t));
    }
    ++pos_;
    return t.text;
  }

  Value ExpectInt() {
    bool negative = Accept("-");
    const Token& t = Peek();
    if (t.kind != TokKind::kNumber) {
      Fail(t.location, "E_SYNTAX", "expected integer literal but found " + Describe(t));
    }
    Value v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc()) Fail(t.location, "E_LEX", "integer literal out of range");
    ++pos_;
    return negative ? -v : v;
  }

  TypeSpec ParseType() {
    TypeSpec ty;
    const Token& t = Peek();
    if (Accept("boolean") || Accept("bool")) {
      ty.kind = DataKind::kBool;
      ty.lo = 0;
      ty.hi = 1;
      return ty;
    }
    if (Accept("int") || Accept("integer")) {
      ty.kind = DataKind::kInt;
      if (Accept("(")) {
        ty.lo = ExpectInt();
        Expect("..");
        ty.hi = ExpectInt();
        Expect(")");
      } else {
        ty.bounded = false;
        ty.lo = 0;
        ty.hi = 0;
      }
      return ty;
    }
    Fail(t.location, "E_SYNTAX", "expected a type but found " + Describe(t));
  }

  // `void` or a comma-separated list of `[const] type name [:= expr]`.
  std::vector<Param> ParseParamList(bool allow_locals) {
    std::vector<Param> params;
    if (!Accept("void")) {
      do {
        Param p;
        p.location = Peek().location;
        Accept("const");
        p.type = ParseType();
        p.name = ExpectIdent("parameter name");
        if (Accept(":=")) p.init = ParseExpr();
        params.push_back(std::move(p));
      } while (Accept(","));
    }
    if (allow_locals) {
      Expect(";");
      if (!Is("void")) {
        Fail(Peek().location, "E_LOCALS",
             "local variables are not supported; expected 'void'");
      }
      Expect("void");
    }
    return params;
  }

  AetDef ParseAet() {
    AetDef aet;
    aet.location = Peek().location;
    Expect("ARCHI_ELEM_TYPE");
    aet.name = ExpectIdent("element type name");
    Expect("(");
    aet.params = ParseParamList(false);
    Expect(")");
    Expect("BEHAVIOR");
    aet.equations = ParseEquationList();
    Expect("INPUT_INTERACTIONS");
    ParseInteractionSection(Direction::kInput, &aet.interactions);
    Expect("OUTPUT_INTERACTIONS");
    ParseInteractionSection(Direction::kOutput, &aet.interactions);
    return aet;
  }

  bool IsSyncQualifier() const { return Is("SYNC") || Is("SSYNC") || Is("ASYNC"); }
  bool IsMultQualifier() const { return Is("UNI") || Is("AND") || Is("OR"); }

  void ParseInteractionSection(Direction dir, std::vector<InteractionDecl>* out) {
    if (Accept("void")) return;
    if (!IsSyncQualifier() && !IsMultQualifier()) {
      Fail(Peek().location, "E_SYNTAX",
           "expected interaction qualifiers or 'void' but found " + Describe(Peek()));
    }
    while (IsSyncQualifier() || IsMultQualifier()) {
      Synchronicity sync = Synchronicity::kSync;
      if (Accept("SSYNC")) {
        sync = Synchronicity::kSsync;
      } else if (Accept("ASYNC")) {
        sync = Synchronicity::kAsync;
      } else {
        Accept("SYNC");
      }
      Multiplicity mult;
      if (Accept("UNI")) {
        mult = Multiplicity::kUni;
      } else if (Accept("AND")) {
        mult = Multiplicity::kAnd;
      } else if (Accept("OR")) {
        mult = Multiplicity::kOr;
      } else {
        Fail(Peek().location, "E_SYNTAX",
             "expected UNI, AND or OR but found " + Describe(Peek()));
      }
      for (;;) {
        InteractionDecl d;
        d.location = Peek().location;
        d.name = ExpectIdent("interaction name");
        d.direction = dir;
        d.multiplicity = mult;
        d.synchronicity = sync;
        if (Accept("DEP")) d.dep_on = ExpectIdent("interaction name after DEP");
        out->push_back(std::move(d));
        if (!Accept(";")) break;
        if (!IsPlainIdent(Peek())) break;
      }
    }
  }

  Equation ParseEquation() {
    Equation eq;
    eq.location = Peek().location;
    eq.name = ExpectIdent("equation name");
    Expect("(");
    eq.params = ParseParamList(/*allow_locals=*/true);
    Expect(")");
    Expect("=");
    eq.body = ParseBody();
    return eq;
  }

  Process ParseBody() {
    SourceLocation loc = Peek().location;
    Process p;
    if (Accept("stop")) {
      p = Process::Stop();
    } else if (Accept("choice")) {
      Expect("{");
      std::vector<Process> branches;
      do {
        if (Is("}")) break;  // tolerate a trailing comma
        branches.push_back(ParseBranch());
      } while (Accept(","));
      Expect("}");
      if (branches.empty()) Fail(loc, "E_SYNTAX", "choice needs at least one branch");
      p = Process::Choice(std::move(branches));
    } else {
      std::string name = ExpectIdent("action, equation invocation, 'stop' or 'choice'");
      if (Accept("(")) {
        std::vector<Expr> args;
        if (!Is(")")) {
          do {
            args.push_back(ParseExpr());
          } while (Accept(","));
        }
        Expect(")");
        p = Process::Invoke(std::move(name), std::move(args));
      } else {
        Expect(".");
        p = Process::Prefix(std::move(name), ParseBody());
      }
    }
    p.location = loc;
    return p;
  }

  Process ParseBranch() {
    std::optional<Expr> guard;
    if (Accept("cond")) {
      Expect("(");
      guard = ParseExpr();
      Expect(")");
      Expect("->");
    }
    Process body = ParseBody();
    body.guard = std::move(guard);
    return body;
  }

  Instance ParseInstance() {
    Instance inst;
    inst.location = Peek().location;
    inst.name = ExpectIdent("instance name");
    Expect(":");
    inst.aet = ExpectIdent("element type name");
    Expect("(");
    if (!Is(")")) {
      do {
        inst.args.push_back(ParseExpr());
      } while (Accept(","));
    }
    Expect(")");
    return inst;
  }

  Endpoint ParseEndpoint() {
    Endpoint e;
    e.location = Peek().location;
    e.aei = ExpectIdent("instance name");
    Expect(".");
    e.interaction = ExpectIdent("interaction name");
    return e;
  }

  // or < and < not < comparison < additive < unary minus < primary
  Expr ParseExpr() { return ParseOr(); }

  Expr ParseOr() {
    Expr lhs = ParseAnd();
    while (Is("or")) {
      SourceLocation loc = Peek().location;
      ++pos_;
      lhs = Expr::Binary("or", std::move(lhs), ParseAnd());
      lhs.location = loc;
    }
    return lhs;
  }

  Expr ParseAnd() {
    Expr lhs = ParseNot();
    while (Is("and")) {
      SourceLocation loc = Peek().location;
      ++pos_;
      lhs = Expr::Binary("and", std::move(lhs), ParseNot());
      lhs.location = loc;
    }
    return lhs;
  }

  Expr ParseNot() {
    SourceLocation loc = Peek().location;
    if (Accept("not")) {
      Expr e = Expr::Unary("not", ParseNot());
      e.location = loc;
      return e;
    }
    return ParseComparison();
  }

  Expr ParseComparison() {
    Expr lhs = ParseAdditive();
    static const char* kOps[] = {"=", "!=", "<=", ">=", "<", ">"};
    for (const char* op : kOps) {
      if (Peek().kind == TokKind::kSymbol && Peek().text == op) {
        SourceLocation loc = Peek().location;
        ++pos_;
        Expr e = Expr::Binary(op, std::move(lhs), ParseAdditive());
        e.location = loc;
        return e;
      }
    }
    return lhs;
  }

  Expr ParseAdditive() {
    Expr lhs = ParseUnary();
    while (Peek().kind == TokKind::kSymbol && (Peek().text == "+" || Peek().text == "-")) {
      SourceLocation loc = Peek().location;
      std::string op = Peek().text;
      ++pos_;
      lhs = Expr::Binary(op, std::move(lhs), ParseUnary());
      lhs.location = loc;
    }
    return lhs;
  }

  Expr ParseUnary() {
    SourceLocation loc = Peek().location;
    if (Peek().kind == TokKind::kSymbol && Peek().text == "-") {
      ++pos_;
      Expr operand = ParseUnary();
      if (operand.kind == Expr::Kind::kInt) {
        operand.value = -operand.value;
        operand.location = loc;
        return operand;
      }
      Expr e = Expr::Unary("-", std::move(operand));
      e.location = loc;
      return e;
    }
    return ParsePrimary();
  }

  Expr ParsePrimary() {
    const Token t = Peek();
    Expr e;
    if (Accept("true")) {
      e = Expr::Bool(true);
    } else if (Accept("false")) {
      e = Expr::Bool(false);
    } else if (t.kind == TokKind::kNumber) {
      e = Expr::Int(ExpectInt());
    } else if (Accept("(")) {
      e = ParseExpr();
      Expect(")");
    } else if (IsPlainIdent(t)) {
      ++pos_;
      if (Accept(".")) {
        const Token& field = Peek();
        if (field.kind != TokKind::kIdent || field.text != "success") {
          Fail(field.location, "E_SYNTAX",
               "only the implicit '.success' variable can follow '" + t.text + ".'");
        }
        ++pos_;
        e = Expr::Success(t.text);
      } else {
        e = Expr::Var(t.text);
      }
    } else {
      Fail(t.location, "E_SYNTAX", "expected an expression but found " + Describe(t));
    }
    e.location = t.location;
    return e;
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
};

template <typename Fn>
auto RunParser(std::string_view source, Diagnostics* diags, Fn&& fn)
    -> std::optional<decltype(fn(std::declval<Parser&>()))> {
  try {
    Parser parser(Lexer(source).Run());
    return fn(parser);
  } catch (const ParseFailure& f) {
    if (diags) diags->push_back(f.diagnostic);
    return std::nullopt;
  }
}

}  // namespace

ParseResult Parse(std::string_view source) {
  ParseResult result;
  result.description = RunParser(source, &result.diagnostics,
                                 [](Parser& p) { return p.ParseArchi(); });
  return result;
}

std::optional<std::vector<Equation>> ParseEquations(std::string_view source,
                                                    Diagnostics* diagnostics) {
  return RunParser(source, diagnostics, [](Parser& p) {
    auto eqs = p.ParseEquationList();
    p.ExpectEof();
    return eqs;
  });
}

std::optional<Expr> ParseExpression(std::string_view source, Diagnostics* diagnostics) {
  return RunParser(source, diagnostics, [](Parser& p) { return p.ParseStandaloneExpr(); });
}

}  // namespace padl
