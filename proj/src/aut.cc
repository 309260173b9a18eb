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

#include "padl/aut.h"

#include <cctype>
#include <charconv>
#include <sstream>

namespace padl {

AutError::AutError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::string Quote(const Lts& lts, LabelId l) {
  return l == kTau ? "\"i\"" : "\"" + lts.label_name(l) + "\"";
}

class LineScanner {
 public:
  LineScanner(std::string_view text, int line) : text_(text), line_(line) {}

  void SkipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void Expect(char c) {
    SkipSpace();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw AutError(line_, std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  void ExpectWord(std::string_view w) {
    SkipSpace();
    if (text_.substr(pos_, w.size()) != w) {
      throw AutError(line_, "expected '" + std::string(w) + "'");
    }
    pos_ += w.size();
  }

  std::uint64_t Number() {
    SkipSpace();
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (ec != std::errc()) throw AutError(line_, "expected a number");
    pos_ = ptr - text_.data();
    return v;
  }

  std::string Label() {
    SkipSpace();
    std::string out;
    if (pos_ < text_.size() && text_[pos_] == '"') {
      size_t end = text_.find('"', pos_ + 1);
      if (end == std::string_view::npos) throw AutError(line_, "unterminated label");
      out = text_.substr(pos_ + 1, end - pos_ - 1);
      pos_ = end + 1;
    } else {
      size_t end = text_.find(',', pos_);
      if (end == std::string_view::npos) throw AutError(line_, "expected ','");
      out = text_.substr(pos_, end - pos_);
      while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
      pos_ = end;
    }
    if (out.empty()) throw AutError(line_, "empty label");
    return out;
  }

  void ExpectEnd() {
    SkipSpace();
    if (pos_ != text_.size()) throw AutError(line_, "trailing characters");
  }

 private:
  std::string_view text_;
  int line_;
  size_t pos_ = 0;
};

}  // namespace

std::string WriteAut(const Lts& lts) {
  std::size_t lines = 0;
  for (const auto& row : lts.transitions) {
    for (const Transition& t : row) lines += t.semisync() ? 2 : 1;
  }
  std::ostringstream os;
  os << "des (" << lts.initial << ", " << lines << ", " << lts.num_states() << ")\n";
  for (StateId s = 0; s < lts.num_states(); ++s) {
    for (const Transition& t : lts.transitions[s]) {
      os << '(' << s << ", " << Quote(lts, t.label) << ", " << t.target << ")\n";
      if (t.semisync()) {
        os << '(' << s << ", " << Quote(lts, t.exc_label) << ", " << t.exc_target << ")\n";
      }
    }
  }
  return os.str();
}

std::string WriteDot(const Lts& lts, const std::string& name) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "digraph " << quote(name) << " {\n";
  os << "  node [shape=circle];\n";
  os << "  " << lts.initial << " [shape=doublecircle];\n";
  for (StateId s = 0; s < lts.num_states(); ++s) {
    for (const Transition& t : lts.transitions[s]) {
      os << "  " << s << " -> " << t.target << " [label=" << quote(lts.label_name(t.label))
         << "];\n";
      if (t.semisync()) {
        os << "  " << s << " -> " << t.exc_target << " [label="
           << quote(lts.label_name(t.exc_label)) << ", style=dashed];\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

Lts ReadAut(std::string_view text) {
  std::vector<std::string_view> lines;
  for (size_t start = 0; start <= text.size();) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  size_t i = 0;
  auto blank = [](std::string_view l) {
    for (char c : l) {
      if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  while (i < lines.size() && blank(lines[i])) ++i;
  if (i == lines.size()) throw AutError(1, "missing 'des' header");

  LineScanner header(lines[i], static_cast<int>(i + 1));
  header.ExpectWord("des");
  header.Expect('(');
  std::uint64_t initial = header.Number();
  header.Expect(',');
  std::uint64_t ntrans = header.Number();
  header.Expect(',');
  std::uint64_t nstates = header.Number();
  header.Expect(')');
  header.ExpectEnd();
  if (nstates == 0 || initial >= nstates) {
    throw AutError(static_cast<int>(i + 1), "initial state out of range");
  }
  if (nstates > kNoState) throw AutError(static_cast<int>(i + 1), "too many states");

  Lts lts;
  for (std::uint64_t s = 0; s < nstates; ++s) lts.AddState();
  lts.initial = static_cast<StateId>(initial);
  std::uint64_t seen = 0;
  for (++i; i < lines.size(); ++i) {
    if (blank(lines[i])) continue;
    int ln = static_cast<int>(i + 1);
    LineScanner sc(lines[i], ln);
    sc.Expect('(');
    std::uint64_t from = sc.Number();
    sc.Expect(',');
    std::string label = sc.Label();
    sc.Expect(',');
    std::uint64_t to = sc.Number();
    sc.Expect(')');
    sc.ExpectEnd();
    if (from >= nstates || to >= nstates) throw AutError(ln, "state index out of range");
    if (label == "i" || label == kTauName) label = std::string(kTauName);
    lts.Add(static_cast<StateId>(from), label, static_cast<StateId>(to));
    ++seen;
  }
  if (seen != ntrans) {
    throw AutError(static_cast<int>(lines.size()),
                   "header announces " + std::to_string(ntrans) + " transitions, found " +
                       std::to_string(seen));
  }
  return lts;
}

}  // namespace padl
