// Copyright 2026 The mbd Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mbd/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

namespace mbd {

std::string ParseError::to_string() const {
  std::string out = span.file + ":" + std::to_string(span.line) + ":" +
                    std::to_string(span.column) + ": " + message;
  if (!expected.empty()) {
    out += " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) out += i + 1 == expected.size() ? " or " : ", ";
      out += expected[i];
    }
    out += ")";
  }
  return out;
}

namespace {

enum class Tok {
  kWord,
  kLBrace,
  kRBrace,
  kLParen,
  kRParen,
  kComma,
  kColon,
  kSemi,
  kAssign,  // =
  kEquals,  // ==
  kEnd,
};

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' ||
         c == '+' || c == '-';
}

bool is_identifier(std::string_view w) {
  if (w.empty() || std::isalpha(static_cast<unsigned char>(w[0])) == 0) {
    return false;
  }
  return std::all_of(w.begin(), w.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
  });
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::kWord: return "'" + t.text + "'";
    case Tok::kEnd: return "end of input";
    default: return "'" + t.text + "'";
  }
}

// Single pass; unknown characters become errors and are skipped.
std::vector<Token> lex(std::string_view text, const std::string& file,
                       std::vector<ParseError>& errors) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto bump = [&](std::size_t n) {
    i += n;
    col += n;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++i;
      ++line;
      col = 1;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      bump(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') bump(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    if (is_word_char(c)) {
      std::size_t j = i;
      while (j < text.size() && is_word_char(text[j])) ++j;
      t.kind = Tok::kWord;
      t.text = std::string(text.substr(i, j - i));
      bump(j - i);
      out.push_back(std::move(t));
      continue;
    }
    std::size_t len = 1;
    switch (c) {
      case '{': t.kind = Tok::kLBrace; break;
      case '}': t.kind = Tok::kRBrace; break;
      case '(': t.kind = Tok::kLParen; break;
      case ')': t.kind = Tok::kRParen; break;
      case ',': t.kind = Tok::kComma; break;
      case ':': t.kind = Tok::kColon; break;
      case ';': t.kind = Tok::kSemi; break;
      case '=':
        if (i + 1 < text.size() && text[i + 1] == '=') {
          t.kind = Tok::kEquals;
          len = 2;
        } else {
          t.kind = Tok::kAssign;
        }
        break;
      default:
        errors.push_back({{file, line, col},
                          std::string("unexpected character '") + c + "'",
                          {}});
        bump(1);
        continue;
    }
    t.text = std::string(text.substr(i, len));
    bump(len);
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

// Thrown after an error is recorded, to unwind to the recovery point.
struct Abort {};

class ParserBase {
 protected:
  ParserBase(std::string_view text, std::string file) : file_(std::move(file)) {
    tokens_ = lex(text, file_, errors_);
  }

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  bool at(Tok kind) const { return peek().kind == kind; }
  bool at_word(std::string_view w, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::kWord && peek(ahead).text == w;
  }
  const Token& advance() {
    const Token& t = peek();
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }

  SourceSpan span(const Token& t) const { return {file_, t.line, t.column}; }

  void error(const Token& at, std::string message,
             std::vector<std::string> expected = {}) {
    errors_.push_back({span(at), std::move(message), std::move(expected)});
  }
  [[noreturn]] void fail(std::string message,
                         std::vector<std::string> expected = {}) {
    error(peek(), std::move(message), std::move(expected));
    throw Abort{};
  }

  const Token& expect(Tok kind, const char* what) {
    if (!at(kind)) fail("expected " + std::string(what) + ", found " + describe(peek()), {what});
    return advance();
  }
  void expect_word(std::string_view w) {
    if (!at_word(w)) {
      fail("expected '" + std::string(w) + "', found " + describe(peek()),
           {"'" + std::string(w) + "'"});
    }
    advance();
  }
  const Token& identifier() {
    if (!at(Tok::kWord) || !is_identifier(peek().text)) {
      fail("expected identifier, found " + describe(peek()), {"identifier"});
    }
    return advance();
  }
  const Token& value() {
    if (!at(Tok::kWord)) fail("expected value, found " + describe(peek()), {"value"});
    return advance();
  }

  std::string file_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<ParseError> errors_;
};

const std::set<std::string, std::less<>> kDeclKeywords = {
    "domain", "param", "component", "always"};

class ModelParser : ParserBase {
 public:
  ModelParser(std::string_view text, std::string file)
      : ParserBase(text, std::move(file)) {}

  ParseResult<SystemModel> run() {
    if (at(Tok::kEnd)) {
      error(peek(), "expected declaration",
            {"'domain'", "'param'", "'component'", "'always'"});
    }
    while (!at(Tok::kEnd)) {
      const std::size_t start = pos_;
      try {
        declaration();
      } catch (const Abort&) {
        recover(start);
      }
    }
    if (!errors_.empty()) return {std::nullopt, std::move(errors_)};
    resolve();
    return {std::move(model_), {}};
  }

 private:
  void recover(std::size_t start) {
    if (pos_ == start) advance();
    while (!at(Tok::kEnd)) {
      if (peek().kind == Tok::kWord && kDeclKeywords.contains(peek().text)) {
        return;
      }
      advance();
    }
  }

  void declaration() {
    if (at_word("domain")) return domain();
    if (at_word("param")) return param();
    if (at_word("component")) return component();
    if (at_word("always")) {
      advance();
      expect(Tok::kLBrace, "'{'");
      block(model_.structural);
      return;
    }
    fail("expected declaration, found " + describe(peek()),
         {"'domain'", "'param'", "'component'", "'always'"});
  }

  void domain() {
    advance();
    Domain d;
    d.name = identifier().text;
    expect(Tok::kAssign, "'='");
    expect(Tok::kLBrace, "'{'");
    d.values.push_back(value().text);
    while (at(Tok::kComma)) {
      advance();
      d.values.push_back(value().text);
    }
    expect(Tok::kRBrace, "'}'");
    model_.domains.push_back(std::move(d));
  }

  void param() {
    advance();
    Parameter p;
    p.name = identifier().text;
    expect(Tok::kColon, "':'");
    p.domain = identifier().text;
    bool flagged = false;
    while (at_word("context") || at_word("observable") || at_word("assumable")) {
      const Token& flag = peek();
      Role role = flag.text == "context"      ? Role::kContext
                  : flag.text == "observable" ? Role::kObservable
                                              : Role::kAssumable;
      if (flagged) {
        fail("parameter '" + p.name + "' already has role " +
             std::string(role_name(p.role)));
      }
      advance();
      p.role = role;
      flagged = true;
    }
    model_.parameters.push_back(std::move(p));
  }

  void component() {
    advance();
    Component c;
    c.name = identifier().text;
    expect(Tok::kLBrace, "'{'");
    if (!at_word("mode")) fail("expected 'mode', found " + describe(peek()), {"'mode'"});
    while (at_word("mode")) {
      advance();
      Mode m;
      m.name = identifier().text;
      expect(Tok::kLBrace, "'{'");
      block(m.constraints);
      c.modes.push_back(std::move(m));
    }
    expect(Tok::kRBrace, "'}'");
    model_.components.push_back(std::move(c));
  }

  // Constraints up to and including the closing brace.
  void block(std::vector<Constraint>& out) {
    while (!at(Tok::kRBrace)) {
      if (at(Tok::kSemi)) {
        advance();
        continue;
      }
      if (at(Tok::kEnd)) fail("expected '}', found end of input", {"'}'"});
      out.push_back(constraint());
    }
    advance();
  }

  Constraint constraint() {
    const bool call = peek(1).kind == Tok::kLParen;
    if (call && at_word("rel")) return relation();
    if (call && (at_word("signsum") || at_word("signsub"))) return sign();
    if (!at(Tok::kWord) || !is_identifier(peek().text)) {
      fail("expected constraint, found " + describe(peek()),
           {"'rel'", "'signsum'", "'signsub'", "identifier"});
    }
    std::string lhs = advance().text;
    expect(Tok::kEquals, "'=='");
    return Constraint::equals(std::move(lhs), value().text);
  }

  Constraint relation() {
    advance();
    expect(Tok::kLParen, "'('");
    std::vector<std::string> scope{identifier().text};
    while (at(Tok::kComma)) {
      advance();
      scope.push_back(identifier().text);
    }
    expect(Tok::kRParen, "')'");
    expect_word("in");
    expect(Tok::kLBrace, "'{'");
    std::vector<std::vector<std::string>> tuples;
    do {
      if (!tuples.empty()) advance();  // ','
      const Token& open = expect(Tok::kLParen, "'('");
      std::vector<std::string> tuple{value().text};
      while (at(Tok::kComma)) {
        advance();
        tuple.push_back(value().text);
      }
      expect(Tok::kRParen, "')'");
      if (tuple.size() != scope.size()) {
        error(open, "tuple has " + std::to_string(tuple.size()) +
                        " values, relation has " +
                        std::to_string(scope.size()) + " parameters");
      }
      tuples.push_back(std::move(tuple));
    } while (at(Tok::kComma));
    expect(Tok::kRBrace, "'}'");
    return Constraint::relation(std::move(scope), std::move(tuples));
  }

  Constraint sign() {
    const bool sub = advance().text == "signsub";
    expect(Tok::kLParen, "'('");
    std::string a = identifier().text;
    expect(Tok::kComma, "','");
    std::string b = identifier().text;
    expect(Tok::kComma, "','");
    std::string c = identifier().text;
    expect(Tok::kRParen, "')'");
    std::optional<std::string> m;
    if (at_word("via")) {
      advance();
      m = identifier().text;
      via_order_.push_back(*m);
    }
    return sub ? Constraint::sign_sub(a, b, c, m) : Constraint::sign_sum(a, b, c, m);
  }

  // Name-dependent fixups once every declaration has been seen.
  void resolve() {
    for (const std::string& m : via_order_) {
      if (model_.find_parameter(m) == nullptr) {
        model_.parameters.push_back(
            {m, std::string(kMagnitudeDomain), Role::kAssumable});
      }
    }
    auto fix = [&](Constraint& c) {
      if (c.kind == ConstraintKind::kEqualsConstant &&
          model_.find_parameter(c.constant) != nullptr) {
        c = Constraint::same(c.scope[0], c.constant);
        return;
      }
      for (std::size_t i = 0; i < c.scope.size(); ++i) {
        const Parameter* p = model_.find_parameter(c.scope[i]);
        if (p == nullptr) continue;
        if (c.kind == ConstraintKind::kEqualsConstant) {
          c.constant = std::string(canonical_value(p->domain, c.constant));
        }
        for (auto& tuple : c.tuples) {
          if (i < tuple.size()) {
            tuple[i] = std::string(canonical_value(p->domain, tuple[i]));
          }
        }
      }
    };
    for (Component& comp : model_.components) {
      for (Mode& m : comp.modes) std::for_each(m.constraints.begin(), m.constraints.end(), fix);
    }
    std::for_each(model_.structural.begin(), model_.structural.end(), fix);
  }

  SystemModel model_;
  std::vector<std::string> via_order_;
};

class ProblemParser : ParserBase {
 public:
  ProblemParser(std::string_view text, std::string file,
                std::shared_ptr<const Model> model)
      : ParserBase(text, std::move(file)), model_(std::move(model)) {}

  ParseResult<DiagnosticProblem> run() {
    if (!errors_.empty()) return {std::nullopt, std::move(errors_)};
    DiagnosticProblem problem;
    problem.model = model_;
    try {
      const Token first = peek();
      if (at_word("cxt")) {
        advance();
        do {
          binding(problem);
        } while (!at(Tok::kSemi) && !at(Tok::kEnd));
        expect(Tok::kSemi, "';'");
      }
      for (ParamIndex p : model_->parameters_with(Role::kContext)) {
        if (!problem.cxt.contains(p)) {
          error(first, "context parameter '" + model_->parameter(p).name +
                           "' is not bound");
        }
      }
      expect_word("obs");
      do {
        observation(problem);
      } while (!at(Tok::kSemi) && !at(Tok::kEnd));
      end_section();
      if (at_word("explain")) {
        advance();
        do {
          explained(problem);
        } while (!at(Tok::kSemi) && !at(Tok::kEnd));
        end_section();
      }
      if (!at(Tok::kEnd)) fail("expected end of input, found " + describe(peek()));
    } catch (const Abort&) {
    }
    if (!errors_.empty()) return {std::nullopt, std::move(errors_)};
    return {std::move(problem), {}};
  }

 private:
  void end_section() {
    if (at(Tok::kEnd)) return;
    expect(Tok::kSemi, "';'");
  }

  std::optional<ParamIndex> lookup(const Token& name) {
    auto p = model_->find_parameter(name.text);
    if (!p) error(name, "unknown parameter '" + name.text + "'");
    return p;
  }

  std::optional<ValueIndex> lookup_value(ParamIndex p, const Token& v) {
    auto idx = model_->find_value(p, v.text);
    if (!idx) {
      error(v, "value '" + v.text + "' is not in the domain of '" +
                   model_->parameter(p).name + "'");
    }
    return idx;
  }

  void binding(DiagnosticProblem& problem) {
    const Token name = identifier();
    expect(Tok::kAssign, "'='");
    const Token v = value();
    auto p = lookup(name);
    if (!p) return;
    if (model_->role(*p) != Role::kContext) {
      error(name, "'" + name.text + "' is not a context parameter");
      return;
    }
    auto idx = lookup_value(*p, v);
    if (!idx) return;
    if (!problem.cxt.emplace(*p, *idx).second) {
      error(name, "'" + name.text + "' bound more than once");
    }
  }

  void observation(DiagnosticProblem& problem) {
    const Token name = identifier();
    expect(Tok::kAssign, "'='");
    expect(Tok::kLBrace, "'{'");
    std::vector<Token> values{value()};
    while (at(Tok::kComma)) {
      advance();
      values.push_back(value());
    }
    expect(Tok::kRBrace, "'}'");
    auto p = lookup(name);
    if (!p) return;
    if (model_->role(*p) != Role::kObservable) {
      error(name, "'" + name.text + "' is not observable");
      return;
    }
    Observation o{*p, {}};
    for (const Token& v : values) {
      if (auto idx = lookup_value(*p, v)) o.values.insert(*idx);
    }
    if (problem.find_observation(*p) != nullptr) {
      error(name, "'" + name.text + "' observed more than once");
      return;
    }
    problem.obs.push_back(o);
  }

  void explained(DiagnosticProblem& problem) {
    const Token name = identifier();
    auto p = lookup(name);
    if (!p) return;
    if (problem.find_observation(*p) == nullptr) {
      error(name, "'" + name.text + "' is explained but not observed");
    } else if (problem.in_obs_plus(*p)) {
      error(name, "'" + name.text + "' listed more than once");
    } else {
      problem.obs_plus.push_back(*p);
    }
  }

  std::shared_ptr<const Model> model_;
};

}  // namespace

ParseResult<SystemModel> parse_model(std::string_view text, std::string file) {
  return ModelParser(text, std::move(file)).run();
}

ParseResult<DiagnosticProblem> parse_problem(std::string_view text,
                                             std::shared_ptr<const Model> model,
                                             std::string file) {
  if (!model) throw Error("parse_problem needs a model");
  return ProblemParser(text, std::move(file), std::move(model)).run();
}

std::string serialize_constraint(const Constraint& c) {
  auto join = [](const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i > 0) out += ", ";
      out += items[i];
    }
    return out;
  };
  switch (c.kind) {
    case ConstraintKind::kRelation: {
      std::string out = "rel(" + join(c.scope) + ") in { ";
      for (std::size_t i = 0; i < c.tuples.size(); ++i) {
        if (i > 0) out += ", ";
        out += "(";
        for (std::size_t j = 0; j < c.tuples[i].size(); ++j) {
          if (j > 0) out += ",";
          out += c.tuples[i][j];
        }
        out += ")";
      }
      return out + " }";
    }
    case ConstraintKind::kEqualsConstant:
      return c.scope.at(0) + " == " + c.constant;
    case ConstraintKind::kEqualsParameter:
      return c.scope.at(0) + " == " + c.scope.at(1);
    case ConstraintKind::kSignSum:
    case ConstraintKind::kSignSub: {
      std::string out = std::string(c.kind == ConstraintKind::kSignSum
                                        ? "signsum("
                                        : "signsub(") +
                        join(c.scope) + ")";
      if (c.magnitude) out += " via " + *c.magnitude;
      return out;
    }
  }
  return {};
}

namespace {

void write_block(std::string& out, const std::string& head,
                 const std::vector<Constraint>& constraints,
                 const std::string& indent) {
  out += indent + head + " {";
  if (constraints.empty()) {
    out += " }\n";
  } else if (constraints.size() == 1) {
    out += " " + serialize_constraint(constraints[0]) + " }\n";
  } else {
    out += "\n";
    for (const Constraint& c : constraints) {
      out += indent + "  " + serialize_constraint(c) + "\n";
    }
    out += indent + "}\n";
  }
}

}  // namespace

std::string serialize_model(const SystemModel& model) {
  std::string out;
  for (const Domain& d : model.domains) {
    if (d.builtin) continue;
    out += "domain " + d.name + " = { ";
    for (std::size_t i = 0; i < d.values.size(); ++i) {
      if (i > 0) out += ", ";
      out += d.values[i];
    }
    out += " }\n";
  }
  for (const Parameter& p : model.parameters) {
    out += "param " + p.name + " : " + p.domain;
    if (p.role != Role::kInternal) out += " " + std::string(role_name(p.role));
    out += "\n";
  }
  for (const Component& c : model.components) {
    out += "component " + c.name + " {\n";
    for (const Mode& m : c.modes) {
      write_block(out, "mode " + m.name, m.constraints, "  ");
    }
    out += "}\n";
  }
  if (!model.structural.empty()) write_block(out, "always", model.structural, "");
  return out;
}

}  // namespace mbd
