// Copyright 2026 The qdist Authors
//
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

#include "qdist/qasm.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

#include "qdist/errors.hpp"

namespace qdist {

namespace {

enum class Tok { Ident, Number, String, Symbol, Arrow, End };

struct Token {
  Tok type = Tok::End;
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space_and_comments();
      Token t;
      t.line = line_;
      t.column = col_;
      if (pos_ >= src_.size()) {
        t.type = Tok::End;
        out.push_back(t);
        return out;
      }
      char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        t.type = Tok::Ident;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                src_[pos_] == '_')) {
          t.text += advance();
        }
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        t.type = Tok::Number;
        lex_number(t);
      } else if (c == '"') {
        t.type = Tok::String;
        advance();
        while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') {
          t.text += advance();
        }
        if (pos_ >= src_.size() || src_[pos_] != '"') {
          throw QasmSyntaxError("unterminated string", t.line, t.column);
        }
        advance();
      } else if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
        t.type = Tok::Arrow;
        t.text = "->";
        advance();
        advance();
      } else if (std::string_view("[](),;+-*/^{}").find(c) !=
                 std::string_view::npos) {
        t.type = Tok::Symbol;
        t.text = advance();
      } else {
        throw QasmSyntaxError(std::string("unexpected character '") + c + "'",
                              t.line, t.column);
      }
      out.push_back(std::move(t));
    }
  }

 private:
  char advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        return;
      }
    }
  }

  void lex_number(Token& t) {
    auto digits = [&] {
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        t.text += advance();
      }
    };
    digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      t.text += advance();
      digits();
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      t.text += advance();
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
        t.text += advance();
      }
      digits();
    }
    if (t.text == ".") {
      throw QasmSyntaxError("malformed number", t.line, t.column);
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

struct Operand {
  std::string reg;
  std::optional<Qubit> index;
  const Token* where;
};

class Parser {
 public:
  Parser(std::vector<Token> toks, std::string id)
      : toks_(std::move(toks)), id_(std::move(id)) {}

  Circuit run() {
    while (peek().type != Tok::End) statement();
    if (!qreg_) throw RegisterError("no quantum register declared");
    return Circuit(qreg_size_, std::move(gates_), id_);
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg, const Token& t) const {
    throw QasmSyntaxError(msg, t.line, t.column);
  }

  bool accept_symbol(std::string_view s) {
    if (peek().type == Tok::Symbol && peek().text == s) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_symbol(std::string_view s) {
    if (!accept_symbol(s)) {
      fail("expected '" + std::string(s) + "' but found '" + peek().text + "'",
           peek());
    }
  }

  const Token& expect(Tok type, const char* what) {
    if (peek().type != type) {
      fail(std::string("expected ") + what + " but found '" + peek().text +
               "'",
           peek());
    }
    return next();
  }

  std::size_t expect_integer() {
    const Token& t = expect(Tok::Number, "integer");
    if (t.text.find_first_not_of("0123456789") != std::string::npos) {
      fail("expected integer", t);
    }
    return std::stoul(t.text);
  }

  void statement() {
    const Token& head = expect(Tok::Ident, "statement");
    const std::string& kw = head.text;
    if (kw == "OPENQASM") {
      expect(Tok::Number, "version");
      expect_symbol(";");
    } else if (kw == "include") {
      expect(Tok::String, "file name");
      expect_symbol(";");
    } else if (kw == "qreg") {
      if (qreg_) throw RegisterError("more than one quantum register declared");
      qreg_ = expect(Tok::Ident, "register name").text;
      expect_symbol("[");
      qreg_size_ = expect_integer();
      if (qreg_size_ == 0) fail("register size must be positive", head);
      expect_symbol("]");
      expect_symbol(";");
    } else if (kw == "creg") {
      if (creg_) throw RegisterError("more than one classical register declared");
      creg_ = expect(Tok::Ident, "register name").text;
      expect_symbol("[");
      expect_integer();
      expect_symbol("]");
      expect_symbol(";");
    } else if (kw == "measure" || kw == "barrier") {
      while (!accept_symbol(";")) {
        if (peek().type == Tok::End) fail("unterminated statement", head);
        ++pos_;
      }
    } else if (kw == "gate" || kw == "opaque") {
      const Token& name = peek();
      throw UnsupportedGateError(name.type == Tok::Ident ? name.text : kw);
    } else {
      gate_application(head);
    }
  }

  void gate_application(const Token& head) {
    std::vector<double> params;
    if (accept_symbol("(")) {
      if (!accept_symbol(")")) {
        do {
          params.push_back(expression());
        } while (accept_symbol(","));
        expect_symbol(")");
      }
    }
    std::vector<Operand> args;
    do {
      args.push_back(operand());
    } while (accept_symbol(","));
    expect_symbol(";");

    auto [kind, values] = resolve(head, std::move(params));
    if (!qreg_) throw RegisterError("gate used before qreg declaration");

    const bool broadcast = args.size() == 1 && !args[0].index;
    if (broadcast) {
      if (arity(kind) != 1) fail("register broadcast needs a 1-qubit gate", head);
      for (Qubit q = 0; q < qreg_size_; ++q) {
        gates_.push_back(make_gate(kind, {q}, values));
      }
      return;
    }
    if (args.size() != arity(kind)) {
      fail("gate " + head.text + " expects " + std::to_string(arity(kind)) +
               " operands",
           head);
    }
    std::vector<Qubit> qubits;
    for (const auto& a : args) {
      if (!a.index) fail("whole-register operand not allowed here", *a.where);
      qubits.push_back(*a.index);
    }
    Gate g = make_gate(kind, std::move(qubits), std::move(values));
    try {
      validate_gate(g, qreg_size_);
    } catch (const InvalidCircuitError& e) {
      fail(e.what(), head);
    }
    gates_.push_back(std::move(g));
  }

  std::pair<GateKind, std::vector<double>> resolve(const Token& head,
                                                   std::vector<double> p) {
    const std::string& n = head.text;
    GateKind kind;
    if (n == "u") {
      kind = GateKind::U3;
    } else if (n == "u1" || n == "p") {
      kind = GateKind::RZ;
    } else if (n == "u2") {
      if (p.size() != 2) fail("u2 expects 2 parameters", head);
      p.insert(p.begin(), std::numbers::pi / 2);
      kind = GateKind::U3;
    } else if (auto k = gate_kind_from_name(n)) {
      kind = *k;
    } else {
      throw UnsupportedGateError(n);
    }
    if (p.size() != param_count(kind)) {
      fail("gate " + n + " expects " + std::to_string(param_count(kind)) +
               " parameters",
           head);
    }
    return {kind, std::move(p)};
  }

  Operand operand() {
    const Token& name = expect(Tok::Ident, "qubit operand");
    if (name.text != qreg_.value_or("")) {
      if (qreg_) fail("unknown register '" + name.text + "'", name);
      throw RegisterError("gate used before qreg declaration");
    }
    Operand op{name.text, std::nullopt, &name};
    if (accept_symbol("[")) {
      std::size_t i = expect_integer();
      if (i >= qreg_size_) fail("qubit index out of range", name);
      op.index = static_cast<Qubit>(i);
      expect_symbol("]");
    }
    return op;
  }

  // expression := term (('+'|'-') term)*
  double expression() {
    double v = term();
    for (;;) {
      if (accept_symbol("+")) {
        v += term();
      } else if (accept_symbol("-")) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  double term() {
    double v = unary();
    for (;;) {
      if (accept_symbol("*")) {
        v *= unary();
      } else if (accept_symbol("/")) {
        v /= unary();
      } else {
        return v;
      }
    }
  }

  double unary() {
    if (accept_symbol("-")) return -unary();
    if (accept_symbol("+")) return unary();
    double base = primary();
    if (accept_symbol("^")) return std::pow(base, unary());
    return base;
  }

  double primary() {
    const Token& t = peek();
    if (t.type == Tok::Number) {
      ++pos_;
      return std::strtod(t.text.c_str(), nullptr);
    }
    if (accept_symbol("(")) {
      double v = expression();
      expect_symbol(")");
      return v;
    }
    if (t.type == Tok::Ident) {
      ++pos_;
      if (t.text == "pi") return std::numbers::pi;
      using Fn = double (*)(double);
      Fn fn = nullptr;
      if (t.text == "sin") fn = [](double x) { return std::sin(x); };
      if (t.text == "cos") fn = [](double x) { return std::cos(x); };
      if (t.text == "tan") fn = [](double x) { return std::tan(x); };
      if (t.text == "exp") fn = [](double x) { return std::exp(x); };
      if (t.text == "ln") fn = [](double x) { return std::log(x); };
      if (t.text == "sqrt") fn = [](double x) { return std::sqrt(x); };
      if (!fn) fail("unknown identifier '" + t.text + "' in expression", t);
      expect_symbol("(");
      double v = expression();
      expect_symbol(")");
      return fn(v);
    }
    fail("expected expression but found '" + t.text + "'", t);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::string id_;
  std::optional<std::string> qreg_;
  std::optional<std::string> creg_;
  std::size_t qreg_size_ = 0;
  std::vector<Gate> gates_;
};

}  // namespace

Circuit parse_qasm(std::string_view text, std::string id) {
  Parser parser(Lexer(text).run(), std::move(id));
  return parser.run();
}

std::string emit_qasm(const Circuit& circuit) {
  if (circuit.has_markers()) {
    throw MarkerPresentError("cannot emit QASM for a circuit with telegate markers");
  }
  std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  out += "qreg q[" + std::to_string(circuit.width()) + "];\n";
  char buf[40];
  for (const auto& g : circuit.gates()) {
    out += gate_name(g.kind);
    if (!g.params.empty()) {
      out += '(';
      for (std::size_t i = 0; i < g.params.size(); ++i) {
        if (i) out += ',';
        std::snprintf(buf, sizeof buf, "%.17g", g.params[i]);
        out += buf;
      }
      out += ')';
    }
    for (std::size_t i = 0; i < g.qubits.size(); ++i) {
      out += i ? "," : " ";
      out += "q[" + std::to_string(g.qubits[i]) + "]";
    }
    out += ";\n";
  }
  return out;
}

Circuit read_qasm_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw QdistError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_qasm(ss.str(), path.stem().string());
}

void write_qasm_file(const Circuit& circuit, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw QdistError("cannot write " + path.string());
  out << emit_qasm(circuit);
  if (!out) throw QdistError("failed writing " + path.string());
}

}  // namespace qdist
