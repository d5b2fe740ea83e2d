#include "qutest/qasm/parser.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "lexer.hpp"
#include "qutest/sim/gates.hpp"

namespace qutest::qasm {

namespace {

using detail::Token;
using detail::TokenKind;

constexpr const char* kSubsetHint = "construct not in supported subset";

// Keywords of the full language that this subset rejects with QT010.
const std::set<std::string, std::less<>> kUnsupportedKeywords = {
    "gate",   "for",     "while",    "if",      "else",     "reset",  "barrier",
    "qreg",   "creg",    "int",      "uint",    "float",    "angle",  "bool",
    "const",  "input",   "output",   "let",     "return",   "ctrl",   "negctrl",
    "inv",    "pow",     "box",      "delay",   "defcal",   "cal",    "defcalgrammar",
    "extern", "switch",  "case",     "default", "break",    "continue", "end",
    "duration", "stretch", "complex", "array",  "gphase",   "opaque", "pragma",
    "readonly", "mutable", "sizeof",  "durationof",
};

struct ScopeEntry {
  RegisterKind kind;
  int width;
};

class Scope {
 public:
  bool declare(const std::string& name, RegisterKind kind, int width) {
    return entries_.emplace(name, ScopeEntry{kind, width}).second;
  }
  const ScopeEntry* find(const std::string& name) const {
    auto it = entries_.find(name);
    return it == entries_.end() ? nullptr : &it->second;
  }

 private:
  std::map<std::string, ScopeEntry> entries_;
};

// Thrown inside a statement to abandon it; the driver resynchronizes.
struct StatementAbort {};

class Parser {
 public:
  Parser(std::string_view source, std::filesystem::path path) {
    auto lexed = detail::tokenize(source);
    tokens_ = std::move(lexed.tokens);
    pragmas_ = std::move(lexed.pragmas);
    diags_ = std::move(lexed.diagnostics);
    program_.source_path = std::move(path);
  }

  RecoveredParse run() {
    parse_header();
    while (!peek().kind_is_end()) {
      parse_top_level();
    }
    attach_pragmas();
    std::stable_sort(diags_.begin(), diags_.end(),
                     [](const Diagnostic& a, const Diagnostic& b) { return a.line < b.line; });
    return RecoveredParse{std::move(program_), std::move(diags_)};
  }

 private:
  // --- token cursor -------------------------------------------------------

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& advance() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool accept_punct(std::string_view p) {
    if (peek().is_punct(p)) {
      advance();
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(std::string_view code, int line, std::string message,
                         std::string hint = {}) {
    diags_.push_back(make_error(code, line, std::move(message), std::move(hint)));
    throw StatementAbort{};
  }

  [[noreturn]] void unexpected(const Token& t, std::string_view expected) {
    std::string got = t.kind == TokenKind::End ? "end of file" : "'" + t.text + "'";
    fail(codes::SyntaxError, t.line, "expected " + std::string(expected) + ", found " + got,
         "check the statement syntax");
  }

  void expect_punct(std::string_view p) {
    if (!accept_punct(p)) unexpected(peek(), "'" + std::string(p) + "'");
  }

  std::string expect_identifier(std::string_view what) {
    if (peek().kind != TokenKind::Identifier) unexpected(peek(), what);
    return advance().text;
  }

  int expect_size(std::string_view what) {
    const Token& t = peek();
    if (t.kind == TokenKind::Integer) {
      advance();
      return static_cast<int>(t.value);
    }
    if (t.kind == TokenKind::Identifier || t.is_punct(":")) {
      fail(codes::UnsupportedConstruct, t.line,
           "only integer literal " + std::string(what) + " are supported", kSubsetHint);
    }
    unexpected(t, what);
  }

  // Skips to the end of the current statement. A `}` that closes an enclosing
  // block is left in place.
  void synchronize() {
    int depth = 0;
    while (!peek().kind_is_end()) {
      const Token& t = peek();
      if (t.is_punct("{")) {
        ++depth;
      } else if (t.is_punct("}")) {
        if (depth == 0) return;
        --depth;
        if (depth == 0) {
          advance();
          return;
        }
      } else if (t.is_punct(";") && depth == 0) {
        advance();
        return;
      }
      advance();
    }
  }

  // --- header / top level -------------------------------------------------

  void parse_header() {
    const Token& first = peek();
    if (!first.is_ident("OPENQASM")) {
      diags_.push_back(make_error(codes::MissingVersion, first.kind_is_end() ? 1 : first.line,
                                  "missing OPENQASM version header",
                                  "start the file with 'OPENQASM 3;'"));
      return;
    }
    try {
      advance();
      const Token& v = peek();
      if (v.kind != TokenKind::Integer && v.kind != TokenKind::Real) {
        unexpected(v, "version number");
      }
      advance();
      if (std::floor(v.value) != 3.0) {
        fail(codes::UnsupportedConstruct, v.line,
             "OPENQASM version " + v.text + " is not supported", "use 'OPENQASM 3;'");
      }
      program_.version = v.text;
      expect_punct(";");
    } catch (const StatementAbort&) {
      synchronize();
    }
  }

  void parse_top_level() {
    const Token& t = peek();
    try {
      if (t.is_ident("def")) {
        parse_def();
        return;
      }
      if (t.is_ident("include")) {
        advance();
        if (peek().kind != TokenKind::String) unexpected(peek(), "include file name");
        const Token& name = advance();
        if (name.text != "stdgates.inc") {
          fail(codes::UnsupportedConstruct, name.line,
               "include \"" + name.text + "\" is not supported",
               "only \"stdgates.inc\" can be included");
        }
        program_.includes.push_back(name.text);
        expect_punct(";");
        return;
      }
      if (t.is_ident("OPENQASM")) {
        fail(codes::SyntaxError, t.line, "version header must be the first statement",
             "move 'OPENQASM 3;' to the top of the file");
      }
      if (t.is_punct("}")) {
        advance();
        fail(codes::SyntaxError, t.line, "unbalanced '}'", "remove the extra brace");
      }
      parse_statement(top_scope_, program_.statements, /*in_def=*/false);
    } catch (const StatementAbort&) {
      synchronize();
      if (peek().is_punct("}")) advance();  // stray closer at top level
    }
  }

  void parse_def() {
    const Token& def_tok = advance();
    SubroutineDef def;
    def.start_line = def_tok.line;
    def.name = expect_identifier("subroutine name");
    if (program_.find_subroutine(def.name) != nullptr) {
      diags_.push_back(make_error(codes::SemanticError, def_tok.line,
                                  "subroutine '" + def.name + "' is already defined",
                                  "rename one of the definitions"));
    }
    Scope scope;
    expect_punct("(");
    if (!peek().is_punct(")")) {
      do {
        const Token& kind_tok = peek();
        if (!kind_tok.is_ident("qubit") && !kind_tok.is_ident("bit")) {
          if (kind_tok.kind == TokenKind::Identifier) {
            fail(codes::UnsupportedConstruct, kind_tok.line,
                 "parameter type '" + kind_tok.text + "' is not supported",
                 "parameters must be qubit or bit registers");
          }
          unexpected(kind_tok, "parameter type");
        }
        advance();
        Param param;
        param.kind = kind_tok.text == "qubit" ? RegisterKind::Qubit : RegisterKind::Bit;
        if (accept_punct("[")) {
          param.width = expect_size("register sizes");
          expect_punct("]");
        }
        param.name = expect_identifier("parameter name");
        if (param.width < 1) {
          fail(codes::SemanticError, kind_tok.line, "register width must be at least 1");
        }
        if (!scope.declare(param.name, param.kind, param.width)) {
          fail(codes::SemanticError, kind_tok.line,
               "duplicate parameter '" + param.name + "'");
        }
        def.params.push_back(param);
      } while (accept_punct(","));
    }
    expect_punct(")");
    if (peek().is_punct("->")) {
      fail(codes::UnsupportedConstruct, peek().line, "subroutine return values are not supported",
           kSubsetHint);
    }
    const Token& open = peek();
    expect_punct("{");
    int body_open_line = open.line;

    while (!peek().is_punct("}")) {
      if (peek().kind_is_end()) {
        diags_.push_back(make_error(codes::SyntaxError, body_open_line,
                                    "unbalanced braces: '{' is never closed",
                                    "add the missing '}'"));
        def.end_line = peek().line;
        program_.subroutines.push_back(std::move(def));
        return;
      }
      try {
        if (peek().is_ident("def")) {
          fail(codes::UnsupportedConstruct, peek().line, "nested subroutine definitions",
               kSubsetHint);
        }
        parse_statement(scope, def.body, /*in_def=*/true);
      } catch (const StatementAbort&) {
        synchronize();
      }
    }
    def.end_line = advance().line;
    program_.subroutines.push_back(std::move(def));
  }

  // --- statements -----------------------------------------------------------

  void parse_statement(Scope& scope, std::vector<Statement>& out, bool in_def) {
    const Token& t = peek();
    if (t.kind != TokenKind::Identifier) {
      if (t.is_punct("{")) {
        fail(codes::UnsupportedConstruct, t.line, "bare blocks are not supported", kSubsetHint);
      }
      unexpected(t, "statement");
    }
    if (kUnsupportedKeywords.count(t.text) != 0) {
      fail(codes::UnsupportedConstruct, t.line, "'" + t.text + "' is not supported",
           kSubsetHint);
    }
    if (t.text == "qubit" || t.text == "bit") {
      auto decl = parse_declaration();
      if (!scope.declare(decl.name, decl.kind, decl.width)) {
        fail(codes::SemanticError, decl.line, "register '" + decl.name + "' is already declared",
             "choose a different name");
      }
      if (in_def) {
        out.emplace_back(std::move(decl));
      } else {
        program_.declarations.push_back(std::move(decl));
      }
      return;
    }
    if (t.text == "measure") {
      advance();
      MeasureStmt m;
      m.line = t.line;
      m.qubits = parse_ref();
      if (!peek().is_punct("->")) {
        fail(codes::UnsupportedConstruct, t.line, "measurement without a target bit",
             "write 'm = measure q;' or 'measure q -> m;'");
      }
      advance();
      m.bits = parse_ref();
      expect_punct(";");
      check_measure(scope, m);
      out.emplace_back(std::move(m));
      return;
    }

    // `name =` or `name[i] =` is a measurement assignment.
    if (peek(1).is_punct("=") ||
        (peek(1).is_punct("[") && peek(3).is_punct("]") && peek(4).is_punct("="))) {
      MeasureStmt m;
      m.line = t.line;
      m.bits = parse_ref();
      expect_punct("=");
      if (!peek().is_ident("measure")) {
        fail(codes::UnsupportedConstruct, t.line, "classical assignment is not supported",
             kSubsetHint);
      }
      advance();
      m.qubits = parse_ref();
      expect_punct(";");
      check_measure(scope, m);
      out.emplace_back(std::move(m));
      return;
    }

    if (peek(1).is_punct("(") && looks_like_call()) {
      CallStmt call;
      call.line = t.line;
      call.callee = advance().text;
      expect_punct("(");
      if (!peek().is_punct(")")) {
        do {
          const Token& arg = peek();
          std::string name = expect_identifier("register argument");
          if (peek().is_punct("[")) {
            fail(codes::UnsupportedConstruct, arg.line,
                 "indexed or sliced call arguments are not supported",
                 "pass whole registers to subroutines");
          }
          const ScopeEntry* entry = scope.find(name);
          if (entry == nullptr) {
            fail(codes::SemanticError, arg.line, "undeclared register '" + name + "'",
                 "declare it with 'qubit[n] " + name + ";'");
          }
          call.args.push_back(std::move(name));
        } while (accept_punct(","));
      }
      expect_punct(")");
      expect_punct(";");
      out.emplace_back(std::move(call));
      return;
    }

    out.emplace_back(parse_gate(scope));
  }

  // `ident ( ident {, ident} ) ;` with nothing else.
  bool looks_like_call() const {
    std::size_t k = 2;
    if (peek(k).is_punct(")")) return peek(k + 1).is_punct(";");
    while (true) {
      if (peek(k).kind != TokenKind::Identifier || peek(k).text == "pi") return false;
      ++k;
      if (peek(k).is_punct("[")) {
        // `f(q[0])` is still call-shaped; rejected with a precise message later.
        while (!peek(k).is_punct("]") && !peek(k).kind_is_end()) ++k;
        ++k;
      }
      if (peek(k).is_punct(",")) {
        ++k;
        continue;
      }
      return peek(k).is_punct(")") && peek(k + 1).is_punct(";");
    }
  }

  RegisterDecl parse_declaration() {
    const Token& kw = advance();
    RegisterDecl decl;
    decl.line = kw.line;
    decl.kind = kw.text == "qubit" ? RegisterKind::Qubit : RegisterKind::Bit;
    if (accept_punct("[")) {
      decl.width = expect_size("register sizes");
      expect_punct("]");
    }
    decl.name = expect_identifier("register name");
    if (decl.width < 1) {
      fail(codes::SemanticError, kw.line, "register width must be at least 1",
           "declare at least one element");
    }
    if (peek().is_punct("=")) {
      fail(codes::UnsupportedConstruct, kw.line, "declaration initializers are not supported",
           kSubsetHint);
    }
    expect_punct(";");
    return decl;
  }

  RegisterRef parse_ref() {
    RegisterRef ref;
    ref.name = expect_identifier("register");
    if (accept_punct("[")) {
      ref.index = expect_size("indices");
      if (peek().is_punct(":") || peek().is_punct(",")) {
        fail(codes::UnsupportedConstruct, peek().line, "register slicing is not supported",
             kSubsetHint);
      }
      expect_punct("]");
    }
    return ref;
  }

  const ScopeEntry& resolve(const Scope& scope, const RegisterRef& ref, RegisterKind kind,
                            int line) {
    const ScopeEntry* entry = scope.find(ref.name);
    if (entry == nullptr) {
      fail(codes::SemanticError, line, "undeclared register '" + ref.name + "'",
           std::string("declare it with '") + to_string(kind) + "[n] " + ref.name + ";'");
    }
    if (entry->kind != kind) {
      fail(codes::SemanticError, line,
           "'" + ref.name + "' is a " + to_string(entry->kind) + " register, expected " +
               to_string(kind));
    }
    if (ref.index && (*ref.index < 0 || *ref.index >= entry->width)) {
      fail(codes::SemanticError, line,
           "index " + std::to_string(*ref.index) + " out of range for '" + ref.name + "[" +
               std::to_string(entry->width) + "]'");
    }
    return *entry;
  }

  void check_measure(const Scope& scope, const MeasureStmt& m) {
    const auto& q = resolve(scope, m.qubits, RegisterKind::Qubit, m.line);
    const auto& b = resolve(scope, m.bits, RegisterKind::Bit, m.line);
    if (m.qubits.index.has_value() != m.bits.index.has_value()) {
      fail(codes::SemanticError, m.line,
           "measurement mixes a whole register with a single element",
           "index both sides or neither");
    }
    if (!m.qubits.index && q.width != b.width) {
      fail(codes::SemanticError, m.line,
           "measurement width mismatch: " + std::to_string(q.width) + " qubits into " +
               std::to_string(b.width) + " bits");
    }
  }

  GateApplication parse_gate(const Scope& scope) {
    GateApplication g;
    const Token& name_tok = advance();
    g.gate = name_tok.text;
    g.line = name_tok.line;
    if (accept_punct("(")) {
      if (!peek().is_punct(")")) {
        do {
          g.angles.push_back(parse_angle_term());
        } while (accept_punct(","));
      }
      expect_punct(")");
    }
    if (peek().is_punct("@")) {
      fail(codes::UnsupportedConstruct, peek().line, "gate modifiers are not supported",
           kSubsetHint);
    }
    do {
      g.targets.push_back(parse_ref());
    } while (accept_punct(","));
    if (!peek().is_punct(";")) unexpected(peek(), "';'");
    advance();

    std::optional<int> broadcast;
    std::set<std::pair<std::string, int>> seen;
    for (const auto& ref : g.targets) {
      const auto& entry = resolve(scope, ref, RegisterKind::Qubit, g.line);
      if (!ref.index) {
        if (broadcast && *broadcast != entry.width) {
          fail(codes::SemanticError, g.line, "broadcast over registers of different widths");
        }
        broadcast = entry.width;
      } else if (!seen.emplace(ref.name, *ref.index).second) {
        fail(codes::SemanticError, g.line, "gate '" + g.gate + "' repeats qubit " +
                                               to_string(ref),
             "each operand must be a distinct qubit");
      }
    }
    if (const auto* spec = sim::find_gate(g.gate)) {
      if (static_cast<int>(g.targets.size()) != spec->qubits) {
        fail(codes::SemanticError, g.line,
             "gate '" + g.gate + "' takes " + std::to_string(spec->qubits) + " qubit(s), got " +
                 std::to_string(g.targets.size()));
      }
      if (static_cast<int>(g.angles.size()) != spec->angles) {
        fail(codes::SemanticError, g.line,
             "gate '" + g.gate + "' takes " + std::to_string(spec->angles) +
                 " angle argument(s), got " + std::to_string(g.angles.size()));
      }
    }
    return g;
  }

  // term := unary (('*' | '/') unary)*
  double parse_angle_term() {
    double value = parse_angle_unary();
    while (peek().is_punct("*") || peek().is_punct("/")) {
      const bool mul = advance().text == "*";
      const Token& rhs_tok = peek();
      double rhs = parse_angle_unary();
      if (!mul && rhs == 0.0) fail(codes::SemanticError, rhs_tok.line, "division by zero");
      value = mul ? value * rhs : value / rhs;
    }
    if (peek().is_punct("+") || (peek().is_punct("-"))) {
      fail(codes::UnsupportedConstruct, peek().line,
           "angle expressions support only unary minus, '*' and '/'",
           "fold the constant, e.g. 3*pi/4");
    }
    return value;
  }

  double parse_angle_unary() {
    if (accept_punct("-")) return -parse_angle_unary();
    const Token& t = peek();
    if (t.kind == TokenKind::Integer || t.kind == TokenKind::Real) {
      advance();
      return t.value;
    }
    if (t.is_ident("pi")) {
      advance();
      return std::numbers::pi;
    }
    if (t.is_punct("(")) {
      advance();
      double v = parse_angle_term();
      expect_punct(")");
      return v;
    }
    if (t.kind == TokenKind::Identifier) {
      fail(codes::UnsupportedConstruct, t.line,
           "classical identifier '" + t.text + "' in angle expression", kSubsetHint);
    }
    unexpected(t, "angle expression");
  }

  void attach_pragmas() {
    for (auto& p : pragmas_) {
      auto it = std::find_if(program_.subroutines.begin(), program_.subroutines.end(),
                             [&](const SubroutineDef& d) {
                               return p.line >= d.start_line && p.line <= d.end_line;
                             });
      if (it != program_.subroutines.end()) {
        it->pragma_lines.push_back(std::move(p));
      } else {
        program_.top_level_pragmas.push_back(std::move(p));
      }
    }
  }

  std::vector<Token> tokens_;
  std::vector<PragmaLine> pragmas_;
  std::vector<Diagnostic> diags_;
  std::size_t pos_ = 0;
  Program program_;
  Scope top_scope_;
};

}  // namespace

RecoveredParse parse_program_recovering(std::string_view source,
                                        const std::filesystem::path& path) {
  return Parser(source, path).run();
}

ParseResult parse_program(std::string_view source, const std::filesystem::path& path) {
  auto recovered = parse_program_recovering(source, path);
  ParseResult result;
  if (!has_errors(recovered.diagnostics)) result.program = std::move(recovered.program);
  result.diagnostics = std::move(recovered.diagnostics);
  return result;
}

std::vector<const SubroutineDef*> list_tests(const Program& program) {
  std::vector<const SubroutineDef*> tests;
  for (const auto& def : program.subroutines) {
    if (def.is_test()) tests.push_back(&def);
  }
  return tests;
}

}  // namespace qutest::qasm
