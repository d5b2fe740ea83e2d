#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qutest/diagnostic.hpp"
#include "qutest/qasm/ast.hpp"

namespace qutest::qasm::detail {

enum class TokenKind { Identifier, Integer, Real, String, Punct, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  int line = 1;
  double value = 0.0;  // numeric literals only

  bool is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
  bool is_punct(std::string_view t) const { return is(TokenKind::Punct, t); }
  bool is_ident(std::string_view t) const { return is(TokenKind::Identifier, t); }
  bool kind_is_end() const { return kind == TokenKind::End; }
};

struct LexResult {
  std::vector<Token> tokens;  // always terminated by an End token
  std::vector<PragmaLine> pragmas;
  std::vector<Diagnostic> diagnostics;
};

LexResult tokenize(std::string_view source);

}  // namespace qutest::qasm::detail
