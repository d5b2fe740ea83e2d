#include "lexer.hpp"

#include <cctype>
#include <string>

namespace qutest::qasm::detail {

namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

LexResult tokenize(std::string_view src) {
  LexResult out;
  int line = 1;
  std::size_t i = 0;
  const std::size_t n = src.size();

  auto push = [&](TokenKind kind, std::string text, double value = 0.0) {
    out.tokens.push_back(Token{kind, std::move(text), line, value});
  };

  while (i < n) {
    const char c = src[i];
    if (c == '\n') {
      ++line;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && src[i + 1] == '/') {
      std::size_t end = src.find('\n', i);
      if (end == std::string_view::npos) end = n;
      std::string_view comment = src.substr(i, end - i);
      if (!comment.empty() && comment.back() == '\r') comment.remove_suffix(1);
      if (comment.size() >= 3 && comment[2] == '%') {
        out.pragmas.push_back(PragmaLine{line, std::string(comment)});
      }
      i = end;
      continue;
    }
    if (c == '/' && i + 1 < n && src[i + 1] == '*') {
      const int start_line = line;
      std::size_t j = i + 2;
      while (j + 1 < n && !(src[j] == '*' && src[j + 1] == '/')) {
        if (src[j] == '\n') ++line;
        ++j;
      }
      if (j + 1 >= n) {
        out.diagnostics.push_back(make_error(codes::SyntaxError, start_line,
                                             "unterminated block comment",
                                             "close the comment with */"));
        i = n;
      } else {
        i = j + 2;
      }
      continue;
    }
    // U+03C0 GREEK SMALL LETTER PI
    if (static_cast<unsigned char>(c) == 0xCF && i + 1 < n &&
        static_cast<unsigned char>(src[i + 1]) == 0x80) {
      push(TokenKind::Identifier, "pi");
      i += 2;
      continue;
    }
    if (is_ident_start(c)) {
      std::size_t j = i;
      while (j < n && is_ident_char(src[j])) ++j;
      push(TokenKind::Identifier, std::string(src.substr(i, j - i)));
      i = j;
      continue;
    }
    if (is_digit(c) || (c == '.' && i + 1 < n && is_digit(src[i + 1]))) {
      std::size_t j = i;
      bool real = false;
      std::string digits;
      auto take_digits = [&] {
        while (j < n && (is_digit(src[j]) || src[j] == '_')) {
          if (src[j] != '_') digits.push_back(src[j]);
          ++j;
        }
      };
      take_digits();
      if (j < n && src[j] == '.') {
        real = true;
        digits.push_back('.');
        ++j;
        take_digits();
      }
      if (j < n && (src[j] == 'e' || src[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < n && (src[k] == '+' || src[k] == '-')) ++k;
        if (k < n && is_digit(src[k])) {
          real = true;
          digits.append(src.substr(j, k - j));
          j = k;
          take_digits();
        }
      }
      std::string text(src.substr(i, j - i));
      push(real ? TokenKind::Real : TokenKind::Integer, text, std::stod(digits));
      i = j;
      continue;
    }
    if (c == '"') {
      std::size_t j = i + 1;
      while (j < n && src[j] != '"' && src[j] != '\n') ++j;
      if (j >= n || src[j] != '"') {
        out.diagnostics.push_back(make_error(codes::SyntaxError, line,
                                             "unterminated string literal",
                                             "close the string with a double quote"));
        i = j;
        continue;
      }
      push(TokenKind::String, std::string(src.substr(i + 1, j - i - 1)));
      i = j + 1;
      continue;
    }
    if (c == '-' && i + 1 < n && src[i + 1] == '>') {
      push(TokenKind::Punct, "->");
      i += 2;
      continue;
    }
    static constexpr std::string_view kPunct = "[](){};,=-+*/@:<>!.";
    if (kPunct.find(c) != std::string_view::npos) {
      push(TokenKind::Punct, std::string(1, c));
      ++i;
      continue;
    }
    std::string shown(1, c);
    if (static_cast<unsigned char>(c) >= 0x80) shown = "non-ASCII byte";
    out.diagnostics.push_back(make_error(codes::SyntaxError, line,
                                         "unexpected character '" + shown + "'",
                                         "remove the character"));
    ++i;
    while (i < n && (static_cast<unsigned char>(src[i]) & 0xC0) == 0x80) ++i;
  }
  out.tokens.push_back(Token{TokenKind::End, "", line, 0.0});
  return out;
}

}  // namespace qutest::qasm::detail
