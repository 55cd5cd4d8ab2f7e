#include <cctype>

#include "ifcheck/syntax.hpp"

namespace ifcheck {

std::string_view token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::KwPackage: return "package";
    case TokenKind::KwInterface: return "interface";
    case TokenKind::KwExtends: return "extends";
    case TokenKind::KwThrows: return "throws";
    case TokenKind::Identifier: return "<identifier>";
    case TokenKind::Less: return "<";
    case TokenKind::Greater: return ">";
    case TokenKind::Comma: return ",";
    case TokenKind::Semicolon: return ";";
    case TokenKind::LParen: return "(";
    case TokenKind::RParen: return ")";
    case TokenKind::LBrace: return "{";
    case TokenKind::RBrace: return "}";
    case TokenKind::Dot: return ".";
    case TokenKind::EndOfInput: return "<EOF>";
  }
  return "?";
}

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_part(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

TokenKind keyword_or_identifier(std::string_view word) {
  if (word == "package") return TokenKind::KwPackage;
  if (word == "interface") return TokenKind::KwInterface;
  if (word == "extends") return TokenKind::KwExtends;
  if (word == "throws") return TokenKind::KwThrows;
  return TokenKind::Identifier;
}

bool punct_kind(char c, TokenKind& kind) {
  switch (c) {
    case '<': kind = TokenKind::Less; return true;
    case '>': kind = TokenKind::Greater; return true;
    case ',': kind = TokenKind::Comma; return true;
    case ';': kind = TokenKind::Semicolon; return true;
    case '(': kind = TokenKind::LParen; return true;
    case ')': kind = TokenKind::RParen; return true;
    case '{': kind = TokenKind::LBrace; return true;
    case '}': kind = TokenKind::RBrace; return true;
    case '.': kind = TokenKind::Dot; return true;
    default: return false;
  }
}

}  // namespace

LexResult tokenize(std::string_view source, std::string_view sourceName) {
  LexResult result;
  std::vector<std::string> rawLines;  // built lazily, only for diagnostics
  int line = 1;
  int column = 1;
  std::size_t i = 0;

  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (source[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };

  while (i < source.size()) {
    const char c = source[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f') {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < source.size() && source[i + 1] == '/') {
      while (i < source.size() && source[i] != '\n') advance(1);
      continue;
    }
    const SourcePos pos{line, column};
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < source.size() && ident_part(source[j])) ++j;
      std::string word(source.substr(i, j - i));
      result.tokens.push_back({keyword_or_identifier(word), std::move(word), pos});
      advance(j - i);
      continue;
    }
    TokenKind kind;
    if (punct_kind(c, kind)) {
      result.tokens.push_back({kind, std::string(1, c), pos});
      advance(1);
      continue;
    }
    if (rawLines.empty()) rawLines = split_lines(source);
    result.diagnostics.push_back(make_diagnostic(Severity::Error, std::string(sourceName),
                                                 rawLines, pos, "illegal character"));
    // Skip a whole UTF-8 sequence so the caret stays on its lead byte.
    std::size_t len = 1;
    const auto lead = static_cast<unsigned char>(c);
    if (lead >= 0xF0) len = 4;
    else if (lead >= 0xE0) len = 3;
    else if (lead >= 0xC0) len = 2;
    advance(std::min(len, source.size() - i));
  }
  result.tokens.push_back({TokenKind::EndOfInput, "", {line, column}});
  return result;
}

}  // namespace ifcheck
