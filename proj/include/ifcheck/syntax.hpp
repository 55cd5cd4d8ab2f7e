#pragma once

// Lexer, AST and recovering parser for the generic-interface language:
//
//   unit      := 'package' name ('.' name)* ';' interface*
//   interface := 'interface' name typeParams? ('extends' type (',' type)*)?
//                '{' method* '}'
//   typeParams:= '<' name (',' name)* '>'
//   type      := name ('<' type (',' type)* '>')?
//   method    := type name '(' (type name (',' type name)*)? ')'
//                ('throws' name (',' name)*)? ';'
//
// Only `//` comments exist. Parse errors never abort; see parser.cpp for the
// recovery rules.

#include <string>
#include <string_view>
#include <vector>

#include "ifcheck/diagnostic.hpp"

namespace ifcheck {

enum class TokenKind {
  KwPackage,
  KwInterface,
  KwExtends,
  KwThrows,
  Identifier,
  Less,
  Greater,
  Comma,
  Semicolon,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Dot,
  EndOfInput,
};

std::string_view token_kind_name(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::EndOfInput;
  std::string lexeme;
  SourcePos pos;

  /// Position one past the lexeme's last byte.
  SourcePos end() const {
    return {pos.line, pos.column + static_cast<int>(lexeme.size())};
  }
  bool is(TokenKind k) const { return kind == k; }
};

struct LexResult {
  std::vector<Token> tokens;  // always terminated by EndOfInput
  std::vector<Diagnostic> diagnostics;
};

LexResult tokenize(std::string_view source, std::string_view sourceName);

/// A named type applied to zero or more arguments. Equality is structural and
/// ignores positions.
struct TypeRef {
  std::string name;
  std::vector<TypeRef> args;
  SourcePos pos;

  TypeRef() = default;
  explicit TypeRef(std::string n, std::vector<TypeRef> a = {}, SourcePos p = {})
      : name(std::move(n)), args(std::move(a)), pos(p) {}

  friend bool operator==(const TypeRef& a, const TypeRef& b) {
    return a.name == b.name && a.args == b.args;
  }
  friend bool operator<(const TypeRef& a, const TypeRef& b) {
    if (a.name != b.name) return a.name < b.name;
    return a.args < b.args;
  }
};

struct Param {
  TypeRef type;
  std::string name;

  friend bool operator==(const Param&, const Param&) = default;
};

struct MethodSig {
  std::string name;
  TypeRef returnType;
  std::vector<Param> params;
  std::vector<std::string> throwsList;
  SourcePos pos;

  friend bool operator==(const MethodSig& a, const MethodSig& b) {
    return a.name == b.name && a.returnType == b.returnType && a.params == b.params &&
           a.throwsList == b.throwsList;
  }
};

struct InterfaceDecl {
  std::string name;
  std::vector<std::string> typeParams;
  std::vector<TypeRef> superRefs;
  std::vector<MethodSig> methods;
  SourcePos pos;  // the `interface` keyword

  friend bool operator==(const InterfaceDecl& a, const InterfaceDecl& b) {
    return a.name == b.name && a.typeParams == b.typeParams && a.superRefs == b.superRefs &&
           a.methods == b.methods;
  }
};

struct CompilationUnit {
  std::string packageName;
  std::vector<InterfaceDecl> decls;
  std::string sourceName;
  std::vector<std::string> rawLines;
};

struct ParseResult {
  CompilationUnit unit;
  std::vector<Diagnostic> diagnostics;

  bool has_errors() const;
};

ParseResult parse_unit(std::span<const Token> tokens, std::vector<std::string> rawLines,
                       std::string sourceName);

/// Lexes and parses in one step; lexer and parser diagnostics are merged in
/// source order.
ParseResult parse_source(std::string_view source, std::string sourceName);

/// Renders a type as written, e.g. `AdditiveGroup<Vector>`. Qualified
/// parameter names (`Owner#P`) print as `P`.
std::string to_string(const TypeRef& t);

/// Pretty-prints a unit in canonical layout; re-parsing the output yields a
/// structurally identical AST.
std::string print_unit(const CompilationUnit& unit);

bool same_structure(const CompilationUnit& a, const CompilationUnit& b);

}  // namespace ifcheck
