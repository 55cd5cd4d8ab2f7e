// Recursive-descent parser with panic-mode recovery.
//
// Recovery model. When an interface header cannot be completed (bad type
// parameter list, bad extends clause, missing `{`), the header is abandoned and
// the remaining tokens are scanned as if they were member declarations with no
// enclosing header:
//
//   token seen                                     message
//   ---------------------------------------------  -------------------------
//   second `<` inside a type-parameter list        > expected
//   non-identifier where a name is required        <identifier> expected
//   run of dangling `>` / `,`, no `;` after it     ';' expected (after run)
//   `{` where a member name is required            illegal start of type
//   `Ident <` opening a member in a body that      '(' expected
//     was entered without a header
//
// The scan stops at `}` (which closes the abandoned declaration), at a
// headerless `{` (whose body is parsed, then closes the declaration), at the
// next `interface`, or at end of input. Two errors are never reported at the
// same position.

#include <algorithm>
#include <optional>

#include "ifcheck/syntax.hpp"

namespace ifcheck {

namespace {

constexpr const char* kIdentifierExpected = "<identifier> expected";
constexpr const char* kIllegalStartOfType = "illegal start of type";
constexpr const char* kEndOfFile = "reached end of file while parsing";

class Parser {
 public:
  Parser(std::span<const Token> tokens, const std::vector<std::string>& rawLines,
         const std::string& sourceName)
      : tokens_(tokens), rawLines_(rawLines), sourceName_(sourceName) {}

  CompilationUnit parse(std::vector<Diagnostic>& diagnostics) {
    CompilationUnit unit;
    unit.sourceName = sourceName_;
    unit.rawLines = rawLines_;
    parse_package(unit);
    while (!at(TokenKind::EndOfInput)) {
      if (at(TokenKind::KwInterface)) {
        unit.decls.push_back(parse_interface());
        continue;
      }
      error_here("class, interface, or enum expected");
      while (!at(TokenKind::EndOfInput) && !at(TokenKind::KwInterface)) advance();
    }
    diagnostics = std::move(diagnostics_);
    return unit;
  }

 private:
  // -- token access -------------------------------------------------------

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(index_ + ahead, tokens_.size() - 1)];
  }
  bool at(TokenKind kind) const { return peek().is(kind); }
  bool at_any(std::initializer_list<TokenKind> kinds) const {
    return std::any_of(kinds.begin(), kinds.end(), [&](TokenKind k) { return at(k); });
  }
  const Token& advance() {
    const Token& t = peek();
    if (index_ < tokens_.size() - 1) ++index_;
    previous_ = &t;
    return t;
  }

  // -- diagnostics --------------------------------------------------------

  void error_at(SourcePos pos, std::string message) {
    if (lastErrorPos_ && *lastErrorPos_ == pos) return;
    lastErrorPos_ = pos;
    diagnostics_.push_back(
        make_diagnostic(Severity::Error, sourceName_, rawLines_, pos, std::move(message)));
  }
  void error_here(std::string message) { error_at(peek().pos, std::move(message)); }
  // javac reports a missing terminator just past the previous token.
  void error_after_previous(std::string message) {
    error_at(previous_ ? previous_->end() : peek().pos, std::move(message));
  }

  // -- productions --------------------------------------------------------

  void parse_package(CompilationUnit& unit) {
    if (!at(TokenKind::KwPackage)) {
      error_here("'package' expected");
      return;
    }
    advance();
    if (!at(TokenKind::Identifier)) {
      error_here(kIdentifierExpected);
      skip_to_statement_end();
      return;
    }
    unit.packageName = advance().lexeme;
    while (at(TokenKind::Dot)) {
      advance();
      if (!at(TokenKind::Identifier)) {
        error_here(kIdentifierExpected);
        skip_to_statement_end();
        return;
      }
      unit.packageName += "." + advance().lexeme;
    }
    if (at(TokenKind::Semicolon)) {
      advance();
    } else {
      error_after_previous("';' expected");
    }
  }

  InterfaceDecl parse_interface() {
    InterfaceDecl decl;
    decl.pos = advance().pos;
    if (!at(TokenKind::Identifier)) {
      error_here(kIdentifierExpected);
      headerless_scope(decl);
      return decl;
    }
    decl.name = advance().lexeme;

    if (at(TokenKind::Less)) {
      advance();
      for (;;) {
        if (!at(TokenKind::Identifier)) {
          error_here(kIdentifierExpected);
          headerless_scope(decl);
          return decl;
        }
        decl.typeParams.push_back(advance().lexeme);
        if (at(TokenKind::Comma)) {
          advance();
          continue;
        }
        if (at(TokenKind::Greater)) {
          advance();
          break;
        }
        error_here("> expected");
        // A nested `<` opens an argument list; the scan resumes inside it.
        if (at(TokenKind::Less)) advance();
        headerless_scope(decl);
        return decl;
      }
    }

    if (at(TokenKind::KwExtends)) {
      advance();
      for (;;) {
        auto super = parse_type();
        if (!super) {
          headerless_scope(decl);
          return decl;
        }
        decl.superRefs.push_back(std::move(*super));
        if (!at(TokenKind::Comma)) break;
        advance();
      }
    }

    if (!at(TokenKind::LBrace)) {
      error_here("'{' expected");
      headerless_scope(decl);
      return decl;
    }
    advance();
    parse_body(decl, /*headerless=*/false);
    return decl;
  }

  std::optional<TypeRef> parse_type() {
    if (!at(TokenKind::Identifier)) {
      error_here(kIdentifierExpected);
      return std::nullopt;
    }
    const Token& name = advance();
    TypeRef type(name.lexeme, {}, name.pos);
    if (!at(TokenKind::Less)) return type;
    advance();
    for (;;) {
      auto arg = parse_type();
      if (!arg) return std::nullopt;
      type.args.push_back(std::move(*arg));
      if (at(TokenKind::Comma)) {
        advance();
        continue;
      }
      if (at(TokenKind::Greater)) {
        advance();
        return type;
      }
      error_here("> expected");
      return std::nullopt;
    }
  }

  // Body of an interface, after `{`. In a body entered without a header a
  // member may not open with an applied type: the parser expects a method
  // declarator there.
  void parse_body(InterfaceDecl& decl, bool headerless) {
    for (;;) {
      if (at(TokenKind::EndOfInput)) {
        error_here(kEndOfFile);
        return;
      }
      if (at(TokenKind::RBrace)) {
        advance();
        return;
      }
      if (at(TokenKind::Semicolon)) {
        advance();
        continue;
      }
      if (at(TokenKind::Identifier)) {
        if (headerless && peek(1).is(TokenKind::Less)) {
          error_here("'(' expected");
          advance();
          skip_type_arguments();
          continue;
        }
        auto type = parse_type();
        if (!type) {
          resync_member();
          continue;
        }
        if (!at(TokenKind::Identifier)) {
          error_here(kIdentifierExpected);
          resync_member();
          continue;
        }
        parse_member_rest(decl, std::move(*type));
        continue;
      }
      error_here(kIllegalStartOfType);
      advance();
    }
  }

  // Everything after the member's return type; positioned at the name.
  void parse_member_rest(InterfaceDecl& decl, TypeRef returnType) {
    MethodSig method;
    method.pos = returnType.pos;
    method.returnType = std::move(returnType);
    method.name = advance().lexeme;
    if (!at(TokenKind::LParen)) {
      error_here("'(' expected");
      resync_member();
      return;
    }
    advance();
    if (!at(TokenKind::RParen)) {
      for (;;) {
        auto type = parse_type();
        if (!type) {
          resync_member();
          return;
        }
        if (!at(TokenKind::Identifier)) {
          error_here(kIdentifierExpected);
          resync_member();
          return;
        }
        method.params.push_back({std::move(*type), advance().lexeme});
        if (at(TokenKind::Comma)) {
          advance();
          continue;
        }
        if (at(TokenKind::RParen)) break;
        error_here("')' expected");
        resync_member();
        return;
      }
    }
    advance();
    if (at(TokenKind::KwThrows)) {
      advance();
      for (;;) {
        if (!at(TokenKind::Identifier)) {
          error_here(kIdentifierExpected);
          resync_member();
          return;
        }
        method.throwsList.push_back(advance().lexeme);
        if (!at(TokenKind::Comma)) break;
        advance();
      }
    }
    if (!at(TokenKind::Semicolon)) {
      error_after_previous("';' expected");
      resync_member();
      return;
    }
    advance();
    decl.methods.push_back(std::move(method));
  }

  // Declaration scope after an abandoned header.
  void headerless_scope(InterfaceDecl& decl) {
    for (;;) {
      switch (peek().kind) {
        case TokenKind::EndOfInput:
          error_here(kEndOfFile);
          return;
        case TokenKind::KwInterface:
          return;
        case TokenKind::RBrace:
          advance();
          return;
        case TokenKind::Semicolon:
          advance();
          break;
        case TokenKind::LBrace:
          error_here(kIllegalStartOfType);
          advance();
          parse_body(decl, /*headerless=*/true);
          return;
        case TokenKind::Greater:
        case TokenKind::Comma:
          absorb_dangling();
          break;
        case TokenKind::KwExtends:
          // The supertypes that follow are scanned like any other member.
          advance();
          break;
        case TokenKind::Identifier:
          if (headerless_member(decl)) return;
          break;
        default:
          error_here(kIllegalStartOfType);
          advance();
          break;
      }
    }
  }

  // Returns true when the member opened a body, which ends the declaration.
  bool headerless_member(InterfaceDecl& decl) {
    auto type = parse_type();
    if (!type) return false;
    if (at(TokenKind::Identifier)) {
      parse_member_rest(decl, std::move(*type));
      return false;
    }
    if (at(TokenKind::LBrace)) {
      error_here(kIllegalStartOfType);
      advance();
      parse_body(decl, /*headerless=*/true);
      return true;
    }
    error_here(kIdentifierExpected);
    if (at_any({TokenKind::Greater, TokenKind::Comma})) {
      absorb_dangling();
    } else {
      resync_member();
    }
    return false;
  }

  void absorb_dangling() {
    while (at_any({TokenKind::Greater, TokenKind::Comma})) advance();
    if (at(TokenKind::Semicolon)) {
      advance();
    } else {
      error_after_previous("';' expected");
    }
  }

  void skip_type_arguments() {
    if (!at(TokenKind::Less)) return;
    int depth = 0;
    while (!at_any({TokenKind::Semicolon, TokenKind::LBrace, TokenKind::RBrace,
                    TokenKind::EndOfInput})) {
      if (at(TokenKind::Less)) ++depth;
      if (at(TokenKind::Greater)) --depth;
      advance();
      if (depth == 0) return;
    }
  }

  // Skips to the end of the current member: consumes a `;`, stops before
  // `{`, `}` or end of input.
  void resync_member() {
    while (!at_any({TokenKind::Semicolon, TokenKind::LBrace, TokenKind::RBrace,
                    TokenKind::EndOfInput})) {
      advance();
    }
    if (at(TokenKind::Semicolon)) advance();
  }

  void skip_to_statement_end() {
    while (!at_any({TokenKind::Semicolon, TokenKind::KwInterface, TokenKind::EndOfInput})) {
      advance();
    }
    if (at(TokenKind::Semicolon)) advance();
  }

  std::span<const Token> tokens_;
  const std::vector<std::string>& rawLines_;
  const std::string& sourceName_;
  std::size_t index_ = 0;
  const Token* previous_ = nullptr;
  std::optional<SourcePos> lastErrorPos_;
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace

bool ParseResult::has_errors() const {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

ParseResult parse_unit(std::span<const Token> tokens, std::vector<std::string> rawLines,
                       std::string sourceName) {
  static const Token kEnd{TokenKind::EndOfInput, "", {1, 1}};
  if (tokens.empty()) tokens = std::span<const Token>(&kEnd, 1);
  ParseResult result;
  Parser parser(tokens, rawLines, sourceName);
  result.unit = parser.parse(result.diagnostics);
  return result;
}

ParseResult parse_source(std::string_view source, std::string sourceName) {
  LexResult lexed = tokenize(source, sourceName);
  ParseResult result = parse_unit(lexed.tokens, split_lines(source), std::move(sourceName));
  if (!lexed.diagnostics.empty()) {
    auto& ds = result.diagnostics;
    ds.insert(ds.end(), lexed.diagnostics.begin(), lexed.diagnostics.end());
    std::stable_sort(ds.begin(), ds.end(), [](const Diagnostic& a, const Diagnostic& b) {
      return std::pair(a.line, a.caretColumn) < std::pair(b.line, b.caretColumn);
    });
  }
  return result;
}

}  // namespace ifcheck
