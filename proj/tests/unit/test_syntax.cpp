#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "ifcheck/corpus.hpp"
#include "ifcheck/syntax.hpp"
#include "oracle.hpp"

using namespace ifcheck;

namespace {

std::vector<TokenKind> kinds(const LexResult& r) {
  std::vector<TokenKind> out;
  for (const auto& t : r.tokens) out.push_back(t.kind);
  return out;
}

std::string strip_ws_and_comments(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.substr(i, 2) == "//") {
      while (i < s.size() && s[i] != '\n') ++i;
      continue;
    }
    if (!std::isspace(static_cast<unsigned char>(s[i]))) out += s[i];
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void expect_positions_valid(const ParseResult& r, std::string_view source) {
  auto lines = split_lines(source);
  for (const auto& d : r.diagnostics) {
    ASSERT_GE(d.line, 1);
    ASSERT_LE(d.line, static_cast<int>(lines.size()));
    EXPECT_EQ(d.echoLine, lines[d.line - 1]);
    EXPECT_GE(d.caretColumn, 1);
    EXPECT_LE(d.caretColumn, static_cast<int>(d.echoLine.size()) + 1);
    EXPECT_FALSE(d.message.empty());
  }
}

}  // namespace

TEST(Tokenize, SimpleInterface) {
  auto r = tokenize("interface F <T> {}", "t");
  using K = TokenKind;
  EXPECT_EQ(kinds(r), (std::vector<K>{K::KwInterface, K::Identifier, K::Less, K::Identifier,
                                      K::Greater, K::LBrace, K::RBrace, K::EndOfInput}));
  EXPECT_TRUE(r.diagnostics.empty());
  EXPECT_EQ(r.tokens[1].lexeme, "F");
  EXPECT_EQ(r.tokens[2].pos, (SourcePos{1, 13}));
}

TEST(Tokenize, CommentsAndPositions) {
  auto r = tokenize("package p; // interface\n  T x", "t");
  ASSERT_EQ(r.tokens.size(), 6u);
  EXPECT_EQ(r.tokens[3].lexeme, "T");
  EXPECT_EQ(r.tokens[3].pos, (SourcePos{2, 3}));
  EXPECT_EQ(r.tokens[4].pos, (SourcePos{2, 5}));
}

TEST(Tokenize, IllegalCharacterIsSkipped) {
  auto r = tokenize("interface A# {}", "t.java");
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].message, "illegal character");
  EXPECT_EQ(r.diagnostics[0].caretColumn, 12);
  EXPECT_EQ(r.tokens.size(), 5u);
}

TEST(Tokenize, MultibyteCharacterSkippedAsOne) {
  auto r = tokenize("A \xC3\xA9 B", "t");
  EXPECT_EQ(r.diagnostics.size(), 1u);
  ASSERT_EQ(r.tokens.size(), 3u);
  EXPECT_EQ(r.tokens[1].lexeme, "B");
}

TEST(TokenizeProperty, LexemesConcatenateToStrippedSource) {
  std::mt19937_64 rng(11);
  const char* pieces[] = {"interface", "extends", "throws", "package", "Foo", "x1", "_y",
                          "<", ">", ",", ";", "(", ")", "{", "}", ".", " ", "\n", "  ",
                          "// note\n"};
  for (int iter = 0; iter < 500; ++iter) {
    std::string src;
    int n = std::uniform_int_distribution<int>(0, 40)(rng);
    for (int i = 0; i < n; ++i) {
      src += pieces[std::uniform_int_distribution<int>(0, 19)(rng)];
      src += ' ';
    }
    auto r = tokenize(src, "t");
    ASSERT_TRUE(r.diagnostics.empty());
    ASSERT_EQ(r.tokens.back().kind, TokenKind::EndOfInput);
    std::string joined;
    for (const auto& t : r.tokens) {
      if (t.kind != TokenKind::EndOfInput) {
        EXPECT_FALSE(t.lexeme.empty());
        joined += t.lexeme;
      }
    }
    EXPECT_EQ(joined, strip_ws_and_comments(src)) << src;
  }
}

TEST(Parse, AdditiveSemigroup) {
  auto corpus = load_corpus();
  auto r = parse_source(corpus[0].content, corpus[0].relativePath);
  EXPECT_TRUE(r.diagnostics.empty());
  ASSERT_EQ(r.unit.decls.size(), 1u);
  const auto& d = r.unit.decls[0];
  EXPECT_EQ(d.name, "AdditiveSemigroup");
  EXPECT_EQ(d.typeParams, std::vector<std::string>{"T"});
  ASSERT_EQ(d.methods.size(), 1u);
  EXPECT_EQ(d.methods[0].name, "plus");
  EXPECT_EQ(r.unit.packageName, "algebra");
}

TEST(Parse, FieldThrowsClause) {
  auto corpus = load_corpus();
  auto field = std::find_if(corpus.begin(), corpus.end(), [](auto& e) { return e.name == "Field"; });
  auto r = parse_source(field->content, field->relativePath);
  ASSERT_TRUE(r.diagnostics.empty());
  const auto& m = r.unit.decls[0].methods;
  ASSERT_FALSE(m.empty());
  auto inv = std::find_if(m.begin(), m.end(), [](auto& x) { return x.name == "getMultInv"; });
  ASSERT_NE(inv, m.end());
  EXPECT_EQ(inv->throwsList, std::vector<std::string>{"ArithmeticException"});
}

TEST(Parse, VectorSpaceRecoveryMatchesJavac) {
  auto corpus = load_corpus();
  const auto& vs = corpus[8];
  ASSERT_EQ(vs.name, "VectorSpace");
  auto r = parse_source(vs.content, vs.relativePath);
  ASSERT_EQ(r.diagnostics.size(), 8u);
  const int lines[] = {3, 3, 3, 4, 4, 5, 7, 7};
  const int carets[] = {34, 41, 43, 43, 44, 43, 5, 31};
  const char* messages[] = {"> expected",          "<identifier> expected", "';' expected",
                            "<identifier> expected", "';' expected",        "illegal start of type",
                            "'(' expected",        "<identifier> expected"};
  for (int i = 0; i < 8; ++i) {
    EXPECT_EQ(r.diagnostics[i].line, lines[i]) << i;
    EXPECT_EQ(r.diagnostics[i].caretColumn, carets[i]) << i;
    EXPECT_EQ(r.diagnostics[i].message, messages[i]) << i;
    EXPECT_EQ(r.diagnostics[i].severity, Severity::Error);
  }
}

TEST(Parse, ErrorPaths) {
  EXPECT_EQ(parse_source("interface A {}", "t").diagnostics.at(0).message, "'package' expected");
  EXPECT_EQ(parse_source("package p;\nfoo", "t").diagnostics.at(0).message,
            "class, interface, or enum expected");
  EXPECT_EQ(parse_source("package p;\ninterface A {\n  T m();\n", "t").diagnostics.at(0).message,
            "reached end of file while parsing");
  EXPECT_EQ(parse_source("package p;\ninterface A T m(); }", "t").diagnostics.at(0).message,
            "'{' expected");
}

TEST(ParseProperty, RoundTripOnCorpus) {
  for (const auto& e : load_corpus()) {
    if (!e.clean) continue;
    auto first = parse_source(e.content, e.relativePath);
    ASSERT_FALSE(first.has_errors()) << e.name;
    auto printed = print_unit(first.unit);
    auto second = parse_source(printed, e.relativePath);
    ASSERT_FALSE(second.has_errors()) << printed;
    EXPECT_TRUE(same_structure(first.unit, second.unit)) << e.name;
    EXPECT_EQ(print_unit(second.unit), printed);
  }
}

TEST(ParseProperty, RoundTripOnGeneratedUnits) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    auto src = ifcheck::testing::random_hierarchy_source(rng);
    auto first = parse_source(src, "gen.java");
    ASSERT_FALSE(first.has_errors()) << src;
    auto second = parse_source(print_unit(first.unit), "gen.java");
    ASSERT_FALSE(second.has_errors());
    EXPECT_TRUE(same_structure(first.unit, second.unit)) << src;
  }
}

TEST(ParseProperty, FuzzTerminatesWithValidPositions) {
  std::mt19937_64 rng(1234);
  const char* pieces[] = {"package", "interface", "extends", "throws", "A", "T", "x",
                          "<", ">", ",", ";", "(", ")", "{", "}", ".", "\n", "#"};
  for (int iter = 0; iter < 2000; ++iter) {
    std::string src;
    if (iter % 2) src = "package p;\n";
    int n = std::uniform_int_distribution<int>(0, 60)(rng);
    for (int i = 0; i < n; ++i) {
      src += pieces[std::uniform_int_distribution<int>(0, 17)(rng)];
      src += std::uniform_int_distribution<int>(0, 3)(rng) ? " " : "";
    }
    auto r = parse_source(src, "fuzz.java");
    expect_positions_valid(r, src);
    for (std::size_t i = 1; i < r.diagnostics.size(); ++i) {
      EXPECT_LE(std::pair(r.diagnostics[i - 1].line, r.diagnostics[i - 1].caretColumn),
                std::pair(r.diagnostics[i].line, r.diagnostics[i].caretColumn));
    }
  }
}

TEST(ParseProperty, GoldenStability) {
  for (const auto& e : load_corpus()) {
    auto a = parse_source(e.content, e.relativePath);
    auto b = parse_source(e.content, e.relativePath);
    EXPECT_EQ(a.diagnostics, b.diagnostics) << e.name;
    EXPECT_TRUE(same_structure(a.unit, b.unit));
    expect_positions_valid(a, e.content);
  }
}

TEST(Parse, OnDiskCorpusMatchesEmbedded) {
  for (const auto& e : load_corpus()) {
    EXPECT_EQ(read_file(std::string(IFCHECK_SOURCE_DIR) + "/corpus/" + e.relativePath), e.content)
        << e.name;
  }
}

TEST(Printer, TypeToString) {
  TypeRef t("Pair", {TypeRef("Owner#T"), TypeRef("Box", {TypeRef("G")})});
  EXPECT_EQ(to_string(t), "Pair<T,Box<G>>");
}
