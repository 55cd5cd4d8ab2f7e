// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "ifcheck/algebra/laws.hpp"
#include "ifcheck/corpus.hpp"
#include "ifcheck/driver.hpp"
#include "oracle.hpp"

using namespace ifcheck;
using namespace ifcheck::testing;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

const fs::path kSource = IFCHECK_SOURCE_DIR;

struct Output {
  int code = 0;
  std::string out;
  std::string err;
  double seconds = 0;
  bool operator==(const Output& o) const { return code == o.code && out == o.out && err == o.err; }
};

Output run_files(const std::vector<std::string>& files, Mode mode, EmitMembers emit = EmitMembers::Off) {
  CliConfig c;
  c.mode = mode;
  c.emitMembers = emit;
  for (const auto& f : files) c.inputs.push_back(fs::path("algebra") / f);
  auto saved = fs::current_path();
  fs::current_path(kSource / "corpus");
  std::ostringstream out, err;
  auto start = Clock::now();
  Output o;
  o.code = run(c, out, err);
  o.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  fs::current_path(saved);
  o.out = out.str();
  o.err = err.str();
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int failures = 0;

void report(int n, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << detail << "\n";
  if (!ok) ++failures;
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

// -- 1 -------------------------------------------------------------------------
void criterion1() {
  auto r = run_files({"VectorSpace.java"}, Mode::Java8);
  auto golden = slurp(kSource / "goldens/java8/VectorSpace.txt");
  auto ls = lines_of(r.err);
  std::vector<int> lineNos;
  std::vector<int> carets;
  for (std::size_t i = 0; i + 2 < ls.size(); i += 3) {
    auto colon = ls[i].find(".java:");
    lineNos.push_back(std::stoi(ls[i].substr(colon + 6)));
    carets.push_back(static_cast<int>(ls[i + 2].find('^')) + 1);
  }
  bool ok = r.err == golden && r.code == 1 && r.seconds < 1.0 && !ls.empty() &&
            ls.back() == "8 errors" && lineNos == std::vector<int>{3, 3, 3, 4, 4, 5, 7, 7} &&
            carets == std::vector<int>{34, 41, 43, 43, 44, 43, 5, 31};
  std::ostringstream d;
  d << "VectorSpace java8 transcript " << (r.err == golden ? "matches" : "differs from")
    << " golden, exit " << r.code << ", " << lineNos.size() << " diagnostics, " << r.seconds
    << " s (< 1 s)";
  report(1, ok, d.str());
}

// -- 2 -------------------------------------------------------------------------
void criterion2() {
  auto r = run_files({"VectorSpaceAH.java"}, Mode::Java8);
  const std::string expected =
      "algebra/VectorSpaceAH.java:3: error: AdditiveGroup cannot be inherited with different "
      "arguments: <Vector> and <Scalar>\n"
      "interface VectorSpaceAH   <Vector, Scalar>\n"
      "^\n"
      "1 error\n";
  bool ok = r.err == expected && r.code == 1 &&
            r.err == slurp(kSource / "goldens/java8/VectorSpaceAH.txt");
  report(2, ok, "VectorSpaceAH java8: exit " + std::to_string(r.code) + ", " +
                    (r.err == expected ? "single error as expected" : "unexpected transcript:\n" + r.err));
}

// -- 3 -------------------------------------------------------------------------
void criterion3() {
  int clean = 0;
  std::string bad;
  auto corpus = load_corpus();
  for (std::size_t i = 0; i < 8; ++i) {
    auto file = fs::path(corpus[i].relativePath).filename().string();
    auto r = run_files({file}, Mode::Java8);
    if (r.code == 0 && r.err.empty()) {
      ++clean;
    } else {
      bad += " " + file;
    }
  }
  report(3, clean == 8, std::to_string(clean) + "/8 tower files check clean in java8" +
                            (bad.empty() ? "" : "; failing:" + bad));
}

// -- 4 -------------------------------------------------------------------------
void criterion4() {
  auto r = run_files({"VectorSpaceAH.java"}, Mode::Extended, EmitMembers::Text);
  auto has = [&](const std::string& s) { return r.out.find(s) != std::string::npos; };
  int notes = 0;
  for (const auto& l : lines_of(r.err)) notes += l.find(": note: ") != std::string::npos;
  bool zeroFirst = r.err.find("getAddInv()") != std::string::npos &&
                   r.err.find("getZero()") != std::string::npos;

  // Oracle cross-check on the member table.
  std::vector<CompilationUnit> units = ambient_units();
  units.push_back(parse_source(load_corpus()[9].content, "VectorSpaceAH.java").unit);
  auto decls = index_decls(units);
  auto oracle = brute_force_members(decls, "VectorSpaceAH");
  auto amb = brute_force_ambiguities(oracle);
  std::vector<std::string> oracleLines;
  for (const auto& m : oracle) {
    std::string s = m.name + "(";
    for (std::size_t i = 0; i < m.params.size(); ++i) s += (i ? ", " : "") + m.params[i];
    s += ") -> " + m.returns;
    oracleLines.push_back(s);
  }
  auto table = lines_of(r.out);
  bool oracleOk = table.size() == oracle.size() + 1;
  for (std::size_t i = 0; oracleOk && i < oracle.size(); ++i) {
    oracleOk = table[i + 1].rfind(oracleLines[i], 0) == 0 &&
               table[i + 1].find("[from " + oracle[i].origin + "]") != std::string::npos;
  }
  bool ok = r.code == 0 && has("plus(Vector) -> Vector") && has("plus(Scalar) -> Scalar") &&
            has("timesScalar(Scalar) -> Vector") && notes == 2 && zeroFirst &&
            amb == std::vector<std::string>{"getAddInv()", "getZero()"} && oracleOk &&
            r.err == slurp(kSource / "goldens/extended/VectorSpaceAH.txt");
  report(4, ok, "VectorSpaceAH extended: exit " + std::to_string(r.code) + ", " +
                    std::to_string(notes) + " notes, " + std::to_string(table.size() - 1) +
                    " members, oracle " + (oracleOk ? "agrees" : "disagrees"));
}

// -- 5 -------------------------------------------------------------------------
std::string render_map(const InstantiationMap& m) {
  std::string s;
  for (const auto& [name, tuples] : m.entries) {
    s += name + ":";
    for (const auto& t : tuples) s += to_string(t) + ";";
    s += "|";
  }
  return s;
}

std::string render_oracle(const OracleInstantiations& m) {
  std::string s;
  for (const auto& [name, tuples] : m) {
    s += name + ":";
    for (const auto& t : tuples) s += (t.empty() ? "" : "<" + t + ">") + ";";
    s += "|";
  }
  return s;
}

void criterion5() {
  std::mt19937_64 rng(20240501);
  int hierarchies = 0, subjects = 0, oracleMismatch = 0, refinementChecked = 0, refinementFail = 0;
  for (; hierarchies < 600; ++hierarchies) {
    auto parsed = parse_source(random_hierarchy_source(rng), "gen.java");
    std::vector<CompilationUnit> units{parsed.unit};
    auto h = build_hierarchy(units);
    if (parsed.has_errors() || !h.diagnostics.empty()) {
      ++oracleMismatch;
      continue;
    }
    auto decls = index_decls(units);
    for (const auto& name : h.table.names()) {
      ++subjects;
      if (render_map(collect_instantiations(name, h.table)) !=
          render_oracle(brute_force_instantiations(decls, name))) {
        ++oracleMismatch;
      }
      auto j = check_java8(name, h.table);
      if (j.error_count() == 0) {
        ++refinementChecked;
        auto e = check_extended(name, h.table);
        if (e.members != j.members || !e.diagnostics.empty()) ++refinementFail;
      }
    }
  }
  std::ostringstream d;
  d << hierarchies << " hierarchies (" << subjects << " subjects): " << oracleMismatch
    << " oracle mismatches; mode refinement held on " << refinementChecked - refinementFail << "/"
    << refinementChecked << " java8-clean subjects";
  report(5, hierarchies >= 500 && oracleMismatch == 0 && refinementFail == 0, d.str());
}

// -- 6 -------------------------------------------------------------------------
void criterion6() {
  std::mt19937_64 rng(6);
  auto random_sub = [&] {
    Substitution s;
    for (const char* v : {"a", "b", "c"}) {
      if (std::uniform_int_distribution<int>(0, 2)(rng)) s.bindings[v] = random_type(rng, 2);
    }
    return s;
  };
  const int triples = 2000;
  int identityFail = 0, compositionFail = 0;
  for (int i = 0; i < triples; ++i) {
    auto t = random_type(rng, 3);
    auto s1 = random_sub(), s2 = random_sub();
    if (!(substitute(t, Substitution{}) == t)) ++identityFail;
    if (!(substitute(substitute(t, s1), s2) == substitute(t, compose(s1, s2)))) ++compositionFail;
  }
  report(6, identityFail == 0 && compositionFail == 0,
         std::to_string(triples) + " triples: identity failures " + std::to_string(identityFail) +
             ", composition failures " + std::to_string(compositionFail));
}

// -- 7 -------------------------------------------------------------------------
void criterion7() {
  using namespace ifcheck::algebra;
  auto start = Clock::now();
  auto field = check_laws(rational_field_witness(), 1000, 42);
  auto space = check_laws(rational_vector_space_witness(3), 1000, 42);
  double seconds = std::chrono::duration<double>(Clock::now() - start).count();

  auto broken = rational_field_witness();
  broken.plus = [](const Rational& a, const Rational& b) {
    return Rational::unnormalized(a.numerator() * b.denominator() + b.numerator() * a.denominator(),
                                  a.denominator() * b.denominator());
  };
  auto mutated = check_laws(broken, 1000, 42);
  bool caught = false;
  std::string example;
  for (const auto& r : mutated.results) {
    if (!r.passed && !r.counterexample.empty() && !caught) {
      caught = true;
      example = r.law + " (" + r.counterexample + ")";
    }
  }
  std::ostringstream d;
  d << "field " << field.results.size() << " laws " << (field.passed() ? "pass" : "FAIL")
    << ", vector space " << space.results.size() << " laws " << (space.passed() ? "pass" : "FAIL")
    << ", " << seconds << " s (< 5 s); mutation "
    << (caught ? "caught by " + example : "not caught");
  report(7, field.passed() && space.passed() && caught && seconds < 5.0, d.str());
}

// -- 8 -------------------------------------------------------------------------
void criterion8() {
  bool repeat = true;
  for (int pass = 0; pass < 2 && repeat; ++pass) {
    repeat = run_files({"VectorSpace.java"}, Mode::Java8) == run_files({"VectorSpace.java"}, Mode::Java8) &&
             run_files({"VectorSpaceAH.java"}, Mode::Java8) == run_files({"VectorSpaceAH.java"}, Mode::Java8) &&
             run_files({"VectorSpaceAH.java"}, Mode::Extended, EmitMembers::Text) ==
                 run_files({"VectorSpaceAH.java"}, Mode::Extended, EmitMembers::Text);
  }

  // Same files in several orders: each file's diagnostics and member tables
  // must not change.
  std::vector<SourceFile> sources;
  for (const auto& e : load_corpus()) sources.push_back({e.relativePath, e.content});
  auto per_file = [](const CheckRun& run) {
    std::map<std::string, std::string> out;
    for (const auto& f : run.files) {
      std::string s = render_transcript(f.diagnostics).text();
      for (const auto& r : f.reports) {
        for (const auto& m : r.members) s += m.str() + "\n";
      }
      out[f.label] = s;
    }
    return out;
  };
  bool permutation = true;
  std::mt19937_64 rng(8);
  for (Mode mode : {Mode::Java8, Mode::Extended}) {
    auto reference = per_file(check_sources(sources, mode));
    auto shuffled = sources;
    for (int i = 0; i < 10; ++i) {
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      if (per_file(check_sources(shuffled, mode)) != reference) permutation = false;
    }
  }
  report(8, repeat && permutation,
         std::string("repeated runs ") + (repeat ? "identical" : "differ") +
             ", 20 input-order permutations " + (permutation ? "identical" : "differ"));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  std::cout << (failures == 0 ? "all 8 criteria pass" : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
