#include "ifcheck/corpus.hpp"

namespace ifcheck {

namespace {

struct EmbeddedListing {
  const char* name;
  const char* content;
  std::uint64_t checksum;
  bool clean;
};

// Mirrors corpus/algebra/*.java byte for byte.
const EmbeddedListing kListings[] = {
    {"AdditiveSemigroup", R"(package algebra;

interface AdditiveSemigroup <T> {

    T plus (T right);

}
)", 0x8db7a4cca5954922ULL, true},
    {"MultiplicativeSemigroup", R"(package algebra;

interface MultiplicativeSemigroup <T> {

    T times (T right);

}
)", 0x277fe29326785c40ULL, true},
    {"AdditiveMonoid", R"(package algebra;

interface AdditiveMonoid        <T>
    extends AdditiveSemigroup <T> {

    T getZero(); // the additive neutral element

}
)", 0xf1df7fb7c16e7923ULL, true},
    {"MultiplicativeMonoid", R"(package algebra;

interface MultiplicativeMonoid        <T>
    extends MultiplicativeSemigroup <T> {

    T getOne(); // the multiplicative neutral element

}
)", 0xca5bcb90a8854a77ULL, true},
    {"AdditiveGroup", R"(package algebra;

interface AdditiveGroup  <T>
    extends AdditiveMonoid <T> {

    T getAddInv(); // the additive inverse element

}
)", 0xb035fbe234a981c8ULL, true},
    {"CommutativeRing", R"(package algebra;

interface CommutativeRing        <T>
    extends AdditiveGroup        <T>,
            MultiplicativeMonoid <T> {

}
)", 0xf3f5da20744084c1ULL, true},
    {"MultiplicativeGroup", R"(package algebra;

interface MultiplicativeGroup  <T>
    extends MultiplicativeMonoid <T> {

    T getMultInv(); // the multiplicative inverse element

}
)", 0x1145a40e6cbabfffULL, true},
    {"Field", R"(package algebra;

interface Field                <T>
    extends AdditiveGroup      <T>,
            MultiplicativeGroup <T> {

    T getMultInv() throws ArithmeticException; // div by Zero!

}
)", 0x59127a022371f232ULL, true},
    {"VectorSpace", R"(package algebra;

interface VectorSpace     <Vector<Scalar>>
    extends AdditiveGroup <Vector<Scalar>>,
            Field                <Scalar> {

    Vector<Scalar> timesScalar(Scalar s);

}
)", 0xfa8727dd1895c602ULL, false},
    {"VectorSpaceAH", R"(package algebra;

interface VectorSpaceAH   <Vector, Scalar>
    extends AdditiveGroup <Vector>,
            Field         <Scalar> {

    Vector timesScalar (Scalar s);

}
)", 0x2681228b0a3e0561ULL, false},
};

}  // namespace

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

void verify_checksum(std::string_view name, std::string_view content, std::uint64_t expected) {
  if (fnv1a64(content) != expected) {
    throw CorruptedCorpus("checksum mismatch in embedded listing " + std::string(name));
  }
}

std::vector<CorpusEntry> load_corpus(std::string_view suffix) {
  std::vector<CorpusEntry> entries;
  for (const auto& listing : kListings) {
    std::string content = listing.content;
    verify_checksum(listing.name, content, listing.checksum);
    CorpusEntry e;
    e.name = listing.name;
    e.relativePath = "algebra/" + e.name + std::string(suffix);
    e.content = std::move(content);
    e.expectedJava8 = "java8/" + e.name + ".txt";
    e.expectedExtended = "extended/" + e.name + ".txt";
    e.clean = listing.clean;
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<CompilationUnit> ambient_units(std::string_view suffix) {
  std::vector<CompilationUnit> units;
  for (auto& entry : load_corpus(suffix)) {
    if (!entry.clean) continue;
    units.push_back(parse_source(entry.content, entry.relativePath).unit);
  }
  return units;
}

}  // namespace ifcheck
