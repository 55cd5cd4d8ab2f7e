#include <algorithm>
#include <sstream>

#include "ifcheck/algebra/laws.hpp"

namespace ifcheck::algebra {

std::string_view level_name(StructureLevel level) {
  switch (level) {
    case StructureLevel::Semigroup: return "semigroup";
    case StructureLevel::Monoid: return "monoid";
    case StructureLevel::Group: return "group";
    case StructureLevel::CommutativeRing: return "commutative-ring";
    case StructureLevel::Field: return "field";
    case StructureLevel::VectorSpace: return "vector-space";
  }
  return "?";
}

bool LawReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const LawResult& r) { return r.passed; });
}

const LawResult* LawReport::find(std::string_view law) const {
  auto it = std::find_if(results.begin(), results.end(),
                         [&](const LawResult& r) { return r.law == law; });
  return it == results.end() ? nullptr : &*it;
}

std::string LawReport::render() const {
  std::ostringstream os;
  os << structure << " (" << level_name(level) << ")\n";
  int failed = 0;
  for (const auto& r : results) {
    if (r.passed) {
      os << "  pass  " << r.law << " [" << r.samplesChecked << " samples]\n";
    } else {
      ++failed;
      os << "  FAIL  " << r.law << " [sample " << r.samplesChecked << "]: " << r.counterexample
         << "\n";
    }
  }
  if (failed == 0) {
    os << "all " << results.size() << " laws hold\n";
  } else {
    os << failed << " of " << results.size() << " laws failed\n";
  }
  return os.str();
}

namespace detail {

std::string operation_mismatch(std::string_view op, bool required) {
  return std::string(required ? "missing operation " : "operation not part of this level: ") +
         std::string(op);
}

}  // namespace detail

Rational sample_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> numerator(-100, 100);
  std::uniform_int_distribution<int> denominator(1, 100);
  int n = numerator(rng);
  int d = denominator(rng);
  return Rational(n, d);
}

StructureWitness<Rational> rational_field_witness() {
  StructureWitness<Rational> w;
  w.name = "rationals";
  w.level = StructureLevel::Field;
  w.sample = sample_rational;
  w.plus = rat_plus;
  w.times = rat_times;
  w.zero = [] { return Rational(0); };
  w.one = [] { return Rational(1); };
  w.addInv = rat_addInv;
  w.multInv = rat_multInv;
  w.show = [](const Rational& r) { return r.str(); };
  return w;
}

StructureWitness<Integer> integer_ring_witness() {
  StructureWitness<Integer> w;
  w.name = "integers";
  w.level = StructureLevel::CommutativeRing;
  w.sample = [](std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(-100, 100);
    return Integer(dist(rng));
  };
  w.plus = [](const Integer& a, const Integer& b) -> Integer { return a + b; };
  w.times = [](const Integer& a, const Integer& b) -> Integer { return a * b; };
  w.zero = [] { return Integer(0); };
  w.one = [] { return Integer(1); };
  w.addInv = [](const Integer& a) -> Integer { return -a; };
  w.show = [](const Integer& a) { return a.str(); };
  return w;
}

VectorSpaceWitness<VectorN<Rational>, Rational> rational_vector_space_witness(
    std::size_t dimension) {
  using V = VectorN<Rational>;
  VectorSpaceWitness<V, Rational> w;
  w.name = "rational vectors (dimension " + std::to_string(dimension) + ")";
  w.scalars = rational_field_witness();
  w.sample = [dimension](std::mt19937_64& rng) {
    std::vector<Rational> components;
    components.reserve(dimension);
    for (std::size_t i = 0; i < dimension; ++i) components.push_back(sample_rational(rng));
    return V(std::move(components));
  };
  w.plus = vec_plus<Rational>;
  w.zero = [dimension] { return vec_zero<Rational>(dimension); };
  w.addInv = vec_addInv<Rational>;
  w.timesScalar = vec_timesScalar<Rational>;
  w.show = [](const V& v) { return to_string(v); };
  return w;
}

}  // namespace ifcheck::algebra
