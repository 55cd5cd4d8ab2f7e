#pragma once

// Sampling checks of the equational laws behind the algebra interfaces.
//
// Every law draws from its own generator, seeded from (seed, law id), so a
// law's verdict does not depend on which other laws run beside it. Running a
// field at group level therefore reproduces the group rows of the field run.

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ifcheck/algebra/rational.hpp"
#include "ifcheck/algebra/vector.hpp"

namespace ifcheck::algebra {

enum class StructureLevel { Semigroup, Monoid, Group, CommutativeRing, Field, VectorSpace };

std::string_view level_name(StructureLevel level);

/// A carrier with the operations of one structure level. Operations beyond
/// the level must be left empty.
template <typename T>
struct StructureWitness {
  std::string name;
  StructureLevel level = StructureLevel::Semigroup;
  std::function<T(std::mt19937_64&)> sample;
  std::function<T(const T&, const T&)> plus;
  std::function<T(const T&, const T&)> times;
  std::function<T()> zero;
  std::function<T()> one;
  std::function<T(const T&)> addInv;
  std::function<T(const T&)> multInv;
  std::function<std::string(const T&)> show;
};

/// A vector space: an additive group of vectors acted on by a field.
template <typename V, typename S>
struct VectorSpaceWitness {
  std::string name;
  StructureWitness<S> scalars;  // at field level
  std::function<V(std::mt19937_64&)> sample;
  std::function<V(const V&, const V&)> plus;
  std::function<V()> zero;
  std::function<V(const V&)> addInv;
  std::function<V(const V&, const S&)> timesScalar;
  std::function<std::string(const V&)> show;
};

struct LawResult {
  std::string law;
  bool passed = true;
  int samplesChecked = 0;
  std::string counterexample;

  friend bool operator==(const LawResult&, const LawResult&) = default;
};

struct LawReport {
  std::string structure;
  StructureLevel level = StructureLevel::Semigroup;
  std::vector<LawResult> results;

  bool passed() const;
  const LawResult* find(std::string_view law) const;
  std::string render() const;
};

class SamplerExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

enum LawId : std::uint64_t {
  kPlusAssociative = 0,
  kPlusCommutative,
  kZeroIdentity,
  kAdditiveInverse,
  kTimesAssociative,
  kTimesCommutative,
  kOneIdentity,
  kDistributive,
  kMultiplicativeInverse,
  kScalarSumAction = 20,
  kVectorSumAction,
  kScalarProductAction,
  kUnitAction,
  kVectorLawOffset = 100,
  kScalarLawOffset = 200,
};

inline std::mt19937_64 law_rng(std::uint64_t seed, std::uint64_t law) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(law)};
  return std::mt19937_64(seq);
}

// Runs `body` once per sample; `body` returns an empty string on success or
// the counterexample text. Exceptions count as failures.
template <typename Body>
LawResult run_law(std::string name, std::uint64_t seed, std::uint64_t id, int samples, Body body) {
  LawResult result;
  result.law = std::move(name);
  auto rng = law_rng(seed, id);
  for (int i = 0; i < samples; ++i) {
    std::string failure;
    try {
      failure = body(rng);
    } catch (const SamplerExhausted&) {
      throw;
    } catch (const std::exception& e) {
      failure = std::string("threw: ") + e.what();
    }
    ++result.samplesChecked;
    if (!failure.empty()) {
      result.passed = false;
      result.counterexample = std::move(failure);
      break;
    }
  }
  return result;
}

template <typename T>
std::string mismatch(const StructureWitness<T>& w, std::initializer_list<std::pair<const char*, T>> vars,
                     const T& lhs, const T& rhs) {
  if (lhs == rhs) return {};
  std::string out;
  for (const auto& [name, value] : vars) {
    if (!out.empty()) out += ", ";
    out += std::string(name) + " = " + w.show(value);
  }
  return out + ": lhs = " + w.show(lhs) + ", rhs = " + w.show(rhs);
}

inline bool requires_op(StructureLevel level, StructureLevel from) {
  return static_cast<int>(level) >= static_cast<int>(from);
}

std::string operation_mismatch(std::string_view op, bool required);

}  // namespace detail

/// Throws std::invalid_argument unless the witness carries exactly the
/// operations of its level.
template <typename T>
void validate(const StructureWitness<T>& w) {
  using L = StructureLevel;
  auto check = [&](std::string_view op, bool present, L from) {
    bool required = detail::requires_op(w.level, from);
    if (present != required) throw std::invalid_argument(detail::operation_mismatch(op, required));
  };
  if (w.level == L::VectorSpace) throw std::invalid_argument("use VectorSpaceWitness");
  if (!w.sample || !w.show) throw std::invalid_argument("witness needs a sampler and a printer");
  check("plus", static_cast<bool>(w.plus), L::Semigroup);
  check("zero", static_cast<bool>(w.zero), L::Monoid);
  check("addInv", static_cast<bool>(w.addInv), L::Group);
  check("times", static_cast<bool>(w.times), L::CommutativeRing);
  check("one", static_cast<bool>(w.one), L::CommutativeRing);
  check("multInv", static_cast<bool>(w.multInv), L::Field);
}

/// The same carrier viewed at a lower level; surplus operations are dropped.
template <typename T>
StructureWitness<T> with_level(StructureWitness<T> w, StructureLevel level) {
  using L = StructureLevel;
  w.level = level;
  auto keep = [&](L from) { return detail::requires_op(level, from); };
  if (!keep(L::Monoid)) w.zero = nullptr;
  if (!keep(L::Group)) w.addInv = nullptr;
  if (!keep(L::CommutativeRing)) {
    w.times = nullptr;
    w.one = nullptr;
  }
  if (!keep(L::Field)) w.multInv = nullptr;
  return w;
}

namespace detail {

template <typename T>
void append_laws(const StructureWitness<T>& w, int samples, std::uint64_t seed,
                 std::uint64_t idOffset, const std::string& prefix,
                 std::vector<LawResult>& out) {
  using L = StructureLevel;
  auto at_least = [&](L from) { return requires_op(w.level, from); };
  auto law = [&](const char* name, std::uint64_t id, auto body) {
    out.push_back(run_law(prefix + name, seed, idOffset + id, samples, body));
  };

  law("plus associativity", kPlusAssociative, [&](std::mt19937_64& rng) {
    T a = w.sample(rng), b = w.sample(rng), c = w.sample(rng);
    return mismatch(w, {{"a", a}, {"b", b}, {"c", c}}, w.plus(w.plus(a, b), c),
                    w.plus(a, w.plus(b, c)));
  });
  law("plus commutativity", kPlusCommutative, [&](std::mt19937_64& rng) {
    T a = w.sample(rng), b = w.sample(rng);
    return mismatch(w, {{"a", a}, {"b", b}}, w.plus(a, b), w.plus(b, a));
  });
  if (at_least(L::Monoid)) {
    law("zero identity", kZeroIdentity, [&](std::mt19937_64& rng) {
      T a = w.sample(rng);
      auto left = mismatch(w, {{"a", a}}, w.plus(w.zero(), a), a);
      return left.empty() ? mismatch(w, {{"a", a}}, w.plus(a, w.zero()), a) : left;
    });
  }
  if (at_least(L::Group)) {
    law("additive inverse", kAdditiveInverse, [&](std::mt19937_64& rng) {
      T a = w.sample(rng);
      return mismatch(w, {{"a", a}}, w.plus(a, w.addInv(a)), w.zero());
    });
  }
  if (at_least(L::CommutativeRing)) {
    law("times associativity", kTimesAssociative, [&](std::mt19937_64& rng) {
      T a = w.sample(rng), b = w.sample(rng), c = w.sample(rng);
      return mismatch(w, {{"a", a}, {"b", b}, {"c", c}}, w.times(w.times(a, b), c),
                      w.times(a, w.times(b, c)));
    });
    law("times commutativity", kTimesCommutative, [&](std::mt19937_64& rng) {
      T a = w.sample(rng), b = w.sample(rng);
      return mismatch(w, {{"a", a}, {"b", b}}, w.times(a, b), w.times(b, a));
    });
    law("one identity", kOneIdentity, [&](std::mt19937_64& rng) {
      T a = w.sample(rng);
      auto left = mismatch(w, {{"a", a}}, w.times(w.one(), a), a);
      return left.empty() ? mismatch(w, {{"a", a}}, w.times(a, w.one()), a) : left;
    });
    law("distributivity", kDistributive, [&](std::mt19937_64& rng) {
      T a = w.sample(rng), b = w.sample(rng), c = w.sample(rng);
      return mismatch(w, {{"a", a}, {"b", b}, {"c", c}}, w.times(a, w.plus(b, c)),
                      w.plus(w.times(a, b), w.times(a, c)));
    });
  }
  if (at_least(L::Field)) {
    law("multiplicative inverse", kMultiplicativeInverse, [&](std::mt19937_64& rng) {
      T a = w.sample(rng);
      for (int tries = 0; a == w.zero(); ++tries) {
        if (tries == 1000) throw SamplerExhausted("no nonzero sample for " + w.name);
        a = w.sample(rng);
      }
      return mismatch(w, {{"a", a}}, w.times(a, w.multInv(a)), w.one());
    });
  }
}

}  // namespace detail

/// Checks every law of the witness's level on `samples` random draws.
template <typename T>
LawReport check_laws(const StructureWitness<T>& w, int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("samples must be at least 1");
  validate(w);
  LawReport report;
  report.structure = w.name;
  report.level = w.level;
  detail::append_laws(w, samples, seed, 0, "", report.results);
  return report;
}

template <typename V, typename S>
LawReport check_laws(const VectorSpaceWitness<V, S>& w, int samples, std::uint64_t seed) {
  using namespace detail;
  if (samples < 1) throw std::invalid_argument("samples must be at least 1");
  if (w.scalars.level != StructureLevel::Field) {
    throw std::invalid_argument("vector space scalars must form a field");
  }
  validate(w.scalars);
  if (!w.sample || !w.plus || !w.zero || !w.addInv || !w.timesScalar || !w.show) {
    throw std::invalid_argument("vector space witness is missing an operation");
  }

  LawReport report;
  report.structure = w.name;
  report.level = StructureLevel::VectorSpace;

  // The vectors as an additive group, the scalars as a field, then the action.
  StructureWitness<V> vectors;
  vectors.name = w.name;
  vectors.level = StructureLevel::Group;
  vectors.sample = w.sample;
  vectors.plus = w.plus;
  vectors.zero = w.zero;
  vectors.addInv = w.addInv;
  vectors.show = w.show;
  append_laws(vectors, samples, seed, kVectorLawOffset, "vector ", report.results);
  append_laws(w.scalars, samples, seed, kScalarLawOffset, "scalar ", report.results);

  const auto& f = w.scalars;
  auto show_scalars = [&](std::initializer_list<std::pair<const char*, S>> ss) {
    std::string out;
    for (const auto& [name, value] : ss) out += std::string(name) + " = " + f.show(value) + ", ";
    return out;
  };
  auto differ = [&](std::string prefix, const V& lhs, const V& rhs) -> std::string {
    if (lhs == rhs) return {};
    return prefix + "lhs = " + w.show(lhs) + ", rhs = " + w.show(rhs);
  };
  auto law = [&](const char* name, std::uint64_t id, auto body) {
    report.results.push_back(run_law(name, seed, id, samples, body));
  };

  law("(a+b)v = av + bv", kScalarSumAction, [&](std::mt19937_64& rng) {
    S a = f.sample(rng), b = f.sample(rng);
    V v = w.sample(rng);
    return differ(show_scalars({{"a", a}, {"b", b}}) + "v = " + w.show(v) + ": ",
                  w.timesScalar(v, f.plus(a, b)),
                  w.plus(w.timesScalar(v, a), w.timesScalar(v, b)));
  });
  law("a(u+v) = au + av", kVectorSumAction, [&](std::mt19937_64& rng) {
    S a = f.sample(rng);
    V u = w.sample(rng), v = w.sample(rng);
    return differ(show_scalars({{"a", a}}) + "u = " + w.show(u) + ", v = " + w.show(v) + ": ",
                  w.timesScalar(w.plus(u, v), a),
                  w.plus(w.timesScalar(u, a), w.timesScalar(v, a)));
  });
  law("(ab)v = a(bv)", kScalarProductAction, [&](std::mt19937_64& rng) {
    S a = f.sample(rng), b = f.sample(rng);
    V v = w.sample(rng);
    return differ(show_scalars({{"a", a}, {"b", b}}) + "v = " + w.show(v) + ": ",
                  w.timesScalar(v, f.times(a, b)), w.timesScalar(w.timesScalar(v, b), a));
  });
  law("1v = v", kUnitAction, [&](std::mt19937_64& rng) {
    V v = w.sample(rng);
    return differ("v = " + w.show(v) + ": ", w.timesScalar(v, f.one()), v);
  });
  return report;
}

// -- shipped witnesses --------------------------------------------------------

/// Rationals with numerators in [-100, 100] and denominators in [1, 100].
Rational sample_rational(std::mt19937_64& rng);

StructureWitness<Rational> rational_field_witness();
StructureWitness<Integer> integer_ring_witness();
VectorSpaceWitness<VectorN<Rational>, Rational> rational_vector_space_witness(
    std::size_t dimension = 3);

}  // namespace ifcheck::algebra
