#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ifcheck::algebra {

class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(std::size_t left, std::size_t right)
      : std::invalid_argument("dimension mismatch: " + std::to_string(left) + " vs " +
                              std::to_string(right)) {}
};

/// Fixed-dimension vector over a field whose elements support `+`, `*` and
/// unary `-`, with `Scalar{}` as zero.
template <typename Scalar>
class VectorN {
 public:
  explicit VectorN(std::vector<Scalar> components) : components_(std::move(components)) {
    if (components_.empty()) throw std::invalid_argument("vector dimension must be positive");
  }

  std::size_t dimension() const { return components_.size(); }
  const std::vector<Scalar>& components() const { return components_; }
  const Scalar& operator[](std::size_t i) const { return components_[i]; }

  friend bool operator==(const VectorN&, const VectorN&) = default;

 private:
  std::vector<Scalar> components_;
};

template <typename Scalar>
VectorN<Scalar> vec_zero(std::size_t dimension) {
  return VectorN<Scalar>(std::vector<Scalar>(dimension, Scalar{}));
}

template <typename Scalar>
VectorN<Scalar> vec_plus(const VectorN<Scalar>& u, const VectorN<Scalar>& v) {
  if (u.dimension() != v.dimension()) throw DimensionMismatch(u.dimension(), v.dimension());
  std::vector<Scalar> out;
  out.reserve(u.dimension());
  for (std::size_t i = 0; i < u.dimension(); ++i) out.push_back(u[i] + v[i]);
  return VectorN<Scalar>(std::move(out));
}

template <typename Scalar>
VectorN<Scalar> vec_addInv(const VectorN<Scalar>& v) {
  std::vector<Scalar> out;
  out.reserve(v.dimension());
  for (const auto& c : v.components()) out.push_back(-c);
  return VectorN<Scalar>(std::move(out));
}

template <typename Scalar>
VectorN<Scalar> vec_timesScalar(const VectorN<Scalar>& v, const Scalar& s) {
  std::vector<Scalar> out;
  out.reserve(v.dimension());
  for (const auto& c : v.components()) out.push_back(s * c);
  return VectorN<Scalar>(std::move(out));
}

template <typename Scalar>
std::string to_string(const VectorN<Scalar>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.dimension(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  return out + ")";
}

}  // namespace ifcheck::algebra
