#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "netform/rational.hpp"

namespace netform {

/// (x)^exponent + offset. The exponent is even and >= 2, so the shape is convex with minimum at 0.
struct ShiftedPower {
  int exponent = 2;
  Rational offset = 0;
  friend bool operator==(const ShiftedPower&, const ShiftedPower&) = default;
};

/// 1 / (x + a), a > 0: positive, decreasing and convex on x >= 0.
struct Reciprocal {
  Rational a = 1;
  friend bool operator==(const Reciprocal&, const Reciprocal&) = default;
};

/// -gamma * x. With base cost gamma0 this reproduces c_i = gamma0 - gamma * degree.
struct LinearDecreasing {
  Rational gamma = 0;
  friend bool operator==(const LinearDecreasing&, const LinearDecreasing&) = default;
};

/// Explicit values on the symmetric integer domain [-radius, radius];
/// values[x + radius] = f(x). A table for n players has radius n - 1.
struct Table {
  std::vector<Rational> values;
  int radius() const { return (static_cast<int>(values.size()) - 1) / 2; }
  friend bool operator==(const Table&, const Table&) = default;
};

using CostShape = std::variant<ShiftedPower, Reciprocal, LinearDecreasing, Table>;

/// Shape value at integer x. Throws DomainError outside the shape's domain
/// (x = -a for Reciprocal, |x| > radius for Table).
Rational evaluate_shape(const CostShape& shape, int x);
std::optional<Rational> try_evaluate_shape(const CostShape& shape, int x);

/// Validates shape parameters; throws InvalidSpec.
void validate_shape(const CostShape& shape);

std::string shape_name(const CostShape& shape);

/// A firm's (or player's) cost as a function of its degree: f(degree - shift).
/// For the shifted-power variant the shift is the desired degree k_i.
class CostFunction {
 public:
  CostFunction(CostShape shape, int shift = 0);

  static CostFunction shifted_power(int exponent, int shift, Rational offset);
  static CostFunction reciprocal(Rational a);
  static CostFunction linear_decreasing(Rational gamma);
  static CostFunction table(std::vector<Rational> values, int shift = 0);

  Rational operator()(int degree) const { return evaluate_shape(shape_, degree - shift_); }

  const CostShape& shape() const { return shape_; }
  int shift() const { return shift_; }

  friend bool operator==(const CostFunction&, const CostFunction&) = default;

 private:
  CostShape shape_;
  int shift_;
};

}  // namespace netform
