#include "netform/cost.hpp"

#include "netform/errors.hpp"

namespace netform {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::optional<Rational> try_evaluate_shape(const CostShape& shape, int x) {
  return std::visit(
      overloaded{
          [x](const ShiftedPower& s) -> std::optional<Rational> {
            mpz_class power;
            mpz_pow_ui(power.get_mpz_t(), mpz_class(x).get_mpz_t(), static_cast<unsigned long>(s.exponent));
            return Rational(power) + s.offset;
          },
          [x](const Reciprocal& s) -> std::optional<Rational> {
            Rational den = Rational(x) + s.a;
            if (den == 0) return std::nullopt;
            return Rational(1) / den;
          },
          [x](const LinearDecreasing& s) -> std::optional<Rational> { return -s.gamma * x; },
          [x](const Table& s) -> std::optional<Rational> {
            const int r = s.radius();
            if (x < -r || x > r) return std::nullopt;
            return s.values[static_cast<std::size_t>(x + r)];
          },
      },
      shape);
}

Rational evaluate_shape(const CostShape& shape, int x) {
  if (auto v = try_evaluate_shape(shape, x)) return *v;
  throw DomainError(shape_name(shape) + " cost undefined at x=" + std::to_string(x));
}

void validate_shape(const CostShape& shape) {
  std::visit(overloaded{
                 [](const ShiftedPower& s) {
                   if (s.exponent < 2 || s.exponent % 2 != 0) {
                     throw InvalidSpec("shifted_power exponent must be even and >= 2, got " +
                                       std::to_string(s.exponent));
                   }
                 },
                 [](const Reciprocal& s) {
                   if (s.a <= 0) throw InvalidSpec("reciprocal parameter a must be positive");
                 },
                 [](const LinearDecreasing&) {},
                 [](const Table& s) {
                   if (s.values.empty() || s.values.size() % 2 == 0) {
                     throw InvalidSpec("table must have an odd number of values centred on 0");
                   }
                 },
             },
             shape);
}

std::string shape_name(const CostShape& shape) {
  return std::visit(overloaded{
                        [](const ShiftedPower&) { return std::string("shifted_power"); },
                        [](const Reciprocal&) { return std::string("reciprocal"); },
                        [](const LinearDecreasing&) { return std::string("linear_decreasing"); },
                        [](const Table&) { return std::string("table"); },
                    },
                    shape);
}

CostFunction::CostFunction(CostShape shape, int shift) : shape_(std::move(shape)), shift_(shift) {
  validate_shape(shape_);
}

CostFunction CostFunction::shifted_power(int exponent, int shift, Rational offset) {
  return CostFunction(ShiftedPower{exponent, std::move(offset)}, shift);
}

CostFunction CostFunction::reciprocal(Rational a) { return CostFunction(Reciprocal{std::move(a)}, 0); }

CostFunction CostFunction::linear_decreasing(Rational gamma) {
  return CostFunction(LinearDecreasing{std::move(gamma)}, 0);
}

CostFunction CostFunction::table(std::vector<Rational> values, int shift) {
  return CostFunction(Table{std::move(values)}, shift);
}

}  // namespace netform
