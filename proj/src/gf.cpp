#include "signhom/gf.hpp"

#include <stdexcept>

namespace signhom {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int smallest_nonresidue(int p) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("smallest_nonresidue: p must be an odd prime");
  for (int n = 2; n < p; ++n) {
    bool square = false;
    for (int y = 1; y < p && !square; ++y) square = (y * y) % p == n;
    if (!square) return n;
  }
  throw std::logic_error("no quadratic non-residue found");
}

FieldSpec make_field_spec(int p, int k, int nonresidue) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("field characteristic must be an odd prime");
  if (k != 1 && k != 2) throw std::invalid_argument("only GF(p) and GF(p^2) are supported");
  FieldSpec spec{p, k, k == 2 ? nonresidue : 0};
  if (spec.order() % 4 != 1) throw std::invalid_argument("field order must be 1 mod 4");
  if (k == 2) {
    if (nonresidue <= 0 || nonresidue >= p) throw std::invalid_argument("non-residue out of range");
    for (int y = 1; y < p; ++y)
      if ((y * y) % p == nonresidue) throw std::invalid_argument("x^2 - nonresidue is reducible");
  }
  return spec;
}

FieldSpec make_field_spec(int q) {
  if (q > 2 && is_prime(q)) return make_field_spec(q, 1, 0);
  for (int p = 3; p * p <= q; p += 2) {
    if (p * p == q && is_prime(p)) return make_field_spec(p, 2, smallest_nonresidue(p));
  }
  throw std::invalid_argument("unsupported field order " + std::to_string(q));
}

Field::Field(FieldSpec spec) : spec_(make_field_spec(spec.p, spec.k, spec.nonresidue)) {
  // Euler's criterion: x^((q-1)/2) is 1 exactly on the non-zero squares.
  const int q = order();
  square_table_.assign(q, 0);
  for (int i = 1; i < q; ++i) {
    const FieldElem r = pow(element(i), (q - 1) / 2);
    square_table_[i] = r == one() ? 1 : -1;
  }
}

int Field::reduce(long long v) const {
  const long long r = v % spec_.p;
  return static_cast<int>(r < 0 ? r + spec_.p : r);
}

void Field::check(FieldElem x) const {
  if (!contains(x)) throw std::invalid_argument("element outside the field");
}

bool Field::contains(FieldElem x) const {
  return x.a >= 0 && x.a < spec_.p && x.b >= 0 && x.b < spec_.p && (spec_.k == 2 || x.b == 0);
}

FieldElem Field::from_int(long long v) const { return {reduce(v), 0}; }

FieldElem Field::add(FieldElem x, FieldElem y) const { return {reduce(x.a + y.a), reduce(x.b + y.b)}; }

FieldElem Field::sub(FieldElem x, FieldElem y) const { return {reduce(x.a - y.a), reduce(x.b - y.b)}; }

FieldElem Field::neg(FieldElem x) const { return {reduce(-x.a), reduce(-x.b)}; }

FieldElem Field::mul(FieldElem x, FieldElem y) const {
  // (a + b s)(c + d s) with s^2 = nonresidue.
  const long long a = x.a, b = x.b, c = y.a, d = y.b;
  return {reduce(a * c + spec_.nonresidue * b * d), reduce(a * d + b * c)};
}

FieldElem Field::pow(FieldElem x, long long e) const {
  if (e < 0) return pow(inv(x), -e);
  FieldElem result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, x);
    x = mul(x, x);
    e >>= 1;
  }
  return result;
}

FieldElem Field::inv(FieldElem x) const {
  check(x);
  if (x == zero()) throw std::domain_error("inverse of zero");
  return pow(x, order() - 2);
}

FieldElem Field::frobenius(FieldElem x) const { return {x.a, reduce(-static_cast<long long>(x.b))}; }

FieldElem Field::apply(GfOp op, FieldElem x, std::optional<FieldElem> y) const {
  check(x);
  auto rhs = [&]() {
    if (!y) throw std::invalid_argument("binary field operation needs two operands");
    check(*y);
    return *y;
  };
  switch (op) {
    case GfOp::add: return add(x, rhs());
    case GfOp::sub: return sub(x, rhs());
    case GfOp::mul: return mul(x, rhs());
    case GfOp::neg: return neg(x);
    case GfOp::inv: return inv(x);
  }
  throw std::invalid_argument("unknown field operation");
}

int Field::square_sign(FieldElem x) const {
  check(x);
  if (x == zero()) throw std::domain_error("square_sign is undefined at zero");
  return square_table_[index(x)];
}

bool Field::is_nonzero_square(FieldElem x) const {
  return x != zero() && square_table_[index(x)] == 1;
}

int Field::multiplicative_order(FieldElem x) const {
  check(x);
  if (x == zero()) throw std::domain_error("zero has no multiplicative order");
  int k = 1;
  for (FieldElem y = x; y != one(); y = mul(y, x)) ++k;
  return k;
}

FieldElem Field::generator() const {
  // Enumerate in (a, b) lexicographic order.
  for (int a = 0; a < spec_.p; ++a)
    for (int b = 0; b < (spec_.k == 2 ? spec_.p : 1); ++b) {
      const FieldElem x{a, b};
      if (x != zero() && multiplicative_order(x) == order() - 1) return x;
    }
  throw std::logic_error("field without generator");
}

FieldElem Field::element(int index) const {
  if (index < 0 || index >= order()) throw std::invalid_argument("field index out of range");
  return {index % spec_.p, index / spec_.p};
}

std::vector<FieldElem> Field::elements() const {
  std::vector<FieldElem> out;
  out.reserve(order());
  for (int i = 0; i < order(); ++i) out.push_back(element(i));
  return out;
}

std::string Field::name(FieldElem x) const {
  check(x);
  if (x.b == 0) return std::to_string(x.a);
  const std::string root = "√" + std::to_string(spec_.nonresidue);
  std::string s = x.a == 0 ? "" : std::to_string(x.a) + "+";
  if (x.b != 1) s += std::to_string(x.b);
  return s + root;
}

}  // namespace signhom
