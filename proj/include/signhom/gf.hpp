#pragma once

// Arithmetic in GF(p) and GF(p^2) = Z_p[sqrt(n)], with quadratic character.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace signhom {

struct FieldSpec {
  int p = 0;
  int k = 1;
  /// Element of GF(p) adjoined as a square root when k == 2; 0 when k == 1.
  int nonresidue = 0;

  int order() const { return k == 1 ? p : p * p; }
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// An element a + b*sqrt(nonresidue); b is always 0 in a prime field.
struct FieldElem {
  int a = 0;
  int b = 0;

  friend auto operator<=>(const FieldElem&, const FieldElem&) = default;
};

enum class GfOp { add, sub, mul, neg, inv };

bool is_prime(int n);

/// Smallest quadratic non-residue modulo the odd prime p.
int smallest_nonresidue(int p);

/// Builds the spec of GF(q). Throws std::invalid_argument unless q = p or
/// q = p^2 for an odd prime p and q = 1 (mod 4).
FieldSpec make_field_spec(int q);

/// Validates p, k and nonresidue; throws std::invalid_argument on violation.
FieldSpec make_field_spec(int p, int k, int nonresidue);

class Field {
 public:
  explicit Field(FieldSpec spec);
  explicit Field(int q) : Field(make_field_spec(q)) {}

  const FieldSpec& spec() const { return spec_; }
  int order() const { return spec_.order(); }
  int characteristic() const { return spec_.p; }

  FieldElem zero() const { return {0, 0}; }
  FieldElem one() const { return {1, 0}; }
  FieldElem from_int(long long v) const;

  FieldElem add(FieldElem x, FieldElem y) const;
  FieldElem sub(FieldElem x, FieldElem y) const;
  FieldElem mul(FieldElem x, FieldElem y) const;
  FieldElem neg(FieldElem x) const;
  /// Throws std::domain_error for x == 0.
  FieldElem inv(FieldElem x) const;
  FieldElem pow(FieldElem x, long long e) const;
  /// x -> x^p; the identity on GF(p), conjugation b -> -b on GF(p^2).
  FieldElem frobenius(FieldElem x) const;

  /// Dispatches on op; y is required for the binary operations.
  FieldElem apply(GfOp op, FieldElem x, std::optional<FieldElem> y = {}) const;

  /// +1 if x is a non-zero square, -1 otherwise. Throws std::domain_error
  /// for x == 0, where the quadratic character is undefined.
  int square_sign(FieldElem x) const;
  /// Same as square_sign(x) == 1 but answers false for zero.
  bool is_nonzero_square(FieldElem x) const;

  /// Multiplicative order of a non-zero element.
  int multiplicative_order(FieldElem x) const;
  /// Smallest element in (a, b) lexicographic order generating F_q^*.
  FieldElem generator() const;

  /// Vertex index a + p*b.
  int index(FieldElem x) const { return x.a + spec_.p * x.b; }
  FieldElem element(int index) const;
  std::vector<FieldElem> elements() const;
  bool contains(FieldElem x) const;

  /// Name in the a+b√n convention, e.g. "1+2√2", "3√2", "4".
  std::string name(FieldElem x) const;

 private:
  int reduce(long long v) const;
  void check(FieldElem x) const;

  FieldSpec spec_;
  std::vector<std::int8_t> square_table_;
};

}  // namespace signhom
