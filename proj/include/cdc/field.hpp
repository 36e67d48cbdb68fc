#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace cdc {

/// A field element, encoded as an integer in [0, q).
///
/// For a field constructed directly over its prime subfield, the value is the
/// coefficient vector of the element over GF(p) read in base p, little-endian.
/// For an extension of a base field GF(q0), the value is the coefficient
/// vector over GF(q0) read in base q0, little-endian, where each digit is
/// itself a base-field element value.
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Immutable description of a finite field GF(p^e) together with exact
/// arithmetic on its elements.  All operations are pure; a Field may be
/// shared freely between threads.
///
/// The modulus is the lexicographically smallest monic irreducible polynomial
/// of the required degree, with coefficients compared low-degree-first.  This
/// choice is deterministic across runs and is part of the on-disk code file
/// format.
class Field {
 public:
  /// Largest supported field order.
  static constexpr std::uint32_t kMaxOrder = 1u << 20;

  /// GF(p^e) built over the prime field GF(p).
  static FieldPtr make(std::uint32_t p, std::uint32_t e = 1);

  /// GF(q^m) built as a degree-m extension of an existing field GF(q).
  static FieldPtr extension(FieldPtr base, std::uint32_t m);

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }  ///< degree over GF(p)
  std::uint32_t q() const { return q_; }  ///< field order p^e

  /// Extension degree over base() (equals e() for prime-built fields).
  std::uint32_t degree() const { return deg_; }
  /// Order of the field the element digits live in (p, or base()->q()).
  std::uint32_t subfield_order() const { return sub_q_; }
  /// Base field for extensions; null when built directly over GF(p).
  const FieldPtr& base() const { return base_; }
  /// Monic modulus over the subfield, little-endian, length degree()+1.
  const std::vector<Elem>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;  ///< throws ParameterError on 0
  Elem pow(Elem a, std::uint64_t n) const;

  /// a^(s^i) where s = subfield_order(); the i-th Frobenius power.
  Elem frobenius(Elem a, std::uint32_t i) const;

  /// Coefficient of x^i in the representation over the subfield.
  Elem digit(Elem a, std::uint32_t i) const;
  std::vector<Elem> digits(Elem a) const;  ///< length degree()
  Elem from_digits(const std::vector<Elem>& c) const;

  bool operator==(const Field& other) const;

 private:
  Field() = default;

  Elem mul_nolut(Elem a, Elem b) const;
  Elem pow_nolut(Elem a, std::uint64_t n) const;
  void build_tables();

  // subfield digit arithmetic
  Elem sub_add(Elem a, Elem b) const;
  Elem sub_neg(Elem a) const;
  Elem sub_mul(Elem a, Elem b) const;

  std::uint32_t p_ = 0, e_ = 0, q_ = 0, deg_ = 0, sub_q_ = 0;
  FieldPtr base_;              // null for prime-built fields
  std::vector<Elem> modulus_;  // over subfield, little-endian, monic
  std::vector<Elem> exp_, log_;  // discrete log tables, empty for large q
};

/// Decomposes a prime power q = p^e; throws ParameterError otherwise.
std::pair<std::uint32_t, std::uint32_t> prime_power_decompose(std::uint32_t q);

bool is_prime(std::uint32_t n);
bool is_prime_power(std::uint32_t n);

}  // namespace cdc
