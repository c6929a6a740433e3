#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ksphere/errors.hpp"

namespace ksphere {

// Vectors live in F2^n with n <= 16, so one machine word holds everything.
inline constexpr int kMaxRank = 16;

// A vector over F2: a group element of (Z/2)^n or a character, depending on
// which side of the pairing it sits. Bit i is the coefficient of the i-th
// standard generator.
struct F2Vec {
  std::uint16_t bits = 0;

  constexpr F2Vec() = default;
  constexpr explicit F2Vec(std::uint16_t b) : bits(b) {}

  constexpr bool zero() const { return bits == 0; }
  constexpr bool test(int i) const { return (bits >> i) & 1u; }
  constexpr int weight() const { return std::popcount(bits); }

  friend constexpr F2Vec operator^(F2Vec a, F2Vec b) {
    return F2Vec(static_cast<std::uint16_t>(a.bits ^ b.bits));
  }
  constexpr F2Vec& operator^=(F2Vec o) {
    bits ^= o.bits;
    return *this;
  }
  friend constexpr auto operator<=>(F2Vec a, F2Vec b) { return a.bits <=> b.bits; }
  friend constexpr bool operator==(F2Vec a, F2Vec b) { return a.bits == b.bits; }
};

// <chi, g>: parity of the bitwise AND. 0 means chi acts trivially on g.
constexpr int pairing(F2Vec chi, F2Vec g) {
  return std::popcount(static_cast<std::uint16_t>(chi.bits & g.bits)) & 1;
}

// Position of the highest set bit; -1 for the zero vector.
constexpr int top_bit(F2Vec v) {
  return v.bits == 0 ? -1 : 15 - std::countl_zero(static_cast<std::uint16_t>(v.bits));
}

void check_rank(int n);                 // throws SizeGuardError unless 0 <= n <= 16
void check_width(F2Vec v, int n);       // throws SizeGuardError if v has bits at or above n

// "110" style: character of generator i at string index i.
std::string to_bit_string(F2Vec v, int n);
F2Vec from_bit_string(const std::string& s);

// Lowercase hex without prefix, as used in traces and tables.
std::string to_hex(F2Vec v);
F2Vec from_hex(const std::string& s);

// Square matrix over F2; rows[i] is the image of basis vector i.
struct F2Matrix {
  int n = 0;
  std::vector<F2Vec> rows;

  static F2Matrix identity(int n);
  bool invertible() const;
  // Matrix applied to a group element (XOR of rows selected by g's bits).
  F2Vec apply(F2Vec g) const;

  friend bool operator==(const F2Matrix&, const F2Matrix&) = default;
};

// Dimension of the span; 0 for empty input.
int rank(std::span<const F2Vec> vectors, int n);

// Forward-echelon basis of the span. Input is processed in the given order;
// an incoming vector is reduced only against rows whose pivot (highest set
// bit) collides with its own, so surviving vectors keep their encounter
// order. Deterministic for a fixed input order.
std::vector<F2Vec> span_basis(std::span<const F2Vec> vectors, int n);

// n-1 independent group elements pairing to zero with chi, in echelon form.
// chi == 0 is an error: the kernel would be the whole group.
std::vector<F2Vec> kernel_basis(F2Vec chi, int n);

// Restriction of chi to the subgroup spanned by `kernel` (typically the
// output of kernel_basis): bit j of the result is <chi, kernel[j]>.
F2Vec restrict_char(F2Vec chi, std::span<const F2Vec> kernel);

// The character g |-> chi(A*g) of the composite representation. Requires A
// invertible so that the induced map on characters is a bijection.
F2Vec apply_dual_map(const F2Matrix& a, F2Vec chi);

F2Matrix inverse(const F2Matrix& a);

// The unique subset T of basis indices with chi = sum of basis[t], t in T,
// returned as a bitmask. Requires the basis vectors independent; throws if
// chi is outside the span.
std::uint32_t coordinates_in_basis(F2Vec chi, std::span<const F2Vec> basis);

}  // namespace ksphere
