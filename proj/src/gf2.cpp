#include "ksphere/gf2.hpp"

#include <algorithm>
#include <array>

namespace ksphere {

void check_rank(int n) {
  if (n < 0 || n > kMaxRank) {
    throw SizeGuardError("rank must be between 0 and 16, got " + std::to_string(n));
  }
}

void check_width(F2Vec v, int n) {
  check_rank(n);
  if (n < kMaxRank && (v.bits >> n) != 0) {
    throw SizeGuardError("vector " + to_hex(v) + " has bits at or above width " +
                         std::to_string(n));
  }
}

std::string to_bit_string(F2Vec v, int n) {
  check_width(v, n);
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if (v.test(i)) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

F2Vec from_bit_string(const std::string& s) {
  if (s.size() > static_cast<std::size_t>(kMaxRank)) {
    throw SizeGuardError("bit string longer than 16");
  }
  F2Vec v;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1') {
      v.bits |= static_cast<std::uint16_t>(1u << i);
    } else if (s[i] != '0') {
      throw ParseError(i, "bit string must contain only 0 and 1");
    }
  }
  return v;
}

std::string to_hex(F2Vec v) {
  static const char* digits = "0123456789abcdef";
  if (v.bits == 0) return "0";
  std::string s;
  for (std::uint16_t b = v.bits; b != 0; b >>= 4) {
    s.insert(s.begin(), digits[b & 0xf]);
  }
  return s;
}

F2Vec from_hex(const std::string& s) {
  if (s.empty() || s.size() > 4) {
    throw ParseError(0, "hex vector must have 1 to 4 digits");
  }
  std::uint32_t v = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    std::uint32_t d;
    if (c >= '0' && c <= '9') {
      d = static_cast<std::uint32_t>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      d = static_cast<std::uint32_t>(c - 'a' + 10);
    } else {
      throw ParseError(i, "bad hex digit in vector");
    }
    v = (v << 4) | d;
  }
  return F2Vec(static_cast<std::uint16_t>(v));
}

F2Matrix F2Matrix::identity(int n) {
  check_rank(n);
  F2Matrix a;
  a.n = n;
  a.rows.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    a.rows.emplace_back(static_cast<std::uint16_t>(1u << i));
  }
  return a;
}

bool F2Matrix::invertible() const {
  if (static_cast<int>(rows.size()) != n) return false;
  return rank(rows, n) == n;
}

F2Vec F2Matrix::apply(F2Vec g) const {
  F2Vec out;
  for (int i = 0; i < n; ++i) {
    if (g.test(i)) out ^= rows[static_cast<std::size_t>(i)];
  }
  return out;
}

namespace {

// Echelon rows with distinct pivots (highest set bit). Reduction happens
// only when the incoming vector's pivot collides with an existing row, so
// inserted rows keep the order in which they arrived.
struct Echelon {
  std::array<F2Vec, kMaxRank> by_pivot{};  // zero = no row with that pivot
  std::vector<F2Vec> rows;                 // in insertion order

  // Returns the reduced residual, zero if dependent; inserts otherwise.
  F2Vec insert(F2Vec v) {
    while (!v.zero()) {
      int p = top_bit(v);
      F2Vec row = by_pivot[static_cast<std::size_t>(p)];
      if (row.zero()) {
        by_pivot[static_cast<std::size_t>(p)] = v;
        rows.push_back(v);
        return v;
      }
      v ^= row;
    }
    return v;
  }

  // Reduce without inserting; zero result means v was in the span.
  F2Vec residual(F2Vec v) const {
    while (!v.zero()) {
      F2Vec row = by_pivot[static_cast<std::size_t>(top_bit(v))];
      if (row.zero()) break;
      v ^= row;
    }
    return v;
  }
};

}  // namespace

int rank(std::span<const F2Vec> vectors, int n) {
  check_rank(n);
  Echelon e;
  for (F2Vec v : vectors) {
    check_width(v, n);
    e.insert(v);
  }
  return static_cast<int>(e.rows.size());
}

std::vector<F2Vec> span_basis(std::span<const F2Vec> vectors, int n) {
  check_rank(n);
  Echelon e;
  for (F2Vec v : vectors) {
    check_width(v, n);
    e.insert(v);
  }
  return e.rows;
}

std::vector<F2Vec> kernel_basis(F2Vec chi, int n) {
  check_width(chi, n);
  if (chi.zero()) {
    throw Error("kernel_basis: character must be nonzero");
  }
  // Pivot on the lowest set bit h of chi; then e_i (or e_i + e_h when chi has
  // bit i) for i != h are echelon with distinct highest set bits.
  int h = std::countr_zero(chi.bits);
  std::vector<F2Vec> out;
  out.reserve(static_cast<std::size_t>(n - 1));
  for (int i = 0; i < n; ++i) {
    if (i == h) continue;
    F2Vec v(static_cast<std::uint16_t>(1u << i));
    if (chi.test(i)) v ^= F2Vec(static_cast<std::uint16_t>(1u << h));
    out.push_back(v);
  }
  return out;
}

F2Vec restrict_char(F2Vec chi, std::span<const F2Vec> kernel) {
  F2Vec out;
  for (std::size_t j = 0; j < kernel.size(); ++j) {
    if (pairing(chi, kernel[j])) out.bits |= static_cast<std::uint16_t>(1u << j);
  }
  return out;
}

F2Vec apply_dual_map(const F2Matrix& a, F2Vec chi) {
  if (!a.invertible()) {
    throw Error("apply_dual_map: matrix is not invertible");
  }
  F2Vec out;
  for (int i = 0; i < a.n; ++i) {
    if (pairing(chi, a.rows[static_cast<std::size_t>(i)])) {
      out.bits |= static_cast<std::uint16_t>(1u << i);
    }
  }
  return out;
}

F2Matrix inverse(const F2Matrix& a) {
  if (!a.invertible()) {
    throw Error("inverse: matrix is not invertible");
  }
  int n = a.n;
  // Gauss-Jordan on [A | I], rows tracked as (vector, combination).
  std::vector<F2Vec> m = a.rows;
  std::vector<F2Vec> c;
  for (int i = 0; i < n; ++i) c.emplace_back(static_cast<std::uint16_t>(1u << i));
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r) {
      if (m[static_cast<std::size_t>(r)].test(col)) {
        piv = r;
        break;
      }
    }
    std::swap(m[static_cast<std::size_t>(piv)], m[static_cast<std::size_t>(col)]);
    std::swap(c[static_cast<std::size_t>(piv)], c[static_cast<std::size_t>(col)]);
    for (int r = 0; r < n; ++r) {
      if (r != col && m[static_cast<std::size_t>(r)].test(col)) {
        m[static_cast<std::size_t>(r)] ^= m[static_cast<std::size_t>(col)];
        c[static_cast<std::size_t>(r)] ^= c[static_cast<std::size_t>(col)];
      }
    }
  }
  F2Matrix inv;
  inv.n = n;
  inv.rows = std::move(c);
  return inv;
}

std::uint32_t coordinates_in_basis(F2Vec chi, std::span<const F2Vec> basis) {
  // Echelonize the basis while tracking each reduced row's expression in the
  // original vectors; then peel chi down and collect the masks it used.
  struct Tracked {
    F2Vec v;
    std::uint32_t mask;
  };
  std::array<Tracked, kMaxRank> by_pivot{};
  for (std::size_t i = 0; i < basis.size(); ++i) {
    F2Vec v = basis[i];
    std::uint32_t mask = 1u << i;
    while (!v.zero()) {
      auto& slot = by_pivot[static_cast<std::size_t>(top_bit(v))];
      if (slot.v.zero()) {
        slot = {v, mask};
        break;
      }
      v ^= slot.v;
      mask ^= slot.mask;
    }
    if (v.zero()) {
      throw Error("coordinates_in_basis: basis vectors are dependent");
    }
  }
  F2Vec r = chi;
  std::uint32_t out = 0;
  while (!r.zero()) {
    const auto& slot = by_pivot[static_cast<std::size_t>(top_bit(r))];
    if (slot.v.zero()) {
      throw Error("coordinates_in_basis: vector " + to_hex(chi) + " is outside the span");
    }
    r ^= slot.v;
    out ^= slot.mask;
  }
  return out;
}

}  // namespace ksphere
