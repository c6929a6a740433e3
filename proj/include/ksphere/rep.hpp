#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ksphere/gf2.hpp"

namespace ksphere {

// A finite-dimensional real representation of (Z/2)^n: a multiset of
// characters. The zero character (the trivial 1-dimensional summand) is
// allowed here; canonicalization strips it into the sign.
struct RepMultiset {
  int n = 0;
  std::map<F2Vec, int> counts;  // character -> multiplicity >= 1

  RepMultiset() = default;
  explicit RepMultiset(int rank) : n(rank) { check_rank(rank); }

  void add(F2Vec chi, int multiplicity = 1);
  int count(F2Vec chi) const;
  int dimension() const;
  // All summands with multiplicity, sorted ascending. dimension() entries.
  std::vector<F2Vec> summands() const;

  friend bool operator==(const RepMultiset&, const RepMultiset&) = default;
};

RepMultiset rep_from_chars(int n, const std::vector<F2Vec>& chars);

// The complete reduction-invariant state of a representation: the set S of
// nonzero characters of odd multiplicity plus a sign recording desuspensions
// by trivial summands. Contract: chi(original) == sign * chi(S as a
// multiplicity-one representation).
struct CanonicalRep {
  int n = 0;
  std::vector<F2Vec> chars;  // sorted, distinct, nonzero
  int sign = +1;

  RepMultiset as_rep() const;  // multiplicity-one representation of S (sign dropped)

  friend bool operator==(const CanonicalRep&, const CanonicalRep&) = default;
};

CanonicalRep canonicalize(const RepMultiset& rep);

RepMultiset direct_sum(const RepMultiset& a, const RepMultiset& b);

// Restrict every summand to Ker(chi) via the echelon kernel basis; the
// result lives in rank n-1. Characters trivial on the kernel become trivial
// summands. chi need not occur in rep, but must be nonzero.
RepMultiset restrict_to_kernel(const RepMultiset& rep, F2Vec chi);

// Expression grammar: rep := term ('+' term)*; term := [0-9]* factor+ | '1';
// factor := [a-p], with only the first n letters admitted. Whitespace is
// ignored; the empty expression is the zero representation. Within a term a
// repeated letter toggles (characters square to the trivial one).
RepMultiset parse_rep(std::string_view expr, int n);

// Deterministic inverse-ish of parse_rep: terms sorted by character value,
// trivial summands first (printed as repeated "1"). print(parse(e)) parses
// back to an equal RepMultiset.
std::string print_rep(const RepMultiset& rep);

// The seven nonzero products of an independent triple: a, b, c, ab, ac, bc,
// abc. Sorted ascending.
std::vector<F2Vec> octet_chars(F2Vec a, F2Vec b, F2Vec c);

// The full spin octet 1 + a + b + c + ab + ac + bc + abc as a representation.
RepMultiset octet_rep(int n, F2Vec a, F2Vec b, F2Vec c);

}  // namespace ksphere
