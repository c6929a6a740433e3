#include "ksphere/rep.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace ksphere {

void RepMultiset::add(F2Vec chi, int multiplicity) {
  check_width(chi, n);
  if (multiplicity < 0) {
    throw Error("multiplicity must be nonnegative");
  }
  if (multiplicity == 0) return;
  counts[chi] += multiplicity;
}

int RepMultiset::count(F2Vec chi) const {
  auto it = counts.find(chi);
  return it == counts.end() ? 0 : it->second;
}

int RepMultiset::dimension() const {
  int d = 0;
  for (const auto& [chi, k] : counts) d += k;
  return d;
}

std::vector<F2Vec> RepMultiset::summands() const {
  std::vector<F2Vec> out;
  out.reserve(static_cast<std::size_t>(dimension()));
  for (const auto& [chi, k] : counts) {
    for (int i = 0; i < k; ++i) out.push_back(chi);
  }
  return out;
}

RepMultiset rep_from_chars(int n, const std::vector<F2Vec>& chars) {
  RepMultiset rep(n);
  for (F2Vec chi : chars) rep.add(chi);
  return rep;
}

RepMultiset CanonicalRep::as_rep() const {
  return rep_from_chars(n, chars);
}

CanonicalRep canonicalize(const RepMultiset& rep) {
  CanonicalRep out;
  out.n = rep.n;
  out.sign = +1;
  for (const auto& [chi, k] : rep.counts) {
    if (chi.zero()) {
      if (k % 2 != 0) out.sign = -out.sign;
    } else if (k % 2 != 0) {
      out.chars.push_back(chi);
    }
  }
  return out;  // map iteration is ascending, so chars are already sorted
}

RepMultiset direct_sum(const RepMultiset& a, const RepMultiset& b) {
  if (a.n != b.n) {
    throw Error("direct_sum: rank mismatch (" + std::to_string(a.n) + " vs " +
                std::to_string(b.n) + ")");
  }
  RepMultiset out = a;
  for (const auto& [chi, k] : b.counts) out.add(chi, k);
  return out;
}

RepMultiset restrict_to_kernel(const RepMultiset& rep, F2Vec chi) {
  check_width(chi, rep.n);
  if (chi.zero()) {
    throw Error("restrict_to_kernel: character must be nonzero");
  }
  std::vector<F2Vec> kernel = kernel_basis(chi, rep.n);
  RepMultiset out(rep.n - 1);
  for (const auto& [mu, k] : rep.counts) {
    out.add(restrict_char(mu, kernel), k);
  }
  return out;
}

namespace {

struct RepParser {
  std::string_view expr;
  int n;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < expr.size() && std::isspace(static_cast<unsigned char>(expr[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos == expr.size();
  }

  // term := [0-9]* factor+ | '1'
  void parse_term(RepMultiset& rep) {
    skip_ws();
    std::size_t term_start = pos;
    long multiplicity = -1;  // -1 = no prefix
    std::size_t digit_start = pos;
    while (pos < expr.size() && std::isdigit(static_cast<unsigned char>(expr[pos]))) ++pos;
    if (pos > digit_start) {
      std::string digits(expr.substr(digit_start, pos - digit_start));
      // A lone "1" is the trivial character, not a multiplicity.
      if (digits == "1" &&
          (pos == expr.size() || expr[pos] < 'a' || expr[pos] > 'p')) {
        rep.add(F2Vec(0));
        return;
      }
      if (digits.size() > 6) {
        throw ParseError(digit_start, "multiplicity too large");
      }
      multiplicity = std::stol(digits);
    }
    F2Vec chi;
    bool any_factor = false;
    while (pos < expr.size() && expr[pos] >= 'a' && expr[pos] <= 'p') {
      int g = expr[pos] - 'a';
      if (g >= n) {
        throw ParseError(pos, std::string("unknown generator letter '") + expr[pos] +
                                  "' for rank " + std::to_string(n));
      }
      chi ^= F2Vec(static_cast<std::uint16_t>(1u << g));
      ++pos;
      any_factor = true;
    }
    if (!any_factor) {
      throw ParseError(term_start, multiplicity >= 0 ? "multiplicity without a term"
                                                     : "empty term");
    }
    rep.add(chi, multiplicity < 0 ? 1 : static_cast<int>(multiplicity));
  }

  RepMultiset parse() {
    RepMultiset rep(n);
    if (at_end()) return rep;  // empty expression = zero representation
    parse_term(rep);
    while (!at_end()) {
      if (expr[pos] != '+') {
        throw ParseError(pos, "expected '+' between terms");
      }
      ++pos;
      if (at_end()) {
        throw ParseError(pos, "empty term");
      }
      parse_term(rep);
    }
    return rep;
  }
};

std::string term_letters(F2Vec chi) {
  std::string s;
  for (int i = 0; i < kMaxRank; ++i) {
    if (chi.test(i)) s.push_back(static_cast<char>('a' + i));
  }
  return s;
}

}  // namespace

RepMultiset parse_rep(std::string_view expr, int n) {
  check_rank(n);
  RepParser p{expr, n};
  return p.parse();
}

std::string print_rep(const RepMultiset& rep) {
  std::string out;
  auto append = [&out](const std::string& term) {
    if (!out.empty()) out += "+";
    out += term;
  };
  for (const auto& [chi, k] : rep.counts) {
    if (k == 0) continue;
    if (chi.zero()) {
      // "21" would lex as a multiplicity, so trivial summands are repeated.
      for (int i = 0; i < k; ++i) append("1");
    } else if (k == 1) {
      append(term_letters(chi));
    } else {
      append(std::to_string(k) + term_letters(chi));
    }
  }
  return out;
}

std::vector<F2Vec> octet_chars(F2Vec a, F2Vec b, F2Vec c) {
  std::array<F2Vec, 3> t{a, b, c};
  if (rank(t, kMaxRank) != 3) {
    throw Error("octet requires an independent triple");
  }
  std::vector<F2Vec> out{a, b, c, a ^ b, a ^ c, b ^ c, a ^ b ^ c};
  std::sort(out.begin(), out.end());
  return out;
}

RepMultiset octet_rep(int n, F2Vec a, F2Vec b, F2Vec c) {
  RepMultiset rep(n);
  rep.add(F2Vec(0));
  for (F2Vec chi : octet_chars(a, b, c)) rep.add(chi);
  return rep;
}

}  // namespace ksphere
