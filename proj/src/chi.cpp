#include "ksphere/chi.hpp"

#include <algorithm>
#include <bit>

namespace ksphere {

std::int64_t chi_of(KResult r) {
  std::int64_t magnitude = std::int64_t{1} << r.m;
  return r.epsilon ? -magnitude : magnitude;
}

KResult k_result_from_chi(Chi c, int n) {
  check_rank(n);
  std::int64_t v = c.value;
  if (v == 0) {
    throw NonPowerOfTwoError("chi is zero; the groups cannot be concentrated");
  }
  std::uint64_t mag = static_cast<std::uint64_t>(v < 0 ? -v : v);
  if (!std::has_single_bit(mag)) {
    throw NonPowerOfTwoError("|chi| = " + std::to_string(mag) + " is not a power of two");
  }
  int m = std::countr_zero(mag);
  if (m > n) {
    throw NonPowerOfTwoError("|chi| = 2^" + std::to_string(m) + " exceeds 2^n for n = " +
                             std::to_string(n));
  }
  return KResult{m, v < 0 ? 1 : 0};
}

std::size_t ChiEngine::KeyHash::operator()(const std::vector<std::uint32_t>& k) const {
  // FNV-1a over the words; keys are short (rank + at most dim entries).
  std::size_t h = 1469598103934665603ull;
  for (std::uint32_t w : k) {
    h ^= w;
    h *= 1099511628211ull;
  }
  return h;
}

std::int64_t ChiEngine::checked(int n, std::int64_t v) const {
  std::int64_t bound = std::int64_t{1} << n;
  if (v == 0 || v < -bound || v > bound) {
    throw NonPowerOfTwoError("chi recursion produced out-of-range value " +
                             std::to_string(v) + " at rank " + std::to_string(n));
  }
  return v;
}

namespace {

std::vector<std::uint32_t> make_key(int n, const std::vector<F2Vec>& chars) {
  std::vector<std::uint32_t> key;
  key.reserve(chars.size() + 1);
  key.push_back(static_cast<std::uint32_t>(n) | 0x10000u);
  for (F2Vec c : chars) key.push_back(c.bits);
  return key;
}

// Fold a restriction into (parity of trivial summands, odd-multiplicity set).
struct Stripped {
  int sign = +1;
  std::vector<F2Vec> chars;  // sorted, distinct, nonzero
};

Stripped strip(const std::vector<F2Vec>& summands) {
  Stripped out;
  std::vector<F2Vec> sorted = summands;
  std::sort(sorted.begin(), sorted.end());
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    if ((j - i) % 2 != 0) {
      if (sorted[i].zero()) {
        out.sign = -out.sign;
      } else {
        out.chars.push_back(sorted[i]);
      }
    }
    i = j;
  }
  return out;
}

}  // namespace

std::int64_t ChiEngine::chi_stripped(int n, std::vector<F2Vec> s) {
  if (s.empty()) return std::int64_t{1} << n;
  std::vector<std::uint32_t> key;
  if (options_.memoize) {
    key = make_key(n, s);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  F2Vec pivot = s.back();
  s.pop_back();
  std::int64_t whole = chi_stripped(n, s);

  std::vector<F2Vec> kernel = kernel_basis(pivot, n);
  std::vector<F2Vec> restricted;
  restricted.reserve(s.size());
  for (F2Vec c : s) restricted.push_back(restrict_char(c, kernel));
  Stripped folded = strip(restricted);
  std::int64_t sub = folded.sign * chi_stripped(n - 1, std::move(folded.chars));

  std::int64_t v = checked(n, whole - sub);
  if (options_.memoize) memo_.emplace(std::move(key), v);
  return v;
}

std::int64_t ChiEngine::chi_multiset(int n, std::vector<F2Vec> sorted) {
  if (sorted.empty()) return std::int64_t{1} << n;
  std::vector<std::uint32_t> key;
  if (options_.memoize) {
    key = make_key(n, sorted);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  std::int64_t v;
  if (sorted.front().zero()) {
    // One trivial summand suspends: degree shift flips the sign.
    std::vector<F2Vec> rest(sorted.begin() + 1, sorted.end());
    v = checked(n, -chi_multiset(n, std::move(rest)));
  } else {
    F2Vec pivot = sorted.back();
    std::vector<F2Vec> w(sorted.begin(), sorted.end() - 1);
    std::int64_t whole = chi_multiset(n, w);
    std::vector<F2Vec> kernel = kernel_basis(pivot, n);
    std::vector<F2Vec> restricted;
    restricted.reserve(w.size());
    for (F2Vec c : w) restricted.push_back(restrict_char(c, kernel));
    std::sort(restricted.begin(), restricted.end());
    std::int64_t sub = chi_multiset(n - 1, std::move(restricted));
    v = checked(n, whole - sub);
  }
  if (options_.memoize) memo_.emplace(std::move(key), v);
  return v;
}

Chi ChiEngine::chi(const RepMultiset& rep) {
  if (options_.strip_pairs) {
    Stripped folded = strip(rep.summands());
    return Chi{folded.sign * chi_stripped(rep.n, std::move(folded.chars))};
  }
  std::vector<F2Vec> sorted = rep.summands();  // already ascending
  return Chi{chi_multiset(rep.n, std::move(sorted))};
}

Chi ChiEngine::chi_set(int n, std::span<const F2Vec> chars) {
  check_rank(n);
  std::vector<F2Vec> s(chars.begin(), chars.end());
  for (F2Vec c : s) check_width(c, n);
  if (options_.strip_pairs) {
    Stripped folded = strip(s);
    return Chi{folded.sign * chi_stripped(n, std::move(folded.chars))};
  }
  std::sort(s.begin(), s.end());
  return Chi{chi_multiset(n, std::move(s))};
}

KResult ChiEngine::k_groups(const RepMultiset& rep) {
  return k_result_from_chi(chi(rep), rep.n);
}

KResult ChiEngine::k_groups_set(int n, std::span<const F2Vec> chars) {
  return k_result_from_chi(chi_set(n, chars), n);
}

namespace {

// Order-faithful recursion: pivot on the last summand of the given order.
// No memo, no folding; this is the reference path behind property P7.
std::int64_t chi_ordered(int n, std::vector<F2Vec> order) {
  if (order.empty()) return std::int64_t{1} << n;
  F2Vec pivot = order.back();
  order.pop_back();
  if (pivot.zero()) {
    return -chi_ordered(n, std::move(order));
  }
  std::int64_t whole = chi_ordered(n, order);
  std::vector<F2Vec> kernel = kernel_basis(pivot, n);
  for (F2Vec& c : order) c = restrict_char(c, kernel);
  return whole - chi_ordered(n - 1, std::move(order));
}

}  // namespace

std::vector<Chi> chi_all_orders(const RepMultiset& rep, std::size_t max_orders) {
  std::vector<F2Vec> summands = rep.summands();
  if (summands.size() > 8) {
    throw SizeGuardError("chi_all_orders: more than 8 summands");
  }
  std::vector<Chi> out;
  std::sort(summands.begin(), summands.end());
  do {
    if (out.size() >= max_orders) {
      throw SizeGuardError("chi_all_orders: order cap exceeded");
    }
    out.push_back(Chi{chi_ordered(rep.n, summands)});
  } while (std::next_permutation(summands.begin(), summands.end()));
  return out;
}

}  // namespace ksphere
