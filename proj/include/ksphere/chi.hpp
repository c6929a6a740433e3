#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "ksphere/rep.hpp"

namespace ksphere {

// The K-theory Euler characteristic rank K^0 - rank K^1. Exact and signed;
// never zero for a valid representation.
struct Chi {
  std::int64_t value = 0;
  friend bool operator==(Chi, Chi) = default;
};

// The concentration invariants: groups are Z^(2^m) in degrees of parity
// epsilon and zero otherwise, so chi = (-1)^epsilon * 2^m.
struct KResult {
  int m = 0;
  int epsilon = 0;
  friend bool operator==(KResult, KResult) = default;
};

std::int64_t chi_of(KResult r);

// chi -> (m, epsilon). Throws NonPowerOfTwoError when |chi| is zero, not a
// power of two, or exceeds 2^n: any of these means a bug or a genuine
// violation of the concentration theorem, and must never be rounded over.
KResult k_result_from_chi(Chi c, int n);

struct ChiOptions {
  // Cache results keyed on (rank, character list).
  bool memoize = true;
  // Fold multiplicities before recursing: trivial summands flip the sign,
  // doubled characters cancel. Guarded by properties P1/P2 in the test
  // suite; results are bit-identical with this off.
  bool strip_pairs = true;
};

// Ground-truth engine: chi by recursion over the restriction cofiber
// sequence, with a deterministic pivot (largest character first).
//
//   chi(n, empty)            = 2^n
//   chi(n, rep + trivial)    = -chi(n, rep)
//   chi(n, W + chi0)         = chi(n, W) - chi(n-1, W restricted to Ker chi0)
//
// Values are exact integers bounded by 2^n; every return is range-checked.
// Not thread-safe: instantiate one engine per worker.
class ChiEngine {
 public:
  explicit ChiEngine(ChiOptions options = {}) : options_(options) {}

  Chi chi(const RepMultiset& rep);
  Chi chi_set(int n, std::span<const F2Vec> chars);  // multiplicity-one, sorted or not
  KResult k_groups(const RepMultiset& rep);
  KResult k_groups_set(int n, std::span<const F2Vec> chars);

  void clear_cache() { memo_.clear(); }
  std::size_t cache_size() const { return memo_.size(); }

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& k) const;
  };

  std::int64_t chi_multiset(int n, std::vector<F2Vec> sorted);
  std::int64_t chi_stripped(int n, std::vector<F2Vec> sorted_set);
  std::int64_t checked(int n, std::int64_t v) const;

  ChiOptions options_;
  // Key: [rank, chars...]; one map covers both the multiset and the
  // stripped-set paths because stripped keys are duplicate-free.
  std::unordered_map<std::vector<std::uint32_t>, std::int64_t, KeyHash> memo_;
};

// Re-runs the recursion once per distinct ordering of the summands, always
// pivoting on the last remaining summand in that ordering. All results must
// agree (property P7); callers assert that. Capped at 8 summands and at
// max_orders distinct orderings.
std::vector<Chi> chi_all_orders(const RepMultiset& rep, std::size_t max_orders = 40320);

}  // namespace ksphere
