#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "nulltree/tree.hpp"

namespace nulltree {

/// Seeded source of bounded integers: std::mt19937_64 with rejection
/// sampling, so a seed gives the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
  }

 private:
  std::mt19937_64 engine_;
};

/// Tree on [0, n) with the given Prufer code (length n - 2, entries < n).
/// n = 1 and n = 2 take the empty code. Throws Error(kBadCode).
Tree prufer_decode(std::size_t n, std::span<const std::uint32_t> code);

/// Calls `emit` once for every labeled tree on [0, n): n^(n-2) trees for
/// n >= 2 and one for n = 1. Shard `shard` of `shards` gets the codes whose
/// first entry is congruent to `shard`; for n <= 2 the single tree goes to
/// shard 0.
void enumerate_trees(std::size_t n, const std::function<void(const Tree&)>& emit,
                     std::size_t shard = 0, std::size_t shards = 1);

/// One representative per isomorphism class of trees of order n, labeled
/// [0, n).
std::vector<Tree> enumerate_unlabeled_trees(std::size_t n);

/// Uniform random labeled tree on [0, n).
Tree random_tree(std::size_t n, std::uint64_t seed);

/// Random S-tree of order at most max(budget, 3), built by nested stellare
/// and S-coalescence steps and relabeled to [0, order). Throws
/// Error(kFormulaMismatch) if the result fails to classify as an S-tree.
Tree random_s_tree(std::size_t budget, std::uint64_t seed);
Tree random_s_tree(std::size_t budget, Rng& rng);

/// Order-preserving relabeling onto [0, n).
Tree compact_labels(const Tree& t);

}  // namespace nulltree
