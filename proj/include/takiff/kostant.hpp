#pragma once

#include <cstdint>
#include <map>
#include <shared_mutex>
#include <vector>

#include "takiff/rootdata.hpp"
#include "takiff/weyl.hpp"

namespace takiff {

class KLCache;

/// Memoised Kostant partition function of a fixed list of positive roots.
///
/// Sign convention: p(chi) counts the multisets of positive roots summing to
/// -chi, so p is supported on the negative cone and p(0) = 1.
///
/// Concurrent calls are safe; lookups take a shared lock and insertions an
/// exclusive one.
class PartitionCache {
 public:
  /// Roots are given in a common coordinate system of dimension `rank`;
  /// each must be nonzero and nonnegative.
  PartitionCache(std::vector<RootVector> positive_roots, std::size_t rank);
  explicit PartitionCache(const RootSystem& rs);
  PartitionCache(const RootSystem& rs, const RootSubsystem& sub);

  PartitionCache(const PartitionCache&) = delete;
  PartitionCache& operator=(const PartitionCache&) = delete;

  std::int64_t p(const RootVector& chi) const;
  /// p * p, the weight multiplicities of a Takiff Verma module.
  std::int64_t p2(const RootVector& chi) const;

  const std::vector<RootVector>& roots() const { return roots_; }
  std::size_t rank() const { return rank_; }
  std::size_t memo_size() const;

 private:
  std::int64_t count(std::size_t k, const RootVector& gamma) const;

  std::vector<RootVector> roots_;
  std::size_t rank_;
  mutable std::shared_mutex mutex_;
  mutable std::vector<std::map<RootVector, std::int64_t>> memo_;
};

std::int64_t kostant_p(const RootVector& chi, const RootSystem& rs);
std::int64_t kostant_p2(const RootVector& chi, const RootSystem& rs);

/// Truncated formal character: dims[offset] = dim M^{base + offset} for every
/// offset in -Z_{>=0}(simple roots) of height >= -height. Zero entries omitted.
struct Character {
  Weight base;
  int height = 0;
  std::map<RootVector, std::int64_t> dims;

  std::int64_t at(const RootVector& offset) const;
  std::int64_t total() const;

  /// this += coeff * other, where other.base - base is in the root lattice.
  /// Entries of `other` that fall outside this truncation are dropped.
  void add(const Character& other, std::int64_t coeff, const RootSystem& rs);

  friend bool operator==(const Character&, const Character&) = default;
};

/// Offsets -gamma, gamma >= 0 of height <= h, by increasing height.
std::vector<RootVector> cone_offsets(std::size_t rank, int h);

Character verma_character(const Weight& lambda, int h, const RootSystem& rs);
/// Verma character for the subalgebra attached to a standard subsystem.
Character verma_character(const Weight& lambda, int h, const RootSystem& rs, const PartitionCache& p);

/// dims = p2.
Character takiff_verma_character(const Weight& lambda, int h, const RootSystem& rs);
/// Sum of ordinary Verma characters of lambda - sum m_k alpha_k over explicit
/// multiplicity vectors m in Z_{>=0}^{Phi+}.
Character takiff_verma_character_shifted(const Weight& lambda, int h, const RootSystem& rs);

/// Character of the simple highest weight module via the inverse of the BGG
/// decomposition matrix of its dot-orbit (taken inside `sys`).
Character simple_character_bgg(const Weight& lambda, int h, const RootSystem& rs, const RootSubsystem& sys,
                               KLCache& cache);
Character simple_character_bgg(const Weight& lambda, int h, const RootSystem& rs, KLCache& cache);

/// Finite-dimensional character from the alternating Kostant sum. Throws
/// std::invalid_argument unless lambda is dominant integral.
Character weyl_character_formula(const Weight& lambda, int h, const RootSystem& rs);

}  // namespace takiff
