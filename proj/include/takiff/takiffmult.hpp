#pragma once

#include "takiff/klbgg.hpp"
#include "takiff/kostant.hpp"
#include "takiff/weyl.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace takiff {

/// Highest weight (lambda, mu): h acts by lambda, the nilpotent copy of h by mu.
struct TakiffWeightPair {
  Weight lambda;
  Weight mu;
  auto operator<=>(const TakiffWeightPair&) const = default;
};

struct MultiplicityTerm {
  RootVector chi;
  std::int64_t p = 0;
  std::int64_t levi_mult = 0;
};

struct MultiplicityReport {
  std::int64_t value = 0;
  WeylElement w_used;
  LeviDatum levi;
  /// Transported weights w .2 lambda and w .2 lambda'.
  Weight nu;
  Weight nu2;
  std::vector<MultiplicityTerm> terms;
};

/// [M_{lambda,mu} : L_{lambda2,mu2}] via the minimal Levi reduction of mu.
///
/// After transport by w the sum runs over the Levi dot-orbit of w .2 lambda',
/// weighted by the Levi's own partition function.
MultiplicityReport takiff_mult(const Weight& lambda, const Weight& mu, const Weight& lambda2, const Weight& mu2,
                               const RootSystem& rs, KLCache& cache);

/// Same, with a caller-chosen w. Throws std::invalid_argument unless
/// Phi_{w(mu)} is standard and w satisfies the prefix condition for mu.
MultiplicityReport takiff_mult_via(const WeylElement& w, const Weight& lambda, const Weight& mu, const Weight& lambda2,
                                   const Weight& mu2, const RootSystem& rs, KLCache& cache);

struct SeriesEntry {
  Weight lambda2;
  RootVector offset;
  std::int64_t value = 0;
};

/// Nonzero [M_{lambda,mu} : L_{lambda - gamma, mu}] for gamma in the positive
/// cone of height <= h, ordered by height then offset. threads = 0 picks the
/// hardware concurrency.
std::vector<SeriesEntry> takiff_mult_series(const Weight& lambda, const Weight& mu, int h, const RootSystem& rs,
                                            KLCache& cache, unsigned threads = 0);

/// mu == mu2 and lambda - lambda2 in the root lattice of Phi_mu.
bool ext_block_predicate(const Weight& lambda, const Weight& mu, const Weight& lambda2, const Weight& mu2,
                         const RootSystem& rs);

/// Labels (s .2 lambda, s(mu)) reached by twisting along the simple root with index `simple`.
/// Throws std::domain_error when mu(h_alpha) = 0.
TakiffWeightPair twisting_image(std::size_t simple, const Weight& lambda, const Weight& mu, const RootSystem& rs);

struct ParabolicTransport {
  LeviDatum levi;
  /// Label over the Takiff algebra of the Levi (mu replaced by 0).
  TakiffWeightPair levi_label;
  TakiffWeightPair ambient_label;
};

/// Throws std::invalid_argument when Phi_mu is not standard.
ParabolicTransport parabolic_image(const Weight& lambda, const Weight& mu, const RootSystem& rs);

}  // namespace takiff
