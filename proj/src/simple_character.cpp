#include <algorithm>

#include "takiff/klbgg.hpp"
#include "takiff/kostant.hpp"

namespace takiff {

Character simple_character_bgg(const Weight& lambda, int h, const RootSystem& rs, const RootSubsystem& sys,
                               KLCache& cache) {
  if (h < 0) throw std::invalid_argument("truncation height must be nonnegative");
  rs.check_weight(lambda);
  DotOrbit orbit = dot_orbit(lambda, rs, sys, cache);

  std::vector<std::pair<std::int64_t, Weight>> pts;
  for (const auto& pt : orbit.points()) {
    auto d = rs.weight_sub(lambda, pt);
    if (d && sys.in_positive_cone(*d) && d->height() <= h) pts.emplace_back(d->height(), pt);
  }
  std::sort(pts.begin(), pts.end());

  // Row of the inverse decomposition matrix at lambda, by forward substitution.
  std::vector<std::int64_t> coeff(pts.size(), 0);
  for (std::size_t j = 0; j < pts.size(); ++j) {
    std::int64_t b = j == 0 ? 1 : 0;
    for (std::size_t i = 0; i < j; ++i) {
      if (coeff[i] == 0) continue;
      auto d = rs.weight_sub(pts[i].second, pts[j].second);
      if (!d || !sys.in_positive_cone(*d)) continue;
      b -= coeff[i] * bgg_mult_in_orbit(orbit, pts[i].second, pts[j].second, cache);
    }
    coeff[j] = b;
  }

  PartitionCache p(rs, sys);
  Character ch{lambda, h, {}};
  for (std::size_t j = 0; j < pts.size(); ++j) {
    if (coeff[j] == 0) continue;
    ch.add(verma_character(pts[j].second, h - static_cast<int>(pts[j].first), rs, p), coeff[j], rs);
  }
  for (const auto& [off, d] : ch.dims)
    if (d < 0) throw std::logic_error("negative multiplicity in simple character of " + lambda.str());
  return ch;
}

Character simple_character_bgg(const Weight& lambda, int h, const RootSystem& rs, KLCache& cache) {
  return simple_character_bgg(lambda, h, rs, full_subsystem(rs), cache);
}

}  // namespace takiff
