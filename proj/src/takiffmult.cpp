#include "takiff/takiffmult.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <mutex>
#include <thread>

namespace takiff {

namespace {

struct Reduced {
  WeylElement w;
  LeviDatum levi;
};

// Evaluates the Levi sum for transported weights.
MultiplicityReport evaluate(const Reduced& red, const PartitionCache& p, const Weight& lambda, const Weight& lambda2,
                            const RootSystem& rs, KLCache& cache) {
  MultiplicityReport report;
  report.w_used = red.w;
  report.levi = red.levi;
  report.nu = dot2(rs, red.w, lambda);
  report.nu2 = dot2(rs, red.w, lambda2);

  // Both the lattice and cone conditions force nu2 <= nu in the Levi order.
  auto span = rs.weight_sub(report.nu, report.nu2);
  if (!span || !red.levi.in_positive_cone(*span)) return report;

  DotOrbit orbit = dot_orbit(report.nu2, rs, red.levi, cache);
  std::vector<Weight> targets;
  for (const auto& eta : orbit.points()) {
    auto above = rs.weight_sub(eta, report.nu2);
    if (above && red.levi.in_positive_cone(*above)) targets.push_back(eta);
  }
  std::sort(targets.begin(), targets.end());
  for (const auto& eta : targets) {
    auto chi = rs.weight_sub(eta, report.nu);
    if (!chi) continue;
    const std::int64_t pc = p.p(*chi);
    if (pc == 0) continue;
    const std::int64_t m = bgg_mult_in_orbit(orbit, eta, report.nu2, cache);
    if (m == 0) continue;
    report.terms.push_back({*chi, pc, m});
    report.value += pc * m;
  }
  return report;
}

Reduced checked_reduction(const WeylElement& w, const Weight& mu, const RootSystem& rs) {
  if (w.rank() != rs.rank()) throw std::invalid_argument("Weyl element has the wrong rank");
  LeviDatum levi = phi_mu(apply(rs, w, mu), rs);
  if (!levi.is_standard) throw std::invalid_argument("Phi_{w(mu)} is not standard for w = " + w.word_str());
  if (!satisfies_prefix_condition(rs, w, mu))
    throw std::invalid_argument("w = " + w.word_str() + " violates the prefix condition for mu");
  return {w, std::move(levi)};
}

MultiplicityReport zero_report(const Reduced& red) {
  MultiplicityReport r;
  r.w_used = red.w;
  r.levi = red.levi;
  return r;
}

}  // namespace

MultiplicityReport takiff_mult_via(const WeylElement& w, const Weight& lambda, const Weight& mu, const Weight& lambda2,
                                   const Weight& mu2, const RootSystem& rs, KLCache& cache) {
  for (const Weight* x : {&lambda, &mu, &lambda2, &mu2}) rs.check_weight(*x);
  Reduced red = checked_reduction(w, mu, rs);
  if (mu != mu2) return zero_report(red);
  PartitionCache p(rs, red.levi);
  return evaluate(red, p, lambda, lambda2, rs, cache);
}

MultiplicityReport takiff_mult(const Weight& lambda, const Weight& mu, const Weight& lambda2, const Weight& mu2,
                               const RootSystem& rs, KLCache& cache) {
  rs.check_weight(mu);
  return takiff_mult_via(minimal_levi_reduction(mu, rs).w, lambda, mu, lambda2, mu2, rs, cache);
}

std::vector<SeriesEntry> takiff_mult_series(const Weight& lambda, const Weight& mu, int h, const RootSystem& rs,
                                            KLCache& cache, unsigned threads) {
  if (h < 0) throw std::invalid_argument("height must be nonnegative");
  rs.check_weight(lambda);
  rs.check_weight(mu);
  auto red = minimal_levi_reduction(mu, rs);
  Reduced reduced{red.w, red.levi};
  PartitionCache p(rs, reduced.levi);

  std::vector<RootVector> offsets = cone_offsets(rs.rank(), h);
  std::sort(offsets.begin(), offsets.end(), [](const RootVector& a, const RootVector& b) {
    if (a.height() != b.height()) return a.height() > b.height();
    return a > b;
  });
  std::vector<std::int64_t> values(offsets.size(), 0);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < offsets.size(); i = next++) {
      try {
        values[i] = evaluate(reduced, p, lambda, lambda + rs.to_weight(offsets[i]), rs, cache).value;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, offsets.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::vector<SeriesEntry> out;
  for (std::size_t i = 0; i < offsets.size(); ++i)
    if (values[i] != 0) out.push_back({lambda + rs.to_weight(offsets[i]), offsets[i], values[i]});
  return out;
}

bool ext_block_predicate(const Weight& lambda, const Weight& mu, const Weight& lambda2, const Weight& mu2,
                         const RootSystem& rs) {
  for (const Weight* x : {&lambda, &mu, &lambda2, &mu2}) rs.check_weight(*x);
  if (mu != mu2) return false;
  auto diff = rs.weight_sub(lambda, lambda2);
  return diff && phi_mu(mu, rs).simple_coordinates(*diff).has_value();
}

TakiffWeightPair twisting_image(std::size_t simple, const Weight& lambda, const Weight& mu, const RootSystem& rs) {
  rs.check_weight(lambda);
  rs.check_weight(mu);
  if (simple >= rs.rank()) throw std::out_of_range("simple root index out of range");
  RootVector alpha(rs.rank());
  alpha[simple] = 1;
  if (rs.pairing(mu, alpha).is_zero()) throw std::domain_error("twisting equivalence requires μ(h_α) ≠ 0");
  CoxeterGroup group(rs.cartan_matrix());
  return {dot2(rs, group.generator(static_cast<int>(simple)), lambda), rs.reflect(mu, alpha)};
}

ParabolicTransport parabolic_image(const Weight& lambda, const Weight& mu, const RootSystem& rs) {
  rs.check_weight(lambda);
  rs.check_weight(mu);
  LeviDatum levi = phi_mu(mu, rs);
  if (!levi.is_standard)
    throw std::invalid_argument("Phi_mu is not standard; transport with minimal_levi_reduction first");
  return {std::move(levi), {lambda, rs.zero_weight()}, {lambda, mu}};
}

}  // namespace takiff
