#include "takiff/acceptance.hpp"

#include "takiff/kostant.hpp"
#include "takiff/takiffmult.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

namespace takiff {

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

Weight random_weight(const RootSystem& rs, std::mt19937& rng, int range, int max_den) {
  std::uniform_int_distribution<int> num(-range, range), den(1, max_den);
  std::vector<Rational> c;
  for (std::size_t i = 0; i < rs.rank(); ++i) c.emplace_back(num(rng), den(rng));
  return rs.make_weight(c);
}

bool is_regular(const Weight& lam, const RootSystem& rs) {
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k)
    if (RootSystem::pairing_coroot(lam + rs.rho(), rs.coroot(k)).is_zero()) return false;
  return true;
}

// sl2 simple characters in closed form: finite for c in Z_{>=0}, else the Verma character.
Outcome sl2_series(KLCache& cache) {
  RootSystem a1 = RootSystem::from_string("A1");
  const int h = 20;
  std::vector<std::int64_t> remaining(h + 1);
  for (int m = 0; m <= h; ++m)
    for (int n = m; n <= h; ++n) ++remaining[n];
  std::vector<std::int64_t> expect(h + 1, 0);
  for (int n = 0; n <= h; ++n) {
    const std::int64_t k = remaining[n];
    expect[n] = k;
    const int c = -2 * n;
    const int top = c >= 0 ? n + c : h;
    for (int j = n; j <= std::min(top, h); ++j) remaining[j] -= k;
  }
  auto series = takiff_mult_series(a1.zero_weight(), a1.zero_weight(), h, a1, cache);
  std::vector<std::int64_t> got(h + 1, 0);
  for (const auto& e : series) got[static_cast<std::size_t>(-e.offset.height())] = e.value;
  std::ostringstream os;
  for (int n = 0; n <= h; ++n) os << (n ? "," : "") << got[n];
  const bool ok = got == expect && series.size() >= 10 && expect[1] == 2;
  return {ok, "multiplicities at c=0..-40: (" + os.str() + "), " + std::to_string(series.size()) +
                  " distinct simple factors"};
}

Outcome character_identity(KLCache& cache) {
  const int h = 10;
  int checked = 0;
  for (const char* name : {"A2", "B2"}) {
    RootSystem rs = RootSystem::from_string(name);
    Weight regular = rs.make_weight({-3, 0});
    Weight singular = rs.make_weight({-1, 0});
    if (!is_regular(regular, rs) || is_regular(singular, rs)) return {false, "bad seed weights in " + std::string(name)};
    for (const auto& lam : {rs.zero_weight(), regular, singular}) {
      Character sum{lam, h, {}};
      for (const auto& e : takiff_mult_series(lam, rs.zero_weight(), h, rs, cache))
        sum.add(simple_character_bgg(e.lambda2, h + static_cast<int>(e.offset.height()), rs, cache), e.value, rs);
      if (!(sum == takiff_verma_character(lam, h, rs)))
        return {false, std::string(name) + " lambda=" + lam.str() + ": sum of simple characters differs"};
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " weights, exact at height <= 10"};
}

Outcome orientation_pin(KLCache& cache) {
  int checked = 0;
  for (const char* name : {"A2", "B2"}) {
    RootSystem rs = RootSystem::from_string(name);
    for (const auto& off : cone_offsets(rs.rank(), 3)) {
      Weight lam = rs.make_weight({Rational(-off[0]), Rational(-off[1])});
      if (!(simple_character_bgg(lam, 10, rs, cache) == weyl_character_formula(lam, 10, rs)))
        return {false, std::string(name) + " lambda=" + lam.str() + " disagrees with the Weyl formula"};
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " dominant weights"};
}

Outcome kl_engine(KLCache& cache) {
  KLEngine& e = cache.engine(cartan_matrix(parse_cartan_type("A3")));
  const auto& t = e.table();
  const std::size_t n = t.size();
  const std::size_t w0 = t.longest();
  std::vector<std::size_t> w0_times(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t y = x;
    const auto& word = t.element(w0).word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) y = t.left(*it, y);
    w0_times[x] = y;
  }
  int one_plus_q = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t w = 0; w < n; ++w) {
      auto p = e.polynomial(x, w);
      if (!t.bruhat_leq(x, w)) {
        if (!p.is_zero()) return {false, "nonzero polynomial off the Bruhat interval"};
        continue;
      }
      if (p.coeff(0) != 1) return {false, "constant term differs from 1"};
      if (x != w && 2 * p.degree() > t.length(w) - t.length(x) - 1) return {false, "degree bound violated"};
      if (p == KLPolynomial({1, 1})) ++one_plus_q;
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      KLPolynomial sum;
      for (std::size_t z = 0; z < n; ++z) {
        if (!t.bruhat_leq(x, z) || !t.bruhat_leq(z, y)) continue;
        const int sign = (t.length(x) + t.length(z)) % 2 ? -1 : 1;
        sum += (e.polynomial(x, z) * e.polynomial(w0_times[y], w0_times[z])).scaled(sign, 0);
      }
      if (!(sum == (x == y ? KLPolynomial::one() : KLPolynomial()))) return {false, "inversion identity fails"};
    }
  if (one_plus_q == 0) return {false, "no pair with P = 1 + q"};
  return {true, "576 pairs; " + std::to_string(one_plus_q) + " with P = 1 + q"};
}

std::int64_t brute_count(const std::vector<RootVector>& roots, std::size_t k, const RootVector& rest) {
  if (rest.is_zero()) return 1;
  if (k == roots.size() || !rest.is_nonnegative()) return 0;
  std::int64_t total = 0;
  for (RootVector r = rest; r.is_nonnegative(); r -= roots[k]) total += brute_count(roots, k + 1, r);
  return total;
}

Outcome partition_identities(KLCache&) {
  std::size_t checked = 0;
  for (const char* name : {"A2", "B2"}) {
    RootSystem rs = RootSystem::from_string(name);
    PartitionCache p(rs);
    for (const auto& chi : cone_offsets(rs.rank(), 15)) {
      std::int64_t conv = 0;
      for (const auto& part : cone_offsets(rs.rank(), static_cast<int>(-chi.height()))) conv += p.p(part) * p.p(chi - part);
      if (conv != p.p2(chi)) return {false, std::string(name) + ": p*p != p2 at " + chi.str()};
      ++checked;
    }
  }
  for (const char* name : {"A2", "B2", "G2"}) {
    RootSystem rs = RootSystem::from_string(name);
    PartitionCache p(rs);
    for (const auto& chi : cone_offsets(rs.rank(), 8)) {
      if (brute_count(rs.positive_roots(), 0, -chi) != p.p(chi))
        return {false, std::string(name) + ": recursion != enumeration at " + chi.str()};
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " offsets"};
}

Outcome levi_reduction(KLCache&) {
  std::mt19937 rng(2024);
  int nontrivial = 0;
  for (const char* name : {"B2", "A3"}) {
    RootSystem rs = RootSystem::from_string(name);
    CoxeterGroup group(rs.cartan_matrix());
    auto all = group.all_elements();
    for (int k = 0; k < 100; ++k) {
      Weight mu = random_weight(rs, rng, 2, 2);
      auto red = minimal_levi_reduction(mu, rs);
      Weight image = apply(rs, red.w, mu);
      if (!phi_mu(image, rs).is_standard) return {false, "non-standard result for mu=" + mu.str()};
      if (!satisfies_prefix_condition(rs, red.w, mu)) return {false, "prefix condition fails for mu=" + mu.str()};
      int best = -1;
      for (const auto& w : all)
        if (phi_mu(apply(rs, w, mu), rs).is_standard && (best < 0 || w.length() < best)) best = w.length();
      if (red.w.length() != best) return {false, "w not minimal for mu=" + mu.str()};
      if (best > 0) ++nontrivial;
    }
  }
  return {true, "200 samples, " + std::to_string(nontrivial) + " needing w != e"};
}

Outcome generic_closed_form(KLCache& cache) {
  RootSystem a2 = RootSystem::from_string("A2");
  std::mt19937 rng(7);
  Weight mu = a2.make_weight({1, Rational(1, 3)});
  if (!phi_mu(mu, a2).positive_roots.empty()) return {false, "mu not generic"};
  int total = 0, literal = 0, levi = 0;
  std::string first;
  for (int k = 0; k < 10; ++k) {
    Weight lam = random_weight(a2, rng, 4, 3);
    for (const auto& off : cone_offsets(2, 8)) {
      const std::int64_t value = takiff_mult(lam, mu, lam + a2.to_weight(off), mu, a2, cache).value;
      const std::int64_t p = kostant_p(off, a2);
      ++total;
      if (value == p) ++literal;
      else if (first.empty())
        first = "lambda=" + lam.str() + ", nu=" + (-off).str() + ": mult " + std::to_string(value) + ", p(-nu) " +
                std::to_string(p);
      if (value == (off.is_zero() ? 1 : 0)) ++levi;
    }
  }
  std::string detail = "mult = p(-nu) in " + std::to_string(literal) + "/" + std::to_string(total) + " cases";
  if (!first.empty()) detail += " (first mismatch " + first + ")";
  detail += "; mult = delta_{nu,0} (partition function of the torus Levi) in " + std::to_string(levi) + "/" +
            std::to_string(total);
  return {literal == total, detail};
}

Outcome structural(KLCache& cache) {
  std::mt19937 rng(99);
  RootSystem a2 = RootSystem::from_string("A2");
  CoxeterGroup group(a2.cartan_matrix());
  int checks = 0;
  for (int k = 0; k < 50; ++k) {
    Weight lam = random_weight(a2, rng, 4, 3);
    Weight mu = k % 3 == 0 ? a2.zero_weight() : random_weight(a2, rng, 2, 2);
    if (takiff_mult(lam, mu, lam, mu, a2, cache).value != 1) return {false, "self multiplicity != 1"};
    if (takiff_mult(lam, mu, lam - a2.to_weight({1, 0}), mu + a2.to_weight({1, 1}), a2, cache).value != 0)
      return {false, "nonzero across different mu"};
    if (takiff_mult(lam, mu, lam + a2.to_weight({1, -1}), mu, a2, cache).value != 0 ||
        takiff_mult(lam, mu, lam - a2.make_weight({Rational(1, 2), 0}), mu, a2, cache).value != 0)
      return {false, "nonzero outside the support"};
    checks += 4;
  }
  Weight mu = a2.make_weight({1, -1});
  std::uniform_int_distribution<int> depth(0, 4);
  for (int k = 0; k < 20; ++k) {
    Weight lam = random_weight(a2, rng, 4, 3);
    Weight lam2 = lam - a2.to_weight({depth(rng), depth(rng)});
    if (takiff_mult_via(group.generator(0), lam, mu, lam2, mu, a2, cache).value !=
        takiff_mult_via(group.generator(1), lam, mu, lam2, mu, a2, cache).value)
      return {false, "w = s1 and w = s2 disagree for lambda=" + lam.str()};
    ++checks;
  }
  return {true, std::to_string(checks) + " checks"};
}

struct Criterion {
  int id;
  const char* name;
  double budget;
  std::function<Outcome(KLCache&)> run;
};

}  // namespace

std::vector<CriterionResult> run_acceptance(KLCache& cache, const std::function<void(const CriterionResult&)>& on_result) {
  const std::vector<Criterion> criteria = {
      {1, "sl2 Takiff series", 1, sl2_series},
      {2, "mu=0 character identity", 30, character_identity},
      {3, "KL orientation pin", 30, orientation_pin},
      {4, "KL engine on W(A3)", 120, kl_engine},
      {5, "partition identities", 30, partition_identities},
      {6, "minimal Levi reduction", 60, levi_reduction},
      {7, "generic-mu closed form p(-nu)", 10, generic_closed_form},
      {8, "structural properties", 30, structural},
  };
  std::vector<CriterionResult> out;
  for (const auto& c : criteria) {
    CriterionResult r{c.id, c.name, false, "", 0, c.budget};
    const auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = c.run(cache);
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.seconds > r.budget_seconds) {
      r.passed = false;
      r.detail += "; over time budget";
    }
    if (on_result) on_result(r);
    out.push_back(r);
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s / %g s", r.seconds, r.budget_seconds);
  return std::string(r.passed ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.name + " (" + timing +
         "): " + r.detail;
}

}  // namespace takiff
