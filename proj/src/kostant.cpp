#include "takiff/kostant.hpp"

#include <functional>
#include <mutex>
#include <stdexcept>

namespace takiff {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("partition count overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("partition count overflow");
  return r;
}

}  // namespace

PartitionCache::PartitionCache(std::vector<RootVector> positive_roots, std::size_t rank)
    : roots_(std::move(positive_roots)), rank_(rank), memo_(roots_.size() + 1) {
  for (const auto& r : roots_) {
    if (r.size() != rank_ || r.is_zero() || !r.is_nonnegative())
      throw std::invalid_argument("partition roots must be nonzero and nonnegative");
  }
}

PartitionCache::PartitionCache(const RootSystem& rs) : PartitionCache(rs.positive_roots(), rs.rank()) {}

PartitionCache::PartitionCache(const RootSystem& rs, const RootSubsystem& sub)
    : PartitionCache(sub.positive_roots, rs.rank()) {}

std::size_t PartitionCache::memo_size() const {
  std::shared_lock lock(mutex_);
  std::size_t n = 0;
  for (const auto& m : memo_) n += m.size();
  return n;
}

// Ways to write gamma >= 0 with roots_[0..k).
// f(k, g) = f(k-1, g) + f(k, g - beta_{k-1}).
std::int64_t PartitionCache::count(std::size_t k, const RootVector& gamma) const {
  if (gamma.is_zero()) return 1;
  if (k == 0) return 0;
  {
    std::shared_lock lock(mutex_);
    auto it = memo_[k].find(gamma);
    if (it != memo_[k].end()) return it->second;
  }
  std::int64_t total = count(k - 1, gamma);
  RootVector rest = gamma - roots_[k - 1];
  if (rest.is_nonnegative()) total = checked_add(total, count(k, rest));
  std::unique_lock lock(mutex_);
  memo_[k].emplace(gamma, total);
  return total;
}

std::int64_t PartitionCache::p(const RootVector& chi) const {
  if (chi.size() != rank_) throw std::invalid_argument("root vector rank mismatch");
  if (!chi.is_nonpositive()) return 0;
  return count(roots_.size(), -chi);
}

std::int64_t PartitionCache::p2(const RootVector& chi) const {
  if (chi.size() != rank_) throw std::invalid_argument("root vector rank mismatch");
  if (!chi.is_nonpositive()) return 0;
  // Sum over chi <= part <= 0 coordinatewise.
  std::int64_t total = 0;
  RootVector part(rank_);
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == rank_) {
      std::int64_t a = p(part);
      if (a == 0) return;
      std::int64_t b = p(chi - part);
      if (b != 0) total = checked_add(total, checked_mul(a, b));
      return;
    }
    for (std::int64_t c = 0; c >= chi[i]; --c) {
      part[i] = c;
      walk(i + 1);
    }
    part[i] = 0;
  };
  walk(0);
  return total;
}

std::int64_t kostant_p(const RootVector& chi, const RootSystem& rs) { return PartitionCache(rs).p(chi); }

std::int64_t kostant_p2(const RootVector& chi, const RootSystem& rs) { return PartitionCache(rs).p2(chi); }

// ---------------------------------------------------------------------------

std::int64_t Character::at(const RootVector& offset) const {
  auto it = dims.find(offset);
  return it == dims.end() ? 0 : it->second;
}

std::int64_t Character::total() const {
  std::int64_t t = 0;
  for (const auto& [_, d] : dims) t += d;
  return t;
}

void Character::add(const Character& other, std::int64_t coeff, const RootSystem& rs) {
  auto shift = rs.weight_sub(other.base, base);
  if (!shift) throw std::invalid_argument("characters with bases outside a common root-lattice coset");
  for (const auto& [off, d] : other.dims) {
    RootVector o = off + *shift;
    if (!o.is_nonpositive() || -o.height() > height) continue;
    auto& slot = dims[o];
    slot += coeff * d;
    if (slot == 0) dims.erase(o);
  }
}

std::vector<RootVector> cone_offsets(std::size_t rank, int h) {
  std::vector<RootVector> out;
  for (int level = 0; level <= h; ++level) {
    RootVector v(rank);
    std::function<void(std::size_t, int)> fill = [&](std::size_t i, int left) {
      if (i + 1 == rank) {
        v[i] = -left;
        out.push_back(v);
        return;
      }
      for (int c = left; c >= 0; --c) {
        v[i] = -c;
        fill(i + 1, left - c);
      }
    };
    if (rank == 0) {
      if (level == 0) out.emplace_back(0);
      continue;
    }
    fill(0, level);
  }
  return out;
}

namespace {

void check_height(int h) {
  if (h < 0) throw std::invalid_argument("truncation height must be nonnegative");
}

}  // namespace

Character verma_character(const Weight& lambda, int h, const RootSystem& rs, const PartitionCache& p) {
  check_height(h);
  rs.check_weight(lambda);
  Character ch{lambda, h, {}};
  for (const auto& off : cone_offsets(rs.rank(), h))
    if (auto d = p.p(off)) ch.dims.emplace(off, d);
  return ch;
}

Character verma_character(const Weight& lambda, int h, const RootSystem& rs) {
  return verma_character(lambda, h, rs, PartitionCache(rs));
}

Character takiff_verma_character(const Weight& lambda, int h, const RootSystem& rs) {
  check_height(h);
  rs.check_weight(lambda);
  PartitionCache p(rs);
  Character ch{lambda, h, {}};
  for (const auto& off : cone_offsets(rs.rank(), h))
    if (auto d = p.p2(off)) ch.dims.emplace(off, d);
  return ch;
}

Character takiff_verma_character_shifted(const Weight& lambda, int h, const RootSystem& rs) {
  check_height(h);
  rs.check_weight(lambda);
  PartitionCache p(rs);
  const auto& roots = rs.positive_roots();
  Character ch{lambda, h, {}};
  RootVector shift(rs.rank());
  // Enumerate multiplicity vectors m with sum m_k ht(alpha_k) <= h; each adds
  // the Verma character of lambda - shift.
  std::function<void(std::size_t, int)> walk = [&](std::size_t k, int budget) {
    if (k == roots.size()) {
      ch.add(verma_character(lambda - rs.to_weight(shift), h - static_cast<int>(shift.height()), rs, p), 1, rs);
      return;
    }
    const int ht = static_cast<int>(roots[k].height());
    for (int m = 0; m * ht <= budget; ++m) {
      walk(k + 1, budget - m * ht);
      shift += roots[k];
    }
    for (int m = 0; m * ht <= budget; ++m) shift -= roots[k];
  };
  walk(0, h);
  return ch;
}

Character weyl_character_formula(const Weight& lambda, int h, const RootSystem& rs) {
  check_height(h);
  rs.check_weight(lambda);
  for (std::size_t i = 0; i < rs.rank(); ++i)
    if (!lambda[i].is_integer() || lambda[i] < Rational(0))
      throw std::invalid_argument("weight " + lambda.str() + " is not dominant integral");
  PartitionCache p(rs);
  CoxeterGroup g(rs.cartan_matrix());
  std::vector<std::pair<Weight, int>> shifted;
  for (const auto& w : g.all_elements())
    shifted.emplace_back(apply(rs, w, lambda + rs.rho()), w.length() % 2 ? -1 : 1);
  Character ch{lambda, h, {}};
  for (const auto& off : cone_offsets(rs.rank(), h)) {
    const Weight nu_rho = lambda + rs.to_weight(off) + rs.rho();
    std::int64_t m = 0;
    for (const auto& [image, sign] : shifted) {
      auto d = rs.weight_sub(image, nu_rho);
      if (d) m += sign * p.p(-*d);
    }
    if (m < 0) throw std::logic_error("negative weight multiplicity from alternating sum");
    if (m) ch.dims.emplace(off, m);
  }
  return ch;
}

}  // namespace takiff
