#include "takiff/weyl.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <stdexcept>

namespace takiff {

namespace {

std::string matrix_key(const std::vector<int>& m) {
  std::string k(m.size(), '\0');
  for (std::size_t i = 0; i < m.size(); ++i) k[i] = static_cast<char>(m[i]);
  return k;
}

}  // namespace

std::string WeylElement::word_str() const {
  if (word_.empty()) return "e";
  const bool wide = rank_ > 9;
  std::string s;
  for (std::size_t k = 0; k < word_.size(); ++k) {
    if (wide && k) s += ',';
    s += std::to_string(word_[k] + 1);
  }
  return s;
}

// ---------------------------------------------------------------------------

CoxeterGroup::CoxeterGroup(IntMatrix cartan) : cartan_(std::move(cartan)) {
  const std::size_t n = cartan_.size();
  positive_ = positive_roots_from_cartan(cartan_);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> s(n * n, 0);
    for (std::size_t k = 0; k < n; ++k) s[k * n + k] = 1;
    for (std::size_t j = 0; j < n; ++j) s[i * n + j] -= cartan_[i][j];
    generators_.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (i) fingerprint_ += ';';
    for (std::size_t j = 0; j < n; ++j) {
      if (j) fingerprint_ += ',';
      fingerprint_ += std::to_string(cartan_[i][j]);
    }
  }
  if (fingerprint_.empty()) fingerprint_ = "0";
}

std::vector<int> CoxeterGroup::compose(const std::vector<int>& a, const std::vector<int>& b) const {
  const std::size_t n = rank();
  std::vector<int> c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const int aik = a[i * n + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
    }
  return c;
}

int CoxeterGroup::inversions(const std::vector<int>& m) const {
  const std::size_t n = rank();
  int count = 0;
  for (const auto& beta : positive_) {
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t c = 0;
      for (std::size_t j = 0; j < n; ++j) c += m[i * n + j] * beta[j];
      if (c != 0) {
        if (c < 0) ++count;
        break;
      }
    }
  }
  return count;
}

std::vector<int> CoxeterGroup::canonical_word(std::vector<int> m) const {
  std::vector<int> word;
  int len = inversions(m);
  while (len > 0) {
    bool stepped = false;
    for (std::size_t i = 0; i < rank(); ++i) {
      auto next = compose(generators_[i], m);
      int l = inversions(next);
      if (l < len) {
        word.push_back(static_cast<int>(i));
        m = std::move(next);
        len = l;
        stepped = true;
        break;
      }
    }
    if (!stepped) throw std::logic_error("no left descent for nonidentity element");
  }
  return word;
}

WeylElement CoxeterGroup::make(std::vector<int> matrix) const {
  WeylElement w;
  w.rank_ = rank();
  w.word_ = canonical_word(matrix);
  w.matrix_ = std::move(matrix);
  return w;
}

WeylElement CoxeterGroup::identity() const {
  const std::size_t n = rank();
  WeylElement w;
  w.rank_ = n;
  w.matrix_.assign(n * n, 0);
  for (std::size_t k = 0; k < n; ++k) w.matrix_[k * n + k] = 1;
  return w;
}

WeylElement CoxeterGroup::generator(int i) const {
  WeylElement w;
  w.rank_ = rank();
  w.word_ = {i};
  w.matrix_ = generators_.at(static_cast<std::size_t>(i));
  return w;
}

WeylElement CoxeterGroup::from_word(std::span<const int> word) const {
  auto m = identity().matrix_;
  for (int i : word) {
    if (i < 0 || static_cast<std::size_t>(i) >= rank())
      throw std::invalid_argument("letter " + std::to_string(i + 1) + " out of range for rank " +
                                  std::to_string(rank()));
    m = compose(m, generators_[static_cast<std::size_t>(i)]);
  }
  return make(std::move(m));
}

WeylElement CoxeterGroup::multiply(const WeylElement& a, const WeylElement& b) const {
  return make(compose(a.matrix_, b.matrix_));
}

WeylElement CoxeterGroup::inverse(const WeylElement& a) const {
  std::vector<int> rev(a.word_.rbegin(), a.word_.rend());
  return from_word(rev);
}

RootVector CoxeterGroup::apply(const WeylElement& w, const RootVector& root) const {
  const std::size_t n = rank();
  RootVector out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i] += w.matrix_[i * n + j] * root[j];
  return out;
}

bool CoxeterGroup::is_left_descent(const WeylElement& w, int i) const {
  return inversions(compose(generators_.at(static_cast<std::size_t>(i)), w.matrix_)) < w.length();
}

bool CoxeterGroup::is_right_descent(const WeylElement& w, int i) const {
  // w(alpha_i) < 0.
  const std::size_t n = rank();
  for (std::size_t k = 0; k < n; ++k) {
    int c = w.matrix_[k * n + static_cast<std::size_t>(i)];
    if (c != 0) return c < 0;
  }
  return false;
}

bool CoxeterGroup::bruhat_leq(const WeylElement& x0, const WeylElement& w0) const {
  std::vector<int> x = x0.matrix_;
  int lx = x0.length();
  std::span<const int> wword(w0.word_);
  while (true) {
    const int lw = static_cast<int>(wword.size());
    if (lx > lw) return false;
    if (lx == 0) return true;
    if (lx == lw) return x == from_word(wword).matrix_;
    const auto s = static_cast<std::size_t>(wword.front());
    auto sx = compose(generators_[s], x);
    int lsx = inversions(sx);
    if (lsx < lx) {
      x = std::move(sx);
      lx = lsx;
    }
    wword = wword.subspan(1);
  }
}

std::vector<WeylElement> CoxeterGroup::all_elements() const {
  std::vector<WeylElement> out{identity()};
  std::set<std::string> seen{matrix_key(out.front().matrix_)};
  std::size_t level_begin = 0;
  while (level_begin < out.size()) {
    const std::size_t level_end = out.size();
    for (std::size_t i = 0; i < rank(); ++i) {
      for (std::size_t u = level_begin; u < level_end; ++u) {
        if (!out[u].word_.empty() && out[u].word_.front() == static_cast<int>(i)) continue;
        auto m = compose(generators_[i], out[u].matrix_);
        if (inversions(m) != out[u].length() + 1) continue;
        auto key = matrix_key(m);
        if (!seen.insert(key).second) continue;
        WeylElement w;
        w.rank_ = rank();
        w.matrix_ = std::move(m);
        w.word_.reserve(out[u].word_.size() + 1);
        w.word_.push_back(static_cast<int>(i));
        w.word_.insert(w.word_.end(), out[u].word_.begin(), out[u].word_.end());
        out.push_back(std::move(w));
      }
    }
    level_begin = level_end;
  }
  return out;
}

// ---------------------------------------------------------------------------

CoxeterTable::CoxeterTable(const CoxeterGroup& group, std::size_t max_order) : group_(group) {
  elements_ = group_.all_elements();
  if (elements_.size() > max_order)
    throw std::length_error("Coxeter group of order " + std::to_string(elements_.size()) +
                            " exceeds table limit");
  const std::size_t n = group_.rank();
  const std::size_t size = elements_.size();
  for (std::size_t x = 0; x < size; ++x) index_.emplace(matrix_key(elements_[x].matrix()), x);
  left_.assign(n, std::vector<std::size_t>(size));
  right_.assign(n, std::vector<std::size_t>(size));
  inverse_.assign(size, 0);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t x = 0; x < size; ++x)
      left_[s][x] = index_.at(matrix_key(group_.compose(group_.generators_[s], elements_[x].matrix())));
  }
  // x s = (s x^{-1})^{-1}.
  for (std::size_t x = 0; x < size; ++x) {
    std::size_t y = 0;
    for (int s : elements_[x].word()) y = left_[static_cast<std::size_t>(s)][y];
    inverse_[x] = y;
  }
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t x = 0; x < size; ++x) right_[s][x] = inverse_[left_[s][inverse_[x]]];
}

std::size_t CoxeterTable::index_of(const WeylElement& w) const {
  return index_.at(matrix_key(w.matrix()));
}

std::size_t CoxeterTable::index_of_word(std::span<const int> word) const {
  std::size_t x = 0;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || static_cast<std::size_t>(*it) >= rank())
      throw std::invalid_argument("letter " + std::to_string(*it + 1) + " out of range");
    x = left_[static_cast<std::size_t>(*it)][x];
  }
  return x;
}

bool CoxeterTable::bruhat_leq(std::size_t x, std::size_t w) const {
  while (true) {
    const int lx = length(x), lw = length(w);
    if (lx > lw) return false;
    if (lx == 0) return true;
    if (lx == lw) return x == w;
    const int s = elements_[w].word().front();
    const std::size_t sx = left(s, x);
    if (length(sx) < lx) x = sx;
    w = left(s, w);
  }
}

// ---------------------------------------------------------------------------

Weight apply(const RootSystem& rs, const WeylElement& w, const Weight& lambda) {
  rs.check_weight(lambda);
  std::vector<Rational> c = lambda.coroot();
  const std::size_t n = rs.rank();
  for (auto it = w.word().rbegin(); it != w.word().rend(); ++it) {
    const auto i = static_cast<std::size_t>(*it);
    const Rational li = c[i];
    if (li.is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (rs.cartan(j, i) != 0) c[j] -= li * Rational(rs.cartan(j, i));
  }
  return Weight(std::move(c), lambda.central());
}

Weight dot(const RootSystem& rs, const WeylElement& w, const Weight& lambda) {
  return apply(rs, w, lambda + rs.rho()) - rs.rho();
}

Weight dot2(const RootSystem& rs, const WeylElement& w, const Weight& lambda) {
  const Weight two_rho = Rational(2) * rs.rho();
  return apply(rs, w, lambda + two_rho) - two_rho;
}

// ---------------------------------------------------------------------------

bool RootSubsystem::contains(const RootVector& beta) const {
  auto hit = [&](const RootVector& b) {
    return std::find(positive_roots.begin(), positive_roots.end(), b) != positive_roots.end();
  };
  return hit(beta) || hit(-beta);
}

std::optional<std::vector<std::int64_t>> RootSubsystem::simple_coordinates(const RootVector& v) const {
  if (is_standard) {
    std::vector<std::int64_t> out(simple_indices.size());
    std::vector<bool> used(v.size(), false);
    for (std::size_t k = 0; k < simple_indices.size(); ++k) {
      out[k] = v[simple_indices[k]];
      used[simple_indices[k]] = true;
    }
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!used[i] && v[i] != 0) return std::nullopt;
    return out;
  }
  QMatrix a(v.size(), QVector(simple_roots.size()));
  QVector b(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    b[i] = v[i];
    for (std::size_t k = 0; k < simple_roots.size(); ++k) a[i][k] = simple_roots[k][i];
  }
  if (simple_roots.empty()) {
    if (!v.is_zero()) return std::nullopt;
    return std::vector<std::int64_t>{};
  }
  auto x = linalg::solve(a, b);
  if (!x) return std::nullopt;
  std::vector<std::int64_t> out;
  for (const auto& r : *x) {
    if (!r.is_integer()) return std::nullopt;
    out.push_back(r.num());
  }
  return out;
}

bool RootSubsystem::in_positive_cone(const RootVector& v) const {
  auto c = simple_coordinates(v);
  return c && std::all_of(c->begin(), c->end(), [](auto x) { return x >= 0; });
}

RootSubsystem make_subsystem(const RootSystem& rs, std::vector<RootVector> positive) {
  RootSubsystem sub;
  std::sort(positive.begin(), positive.end(), [&](const RootVector& a, const RootVector& b) {
    return rs.positive_index(a).value() < rs.positive_index(b).value();
  });
  positive.erase(std::unique(positive.begin(), positive.end()), positive.end());
  std::set<RootVector> members(positive.begin(), positive.end());
  for (const auto& beta : positive) {
    bool decomposable = false;
    for (const auto& gamma : positive) {
      if (gamma == beta) continue;
      RootVector rest = beta - gamma;
      if (rest.is_nonnegative() && members.contains(rest)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) sub.simple_roots.push_back(beta);
  }
  for (const auto& beta : sub.simple_roots) {
    if (beta.height() == 1) {
      for (std::size_t i = 0; i < beta.size(); ++i)
        if (beta[i] == 1) sub.simple_indices.push_back(i);
    } else {
      sub.is_standard = false;
    }
  }
  if (!sub.is_standard) sub.simple_indices.clear();

  sub.rho = rs.zero_weight();
  for (const auto& beta : positive) sub.rho += rs.to_weight(beta);
  sub.rho *= Rational(1, 2);

  const std::size_t k = sub.simple_roots.size();
  sub.cartan.assign(k, std::vector<int>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      sub.cartan[i][j] =
          static_cast<int>(rs.pairing(rs.to_weight(sub.simple_roots[j]), sub.simple_roots[i]).to_integer());
  sub.positive_roots = std::move(positive);
  return sub;
}

RootSubsystem full_subsystem(const RootSystem& rs) { return make_subsystem(rs, rs.positive_roots()); }

LeviDatum phi_mu(const Weight& mu, const RootSystem& rs) {
  rs.check_weight(mu);
  std::vector<RootVector> pos;
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k)
    if (RootSystem::pairing_coroot(mu, rs.coroot(k)).is_zero()) pos.push_back(rs.positive_roots()[k]);
  return make_subsystem(rs, std::move(pos));
}

bool is_standard_levi(const LeviDatum& levi) { return levi.is_standard; }

namespace {

Weight simple_reflect(const RootSystem& rs, const Weight& lambda, std::size_t i) {
  const Rational li = lambda[i];
  if (li.is_zero()) return lambda;
  std::vector<Rational> c = lambda.coroot();
  for (std::size_t j = 0; j < rs.rank(); ++j)
    if (rs.cartan(j, i) != 0) c[j] -= li * Rational(rs.cartan(j, i));
  return Weight(std::move(c), lambda.central());
}

bool has_standard_centraliser(const RootSystem& rs, const Weight& mu) {
  // Phi_mu is standard iff each of its positive roots is supported on simple
  // roots that are themselves in Phi_mu.
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
    if (!RootSystem::pairing_coroot(mu, rs.coroot(k)).is_zero()) continue;
    const auto& beta = rs.positive_roots()[k];
    for (std::size_t i = 0; i < beta.size(); ++i)
      if (beta[i] != 0 && !mu[i].is_zero()) return false;
  }
  return true;
}

}  // namespace

LeviReduction minimal_levi_reduction(const Weight& mu, const RootSystem& rs) {
  rs.check_weight(mu);
  const CoxeterGroup group(rs.cartan_matrix());
  std::map<Weight, int> dist{{mu, 0}};
  std::vector<Weight> level{mu};
  std::vector<Weight> targets;
  int depth = 0;
  while (true) {
    for (const auto& x : level)
      if (has_standard_centraliser(rs, x)) targets.push_back(x);
    if (!targets.empty()) break;
    std::vector<Weight> next;
    for (const auto& x : level)
      for (std::size_t i = 0; i < rs.rank(); ++i) {
        Weight y = simple_reflect(rs, x, i);
        if (dist.emplace(y, depth + 1).second) next.push_back(std::move(y));
      }
    if (next.empty()) throw std::logic_error("W-orbit exhausted without a standard centraliser");
    level = std::move(next);
    ++depth;
  }

  // Walk back from the targets choosing the smallest admissible letter first;
  // letters are produced leftmost first.
  std::vector<int> word;
  std::set<Weight> current(targets.begin(), targets.end());
  for (int k = depth; k > 0; --k) {
    for (std::size_t j = 0; j < rs.rank(); ++j) {
      std::set<Weight> prev;
      for (const auto& x : current) {
        Weight y = simple_reflect(rs, x, j);
        auto it = dist.find(y);
        if (it != dist.end() && it->second == k - 1) prev.insert(std::move(y));
      }
      if (!prev.empty()) {
        word.push_back(static_cast<int>(j));
        current = std::move(prev);
        break;
      }
    }
  }

  LeviReduction out{group.from_word(word), rs.zero_weight(), {}};
  if (out.w.word() != word) throw std::logic_error("reduction word is not lexicographically first");
  out.mu_prime = apply(rs, out.w, mu);
  out.levi = phi_mu(out.mu_prime, rs);
  if (!out.levi.is_standard) throw std::logic_error("reduction did not reach a standard Levi");
  return out;
}

bool satisfies_prefix_condition(const RootSystem& rs, const WeylElement& w, const Weight& mu) {
  Weight cur = mu;
  for (auto it = w.word().rbegin(); it != w.word().rend(); ++it) {
    const auto i = static_cast<std::size_t>(*it);
    if (cur[i].is_zero()) return false;
    cur = simple_reflect(rs, cur, i);
  }
  return true;
}

std::vector<int> parse_word(std::string_view text, std::size_t rank) {
  std::vector<int> word;
  if (text == "e" || text.empty()) return word;
  auto push = [&](std::string_view tok) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError("malformed word letter '" + std::string(tok) + "'");
    if (v < 1 || static_cast<std::size_t>(v) > rank)
      throw ParseError("word letter " + std::to_string(v) + " out of range 1.." + std::to_string(rank));
    word.push_back(v - 1);
  };
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      push(text.substr(start, end - start));
      start = end + 1;
    }
  } else {
    for (std::size_t k = 0; k < text.size(); ++k) push(text.substr(k, 1));
  }
  return word;
}

}  // namespace takiff
