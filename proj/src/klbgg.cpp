#include "takiff/klbgg.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace takiff {

// ---------------------------------------------------------------------------
// Polynomials

KLPolynomial::KLPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void KLPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t KLPolynomial::coeff(int d) const {
  if (d < 0 || d >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(d)];
}

std::int64_t KLPolynomial::at_one() const {
  std::int64_t s = 0;
  for (auto c : coeffs_) s += c;
  return s;
}

KLPolynomial& KLPolynomial::operator+=(const KLPolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

KLPolynomial& KLPolynomial::operator-=(const KLPolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

KLPolynomial operator*(const KLPolynomial& a, const KLPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return KLPolynomial(std::move(c));
}

KLPolynomial KLPolynomial::scaled(std::int64_t c, int shift) const {
  if (c == 0 || is_zero()) return {};
  std::vector<std::int64_t> out(static_cast<std::size_t>(shift), 0);
  for (auto x : coeffs_) out.push_back(c * x);
  return KLPolynomial(std::move(out));
}

std::string KLPolynomial::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    std::int64_t c = coeffs_[d];
    if (c == 0) continue;
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    std::int64_t a = c < 0 ? -c : c;
    if (d == 0) {
      s += std::to_string(a);
      continue;
    }
    if (a != 1) s += std::to_string(a);
    s += "q";
    if (d > 1) s += "^" + std::to_string(d);
  }
  return s;
}

std::string KLPolynomial::coeff_str() const {
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coeffs_[i]);
  }
  return s;
}

KLPolynomial KLPolynomial::parse_coeffs(std::string_view text) {
  std::vector<std::int64_t> c;
  if (text.empty()) return {};
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string tok(text.substr(start, end - start));
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw std::runtime_error("malformed polynomial coefficient '" + tok + "'");
    }
    if (used != tok.size()) throw std::runtime_error("malformed polynomial coefficient '" + tok + "'");
    c.push_back(v);
    start = end + 1;
  }
  return KLPolynomial(std::move(c));
}

// ---------------------------------------------------------------------------
// Cache

KLCache::KLCache() = default;
KLCache::~KLCache() = default;

std::optional<KLPolynomial> KLCache::find(const Key& key) const {
  std::lock_guard lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void KLCache::insert(const Key& key, const KLPolynomial& p) {
  std::lock_guard lock(mutex_);
  auto [it, added] = entries_.emplace(key, p);
  if (added) {
    fresh_.push_back(key);
  } else if (it->second != p) {
    throw std::logic_error("conflicting KL cache entry for " + std::get<1>(key) + "," + std::get<2>(key));
  }
}

std::size_t KLCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

std::size_t KLCache::unsaved() const {
  std::lock_guard lock(mutex_);
  return fresh_.size();
}

void KLCache::clear() {
  std::lock_guard lock(mutex_);
  entries_.clear();
  fresh_.clear();
  engines_.clear();
}

std::shared_ptr<const CoxeterTable> KLCache::table(const IntMatrix& cartan) {
  CoxeterGroup group(cartan);
  {
    std::lock_guard lock(mutex_);
    auto it = tables_.find(group.fingerprint());
    if (it != tables_.end()) return it->second;
  }
  auto t = std::make_shared<const CoxeterTable>(group);
  std::lock_guard lock(mutex_);
  return tables_.emplace(group.fingerprint(), std::move(t)).first->second;
}

KLEngine& KLCache::engine(const IntMatrix& cartan) {
  auto t = table(cartan);
  const std::string fp = t->group().fingerprint();
  {
    std::lock_guard lock(mutex_);
    auto it = engines_.find(fp);
    if (it != engines_.end()) return *it->second;
  }
  auto e = std::make_unique<KLEngine>(t, *this);
  std::lock_guard lock(mutex_);
  return *engines_.emplace(fp, std::move(e)).first->second;
}

std::string KLCache::serialize() const {
  std::lock_guard lock(mutex_);
  std::string out = std::string(kHeader) + "\n";
  for (const auto& [key, p] : entries_)
    out += std::get<0>(key) + "\t" + std::get<1>(key) + "\t" + std::get<2>(key) + "\t" + p.coeff_str() + "\n";
  return out;
}

void KLCache::merge_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kHeader) throw std::runtime_error("not a KL cache (bad header)");
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      auto tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (fields.size() != 4) throw std::runtime_error("malformed KL cache line " + std::to_string(lineno));
    Key key{fields[0], fields[1], fields[2]};
    auto p = KLPolynomial::parse_coeffs(fields[3]);
    std::lock_guard lock(mutex_);
    auto [it, added] = entries_.emplace(key, p);
    if (!added && it->second != p)
      throw std::runtime_error("conflicting KL cache entry on line " + std::to_string(lineno));
  }
}

void KLCache::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return;
  std::stringstream buf;
  buf << in.rdbuf();
  merge_text(buf.str());
  std::lock_guard lock(mutex_);
  fresh_.clear();
}

void KLCache::save(const std::filesystem::path& path) {
  const std::string text = serialize();
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write KL cache " + path.string());
  out << text;
  std::lock_guard lock(mutex_);
  fresh_.clear();
}

void KLCache::append_new(const std::filesystem::path& path) {
  std::lock_guard lock(mutex_);
  if (fresh_.empty()) return;
  const bool exists = std::filesystem::exists(path);
  if (!exists && path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out) throw std::runtime_error("cannot append to KL cache " + path.string());
  if (!exists) out << kHeader << "\n";
  for (const auto& key : fresh_)
    out << std::get<0>(key) << "\t" << std::get<1>(key) << "\t" << std::get<2>(key) << "\t"
        << entries_.at(key).coeff_str() << "\n";
  fresh_.clear();
}

// ---------------------------------------------------------------------------
// KL recursion

KLEngine::KLEngine(std::shared_ptr<const CoxeterTable> table, KLCache& cache)
    : table_(std::move(table)), cache_(cache) {}

KLPolynomial KLEngine::polynomial(std::size_t x, std::size_t w) {
  std::lock_guard lock(mutex_);
  return compute(x, w);
}

std::int64_t KLEngine::mu(std::size_t x, std::size_t w) {
  std::lock_guard lock(mutex_);
  const int gap = table_->length(w) - table_->length(x);
  if (gap <= 0 || gap % 2 == 0) return 0;
  return compute(x, w).coeff((gap - 1) / 2);
}

// For a left descent s of w with v = s w, c = [s x < x]:
//   P_{x,w} = q^{1-c} P_{sx,v} + q^c P_{x,v}
//             - sum_{z < v, s z < z} mu(z,v) q^{(l(w)-l(z))/2} P_{x,z}.
const KLPolynomial& KLEngine::compute(std::size_t x, std::size_t w) {
  static const KLPolynomial zero{};
  static const KLPolynomial unit = KLPolynomial::one();
  if (x == w) return unit;
  if (!table_->bruhat_leq(x, w)) return zero;
  auto key = std::make_pair(x, w);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const auto& t = *table_;
  const std::string fp = t.group().fingerprint();
  KLCache::Key ckey{fp, t.element(x).word_str(), t.element(w).word_str()};
  if (auto hit = cache_.find(ckey)) return memo_.emplace(key, *hit).first->second;

  const int s = t.element(w).word().front();
  const std::size_t v = t.left(s, w);
  const std::size_t sx = t.left(s, x);
  const int c = t.length(sx) < t.length(x) ? 1 : 0;
  KLPolynomial p = compute(sx, v).scaled(1, 1 - c);
  p += compute(x, v).scaled(1, c);
  const auto& terms = mu_list(v);
  for (const auto& [z, m] : terms) {
    if (t.length(t.left(s, z)) > t.length(z)) continue;
    if (!t.bruhat_leq(x, z)) continue;
    p -= compute(x, z).scaled(m, (t.length(w) - t.length(z)) / 2);
  }
  cache_.insert(ckey, p);
  return memo_.emplace(key, std::move(p)).first->second;
}

const std::vector<std::pair<std::size_t, std::int64_t>>& KLEngine::mu_list(std::size_t v) {
  if (auto it = mu_lists_.find(v); it != mu_lists_.end()) return it->second;
  std::vector<std::pair<std::size_t, std::int64_t>> out;
  const auto& t = *table_;
  for (std::size_t z = 0; z < t.size(); ++z) {
    const int gap = t.length(v) - t.length(z);
    if (gap <= 0) break;  // elements are ordered by length
    if (gap % 2 == 0 || !t.bruhat_leq(z, v)) continue;
    std::int64_t m = compute(z, v).coeff((gap - 1) / 2);
    if (m != 0) out.emplace_back(z, m);
  }
  return mu_lists_.emplace(v, std::move(out)).first->second;
}

KLPolynomial kl_polynomial(const CoxeterGroup& group, const WeylElement& x, const WeylElement& w, KLCache& cache) {
  KLEngine& e = cache.engine(group.cartan());
  return e.polynomial(e.table().index_of(x), e.table().index_of(w));
}

// ---------------------------------------------------------------------------
// BGG multiplicities

RootSubsystem integral_subsystem(const Weight& nu, const RootSystem& rs, const RootSubsystem& sys) {
  const Weight shifted = nu + sys.rho;
  std::vector<RootVector> pos;
  for (const auto& beta : sys.positive_roots)
    if (rs.pairing(shifted, beta).is_integer()) pos.push_back(beta);
  return make_subsystem(rs, std::move(pos));
}

std::vector<Weight> DotOrbit::points() const {
  std::vector<Weight> out;
  for (const auto& [w, _] : longest) out.push_back(w);
  return out;
}

namespace {

Weight reflect_dot(const RootSystem& rs, const Weight& rho, const Weight& lambda, const RootVector& beta) {
  return rs.reflect(lambda + rho, beta) - rho;
}

}  // namespace

DotOrbit dot_orbit(const Weight& nu, const RootSystem& rs, const RootSubsystem& sys, KLCache& cache) {
  rs.check_weight(nu);
  DotOrbit orbit;
  orbit.integral = integral_subsystem(nu, rs, sys);
  const auto& simple = orbit.integral.simple_roots;
  orbit.group = cache.table(orbit.integral.cartan);

  Weight a = nu;
  for (bool moved = true; moved;) {
    moved = false;
    for (const auto& beta : simple) {
      if (rs.pairing(a + sys.rho, beta) > Rational(0)) {
        a = reflect_dot(rs, sys.rho, a, beta);
        moved = true;
      }
    }
  }
  orbit.antidominant = a;

  const auto& t = *orbit.group;
  orbit.image.assign(t.size(), a);
  for (std::size_t x = 1; x < t.size(); ++x) {
    const int s = t.element(x).word().front();
    orbit.image[x] = reflect_dot(rs, sys.rho, orbit.image[t.left(s, x)], simple[static_cast<std::size_t>(s)]);
  }
  for (std::size_t x = 0; x < t.size(); ++x) orbit.longest[orbit.image[x]] = x;  // lengths ascend
  return orbit;
}

std::int64_t bgg_mult_in_orbit(const DotOrbit& orbit, const Weight& nu, const Weight& nu2, KLCache& cache) {
  auto ix = orbit.longest.find(nu);
  auto iy = orbit.longest.find(nu2);
  if (ix == orbit.longest.end() || iy == orbit.longest.end()) return 0;
  const auto& t = *orbit.group;
  // [M(x.a) : L(y.a)] = P_{w0 x, w0 y}(1) with x, y longest in their cosets.
  auto times_w0 = [&](std::size_t x) {
    const auto& w0 = t.element(t.longest()).word();
    for (auto it = w0.rbegin(); it != w0.rend(); ++it) x = t.left(*it, x);
    return x;
  };
  KLEngine& e = cache.engine(orbit.integral.cartan);
  return e.polynomial(times_w0(ix->second), times_w0(iy->second)).at_one();
}

std::int64_t bgg_mult(const Weight& nu, const Weight& nu2, const RootSystem& rs, const RootSubsystem& sys,
                      KLCache& cache) {
  rs.check_weight(nu);
  rs.check_weight(nu2);
  if (nu == nu2) return 1;
  auto diff = rs.weight_sub(nu, nu2);
  if (!diff || !sys.in_positive_cone(*diff)) return 0;
  DotOrbit orbit = dot_orbit(nu, rs, sys, cache);
  return bgg_mult_in_orbit(orbit, nu, nu2, cache);
}

std::int64_t bgg_mult(const Weight& nu, const Weight& nu2, const RootSystem& rs, KLCache& cache) {
  return bgg_mult(nu, nu2, rs, full_subsystem(rs), cache);
}

DecompositionMatrix decomposition_matrix(const Weight& seed, const RootSystem& rs, const RootSubsystem& sys,
                                         KLCache& cache) {
  DotOrbit orbit = dot_orbit(seed, rs, sys, cache);
  std::vector<std::pair<std::int64_t, Weight>> below;
  for (const auto& pt : orbit.points()) {
    auto d = rs.weight_sub(seed, pt);
    if (d && sys.in_positive_cone(*d)) below.emplace_back(d->height(), pt);
  }
  std::sort(below.begin(), below.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  DecompositionMatrix m;
  for (auto& [_, w] : below) m.weights.push_back(w);
  const std::size_t n = m.weights.size();
  m.entries.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        m.entries[i][j] = 1;
        continue;
      }
      auto d = rs.weight_sub(m.weights[i], m.weights[j]);
      if (d && sys.in_positive_cone(*d)) m.entries[i][j] = bgg_mult_in_orbit(orbit, m.weights[i], m.weights[j], cache);
    }
  return m;
}

}  // namespace takiff
