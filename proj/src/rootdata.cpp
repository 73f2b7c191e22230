#include "takiff/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <set>
#include <sstream>

namespace takiff {

// ---------------------------------------------------------------------------
// Cartan types

int CartanType::semisimple_rank() const {
  int r = 0;
  for (const auto& c : components) r += c.rank;
  return r;
}

std::string CartanType::str() const {
  std::string s;
  for (std::size_t k = 0; k < components.size(); ++k) {
    if (k) s += 'x';
    s += components[k].family;
    s += std::to_string(components[k].rank);
  }
  if (torus_rank > 0) s += "+T" + std::to_string(torus_rank);
  return s.empty() ? "T0" : s;
}

namespace {

bool rank_is_legal(char family, int n) {
  switch (family) {
    case 'A': return n >= 1;
    case 'B': return n >= 2;
    case 'C': return n >= 2;
    case 'D': return n >= 3;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
  }
}

int parse_count(std::string_view digits, std::string_view token) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
    throw ParseError("malformed rank in Cartan type token '" + std::string(token) + "'");
  return v;
}

}  // namespace

CartanType parse_cartan_type(std::string_view text) {
  CartanType ct;
  std::string_view body = text;
  if (auto plus = text.find('+'); plus != std::string_view::npos) {
    std::string_view torus = text.substr(plus + 1);
    body = text.substr(0, plus);
    if (torus.empty() || std::toupper(static_cast<unsigned char>(torus.front())) != 'T')
      throw ParseError("malformed torus suffix '+" + std::string(torus) + "'");
    ct.torus_rank = parse_count(torus.substr(1), torus);
  }
  if (body.empty()) {
    if (ct.torus_rank == 0) throw ParseError("empty Cartan type");
    return ct;
  }
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t end = body.find_first_of("xX", start);
    if (end == std::string_view::npos) end = body.size();
    std::string_view token = body.substr(start, end - start);
    if (token.empty()) throw ParseError("empty component in Cartan type '" + std::string(text) + "'");
    char family = static_cast<char>(std::toupper(static_cast<unsigned char>(token.front())));
    if (family < 'A' || family > 'G')
      throw ParseError("unknown Cartan family in token '" + std::string(token) + "'");
    int n = parse_count(token.substr(1), token);
    if (!rank_is_legal(family, n))
      throw ParseError("rank out of bounds in token '" + std::string(token) + "'");
    ct.components.push_back({family, n});
    start = end + 1;
  }
  return ct;
}

IntMatrix cartan_matrix(const CartanType& type) {
  const int total = type.semisimple_rank();
  IntMatrix c(total, std::vector<int>(total, 0));
  int off = 0;
  for (const auto& comp : type.components) {
    const int n = comp.rank;
    auto link = [&](int i, int j, int cij, int cji) {
      c[off + i][off + j] = cij;
      c[off + j][off + i] = cji;
    };
    for (int i = 0; i < n; ++i) c[off + i][off + i] = 2;
    switch (comp.family) {
      case 'A':
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
        break;
      case 'B':
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
        link(n - 2, n - 1, -1, -2);  // alpha_n short
        break;
      case 'C':
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
        link(n - 2, n - 1, -2, -1);  // alpha_n long
        break;
      case 'D':
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
        link(n - 3, n - 1, -1, -1);
        break;
      case 'E':
        link(0, 2, -1, -1);
        link(1, 3, -1, -1);
        for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1, -1);
        break;
      case 'F':
        link(0, 1, -1, -1);
        link(1, 2, -1, -2);  // alpha_1, alpha_2 long
        link(2, 3, -1, -1);
        break;
      case 'G':
        link(0, 1, -3, -1);  // alpha_1 short
        break;
      default:
        throw ParseError(std::string("unknown Cartan family ") + comp.family);
    }
    off += n;
  }
  return c;
}

// ---------------------------------------------------------------------------
// Vectors

std::int64_t RootVector::height() const {
  std::int64_t h = 0;
  for (auto c : coeffs_) h += c;
  return h;
}

bool RootVector::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](auto c) { return c == 0; });
}

bool RootVector::is_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](auto c) { return c >= 0; });
}

RootVector RootVector::operator-() const {
  RootVector r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

RootVector& RootVector::operator+=(const RootVector& o) {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

RootVector& RootVector::operator-=(const RootVector& o) {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

std::string RootVector::str() const {
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto c = coeffs_[i];
    if (c == 0) continue;
    if (c < 0)
      s += '-';
    else if (!s.empty())
      s += '+';
    if (c != 1 && c != -1) s += std::to_string(c < 0 ? -c : c);
    s += "a" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

bool Weight::is_integral() const {
  return std::all_of(coroot_.begin(), coroot_.end(), [](const Rational& r) { return r.is_integer(); });
}

Weight Weight::operator-() const {
  Weight w = *this;
  for (auto& r : w.coroot_) r = -r;
  for (auto& r : w.central_) r = -r;
  return w;
}

Weight& Weight::operator+=(const Weight& o) {
  for (std::size_t i = 0; i < coroot_.size(); ++i) coroot_[i] += o.coroot_[i];
  for (std::size_t i = 0; i < central_.size(); ++i) central_[i] += o.central_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (std::size_t i = 0; i < coroot_.size(); ++i) coroot_[i] -= o.coroot_[i];
  for (std::size_t i = 0; i < central_.size(); ++i) central_[i] -= o.central_[i];
  return *this;
}

Weight& Weight::operator*=(const Rational& k) {
  for (auto& r : coroot_) r *= k;
  for (auto& r : central_) r *= k;
  return *this;
}

std::string Weight::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coroot_.size(); ++i) {
    if (i) s += ',';
    s += coroot_[i].str();
  }
  if (!central_.empty()) {
    s += ';';
    for (std::size_t i = 0; i < central_.size(); ++i) {
      if (i) s += ',';
      s += central_[i].str();
    }
  }
  return s + ")";
}

std::vector<RootVector> positive_roots_from_cartan(const IntMatrix& cartan) {
  const std::size_t n = cartan.size();
  std::vector<RootVector> out;
  std::set<RootVector> found;
  std::vector<RootVector> layer;
  for (std::size_t i = 0; i < n; ++i) layer.push_back(RootVector::simple(n, i));
  while (!layer.empty()) {
    for (const auto& beta : layer) {
      found.insert(beta);
      out.push_back(beta);
    }
    std::set<RootVector, std::greater<>> next;
    for (const auto& beta : layer) {
      for (std::size_t i = 0; i < n; ++i) {
        if (beta == RootVector::simple(n, i)) continue;
        // beta - p alpha_i, ..., beta is the lower end of the string; it extends
        // upwards q = p - <beta, alpha_i^vee> steps.
        std::int64_t p = 0;
        RootVector down = beta;
        while (true) {
          down[i] -= 1;
          if (!found.contains(down)) break;
          ++p;
        }
        std::int64_t pair = 0;
        for (std::size_t j = 0; j < n; ++j) pair += beta[j] * cartan[i][j];
        if (p - pair > 0) {
          RootVector up = beta;
          up[i] += 1;
          next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Root systems

RootSystem::RootSystem(const CartanType& type) : type_(type), cartan_(takiff::cartan_matrix(type)) {
  const std::size_t n = cartan_.size();

  // Symmetrise along the Dynkin diagram: D_j C[j][i] = D_i C[i][j].
  symmetrizer_.assign(n, Rational(0));
  for (std::size_t s = 0; s < n; ++s) {
    if (!symmetrizer_[s].is_zero()) continue;
    symmetrizer_[s] = 1;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || cartan_[i][j] == 0 || !symmetrizer_[j].is_zero()) continue;
        symmetrizer_[j] = symmetrizer_[i] * Rational(cartan_[i][j], cartan_[j][i]);
        stack.push_back(j);
      }
    }
  }

  positive_ = positive_roots_from_cartan(cartan_);
  for (std::size_t k = 0; k < positive_.size(); ++k) index_[positive_[k]] = k;

  // beta^vee = sum_j beta_j D_j (2 / (beta, beta)) alpha_j^vee.
  for (const auto& beta : positive_) {
    Rational norm = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (beta[i] && beta[j]) norm += Rational(beta[i] * beta[j] * cartan_[i][j]) * symmetrizer_[i];
    RootVector co(n);
    for (std::size_t j = 0; j < n; ++j)
      co[j] = (Rational(2 * beta[j]) * symmetrizer_[j] / norm).to_integer();
    coroots_.push_back(std::move(co));
  }

  if (n > 0) cartan_inverse_ = *linalg::inverse(linalg::to_rational(cartan_));
  rho_ = Weight(std::vector<Rational>(n, Rational(1)), std::vector<Rational>(torus_rank()));
}

std::optional<std::size_t> RootSystem::positive_index(const RootVector& beta) const {
  auto it = index_.find(beta);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool RootSystem::is_root(const RootVector& beta) const {
  return index_.contains(beta) || index_.contains(-beta);
}

Weight RootSystem::make_weight(std::vector<Rational> coroot, std::vector<Rational> central) const {
  if (central.empty()) central.assign(torus_rank(), Rational(0));
  Weight w(std::move(coroot), std::move(central));
  check_weight(w);
  return w;
}

void RootSystem::check_weight(const Weight& w) const {
  if (w.rank() != rank() || w.torus_rank() != torus_rank())
    throw std::invalid_argument("weight " + w.str() + " does not match root system " + type_.str());
}

void RootSystem::check_root_vector(const RootVector& v) const {
  if (v.size() != rank())
    throw std::invalid_argument("root vector " + v.str() + " does not match root system " + type_.str());
}

Weight RootSystem::to_weight(const RootVector& chi) const {
  check_root_vector(chi);
  std::vector<Rational> coords(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < rank(); ++j) s += cartan_[i][j] * chi[j];
    coords[i] = s;
  }
  return Weight(std::move(coords), std::vector<Rational>(torus_rank()));
}

Rational RootSystem::pairing_coroot(const Weight& lambda, const RootVector& coroot) {
  Rational s = 0;
  for (std::size_t j = 0; j < coroot.size(); ++j)
    if (coroot[j] != 0) s += Rational(coroot[j]) * lambda[j];
  return s;
}

Rational RootSystem::pairing(const Weight& lambda, const RootVector& beta) const {
  check_weight(lambda);
  check_root_vector(beta);
  if (auto k = positive_index(beta)) return pairing_coroot(lambda, coroots_[*k]);
  if (auto k = positive_index(-beta)) return -pairing_coroot(lambda, coroots_[*k]);
  throw std::invalid_argument(beta.str() + " is not a root of " + type_.str());
}

Weight RootSystem::reflect(const Weight& lambda, const RootVector& beta) const {
  Rational c = pairing(lambda, beta);
  if (c.is_zero()) return lambda;
  return lambda - c * to_weight(beta);
}

RootVector RootSystem::reflect_root(const RootVector& chi, std::size_t i) const {
  std::int64_t pair = 0;
  for (std::size_t j = 0; j < rank(); ++j) pair += chi[j] * cartan_[i][j];
  RootVector out = chi;
  out[i] -= pair;
  return out;
}

std::optional<RootVector> RootSystem::weight_sub(const Weight& lambda, const Weight& lambda2) const {
  check_weight(lambda);
  check_weight(lambda2);
  if (lambda.central() != lambda2.central()) return std::nullopt;
  RootVector chi(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < rank(); ++j) {
      Rational d = lambda[j] - lambda2[j];
      if (!d.is_zero()) s += cartan_inverse_[i][j] * d;
    }
    if (!s.is_integer()) return std::nullopt;
    chi[i] = s.num();
  }
  return chi;
}

bool RootSystem::weight_leq(const Weight& lambda2, const Weight& lambda) const {
  auto d = weight_sub(lambda, lambda2);
  return d && d->is_nonnegative();
}

// ---------------------------------------------------------------------------
// Naming

std::string describe_cartan(const IntMatrix& c) {
  const std::size_t n = c.size();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<std::size_t>> parts;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    parts.emplace_back();
    std::vector<std::size_t> stack{s};
    comp[s] = static_cast<int>(parts.size() - 1);
    while (!stack.empty()) {
      auto i = stack.back();
      stack.pop_back();
      parts.back().push_back(i);
      for (std::size_t j = 0; j < n; ++j)
        if (j != i && c[i][j] != 0 && comp[j] < 0) {
          comp[j] = comp[s];
          stack.push_back(j);
        }
    }
  }
  if (parts.empty()) return "T";

  std::string out;
  for (const auto& p : parts) {
    const std::size_t r = p.size();
    std::vector<int> degree(n, 0);
    int triple = 0, dbl = 0;
    std::size_t dbl_i = 0, dbl_j = 0;
    for (auto i : p)
      for (auto j : p) {
        if (i >= j || c[i][j] == 0) continue;
        ++degree[i];
        ++degree[j];
        int bond = c[i][j] * c[j][i];
        if (bond == 3) ++triple;
        if (bond == 2) {
          ++dbl;
          dbl_i = i;
          dbl_j = j;
        }
      }
    std::string name;
    auto branch = std::find_if(p.begin(), p.end(), [&](auto i) { return degree[i] == 3; });
    if (triple) {
      name = "G2";
    } else if (dbl) {
      if (r == 2) {
        name = "B2";
      } else if (degree[dbl_i] == 2 && degree[dbl_j] == 2) {
        name = "F4";
      } else {
        // Terminal node of the double bond: short means B, long means C.
        std::size_t end = degree[dbl_i] == 1 ? dbl_i : dbl_j;
        std::size_t other = end == dbl_i ? dbl_j : dbl_i;
        name = (c[end][other] == -2 ? "B" : "C") + std::to_string(r);
      }
    } else if (branch != p.end()) {
      std::vector<std::size_t> arms;
      for (auto j : p) {
        if (j == *branch || c[*branch][j] == 0) continue;
        std::size_t len = 0, prev = *branch, cur = j;
        while (true) {
          ++len;
          std::size_t next = n;
          for (auto k : p)
            if (k != cur && k != prev && c[cur][k] != 0) next = k;
          if (next == n) break;
          prev = cur;
          cur = next;
        }
        arms.push_back(len);
      }
      std::sort(arms.begin(), arms.end());
      name = (arms[0] == 1 && arms[1] == 1) ? "D" + std::to_string(r) : "E" + std::to_string(r);
    } else {
      name = "A" + std::to_string(r);
    }
    if (!out.empty()) out += 'x';
    out += name;
  }
  return out;
}

}  // namespace takiff
