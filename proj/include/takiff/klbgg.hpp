#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "takiff/rootdata.hpp"
#include "takiff/weyl.hpp"

namespace takiff {

/// Integer polynomial in q, dense from degree zero, trailing zeros trimmed.
class KLPolynomial {
 public:
  KLPolynomial() = default;
  explicit KLPolynomial(std::vector<std::int64_t> coeffs);
  static KLPolynomial one() { return KLPolynomial({1}); }

  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coeff(int d) const;
  std::int64_t at_one() const;

  KLPolynomial& operator+=(const KLPolynomial& o);
  KLPolynomial& operator-=(const KLPolynomial& o);
  friend KLPolynomial operator+(KLPolynomial a, const KLPolynomial& b) { return a += b; }
  friend KLPolynomial operator-(KLPolynomial a, const KLPolynomial& b) { return a -= b; }
  friend KLPolynomial operator*(const KLPolynomial& a, const KLPolynomial& b);
  /// Multiplication by c q^shift.
  KLPolynomial scaled(std::int64_t c, int shift) const;

  friend bool operator==(const KLPolynomial&, const KLPolynomial&) = default;

  /// "0", "1", "1 + q", "1 + 2q + q^2".
  std::string str() const;
  /// "1,0,2" coefficient list; "" for zero.
  std::string coeff_str() const;
  static KLPolynomial parse_coeffs(std::string_view text);

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

class KLEngine;

/// Shared store of Kazhdan-Lusztig polynomials keyed by (Coxeter fingerprint,
/// word of x, word of w), plus the enumerated groups they were computed in.
///
/// File format, one record per line after a version header:
///   takiff-kl-cache 1
///   <fingerprint>\t<word x>\t<word w>\t<c0,c1,...>
/// Later duplicates must agree with earlier ones. Lines may be appended.
class KLCache {
 public:
  static constexpr const char* kHeader = "takiff-kl-cache 1";

  KLCache();
  ~KLCache();
  KLCache(const KLCache&) = delete;
  KLCache& operator=(const KLCache&) = delete;

  using Key = std::tuple<std::string, std::string, std::string>;

  std::optional<KLPolynomial> find(const Key& key) const;
  void insert(const Key& key, const KLPolynomial& p);
  std::size_t size() const;
  std::size_t unsaved() const;
  void clear();

  /// Enumerated group for a Cartan matrix, built once per fingerprint.
  std::shared_ptr<const CoxeterTable> table(const IntMatrix& cartan);
  KLEngine& engine(const IntMatrix& cartan);

  /// Canonical text: header then records in key order.
  std::string serialize() const;
  /// Merges records from text; throws std::runtime_error on a bad header,
  /// malformed line or conflicting duplicate.
  void merge_text(std::string_view text);

  /// Merges a cache file if it exists.
  void load(const std::filesystem::path& path);
  /// Rewrites the file canonically.
  void save(const std::filesystem::path& path);
  /// Appends records added since the last load/save/append.
  void append_new(const std::filesystem::path& path);

 private:
  mutable std::mutex mutex_;
  std::map<Key, KLPolynomial> entries_;
  std::vector<Key> fresh_;
  std::map<std::string, std::shared_ptr<const CoxeterTable>> tables_;
  std::map<std::string, std::unique_ptr<KLEngine>> engines_;
};

/// KL recursion on one enumerated group. Calls are serialised by an internal
/// lock; results are written through to the owning cache.
class KLEngine {
 public:
  KLEngine(std::shared_ptr<const CoxeterTable> table, KLCache& cache);

  const CoxeterTable& table() const { return *table_; }
  KLPolynomial polynomial(std::size_t x, std::size_t w);
  /// Coefficient of q^{(l(w)-l(x)-1)/2} in P_{x,w}; zero unless x < w with odd length gap.
  std::int64_t mu(std::size_t x, std::size_t w);

 private:
  const KLPolynomial& compute(std::size_t x, std::size_t w);
  const std::vector<std::pair<std::size_t, std::int64_t>>& mu_list(std::size_t v);

  std::shared_ptr<const CoxeterTable> table_;
  KLCache& cache_;
  std::mutex mutex_;
  std::map<std::pair<std::size_t, std::size_t>, KLPolynomial> memo_;
  std::map<std::size_t, std::vector<std::pair<std::size_t, std::int64_t>>> mu_lists_;
};

KLPolynomial kl_polynomial(const CoxeterGroup& group, const WeylElement& x, const WeylElement& w, KLCache& cache);

/// Roots of sys with <nu + rho_sys, beta^vee> integral.
RootSubsystem integral_subsystem(const Weight& nu, const RootSystem& rs, const RootSubsystem& sys);

/// The W_[nu]-dot-orbit of a weight inside a subsystem, with the data needed to
/// read off Verma multiplicities.
struct DotOrbit {
  RootSubsystem integral;
  std::shared_ptr<const CoxeterTable> group;
  Weight antidominant;
  /// image[x] = x . antidominant for each group element index x.
  std::vector<Weight> image;
  /// Orbit point -> longest element mapping the antidominant point onto it.
  std::map<Weight, std::size_t> longest;

  std::vector<Weight> points() const;
};

/// Dot action is w(lambda + rho_sys) - rho_sys.
DotOrbit dot_orbit(const Weight& nu, const RootSystem& rs, const RootSubsystem& sys, KLCache& cache);

/// [M(nu) : L(nu2)] in category O of the reductive subalgebra attached to sys.
std::int64_t bgg_mult(const Weight& nu, const Weight& nu2, const RootSystem& rs, const RootSubsystem& sys,
                      KLCache& cache);
std::int64_t bgg_mult(const Weight& nu, const Weight& nu2, const RootSystem& rs, KLCache& cache);

/// Multiplicity read off a precomputed orbit; both weights must be orbit points.
std::int64_t bgg_mult_in_orbit(const DotOrbit& orbit, const Weight& nu, const Weight& nu2, KLCache& cache);

struct DecompositionMatrix {
  /// Orbit points <= seed, lowest first (height of seed - point descending,
  /// then by coordinates).
  std::vector<Weight> weights;
  /// entries[i][j] = [M(weights[i]) : L(weights[j])].
  std::vector<std::vector<std::int64_t>> entries;
};

DecompositionMatrix decomposition_matrix(const Weight& seed, const RootSystem& rs, const RootSubsystem& sys,
                                         KLCache& cache);

}  // namespace takiff
