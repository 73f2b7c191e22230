#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "takiff/rootdata.hpp"

namespace takiff {

/// Element of a finite Weyl group, carried as its lexicographically first
/// reduced word together with its action on simple-root coordinates.
/// Equality is equality of the action.
class WeylElement {
 public:
  /// Reduced word, 0-based indices; the element is s_{word[0]} s_{word[1]} ...
  const std::vector<int>& word() const { return word_; }
  /// Row-major action matrix; column j is the image of the j-th simple root.
  const std::vector<int>& matrix() const { return matrix_; }
  std::size_t rank() const { return rank_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }

  /// 1-based letters without separators ("2132"), or "e" for the identity.
  /// Letters above 9 are comma separated.
  std::string word_str() const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.matrix_ == b.matrix_; }

 private:
  friend class CoxeterGroup;
  std::size_t rank_ = 0;
  std::vector<int> word_;
  std::vector<int> matrix_;
};

/// Finite Weyl group presented by a Cartan matrix. Works for the Weyl group of
/// a root system and equally for the abstract Weyl group of a root subsystem
/// given by its own Cartan matrix.
class CoxeterGroup {
 public:
  explicit CoxeterGroup(IntMatrix cartan);

  std::size_t rank() const { return cartan_.size(); }
  const IntMatrix& cartan() const { return cartan_; }
  const std::vector<RootVector>& positive_roots() const { return positive_; }
  /// Stable identifier of the presentation, e.g. "2,-1;-1,2".
  const std::string& fingerprint() const { return fingerprint_; }

  WeylElement identity() const;
  WeylElement generator(int i) const;
  /// Any word (reduced or not); result carries the canonical reduced word.
  WeylElement from_word(std::span<const int> word) const;
  WeylElement multiply(const WeylElement& a, const WeylElement& b) const;
  WeylElement inverse(const WeylElement& a) const;

  RootVector apply(const WeylElement& w, const RootVector& root) const;
  /// True when l(s_i w) < l(w).
  bool is_left_descent(const WeylElement& w, int i) const;
  /// True when l(w s_i) < l(w).
  bool is_right_descent(const WeylElement& w, int i) const;

  /// Bruhat order, decided by descending along left descents of w.
  bool bruhat_leq(const WeylElement& x, const WeylElement& w) const;

  /// Every element, ordered by length and then by canonical word.
  std::vector<WeylElement> all_elements() const;

  /// Number of positive roots made negative by the matrix.
  int inversions(const std::vector<int>& matrix) const;

 private:
  friend class CoxeterTable;
  std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) const;
  std::vector<int> canonical_word(std::vector<int> matrix) const;
  WeylElement make(std::vector<int> matrix) const;

  IntMatrix cartan_;
  std::vector<RootVector> positive_;
  std::vector<std::vector<int>> generators_;
  std::string fingerprint_;
};

/// Dense tables for a fully enumerated Coxeter group: elements indexed 0..N-1
/// in the order of CoxeterGroup::all_elements().
class CoxeterTable {
 public:
  explicit CoxeterTable(const CoxeterGroup& group, std::size_t max_order = 200000);

  const CoxeterGroup& group() const { return group_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t rank() const { return group_.rank(); }
  const WeylElement& element(std::size_t x) const { return elements_[x]; }
  int length(std::size_t x) const { return elements_[x].length(); }
  std::size_t left(int s, std::size_t x) const { return left_[static_cast<std::size_t>(s)][x]; }
  std::size_t right(std::size_t x, int s) const { return right_[static_cast<std::size_t>(s)][x]; }
  std::size_t inverse(std::size_t x) const { return inverse_[x]; }
  std::size_t longest() const { return elements_.size() - 1; }
  std::size_t index_of(const WeylElement& w) const;
  std::size_t index_of_word(std::span<const int> word) const;

  bool bruhat_leq(std::size_t x, std::size_t w) const;

 private:
  CoxeterGroup group_;
  std::vector<WeylElement> elements_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<std::size_t>> left_;
  std::vector<std::vector<std::size_t>> right_;
  std::vector<std::size_t> inverse_;
};

// Actions of W(rs) on h*. Elements must come from CoxeterGroup(rs.cartan_matrix()).

Weight apply(const RootSystem& rs, const WeylElement& w, const Weight& lambda);
/// w(lambda + rho) - rho.
Weight dot(const RootSystem& rs, const WeylElement& w, const Weight& lambda);
/// w(lambda + 2 rho) - 2 rho.
Weight dot2(const RootSystem& rs, const WeylElement& w, const Weight& lambda);

/// Root subsystem of a root system, closed under negation, with the positive
/// system inherited from the ambient one. Used for centraliser Levis and for
/// integral root systems.
struct RootSubsystem {
  /// Positive roots in the ambient simple-root basis, ambient order.
  std::vector<RootVector> positive_roots;
  /// Indecomposable positive roots, ambient order.
  std::vector<RootVector> simple_roots;
  /// Set when every simple root of the subsystem is simple in the ambient system.
  bool is_standard = true;
  /// Ambient indices of the simple roots when is_standard.
  std::vector<std::size_t> simple_indices;
  /// Half-sum of the subsystem's positive roots.
  Weight rho;
  /// cartan[i][j] = <beta_j, beta_i^vee> over simple_roots.
  IntMatrix cartan;

  std::size_t rank() const { return simple_roots.size(); }
  bool contains(const RootVector& beta) const;
  std::string type_name() const { return describe_cartan(cartan); }
  /// Coordinates of v in the basis simple_roots, if v lies in their Z-span.
  std::optional<std::vector<std::int64_t>> simple_coordinates(const RootVector& v) const;
  /// v is a nonnegative integer combination of simple_roots.
  bool in_positive_cone(const RootVector& v) const;
};

using LeviDatum = RootSubsystem;

/// Builds a subsystem from a reflection-closed set of positive roots of rs.
RootSubsystem make_subsystem(const RootSystem& rs, std::vector<RootVector> positive);
RootSubsystem full_subsystem(const RootSystem& rs);

/// Roots beta with mu(h_beta) = 0.
LeviDatum phi_mu(const Weight& mu, const RootSystem& rs);
bool is_standard_levi(const LeviDatum& levi);

struct LeviReduction {
  WeylElement w;
  Weight mu_prime;
  LeviDatum levi;
};

/// Shortest w with Phi_{w(mu)} standard; ties go to the lexicographically
/// smallest reduced word. Orbit breadth-first search.
LeviReduction minimal_levi_reduction(const Weight& mu, const RootSystem& rs);

/// For w = s_{a_n} ... s_{a_1}: ((s_{a_{i-1}} ... s_{a_1}) mu)(h_{a_i}) != 0 for all i.
bool satisfies_prefix_condition(const RootSystem& rs, const WeylElement& w, const Weight& mu);

/// Parses "2132", "2,1,3,2" (1-based) or "e" into 0-based letters.
std::vector<int> parse_word(std::string_view text, std::size_t rank);

}  // namespace takiff
