#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "takiff/linalg.hpp"
#include "takiff/rational.hpp"

namespace takiff {

/// Thrown for malformed textual input (Cartan types, weights, words).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SimpleComponent {
  char family = 'A';  // one of A..G
  int rank = 1;

  friend bool operator==(const SimpleComponent&, const SimpleComponent&) = default;
};

struct CartanType {
  std::vector<SimpleComponent> components;
  int torus_rank = 0;

  int semisimple_rank() const;
  std::string str() const;

  friend bool operator==(const CartanType&, const CartanType&) = default;
};

/// Grammar: COMPONENT ("x" COMPONENT)* ("+T" INT)?, COMPONENT := [A-G] INT.
/// Family letters are case-insensitive.
CartanType parse_cartan_type(std::string_view text);

/// Integer vector in the basis of simple roots.
class RootVector {
 public:
  RootVector() = default;
  explicit RootVector(std::size_t rank) : coeffs_(rank, 0) {}
  explicit RootVector(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {}
  RootVector(std::initializer_list<std::int64_t> coeffs) : coeffs_(coeffs) {}

  static RootVector simple(std::size_t rank, std::size_t i) {
    RootVector r(rank);
    r.coeffs_[i] = 1;
    return r;
  }

  std::size_t size() const { return coeffs_.size(); }
  std::int64_t operator[](std::size_t i) const { return coeffs_[i]; }
  std::int64_t& operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  std::int64_t height() const;
  bool is_zero() const;
  bool is_nonnegative() const;
  bool is_nonpositive() const { return (-*this).is_nonnegative(); }

  RootVector operator-() const;
  RootVector& operator+=(const RootVector& o);
  RootVector& operator-=(const RootVector& o);
  friend RootVector operator+(RootVector a, const RootVector& b) { return a += b; }
  friend RootVector operator-(RootVector a, const RootVector& b) { return a -= b; }
  friend RootVector operator*(std::int64_t k, RootVector a) {
    for (auto& c : a.coeffs_) c *= k;
    return a;
  }

  friend bool operator==(const RootVector&, const RootVector&) = default;
  friend auto operator<=>(const RootVector&, const RootVector&) = default;

  /// "a1+2a2"-style rendering; "0" for the zero vector.
  std::string str() const;

 private:
  std::vector<std::int64_t> coeffs_;
};

/// Point of h*: pairings with the simple coroots followed by central coordinates.
class Weight {
 public:
  Weight() = default;
  Weight(std::vector<Rational> coroot, std::vector<Rational> central = {})
      : coroot_(std::move(coroot)), central_(std::move(central)) {}

  static Weight zero(std::size_t rank, std::size_t torus) {
    return Weight(std::vector<Rational>(rank), std::vector<Rational>(torus));
  }

  const std::vector<Rational>& coroot() const { return coroot_; }
  const std::vector<Rational>& central() const { return central_; }
  Rational operator[](std::size_t i) const { return coroot_[i]; }
  std::size_t rank() const { return coroot_.size(); }
  std::size_t torus_rank() const { return central_.size(); }
  bool is_integral() const;

  Weight operator-() const;
  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight& operator*=(const Rational& k);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& k, Weight a) { return a *= k; }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight& a, const Weight& b) {
    if (auto c = a.coroot_ <=> b.coroot_; c != 0) return c;
    return a.central_ <=> b.central_;
  }

  /// "(1,-1/2)" or "(1,-1/2;3)" when central coordinates are present.
  std::string str() const;

 private:
  std::vector<Rational> coroot_;
  std::vector<Rational> central_;
};

/// Root system of a reductive Lie algebra with a fixed set of simple roots.
///
/// Cartan matrix convention: cartan(i, j) = <alpha_j, alpha_i^vee>, so column j
/// holds the weight coordinates of alpha_j.
class RootSystem {
 public:
  explicit RootSystem(const CartanType& type);
  static RootSystem from_string(std::string_view text) { return RootSystem(parse_cartan_type(text)); }

  const CartanType& type() const { return type_; }
  std::size_t rank() const { return cartan_.size(); }
  std::size_t torus_rank() const { return static_cast<std::size_t>(type_.torus_rank); }
  int cartan(std::size_t i, std::size_t j) const { return cartan_[i][j]; }
  const IntMatrix& cartan_matrix() const { return cartan_; }

  /// Same order as positive_roots_from_cartan.
  const std::vector<RootVector>& positive_roots() const { return positive_; }
  /// Coroot of positive_roots()[k] in the basis of simple coroots.
  const RootVector& coroot(std::size_t k) const { return coroots_[k]; }
  std::optional<std::size_t> positive_index(const RootVector& beta) const;
  bool is_root(const RootVector& beta) const;

  /// Half-length-squared of simple root i, normalised per component so the
  /// first root of each component has value one.
  const Rational& symmetrizer(std::size_t i) const { return symmetrizer_[i]; }

  const Weight& rho() const { return rho_; }
  Weight zero_weight() const { return Weight::zero(rank(), torus_rank()); }
  Weight make_weight(std::vector<Rational> coroot, std::vector<Rational> central = {}) const;

  /// Image of a root-lattice vector in weight coordinates.
  Weight to_weight(const RootVector& chi) const;

  /// <lambda, beta^vee> for a (positive or negative) root beta.
  Rational pairing(const Weight& lambda, const RootVector& beta) const;
  /// <lambda, c> for c given in the simple-coroot basis.
  static Rational pairing_coroot(const Weight& lambda, const RootVector& coroot);

  /// s_beta(lambda) = lambda - <lambda, beta^vee> beta.
  Weight reflect(const Weight& lambda, const RootVector& beta) const;
  /// Simple reflection on root coordinates.
  RootVector reflect_root(const RootVector& chi, std::size_t i) const;

  /// lambda - lambda' as an element of the root lattice, if it is one.
  std::optional<RootVector> weight_sub(const Weight& lambda, const Weight& lambda2) const;
  /// lambda2 <= lambda in the dominance order.
  bool weight_leq(const Weight& lambda2, const Weight& lambda) const;

  void check_weight(const Weight& w) const;
  void check_root_vector(const RootVector& v) const;

 private:
  CartanType type_;
  IntMatrix cartan_;
  std::vector<Rational> symmetrizer_;
  std::vector<RootVector> positive_;
  std::vector<RootVector> coroots_;
  std::map<RootVector, std::size_t> index_;
  QMatrix cartan_inverse_;
  Weight rho_;
};

/// Positive roots generated from the simple roots by root-string closure,
/// ordered by height and then by descending coefficient vector (simple roots
/// come first, in index order).
std::vector<RootVector> positive_roots_from_cartan(const IntMatrix& cartan);

/// Block-diagonal Cartan matrix of the semisimple part.
IntMatrix cartan_matrix(const CartanType& type);

/// Names the isomorphism type of a Cartan matrix ("A1xA1", "B2", "T" for rank zero).
std::string describe_cartan(const IntMatrix& cartan);

}  // namespace takiff
