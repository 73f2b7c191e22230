#include "doctest.h"
#include "takiff/weyl.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace takiff;

namespace {

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 3);
  return Rational(num(rng), den(rng));
}

Weight random_weight(const RootSystem& rs, std::mt19937& rng) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i < rs.rank(); ++i) c.push_back(random_rational(rng));
  return rs.make_weight(c);
}

// x <= w iff some subword of a reduced word of w multiplies to x.
bool subword_oracle(const CoxeterGroup& g, const WeylElement& x, const WeylElement& w) {
  const auto& word = w.word();
  const std::size_t l = word.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << l); ++mask) {
    std::vector<int> sub;
    for (std::size_t k = 0; k < l; ++k)
      if (mask & (std::size_t{1} << k)) sub.push_back(word[k]);
    if (g.from_word(sub) == x) return true;
  }
  return false;
}

std::set<RootVector> root_set(const LeviDatum& ld) {
  std::set<RootVector> s;
  for (const auto& b : ld.positive_roots) {
    s.insert(b);
    s.insert(-b);
  }
  return s;
}

}  // namespace

TEST_CASE("group orders and canonical words") {
  const std::vector<std::pair<std::string, std::size_t>> orders{
      {"A1", 2}, {"A2", 6}, {"B2", 8}, {"G2", 12}, {"A3", 24}, {"B3", 48}, {"C3", 48}, {"D4", 192}};
  for (const auto& [name, order] : orders) {
    CAPTURE(name);
    CoxeterGroup g(cartan_matrix(parse_cartan_type(name)));
    auto all = g.all_elements();
    CHECK(all.size() == order);
    for (const auto& x : all) {
      CHECK(g.from_word(x.word()).word() == x.word());
      CHECK(g.inversions(x.matrix()) == x.length());
    }
    // Longest element has length |Phi+|.
    CHECK(all.back().length() == static_cast<int>(g.positive_roots().size()));
  }
  CoxeterGroup a2(cartan_matrix(parse_cartan_type("A2")));
  CHECK(a2.from_word(std::vector<int>{1, 0, 1}).word() == std::vector<int>{0, 1, 0});
  CHECK(a2.from_word(std::vector<int>{0, 0}).is_identity());
  CHECK(a2.from_word(std::vector<int>{1, 0, 1}).word_str() == "121");
}

TEST_CASE("length equals number of positive roots sent negative; roots are permuted") {
  std::mt19937 rng(7);
  for (const char* name : {"A2", "B2", "A3", "B3"}) {
    CAPTURE(name);
    CoxeterGroup g(cartan_matrix(parse_cartan_type(name)));
    std::set<RootVector> roots;
    for (const auto& b : g.positive_roots()) {
      roots.insert(b);
      roots.insert(-b);
    }
    auto all = g.all_elements();
    std::vector<WeylElement> sample = all;
    if (all.size() > 10) {
      std::shuffle(sample.begin(), sample.end(), rng);
      sample.resize(10);
    }
    for (const auto& w : sample) {
      int negative = 0;
      std::set<RootVector> image;
      for (const auto& b : roots) {
        RootVector wb = g.apply(w, b);
        CHECK(roots.contains(wb));
        image.insert(wb);
        if (b.is_nonnegative() && wb.is_nonpositive()) ++negative;
      }
      CHECK(image == roots);
      CHECK(negative == w.length());
    }
  }
}

TEST_CASE("dot2 examples") {
  RootSystem a1 = RootSystem::from_string("A1");
  CoxeterGroup g1(a1.cartan_matrix());
  for (int c : {-3, 0, 2, 7}) {
    Weight lam = a1.make_weight({c});
    CHECK(dot2(a1, g1.generator(0), lam) == a1.make_weight({-c - 4}));
    // s(lambda) - 2 alpha.
    CHECK(dot2(a1, g1.generator(0), lam) == apply(a1, g1.generator(0), lam) - Rational(2) * a1.to_weight({1}));
    CHECK(dot2(a1, g1.identity(), lam) == lam);
  }
  RootSystem a2 = RootSystem::from_string("A2");
  CoxeterGroup g2(a2.cartan_matrix());
  auto w0 = g2.all_elements().back();
  CHECK(dot2(a2, w0, a2.zero_weight()) == Rational(-4) * a2.rho());
  CHECK(dot(a2, w0, a2.zero_weight()) == Rational(-2) * a2.rho());

  RootSystem t = RootSystem::from_string("A1+T1");
  CoxeterGroup gt(t.cartan_matrix());
  Weight lam = t.make_weight({1}, {Rational(2, 3)});
  CHECK(apply(t, gt.generator(0), lam).central() == lam.central());
}

TEST_CASE("dot2 is a group action on A2") {
  RootSystem a2 = RootSystem::from_string("A2");
  CoxeterGroup g(a2.cartan_matrix());
  std::mt19937 rng(11);
  auto all = g.all_elements();
  for (int trial = 0; trial < 5; ++trial) {
    Weight lam = random_weight(a2, rng);
    for (const auto& x : all)
      for (const auto& y : all) CHECK(dot2(a2, x, dot2(a2, y, lam)) == dot2(a2, g.multiply(x, y), lam));
  }
}

TEST_CASE("bruhat order") {
  CoxeterGroup a2(cartan_matrix(parse_cartan_type("A2")));
  auto s1 = a2.generator(0), s2 = a2.generator(1);
  auto s1s2 = a2.from_word(std::vector<int>{0, 1});
  CHECK(a2.bruhat_leq(s1, s1s2));
  CHECK_FALSE(a2.bruhat_leq(s1, s2));
  CHECK(a2.bruhat_leq(a2.identity(), s1s2));
  CHECK(a2.bruhat_leq(s1s2, s1s2));

  for (const char* name : {"A3", "B3"}) {
    CAPTURE(name);
    CoxeterTable table(CoxeterGroup(cartan_matrix(parse_cartan_type(name))));
    const auto& g = table.group();
    for (std::size_t x = 0; x < table.size(); ++x)
      for (std::size_t w = 0; w < table.size(); ++w) {
        bool expect = subword_oracle(g, table.element(x), table.element(w));
        CHECK(table.bruhat_leq(x, w) == expect);
        if (x % 5 == 0) CHECK(g.bruhat_leq(table.element(x), table.element(w)) == expect);
      }
  }
}

TEST_CASE("coxeter table products") {
  CoxeterTable t(CoxeterGroup(cartan_matrix(parse_cartan_type("B3"))));
  const auto& g = t.group();
  for (std::size_t x = 0; x < t.size(); ++x) {
    for (int s = 0; s < 3; ++s) {
      CHECK(t.element(t.left(s, x)) == g.multiply(g.generator(s), t.element(x)));
      CHECK(t.element(t.right(x, s)) == g.multiply(t.element(x), g.generator(s)));
    }
    CHECK(t.element(t.inverse(x)) == g.inverse(t.element(x)));
    CHECK(t.index_of_word(t.element(x).word()) == x);
  }
  CHECK(t.length(t.longest()) == 9);
}

TEST_CASE("phi_mu and standard Levis") {
  RootSystem a2 = RootSystem::from_string("A2");
  auto full = phi_mu(a2.zero_weight(), a2);
  CHECK(full.positive_roots.size() == 3);
  CHECK(full.simple_roots == std::vector<RootVector>{{1, 0}, {0, 1}});
  CHECK(is_standard_levi(full));
  CHECK(full.type_name() == "A2");

  auto generic = phi_mu(a2.make_weight({1, Rational(1, 3)}), a2);
  CHECK(generic.positive_roots.empty());
  CHECK(is_standard_levi(generic));
  CHECK(generic.type_name() == "T");

  auto theta = phi_mu(a2.make_weight({1, -1}), a2);
  CHECK(theta.positive_roots == std::vector<RootVector>{{1, 1}});
  CHECK(theta.simple_roots == std::vector<RootVector>{{1, 1}});
  CHECK_FALSE(is_standard_levi(theta));
  CHECK(theta.rho == Rational(1, 2) * a2.to_weight({1, 1}));

  auto a1 = phi_mu(a2.make_weight({0, 1}), a2);
  CHECK(a1.positive_roots == std::vector<RootVector>{{1, 0}});
  CHECK(is_standard_levi(a1));
  CHECK(a1.simple_indices == std::vector<std::size_t>{0});

  // B2 with mu orthogonal to the long root a1 + 2a2: nonstandard A1.
  RootSystem b2 = RootSystem::from_string("B2");
  auto l = phi_mu(b2.make_weight({1, -1}), b2);
  CHECK(l.positive_roots == std::vector<RootVector>{{1, 2}});
  CHECK_FALSE(l.is_standard);
  CHECK(l.simple_coordinates({2, 4}) == std::vector<std::int64_t>{2});
  CHECK_FALSE(l.simple_coordinates({1, 1}).has_value());
}

TEST_CASE("minimal Levi reduction examples") {
  RootSystem a2 = RootSystem::from_string("A2");
  auto r = minimal_levi_reduction(a2.make_weight({1, -1}), a2);
  CHECK(r.w.word() == std::vector<int>{0});
  CHECK(r.mu_prime == a2.make_weight({-1, 0}));
  CHECK(r.levi.positive_roots == std::vector<RootVector>{{0, 1}});
  CHECK(satisfies_prefix_condition(a2, r.w, a2.make_weight({1, -1})));

  auto std_case = minimal_levi_reduction(a2.make_weight({0, 3}), a2);
  CHECK(std_case.w.is_identity());
  CHECK(std_case.levi.positive_roots == std::vector<RootVector>{{1, 0}});

  RootSystem a1 = RootSystem::from_string("A1");
  auto torus = minimal_levi_reduction(a1.make_weight({5}), a1);
  CHECK(torus.w.is_identity());
  CHECK(torus.levi.positive_roots.empty());
}

TEST_CASE("minimal Levi reduction is minimal, satisfies the prefix condition, transports Phi_mu") {
  std::mt19937 rng(2024);
  for (const char* name : {"A2", "B2", "G2", "A3", "B3", "C3"}) {
    CAPTURE(name);
    RootSystem rs = RootSystem::from_string(name);
    CoxeterGroup g(rs.cartan_matrix());
    auto all = g.all_elements();
    for (int trial = 0; trial < 25; ++trial) {
      // Small integers make nontrivial centralisers likely.
      std::vector<Rational> c;
      std::uniform_int_distribution<int> d(-2, 2);
      for (std::size_t i = 0; i < rs.rank(); ++i) c.push_back(d(rng));
      Weight mu = rs.make_weight(c);
      auto red = minimal_levi_reduction(mu, rs);
      CHECK(red.levi.is_standard);
      CHECK(satisfies_prefix_condition(rs, red.w, mu));
      for (const auto& w : all) {
        if (w.length() >= red.w.length()) break;
        CHECK_FALSE(phi_mu(apply(rs, w, mu), rs).is_standard);
      }
      // Same length: no lexicographically smaller candidate.
      for (const auto& w : all) {
        if (w.length() != red.w.length() || !(w.word() < red.w.word())) continue;
        CHECK_FALSE(phi_mu(apply(rs, w, mu), rs).is_standard);
      }
      // Phi_{w(mu)} = w(Phi_mu) for random w.
      const auto& w = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
      std::set<RootVector> moved;
      for (const auto& b : root_set(phi_mu(mu, rs))) moved.insert(g.apply(w, b));
      CHECK(moved == root_set(phi_mu(apply(rs, w, mu), rs)));
    }
  }
}

TEST_CASE("parse_word") {
  CHECK(parse_word("2132", 3) == std::vector<int>{1, 0, 2, 1});
  CHECK(parse_word("1,2", 3) == std::vector<int>{0, 1});
  CHECK(parse_word("e", 3).empty());
  CHECK_THROWS_AS(parse_word("4", 3), ParseError);
  CHECK_THROWS_AS(parse_word("1,,2", 3), ParseError);
}
