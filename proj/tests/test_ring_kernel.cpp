#include <gtest/gtest.h>

#include <algorithm>
#include <thread>

#include "gring/gring.hpp"
#include "oracle.hpp"

using namespace gring;

namespace {

std::vector<index_t> members(const IdealSet& s) { return s.members; }

std::set<std::vector<index_t>> prime_sets(const FiniteRing& R) {
  std::set<std::vector<index_t>> out;
  for (const auto& p : minimal_primes(R)) out.insert(p.members);
  return out;
}

}  // namespace

TEST(BuildRing, Examples) {
  auto Z4 = build_ring("Z4");
  EXPECT_EQ(Z4.size(), 4u);
  EXPECT_EQ(Z4.add(2, 2), 0u);
  EXPECT_EQ(Z4.mul(2, 2), 0u);

  auto F4 = build_ring("Z2[x]/(x^2+x+1)");
  EXPECT_EQ(F4.size(), 4u);
  for (index_t x = 1; x < 4; ++x) {
    index_t p = x;
    for (int k = 0; k < 4; ++k) {
      EXPECT_NE(p, 0u);
      p = F4.mul(p, x);
    }
  }
  EXPECT_EQ(nilradical(F4).size(), 1u);
}

TEST(BuildRing, ProductIsCrtImageOfZ6) {
  auto P = build_ring("Z2 x Z3");
  auto Z6 = build_ring("Z6");
  ASSERT_EQ(P.size(), 6u);
  // k in Z6 -> (k mod 2, k mod 3)
  std::vector<index_t> phi(6);
  for (index_t k = 0; k < 6; ++k) phi[k] = from_components(P, {k % 2, k % 3});
  std::vector<index_t> sorted = phi;
  std::sort(sorted.begin(), sorted.end());
  for (index_t k = 0; k < 6; ++k) EXPECT_EQ(sorted[k], k);
  for (index_t a = 0; a < 6; ++a)
    for (index_t b = 0; b < 6; ++b) {
      EXPECT_EQ(phi[Z6.add(a, b)], P.add(phi[a], phi[b]));
      EXPECT_EQ(phi[Z6.mul(a, b)], P.mul(phi[a], phi[b]));
    }
  EXPECT_EQ(phi[1], P.one());
}

TEST(BuildRing, Errors) {
  EXPECT_THROW(build_ring("Z2[x]/(2*x^2+x)"), spec_error);
  EXPECT_THROW(build_ring("Z6[x]/(3*x^2+1)"), spec_error);
  EXPECT_NO_THROW(build_ring("Z4[x]/(5*x^2+1)"));
  EXPECT_THROW(build_ring("Z300 x Z300"), limit_error);
  EXPECT_NO_THROW(build_ring("Z300 x Z300", 100000));
  EXPECT_THROW(build_ring("Z2[x]/(x^40)"), limit_error);
}

TEST(BuildRing, Deterministic) {
  for (const auto& text : catalog::ring_texts()) {
    auto a = build_ring(text), b = build_ring(text);
    ASSERT_EQ(a.size(), b.size());
    EXPECT_EQ(a.name(), b.name());
    for (index_t x = 0; x < a.size(); ++x)
      for (index_t y = 0; y < a.size(); ++y) {
        EXPECT_EQ(a.add(x, y), b.add(x, y));
        EXPECT_EQ(a.mul(x, y), b.mul(x, y));
      }
  }
}

TEST(Arithmetic, Examples) {
  auto Z6 = build_ring("Z6");
  EXPECT_EQ(Z6.mul(2, 3), 0u);
  auto Z4 = build_ring("Z4");
  EXPECT_EQ(Z4.pow(2, 2), 0u);
  EXPECT_EQ(Z4.pow(3, 0), 1u);
  auto P = build_ring("Z2 x Z3");
  auto s = P.add(from_components(P, {1, 2}), from_components(P, {1, 1}));
  EXPECT_EQ(components(P, s), (std::vector<index_t>{0, 0}));
  EXPECT_EQ(P.format(from_components(P, {1, 2})), "(1,2)");
}

TEST(Arithmetic, MixedParents) {
  auto a = build_ring("Z4"), b = build_ring("Z4");
  EXPECT_THROW(a.add(a.elem(1), b.elem(1)), mixed_parent_error);
  EXPECT_THROW(a.mul(b.elem(1), a.elem(1)), mixed_parent_error);
  EXPECT_THROW(a.elem(4), error);
  EXPECT_EQ(a.add(a.elem(3), a.elem(3)).index, 2u);
}

TEST(Arithmetic, IntImage) {
  EXPECT_EQ(int_image(build_ring("Z4"), 2), 2u);
  EXPECT_EQ(int_image(build_ring("Z2"), 2), 0u);
  EXPECT_EQ(int_image(build_ring("Z5"), -1), 4u);
  auto P = build_ring("Z2 x Z3");
  EXPECT_EQ(components(P, int_image(P, 3)), (std::vector<index_t>{1, 0}));
  for (const auto& R : catalog::rings()) {
    index_t acc = R.zero();
    for (std::int64_t n = 0; n < 40; ++n) {
      EXPECT_EQ(int_image(R, n), acc);
      EXPECT_EQ(int_image(R, -n), R.neg(acc));
      acc = R.add(acc, R.one());
    }
  }
}

TEST(Arithmetic, AxiomsOnCatalog) {
  for (const auto& R : catalog::rings()) {
    index_t n = R.size();
    for (index_t a = 0; a < n; ++a) {
      EXPECT_EQ(R.add(a, R.zero()), a);
      EXPECT_EQ(R.mul(a, R.one()), a);
      EXPECT_EQ(R.add(a, R.neg(a)), R.zero());
      for (index_t b = 0; b < n; ++b) {
        EXPECT_EQ(R.add(a, b), R.add(b, a));
        EXPECT_EQ(R.mul(a, b), R.mul(b, a));
        for (index_t c = 0; c < n; ++c) {
          ASSERT_EQ(R.add(R.add(a, b), c), R.add(a, R.add(b, c)));
          ASSERT_EQ(R.mul(R.mul(a, b), c), R.mul(a, R.mul(b, c)));
          ASSERT_EQ(R.mul(a, R.add(b, c)), R.add(R.mul(a, b), R.mul(a, c)));
        }
      }
    }
  }
}

TEST(Arithmetic, AxiomsOnLargeRingSampled) {
  // Above the table threshold: structural evaluation only.
  auto R = build_ring("Z4[x]/(x^2-2) x Z3[x]/(x^3+2)");
  ASSERT_EQ(R.size(), 16u * 27u);
  EXPECT_FALSE(R.has_tables());
  std::uniform_int_distribution<index_t> pick(0, R.size() - 1);
  auto& gen = oracle::rng();
  for (int i = 0; i < 20000; ++i) {
    index_t a = pick(gen), b = pick(gen), c = pick(gen);
    ASSERT_EQ(R.mul(R.mul(a, b), c), R.mul(a, R.mul(b, c)));
    ASSERT_EQ(R.mul(a, R.add(b, c)), R.add(R.mul(a, b), R.mul(a, c)));
    ASSERT_EQ(R.mul(a, b), R.mul(b, a));
    ASSERT_EQ(R.add(a, R.neg(a)), R.zero());
  }
  EXPECT_EQ(R.mul(R.one(), 17), 17u);
}

TEST(Arithmetic, ZnAgainstIntegers) {
  for (index_t n = 2; n <= 12; ++n) {
    auto R = build_ring("Z" + std::to_string(n));
    for (index_t a = 0; a < n; ++a)
      for (index_t b = 0; b < n; ++b) {
        EXPECT_EQ(R.add(a, b), (a + b) % n);
        EXPECT_EQ(R.mul(a, b), a * b % n);
      }
  }
}

TEST(ElementStatus, Examples) {
  auto Z4 = build_ring("Z4");
  EXPECT_FALSE(is_unit(Z4, 2));
  EXPECT_TRUE(is_nilpotent(Z4, 2));
  EXPECT_FALSE(is_regular(Z4, 2));
  auto Z6 = build_ring("Z6");
  EXPECT_FALSE(is_unit(Z6, 2));
  EXPECT_FALSE(is_nilpotent(Z6, 2));
  EXPECT_FALSE(is_regular(Z6, 2));
  EXPECT_TRUE(is_unit(Z6, 5));
  EXPECT_TRUE(is_regular(Z6, 5));
  for (index_t n = 2; n <= 12; ++n) {
    auto R = build_ring("Z" + std::to_string(n));
    for (index_t x = 0; x < n; ++x) {
      EXPECT_EQ(is_unit(R, x), oracle::zn_unit(x, n));
      EXPECT_EQ(is_nilpotent(R, x), oracle::zn_nilpotent(x, n));
    }
  }
}

TEST(ElementStatus, RegularIffUnitAndFlagsMatchScans) {
  for (const auto& R : catalog::rings()) {
    const auto& kinds = R.kinds();
    for (index_t x = 0; x < R.size(); ++x) {
      EXPECT_EQ(is_regular(R, x), is_unit(R, x)) << R.name() << " " << x;
      EXPECT_EQ(regular_flag(R, x), is_unit(R, x)) << R.name() << " " << x;
      bool nil = false;
      index_t p = x;
      for (index_t k = 0; k <= R.size(); ++k, p = R.mul(p, x))
        if (p == R.zero()) nil = true;
      EXPECT_EQ(nilpotent_flag(R, x), nil);
      EXPECT_EQ(kinds[x], R.orbit_kind(x));
    }
  }
}

TEST(ElementStatus, ConcurrentMemoization) {
  auto R = build_ring("Z4[x]/(x^2-2) x Z3[x]/(x^3+2)");
  std::vector<std::vector<std::uint8_t>> seen(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) threads.emplace_back([&, t] { seen[t] = R.kinds(); });
  for (auto& th : threads) th.join();
  for (int t = 1; t < 4; ++t) EXPECT_EQ(seen[t], seen[0]);
  for (index_t x = 0; x < R.size(); ++x) EXPECT_EQ(seen[0][x], R.orbit_kind(x));
}

TEST(IntImage, RegularIffPrimeDivisorsRegular) {
  for (const auto& R : catalog::rings())
    for (std::uint64_t n = 1; n <= 60; ++n) {
      bool all = true;
      for (auto q : prime_divisors(n)) all = all && is_unit(R, int_image(R, static_cast<std::int64_t>(q)));
      EXPECT_EQ(is_unit(R, int_image(R, static_cast<std::int64_t>(n))), all) << R.name() << " " << n;
    }
}

TEST(Nilradical, Examples) {
  EXPECT_EQ(members(nilradical(build_ring("Z4"))), (std::vector<index_t>{0, 2}));
  EXPECT_EQ(members(nilradical(build_ring("Z6"))), (std::vector<index_t>{0}));
  auto D = build_ring("Z2[x]/(x^2)");
  auto nil = nilradical(D);
  ASSERT_EQ(nil.size(), 2u);
  EXPECT_EQ(D.format(nil.members[1]), "x");
}

TEST(Nilradical, NpExamples) {
  EXPECT_EQ(n_p_set(build_ring("Z4"), 2).size(), 4u);
  EXPECT_EQ(members(n_p_set(build_ring("Z6"), 2)), (std::vector<index_t>{0, 3}));
  EXPECT_EQ(n_p_set(build_ring("Z5"), 5).size(), 5u);
  EXPECT_THROW(n_p_set(build_ring("Z5"), 4), precondition_error);
}

TEST(Nilradical, IdealInvariants) {
  for (const auto& R : catalog::rings()) {
    auto nil = nilradical(R);
    EXPECT_TRUE(is_ideal(R, nil)) << R.name();
    for (std::uint64_t p : {2, 3, 5, 7, 11}) {
      auto np = n_p_set(R, p);
      EXPECT_TRUE(is_ideal(R, np)) << R.name() << " " << p;
      for (index_t x : nil.members) EXPECT_TRUE(np.contains(x));
    }
    // nilradical is the intersection of the minimal primes
    std::vector<index_t> meet;
    for (index_t x = 0; x < R.size(); ++x) {
      bool all = true;
      for (const auto& P : minimal_primes(R)) all = all && P.contains(x);
      if (all) meet.push_back(x);
    }
    EXPECT_EQ(meet, nil.members) << R.name();
  }
}

TEST(Ideals, ClosureAndChecks) {
  auto Z12 = build_ring("Z12");
  auto all = all_elements(Z12);
  auto I = ideal_closure(Z12, {8}, all);
  EXPECT_EQ(I.members, (std::vector<index_t>{0, 4, 8}));
  EXPECT_TRUE(is_ideal(Z12, I));
  EXPECT_FALSE(is_prime_ideal(Z12, I));
  EXPECT_TRUE(is_prime_ideal(Z12, ideal_closure(Z12, {2}, all)));
  EXPECT_TRUE(is_prime_ideal(Z12, ideal_closure(Z12, {3}, all)));
  EXPECT_FALSE(is_prime_ideal(Z12, ideal_closure(Z12, {1}, all)));
  EXPECT_FALSE(is_ideal(Z12, make_set(Z12, {0, 1})));
  EXPECT_FALSE(is_ideal(Z12, make_set(Z12, {0, 6, 7})));
  // additive subgroup that is not an ideal
  auto P = build_ring("Z2[x]/(x^2)");
  EXPECT_FALSE(is_ideal(P, make_set(P, {0, 1})));
}

TEST(Ideals, ExhaustiveAgainstDefinitions) {
  for (const char* text : {"Z8", "Z12", "Z2 x Z4", "Z2[x]/(x^2)", "Z6"}) {
    auto R = build_ring(text);
    index_t n = R.size();
    for (std::uint32_t mask = 1; mask < (1u << n); mask += 1) {
      if (!(mask & 1)) continue;
      std::vector<index_t> m;
      for (index_t x = 0; x < n; ++x)
        if (mask >> x & 1) m.push_back(x);
      auto S = make_set(R, m);
      bool ideal = true;
      for (index_t a : m)
        for (index_t r = 0; r < n; ++r) ideal = ideal && S.contains(R.mul(a, r));
      for (index_t a : m)
        for (index_t b : m) ideal = ideal && S.contains(R.sub(a, b));
      ASSERT_EQ(is_ideal(R, S), ideal) << text << " " << mask;
      if (!ideal) continue;
      bool prime = !S.contains(R.one());
      for (index_t a = 0; a < n; ++a)
        for (index_t b = 0; b < n; ++b)
          if (S.contains(R.mul(a, b)) && !S.contains(a) && !S.contains(b)) prime = false;
      ASSERT_EQ(is_prime_ideal(R, S), prime) << text << " " << mask;
    }
  }
}

TEST(Complements, Examples) {
  auto Z6 = build_ring("Z6");
  EXPECT_EQ(complement_witness(Z6, 2), 3u);
  EXPECT_FALSE(complement_witness(build_ring("Z4"), 2).has_value());
  for (const auto& R : catalog::rings())
    for (index_t x = 0; x < R.size(); ++x)
      if (is_unit(R, x)) {
        EXPECT_EQ(complement_witness(R, x), 0u);
      }
}

TEST(Complements, WitnessesReverifyAndAreLeast) {
  for (const auto& R : catalog::rings())
    for (index_t x = 0; x < R.size(); ++x) {
      std::optional<index_t> least;
      for (index_t y = 0; y < R.size() && !least; ++y)
        if (R.mul(x, y) == R.zero() && is_regular(R, R.add(x, y))) least = y;
      auto w = complement_witness(R, x);
      EXPECT_EQ(w, least) << R.name() << " " << x;
    }
}

TEST(RingPredicates, Examples) {
  auto Z6 = build_ring("Z6"), Z4 = build_ring("Z4"), Z12 = build_ring("Z12");
  EXPECT_TRUE(is_complemented(Z6));
  EXPECT_FALSE(has_property_D(Z6));
  EXPECT_TRUE(is_semi_complemented(Z6));
  EXPECT_FALSE(is_complemented(Z4));
  EXPECT_TRUE(has_property_D(Z4));
  EXPECT_TRUE(is_semi_complemented(Z4));
  EXPECT_FALSE(is_complemented(Z12));
  EXPECT_FALSE(has_property_D(Z12));
  EXPECT_FALSE(is_semi_complemented(Z12));
  EXPECT_FALSE(complement_witness(Z12, 2).has_value());
  EXPECT_TRUE(is_reduced(Z6));
  EXPECT_TRUE(is_von_neumann_regular(Z6));
  EXPECT_FALSE(is_reduced(Z4));
  EXPECT_FALSE(is_von_neumann_regular(Z4));
  auto F4 = build_ring("Z2[x]/(x^2+x+1)");
  EXPECT_TRUE(is_reduced(F4));
  EXPECT_TRUE(is_von_neumann_regular(F4));
  EXPECT_TRUE(is_domain(F4));
  EXPECT_FALSE(is_domain(Z6));
}

TEST(RingPredicates, CatalogInvariants) {
  for (const auto& R : catalog::rings()) {
    bool c = is_complemented(R), red = is_reduced(R), vnr = is_von_neumann_regular(R), d = has_property_D(R);
    if (c) {
      EXPECT_TRUE(red) << R.name();
    }
    EXPECT_EQ(c, red) << R.name();
    EXPECT_EQ(red, vnr) << R.name();
    EXPECT_EQ(is_semi_complemented(R), c || d) << R.name();
    EXPECT_EQ(is_domain(R), is_prime(R.size()) || R.name() == "Z2[x]/(x^2+x+1)") << R.name();
  }
}

TEST(Idempotents, Examples) {
  auto Z6 = build_ring("Z6");
  EXPECT_EQ(idempotents(Z6), (std::vector<index_t>{0, 1, 3, 4}));
  EXPECT_EQ(primitive_idempotents(Z6), (std::vector<index_t>{3, 4}));
  EXPECT_FALSE(is_indecomposable(Z6));
  auto Z4 = build_ring("Z4");
  EXPECT_EQ(idempotents(Z4), (std::vector<index_t>{0, 1}));
  EXPECT_TRUE(is_indecomposable(Z4));
  EXPECT_EQ(idempotents(build_ring("Z2")), (std::vector<index_t>{0, 1}));
}

TEST(Idempotents, PrimitivesOrthogonalAndSumToOne) {
  for (const auto& R : catalog::rings()) {
    auto prim = primitive_idempotents(R);
    index_t sum = R.zero();
    for (std::size_t i = 0; i < prim.size(); ++i) {
      sum = R.add(sum, prim[i]);
      for (std::size_t j = i + 1; j < prim.size(); ++j) EXPECT_EQ(R.mul(prim[i], prim[j]), R.zero()) << R.name();
    }
    EXPECT_EQ(sum, R.one()) << R.name();
    EXPECT_EQ(minimal_primes(R).size(), prim.size()) << R.name();
  }
}

TEST(MinimalPrimes, Examples) {
  EXPECT_EQ(prime_sets(build_ring("Z6")),
            (std::set<std::vector<index_t>>{{0, 2, 4}, {0, 3}}));
  EXPECT_EQ(prime_sets(build_ring("Z4")), (std::set<std::vector<index_t>>{{0, 2}}));
  EXPECT_EQ(prime_sets(build_ring("Z2[x]/(x^2+x+1)")), (std::set<std::vector<index_t>>{{0}}));
}

TEST(MinimalPrimes, AreExactlyTheMinimalPrimeIdealsOfZn) {
  for (index_t n = 2; n <= 12; ++n) {
    auto R = build_ring("Z" + std::to_string(n));
    std::set<std::vector<index_t>> expect;
    for (auto p : prime_divisors(n)) {
      std::vector<index_t> m;
      for (index_t x = 0; x < n; x += static_cast<index_t>(p)) m.push_back(x);
      expect.insert(m);
    }
    EXPECT_EQ(prime_sets(R), expect) << n;
  }
}
