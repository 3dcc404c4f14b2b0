#include "blockscope/cyclo.hpp"

#include <vector>

#include "blockscope/common.hpp"
#include "blockscope/gf.hpp"
#include "blockscope/numth.hpp"
#include "doctest.h"

using namespace blockscope;

namespace {
Cyclotomic z(long n, long k) { return Cyclotomic::root(n, k); }
long lev1(const Cyclotomic& v, long p) { return level(v, p); }
}  // namespace

TEST_CASE("basic arithmetic identities") {
  CHECK(z(4, 1) * z(4, 1) == Cyclotomic(-1));
  CHECK(z(3, 1) + z(3, 2) == Cyclotomic(-1));
  // golden-ratio product
  CHECK((z(5, 1) + z(5, 4)) * (z(5, 2) + z(5, 3)) == Cyclotomic(-1));
  CHECK(z(9, 4) * z(9, 5) == Cyclotomic(1));
  CHECK(z(12, 6) == Cyclotomic(-1));
  // ambient 2 mod 4 collapses: z_6 = -z_3^2
  CHECK(z(6, 1).ambient() == 3);
  CHECK(z(6, 1) == -z(3, 2));
  CHECK(z(6, 2) == z(3, 1));
}

TEST_CASE("division is exact") {
  Cyclotomic a = z(7, 3) + z(7, 5) * mpq_class(2);
  Cyclotomic b = z(7, 1) - Cyclotomic(mpq_class(1, 3));
  Cyclotomic q = a / b;
  CHECK(q * b == a);
  CHECK_THROWS_AS(a / Cyclotomic(0), Error);
}

TEST_CASE("conjugation and galois action") {
  CHECK(z(4, 1).galois(3) == -z(4, 1));
  CHECK(z(4, 1).conj() == -z(4, 1));
  CHECK(z(9, 1).galois(4) == z(9, 4));
  CHECK(z(9, 1).galois(7).galois(4) == z(9, 1));  // 28 = 1 mod 9
  CHECK(Cyclotomic(mpq_class(5, 7)).galois(2) == Cyclotomic(mpq_class(5, 7)));
  CHECK_THROWS_AS(z(9, 1).galois(3), Error);
}

TEST_CASE("conductor") {
  std::vector<Cyclotomic> rs{Cyclotomic(1), Cyclotomic(mpq_class(-3, 2))};
  CHECK(conductor(rs) == 1);
  CHECK(conductor(z(4, 1)) == 4);
  CHECK(conductor(z(9, 1) + z(9, 8)) == 9);
  CHECK(conductor(z(8, 1) + z(8, 7)) == 8);   // sqrt(2)
  CHECK(conductor(z(12, 1) + z(12, 11)) == 12);  // sqrt(3)
  // values stored in a large ambient still get the exact conductor
  Cyclotomic v = z(36, 12);  // this is z_3
  CHECK(v.ambient() == 36);
  CHECK(conductor(v) == 3);
  // normalization: never 2 mod 4
  CHECK(conductor(z(3, 1) * Cyclotomic(-1)) == 3);
}

TEST_CASE("levels") {
  CHECK(lev1(Cyclotomic(1), 5) == 0);
  CHECK(lev1(z(4, 1), 2) == 2);
  CHECK(lev1(z(9, 1) + z(9, 8), 3) == 2);
  CHECK(lev1(z(8, 1) + z(8, 7), 2) == 3);
  // no value set has 2-level exactly 1
  for (long n : {3, 5, 7, 9, 12, 15, 20, 24}) {
    for (long k = 1; k < n; ++k) {
      if (gcd_l(k, n) != 1) continue;
      CHECK(lev1(z(n, k), 2) != 1);
      CHECK(lev1(z(n, k) + z(n, n - k), 2) != 1);
    }
  }
}

TEST_CASE("sigma_e exponents") {
  CHECK(sigma_e_exponent(9, 3, 1) == 4);
  CHECK(sigma_e_exponent(36, 3, 1) == 13);
  CHECK(sigma_e_exponent(9, 3, 2) == 1);
  CHECK(sigma_e_exponent(9, 3, 5) == 1);
  CHECK(sigma_e_exponent(63, 3, 1) % 9 == 4);
  CHECK(sigma_e_exponent(63, 3, 1) % 7 == 1);
}

TEST_CASE("sigma_e stability characterizes the level (p odd)") {
  // lev({v}, p) <= e iff sigma_e fixes v, for v of level >= 1
  struct Case {
    Cyclotomic v;
    long p;
    int lev;
  };
  std::vector<Case> cases{
      {z(9, 1), 3, 2},
      {z(9, 3), 3, 1},
      {z(27, 1) + z(27, 26), 3, 3},
      {z(5, 1), 5, 1},
      {z(25, 1), 5, 2},
      {z(63, 1), 3, 2},
  };
  for (auto& c : cases) {
    CHECK(level(c.v, c.p) == c.lev);
    long n = c.v.ambient();
    for (long e = 1; e <= c.lev + 1; ++e) {
      long k = sigma_e_exponent(n, c.p, e);
      bool fixed = c.v.galois(k) == c.v;
      CHECK(fixed == (c.lev <= e));
    }
  }
}

TEST_CASE("conductor is galois stable") {
  std::vector<Cyclotomic> vals{z(36, 1) + z(36, 35), z(36, 9)};
  long c0 = conductor(vals);
  for (long k = 1; k < 36; ++k) {
    if (gcd_l(k, 36) != 1) continue;
    std::vector<Cyclotomic> moved;
    for (auto& v : vals) moved.push_back(v.galois(k));
    CHECK(conductor(moved) == c0);
  }
}

TEST_CASE("field membership helpers") {
  std::vector<Cyclotomic> i4{z(4, 1)};
  CHECK(field_contains_q4(i4));
  std::vector<Cyclotomic> rat{Cyclotomic(1), Cyclotomic(-1)};
  CHECK_FALSE(field_contains_q4(rat));
  std::vector<Cyclotomic> sqrt2{z(8, 1) + z(8, 7)};
  CHECK_FALSE(field_contains_q4(sqrt2));
  std::vector<Cyclotomic> z8{z(8, 1)};
  CHECK(field_contains_q4(z8));  // Q_8 contains i

  std::vector<Cyclotomic> a{z(12, 1) + z(12, 11)};          // sqrt(3)
  std::vector<Cyclotomic> b{(z(12, 1) + z(12, 11)) * mpq_class(7, 2) + Cyclotomic(5)};
  CHECK(same_field(a, b));
  std::vector<Cyclotomic> c{z(12, 1)};
  CHECK_FALSE(same_field(a, c));
}

TEST_CASE("square roots as cyclotomics") {
  for (long d : {2L, 3L, 5L, 6L, -1L, -2L, -3L, 7L, 10L, -15L}) {
    Cyclotomic r = sqrt_of_squarefree(d);
    CHECK(r * r == Cyclotomic(d));
  }
  // conductor of sqrt(d) is 4|d| for d != 1 mod 4
  CHECK(conductor(sqrt_of_squarefree(-1)) == 4);
  CHECK(conductor(sqrt_of_squarefree(2)) == 8);
  CHECK(conductor(sqrt_of_squarefree(3)) == 12);
  CHECK(conductor(sqrt_of_squarefree(5)) == 5);  // 5 = 1 mod 4
}

TEST_CASE("prime ideal residues") {
  // residue of an integer is the integer mod p
  auto ideal = prime_ideal(2, 3);
  CHECK(ideal.residue_degree == 2);  // order of 2 mod 3
  CHECK(residue(Cyclotomic(7), ideal) == ideal.field->from_int(7));
  // p-power roots of unity reduce to 1
  auto ideal3 = prime_ideal(3, 1);
  CHECK(residue(z(9, 1), ideal3) == ideal3.field->from_int(1));
  CHECK(residue(z(27, 5), ideal3) == ideal3.field->from_int(1));
  // z_3 mod 2 is a root of x^2+x+1 over F_2
  long r = residue(z(3, 1), ideal);
  const auto& F = *ideal.field;
  CHECK(F.add(F.mul(r, r), F.add(r, F.from_int(1))) == 0);
  // multiplicative order of the residue of a p'-root equals the root's order
  CHECK(F.mult_order(r) == 3);
  auto ideal7 = prime_ideal(2, 7);
  long r7 = residue(z(7, 1), ideal7);
  CHECK(ideal7.field->mult_order(r7) == 7);
  CHECK(ideal7.residue_degree == 3);
  // additive and multiplicative on algebraic integers
  Cyclotomic a = z(21, 2) + z(21, 16);
  Cyclotomic b = z(21, 5) - Cyclotomic(4);
  auto ideal21 = prime_ideal(2, 21);
  CHECK(residue(a + b, ideal21) ==
        ideal21.field->add(residue(a, ideal21), residue(b, ideal21)));
  CHECK(residue(a * b, ideal21) ==
        ideal21.field->mul(residue(a, ideal21), residue(b, ideal21)));
  // denominators divisible by p are rejected
  CHECK_THROWS_AS(residue(Cyclotomic(mpq_class(1, 2)), ideal), Error);
}

TEST_CASE("all prime ideal choices have the right degree") {
  for (auto& [p, m] : std::vector<std::pair<long, long>>{{2, 3}, {2, 7}, {3, 8}, {5, 12}, {7, 9}}) {
    auto all = prime_ideal_all_choices(p, m);
    long d = mult_order(p % m, m);
    CHECK((long)all.size() == euler_phi(m) / d);
    for (auto& ideal : all) CHECK(ideal.residue_degree == d);
  }
}
