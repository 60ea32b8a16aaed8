#include <algorithm>
#include <numeric>
#include <tuple>

#include "doctest.h"
#include "dormant/enumeration.hpp"
#include "dormant/errors.hpp"
#include "dormant/linalg.hpp"
#include "dormant/oper.hpp"
#include "generators.hpp"

using namespace dormant;

namespace {

CompanionOper sym_base(uint32_t p, std::vector<int64_t> f) { return CompanionOper(p, 2, {Polynomial(p, f)}); }

Matrix<Fp> evaluate_at(const LogConnection& c, Fp at, bool negate) {
  const std::size_t n = c.rank();
  Matrix<Fp> m(n, n, Fp(0, c.modulus()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Fp v = c.matrix()(i, j).numerator()(at);
      m(i, j) = negate ? -v : v;
    }
  return m;
}

RationalFunction apply_rational(const ScalarOperator& d, const RationalFunction& y) {
  RationalFunction acc(d.modulus()), dy = y;
  for (std::size_t i = 0; i <= d.order(); ++i) {
    if (i > 0) dy = theta_derivative(dy);
    acc += RationalFunction(d.coefficient(i)) * dy;
  }
  return acc;
}

std::vector<Fp> sorted_exponents(const CompanionOper& op, MarkedPoint q) {
  auto e = exponents(op, q).exponents;
  std::sort(e.begin(), e.end());
  return e;
}

}  // namespace

TEST_SUITE("oper-model") {
  TEST_CASE("companion connection shape") {
    const auto a = companion_connection(CompanionOper(5, 2, {Polynomial(5)})).matrix();
    CHECK(a(0, 0).is_zero());
    CHECK(a(0, 1).is_zero());
    CHECK(a(1, 0) == RationalFunction::constant(5, -1));
    CHECK(a(1, 1).is_zero());
    const auto b = companion_connection(CompanionOper(7, 3, {})).matrix();
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        CHECK(b(i, j) == (i == j + 1 ? RationalFunction::constant(7, -1) : RationalFunction(7)));
    const auto c = companion_connection(CompanionOper(5, 2, {Polynomial::monomial(5, 2)})).matrix();
    CHECK(c(0, 1) == RationalFunction(Polynomial::monomial(5, 2)));
    CHECK_THROWS_AS(CompanionOper(5, 2, {Polynomial::monomial(5, 3)}), DegreeBoundViolated);
  }

  TEST_CASE("scalar operator examples") {
    const Polynomial q{7, {2, 0, 3}};
    const auto d = scalar_operator(CompanionOper(7, 2, {q}));
    CHECK(d.order() == 2);
    CHECK(d.coefficient(2) == Polynomial::constant(7, 1));
    CHECK(d.coefficient(1).is_zero());
    CHECK(d.coefficient(0) == q);
    CHECK(scalar_operator(CompanionOper(7, 2, {Polynomial(7)})).apply(Polynomial::constant(7, 1)).is_zero());
    const auto d3 = scalar_operator(CompanionOper(7, 3, {}));
    const Polynomial x = Polynomial::x(7);
    CHECK(d3.apply(x) == theta_derivative(theta_derivative(theta_derivative(x))));
    CHECK_FALSE(d3.apply(x).is_zero());
  }

  TEST_CASE("companion system reduces to the scalar equation") {
    gen::Rng rng(31);
    const uint32_t p = 11;
    for (int t = 0; t < 30; ++t) {
      const std::size_t n = 2 + rng() % 3;
      std::vector<Polynomial> f;
      for (std::size_t j = 2; j <= n; ++j) f.push_back(gen::polynomial(rng, p, static_cast<int>(j)));
      const CompanionOper op(p, n, f);
      const auto y = gen::polynomial(rng, p, 6);
      RfVector v(n, RationalFunction(p));
      Polynomial cur = y;
      for (std::size_t i = n; i-- > 0;) {
        v[i] = RationalFunction(cur);
        cur = theta_derivative(cur);
      }
      const auto out = companion_connection(op).apply(v);
      CHECK(out[0] == RationalFunction(scalar_operator(op).apply(y)));
      for (std::size_t i = 1; i < n; ++i) CHECK(out[i].is_zero());
    }
  }

  TEST_CASE("monomial action matches direct application, including negative powers") {
    gen::Rng rng(32);
    const uint32_t p = 13;
    for (int t = 0; t < 20; ++t) {
      const CompanionOper op(p, 3, {gen::polynomial(rng, p, 2), gen::polynomial(rng, p, 3)});
      const auto d = scalar_operator(op);
      for (int64_t k = -4; k <= 5; ++k) {
        const Polynomial xk = Polynomial::monomial(p, static_cast<std::size_t>(std::abs(k)));
        const RationalFunction y = k >= 0 ? RationalFunction(xk)
                                          : RationalFunction(Polynomial::constant(p, 1), xk);
        CHECK(apply_rational(d, y) == y * RationalFunction(d.apply_monomial(k)));
      }
    }
  }

  TEST_CASE("adjoint is an involution") {
    gen::Rng rng(33);
    const uint32_t p = 11;
    for (int t = 0; t < 20; ++t) {
      const CompanionOper op(p, 4, {gen::polynomial(rng, p, 2), gen::polynomial(rng, p, 3),
                                    gen::polynomial(rng, p, 4)});
      const auto d = scalar_operator(op);
      CHECK(d.adjoint().adjoint() == d);
    }
  }

  TEST_CASE("exponent examples") {
    CHECK(exponents(CompanionOper(5, 2, {Polynomial(5)}), MarkedPoint::Zero).exponents ==
          std::vector<Fp>{Fp(0, 5), Fp(0, 5)});
    // -1 is a square mod 5: lambda^2 = -1 has roots 2 and 3.
    CHECK(exponents(CompanionOper(5, 2, {Polynomial::constant(5, 1)}), MarkedPoint::Zero).exponents ==
          std::vector<Fp>{Fp(2, 5), Fp(3, 5)});
    CHECK_THROWS_AS(exponents(CompanionOper(7, 2, {Polynomial::constant(7, 1)}), MarkedPoint::Zero),
                    NotSplit);
  }

  TEST_CASE("exponents at 0 and 1 are residue eigenvalues") {
    gen::Rng rng(34);
    const uint32_t p = 7;
    int compared = 0;
    for (int t = 0; t < 200 && compared < 40; ++t) {
      const std::size_t n = 2 + rng() % 2;
      std::vector<Polynomial> f;
      for (std::size_t j = 2; j <= n; ++j) f.push_back(gen::polynomial(rng, p, static_cast<int>(j)));
      const CompanionOper op(p, n, f);
      const auto c = companion_connection(op);
      for (auto [q, at, negate] : {std::tuple{MarkedPoint::Zero, 0, false},
                                   std::tuple{MarkedPoint::One, 1, true}}) {
        std::vector<Fp> expected;
        try {
          expected = eigenvalues_in_field(evaluate_at(c, Fp(at, p), negate));
        } catch (const NotSplit&) {
          CHECK_THROWS_AS(exponents(op, q), NotSplit);
          continue;
        }
        CHECK(sorted_exponents(op, q) == expected);
        ++compared;
      }
    }
    CHECK(compared >= 40);
  }

  TEST_CASE("orthogonal compatibility") {
    CHECK(is_orthogonal_compatible(CompanionOper(7, 3, {Polynomial::constant(7, 3)})));
    CHECK_FALSE(is_orthogonal_compatible(CompanionOper(7, 3, {Polynomial(7), Polynomial::x(7)})));
    CHECK_THROWS_AS(is_orthogonal_compatible(CompanionOper(7, 2, {})), PreconditionViolated);
    // Constant antidiagonal forms do not see non-constant self-dual potentials.
    const auto with_f2 = companion_connection(CompanionOper(7, 3, {Polynomial::constant(7, 3)}));
    CHECK_FALSE(is_orthogonal_compatible(with_f2, canonical_form(7, 3)));
    CHECK(is_orthogonal_compatible(companion_connection(CompanionOper(7, 3, {})), canonical_form(7, 3)));
    // Self-duality for n = 3 is exactly 2 f_3 = d f_2.
    const Polynomial f2{7, {1, 2, 3}};
    const Polynomial f3 = theta_derivative(f2) * Fp(2, 7).inverse();
    CHECK(is_orthogonal_compatible(CompanionOper(7, 3, {f2, f3})));
  }

  TEST_CASE("symmetric powers") {
    const auto base = sym_base(5, {1});
    const auto s1 = symmetric_power(base, 1);
    CHECK(s1.connection == companion_connection(base));
    CHECK(s1.companion == base);
    CHECK_FALSE(s1.form.has_value());

    const auto s2 = symmetric_power(base, 2);
    CHECK(is_dormant(s2.connection));
    CHECK(is_dormant(companion_connection(s2.companion)));
    REQUIRE(s2.form.has_value());
    CHECK(is_orthogonal_compatible(s2.connection, *s2.form));
    CHECK(s2.form->gram == s2.form->gram.transpose());
    // Same local system in both frames.
    CHECK(solution_space(s2.connection, 4).size() ==
          solution_space(companion_connection(s2.companion), 4).size());

    const auto s6 = symmetric_power(sym_base(17, {1, 0, 14}), 6);
    CHECK(s6.connection.rank() == 7);
    CHECK(is_dormant(s6.connection));
    CHECK(is_orthogonal_compatible(s6.connection, *s6.form));
    CHECK(is_orthogonal_compatible(s6.companion));
  }

  TEST_CASE("exponent reflection on orthogonal witnesses") {
    for (const auto& w : enumerate_dormant_sl2(17).witnesses) {
      const auto s = symmetric_power(w.oper, 6);
      for (auto q : {MarkedPoint::Zero, MarkedPoint::One, MarkedPoint::Infinity}) {
        const auto a = sorted_exponents(s.companion, q);
        CHECK(std::adjacent_find(a.begin(), a.end()) == a.end());
        CHECK(a[0].is_zero());
        for (std::size_t m = 1; m < a.size(); ++m) CHECK((a[m] + a[a.size() - m]).is_zero());
      }
    }
  }

  TEST_CASE("even extension and splitting") {
    const uint32_t p = 17;
    const auto odd = symmetric_power(sym_base(p, {1}), 6).companion;
    const auto zero = extend_to_even(odd, Polynomial(p));
    CHECK(is_dormant(zero.connection) == is_dormant(companion_connection(odd)));
    CHECK(split_even(zero).second.is_zero());
    const auto nd = CompanionOper(p, 3, {});
    CHECK_FALSE(is_dormant(extend_to_even(nd, Polynomial(p)).connection));

    const auto toy = extend_to_even(CompanionOper(7, 3, {}), Polynomial::constant(7, 1));
    CHECK(toy.connection.matrix()(0, 3) == RationalFunction::constant(7, 1));
    CHECK(toy.form.gram(3, 3) == Fp(1, 7));
    CHECK(split_even(toy).first == CompanionOper(7, 3, {}));

    CHECK_THROWS_AS(extend_to_even(CompanionOper(7, 3, {Polynomial(7), Polynomial::x(7)}), Polynomial(7)),
                    IncompatibleOddPart);
    CHECK_THROWS_AS(extend_to_even(CompanionOper(7, 3, {}), Polynomial::monomial(7, 3)),
                    DegreeBoundViolated);

    auto bad = toy.connection.matrix();
    bad(3, 0) = RationalFunction::constant(7, 2);
    CHECK_THROWS_AS(split_even(LogConnection(bad)), MalformedBlocks);
  }

  TEST_CASE("kernel profiles") {
    const auto triv = kernel_sheaf_profile(CompanionOper(5, 1, {}), true);
    CHECK(triv.rank == 1);
    CHECK(triv.degree == 0);
    CHECK(triv.splitting == std::vector<int>{0});

    for (const auto& w : enumerate_dormant_sl2(5).witnesses) {
      const auto k = kernel_sheaf_profile(w.oper, true);
      CHECK(k.rank == 2);
      CHECK(k.degree == std::accumulate(k.splitting.begin(), k.splitting.end(), 0));
      CHECK(std::is_sorted(k.splitting.begin(), k.splitting.end()));
    }

    const auto s6 = symmetric_power(sym_base(17, {1, 1, 11}), 6).companion;
    const auto k6 = kernel_sheaf_profile(s6, true);
    CHECK(k6.rank == 7);
    CHECK(k6.degree == -9);

    CHECK_THROWS_AS(kernel_sheaf_profile(CompanionOper(5, 2, {Polynomial(5)}), true), NotDormant);
  }

  TEST_CASE("image profiles and the certificate") {
    const uint32_t p = 17;
    const auto s6 = symmetric_power(sym_base(p, {1, 1, 14}), 6).companion;
    const auto im = image_profile(s6, true);
    CHECK(im.profile.rank == 10);
    CHECK(im.profile.degree == -10);
    CHECK(im.profile.splitting == std::vector<int>(10, -1));
    CHECK(im.h0 == 0);
    CHECK(unramifiedness_certificate(s6));
    CHECK(kernel_sheaf_profile(s6, true).degree + im.profile.degree == pushforward_degree(p, 4));

    // Outside the guaranteed range: computed and reported only.
    const auto s4 = symmetric_power(sym_base(p, {1}), 4).companion;
    const auto im4 = image_profile(s4, true);
    MESSAGE("l = 3, p = 17: image rank " << im4.profile.rank << ", h0 " << im4.h0);
    CHECK(kernel_sheaf_profile(s4, true).degree + im4.profile.degree == pushforward_degree(p, 3));

    CHECK_THROWS_AS(unramifiedness_certificate(CompanionOper(5, 1, {})), PreconditionViolated);
    CHECK_THROWS_AS(image_profile(CompanionOper(17, 3, {}), true), NotDormant);
  }
}
