#include <algorithm>
#include <random>

#include "doctest.h"

#include "helpers.hpp"
#include "logrw/words.hpp"

using namespace logrw;

namespace {

  // Oracle: cancel the first adjacent inverse pair until none is left.
  std::vector<Letter> naive_reduce(std::vector<Letter> w) {
    bool again = true;
    while (again) {
      again = false;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i].inverse() == w[i + 1]) {
          w.erase(w.begin() + i, w.begin() + i + 2);
          again = true;
          break;
        }
      }
    }
    return w;
  }

  Alphabet ab() {
    return Alphabet({"a", "b"});
  }

}  // namespace

TEST_SUITE("words") {
  TEST_CASE("letters pack generator and sign") {
    Letter a(0, false), A(0, true), b(1, false);
    CHECK(a.code() == 0);
    CHECK(A.code() == 1);
    CHECK(b.code() == 2);
    CHECK(a.inverse() == A);
    CHECK(A.inverse().inverse() == A);
    CHECK(A.negative());
    CHECK(b.generator() == 1);
  }

  TEST_CASE("alphabet rejects bad names") {
    Alphabet x;
    CHECK(x.add("a") == 0);
    CHECK_THROWS_AS(x.add("a"), std::invalid_argument);
    CHECK_THROWS_AS(x.add("B"), std::invalid_argument);
    CHECK_THROWS_AS(x.add("1a"), std::invalid_argument);
    CHECK(x.add("x_1") == 1);
    CHECK(x.index("x_1") == 1);
    CHECK(x.index("zz") == x.size());
  }

  TEST_CASE("rendering") {
    auto a = ab();
    CHECK(a.render(MonoidWord{}) == "<id>");
    CHECK(a.render(GroupWord{}) == "<id>");
    CHECK(a.render(a.parse_monoid("a b A")) == "a b A");
    CHECK(a.render(a.parse_group("a a b^-1")) == "a^2 b^-1");
    CHECK(a.signed_name(Letter(1, true)) == "b-");
    CHECK(a.parse_signed_name("a+") == Letter(0, false));
  }

  TEST_CASE("parsing accepts powers and run-together letters") {
    auto a = ab();
    CHECK(a.parse_monoid("a^3") == MonoidWord{Letter(0, false), Letter(0, false), Letter(0, false)});
    CHECK(a.parse_monoid("b^-2") == MonoidWord{Letter(1, true), Letter(1, true)});
    CHECK(a.parse_monoid("abAB") == a.parse_monoid("a b A B"));
    CHECK(a.parse_monoid("<id>").empty());
    // monoid words keep inverse pairs, group words do not
    CHECK(a.parse_monoid("a A").size() == 2);
    CHECK(a.parse_group("a A").empty());
    CHECK_THROWS_AS(a.parse_monoid("c"), parse_error);
    CHECK_THROWS_AS(a.parse_monoid("a^"), parse_error);
  }

  TEST_CASE("free reduction agrees with the naive oracle") {
    std::mt19937 rng(1);
    for (int i = 0; i < 2000; ++i) {
      auto w = test::random_word(rng, 4, 14);
      auto g = GroupWord(w.letters());
      auto n = naive_reduce({w.begin(), w.end()});
      CHECK(std::equal(g.begin(), g.end(), n.begin(), n.end()));
    }
  }

  TEST_CASE("group laws in F(X)") {
    std::mt19937 rng(2);
    for (int i = 0; i < 500; ++i) {
      auto u = mu_inverse(test::random_word(rng, 4, 8));
      auto v = mu_inverse(test::random_word(rng, 4, 8));
      auto w = mu_inverse(test::random_word(rng, 4, 8));
      CHECK((u * v) * w == u * (v * w));
      CHECK((u * u.inverse()).empty());
      CHECK((u * v).inverse() == v.inverse() * u.inverse());
      CHECK(free_multiply(u, v) == u * v);
    }
  }

  TEST_CASE("involution and mu") {
    std::mt19937 rng(3);
    for (int i = 0; i < 500; ++i) {
      auto w = test::random_word(rng, 4, 10);
      CHECK(involute(involute(w)) == w);
      CHECK(mu_inverse(involute(w)) == mu_inverse(w).inverse());
      auto g = mu_inverse(w);
      CHECK(mu_inverse(mu(g)) == g);
    }
  }

  TEST_CASE("powers and roots") {
    auto a = ab();
    auto x = a.parse_group("a b");
    CHECK(power(x, 3) == a.parse_group("a b a b a b"));
    CHECK(power(x, -1) == x.inverse());
    CHECK(power(x, 0).empty());
    auto [root, m] = root_of(a.parse_group("a^4"));
    CHECK(root == a.parse_group("a"));
    CHECK(m == 4);
    auto [r2, m2] = root_of(a.parse_group("a b a b^-1"));
    CHECK(r2 == a.parse_group("a b a b^-1"));
    CHECK(m2 == 1);
  }

  TEST_CASE("roots agree with a divisor search") {
    std::mt19937 rng(4);
    for (int i = 0; i < 300; ++i) {
      auto v = mu_inverse(test::random_word(rng, 4, 4));
      if (v.empty()) {
        continue;
      }
      int  k = 1 + static_cast<int>(rng() % 4);
      auto w = power(v, k);
      // smallest period p dividing |w| with w = (prefix p)^(|w|/p)
      std::size_t best = w.size();
      for (std::size_t p = 1; p <= w.size(); ++p) {
        if (w.size() % p == 0
            && power(GroupWord(w.letters().subspan(0, p)), static_cast<int>(w.size() / p)) == w) {
          best = p;
          break;
        }
      }
      auto [root, m] = root_of(w);
      CHECK(root.size() == best);
      CHECK(power(root, static_cast<int>(m)) == w);
    }
  }

  TEST_CASE("render and parse round-trip") {
    std::mt19937 rng(5);
    auto         a = ab();
    for (int i = 0; i < 300; ++i) {
      auto w = test::random_word(rng, 4, 10);
      CHECK(a.parse_monoid(a.render(w)) == w);
      auto g = mu_inverse(w);
      CHECK(a.parse_group(a.render(g)) == g);
    }
  }
}
