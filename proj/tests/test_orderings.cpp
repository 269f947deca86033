#include <random>

#include "doctest.h"

#include "helpers.hpp"
#include "logrw/orderings.hpp"

using namespace logrw;

namespace {

  // Syllable oracle: a word over the letters with rank < top becomes the key
  // (count of the top letter, keys of the pieces between its occurrences),
  // and keys compare lexicographically.
  struct Key {
    std::size_t      count = 0;
    std::vector<Key> pieces;
  };

  std::strong_ordering compare(Key const& a, Key const& b) {
    if (auto c = a.count <=> b.count; c != 0) {
      return c;
    }
    for (std::size_t i = 0; i < a.pieces.size() && i < b.pieces.size(); ++i) {
      if (auto c = compare(a.pieces[i], b.pieces[i]); c != 0) {
        return c;
      }
    }
    return a.pieces.size() <=> b.pieces.size();
  }

  Key syllable_key(std::vector<std::size_t> const& ranks, std::size_t top) {
    Key k;
    if (top == 0) {
      return k;
    }
    auto m = top - 1;
    std::vector<std::size_t> piece;
    for (auto r : ranks) {
      if (r == m) {
        k.pieces.push_back(syllable_key(piece, m));
        piece.clear();
        ++k.count;
      } else {
        piece.push_back(r);
      }
    }
    k.pieces.push_back(syllable_key(piece, m));
    return k;
  }

  std::strong_ordering oracle(MonoidWord const& u, MonoidWord const& v, OrderSpec const& o) {
    std::vector<std::size_t> ru, rv;
    for (auto l : u) {
      ru.push_back(o.rank(l));
    }
    for (auto l : v) {
      rv.push_back(o.rank(l));
    }
    if (o.kind() == OrderKind::shortlex) {
      if (ru.size() != rv.size()) {
        return ru.size() <=> rv.size();
      }
      return ru <=> rv;
    }
    auto n = o.letter_order().size();
    return compare(syllable_key(ru, n), syllable_key(rv, n));
  }

  MonoidWord w(std::string const& s) {
    return Alphabet({"x", "y"}).parse_monoid(s);
  }

}  // namespace

TEST_SUITE("orderings") {
  TEST_CASE("default letter orders") {
    auto s = OrderSpec::shortlex(2);
    CHECK(s.rank(Letter(0, false)) == 0);
    CHECK(s.rank(Letter(0, true)) == 1);
    CHECK(s.rank(Letter(1, false)) == 2);
    auto y = OrderSpec::syllable(2);
    // x1- is the largest letter, xn+ the least
    CHECK(y.rank(Letter(0, true)) == 3);
    CHECK(y.rank(Letter(1, false)) == 0);
    CHECK_THROWS_AS(OrderSpec(OrderKind::shortlex, {Letter(0, false), Letter(0, false)}, 1),
                    alphabet_mismatch);
    CHECK(order_kind_from_string("wreath") == OrderKind::syllable);
  }

  TEST_CASE("both orderings agree with the oracles") {
    std::mt19937 rng(11);
    for (auto o : {OrderSpec::shortlex(2), OrderSpec::syllable(2),
                   OrderSpec(OrderKind::syllable,
                             {Letter(0, false), Letter(1, false), Letter(0, true), Letter(1, true)},
                             2)}) {
      for (int i = 0; i < 3000; ++i) {
        auto u = test::random_word(rng, 4, 7);
        auto v = test::random_word(rng, 4, 7);
        CHECK(o.compare(u, v) == oracle(u, v, o));
      }
    }
  }

  TEST_CASE("total, antisymmetric and transitive") {
    std::mt19937 rng(12);
    for (auto o : {OrderSpec::shortlex(2), OrderSpec::syllable(2)}) {
      for (int i = 0; i < 2000; ++i) {
        auto u = test::random_word(rng, 4, 6);
        auto v = test::random_word(rng, 4, 6);
        auto x = test::random_word(rng, 4, 6);
        auto c = o.compare(u, v);
        CHECK((c == std::strong_ordering::equal) == (u == v));
        CHECK(o.compare(v, u) == (0 <=> c));
        if (o.less(u, v) && o.less(v, x)) {
          CHECK(o.less(u, x));
        }
      }
    }
  }

  TEST_CASE("admissible: u < v implies x u y < x v y") {
    std::mt19937 rng(13);
    for (auto o : {OrderSpec::shortlex(2), OrderSpec::syllable(2)}) {
      for (int i = 0; i < 3000; ++i) {
        auto u = test::random_word(rng, 4, 6);
        auto v = test::random_word(rng, 4, 6);
        auto x = test::random_word(rng, 4, 4);
        auto y = test::random_word(rng, 4, 4);
        if (o.less(u, v)) {
          CHECK(o.less(x + u + y, x + v + y));
        }
        // the empty word is least
        CHECK(!o.less(u, MonoidWord{}));
      }
    }
  }

  TEST_CASE("syllable ordering orients the trefoil rules") {
    auto o = OrderSpec::syllable(2);
    CHECK(o.less(w("y y"), w("x x x")));
    CHECK(o.less(w("x y y"), w("y y x")));
    CHECK(o.less(w("y x Y Y"), w("Y x")));
    CHECK(o.less(w("x x Y Y"), w("X")));
    CHECK(o.less(MonoidWord{}, w("y Y")));
    // shortlex orients the last one the other way
    CHECK(OrderSpec::shortlex(2).less(w("X"), w("x x Y Y")));
  }

  TEST_CASE("describe") {
    Alphabet a({"a", "b"});
    CHECK(OrderSpec::shortlex(2).describe(a) == "shortlex a+ < a- < b+ < b-");
  }
}
