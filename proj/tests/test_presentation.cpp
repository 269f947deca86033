#include "doctest.h"

#include "helpers.hpp"
#include "logrw/presentation.hpp"

using namespace logrw;

namespace {

  // Line and column of the parse error raised by `text`, or {0, 0}.
  std::pair<std::size_t, std::size_t> error_at(std::string const& text) {
    try {
      parse_presentation(text);
    } catch (parse_error const& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  }

}  // namespace

TEST_SUITE("presentation") {
  TEST_CASE("the Q8 file") {
    auto f = test::load_example("q8.pres");
    auto const& p = f.presentation;
    CHECK(p.generators.size() == 2);
    REQUIRE(p.relators.size() == 4);
    CHECK(p.relators[0].label == "r1");
    CHECK(p.generators.render(p.relators[2].word) == "a b a b^-1");
    CHECK(p.generators.render(p.relator_monoid_word(3)) == "a a b b");
    CHECK(f.order.kind() == OrderKind::shortlex);
  }

  TEST_CASE("order and letters lines") {
    auto f = parse_presentation("generators: x, y\norder: syllable\nrelators:\n  r = x^3 y^-2\n");
    CHECK(f.order.kind() == OrderKind::syllable);
    CHECK(f.order.letter_order() == OrderSpec::syllable(2).letter_order());
    auto g = parse_presentation("generators: a, b\nletters: a+, b+, a-, b-\nrelators:\n  r = a b\n");
    CHECK(g.order.rank(Letter(1, false)) == 1);
  }

  TEST_CASE("relators are kept as written") {
    auto f = parse_presentation("generators: a\nrelators:\n  r = a a^-1 a^2 # comment\n");
    CHECK(f.presentation.relators[0].word.size() == 2);
  }

  TEST_CASE("errors carry line and column") {
    CHECK(error_at("generators: a\nrelators:\n  r = c\n") == std::pair<std::size_t, std::size_t>{3, 7});
    CHECK(error_at("generators: a\nrelators:\n  r = a\n  r = a^2\n").first == 4);
    CHECK(error_at("generators: a\nrelators:\n  r = a a^-1\n").first == 3);
    CHECK(error_at("generators: a\nfoo: 1\n") == std::pair<std::size_t, std::size_t>{2, 1});
    CHECK(error_at("relators:\n").first == 1);
    CHECK(error_at("generators: a\nletters: a+\n").first == 2);
    CHECK(error_at("generators: a, a\n").first == 1);
    CHECK(error_at("generators: a\norder: random\n").first == 2);
  }

  TEST_CASE("render round-trips") {
    for (auto name : {"q8.pres", "abelian.pres", "trefoil.pres"}) {
      auto f = test::load_example(name);
      auto g = parse_presentation(render_presentation(f));
      CHECK(g.presentation == f.presentation);
      CHECK(g.order.letter_order() == f.order.letter_order());
      CHECK(g.order.kind() == f.order.kind());
    }
  }

  TEST_CASE("initial logged system") {
    auto f   = test::load_example("q8.pres");
    auto sys = initial_logged_system(f.presentation, f.order);
    REQUIRE(sys.size() == 8);
    auto const& a = sys.alphabet();
    CHECK(a.render(sys.rules()[0].lhs) == "a a a a");
    CHECK(render(sys.rules()[3].log, a, sys.relators()) == "(r4^+)");
    CHECK(a.render(sys.rules()[4].lhs) == "a A");
    CHECK(a.render(sys.rules()[7].lhs) == "B b");
    for (auto const& r : sys.rules()) {
      CHECK(sys.rule_valid(r));
    }
  }
}
