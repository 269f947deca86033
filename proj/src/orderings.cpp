#include "logrw/orderings.hpp"

#include <algorithm>
#include <span>

namespace logrw {

  std::string to_string(OrderKind kind) {
    return kind == OrderKind::shortlex ? "shortlex" : "syllable";
  }

  OrderKind order_kind_from_string(std::string const& s) {
    if (s == "shortlex") {
      return OrderKind::shortlex;
    }
    if (s == "syllable" || s == "wreath") {
      return OrderKind::syllable;
    }
    throw std::invalid_argument("unknown ordering \"" + s + "\" (expected shortlex or syllable)");
  }

  OrderSpec::OrderSpec(OrderKind kind, std::vector<Letter> letter_order, std::size_t generator_count)
      : _order(std::move(letter_order)), _rank(2 * generator_count, 2 * generator_count), _kind(kind) {
    if (_order.size() != 2 * generator_count) {
      throw alphabet_mismatch("letter order has " + std::to_string(_order.size())
                              + " letters, expected " + std::to_string(2 * generator_count));
    }
    for (std::size_t i = 0; i < _order.size(); ++i) {
      auto code = _order[i].code();
      if (code >= _rank.size()) {
        throw alphabet_mismatch("letter order mentions an unknown generator");
      }
      if (_rank[code] != _rank.size()) {
        throw alphabet_mismatch("letter order repeats a letter");
      }
      _rank[code] = i;
    }
  }

  OrderSpec OrderSpec::shortlex(std::size_t generator_count) {
    std::vector<Letter> order;
    for (std::uint32_t g = 0; g < generator_count; ++g) {
      order.emplace_back(g, false);
      order.emplace_back(g, true);
    }
    return OrderSpec(OrderKind::shortlex, std::move(order), generator_count);
  }

  OrderSpec OrderSpec::syllable(std::size_t generator_count) {
    std::vector<Letter> order;
    for (auto g = static_cast<std::uint32_t>(generator_count); g-- > 0;) {
      order.emplace_back(g, false);
      order.emplace_back(g, true);
    }
    return OrderSpec(OrderKind::syllable, std::move(order), generator_count);
  }

  OrderSpec OrderSpec::make(OrderKind kind, std::size_t generator_count) {
    return kind == OrderKind::shortlex ? shortlex(generator_count) : syllable(generator_count);
  }

  std::size_t OrderSpec::rank(Letter l) const {
    if (l.code() >= _rank.size()) {
      throw alphabet_mismatch("letter outside the ordering's alphabet");
    }
    return _rank[l.code()];
  }

  std::strong_ordering OrderSpec::compare(MonoidWord const& u, MonoidWord const& v) const {
    return _kind == OrderKind::shortlex ? shortlex_compare(u, v, *this)
                                        : syllable_compare(u, v, *this);
  }

  std::string OrderSpec::describe(Alphabet const& alphabet) const {
    std::string out = to_string(_kind) + " ";
    for (std::size_t i = 0; i < _order.size(); ++i) {
      out += (i == 0 ? "" : " < ") + alphabet.signed_name(_order[i]);
    }
    return out;
  }

  std::strong_ordering shortlex_compare(MonoidWord const& u,
                                        MonoidWord const& v,
                                        OrderSpec const&  spec) {
    if (auto c = u.size() <=> v.size(); c != 0) {
      // Still validate letters so mismatches are never silently ordered.
      for (Letter l : u) {
        spec.rank(l);
      }
      for (Letter l : v) {
        spec.rank(l);
      }
      return c;
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (auto c = spec.rank(u[i]) <=> spec.rank(v[i]); c != 0) {
        return c;
      }
    }
    return std::strong_ordering::equal;
  }

  namespace {

    using Ranks = std::span<std::size_t const>;

    // Compare words over the letters of rank < top, where top - 1 is the
    // largest letter still in play.
    std::strong_ordering syllable_rec(Ranks u, Ranks v, std::size_t top) {
      if (top == 0) {
        return u.size() <=> v.size();  // both empty for well formed input
      }
      auto m  = top - 1;
      auto nu = std::count(u.begin(), u.end(), m);
      auto nv = std::count(v.begin(), v.end(), m);
      if (nu != nv) {
        return nu <=> nv;
      }
      // Walk the syllables between occurrences of m, left to right.
      std::size_t iu = 0, iv = 0;
      while (true) {
        auto ju = std::find(u.begin() + iu, u.end(), m) - u.begin();
        auto jv = std::find(v.begin() + iv, v.end(), m) - v.begin();
        auto c  = syllable_rec(u.subspan(iu, ju - iu), v.subspan(iv, jv - iv), m);
        if (c != 0) {
          return c;
        }
        if (static_cast<std::size_t>(ju) == u.size()) {
          return std::strong_ordering::equal;
        }
        iu = ju + 1;
        iv = jv + 1;
      }
    }

  }  // namespace

  std::strong_ordering syllable_compare(MonoidWord const& u,
                                        MonoidWord const& v,
                                        OrderSpec const&  spec) {
    std::vector<std::size_t> ru, rv;
    ru.reserve(u.size());
    rv.reserve(v.size());
    for (Letter l : u) {
      ru.push_back(spec.rank(l));
    }
    for (Letter l : v) {
      rv.push_back(spec.rank(l));
    }
    return syllable_rec(ru, rv, spec.letter_order().size());
  }

}  // namespace logrw
