// Admissible well-orderings on the free monoid over the signed alphabet.

#ifndef LOGRW_ORDERINGS_HPP_
#define LOGRW_ORDERINGS_HPP_

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "words.hpp"

namespace logrw {

  class alphabet_mismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  enum class OrderKind { shortlex, syllable };

  std::string to_string(OrderKind kind);
  OrderKind   order_kind_from_string(std::string const& s);

  // An ordering on words together with the total order on letters it is built
  // from. Letters are listed least first.
  class OrderSpec {
   public:
    OrderSpec() = default;
    // Throws alphabet_mismatch unless `letter_order` is a permutation of the
    // 2 * generator_count signed letters.
    OrderSpec(OrderKind kind, std::vector<Letter> letter_order, std::size_t generator_count);

    // Shortlex: x1+ < x1- < x2+ < x2- < ...
    static OrderSpec shortlex(std::size_t generator_count);
    // Syllable: xn+ < xn- < ... < x1+ < x1-, so x1- is the largest letter.
    static OrderSpec syllable(std::size_t generator_count);
    static OrderSpec make(OrderKind kind, std::size_t generator_count);

    OrderKind kind() const noexcept {
      return _kind;
    }
    std::vector<Letter> const& letter_order() const noexcept {
      return _order;
    }
    std::size_t generator_count() const noexcept {
      return _order.size() / 2;
    }
    // Position of `l` in the letter order; throws alphabet_mismatch.
    std::size_t rank(Letter l) const;

    std::strong_ordering compare(MonoidWord const& u, MonoidWord const& v) const;

    bool less(MonoidWord const& u, MonoidWord const& v) const {
      return compare(u, v) == std::strong_ordering::less;
    }

    std::string describe(Alphabet const& alphabet) const;

   private:
    std::vector<Letter>      _order;
    std::vector<std::size_t> _rank;  // indexed by letter code
    OrderKind                _kind = OrderKind::shortlex;
  };

  std::strong_ordering shortlex_compare(MonoidWord const& u,
                                        MonoidWord const& v,
                                        OrderSpec const&  spec);
  std::strong_ordering syllable_compare(MonoidWord const& u,
                                        MonoidWord const& v,
                                        OrderSpec const&  spec);

}  // namespace logrw

#endif  // LOGRW_ORDERINGS_HPP_
