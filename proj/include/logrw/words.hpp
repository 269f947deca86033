// Signed alphabets, free monoid words over the signed alphabet, and freely
// reduced words in the free group on the generators.

#ifndef LOGRW_WORDS_HPP_
#define LOGRW_WORDS_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace logrw {

  class parse_error : public std::runtime_error {
   public:
    parse_error(std::string const& msg, std::size_t line = 0, std::size_t column = 0);

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::size_t _line;
    std::size_t _column;
  };

  // A signed generator x^+ or x^-, packed as 2 * generator + (negative ? 1 : 0).
  class Letter {
   public:
    constexpr Letter() = default;
    constexpr Letter(std::uint32_t generator, bool negative)
        : _code(2 * generator + (negative ? 1 : 0)) {}

    static constexpr Letter from_code(std::uint32_t code) {
      Letter l;
      l._code = code;
      return l;
    }

    constexpr std::uint32_t code() const noexcept {
      return _code;
    }
    constexpr std::uint32_t generator() const noexcept {
      return _code >> 1;
    }
    constexpr bool negative() const noexcept {
      return (_code & 1) != 0;
    }
    constexpr bool positive() const noexcept {
      return !negative();
    }
    constexpr Letter inverse() const noexcept {
      return from_code(_code ^ 1);
    }

    constexpr auto operator<=>(Letter const&) const = default;

   private:
    std::uint32_t _code = 0;
  };

  class MonoidWord;
  class GroupWord;

  // The generating set X, in declaration order.
  class Alphabet {
   public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    // Throws std::invalid_argument on a duplicate or malformed name.
    std::uint32_t add(std::string name);

    std::size_t size() const noexcept {
      return _names.size();
    }
    // Number of signed letters, 2 * size().
    std::size_t letter_count() const noexcept {
      return 2 * _names.size();
    }
    std::string const& name(std::uint32_t generator) const {
      return _names.at(generator);
    }
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    // Returns size() when absent.
    std::uint32_t index(std::string_view name) const;

    bool contains(Letter l) const noexcept {
      return l.generator() < _names.size();
    }

    // "a" for a^+, "A" for a^-.
    std::string letter_name(Letter l) const;
    // "a+" / "a-" form used in letter-order lists.
    std::string signed_name(Letter l) const;
    Letter parse_signed_name(std::string_view token) const;

    // Monoid words render as space separated letters, <id> for the empty word.
    std::string render(MonoidWord const& w) const;
    // Group words render with powers, e.g. "a^2 b^-1", <id> for the empty word.
    std::string render(GroupWord const& w) const;

    // Accepts whitespace separated tokens such as "a", "A", "a^3", "b^-2",
    // "a^-1", and run-together single letter names ("abAB").
    std::vector<Letter> parse_letters(std::string_view text) const;
    MonoidWord parse_monoid(std::string_view text) const;
    GroupWord parse_group(std::string_view text) const;

    bool operator==(Alphabet const&) const = default;

   private:
    void parse_token(std::string_view token, std::vector<Letter>& out) const;

    std::vector<std::string> _names;
  };

  // An element of the free monoid on the signed alphabet. No cancellation is
  // ever performed on these words.
  class MonoidWord {
   public:
    using value_type     = Letter;
    using const_iterator = std::vector<Letter>::const_iterator;

    MonoidWord() = default;
    explicit MonoidWord(std::vector<Letter> letters) : _letters(std::move(letters)) {}
    MonoidWord(std::initializer_list<Letter> letters) : _letters(letters) {}
    MonoidWord(const_iterator first, const_iterator last) : _letters(first, last) {}

    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    Letter operator[](std::size_t i) const {
      return _letters[i];
    }
    const_iterator begin() const noexcept {
      return _letters.begin();
    }
    const_iterator end() const noexcept {
      return _letters.end();
    }
    std::span<Letter const> letters() const noexcept {
      return _letters;
    }

    MonoidWord subword(std::size_t pos, std::size_t len) const;
    // True if the letters of `pattern` occur at position `pos`.
    bool matches_at(std::size_t pos, std::span<Letter const> pattern) const noexcept;

    MonoidWord& operator+=(MonoidWord const& other);
    friend MonoidWord operator+(MonoidWord lhs, MonoidWord const& rhs) {
      lhs += rhs;
      return lhs;
    }

    auto operator<=>(MonoidWord const&) const = default;
    bool operator==(MonoidWord const&) const  = default;

   private:
    std::vector<Letter> _letters;
  };

  // An element of F(X), stored freely reduced.
  class GroupWord {
   public:
    using const_iterator = std::vector<Letter>::const_iterator;

    GroupWord() = default;
    // Freely reduces `letters`.
    explicit GroupWord(std::span<Letter const> letters);
    GroupWord(std::initializer_list<Letter> letters);

    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    Letter operator[](std::size_t i) const {
      return _letters[i];
    }
    const_iterator begin() const noexcept {
      return _letters.begin();
    }
    const_iterator end() const noexcept {
      return _letters.end();
    }
    std::span<Letter const> letters() const noexcept {
      return _letters;
    }

    GroupWord inverse() const;
    bool has_prefix(GroupWord const& prefix) const noexcept;

    friend GroupWord operator*(GroupWord const& u, GroupWord const& v);
    GroupWord& operator*=(GroupWord const& v);

    auto operator<=>(GroupWord const&) const = default;
    bool operator==(GroupWord const&) const  = default;

   private:
    std::vector<Letter> _letters;
  };

  // w^- : reverse the letters and flip every sign.
  MonoidWord involute(MonoidWord const& w);
  // a -> a^+, a^-1 -> a^-.
  MonoidWord mu(GroupWord const& w);
  // Letter map back to F(X), freely reduced.
  GroupWord mu_inverse(MonoidWord const& w);
  GroupWord free_multiply(GroupWord const& u, GroupWord const& v);
  // w^k for any integer k.
  GroupWord power(GroupWord const& w, int k);

  // Shortest v with w = v^m, together with m. The empty word is its own root.
  std::pair<GroupWord, std::size_t> root_of(GroupWord const& w);

  struct MonoidWordHash {
    std::size_t operator()(MonoidWord const& w) const noexcept;
  };
  struct GroupWordHash {
    std::size_t operator()(GroupWord const& w) const noexcept;
  };

}  // namespace logrw

#endif  // LOGRW_WORDS_HPP_
