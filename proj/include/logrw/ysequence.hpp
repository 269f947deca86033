// Y-sequences: formal products of conjugated relators (rho^e)^u, their
// boundaries in F(X), and Peiffer-style simplification.

#ifndef LOGRW_YSEQUENCE_HPP_
#define LOGRW_YSEQUENCE_HPP_

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "words.hpp"

namespace logrw {

  struct Relator {
    std::string label;
    GroupWord   word;
    // Shortest v with word = v^root_power.
    GroupWord   root;
    std::size_t root_power = 1;

    // Throws std::invalid_argument for an empty word.
    static Relator make(std::string label, GroupWord word);

    bool operator==(Relator const&) const = default;
  };

  using RelatorSet = std::vector<Relator>;

  enum class Sign : signed char { plus = 1, minus = -1 };

  constexpr Sign operator-(Sign s) noexcept {
    return s == Sign::plus ? Sign::minus : Sign::plus;
  }

  // (rho^sign)^conjugator, where rho is an index into a RelatorSet.
  struct YTerm {
    std::size_t relator = 0;
    Sign        sign    = Sign::plus;
    GroupWord   conjugator;

    auto operator<=>(YTerm const&) const = default;
    bool operator==(YTerm const&) const  = default;
  };

  class YSequence {
   public:
    using const_iterator = std::vector<YTerm>::const_iterator;

    YSequence() = default;
    explicit YSequence(std::vector<YTerm> terms) : _terms(std::move(terms)) {}
    YSequence(std::initializer_list<YTerm> terms) : _terms(terms) {}

    std::size_t size() const noexcept {
      return _terms.size();
    }
    bool empty() const noexcept {
      return _terms.empty();
    }
    YTerm const& operator[](std::size_t i) const {
      return _terms[i];
    }
    const_iterator begin() const noexcept {
      return _terms.begin();
    }
    const_iterator end() const noexcept {
      return _terms.end();
    }
    std::vector<YTerm> const& terms() const noexcept {
      return _terms;
    }

    void push_back(YTerm t) {
      _terms.push_back(std::move(t));
    }
    YSequence& operator+=(YSequence const& other);
    friend YSequence operator+(YSequence lhs, YSequence const& rhs) {
      lhs += rhs;
      return lhs;
    }

    // Sum of conjugator lengths.
    std::size_t conjugator_length() const noexcept;

    auto operator<=>(YSequence const&) const = default;
    bool operator==(YSequence const&) const  = default;

   private:
    std::vector<YTerm> _terms;
  };

  using NormalForm = std::function<MonoidWord(MonoidWord const&)>;

  // delta: product of u^-1 (omega rho)^e u over the terms, freely reduced.
  GroupWord  boundary(YSequence const& s, RelatorSet const& relators);
  GroupWord  boundary(YTerm const& t, RelatorSet const& relators);
  MonoidWord boundary_monoid(YSequence const& s, RelatorSet const& relators);

  // Right action of F(X): every conjugator u becomes u v.
  YSequence act(YSequence const& s, GroupWord const& v);
  // Reverse the terms and flip their signs.
  YSequence invert(YSequence const& s);

  struct SimplifyOptions {
    // S1: absorb leading powers of the relator root into the conjugator.
    // Exact in the free crossed module only when the relator is not a proper
    // power; otherwise it works modulo root module identities.
    bool root_absorption = true;
    // Absorb leading powers of the whole relator word (always Peiffer-valid).
    bool relator_absorption = true;
    // S2 transpositions that bring an inverse pair together.
    bool peiffer_moves = true;
    // Extra S2 sweep keeping a transposition whenever it shortens the total
    // conjugator length.
    bool shorten_conjugators = false;
    // When the input is an identity satisfying the primary identity property,
    // return the empty sequence. Needs a normal form function.
    bool collapse_primary = false;

    // Only adjacent (rho^e)^u (rho^-e)^u cancellation.
    static SimplifyOptions cancel_only() {
      return {false, false, false, false, false};
    }
    // Logs of rules and k1 values.
    static SimplifyOptions logs() {
      return {};
    }
    // Moves that stay inside the Peiffer congruence.
    static SimplifyOptions peiffer() {
      return {false, true, true, false, false};
    }
  };

  YSequence simplify(YSequence const&       s,
                     RelatorSet const&      relators,
                     SimplifyOptions const& options = {},
                     NormalForm const&      nf      = {});

  // (rho^+)^root (rho^-), or the empty sequence when rho is not a proper power.
  YSequence root_identity(std::size_t relator, RelatorSet const& relators);

  // Throws std::invalid_argument if boundary(s) is not trivial, and
  // std::length_error when s has more than `max_terms` terms.
  bool is_primary_identity(YSequence const&  s,
                           RelatorSet const& relators,
                           NormalForm const& nf,
                           std::size_t       max_terms = 20);

  // "(r1^+)^{a^-1 b} (r2^-)", or "<idY>".
  std::string render(YTerm const& t, Alphabet const& alphabet, RelatorSet const& relators);
  std::string render(YSequence const& s, Alphabet const& alphabet, RelatorSet const& relators);
  YSequence   parse_ysequence(std::string_view  text,
                              Alphabet const&   alphabet,
                              RelatorSet const& relators);

  // Index of the relator with `label`, or relators.size().
  std::size_t relator_index(RelatorSet const& relators, std::string_view label);

}  // namespace logrw

#endif  // LOGRW_YSEQUENCE_HPP_
