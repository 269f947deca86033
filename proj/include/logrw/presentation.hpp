// Group presentations and the presentation file format.

#ifndef LOGRW_PRESENTATION_HPP_
#define LOGRW_PRESENTATION_HPP_

#include <string>
#include <string_view>

#include "orderings.hpp"
#include "words.hpp"
#include "ysequence.hpp"

namespace logrw {

  struct Presentation {
    Alphabet   generators;
    RelatorSet relators;

    // Throws std::invalid_argument on an empty or foreign relator or a
    // duplicate label. The word is freely reduced and otherwise kept as given.
    void add_relator(std::string label, GroupWord word);

    // omega-bar of a relator, mu(omega rho).
    MonoidWord relator_monoid_word(std::size_t i) const {
      return mu(relators.at(i).word);
    }

    bool operator==(Presentation const&) const = default;
  };

  // A presentation file: the presentation plus the word ordering it asks for.
  struct PresentationFile {
    Presentation presentation;
    OrderSpec    order;
  };

  // Grammar (line based, '#' starts a comment):
  //   generators: a, b
  //   order: shortlex | syllable          (optional, default shortlex)
  //   letters: a+, a-, b+, b-             (optional, least first)
  //   relators:
  //     r1 = a^4
  //     r2 = a b a b^-1
  // Throws parse_error with line and column.
  PresentationFile parse_presentation(std::string_view text);
  PresentationFile load_presentation(std::string const& path);

  // Inverse of parse_presentation, up to comments and spacing.
  std::string render_presentation(PresentationFile const& file);

}  // namespace logrw

#endif  // LOGRW_PRESENTATION_HPP_
