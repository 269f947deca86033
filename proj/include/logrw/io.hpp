// JSON forms of logged systems, reports and identity lists.
//
// Words are strings in the text syntax ("a b A" for monoid words, "a^2 b^-1"
// for group words), so every field round-trips through the text parsers.
//
//   term:     {"relator": "r1", "sign": "+", "conj": "a^-1 b"}
//   rule:     {"id": 5, "lhs": "b a", "log": [term...], "rhs": "a B"}
//   system:   {"generators": [...], "relators": [{"label", "word"}],
//              "order": {"kind", "letters": ["a+", ...]}, "complete", "rules"}
//   identity: {"cycle": {"g": "a b", "rho": "r3"}, "terms": [term...],
//              "status": "kept"}

#ifndef LOGRW_IO_HPP_
#define LOGRW_IO_HPP_

#include <string>
#include <vector>

#include "json.hpp"

#include "identities.hpp"
#include "rewriting.hpp"

namespace logrw {

  nlohmann::json to_json(YSequence const& s, Alphabet const& alphabet, RelatorSet const& rels);
  YSequence      ysequence_from_json(nlohmann::json const& j,
                                     Alphabet const&       alphabet,
                                     RelatorSet const&     rels);

  nlohmann::json to_json(LoggedRule const& r, LoggedRewriteSystem const& sys);
  nlohmann::json to_json(LoggedRewriteSystem const& sys);
  // Rules are added in the given order (ids renumbered from 0) and checked
  // as by add_rule; "complete" is taken on trust.
  LoggedRewriteSystem system_from_json(nlohmann::json const& j);

  nlohmann::json to_json(CompletionReport const& report);
  nlohmann::json to_json(IdentityRecord const&      r,
                         CayleyGraph const&         graph,
                         LoggedRewriteSystem const& sys);
  nlohmann::json k1_to_json(CayleyGraph const& graph, LoggedRewriteSystem const& sys);

}  // namespace logrw

#endif  // LOGRW_IO_HPP_
