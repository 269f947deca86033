// Cayley graph of a finite group given by a complete logged system, the
// morphism k1 on its edges, relator-cycle identities and the pruning of the
// resulting list.

#ifndef LOGRW_IDENTITIES_HPP_
#define LOGRW_IDENTITIES_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "rewriting.hpp"
#include "words.hpp"
#include "ysequence.hpp"

namespace logrw {

  // The Cayley graph has more vertices than allowed; the group is probably
  // infinite. Use identity_for on chosen elements instead.
  class infinite_group : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  struct Edge {
    std::size_t   source    = 0;
    std::uint32_t generator = 0;
    std::size_t   target    = 0;
    YSequence     k1;
  };

  struct CayleyGraph {
    // Irreducible words, identity first, in breadth-first order.
    std::vector<MonoidWord> vertices;
    // Edge [v, x] is edges[v * generator_count + x].
    std::vector<Edge> edges;
    std::size_t       generator_count = 0;

    std::size_t size() const noexcept {
      return vertices.size();
    }
    // Throws std::out_of_range for a word that is not a vertex.
    std::size_t vertex(MonoidWord const& w) const;
    Edge const& edge(std::size_t v, std::uint32_t x) const {
      return edges.at(v * generator_count + x);
    }

    std::unordered_map<MonoidWord, std::size_t, MonoidWordHash> index;
  };

  constexpr std::size_t default_vertex_cap = 10'000;

  // Throws std::logic_error if `sys` is not complete and infinite_group once
  // more than `vertex_cap` vertices turn up.
  CayleyGraph build_cayley_graph(LoggedRewriteSystem const& sys,
                                 std::size_t vertex_cap = default_vertex_cap);

  // k1[g, x] for an irreducible word g: empty when g x+ is irreducible,
  // otherwise the simplified log of mu((sigma g) x (sigma gx)^-1).
  YSequence compute_k1(LoggedRewriteSystem const& sys, MonoidWord const& g, std::uint32_t x);

  struct CycleStep {
    std::size_t   source    = 0;  // of the graph edge, not of the step
    std::uint32_t generator = 0;
    bool          forward   = true;
  };

  // The walk of omega rho from vertex g; a letter x^-1 uses edge
  // [N(current x^-1), x] backwards.
  std::vector<CycleStep> relator_cycle_edges(std::size_t        g,
                                             std::size_t        relator,
                                             CayleyGraph const& graph,
                                             LoggedRewriteSystem const& sys);

  // iota[g, rho] = (rho^-) (k1[g, rho])^g, unsimplified.
  YSequence separation_identity(std::size_t                g,
                                std::size_t                relator,
                                CayleyGraph const&         graph,
                                LoggedRewriteSystem const& sys);

  // The same identity for an arbitrary group element, computing k1 along the
  // way; works for infinite groups. `g` need not be in normal form.
  YSequence identity_for(LoggedRewriteSystem const& sys, GroupWord const& g, std::size_t relator);

  enum class IdentityStatus {
    kept,
    trivial,
    duplicate,
    inverse_duplicate,
    conjugate_duplicate,
    primary
  };

  std::string to_string(IdentityStatus s);

  struct IdentityRecord {
    std::size_t    vertex  = 0;
    std::size_t    relator = 0;
    YSequence      sequence;
    IdentityStatus status = IdentityStatus::kept;
    // For duplicates: position (in the returned list) of the record matched.
    std::size_t    matched = static_cast<std::size_t>(-1);
  };

  // Sorts by (length, relator labels) and marks every record. Kept records
  // come first, in sorted order, followed by the discarded ones.
  std::vector<IdentityRecord> simplify_identity_list(std::vector<IdentityRecord> records,
                                                     CayleyGraph const&          graph,
                                                     LoggedRewriteSystem const&  sys);

  struct IdentitiesResult {
    CompletionReport            report;
    CayleyGraph                 graph;
    // One per (vertex, relator), vertex-major.
    std::vector<IdentityRecord> raw;
    // Output of simplify_identity_list.
    std::vector<IdentityRecord> records;

    std::vector<IdentityRecord> kept() const;
  };

  // Throws budget_exceeded when completion fails and infinite_group when the
  // graph is too large.
  IdentitiesResult identities_pipeline(Presentation const&      p,
                                       OrderSpec const&         order,
                                       CompletionOptions const& options    = {},
                                       std::size_t              vertex_cap = default_vertex_cap);

}  // namespace logrw

#endif  // LOGRW_IDENTITIES_HPP_
