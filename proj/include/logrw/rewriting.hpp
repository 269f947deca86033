// Logged rewrite systems: rules (l, c, r) with l = delta(c) r in F(X),
// logged reduction, overlaps and logged Knuth-Bendix completion.

#ifndef LOGRW_REWRITING_HPP_
#define LOGRW_REWRITING_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "orderings.hpp"
#include "presentation.hpp"
#include "words.hpp"
#include "ysequence.hpp"

namespace logrw {

  // Raised when a reduction or completion runs past one of its limits.
  class budget_exceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  enum class RuleOriginKind { initial, critical_pair };

  struct RuleOrigin {
    RuleOriginKind kind = RuleOriginKind::initial;
    // For critical pairs: the overlapping rules and the overlap word.
    std::size_t rule_a = 0;
    std::size_t rule_b = 0;
    MonoidWord  overlap;
    std::size_t pass = 0;
  };

  struct LoggedRule {
    MonoidWord  lhs;
    YSequence   log;
    MonoidWord  rhs;
    std::size_t id = 0;
    RuleOrigin  origin;
  };

  enum class MatchStrategy { leftmost, rightmost };

  struct Reduction {
    MonoidWord  word;
    YSequence   log;
    std::size_t steps = 0;
  };

  class LoggedRewriteSystem {
   public:
    static constexpr std::size_t default_step_limit = 1'000'000;

    LoggedRewriteSystem() = default;
    LoggedRewriteSystem(Presentation presentation, OrderSpec order);

    Presentation const& presentation() const noexcept {
      return _presentation;
    }
    Alphabet const& alphabet() const noexcept {
      return _presentation.generators;
    }
    RelatorSet const& relators() const noexcept {
      return _presentation.relators;
    }
    OrderSpec const& order() const noexcept {
      return _order;
    }
    // Sorted by id.
    std::vector<LoggedRule> const& rules() const noexcept {
      return _rules;
    }
    std::size_t size() const noexcept {
      return _rules.size();
    }
    bool complete() const noexcept {
      return _complete;
    }
    void set_complete(bool value) noexcept {
      _complete = value;
    }

    // Adds a rule with the next free id, which is returned. Throws
    // std::invalid_argument when the rule is not oriented or its log does not
    // satisfy l = delta(c) r.
    std::size_t add_rule(MonoidWord lhs, YSequence log, MonoidWord rhs, RuleOrigin origin = {});
    void        remove_rule(std::size_t id);
    LoggedRule const& rule(std::size_t id) const;
    LoggedRule&       rule_mut(std::size_t id);
    bool              contains(std::size_t id) const;
    std::size_t       next_id() const noexcept {
      return _next_id;
    }

    // l = delta(c) r in F(X).
    bool log_valid(LoggedRule const& r) const;
    // log_valid and l > r.
    bool rule_valid(LoggedRule const& r) const;

    // Algorithm R1-R5: rewrites with the leftmost match (lowest id on ties)
    // and records c^{u^-1} for a match at prefix u. Throws budget_exceeded
    // after `step_limit` rewrites.
    Reduction logged_reduce(MonoidWord const& w,
                            MatchStrategy     strategy   = MatchStrategy::leftmost,
                            std::size_t       step_limit = default_step_limit) const;
    MonoidWord reduce(MonoidWord const& w, std::size_t step_limit = default_step_limit) const;
    // Reduction ignoring one rule, used when testing a rule for redundancy.
    MonoidWord reduce_without(MonoidWord const& w,
                              std::size_t       skipped_id,
                              std::size_t       step_limit = default_step_limit) const;
    bool is_irreducible(MonoidWord const& w) const;

    // w -> I(w). Throws std::logic_error unless the system is complete.
    NormalForm normal_form_fn() const;

   private:
    struct Match {
      std::size_t position;
      std::size_t index;  // into _rules
    };
    std::optional<Match> find_match(MonoidWord const& w,
                                    std::size_t       from,
                                    MatchStrategy     strategy,
                                    std::size_t       skipped_id) const;
    Reduction reduce_impl(MonoidWord const& w,
                          MatchStrategy     strategy,
                          std::size_t       step_limit,
                          std::size_t       skipped_id,
                          bool              logged) const;
    void rebuild_index();

    Presentation                          _presentation;
    OrderSpec                             _order;
    std::vector<LoggedRule>               _rules;
    std::vector<std::vector<std::size_t>> _by_first_letter;
    std::size_t                           _max_lhs  = 0;
    std::size_t                           _next_id  = 0;
    bool                                  _complete = false;
  };

  // Relator rules (omega-bar rho, (rho^+), <id>) in relator order, then
  // (x^+ x^-, <idY>, <id>) for every signed letter x, in letter-code order.
  LoggedRewriteSystem initial_logged_system(Presentation const& p, OrderSpec const& order);

  enum class OverlapKind { type1, type2 };

  // u l v = l' v', where l' is the left hand side of rule_a and l that of
  // rule_b. Type 1: l is a subword of l' (v' empty). Type 2: a proper suffix
  // of l' is a proper prefix of l (v empty).
  struct OverlapDescriptor {
    std::size_t rule_a = 0;
    std::size_t rule_b = 0;
    OverlapKind kind   = OverlapKind::type1;
    MonoidWord  u;
    MonoidWord  v;
    MonoidWord  v_prime;
    MonoidWord  word;

    bool operator==(OverlapDescriptor const&) const = default;
  };

  // Every overlap involving at least one rule in `frontier` (all rules when
  // `frontier` is empty and `all` is true), including self-overlaps, sorted
  // by (longest lhs, rule_a, rule_b, |u|).
  std::vector<OverlapDescriptor> find_overlaps(LoggedRewriteSystem const&      sys,
                                               std::vector<std::size_t> const& frontier);
  std::vector<OverlapDescriptor> find_all_overlaps(LoggedRewriteSystem const& sys);

  struct Resolved {
    YSequence identity;
  };
  // A critical pair z' = delta(log) z that did not resolve.
  struct NewPair {
    MonoidWord z_prime;
    YSequence  log;
    MonoidWord z;
  };
  using OverlapOutcome = std::variant<Resolved, NewPair>;

  OverlapOutcome process_overlap(OverlapDescriptor const&   o,
                                 LoggedRewriteSystem const& sys,
                                 std::size_t step_limit = LoggedRewriteSystem::default_step_limit);

  struct CompletionLimits {
    std::size_t max_rules    = 10'000;
    std::size_t max_passes   = 100;
    std::size_t max_word_len = 10'000;
    std::size_t max_steps    = LoggedRewriteSystem::default_step_limit;
  };

  struct CompletionOptions {
    CompletionLimits limits;
    // Simplify logs of new rules (S1, S2, cancellation).
    bool simplify_logs = true;
  };

  struct HarvestedIdentity {
    YSequence   identity;
    MonoidWord  overlap_word;
    std::size_t rule_a = 0;
    std::size_t rule_b = 0;
    std::size_t pass   = 0;
  };

  struct CompletionReport {
    LoggedRewriteSystem final_system;
    // Nonempty identities from every resolved overlap, each overlap counted
    // once, in discovery order.
    std::vector<HarvestedIdentity> identities;
    // Identities from the overlaps of the final system (the certification
    // pass); empty sequences included.
    std::vector<HarvestedIdentity> final_identities;
    std::size_t                    rules_formed  = 0;
    std::size_t                    rules_removed = 0;
    std::size_t                    passes        = 0;
    // Empty on success.
    std::string failure;
    // Ids of the most recently added rules, newest last.
    std::vector<std::size_t> recent_rules;
  };

  // Algorithm K1-K6. Never throws on a limit: the report comes back with
  // final_system.complete() == false and `failure` set.
  CompletionReport logged_knuth_bendix(LoggedRewriteSystem const& init,
                                       CompletionOptions const&   options = {});

}  // namespace logrw

#endif  // LOGRW_REWRITING_HPP_
