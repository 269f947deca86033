#include "logrw/rewriting.hpp"

#include <algorithm>
#include <cassert>
#include <memory>
#include <tuple>
#include <unordered_set>

namespace logrw {

  namespace {

    std::string short_render(Alphabet const& alphabet, MonoidWord const& w) {
      auto s = alphabet.render(w);
      if (s.size() > 80) {
        s = s.substr(0, 77) + "...";
      }
      return s;
    }

    // c^{u^-1} for a match found after the prefix u.
    YSequence conjugate_by_prefix_inverse(YSequence const& c, MonoidWord const& u) {
      if (u.empty() || c.empty()) {
        return c;
      }
      return act(c, mu_inverse(u).inverse());
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // LoggedRewriteSystem
  ////////////////////////////////////////////////////////////////////////

  LoggedRewriteSystem::LoggedRewriteSystem(Presentation presentation, OrderSpec order)
      : _presentation(std::move(presentation)), _order(std::move(order)) {
    if (_order.generator_count() != _presentation.generators.size()) {
      throw alphabet_mismatch("ordering and presentation have different generator counts");
    }
    rebuild_index();
  }

  bool LoggedRewriteSystem::log_valid(LoggedRule const& r) const {
    return mu_inverse(r.lhs) == boundary(r.log, relators()) * mu_inverse(r.rhs);
  }

  bool LoggedRewriteSystem::rule_valid(LoggedRule const& r) const {
    return log_valid(r) && _order.compare(r.lhs, r.rhs) == std::strong_ordering::greater;
  }

  std::size_t LoggedRewriteSystem::add_rule(MonoidWord lhs,
                                            YSequence  log,
                                            MonoidWord rhs,
                                            RuleOrigin origin) {
    LoggedRule r{std::move(lhs), std::move(log), std::move(rhs), _next_id, std::move(origin)};
    if (_order.compare(r.lhs, r.rhs) != std::strong_ordering::greater) {
      throw std::invalid_argument("rule " + alphabet().render(r.lhs) + " -> "
                                  + alphabet().render(r.rhs) + " is not oriented");
    }
    if (!log_valid(r)) {
      throw std::invalid_argument("log of rule " + alphabet().render(r.lhs) + " -> "
                                  + alphabet().render(r.rhs) + " does not satisfy l = delta(c) r");
    }
    _rules.push_back(std::move(r));
    _complete = false;
    rebuild_index();
    return _next_id++;
  }

  void LoggedRewriteSystem::remove_rule(std::size_t id) {
    auto it = std::lower_bound(_rules.begin(), _rules.end(), id,
                               [](LoggedRule const& r, std::size_t i) { return r.id < i; });
    if (it == _rules.end() || it->id != id) {
      throw std::out_of_range("no rule with id " + std::to_string(id));
    }
    _rules.erase(it);
    rebuild_index();
  }

  bool LoggedRewriteSystem::contains(std::size_t id) const {
    auto it = std::lower_bound(_rules.begin(), _rules.end(), id,
                               [](LoggedRule const& r, std::size_t i) { return r.id < i; });
    return it != _rules.end() && it->id == id;
  }

  LoggedRule const& LoggedRewriteSystem::rule(std::size_t id) const {
    auto it = std::lower_bound(_rules.begin(), _rules.end(), id,
                               [](LoggedRule const& r, std::size_t i) { return r.id < i; });
    if (it == _rules.end() || it->id != id) {
      throw std::out_of_range("no rule with id " + std::to_string(id));
    }
    return *it;
  }

  LoggedRule& LoggedRewriteSystem::rule_mut(std::size_t id) {
    return const_cast<LoggedRule&>(std::as_const(*this).rule(id));
  }

  void LoggedRewriteSystem::rebuild_index() {
    _by_first_letter.assign(2 * _presentation.generators.size(), {});
    _max_lhs = 0;
    for (std::size_t i = 0; i < _rules.size(); ++i) {
      auto const& lhs = _rules[i].lhs;
      _max_lhs        = std::max(_max_lhs, lhs.size());
      if (!lhs.empty()) {
        _by_first_letter.at(lhs[0].code()).push_back(i);
      }
    }
  }

  std::optional<LoggedRewriteSystem::Match>
  LoggedRewriteSystem::find_match(MonoidWord const& w,
                                  std::size_t       from,
                                  MatchStrategy     strategy,
                                  std::size_t       skipped_id) const {
    auto at = [&](std::size_t pos) -> std::optional<Match> {
      for (auto idx : _by_first_letter[w[pos].code()]) {
        auto const& r = _rules[idx];
        if (r.id != skipped_id && w.matches_at(pos, r.lhs.letters())) {
          return Match{pos, idx};
        }
      }
      return std::nullopt;
    };
    if (strategy == MatchStrategy::leftmost) {
      for (std::size_t pos = from; pos < w.size(); ++pos) {
        if (auto m = at(pos)) {
          return m;
        }
      }
    } else {
      for (std::size_t pos = w.size(); pos-- > 0;) {
        if (auto m = at(pos)) {
          return m;
        }
      }
    }
    return std::nullopt;
  }

  Reduction LoggedRewriteSystem::reduce_impl(MonoidWord const& w,
                                             MatchStrategy     strategy,
                                             std::size_t       step_limit,
                                             std::size_t       skipped_id,
                                             bool              logged) const {
    for (Letter l : w) {
      if (!alphabet().contains(l)) {
        throw alphabet_mismatch("word contains a letter outside the alphabet");
      }
    }
    Reduction   result{w, {}, 0};
    std::size_t from = 0;
    while (auto m = find_match(result.word, from, strategy, skipped_id)) {
      if (result.steps == step_limit) {
        throw budget_exceeded("reduction of " + short_render(alphabet(), w) + " exceeded "
                              + std::to_string(step_limit) + " steps");
      }
      auto const& r      = _rules[m->index];
      auto const& z      = result.word;
      auto        prefix = MonoidWord(z.begin(), z.begin() + m->position);
      auto        next   = prefix + r.rhs
                   + MonoidWord(z.begin() + m->position + r.lhs.size(), z.end());
      if (logged) {
        result.log += conjugate_by_prefix_inverse(r.log, prefix);
      }
#ifndef NDEBUG
      assert(_order.compare(z, next) == std::strong_ordering::greater);
#endif
      result.word = std::move(next);
      ++result.steps;
#ifndef NDEBUG
      if (logged) {
        assert(mu_inverse(w) == boundary(result.log, relators()) * mu_inverse(result.word));
      }
#endif
      from = strategy == MatchStrategy::leftmost && m->position + 1 >= _max_lhs
                 ? m->position + 1 - _max_lhs
                 : 0;
    }
    return result;
  }

  Reduction LoggedRewriteSystem::logged_reduce(MonoidWord const& w,
                                               MatchStrategy     strategy,
                                               std::size_t       step_limit) const {
    return reduce_impl(w, strategy, step_limit, static_cast<std::size_t>(-1), true);
  }

  MonoidWord LoggedRewriteSystem::reduce(MonoidWord const& w, std::size_t step_limit) const {
    return reduce_impl(w, MatchStrategy::leftmost, step_limit, static_cast<std::size_t>(-1), false)
        .word;
  }

  MonoidWord LoggedRewriteSystem::reduce_without(MonoidWord const& w,
                                                 std::size_t       skipped_id,
                                                 std::size_t       step_limit) const {
    return reduce_impl(w, MatchStrategy::leftmost, step_limit, skipped_id, false).word;
  }

  bool LoggedRewriteSystem::is_irreducible(MonoidWord const& w) const {
    return !find_match(w, 0, MatchStrategy::leftmost, static_cast<std::size_t>(-1));
  }

  NormalForm LoggedRewriteSystem::normal_form_fn() const {
    if (!_complete) {
      throw std::logic_error("normal_form_fn: the rewrite system is not complete");
    }
    auto frozen = std::make_shared<LoggedRewriteSystem const>(*this);
    return [frozen](MonoidWord const& w) { return frozen->reduce(w); };
  }

  LoggedRewriteSystem initial_logged_system(Presentation const& p, OrderSpec const& order) {
    LoggedRewriteSystem sys(p, order);
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      sys.add_rule(p.relator_monoid_word(i), YSequence{{i, Sign::plus, {}}}, {});
    }
    for (std::uint32_t code = 0; code < p.generators.letter_count(); ++code) {
      auto x = Letter::from_code(code);
      sys.add_rule(MonoidWord{x, x.inverse()}, {}, {});
    }
    return sys;
  }

  ////////////////////////////////////////////////////////////////////////
  // Overlaps
  ////////////////////////////////////////////////////////////////////////

  std::vector<OverlapDescriptor> find_overlaps(LoggedRewriteSystem const&      sys,
                                               std::vector<std::size_t> const& frontier) {
    std::unordered_set<std::size_t> in_frontier(frontier.begin(), frontier.end());
    std::vector<OverlapDescriptor>  out;
    for (auto const& a : sys.rules()) {
      for (auto const& b : sys.rules()) {
        if (!in_frontier.contains(a.id) && !in_frontier.contains(b.id)) {
          continue;
        }
        auto const& la = a.lhs;  // l'
        auto const& lb = b.lhs;  // l
        if (a.id != b.id && lb.size() <= la.size()) {
          for (std::size_t p = 0; p + lb.size() <= la.size(); ++p) {
            if (la.matches_at(p, lb.letters())) {
              out.push_back({a.id, b.id, OverlapKind::type1, la.subword(0, p),
                             la.subword(p + lb.size(), la.size() - p - lb.size()), {}, la});
            }
          }
        }
        auto shorter = std::min(la.size(), lb.size());
        for (std::size_t k = 1; k < shorter; ++k) {
          if (la.matches_at(la.size() - k, lb.letters().subspan(0, k))) {
            auto u = la.subword(0, la.size() - k);
            out.push_back({a.id, b.id, OverlapKind::type2, u, {},
                           lb.subword(k, lb.size() - k), u + lb});
          }
        }
      }
    }
    auto key = [&](OverlapDescriptor const& o) {
      auto len = std::max(sys.rule(o.rule_a).lhs.size(), sys.rule(o.rule_b).lhs.size());
      return std::make_tuple(len, o.rule_a, o.rule_b, o.u.size(), o.kind);
    };
    std::stable_sort(out.begin(), out.end(),
                     [&](auto const& x, auto const& y) { return key(x) < key(y); });
    return out;
  }

  std::vector<OverlapDescriptor> find_all_overlaps(LoggedRewriteSystem const& sys) {
    std::vector<std::size_t> ids;
    for (auto const& r : sys.rules()) {
      ids.push_back(r.id);
    }
    return find_overlaps(sys, ids);
  }

  OverlapOutcome process_overlap(OverlapDescriptor const&   o,
                                 LoggedRewriteSystem const& sys,
                                 std::size_t                step_limit) {
    auto const& ra = sys.rule(o.rule_a);  // (l', c', r')
    auto const& rb = sys.rule(o.rule_b);  // (l, c, r)
    auto        d  = sys.logged_reduce(o.u + rb.rhs + o.v, MatchStrategy::leftmost, step_limit);
    auto        d_prime = sys.logged_reduce(ra.rhs + o.v_prime, MatchStrategy::leftmost, step_limit);
    auto log = invert(d_prime.log) + invert(ra.log) + conjugate_by_prefix_inverse(rb.log, o.u)
               + d.log;
    assert(boundary(log, sys.relators())
           == mu_inverse(d_prime.word) * mu_inverse(d.word).inverse());
    if (d.word == d_prime.word) {
      return Resolved{std::move(log)};
    }
    return NewPair{std::move(d_prime.word), std::move(log), std::move(d.word)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Completion
  ////////////////////////////////////////////////////////////////////////

  namespace {

    struct PendingRule {
      MonoidWord lhs;
      YSequence  log;
      MonoidWord rhs;
      RuleOrigin origin;
    };

    class Completion {
     public:
      Completion(LoggedRewriteSystem const& init, CompletionOptions const& options)
          : _options(options) {
        _report.final_system = init;
        _report.final_system.set_complete(false);
      }

      CompletionReport run() {
        auto&                    sys = _report.final_system;
        std::vector<std::size_t> frontier;
        for (auto const& r : sys.rules()) {
          frontier.push_back(r.id);
        }
        bool certifying = false;
        try {
          while (true) {
            if (_report.passes == _options.limits.max_passes) {
              return fail("pass limit of " + std::to_string(_options.limits.max_passes)
                          + " reached");
            }
            ++_report.passes;
            auto overlaps = certifying ? find_all_overlaps(sys) : find_overlaps(sys, frontier);
            std::vector<PendingRule>       crit;
            std::vector<HarvestedIdentity> resolved;
            for (auto const& o : overlaps) {
              auto outcome = process_overlap(o, sys, _options.limits.max_steps);
              if (auto* r = std::get_if<Resolved>(&outcome)) {
                resolved.push_back({std::move(r->identity), o.word, o.rule_a, o.rule_b,
                                    _report.passes});
              } else {
                auto& np = std::get<NewPair>(outcome);
                if (std::max(np.z.size(), np.z_prime.size()) > _options.limits.max_word_len) {
                  return fail("critical pair longer than "
                              + std::to_string(_options.limits.max_word_len) + " letters");
                }
                crit.push_back(orient(std::move(np), o));
              }
            }
            if (certifying && crit.empty()) {
              _report.final_identities = std::move(resolved);
              sys.set_complete(true);
              return std::move(_report);
            }
            if (!certifying) {
              for (auto& h : resolved) {
                if (!simplify(h.identity, sys.relators(), SimplifyOptions::cancel_only())
                         .empty()) {
                  _report.identities.push_back(std::move(h));
                }
              }
            }
            if (crit.empty()) {
              certifying = true;
              continue;
            }
            certifying     = false;
            auto new_ids   = add_rules(std::move(crit));
            frontier       = interreduce(new_ids);
          }
        } catch (budget_exceeded const& e) {
          return fail(e.what());
        }
      }

     private:
      CompletionReport fail(std::string why) {
        _report.failure = std::move(why);
        _report.final_system.set_complete(false);
        return std::move(_report);
      }

      PendingRule orient(NewPair np, OverlapDescriptor const& o) {
        auto const& sys = _report.final_system;
        RuleOrigin  origin{RuleOriginKind::critical_pair, o.rule_a, o.rule_b, o.word,
                          _report.passes};
        if (sys.order().compare(np.z_prime, np.z) == std::strong_ordering::greater) {
          return {std::move(np.z_prime), std::move(np.log), std::move(np.z), std::move(origin)};
        }
        return {std::move(np.z), invert(np.log), std::move(np.z_prime), std::move(origin)};
      }

      // K3
      std::vector<std::size_t> add_rules(std::vector<PendingRule> crit) {
        auto&                    sys = _report.final_system;
        std::vector<std::size_t> ids;
        for (auto& p : crit) {
          if (_options.simplify_logs) {
            p.log = simplify(p.log, sys.relators(), SimplifyOptions::logs());
          }
          ids.push_back(sys.add_rule(std::move(p.lhs), std::move(p.log), std::move(p.rhs),
                                     std::move(p.origin)));
          ++_report.rules_formed;
          _report.recent_rules.push_back(ids.back());
          if (_report.recent_rules.size() > 5) {
            _report.recent_rules.erase(_report.recent_rules.begin());
          }
          if (sys.size() > _options.limits.max_rules) {
            throw budget_exceeded("rule limit of " + std::to_string(_options.limits.max_rules)
                                  + " exceeded");
          }
        }
        return ids;
      }

      // K4, extended: new rules first (in creation order) and then the older
      // rules are dropped when both sides reduce to a common word with the
      // remaining rules; surviving right hand sides are then normalised.
      // Returns the ids of the rules that are new or changed.
      std::vector<std::size_t> interreduce(std::vector<std::size_t> const& new_ids) {
        auto&                    sys = _report.final_system;
        auto const               steps = _options.limits.max_steps;
        std::vector<std::size_t> order(new_ids);
        for (auto const& r : sys.rules()) {
          if (std::find(new_ids.begin(), new_ids.end(), r.id) == new_ids.end()) {
            order.push_back(r.id);
          }
        }
        for (auto id : order) {
          auto const& r = sys.rule(id);
          if (sys.reduce_without(r.lhs, id, steps) == sys.reduce_without(r.rhs, id, steps)) {
            sys.remove_rule(id);
            ++_report.rules_removed;
          }
        }
        std::vector<std::size_t> changed;
        for (auto id : new_ids) {
          if (sys.contains(id)) {
            changed.push_back(id);
          }
        }
        std::vector<std::size_t> ids;
        for (auto const& r : sys.rules()) {
          ids.push_back(r.id);
        }
        for (auto id : ids) {
          auto const& r = sys.rule(id);
          if (sys.is_irreducible(r.rhs)) {
            continue;
          }
          auto red = sys.logged_reduce(r.rhs, MatchStrategy::leftmost, steps);
          auto log = r.log + red.log;
          if (_options.simplify_logs) {
            log = simplify(log, sys.relators(), SimplifyOptions::logs());
          }
          auto& m = sys.rule_mut(id);
          m.rhs   = std::move(red.word);
          m.log   = std::move(log);
          assert(sys.rule_valid(m));
          if (std::find(changed.begin(), changed.end(), id) == changed.end()) {
            changed.push_back(id);
          }
        }
        return changed;
      }

      CompletionOptions const& _options;
      CompletionReport         _report;
    };

  }  // namespace

  CompletionReport logged_knuth_bendix(LoggedRewriteSystem const& init,
                                       CompletionOptions const&   options) {
    return Completion(init, options).run();
  }

}  // namespace logrw
