#include "logrw/identities.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <functional>
#include <tuple>

namespace logrw {

  std::size_t CayleyGraph::vertex(MonoidWord const& w) const {
    auto it = index.find(w);
    if (it == index.end()) {
      throw std::out_of_range("word is not a vertex of the Cayley graph");
    }
    return it->second;
  }

  namespace {

    MonoidWord with_letter(MonoidWord w, Letter l) {
      w += MonoidWord{l};
      return w;
    }

    // Walks omega rho from the normal form g and multiplies the k1 values of
    // the edges met, the backwards ones inverted. `k1` and `step` supply the
    // edge values and normal form of g x+.
    YSequence cycle_k1(MonoidWord const&                                              g,
                       GroupWord const&                                               word,
                       std::function<YSequence(MonoidWord const&, std::uint32_t)> const& k1,
                       std::function<MonoidWord(MonoidWord const&)> const&            nf) {
      YSequence  result;
      MonoidWord cur = g;
      for (Letter l : word) {
        auto x = static_cast<std::uint32_t>(l.generator());
        if (!l.negative()) {
          result += k1(cur, x);
          cur = nf(with_letter(cur, l));
        } else {
          auto prev = nf(with_letter(cur, l));
          result += invert(k1(prev, x));
          cur = std::move(prev);
        }
      }
      assert(cur == g);
      return result;
    }

    YSequence identity_from_cycle(std::size_t       relator,
                                  MonoidWord const& g,
                                  YSequence const&  cycle) {
      return YSequence{{relator, Sign::minus, {}}} + act(cycle, mu_inverse(g));
    }

  }  // namespace

  CayleyGraph build_cayley_graph(LoggedRewriteSystem const& sys, std::size_t vertex_cap) {
    if (!sys.complete()) {
      throw std::logic_error("build_cayley_graph: the rewrite system is not complete");
    }
    CayleyGraph graph;
    auto const  n         = sys.alphabet().size();
    graph.generator_count = n;
    graph.vertices.push_back({});
    graph.index.emplace(MonoidWord{}, 0);
    // Targets first; k1 once all vertices are known.
    for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
      for (std::uint32_t x = 0; x < n; ++x) {
        auto w            = sys.reduce(with_letter(graph.vertices[v], Letter(x, false)));
        auto [it, is_new] = graph.index.emplace(w, graph.vertices.size());
        if (is_new) {
          if (graph.vertices.size() == vertex_cap) {
            throw infinite_group("Cayley graph has more than " + std::to_string(vertex_cap)
                                 + " vertices; the group may be infinite (use identity_for)");
          }
          graph.vertices.push_back(std::move(w));
        }
        graph.edges.push_back({v, x, it->second, {}});
      }
    }
    for (auto& e : graph.edges) {
      e.k1 = compute_k1(sys, graph.vertices[e.source], e.generator);
    }
    return graph;
  }

  YSequence compute_k1(LoggedRewriteSystem const& sys, MonoidWord const& g, std::uint32_t x) {
    auto gx = with_letter(g, Letter(x, false));
    if (sys.is_irreducible(gx)) {
      return {};
    }
    auto target = sys.reduce(gx);
    auto w      = mu(mu_inverse(gx) * mu_inverse(target).inverse());
    auto red    = sys.logged_reduce(w);
    assert(red.word.empty());
    auto k1 = simplify(red.log, sys.relators(), SimplifyOptions::logs());
    assert(boundary(k1, sys.relators()) == mu_inverse(gx) * mu_inverse(target).inverse());
    return k1;
  }

  std::vector<CycleStep> relator_cycle_edges(std::size_t                g,
                                             std::size_t                relator,
                                             CayleyGraph const&         graph,
                                             LoggedRewriteSystem const& sys) {
    std::vector<CycleStep> steps;
    auto                   cur = g;
    for (Letter l : sys.relators().at(relator).word) {
      auto x = static_cast<std::uint32_t>(l.generator());
      if (!l.negative()) {
        steps.push_back({cur, x, true});
        cur = graph.edge(cur, x).target;
      } else {
        auto prev = graph.vertex(sys.reduce(with_letter(graph.vertices[cur], l)));
        steps.push_back({prev, x, false});
        cur = prev;
      }
    }
    assert(cur == g);
    return steps;
  }

  YSequence separation_identity(std::size_t                g,
                                std::size_t                relator,
                                CayleyGraph const&         graph,
                                LoggedRewriteSystem const& sys) {
    YSequence cycle;
    for (auto const& s : relator_cycle_edges(g, relator, graph, sys)) {
      auto const& k1 = graph.edge(s.source, s.generator).k1;
      cycle += s.forward ? k1 : invert(k1);
    }
    auto result = identity_from_cycle(relator, graph.vertices[g], cycle);
    assert(boundary(result, sys.relators()).empty());
    return result;
  }

  YSequence identity_for(LoggedRewriteSystem const& sys, GroupWord const& g, std::size_t relator) {
    auto nf = [&sys](MonoidWord const& w) { return sys.reduce(w); };
    auto k1 = [&sys](MonoidWord const& v, std::uint32_t x) { return compute_k1(sys, v, x); };
    auto sg = nf(mu(g));
    auto result
        = identity_from_cycle(relator, sg, cycle_k1(sg, sys.relators().at(relator).word, k1, nf));
    assert(boundary(result, sys.relators()).empty());
    return result;
  }

  std::string to_string(IdentityStatus s) {
    switch (s) {
      case IdentityStatus::kept:
        return "kept";
      case IdentityStatus::trivial:
        return "trivial";
      case IdentityStatus::duplicate:
        return "duplicate";
      case IdentityStatus::inverse_duplicate:
        return "inverse-dup";
      case IdentityStatus::conjugate_duplicate:
        return "conjugate-dup";
      case IdentityStatus::primary:
        return "primary";
    }
    return "?";
  }

  namespace {

    std::vector<std::string> relator_labels(YSequence const& s, RelatorSet const& rels) {
      std::vector<std::string> out;
      for (auto const& t : s) {
        out.push_back(rels[t.relator].label);
      }
      return out;
    }

    void sort_records(std::vector<IdentityRecord>& records, RelatorSet const& rels) {
      std::stable_sort(records.begin(), records.end(), [&](auto const& x, auto const& y) {
        return std::make_tuple(x.sequence.size(), relator_labels(x.sequence, rels))
               < std::make_tuple(y.sequence.size(), relator_labels(y.sequence, rels));
      });
    }

  }  // namespace

  std::vector<IdentityRecord> simplify_identity_list(std::vector<IdentityRecord> records,
                                                     CayleyGraph const&          graph,
                                                     LoggedRewriteSystem const&  sys) {
    auto const& rels = sys.relators();
    auto        nf   = sys.normal_form_fn();
    auto        tidy = [&](YSequence const& s) {
      return simplify(s, rels, SimplifyOptions::cancel_only());
    };
    for (auto& r : records) {
      r.sequence = tidy(r.sequence);
      r.status   = IdentityStatus::kept;
    }
    sort_records(records, rels);

    std::vector<std::size_t> kept;
    auto                     find_kept = [&](YSequence const& s) -> std::size_t {
      for (auto k : kept) {
        if (records[k].sequence == s) {
          return k;
        }
      }
      return records.size();
    };
    for (std::size_t i = 0; i < records.size(); ++i) {
      auto& r = records[i];
      if (r.sequence.empty()) {
        r.status = IdentityStatus::trivial;
        continue;
      }
      if (auto k = find_kept(r.sequence); k != records.size()) {
        r.status  = IdentityStatus::duplicate;
        r.matched = k;
        continue;
      }
      if (auto k = find_kept(tidy(invert(r.sequence))); k != records.size()) {
        r.status  = IdentityStatus::inverse_duplicate;
        r.matched = k;
        continue;
      }
      // Cyclic rotations, acted on by every element, and their inverses.
      bool conj = false;
      auto const& terms = r.sequence.terms();
      for (std::size_t shift = 0; shift < terms.size() && !conj; ++shift) {
        std::vector<YTerm> rotated(terms.begin() + shift, terms.end());
        rotated.insert(rotated.end(), terms.begin(), terms.begin() + shift);
        YSequence rot(std::move(rotated));
        for (auto const& v : graph.vertices) {
          if (shift == 0 && v.empty()) {
            continue;
          }
          auto s = tidy(act(rot, mu_inverse(v)));
          auto k = find_kept(s);
          if (k == records.size()) {
            k = find_kept(tidy(invert(s)));
          }
          if (k != records.size()) {
            r.status  = IdentityStatus::conjugate_duplicate;
            r.matched = k;
            conj      = true;
            break;
          }
        }
      }
      if (conj) {
        continue;
      }
      if (is_primary_identity(r.sequence, rels, nf)) {
        r.status = IdentityStatus::primary;
        continue;
      }
      kept.push_back(i);
    }

    // A proper block of terms that is itself a conjugate of another kept
    // identity is cut out.
    auto conjugate_of_other = [&](YSequence const& sub, std::size_t self) {
      for (auto const& v : graph.vertices) {
        auto s  = tidy(act(sub, mu_inverse(v)));
        auto si = tidy(invert(s));
        for (auto k : kept) {
          if (k != self && (records[k].sequence == s || records[k].sequence == si)) {
            return true;
          }
        }
      }
      return false;
    };
    bool cut = false;
    for (auto k : kept) {
      auto& seq = records[k].sequence;
      for (std::size_t len = 2; len < seq.size(); ++len) {
        for (std::size_t start = 0; start + len <= seq.size(); ++start) {
          YSequence sub(std::vector<YTerm>(seq.begin() + start, seq.begin() + start + len));
          if (!boundary(sub, rels).empty() || !conjugate_of_other(sub, k)) {
            continue;
          }
          std::vector<YTerm> rest(seq.begin(), seq.begin() + start);
          rest.insert(rest.end(), seq.begin() + start + len, seq.end());
          seq = tidy(YSequence(std::move(rest)));
          cut = true;
          len = 1;
          break;
        }
      }
    }
    if (cut) {
      std::stable_sort(kept.begin(), kept.end(), [&](auto x, auto y) {
        return std::make_tuple(records[x].sequence.size(), relator_labels(records[x].sequence, rels))
               < std::make_tuple(records[y].sequence.size(),
                                 relator_labels(records[y].sequence, rels));
      });
    }

    std::vector<IdentityRecord> out;
    std::vector<std::size_t>    where(records.size());
    for (auto k : kept) {
      where[k] = out.size();
      out.push_back(records[k]);
    }
    for (std::size_t i = 0; i < records.size(); ++i) {
      if (records[i].status != IdentityStatus::kept) {
        where[i] = out.size();
        out.push_back(records[i]);
      }
    }
    for (auto& r : out) {
      if (r.matched != static_cast<std::size_t>(-1)) {
        r.matched = where[r.matched];
      }
    }
    return out;
  }

  std::vector<IdentityRecord> IdentitiesResult::kept() const {
    std::vector<IdentityRecord> out;
    for (auto const& r : records) {
      if (r.status == IdentityStatus::kept) {
        out.push_back(r);
      }
    }
    return out;
  }

  IdentitiesResult identities_pipeline(Presentation const&      p,
                                       OrderSpec const&         order,
                                       CompletionOptions const& options,
                                       std::size_t              vertex_cap) {
    IdentitiesResult result;
    result.report = logged_knuth_bendix(initial_logged_system(p, order), options);
    if (!result.report.failure.empty()) {
      throw budget_exceeded("completion failed: " + result.report.failure);
    }
    auto const& sys = result.report.final_system;
    result.graph    = build_cayley_graph(sys, vertex_cap);
    for (std::size_t g = 0; g < result.graph.size(); ++g) {
      for (std::size_t rho = 0; rho < sys.relators().size(); ++rho) {
        result.raw.push_back({g, rho, separation_identity(g, rho, result.graph, sys)});
      }
    }
    result.records = simplify_identity_list(result.raw, result.graph, sys);
    return result;
  }

}  // namespace logrw
