#include "logrw/ysequence.hpp"

#include <array>
#include <algorithm>
#include <cassert>
#include <cctype>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace logrw {

  Relator Relator::make(std::string label, GroupWord word) {
    if (word.empty()) {
      throw std::invalid_argument("relator \"" + label + "\" is the empty word");
    }
    auto [root, m] = root_of(word);
    return Relator{std::move(label), std::move(word), std::move(root), m};
  }

  YSequence& YSequence::operator+=(YSequence const& other) {
    _terms.insert(_terms.end(), other._terms.begin(), other._terms.end());
    return *this;
  }

  std::size_t YSequence::conjugator_length() const noexcept {
    return std::accumulate(_terms.begin(), _terms.end(), std::size_t(0),
                           [](std::size_t n, YTerm const& t) { return n + t.conjugator.size(); });
  }

  GroupWord boundary(YTerm const& t, RelatorSet const& relators) {
    auto const& w = relators.at(t.relator).word;
    return t.conjugator.inverse() * (t.sign == Sign::plus ? w : w.inverse()) * t.conjugator;
  }

  GroupWord boundary(YSequence const& s, RelatorSet const& relators) {
    GroupWord result;
    for (auto const& t : s) {
      result *= boundary(t, relators);
    }
    return result;
  }

  MonoidWord boundary_monoid(YSequence const& s, RelatorSet const& relators) {
    return mu(boundary(s, relators));
  }

  YSequence act(YSequence const& s, GroupWord const& v) {
    std::vector<YTerm> terms(s.begin(), s.end());
    for (auto& t : terms) {
      t.conjugator *= v;
    }
    return YSequence(std::move(terms));
  }

  YSequence invert(YSequence const& s) {
    std::vector<YTerm> terms(s.terms().rbegin(), s.terms().rend());
    for (auto& t : terms) {
      t.sign = -t.sign;
    }
    return YSequence(std::move(terms));
  }

  YSequence root_identity(std::size_t relator, RelatorSet const& relators) {
    auto const& r = relators.at(relator);
    if (r.root_power == 1) {
      return {};
    }
    return YSequence{{relator, Sign::plus, r.root}, {relator, Sign::minus, {}}};
  }

  ////////////////////////////////////////////////////////////////////////
  // simplify
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Shortest element of the coset <v> u; ties go to the smaller word.
    // Word length along k -> v^k u is convex for cyclically reduced v, so
    // walking downhill finds the minimum.
    GroupWord strip_powers(GroupWord u, GroupWord const& v) {
      if (v.empty()) {
        return u;
      }
      auto vinv = v.inverse();
      auto better = [](GroupWord const& a, GroupWord const& b) {
        return a.size() < b.size() || (a.size() == b.size() && a < b);
      };
      for (GroupWord const* step : std::array<GroupWord const*, 2>{&vinv, &v}) {
        while (true) {
          auto next = *step * u;
          if (!better(next, u)) {
            break;
          }
          u = std::move(next);
        }
      }
      return u;
    }

    class Simplifier {
     public:
      Simplifier(RelatorSet const& rels, SimplifyOptions const& opts)
          : _rels(rels), _opts(opts) {}

      GroupWord canonical(YTerm const& t) const {
        auto const& r = _rels[t.relator];
        if (_opts.root_absorption) {
          return strip_powers(t.conjugator, r.root);
        }
        if (_opts.relator_absorption) {
          return strip_powers(t.conjugator, r.word);
        }
        return t.conjugator;
      }

      void canonicalise(std::vector<YTerm>& terms) const {
        if (!_opts.root_absorption && !_opts.relator_absorption) {
          return;
        }
        for (auto& t : terms) {
          t.conjugator = canonical(t);
        }
      }

      static bool inverse_pair(YTerm const& a, YTerm const& b) {
        return a.relator == b.relator && a.sign == -b.sign;
      }

      // One stack pass of adjacent inverse cancellation. Returns true on change.
      bool cancel_adjacent(std::vector<YTerm>& terms) const {
        std::vector<YTerm> out;
        out.reserve(terms.size());
        for (auto& t : terms) {
          if (!out.empty() && inverse_pair(out.back(), t)
              && out.back().conjugator == t.conjugator) {
            out.pop_back();
          } else {
            out.push_back(std::move(t));
          }
        }
        bool changed = out.size() != terms.size();
        terms        = std::move(out);
        return changed;
      }

      // Look for terms i < j forming an inverse pair once the terms between
      // them are moved out of the way: a prefix of the in-between terms is
      // moved left past term i, and term j is moved left past the rest.
      bool cancel_by_moves(std::vector<YTerm>& terms) const {
        auto n = terms.size();
        std::vector<GroupWord> delta(n);
        for (std::size_t k = 0; k < n; ++k) {
          delta[k] = boundary(terms[k], _rels);
        }
        for (std::size_t gap = 2; gap < n; ++gap) {
          for (std::size_t i = 0; i + gap < n; ++i) {
            auto j = i + gap;
            if (!inverse_pair(terms[i], terms[j])) {
              continue;
            }
            auto target = canonical(terms[i]);
            // suffix = delta[i+s+1] ... delta[j-1], built from the right.
            GroupWord suffix;
            for (std::size_t s = gap - 1;; --s) {
              YTerm moved      = terms[j];
              moved.conjugator = moved.conjugator * suffix.inverse();
              if (canonical(moved) == target) {
                apply(terms, delta, i, j, s);
                return true;
              }
              if (s == 0) {
                break;
              }
              suffix = delta[i + s] * suffix;
            }
          }
        }
        return false;
      }

      void apply(std::vector<YTerm>&           terms,
                 std::vector<GroupWord> const& delta,
                 std::size_t                   i,
                 std::size_t                   j,
                 std::size_t                   s) const {
        std::vector<YTerm> out(terms.begin(), terms.begin() + i);
        auto               left = delta[i].inverse();
        for (std::size_t k = i + 1; k <= i + s; ++k) {
          YTerm t = terms[k];
          t.conjugator *= left;
          out.push_back(std::move(t));
        }
        for (std::size_t k = i + s + 1; k < j; ++k) {
          out.push_back(terms[k]);
        }
        out.insert(out.end(), terms.begin() + j + 1, terms.end());
        terms = std::move(out);
      }

      // Adjacent S2 transpositions, kept when they shorten the conjugators.
      bool shorten(std::vector<YTerm>& terms) const {
        bool changed = false;
        for (std::size_t k = 0; k + 1 < terms.size(); ++k) {
          auto& a      = terms[k];
          auto& b      = terms[k + 1];
          auto  before = canonical(a).size() + canonical(b).size();
          // a b -> b a^{delta b}
          YTerm a1 = a;
          a1.conjugator *= boundary(b, _rels);
          auto after1 = canonical(b).size() + canonical(a1).size();
          // a b -> b^{(delta a)^-1} a
          YTerm b2 = b;
          b2.conjugator *= boundary(a, _rels).inverse();
          auto after2 = canonical(b2).size() + canonical(a).size();
          if (after1 < before && after1 <= after2) {
            YTerm old_b = b;
            a           = old_b;
            b           = a1;
            changed     = true;
          } else if (after2 < before) {
            YTerm old_a = a;
            a           = b2;
            b           = old_a;
            changed     = true;
          }
        }
        return changed;
      }

     private:
      RelatorSet const&      _rels;
      SimplifyOptions const& _opts;
    };

  }  // namespace

  YSequence simplify(YSequence const&       s,
                     RelatorSet const&      relators,
                     SimplifyOptions const& options,
                     NormalForm const&      nf) {
    Simplifier         simp(relators, options);
    std::vector<YTerm> terms(s.begin(), s.end());
#ifndef NDEBUG
    auto const expected = boundary(s, relators);
    auto       check    = [&] { assert(boundary(YSequence(terms), relators) == expected); };
#else
    auto check = [] {};
#endif
    while (true) {
      simp.canonicalise(terms);
      simp.cancel_adjacent(terms);
      check();
      if (options.peiffer_moves && simp.cancel_by_moves(terms)) {
        check();
        continue;
      }
      if (options.shorten_conjugators && simp.shorten(terms)) {
        check();
        continue;
      }
      break;
    }
    YSequence result(std::move(terms));
    if (options.collapse_primary && nf && !result.empty() && boundary(result, relators).empty()) {
      try {
        if (is_primary_identity(result, relators, nf)) {
          return {};
        }
      } catch (std::length_error const&) {
        // too long to search; leave as is
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Primary identity property
  ////////////////////////////////////////////////////////////////////////

  namespace {

    bool perfect_matching(std::vector<std::vector<bool>> const& compatible,
                          std::vector<bool>&                    used) {
      auto n     = used.size();
      auto first = std::find(used.begin(), used.end(), false) - used.begin();
      if (static_cast<std::size_t>(first) == n) {
        return true;
      }
      used[first] = true;
      for (std::size_t j = first + 1; j < n; ++j) {
        if (!used[j] && compatible[first][j]) {
          used[j] = true;
          if (perfect_matching(compatible, used)) {
            return true;
          }
          used[j] = false;
        }
      }
      used[first] = false;
      return false;
    }

  }  // namespace

  bool is_primary_identity(YSequence const&  s,
                           RelatorSet const& relators,
                           NormalForm const& nf,
                           std::size_t       max_terms) {
    if (!boundary(s, relators).empty()) {
      throw std::invalid_argument("is_primary_identity: sequence is not an identity");
    }
    auto n = s.size();
    if (n > max_terms) {
      throw std::length_error("is_primary_identity: " + std::to_string(n)
                              + " terms exceeds the cap of " + std::to_string(max_terms));
    }
    if (n % 2 == 1) {
      return false;
    }
    std::vector<std::vector<bool>> compatible(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (s[i].relator == s[j].relator && s[i].sign == -s[j].sign) {
          auto q           = s[i].conjugator * s[j].conjugator.inverse();
          compatible[i][j] = q.empty() || nf(mu(q)).empty();
          compatible[j][i] = compatible[i][j];
        }
      }
    }
    std::vector<bool> used(n, false);
    return perfect_matching(compatible, used);
  }

  ////////////////////////////////////////////////////////////////////////
  // Text form
  ////////////////////////////////////////////////////////////////////////

  std::size_t relator_index(RelatorSet const& relators, std::string_view label) {
    auto it = std::find_if(relators.begin(), relators.end(),
                           [&](Relator const& r) { return r.label == label; });
    return static_cast<std::size_t>(it - relators.begin());
  }

  std::string render(YTerm const& t, Alphabet const& alphabet, RelatorSet const& relators) {
    std::string out = "(" + relators.at(t.relator).label + (t.sign == Sign::plus ? "^+)" : "^-)");
    if (!t.conjugator.empty()) {
      out += "^{" + alphabet.render(t.conjugator) + "}";
    }
    return out;
  }

  std::string render(YSequence const& s, Alphabet const& alphabet, RelatorSet const& relators) {
    if (s.empty()) {
      return "<idY>";
    }
    std::string out;
    for (auto const& t : s) {
      if (!out.empty()) {
        out += ' ';
      }
      out += render(t, alphabet, relators);
    }
    return out;
  }

  YSequence parse_ysequence(std::string_view  text,
                            Alphabet const&   alphabet,
                            RelatorSet const& relators) {
    YSequence   result;
    std::size_t i    = 0;
    auto        skip = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
    };
    auto fail = [&](std::string const& what) {
      throw parse_error("Y-sequence: " + what, 1, i + 1);
    };
    while (true) {
      skip();
      if (i == text.size()) {
        break;
      }
      if (text.substr(i, 5) == "<idY>") {
        i += 5;
        continue;
      }
      if (text[i] != '(') {
        fail("expected '('");
      }
      auto close = text.find(')', i);
      if (close == std::string_view::npos) {
        fail("missing ')'");
      }
      auto inner = text.substr(i + 1, close - i - 1);
      auto caret = inner.rfind('^');
      if (caret == std::string_view::npos || caret + 2 != inner.size()
          || (inner.back() != '+' && inner.back() != '-')) {
        fail("expected (label^+) or (label^-)");
      }
      YTerm t;
      t.relator = relator_index(relators, inner.substr(0, caret));
      if (t.relator == relators.size()) {
        fail("unknown relator \"" + std::string(inner.substr(0, caret)) + "\"");
      }
      t.sign = inner.back() == '+' ? Sign::plus : Sign::minus;
      i      = close + 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::string_view conj;
        if (i < text.size() && text[i] == '{') {
          auto end = text.find('}', i);
          if (end == std::string_view::npos) {
            fail("missing '}'");
          }
          conj = text.substr(i + 1, end - i - 1);
          i    = end + 1;
        } else {
          auto end = i;
          while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))
                 && text[end] != '(') {
            ++end;
          }
          conj = text.substr(i, end - i);
          i    = end;
        }
        t.conjugator = alphabet.parse_group(conj);
      }
      result.push_back(std::move(t));
    }
    return result;
  }

}  // namespace logrw
