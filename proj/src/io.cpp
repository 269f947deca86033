#include "logrw/io.hpp"

namespace logrw {

  using nlohmann::json;

  json to_json(YSequence const& s, Alphabet const& alphabet, RelatorSet const& rels) {
    json out = json::array();
    for (auto const& t : s) {
      out.push_back({{"relator", rels.at(t.relator).label},
                     {"sign", t.sign == Sign::plus ? "+" : "-"},
                     {"conj", alphabet.render(t.conjugator)}});
    }
    return out;
  }

  YSequence ysequence_from_json(json const& j, Alphabet const& alphabet, RelatorSet const& rels) {
    std::vector<YTerm> terms;
    for (auto const& t : j) {
      auto label = t.at("relator").get<std::string>();
      auto i     = relator_index(rels, label);
      if (i == rels.size()) {
        throw parse_error("unknown relator \"" + label + "\"");
      }
      auto sign = t.at("sign").get<std::string>();
      if (sign != "+" && sign != "-") {
        throw parse_error("sign must be \"+\" or \"-\"");
      }
      terms.push_back({i, sign == "+" ? Sign::plus : Sign::minus,
                       alphabet.parse_group(t.at("conj").get<std::string>())});
    }
    return YSequence(std::move(terms));
  }

  json to_json(LoggedRule const& r, LoggedRewriteSystem const& sys) {
    auto const& a = sys.alphabet();
    return {{"id", r.id},
            {"lhs", a.render(r.lhs)},
            {"log", to_json(r.log, a, sys.relators())},
            {"rhs", a.render(r.rhs)}};
  }

  json to_json(LoggedRewriteSystem const& sys) {
    auto const& a    = sys.alphabet();
    json        gens = json::array();
    for (std::uint32_t i = 0; i < a.size(); ++i) {
      gens.push_back(a.name(i));
    }
    json rels = json::array();
    for (auto const& r : sys.relators()) {
      rels.push_back({{"label", r.label}, {"word", a.render(r.word)}});
    }
    json letters = json::array();
    for (auto l : sys.order().letter_order()) {
      letters.push_back(a.signed_name(l));
    }
    json rules = json::array();
    for (auto const& r : sys.rules()) {
      rules.push_back(to_json(r, sys));
    }
    return {{"generators", gens},
            {"relators", rels},
            {"order", {{"kind", to_string(sys.order().kind())}, {"letters", letters}}},
            {"complete", sys.complete()},
            {"rules", rules}};
  }

  LoggedRewriteSystem system_from_json(json const& j) {
    Presentation p;
    for (auto const& g : j.at("generators")) {
      p.generators.add(g.get<std::string>());
    }
    for (auto const& r : j.at("relators")) {
      p.add_relator(r.at("label").get<std::string>(),
                    p.generators.parse_group(r.at("word").get<std::string>()));
    }
    auto const&         o = j.at("order");
    std::vector<Letter> letters;
    for (auto const& l : o.at("letters")) {
      letters.push_back(p.generators.parse_signed_name(l.get<std::string>()));
    }
    auto                n = p.generators.size();
    LoggedRewriteSystem sys(
        p, OrderSpec(order_kind_from_string(o.at("kind").get<std::string>()), letters, n));
    for (auto const& r : j.at("rules")) {
      sys.add_rule(sys.alphabet().parse_monoid(r.at("lhs").get<std::string>()),
                   ysequence_from_json(r.at("log"), sys.alphabet(), sys.relators()),
                   sys.alphabet().parse_monoid(r.at("rhs").get<std::string>()));
    }
    sys.set_complete(j.value("complete", false));
    return sys;
  }

  json to_json(CompletionReport const& report) {
    auto const& sys = report.final_system;
    auto const& a   = sys.alphabet();
    json        ids = json::array();
    for (auto const& h : report.identities) {
      ids.push_back({{"overlap", a.render(h.overlap_word)},
                     {"rules", {h.rule_a, h.rule_b}},
                     {"pass", h.pass},
                     {"terms", to_json(h.identity, a, sys.relators())}});
    }
    json out = {{"system", to_json(sys)},
                {"rules_formed", report.rules_formed},
                {"rules_removed", report.rules_removed},
                {"passes", report.passes},
                {"identities", ids}};
    if (!report.failure.empty()) {
      out["failure"]      = report.failure;
      out["recent_rules"] = report.recent_rules;
    }
    return out;
  }

  json to_json(IdentityRecord const& r, CayleyGraph const& graph, LoggedRewriteSystem const& sys) {
    auto const& a = sys.alphabet();
    return {{"cycle",
             {{"g", a.render(mu_inverse(graph.vertices.at(r.vertex)))},
              {"rho", sys.relators().at(r.relator).label}}},
            {"terms", to_json(r.sequence, a, sys.relators())},
            {"status", to_string(r.status)}};
  }

  json k1_to_json(CayleyGraph const& graph, LoggedRewriteSystem const& sys) {
    auto const& a   = sys.alphabet();
    json        out = json::array();
    for (auto const& e : graph.edges) {
      auto g = mu_inverse(graph.vertices[e.source]);
      auto w = mu_inverse(graph.vertices[e.target]);
      out.push_back({{"g", a.render(g)},
                     {"x", a.name(e.generator)},
                     {"target", a.render(w)},
                     {"word", a.render(mu(g * GroupWord{Letter(e.generator, false)} * w.inverse()))},
                     {"k1", to_json(e.k1, a, sys.relators())}});
    }
    return out;
  }

}  // namespace logrw
