// logrw: logged completion, reduction and identities among relations for
// group presentations.

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "logrw/identities.hpp"
#include "logrw/io.hpp"
#include "logrw/presentation.hpp"
#include "logrw/rewriting.hpp"

using namespace logrw;

namespace {

  constexpr char const* version = "logrw 1.0.0";

  struct Config {
    std::string              input;
    std::string              order;
    std::string              letter_order;
    std::size_t              max_rules  = CompletionLimits{}.max_rules;
    std::size_t              max_passes = CompletionLimits{}.max_passes;
    std::string              format     = "text";
    bool                     raw_logs   = false;
    // reduce
    std::string              word;
    // identities
    bool                     keep_all = false;
    std::string              emit     = "kept";
    std::size_t              vertex_cap = default_vertex_cap;
  };

  // Rows of cells, left aligned, two spaces between columns.
  std::string table(std::vector<std::vector<std::string>> const& rows) {
    std::vector<std::size_t> width;
    for (auto const& row : rows) {
      width.resize(std::max(width.size(), row.size()));
      for (std::size_t i = 0; i < row.size(); ++i) {
        width[i] = std::max(width[i], row[i].size());
      }
    }
    std::ostringstream out;
    for (auto const& row : rows) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) {
        line += row[i];
        if (i + 1 < row.size()) {
          line += std::string(width[i] - row[i].size() + 2, ' ');
        }
      }
      out << line << "\n";
    }
    return out.str();
  }

  PresentationFile load(Config const& cfg) {
    auto file = load_presentation(cfg.input);
    auto n    = file.presentation.generators.size();
    auto kind = cfg.order.empty() ? file.order.kind() : order_kind_from_string(cfg.order);
    if (!cfg.letter_order.empty()) {
      std::vector<Letter> letters;
      std::stringstream   ss(cfg.letter_order);
      std::string         tok;
      while (std::getline(ss, tok, ',')) {
        tok.erase(0, tok.find_first_not_of(' '));
        tok.erase(tok.find_last_not_of(' ') + 1);
        letters.push_back(file.presentation.generators.parse_signed_name(tok));
      }
      file.order = OrderSpec(kind, std::move(letters), n);
    } else if (!cfg.order.empty() && kind != file.order.kind()) {
      file.order = OrderSpec::make(kind, n);
    }
    return file;
  }

  CompletionOptions options(Config const& cfg) {
    CompletionOptions o;
    o.limits.max_rules  = cfg.max_rules;
    o.limits.max_passes = cfg.max_passes;
    o.simplify_logs     = !cfg.raw_logs;
    return o;
  }

  // Throws budget_exceeded naming the latest rules when completion fails.
  CompletionReport complete_or_throw(Config const& cfg) {
    auto file   = load(cfg);
    auto report = logged_knuth_bendix(initial_logged_system(file.presentation, file.order),
                                      options(cfg));
    if (report.failure.empty()) {
      return report;
    }
    auto const&        sys = report.final_system;
    std::ostringstream msg;
    msg << "completion did not finish: " << report.failure << "\nlast rules added:";
    for (auto id : report.recent_rules) {
      if (sys.contains(id)) {
        auto const& r = sys.rule(id);
        msg << "\n  " << sys.alphabet().render(r.lhs) << " -> " << sys.alphabet().render(r.rhs);
      }
    }
    msg << "\ntry another --order or --letter-order";
    throw budget_exceeded(msg.str());
  }

  int run_complete(Config const& cfg) {
    auto        report = complete_or_throw(cfg);
    auto const& sys    = report.final_system;
    if (cfg.format == "json") {
      std::cout << to_json(report).dump(2) << "\n";
      return 0;
    }
    std::vector<std::vector<std::string>> rows{{"i", "lhs", "log", "rhs"}};
    std::size_t                           i = 0;
    for (auto const& r : sys.rules()) {
      rows.push_back({std::to_string(++i), sys.alphabet().render(r.lhs),
                      render(r.log, sys.alphabet(), sys.relators()),
                      sys.alphabet().render(r.rhs)});
    }
    std::cout << table(rows);
    std::cout << "# order: " << sys.order().describe(sys.alphabet()) << "\n"
              << "# rules formed: " << report.rules_formed
              << ", redundant: " << report.rules_removed << ", passes: " << report.passes
              << "\n";
    return 0;
  }

  int run_reduce(Config const& cfg) {
    auto        report = complete_or_throw(cfg);
    auto const& sys    = report.final_system;
    auto        w      = sys.alphabet().parse_monoid(cfg.word);
    auto        red    = sys.logged_reduce(w);
    auto        log    = cfg.raw_logs ? red.log
                                      : simplify(red.log, sys.relators(), SimplifyOptions::logs());
    if (cfg.format == "json") {
      nlohmann::json j = {{"word", sys.alphabet().render(w)},
                          {"normal_form", sys.alphabet().render(red.word)},
                          {"log", to_json(log, sys.alphabet(), sys.relators())},
                          {"steps", red.steps}};
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    std::cout << "I = " << sys.alphabet().render(red.word) << "\n"
              << "L = " << render(log, sys.alphabet(), sys.relators()) << "\n";
    return 0;
  }

  std::string vertex_name(CayleyGraph const& g, std::size_t v, Alphabet const& a) {
    return a.render(mu_inverse(g.vertices[v]));
  }

  int run_kone(Config const& cfg) {
    auto file = load(cfg);
    auto res  = identities_pipeline(file.presentation, file.order, options(cfg), cfg.vertex_cap);
    auto const& sys = res.report.final_system;
    auto const& a   = sys.alphabet();
    if (cfg.format == "json") {
      std::cout << k1_to_json(res.graph, sys).dump(2) << "\n";
      return 0;
    }
    std::vector<std::vector<std::string>> rows{{"[g,x]", "w", "word", "k1"}};
    for (auto const& e : res.graph.edges) {
      if (e.k1.empty()) {
        continue;
      }
      auto g = mu_inverse(res.graph.vertices[e.source]);
      auto w = mu_inverse(res.graph.vertices[e.target]);
      rows.push_back({"[" + a.render(g) + "," + a.name(e.generator) + "]", a.render(w),
                      a.render(mu(g * GroupWord{Letter(e.generator, false)} * w.inverse())),
                      render(e.k1, a, sys.relators())});
    }
    std::cout << table(rows);
    std::cout << "# vertices: " << res.graph.size() << ", edges: " << res.graph.edges.size()
              << ", trivial k1: " << res.graph.edges.size() + 1 - rows.size() << "\n";
    return 0;
  }

  int run_identities(Config const& cfg) {
    if (cfg.emit == "k1") {
      return run_kone(cfg);
    }
    auto file = load(cfg);
    auto res  = identities_pipeline(file.presentation, file.order, options(cfg), cfg.vertex_cap);
    auto const& sys  = res.report.final_system;
    auto const& a    = sys.alphabet();
    auto const& list = cfg.emit == "raw" ? res.raw : res.records;
    std::vector<IdentityRecord> shown;
    for (auto const& r : list) {
      if (cfg.emit == "raw" || cfg.keep_all || r.status == IdentityStatus::kept) {
        shown.push_back(r);
      }
    }
    if (cfg.format == "json") {
      nlohmann::json j = nlohmann::json::array();
      for (auto const& r : shown) {
        j.push_back(to_json(r, res.graph, sys));
      }
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    bool with_status = cfg.keep_all || cfg.emit == "raw";
    std::vector<std::vector<std::string>> rows;
    rows.push_back(with_status ? std::vector<std::string>{"cycle", "identity", "status"}
                               : std::vector<std::string>{"cycle", "identity"});
    for (auto const& r : shown) {
      std::vector<std::string> row{
          "[" + vertex_name(res.graph, r.vertex, a) + "," + sys.relators()[r.relator].label + "]",
          render(r.sequence, a, sys.relators())};
      if (with_status) {
        row.push_back(cfg.emit == "raw" ? "raw" : to_string(r.status));
      }
      rows.push_back(std::move(row));
    }
    std::cout << table(rows);
    std::cout << "# vertices: " << res.graph.size() << ", raw: " << res.raw.size()
              << ", kept: " << res.kept().size() << "\n";
    return 0;
  }

  void common_options(CLI::App* sub, Config& cfg) {
    sub->add_option("file", cfg.input, "presentation file")->required()->check(CLI::ExistingFile);
    sub->add_option("--order", cfg.order, "word ordering")
        ->check(CLI::IsMember({"shortlex", "syllable", "wreath"}));
    sub->add_option("--letter-order", cfg.letter_order, "letters least first, e.g. a+,a-,b+,b-");
    sub->add_option("--max-rules", cfg.max_rules, "rule budget")->check(CLI::PositiveNumber);
    sub->add_option("--max-passes", cfg.max_passes, "pass budget")->check(CLI::PositiveNumber);
    sub->add_flag("--raw-logs", cfg.raw_logs, "do not simplify logs");
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Logged rewriting for group presentations"};
  app.set_version_flag("--version", version);
  app.require_subcommand(1);
  Config cfg;

  auto* complete = app.add_subcommand("complete", "complete a presentation and print the rules");
  common_options(complete, cfg);

  auto* reduce = app.add_subcommand("reduce", "normal form and log of a word");
  common_options(reduce, cfg);
  reduce->add_option("word", cfg.word, "word, e.g. \"a b b a\"")->required();

  auto* identities = app.add_subcommand("identities", "identities among relations (finite groups)");
  common_options(identities, cfg);
  identities->add_flag("--keep-all", cfg.keep_all, "also list discarded identities");
  identities->add_option("--emit", cfg.emit, "what to print")
      ->check(CLI::IsMember({"k1", "raw", "kept"}));
  identities->add_option("--vertex-cap", cfg.vertex_cap, "largest Cayley graph to build");

  auto* kone = app.add_subcommand("kone", "k1 values on the Cayley graph edges");
  common_options(kone, cfg);
  kone->add_option("--vertex-cap", cfg.vertex_cap, "largest Cayley graph to build");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    auto code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*complete) {
      return run_complete(cfg);
    }
    if (*reduce) {
      return run_reduce(cfg);
    }
    if (*identities) {
      return run_identities(cfg);
    }
    return run_kone(cfg);
  } catch (parse_error const& e) {
    std::cerr << "logrw: " << cfg.input;
    if (e.line() != 0) {
      std::cerr << ":" << e.line() << ":" << e.column();
    }
    std::cerr << ": " << e.what() << "\n";
  } catch (std::exception const& e) {
    std::cerr << "logrw: " << e.what() << "\n";
  }
  return 1;
}
