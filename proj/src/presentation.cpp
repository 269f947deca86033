#include "logrw/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

namespace logrw {

  void Presentation::add_relator(std::string label, GroupWord word) {
    if (relator_index(relators, label) != relators.size()) {
      throw std::invalid_argument("duplicate relator label \"" + label + "\"");
    }
    for (Letter l : word) {
      if (!generators.contains(l)) {
        throw std::invalid_argument("relator \"" + label + "\" uses an undeclared generator");
      }
    }
    relators.push_back(Relator::make(std::move(label), std::move(word)));
  }

  namespace {

    std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    }

    // Column (1-based) of `part` within `line`.
    std::size_t column_of(std::string_view line, std::string_view part) {
      return static_cast<std::size_t>(part.data() - line.data()) + 1;
    }

    std::vector<std::string_view> split_list(std::string_view s) {
      std::vector<std::string_view> out;
      std::size_t                   i = 0;
      while (i <= s.size()) {
        auto j = s.find(',', i);
        if (j == std::string_view::npos) {
          j = s.size();
        }
        auto item = trim(s.substr(i, j - i));
        if (!item.empty()) {
          out.push_back(item);
        }
        i = j + 1;
      }
      return out;
    }

  }  // namespace

  PresentationFile parse_presentation(std::string_view text) {
    Presentation                         p;
    bool                                 have_generators = false;
    bool                                 in_relators     = false;
    OrderKind                            kind            = OrderKind::shortlex;
    std::optional<std::vector<Letter>>   letters;
    std::size_t                          letters_line = 0;
    std::vector<std::string_view>        letter_tokens;
    std::string_view                     letters_src;

    std::size_t line_no = 0;
    std::size_t start   = 0;
    while (start <= text.size()) {
      auto end = text.find('\n', start);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      auto raw = text.substr(start, end - start);
      start    = end + 1;
      ++line_no;
      auto line = raw;
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      line = trim(line);
      if (line.empty()) {
        if (end == text.size()) {
          break;
        }
        continue;
      }
      auto colon = line.find(':');
      auto eq    = line.find('=');
      if (colon != std::string_view::npos && (eq == std::string_view::npos || colon < eq)) {
        auto key   = trim(line.substr(0, colon));
        auto value = trim(line.substr(colon + 1));
        in_relators = false;
        if (key == "generators") {
          if (have_generators) {
            throw parse_error("generators declared twice", line_no, column_of(raw, key));
          }
          have_generators = true;
          for (auto name : split_list(value)) {
            try {
              p.generators.add(std::string(name));
            } catch (std::invalid_argument const& e) {
              throw parse_error(e.what(), line_no, column_of(raw, name));
            }
          }
        } else if (key == "order") {
          try {
            kind = order_kind_from_string(std::string(value));
          } catch (std::invalid_argument const& e) {
            throw parse_error(e.what(), line_no, column_of(raw, value));
          }
        } else if (key == "letters") {
          letters_line  = line_no;
          letters_src   = raw;
          letter_tokens = split_list(value);
          letters.emplace();
        } else if (key == "relators") {
          if (!have_generators) {
            throw parse_error("relators before generators", line_no, column_of(raw, key));
          }
          in_relators = true;
          if (!value.empty()) {
            throw parse_error("relators go on the following lines", line_no,
                              column_of(raw, value));
          }
        } else {
          throw parse_error("unknown section \"" + std::string(key) + "\"", line_no,
                            column_of(raw, key));
        }
      } else if (in_relators) {
        if (eq == std::string_view::npos) {
          throw parse_error("expected 'label = word'", line_no, column_of(raw, line));
        }
        auto label = trim(line.substr(0, eq));
        auto body  = trim(line.substr(eq + 1));
        if (label.empty()) {
          throw parse_error("missing relator label", line_no, column_of(raw, line));
        }
        GroupWord word;
        try {
          word = p.generators.parse_group(body);
        } catch (parse_error const& e) {
          throw parse_error(e.what(), line_no, column_of(raw, body.empty() ? label : body));
        }
        if (word.empty()) {
          throw parse_error("relator \"" + std::string(label) + "\" is empty", line_no,
                            column_of(raw, label));
        }
        try {
          p.add_relator(std::string(label), std::move(word));
        } catch (std::invalid_argument const& e) {
          throw parse_error(e.what(), line_no, column_of(raw, label));
        }
      } else {
        throw parse_error("unexpected line", line_no, column_of(raw, line));
      }
      if (end == text.size()) {
        break;
      }
    }
    if (!have_generators) {
      throw parse_error("missing 'generators:' line", line_no, 1);
    }
    if (letters) {
      for (auto tok : letter_tokens) {
        try {
          letters->push_back(p.generators.parse_signed_name(tok));
        } catch (parse_error const& e) {
          throw parse_error(e.what(), letters_line, column_of(letters_src, tok));
        }
      }
      try {
        OrderSpec order(kind, std::move(*letters), p.generators.size());
        return {std::move(p), std::move(order)};
      } catch (alphabet_mismatch const& e) {
        throw parse_error(e.what(), letters_line, 1);
      }
    }
    auto n = p.generators.size();
    return {std::move(p), OrderSpec::make(kind, n)};
  }

  PresentationFile load_presentation(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw std::runtime_error("cannot open \"" + path + "\"");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_presentation(ss.str());
  }

  std::string render_presentation(PresentationFile const& file) {
    auto const&        p = file.presentation;
    std::ostringstream out;
    out << "generators: ";
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
      out << (i ? ", " : "") << p.generators.name(static_cast<std::uint32_t>(i));
    }
    out << "\norder: " << to_string(file.order.kind()) << "\nletters: ";
    auto const& lo = file.order.letter_order();
    for (std::size_t i = 0; i < lo.size(); ++i) {
      out << (i ? ", " : "") << p.generators.signed_name(lo[i]);
    }
    out << "\nrelators:\n";
    for (auto const& r : p.relators) {
      out << "  " << r.label << " = " << p.generators.render(r.word) << "\n";
    }
    return out.str();
  }

}  // namespace logrw
