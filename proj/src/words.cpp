#include "logrw/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace logrw {

  parse_error::parse_error(std::string const& msg, std::size_t line, std::size_t column)
      : std::runtime_error(line == 0 ? msg
                                     : "line " + std::to_string(line) + ", column "
                                           + std::to_string(column) + ": " + msg),
        _line(line),
        _column(column) {}

  namespace {

    bool valid_name(std::string_view name) {
      if (name.empty() || !std::islower(static_cast<unsigned char>(name[0]))) {
        return false;
      }
      return std::all_of(name.begin(), name.end(), [](char c) {
        return std::islower(static_cast<unsigned char>(c))
               || std::isdigit(static_cast<unsigned char>(c)) || c == '_';
      });
    }

    std::string capitalise(std::string s) {
      s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
      return s;
    }

    // Stack-based free reduction, appending `letters` onto `out`.
    void push_reduced(std::vector<Letter>& out, std::span<Letter const> letters) {
      for (Letter l : letters) {
        if (!out.empty() && out.back() == l.inverse()) {
          out.pop_back();
        } else {
          out.push_back(l);
        }
      }
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Alphabet
  ////////////////////////////////////////////////////////////////////////

  Alphabet::Alphabet(std::vector<std::string> names) {
    for (auto& n : names) {
      add(std::move(n));
    }
  }

  std::uint32_t Alphabet::add(std::string name) {
    if (!valid_name(name)) {
      throw std::invalid_argument("invalid generator name \"" + name
                                  + "\" (expected [a-z][a-z0-9_]*)");
    }
    if (index(name) != _names.size()) {
      throw std::invalid_argument("duplicate generator \"" + name + "\"");
    }
    _names.push_back(std::move(name));
    return static_cast<std::uint32_t>(_names.size() - 1);
  }

  std::uint32_t Alphabet::index(std::string_view name) const {
    auto it = std::find(_names.begin(), _names.end(), name);
    return static_cast<std::uint32_t>(it - _names.begin());
  }

  std::string Alphabet::letter_name(Letter l) const {
    auto const& n = name(l.generator());
    return l.negative() ? capitalise(n) : n;
  }

  std::string Alphabet::signed_name(Letter l) const {
    return name(l.generator()) + (l.negative() ? "-" : "+");
  }

  Letter Alphabet::parse_signed_name(std::string_view token) const {
    if (token.size() < 2 || (token.back() != '+' && token.back() != '-')) {
      throw parse_error("expected a signed letter such as a+ or a-, found \""
                        + std::string(token) + "\"");
    }
    auto g = index(token.substr(0, token.size() - 1));
    if (g == size()) {
      throw parse_error("unknown generator in \"" + std::string(token) + "\"");
    }
    return Letter(g, token.back() == '-');
  }

  std::string Alphabet::render(MonoidWord const& w) const {
    if (w.empty()) {
      return "<id>";
    }
    std::string out;
    for (Letter l : w) {
      if (!out.empty()) {
        out += ' ';
      }
      out += letter_name(l);
    }
    return out;
  }

  std::string Alphabet::render(GroupWord const& w) const {
    if (w.empty()) {
      return "<id>";
    }
    std::string out;
    auto        it = w.begin();
    while (it != w.end()) {
      auto run = std::find_if(it, w.end(), [&](Letter l) { return l != *it; });
      auto len = run - it;
      if (!out.empty()) {
        out += ' ';
      }
      out += name(it->generator());
      if (it->negative()) {
        out += "^-" + std::to_string(len);
      } else if (len > 1) {
        out += "^" + std::to_string(len);
      }
      it = run;
    }
    return out;
  }

  void Alphabet::parse_token(std::string_view token, std::vector<Letter>& out) const {
    std::string_view base = token;
    int              exponent = 1;
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      base      = token.substr(0, caret);
      auto expo = token.substr(caret + 1);
      if (!expo.empty() && expo.front() == '{' && expo.back() == '}') {
        expo = expo.substr(1, expo.size() - 2);
      }
      if (!expo.empty() && expo.front() == '+') {
        expo.remove_prefix(1);
      }
      auto [ptr, ec] = std::from_chars(expo.data(), expo.data() + expo.size(), exponent);
      if (ec != std::errc() || ptr != expo.data() + expo.size()) {
        throw parse_error("bad exponent in \"" + std::string(token) + "\"");
      }
    }
    if (base.empty()) {
      throw parse_error("missing generator in \"" + std::string(token) + "\"");
    }
    std::vector<Letter> letters;
    auto                lookup = [&](std::string_view s) -> bool {
      bool neg   = std::isupper(static_cast<unsigned char>(s[0])) != 0;
      auto lower = std::string(s);
      lower[0]   = static_cast<char>(std::tolower(static_cast<unsigned char>(lower[0])));
      auto g     = index(lower);
      if (g == size()) {
        return false;
      }
      letters.emplace_back(g, neg);
      return true;
    };
    if (!lookup(base)) {
      // Run-together single character generators, e.g. "abAB".
      letters.clear();
      for (std::size_t i = 0; i < base.size(); ++i) {
        if (!lookup(base.substr(i, 1))) {
          throw parse_error("unknown generator \"" + std::string(base) + "\"");
        }
      }
      if (exponent != 1) {
        throw parse_error("exponent on a multi-letter token \"" + std::string(token) + "\"");
      }
    }
    if (exponent == 0) {
      return;
    }
    for (int k = 0; k < std::abs(exponent); ++k) {
      for (Letter l : letters) {
        out.push_back(exponent < 0 ? l.inverse() : l);
      }
    }
  }

  std::vector<Letter> Alphabet::parse_letters(std::string_view text) const {
    std::vector<Letter> out;
    std::size_t         i = 0;
    while (i < text.size()) {
      while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*')) {
        ++i;
      }
      if (i == text.size()) {
        break;
      }
      auto j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != '*') {
        ++j;
      }
      auto token = text.substr(i, j - i);
      if (token == "<id>" || token == "1") {
        // identity, contributes nothing
      } else {
        parse_token(token, out);
      }
      i = j;
    }
    return out;
  }

  MonoidWord Alphabet::parse_monoid(std::string_view text) const {
    return MonoidWord(parse_letters(text));
  }

  GroupWord Alphabet::parse_group(std::string_view text) const {
    auto letters = parse_letters(text);
    return GroupWord(letters);
  }

  ////////////////////////////////////////////////////////////////////////
  // MonoidWord
  ////////////////////////////////////////////////////////////////////////

  MonoidWord MonoidWord::subword(std::size_t pos, std::size_t len) const {
    return MonoidWord(_letters.begin() + pos, _letters.begin() + pos + len);
  }

  bool MonoidWord::matches_at(std::size_t pos, std::span<Letter const> pattern) const noexcept {
    if (pos + pattern.size() > _letters.size()) {
      return false;
    }
    return std::equal(pattern.begin(), pattern.end(), _letters.begin() + pos);
  }

  MonoidWord& MonoidWord::operator+=(MonoidWord const& other) {
    _letters.insert(_letters.end(), other._letters.begin(), other._letters.end());
    return *this;
  }

  ////////////////////////////////////////////////////////////////////////
  // GroupWord
  ////////////////////////////////////////////////////////////////////////

  GroupWord::GroupWord(std::span<Letter const> letters) {
    _letters.reserve(letters.size());
    push_reduced(_letters, letters);
  }

  GroupWord::GroupWord(std::initializer_list<Letter> letters)
      : GroupWord(std::span<Letter const>(letters.begin(), letters.size())) {}

  GroupWord GroupWord::inverse() const {
    GroupWord result;
    result._letters.reserve(_letters.size());
    for (auto it = _letters.rbegin(); it != _letters.rend(); ++it) {
      result._letters.push_back(it->inverse());
    }
    return result;
  }

  bool GroupWord::has_prefix(GroupWord const& prefix) const noexcept {
    return prefix.size() <= size()
           && std::equal(prefix._letters.begin(), prefix._letters.end(), _letters.begin());
  }

  GroupWord& GroupWord::operator*=(GroupWord const& v) {
    push_reduced(_letters, v._letters);
    return *this;
  }

  GroupWord operator*(GroupWord const& u, GroupWord const& v) {
    GroupWord result = u;
    result *= v;
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Free functions
  ////////////////////////////////////////////////////////////////////////

  MonoidWord involute(MonoidWord const& w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
      out.push_back(it->inverse());
    }
    return MonoidWord(std::move(out));
  }

  MonoidWord mu(GroupWord const& w) {
    return MonoidWord(std::vector<Letter>(w.begin(), w.end()));
  }

  GroupWord mu_inverse(MonoidWord const& w) {
    return GroupWord(w.letters());
  }

  GroupWord free_multiply(GroupWord const& u, GroupWord const& v) {
    return u * v;
  }

  GroupWord power(GroupWord const& w, int k) {
    GroupWord base = k < 0 ? w.inverse() : w;
    GroupWord result;
    for (int i = 0; i < std::abs(k); ++i) {
      result *= base;
    }
    return result;
  }

  std::pair<GroupWord, std::size_t> root_of(GroupWord const& w) {
    auto n = w.size();
    for (std::size_t len = 1; len <= n / 2; ++len) {
      if (n % len != 0) {
        continue;
      }
      bool periodic = true;
      for (std::size_t i = len; i < n && periodic; ++i) {
        periodic = w[i] == w[i - len];
      }
      if (periodic) {
        return {GroupWord(w.letters().subspan(0, len)), n / len};
      }
    }
    return {w, 1};
  }

  std::size_t MonoidWordHash::operator()(MonoidWord const& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Letter l : w) {
      h = (h ^ l.code()) * 0x100000001b3ULL;
    }
    return h;
  }

  std::size_t GroupWordHash::operator()(GroupWord const& w) const noexcept {
    std::size_t h = 0x84222325cbf29ce4ULL;
    for (Letter l : w) {
      h = (h ^ l.code()) * 0x100000001b3ULL;
    }
    return h;
  }

}  // namespace logrw
