// Shared fixtures for the test binaries.

#ifndef LOGRW_TESTS_HELPERS_HPP_
#define LOGRW_TESTS_HELPERS_HPP_

#include <random>
#include <string>

#include "logrw/identities.hpp"
#include "logrw/presentation.hpp"
#include "logrw/rewriting.hpp"

namespace logrw::test {

  inline std::string data_path(std::string const& name) {
    return std::string(LOGRW_DATA_DIR) + "/" + name;
  }

  inline std::string test_data_path(std::string const& name) {
    return std::string(LOGRW_TEST_DATA_DIR) + "/" + name;
  }

  inline PresentationFile load_example(std::string const& name) {
    if (name == "q8.pres" || name == "abelian.pres" || name == "trefoil.pres") {
      return load_presentation(data_path(name));
    }
    return load_presentation(test_data_path(name));
  }

  inline CompletionReport complete_example(std::string const& name) {
    auto f = load_example(name);
    return logged_knuth_bendix(initial_logged_system(f.presentation, f.order));
  }

  // Completed once per process.
  inline LoggedRewriteSystem const& q8() {
    static LoggedRewriteSystem const sys = complete_example("q8.pres").final_system;
    return sys;
  }

  inline MonoidWord random_word(std::mt19937& rng, std::size_t letters, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<std::uint32_t> code(0, static_cast<std::uint32_t>(letters) - 1);
    std::vector<Letter>                          w(len(rng));
    for (auto& l : w) {
      l = Letter::from_code(code(rng));
    }
    return MonoidWord(std::move(w));
  }

  inline YSequence random_ysequence(std::mt19937& rng,
                                    std::size_t   relators,
                                    std::size_t   letters,
                                    std::size_t   max_terms) {
    std::uniform_int_distribution<std::size_t> count(0, max_terms);
    std::uniform_int_distribution<std::size_t> rel(0, relators - 1);
    std::bernoulli_distribution                coin;
    YSequence                                  s;
    for (auto n = count(rng); n > 0; --n) {
      s.push_back({rel(rng), coin(rng) ? Sign::plus : Sign::minus,
                   mu_inverse(random_word(rng, letters, 4))});
    }
    return s;
  }

}  // namespace logrw::test

#endif  // LOGRW_TESTS_HELPERS_HPP_
