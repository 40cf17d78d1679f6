#ifndef IEMLAB_TESTS_FIXTURES_HPP
#define IEMLAB_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "iemlab/substitution.hpp"

namespace iemlab::testing {

inline Substitution ay_substitution() {
  std::vector<std::string> names = {"1", "2", "3", "4", "5", "6", "7", "8", "9"};
  auto W = [](std::initializer_list<int> ls) {
    std::vector<Letter> v;
    for (int x : ls) v.push_back(x - 1);
    return Word(std::move(v));
  };
  std::vector<Word> images = {
      W({3, 5}), W({4, 5}), W({4, 6}), W({1, 7}), W({1, 8}),
      W({1, 9}), W({2, 9}), W({2}),    W({3}),
  };
  return Substitution(std::move(names), std::move(images));
}

// a -> ab, b -> a (Fibonacci); two real eigenvalues.
inline Substitution fibonacci_substitution() {
  return Substitution({"a", "b"}, {Word({0, 1}), Word({0})});
}

// a -> aa: single letter, valid periodic streams.
inline Substitution doubling_substitution() {
  return Substitution({"a"}, {Word({0, 0})});
}

}  // namespace iemlab::testing

#endif
