#ifndef IEMLAB_SUBSTITUTION_HPP
#define IEMLAB_SUBSTITUTION_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "iemlab/errors.hpp"

namespace iemlab {

// Letters are dense small integers; display names live on the Substitution.
using Letter = int;

struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> v) : letters(std::move(v)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  Letter operator[](std::size_t i) const { return letters[i]; }
  void push_back(Letter a) { letters.push_back(a); }
  void append(const Word& w) {
    letters.insert(letters.end(), w.letters.begin(), w.letters.end());
  }
  Word subword(std::size_t begin, std::size_t end) const {
    return Word(std::vector<Letter>(letters.begin() + begin, letters.begin() + end));
  }
  bool operator==(const Word& o) const { return letters == o.letters; }
  bool operator!=(const Word& o) const { return !(*this == o); }
};

// A word with a marked origin: coordinates run -origin .. size()-1-origin.
struct PointedWord {
  Word word;
  int origin = 0;  // number of letters strictly left of the dot

  int min_coord() const { return -origin; }
  int max_coord() const { return static_cast<int>(word.size()) - 1 - origin; }
  bool in_window(int n) const { return n >= min_coord() && n <= max_coord(); }
  Letter at(int n) const { return word.letters[static_cast<std::size_t>(n + origin)]; }
};

// One way of writing sigma(parent) = prefix . center . suffix.
struct Label {
  Word prefix;
  Letter center = 0;
  Word suffix;
  Letter parent = 0;

  bool operator==(const Label& o) const {
    return parent == o.parent && center == o.center && prefix == o.prefix && suffix == o.suffix;
  }
  bool operator!=(const Label& o) const { return !(*this == o); }
};

class Substitution {
 public:
  Substitution(std::vector<std::string> names, std::vector<Word> images);

  std::size_t alphabet_size() const { return images_.size(); }
  const Word& image(Letter a) const { return images_[static_cast<std::size_t>(a)]; }
  const std::string& name(Letter a) const { return names_[static_cast<std::size_t>(a)]; }
  const std::vector<std::string>& names() const { return names_; }

  Letter letter_of(const std::string& name) const;
  Word parse_word(const std::string& text) const;  // names concatenated (single-char names)
  std::string format_word(const Word& w) const;

  // sigma^power(w) by repeated image concatenation; power 0 is the identity.
  Word apply(const Word& w, unsigned power = 1) const;

  // M[a][b] = number of occurrences of b in sigma(a).
  std::vector<std::vector<long long>> matrix() const;

  // |sigma^n(a)| for all letters, via row sums of M^n.
  std::vector<long long> image_lengths(unsigned n) const;

  // The label set: for each letter, |sigma(a)| labels ordered by center position.
  const std::vector<Label>& labels() const { return labels_; }
  // Labels with parent a occupy indices [label_begin(a), label_begin(a+1)).
  std::size_t label_begin(Letter a) const { return label_begin_[static_cast<std::size_t>(a)]; }
  std::size_t label_end(Letter a) const { return label_begin_[static_cast<std::size_t>(a) + 1]; }
  int label_index(const Label& l) const;

  bool is_primitive(unsigned max_power = 64) const;

  // Rightmost maxlen letters of sigma^n(w) without materializing the full word.
  Word expand_right(const Word& w, unsigned n, std::size_t maxlen) const;
  // Leftmost maxlen letters of sigma^n(w).
  Word expand_left(const Word& w, unsigned n, std::size_t maxlen) const;

  std::string to_json() const;
  static Substitution from_json(const std::string& text);

  bool operator==(const Substitution& o) const {
    return names_ == o.names_ && [&] {
      for (std::size_t i = 0; i < images_.size(); ++i)
        if (!(images_[i] == o.images_[i])) return false;
      return true;
    }();
  }

 private:
  std::vector<std::string> names_;
  std::vector<Word> images_;
  std::vector<Label> labels_;
  std::vector<std::size_t> label_begin_;
};

// Prefix-suffix entries, finite or generator-backed. Entry m+1's center must be
// the parent of entry m (sigma(c_{m+1}) = p_m c_m s_m); violated pulls throw
// IncompatibleStream.
class LabelStream {
 public:
  static LabelStream finite(const Substitution& sigma, std::vector<Label> entries);
  static LabelStream generator(const Substitution& sigma, std::function<Label(std::size_t)> gen);

  bool is_finite() const { return finite_; }
  std::size_t size() const { return entries_.size(); }  // entries pulled so far if unbounded
  const Label& at(std::size_t m);                       // pulls and validates as needed
  const std::vector<Label>& materialized() const { return entries_; }

 private:
  LabelStream() = default;
  void validate_link(std::size_t m) const;

  const Substitution* sigma_ = nullptr;
  bool finite_ = true;
  std::vector<Label> entries_;
  std::function<Label(std::size_t)> gen_;
};

// The canonical length-n decomposition of S^N(sigma^n(a)) (minimal-k inductive
// construction). Entry n-1 satisfies p c s = sigma(a).
std::vector<Label> finite_prefix_suffix(const Substitution& sigma, Letter a, unsigned n,
                                        long long shift);

// Central part ... sigma(p1) p0 . c0 s0 sigma(s1) ... truncated to [-window, window].
PointedWord reconstruct(LabelStream& stream, const Substitution& sigma, long long window);
PointedWord reconstruct(const std::vector<Label>& entries, const Substitution& sigma,
                        long long window);

}  // namespace iemlab

#endif
