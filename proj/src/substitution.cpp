#include "iemlab/substitution.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace iemlab {

Substitution::Substitution(std::vector<std::string> names, std::vector<Word> images)
    : names_(std::move(names)), images_(std::move(images)) {
  if (names_.size() != images_.size() || names_.empty())
    throw Error("substitution: names/images size mismatch");
  for (const Word& im : images_) {
    if (im.empty()) throw Error("substitution: empty image");
    for (Letter b : im.letters)
      if (b < 0 || static_cast<std::size_t>(b) >= images_.size())
        throw Error("substitution: image letter out of range");
  }
  label_begin_.assign(1, 0);
  for (Letter a = 0; static_cast<std::size_t>(a) < images_.size(); ++a) {
    const Word& im = image(a);
    for (std::size_t i = 0; i < im.size(); ++i) {
      Label l;
      l.prefix = im.subword(0, i);
      l.center = im[i];
      l.suffix = im.subword(i + 1, im.size());
      l.parent = a;
      labels_.push_back(std::move(l));
    }
    label_begin_.push_back(labels_.size());
  }
}

Letter Substitution::letter_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<Letter>(i);
  throw Error("substitution: unknown letter name '" + name + "'");
}

Word Substitution::parse_word(const std::string& text) const {
  Word w;
  for (char c : text) w.push_back(letter_of(std::string(1, c)));
  return w;
}

std::string Substitution::format_word(const Word& w) const {
  std::string s;
  for (Letter a : w.letters) s += name(a);
  return s;
}

Word Substitution::apply(const Word& w, unsigned power) const {
  Word cur = w;
  for (unsigned p = 0; p < power; ++p) {
    Word next;
    std::size_t total = 0;
    for (Letter a : cur.letters) total += image(a).size();
    next.letters.reserve(total);
    for (Letter a : cur.letters) next.append(image(a));
    cur = std::move(next);
  }
  return cur;
}

std::vector<std::vector<long long>> Substitution::matrix() const {
  const std::size_t n = alphabet_size();
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
  for (Letter a = 0; static_cast<std::size_t>(a) < n; ++a)
    for (Letter b : image(a).letters) m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]++;
  return m;
}

std::vector<long long> Substitution::image_lengths(unsigned n) const {
  const std::size_t d = alphabet_size();
  std::vector<long long> len(d, 1);
  for (unsigned step = 0; step < n; ++step) {
    std::vector<long long> next(d, 0);
    for (std::size_t a = 0; a < d; ++a)
      for (Letter b : images_[a].letters) {
        next[a] += len[static_cast<std::size_t>(b)];
        if (next[a] < 0) throw Error("image_lengths: overflow");
      }
    len = std::move(next);
  }
  return len;
}

int Substitution::label_index(const Label& l) const {
  for (std::size_t i = label_begin(l.parent); i < label_end(l.parent); ++i)
    if (labels_[i] == l) return static_cast<int>(i);
  return -1;
}

bool Substitution::is_primitive(unsigned max_power) const {
  const std::size_t n = alphabet_size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (Letter b : images_[a].letters) reach[a][static_cast<std::size_t>(b)] = true;
  std::vector<std::vector<bool>> cur = reach;
  for (unsigned p = 1; p <= max_power; ++p) {
    bool all = true;
    for (std::size_t i = 0; i < n && all; ++i)
      for (std::size_t j = 0; j < n && all; ++j)
        if (!cur[i][j]) all = false;
    if (all) return true;
    std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (cur[i][k])
          for (std::size_t j = 0; j < n; ++j)
            if (reach[k][j]) next[i][j] = true;
    cur = std::move(next);
  }
  return false;
}

namespace {

void expand_right_rec(const Substitution& sigma, Letter a, unsigned n, std::size_t& budget,
                      std::vector<Letter>& out_reversed) {
  if (budget == 0) return;
  if (n == 0) {
    out_reversed.push_back(a);
    --budget;
    return;
  }
  const Word& im = sigma.image(a);
  for (std::size_t i = im.size(); i-- > 0 && budget > 0;)
    expand_right_rec(sigma, im[i], n - 1, budget, out_reversed);
}

void expand_left_rec(const Substitution& sigma, Letter a, unsigned n, std::size_t& budget,
                     std::vector<Letter>& out) {
  if (budget == 0) return;
  if (n == 0) {
    out.push_back(a);
    --budget;
    return;
  }
  const Word& im = sigma.image(a);
  for (std::size_t i = 0; i < im.size() && budget > 0; ++i)
    expand_left_rec(sigma, im[i], n - 1, budget, out);
}

}  // namespace

Word Substitution::expand_right(const Word& w, unsigned n, std::size_t maxlen) const {
  std::vector<Letter> rev;
  std::size_t budget = maxlen;
  for (std::size_t i = w.size(); i-- > 0 && budget > 0;)
    expand_right_rec(*this, w[i], n, budget, rev);
  std::reverse(rev.begin(), rev.end());
  return Word(std::move(rev));
}

Word Substitution::expand_left(const Word& w, unsigned n, std::size_t maxlen) const {
  std::vector<Letter> out;
  std::size_t budget = maxlen;
  for (std::size_t i = 0; i < w.size() && budget > 0; ++i)
    expand_left_rec(*this, w[i], n, budget, out);
  return Word(std::move(out));
}

std::string Substitution::to_json() const {
  nlohmann::ordered_json j;
  j["alphabet"] = names_;
  nlohmann::ordered_json rules = nlohmann::ordered_json::object();
  for (std::size_t a = 0; a < images_.size(); ++a) {
    std::vector<std::string> im;
    for (Letter b : images_[a].letters) im.push_back(name(b));
    rules[names_[a]] = im;
  }
  j["rules"] = rules;
  return j.dump(2) + "\n";
}

Substitution Substitution::from_json(const std::string& text) {
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(text);
  std::vector<std::string> names = j.at("alphabet").get<std::vector<std::string>>();
  std::vector<Word> images(names.size());
  const auto& rules = j.at("rules");
  if (rules.size() != names.size()) throw Error("substitution json: rules/alphabet mismatch");
  for (std::size_t a = 0; a < names.size(); ++a) {
    const auto& rule = rules.at(names[a]);
    Word im;
    for (const auto& item : rule) {
      const std::string nm = item.get<std::string>();
      auto it = std::find(names.begin(), names.end(), nm);
      if (it == names.end()) throw Error("substitution json: unknown letter " + nm);
      im.push_back(static_cast<Letter>(it - names.begin()));
    }
    images[a] = std::move(im);
  }
  return Substitution(std::move(names), std::move(images));
}

LabelStream LabelStream::finite(const Substitution& sigma, std::vector<Label> entries) {
  LabelStream s;
  s.sigma_ = &sigma;
  s.finite_ = true;
  s.entries_ = std::move(entries);
  for (std::size_t m = 0; m < s.entries_.size(); ++m) s.validate_link(m);
  return s;
}

LabelStream LabelStream::generator(const Substitution& sigma, std::function<Label(std::size_t)> gen) {
  LabelStream s;
  s.sigma_ = &sigma;
  s.finite_ = false;
  s.gen_ = std::move(gen);
  return s;
}

void LabelStream::validate_link(std::size_t m) const {
  const Label& l = entries_[m];
  Word recomposed = l.prefix;
  recomposed.push_back(l.center);
  recomposed.append(l.suffix);
  if (recomposed != sigma_->image(l.parent))
    throw IncompatibleStream("label " + std::to_string(m) + " does not decompose sigma(parent)");
  if (m + 1 < entries_.size() && entries_[m].parent != entries_[m + 1].center)
    throw IncompatibleStream("stream entries " + std::to_string(m) + "," + std::to_string(m + 1) +
                             " incompatible: parent != next center");
}

const Label& LabelStream::at(std::size_t m) {
  while (entries_.size() <= m) {
    if (finite_) throw ShiftOutOfRange("stream index past finite end");
    entries_.push_back(gen_(entries_.size()));
    validate_link(entries_.size() - 1);
    if (entries_.size() >= 2) validate_link(entries_.size() - 2);
  }
  return entries_[m];
}

std::vector<Label> finite_prefix_suffix(const Substitution& sigma, Letter a, unsigned n,
                                        long long shift) {
  if (n < 1) throw Error("finite_prefix_suffix: n must be >= 1");
  const std::vector<long long> len_n = sigma.image_lengths(n);
  if (shift < 0 || shift > len_n[static_cast<std::size_t>(a)] - 1)
    throw ShiftOutOfRange("finite_prefix_suffix: shift out of range");

  std::vector<Label> out(n);
  // Walk down: at level m the dot sits at position `pos` of sigma^m(word_m),
  // where word_m is the prefix word one level up. Choose the maximal prefix
  // of the level-(m-1) word whose image length stays <= pos (minimal k).
  Letter cur = a;
  long long pos = shift;
  for (unsigned m = n; m >= 1; --m) {
    const Word& im = sigma.image(cur);
    const std::vector<long long> len = sigma.image_lengths(m - 1);
    long long acc = 0;
    std::size_t i = 0;
    for (; i < im.size(); ++i) {
      const long long piece = len[static_cast<std::size_t>(im[i])];
      if (acc + piece > pos) break;
      acc += piece;
    }
    Label l;
    l.parent = cur;
    l.prefix = im.subword(0, i);
    l.center = im[i];
    l.suffix = im.subword(i + 1, im.size());
    out[m - 1] = l;
    cur = im[i];
    pos -= acc;
  }
  return out;
}

namespace {

PointedWord reconstruct_impl(const Substitution& sigma, const std::function<const Label*(std::size_t)>& pull,
                             long long window) {
  if (window < 0) throw Error("reconstruct: window must be >= 0");
  const std::size_t need_left = static_cast<std::size_t>(window);
  const std::size_t need_right = static_cast<std::size_t>(window) + 1;

  std::vector<Letter> left;   // letters at coordinates -1, -2, ... (reversed order)
  std::vector<Letter> right;  // letters at coordinates 0, 1, ...
  std::size_t last_progress = 0;
  for (std::size_t m = 0;; ++m) {
    const Label* l = pull(m);
    if (l == nullptr) break;
    if (m == 0) {
      right.push_back(l->center);
    }
    if (left.size() < need_left && !l->prefix.empty()) {
      Word block = sigma.expand_right(l->prefix, static_cast<unsigned>(m), need_left - left.size());
      for (std::size_t i = block.size(); i-- > 0;) left.push_back(block[i]);
      last_progress = m;
    }
    if (right.size() < need_right && (m == 0 || !l->suffix.empty())) {
      Word block = sigma.expand_left(l->suffix, static_cast<unsigned>(m), need_right - right.size());
      for (Letter x : block.letters) right.push_back(x);
      last_progress = m;
    }
    if (left.size() >= need_left && right.size() >= need_right) break;
    // An unbounded stream can legitimately go empty-sided forever (length-1
    // image cycles); give up after a long stall and return the partial window.
    if (m - last_progress > 10000) break;
  }

  PointedWord pw;
  pw.origin = static_cast<int>(left.size());
  pw.word.letters.reserve(left.size() + right.size());
  for (std::size_t i = left.size(); i-- > 0;) pw.word.push_back(left[i]);
  for (Letter x : right) pw.word.push_back(x);
  return pw;
}

}  // namespace

PointedWord reconstruct(LabelStream& stream, const Substitution& sigma, long long window) {
  return reconstruct_impl(
      sigma,
      [&](std::size_t m) -> const Label* {
        if (stream.is_finite() && m >= stream.size()) return nullptr;
        return &stream.at(m);
      },
      window);
}

PointedWord reconstruct(const std::vector<Label>& entries, const Substitution& sigma,
                        long long window) {
  LabelStream s = LabelStream::finite(sigma, entries);
  return reconstruct(s, sigma, window);
}

}  // namespace iemlab
