#ifndef IEMLAB_FRACTAL_HPP
#define IEMLAB_FRACTAL_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "iemlab/spectral.hpp"
#include "iemlab/substitution.hpp"

namespace iemlab {

struct ValueQuery {
  Letter letter = 0;
  Direction tau;
  int depth = 0;
  std::optional<int> restrict_label;  // global label index; fixes the first chain entry
};

struct CertifiedArgmin {
  bool ambiguous = false;
  int winner = -1;     // global label index (best even when ambiguous)
  int runner_up = -1;  // second-best label index, -1 for single-label letters
  int depth_used = 0;
  double gap = 0.0;    // runner-up value minus winner value at depth_used
  double bound = 0.0;  // C |beta|^{-depth_used} + 10 eps
};

struct ClosedFormMatch {
  int sign = +1;  // +1 for i*beta0^k, -1 for -i*beta0^k
  int k = 0;
  double angle = 0.0;
};

struct PsiEnclosure {
  Letter letter = 0;
  double lo = 0.0;     // enclosure arc [lo, lo+width) contains the tie direction
  double width = 0.0;
  int label_left = -1;   // certified winner just below lo
  int label_right = -1;  // certified winner just above lo+width
  std::optional<ClosedFormMatch> closed_form;

  double midpoint() const;
};

struct PsiResult {
  Letter letter = 0;
  std::vector<PsiEnclosure> enclosures;
  // grid cells that stayed ambiguous at the depth cap without bracketing
  std::vector<std::pair<double, double>> unresolved;
};

struct ChainEntry {
  int label = -1;  // followed branch (lowest index on ties)
  bool ambiguous = false;
  int alternative = -1;  // the other tied candidate when ambiguous
};

struct FractalCloud {
  Letter letter = 0;
  int depth = 0;
  bool sampled = false;  // true when capped random sampling replaced enumeration
  std::vector<Complex> points;
};

class ValueEngine {
 public:
  ValueEngine(const Substitution& sigma, const EigenData& eig, int depth_cap = 200);

  const Substitution& substitution() const { return *sigma_; }
  const EigenData& eigen() const { return eig_; }
  int depth_cap() const { return depth_cap_; }

  // v_a^{(n)}(tau), or the label-restricted version when the query names one.
  double v_depth(const ValueQuery& q);

  CertifiedArgmin certified_argmin(Letter a, Direction tau, int max_depth);

  std::vector<ChainEntry> extreme_chain(Letter a, Direction tau, int length);

  PsiResult compute_psi(Letter a, int grid = 4096, double psi_tol = 1e-12);

  // D1/D2 diagnostics at a tie direction; throws NotATie when the argmin
  // resolves at psi.
  std::pair<double, double> separation(Letter a, Direction psi, int depth);

  FractalCloud render_cloud(Letter a, int depth, std::size_t cap = 1 << 20,
                            std::uint64_t seed = 1);

  void clear_memo() { memo_.clear(); }
  std::size_t memo_size() const { return memo_.size(); }

 private:
  struct Key {
    std::int32_t letter;
    std::int32_t depth;
    std::uint64_t angle_bits;
    bool operator==(const Key& o) const {
      return letter == o.letter && depth == o.depth && angle_bits == o.angle_bits;
    }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::uint64_t h = k.angle_bits * 0x9e3779b97f4a7c15ULL;
      h ^= (static_cast<std::uint64_t>(static_cast<std::uint32_t>(k.letter)) << 32) |
           static_cast<std::uint32_t>(k.depth);
      h *= 0xff51afd7ed558ccdULL;
      h ^= h >> 33;
      return static_cast<std::size_t>(h);
    }
  };

  double v_rec(Letter a, double angle, int depth);
  double restricted_term(int label_index, double angle, int depth);
  // winner/runner-up values over the labels of a at a fixed depth
  void best_two(Letter a, double angle, int depth, int& best, double& best_v, int& second,
                double& second_v);

  const Substitution* sigma_;
  EigenData eig_;
  int depth_cap_;
  std::vector<Complex> prefix_gamma_;  // per label
  Complex beta_inv_;
  double abs_beta_inv_;
  std::unordered_map<Key, double, KeyHash> memo_;
};

}  // namespace iemlab

#endif
