#ifndef IEMLAB_SPECTRAL_HPP
#define IEMLAB_SPECTRAL_HPP

#include <complex>
#include <optional>
#include <vector>

#include "iemlab/intpoly.hpp"
#include "iemlab/substitution.hpp"

namespace iemlab {

using Complex = std::complex<double>;

// A point of the unit circle, stored as an angle in [0, 2*pi).
struct Direction {
  double angle = 0.0;

  static Direction from_angle(double a);
  static Direction from_complex(Complex z);
  Complex unit() const { return std::polar(1.0, angle); }
  Direction rotated(double delta) const { return from_angle(angle + delta); }
};

// arc-length metric on the circle, values in [0, pi]
double circle_dist(double a, double b);
inline double circle_dist(const Direction& a, const Direction& b) {
  return circle_dist(a.angle, b.angle);
}

// Expanding non-real eigenvalue and everything derived from it.
struct EigenData {
  Complex beta;                 // |beta| > 1, nonreal, positive imaginary part by convention
  Complex beta0;                // beta/|beta|
  double phi = 0.0;             // arg(beta0) in [0, 2*pi)
  double abs_beta = 0.0;
  std::vector<Complex> gamma;   // eigenvector Gamma over the alphabet
  double alpha_inv = 0.0;       // Perron-Frobenius eigenvalue
  double alpha = 0.0;
  double C = 0.0;               // tail constant: max_p |Gamma(p)| * |beta|/(|beta|-1)-style bound
  Word max_prefix;              // prefix attaining the max (ties: lexicographically smallest)
  double eps_num = 1e-14;

  Complex gamma_of(const Word& w) const {
    Complex s = 0;
    for (Letter a : w.letters) s += gamma[static_cast<std::size_t>(a)];
    return s;
  }
};

struct BetaOptions {
  // Scale fixing: entry `anchor_index` of Gamma set to `anchor_value`. Without
  // an anchor the largest-modulus entry is made real positive.
  std::optional<std::pair<std::size_t, Complex>> anchor;
  // Override eigenvalue choice: pick the non-real expanding root closest to
  // this value instead of the largest-modulus one.
  std::optional<Complex> prefer_root;
  double eps_num = 1e-14;
};

// Isolates the spectrum of sigma's matrix, picks the non-real root with
// |beta| > 1 (largest modulus, ties to positive imaginary part), solves for
// Gamma, computes the Perron root and the certified tail constant C.
// Throws NoSuitableEigenvalue when every non-Perron root is real or on the
// unit circle.
EigenData select_beta(const Substitution& sigma, const BetaOptions& opts = {});

// Same, for a bare matrix (no prefix data: C and max_prefix left empty).
EigenData select_beta_matrix(const std::vector<std::vector<long long>>& m,
                             const BetaOptions& opts = {});

struct RootOfUnityReport {
  bool pass = false;
  long long witness_k = 0;  // smallest k <= K with beta0^k == 1 (when !pass)
  double min_dist = 0.0;    // min over k of circle distance of beta0^k to 1
};

// Semi-decision: verifies beta0^k != 1 for all 1 <= k <= K within 10*eps_num.
RootOfUnityReport root_of_unity_check(Complex beta0, long long K, double eps_num = 1e-14);

// gamma(w) = sum of entries along w for an arbitrary vector.
Complex gamma_of_word(const std::vector<Complex>& gamma, const Word& w);

}  // namespace iemlab

#endif
