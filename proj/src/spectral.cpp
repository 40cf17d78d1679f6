#include "iemlab/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "iemlab/errors.hpp"

namespace iemlab {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

Direction Direction::from_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return Direction{r};
}

Direction Direction::from_complex(Complex z) { return from_angle(std::arg(z)); }

double circle_dist(double a, double b) {
  double d = std::fabs(std::fmod(a - b, kTwoPi));
  if (d > kTwoPi / 2) d = kTwoPi - d;
  return d;
}

namespace {

// null vector of (M - beta I) by Gaussian elimination with partial pivoting
std::vector<std::complex<long double>> null_vector(
    const std::vector<std::vector<long long>>& m, std::complex<long double> beta) {
  using C = std::complex<long double>;
  const std::size_t n = m.size();
  long double scale = 1;
  for (const auto& row : m)
    for (long long x : row) scale = std::max(scale, std::fabs(static_cast<long double>(x)));
  scale = std::max(scale, std::abs(beta));
  std::vector<std::vector<C>> a(n, std::vector<C>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = static_cast<long double>(m[i][j]) / scale;
      if (i == j) a[i][j] -= beta / scale;
    }

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  std::vector<bool> is_pivot(n, false);
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t best = row;
    for (std::size_t r = row + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[best][col])) best = r;
    if (std::abs(a[best][col]) < 1e-12L) continue;  // numerically free column
    std::swap(a[best], a[row]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row) continue;
      C f = a[r][col] / a[row][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[row][j];
    }
    pivot_col.push_back(col);
    is_pivot[col] = true;
    ++row;
  }

  // free column: the first non-pivot (rank must be n-1 for a simple eigenvalue)
  std::size_t free_col = n;
  for (std::size_t col = 0; col < n; ++col)
    if (!is_pivot[col]) {
      free_col = col;
      break;
    }
  if (free_col == n) throw NoSuitableEigenvalue("eigenvector solve: matrix has full rank at beta");

  std::vector<C> v(n, C(0));
  v[free_col] = 1;
  for (std::size_t r = pivot_col.size(); r-- > 0;) {
    const std::size_t pc = pivot_col[r];
    C s = 0;
    for (std::size_t j = pc + 1; j < n; ++j) s += a[r][j] * v[j];
    v[pc] = -s / a[r][pc];
  }
  return v;
}

EigenData build_eigen_data(const std::vector<std::vector<long long>>& m,
                           const Substitution* sigma, const BetaOptions& opts) {
  IntPolynomial p = char_poly(m);
  auto roots = polynomial_roots(p);
  if (roots.empty()) throw NoSuitableEigenvalue("empty spectrum");

  // Perron root: largest modulus; for a primitive nonnegative matrix it is
  // real positive and strictly dominant.
  long double perron = 0;
  for (const auto& r : roots) perron = std::max(perron, std::abs(r));

  const double eps = opts.eps_num;
  std::vector<std::complex<long double>> candidates;
  for (const auto& r : roots) {
    if (std::fabs(static_cast<double>(r.imag())) <= eps) continue;
    if (std::abs(r) <= 1.0L + eps) continue;
    candidates.push_back(r);
  }
  if (candidates.empty())
    throw NoSuitableEigenvalue("all non-Perron eigenvalues are real or inside the unit circle");

  std::complex<long double> beta_ld;
  if (opts.prefer_root) {
    beta_ld = candidates[0];
    for (const auto& r : candidates)
      if (std::abs(r - std::complex<long double>(opts.prefer_root->real(),
                                                 opts.prefer_root->imag())) <
          std::abs(beta_ld - std::complex<long double>(opts.prefer_root->real(),
                                                       opts.prefer_root->imag())))
        beta_ld = r;
  } else {
    // largest modulus, ties broken by positive imaginary part
    beta_ld = candidates[0];
    for (const auto& r : candidates) {
      if (std::abs(r) > std::abs(beta_ld) + 1e-18L)
        beta_ld = r;
      else if (std::fabs(static_cast<double>(std::abs(r) - std::abs(beta_ld))) <= 1e-15 &&
               r.imag() > beta_ld.imag())
        beta_ld = r;
    }
  }
  if (beta_ld.imag() < 0) beta_ld = std::conj(beta_ld);

  auto v = null_vector(m, beta_ld);

  // normalization
  std::size_t anchor_idx;
  std::complex<long double> anchor_val;
  if (opts.anchor) {
    anchor_idx = opts.anchor->first;
    anchor_val = std::complex<long double>(opts.anchor->second.real(), opts.anchor->second.imag());
  } else {
    anchor_idx = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
      if (std::abs(v[i]) > std::abs(v[anchor_idx]) + 1e-15L) anchor_idx = i;
    anchor_val = std::abs(v[anchor_idx]);
  }
  if (std::abs(v[anchor_idx]) < 1e-12L)
    throw NoSuitableEigenvalue("eigenvector anchor entry is zero");
  const std::complex<long double> scale = anchor_val / v[anchor_idx];
  for (auto& x : v) x *= scale;

  EigenData e;
  e.eps_num = eps;
  e.beta = Complex(static_cast<double>(beta_ld.real()), static_cast<double>(beta_ld.imag()));
  e.abs_beta = static_cast<double>(std::abs(beta_ld));
  e.beta0 = e.beta / e.abs_beta;
  e.phi = Direction::from_complex(e.beta0).angle;
  e.alpha_inv = static_cast<double>(perron);
  e.alpha = 1.0 / e.alpha_inv;
  e.gamma.resize(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    e.gamma[i] = Complex(static_cast<double>(v[i].real()), static_cast<double>(v[i].imag()));

  if (sigma != nullptr) {
    // C = max over label prefixes of |Gamma(p)| * sum_{m>=1} |beta|^{-m};
    // ties resolved to the lexicographically smallest prefix word.
    double best = -1.0;
    Word best_prefix;
    for (const Label& l : sigma->labels()) {
      const double g = std::abs(e.gamma_of(l.prefix));
      const bool better =
          g > best + 1e-12 ||
          (std::fabs(g - best) <= 1e-12 && l.prefix.letters < best_prefix.letters);
      if (better) {
        best = g;
        best_prefix = l.prefix;
      }
    }
    e.C = best / (e.abs_beta - 1.0);
    e.max_prefix = best_prefix;
  }
  return e;
}

}  // namespace

EigenData select_beta(const Substitution& sigma, const BetaOptions& opts) {
  return build_eigen_data(sigma.matrix(), &sigma, opts);
}

EigenData select_beta_matrix(const std::vector<std::vector<long long>>& m,
                             const BetaOptions& opts) {
  return build_eigen_data(m, nullptr, opts);
}

RootOfUnityReport root_of_unity_check(Complex beta0, long long K, double eps_num) {
  RootOfUnityReport rep;
  rep.min_dist = 1e9;
  std::complex<long double> b(beta0.real(), beta0.imag());
  b /= std::abs(b);
  std::complex<long double> z = 1;
  const double tol = 10.0 * eps_num;
  for (long long k = 1; k <= K; ++k) {
    z *= b;
    if ((k & 1023) == 0) z /= std::abs(z);
    const double d = std::abs(std::complex<double>(static_cast<double>(z.real()) - 1.0,
                                                   static_cast<double>(z.imag())));
    if (d < rep.min_dist) rep.min_dist = d;
    if (d <= tol) {
      rep.pass = false;
      rep.witness_k = k;
      return rep;
    }
  }
  rep.pass = true;
  return rep;
}

Complex gamma_of_word(const std::vector<Complex>& gamma, const Word& w) {
  Complex s = 0;
  for (Letter a : w.letters) s += gamma[static_cast<std::size_t>(a)];
  return s;
}

}  // namespace iemlab
