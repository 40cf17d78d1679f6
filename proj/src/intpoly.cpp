#include "iemlab/intpoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "iemlab/errors.hpp"

namespace iemlab {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::from_ints(const std::vector<long long>& coeffs) {
  std::vector<mpz_class> v;
  v.reserve(coeffs.size());
  for (long long x : coeffs) v.emplace_back(static_cast<long>(x));
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& IntPolynomial::coeff(std::size_t i) const {
  static const mpz_class zero = 0;
  return i < c_.size() ? c_[i] : zero;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<mpz_class> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<mpz_class> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - o.coeff(i);
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return IntPolynomial();
  std::vector<mpz_class> v(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<mpz_class> v = c_;
  for (auto& x : v) x = -x;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::derivative() const {
  if (c_.size() <= 1) return IntPolynomial();
  std::vector<mpz_class> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
  return IntPolynomial(std::move(v));
}

mpz_class IntPolynomial::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

std::complex<long double> IntPolynomial::eval(std::complex<long double> z) const {
  std::complex<long double> acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * z + static_cast<long double>(c_[i].get_d());
  return acc;
}

namespace {

mpz_class content(const std::vector<mpz_class>& c) {
  mpz_class g = 0;
  for (const auto& x : c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  mpz_class g = content(p.coeffs());
  if (p.coeffs().back() < 0) g = -g;
  std::vector<mpz_class> v = p.coeffs();
  for (auto& x : v) x /= g;
  return IntPolynomial(std::move(v));
}

// lc(b)^(deg a - deg b + 1) * a = q*b + r with deg r < deg b
IntPolynomial pseudo_remainder(IntPolynomial a, const IntPolynomial& b) {
  const int db = b.degree();
  const mpz_class lb = b.coeffs().back();
  while (!a.is_zero() && a.degree() >= db) {
    const int shift = a.degree() - db;
    const mpz_class la = a.coeffs().back();
    std::vector<mpz_class> v(a.coeffs().size(), 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) v[i] = a.coeffs()[i] * lb;
    for (int i = 0; i <= db; ++i) v[static_cast<std::size_t>(i + shift)] -= la * b.coeffs()[static_cast<std::size_t>(i)];
    a = IntPolynomial(std::move(v));
  }
  return a;
}

// exact division, throws if not divisible
IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  if (a.is_zero()) return a;
  std::vector<mpz_class> rem = a.coeffs();
  std::vector<mpz_class> q(a.coeffs().size() - b.coeffs().size() + 1, 0);
  const int db = b.degree();
  const mpz_class& lb = b.coeffs().back();
  for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
    if (rem[static_cast<std::size_t>(i)] == 0) continue;
    mpz_class f = rem[static_cast<std::size_t>(i)] / lb;
    if (f * lb != rem[static_cast<std::size_t>(i)]) throw Error("exact_divide: not divisible");
    q[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  for (const auto& x : rem)
    if (x != 0) throw Error("exact_divide: nonzero remainder");
  return IntPolynomial(std::move(q));
}

}  // namespace

IntPolynomial IntPolynomial::gcd(const IntPolynomial& a0, const IntPolynomial& b0) {
  IntPolynomial a = primitive_part(a0), b = primitive_part(b0);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = primitive_part(pseudo_remainder(a, b));
    a = b;
    b = r;
  }
  return primitive_part(a);
}

IntPolynomial IntPolynomial::squarefree_part() const {
  if (degree() <= 1) return *this;
  IntPolynomial g = gcd(*this, derivative());
  if (g.degree() == 0) return *this;
  return exact_divide(*this, g);
}

bool IntPolynomial::is_reciprocal() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != c_[c_.size() - 1 - i]) return false;
  return true;
}

std::vector<unsigned> IntPolynomial::mod_reduction(unsigned p) const {
  std::vector<unsigned> out(c_.size());
  mpz_class m = static_cast<long>(p);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    mpz_class r = c_[i] % m;
    if (r < 0) r += m;
    out[i] = static_cast<unsigned>(r.get_ui());
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    mpz_class a = c_[i];
    if (!first) os << (a < 0 ? " - " : " + ");
    else if (a < 0)
      os << "-";
    first = false;
    mpz_class mag = abs(a);
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) {
      os << var;
      if (i >= 2) os << "^" << i;
    }
  }
  return os.str();
}

IntPolynomial char_poly(const std::vector<std::vector<long long>>& m) {
  std::vector<std::vector<mpz_class>> z(m.size(), std::vector<mpz_class>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) z[i][j] = static_cast<long>(m[i][j]);
  return char_poly_mpz(z);
}

IntPolynomial char_poly_mpz(const std::vector<std::vector<mpz_class>>& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw Error("char_poly: matrix not square");
  std::vector<mpz_class> c(n + 1, 0);
  c[n] = 1;
  // Faddeev-LeVerrier: N_{k} = M*N_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(M*N_{k-1})/k
  std::vector<std::vector<mpz_class>> N(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) N[i][i] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<mpz_class>> A(n, std::vector<mpz_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (m[i][l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) A[i][j] += m[i][l] * N[l][j];
      }
    mpz_class tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += A[i][i];
    mpz_class ck = -tr / static_cast<long>(k);
    if (ck * static_cast<long>(k) != -tr) throw Error("char_poly: trace not divisible");
    c[n - k] = ck;
    N = std::move(A);
    for (std::size_t i = 0; i < n; ++i) N[i][i] += ck;
  }
  return IntPolynomial(std::move(c));
}

std::vector<std::complex<long double>> polynomial_roots(const IntPolynomial& p0) {
  using C = std::complex<long double>;
  IntPolynomial p = p0.squarefree_part();
  const int d = p.degree();
  if (d <= 0) return {};

  std::vector<C> c(static_cast<std::size_t>(d) + 1);
  long double scale = 0;
  for (int i = 0; i <= d; ++i)
    scale = std::max(scale, static_cast<long double>(std::fabs(p.coeffs()[static_cast<std::size_t>(i)].get_d())));
  for (int i = 0; i <= d; ++i)
    c[static_cast<std::size_t>(i)] = static_cast<long double>(p.coeffs()[static_cast<std::size_t>(i)].get_d()) / scale;

  auto eval = [&](C z, C& val, C& der) {
    val = c[static_cast<std::size_t>(d)];
    der = 0;
    for (int i = d - 1; i >= 0; --i) {
      der = der * z + val;
      val = val * z + c[static_cast<std::size_t>(i)];
    }
  };

  long double r = 0;
  for (int i = 0; i < d; ++i)
    r = std::max(r, std::abs(c[static_cast<std::size_t>(i)] / c[static_cast<std::size_t>(d)]));
  r = 1.0L + r;

  std::vector<C> z(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    long double ang = 2.0L * 3.14159265358979323846L * i / d + 0.4L;
    z[static_cast<std::size_t>(i)] = std::polar(r * 0.7L, ang);
  }

  for (int iter = 0; iter < 400; ++iter) {
    long double worst = 0;
    for (int i = 0; i < d; ++i) {
      C val, der;
      eval(z[static_cast<std::size_t>(i)], val, der);
      if (std::abs(der) == 0.0L) {
        z[static_cast<std::size_t>(i)] += C(1e-6L, 1e-6L);
        worst = 1;
        continue;
      }
      C w = val / der;
      C s = 0;
      for (int j = 0; j < d; ++j)
        if (j != i) s += 1.0L / (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
      C corr = w / (1.0L - w * s);
      z[static_cast<std::size_t>(i)] -= corr;
      worst = std::max(worst, std::abs(corr) / (1.0L + std::abs(z[static_cast<std::size_t>(i)])));
    }
    if (worst < 1e-19L) break;
  }
  // Newton polish
  for (int i = 0; i < d; ++i) {
    for (int it = 0; it < 4; ++it) {
      C val, der;
      eval(z[static_cast<std::size_t>(i)], val, der);
      if (std::abs(der) == 0.0L) break;
      z[static_cast<std::size_t>(i)] -= val / der;
    }
  }
  return z;
}

namespace {

// division of a by b over F_p, returns remainder; both coefficient-ascending
std::vector<unsigned> mod_rem(std::vector<unsigned> a, const std::vector<unsigned>& b, unsigned p) {
  auto inv_mod = [p](unsigned x) {
    long long t = 1, pw = x % p;
    long long e = p - 2;  // p prime
    long long base = pw;
    t = 1;
    while (e > 0) {
      if (e & 1) t = t * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<unsigned>(t);
  };
  const unsigned lb_inv = inv_mod(b.back());
  while (a.size() >= b.size() && !a.empty()) {
    unsigned f = static_cast<unsigned>(static_cast<unsigned long long>(a.back()) * lb_inv % p);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      unsigned sub = static_cast<unsigned>(static_cast<unsigned long long>(f) * b[i] % p);
      a[shift + i] = (a[shift + i] + p - sub) % p;
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

}  // namespace

bool irreducible_mod_p(const std::vector<unsigned>& coeffs, unsigned p) {
  std::vector<unsigned> f = coeffs;
  while (!f.empty() && f.back() == 0) f.pop_back();
  if (f.size() <= 1) return false;  // constants are units, not irreducible
  const int d = static_cast<int>(f.size()) - 1;
  if (d == 1) return true;
  // enumerate monic divisors of degree 1..d/2
  for (int k = 1; 2 * k <= d; ++k) {
    std::vector<unsigned> g(static_cast<std::size_t>(k) + 1, 0);
    g.back() = 1;
    long long total = 1;
    for (int i = 0; i < k; ++i) total *= p;
    for (long long idx = 0; idx < total; ++idx) {
      long long t = idx;
      for (int i = 0; i < k; ++i) {
        g[static_cast<std::size_t>(i)] = static_cast<unsigned>(t % p);
        t /= p;
      }
      if (mod_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

mpz_class cubic_discriminant(const mpz_class& a, const mpz_class& b, const mpz_class& c) {
  return 18 * a * b * c - 4 * a * a * a * c + a * a * b * b - 4 * b * b * b - 27 * c * c;
}

}  // namespace iemlab
