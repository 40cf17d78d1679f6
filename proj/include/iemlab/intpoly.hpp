#ifndef IEMLAB_INTPOLY_HPP
#define IEMLAB_INTPOLY_HPP

#include <gmpxx.h>

#include <complex>
#include <string>
#include <vector>

namespace iemlab {

// Exact integer polynomial, coefficients ascending, leading coefficient nonzero
// (the zero polynomial has an empty coefficient vector).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);
  static IntPolynomial from_ints(const std::vector<long long>& coeffs);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const mpz_class& coeff(std::size_t i) const;  // 0 beyond degree
  const std::vector<mpz_class>& coeffs() const { return c_; }

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial operator-() const;
  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

  IntPolynomial derivative() const;
  mpz_class eval(const mpz_class& x) const;
  std::complex<long double> eval(std::complex<long double> z) const;

  // Content-free gcd via subresultant pseudo-remainders; result is primitive
  // with positive leading coefficient.
  static IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);
  // p / gcd(p, p'): same roots, all simple.
  IntPolynomial squarefree_part() const;

  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  // t^deg * p(1/t) == p
  bool is_reciprocal() const;

  // coefficients reduced into [0, p)
  std::vector<unsigned> mod_reduction(unsigned p) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

// det(tI - M), monic, exact (Faddeev-LeVerrier over mpz).
IntPolynomial char_poly(const std::vector<std::vector<long long>>& m);
IntPolynomial char_poly_mpz(const std::vector<std::vector<mpz_class>>& m);

// All complex roots of a squarefree-reduced polynomial (Aberth iteration on
// long double with Newton polish). Roots of the squarefree part, so
// multiplicities collapse.
std::vector<std::complex<long double>> polynomial_roots(const IntPolynomial& p);

// Brute-force irreducibility over F_p (trial division by all monic factors of
// degree <= deg/2); intended for small p and degree.
bool irreducible_mod_p(const std::vector<unsigned>& coeffs, unsigned p);

// Discriminant of a monic cubic t^3 + a t^2 + b t + c, exact.
mpz_class cubic_discriminant(const mpz_class& a, const mpz_class& b, const mpz_class& c);

}  // namespace iemlab

#endif
