#ifndef IEMLAB_TESTS_ORACLES_HPP
#define IEMLAB_TESTS_ORACLES_HPP

// Brute-force reference computations, independent of the Bellman engine.

#include <complex>
#include <limits>

#include "iemlab/spectral.hpp"
#include "iemlab/substitution.hpp"

namespace iemlab::testing {

// min over all depth-n label chains from a of Re(tau * z^(n)(x)), by full
// enumeration.
inline double brute_force_v(const Substitution& sigma, const EigenData& eig, Letter a,
                            double angle, int depth) {
  const Complex tau = std::polar(1.0, angle);
  const Complex binv = 1.0 / eig.beta;
  double best = std::numeric_limits<double>::infinity();
  struct Rec {
    const Substitution& s;
    const EigenData& e;
    Complex tau, binv;
    double* best;
    void walk(Letter c, Complex z, Complex factor, int remaining) {
      if (remaining == 0) {
        double val = std::real(tau * z);
        if (val < *best) *best = val;
        return;
      }
      for (std::size_t i = s.label_begin(c); i < s.label_end(c); ++i) {
        const Label& l = s.labels()[i];
        walk(l.center, z + factor * binv * e.gamma_of(l.prefix), factor * binv, remaining - 1);
      }
    }
  } rec{sigma, eig, tau, binv, &best};
  rec.walk(a, Complex(0, 0), Complex(1, 0), depth);
  return best;
}

// restricted version: the first chain entry is pinned to the given label
inline double brute_force_v_restricted(const Substitution& sigma, const EigenData& eig,
                                       int label_index, double angle, int depth) {
  const Complex tau = std::polar(1.0, angle);
  const Complex binv = 1.0 / eig.beta;
  const Label& l0 = sigma.labels()[static_cast<std::size_t>(label_index)];
  double best = std::numeric_limits<double>::infinity();
  struct Rec {
    const Substitution& s;
    const EigenData& e;
    Complex tau, binv;
    double* best;
    void walk(Letter c, Complex z, Complex factor, int remaining) {
      if (remaining == 0) {
        double val = std::real(tau * z);
        if (val < *best) *best = val;
        return;
      }
      for (std::size_t i = s.label_begin(c); i < s.label_end(c); ++i) {
        const Label& l = s.labels()[i];
        walk(l.center, z + factor * binv * e.gamma_of(l.prefix), factor * binv, remaining - 1);
      }
    }
  } rec{sigma, eig, tau, binv, &best};
  rec.walk(l0.center, binv * eig.gamma_of(l0.prefix), binv, depth - 1);
  return best;
}

}  // namespace iemlab::testing

#endif
