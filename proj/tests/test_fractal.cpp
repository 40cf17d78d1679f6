#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "iemlab/fractal.hpp"
#include "iemlab/spectral.hpp"
#include "oracles.hpp"

using namespace iemlab;
using iemlab::testing::ay_substitution;
using iemlab::testing::brute_force_v;
using iemlab::testing::brute_force_v_restricted;

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

struct AyFixture {
  Substitution sigma;
  EigenData eig;
  ValueEngine engine;
  AyFixture()
      : sigma(ay_substitution()),
        eig(select_beta(sigma,
                        [] {
                          BetaOptions o;
                          o.anchor = {std::size_t{7}, Complex(-1.0, 0.0)};
                          return o;
                        }())),
        engine(sigma, eig) {}
};

AyFixture& ay() {
  static AyFixture f;
  return f;
}

// AY with an extra letter "0" mapping to 2583; its two extreme labels
// (eps,2,583) and (258,3,eps) tie for every direction since gamma(258) = 0
// and the fractals of 2 and 3 coincide.
struct DegenerateFixture {
  Substitution sigma;
  EigenData eig;
  ValueEngine engine;
  static Substitution build() {
    Substitution base = ay_substitution();
    std::vector<std::string> names = base.names();
    names.push_back("0");
    std::vector<Word> images;
    for (Letter a = 0; a < 9; ++a) images.push_back(base.image(a));
    images.push_back(Word({1, 4, 7, 2}));  // 2 5 8 3
    return Substitution(std::move(names), std::move(images));
  }
  DegenerateFixture()
      : sigma(build()),
        eig(select_beta(sigma,
                        [] {
                          BetaOptions o;
                          o.anchor = {std::size_t{7}, Complex(-1.0, 0.0)};
                          return o;
                        }())),
        engine(sigma, eig) {}
};

double closed_form_angle(const EigenData& e, int sign, int k) {
  return Direction::from_angle(sign * kTwoPi / 4 + k * e.phi).angle;
}

bool in_ccw_arc(double x, double from, double to) {
  // does x lie on the counterclockwise arc from `from` to `to`?
  auto norm = [](double a) { return Direction::from_angle(a).angle; };
  x = norm(x);
  from = norm(from);
  to = norm(to);
  double span = to - from;
  if (span <= 0) span += kTwoPi;
  double off = x - from;
  if (off < 0) off += kTwoPi;
  return off > 0 && off < span;
}

}  // namespace

TEST_CASE("v_depth trivial cases") {
  auto& f = ay();
  CHECK(f.engine.v_depth({0, Direction::from_angle(1.0), 0, {}}) == 0.0);
  CHECK(f.engine.v_depth({4, Direction::from_angle(2.0), 0, {}}) == 0.0);
  // letter 8 has the single label (eps,2,eps): first-level head is zero
  CHECK(f.engine.v_depth({7, Direction::from_angle(0.7), 1, {}}) == 0.0);
  CHECK_THROWS_AS(f.engine.v_depth({0, Direction::from_angle(0.0), 10000, {}}), DepthCapExceeded);
}

TEST_CASE("Bellman value equals brute-force enumeration") {
  auto& f = ay();
  for (Letter a = 0; a < 9; ++a) {
    for (int depth = 1; depth <= 8; ++depth) {
      for (int g = 0; g < 64; g += (depth >= 7 ? 4 : 1)) {
        const double angle = kTwoPi * g / 64;
        const double lhs = f.engine.v_depth({a, Direction::from_angle(angle), depth, {}});
        const double rhs = brute_force_v(f.sigma, f.eig, a, angle, depth);
        REQUIRE(std::fabs(lhs - rhs) <= 1e-12);
      }
    }
  }
}

TEST_CASE("restricted values decompose the minimum") {
  auto& f = ay();
  for (Letter a = 0; a < 9; ++a) {
    for (int g = 0; g < 16; ++g) {
      const double angle = kTwoPi * g / 16;
      double m = std::numeric_limits<double>::infinity();
      for (std::size_t li = f.sigma.label_begin(a); li < f.sigma.label_end(a); ++li) {
        const double r =
            f.engine.v_depth({a, Direction::from_angle(angle), 9, static_cast<int>(li)});
        CHECK(std::fabs(r - brute_force_v_restricted(f.sigma, f.eig, static_cast<int>(li), angle,
                                                     9)) <= 1e-12);
        m = std::min(m, r);
      }
      CHECK(f.engine.v_depth({a, Direction::from_angle(angle), 9, {}}) == doctest::Approx(m).epsilon(1e-14));
    }
  }
}

TEST_CASE("monotone bracketing of restricted values") {
  auto& f = ay();
  const int n = 6;
  for (Letter a = 0; a < 9; ++a) {
    for (std::size_t li = f.sigma.label_begin(a); li < f.sigma.label_end(a); ++li) {
      for (int g = 0; g < 64; g += 4) {
        const double angle = kTwoPi * g / 64;
        const double vn = f.engine.v_depth({a, Direction::from_angle(angle), n, static_cast<int>(li)});
        const double vm =
            f.engine.v_depth({a, Direction::from_angle(angle), n + 20, static_cast<int>(li)});
        const double d = vn - vm;
        CHECK(d >= -1e-12);
        CHECK(d <= f.eig.C * std::pow(1.0 / f.eig.abs_beta, n) + 1e-12);
      }
    }
  }
}

TEST_CASE("v is Lipschitz with constant C") {
  auto& f = ay();
  const int depth = 40;
  for (Letter a : {0, 3, 7}) {
    double prev = f.engine.v_depth({a, Direction::from_angle(0.0), depth, {}});
    for (int g = 1; g <= 64; ++g) {
      const double angle = kTwoPi * g / 64;
      const double cur = f.engine.v_depth({a, Direction::from_angle(angle), depth, {}});
      CHECK(std::fabs(cur - prev) <= f.eig.C * (kTwoPi / 64) + 1e-12);
      prev = cur;
    }
  }
}

TEST_CASE("certified argmin: single label, generic direction, true tie") {
  auto& f = ay();
  auto c8 = f.engine.certified_argmin(7, Direction::from_angle(2.1), 200);
  CHECK_FALSE(c8.ambiguous);
  CHECK(c8.depth_used == 1);
  CHECK(c8.winner == static_cast<int>(f.sigma.label_begin(7)));

  auto c2 = f.engine.certified_argmin(1, Direction::from_angle(1.0), 200);
  CHECK_FALSE(c2.ambiguous);
  // cross-check against depth-12 brute force restricted minima
  double v0 = brute_force_v_restricted(f.sigma, f.eig, static_cast<int>(f.sigma.label_begin(1)),
                                       1.0, 12);
  double v1 = brute_force_v_restricted(f.sigma, f.eig,
                                       static_cast<int>(f.sigma.label_begin(1)) + 1, 1.0, 12);
  const int expect = v0 < v1 ? static_cast<int>(f.sigma.label_begin(1))
                             : static_cast<int>(f.sigma.label_begin(1)) + 1;
  CHECK(c2.winner == expect);

  // exact tie at i*beta0^2
  const double tie = closed_form_angle(f.eig, +1, 2);
  auto ct = f.engine.certified_argmin(1, Direction::from_angle(tie), 200);
  CHECK(ct.ambiguous);
}

TEST_CASE("extreme chains follow certified winners and obey the tail bound") {
  auto& f = ay();
  // first entry from letter 8 is always its single label
  auto ch8 = f.engine.extreme_chain(7, Direction::from_angle(0.9), 3);
  CHECK(ch8[0].label == static_cast<int>(f.sigma.label_begin(7)));

  // partial sums approach v_a from above at rate C|beta|^{-n}
  for (double ang : {1.0, 0.3, 2.2, 4.0, 5.5}) {
    auto chain = f.engine.extreme_chain(0, Direction::from_angle(ang), 12);
    const Complex tau = std::polar(1.0, ang);
    Complex z = 0, fac = 1;
    const double v_inf = f.engine.v_depth({0, Direction::from_angle(ang), 190, {}});
    for (int n = 1; n <= 12; ++n) {
      fac /= f.eig.beta;
      z += fac * f.eig.gamma_of(f.sigma.labels()[static_cast<std::size_t>(chain[static_cast<std::size_t>(n - 1)].label)].prefix);
      const double diff = std::real(tau * z) - v_inf;
      CHECK(diff >= -1e-10);
      CHECK(diff <= f.eig.C * std::pow(1.0 / f.eig.abs_beta, n) + 1e-10);
    }
  }

  // tie direction: branch point flagged at the first entry
  const double tie = closed_form_angle(f.eig, +1, 2);
  auto cht = f.engine.extreme_chain(1, Direction::from_angle(tie), 12);
  CHECK(cht[0].ambiguous);
  CHECK(cht[0].alternative >= 0);
}

TEST_CASE("Psi table for the AY substitution") {
  auto& f = ay();
  std::vector<PsiResult> psi(9);
  for (Letter a = 0; a < 9; ++a) psi[static_cast<std::size_t>(a)] = f.engine.compute_psi(a);

  // letters 8 and 9: empty
  CHECK(psi[7].enclosures.empty());
  CHECK(psi[8].enclosures.empty());

  // letters 1,2,4,5,7 (and mirrors 3,6): exactly two tight enclosures
  for (Letter a : {0, 1, 2, 3, 4, 5, 6}) {
    REQUIRE(psi[static_cast<std::size_t>(a)].enclosures.size() == 2);
    CHECK(psi[static_cast<std::size_t>(a)].unresolved.empty());
    for (const auto& enc : psi[static_cast<std::size_t>(a)].enclosures)
      CHECK(enc.width <= 1e-12);
  }

  // Psi_2 = {i beta0^2, -i beta0^2} to 1e-10
  {
    const double plus = closed_form_angle(f.eig, +1, 2);
    const double minus = closed_form_angle(f.eig, -1, 2);
    double d1 = 1e9, d2 = 1e9;
    for (const auto& enc : psi[1].enclosures) {
      d1 = std::min(d1, circle_dist(enc.midpoint(), plus));
      d2 = std::min(d2, circle_dist(enc.midpoint(), minus));
    }
    CHECK(d1 <= 1e-10);
    CHECK(d2 <= 1e-10);
    for (const auto& enc : psi[1].enclosures) {
      REQUIRE(enc.closed_form.has_value());
      CHECK(enc.closed_form->k == 2);
    }
  }

  // Psi_1 contains -i beta0^4; the other element is eta_1 with
  // arg(eta_1) strictly inside the ccw arc (phi - pi/2, 2 phi - 3 pi/2 mod 2 pi)
  {
    const double target = closed_form_angle(f.eig, -1, 4);
    const PsiEnclosure* matched = nullptr;
    const PsiEnclosure* eta = nullptr;
    for (const auto& enc : psi[0].enclosures)
      (circle_dist(enc.midpoint(), target) <= 1e-10 ? matched : eta) = &enc;
    REQUIRE(matched != nullptr);
    REQUIRE(eta != nullptr);
    CHECK(in_ccw_arc(eta->midpoint(), f.eig.phi - kTwoPi / 4, 2 * f.eig.phi - 3 * kTwoPi / 4));
    CHECK_FALSE(eta->closed_form.has_value());

    // Psi_5 = {i beta0^5, -beta0 * eta_1}
    const double expected5 = Direction::from_angle(eta->midpoint() + kTwoPi / 2 + f.eig.phi).angle;
    double best = 1e9;
    for (const auto& enc : psi[4].enclosures) best = std::min(best, circle_dist(enc.midpoint(), expected5));
    CHECK(best <= 1e-10);
  }

  // Psi_4 = {i beta0^5, i |beta^-1 + beta^-3| / (beta^-1 + beta^-3)}
  {
    const Complex w = 1.0 / f.eig.beta + 1.0 / (f.eig.beta * f.eig.beta * f.eig.beta);
    const double special = Direction::from_complex(Complex(0, 1) * std::abs(w) / w).angle;
    const double i5 = closed_form_angle(f.eig, +1, 5);
    double ds = 1e9, d5 = 1e9;
    for (const auto& enc : psi[3].enclosures) {
      ds = std::min(ds, circle_dist(enc.midpoint(), special));
      d5 = std::min(d5, circle_dist(enc.midpoint(), i5));
    }
    CHECK(ds <= 1e-10);
    CHECK(d5 <= 1e-10);
  }

  // Psi_7: i beta0^5 plus eta_7 inside the ccw arc (4 phi - 9 pi/2 mod 2 pi, 2 pi)
  {
    const double i5 = closed_form_angle(f.eig, +1, 5);
    const PsiEnclosure* matched = nullptr;
    const PsiEnclosure* eta = nullptr;
    for (const auto& enc : psi[6].enclosures)
      (circle_dist(enc.midpoint(), i5) <= 1e-10 ? matched : eta) = &enc;
    REQUIRE(matched != nullptr);
    REQUIRE(eta != nullptr);
    CHECK(in_ccw_arc(eta->midpoint(), 4 * f.eig.phi - 9 * kTwoPi / 4, 0.0));
  }

  // mirrors: Psi_3 = Psi_2, Psi_6 = Psi_5
  for (int k = 0; k < 2; ++k) {
    CHECK(circle_dist(psi[2].enclosures[static_cast<std::size_t>(k)].midpoint(),
                      psi[1].enclosures[static_cast<std::size_t>(k)].midpoint()) <= 1e-11);
    CHECK(circle_dist(psi[5].enclosures[static_cast<std::size_t>(k)].midpoint(),
                      psi[4].enclosures[static_cast<std::size_t>(k)].midpoint()) <= 1e-11);
  }
}

TEST_CASE("separation diagnostics at a tie") {
  auto& f = ay();
  const double tie = closed_form_angle(f.eig, +1, 2);
  auto [d1, d2] = f.engine.separation(1, Direction::from_angle(tie), 30);
  CHECK(d1 > 0.0);
  CHECK(d1 <= d2 + 1e-15);
  CHECK(d1 > 1e-3);  // u.r.p. witness at finite depth

  CHECK_THROWS_AS(f.engine.separation(1, Direction::from_angle(1.0), 30), NotATie);
}

TEST_CASE("degenerate substitution with duplicated sub-fractals has D1 = 0") {
  DegenerateFixture g;
  const Letter extra = 9;  // letter "0"
  // gamma("258") vanishes, so the outer labels tie everywhere
  auto c = g.engine.certified_argmin(extra, Direction::from_angle(1.234), 200);
  // the tie is between the first and last label of sigma("0")
  CHECK(c.ambiguous);
  auto [d1, d2] = g.engine.separation(extra, Direction::from_angle(1.234), 25);
  CHECK(d1 <= 1e-9);
  (void)d2;

  // compute_psi reports the whole circle unresolved rather than failing
  PsiResult r = g.engine.compute_psi(extra, 64, 1e-12);
  CHECK(r.enclosures.empty());
  CHECK_FALSE(r.unresolved.empty());
}

TEST_CASE("render_cloud enumerates deterministically and stays inside radius C") {
  auto& f = ay();
  FractalCloud c0 = f.engine.render_cloud(1, 0);
  REQUIRE(c0.points.size() == 1);
  CHECK(std::abs(c0.points[0]) == 0.0);

  FractalCloud c12a = f.engine.render_cloud(1, 12);
  FractalCloud c12b = f.engine.render_cloud(1, 12);
  REQUIRE(c12a.points.size() == 4096);
  CHECK_FALSE(c12a.sampled);
  for (std::size_t i = 0; i < c12a.points.size(); ++i) CHECK(c12a.points[i] == c12b.points[i]);
  for (const Complex& z : c12a.points) CHECK(std::abs(z) <= f.eig.C);

  // F_2 = F_3: symmetric Hausdorff distance of depth-12 clouds within 2 C |beta|^-12
  FractalCloud c2 = f.engine.render_cloud(1, 12);
  FractalCloud c3 = f.engine.render_cloud(2, 12);
  auto directed = [](const std::vector<Complex>& from, const std::vector<Complex>& to) {
    double h = 0;
    for (const Complex& x : from) {
      double m = 1e18;
      for (const Complex& y : to) m = std::min(m, std::abs(x - y));
      h = std::max(h, m);
    }
    return h;
  };
  const double bound = 2 * f.eig.C * std::pow(1.0 / f.eig.abs_beta, 12);
  CHECK(directed(c2.points, c3.points) <= bound);
  CHECK(directed(c3.points, c2.points) <= bound);

  // deep render switches to seeded sampling
  FractalCloud cs = f.engine.render_cloud(1, 40, 1000, 99);
  CHECK(cs.sampled);
  CHECK(cs.points.size() == 1000);
  for (const Complex& z : cs.points) CHECK(std::abs(z) <= f.eig.C + 1e-12);
}
