#include "iemlab/fractal.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "iemlab/errors.hpp"

namespace iemlab {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

double PsiEnclosure::midpoint() const { return Direction::from_angle(lo + width / 2).angle; }

ValueEngine::ValueEngine(const Substitution& sigma, const EigenData& eig, int depth_cap)
    : sigma_(&sigma), eig_(eig), depth_cap_(depth_cap) {
  prefix_gamma_.reserve(sigma.labels().size());
  for (const Label& l : sigma.labels()) prefix_gamma_.push_back(eig_.gamma_of(l.prefix));
  beta_inv_ = 1.0 / eig_.beta;
  abs_beta_inv_ = 1.0 / eig_.abs_beta;
}

double ValueEngine::restricted_term(int label_index, double angle, int depth) {
  const Label& l = sigma_->labels()[static_cast<std::size_t>(label_index)];
  const Complex tau = std::polar(1.0, angle);
  const double head = std::real(beta_inv_ * tau * prefix_gamma_[static_cast<std::size_t>(label_index)]);
  return head + abs_beta_inv_ * v_rec(l.center, angle - eig_.phi, depth - 1);
}

double ValueEngine::v_rec(Letter a, double angle, int depth) {
  if (depth <= 0) return 0.0;
  angle = Direction::from_angle(angle).angle;
  Key key{a, depth, std::bit_cast<std::uint64_t>(angle)};
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  double best = 0.0;
  bool first = true;
  for (std::size_t i = sigma_->label_begin(a); i < sigma_->label_end(a); ++i) {
    const double val = restricted_term(static_cast<int>(i), angle, depth);
    if (first || val < best) best = val;
    first = false;
  }
  memo_.emplace(key, best);
  return best;
}

double ValueEngine::v_depth(const ValueQuery& q) {
  if (q.depth < 0) throw Error("v_depth: negative depth");
  if (q.depth > depth_cap_) throw DepthCapExceeded("v_depth: depth exceeds cap");
  if (q.depth == 0) return 0.0;
  if (q.restrict_label) {
    const int li = *q.restrict_label;
    const Label& l = sigma_->labels()[static_cast<std::size_t>(li)];
    if (l.parent != q.letter) throw Error("v_depth: restricting label not in A-bar_a");
    return restricted_term(li, q.tau.angle, q.depth);
  }
  return v_rec(q.letter, q.tau.angle, q.depth);
}

void ValueEngine::best_two(Letter a, double angle, int depth, int& best, double& best_v,
                           int& second, double& second_v) {
  best = second = -1;
  best_v = second_v = 0.0;
  for (std::size_t i = sigma_->label_begin(a); i < sigma_->label_end(a); ++i) {
    const double val = restricted_term(static_cast<int>(i), angle, depth);
    if (best < 0 || val < best_v) {
      second = best;
      second_v = best_v;
      best = static_cast<int>(i);
      best_v = val;
    } else if (second < 0 || val < second_v) {
      second = static_cast<int>(i);
      second_v = val;
    }
  }
}

CertifiedArgmin ValueEngine::certified_argmin(Letter a, Direction tau, int max_depth) {
  if (max_depth > depth_cap_) throw DepthCapExceeded("certified_argmin: max_depth exceeds cap");
  CertifiedArgmin out;
  const double angle = tau.angle;

  if (sigma_->label_end(a) - sigma_->label_begin(a) == 1) {
    out.winner = static_cast<int>(sigma_->label_begin(a));
    out.depth_used = 1;
    out.gap = std::numeric_limits<double>::infinity();
    out.bound = eig_.C * abs_beta_inv_ + 10 * eig_.eps_num;
    return out;
  }

  int n = 1;
  while (true) {
    int best, second;
    double best_v, second_v;
    best_two(a, angle, n, best, best_v, second, second_v);
    const double bound = eig_.C * std::pow(abs_beta_inv_, n) + 10 * eig_.eps_num;
    out.winner = best;
    out.runner_up = second;
    out.depth_used = n;
    out.gap = second_v - best_v;
    out.bound = bound;
    if (out.gap > bound) {
      out.ambiguous = false;
      return out;
    }
    if (n >= max_depth) break;
    n = std::min(max_depth, n * 2);
  }
  out.ambiguous = true;
  // canonical tie order: lower label index first
  if (out.runner_up >= 0 && out.runner_up < out.winner && out.gap <= out.bound)
    std::swap(out.winner, out.runner_up);
  return out;
}

std::vector<ChainEntry> ValueEngine::extreme_chain(Letter a, Direction tau, int length) {
  std::vector<ChainEntry> chain;
  chain.reserve(static_cast<std::size_t>(length));
  Letter cur = a;
  double angle = tau.angle;
  for (int m = 0; m < length; ++m) {
    CertifiedArgmin cert = certified_argmin(cur, Direction::from_angle(angle), depth_cap_);
    ChainEntry e;
    e.label = cert.winner;
    e.ambiguous = cert.ambiguous;
    e.alternative = cert.ambiguous ? cert.runner_up : -1;
    chain.push_back(e);
    cur = sigma_->labels()[static_cast<std::size_t>(cert.winner)].center;
    angle -= eig_.phi;
  }
  return chain;
}

namespace {

std::optional<ClosedFormMatch> match_closed_form(const EigenData& eig, double angle,
                                                 double tol = 1e-10) {
  for (int k = 0; k <= 8; ++k) {
    for (int sign : {+1, -1}) {
      const double cand =
          Direction::from_angle(sign * kTwoPi / 4 + k * eig.phi).angle;
      if (circle_dist(cand, angle) <= tol) return ClosedFormMatch{sign, k, cand};
    }
  }
  return std::nullopt;
}

}  // namespace

PsiResult ValueEngine::compute_psi(Letter a, int grid, double psi_tol) {
  if (grid < 32) throw Error("compute_psi: grid too coarse");
  if (psi_tol < 1e-13) throw Error("compute_psi: psi_tol below certification floor");
  PsiResult res;
  res.letter = a;

  if (sigma_->label_end(a) - sigma_->label_begin(a) == 1) return res;  // single label: no ties

  const int probe_depth = depth_cap_;
  std::vector<CertifiedArgmin> at(static_cast<std::size_t>(grid));
  for (int i = 0; i < grid; ++i)
    at[static_cast<std::size_t>(i)] =
        certified_argmin(a, Direction::from_angle(kTwoPi * i / grid), probe_depth);

  auto winner_at = [&](double angle) {
    return certified_argmin(a, Direction::from_angle(angle), probe_depth);
  };

  // walk consecutive certified grid points; ambiguous runs in between are
  // absorbed into the surrounding bracket (a tie in the certification shadow
  // of a grid point would otherwise slip through)
  std::vector<int> certified;
  for (int i = 0; i < grid; ++i)
    if (!at[static_cast<std::size_t>(i)].ambiguous) certified.push_back(i);
  if (certified.empty()) {
    res.unresolved.emplace_back(0.0, kTwoPi);
    return res;
  }

  struct Bracket {
    double lo, hi;
    int la, lb;
  };
  std::vector<Bracket> work;
  for (std::size_t s = 0; s < certified.size(); ++s) {
    const int i = certified[s];
    const int j = certified[(s + 1) % certified.size()];
    const int wa = at[static_cast<std::size_t>(i)].winner;
    const int wb = at[static_cast<std::size_t>(j)].winner;
    double lo = kTwoPi * i / grid;
    double hi = kTwoPi * j / grid;
    if (hi <= lo) hi += kTwoPi;  // wrap-around bracket
    if (wa == wb) {
      if (j != (i + 1) % grid) res.unresolved.emplace_back(lo, hi);  // hidden ambiguous run
      continue;
    }
    work.push_back({lo, hi, wa, wb});
  }

  while (!work.empty()) {
    Bracket br = work.back();
    work.pop_back();
    bool stuck = false;
    while (br.hi - br.lo > psi_tol) {
      const double mid = 0.5 * (br.lo + br.hi);
      CertifiedArgmin wm = winner_at(mid);
      if (!wm.ambiguous && wm.winner == br.la) {
        br.lo = mid;
      } else if (!wm.ambiguous && wm.winner == br.lb) {
        br.hi = mid;
      } else if (!wm.ambiguous) {
        // a third label wins inside: split into two crossings
        work.push_back({br.lo, mid, br.la, wm.winner});
        work.push_back({mid, br.hi, wm.winner, br.lb});
        stuck = true;
        break;
      } else {
        // Ambiguous midpoint: the tie sits inside the certification shadow.
        // Push each endpoint to the edge of its certified region separately.
        double a0 = br.lo, a1 = mid;
        while (a1 - a0 > psi_tol / 8) {
          const double m = 0.5 * (a0 + a1);
          CertifiedArgmin w = winner_at(m);
          if (!w.ambiguous && w.winner == br.la)
            a0 = m;
          else
            a1 = m;
        }
        double b0 = mid, b1 = br.hi;
        while (b1 - b0 > psi_tol / 8) {
          const double m = 0.5 * (b0 + b1);
          CertifiedArgmin w = winner_at(m);
          if (!w.ambiguous && w.winner == br.lb)
            b1 = m;
          else
            b0 = m;
        }
        br.lo = a0;
        br.hi = b1;
        if (br.hi - br.lo > psi_tol) {
          res.unresolved.emplace_back(br.lo, br.hi);
          stuck = true;
        }
        break;
      }
    }
    if (stuck) continue;
    PsiEnclosure enc;
    enc.letter = a;
    enc.lo = Direction::from_angle(br.lo).angle;
    enc.width = br.hi - br.lo;
    enc.label_left = br.la;
    enc.label_right = br.lb;
    enc.closed_form = match_closed_form(eig_, enc.midpoint());
    res.enclosures.push_back(enc);
  }
  std::sort(res.enclosures.begin(), res.enclosures.end(),
            [](const PsiEnclosure& x, const PsiEnclosure& y) { return x.lo < y.lo; });
  return res;
}

std::pair<double, double> ValueEngine::separation(Letter a, Direction psi, int depth) {
  CertifiedArgmin cert = certified_argmin(a, psi, depth_cap_);
  if (!cert.ambiguous) throw NotATie("separation: certified argmin resolves at psi");
  const int la = cert.winner, lb = cert.runner_up;

  // partial sums of all extreme chains in a sub-fractal, branching on
  // ambiguity, capped
  auto collect = [&](int first_label) {
    struct State {
      Letter c;
      double angle;
      Complex z;
      Complex factor;
    };
    const Label& l0 = sigma_->labels()[static_cast<std::size_t>(first_label)];
    std::vector<State> states{State{l0.center, psi.angle - eig_.phi,
                                    beta_inv_ * prefix_gamma_[static_cast<std::size_t>(first_label)],
                                    beta_inv_}};
    for (int m = 1; m < depth; ++m) {
      std::vector<State> next;
      for (const State& s : states) {
        CertifiedArgmin c = certified_argmin(s.c, Direction::from_angle(s.angle), depth_cap_);
        std::vector<int> branches{c.winner};
        if (c.ambiguous && c.runner_up >= 0 && next.size() + states.size() < 64)
          branches.push_back(c.runner_up);
        for (int li : branches) {
          const Label& l = sigma_->labels()[static_cast<std::size_t>(li)];
          State t;
          t.factor = s.factor * beta_inv_;
          t.z = s.z + t.factor * prefix_gamma_[static_cast<std::size_t>(li)];
          t.c = l.center;
          t.angle = s.angle - eig_.phi;
          next.push_back(t);
        }
      }
      states = std::move(next);
    }
    std::vector<Complex> zs;
    zs.reserve(states.size());
    for (const State& s : states) zs.push_back(s.z);
    return zs;
  };

  std::vector<Complex> za = collect(la), zb = collect(lb);
  double d1 = std::numeric_limits<double>::infinity(), d2 = 0.0;
  for (const Complex& x : za)
    for (const Complex& y : zb) {
      const double d = std::abs(x - y);
      d1 = std::min(d1, d);
      d2 = std::max(d2, d);
    }
  return {d1, d2};
}

FractalCloud ValueEngine::render_cloud(Letter a, int depth, std::size_t cap, std::uint64_t seed) {
  FractalCloud cloud;
  cloud.letter = a;
  cloud.depth = depth;
  if (depth == 0) {
    cloud.points.push_back(Complex(0, 0));
    return cloud;
  }

  double max_branch = 1;
  for (Letter x = 0; static_cast<std::size_t>(x) < sigma_->alphabet_size(); ++x)
    max_branch = std::max(max_branch,
                          static_cast<double>(sigma_->label_end(x) - sigma_->label_begin(x)));
  const bool enumerate =
      depth <= 20 && depth * std::log(max_branch) <= std::log(static_cast<double>(cap)) + 1e-9;

  if (enumerate) {
    // deterministic depth-first enumeration, labels in center order
    struct Frame {
      Letter c;
      std::size_t next;
    };
    std::vector<std::pair<Complex, Complex>> stack;  // (z, factor) per level
    std::vector<Frame> frames;
    frames.push_back({a, sigma_->label_begin(a)});
    stack.emplace_back(Complex(0, 0), Complex(1, 0));
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next >= sigma_->label_end(f.c)) {
        frames.pop_back();
        stack.pop_back();
        continue;
      }
      const std::size_t li = f.next++;
      const Label& l = sigma_->labels()[li];
      const Complex factor = stack.back().second * beta_inv_;
      const Complex z = stack.back().first + factor * prefix_gamma_[li];
      if (static_cast<int>(frames.size()) == depth) {
        cloud.points.push_back(z);
      } else {
        frames.push_back({l.center, sigma_->label_begin(l.center)});
        stack.emplace_back(z, factor);
      }
    }
  } else {
    cloud.sampled = true;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < cap; ++i) {
      Letter c = a;
      Complex z = 0, factor = 1;
      for (int m = 0; m < depth; ++m) {
        const std::size_t b = sigma_->label_begin(c), e = sigma_->label_end(c);
        std::uniform_int_distribution<std::size_t> pick(b, e - 1);
        const std::size_t li = pick(rng);
        factor *= beta_inv_;
        z += factor * prefix_gamma_[li];
        c = sigma_->labels()[li].center;
      }
      cloud.points.push_back(z);
    }
  }
  return cloud;
}

}  // namespace iemlab
