// axioms.cpp -- clause-by-clause fuzzing of the homogenized invariants.

#include "conlab/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "conlab/hamiltonian.hpp"
#include "conlab/rng.hpp"

namespace conlab {

namespace {

constexpr double kGoldenRatio = 0.6180339887498949;

TrigPoly rand_poly(Rng& rng) {
  const int degree = (int)rng.uniform_int(1, 4);
  TrigPoly f = TrigPoly::constant(rng.uniform(-1.0, 1.0));
  for (int k = 1; k <= degree; ++k) {
    f = f + TrigPoly::cosine(k, rng.uniform(-1.0, 1.0) / (k * k));
    f = f + TrigPoly::sine(k, rng.uniform(-1.0, 1.0) / (k * k));
  }
  return f;
}

ConormalTarget rand_target(Rng& rng) {
  switch (rng.uniform_int(0, 3)) {
    case 0:
      return ConormalTarget::point(rng.uniform());
    case 1:
      return ConormalTarget::whole();
    default: {
      const double a = rng.uniform();
      const double w = rng.uniform(0.1, 0.8);
      const ArcSign sign =
          rng.uniform_int(0, 1) == 0 ? ArcSign::Plus : ArcSign::Minus;
      return ConormalTarget::arc(a, a + w, sign);
    }
  }
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

/// Collects per-trial margins into one report.
class Clause {
 public:
  Clause(std::string id, double tol) : tol_(tol) {
    rep_.id = std::move(id);
    rep_.worst_margin = std::numeric_limits<double>::infinity();
  }

  void add(double margin, const std::string& desc) {
    ++rep_.trials;
    rep_.worst_margin = std::min(rep_.worst_margin, margin);
    if (margin < -tol_ && rep_.witnesses.size() < 5)
      rep_.witnesses.push_back(desc + " margin=" + fmt(margin));
  }

  AxiomReport finish(double oracle_error) && {
    if (rep_.trials == 0) rep_.worst_margin = 0.0;
    rep_.oracle_error = oracle_error;
    return std::move(rep_);
  }

 private:
  AxiomReport rep_;
  double tol_;
};

/// sigma through the campaign oracle, remembering the worst error bound.
struct SigOracle {
  const AxiomOptions& opts;
  double worst_error = 0.0;

  double operator()(const HamRef& h, const ConormalTarget& t) {
    const LimsupEstimate e = sigma(h, t, opts.n_max, opts.seq);
    if (std::isnan(e.error_bound) || std::isnan(worst_error))
      worst_error = std::numeric_limits<double>::quiet_NaN();
    else
      worst_error = std::max(worst_error, e.error_bound);
    return e.value;
  }
};

/// Golden-section refinement of f toward larger sign*f on [lo, hi].
template <class F>
double refine_extreme(F&& f, double lo, double hi, double sign) {
  const double r = kGoldenRatio;
  double x1 = hi - r * (hi - lo), x2 = lo + r * (hi - lo);
  double f1 = sign * f(x1), f2 = sign * f(x2);
  for (int it = 0; it < 80; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + r * (hi - lo);
      f2 = sign * f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - r * (hi - lo);
      f1 = sign * f(x1);
    }
  }
  return sign * std::max(f1, f2);
}

/// Grid scan plus refinement of a periodic function of the base.
template <class F>
std::pair<double, double> base_range(F&& f, int m) {
  int imin = 0, imax = 0;
  double vmin = f(0.0), vmax = vmin;
  for (int i = 1; i < m; ++i) {
    const double v = f((double)i / m);
    if (v < vmin) {
      vmin = v;
      imin = i;
    }
    if (v > vmax) {
      vmax = v;
      imax = i;
    }
  }
  const double lo =
      refine_extreme(f, (imin - 1.0) / m, (imin + 1.0) / m, -1.0);
  const double hi =
      refine_extreme(f, (imax - 1.0) / m, (imax + 1.0) / m, +1.0);
  return {std::min(lo, vmin), std::max(hi, vmax)};
}

}  // namespace

std::vector<AxiomReport> axiom_suite(std::uint64_t seed, int trials,
                                     const AxiomOptions& opts) {
  if (trials < 1) throw std::invalid_argument("axiom_suite: trials >= 1");
  if (opts.n_max < 10) throw std::invalid_argument("axiom_suite: n_max >= 10");

  std::vector<AxiomReport> out;
  const double horizon = opts.n_max + 1.0;

  {
    Clause cl("homogeneity", opts.witness_tol);
    SigOracle sig{opts};
    for (int t = 0; t < trials; ++t) {
      Rng rng(seed, 100000 + t);
      const TrigPoly f = rand_poly(rng);
      const ConormalTarget target = rand_target(rng);
      const int l = (int)rng.uniform_int(2, 4);
      auto H = lifted_auto(f, 1.0 + opts.n_max * (double)l);
      const double s1 = sig(H, target);
      const double sl = sig(iterate(H, l), target);
      std::ostringstream d;
      d << "trial " << t << ": l=" << l << " target=" << describe(target);
      cl.add(-std::fabs(sl - l * s1), d.str());
    }
    out.push_back(std::move(cl).finish(sig.worst_error));
  }

  {
    Clause cl("stability", opts.witness_tol);
    SigOracle sig{opts};
    for (int t = 0; t < trials; ++t) {
      Rng rng(seed, 200000 + t);
      const TrigPoly f = rand_poly(rng);
      const TrigPoly g = rand_poly(rng);
      const ConormalTarget target = rand_target(rng);
      auto Hf = lifted_auto(f, horizon);
      auto Hg = lifted_auto(g, horizon);

      const TrigPoly diff = f - g;
      const auto [dlo, dhi] =
          base_range([&](double q) { return diff.value(q); }, 512);

      // Same extremes through phase space, restricted to the band |p| <= 1
      // where both cutoffs are flat; certifies the base reduction.
      double plo = std::numeric_limits<double>::infinity(), phi = -plo;
      double qlo = 0.0, qhi = 0.0, pat_lo = 0.0, pat_hi = 0.0;
      for (int i = 0; i < 256; ++i)
        for (int j = 0; j < 256; ++j) {
          const double q = (double)i / 256;
          const double p = -1.0 + 2.0 * (double)j / 255;
          const double v =
              eval_static(*Hf, q, p).value - eval_static(*Hg, q, p).value;
          if (v < plo) {
            plo = v;
            qlo = q;
            pat_lo = p;
          }
          if (v > phi) {
            phi = v;
            qhi = q;
            pat_hi = p;
          }
        }
      plo = refine_extreme(
          [&](double q) {
            return eval_static(*Hf, q, pat_lo).value -
                   eval_static(*Hg, q, pat_lo).value;
          },
          qlo - 1.0 / 256, qlo + 1.0 / 256, -1.0);
      phi = refine_extreme(
          [&](double q) {
            return eval_static(*Hf, q, pat_hi).value -
                   eval_static(*Hg, q, pat_hi).value;
          },
          qhi - 1.0 / 256, qhi + 1.0 / 256, +1.0);
      const double reduction_err =
          std::max(std::fabs(plo - dlo), std::fabs(phi - dhi));

      const double d = sig(Hf, target) - sig(Hg, target);
      double margin = std::min(d - dlo, dhi - d);
      if (reduction_err > 1e-6) margin = std::min(margin, -reduction_err);
      std::ostringstream de;
      de << "trial " << t << ": target=" << describe(target)
         << " d=" << fmt(d) << " range=[" << fmt(dlo) << "," << fmt(dhi)
         << "]";
      cl.add(margin, de.str());
    }
    out.push_back(std::move(cl).finish(sig.worst_error));
  }

  {
    Clause cl("monotonicity", opts.witness_tol);
    SigOracle sig{opts};
    for (int t = 0; t < trials; ++t) {
      Rng rng(seed, 300000 + t);
      const TrigPoly f = rand_poly(rng);
      // g - f = amp (1 + cos(2 pi (q - s))) / 2 >= 0 pointwise.
      const double amp = rng.uniform(0.0, 1.5);
      const TrigPoly g =
          f + (TrigPoly::shifted_cosine(rng.uniform()) + TrigPoly::constant(1.0)) *
                  (amp / 2.0);
      const ConormalTarget target = rand_target(rng);
      const double m = sig(lifted_auto(g, horizon), target) -
                       sig(lifted_auto(f, horizon), target);
      std::ostringstream d;
      d << "trial " << t << ": amp=" << fmt(amp)
        << " target=" << describe(target);
      cl.add(m, d.str());
    }
    out.push_back(std::move(cl).finish(sig.worst_error));
  }

  {
    Clause cl("positive-homogeneity", opts.witness_tol);
    SigOracle sig{opts};
    for (int t = 0; t < trials; ++t) {
      Rng rng(seed, 400000 + t);
      const TrigPoly f = rand_poly(rng);
      const ConormalTarget target = rand_target(rng);
      const double s = t % 7 == 0 ? 0.0 : rng.uniform(0.0, 4.0);
      auto H = lifted_auto(f, 1.0 + opts.n_max * std::max(1.0, s));
      const double sH = sig(H, target);
      const double ss = sig(scale(s, H), target);
      std::ostringstream d;
      d << "trial " << t << ": s=" << fmt(s) << " target=" << describe(target);
      cl.add(-std::fabs(ss - s * sH), d.str());
    }
    out.push_back(std::move(cl).finish(sig.worst_error));
  }

  {
    Clause cl("normalization", opts.witness_tol);
    SigOracle sig{opts};
    const double z = sig(zero_ham(), ConormalTarget::whole());
    cl.add(-std::fabs(z), "zero generator");
    out.push_back(std::move(cl).finish(sig.worst_error));
  }

  {
    Clause cl("vanishing-disjoint", opts.witness_tol);
    SigOracle sig{opts};
    for (int t = 0; t < trials; ++t) {
      Rng rng(seed, 600000 + t);
      const double side = rng.uniform_int(0, 1) == 0 ? -1.0 : 1.0;
      const double p0 = side * rng.uniform(2.0, 5.0);
      auto B = bump(rng.uniform(), p0, rng.uniform(0.2, 0.45),
                    rng.uniform(0.3, 0.6), rng.uniform(-2.0, 2.0));
      const ConormalTarget target = rand_target(rng);
      const double v = sig(B, target);
      std::ostringstream d;
      d << "trial " << t << ": p0=" << fmt(p0)
        << " target=" << describe(target);
      cl.add(-std::fabs(v), d.str());
    }
    out.push_back(std::move(cl).finish(sig.worst_error));
  }

  {
    Clause cl("disjoint-additivity", opts.witness_tol);
    SigOracle sig{opts};
    for (int t = 0; t < trials; ++t) {
      Rng rng(seed, 700000 + t);
      const TrigPoly f = rand_poly(rng);
      const ConormalTarget target = rand_target(rng);
      auto Hf = lifted_auto(f, horizon);
      // Bump parked above the cutoff's outer radius: supports are disjoint
      // and the sheared zero section never gets near it.
      auto B = bump(rng.uniform(), Hf->support_radius() + 1.5,
                    rng.uniform(0.2, 0.45), 0.5, rng.uniform(-2.0, 2.0));
      const double plain = sig(Hf, target);
      const double added = sig(sum({Hf, B}), target);
      std::ostringstream d;
      d << "trial " << t << ": target=" << describe(target);
      cl.add(-std::fabs(added - plain), d.str());
    }
    out.push_back(std::move(cl).finish(sig.worst_error));
  }

  {
    Clause cl("subadditivity-commuting", opts.witness_tol);
    SigOracle sig{opts};
    for (int t = 0; t < trials; ++t) {
      Rng rng(seed, 800000 + t);
      const TrigPoly f = rand_poly(rng);
      const TrigPoly g = rand_poly(rng);
      const ConormalTarget target = rand_target(rng);
      // Lifted flows are fiber shears, so any two commute; the shared cutoff
      // stays flat through the combined shear of both factors.
      const double r =
          1.0 + (opts.n_max + 2.0) *
                    (f.derivative_bound() + g.derivative_bound());
      const CutoffSpec c(r, r + 2.0);
      auto Hf = lifted(f, c);
      auto Hg = lifted(g, c);
      const double lhs = sig(compose(Hf, Hg), target);
      const double rhs =
          sig(Hf, ConormalTarget::whole()) + sig(Hg, target);
      std::ostringstream d;
      d << "trial " << t << ": target=" << describe(target);
      cl.add(rhs - lhs, d.str());
    }
    out.push_back(std::move(cl).finish(sig.worst_error));
  }

  return out;
}

AxiomReport conjugation_smoke(std::uint64_t seed, const AxiomOptions& opts) {
  Rng rng(seed, 777);
  const TrigPoly f = rand_poly(rng);
  const ConormalTarget target = rand_target(rng);
  const double r = 1.0 + (opts.n_max + 4.0) * f.derivative_bound();
  auto H = lifted(f, CutoffSpec(r, r + 2.0));
  SigOracle sig{opts};
  const double base = sig(H, target);

  Clause cl("conjugation-smoke", opts.witness_tol);
  auto conjugated = [&](const HamRef& psi) {
    return compose(psi, compose(H, inverse(psi)));
  };

  cl.add(-std::fabs(sig(conjugated(zero_ham()), target) - base),
         "psi=identity");
  cl.add(-std::fabs(sig(conjugated(iterate(H, 2)), target) - base),
         "psi=second-power");
  auto B = bump(rng.uniform(), H->support_radius() + 1.5, 0.3, 0.5, 1.5);
  cl.add(-std::fabs(sig(conjugated(B), target) - base),
         "psi=far-bump");

  AxiomReport rep = std::move(cl).finish(sig.worst_error);
  rep.reason = "smoke cases only; general conjugation leaves the graphical regime";
  return rep;
}

}  // namespace conlab
