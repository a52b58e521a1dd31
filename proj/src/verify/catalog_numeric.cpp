// Identities involving infinite products or sums that are not finite
// coefficientwise. Products and outer sums are truncated by the shared
// SumControl; where a side only makes sense as a power series in t (the
// bilinear relations), every coefficient of t is compared.
#include "support.hpp"
#include "qhyper/error.hpp"
#include "qhyper/verify/catalog.hpp"

namespace qhyper::verify {

namespace {

using detail::coeffs;

IdentitySpec numeric(std::string id, std::vector<std::string> groups) {
  IdentitySpec s;
  s.id = std::move(id);
  s.mode = Mode::Numeric;
  s.groups = std::move(groups);
  return s;
}

Rational inf_product(const Rational& a, const Rational& q, const SumControl& ctl) {
  return qpoch_inf(a, q, ctl.eps).value;
}

// Sum over k >= start of term(k), where term(start) is given and
// term(k+1) = term(k) * ratio(k). Truncation is relative to the first term.
Rational relative_sum(Rational first, long start, const std::function<Rational(long)>& ratio,
                      const SumControl& ctl) {
  if (first.is_zero()) return Rational(0);
  SumControl rel = ctl;
  rel.eps = ctl.eps * first.abs();
  Rational term = std::move(first);
  long next = 0;
  return sum_series(
             [&](long j) {
               while (next < j) {
                 term *= ratio(start + next);
                 ++next;
               }
               return term;
             },
             rel)
      .value;
}

// Right side of the bilinear relation for Psi_n(u,v,z), as a series in t:
// (q/x;q)_inf/(alpha q;q)_inf (uxqt;q)_inf/(vxqt;q)_inf
//   sum_n c_n (uxq^{1-n}t;q)_n/(vxq^{1-n}t;q)_n rPhis[xzq^{1-n}t],
// c_n = (-1)^n q^{binom(n,2)} (1/(alpha x);q)_n (alpha q)^n/((q/x,q;q)_n).
// The rewrite uses (1/(ct);q)_n = (-1)^n q^{binom(n,2)} (ct)^{-n} (ctq^{1-n};q)_n.
RSeries bilinear_rhs(const ParamVector& pv, const Rational& q, const Rational& alpha, const Rational& x,
                     const Rational& u, const Rational& v, const Rational& z, int order,
                     const SumControl& ctl) {
  const Rational ax_inv = (alpha * x).inverse();
  const Rational q_over_x = q / x;
  Rational cn = 1;
  long next = 0;
  const auto sum = sum_series(
      [&](long n) {
        while (next < n) {
          const Rational qn = q.pow(next);
          const Rational den = (Rational(1) - q_over_x * qn) * (Rational(1) - qn * q);
          if (den.is_zero()) throw DomainError("(q/x;q)_n vanishes");
          cn *= -qn * (Rational(1) - ax_inv * qn) * alpha * q / den;
          ++next;
        }
        if (cn.is_zero()) return RSeries(order);
        const Rational shift = x * q.pow(1 - n);
        RSeries t = qpoch_series(u * shift, q, n, order) * series_inverse(qpoch_series(v * shift, q, n, order));
        t = t * rphis_series_in_t(pv, q, z * shift, order);
        return cn * t;
      },
      order, ctl);
  const Rational pref = inf_product(q_over_x, q, ctl) / inf_product(alpha * q, q, ctl);
  return pref * (euler_product_series(u * x * q, q, order) * euler_inverse_series(v * x * q, q, order) * sum.value);
}

// B(n) = sum_{k>=n} (1/(alpha x);q)_k (alpha q)^k/(q;q)_k (q^{-k};q)_n q^{nk}/(q;q)_n.
Rational transform_B(long n, const Rational& q, const Rational& alpha, const Rational& x, const SumControl& ctl) {
  const Rational ax_inv = (alpha * x).inverse();
  Rational first = qpoch(ax_inv, q, n) * (alpha * q).pow(n) / qfactorial(q, n) * qpoch(q.pow(-n), q, n) *
                   q.pow(n * n) / qfactorial(q, n);
  const Rational qn = q.pow(n);
  auto ratio = [&](long k) {
    const Rational qk = q.pow(k);
    return (Rational(1) - ax_inv * qk) * alpha * q / (Rational(1) - qk * q) * qn * (Rational(1) - (qk * q).inverse()) /
           (Rational(1) - qn / (qk * q));
  };
  return relative_sum(std::move(first), n, ratio, ctl);
}

void draw_bilinear_base(Sampler& sm, ParamSample& p) {
  p.set("q", sm.q_numeric());
  p.set("alpha", sm.nonzero_within(Rational(1)));
  p.set("x", sm.nonzero_within(Rational(2)));
}

Constraint alpha_q_constraint() {
  return {"|alpha q| < 1", [](const ParamSample& p) { return p["alpha"] * p["q"]; }, Rational(1)};
}

// (xw;q)_inf/(yw;q)_inf sum_n (t/w)^n/(q;q)_n sum_{k<=n} (q^{-n},yw;q)_k q^k/(xw,q;q)_k rPhis[zwq^k],
// the Rogers right side before the n and k sums are exchanged. The rPhis
// series is expanded so that each inner k-sum is exact.
Rational rogers_before_interchange(const ParamSample& p, const SumControl& ctl) {
  const Rational& q = p["q"];
  const Rational xw = p["x"] * p["omega"];
  const Rational yw = p["y"] * p["omega"];
  const Rational zw = p["z"] * p["omega"];
  const Rational ratio = p["t"] / p["omega"];
  std::vector<Rational> h;
  const auto outer = sum_series(
      [&](long n) {
        std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
        const Rational qmn = q.pow(-n);
        Rational ck = 1;
        for (long k = 0; k <= n; ++k) {
          if (k > 0) {
            const Rational qk = q.pow(k - 1);
            ck *= (Rational(1) - qmn * qk) * (Rational(1) - yw * qk) / ((Rational(1) - xw * qk) * (Rational(1) - q * qk));
          }
          c[static_cast<std::size_t>(k)] = ck;
        }
        const auto inner = sum_series(
            [&](long j) {
              while (static_cast<long>(h.size()) <= j) h.push_back(hyper_coefficient(static_cast<long>(h.size()), p.pv, q));
              if (h[static_cast<std::size_t>(j)].is_zero()) return Rational(0);
              const Rational base = q.pow(1 + j);
              Rational acc = 0;
              Rational pw = 1;
              for (long k = 0; k <= n; ++k) {
                acc += c[static_cast<std::size_t>(k)] * pw;
                pw *= base;
              }
              return h[static_cast<std::size_t>(j)] * zw.pow(j) * acc;
            },
            ctl);
        return ratio.pow(n) / qfactorial(q, n) * inner.value;
      },
      ctl);
  return inf_product(xw, q, ctl) / inf_product(yw, q, ctl) * outer.value;
}

}  // namespace

void register_numeric(std::vector<IdentitySpec>& out) {
  {
    auto s = numeric("thm2-rogers", {"rogers"});
    s.constraints = {
        {"|t/omega| < 1", [](const ParamSample& p) { return p["t"] / p["omega"]; }, Rational(1)},
        {"|y omega| < 1", [](const ParamSample& p) { return p["y"] * p["omega"]; }, Rational(1)},
    };
    s.sample = [](Sampler& sm, ParamSample& p) {
      p.set("q", sm.q_numeric());
      const long sdim = sm.uniform_int(0, 3);
      const long rdim = sm.uniform_int(0, sdim + 1);
      p.ints["r"] = rdim;
      p.ints["s"] = sdim;
      p.pv = sm.params(rdim, sdim);
      for (const char* k : {"x", "y", "z"}) p.set(k, sm.within(Rational(1)));
      p.set("omega", sm.nonzero_within(Rational(1, 4)));
      p.set("t", sm.nonzero_within(p["omega"].abs() / 2));
    };
    s.build = [](const ParamSample& p, const BuildSettings& b) {
      const Rational& q = p["q"];
      const Rational& x = p["x"];
      const Rational& y = p["y"];
      const Rational& z = p["z"];
      const Rational& t = p["t"];
      const Rational& w = p["omega"];
      const SumControl& ctl = b.sum;
      // Left side summed along n + k = N.
      const auto lhs = sum_series(
          [&](long N) {
            Rational h = 0;
            for (long n = 0; n <= N; ++n) h += t.pow(n) * w.pow(N - n) / (qfactorial(q, n) * qfactorial(q, N - n));
            return psi_general(N, p.pv, x, y, z, q) * bracket_power(N, 1, q) * h;
          },
          ctl);
      Rational coef = 1;  // (y w;q)_k q^k / (q w/t, x w, q;q)_k
      long next = 0;
      const auto sum = sum_series(
          [&](long k) {
            while (next < k) {
              const Rational qk = q.pow(next);
              const Rational den = (Rational(1) - q * w / t * qk) * (Rational(1) - x * w * qk) * (Rational(1) - q * qk);
              if (den.is_zero()) throw DomainError("vanishing denominator in the Rogers sum");
              coef *= (Rational(1) - y * w * qk) * q / den;
              ++next;
            }
            if (coef.is_zero()) return Rational(0);
            return coef * rphis_numeric(p.pv, q, z * w * q.pow(k), ctl).value;
          },
          ctl);
      const Rational pref = inf_product(x * w, q, ctl) / (inf_product(t / w, q, ctl) * inf_product(y * w, q, ctl));
      const Rational rhs = pref * sum.value;
      Comparison c;
      c.append(lhs.value, rhs);
      c.notes = "lhs=" + lhs.value.to_decimal(12) + " rhs=" + rhs.to_decimal(12);
      try {
        const Rational pre = rogers_before_interchange(p, ctl);
        const Rational rel = ((lhs.value - pre).abs() / std::max(Rational(1), lhs.value.abs())).dyadic_upper_bound(24);
        c.notes += "; form before exchanging the n and k sums=" + pre.to_decimal(12) +
                   " (relative deviation from lhs <= " + rel.to_decimal(30) + ")";
      } catch (const MagnitudeError&) {
        c.notes += "; form before exchanging the n and k sums not evaluated (bit limit)";
      }
      return c;
    };
    out.push_back(std::move(s));
  }
  {
    auto s = numeric("thm3-bilinear", {"bilinear"});
    s.constraints = {alpha_q_constraint()};
    s.sample = [](Sampler& sm, ParamSample& p) {
      draw_bilinear_base(sm, p);
      detail::draw_params(sm, p);
      p.set("u", sm.nonzero_within(Rational(2)));
      p.set("v", sm.nonzero_within(Rational(2)));
      p.set("z", sm.within(Rational(2)));
    };
    s.build = [](const ParamSample& p, const BuildSettings& b) {
      const Rational& q = p["q"];
      RSeries lhs(b.order);
      for (int m = 0; m <= b.order; ++m) {
        lhs[m] = asc_psi(m, p["alpha"], p["x"], q) * psi_general(m, p.pv, p["u"], p["v"], p["z"], q) *
                 bracket_power(m, 1, q) * q.pow(m) / qfactorial(q, m);
      }
      const RSeries rhs = bilinear_rhs(p.pv, q, p["alpha"], p["x"], p["u"], p["v"], p["z"], b.order, b.sum);
      Comparison c;
      c.append(coeffs(lhs), coeffs(rhs));
      c.notes = "coefficients of t^0..t^" + std::to_string(b.order);
      return c;
    };
    out.push_back(std::move(s));
  }
  {
    auto s = numeric("cor1-bilinear-hahn", {"bilinear"});
    s.constraints = {alpha_q_constraint()};
    s.sample = [](Sampler& sm, ParamSample& p) {
      draw_bilinear_base(sm, p);
      p.set("a", sm.nonzero_within(Rational(2)));
      p.set("y", sm.nonzero_within(Rational(2)));
    };
    s.build = [](const ParamSample& p, const BuildSettings& b) {
      const Rational& q = p["q"];
      const Rational& al = p["alpha"];
      const Rational& a = p["a"];
      const Rational& x = p["x"];
      const Rational& y = p["y"];
      const int order = b.order;
      RSeries lhs(order);
      for (int m = 0; m <= order; ++m) {
        lhs[m] = asc_psi(m, al, x, q) * asc_psi(m, a, y, q) * bracket_power(m, 1, q) * q.pow(m) / qfactorial(q, m);
      }
      // 3Phi2[1/(alpha x), 1/(xyt), 1/(xt); q/x, 1/(axyt); q; alpha x t q/a] expanded in t.
      const Rational ax_inv = (al * x).inverse();
      Rational dk = 1;
      long next = 0;
      const auto sum = sum_series(
          [&](long k) {
            while (next < k) {
              const Rational qk = q.pow(next);
              const Rational den = (Rational(1) - q * qk) * (Rational(1) - q / x * qk);
              if (den.is_zero()) throw DomainError("(q/x;q)_k vanishes");
              dk *= -qk * al * q * (Rational(1) - ax_inv * qk) / den;
              ++next;
            }
            if (dk.is_zero()) return RSeries(order);
            const Rational shift = q.pow(1 - k);
            RSeries term = qpoch_series(x * y * shift, q, k, order) * qpoch_series(x * shift, q, k, order);
            term = term * series_inverse(qpoch_series(a * x * y * shift, q, k, order));
            return dk * term;
          },
          order, b.sum);
      const Rational pref = inf_product(q / x, q, b.sum) / inf_product(al * q, q, b.sum);
      const RSeries rhs = pref * (euler_product_series(x * y * q, q, order) * euler_product_series(x * q, q, order) *
                                  euler_inverse_series(a * x * y * q, q, order) * sum.value);
      // Specialization r = s = 0, u = y, v = a y, z = 1 of the general relation.
      const RSeries general = bilinear_rhs(ParamVector{}, q, al, x, y, a * y, Rational(1), order, b.sum);
      Comparison c;
      c.append(coeffs(lhs), coeffs(rhs));
      c.append(coeffs(rhs), coeffs(general));
      c.notes = "t^0..t^" + std::to_string(order) + " against the Hahn bilinear form, then against the general relation at r=s=0, u=y, v=ay, z=1";
      return c;
    };
    out.push_back(std::move(s));
  }
  {
    auto s = numeric("thm4-transform", {"transform"});
    s.constraints = {alpha_q_constraint()};
    s.sample = [](Sampler& sm, ParamSample& p) {
      draw_bilinear_base(sm, p);
      detail::draw_params(sm, p);
      p.set("lambda", sm.nonzero_within(Rational(2)));
      p.set("z", sm.within(Rational(2)));
    };
    s.build = [](const ParamSample& p, const BuildSettings& b) {
      const Rational& q = p["q"];
      const Rational& al = p["alpha"];
      const Rational& x = p["x"];
      const Rational& lam = p["lambda"];
      const Rational& z = p["z"];
      const int order = b.order;
      std::vector<Rational> bcache;
      auto B = [&](long n) {
        while (static_cast<long>(bcache.size()) <= n) {
          bcache.push_back(transform_B(static_cast<long>(bcache.size()), q, al, x, b.sum));
        }
        return bcache[static_cast<std::size_t>(n)];
      };
      // A(n) = psi_n^{(alpha)}(x) (qt)^n/(q;q)_n with u = 1, v = lambda.
      RSeries lhs1(order), lhs2(order);
      for (int m = 0; m <= order; ++m) {
        const Rational am = asc_psi(m, al, x, q) * q.pow(m) / qfactorial(q, m);
        lhs1[m] = am * cauchy_P(m, lam, Rational(1), q);
        lhs2[m] = bracket_power(m, 1, q) * am * psi_general(m, p.pv, Rational(1), lam, z, q);
      }
      auto ratio_at = [&](long n) {
        const Rational shift = x * q.pow(1 - n);
        return euler_product_series(shift, q, order) * euler_inverse_series(lam * shift, q, order);
      };
      const auto rhs1 = sum_series([&](long n) { return B(n) * ratio_at(n); }, order, b.sum);
      const auto rhs2 = sum_series(
          [&](long n) {
            const Rational bn = B(n);
            if (bn.is_zero()) return RSeries(order);
            return bn * (ratio_at(n) * rphis_series_in_t(p.pv, q, x * z * q.pow(1 - n), order));
          },
          order, b.sum);
      const RSeries bilinear = bilinear_rhs(p.pv, q, al, x, Rational(1), lam, z, order, b.sum);
      Comparison c;
      c.append(coeffs(lhs1), coeffs(rhs1.value));
      c.append(coeffs(lhs2), coeffs(rhs2.value));
      c.append(coeffs(rhs2.value), coeffs(bilinear));
      c.notes = "blocks: hypothesis relation, transformed relation, transformed vs bilinear right side; t^0..t^" +
                std::to_string(order);
      return c;
    };
    out.push_back(std::move(s));
  }
}

}  // namespace qhyper::verify
