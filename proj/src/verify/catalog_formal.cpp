// Identities checked by exact comparison of finitely many coefficients.
#include "support.hpp"
#include "qhyper/verify/catalog.hpp"

namespace qhyper::verify {

namespace {

using detail::coeffs;
using detail::draw_params;

IdentitySpec formal(std::string id, std::vector<std::string> groups) {
  IdentitySpec s;
  s.id = std::move(id);
  s.mode = Mode::Formal;
  s.groups = std::move(groups);
  return s;
}

// (xt;q)_inf / (yt;q)_inf through the Euler expansions.
RSeries ratio_xy(const Rational& x, const Rational& y, const Rational& q, int order) {
  return euler_product_series(x, q, order) * euler_inverse_series(y, q, order);
}

// t^k times the right side of the third operational formula:
// (xt)_inf/(yt)_inf sum_{j<=k} (q^{-k};q)_j q^j/(q;q)_j (yt;q)_j/(xt;q)_j rPhis[ztq^j].
RSeries extended_rhs(long k, const ParamSample& p, int order) {
  const Rational& q = p["q"];
  const Rational& x = p["x"];
  const Rational& y = p["y"];
  const Rational& z = p["z"];
  RSeries sum(order);
  const Rational qmk = q.pow(-k);
  for (long j = 0; j <= k; ++j) {
    const Rational c = qpoch(qmk, q, j) * q.pow(j) / qfactorial(q, j);
    if (c.is_zero()) continue;
    RSeries term = qpoch_series(y, q, j, order) * series_inverse(qpoch_series(x, q, j, order));
    term = term * rphis_series_in_t(p.pv, q, z * q.pow(j), order);
    sum = sum + c * term;
  }
  return ratio_xy(x, y, q, order) * sum;
}

std::vector<Rational> flatten(const CauchySeries& s, long max_degree) {
  std::vector<Rational> out;
  for (int n = 0; n <= s.order(); ++n) {
    for (long m = 0; m <= max_degree; ++m) out.push_back(s[n].coeff(m));
  }
  return out;
}

void xyz_q(Sampler& sm, ParamSample& p) {
  p.set("q", sm.q_formal());
  p.set("x", sm.rational());
  p.set("y", sm.rational());
  p.set("z", sm.rational());
}

}  // namespace

void register_formal(std::vector<IdentitySpec>& out) {
  {
    auto s = formal("shift-identity", {"scalar"});
    s.sample = [](Sampler& sm, ParamSample& p) {
      p.set("q", sm.q_formal());
      p.set("a", sm.nonzero());
    };
    s.build = [](const ParamSample& p, const BuildSettings&) {
      Comparison c;
      for (long n = 0; n <= 20; ++n) {
        const auto [l, r] = qpoch_shift(p["a"], p["q"], n);
        c.append(l, r);
      }
      return c;
    };
    out.push_back(std::move(s));
  }
  {
    auto s = formal("euler-pair", {"tseries"});
    s.sample = [](Sampler& sm, ParamSample& p) {
      p.set("q", sm.q_formal());
      p.set("c", sm.rational());
    };
    s.build = [](const ParamSample& p, const BuildSettings& b) {
      Comparison c;
      const RSeries prod = euler_product_series(p["c"], p["q"], b.order) * euler_inverse_series(p["c"], p["q"], b.order);
      c.append(coeffs(prod), coeffs(RSeries::constant(b.order, Rational(1))));
      return c;
    };
    out.push_back(std::move(s));
  }
  {
    auto s = formal("q-binomial-theorem", {"tseries"});
    s.sample = [](Sampler& sm, ParamSample& p) {
      p.set("q", sm.q_formal());
      p.set("a", sm.rational());
    };
    s.build = [](const ParamSample& p, const BuildSettings& b) {
      const Rational& q = p["q"];
      RSeries lhs(b.order);
      for (int k = 0; k <= b.order; ++k) lhs[k] = qpoch(p["a"], q, k) / qfactorial(q, k);
      const RSeries rhs = euler_product_series(p["a"], q, b.order) * euler_inverse_series(Rational(1), q, b.order);
      Comparison c;
      c.append(coeffs(lhs), coeffs(rhs));
      return c;
    };
    out.push_back(std::move(s));
  }
  {
    auto s = formal("cauchy-gf", {"tseries"});
    s.sample = [](Sampler& sm, ParamSample& p) {
      p.set("q", sm.q_formal());
      p.set("x", sm.rational());
      p.set("y", sm.rational());
    };
    s.build = [](const ParamSample& p, const BuildSettings& b) {
      const Rational& q = p["q"];
      Comparison c;
      c.append(coeffs(cauchy_ratio_series(p["x"], p["y"], q, b.order)), coeffs(ratio_xy(p["y"], p["x"], q, b.order)));
      return c;
    };
    out.push_back(std::move(s));
  }
  {
    auto s = formal("cauchy-sa-gf", {"tseries"});
    s.sample = [](Sampler& sm, ParamSample& p) {
      p.set("q", sm.q_formal());
      p.set("x", sm.nonzero());
      p.set("y", sm.rational());
      p.set("lambda", sm.rational());
    };
    s.build = [](const ParamSample& p, const BuildSettings& b) {
      const Rational& q = p["q"];
      const Rational& x = p["x"];
      const Rational& y = p["y"];
      RSeries lhs(b.order);
      for (int n = 0; n <= b.order; ++n) lhs[n] = cauchy_P(n, x, y, q) * qpoch(p["lambda"], q, n) / qfactorial(q, n);
      const ParamVector pv{{p["lambda"], y / x}, {Rational(0)}};
      Comparison c;
      c.append(coeffs(lhs), coeffs(rphis_series_in_t(pv, q, x, b.order)));
      return c;
    };
    out.push_back(std::move(s));
  }
  // The three-parameter families weight x^k with (a,b;q)_k/(c;q)_k, so the
  // 2Phi1 factor must carry xt and the Euler factor yt. The printed
  // arrangement (roles of x and y exchanged) is evaluated for the notes.
  {
    auto s = formal("cao-gf-phi", {"polyfam"});
    s.sample = [](Sampler& sm, ParamSample& p) {
      p.set("q", sm.q_formal());
      for (const char* k : {"a", "b", "c", "x", "y"}) p.set(k, sm.rational());
    };
    s.build = [](const ParamSample& p, const BuildSettings& b) {
      const Rational& q = p["q"];
      const ParamVector pv{{p["a"], p["b"]}, {p["c"]}};
      RSeries lhs(b.order);
      for (int n = 0; n <= b.order; ++n) {
        lhs[n] = cao_phi3(n, p["a"], p["b"], p["c"], p["x"], p["y"], q) / qfactorial(q, n);
      }
      const RSeries rhs = euler_inverse_series(p["y"], q, b.order) * rphis_series_in_t(pv, q, p["x"], b.order);
      const RSeries printed = euler_inverse_series(p["x"], q, b.order) * rphis_series_in_t(pv, q, p["y"], b.order);
      Comparison c;
      c.append(coeffs(lhs), coeffs(rhs));
      c.notes = "checked 1/(yt;q)_inf 2Phi1[a,b;c;q;xt]; printed arrangement 1/(xt;q)_inf 2Phi1[a,b;c;q;yt] residual " +
                detail::residual_text(coeffs(lhs), coeffs(printed));
      return c;
    };
    out.push_back(std::move(s));
  }
  {
    auto s = formal("cao-gf-psi", {"polyfam"});
    s.sample = [](Sampler& sm, ParamSample& p) {
      p.set("q", sm.q_formal());
      for (const char* k : {"a", "b", "c", "x", "y"}) p.set(k, sm.rational());
    };
    s.build = [](const ParamSample& p, const BuildSettings& b) {
      const Rational& q = p["q"];
      const ParamVector pv{{p["a"], p["b"]}, {p["c"]}};
      RSeries lhs(b.order);
      for (int n = 0; n <= b.order; ++n) {
        lhs[n] = cao_psi3(n, p["a"], p["b"], p["c"], p["x"], p["y"], q) * bracket_power(n, 1, q) / qfactorial(q, n);
      }
      const RSeries rhs = euler_product_series(p["y"], q, b.order) * rphis_series_in_t(pv, q, p["x"], b.order);
      const RSeries printed = euler_product_series(p["x"], q, b.order) * rphis_series_in_t(pv, q, p["y"], b.order);
      Comparison c;
      c.append(coeffs(lhs), coeffs(rhs));
      c.notes = "checked (yt;q)_inf 2Phi1[a,b;c;q;xt]; printed arrangement (xt;q)_inf 2Phi1[a,b;c;q;yt] residual " +
                detail::residual_text(coeffs(lhs), coeffs(printed));
      return c;
    };
    out.push_back(std::move(s));
  }
  {
    auto s = formal("v-gf", {"polyfam"});
    s.sample = [](Sampler& sm, ParamSample& p) {
      xyz_q(sm, p);
      draw_params(sm, p);
    };
    s.build = [](const ParamSample& p, const BuildSettings& b) {
      const Rational& q = p["q"];
      RSeries lhs(b.order);
      for (int n = 0; n <= b.order; ++n) lhs[n] = v_poly(n, p.pv, p["x"], p["y"], p["z"], q) / qfactorial(q, n);
      const RSeries ratio = ratio_xy(p["y"], p["x"], q, b.order);
      const RSeries plain = ratio * rphis_series_in_t(p.pv, q, p["z"], b.order, Convention::Plain);
      const RSeries bracket = ratio * rphis_series_in_t(p.pv, q, p["z"], b.order, Convention::Bracket);
      Comparison c;
      c.append(coeffs(lhs), coeffs(plain));
      c.notes = "rPhiu taken without the (-1)^k q^binom(k,2) factor; with it (r=" + std::to_string(p.pv.r()) +
                ", u=" + std::to_string(p.pv.s()) + ") residual " + detail::residual_text(coeffs(lhs), coeffs(bracket));
      return c;
    };
    out.push_back(std::move(s));
  }
  {
    auto s = formal("gf-psi", {"polyfam"});
    s.sample = [](Sampler& sm, ParamSample& p) {
      xyz_q(sm, p);
      draw_params(sm, p);
    };
    s.build = [](const ParamSample& p, const BuildSettings& b) {
      const Rational& q = p["q"];
      RSeries lhs(b.order);
      for (int n = 0; n <= b.order; ++n) {
        lhs[n] = psi_general(n, p.pv, p["x"], p["y"], p["z"], q) * bracket_power(n, 1, q) / qfactorial(q, n);
      }
      const RSeries rhs = ratio_xy(p["x"], p["y"], q, b.order) * rphis_series_in_t(p.pv, q, p["z"], b.order);
      Comparison c;
      c.append(coeffs(lhs), coeffs(rhs));
      return c;
    };
    out.push_back(std::move(s));
  }
  {
    auto s = formal("lemma1-a", {"lemma1", "qdiff"});
    s.sample = [](Sampler& sm, ParamSample& p) {
      xyz_q(sm, p);
      draw_params(sm, p);
    };
    s.build = [](const ParamSample& p, const BuildSettings&) {
      const Rational& q = p["q"];
      Comparison c;
      for (long n = 0; n <= 8; ++n) {
        const CauchyPoly f = CauchyPoly::basis(n, bracket_power(n, -1, q));
        const CauchyPoly g = op_apply_poly(p.pv, p["z"], f, q);
        c.append(g.evaluate(p["x"], p["y"], q), psi_general(n, p.pv, p["x"], p["y"], p["z"], q));
      }
      return c;
    };
    out.push_back(std::move(s));
  }
  {
    auto s = formal("lemma1-b", {"lemma1", "qdiff"});
    s.sample = [](Sampler& sm, ParamSample& p) {
      xyz_q(sm, p);
      draw_params(sm, p);
    };
    s.build = [](const ParamSample& p, const BuildSettings& b) {
      const Rational& q = p["q"];
      const CauchySeries f = op_apply_series(p.pv, p["z"], shifted_cauchy_series(0, q, b.order), q);
      const RSeries lhs = evaluate(f, p["x"], p["y"], q);
      const RSeries rhs = ratio_xy(p["x"], p["y"], q, b.order) * rphis_series_in_t(p.pv, q, p["z"], b.order);
      Comparison c;
      c.append(coeffs(lhs), coeffs(rhs));
      return c;
    };
    out.push_back(std::move(s));
  }
  for (long k = 0; k <= 3; ++k) {
    auto s = formal("lemma1-c-k" + std::to_string(k), {"lemma1", "lemma1-c", "qdiff"});
    s.sample = [](Sampler& sm, ParamSample& p) {
      xyz_q(sm, p);
      draw_params(sm, p);
    };
    s.build = [k](const ParamSample& p, const BuildSettings& b) {
      const Rational& q = p["q"];
      const CauchySeries f = op_apply_series(p.pv, p["z"], shifted_cauchy_series(k, q, b.order), q);
      const RSeries lhs = evaluate(f, p["x"], p["y"], q).shifted(static_cast<int>(k));
      Comparison c;
      c.append(coeffs(lhs), coeffs(extended_rhs(k, p, b.order)));
      return c;
    };
    out.push_back(std::move(s));
  }
  for (long k = 0; k <= 3; ++k) {
    auto s = formal("thm1-extended-gf-k" + std::to_string(k), {"thm1-extended-gf"});
    s.sample = [](Sampler& sm, ParamSample& p) {
      xyz_q(sm, p);
      draw_params(sm, p);
    };
    s.build = [k](const ParamSample& p, const BuildSettings& b) {
      const Rational& q = p["q"];
      RSeries lhs(b.order);
      for (int n = 0; n <= b.order; ++n) {
        lhs[n] = psi_general(n + k, p.pv, p["x"], p["y"], p["z"], q) * bracket_power(n + k, 1, q) / qfactorial(q, n);
      }
      Comparison c;
      c.append(coeffs(lhs.shifted(static_cast<int>(k))), coeffs(extended_rhs(k, p, b.order)));
      return c;
    };
    out.push_back(std::move(s));
  }
  {
    auto s = formal("lemma2-phi", {"lemma2"});
    s.sample = [](Sampler& sm, ParamSample& p) {
      p.set("q", sm.q_formal());
      for (const char* k : {"alpha", "lambda", "x"}) p.set(k, sm.rational());
    };
    s.build = [](const ParamSample& p, const BuildSettings& b) {
      const Rational& q = p["q"];
      const Rational& al = p["alpha"];
      const Rational& lam = p["lambda"];
      const Rational& x = p["x"];
      RSeries lhs(b.order);
      for (int n = 0; n <= b.order; ++n) lhs[n] = asc_phi(n, al, x, q) * qpoch(lam, q, n) / qfactorial(q, n);
      // 2Phi1[lambda, alpha; lambda t; q; xt] = sum_k (lambda,alpha;q)_k (xt)^k / ((q;q)_k (lambda t;q)_k)
      RSeries phi(b.order);
      for (int k = 0; k <= b.order; ++k) {
        const Rational ck = qpoch(lam, q, k) * qpoch(al, q, k) * x.pow(k) / qfactorial(q, k);
        if (ck.is_zero()) continue;
        phi = phi + ck * series_inverse(qpoch_series(lam, q, k, b.order)).shifted(k);
      }
      const RSeries rhs = euler_product_series(lam, q, b.order) * euler_inverse_series(Rational(1), q, b.order) * phi;
      Comparison c;
      c.append(coeffs(lhs), coeffs(rhs));
      return c;
    };
    out.push_back(std::move(s));
  }
  // Every coefficient of t on both sides is a finite sum, so this relation
  // is checked exactly.
  {
    auto s = formal("lemma2-psi", {"lemma2"});
    s.sample = [](Sampler& sm, ParamSample& p) {
      p.set("q", sm.q_formal());
      for (const char* k : {"alpha", "lambda", "x"}) p.set(k, sm.nonzero());
    };
    s.build = [](const ParamSample& p, const BuildSettings& b) {
      const Rational& q = p["q"];
      const Rational& al = p["alpha"];
      const Rational& lam = p["lambda"];
      const Rational& x = p["x"];
      RSeries lhs(b.order);
      for (int n = 0; n <= b.order; ++n) {
        lhs[n] = asc_psi(n, al, x, q) * qpoch(lam.inverse(), q, n) * (lam * q).pow(n) / qfactorial(q, n);
      }
      // (1/(lambda x t);q)_k = (-1)^k q^{binom(k,2)} (lambda x t)^{-k} (lambda x q^{1-k} t;q)_k
      RSeries phi(b.order);
      for (int k = 0; k <= b.order; ++k) {
        const Rational ck = qpoch(lam.inverse(), q, k) * qpoch((al * x).inverse(), q, k) * (al * q).pow(k) /
                            qfactorial(q, k) * bracket_power(k, -1, q) * (lam * x).pow(k);
        if (ck.is_zero()) continue;
        phi = phi + ck * series_inverse(qpoch_series(lam * x * q.pow(1 - k), q, k, b.order)).shifted(k);
      }
      const RSeries rhs = euler_product_series(x * q, q, b.order) * euler_inverse_series(lam * x * q, q, b.order) * phi;
      Comparison c;
      c.append(coeffs(lhs), coeffs(rhs));
      return c;
    };
    out.push_back(std::move(s));
  }
  {
    auto s = formal("theta-eigen", {"qdiff", "theta"});
    s.sample = [](Sampler& sm, ParamSample& p) {
      p.set("q", sm.q_formal());
      p.ints["k"] = sm.uniform_int(0, 6);
    };
    s.build = [](const ParamSample& p, const BuildSettings& b) {
      const Rational& q = p["q"];
      const long k = p.integer("k");
      const CauchySeries f = shifted_cauchy_series(0, q, b.order);
      const CauchySeries lhs = theta_series(f, k, q);
      const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
      const CauchySeries rhs = sign * f.shifted(static_cast<int>(k));
      Comparison c;
      c.append(flatten(lhs, b.order), flatten(rhs, b.order));
      return c;
    };
    out.push_back(std::move(s));
  }
  {
    auto s = formal("theta-crossval", {"qdiff", "theta"});
    s.sample = [](Sampler& sm, ParamSample& p) {
      p.set("q", sm.q_formal(16));
      p.set("x", sm.nonzero(16));
      p.set("y", sm.nonzero(16));
    };
    s.build = [](const ParamSample& p, const BuildSettings&) {
      const Rational& q = p["q"];
      Comparison c;
      for (long n = 0; n <= 8; ++n) {
        const PointFunction pn = [n, &q](const Rational& x, const Rational& y) { return cauchy_P(n, y, x, q); };
        for (long k = 0; k <= n; ++k) {
          const Rational basis = theta_basis(CauchyPoly::basis(n), k, q).evaluate(p["x"], p["y"], q);
          c.append(basis, theta_pointwise_power(pn, k, p["x"], p["y"], q));
        }
      }
      return c;
    };
    out.push_back(std::move(s));
  }
  {
    auto s = formal("chu-vandermonde-II6", {"chu-vandermonde", "hyper"});
    s.sample = [](Sampler& sm, ParamSample& p) {
      p.set("q", sm.q_formal());
      p.set("a", sm.nonzero());
      p.set("c", sm.rational());
    };
    s.build = [](const ParamSample& p, const BuildSettings&) {
      const Rational& q = p["q"];
      const Rational& a = p["a"];
      const Rational& cc = p["c"];
      Comparison c;
      for (long n = 0; n <= 20; ++n) {
        const ParamVector pv{{q.pow(-n), a}, {cc}};
        c.append(rphis_terminating(pv, q, q), qpoch(cc / a, q, n) * a.pow(n) / qpoch(cc, q, n));
      }
      return c;
    };
    out.push_back(std::move(s));
  }
  {
    auto s = formal("chu-vandermonde-II7", {"chu-vandermonde", "hyper"});
    s.sample = [](Sampler& sm, ParamSample& p) {
      p.set("q", sm.q_formal());
      p.set("a", sm.nonzero());
      p.set("c", sm.rational());
    };
    s.build = [](const ParamSample& p, const BuildSettings&) {
      const Rational& q = p["q"];
      const Rational& a = p["a"];
      const Rational& cc = p["c"];
      Comparison c;
      for (long n = 0; n <= 20; ++n) {
        const ParamVector pv{{q.pow(-n), a}, {cc}};
        c.append(rphis_terminating(pv, q, cc * q.pow(n) / a), qpoch(cc / a, q, n) / qpoch(cc, q, n));
      }
      return c;
    };
    out.push_back(std::move(s));
  }
}

}  // namespace qhyper::verify
