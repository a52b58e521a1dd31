#include "qhyper/verify/reductions.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>

#include "qhyper/error.hpp"
#include "qhyper/families.hpp"
#include "qhyper/qpoch.hpp"
#include "qhyper/verify/catalog.hpp"
#include "qhyper/verify/engine.hpp"

namespace qhyper::verify {

namespace {

struct Atom {
  std::string label;
  Rational value;
};

struct LabeledParams {
  std::vector<Atom> upper, lower;
};

struct Reading {
  LabeledParams params;
  std::array<Atom, 3> args;
  bool signed_prefactor = false;  // (-1)^n q^{-binom(n,2)} in front of the family
};

struct ItemDef {
  std::string family;
  std::function<void(Sampler&, ParamSample&)> sample;
  std::function<Reading(const ParamSample&)> stated;
  std::function<std::optional<Reading>(const ParamSample&)> alternate;
  std::function<Rational(long, const ParamSample&)> rhs;
  std::function<std::vector<LabeledParams>(const ParamSample&)> bases;
  std::function<std::vector<Atom>(const ParamSample&)> atoms;
};

Atom zero() { return {"0", Rational(0)}; }
Atom one() { return {"1", Rational(1)}; }
Atom var(const ParamSample& p, const std::string& name) { return {name, p[name]}; }
Atom neg(const Atom& a) { return {"-" + a.label, -a.value}; }

std::vector<Atom> zeros(long n) { return std::vector<Atom>(static_cast<std::size_t>(n), zero()); }

std::vector<Atom> named(const ParamSample& p, std::initializer_list<const char*> names) {
  std::vector<Atom> v;
  for (const char* n : names) v.push_back(var(p, n));
  return v;
}

ParamVector to_pv(const LabeledParams& lp) {
  ParamVector pv;
  for (const auto& a : lp.upper) pv.upper.push_back(a.value);
  for (const auto& a : lp.lower) pv.lower.push_back(a.value);
  return pv;
}

std::string list_label(const std::vector<Atom>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].label;
  return s;
}

std::string describe(const Reading& r) {
  return "upper=(" + list_label(r.params.upper) + ") lower=(" + list_label(r.params.lower) + ") args=(" +
         r.args[0].label + "," + r.args[1].label + "," + r.args[2].label + ") prefactor=" +
         (r.signed_prefactor ? "(-1)^n q^-binom(n,2)" : "1");
}

Rational prefactor(bool signed_pref, long n, const Rational& q) {
  return signed_pref ? bracket_power(n, -1, q) : Rational(1);
}

Rational lhs_value(const Reading& r, long n, const Rational& q) {
  return psi_general(n, to_pv(r.params), r.args[0].value, r.args[1].value, r.args[2].value, q);
}

Rational rhs_value(const ItemDef& d, const Reading& r, long n, const ParamSample& p) {
  return prefactor(r.signed_prefactor, n, p["q"]) * d.rhs(n, p);
}

bool matches(const ItemDef& d, const Reading& r, long n_max, const ParamSample& p) {
  try {
    for (long n = 1; n <= n_max; ++n) {
      if (lhs_value(r, n, p["q"]) != rhs_value(d, r, n, p)) return false;
    }
    return lhs_value(r, 0, p["q"]) == rhs_value(d, r, 0, p);
  } catch (const DomainError&) {
    return false;
  }
}

// Pads a base with zero parameters so that 1+s-r equals e.
LabeledParams pad_to(const LabeledParams& base, long e) {
  LabeledParams out = base;
  const long e0 = 1 + static_cast<long>(base.lower.size()) - static_cast<long>(base.upper.size());
  if (e < e0) {
    auto z = zeros(e0 - e);
    out.upper.insert(out.upper.end(), z.begin(), z.end());
  } else if (e > e0) {
    auto z = zeros(e - e0);
    out.lower.insert(out.lower.end(), z.begin(), z.end());
  }
  return out;
}

struct ProbeResult {
  std::optional<Reading> first;
  long matches = 0;
  long candidates = 0;
};

ProbeResult probe(const ItemDef& d, const Reading& stated, long n_max, const ParamSample& p) {
  ProbeResult out;
  const long e_stated = 1 + static_cast<long>(stated.params.lower.size()) - static_cast<long>(stated.params.upper.size());
  std::vector<long> exponents;
  for (long e : {e_stated, 0L, 1L, -1L, 2L}) {
    if (std::find(exponents.begin(), exponents.end(), e) == exponents.end()) exponents.push_back(e);
  }
  const auto atoms = d.atoms(p);
  for (const auto& base : d.bases(p)) {
    for (long e : exponents) {
      const LabeledParams params = pad_to(base, e);
      for (bool sgn : {stated.signed_prefactor, !stated.signed_prefactor}) {
        for (const auto& a0 : atoms) {
          for (const auto& a1 : atoms) {
            for (const auto& a2 : atoms) {
              Reading r{params, {a0, a1, a2}, sgn};
              ++out.candidates;
              if (matches(d, r, n_max, p)) {
                ++out.matches;
                if (!out.first) out.first = r;
              }
            }
          }
        }
      }
    }
  }
  return out;
}

// 0, 1, -1, each variable, its negative, and the variable times `scale`.
std::vector<Atom> atom_set(const ParamSample& p, std::initializer_list<const char*> vars, const char* scale) {
  std::vector<Atom> v{zero(), one(), neg(one())};
  for (const char* n : vars) {
    v.push_back(var(p, n));
    v.push_back(neg(var(p, n)));
    if (scale) v.push_back({std::string(scale) + "*" + n, p[scale] * p[n]});
  }
  return v;
}

void base_sample(Sampler& sm, ParamSample& p, std::initializer_list<const char*> names) {
  p.set("q", sm.q_formal());
  for (const char* n : names) p.set(n, sm.nonzero());
}

LabeledParams sampled_params(const ParamSample& p) {
  LabeledParams lp;
  for (std::size_t i = 0; i < p.pv.upper.size(); ++i) lp.upper.push_back({"a" + std::to_string(i + 1), p.pv.upper[i]});
  for (std::size_t i = 0; i < p.pv.lower.size(); ++i) lp.lower.push_back({"b" + std::to_string(i + 1), p.pv.lower[i]});
  return lp;
}

std::vector<ItemDef> build_items() {
  std::vector<ItemDef> items(kReductionItems);
  // 1: V_n with r = u+1.
  items[0].family = "V_n(x,y,z)";
  items[0].sample = [](Sampler& sm, ParamSample& p) {
    base_sample(sm, p, {"x", "y", "z"});
    const long u = sm.uniform_int(0, 2);
    p.pv = sm.params(u + 1, u);
  };
  items[0].stated = [](const ParamSample& p) {
    return Reading{sampled_params(p), {var(p, "y"), var(p, "x"), var(p, "z")}, true};
  };
  items[0].rhs = [](long n, const ParamSample& p) { return v_poly(n, p.pv, p["x"], p["y"], p["z"], p["q"]); };
  items[0].bases = [](const ParamSample& p) { return std::vector<LabeledParams>{sampled_params(p)}; };
  items[0].atoms = [](const ParamSample& p) { return atom_set(p, {"x", "y", "z"}, nullptr); };
  // 2: phi_n^{(a,b)}(x,y) with r = s+1.
  items[1].family = "phi_n^(a,b)(x,y)";
  items[1].sample = [](Sampler& sm, ParamSample& p) {
    base_sample(sm, p, {"x", "y"});
    const long s = sm.uniform_int(0, 2);
    p.pv = sm.params(s + 1, s);
  };
  items[1].stated = [](const ParamSample& p) {
    return Reading{sampled_params(p), {zero(), var(p, "y"), var(p, "x")}, true};
  };
  items[1].rhs = [](long n, const ParamSample& p) { return sa_phi(n, p.pv, p["x"], p["y"], p["q"]); };
  items[1].bases = items[0].bases;
  items[1].atoms = [](const ParamSample& p) { return atom_set(p, {"x", "y"}, nullptr); };
  // 3: psi_n^{(a,b)}(x,y); substitution y=0, z=-x, x=y, as described in words.
  items[2] = items[1];
  items[2].family = "psi_n^(a,b)(x,y)";
  items[2].stated = [](const ParamSample& p) {
    return Reading{sampled_params(p), {var(p, "y"), zero(), neg(var(p, "x"))}, false};
  };
  items[2].alternate = [](const ParamSample& p) {
    return std::optional<Reading>(Reading{sampled_params(p), {zero(), var(p, "y"), neg(var(p, "x"))}, false});
  };
  items[2].rhs = [](long n, const ParamSample& p) { return sa_psi(n, p.pv, p["x"], p["y"], p["q"]); };
  // 4: h_n(x,y,a,b).
  items[3].family = "h_n(x,y,a,b)";
  items[3].sample = [](Sampler& sm, ParamSample& p) { base_sample(sm, p, {"x", "y", "a", "b"}); };
  items[3].stated = [](const ParamSample& p) {
    return Reading{{{var(p, "a"), zero(), zero()}, zeros(2)}, {var(p, "y"), var(p, "x"), var(p, "b")}, true};
  };
  items[3].rhs = [](long n, const ParamSample& p) { return hahn_h(n, p["x"], p["y"], p["a"], p["b"], p["q"]); };
  items[3].bases = [](const ParamSample& p) { return std::vector<LabeledParams>{{{var(p, "a")}, {}}}; };
  items[3].atoms = [](const ParamSample& p) {
    auto v = atom_set(p, {"x", "y"}, "a");
    v.push_back(var(p, "b"));
    return v;
  };
  // 5: F_n(x,y,z) with r = s and zero parameters.
  items[4].family = "F_n(x,y,z)";
  items[4].sample = [](Sampler& sm, ParamSample& p) {
    base_sample(sm, p, {"x", "y", "z"});
    p.ints["r"] = sm.uniform_int(0, 3);
  };
  items[4].stated = [](const ParamSample& p) {
    const long r = p.integer("r");
    return Reading{{zeros(r), zeros(r)}, {var(p, "x"), var(p, "y"), var(p, "z")}, false};
  };
  items[4].rhs = [](long n, const ParamSample& p) { return trivariate_F(n, p["x"], p["y"], p["z"], p["q"]); };
  items[4].bases = [](const ParamSample&) { return std::vector<LabeledParams>{{}}; };
  items[4].atoms = [](const ParamSample& p) { return atom_set(p, {"x", "y", "z"}, nullptr); };
  // 6 and 7: five-parameter extensions.
  items[5].family = "phi_n^(a,b,c;d,e)(x,y)";
  items[5].sample = [](Sampler& sm, ParamSample& p) { base_sample(sm, p, {"x", "y", "a", "b", "c", "d", "e"}); };
  items[5].stated = [](const ParamSample& p) {
    return Reading{{named(p, {"a", "b", "c"}), named(p, {"d", "e"})}, {zero(), var(p, "x"), var(p, "y")}, true};
  };
  items[5].rhs = [](long n, const ParamSample& p) {
    return ext_phi5(n, p["a"], p["b"], p["c"], p["d"], p["e"], p["x"], p["y"], p["q"]);
  };
  items[5].bases = [](const ParamSample& p) {
    return std::vector<LabeledParams>{{named(p, {"a", "b", "c"}), named(p, {"d", "e"})}};
  };
  items[5].atoms = [](const ParamSample& p) { return atom_set(p, {"x", "y"}, nullptr); };
  items[6] = items[5];
  items[6].family = "psi_n^(a,b,c;d,e)(x,y)";
  items[6].rhs = [](long n, const ParamSample& p) {
    return ext_psi5(n, p["a"], p["b"], p["c"], p["d"], p["e"], p["x"], p["y"], p["q"]);
  };
  // 8-11: Hahn families in one parameter a.
  auto hahn_sample = [](Sampler& sm, ParamSample& p) { base_sample(sm, p, {"x", "y", "a"}); };
  auto hahn_bases = [](const ParamSample& p) {
    return std::vector<LabeledParams>{{{var(p, "a")}, {}}, {{}, {}}};
  };
  auto hahn_atoms = [](const ParamSample& p) { return atom_set(p, {"x", "y"}, "a"); };
  for (int i = 7; i < 11; ++i) {
    items[i].sample = hahn_sample;
    items[i].bases = hahn_bases;
    items[i].atoms = hahn_atoms;
  }
  // 8: words give a=(a,0), b=(0), x=0, z=x; the display shows Psi^{(0,0)}(x,ax,y).
  items[7].family = "phi_n^(a)(x,y)";
  items[7].stated = [](const ParamSample& p) {
    return Reading{{{var(p, "a"), zero()}, zeros(1)}, {zero(), var(p, "y"), var(p, "x")}, true};
  };
  items[7].alternate = [](const ParamSample& p) {
    return std::optional<Reading>(
        Reading{{zeros(2), zeros(1)}, {var(p, "x"), {"a*x", p["a"] * p["x"]}, var(p, "y")}, true});
  };
  items[7].rhs = [](long n, const ParamSample& p) { return hahn2_phi(n, p["a"], p["x"], p["y"], p["q"]); };
  // 9: r=2, s=1, zero parameters, y=ax, z=y.
  items[8].family = "psi_n^(a)(x,y)";
  items[8].stated = [](const ParamSample& p) {
    return Reading{{zeros(2), zeros(1)}, {var(p, "x"), {"a*x", p["a"] * p["x"]}, var(p, "y")}, false};
  };
  items[8].rhs = [](long n, const ParamSample& p) { return hahn2_psi(n, p["a"], p["x"], p["y"], p["q"]); };
  // 10: r=2, s=1, zero parameters, x=y=0, z=x.
  items[9].family = "phi_n^(a)(x)";
  items[9].stated = [](const ParamSample& p) {
    return Reading{{zeros(2), zeros(1)}, {zero(), zero(), var(p, "x")}, true};
  };
  items[9].rhs = [](long n, const ParamSample& p) { return asc_phi(n, p["a"], p["x"], p["q"]); };
  // 11: r=s, zero parameters, y=ax, z=1.
  items[10].family = "psi_n^(a)(x)";
  items[10].stated = [](const ParamSample& p) {
    return Reading{{zeros(1), zeros(1)}, {var(p, "x"), {"a*x", p["a"] * p["x"]}, one()}, false};
  };
  items[10].rhs = [](long n, const ParamSample& p) { return asc_psi(n, p["a"], p["x"], p["q"]); };
  return items;
}

const std::vector<ItemDef>& items() {
  static const std::vector<ItemDef> v = build_items();
  return v;
}

const ItemDef& item_def(int item) {
  if (item < 1 || item > kReductionItems) throw ArgumentError("reduction item must be in 1..11");
  return items()[static_cast<std::size_t>(item - 1)];
}

std::string residual(const ItemDef& d, const Reading& r, long n_max, const ParamSample& p) {
  std::vector<Rational> l, rr;
  for (long n = 0; n <= n_max; ++n) {
    l.push_back(lhs_value(r, n, p["q"]));
    rr.push_back(rhs_value(d, r, n, p));
  }
  Rational m = 0;
  long at = -1;
  for (std::size_t i = 0; i < l.size(); ++i) {
    const Rational diff = (l[i] - rr[i]).abs();
    if (diff > m) {
      m = diff;
      at = static_cast<long>(i);
    }
  }
  if (m.is_zero()) return "0";
  return m.dyadic_upper_bound(24).to_decimal(12) + " at n=" + std::to_string(at);
}

}  // namespace

void sample_reduction(int item, Sampler& sm, ParamSample& p) { item_def(item).sample(sm, p); }

IdentityReport reduction_check(int item, long n_max, const ParamSample& sample) {
  const ItemDef& d = item_def(item);
  IdentityReport rep;
  rep.id = "remark2-" + std::string(item < 10 ? "0" : "") + std::to_string(item);
  rep.mode = Mode::Formal;
  rep.seed = sample.seed;
  rep.sample = sample;
  rep.order = static_cast<int>(n_max);
  rep.epsilon = 0;
  try {
    const Reading stated = d.stated(sample);
    Rational dev = 0;
    for (long n = 0; n <= n_max; ++n) {
      const Rational diff = (lhs_value(stated, n, sample["q"]) - rhs_value(d, stated, n, sample)).abs();
      if (diff > dev) dev = diff;
    }
    rep.deviation = dev;
    rep.pass = dev.is_zero();
    std::string notes = d.family + "; stated " + describe(stated);
    notes += rep.pass ? ": holds" : ": fails, residual " + residual(d, stated, n_max, sample);
    if (d.alternate) {
      if (const auto alt = d.alternate(sample)) {
        notes += "; displayed form " + describe(*alt) + " residual " + residual(d, *alt, n_max, sample);
      }
    }
    if (!rep.pass) {
      const ProbeResult pr = probe(d, stated, n_max, sample);
      if (pr.first) {
        notes += "; corrected substitution " + describe(*pr.first) + " (" + std::to_string(pr.matches) + " of " +
                 std::to_string(pr.candidates) + " candidates match)";
      } else {
        notes += "; no candidate among " + std::to_string(pr.candidates) + " matches";
      }
    }
    rep.notes = notes;
  } catch (const DomainError&) {
    throw;  // singular sample: the engine resamples
  } catch (const Error& e) {
    rep.errored = true;
    rep.pass = false;
    rep.notes = std::string("error: ") + e.what();
  }
  return rep;
}

void register_remark2(std::vector<IdentitySpec>& out) {
  for (int item = 1; item <= kReductionItems; ++item) {
    IdentitySpec s;
    s.id = "remark2-" + std::string(item < 10 ? "0" : "") + std::to_string(item);
    s.mode = Mode::Formal;
    s.groups = {"remark2", "polyfam"};
    s.sample = [item](Sampler& sm, ParamSample& p) { sample_reduction(item, sm, p); };
    s.build = [item](const ParamSample& p, const BuildSettings&) {
      const ItemDef& d = item_def(item);
      const Reading stated = d.stated(p);
      Comparison c;
      for (long n = 0; n <= 8; ++n) c.append(lhs_value(stated, n, p["q"]), rhs_value(d, stated, n, p));
      c.notes = reduction_check(item, 8, p).notes;
      return c;
    };
    out.push_back(std::move(s));
  }
}

}  // namespace qhyper::verify
