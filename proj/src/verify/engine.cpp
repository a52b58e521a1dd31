#include "qhyper/verify/engine.hpp"

#include <algorithm>

#include "qhyper/error.hpp"
#include "qhyper/verify/catalog.hpp"

namespace qhyper::verify {

namespace {

constexpr int kMaxAttempts = 100;

bool constraints_hold(const IdentitySpec& spec, const ParamSample& p) {
  const Rational margin(15, 16);
  for (const auto& c : spec.constraints) {
    if (c.magnitude(p).abs() > margin * c.bound) return false;
  }
  return true;
}

Rational formal_deviation(const Comparison& c) {
  Rational dev = 0;
  for (std::size_t i = 0; i < c.lhs.size(); ++i) {
    const Rational d = (c.lhs[i] - c.rhs[i]).abs();
    if (d > dev) dev = d;
  }
  return dev;
}

Rational relative_deviation(const Comparison& c) {
  Rational dev = 0;
  for (std::size_t i = 0; i < c.lhs.size(); ++i) {
    Rational scale = c.lhs[i].abs();
    if (scale < Rational(1)) scale = 1;
    const Rational d = (c.lhs[i] - c.rhs[i]).abs() / scale;
    if (d > dev) dev = d;
  }
  return dev;
}

IdentityReport base_report(const IdentitySpec& spec, const ParamSample& sample, int order,
                           const Rational& eps) {
  IdentityReport r;
  r.id = spec.id;
  r.mode = spec.mode;
  r.seed = sample.seed;
  r.sample = sample;
  r.order = order;
  r.epsilon = eps;
  return r;
}

Comparison build_checked(const IdentitySpec& spec, const ParamSample& sample, const BuildSettings& bs) {
  Comparison c = spec.build(sample, bs);
  if (c.lhs.size() != c.rhs.size()) {
    throw Error("builders for " + spec.id + " returned " + std::to_string(c.lhs.size()) + " and " +
                std::to_string(c.rhs.size()) + " values");
  }
  return c;
}

void finish(IdentityReport& r, const Comparison& c) {
  r.notes = c.notes;
  if (r.mode == Mode::Formal) {
    r.deviation = formal_deviation(c);
    r.pass = r.deviation.is_zero();
  } else {
    const Rational dev = relative_deviation(c);
    r.pass = dev <= numeric_tolerance();
    r.deviation = dev.dyadic_upper_bound(53);
  }
}

BuildSettings settings_for(int order, const Rational& eps) {
  BuildSettings bs;
  bs.order = order;
  bs.sum.eps = eps;
  return bs;
}

}  // namespace

void Comparison::append(const std::vector<Rational>& l, const std::vector<Rational>& r) {
  lhs.insert(lhs.end(), l.begin(), l.end());
  rhs.insert(rhs.end(), r.begin(), r.end());
}

void Comparison::append(const Rational& l, const Rational& r) {
  lhs.push_back(l);
  rhs.push_back(r);
}

ParamSample sample_params(const IdentitySpec& spec, std::uint64_t seed,
                          const std::function<void(const ParamSample&)>& probe) {
  Sampler sampler(seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    ParamSample p;
    p.seed = seed;
    p.derivation = "mt19937_64 seed " + std::to_string(seed) + ", draw " + std::to_string(attempt);
    try {
      spec.sample(sampler, p);
      if (!constraints_hold(spec, p)) continue;
      if (probe) probe(p);
    } catch (const DomainError&) {
      continue;
    }
    return p;
  }
  throw Error("sampler for " + spec.id + " rejected " + std::to_string(kMaxAttempts) +
              " consecutive draws");
}

IdentityReport check_formal(const IdentitySpec& spec, const ParamSample& sample, int order) {
  IdentityReport r = base_report(spec, sample, order, Rational(0));
  try {
    finish(r, build_checked(spec, sample, settings_for(order, Rational::pow2(-80))));
  } catch (const Error& e) {
    r.errored = true;
    r.pass = false;
    r.notes = std::string("error: ") + e.what();
  }
  return r;
}

IdentityReport check_numeric(const IdentitySpec& spec, const ParamSample& sample,
                             const Rational& eps, int order) {
  IdentityReport r = base_report(spec, sample, order, eps);
  try {
    finish(r, build_checked(spec, sample, settings_for(order, eps)));
  } catch (const Error& e) {
    r.errored = true;
    r.pass = false;
    r.notes = std::string("error: ") + e.what();
  }
  return r;
}

std::vector<IdentityReport> run_suite(const std::string& suite, const VerifyConfig& config) {
  const auto specs = resolve_suite(suite);
  if (specs.empty()) throw ArgumentError("unknown suite '" + suite + "'");
  const Rational eps = Rational::pow2(-config.epsilon_bits);
  std::vector<IdentityReport> out;
  for (const IdentitySpec* spec : specs) {
    const BuildSettings bs = settings_for(config.order, eps);
    for (int trial = 0; trial < config.trials; ++trial) {
      const std::uint64_t seed = derive_seed(config.seed, suite, spec->id, static_cast<std::uint64_t>(trial));
      IdentityReport rep;
      try {
        // A draw whose builders hit a singular point is rejected like a
        // constraint violation.
        Comparison built;
        ParamSample sample = sample_params(*spec, seed, [&](const ParamSample& p) {
          built = build_checked(*spec, p, bs);
        });
        rep = base_report(*spec, sample, config.order, spec->mode == Mode::Numeric ? eps : Rational(0));
        finish(rep, built);
      } catch (const Error& e) {
        rep = base_report(*spec, ParamSample{}, config.order, eps);
        rep.seed = seed;
        rep.errored = true;
        rep.pass = false;
        rep.notes = std::string("error: ") + e.what();
      }
      rep.trial = trial;
      out.push_back(std::move(rep));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const IdentityReport& a, const IdentityReport& b) {
    return a.id != b.id ? a.id < b.id : a.trial < b.trial;
  });
  return out;
}

}  // namespace qhyper::verify
