#pragma once

#include "qhyper/verify/report.hpp"
#include "qhyper/verify/sampler.hpp"

namespace qhyper::verify {

constexpr int kReductionItems = 11;

/// Draws the parameters used by one reduction item.
void sample_reduction(int item, Sampler& sm, ParamSample& p);

/// Evaluates both sides of reduction `item` (1..11) exactly for n = 0..n_max
/// under the substitution as stated. If it fails, a bounded candidate search
/// (parameter padding to other exponents, argument triples, prefactor) is
/// run and the first matching substitution is recorded in the notes.
/// Failures are reported, never thrown.
IdentityReport reduction_check(int item, long n_max, const ParamSample& sample);

}  // namespace qhyper::verify
