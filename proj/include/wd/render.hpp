#pragma once

#include <string>

#include "wd/weights.hpp"

namespace wd {

/// Enumerator polynomial form, e.g. "1+120x^22" — the presentation used in
/// the literature for weight distributions.
std::string to_polynomial_text(const WeightDistribution& dist);

/// JSON document; big values are decimal strings so downstream consumers
/// never hit 64-bit overflow.
std::string to_json(const WeightDistribution& dist, Classification classification);

/// Inverse of to_json for the fields that define the distribution; used by
/// the result cache and round-trip tests.
WeightDistribution from_json(const std::string& text);

}  // namespace wd
