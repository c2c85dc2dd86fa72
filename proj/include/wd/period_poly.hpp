#pragma once

#include <cstdint>

#include "wd/cyclotomy.hpp"
#include "wd/ints.hpp"

namespace wd {

/// Closed-form factorization of the reduced period polynomial of order N2
/// over GF(p^{s*m}), dispatching on p mod N2. Supported orders:
/// N2 in {1, 2, 3, 4, 5, 6, 8, 12}.
///
/// Throws UnsupportedOrder for other N2, HypothesisViolated when
/// N2 does not divide (r-1)/(p-1) or a stated divisibility on k fails,
/// IntegralityFailure if a formula produces a non-integer.
PeriodFactorization factorize_reduced_period(std::uint64_t p, unsigned s, unsigned m,
                                             unsigned n2);

/// The two-root factorization {(eps*sqrt(r), N2-1), (-(N2-1)*eps*sqrt(r), 1)}
/// that applies whenever p^jprime = -1 (mod N2); jprime must be the least
/// such exponent and eps = (-1)^{k/(2*jprime)}.
PeriodFactorization semiprimitive_factorization(std::uint64_t p, unsigned k, unsigned n2,
                                                unsigned jprime);

}  // namespace wd
