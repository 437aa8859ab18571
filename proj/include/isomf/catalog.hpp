#pragma once

#include <optional>
#include <string>

#include "isomf/localmf.hpp"

namespace isomf {

// Local cores of the classical multiplicative functions.
// Names: zeta, zeta_k, tau, sigma_k, phi, mu, liouville.
//
// With no prime given the core is symbolic (PolyP scalars); with a numeric
// prime it is specialized to BigInt. phi and mu have truncated power-series
// cores cut at `horizon`.
CoreParams catalog(const std::string& name, std::optional<int> k,
                   std::optional<mpz_class> p, int horizon = kDefaultHorizon);

// Same entry as a prime-indexed family for global evaluation.
MFFamily catalog_family(const std::string& name, std::optional<int> k = std::nullopt);

}  // namespace isomf
