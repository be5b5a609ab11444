#pragma once

#include <cstdint>

#include "ncg/gauge.hpp"

namespace ncg {

struct SuiteOptions {
  int N = 2;
  int n = 2;
  std::uint64_t seed = 1;
  int pairs = 20;
};

/// Every numerical identity of the library for one signature, with check
/// names prefixed by module ("clifford.", "dirac.", ...). Checks that only
/// hold in the Riemannian signature are informational elsewhere.
IdentityReport run_identity_suite(const Signature& sig, const SuiteOptions& opt);

}  // namespace ncg
