#pragma once

// Finite modules Z_n^d over a commutative Z_n-algebra A, given by the action
// matrices of A's additive generators (m -> m * T).

#include <string>
#include <vector>

#include "finring/certificate.hpp"
#include "finring/checker.hpp"
#include "finring/howell.hpp"
#include "finring/ring.hpp"

namespace finring {

struct FiniteModule {
  Residue modulus = 2;
  std::size_t dim = 1;
  std::vector<Matrix> action;
  std::string name;

  std::uint64_t order() const;
};

/// Z_n as a module over itself.
FiniteModule scalar_module(Residue n);
/// A structure ring over Z_n viewed as a Z_n-module (scalar action).
FiniteModule scalar_restriction(const Ring& r);

/// Smallest submodule containing `gens` (closed under the action and Z).
HowellForm submodule_generated(const FiniteModule& m, const std::vector<std::vector<Residue>>& gens);
bool is_submodule(const FiniteModule& m, const HowellForm& sub);

/// Every non-zero cyclic submodule Am + Zm meets `sub`. Throws
/// std::invalid_argument if `sub` is not closed under the action.
Certificate is_essential_submodule(const FiniteModule& m, const HowellForm& sub,
                                   std::uint64_t cap = default_element_cap());

CheckOutcome recheck_module(const FiniteModule& m, const HowellForm& sub, const Certificate& cert);

}  // namespace finring
