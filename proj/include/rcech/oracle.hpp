#pragma once

#include <cstddef>
#include <vector>

#include "rcech/abelian.hpp"
#include "rcech/cochain.hpp"
#include "rcech/nerve.hpp"

namespace rcech {

// The brute force route: enumerate Real cochains as explicit value tables,
// check the cocycle condition pointwise, list coboundaries, and classify
// the quotient by counting element orders. Shares nothing with the matrix
// route except the nerve itself, so agreement is meaningful evidence.
struct OracleOptions {
  // Upper bound on search nodes (assignments tried during enumeration).
  std::size_t node_budget = std::size_t(1) << 24;
};

// All Real n-cocycle tables. prune = false disables the pointwise cut and
// filters the full product space instead; both must agree.
std::vector<ValueTable> oracle_cocycles(const Nerve& nv, std::size_t n, const RealCoefficient& a,
                                        const OracleOptions& opt = {}, bool prune = true);

// All distinct differentials of Real (n-1)-cochains; the zero table alone
// when n == 0.
std::vector<ValueTable> oracle_coboundaries(const Nerve& nv, std::size_t n,
                                            const RealCoefficient& a,
                                            const OracleOptions& opt = {});

AbelianInvariants oracle_cohomology(const Nerve& nv, std::size_t n, const RealCoefficient& a,
                                    const OracleOptions& opt = {});

}  // namespace rcech
