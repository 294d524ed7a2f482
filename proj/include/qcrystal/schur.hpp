#pragma once

#include <map>
#include <span>
#include <vector>

#include "qcrystal/polynomial.hpp"
#include "qcrystal/tableaux.hpp"

namespace qcrystal {

/// Sum of x^weight(T) over the given tableaux.
SymPolynomial generating_poly(std::span<const YoungTableau> ts, int n);
SymPolynomial generating_poly(std::span<const ShiftedTableau> ts, int n);

/// s_lambda(x_1..x_n) as the generating polynomial of SSYT_n(lambda).
SymPolynomial schur(const Partition& shape, int n);
/// P_gamma(x_1..x_n) as the generating polynomial of SSHT_n(gamma).
SymPolynomial schur_p(const StrictPartition& shape, int n);

/// Partitions lambda, with multiplicity and in decreasing lexicographic order,
/// such that P_gamma = sum of s_lambda in n variables. Read off the highest
/// weights of the shifted crystal. Throws VerificationFailure if the sum does
/// not reproduce P_gamma.
std::vector<Partition> expand_p_in_schur(const StrictPartition& shape, int n);

/// Coefficients f with P_gamma P_delta = sum f_eps P_eps in `nvars` variables
/// (default |gamma| + |delta|, at least 1). Throws VerificationFailure if a
/// leading term is not a strict partition with positive coefficient.
std::map<StrictPartition, Integer> expand_product_in_p(const StrictPartition& a,
                                                       const StrictPartition& b,
                                                       int nvars = 0);

}  // namespace qcrystal
