#pragma once

#include <string>

#include "pthresh/lp.hpp"
#include "pthresh/rational.hpp"
#include "pthresh/weights.hpp"

namespace pthresh {

// b_n = 1 - sum_{i<n} b_i / (n+1-i).
Rational seq_b(int n);
// a_n = b_1 + ... + b_n.
Rational seq_a(int n);
// c_n = floor((n+1)/2) * ceil((n+1)/2).
long seq_c(int n);

inline constexpr int kAlphaCap = 7;

// Variables x_sigma for non-empty sigma of {1..n} (variable index = mask - 1).
// At step k, candidate C_k must score at least as much as every C_j, j > k,
// and at least 1; a ballot sigma gives w_{1+|sigma & {1..k-1}|} to each
// candidate it names. Minimise sum x_sigma.
LinearProgram build_alpha_lp(int n, const WeightScheme& w, int cap = kAlphaCap);

// Optimum of build_alpha_lp; memoised and safe for concurrent callers.
Rational alpha(int n, const WeightScheme& w = WeightScheme::harmonic());

// Optimal point of the alpha LP (index = mask - 1).
std::vector<Rational> alpha_point(int n, const WeightScheme& w = WeightScheme::harmonic());

std::string subset_name(unsigned mask);

}  // namespace pthresh
