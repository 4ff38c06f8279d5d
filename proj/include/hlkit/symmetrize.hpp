#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hlkit/basis.hpp"
#include "hlkit/partition.hpp"
#include "hlkit/xpoly.hpp"

namespace hlkit {

/// Transposes x_i and x_{i+1} (1-based i, 1 <= i < n).
XPoly swap_si(const XPoly& f, int i);

/// Isobaric divided difference (x_i f - x_{i+1} f^{s_i}) / (x_i - x_{i+1}).
XPoly pi_i(const XPoly& f, int i);

/// Reduced word of the longest permutation of S_n used by pi_omega:
/// 1, 2 1, 3 2 1, ..., (n-1) ... 1.
std::vector<int> longest_reduced_word(std::size_t n);

/// Full symmetrizer as the composition of pi_i along longest_reduced_word.
XPoly pi_omega(const XPoly& f);
/// Full symmetrizer as sum_σ sgn(σ) (f x^ρ)^σ / prod_{i<j}(x_i - x_j),
/// dividing by each factor exactly.
XPoly pi_omega_by_sum(const XPoly& f);

/// Keeps the terms x^v with v >= 0 (all suffix sums nonnegative).
XPoly truncate_nonneg(const XPoly& f);

/// Reads a symmetric polynomial in Schur functions S_λ(x_1..x_n):
/// c_λ is the coefficient of x^{λ+ρ} in f * a_ρ. f is assumed symmetric;
/// throws PreconditionViolation when some λ would end in a negative part.
BasisExpansion schur_coefficients(const XPoly& f);

/// Truncation followed by the symmetrizer, read in the Schur basis with
/// S_v = 0 once v ends in a negative part. For a monomial x^v this is the
/// straightened S_v.
BasisExpansion cup(const XPoly& f);

/// Smallest K such that no kernel term t^k (x_i/x_j)^k with k > K can
/// survive truncation of x^u times the kernel: max(0, max_{k>=2} S_k(u)),
/// S_k the suffix sums of u.
int kernel_order_bound(const IntVector& u);

/// Terms of x^u prod_{i<j} (1 - t x_i/x_j)^{-1} that survive truncation, each
/// geometric factor expanded to `order` (default: kernel_order_bound(u)).
/// Factors are multiplied column by column from j = n down to 2, discarding
/// partial terms whose settled suffix sums are already negative.
XPoly kernel_expansion(const IntVector& u, std::optional<int> order = std::nullopt);

/// cup applied to x^u times the kernel, in the Schur basis.
BasisExpansion cup_kernel(const IntVector& u, std::optional<int> order = std::nullopt);

/// x^v prod_{i<j}(1 - t x_j/x_i) pi_omega, unnormalized.
XPoly defq_image(const IntVector& v);

/// (1-t)^n / (t;t)_{m_0} times defq_image(λ), m_0 = n - ℓ(λ). Throws
/// NotAPartition unless the padded λ is a partition.
XPoly defq_operator(const IntVector& lambda);
XPoly defq_operator(const Partition& lambda, std::size_t n);

}  // namespace hlkit
