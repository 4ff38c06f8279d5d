#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "hlkit/alphabet.hpp"
#include "hlkit/basis.hpp"
#include "hlkit/partition.hpp"
#include "hlkit/xpoly.hpp"

namespace hlkit {

/// Q'_μ = sum_T t^{ch T} S_{sh T} over tableaux of content μ. Cached.
const BasisExpansion& qprime_schur(const Partition& mu);

/// Q'_u for u in Z^n, defined through the kernel: x^u prod_{i<j}(1 - t x_i/x_j)^{-1}
/// truncated and symmetrized, then rewritten in the Q' basis. Cached.
const BasisExpansion& qprime_indexed(const IntVector& u);

/// Exact basis changes between S and Q' (triangular in lexicographic order),
/// and between Q and P (Q_λ = b_λ P_λ). Other pairs throw std::invalid_argument.
BasisExpansion convert_basis(const BasisExpansion& e, Basis target);

/// Triangular back-substitution with polynomial coefficients: the map
/// ν -> c_ν of sum c_ν S_ν rewritten as sum d_μ Q'_μ.
std::map<Partition, XPoly> schur_to_qprime(const std::map<Partition, XPoly>& s);

XPoly qprime_eval(const Partition& lambda, const Alphabet& a);
/// Q_λ(A) = Q'_λ(A(1-t)).
XPoly hl_Q(const Partition& lambda, const Alphabet& a);
/// P_λ(A) = Q_λ(A) / b_λ, dividing every coefficient exactly.
XPoly hl_P(const Partition& lambda, const Alphabet& a);
/// Value of an expansion in any of the four bases on the alphabet A.
XPoly evaluate(const BasisExpansion& e, const Alphabet& a);

/// ℵ(λ/μ) = b_μ^{-1} t^{n(λ/μ)} prod_{i=1}^{ℓ(μ)} (1 - t^{ν_i - i + 1}) with
/// ν_i = λ~_{μ_i}; zero when μ is not contained in λ.
LaurentPoly aleph(const Partition& lambda, const Partition& mu);
/// The same value column by column: a column c holding α = m_c(μ) marked
/// boxes under β = λ~_c - μ~_c free ones contributes t^{C(β,2)} [α+β, α].
LaurentPoly aleph_column_rule(const Partition& lambda, const Partition& mu);

/// Q'_λ(X+1) = sum_{μ ⊆ λ} ℵ(λ/μ) Q'_μ(X).
BasisExpansion add_one(const Partition& lambda);
/// Q'_λ(X-1): for each i, α_i of the m_i parts equal to i drop to i-1,
/// with weight prod_i (-1)^{α_i} [m_i, α_i].
BasisExpansion sub_one(const Partition& lambda);

/// All nonzero Q'_{λ/μ}(A), defined by Q'_λ(A+Y) = sum_μ Q'_{λ/μ}(A) Q'_μ(Y).
/// Computed from the Schur expansion of Q'_λ via skew Schur functions and a
/// triangular change of basis in the second alphabet.
std::map<Partition, XPoly> skew_qprime_all(const Partition& lambda, const Alphabet& a);
XPoly skew_qprime(const Partition& lambda, const Partition& mu, const Alphabet& a);

/// sum over plane partitions of shape λ in letters 1..n of their ℵ weights.
XPoly plane_partition_qprime(const Partition& lambda, std::size_t n);

/// λ = [n^k + ν, ζ] with k = #{i : λ_i >= n}, so ζ_1 < n.
struct RectangleSplit {
  int k = 0;
  Partition nu;
  Partition zeta;
};
RectangleSplit split_rectangle(const Partition& lambda, int n);

/// Both sides of
/// Q'_λ(t^r - X) = t^{n(ν)+r|ν|} prod_{i=r}^{k+r-1} prod_j (t^i - x_j) Q'_ζ(t^{k+r} - X)
/// for X = {x_1..x_n}.
std::pair<XPoly, XPoly> one_minus_X_sides(const Partition& lambda, int r, std::size_t n);
bool one_minus_X_factorization_check(const Partition& lambda, int r, std::size_t n);

/// t^{n(λ)} prod_{i=0}^{ℓ(λ)-1} (1 - x t^{-i}) for the letter x.
XPoly principal_specialization(const Partition& lambda, const Letter& x);
/// Compares principal_specialization with Q'_λ evaluated on 1 - {x}.
bool principal_specialization_check(const Partition& lambda, const Letter& x);

/// Both sides of the two-letter factorization of Q'_{2^k+ν, 1^β}(1 - x_1 - x_2);
/// the factor (t;t)_β S_{1^β}((t^k - x_1 - x_2)/(1-t)) is expanded through
/// power sums, where p_i picks up 1/(1 - t^i).
std::pair<XPoly, XPoly> two_letter_factorization_sides(int k, const Partition& nu, int beta);
bool two_letter_factorization_check(int k, const Partition& nu, int beta);

}  // namespace hlkit
