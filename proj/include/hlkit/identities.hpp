#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hlkit/alphabet.hpp"
#include "hlkit/basis.hpp"
#include "hlkit/partition.hpp"
#include "hlkit/xpoly.hpp"

namespace hlkit {

/// Outcome of one identity check: both sides as computed, and whether they
/// agree exactly.
struct IdentityReport {
  std::string identity;
  bool holds = false;
  XPoly lhs, rhs;
  std::vector<std::string> names;
  std::string detail;
};

/// Power series cut at weighted degree sum_i w_i e_i <= cap.
class TruncatedSeries {
 public:
  TruncatedSeries(XPoly value, std::vector<int> weights, int cap);

  const XPoly& value() const { return value_; }
  const std::vector<int>& weights() const { return weights_; }
  int cap() const { return cap_; }

  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries operator+(const TruncatedSeries& o) const;

 private:
  XPoly value_;
  std::vector<int> weights_;
  int cap_;
};

/// sigma_1(A) = prod_{a in plus} (1-a)^{-1} prod_{b in minus} (1-b), cut at cap D.
/// Throws NonTerminating if some plus letter has weighted degree <= 0.
TruncatedSeries sigma1_series(const Alphabet& a, const std::vector<int>& weights, int D);
/// Total-degree weights (all ones).
TruncatedSeries sigma1_series(const Alphabet& a, int D);

/// sigma_1(-X) sum_μ c_μ P_μ(X) against sum_λ sum_{v in {0,1}^n} (-1)^{|v|} c_{λ-v} P_λ(X),
/// up to x-degree D. X is the first n variables of the layout of the c_μ; the
/// family c is extended to Z^n linearly through the Q' straightening:
/// c_v = sum_μ [Q'_μ] Q'_v * c_μ.
IdentityReport prodx_report(const std::map<Partition, XPoly>& c, std::size_t n, int D);
bool prodx_check(const std::map<Partition, XPoly>& c, std::size_t n, int D);
bool prodx_check(const std::map<Partition, LaurentPoly>& c, std::size_t n, int D);

/// sigma_1(X + XY(1-t)) against sum_{λ, μ ⊆ λ} P_λ(X) P_μ(Y) b_μ ℵ(λ/μ), up to x-degree D.
IdentityReport sigmaxy_report(std::size_t nx, std::size_t ny, int D);
bool sigmaxy_check(std::size_t nx, std::size_t ny, int D);
/// The P(Y)-expansion of the coefficient of P_λ(X) in sigma_1(X + XY(1-t)),
/// extracted from the series itself (nx, ny >= ℓ(λ), D = |λ|).
BasisExpansion sigmaxy_coefficient(const Partition& lambda, std::size_t nx, std::size_t ny);
/// The same coefficient from the closed form b_μ ℵ(λ/μ).
BasisExpansion sigmaxy_coefficient_closed(const Partition& lambda);

/// Expansion of a polynomial symmetric in the variables first..first+count-1
/// in the P basis of those variables, coefficients polynomials in the rest.
std::map<Partition, XPoly> p_expansion(const XPoly& f, std::size_t first, std::size_t count);

/// θ(λ,μ) = t^{n(λ/μ) - |μ|}.
LaurentPoly theta(const Partition& lambda, const Partition& mu);
/// θ(λ,μ) = t^{n(λ) + n(μ) - sum_i λ~_i μ~_i}.
LaurentPoly theta_conjugate_form(const Partition& lambda, const Partition& mu);

/// sigma_1(X + Y + (1/t - 1)XY) against sum θ(λ,μ) P_λ(X) P_μ(Y), up to total degree D.
IdentityReport warnaar_report(std::size_t nx, std::size_t ny, int D);
bool warnaar_check(std::size_t nx, std::size_t ny, int D);
/// sum_μ t^{-|μ|} Q_μ(X) ℵ(λ/μ) against sigma_1(-X) sum_μ θ(λ,μ) P_μ(X), up to degree D.
IdentityReport warnaar3_report(const Partition& lambda, std::size_t n, int D);
bool warnaar3_check(const Partition& lambda, std::size_t n, int D);

/// Dominant-monomial expansion of x^v modulo the straightening relations;
/// identical to the Q'_v expansion.
std::map<Partition, LaurentPoly> reduce_monomial(const IntVector& v);
/// ((x^λ, x^μ)) = b_λ δ_{λμ}, extended bilinearly.
LaurentPoly dominant_scalar(const std::map<Partition, LaurentPoly>& f, const std::map<Partition, LaurentPoly>& g);

/// θ extended linearly to x^w through reduce_monomial.
LaurentPoly theta_extended(const Partition& lambda, const IntVector& w);
/// sum_{v in {0,1}^n} (-1)^{|v|} θ(λ, μ - v), μ padded to n entries.
LaurentPoly theta_signed_sum(const Partition& lambda, const Partition& mu, std::size_t n);
/// θ(λ,μ) prod_{i=1}^{ℓ(μ)} (1 - t^{ν_i - i + 1}), ν_i = λ~_{μ_i}.
LaurentPoly theta_product_form(const Partition& lambda, const Partition& mu);

/// ((x^λ t^{-|λ|} / prod(1 - t/x_i), x^μ / prod(1 - 1/x_i))) against θ(λ,μ), the
/// intermediate pairing with x^μ against theta_signed_sum, and the product form.
IdentityReport theta_scalar_report(const Partition& lambda, const Partition& mu, std::size_t n);
bool theta_scalar_check(const Partition& lambda, const Partition& mu, std::size_t n);

/// Bound on the kernel order needed by ct_scalar: max(0, max -P_m(a)) over
/// the prefix sums P_m of exponents a of f g(1/x) prod(1 - x_i/x_j).
int ct_kernel_bound(const XPoly& f, const XPoly& g);
/// CT(f(x) g(1/x_n..1/x_1) prod_{i<j} (1 - x_i/x_j)/(1 - t x_i/x_j)).
LaurentPoly ct_scalar(const XPoly& f, const XPoly& g, std::optional<int> order = std::nullopt);

/// True when the coefficient vectors of a and b are linearly dependent over Q(t).
bool proportional(const XPoly& a, const XPoly& b);

struct DefqNote {
  bool kernel_relation_zero = false;
  bool intermediate_matches = false;
  bool combination_matches = false;
  bool image_differs = false;
  bool image_not_proportional = false;
  bool straightening_matches = false;
  XPoly image, normalized_image, combination;
  bool holds() const {
    return kernel_relation_zero && intermediate_matches && combination_matches && image_differs &&
           image_not_proportional && straightening_matches;
  }
};
DefqNote defq_counterexample();
bool defq_counterexample_check();

}  // namespace hlkit
