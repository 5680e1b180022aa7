#pragma once

// Closed-form quantities of the probabilistic analysis: expected survivor
// counts against a randomizing balance, per-round rate functions and their
// maximizers, Hamming-ball volumes, entropy bounds and the two-counterfeit
// approximations.

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "balance/strategies.hpp"

namespace balance::analysis {

struct Optimum {
    double argmax = 0.0;
    double max = 0.0;
};

/// Sampled curve over a parameter grid.
struct RateCurve {
    std::vector<double> grid;
    std::vector<double> values;
    double argmax = 0.0;
    double max = 0.0;
};

/// Golden-section search for a maximum of `f` on the open interval
/// (lo, hi); stops once the bracket is narrower than `tolerance`. Never
/// evaluates the endpoints.
Optimum golden_section_maximize(const std::function<double(double)>& f, double lo, double hi,
                                double tolerance = 1e-8);

/// Expected number of surviving hypotheses when the balance says L^ or R^
/// with probability p each and D^ otherwise:
///   sum_i 2 (1-2p)^(q-q_i) p^(q_i), a coin with q_i = 0 contributing 0.
double f_honest(const RowProfile& profile, double p, int q);

/// max over p in (0, 1/2) of f_honest, seeded with p = r/2 where r is the
/// mean on-balance fraction of the profile.
Optimum maximize_f_honest(const RowProfile& profile, int q);

/// g(r) = (1-r)^-1 (r / (2(1-r)))^-r on (0, 1). g(r) -> 1 as r -> 0 and
/// g(r) -> 2 as r -> 1. Throws DomainError outside the open interval.
double g_rate(double r);

inline constexpr double kGRateLimitAtOne = 2.0;

/// 2 (1-2p)^(q-q_m) p^(q_m) sum_{i=0}^{q_m-k-1} C(q_m, i); zero when q_m <= k.
double h_dishonest(int q_m, double p, int q, int k);

/// Binary entropy in bits, H(0) = H(1) = 0.
double binary_entropy(double p);

/// v(r, r2) = g(r) 2^(-r H((r - r2)/r)) for 0 <= r2 < r < 1; v(r, 0) = g(r).
double v_rate(double r, double r2);

/// Whether the entropy estimate of the binomial tail behind v is in its
/// valid regime, (r - r2)/r <= 1/2.
bool v_rate_in_approximation_region(double r, double r2) noexcept;

/// Golden-section maximizer of v(., r2) on (r2, 1), or of g on (0, 1) when
/// r2 = 0. For r2 above roughly 0.23 the supremum of v is the boundary limit
/// r -> r2+, which this search does not report.
Optimum optimal_r(double r2);

/// N interior grid points lo + (hi - lo) i / (N + 1), i = 1..N.
std::vector<double> open_grid(double lo, double hi, int points);

RateCurve sample_curve(const std::function<double(double)>& f, const std::vector<double>& grid);

/// (1-p)^(rq) - (1-2p)^(rq): probability that a coin on the balance rq times
/// is read as heavier when one +Q and one -Q coin are present.
double phi(double p, double r, double q);

/// (1-phi)^(n-1) (1 + (n-1) phi), under the independence approximation.
double pr_xplus_lt2(int n, double phi_value);

/// Large-q form 1 - (n-1)^2 2^-q of pr_xplus_lt2 at p = r = 1/2.
double pr_xplus_lt2_large_q(int n, int q);

struct DishonestBound {
    std::uint64_t paper_threshold = 0;  ///< ceil(space / sum_{j<=k} C(q,j))
    std::uint64_t exact_threshold = 0;  ///< ceil(space / ball volume)
};

/// Heavy k-lie game: smallest n with n * ball >= 3^q, with the ball counted
/// as sum C(q,j) and as sum C(q,j) 2^j.
DishonestBound bound_heavy_dishonest(int q, int k);

/// All coins always on the balance: the alphabet is {L^, R^}, space 2^q and
/// ball sum C(q,j) (both thresholds coincide).
DishonestBound bound_all_on_dishonest(int q, int k);

/// Exact binomial coefficient; throws CapacityError on overflow.
std::uint64_t binomial(int n, int k);

/// sum_{i<=radius} C(length, i) (arity-1)^i. Throws CapacityError on overflow.
std::uint64_t hamming_ball_volume(int length, int radius, int arity);

/// log2 of hamming_ball_volume, valid for lengths far beyond 64 bits.
double log2_hamming_ball_volume(int length, int radius, int arity);

/// log_3 of the number of hypotheses; exact when that number is a power of 3.
double entropy_lower_bound(int n, int hypotheses_per_coin);

/// Integers a (coins per pan in the first adaptive weighing, unknown prior)
/// with 2a <= 3^(q-1) and 2n - 4a <= 3^(q-1). Empty when none fits.
std::optional<std::pair<int, int>> adaptive_first_move_range(int n, int q);

/// 2 exp(-2 delta^2 q).
double chernoff_tail_bound(int q, double delta);

/// 2 (3/2)^(q/3).
double two_plus_threshold(int q);

}  // namespace balance::analysis
