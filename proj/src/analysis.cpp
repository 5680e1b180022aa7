#include "balance/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace balance::analysis {

namespace {

void require_probability(double p, double hi, const char* name) {
    if (!(p >= 0.0 && p <= hi))
        throw DomainError(std::string(name) + " must lie in [0, " + std::to_string(hi) + "], got " + std::to_string(p));
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b) throw CapacityError("integer overflow in count");
    return a + b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) throw CapacityError("integer overflow in count");
    return a * b;
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return a / b + (a % b != 0 ? 1 : 0); }

double binomial_real(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double c = 1.0;
    for (int i = 1; i <= k; ++i) c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
    return c;
}

}  // namespace

Optimum golden_section_maximize(const std::function<double(double)>& f, double lo, double hi, double tolerance) {
    if (!(lo < hi)) throw DomainError("golden-section bracket is empty");
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tolerance) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return fc >= fd ? Optimum{c, fc} : Optimum{d, fd};
}

double f_honest(const RowProfile& profile, double p, int q) {
    require_probability(p, 0.5, "p");
    double total = 0.0;
    for (int qi : profile.qvec) {
        if (qi < 0 || qi > q) throw DomainError("on-balance count outside [0, q]");
        if (qi == 0) continue;
        total += 2.0 * std::pow(1.0 - 2.0 * p, q - qi) * std::pow(p, qi);
    }
    return total;
}

Optimum maximize_f_honest(const RowProfile& profile, int q) {
    if (profile.qvec.empty() || q < 1) return {0.0, 0.0};
    double on = 0.0;
    for (int qi : profile.qvec) on += qi;
    const double r = on / (static_cast<double>(q) * static_cast<double>(profile.qvec.size()));

    // A sum of unimodal terms need not be unimodal: locate the best cell of a
    // coarse grid (plus the p = r/2 seed) and refine inside it.
    auto f = [&](double p) { return f_honest(profile, p, q); };
    const auto grid = open_grid(0.0, 0.5, 1000);
    double best_p = std::clamp(r / 2.0, grid.front(), grid.back());
    double best = f(best_p);
    for (double p : grid) {
        const double v = f(p);
        if (v > best) {
            best = v;
            best_p = p;
        }
    }
    const double step = 0.5 / 1001.0;
    const Optimum refined = golden_section_maximize(f, std::max(best_p - step, 0.0), std::min(best_p + step, 0.5));
    return refined.max >= best ? refined : Optimum{best_p, best};
}

double g_rate(double r) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("g(r) is defined on (0, 1), got r = " + std::to_string(r));
    const double log_one_minus = std::log1p(-r);
    return std::exp(-log_one_minus - r * (std::log(r / 2.0) - log_one_minus));
}

double h_dishonest(int q_m, double p, int q, int k) {
    require_probability(p, 0.5, "p");
    if (q_m < 0 || q_m > q) throw DomainError("q_m must lie in [0, q]");
    if (k < 0) throw DomainError("lie budget must be non-negative");
    if (q_m <= k) return 0.0;
    double tail = 0.0;
    for (int i = 0; i <= q_m - (k + 1); ++i) tail += binomial_real(q_m, i);
    return 2.0 * std::pow(1.0 - 2.0 * p, q - q_m) * std::pow(p, q_m) * tail;
}

double binary_entropy(double p) {
    require_probability(p, 1.0, "p");
    if (p == 0.0 || p == 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double v_rate(double r, double r2) {
    if (!(r2 >= 0.0 && r2 < r))
        throw DomainError("v(r, r2) needs 0 <= r2 < r, got r = " + std::to_string(r) + ", r2 = " + std::to_string(r2));
    const double fraction = std::clamp((r - r2) / r, 0.0, 1.0);
    return g_rate(r) * std::exp2(-r * binary_entropy(fraction));
}

bool v_rate_in_approximation_region(double r, double r2) noexcept { return r > 0.0 && (r - r2) / r <= 0.5; }

Optimum optimal_r(double r2) {
    if (!(r2 >= 0.0 && r2 < 1.0)) throw DomainError("r2 must lie in [0, 1)");
    if (r2 == 0.0) return golden_section_maximize(g_rate, 0.0, 1.0);
    return golden_section_maximize([r2](double r) { return v_rate(r, r2); }, r2, 1.0);
}

std::vector<double> open_grid(double lo, double hi, int points) {
    if (points < 1) throw DomainError("grid needs at least one point");
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(points));
    for (int i = 1; i <= points; ++i) grid.push_back(lo + (hi - lo) * static_cast<double>(i) / (points + 1.0));
    return grid;
}

RateCurve sample_curve(const std::function<double(double)>& f, const std::vector<double>& grid) {
    RateCurve curve;
    curve.grid = grid;
    curve.values.reserve(grid.size());
    curve.max = -std::numeric_limits<double>::infinity();
    for (double x : grid) {
        const double y = f(x);
        curve.values.push_back(y);
        if (y > curve.max) {
            curve.max = y;
            curve.argmax = x;
        }
    }
    return curve;
}

double phi(double p, double r, double q) {
    require_probability(p, 0.5, "p");
    require_probability(r, 1.0, "r");
    if (q < 0.0) throw DomainError("q must be non-negative");
    const double m = r * q;
    return std::pow(1.0 - p, m) - std::pow(1.0 - 2.0 * p, m);
}

double pr_xplus_lt2(int n, double phi_value) {
    if (n < 1) throw DomainError("n must be positive");
    require_probability(phi_value, 1.0, "phi");
    const double others = static_cast<double>(n - 1);
    return std::pow(1.0 - phi_value, others) * (1.0 + others * phi_value);
}

double pr_xplus_lt2_large_q(int n, int q) {
    const double others = static_cast<double>(n - 1);
    return 1.0 - others * others * std::exp2(-q);
}

std::uint64_t binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t c = 1;
    for (int i = 1; i <= k; ++i) {
        // c * (n-k+i) is divisible by i; split to postpone overflow.
        const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
        const std::uint64_t g = std::gcd(c, static_cast<std::uint64_t>(i));
        c = checked_mul(c / g, num / (static_cast<std::uint64_t>(i) / g));
    }
    return c;
}

std::uint64_t hamming_ball_volume(int length, int radius, int arity) {
    if (length < 0 || radius < 0 || radius > length) throw DomainError("ball radius must lie in [0, length]");
    if (arity < 2) throw DomainError("alphabet size must be at least 2");
    std::uint64_t total = 0;
    for (int i = 0; i <= radius; ++i)
        total = checked_add(total, checked_mul(binomial(length, i), checked_pow(static_cast<std::uint64_t>(arity - 1), i)));
    return total;
}

double log2_hamming_ball_volume(int length, int radius, int arity) {
    if (length < 0 || radius < 0 || radius > length) throw DomainError("ball radius must lie in [0, length]");
    if (arity < 2) throw DomainError("alphabet size must be at least 2");
    std::vector<double> terms;
    terms.reserve(static_cast<std::size_t>(radius) + 1);
    const double log2e = 1.0 / std::log(2.0);
    for (int i = 0; i <= radius; ++i) {
        const double log_c = std::lgamma(length + 1.0) - std::lgamma(i + 1.0) - std::lgamma(length - i + 1.0);
        terms.push_back(log_c * log2e + i * std::log2(static_cast<double>(arity - 1)));
    }
    const double top = *std::max_element(terms.begin(), terms.end());
    double sum = 0.0;
    for (double t : terms) sum += std::exp2(t - top);
    return top + std::log2(sum);
}

DishonestBound bound_heavy_dishonest(int q, int k) {
    if (q < 1 || k < 0 || k > q) throw DomainError("need 0 <= k <= q and q >= 1");
    const std::uint64_t space = checked_pow(3, q);
    return {ceil_div(space, hamming_ball_volume(q, k, 2)), ceil_div(space, hamming_ball_volume(q, k, 3))};
}

DishonestBound bound_all_on_dishonest(int q, int k) {
    if (q < 1 || k < 0 || k > q) throw DomainError("need 0 <= k <= q and q >= 1");
    const std::uint64_t space = checked_pow(2, q);
    const std::uint64_t t = ceil_div(space, hamming_ball_volume(q, k, 2));
    return {t, t};
}

double entropy_lower_bound(int n, int hypotheses_per_coin) {
    if (n < 1) throw DomainError("n must be positive");
    if (hypotheses_per_coin != 1 && hypotheses_per_coin != 2)
        throw DomainError("hypotheses per coin must be 1 or 2");
    std::uint64_t m = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(hypotheses_per_coin);
    int exponent = 0;
    std::uint64_t rest = m;
    while (rest % 3 == 0) {
        rest /= 3;
        ++exponent;
    }
    if (rest == 1) return static_cast<double>(exponent);
    return std::log(static_cast<double>(m)) / std::log(3.0);
}

std::optional<std::pair<int, int>> adaptive_first_move_range(int n, int q) {
    if (n < 1 || q < 1) throw DomainError("n and q must be positive");
    const std::int64_t cap = static_cast<std::int64_t>(checked_pow(3, q - 1));
    // 2n - 4a <= cap  <=>  a >= ceil((2n - cap) / 4)
    const std::int64_t need = 2 * static_cast<std::int64_t>(n) - cap;
    const std::int64_t lo = std::max<std::int64_t>(0, need <= 0 ? 0 : (need + 3) / 4);
    const std::int64_t hi = std::min<std::int64_t>(n / 2, cap / 2);
    if (lo > hi) return std::nullopt;
    return std::pair<int, int>{static_cast<int>(lo), static_cast<int>(hi)};
}

double chernoff_tail_bound(int q, double delta) {
    if (q < 1) throw DomainError("q must be positive");
    if (!(delta > 0.0)) throw DomainError("delta must be positive");
    return 2.0 * std::exp(-2.0 * delta * delta * q);
}

double two_plus_threshold(int q) { return 2.0 * std::pow(1.5, q / 3.0); }

}  // namespace balance::analysis
