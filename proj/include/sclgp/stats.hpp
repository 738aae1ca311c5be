#ifndef SCLGP_STATS_HPP
#define SCLGP_STATS_HPP

#include <cstdint>
#include <map>
#include <ostream>
#include <vector>

#include "sclgp/rational.hpp"

namespace sclgp {

/// Parameters of the five-parameter rounded-Gaussian mixture over 1/n grids.
/// p(n) = n^{(1-n^beta) d}; requires d < -1 (convergence) and beta < 0,
/// c2 < 0, c1 >= 0 (c1 = 0 is the documented degenerate extension).
struct XParams {
    Rat d, beta, mu, c1, c2;

    void validate() const;
};

/// Denominator weights p(1..N_max)/sum, truncated at N_max = 1000 and
/// renormalized; the same truncated weights are both sampled from and
/// reported, so frequency checks are unbiased.
std::vector<double> x_denominator_weights(const XParams& params);

/// Relative tail mass lost to truncation, bounded by an integral estimate.
double x_truncation_tail_bound(const XParams& params);

/// Draws: pick n by p(n), draw N(mu, (c1 n^{c2})^2), round to the nearest
/// point of (1/n)Z, half away from zero. Deterministic in (params, seed)
/// and independent of the worker count (fixed-size chunk substreams).
std::vector<Rat> sample_x(const XParams& params, long long count, std::uint64_t seed,
                          int threads = 1);

struct Histogram {
    std::map<Rat, long long> bins;
    long long total = 0;
};

Histogram histogram_of(const std::vector<Rat>& values);

/// Exact-rational histogram of fsn over seeded random graphs.
Histogram fsn_histogram(int n_vertices, double p, long long samples, std::uint64_t seed,
                        int threads = 1);

/// CSV with header "value,count", values as reduced p/q in increasing order.
void write_csv(std::ostream& os, const Histogram& h);

}  // namespace sclgp

#endif
