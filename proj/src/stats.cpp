#include "sclgp/stats.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <stdexcept>

#include "sclgp/graph.hpp"
#include "sclgp/prng.hpp"
#include "sclgp/scl.hpp"

namespace sclgp {

namespace {

constexpr int kNMax = 1000;
constexpr long long kChunk = 1024;  // substream granularity; fixed for reproducibility

}  // namespace

void XParams::validate() const {
    if (d >= -1) throw std::invalid_argument("x params: d must be < -1");
    if (beta >= 0) throw std::invalid_argument("x params: beta must be < 0");
    if (c2 >= 0) throw std::invalid_argument("x params: c2 must be < 0");
    if (c1 < 0) throw std::invalid_argument("x params: c1 must be >= 0");
}

std::vector<double> x_denominator_weights(const XParams& params) {
    params.validate();
    const double d = params.d.get_d(), beta = params.beta.get_d();
    std::vector<double> w(kNMax + 1, 0.0);
    double sum = 0.0;
    for (int n = 1; n <= kNMax; ++n) {
        w[n] = std::pow(n, (1.0 - std::pow(n, beta)) * d);
        sum += w[n];
    }
    for (int n = 1; n <= kNMax; ++n) w[n] /= sum;
    return w;
}

double x_truncation_tail_bound(const XParams& params) {
    params.validate();
    const double d = params.d.get_d(), beta = params.beta.get_d();
    // For n >= N the exponent is at most e_N = (1 - N^beta) d < -1, so the
    // tail is below the integral of x^{e_N} from N.
    const double eN = (1.0 - std::pow(static_cast<double>(kNMax), beta)) * d;
    if (eN >= -1.0) return 1.0;  // estimate unusable; report full uncertainty
    const double tail = std::pow(static_cast<double>(kNMax), eN + 1.0) / (-eN - 1.0);
    double head = 0.0;
    for (int n = 1; n <= kNMax; ++n) head += std::pow(n, (1.0 - std::pow(n, beta)) * d);
    return tail / head;
}

namespace {

Rat round_to_grid(double x, int n) {
    // Nearest point of (1/n)Z, ties away from zero.
    const double scaled = x * n;
    const long long k = std::llround(scaled);
    return rat(k, n);
}

std::vector<Rat> sample_chunk(const XParams& params, const std::vector<double>& cdf,
                              long long count, std::uint64_t chunk_seed) {
    Prng rng(chunk_seed);
    const double mu = params.mu.get_d(), c1 = params.c1.get_d(), c2 = params.c2.get_d();
    std::vector<Rat> out;
    out.reserve(static_cast<std::size_t>(count));
    for (long long i = 0; i < count; ++i) {
        const double u = rng.next_double();
        int n = static_cast<int>(std::lower_bound(cdf.begin() + 1, cdf.end(), u) - cdf.begin());
        if (n > kNMax) n = kNMax;
        const double sigma = c1 * std::pow(n, c2);
        const double x = sigma == 0.0 ? mu : mu + sigma * rng.next_gaussian();
        out.push_back(round_to_grid(x, n));
    }
    return out;
}

template <typename Fn>
std::vector<Rat> run_chunked(long long count, std::uint64_t seed, int threads, Fn chunk_fn) {
    if (count < 1) throw std::invalid_argument("sample count must be >= 1");
    if (threads < 1) threads = 1;
    const long long chunks = (count + kChunk - 1) / kChunk;
    std::vector<std::vector<Rat>> parts(static_cast<std::size_t>(chunks));
    std::atomic<long long> next{0};
    auto worker = [&]() {
        for (;;) {
            const long long c = next.fetch_add(1);
            if (c >= chunks) break;
            const long long lo = c * kChunk;
            const long long len = std::min(kChunk, count - lo);
            parts[static_cast<std::size_t>(c)] = chunk_fn(len, Prng::derive(seed, static_cast<std::uint64_t>(c)));
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::future<void>> pool;
        for (int t = 0; t < threads; ++t) pool.push_back(std::async(std::launch::async, worker));
        for (auto& f : pool) f.get();
    }
    std::vector<Rat> out;
    out.reserve(static_cast<std::size_t>(count));
    for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
    return out;
}

}  // namespace

std::vector<Rat> sample_x(const XParams& params, long long count, std::uint64_t seed,
                          int threads) {
    const auto w = x_denominator_weights(params);
    std::vector<double> cdf(w.size(), 0.0);
    for (std::size_t n = 1; n < w.size(); ++n) cdf[n] = cdf[n - 1] + w[n];
    cdf.back() = 1.0;
    return run_chunked(count, seed, threads, [&](long long len, std::uint64_t s) {
        return sample_chunk(params, cdf, len, s);
    });
}

Histogram histogram_of(const std::vector<Rat>& values) {
    Histogram h;
    for (const auto& v : values) ++h.bins[v];
    h.total = static_cast<long long>(values.size());
    return h;
}

Histogram fsn_histogram(int n_vertices, double p, long long samples, std::uint64_t seed,
                        int threads) {
    if (n_vertices < 1) throw std::invalid_argument("fsn_histogram: need at least one vertex");
    auto values = run_chunked(samples, seed, threads, [&](long long len, std::uint64_t s) {
        std::vector<Rat> out;
        out.reserve(static_cast<std::size_t>(len));
        Prng rng(s);
        for (long long i = 0; i < len; ++i)
            out.push_back(fsn(random_graph(n_vertices, p, rng.next_u64())));
        return out;
    });
    return histogram_of(values);
}

void write_csv(std::ostream& os, const Histogram& h) {
    os << "value,count\n";
    for (const auto& [v, c] : h.bins) os << rat_str_frac(v) << "," << c << "\n";
}

}  // namespace sclgp
