#include "truncvar/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <sstream>
#include <thread>

#include "truncvar/errors.hpp"

namespace truncvar {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidSpec, what); }

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) invalid(std::string(name) + " must be finite");
}

std::string num(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

// Box-Muller on two open-interval uniforms.
std::pair<double, double> standard_normal_pair(PhiloxStream& stream) {
    const double u1 = stream.next_uniform();
    const double u2 = stream.next_uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

std::pair<double, double> draw_pair(const SamplerFamily& family, PhiloxStream& stream) {
    return std::visit(
        overloaded{
            [&](const GaussianPair& g) {
                const auto [z1, z2] = standard_normal_pair(stream);
                const double x1 = g.mean1 + g.sd1 * z1;
                const double x2 =
                    g.mean2 + g.sd2 * (g.rho * z1 + std::sqrt(1.0 - g.rho * g.rho) * z2);
                return std::pair{x1, x2};
            },
            [&](const IndependentProduct& ip) {
                const double x1 = sample(ip.first, stream);
                const double x2 = sample(ip.second, stream);
                return std::pair{x1, x2};
            },
            [&](const Comonotone& c) {
                const double x1 = sample(c.marginal, stream);
                return std::pair{x1, apply(c.map, x1)};
            },
        },
        family);
}

struct Sums {
    std::uint64_t count = 0;
    double x1 = 0, x2 = 0, y = 0, z = 0, x1x2 = 0, yz = 0;

    void add(double a, double b) {
        const double lo = std::min(a, b);
        const double hi = std::max(a, b);
        ++count;
        x1 += a;
        x2 += b;
        y += lo;
        z += hi;
        x1x2 += a * b;
        yz += lo * hi;
    }

    void merge(const Sums& o) {
        count += o.count;
        x1 += o.x1;
        x2 += o.x2;
        y += o.y;
        z += o.z;
        x1x2 += o.x1x2;
        yz += o.yz;
    }
};

struct GapPieces {
    double cov_min_max, cov_pair, gap, formula;
};

GapPieces gap_from(const Sums& s) {
    const double n = static_cast<double>(s.count);
    const double m1 = s.x1 / n, m2 = s.x2 / n, my = s.y / n, mz = s.z / n;
    const double cov_yz = s.yz / n - my * mz;
    const double cov_12 = s.x1x2 / n - m1 * m2;
    return {cov_yz, cov_12, cov_yz - cov_12, (m1 - my) * (m2 - my)};
}

struct Segment {
    std::size_t batch;
    Sums sums;
};

class BatchLayout {
   public:
    BatchLayout(std::uint64_t n, std::size_t batches)
        : n_(n), batches_(batches), base_(n / batches), extra_(n % batches) {}

    std::size_t count() const { return batches_; }

    // First pair index of batch b; the first `extra_` batches hold one more.
    std::uint64_t start(std::size_t b) const {
        return b * base_ + std::min<std::uint64_t>(b, extra_);
    }

    std::size_t batch_of(std::uint64_t i) const {
        const std::uint64_t big = extra_ * (base_ + 1);
        if (i < big) return static_cast<std::size_t>(i / (base_ + 1));
        return static_cast<std::size_t>(extra_ + (i - big) / base_);
    }

   private:
    std::uint64_t n_;
    std::size_t batches_;
    std::uint64_t base_;
    std::uint64_t extra_;
};

std::vector<Segment> run_chunk(const SamplerSpec& spec, const BatchLayout& layout,
                               std::uint64_t chunk) {
    PhiloxStream stream(spec.seed, StreamDomain::MonteCarlo, chunk);
    const std::uint64_t begin = chunk * kChunkPairs;
    const std::uint64_t end = std::min(spec.n, begin + kChunkPairs);
    std::vector<Segment> segments;
    for (std::uint64_t i = begin; i < end; ++i) {
        const std::size_t b = layout.batch_of(i);
        if (segments.empty() || segments.back().batch != b) segments.push_back({b, {}});
        const auto [a, c] = draw_pair(spec.family, stream);
        segments.back().sums.add(a, c);
    }
    return segments;
}

}  // namespace

void validate(const Marginal& m) {
    std::visit(overloaded{
                   [](const UniformMarginal& u) {
                       require_finite(u.a, "uniform a");
                       require_finite(u.b, "uniform b");
                       if (!(u.a <= u.b)) invalid("uniform needs a <= b");
                   },
                   [](const ExponentialMarginal& e) {
                       if (!(e.rate > 0) || !std::isfinite(e.rate)) invalid("exponential rate must be > 0");
                   },
                   [](const NormalMarginal& nm) {
                       require_finite(nm.mean, "normal mean");
                       if (!(nm.sd >= 0) || !std::isfinite(nm.sd)) invalid("normal sd must be >= 0");
                   },
                   [](const TwoPointMarginal& t) {
                       require_finite(t.v1, "two_point v1");
                       require_finite(t.v2, "two_point v2");
                       if (!(t.p > 0 && t.p < 1)) invalid("two_point p must lie in (0, 1)");
                   },
                   [](const ConstantMarginal& c) { require_finite(c.value, "constant value"); },
               },
               m);
}

bool is_nonnegative(const Marginal& m) {
    return std::visit(overloaded{
                          [](const UniformMarginal& u) { return u.a >= 0; },
                          [](const ExponentialMarginal&) { return true; },
                          [](const NormalMarginal& nm) { return nm.sd == 0 && nm.mean >= 0; },
                          [](const TwoPointMarginal& t) { return t.v1 >= 0 && t.v2 >= 0; },
                          [](const ConstantMarginal& c) { return c.value >= 0; },
                      },
                      m);
}

double mean_of(const Marginal& m) {
    return std::visit(overloaded{
                          [](const UniformMarginal& u) { return 0.5 * (u.a + u.b); },
                          [](const ExponentialMarginal& e) { return 1.0 / e.rate; },
                          [](const NormalMarginal& nm) { return nm.mean; },
                          [](const TwoPointMarginal& t) { return t.p * t.v1 + (1 - t.p) * t.v2; },
                          [](const ConstantMarginal& c) { return c.value; },
                      },
                      m);
}

std::string describe(const Marginal& m) {
    return std::visit(
        overloaded{
            [](const UniformMarginal& u) { return "uniform:" + num(u.a) + ":" + num(u.b); },
            [](const ExponentialMarginal& e) { return "exp:" + num(e.rate); },
            [](const NormalMarginal& nm) { return "normal:" + num(nm.mean) + ":" + num(nm.sd); },
            [](const TwoPointMarginal& t) {
                return "two_point:" + num(t.v1) + ":" + num(t.v2) + ":" + num(t.p);
            },
            [](const ConstantMarginal& c) { return "const:" + num(c.value); },
        },
        m);
}

double sample(const Marginal& m, PhiloxStream& stream) {
    return std::visit(
        overloaded{
            [&](const UniformMarginal& u) { return u.a + (u.b - u.a) * stream.next_uniform(); },
            [&](const ExponentialMarginal& e) { return -std::log(stream.next_uniform()) / e.rate; },
            [&](const NormalMarginal& nm) {
                return nm.mean + nm.sd * standard_normal_pair(stream).first;
            },
            [&](const TwoPointMarginal& t) { return stream.next_uniform() < t.p ? t.v1 : t.v2; },
            [&](const ConstantMarginal& c) { return c.value; },
        },
        m);
}

std::string_view to_string(MonotoneMap map) {
    switch (map) {
        case MonotoneMap::Identity: return "identity";
        case MonotoneMap::Double: return "double";
        case MonotoneMap::Exp: return "exp";
        case MonotoneMap::Cube: return "cube";
    }
    return "?";
}

MonotoneMap parse_monotone_map(std::string_view name) {
    for (auto m : {MonotoneMap::Identity, MonotoneMap::Double, MonotoneMap::Exp, MonotoneMap::Cube}) {
        if (to_string(m) == name) return m;
    }
    invalid("unknown monotone map '" + std::string(name) + "'");
}

double apply(MonotoneMap map, double x) {
    switch (map) {
        case MonotoneMap::Identity: return x;
        case MonotoneMap::Double: return 2.0 * x;
        case MonotoneMap::Exp: return std::exp(x);
        case MonotoneMap::Cube: return x * x * x;
    }
    return x;
}

void validate(const SamplerSpec& spec) {
    if (spec.n < 2) invalid("sample count n must be >= 2");
    std::visit(overloaded{
                   [](const GaussianPair& g) {
                       require_finite(g.mean1, "mean1");
                       require_finite(g.mean2, "mean2");
                       if (!(g.sd1 >= 0) || !(g.sd2 >= 0) || !std::isfinite(g.sd1) ||
                           !std::isfinite(g.sd2)) {
                           invalid("standard deviations must be >= 0");
                       }
                       if (!(g.rho >= -1.0 && g.rho <= 1.0)) invalid("rho must lie in [-1, 1]");
                   },
                   [](const IndependentProduct& ip) {
                       validate(ip.first);
                       validate(ip.second);
                   },
                   [](const Comonotone& c) { validate(c.marginal); },
               },
               spec.family);
}

std::string describe(const SamplerSpec& spec) {
    const std::string family = std::visit(
        overloaded{
            [](const GaussianPair& g) {
                return "gaussian_pair(" + num(g.mean1) + "," + num(g.mean2) + "," + num(g.sd1) + "," +
                       num(g.sd2) + ",rho=" + num(g.rho) + ")";
            },
            [](const IndependentProduct& ip) {
                return "independent_product(" + describe(ip.first) + "," + describe(ip.second) + ")";
            },
            [](const Comonotone& c) {
                return "comonotone(" + describe(c.marginal) + "," + std::string(to_string(c.map)) + ")";
            },
        },
        spec.family);
    return family + " n=" + std::to_string(spec.n) + " seed=" + std::to_string(spec.seed);
}

std::vector<std::pair<double, double>> sample_pairs(const SamplerSpec& spec) {
    validate(spec);
    std::vector<std::pair<double, double>> out;
    out.reserve(spec.n);
    const std::uint64_t chunks = (spec.n + kChunkPairs - 1) / kChunkPairs;
    for (std::uint64_t k = 0; k < chunks; ++k) {
        PhiloxStream stream(spec.seed, StreamDomain::MonteCarlo, k);
        const std::uint64_t end = std::min(spec.n, (k + 1) * kChunkPairs);
        for (std::uint64_t i = k * kChunkPairs; i < end; ++i) {
            out.push_back(draw_pair(spec.family, stream));
        }
    }
    return out;
}

EstimateReport estimate_gap(const SamplerSpec& spec, std::size_t threads) {
    validate(spec);
    const BatchLayout layout(spec.n, std::min<std::uint64_t>(kBatchCount, spec.n / 2));
    const std::uint64_t chunks = (spec.n + kChunkPairs - 1) / kChunkPairs;

    std::vector<std::vector<Segment>> per_chunk(chunks);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t k = next++; k < chunks; k = next++) {
            per_chunk[k] = run_chunk(spec, layout, k);
        }
    };
    const std::size_t workers =
        std::max<std::size_t>(1, std::min<std::uint64_t>(threads ? threads : worker_count(), chunks));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::vector<Sums> batch(layout.count());
    for (const auto& segments : per_chunk) {
        for (const auto& seg : segments) batch[seg.batch].merge(seg.sums);
    }
    Sums total;
    for (const auto& b : batch) total.merge(b);

    EstimateReport r;
    const auto whole = gap_from(total);
    r.gap_estimate = whole.gap;
    r.gap_formula_estimate = whole.formula;
    r.cov_min_max = whole.cov_min_max;
    r.cov_pair = whole.cov_pair;
    r.n = spec.n;
    r.seed = spec.seed;
    r.batches = batch.size();

    if (batch.size() < 2) {
        r.standard_error = std::numeric_limits<double>::infinity();
    } else {
        const double count = static_cast<double>(batch.size());
        double mean = 0.0;
        std::vector<double> gaps;
        for (const auto& b : batch) {
            gaps.push_back(gap_from(b).gap);
            mean += gaps.back();
        }
        mean /= count;
        double ss = 0.0;
        for (double g : gaps) ss += (g - mean) * (g - mean);
        r.standard_error = std::sqrt(ss / (count - 1.0) / count);
    }
    r.ci95_lo = r.gap_estimate - 1.96 * r.standard_error;
    r.ci95_hi = r.gap_estimate + 1.96 * r.standard_error;
    return r;
}

double gaussian_gap_oracle(double rho) {
    if (!(rho >= -1.0 && rho <= 1.0)) {
        throw Error(ErrorCode::OutOfRange, "rho must lie in [-1, 1], got " + num(rho));
    }
    return (1.0 - rho) / std::numbers::pi;
}

std::size_t worker_count() {
    std::size_t n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("TRUNCVAR_THREADS")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && cap > 0) n = std::min<std::size_t>(n, cap);
    }
    return n;
}

std::vector<SamplerSpec> builtin_specs(std::uint64_t seed, std::uint64_t n) {
    std::vector<SamplerSpec> specs;
    for (double rho : {-1.0, -0.9, 0.0, 0.5, 0.9, 1.0}) {
        specs.push_back({GaussianPair{0, 0, 1, 1, rho}, seed, n});
    }
    specs.push_back({GaussianPair{1, -2, 2, 0.5, 0.3}, seed, n});
    specs.push_back({IndependentProduct{TwoPointMarginal{0, 1, 0.5}, TwoPointMarginal{0, 1, 0.5}}, seed, n});
    specs.push_back({IndependentProduct{UniformMarginal{0, 1}, ExponentialMarginal{1}}, seed, n});
    specs.push_back({IndependentProduct{NormalMarginal{0, 1}, UniformMarginal{-1, 1}}, seed, n});
    specs.push_back({Comonotone{UniformMarginal{0, 1}, MonotoneMap::Identity}, seed, n});
    specs.push_back({Comonotone{ExponentialMarginal{2}, MonotoneMap::Cube}, seed, n});
    specs.push_back({Comonotone{NormalMarginal{0, 1}, MonotoneMap::Exp}, seed, n});
    specs.push_back({Comonotone{TwoPointMarginal{-1, 3, 0.25}, MonotoneMap::Double}, seed, n});
    return specs;
}

}  // namespace truncvar
