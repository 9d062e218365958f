#include "jointrank/mvt.hpp"

#include <algorithm>
#include <cmath>
#include <array>
#include <cstdlib>
#include <list>
#include <memory>
#include <mutex>

#include "jointrank/errors.hpp"
#include "jointrank/kernels.hpp"
#include "jointrank/rng.hpp"
#include "jointrank/special.hpp"

namespace jointrank {

namespace {

constexpr double kSingularTol = 1e-12;

double eigenvalue_clip() {
    if (const char* env = std::getenv("JOINTRANK_EIGEN_CLIP")) {
        const double v = std::strtod(env, nullptr);
        if (v > 0.0 && v < 1e-2) return v;
    }
    return 1e-10;
}

// square roots of the first primes: Richtmyer lattice generators
const double* lattice_alphas(std::size_t need) {
    static std::vector<double> alphas = [] {
        std::vector<int> primes;
        for (int c = 2; primes.size() < 64; ++c) {
            bool is_prime = true;
            for (int d = 2; d * d <= c; ++d)
                if (c % d == 0) {
                    is_prime = false;
                    break;
                }
            if (is_prime) primes.push_back(c);
        }
        std::vector<double> a(primes.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            double r = std::sqrt(static_cast<double>(primes[i]));
            a[i] = r - std::floor(r);
        }
        return a;
    }();
    if (need > alphas.size()) throw NumericalError("mvt_probability: dimension too large");
    return alphas.data();
}

struct Prepared {
    std::size_t m = 0;
    std::vector<double> chol;   // row-major lower triangle (m x m)
    std::vector<double> lo, hi; // reordered bounds
    std::vector<int> singular;  // per-dimension: Cholesky pivot collapsed to 0
    bool repaired = false;
};

double interval_prob(double mu, double sd, double lo, double hi) {
    if (sd <= 0.0) return (mu >= lo - 1e-12 && mu <= hi + 1e-12) ? 1.0 : 0.0;
    const double a = std::isinf(lo) ? 0.0 : special::norm_cdf((lo - mu) / sd);
    const double b = std::isinf(hi) ? 1.0 : special::norm_cdf((hi - mu) / sd);
    return std::max(0.0, b - a);
}

Prepared prepare(const MvtSpec& spec) {
    const std::size_t m = spec.correlation.rows();
    if (spec.correlation.cols() != m || m == 0)
        throw ValidationError("mvt_probability: correlation must be square and nonempty");
    if (spec.lower.size() != m || spec.upper.size() != m)
        throw ValidationError("mvt_probability: bounds length != dimension");
    for (std::size_t i = 0; i < m; ++i) {
        if (!(spec.lower[i] < spec.upper[i]))
            throw ValidationError("mvt_probability: requires lower < upper in every coordinate");
        if (std::fabs(spec.correlation(i, i) - 1.0) > 1e-8)
            throw ValidationError("mvt_probability: correlation diagonal must be 1");
        for (std::size_t j = 0; j < i; ++j)
            if (std::fabs(spec.correlation(i, j) - spec.correlation(j, i)) > 1e-8)
                throw ValidationError("mvt_probability: correlation must be symmetric");
    }
    if (!(spec.df > 0.0)) throw ValidationError("mvt_probability: df must be positive");

    Prepared prep;
    prep.m = m;

    Matrix a(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            a(i, j) = 0.5 * (spec.correlation(i, j) + spec.correlation(j, i));

    auto eig = jacobi_eigen(a);
    const double min_eig = eig.values.front();
    if (min_eig < -1e-8 * std::max(1.0, eig.values.back()))
        throw NumericalError("mvt_probability: correlation is not positive semidefinite");
    const double clip = eigenvalue_clip();
    if (min_eig < clip) {
        // clip small eigenvalues and renormalize the diagonal to 1
        prep.repaired = true;
        for (auto& v : eig.values) v = std::max(v, clip);
        Matrix fixed(m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i; j < m; ++j) {
                double acc = 0.0;
                for (std::size_t t = 0; t < m; ++t)
                    acc += eig.vectors(i, t) * eig.values[t] * eig.vectors(j, t);
                fixed(i, j) = acc;
                fixed(j, i) = acc;
            }
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                const double denom = std::sqrt(fixed(i, i) * fixed(j, j));
                a(i, j) = i == j ? 1.0 : fixed(i, j) / denom;
            }
    }

    prep.lo = spec.lower;
    prep.hi = spec.upper;
    prep.chol.assign(m * m, 0.0);
    auto L = [&](std::size_t i, std::size_t j) -> double& { return prep.chol[i * m + j]; };
    std::vector<double> yexp(m, 0.0);
    prep.singular.assign(m, 0);

    for (std::size_t k = 0; k < m; ++k) {
        // choose the remaining variable with the smallest conditional interval
        std::size_t best = k;
        double best_p = 2.0;
        for (std::size_t i = k; i < m; ++i) {
            double s2 = a(i, i), mu = 0.0;
            for (std::size_t j = 0; j < k; ++j) {
                s2 -= L(i, j) * L(i, j);
                mu += L(i, j) * yexp[j];
            }
            const double sd = s2 > kSingularTol ? std::sqrt(s2) : 0.0;
            const double p = interval_prob(mu, sd, prep.lo[i], prep.hi[i]);
            if (p < best_p) {
                best_p = p;
                best = i;
            }
        }
        if (best != k) {
            for (std::size_t j = 0; j < k; ++j) std::swap(prep.chol[best * m + j], prep.chol[k * m + j]);
            std::swap(prep.lo[best], prep.lo[k]);
            std::swap(prep.hi[best], prep.hi[k]);
            for (std::size_t j = 0; j < m; ++j) std::swap(a(best, j), a(k, j));
            for (std::size_t j = 0; j < m; ++j) std::swap(a(j, best), a(j, k));
        }

        double s2 = a(k, k), mu = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            s2 -= L(k, j) * L(k, j);
            mu += L(k, j) * yexp[j];
        }
        if (s2 > kSingularTol) {
            const double d = std::sqrt(s2);
            L(k, k) = d;
            for (std::size_t i = k + 1; i < m; ++i) {
                double acc = a(i, k);
                for (std::size_t j = 0; j < k; ++j) acc -= L(i, j) * L(k, j);
                L(i, k) = acc / d;
            }
            // conditional expectation of the truncated coordinate
            const double zlo = std::isinf(prep.lo[k]) ? -special::kInf : (prep.lo[k] - mu) / d;
            const double zhi = std::isinf(prep.hi[k]) ? special::kInf : (prep.hi[k] - mu) / d;
            const double plo = std::isinf(zlo) ? 0.0 : special::norm_cdf(zlo);
            const double phi_ = std::isinf(zhi) ? 1.0 : special::norm_cdf(zhi);
            const double span = phi_ - plo;
            if (span > 1e-12) {
                const double dlo = std::isinf(zlo) ? 0.0 : special::norm_pdf(zlo);
                const double dhi = std::isinf(zhi) ? 0.0 : special::norm_pdf(zhi);
                yexp[k] = (dlo - dhi) / span;
            } else {
                yexp[k] = std::isinf(zlo) ? (std::isinf(zhi) ? 0.0 : zhi)
                                          : (std::isinf(zhi) ? zlo : 0.5 * (zlo + zhi));
            }
        } else {
            prep.singular[k] = 1;
            L(k, k) = 0.0;
            yexp[k] = 0.0;
        }
    }
    return prep;
}

// Monotone interpolation table for the radial scale sqrt(chi2_ppf(w, df)/df);
// exact quantile calls outside the tabulated window.
class RadialTable {
public:
    explicit RadialTable(double df, int intervals = 256)
        : df_(df), n_(intervals), wlo_(0.004), whi_(0.996) {
        h_ = (whi_ - wlo_) / n_;
        s_.resize(n_ + 1);
        ds_.resize(n_ + 1);
        const double a = 0.5 * df;
        const double lg = special::lgamma_pos(a);
        for (int i = 0; i <= n_; ++i) {
            const double w = wlo_ + i * h_;
            const double x = special::chi2_ppf(w, df);
            const double s = std::sqrt(x / df);
            const double logpdf = (a - 1.0) * std::log(0.5 * x) - 0.5 * x - lg - std::log(2.0);
            const double pdf = std::exp(logpdf);
            s_[i] = s;
            ds_[i] = 1.0 / (2.0 * df * s * pdf);
        }
    }

    double df() const { return df_; }

    double operator()(double w) const {
        if (w <= wlo_ || w >= whi_)
            return std::sqrt(special::chi2_ppf(std::clamp(w, 1e-15, 1.0 - 1e-15), df_) / df_);
        const double t = (w - wlo_) / h_;
        int i = static_cast<int>(t);
        if (i >= n_) i = n_ - 1;
        const double u = t - i;
        const double u2 = u * u, u3 = u2 * u;
        const double h00 = 2 * u3 - 3 * u2 + 1;
        const double h10 = u3 - 2 * u2 + u;
        const double h01 = -2 * u3 + 3 * u2;
        const double h11 = u3 - u2;
        return h00 * s_[i] + h10 * h_ * ds_[i] + h01 * s_[i + 1] + h11 * h_ * ds_[i + 1];
    }

private:
    double df_;
    int n_;
    double wlo_, whi_, h_;
    std::vector<double> s_, ds_;
};

const RadialTable& radial_table_for(double df) {
    thread_local std::list<std::shared_ptr<const RadialTable>> cache;
    for (const auto& entry : cache)
        if (entry->df() == df) return *entry;
    if (cache.size() >= 8) cache.pop_back();
    cache.push_front(std::make_shared<const RadialTable>(df));
    return *cache.front();
}

double univariate(const MvtSpec& spec) {
    const double lo = spec.lower[0], hi = spec.upper[0];
    double a, b;
    if (std::isinf(spec.df)) {
        a = std::isinf(lo) ? 0.0 : special::norm_cdf(lo);
        b = std::isinf(hi) ? 1.0 : special::norm_cdf(hi);
    } else {
        a = std::isinf(lo) ? 0.0 : special::t_cdf(lo, spec.df);
        b = std::isinf(hi) ? 1.0 : special::t_cdf(hi, spec.df);
    }
    return std::max(0.0, b - a);
}

}  // namespace

ProbResult mvt_probability(const MvtSpec& spec, const MvtOptions& options) {
    if (!(options.accuracy > 0.0 && options.accuracy <= 0.1))
        throw ValidationError("mvt_probability: accuracy must be in (0, 0.1]");
    if (options.batches < 4) throw ValidationError("mvt_probability: need at least 4 batches");

    const Prepared prep = prepare(spec);
    const std::size_t m = prep.m;

    ProbResult result;
    result.repaired = prep.repaired;
    if (m == 1) {
        result.value = univariate(spec);
        result.error_estimate = 1e-14;
        result.points_used = 0;
        return result;
    }

    const bool has_radial = !std::isinf(spec.df);
    const RadialTable* radial = has_radial ? &radial_table_for(spec.df) : nullptr;
    const std::size_t qdims = (m - 1) + (has_radial ? 1 : 0);
    const double* alphas = lattice_alphas(qdims);

    const auto& ops = kernels::active();
    const std::size_t B = static_cast<std::size_t>(options.batches);

    std::vector<std::vector<double>> shifts(B, std::vector<double>(qdims));
    for (std::size_t b = 0; b < B; ++b) {
        Rng rng = Rng::substream(options.seed, b);
        for (std::size_t j = 0; j < qdims; ++j) shifts[b][j] = rng.uniform();
    }

    constexpr std::size_t kChunk = 512;
    std::vector<double> wbuf(kChunk), sbuf(kChunk), acc(kChunk), f(kChunk);
    std::vector<std::vector<double>> y(m > 1 ? m - 1 : 0, std::vector<double>(kChunk));

    std::vector<double> batch_sum(B, 0.0);
    std::size_t per_batch = 0;
    std::size_t stage = std::max<std::size_t>(128, kChunk);
    const std::size_t max_per_batch = std::max<std::size_t>(stage, options.max_points / B);

    auto run_chunk = [&](std::size_t b, std::size_t first_index, std::size_t count) {
        const std::vector<double>& shift = shifts[b];
        std::size_t qi = 0;
        if (has_radial) {
            const double alpha = alphas[qi];
            const double delta = shift[qi];
            for (std::size_t p = 0; p < count; ++p) {
                const double idx = static_cast<double>(first_index + p + 1);
                double v = idx * alpha + delta;
                v -= std::floor(v);
                sbuf[p] = (*radial)(std::fabs(2.0 * v - 1.0));
            }
            ++qi;
        }
        std::fill(f.begin(), f.begin() + count, 1.0);
        for (std::size_t k = 0; k < m; ++k) {
            std::fill(acc.begin(), acc.begin() + count, 0.0);
            for (std::size_t j = 0; j < k; ++j) {
                const double c = prep.chol[k * m + j];
                if (c != 0.0) ops.axpy(c, y[j].data(), acc.data(), count);
            }
            const bool need_y = k + 1 < m;
            if (need_y) {
                const double alpha = alphas[qi];
                const double delta = shift[qi];
                ++qi;
                for (std::size_t p = 0; p < count; ++p) {
                    const double idx = static_cast<double>(first_index + p + 1);
                    double v = idx * alpha + delta;
                    v -= std::floor(v);
                    wbuf[p] = std::fabs(2.0 * v - 1.0);
                }
            }
            if (prep.singular[k]) {
                const double lo = prep.lo[k], hi = prep.hi[k];
                for (std::size_t p = 0; p < count; ++p) {
                    const double scale = has_radial ? sbuf[p] : 1.0;
                    const double l = std::isinf(lo) ? -special::kInf : lo * scale;
                    const double h = std::isinf(hi) ? special::kInf : hi * scale;
                    if (!(acc[p] >= l && acc[p] <= h)) f[p] = 0.0;
                    if (need_y) y[k][p] = 0.0;
                }
                continue;
            }
            kernels::SovArgs args;
            args.n = count;
            args.lo = prep.lo[k];
            args.hi = prep.hi[k];
            args.inv_diag = 1.0 / prep.chol[k * m + k];
            args.acc = acc.data();
            args.radial = has_radial ? sbuf.data() : nullptr;
            args.w = need_y ? wbuf.data() : nullptr;
            args.f = f.data();
            args.y_out = need_y ? y[k].data() : nullptr;
            ops.sov_step(args);
        }
        return ops.sum(f.data(), count);
    };

    for (;;) {
        const std::size_t target = std::min(max_per_batch, per_batch == 0 ? stage : per_batch * 2);
        for (std::size_t b = 0; b < B; ++b) {
            std::size_t i = per_batch;
            while (i < target) {
                const std::size_t count = std::min(kChunk, target - i);
                batch_sum[b] += run_chunk(b, i, count);
                i += count;
            }
        }
        per_batch = target;

        double mean = 0.0;
        for (std::size_t b = 0; b < B; ++b) mean += batch_sum[b] / static_cast<double>(per_batch);
        mean /= static_cast<double>(B);
        double var = 0.0;
        for (std::size_t b = 0; b < B; ++b) {
            const double d = batch_sum[b] / static_cast<double>(per_batch) - mean;
            var += d * d;
        }
        var /= static_cast<double>(B * (B - 1));
        result.value = std::clamp(mean, 0.0, 1.0);
        result.error_estimate = 3.5 * std::sqrt(var);
        result.points_used = per_batch * B;
        if (result.error_estimate <= options.accuracy) {
            result.accuracy_reached = true;
            return result;
        }
        if (per_batch >= max_per_batch) {
            result.accuracy_reached = false;
            return result;
        }
    }
}

double equicoordinate_quantile(const Matrix& correlation, double df, double level, Tail tail,
                               double accuracy, const MvtOptions& options) {
    if (!(level > 0.0 && level < 1.0))
        throw ValidationError("equicoordinate_quantile: level must be in (0, 1)");
    if (!(accuracy > 0.0)) throw ValidationError("equicoordinate_quantile: bad accuracy");
    const std::size_t m = correlation.rows();
    if (m == 0) throw ValidationError("equicoordinate_quantile: empty correlation");

    if (tail == Tail::upper) {
        // P(min T >= c) = level by symmetry of the central distribution
        return -equicoordinate_quantile(correlation, df, level, Tail::lower, accuracy, options);
    }
    if (m == 1)
        return tail == Tail::two_sided ? special::t_ppf(0.5 * (1.0 + level), df)
                                       : special::t_ppf(level, df);

    auto prob = [&](double c, double acc) {
        MvtSpec spec;
        spec.correlation = correlation;
        spec.df = df;
        spec.upper.assign(m, c);
        spec.lower.assign(m, tail == Tail::two_sided ? -c : -special::kInf);
        MvtOptions o = options;
        o.accuracy = acc;
        return mvt_probability(spec, o).value;
    };

    const double md = static_cast<double>(m);
    double lo = tail == Tail::two_sided ? special::t_ppf(0.5 * (1.0 + level), df)
                                        : special::t_ppf(level, df);
    double hi = tail == Tail::two_sided
                    ? special::t_ppf(1.0 - (1.0 - level) / (2.0 * md), df)
                    : special::t_ppf(1.0 - (1.0 - level) / md, df);
    if (hi <= lo) hi = lo + 1e-3;
    lo = std::max(lo - 1e-6, 1e-8);

    // Two-stage root finding under common random numbers: the same seed makes
    // the estimated probability a smooth monotone function of c, so a coarse
    // bracket plus a few refined secant steps suffice.
    const double coarse = std::max(accuracy * 4.0, 1e-3);
    const double fine = std::max(accuracy * 0.3, 2e-5);
    double flo = prob(lo, coarse) - level;
    double fhi = prob(hi, coarse) - level;
    int guard = 0;
    while (flo > 0.0 && lo > 1e-8 && guard++ < 8) {
        lo = std::max(1e-8, lo - 0.5 * (hi - lo) - 0.1);
        flo = prob(lo, coarse) - level;
    }
    guard = 0;
    while (fhi < 0.0 && guard++ < 8) {
        hi += 0.5 * (hi - lo) + 0.1;
        fhi = prob(hi, coarse) - level;
    }

    auto bracket_to = [&](double a, double b, double fa, double fb, double acc,
                          double width_goal, int max_it) {
        for (int it = 0; it < max_it && (b - a) > width_goal; ++it) {
            double cand;
            if (fb != fa) {
                cand = b - fb * (b - a) / (fb - fa);  // secant
                const double margin = 0.05 * (b - a);
                if (!(cand > a + margin && cand < b - margin)) cand = 0.5 * (a + b);
            } else {
                cand = 0.5 * (a + b);
            }
            const double fc = prob(cand, acc) - level;
            if (fc <= 0.0) {
                a = cand;
                fa = fc;
            } else {
                b = cand;
                fb = fc;
            }
        }
        return std::array<double, 4>{a, b, fa, fb};
    };

    const double coarse_goal = std::max(accuracy * 4.0, 4e-3);
    auto [a, b, fa, fb] = bracket_to(lo, hi, flo, fhi, coarse, coarse_goal, 60);
    // refine the bracket ends at the fine accuracy before the last secants
    fa = prob(a, fine) - level;
    fb = prob(b, fine) - level;
    if (fa > 0.0) {
        const double step = std::max(2.0 * (b - a), 1e-3);
        a = std::max(1e-8, a - step);
        fa = prob(a, fine) - level;
    }
    if (fb < 0.0) {
        const double step = std::max(2.0 * (b - a), 1e-3);
        b += step;
        fb = prob(b, fine) - level;
    }
    auto [a2, b2, fa2, fb2] = bracket_to(a, b, fa, fb, fine, accuracy, 40);
    if (fb2 != fa2) {
        const double cand = b2 - fb2 * (b2 - a2) / (fb2 - fa2);
        if (cand >= a2 && cand <= b2) return cand;
    }
    return 0.5 * (a2 + b2);
}

}  // namespace jointrank
