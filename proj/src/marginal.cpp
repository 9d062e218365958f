#include "jointrank/marginal.hpp"

#include <cmath>
#include <limits>

#include "jointrank/errors.hpp"

namespace jointrank {

std::string effect_kind_name(EffectKind kind) {
    switch (kind) {
        case EffectKind::location: return "location";
        case EffectKind::scale: return "scale";
        case EffectKind::shape: return "shape";
    }
    return "?";
}

MarginalFit fit_marginal(const Dataset& ds, std::span<const double> scored, EffectKind kind) {
    const std::size_t n = ds.size();
    const std::size_t k = ds.n_groups();
    if (scored.size() != n)
        throw ValidationError("fit_marginal: scored response length does not match dataset");
    for (std::size_t g = 0; g < k; ++g)
        if (ds.group_sizes()[g] < 2)
            throw ValidationError("fit_marginal: group with fewer than 2 observations");

    MarginalFit fit;
    fit.kind = kind;
    fit.group_sizes = ds.group_sizes();
    fit.coefficients.assign(k, 0.0);
    fit.design = Matrix(n, k);
    for (std::size_t i = 0; i < n; ++i) {
        const auto g = static_cast<std::size_t>(ds.group_index()[i]);
        fit.design(i, g) = 1.0;
        fit.coefficients[g] += scored[i];
    }
    for (std::size_t g = 0; g < k; ++g)
        fit.coefficients[g] /= static_cast<double>(fit.group_sizes[g]);

    fit.residuals.resize(n);
    double rss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto g = static_cast<std::size_t>(ds.group_index()[i]);
        fit.residuals[i] = scored[i] - fit.coefficients[g];
        rss += fit.residuals[i] * fit.residuals[i];
    }
    fit.sigma2 = n > k ? rss / static_cast<double>(n - k) : 0.0;
    return fit;
}

double degrees_of_freedom(DfPolicy policy, const std::vector<std::size_t>& group_sizes) {
    switch (policy) {
        case DfPolicy::asymptotic:
            return std::numeric_limits<double>::infinity();
        case DfPolicy::residual: {
            std::size_t n = 0;
            for (std::size_t s : group_sizes) n += s;
            return static_cast<double>(n - group_sizes.size());
        }
        case DfPolicy::paper: {
            double df = 0.0;
            for (std::size_t s : group_sizes) df += static_cast<double>(s) - 4.0;
            if (df <= 0.0)
                throw ValidationError(
                    "degrees_of_freedom: paper rule sum(n_j - 4) is nonpositive; "
                    "use the residual or asymptotic policy for very small groups");
            return df;
        }
    }
    throw ValidationError("degrees_of_freedom: unknown policy");
}

StackedInference stacked_covariance(const std::vector<MarginalFit>& fits,
                                    const ContrastMatrix& cm, DfPolicy df_rule,
                                    MeatCorrection correction) {
    if (fits.empty()) throw ValidationError("stacked_covariance: no marginal fits");
    const std::size_t s = fits.size();
    const std::size_t k = fits[0].coefficients.size();
    const std::size_t n = fits[0].residuals.size();
    if (cm.k() != k) throw ValidationError("stacked_covariance: contrast width != group count");
    for (const auto& f : fits) {
        if (f.residuals.size() != n || f.coefficients.size() != k)
            throw ValidationError("stacked_covariance: fits disagree on data dimensions");
        if (f.group_sizes != fits[0].group_sizes)
            throw ValidationError("stacked_covariance: fits disagree on group sizes");
        if (f.design.data() != fits[0].design.data())
            throw ValidationError("stacked_covariance: fits come from different designs");
    }
    for (std::size_t g = 0; g < k; ++g)
        if (fits[0].group_sizes[g] == 0)
            throw NumericalError("stacked_covariance: empty group makes the bread singular");

    const std::size_t m = cm.m();
    const std::size_t dim = m * s;
    StackedInference out;
    out.m = m;
    out.s = s;
    out.estimates.resize(dim);
    out.covariance = Matrix(dim, dim);

    // group index of each observation, recovered from the indicator design
    std::vector<std::size_t> gidx(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t g = 0; g < k; ++g)
            if (fits[0].design(i, g) == 1.0) {
                gidx[i] = g;
                break;
            }

    for (std::size_t t = 0; t < s; ++t) {
        const auto ct = matvec(cm.rows, fits[t].coefficients);
        for (std::size_t q = 0; q < m; ++q) out.estimates[t * m + q] = ct[q];
        for (std::size_t q = 0; q < m; ++q)
            out.labels.emplace_back(fits[t].kind, cm.row_labels[q]);
    }

    // Sandwich blocks: (C B^-1 M_tu B^-1 C^T) with B = diag(n_j) and
    // M_tu = diag over groups of sum_i e_t(i) e_u(i); everything reduces to
    // per-group residual cross-products.
    for (std::size_t t = 0; t < s; ++t) {
        for (std::size_t u = t; u < s; ++u) {
            std::vector<double> d(k, 0.0);
            for (std::size_t i = 0; i < n; ++i)
                d[gidx[i]] += fits[t].residuals[i] * fits[u].residuals[i];
            for (std::size_t g = 0; g < k; ++g) {
                const double ng = static_cast<double>(fits[0].group_sizes[g]);
                double factor = 1.0;
                if (correction == MeatCorrection::group_unbiased)
                    factor = ng / (ng - 1.0);
                else if (correction == MeatCorrection::leverage_squared)
                    factor = (ng / (ng - 1.0)) * (ng / (ng - 1.0));
                d[g] *= factor / (ng * ng);
            }
            const Matrix block = quad_form(cm.rows, d);
            for (std::size_t q = 0; q < m; ++q)
                for (std::size_t r = 0; r < m; ++r) {
                    out.covariance(t * m + q, u * m + r) = block(q, r);
                    out.covariance(u * m + r, t * m + q) = block(q, r);
                }
        }
    }

    out.correlation = Matrix(dim, dim);
    std::vector<double> sd(dim);
    for (std::size_t i = 0; i < dim; ++i)
        sd[i] = std::sqrt(std::max(0.0, out.covariance(i, i)));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            if (i == j) {
                out.correlation(i, j) = 1.0;
            } else if (sd[i] > 0.0 && sd[j] > 0.0) {
                double r = out.covariance(i, j) / (sd[i] * sd[j]);
                r = std::min(1.0, std::max(-1.0, r));
                out.correlation(i, j) = r;
            } else {
                out.correlation(i, j) = 0.0;  // degenerate coordinate: independent row
            }
        }
    }
    out.df = degrees_of_freedom(df_rule, fits[0].group_sizes);
    return out;
}

}  // namespace jointrank
