#include "drg/spectral.hpp"

#include "drg/errors.hpp"
#include "drg/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace drg {

IntersectionMatrix IntersectionMatrix::build(const IntersectionArray& arr) {
    IntersectionMatrix m;
    m.D = arr.diameter();
    m.sub.resize(m.D + 1);
    m.diag.resize(m.D + 1);
    m.sup.resize(m.D + 1);
    for (int i = 0; i <= m.D; ++i) {
        m.sub[i] = static_cast<double>(arr.c(i));
        m.diag[i] = static_cast<double>(arr.a(i));
        m.sup[i] = static_cast<double>(arr.b(i));
    }
    return m;
}

SpectralData decompose(const IntersectionArray& arr) {
    const int D = arr.diameter();
    const long long k = arr.degree();
    const size_t s = static_cast<size_t>(D) + 1;

    // Conjugating by diag(sqrt k_i) turns the collapse into a symmetric
    // tridiagonal with off-diagonals sqrt(b_i c_{i+1}); same spectrum.
    std::vector<double> diag(s), off(D);
    for (int i = 0; i <= D; ++i) diag[i] = static_cast<double>(arr.a(i));
    for (int i = 0; i < D; ++i)
        off[i] = std::sqrt(static_cast<double>(arr.b(i)) * static_cast<double>(arr.c(i + 1)));

    std::vector<double> lam = linalg::tridiag_eigenvalues(diag, off);
    std::reverse(lam.begin(), lam.end()); // descending

    const double scale = static_cast<double>(k);
    for (size_t r = 0; r + 1 < s; ++r)
        if (lam[r] - lam[r + 1] < 1e-9 * scale)
            throw NumericalError("distance spectrum has a near-tie; eigenvalues of an "
                                 "irreducible tridiagonal collapse must be simple");
    if (std::abs(lam[0] - scale) > 1e-9 * scale)
        throw NumericalError("leading eigenvalue does not match the degree");

    SpectralData sd;
    sd.eigenvalues = lam;
    sd.u.assign(s, std::vector<double>(s));
    sd.v.assign(s, std::vector<double>(s));
    sd.multiplicities.resize(s);

    const auto& ks = arr.shell_sizes();
    std::vector<double> kd(s);
    for (size_t i = 0; i < s; ++i) kd[i] = ks[i].convert_to<double>();
    const double n = arr.vertex_count().convert_to<double>();

    for (size_t r = 0; r < s; ++r) {
        // Standard sequence by the three-term recurrence.
        double x = lam[r];
        auto& u = sd.u[r];
        u[0] = 1.0;
        if (D >= 1) u[1] = x / scale;
        for (int i = 1; i < D; ++i)
            u[i + 1] = ((x - arr.a(i)) * u[i] - arr.c(i) * u[i - 1]) / arr.b(i);
        double norm = 0;
        for (size_t i = 0; i < s; ++i) {
            sd.v[r][i] = kd[i] * u[i];
            norm += kd[i] * u[i] * u[i];
        }
        double m_raw = n / norm;
        double m_rounded = std::round(m_raw);
        if (std::abs(m_raw - m_rounded) >= 1e-6)
            throw NumericalError("eigenvalue multiplicity " + decimal12(m_raw) +
                                 " fails to round to an integer");
        if (m_rounded < 1)
            throw NumericalError("eigenvalue multiplicity must be positive");
        sd.multiplicities[r] = static_cast<long long>(m_rounded);
    }

    BigInt total = 0;
    for (long long m : sd.multiplicities) total += m;
    if (total != arr.vertex_count())
        throw NumericalError("eigenvalue multiplicities do not sum to the vertex count");
    if (sd.multiplicities[0] != 1)
        throw NumericalError("leading eigenvalue must be simple");
    return sd;
}

double generating_function(const IntersectionArray& arr, const SpectralData& sd, int i,
                           double s) {
    const int D = arr.diameter();
    if (i < 0 || i > D) throw ValidationError("generating function shell out of range");
    // A hair of overshoot past 1 is tolerated so difference quotients can
    // straddle the endpoint; the closed form stays analytic up to k/lambda_1.
    if (!(s > -1.0 && s <= 1.0 + 1e-6))
        throw ValidationError("generating function is evaluated on (-1, 1] only");

    // Both halves share the shape 1 + (1-s) * sum, which pins GF(1) = 1
    // without cancellation.
    const double k = static_cast<double>(arr.degree());
    double num = 0, den = 0;
    for (int r = 1; r <= D; ++r) {
        double geom = 1.0 - s * sd.eigenvalues[r] / k;
        double m = static_cast<double>(sd.multiplicities[r]);
        num += m * sd.u[r][i] / geom;
        den += m / geom;
    }
    num = 1.0 + (1.0 - s) * num;
    den = 1.0 + (1.0 - s) * den;
    if (den == 0.0) throw NumericalError("generating function denominator vanished");
    return num / den;
}

double generating_function(const IntersectionArray& arr, int i, double s) {
    SpectralData sd = decompose(arr);
    return generating_function(arr, sd, i, s);
}

std::vector<double> gf_series(const IntersectionArray& arr, const SpectralData& sd, int i,
                              int order) {
    const int D = arr.diameter();
    if (i < 0 || i > D) throw ValidationError("generating function shell out of range");
    if (order < 0) throw ValidationError("series order must be nonnegative");

    // Power-series division: numerator and denominator expand termwise from
    // the geometric series of each spectral pole.
    const double k = static_cast<double>(arr.degree());
    const size_t len = static_cast<size_t>(order) + 1;
    std::vector<double> num(len, 0.0), den(len, 0.0);
    num[0] = 1.0;
    den[0] = 1.0;
    for (int r = 1; r <= D; ++r) {
        double x = sd.eigenvalues[r] / k;
        double m = static_cast<double>(sd.multiplicities[r]);
        double ui = sd.u[r][i];
        double pow_prev = 1.0;
        num[0] += m * ui;
        den[0] += m;
        for (size_t t = 1; t < len; ++t) {
            double pow_t = pow_prev * x;
            num[t] += m * ui * (pow_t - pow_prev);
            den[t] += m * (pow_t - pow_prev);
            pow_prev = pow_t;
        }
    }
    std::vector<double> g(len, 0.0);
    for (size_t t = 0; t < len; ++t) {
        double acc = num[t];
        for (size_t q = 0; q < t; ++q) acc -= g[q] * den[t - q];
        g[t] = acc / den[0];
    }
    return g;
}

ProjectedChain projected_chain(const IntersectionArray& arr, const BigRational& laziness) {
    if (laziness < 0 || laziness >= 1)
        throw ValidationError("laziness must lie in [0, 1)");
    return ProjectedChain{arr, laziness};
}

std::vector<BigRational> stationary(const ProjectedChain& chain) {
    const auto& ks = chain.arr.shell_sizes();
    const BigRational n(chain.arr.vertex_count());
    std::vector<BigRational> pi(ks.size());
    for (size_t i = 0; i < ks.size(); ++i) pi[i] = BigRational(ks[i]) / n;
    return pi;
}

std::vector<BigRational> step(const ProjectedChain& chain, const std::vector<BigRational>& mu) {
    const IntersectionArray& arr = chain.arr;
    const int D = arr.diameter();
    if (mu.size() != static_cast<size_t>(D) + 1)
        throw ValidationError("distribution size does not match the shell count");

    const BigRational k(arr.degree());
    const BigRational move = 1 - chain.laziness;
    std::vector<BigRational> out(D + 1, BigRational(0));
    for (int i = 0; i <= D; ++i) {
        if (mu[i] == 0) continue;
        BigRational w = mu[i] * move / k;
        if (i > 0) out[i - 1] += w * arr.c(i);
        out[i] += w * arr.a(i) + mu[i] * chain.laziness;
        if (i < D) out[i + 1] += w * arr.b(i);
    }
    return out;
}

std::vector<BigRational> evolve(const ProjectedChain& chain, long long t) {
    if (t < 0) throw ValidationError("step count must be nonnegative");
    std::vector<BigRational> mu(chain.arr.diameter() + 1, BigRational(0));
    mu[0] = 1;
    for (long long s = 0; s < t; ++s) mu = step(chain, mu);
    return mu;
}

namespace {

BigRational tv(const std::vector<BigRational>& mu, const std::vector<BigRational>& pi) {
    BigRational sum = 0;
    for (size_t i = 0; i < mu.size(); ++i) sum += abs(mu[i] - pi[i]);
    return sum / 2;
}

} // namespace

BigRational tv_distance(const ProjectedChain& chain, long long t) {
    return tv(evolve(chain, t), stationary(chain));
}

MixingResult mixing_time(const ProjectedChain& chain, double eps, long long cap) {
    if (!(eps > 0 && eps < 1)) throw ValidationError("mixing threshold must lie in (0, 1)");
    if (chain.arr.bipartite() && chain.laziness == 0)
        throw ValidationError("bipartite walk does not mix; use positive laziness");

    const BigRational eps_exact(eps); // dyadic, exact
    std::vector<BigRational> pi = stationary(chain);
    std::vector<BigRational> mu(chain.arr.diameter() + 1, BigRational(0));
    mu[0] = 1;

    MixingResult res;
    for (long long t = 0; t <= cap; ++t) {
        BigRational d = tv(mu, pi);
        res.curve.push_back(d);
        if (d < eps_exact) {
            res.t_mix = t;
            return res;
        }
        mu = step(chain, mu);
    }
    res.capped = true;
    return res;
}

} // namespace drg
