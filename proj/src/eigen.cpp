#include "wellsep/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "wellsep/errors.hpp"

namespace wellsep {

namespace {

constexpr int kMaxJacobiSweeps = 100;
constexpr int kMaxQrIterations = 100;
constexpr int kInverseIterationSteps = 2;
constexpr int kMaxInverseIterationSteps = 10;

// Row-major real square workspace.
struct RealSquare {
    std::size_t n = 0;
    std::vector<double> v;

    explicit RealSquare(std::size_t n_) : n(n_), v(n_ * n_, 0.0) {}
    double& operator()(std::size_t i, std::size_t j) { return v[i * n + j]; }
    double operator()(std::size_t i, std::size_t j) const { return v[i * n + j]; }
};

void fix_phase(std::vector<Complex>& x) {
    std::size_t best = 0;
    double best_mag = -1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double m = std::abs(x[i]);
        if (m > best_mag) {
            best_mag = m;
            best = i;
        }
    }
    const double nrm = norm2(x);
    if (best_mag <= 0.0 || nrm <= 0.0) return;
    const Complex rot = std::conj(x[best]) / (best_mag * nrm);
    for (auto& z : x) z *= rot;
    x[best] = Complex(x[best].real(), 0.0);
}

double pair_residual(const DenseMatrix& a, Complex lambda, const std::vector<Complex>& x) {
    auto ax = multiply(a, x);
    for (std::size_t i = 0; i < ax.size(); ++i) ax[i] -= lambda * x[i];
    return norm2(ax);
}

void sort_pairs(std::vector<SpectralPair>& pairs) {
    std::stable_sort(pairs.begin(), pairs.end(), [](const SpectralPair& p, const SpectralPair& q) {
        if (p.eigenvalue.real() != q.eigenvalue.real()) {
            return p.eigenvalue.real() < q.eigenvalue.real();
        }
        return p.eigenvalue.imag() < q.eigenvalue.imag();
    });
}

double off_norm(const RealSquare& m) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.n; ++i) {
        for (std::size_t j = 0; j < m.n; ++j) {
            if (i != j) s += m(i, j) * m(i, j);
        }
    }
    return std::sqrt(s);
}

RealSquare to_real_square(const DenseMatrix& a) {
    RealSquare m(a.size());
    m.v = a.real_entries();
    return m;
}

// Householder reduction A = Q H Q^T; H is overwritten in place, Q returned.
RealSquare reduce_to_hessenberg(RealSquare& h) {
    const std::size_t n = h.n;
    RealSquare q(n);
    for (std::size_t i = 0; i < n; ++i) q(i, i) = 1.0;
    if (n < 3) return q;

    std::vector<double> v(n);
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double alpha = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) alpha += h(i, k) * h(i, k);
        alpha = std::sqrt(alpha);
        if (alpha == 0.0) continue;
        if (h(k + 1, k) > 0.0) alpha = -alpha;

        double vnorm2 = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            v[i] = h(i, k);
            if (i == k + 1) v[i] -= alpha;
            vnorm2 += v[i] * v[i];
        }
        if (vnorm2 == 0.0) continue;
        const double beta = 2.0 / vnorm2;

        // H <- (I - beta v v^T) H
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t i = k + 1; i < n; ++i) s += v[i] * h(i, j);
            s *= beta;
            for (std::size_t i = k + 1; i < n; ++i) h(i, j) -= s * v[i];
        }
        // H <- H (I - beta v v^T), Q <- Q (I - beta v v^T)
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            double t = 0.0;
            for (std::size_t j = k + 1; j < n; ++j) {
                s += h(i, j) * v[j];
                t += q(i, j) * v[j];
            }
            s *= beta;
            t *= beta;
            for (std::size_t j = k + 1; j < n; ++j) {
                h(i, j) -= s * v[j];
                q(i, j) -= t * v[j];
            }
        }
        for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
    }
    return q;
}

double sign_of(double magnitude, double s) { return s >= 0.0 ? std::abs(magnitude) : -std::abs(magnitude); }

// Francis double-shift QR on an upper Hessenberg matrix (destroyed).
std::vector<Complex> hessenberg_eigenvalues(RealSquare a) {
    const int n = static_cast<int>(a.n);
    std::vector<Complex> w(a.n);
    const double eps = std::numeric_limits<double>::epsilon();

    double anorm = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = std::max(i - 1, 0); j < n; ++j) anorm += std::abs(a(i, j));
    }

    int nn = n - 1;
    double t = 0.0;
    int its = 0;
    double p = 0, q = 0, r = 0, s = 0, x = 0, y = 0, z = 0, ww = 0;
    while (nn >= 0) {
        int l = 0;
        do {
            for (l = nn; l > 0; --l) {
                s = std::abs(a(l - 1, l - 1)) + std::abs(a(l, l));
                if (s == 0.0) s = anorm;
                if (std::abs(a(l, l - 1)) <= eps * s) {
                    a(l, l - 1) = 0.0;
                    break;
                }
            }
            x = a(nn, nn);
            if (l == nn) {
                w[nn--] = x + t;
                its = 0;
            } else {
                y = a(nn - 1, nn - 1);
                ww = a(nn, nn - 1) * a(nn - 1, nn);
                if (l == nn - 1) {
                    p = 0.5 * (y - x);
                    q = p * p + ww;
                    z = std::sqrt(std::abs(q));
                    x += t;
                    if (q >= 0.0) {
                        z = p + sign_of(z, p);
                        w[nn - 1] = w[nn] = x + z;
                        if (z != 0.0) w[nn] = x - ww / z;
                    } else {
                        w[nn] = Complex(x + p, -z);
                        w[nn - 1] = std::conj(w[nn]);
                    }
                    nn -= 2;
                    its = 0;
                } else {
                    if (its == kMaxQrIterations) {
                        throw NonConvergence("eig_general: eigenvalue " + std::to_string(nn) +
                                                 " did not deflate in " +
                                                 std::to_string(kMaxQrIterations) + " QR iterations",
                                             std::abs(a(nn, nn - 1)));
                    }
                    if (its > 0 && its % 10 == 0) {
                        // Exceptional shift.
                        t += x;
                        for (int i = 0; i <= nn; ++i) a(i, i) -= x;
                        s = std::abs(a(nn, nn - 1)) + std::abs(a(nn - 1, nn - 2));
                        y = x = 0.75 * s;
                        ww = -0.4375 * s * s;
                    }
                    ++its;
                    int m = nn - 2;
                    for (; m >= l; --m) {
                        z = a(m, m);
                        r = x - z;
                        s = y - z;
                        p = (r * s - ww) / a(m + 1, m) + a(m, m + 1);
                        q = a(m + 1, m + 1) - z - r - s;
                        r = a(m + 2, m + 1);
                        s = std::abs(p) + std::abs(q) + std::abs(r);
                        p /= s;
                        q /= s;
                        r /= s;
                        if (m == l) break;
                        const double u = std::abs(a(m, m - 1)) * (std::abs(q) + std::abs(r));
                        const double v = std::abs(p) * (std::abs(a(m - 1, m - 1)) + std::abs(z) +
                                                        std::abs(a(m + 1, m + 1)));
                        if (u <= eps * v) break;
                    }
                    for (int i = m; i < nn - 1; ++i) {
                        a(i + 2, i) = 0.0;
                        if (i != m) a(i + 2, i - 1) = 0.0;
                    }
                    for (int k = m; k < nn; ++k) {
                        if (k != m) {
                            p = a(k, k - 1);
                            q = a(k + 1, k - 1);
                            r = 0.0;
                            if (k + 1 != nn) r = a(k + 2, k - 1);
                            x = std::abs(p) + std::abs(q) + std::abs(r);
                            if (x != 0.0) {
                                p /= x;
                                q /= x;
                                r /= x;
                            }
                        }
                        s = sign_of(std::sqrt(p * p + q * q + r * r), p);
                        if (s == 0.0) continue;
                        if (k == m) {
                            if (l != m) a(k, k - 1) = -a(k, k - 1);
                        } else {
                            a(k, k - 1) = -s * x;
                        }
                        p += s;
                        x = p / s;
                        y = q / s;
                        z = r / s;
                        q /= p;
                        r /= p;
                        for (int j = k; j <= nn; ++j) {
                            p = a(k, j) + q * a(k + 1, j);
                            if (k + 1 != nn) {
                                p += r * a(k + 2, j);
                                a(k + 2, j) -= p * z;
                            }
                            a(k + 1, j) -= p * y;
                            a(k, j) -= p * x;
                        }
                        const int mmin = nn < k + 3 ? nn : k + 3;
                        for (int i = l; i <= mmin; ++i) {
                            p = x * a(i, k) + y * a(i, k + 1);
                            if (k + 1 != nn) {
                                p += z * a(i, k + 2);
                                a(i, k + 2) -= p * r;
                            }
                            a(i, k + 1) -= p * q;
                            a(i, k) -= p;
                        }
                    }
                }
            }
        } while (nn >= 0 && l + 1 < nn);
    }
    return w;
}

// Solves (H - mu I) y = b for upper Hessenberg H by Gaussian elimination
// with adjacent-row partial pivoting. Zero pivots are replaced by a tiny
// multiple of ||H||, which is the usual inverse-iteration convention.
class ShiftedHessenbergSolver {
public:
    ShiftedHessenbergSolver(const RealSquare& h, Complex mu, double hnorm)
        : n_(h.n), u_(h.n * h.n), mult_(h.n, 0.0), swapped_(h.n, false) {
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) u_[i * n_ + j] = h(i, j);
            u_[i * n_ + i] -= mu;
        }
        const double tiny = std::numeric_limits<double>::epsilon() * std::max(hnorm, 1e-300);
        for (std::size_t k = 0; k + 1 < n_; ++k) {
            if (std::abs(u_[(k + 1) * n_ + k]) > std::abs(u_[k * n_ + k])) {
                for (std::size_t j = k; j < n_; ++j) std::swap(u_[k * n_ + j], u_[(k + 1) * n_ + j]);
                swapped_[k] = true;
            }
            if (std::abs(u_[k * n_ + k]) == 0.0) u_[k * n_ + k] = tiny;
            const Complex f = u_[(k + 1) * n_ + k] / u_[k * n_ + k];
            mult_[k] = f;
            u_[(k + 1) * n_ + k] = 0.0;
            for (std::size_t j = k + 1; j < n_; ++j) u_[(k + 1) * n_ + j] -= f * u_[k * n_ + j];
        }
        if (std::abs(u_[n_ * n_ - 1]) == 0.0) u_[n_ * n_ - 1] = tiny;
    }

    std::vector<Complex> solve(std::vector<Complex> b) const {
        for (std::size_t k = 0; k + 1 < n_; ++k) {
            if (swapped_[k]) std::swap(b[k], b[k + 1]);
            b[k + 1] -= mult_[k] * b[k];
        }
        for (std::size_t i = n_; i-- > 0;) {
            Complex s = b[i];
            for (std::size_t j = i + 1; j < n_; ++j) s -= u_[i * n_ + j] * b[j];
            b[i] = s / u_[i * n_ + i];
        }
        return b;
    }

private:
    std::size_t n_;
    std::vector<Complex> u_;
    std::vector<Complex> mult_;
    std::vector<bool> swapped_;
};

void normalize(std::vector<Complex>& x) {
    const double nrm = norm2(x);
    if (nrm > 0.0 && std::isfinite(nrm)) {
        for (auto& z : x) z /= nrm;
    }
}

}  // namespace

std::vector<Complex> SpectrumReport::eigenvalues() const {
    std::vector<Complex> out;
    out.reserve(pairs.size());
    for (const auto& p : pairs) out.push_back(p.eigenvalue);
    return out;
}

double residual_tolerance(const DenseMatrix& a) noexcept {
    return 1e-8 * (1.0 + a.frobenius_norm());
}

SpectrumReport eig_symmetric(const DenseMatrix& a) {
    if (!a.is_real() || !a.is_symmetric()) {
        throw PreconditionError("eig_symmetric: matrix must be real symmetric");
    }
    const std::size_t n = a.size();
    RealSquare m = to_real_square(a);
    RealSquare v(n);
    for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;

    const double target = 1e-12 * a.frobenius_norm();
    double off = off_norm(m);
    int sweep = 0;
    while (off > target) {
        if (sweep == kMaxJacobiSweeps) {
            throw NonConvergence("eig_symmetric: off-diagonal norm " + std::to_string(off) +
                                     " above target after " + std::to_string(kMaxJacobiSweeps) +
                                     " sweeps",
                                 off);
        }
        ++sweep;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = m(p, q);
                if (apq == 0.0) continue;
                // Symmetric Schur 2x2: choose the smaller rotation angle.
                const double tau = (m(q, q) - m(p, p)) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double mkp = m(k, p);
                    const double mkq = m(k, q);
                    m(k, p) = c * mkp - s * mkq;
                    m(k, q) = s * mkp + c * mkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double mpk = m(p, k);
                    const double mqk = m(q, k);
                    m(p, k) = c * mpk - s * mqk;
                    m(q, k) = s * mpk + c * mqk;
                }
                m(p, q) = 0.0;
                m(q, p) = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
        off = off_norm(m);
    }

    SpectrumReport rep;
    rep.pairs.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        auto& pr = rep.pairs[j];
        pr.eigenvalue = m(j, j);
        pr.eigenvector.resize(n);
        for (std::size_t i = 0; i < n; ++i) pr.eigenvector[i] = v(i, j);
        fix_phase(pr.eigenvector);
        pr.residual = pair_residual(a, pr.eigenvalue, pr.eigenvector);
    }
    sort_pairs(rep.pairs);
    return rep;
}

SpectrumReport eig_general(const DenseMatrix& a) {
    if (!a.is_real()) throw PreconditionError("eig_general: matrix must be real");
    const std::size_t n = a.size();

    RealSquare h = to_real_square(a);
    const RealSquare q = reduce_to_hessenberg(h);
    const std::vector<Complex> values = hessenberg_eigenvalues(h);

    double hnorm = 0.0;
    for (double e : h.v) hnorm += e * e;
    hnorm = std::sqrt(hnorm);
    const double tol = residual_tolerance(a);

    SpectrumReport rep;
    rep.pairs.resize(n);
    std::mt19937_64 rng(0x5eed0fe1ULL);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (std::size_t idx = 0; idx < n; ++idx) {
        const Complex lambda = values[idx];
        const Complex mu = lambda + 1e-10 * std::max(1.0, std::abs(lambda));
        const ShiftedHessenbergSolver solver(h, mu, hnorm);

        std::vector<Complex> y(n);
        for (auto& e : y) e = unif(rng);
        normalize(y);

        std::vector<Complex> x(n);
        double res = std::numeric_limits<double>::infinity();
        for (int step = 1; step <= kMaxInverseIterationSteps; ++step) {
            y = solver.solve(std::move(y));
            normalize(y);
            if (step < kInverseIterationSteps) continue;
            // Back to the original basis: x = Q y.
            for (std::size_t i = 0; i < n; ++i) {
                Complex s = 0.0;
                for (std::size_t k = 0; k < n; ++k) s += q(i, k) * y[k];
                x[i] = s;
            }
            fix_phase(x);
            res = pair_residual(a, lambda, x);
            if (res <= tol) break;
        }
        if (!(res <= tol)) {
            throw NonConvergence("eig_general: inverse iteration residual " + std::to_string(res) +
                                     " exceeds tolerance " + std::to_string(tol),
                                 res);
        }
        rep.pairs[idx].eigenvalue = lambda;
        rep.pairs[idx].eigenvector = std::move(x);
        rep.pairs[idx].residual = res;
    }
    sort_pairs(rep.pairs);
    return rep;
}

SpectrumReport eig_auto(const DenseMatrix& a) {
    if (a.is_real() && a.is_symmetric()) return eig_symmetric(a);
    return eig_general(a);
}

std::vector<std::size_t> min_cost_assignment(std::size_t n, const std::vector<double>& cost) {
    if (cost.size() != n * n) throw DimensionMismatch("assignment: cost matrix must be n x n");
    // Shortest augmenting path Hungarian method with potentials, 1-based internally.
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
    std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
    std::vector<bool> used(n + 1);
    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::fill(minv.begin(), minv.end(), inf);
        std::fill(used.begin(), used.end(), false);
        do {
            used[j0] = true;
            const std::size_t i0 = p[j0];
            double delta = inf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<std::size_t> assignment(n);
    for (std::size_t j = 1; j <= n; ++j) assignment[p[j] - 1] = j - 1;
    return assignment;
}

SpectrumReport match_to_discs(SpectrumReport spectrum, const SeparationReport& report) {
    const auto& discs = report.discs;
    const std::size_t n = spectrum.pairs.size();
    if (discs.size() != n) throw DimensionMismatch("match_to_discs: spectrum and discs differ in size");
    const RadiusMode mode = report.radius_mode;

    double scale = 0.0;
    for (const auto& d : discs) scale = std::max(scale, std::abs(d.center) + d.radius(mode));
    const double tol = 1e-9 * (1.0 + scale);

    std::vector<std::size_t> assign(n);
    std::vector<bool> taken(n, false);
    bool bijective = true;
    for (std::size_t j = 0; j < n; ++j) {
        const Complex lam = spectrum.pairs[j].eigenvalue;
        std::size_t best = 0;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            const double d = std::abs(lam - discs[i].center) - discs[i].radius(mode);
            if (d < best_d) {
                best_d = d;
                best = i;
            }
        }
        assign[j] = best;
        if (taken[best]) bijective = false;
        taken[best] = true;
    }
    if (!bijective) {
        std::vector<double> cost(n * n);
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < n; ++i) {
                cost[j * n + i] = std::abs(spectrum.pairs[j].eigenvalue - discs[i].center);
            }
        }
        assign = min_cost_assignment(n, cost);
    }

    bool inside = true;
    for (std::size_t j = 0; j < n; ++j) {
        spectrum.pairs[j].disc_index = assign[j];
        if (!discs[assign[j]].contains(spectrum.pairs[j].eigenvalue, mode, tol)) inside = false;
    }
    spectrum.matched = inside;
    spectrum.oracle_contradiction = report.disjoint && mode != RadiusMode::min && !spectrum.matched;
    return spectrum;
}

}  // namespace wellsep
