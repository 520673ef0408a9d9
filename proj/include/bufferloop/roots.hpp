#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "bufferloop/errors.hpp"
#include "bufferloop/polynomial.hpp"

namespace bufferloop {

enum class HalfPlane { LHP, OnAxis, RHP };

/// Roots of a real-coefficient polynomial, clustered into distinct values
/// with multiplicities. Classification against the imaginary axis uses
/// axis_tolerance on the real part; roots inside the band are "on axis".
struct RootSet {
    std::vector<std::complex<double>> roots;
    std::vector<int> multiplicities;
    double axis_tolerance = 1e-9;

    HalfPlane classify(std::size_t i) const {
        double re = roots[i].real();
        if (re > axis_tolerance) return HalfPlane::RHP;
        if (re < -axis_tolerance) return HalfPlane::LHP;
        return HalfPlane::OnAxis;
    }

    int total() const {
        int n = 0;
        for (int m : multiplicities) n += m;
        return n;
    }

    /// RHP roots repeated by multiplicity.
    std::vector<std::complex<double>> rhp() const { return in_half_plane(HalfPlane::RHP); }
    std::vector<std::complex<double>> lhp() const { return in_half_plane(HalfPlane::LHP); }
    std::vector<std::complex<double>> on_axis() const { return in_half_plane(HalfPlane::OnAxis); }

    /// All roots repeated by multiplicity.
    std::vector<std::complex<double>> expanded() const {
        std::vector<std::complex<double>> out;
        for (std::size_t i = 0; i < roots.size(); ++i)
            out.insert(out.end(), static_cast<std::size_t>(multiplicities[i]), roots[i]);
        return out;
    }

  private:
    std::vector<std::complex<double>> in_half_plane(HalfPlane hp) const {
        std::vector<std::complex<double>> out;
        for (std::size_t i = 0; i < roots.size(); ++i)
            if (classify(i) == hp) out.insert(out.end(), static_cast<std::size_t>(multiplicities[i]), roots[i]);
        return out;
    }
};

namespace detail {

inline std::complex<double> horner(const std::vector<double>& c, std::complex<double> s) {
    std::complex<double> acc(0.0, 0.0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * s + *it;
    return acc;
}

/// One backward-error test: |p(z)| against the coefficient scale at z.
inline bool root_accepted(const Polynomial& p, std::complex<double> z, double tol) {
    double scale = p.eval_scale(z);
    if (scale == 0.0) return true;
    return std::abs(p(z)) <= tol * scale;
}

/// Companion-matrix eigenvalues via Eigen's Schur-based solver. Used as the
/// fallback when the simultaneous iteration stalls (degree cap 12).
inline std::vector<std::complex<double>> companion_roots(const std::vector<double>& monic) {
    int d = static_cast<int>(monic.size()) - 1;
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
    for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) comp(i, d - 1) = -monic[static_cast<std::size_t>(i)];
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success) throw numeric_error("companion_roots: eigenvalue iteration failed");
    std::vector<std::complex<double>> out(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) out[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
    return out;
}

/// Force exact conjugate symmetry on a root list of a real polynomial:
/// near-real roots are flattened onto the axis, the rest are greedily
/// paired with their mirror and replaced by the averaged exact pair.
inline void symmetrize_conjugates(std::vector<std::complex<double>>& zs) {
    std::vector<std::size_t> upper, lower;
    for (std::size_t i = 0; i < zs.size(); ++i) {
        if (std::abs(zs[i].imag()) <= 1e-9 * (1.0 + std::abs(zs[i]))) {
            zs[i] = {zs[i].real(), 0.0};
        } else if (zs[i].imag() > 0.0) {
            upper.push_back(i);
        } else {
            lower.push_back(i);
        }
    }
    std::vector<bool> used(lower.size(), false);
    for (std::size_t ui : upper) {
        std::size_t best = lower.size();
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < lower.size(); ++k) {
            if (used[k]) continue;
            double d = std::abs(std::conj(zs[lower[k]]) - zs[ui]);
            if (d < best_d) {
                best_d = d;
                best = k;
            }
        }
        if (best == lower.size()) {
            zs[ui] = {zs[ui].real(), 0.0};  // no partner: flatten
            continue;
        }
        used[best] = true;
        std::complex<double> mean = 0.5 * (zs[ui] + std::conj(zs[lower[best]]));
        zs[ui] = mean;
        zs[lower[best]] = std::conj(mean);
    }
    for (std::size_t k = 0; k < lower.size(); ++k)
        if (!used[k]) zs[lower[k]] = {zs[lower[k]].real(), 0.0};
}

}  // namespace detail

/// Finds all roots of a nonconstant polynomial by Aberth-Ehrlich
/// simultaneous iteration started on a Cauchy-bound circle, with a
/// companion-matrix fallback for stubborn cases. Roots are returned
/// clustered into distinct values with multiplicities summing to deg(p);
/// each accepted root satisfies |p(r)| <= tol * sum_k |a_k||r|^k.
inline RootSet poly_roots(const Polynomial& p, double tol = 1e-10, double axis_tolerance = 1e-9) {
    if (p.degree() < 1) throw std::invalid_argument("poly_roots: constant polynomial has no roots");

    // Exact zero roots at the origin come straight off the low end.
    std::vector<double> c = p.coeffs();
    int origin_mult = 0;
    while (c.size() > 1 && c.front() == 0.0) {
        c.erase(c.begin());
        ++origin_mult;
    }

    int d = static_cast<int>(c.size()) - 1;
    std::vector<std::complex<double>> zs;
    if (d >= 1) {
        std::vector<double> monic(c);
        double lc = monic.back();
        for (double& a : monic) a /= lc;
        Polynomial pm{std::vector<double>(monic)};
        Polynomial dpm = pm.derivative();

        if (d == 1) {
            zs = {std::complex<double>(-monic[0], 0.0)};
        } else {
            // Cauchy upper bound and a crude lower bound set the start circle.
            double hi = 0.0, lo_den = 0.0;
            for (int i = 0; i < d; ++i) hi = std::max(hi, std::abs(monic[static_cast<std::size_t>(i)]));
            for (int i = 1; i <= d; ++i) lo_den = std::max(lo_den, std::abs(monic[static_cast<std::size_t>(i)]));
            double upper = 1.0 + hi;
            double lower = std::abs(monic[0]) / (std::abs(monic[0]) + lo_den);
            double radius = std::sqrt(std::max(lower, 1e-12) * upper);
            double center = -monic[static_cast<std::size_t>(d - 1)] / static_cast<double>(d);

            zs.resize(static_cast<std::size_t>(d));
            for (int j = 0; j < d; ++j) {
                double th = 2.0 * std::numbers::pi * (static_cast<double>(j) + 0.35) / static_cast<double>(d) + 0.42;
                zs[static_cast<std::size_t>(j)] = std::complex<double>(center, 0.0) +
                                                  radius * std::complex<double>(std::cos(th), std::sin(th));
            }

            bool converged = false;
            for (int iter = 0; iter < 400 && !converged; ++iter) {
                converged = true;
                for (int j = 0; j < d; ++j) {
                    auto& z = zs[static_cast<std::size_t>(j)];
                    std::complex<double> pv = detail::horner(monic, z);
                    if (std::abs(pv) <= 0.25 * tol * pm.eval_scale(z)) continue;
                    std::complex<double> dv = dpm(z);
                    if (dv == std::complex<double>(0.0, 0.0)) {
                        z += radius * 1e-3 * std::complex<double>(0.7, 0.3);
                        converged = false;
                        continue;
                    }
                    std::complex<double> newton = pv / dv;
                    std::complex<double> repel(0.0, 0.0);
                    for (int k = 0; k < d; ++k)
                        if (k != j) repel += 1.0 / (z - zs[static_cast<std::size_t>(k)]);
                    std::complex<double> denom = 1.0 - newton * repel;
                    std::complex<double> step = denom == std::complex<double>(0.0, 0.0) ? newton : newton / denom;
                    z -= step;
                    if (std::abs(step) > 1e-13 * (1.0 + std::abs(z))) converged = false;
                }
            }

            bool all_ok = true;
            for (auto& z : zs) all_ok = all_ok && detail::root_accepted(pm, z, tol);
            if (!converged && !all_ok) {
                if (d > 12) throw numeric_error("poly_roots: Aberth iteration did not converge (degree > 12)");
                zs = detail::companion_roots(monic);
            }

            // A couple of Newton polish steps sharpen the companion output
            // and any late Aberth iterates.
            for (auto& z : zs) {
                for (int it = 0; it < 3; ++it) {
                    std::complex<double> dv = dpm(z);
                    if (dv == std::complex<double>(0.0, 0.0)) break;
                    std::complex<double> step = detail::horner(monic, z) / dv;
                    if (std::abs(step) > 0.5 * (1.0 + std::abs(z))) break;  // multiple root: leave it
                    z -= step;
                    if (std::abs(step) <= 5e-16 * (1.0 + std::abs(z))) break;
                }
            }

            detail::symmetrize_conjugates(zs);
            for (auto& z : zs)
                if (!detail::root_accepted(pm, z, tol))
                    throw numeric_error("poly_roots: root failed backward-error test at tol");
        }
    }

    zs.insert(zs.end(), static_cast<std::size_t>(origin_mult), std::complex<double>(0.0, 0.0));

    // Cluster near-identical values into multiplicities. The radius scales
    // with sqrt(eps): that is the attainable accuracy of a double root.
    RootSet rs;
    rs.axis_tolerance = axis_tolerance;
    std::vector<bool> taken(zs.size(), false);
    const double cluster = 4.0 * std::sqrt(std::numeric_limits<double>::epsilon());
    for (std::size_t i = 0; i < zs.size(); ++i) {
        if (taken[i]) continue;
        std::complex<double> sum = zs[i];
        int count = 1;
        taken[i] = true;
        for (std::size_t j = i + 1; j < zs.size(); ++j) {
            if (taken[j]) continue;
            if (std::abs(zs[j] - zs[i]) <= cluster * (1.0 + std::abs(zs[i]))) {
                sum += zs[j];
                ++count;
                taken[j] = true;
            }
        }
        std::complex<double> mean = sum / static_cast<double>(count);
        if (std::abs(mean.imag()) <= 1e-9 * (1.0 + std::abs(mean))) mean = {mean.real(), 0.0};
        rs.roots.push_back(mean);
        rs.multiplicities.push_back(count);
    }

    std::vector<std::size_t> order(rs.roots.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (rs.roots[a].real() != rs.roots[b].real()) return rs.roots[a].real() < rs.roots[b].real();
        return rs.roots[a].imag() < rs.roots[b].imag();
    });
    RootSet sorted;
    sorted.axis_tolerance = axis_tolerance;
    for (std::size_t i : order) {
        sorted.roots.push_back(rs.roots[i]);
        sorted.multiplicities.push_back(rs.multiplicities[i]);
    }
    return sorted;
}

}  // namespace bufferloop
