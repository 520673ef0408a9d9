#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

#include "bufferloop/errors.hpp"
#include "bufferloop/polynomial.hpp"
#include "bufferloop/roots.hpp"

namespace bufferloop {

/// Scalar rational transfer function num(s)/den(s) with real coefficients,
/// kept in canonical form: denominator monic, the constant factor absorbed
/// into the numerator, both polynomials trimmed. Arithmetic is exact
/// coefficient arithmetic; pole-zero cancellation only happens through the
/// explicit minreal() pass.
class RationalTF {
  public:
    RationalTF() : num_(), den_{1.0} {}

    RationalTF(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::invalid_argument("RationalTF: zero denominator");
        canonicalize();
    }

    static RationalTF constant(double c) { return RationalTF(Polynomial::constant(c), Polynomial{1.0}); }
    static RationalTF zero() { return RationalTF(); }
    static RationalTF one() { return constant(1.0); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    /// deg(den) - deg(num). The zero function reports the largest value so
    /// it orders as "more strictly proper than anything".
    int relative_degree() const {
        if (num_.is_zero()) return std::numeric_limits<int>::max();
        return den_.degree() - num_.degree();
    }

    bool proper() const { return relative_degree() >= 0; }
    bool strictly_proper() const { return relative_degree() >= 1; }
    bool biproper() const { return relative_degree() == 0; }

    /// Horner evaluation of both polynomials. Throws when s sits on a pole:
    /// |den(s)| below a fixed fraction of the coefficient scale at s.
    std::complex<double> operator()(std::complex<double> s) const {
        std::complex<double> dv = den_(s);
        double scale = den_.eval_scale(s);
        if (std::abs(dv) <= kPoleProximity * scale)
            throw numeric_error("RationalTF: evaluation too close to a pole");
        return num_(s) / dv;
    }

    friend RationalTF operator+(const RationalTF& a, const RationalTF& b) {
        return RationalTF(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend RationalTF operator-(const RationalTF& a, const RationalTF& b) {
        return RationalTF(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }

    friend RationalTF operator*(const RationalTF& a, const RationalTF& b) {
        return RationalTF(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend RationalTF operator*(const RationalTF& a, double k) {
        return RationalTF(a.num_ * k, a.den_);
    }

    friend RationalTF operator*(double k, const RationalTF& a) { return a * k; }

    friend RationalTF operator/(const RationalTF& a, const RationalTF& b) {
        if (b.num_.is_zero()) throw std::invalid_argument("RationalTF: division by zero transfer function");
        return RationalTF(a.num_ * b.den_, a.den_ * b.num_);
    }

    friend RationalTF operator-(const RationalTF& a) { return RationalTF(-a.num_, a.den_); }

    /// Exact coefficient equality of the canonical forms.
    friend bool operator==(const RationalTF& a, const RationalTF& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str() const { return "(" + num_.str() + ") / (" + den_.str() + ")"; }

    static constexpr double kPoleProximity = 1e-13;

  private:
    void canonicalize() {
        if (num_.is_zero()) {
            den_ = Polynomial{1.0};
            return;
        }
        double lc = den_.leading();
        num_ *= 1.0 / lc;
        den_ *= 1.0 / lc;
    }

    Polynomial num_;
    Polynomial den_;
};

/// |a - b| coefficient-wise within tol on the canonical forms.
inline bool approx_equal(const RationalTF& a, const RationalTF& b, double tol) {
    if (a.num().degree() != b.num().degree() || a.den().degree() != b.den().degree()) return false;
    for (int k = 0; k <= a.num().degree(); ++k)
        if (std::abs(a.num().coeff(static_cast<std::size_t>(k)) - b.num().coeff(static_cast<std::size_t>(k))) >
            tol * (1.0 + std::abs(b.num().coeff(static_cast<std::size_t>(k)))))
            return false;
    for (int k = 0; k <= a.den().degree(); ++k)
        if (std::abs(a.den().coeff(static_cast<std::size_t>(k)) - b.den().coeff(static_cast<std::size_t>(k))) >
            tol * (1.0 + std::abs(b.den().coeff(static_cast<std::size_t>(k)))))
            return false;
    return true;
}

/// Removes pole-zero pairs whose roots agree within cancel_tol relative to
/// root magnitude + 1. Pairs straddling the imaginary axis (strict RHP vs
/// strict LHP) are never cancelled, so unstable dynamics cannot vanish by
/// numerical accident. When nothing cancels the input is returned
/// unchanged; otherwise the function is rebuilt from the surviving roots.
inline RationalTF minreal(const RationalTF& g, double cancel_tol = 1e-8,
                          std::vector<std::complex<double>>* cancelled = nullptr) {
    if (g.num().degree() < 1 || g.den().degree() < 1) return g;

    const double axis_tol = 1e-9;
    std::vector<std::complex<double>> zn = poly_roots(g.num(), 1e-10, axis_tol).expanded();
    std::vector<std::complex<double>> zd = poly_roots(g.den(), 1e-10, axis_tol).expanded();

    auto side = [&](std::complex<double> r) {
        if (r.real() > axis_tol) return HalfPlane::RHP;
        if (r.real() < -axis_tol) return HalfPlane::LHP;
        return HalfPlane::OnAxis;
    };

    std::vector<bool> den_used(zd.size(), false);
    std::vector<bool> num_cancel(zn.size(), false);
    bool any = false;
    for (std::size_t i = 0; i < zn.size(); ++i) {
        std::size_t best = zd.size();
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < zd.size(); ++j) {
            if (den_used[j]) continue;
            double d = std::abs(zn[i] - zd[j]);
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        if (best == zd.size()) continue;
        double gate = cancel_tol * (1.0 + 0.5 * (std::abs(zn[i]) + std::abs(zd[best])));
        if (best_d > gate) continue;
        HalfPlane a = side(zn[i]), b = side(zd[best]);
        if ((a == HalfPlane::RHP && b == HalfPlane::LHP) || (a == HalfPlane::LHP && b == HalfPlane::RHP)) continue;
        den_used[best] = true;
        num_cancel[i] = true;
        any = true;
        if (cancelled) cancelled->push_back(zn[i]);
    }
    if (!any) return g;

    std::vector<std::complex<double>> keep_n, keep_d;
    for (std::size_t i = 0; i < zn.size(); ++i)
        if (!num_cancel[i]) keep_n.push_back(zn[i]);
    for (std::size_t j = 0; j < zd.size(); ++j)
        if (!den_used[j]) keep_d.push_back(zd[j]);

    Polynomial nn = poly_from_roots(keep_n, g.num().leading());
    Polynomial dd = poly_from_roots(keep_d, g.den().leading());
    return RationalTF(nn, dd);
}

/// lim_{s->inf} s*L(s) for proper L: zero when the relative degree is two
/// or more, the leading-coefficient ratio at relative degree one, and an
/// error for biproper or improper input where the limit is unbounded.
inline double limit_sL(const RationalTF& l) {
    if (l.is_zero()) return 0.0;
    int rd = l.relative_degree();
    if (rd <= 0) throw numeric_error("limit_sL: input is not strictly proper, limit is unbounded");
    if (rd >= 2) return 0.0;
    return l.num().leading() / l.den().leading();
}

}  // namespace bufferloop
