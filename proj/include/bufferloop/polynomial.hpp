#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdio>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bufferloop {

/// Real-coefficient polynomial in the Laplace variable s, stored in
/// ascending degree order: coeffs()[k] multiplies s^k. Trailing zero
/// coefficients are trimmed on construction; the zero polynomial has an
/// empty coefficient vector and degree() == -1.
class Polynomial {
  public:
    Polynomial() = default;

    Polynomial(std::initializer_list<double> ascending) : coeffs_(ascending) { trim(); }

    explicit Polynomial(std::vector<double> ascending) : coeffs_(std::move(ascending)) { trim(); }

    static Polynomial constant(double c) { return Polynomial{c}; }

    /// The monomial s.
    static Polynomial s() { return Polynomial{0.0, 1.0}; }

    const std::vector<double>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree after trimming; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    double leading() const { return coeffs_.empty() ? 0.0 : coeffs_.back(); }

    /// Coefficient of s^k, zero beyond the stored degree.
    double coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0.0; }

    std::complex<double> operator()(std::complex<double> s) const {
        std::complex<double> acc(0.0, 0.0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + *it;
        return acc;
    }

    double operator()(double s) const {
        double acc = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + *it;
        return acc;
    }

    /// Sum of |a_k| |s|^k, the natural scale for backward-error tests of
    /// evaluations near s.
    double eval_scale(std::complex<double> s) const {
        double mag = std::abs(s);
        double acc = 0.0;
        double p = 1.0;
        for (double a : coeffs_) {
            acc += std::abs(a) * p;
            p *= mag;
        }
        return acc;
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return Polynomial();
        std::vector<double> d(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<double>(k);
        return Polynomial(std::move(d));
    }

    Polynomial& operator*=(double k) {
        for (double& a : coeffs_) a *= k;
        trim();
        return *this;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<double> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<double> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<double> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Polynomial& a, double k) {
        Polynomial r = a;
        r *= k;
        return r;
    }

    friend Polynomial operator*(double k, const Polynomial& a) { return a * k; }

    friend Polynomial operator-(const Polynomial& a) { return a * -1.0; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            double a = coeffs_[static_cast<std::size_t>(k)];
            if (a == 0.0 && degree() > 0) continue;
            if (!out.empty()) out += a < 0 ? " - " : " + ";
            else if (a < 0) out += "-";
            double mag = std::abs(a);
            if (k == 0 || mag != 1.0) out += format_double(mag);
            if (k > 0) {
                if (mag != 1.0) out += "*";
                out += "s";
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

  private:
    static std::string format_double(double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.6g", v);
        return buf;
    }

    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
    }

    std::vector<double> coeffs_;
};

/// Expands prod (s - r_k) * leading into real coefficients. Roots must come
/// conjugate-closed; a root with small imaginary part (relative to 1 + |r|)
/// is treated as real, other complex roots are consumed in conjugate pairs
/// as quadratic factors so the result stays exactly real.
inline Polynomial poly_from_roots(std::span<const std::complex<double>> roots, double leading,
                                  double imag_tol = 1e-9) {
    Polynomial acc = Polynomial::constant(leading);
    std::vector<std::complex<double>> pending(roots.begin(), roots.end());
    while (!pending.empty()) {
        std::complex<double> r = pending.back();
        pending.pop_back();
        if (std::abs(r.imag()) <= imag_tol * (1.0 + std::abs(r))) {
            acc = acc * Polynomial{-r.real(), 1.0};
            continue;
        }
        // Find and consume the conjugate partner.
        std::size_t best = pending.size();
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < pending.size(); ++i) {
            double d = std::abs(pending[i] - std::conj(r));
            if (d < best_d) {
                best_d = d;
                best = i;
            }
        }
        if (best == pending.size())
            throw std::invalid_argument("poly_from_roots: complex root without conjugate partner");
        std::complex<double> mate = pending[best];
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
        std::complex<double> pair = 0.5 * (r + std::conj(mate));
        double re = pair.real();
        double m2 = std::norm(pair);
        acc = acc * Polynomial{m2, -2.0 * re, 1.0};
    }
    return acc;
}

inline Polynomial poly_from_roots(const std::vector<std::complex<double>>& roots, double leading,
                                  double imag_tol = 1e-9) {
    return poly_from_roots(std::span<const std::complex<double>>(roots), leading, imag_tol);
}

}  // namespace bufferloop
