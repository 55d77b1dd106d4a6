#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>

#include "ppcf/gaussint.hpp"

namespace ppcf {

using Cplx = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

/// Hermitian product <a, b> = a b^H = sum_j a_j conj(b_j).
inline Cplx hprod(const CVec& a, const CVec& b) { return b.dot(a); }

/// log2^+(x) = max(log2(x), 0).
inline double log2p(double x) { return std::max(std::log2(x), 0.0); }

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

/// Rounds half toward -inf: r(0.5) = 0, r(-0.5) = -1, r(1.5) = 1.
inline double round_half_down(double x) { return std::ceil(x - 0.5); }

inline Gint round_gauss(Cplx z) {
    return {static_cast<std::int64_t>(round_half_down(z.real())),
            static_cast<std::int64_t>(round_half_down(z.imag()))};
}

/// Wraps an angle to (-pi, pi].
inline double wrap_pi(double phi) {
    double w = std::remainder(phi, 2.0 * std::numbers::pi);
    if (w <= -std::numbers::pi) w += 2.0 * std::numbers::pi;
    return w;
}

constexpr double quarter_pi = std::numbers::pi / 4.0;

inline GintVec to_gint_checked(const CVec&) = delete;

inline CVec to_cvec(const GintVec& a) {
    CVec v(static_cast<Eigen::Index>(a.size()));
    for (std::size_t j = 0; j < a.size(); ++j) v[static_cast<Eigen::Index>(j)] = a[j].to_complex();
    return v;
}

/// Interleaved real image of a complex vector: (Re c0, Im c0, Re c1, ...).
inline RVec real_image(const CVec& c) {
    RVec r(2 * c.size());
    for (Eigen::Index t = 0; t < c.size(); ++t) {
        r[2 * t] = c[t].real();
        r[2 * t + 1] = c[t].imag();
    }
    return r;
}

inline CVec complex_image(const RVec& r) {
    CVec c(r.size() / 2);
    for (Eigen::Index t = 0; t < c.size(); ++t) c[t] = Cplx(r[2 * t], r[2 * t + 1]);
    return c;
}

/// Quadratic form a M a^H for a row-vector a (passed as a column), Hermitian M.
inline double qform(const CMat& M, const CVec& a) {
    return ((a.transpose() * M * a.conjugate())(0, 0)).real();
}

inline double qform(const CMat& M, const GintVec& a) { return qform(M, to_cvec(a)); }

}  // namespace ppcf
