#include "ppcf/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ppcf {

std::string to_string(const Gint& z) {
    std::ostringstream os;
    os << z.re;
    if (z.im >= 0) os << "+" << z.im;
    else os << z.im;
    os << "i";
    return os.str();
}

std::string to_string(const GintVec& a) {
    std::ostringstream os;
    os << "(";
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (j) os << ", ";
        os << to_string(a[j]);
    }
    os << ")";
    return os.str();
}

namespace {

void attach_real_basis(ComplexLattice& L) {
    const int k = L.k, n = L.n;
    L.basis_real.resize(2 * k, 2 * n);
    const Cplx iu(0.0, 1.0);
    for (int j = 0; j < k; ++j) {
        for (int t = 0; t < n; ++t) {
            const Cplx g = L.G(j, t);
            L.basis_real(2 * j, 2 * t) = g.real();
            L.basis_real(2 * j, 2 * t + 1) = g.imag();
            const Cplx ig = iu * g;
            L.basis_real(2 * j + 1, 2 * t) = ig.real();
            L.basis_real(2 * j + 1, 2 * t + 1) = ig.imag();
        }
    }
    Eigen::HouseholderQR<RMat> qr(L.basis_real.transpose());
    RMat thinq = qr.householderQ() * RMat::Identity(2 * n, 2 * k);
    RMat r = qr.matrixQR().topLeftCorner(2 * k, 2 * k).triangularView<Eigen::Upper>();
    for (int i = 0; i < 2 * k; ++i) {
        if (r(i, i) < 0) {
            r.row(i) = -r.row(i);
            thinq.col(i) = -thinq.col(i);
        }
    }
    const double dmax = r.diagonal().cwiseAbs().maxCoeff();
    if (r.diagonal().cwiseAbs().minCoeff() <= 1e-12 * dmax)
        throw std::invalid_argument("lattice generator rows are linearly dependent");
    L.qr_q = std::move(thinq);
    L.qr_r = std::move(r);
}

// Schnorr-Euchner closest-vector search on the QR factors of the real
// basis. Distances used for pruning come from the R-metric; candidates are
// re-scored in ambient coordinates so cross-decoder comparisons are
// consistent. Equal-distance ties resolve to the lexicographically lowest
// ambient coordinate vector.
struct CvpContext {
    const RMat& R;
    const RVec& target;
    const RMat& basis;
    const RVec& ambient;
    int N;
    double radius2 = 0.0;
    Eigen::VectorXi x;
    Eigen::VectorXi best_x;
    RVec best_p;
    double best_d2 = 0.0;
    bool have = false;
};

void cvp_dfs(CvpContext& c, int level, double acc) {
    if (level < 0) {
        const RVec p = c.basis.transpose() * c.x.cast<double>();
        const double d2 = (c.ambient - p).squaredNorm();
        bool better = !c.have || d2 < c.best_d2;
        if (!better && d2 == c.best_d2) {
            for (Eigen::Index j = 0; j < p.size(); ++j) {
                if (p[j] != c.best_p[j]) {
                    better = p[j] < c.best_p[j];
                    break;
                }
            }
        }
        if (better) {
            c.best_d2 = d2;
            c.best_p = p;
            c.best_x = c.x;
            c.have = true;
        }
        c.radius2 = std::min(c.radius2, acc * (1.0 + 1e-9) + 1e-13);
        return;
    }
    double s = 0.0;
    for (int j = level + 1; j < c.N; ++j) s += c.R(level, j) * c.x[j];
    const double resid = c.target[level] - s;
    const double center = resid / c.R(level, level);
    const long long x0 = std::llround(center);
    const long long dir = (center >= static_cast<double>(x0)) ? 1 : -1;
    for (int iter = 0;; ++iter) {
        long long xi;
        if (iter == 0) xi = x0;
        else if (iter % 2 == 1) xi = x0 + dir * ((iter + 1) / 2);
        else xi = x0 - dir * (iter / 2);
        const double diff = c.R(level, level) * static_cast<double>(xi) - resid;
        const double nacc = acc + diff * diff;
        if (nacc > c.radius2) break;  // zig-zag is nondecreasing in distance
        c.x[level] = static_cast<int>(xi);
        cvp_dfs(c, level - 1, nacc);
    }
}

LatticePoint quantize_enumeration(const CVec& y, const ComplexLattice& L) {
    const int N = 2 * L.k;
    const RVec yr = real_image(y);
    const RVec t = L.qr_q.transpose() * yr;

    CvpContext c{L.qr_r, t, L.basis_real, yr, N};
    c.x.resize(N);
    c.best_x.resize(N);

    // Babai descent fixes the initial search radius.
    Eigen::VectorXi bab(N);
    double acc = 0.0;
    for (int i = N - 1; i >= 0; --i) {
        double s = 0.0;
        for (int j = i + 1; j < N; ++j) s += c.R(i, j) * bab[j];
        const double resid = t[i] - s;
        bab[i] = static_cast<int>(std::llround(resid / c.R(i, i)));
        const double diff = c.R(i, i) * bab[i] - resid;
        acc += diff * diff;
    }
    c.radius2 = acc * (1.0 + 1e-9) + 1e-13;

    cvp_dfs(c, N - 1, 0.0);

    LatticePoint p;
    p.coords = complex_image(c.best_p);
    return p;
}

}  // namespace

ComplexLattice make_cubic_gaussian(int n, double scale) {
    if (n < 1 || scale <= 0) throw std::invalid_argument("cubic lattice needs n >= 1, scale > 0");
    ComplexLattice L;
    L.name = "cubic_gaussian(" + std::to_string(n) + ")";
    L.k = L.n = n;
    L.G = CMat::Identity(n, n) * scale;
    L.kind = QuantizerKind::Rounding;
    L.rounding_scale = scale;
    attach_real_basis(L);
    return L;
}

ComplexLattice make_e8() {
    // Gaussian-integer basis whose interleaved real image is the standard
    // real E8 (integer or all-half coordinates with even sum); |det| = 1.
    ComplexLattice L;
    L.name = "e8";
    L.k = L.n = 4;
    L.G = CMat::Zero(4, 4);
    const Cplx one(1, 0), iu(0, 1), opi(1, 1), h(0.5, 0.5);
    L.G(0, 0) = opi;
    L.G(1, 0) = one;
    L.G(1, 1) = one;
    L.G(2, 0) = iu;
    L.G(2, 2) = one;
    L.G.row(3).setConstant(h);
    L.kind = QuantizerKind::E8Fast;
    attach_real_basis(L);
    return L;
}

ComplexLattice make_generic(std::string name, const CMat& G) {
    ComplexLattice L;
    L.name = std::move(name);
    L.k = static_cast<int>(G.rows());
    L.n = static_cast<int>(G.cols());
    if (L.k != L.n) throw std::invalid_argument("enumeration quantizer requires a full-rank lattice");
    L.G = G;
    L.kind = QuantizerKind::GenericEnumeration;
    attach_real_basis(L);
    return L;
}

LatticePoint encode(const GintVec& u, const ComplexLattice& L) {
    if (static_cast<int>(u.size()) != L.k)
        throw std::invalid_argument("encode: message length " + std::to_string(u.size()) +
                                    " does not match lattice rank " + std::to_string(L.k));
    LatticePoint p;
    p.coords = L.G.transpose() * to_cvec(u);
    return p;
}

namespace {

using V8 = Eigen::Matrix<double, 8, 1>;

V8 d8_nearest(const V8& y) {
    V8 out;
    long long sum = 0;
    int worst = 0;
    double worst_dev = -1.0;
    for (int i = 0; i < 8; ++i) {
        out[i] = round_half_down(y[i]);
        sum += std::llround(out[i]);
        const double dev = std::abs(y[i] - out[i]);
        if (dev > worst_dev) {
            worst_dev = dev;
            worst = i;
        }
    }
    if (sum & 1LL) out[worst] += (y[worst] - out[worst] >= 0.0) ? 1.0 : -1.0;
    return out;
}

}  // namespace

V8 e8_nearest(const V8& y) {
    const V8 c1 = d8_nearest(y);
    const V8 c2 = d8_nearest(y - V8::Constant(0.5)) + V8::Constant(0.5);
    const double d1 = (y - c1).squaredNorm();
    const double d2 = (y - c2).squaredNorm();
    return (d1 <= d2) ? c1 : c2;
}

bool e8_member(const V8& x, double tol) {
    bool all_int = true, all_half = true;
    for (int i = 0; i < 8; ++i) {
        const double ri = std::round(x[i]);
        if (std::abs(x[i] - ri) > tol) all_int = false;
        const double rh = std::round(x[i] - 0.5) + 0.5;
        if (std::abs(x[i] - rh) > tol) all_half = false;
    }
    if (!all_int && !all_half) return false;
    const double total = x.sum();
    const double nearest_even = std::round(total / 2.0) * 2.0;
    return std::abs(total - nearest_even) <= 8 * tol;
}

LatticePoint quantize(const CVec& y, const ComplexLattice& L) {
    if (static_cast<int>(y.size()) != L.n)
        throw std::invalid_argument("quantize: input length does not match lattice dimension");
    switch (L.kind) {
        case QuantizerKind::Rounding: {
            LatticePoint p;
            p.coords.resize(L.n);
            for (int t = 0; t < L.n; ++t) {
                const Gint u = round_gauss(y[t] / L.rounding_scale);
                p.coords[t] = L.rounding_scale * u.to_complex();
            }
            return p;
        }
        case QuantizerKind::E8Fast: {
            V8 yr;
            for (int t = 0; t < 4; ++t) {
                yr[2 * t] = y[t].real();
                yr[2 * t + 1] = y[t].imag();
            }
            const V8 p = e8_nearest(yr);
            LatticePoint out;
            out.coords.resize(4);
            for (int t = 0; t < 4; ++t) out.coords[t] = Cplx(p[2 * t], p[2 * t + 1]);
            return out;
        }
        case QuantizerKind::GenericEnumeration:
            return quantize_enumeration(y, L);
    }
    throw std::logic_error("unreachable");
}

CVec mod_lattice(const CVec& y, const ComplexLattice& L) {
    return y - quantize(y, L).coords;
}

std::vector<double> deep_hole_phases(int max_odd) {
    if (max_odd < 1 || max_odd % 2 == 0)
        throw std::invalid_argument("deep_hole_phases: max_odd must be an odd integer >= 1");
    // Dedupe ratios exactly in reduced form (3/9 == 1/3).
    std::set<std::pair<long long, long long>> ratios;
    for (long long o1 = 1; o1 <= max_odd; o1 += 2)
        for (long long o2 = 1; o2 <= o1; o2 += 2) {
            const long long g = std::gcd(o1, o2);
            ratios.insert({o2 / g, o1 / g});
        }
    std::vector<double> phases{0.0};
    for (const auto& [p, q] : ratios) {
        const double phi = std::atan2(static_cast<double>(p), static_cast<double>(q));
        phases.push_back(phi);
        if (p != q) phases.push_back(-phi);
    }
    std::sort(phases.begin(), phases.end());
    return phases;
}

Gint reduce_gauss(Gint u, Gint a) {
    const Cplx q = u.to_complex() / a.to_complex();
    const Gint r = round_gauss(q);
    return u - a * r;
}

std::vector<Gint> gaussian_residues(Gint a) {
    const std::int64_t N = a.norm2();
    if (N <= 1) throw std::invalid_argument("gaussian_residues: |a| must exceed 1");
    std::set<Gint> reps;
    for (std::int64_t x = 0; x < N; ++x)
        for (std::int64_t y = 0; y < N; ++y) reps.insert(reduce_gauss({x, y}, a));
    if (static_cast<std::int64_t>(reps.size()) != N)
        throw std::logic_error("gaussian_residues: residue count mismatch");
    return {reps.begin(), reps.end()};
}

namespace {

CVec reduce_mod_scaled(const CVec& y, const ComplexLattice& L, Gint a) {
    const Cplx ac = a.to_complex();
    const CVec scaled = y / ac;
    return y - ac * quantize(scaled, L).coords;
}

}  // namespace

LatticePoint VoronoiCodebook::codeword(const std::vector<int>& msg) const {
    if (static_cast<int>(msg.size()) != base.k)
        throw std::invalid_argument("codeword: message length does not match lattice rank");
    GintVec u(msg.size());
    for (std::size_t j = 0; j < msg.size(); ++j) {
        if (msg[j] < 0 || msg[j] >= message_radix())
            throw std::invalid_argument("codeword: message digit out of range");
        u[j] = transversal[static_cast<std::size_t>(msg[j])];
    }
    LatticePoint p;
    p.coords = reduce(encode(u, base).coords);
    p.message = std::move(u);
    return p;
}

CVec VoronoiCodebook::reduce(const CVec& y) const { return reduce_mod_scaled(y, base, scale); }

bool VoronoiCodebook::equal_mod_sublattice(const CVec& x, const CVec& y, double tol) const {
    return reduce_mod_scaled(x - y, base, scale).norm() <= tol;
}

VoronoiCodebook VoronoiCodebook::rescale(double new_rho) const {
    VoronoiCodebook cb = *this;
    cb.rho = new_rho;
    cb.energy_scale = std::sqrt(base.n * new_rho / avg_energy);
    return cb;
}

VoronoiCodebook build_codebook(const ComplexLattice& L, Gint a, double rho,
                               std::uint64_t max_cardinality) {
    if (a.norm2() <= 1) throw std::invalid_argument("build_codebook: |a| must exceed 1");
    if (L.k != L.n) throw std::invalid_argument("build_codebook: lattice must be full rank");
    if (rho <= 0) throw std::invalid_argument("build_codebook: rho must be positive");

    VoronoiCodebook cb;
    cb.base = L;
    cb.scale = a;
    cb.transversal = gaussian_residues(a);
    cb.rho = rho;

    const std::uint64_t radix = cb.transversal.size();
    std::uint64_t card = 1;
    for (int j = 0; j < L.k; ++j) {
        if (card > max_cardinality / radix)
            throw std::length_error("build_codebook: cardinality " + std::to_string(radix) + "^" +
                                    std::to_string(L.k) + " exceeds limit " +
                                    std::to_string(max_cardinality));
        card *= radix;
    }
    cb.cardinality = card;

    // Mean energy over the full constellation sets the power normalization.
    double esum = 0.0;
    GintVec u(static_cast<std::size_t>(L.k));
    for (std::uint64_t idx = 0; idx < card; ++idx) {
        std::uint64_t rem = idx;
        for (int j = 0; j < L.k; ++j) {
            u[static_cast<std::size_t>(j)] = cb.transversal[rem % radix];
            rem /= radix;
        }
        esum += reduce_mod_scaled(encode(u, L).coords, L, a).squaredNorm();
    }
    cb.avg_energy = esum / static_cast<double>(card);
    cb.energy_scale = std::sqrt(L.n * rho / cb.avg_energy);
    return cb;
}

}  // namespace ppcf
