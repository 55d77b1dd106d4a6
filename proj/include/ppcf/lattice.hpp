#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ppcf/util.hpp"

namespace ppcf {

enum class QuantizerKind { Rounding, E8Fast, GenericEnumeration };

/// Point of a complex lattice; `message` carries Gaussian-integer residues
/// mod a when the point is a codebook representative.
struct LatticePoint {
    CVec coords;
    std::optional<GintVec> message;
};

/// Complex lattice with generator rows g_1..g_k spanning points u G,
/// u in Z[i]^k. Stores the interleaved real-image basis and its QR
/// factorization for the enumeration quantizer.
struct ComplexLattice {
    std::string name;
    int k = 0;
    int n = 0;
    CMat G;
    QuantizerKind kind = QuantizerKind::GenericEnumeration;
    double rounding_scale = 1.0;  // Rounding kind only: G = scale * I

    RMat basis_real;  // 2k x 2n, rows: real(g_j), real(i g_j) interleaved
    RMat qr_q;        // 2n x 2k, orthonormal columns
    RMat qr_r;        // 2k x 2k, upper triangular, positive diagonal
};

ComplexLattice make_cubic_gaussian(int n, double scale = 1.0);
ComplexLattice make_e8();
/// Arbitrary full-rank complex lattice decoded by sphere enumeration.
ComplexLattice make_generic(std::string name, const CMat& G);

LatticePoint encode(const GintVec& u, const ComplexLattice& L);
LatticePoint quantize(const CVec& y, const ComplexLattice& L);
CVec mod_lattice(const CVec& y, const ComplexLattice& L);

/// Nearest point of real E8 (standard coordinates) by glue decoding of
/// D8 and D8 + (1/2,...,1/2).
Eigen::Matrix<double, 8, 1> e8_nearest(const Eigen::Matrix<double, 8, 1>& y);

/// Membership test for real E8: integer or all-half coordinates, even sum.
bool e8_member(const Eigen::Matrix<double, 8, 1>& x, double tol = 1e-9);

/// Deep-hole phases of Z^2: {0} and +-atan(o2/o1) for odd 0 < o2 <= o1
/// <= max_odd, deduplicated over reduced ratios (atan(1) appears once).
std::vector<double> deep_hole_phases(int max_odd);

/// Voronoi constellation Lambda / a Lambda with average-power scaling.
struct VoronoiCodebook {
    ComplexLattice base;
    Gint scale;                // a
    std::vector<Gint> transversal;  // sorted residues of Z[i]/aZ[i]
    std::uint64_t cardinality = 0;  // message_radix^k
    double rho = 1.0;
    double avg_energy = 0.0;   // unscaled mean codeword energy
    double energy_scale = 1.0; // gamma = sqrt(n rho / avg_energy)

    int message_radix() const { return static_cast<int>(transversal.size()); }

    /// Representative for message indices (one index per rank, in
    /// [0, message_radix)).
    LatticePoint codeword(const std::vector<int>& msg) const;

    /// Canonical reduction y mod a*Lambda into the Voronoi region of the
    /// sublattice.
    CVec reduce(const CVec& y) const;

    /// Coset equality in Lambda / a*Lambda.
    bool equal_mod_sublattice(const CVec& x, const CVec& y, double tol = 1e-6) const;

    /// Same codebook re-normalized for a different SNR.
    VoronoiCodebook rescale(double new_rho) const;
};

VoronoiCodebook build_codebook(const ComplexLattice& L, Gint a, double rho,
                               std::uint64_t max_cardinality = (1ull << 20));

/// Sorted canonical residue system of Z[i]/aZ[i] (Voronoi representatives).
std::vector<Gint> gaussian_residues(Gint a);

/// Canonical representative of u mod aZ[i].
Gint reduce_gauss(Gint u, Gint a);

}  // namespace ppcf
