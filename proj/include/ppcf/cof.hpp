#pragma once

#include "ppcf/lattice.hpp"
#include "ppcf/util.hpp"

namespace ppcf {

/// Fading state seen by one relay: coefficients h and linear SNR rho.
struct ChannelState {
    CVec h;
    double rho = 1.0;

    int users() const { return static_cast<int>(h.size()); }
};

/// Network equation decoded by a relay: Gaussian-integer coefficients a,
/// equalizer alpha, and the achieved computation rate in bits.
struct NetworkEquation {
    GintVec a;
    Cplx alpha{0.0, 0.0};
    double rate = 0.0;
};

/// M = I - rho/(1 + rho |h|^2) h^H h; Hermitian, eigenvalues in (0, 1].
struct GramMatrix {
    CMat M;
};

/// Average energy of the effective noise: rho |alpha h - a|^2 + |alpha|^2.
double effective_noise_energy(const ChannelState& cs, const GintVec& a, Cplx alpha);

/// MMSE equalizer rho <h, a> / (1 + rho |h|^2).
Cplx mmse_alpha(const ChannelState& cs, const GintVec& a);

GramMatrix gram_matrix(const ChannelState& cs);

/// Computation rate log2^+(1 / (a M a^H)) in bits.
double computation_rate(const ChannelState& cs, const GintVec& a);

/// Rate from a precomputed quadratic-form value a M a^H.
double rate_from_form(double form_value);

/// Relay decoding Q_Lambda(alpha y / gamma) mod Lambda'; gamma undoes the
/// codebook power scaling before the lattice decision.
CVec relay_decode(const ChannelState& cs, const CVec& y, const NetworkEquation& eq,
                  const VoronoiCodebook& cb);

/// Ground-truth combination (sum_l a_l x_l) mod Lambda'.
CVec true_combination(const GintVec& a, const std::vector<CVec>& codewords,
                      const VoronoiCodebook& cb);

}  // namespace ppcf
