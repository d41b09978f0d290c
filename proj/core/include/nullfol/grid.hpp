#pragma once

#include <memory>
#include <vector>

#include "nullfol/util.hpp"

namespace nullfol {

// Gauss-Legendre colatitudes x equispaced longitudes. n_lat = L_max+3 and
// n_lon = 2*L_max+4 give exact quadrature (with margin) for all pairwise
// products of the scalar/vector/tensor harmonic basis up to degree L_max.
// Gauss-Legendre never places nodes at the poles, so 1/sin(theta) factors
// in the tables are always finite.
class SphereGrid {
public:
    static std::shared_ptr<const SphereGrid> make(int l_max);

    int band_limit() const { return l_max_; }
    int n_lat() const { return n_lat_; }
    int n_lon() const { return n_lon_; }
    int n_nodes() const { return n_lat_ * n_lon_; }
    int n_scalar_modes() const { return (l_max_ + 1) * (l_max_ + 1); }

    double colat(int i) const { return theta_[i]; }
    double phi(int j) const { return 2.0 * kPi * j / n_lon_; }
    double cos_theta(int i) const { return x_[i]; }
    double sin_theta(int i) const { return sin_[i]; }

    // Weight for the reference measure sin(theta) dtheta dphi at latitude i
    // (already includes the 2*pi/n_lon longitude factor).
    double node_weight(int i) const { return w_node_[i]; }
    const std::vector<double>& quad_weights() const { return w_node_; }

    int node_index(int i, int j) const { return i * n_lon_ + j; }
    int lat_of(int node) const { return node / n_lon_; }
    int lon_of(int node) const { return node % n_lon_; }

    // Flat index of the real mode (l, m), m in [-l, l]; m >= 0 are cosine
    // modes, m < 0 sine modes.
    static int mode_index(int l, int m) { return l * l + l + m; }

    // Orthonormalized associated Legendre tables and their first four
    // theta-derivatives, evaluated at the grid colatitudes.
    // legendre(k, l, m, i) = d^k/dtheta^k  Ptilde_l^m(cos theta_i), m >= 0.
    double legendre(int deriv, int l, int m, int i) const {
        return leg_[deriv][tri_index(l, m) * n_lat_ + i];
    }

    double cos_m_phi(int m, int j) const { return cos_m_[m * n_lon_ + j]; }
    double sin_m_phi(int m, int j) const { return sin_m_[m * n_lon_ + j]; }

    // Real orthonormal spherical harmonic Y_lm at node (i, j).
    double y_lm(int l, int m, int i, int j) const;
    // d/dtheta and d/dphi of Y_lm at node (i, j).
    double y_lm_dtheta(int l, int m, int i, int j) const;
    double y_lm_dphi(int l, int m, int i, int j) const;

    int tri_index(int l, int m) const { return l * (l + 1) / 2 + m; }

private:
    SphereGrid() = default;
    void build(int l_max);

    int l_max_ = 0, n_lat_ = 0, n_lon_ = 0;
    std::vector<double> theta_, x_, sin_, w_node_;
    std::vector<double> leg_[5];
    std::vector<double> cos_m_, sin_m_;
};

using GridPtr = std::shared_ptr<const SphereGrid>;

}  // namespace nullfol
