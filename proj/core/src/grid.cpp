#include "nullfol/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace nullfol {

namespace {

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.resize(n);
    w.resize(n);
    for (int k = 0; k < (n + 1) / 2; ++k) {
        double xi = std::cos(kPi * (k + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = xi;
            for (int l = 2; l <= n; ++l) {
                double p2 = ((2 * l - 1) * xi * p1 - (l - 1) * p0) / l;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (xi * p1 - p0) / (xi * xi - 1.0);
            double dx = p1 / dp;
            xi -= dx;
            if (std::abs(dx) < 1e-15) {
                p0 = 1.0;
                p1 = xi;
                for (int l = 2; l <= n; ++l) {
                    double p2 = ((2 * l - 1) * xi * p1 - (l - 1) * p0) / l;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (xi * p1 - p0) / (xi * xi - 1.0);
                break;
            }
        }
        x[k] = -xi;
        x[n - 1 - k] = xi;
        double wk = 2.0 / ((1.0 - xi * xi) * dp * dp);
        w[k] = wk;
        w[n - 1 - k] = wk;
    }
}

}  // namespace

std::shared_ptr<const SphereGrid> SphereGrid::make(int l_max) {
    if (l_max < 4) throw std::invalid_argument("SphereGrid: band limit must be >= 4");
    auto grid = std::shared_ptr<SphereGrid>(new SphereGrid());
    grid->build(l_max);
    return grid;
}

void SphereGrid::build(int l_max) {
    l_max_ = l_max;
    n_lat_ = l_max + 3;
    n_lon_ = 2 * l_max + 4;

    std::vector<double> gx, gw;
    gauss_legendre(n_lat_, gx, gw);

    theta_.resize(n_lat_);
    x_.resize(n_lat_);
    sin_.resize(n_lat_);
    w_node_.resize(n_lat_);
    for (int i = 0; i < n_lat_; ++i) {
        // descending x = ascending theta
        double xi = gx[n_lat_ - 1 - i];
        x_[i] = xi;
        theta_[i] = std::acos(xi);
        sin_[i] = std::sqrt(1.0 - xi * xi);
        w_node_[i] = gw[n_lat_ - 1 - i] * (2.0 * kPi / n_lon_);
    }

    cos_m_.resize((l_max_ + 1) * n_lon_);
    sin_m_.resize((l_max_ + 1) * n_lon_);
    for (int m = 0; m <= l_max_; ++m)
        for (int j = 0; j < n_lon_; ++j) {
            double a = m * 2.0 * kPi * j / n_lon_;
            cos_m_[m * n_lon_ + j] = std::cos(a);
            sin_m_[m * n_lon_ + j] = std::sin(a);
        }

    // Orthonormalized associated Legendre tables: int Ptilde^2 dx = 1/(2 pi).
    int n_tri = (l_max_ + 1) * (l_max_ + 2) / 2;
    for (auto& t : leg_) t.assign(n_tri * n_lat_, 0.0);

    auto at = [&](int deriv, int l, int m) { return leg_[deriv].data() + tri_index(l, m) * n_lat_; };

    for (int i = 0; i < n_lat_; ++i) {
        double x = x_[i], s = sin_[i];
        // diagonal and first off-diagonal
        at(0, 0, 0)[i] = std::sqrt(1.0 / (4.0 * kPi));
        for (int m = 1; m <= l_max_; ++m)
            at(0, m, m)[i] = std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * s * at(0, m - 1, m - 1)[i];
        for (int m = 0; m < l_max_; ++m)
            at(0, m + 1, m)[i] = std::sqrt(2.0 * m + 3.0) * x * at(0, m, m)[i];
        for (int m = 0; m <= l_max_; ++m)
            for (int l = m + 2; l <= l_max_; ++l) {
                double a = std::sqrt((4.0 * l * l - 1.0) / (double(l) * l - double(m) * m));
                double b = std::sqrt((double(l - 1) * (l - 1) - double(m) * m) /
                                     (4.0 * double(l - 1) * (l - 1) - 1.0));
                at(0, l, m)[i] = a * (x * at(0, l - 1, m)[i] - b * at(0, l - 2, m)[i]);
            }
    }

    // dP/dtheta = (c_lm * P_{l-1}^m - l x P_l^m) / sin,
    // c_lm = sqrt((2l+1)(l-m)(l+m)/(2l-1)) for the normalized functions.
    for (int m = 0; m <= l_max_; ++m)
        for (int l = m; l <= l_max_; ++l) {
            double c = (l > m || l > 0)
                           ? std::sqrt((2.0 * l + 1.0) * (double(l) - m) * (double(l) + m) / (2.0 * l - 1.0))
                           : 0.0;
            for (int i = 0; i < n_lat_; ++i) {
                double x = x_[i], s = sin_[i];
                double pl = at(0, l, m)[i];
                double plm1 = (l - 1 >= m) ? at(0, l - 1, m)[i] : 0.0;
                at(1, l, m)[i] = (c * plm1 - l * x * pl) / s;
            }
        }

    // Higher derivatives from the associated Legendre ODE:
    //   P'' = -cot P' - (lam - m^2/sin^2) P,  lam = l(l+1).
    for (int m = 0; m <= l_max_; ++m)
        for (int l = m; l <= l_max_; ++l) {
            double lam = double(l) * (l + 1);
            for (int i = 0; i < n_lat_; ++i) {
                double s = sin_[i], c = x_[i];
                double cot = c / s;
                double m2s2 = double(m) * m / (s * s);
                double T0 = at(0, l, m)[i], T1 = at(1, l, m)[i];
                double T2 = -cot * T1 - (lam - m2s2) * T0;
                double g = (1.0 + double(m) * m) / (s * s) - lam;
                double T3 = g * T1 - cot * T2 - 2.0 * m * m * (c / (s * s * s)) * T0;
                double gp = -2.0 * (1.0 + double(m) * m) * c / (s * s * s);
                double cs3p = (2.0 * s * s - 3.0) / (s * s * s * s);
                double T4 = gp * T1 + g * T2 + (1.0 / (s * s)) * T2 - cot * T3 -
                            2.0 * m * m * (cs3p * T0 + (c / (s * s * s)) * T1);
                at(2, l, m)[i] = T2;
                at(3, l, m)[i] = T3;
                at(4, l, m)[i] = T4;
            }
        }
}

double SphereGrid::y_lm(int l, int m, int i, int j) const {
    int am = m < 0 ? -m : m;
    double p = legendre(0, l, am, i);
    if (m == 0) return p;
    const double r2 = std::sqrt(2.0);
    return m > 0 ? r2 * p * cos_m_phi(am, j) : r2 * p * sin_m_phi(am, j);
}

double SphereGrid::y_lm_dtheta(int l, int m, int i, int j) const {
    int am = m < 0 ? -m : m;
    double dp = legendre(1, l, am, i);
    if (m == 0) return dp;
    const double r2 = std::sqrt(2.0);
    return m > 0 ? r2 * dp * cos_m_phi(am, j) : r2 * dp * sin_m_phi(am, j);
}

double SphereGrid::y_lm_dphi(int l, int m, int i, int j) const {
    int am = m < 0 ? -m : m;
    double p = legendre(0, l, am, i);
    if (m == 0) return 0.0;
    const double r2 = std::sqrt(2.0);
    return m > 0 ? -r2 * am * p * sin_m_phi(am, j) : r2 * am * p * cos_m_phi(am, j);
}

double integrate_samples(const std::vector<double>& s, const std::vector<double>& f) {
    size_t n = s.size();
    if (n < 2) return 0.0;
    double h = s[1] - s[0];
    bool uniform = true;
    for (size_t i = 1; i + 1 < n; ++i)
        if (std::abs((s[i + 1] - s[i]) - h) > 1e-12 * (std::abs(h) + 1e-300)) {
            uniform = false;
            break;
        }
    if (!uniform || n == 2) {
        double acc = 0.0;
        for (size_t i = 0; i + 1 < n; ++i) acc += 0.5 * (f[i] + f[i + 1]) * (s[i + 1] - s[i]);
        return acc;
    }
    // Composite Simpson; odd interval count closes with a 3/8 rule.
    size_t m = n - 1;
    double acc = 0.0;
    size_t stop = (m % 2 == 0) ? m : m - 3;
    for (size_t i = 0; i + 2 <= stop; i += 2) acc += h / 3.0 * (f[i] + 4.0 * f[i + 1] + f[i + 2]);
    if (m % 2 != 0) {
        if (m >= 3) {
            size_t i = m - 3;
            acc += 3.0 * h / 8.0 * (f[i] + 3.0 * f[i + 1] + 3.0 * f[i + 2] + f[i + 3]);
        } else {
            acc += 0.5 * h * (f[0] + f[1]);
        }
    }
    return acc;
}

std::vector<double> cumulative_integral(const std::vector<double>& s, const std::vector<double>& f) {
    size_t n = s.size();
    std::vector<double> out(n, 0.0);
    if (n < 2) return out;
    double h = s[1] - s[0];
    bool uniform = true;
    for (size_t i = 1; i + 1 < n; ++i)
        if (std::abs((s[i + 1] - s[i]) - h) > 1e-12 * (std::abs(h) + 1e-300)) {
            uniform = false;
            break;
        }
    if (!uniform || n < 4) {
        for (size_t i = 1; i < n; ++i)
            out[i] = out[i - 1] + 0.5 * (f[i - 1] + f[i]) * (s[i] - s[i - 1]);
        return out;
    }
    // 4th-order: cubic one-step formula for the first interval, then
    // alternating Simpson / 3-8 closures reusing earlier prefix values.
    for (size_t i = 1; i < n; ++i) {
        if (i == 1) {
            out[1] = h / 24.0 * (9.0 * f[0] + 19.0 * f[1] - 5.0 * f[2] + f[3]);
        } else if (i % 2 == 0) {
            out[i] = out[i - 2] + h / 3.0 * (f[i - 2] + 4.0 * f[i - 1] + f[i]);
        } else {
            out[i] = out[i - 3] + 3.0 * h / 8.0 * (f[i - 3] + 3.0 * f[i - 2] + 3.0 * f[i - 1] + f[i]);
        }
    }
    return out;
}

}  // namespace nullfol
