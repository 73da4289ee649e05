// Copyright 2026 layerheat authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "layerheat/fd_oracle.hpp"

#include <Eigen/Sparse>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "layerheat/fields.hpp"
#include "layerheat/media.hpp"

namespace layerheat {

namespace {

// Reusable factorization of a constant tridiagonal system.
class TridiagSolver {
  public:
    void factor(const std::vector<double>& sub, const std::vector<double>& diag,
                const std::vector<double>& sup) {
        const std::size_t n = diag.size();
        sub_ = sub;
        w_.assign(n, 0.0);
        inv_d_.assign(n, 0.0);
        double denom = diag[0];
        inv_d_[0] = 1.0 / denom;
        w_[0] = sup[0] * inv_d_[0];
        for (std::size_t i = 1; i < n; ++i) {
            denom = diag[i] - sub[i] * w_[i - 1];
            inv_d_[i] = 1.0 / denom;
            if (i + 1 < n) {
                w_[i] = sup[i] * inv_d_[i];
            }
        }
    }

    // Solves into x; rhs and x may not alias.
    void solve(const std::vector<double>& rhs, std::vector<double>& x) const {
        const std::size_t n = inv_d_.size();
        x[0] = rhs[0] * inv_d_[0];
        for (std::size_t i = 1; i < n; ++i) {
            x[i] = (rhs[i] - sub_[i] * x[i - 1]) * inv_d_[i];
        }
        for (std::size_t i = n - 1; i-- > 0;) {
            x[i] -= w_[i] * x[i + 1];
        }
    }

  private:
    std::vector<double> sub_;
    std::vector<double> w_;
    std::vector<double> inv_d_;
};

struct IdealInterface {
    int node = 0;
    double nu = 1.0;
};

[[noreturn]] void fail(const std::string& message) {
    throw std::invalid_argument(message);
}

int node_count(double lo, double hi, double h, const char* axis) {
    const double span = hi - lo;
    const int n = static_cast<int>(std::lround(span / h)) + 1;
    if (n < 7 || std::abs(lo + (n - 1) * h - hi) > 1e-9 * std::max(1.0, span)) {
        std::ostringstream message;
        message << axis << " extent is not an integer number of steps";
        fail(message.str());
    }
    return n;
}

std::vector<double> axis_nodes(double lo, int n, double h) {
    std::vector<double> nodes(n);
    for (int i = 0; i < n; ++i) {
        nodes[i] = lo + i * h;
    }
    return nodes;
}

// Extracts the conductivity ratio of an ideal-contact condition pair,
// tolerating an overall scale on each row.
double ideal_ratio(const InterfaceConditions& ic, int index) {
    std::ostringstream message;
    message << "interface " << (index + 1)
            << " is not ideal thermal contact";
    const bool value_row = ic.alpha[0][0] == 0.0 && ic.alpha[0][1] == 0.0 &&
                           ic.beta[0][0] != 0.0 &&
                           ic.beta[0][0] == ic.beta[0][1];
    const bool flux_row = ic.beta[1][0] == 0.0 && ic.beta[1][1] == 0.0 &&
                          ic.alpha[1][0] != 0.0;
    if (!value_row || !flux_row) {
        fail(message.str());
    }
    const double nu = ic.alpha[1][1] / ic.alpha[1][0];
    if (!(nu > 0.0) || !std::isfinite(nu)) {
        fail(message.str());
    }
    return nu;
}

// Applies one Crank-Nicolson step of the unit-coefficient 1-d Laplacian
// with weight c = tau / (2 h^2) to every line of the array along one axis.
void transverse_sweep(std::vector<double>& u, const TridiagSolver& solver,
                      double c, int n, const std::vector<std::size_t>& bases,
                      std::size_t stride, std::vector<double>& line,
                      std::vector<double>& rhs, std::vector<double>& out) {
    for (const std::size_t base : bases) {
        for (int i = 0; i < n; ++i) {
            line[i] = u[base + static_cast<std::size_t>(i) * stride];
        }
        rhs[0] = 0.0;
        rhs[n - 1] = 0.0;
        for (int i = 1; i + 1 < n; ++i) {
            rhs[i] = line[i] + c * (line[i - 1] - 2.0 * line[i] + line[i + 1]);
        }
        solver.solve(rhs, out);
        for (int i = 0; i < n; ++i) {
            u[base + static_cast<std::size_t>(i) * stride] = out[i];
        }
    }
}

}  // namespace

FdSolution::FdSolution(std::vector<double> x_nodes,
                       std::vector<double> y_nodes, int transverse_dim,
                       std::vector<double> values)
    : x_(std::move(x_nodes)),
      y_(std::move(y_nodes)),
      m_(transverse_dim),
      values_(std::move(values)) {}

double FdSolution::at(int ix, const std::vector<int>& iy) const {
    if (static_cast<int>(iy.size()) != m_) {
        fail("index dimension does not match the grid");
    }
    if (ix < 0 || ix >= static_cast<int>(x_.size())) {
        fail("axial index out of range");
    }
    std::size_t offset = static_cast<std::size_t>(ix);
    for (int d = 0; d < m_; ++d) {
        if (iy[d] < 0 || iy[d] >= static_cast<int>(y_.size())) {
            fail("transverse index out of range");
        }
        offset = offset * y_.size() + static_cast<std::size_t>(iy[d]);
    }
    return values_[offset];
}

double FdSolution::value(double x, const std::vector<double>& y) const {
    if (static_cast<int>(y.size()) != m_) {
        fail("point dimension does not match the grid");
    }
    const double h = x_.size() > 1 ? x_[1] - x_[0] : 1.0;
    auto locate = [h](const std::vector<double>& nodes, double q,
                      const char* what) {
        const double pos = (q - nodes.front()) / h;
        const int k = static_cast<int>(std::lround(pos));
        if (k < 0 || k >= static_cast<int>(nodes.size()) ||
            std::abs(q - nodes[static_cast<std::size_t>(k)]) > 1e-6 * h) {
            std::ostringstream message;
            message << what << " coordinate " << q
                    << " does not lie on a grid node";
            fail(message.str());
        }
        return k;
    };
    const int ix = locate(x_, x, "axial");
    std::vector<int> iy(y.size());
    for (std::size_t d = 0; d < y.size(); ++d) {
        iy[d] = locate(y_, y[d], "transverse");
    }
    return at(ix, iy);
}

FdSolution fd_solve(const HeatScenario& sc, double t, const FdGrid& grid) {
    const LayeredMedium& medium = sc.medium;
    const int m = medium.transverse_dim;
    if (m != 1 && m != 2) {
        fail("the finite-difference oracle supports one or two transverse "
             "dimensions");
    }
    const std::vector<std::string> problems = validate(medium, sc.coupling);
    if (!problems.empty()) {
        fail("invalid medium: " + problems.front());
    }
    if (!(grid.h > 0.0) || !std::isfinite(grid.h) || !(grid.dt > 0.0) ||
        !std::isfinite(grid.dt)) {
        fail("grid step and time step must be positive and finite");
    }
    if (!(grid.x_lo < grid.x_hi) || !(grid.y_lo < grid.y_hi)) {
        fail("grid box is empty");
    }
    if (!(t > 0.0) || !std::isfinite(t)) {
        fail("t must be positive and finite");
    }
    const int steps = static_cast<int>(std::lround(t / grid.dt));
    if (steps < 1 || std::abs(steps * grid.dt - t) > 1e-9 * t) {
        fail("t must be an integer multiple of grid.dt");
    }

    const int nx = node_count(grid.x_lo, grid.x_hi, grid.h, "axial");
    const int ny = node_count(grid.y_lo, grid.y_hi, grid.h, "transverse");
    const std::vector<double> xs = axis_nodes(grid.x_lo, nx, grid.h);
    const std::vector<double> ys = axis_nodes(grid.y_lo, ny, grid.h);

    // Interface nodes and conductivity ratios.
    std::vector<IdealInterface> ifaces;
    for (std::size_t i = 0; i < medium.interfaces.size(); ++i) {
        const double pos = (medium.interfaces[i] - grid.x_lo) / grid.h;
        const int k = static_cast<int>(std::lround(pos));
        if (std::abs(pos - k) > 1e-9 * std::max(1.0, std::abs(pos)) || k < 2 ||
            k > nx - 3) {
            std::ostringstream message;
            message << "interface " << (i + 1)
                    << " must coincide with an interior grid node";
            fail(message.str());
        }
        if (!ifaces.empty() && k - ifaces.back().node < 3) {
            fail("interfaces are closer than three grid nodes");
        }
        ifaces.push_back(
            {k, ideal_ratio(sc.coupling.at[i], static_cast<int>(i))});
    }

    // Node classification along x: -1 boundary, -2 interface, else the
    // 1-based layer index.
    std::vector<int> node_layer(nx, 0);
    {
        std::size_t next_iface = 0;
        for (int i = 0; i < nx; ++i) {
            if (i == 0 || i == nx - 1) {
                node_layer[i] = -1;
                continue;
            }
            if (next_iface < ifaces.size() && i == ifaces[next_iface].node) {
                node_layer[i] = -2;
                ++next_iface;
                continue;
            }
            node_layer[i] = static_cast<int>(next_iface) + 1;
        }
    }

    // Axial Crank-Nicolson matrix with constraint rows, factored once.
    const double h2 = grid.h * grid.h;
    std::vector<double> rx(nx, 0.0);
    for (int i = 0; i < nx; ++i) {
        if (node_layer[i] > 0) {
            const double a = medium.a(node_layer[i]);
            rx[i] = a * a * grid.dt / (2.0 * h2);
        }
    }
    Eigen::SparseMatrix<double> ax(nx, nx);
    {
        std::vector<Eigen::Triplet<double>> trips;
        trips.reserve(static_cast<std::size_t>(3 * nx + 2 * 5));
        std::size_t next_iface = 0;
        for (int i = 0; i < nx; ++i) {
            if (node_layer[i] == -1) {
                trips.emplace_back(i, i, 1.0);
            } else if (node_layer[i] == -2) {
                const double nu = ifaces[next_iface].nu;
                ++next_iface;
                trips.emplace_back(i, i - 2, 1.0);
                trips.emplace_back(i, i - 1, -4.0);
                trips.emplace_back(i, i, 3.0 * (1.0 + nu));
                trips.emplace_back(i, i + 1, -4.0 * nu);
                trips.emplace_back(i, i + 2, nu);
            } else {
                trips.emplace_back(i, i - 1, -rx[i]);
                trips.emplace_back(i, i, 1.0 + 2.0 * rx[i]);
                trips.emplace_back(i, i + 1, -rx[i]);
            }
        }
        ax.setFromTriplets(trips.begin(), trips.end());
        ax.makeCompressed();
    }
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.analyzePattern(ax);
    lu.factorize(ax);
    if (lu.info() != Eigen::Success) {
        throw std::runtime_error("axial system factorization failed");
    }

    // Transverse Crank-Nicolson half-step matrix, factored once.
    const double cy = grid.dt / (4.0 * h2);
    TridiagSolver ty;
    {
        std::vector<double> sub(ny, 0.0);
        std::vector<double> diag(ny, 1.0);
        std::vector<double> sup(ny, 0.0);
        for (int i = 1; i + 1 < ny; ++i) {
            sub[i] = -cy;
            diag[i] = 1.0 + 2.0 * cy;
            sup[i] = -cy;
        }
        ty.factor(sub, diag, sup);
    }

    // Initial values.
    const std::size_t yplanes = m == 1 ? static_cast<std::size_t>(ny)
                                       : static_cast<std::size_t>(ny) * ny;
    std::vector<double> u(static_cast<std::size_t>(nx) * yplanes, 0.0);
    {
        std::vector<double> eta(m, 0.0);
        for (int ix = 0; ix < nx; ++ix) {
            const int tag = node_layer[ix];
            std::size_t next_iface = 0;
            while (next_iface < ifaces.size() &&
                   ifaces[next_iface].node != ix) {
                ++next_iface;
            }
            for (std::size_t p = 0; p < yplanes; ++p) {
                std::size_t rest = p;
                if (m == 2) {
                    eta[0] = ys[rest / ny];
                    eta[1] = ys[rest % ny];
                } else {
                    eta[0] = ys[rest];
                }
                double value = 0.0;
                if (tag == -2) {
                    const int left = static_cast<int>(next_iface) + 1;
                    value = 0.5 * (sc.initial.value(left, xs[ix], eta) +
                                   sc.initial.value(left + 1, xs[ix], eta));
                } else if (tag == -1) {
                    value = 0.0;
                } else {
                    value = sc.initial.value(tag, xs[ix], eta);
                }
                u[static_cast<std::size_t>(ix) * yplanes + p] = value;
            }
        }
    }

    // Line base offsets per sweep direction.
    std::vector<std::size_t> x_bases(yplanes);
    for (std::size_t p = 0; p < yplanes; ++p) {
        x_bases[p] = p;
    }
    const std::size_t x_stride = yplanes;
    std::vector<std::size_t> y1_bases;
    std::vector<std::size_t> y2_bases;
    if (m == 1) {
        y1_bases.resize(static_cast<std::size_t>(nx));
        for (int ix = 0; ix < nx; ++ix) {
            y1_bases[static_cast<std::size_t>(ix)] =
                static_cast<std::size_t>(ix) * yplanes;
        }
    } else {
        y1_bases.reserve(static_cast<std::size_t>(nx) * ny);
        y2_bases.reserve(static_cast<std::size_t>(nx) * ny);
        for (int ix = 0; ix < nx; ++ix) {
            for (int iy = 0; iy < ny; ++iy) {
                y1_bases.push_back(static_cast<std::size_t>(ix) * yplanes +
                                   static_cast<std::size_t>(iy));
                y2_bases.push_back(static_cast<std::size_t>(ix) * yplanes +
                                   static_cast<std::size_t>(iy) * ny);
            }
        }
    }
    const std::size_t y1_stride = m == 1 ? 1 : static_cast<std::size_t>(ny);

    std::vector<double> line(std::max(nx, ny));
    std::vector<double> rhs(std::max(nx, ny));
    std::vector<double> out(std::max(nx, ny));
    Eigen::VectorXd bx(nx);
    Eigen::VectorXd solx(nx);

    auto axial_sweep = [&]() {
        for (const std::size_t base : x_bases) {
            for (int i = 0; i < nx; ++i) {
                line[i] = u[base + static_cast<std::size_t>(i) * x_stride];
            }
            for (int i = 0; i < nx; ++i) {
                if (node_layer[i] > 0) {
                    bx[i] = line[i] + rx[i] * (line[i - 1] - 2.0 * line[i] +
                                               line[i + 1]);
                } else {
                    bx[i] = 0.0;
                }
            }
            solx = lu.solve(bx);
            for (int i = 0; i < nx; ++i) {
                u[base + static_cast<std::size_t>(i) * x_stride] = solx[i];
            }
        }
    };

    for (int step = 0; step < steps; ++step) {
        transverse_sweep(u, ty, cy, ny, y1_bases, y1_stride, line, rhs, out);
        if (m == 2) {
            transverse_sweep(u, ty, cy, ny, y2_bases, 1, line, rhs, out);
        }
        axial_sweep();
        if (m == 2) {
            transverse_sweep(u, ty, cy, ny, y2_bases, 1, line, rhs, out);
        }
        transverse_sweep(u, ty, cy, ny, y1_bases, y1_stride, line, rhs, out);
    }

    return FdSolution(xs, ys, m, std::move(u));
}

ErrorReport compare_samples(const std::vector<double>& reference,
                            const std::vector<double>& candidate) {
    if (reference.size() != candidate.size()) {
        fail("sample vectors differ in length");
    }
    ErrorReport report;
    report.samples = static_cast<int>(reference.size());
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < reference.size(); ++i) {
        const double diff = candidate[i] - reference[i];
        num += diff * diff;
        den += reference[i] * reference[i];
        report.linf_abs = std::max(report.linf_abs, std::abs(diff));
        report.ref_scale = std::max(report.ref_scale, std::abs(reference[i]));
    }
    if (den > 0.0) {
        report.l2_rel = std::sqrt(num / den);
    } else {
        report.l2_rel = num > 0.0 ? std::numeric_limits<double>::infinity()
                                  : 0.0;
    }
    return report;
}

}  // namespace layerheat
