// Copyright 2026 The symtomo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "symtomo/density.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <sstream>

#include "symtomo/error.hpp"

namespace symtomo {

DensityMatrix::DensityMatrix(AxisGrid q) : q_(q), v_(q.n() * q.n()) {}

double DensityMatrix::trace() const {
    auto w = trapezoid_weights(q_);
    double acc = 0.0;
    for (std::size_t i = 0; i < n(); ++i) acc += w[i] * (*this)(i, i).real();
    return acc;
}

double DensityMatrix::hermiticity_error() const {
    double err = 0.0;
    for (std::size_t i = 0; i < n(); ++i)
        for (std::size_t j = 0; j < n(); ++j) err = std::max(err, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return err;
}

double DensityMatrix::purity() const {
    auto w = trapezoid_weights(q_);
    double acc = 0.0;
    for (std::size_t i = 0; i < n(); ++i)
        for (std::size_t j = 0; j < n(); ++j) acc += w[i] * w[j] * std::norm((*this)(i, j));
    return acc;
}

std::vector<double> DensityMatrix::eigenvalues() const {
    auto w = trapezoid_weights(q_);
    Eigen::MatrixXcd m(n(), n());
    for (std::size_t i = 0; i < n(); ++i)
        for (std::size_t j = 0; j < n(); ++j) {
            // Average with the adjoint so the solver sees an exactly Hermitian input.
            Complex h = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
            m(i, j) = std::sqrt(w[i] * w[j]) * h;
        }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw_numeric("accuracy", "eigenvalue solver did not converge");
    const auto &ev = solver.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

double DensityMatrix::expectation(const std::vector<Complex> &psi) const {
    if (psi.size() != n()) throw_validation("dimension", "expectation: wavefunction length does not match q axis");
    auto w = trapezoid_weights(q_);
    Complex acc = 0.0;
    for (std::size_t i = 0; i < n(); ++i)
        for (std::size_t j = 0; j < n(); ++j) acc += w[i] * w[j] * std::conj(psi[i]) * (*this)(i, j) * psi[j];
    return acc.real();
}

double DensityMatrix::position_moment(int k) const {
    auto w = trapezoid_weights(q_);
    double acc = 0.0;
    for (std::size_t i = 0; i < n(); ++i) acc += w[i] * std::pow(q_[i], k) * (*this)(i, i).real();
    return acc;
}

std::vector<double> DensityMatrix::diagonal() const {
    std::vector<double> d(n());
    for (std::size_t i = 0; i < n(); ++i) d[i] = (*this)(i, i).real();
    return d;
}

AxisGrid density_axis(const FullTomogram &tomogram) {
    const auto &nu = tomogram.nu();
    if (!nu.is_symmetric() || nu.n() % 2 == 0)
        throw_validation("coverage", "density reconstruction needs a symmetric nu axis with an odd node count");
    const std::size_t m = (nu.n() - 1) / 2;
    const std::size_t half = m / 2;
    const double h = nu.spacing();
    return AxisGrid(-static_cast<double>(half) * h, static_cast<double>(half) * h, 2 * half + 1);
}

DensityMatrix reconstruct_density(const FullTomogram &tomogram) {
    return reconstruct_density(tomogram, density_axis(tomogram));
}

DensityMatrix reconstruct_density(const FullTomogram &tomogram, const AxisGrid &q_axis) {
    const auto &mu = tomogram.mu();
    const auto &nu = tomogram.nu();
    // Every difference q_l - q_k must be a nu node.
    const double ratio = q_axis.spacing() / nu.spacing();
    const long step = std::lround(ratio);
    if (step < 1 || std::abs(ratio - static_cast<double>(step)) > 1e-9 ||
        nu.node_index(q_axis.max() - q_axis.min()) < 0 || nu.node_index(q_axis.min() - q_axis.max()) < 0) {
        std::ostringstream os;
        os << "q axis [" << q_axis.min() << ", " << q_axis.max() << "] with spacing " << q_axis.spacing()
           << " needs nu nodes at every difference; nu covers [" << nu.min() << ", " << nu.max() << "] with spacing "
           << nu.spacing();
        throw_validation("coverage", os.str());
    }
    auto c = characteristic_slice(tomogram, 1.0);
    auto wmu = trapezoid_weights(mu);
    DensityMatrix rho(q_axis);
    const std::size_t n = q_axis.n();
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
            const long j = nu.node_index(q_axis[l] - q_axis[k]);
            const double s = 0.5 * (q_axis[k] + q_axis[l]);
            Complex acc = 0.0;
            for (std::size_t i = 0; i < mu.n(); ++i) acc += std::polar(wmu[i], mu[i] * s) * c(i, static_cast<std::size_t>(j));
            rho(k, l) = acc / (2.0 * std::numbers::pi);
        }
    }
    return rho;
}

}  // namespace symtomo
