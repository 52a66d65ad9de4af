// Copyright 2026 The cmip Authors
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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cmip/errors.hpp"
#include "cmip/qcore.hpp"

namespace cmip {

namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const CMatrix& a) {
    double sum = 0.0;
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            if (i != j) {
                sum += std::norm(a(i, j));
            }
        }
    }
    return std::sqrt(sum);
}

}  // namespace

HermitianEigen hermitian_eigen(const CMatrix& m, double off_diagonal_tol) {
    if (m.rows() != m.cols()) {
        throw InvalidArgument("hermitian_eigen: matrix is not square");
    }
    const Eigen::Index n = m.rows();
    CMatrix a = 0.5 * (m + m.adjoint());
    CMatrix v = CMatrix::Identity(n, n);
    const double scale = std::max(1.0, a.norm());

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= off_diagonal_tol * scale) {
            break;
        }
        for (Eigen::Index p = 0; p < n - 1; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const complex apq = a(p, q);
                const double r = std::abs(apq);
                if (r < 1e-300) {
                    continue;
                }
                // Phase-rotate a(p,q) onto the real axis, then a real Jacobi rotation.
                const complex phase_conj = std::conj(apq / r);
                const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const complex jpp = c;
                const complex jpq = s;
                const complex jqp = -s * phase_conj;
                const complex jqq = c * phase_conj;

                for (Eigen::Index k = 0; k < n; ++k) {
                    const complex akp = a(k, p);
                    const complex akq = a(k, q);
                    a(k, p) = akp * jpp + akq * jqp;
                    a(k, q) = akp * jpq + akq * jqq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const complex apk = a(p, k);
                    const complex aqk = a(q, k);
                    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
                    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const complex vkp = v(k, p);
                    const complex vkq = v(k, q);
                    v(k, p) = vkp * jpp + vkq * jqp;
                    v(k, q) = vkp * jpq + vkq * jqq;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::sort(order.begin(), order.end(),
              [&](Eigen::Index x, Eigen::Index y) { return a(x, x).real() < a(y, y).real(); });

    HermitianEigen out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto src = order[static_cast<std::size_t>(i)];
        out.values[i] = a(src, src).real();
        out.vectors.col(i) = v.col(src);
    }
    return out;
}

CMatrix psd_sqrt(const CMatrix& m) {
    const auto eig = hermitian_eigen(m);
    Eigen::VectorXd roots = eig.values.cwiseMax(0.0).cwiseSqrt();
    return eig.vectors * roots.cast<complex>().asDiagonal() * eig.vectors.adjoint();
}

}  // namespace cmip
