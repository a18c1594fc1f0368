// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License.  You
// may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied.  See the License for the specific language governing
// permissions and limitations under the License.

#include "shrinkmatch/kernels.hpp"

// Scalar reference kernels. These define the semantics; the SIMD variants
// are tested against them. Built with -ffp-contract=off so the compiler
// cannot fuse multiply-adds behind our back.

namespace shrinkmatch::kernels::scalar {

double dot(std::size_t n, const double* x, const double* y) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

void axpy(std::size_t n, double a, const double* x, double* y) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void ema_blend(std::size_t n, double g, const double* s, double* t) {
    const double c = 1.0 - g;
    for (std::size_t i = 0; i < n; ++i) t[i] = g * t[i] + c * s[i];
}

void relu(std::size_t n, const double* x, double* y) {
    for (std::size_t i = 0; i < n; ++i) y[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void relu_mask(std::size_t n, const double* x, double* g) {
    for (std::size_t i = 0; i < n; ++i) {
        if (!(x[i] > 0.0)) g[i] = 0.0;
    }
}

void sgd_nesterov(std::size_t n, double lr, double mu, double wd,
                  const double* g, double* v, double* p) {
    for (std::size_t i = 0; i < n; ++i) {
        const double ge = g[i] + wd * p[i];
        const double vn = mu * v[i] + ge;
        v[i] = vn;
        p[i] -= lr * (ge + mu * vn);
    }
}

const KernelTable kTable = {dot, axpy, ema_blend, relu, relu_mask, sgd_nesterov};

}  // namespace shrinkmatch::kernels::scalar
