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

#pragma once

#include <cstddef>
#include <string>

namespace shrinkmatch::kernels {

// Inner-loop primitives behind the training math. Every kernel has a scalar
// reference implementation and, where the CPU supports it, an AVX2+FMA
// variant. The backend is picked once at runtime (cpuid, overridable with
// SHRINKMATCH_KERNELS=scalar|avx2|auto) and stays fixed for the process, so
// a run is deterministic for a given backend.
//
// Elementwise kernels (axpy, ema_blend, relu, relu_mask, sgd_nesterov) are
// bit-identical across backends; dot reduces in a different association
// order under AVX2 and is only equal up to rounding.

enum class Backend { scalar, avx2 };

struct KernelTable {
    double (*dot)(std::size_t n, const double* x, const double* y);
    // y += a * x
    void (*axpy)(std::size_t n, double a, const double* x, double* y);
    // t = g * t + (1 - g) * s
    void (*ema_blend)(std::size_t n, double g, const double* s, double* t);
    void (*relu)(std::size_t n, const double* x, double* y);
    // g[i] = x[i] > 0 ? g[i] : 0
    void (*relu_mask)(std::size_t n, const double* x, double* g);
    // ge = g + wd*p; v = mu*v + ge; p -= lr*(ge + mu*v)
    void (*sgd_nesterov)(std::size_t n, double lr, double mu, double wd,
                         const double* g, double* v, double* p);
};

bool supported(Backend b);
// Table for an explicit backend; nullptr when the CPU cannot run it.
const KernelTable* table(Backend b);
// The process-wide backend (env override, else best supported).
Backend active();
std::string name(Backend b);

inline double dot(std::size_t n, const double* x, const double* y) {
    return table(active())->dot(n, x, y);
}
inline void axpy(std::size_t n, double a, const double* x, double* y) {
    table(active())->axpy(n, a, x, y);
}
inline void ema_blend(std::size_t n, double g, const double* s, double* t) {
    table(active())->ema_blend(n, g, s, t);
}
inline void relu(std::size_t n, const double* x, double* y) {
    table(active())->relu(n, x, y);
}
inline void relu_mask(std::size_t n, const double* x, double* g) {
    table(active())->relu_mask(n, x, g);
}
inline void sgd_nesterov(std::size_t n, double lr, double mu, double wd,
                         const double* g, double* v, double* p) {
    table(active())->sgd_nesterov(n, lr, mu, wd, g, v, p);
}

}  // namespace shrinkmatch::kernels
