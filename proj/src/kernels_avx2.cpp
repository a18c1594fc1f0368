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

#include <immintrin.h>

// AVX2 variants. Elementwise kernels mirror the scalar rounding sequence
// (separate mul and add, no FMA) so they are bit-identical to the scalar
// reference. dot uses FMA and a different reduction order; callers treat it
// as equal only up to rounding.

namespace shrinkmatch::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d swapped = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

}  // namespace

double dot(std::size_t n, const double* x, const double* y) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

void axpy(std::size_t n, double a, const double* x, double* y) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d prod = _mm256_mul_pd(va, _mm256_loadu_pd(x + i));
        _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), prod));
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void ema_blend(std::size_t n, double g, const double* s, double* t) {
    const double c = 1.0 - g;
    const __m256d vg = _mm256_set1_pd(g);
    const __m256d vc = _mm256_set1_pd(c);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d lhs = _mm256_mul_pd(vg, _mm256_loadu_pd(t + i));
        const __m256d rhs = _mm256_mul_pd(vc, _mm256_loadu_pd(s + i));
        _mm256_storeu_pd(t + i, _mm256_add_pd(lhs, rhs));
    }
    for (; i < n; ++i) t[i] = g * t[i] + c * s[i];
}

void relu(std::size_t n, const double* x, double* y) {
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(y + i, _mm256_max_pd(_mm256_loadu_pd(x + i), zero));
    }
    for (; i < n; ++i) y[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void relu_mask(std::size_t n, const double* x, double* g) {
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d keep = _mm256_cmp_pd(_mm256_loadu_pd(x + i), zero, _CMP_GT_OQ);
        _mm256_storeu_pd(g + i, _mm256_and_pd(_mm256_loadu_pd(g + i), keep));
    }
    for (; i < n; ++i) {
        if (!(x[i] > 0.0)) g[i] = 0.0;
    }
}

void sgd_nesterov(std::size_t n, double lr, double mu, double wd,
                  const double* g, double* v, double* p) {
    const __m256d vlr = _mm256_set1_pd(lr);
    const __m256d vmu = _mm256_set1_pd(mu);
    const __m256d vwd = _mm256_set1_pd(wd);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d pv = _mm256_loadu_pd(p + i);
        const __m256d ge =
            _mm256_add_pd(_mm256_loadu_pd(g + i), _mm256_mul_pd(vwd, pv));
        const __m256d vn = _mm256_add_pd(_mm256_mul_pd(vmu, _mm256_loadu_pd(v + i)), ge);
        _mm256_storeu_pd(v + i, vn);
        const __m256d step = _mm256_mul_pd(vlr, _mm256_add_pd(ge, _mm256_mul_pd(vmu, vn)));
        _mm256_storeu_pd(p + i, _mm256_sub_pd(pv, step));
    }
    for (; i < n; ++i) {
        const double ge = g[i] + wd * p[i];
        const double vn = mu * v[i] + ge;
        v[i] = vn;
        p[i] -= lr * (ge + mu * vn);
    }
}

const KernelTable kTable = {dot, axpy, ema_blend, relu, relu_mask, sgd_nesterov};

}  // namespace shrinkmatch::kernels::avx2
