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

#include <cstdlib>
#include <cstring>

#include "shrinkmatch/error.hpp"

namespace shrinkmatch::kernels {

namespace scalar {
extern const KernelTable kTable;
}
#ifdef SHRINKMATCH_HAVE_AVX2
namespace avx2 {
extern const KernelTable kTable;
}
#endif

namespace {

bool cpu_has_avx2() {
#if defined(SHRINKMATCH_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend pick() {
    if (const char* env = std::getenv("SHRINKMATCH_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
        if (std::strcmp(env, "avx2") == 0) {
            if (!supported(Backend::avx2))
                throw ConfigError("SHRINKMATCH_KERNELS=avx2 but this CPU/build has no AVX2 support");
            return Backend::avx2;
        }
        if (std::strcmp(env, "auto") != 0)
            throw ConfigError(std::string("unknown SHRINKMATCH_KERNELS value: ") + env);
    }
    return supported(Backend::avx2) ? Backend::avx2 : Backend::scalar;
}

}  // namespace

bool supported(Backend b) {
    switch (b) {
        case Backend::scalar: return true;
        case Backend::avx2: return cpu_has_avx2();
    }
    return false;
}

const KernelTable* table(Backend b) {
    switch (b) {
        case Backend::scalar: return &scalar::kTable;
        case Backend::avx2:
#ifdef SHRINKMATCH_HAVE_AVX2
            return cpu_has_avx2() ? &avx2::kTable : nullptr;
#else
            return nullptr;
#endif
    }
    return nullptr;
}

Backend active() {
    static const Backend chosen = pick();
    return chosen;
}

std::string name(Backend b) {
    return b == Backend::scalar ? "scalar" : "avx2";
}

}  // namespace shrinkmatch::kernels
