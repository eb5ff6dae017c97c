// SPDX-License-Identifier: Apache-2.0

#include "psi/kernels.hpp"

#include <cstdlib>
#include <string>

namespace psi::kernels {

bool avx2_available() {
#ifdef PSI_HAVE_AVX2
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

#ifndef PSI_HAVE_AVX2
const Ops& avx2_ops() { return scalar_ops(); }
#endif

namespace {

const Ops& select() {
    if (const char* env = std::getenv("PSI_KERNELS")) {
        const std::string v(env);
        if (v == "scalar") return scalar_ops();
        if (v == "avx2" && avx2_available()) return avx2_ops();
    }
    return avx2_available() ? avx2_ops() : scalar_ops();
}

}  // namespace

const Ops& ops() {
    static const Ops& chosen = select();
    return chosen;
}

}  // namespace psi::kernels
