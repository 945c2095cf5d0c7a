/*
   Copyright 2026 The cyclaut Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Compiled with -mavx2 -mpclmul. Nothing in here may run before the
// dispatcher has confirmed CPU support.

#include <immintrin.h>

#include <algorithm>
#include <bit>

#include "cyclaut/kernels.hpp"

namespace cyclaut::kernels {

namespace {

void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t count) {
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(d, s));
    }
    for (; i < count; ++i) dst[i] ^= src[i];
}

void clmul_words(const std::uint64_t* a, std::size_t na, const std::uint64_t* b, std::size_t nb,
                 std::uint64_t* out) {
    std::fill(out, out + na + nb, 0);
    for (std::size_t i = 0; i < na; ++i) {
        if (a[i] == 0) continue;
        const __m128i va = _mm_cvtsi64_si128(static_cast<long long>(a[i]));
        for (std::size_t j = 0; j < nb; ++j) {
            if (b[j] == 0) continue;
            const __m128i vb = _mm_cvtsi64_si128(static_cast<long long>(b[j]));
            const __m128i prod = _mm_clmulepi64_si128(va, vb, 0x00);
            out[i + j] ^= static_cast<std::uint64_t>(_mm_cvtsi128_si64(prod));
            out[i + j + 1] ^= static_cast<std::uint64_t>(_mm_extract_epi64(prod, 1));
        }
    }
}

void gather_u32(const std::uint32_t* table, const std::uint32_t* index, std::uint32_t* out,
                std::size_t count) {
    std::size_t i = 0;
    for (; i + 8 <= count; i += 8) {
        const __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(index + i));
        const __m256i v = _mm256_i32gather_epi32(reinterpret_cast<const int*>(table), idx, 4);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), v);
    }
    for (; i < count; ++i) out[i] = table[index[i]];
}

std::size_t first_moved(const std::uint32_t* images, std::size_t count) {
    std::size_t i = 0;
    __m256i iota = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
    const __m256i step = _mm256_set1_epi32(8);
    for (; i + 8 <= count; i += 8) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(images + i));
        const auto eq = static_cast<unsigned>(_mm256_movemask_ps(
            _mm256_castsi256_ps(_mm256_cmpeq_epi32(v, iota))));
        if (eq != 0xFFu) return i + static_cast<std::size_t>(std::countr_one(eq));
        iota = _mm256_add_epi32(iota, step);
    }
    for (; i < count; ++i)
        if (images[i] != i) return i;
    return count;
}

bool all_zero(const std::uint64_t* words, std::size_t count) {
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + 4 <= count; i += 4)
        acc = _mm256_or_si256(acc,
                              _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i)));
    if (!_mm256_testz_si256(acc, acc)) return false;
    for (; i < count; ++i)
        if (words[i] != 0) return false;
    return true;
}

}  // namespace

const KernelTable& avx2_table() {
    static const KernelTable table{"avx2", xor_words, clmul_words, gather_u32, first_moved,
                                   all_zero};
    return table;
}

}  // namespace cyclaut::kernels
