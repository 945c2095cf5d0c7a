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

#include <algorithm>
#include <bit>

#include "cyclaut/kernels.hpp"

namespace cyclaut::kernels {

namespace {

void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) dst[i] ^= src[i];
}

// 64x64 -> 128 carry-less multiply, one bit of a at a time.
void clmul64(std::uint64_t a, std::uint64_t b, std::uint64_t& lo, std::uint64_t& hi) {
    std::uint64_t l = 0;
    std::uint64_t h = 0;
    while (a != 0) {
        const int k = std::countr_zero(a);
        l ^= b << k;
        if (k != 0) h ^= b >> (64 - k);
        a &= a - 1;
    }
    lo = l;
    hi = h;
}

void clmul_words(const std::uint64_t* a, std::size_t na, const std::uint64_t* b, std::size_t nb,
                 std::uint64_t* out) {
    std::fill(out, out + na + nb, 0);
    for (std::size_t i = 0; i < na; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < nb; ++j) {
            if (b[j] == 0) continue;
            std::uint64_t lo;
            std::uint64_t hi;
            clmul64(a[i], b[j], lo, hi);
            out[i + j] ^= lo;
            out[i + j + 1] ^= hi;
        }
    }
}

void gather_u32(const std::uint32_t* table, const std::uint32_t* index, std::uint32_t* out,
                std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) out[i] = table[index[i]];
}

std::size_t first_moved(const std::uint32_t* images, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i)
        if (images[i] != i) return i;
    return count;
}

bool all_zero(const std::uint64_t* words, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i)
        if (words[i] != 0) return false;
    return true;
}

}  // namespace

const KernelTable& scalar() {
    static const KernelTable table{"scalar", xor_words, clmul_words, gather_u32, first_moved,
                                   all_zero};
    return table;
}

}  // namespace cyclaut::kernels
