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

#ifndef CYCLAUT_KERNELS_HPP
#define CYCLAUT_KERNELS_HPP

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace cyclaut::kernels {

/*
   Inner loops shared by the polynomial, codeword and permutation layers.

   Every entry has a portable scalar reference implementation. Vector
   variants (AVX2 + PCLMUL on x86-64) are compiled into a separate
   translation unit and selected once at startup when the running CPU
   supports them. All variants must produce bit-identical results; the
   equivalence tests in tests/test_kernels.cpp hold them to that.
*/
struct KernelTable {
    std::string_view name;

    /// dst[i] ^= src[i] for i < count.
    void (*xor_words)(std::uint64_t* dst, const std::uint64_t* src, std::size_t count);

    /// Carry-less product of two word arrays. `out` must hold na + nb words;
    /// it is overwritten.
    void (*clmul_words)(const std::uint64_t* a, std::size_t na, const std::uint64_t* b,
                        std::size_t nb, std::uint64_t* out);

    /// out[i] = table[index[i]] for i < count. Used for permutation composition.
    void (*gather_u32)(const std::uint32_t* table, const std::uint32_t* index, std::uint32_t* out,
                       std::size_t count);

    /// Smallest i with images[i] != i, or count when the map is the identity.
    std::size_t (*first_moved)(const std::uint32_t* images, std::size_t count);

    /// True iff all count words are zero.
    bool (*all_zero)(const std::uint64_t* words, std::size_t count);
};

const KernelTable& scalar();

/// The AVX2 table, or nullptr when it was not compiled in or the CPU lacks
/// AVX2/PCLMUL.
const KernelTable* avx2();

/// Table chosen at first use. Setting CYCLAUT_KERNELS=scalar in the
/// environment pins the scalar reference.
const KernelTable& active();

}  // namespace cyclaut::kernels

#endif  // CYCLAUT_KERNELS_HPP
