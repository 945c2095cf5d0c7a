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

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "cyclaut/kernels.hpp"

namespace {

using cyclaut::kernels::KernelTable;

std::vector<std::uint64_t> random_words(std::mt19937_64& rng, std::size_t count) {
    std::vector<std::uint64_t> out(count);
    for (auto& w : out) w = rng();
    return out;
}

// Bit-by-bit carry-less product, independent of both kernel tables.
std::vector<std::uint64_t> naive_clmul(const std::vector<std::uint64_t>& a,
                                       const std::vector<std::uint64_t>& b) {
    std::vector<std::uint64_t> out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size() * 64; ++i) {
        if (((a[i / 64] >> (i % 64)) & 1) == 0) continue;
        for (std::size_t j = 0; j < b.size() * 64; ++j)
            if ((b[j / 64] >> (j % 64)) & 1) out[(i + j) / 64] ^= std::uint64_t{1} << ((i + j) % 64);
    }
    return out;
}

std::vector<const KernelTable*> tables() {
    std::vector<const KernelTable*> out{&cyclaut::kernels::scalar()};
    if (const auto* v = cyclaut::kernels::avx2()) out.push_back(v);
    return out;
}

}  // namespace

TEST_CASE("active kernel table is one of the compiled variants") {
    const auto& active = cyclaut::kernels::active();
    bool found = false;
    for (const auto* t : tables()) found = found || t->name == active.name;
    CHECK(found);
    MESSAGE("active kernels: " << active.name);
}

TEST_CASE("clmul matches the bitwise product for every variant") {
    std::mt19937_64 rng(1);
    for (const auto* table : tables()) {
        CAPTURE(table->name);
        for (std::size_t na = 1; na <= 9; ++na)
            for (std::size_t nb = 1; nb <= 5; ++nb) {
                const auto a = random_words(rng, na);
                const auto b = random_words(rng, nb);
                std::vector<std::uint64_t> out(na + nb, 0xdeadbeef);
                table->clmul_words(a.data(), na, b.data(), nb, out.data());
                CHECK(out == naive_clmul(a, b));
            }
    }
}

TEST_CASE("xor, gather, first_moved and all_zero agree across variants") {
    std::mt19937_64 rng(2);
    const auto& ref = cyclaut::kernels::scalar();
    for (const auto* table : tables()) {
        CAPTURE(table->name);
        for (std::size_t count : {0U, 1U, 3U, 4U, 5U, 8U, 17U, 64U, 97U, 1000U}) {
            CAPTURE(count);
            const auto src = random_words(rng, count);
            auto dst_a = random_words(rng, count);
            auto dst_b = dst_a;
            ref.xor_words(dst_a.data(), src.data(), count);
            table->xor_words(dst_b.data(), src.data(), count);
            CHECK(dst_a == dst_b);

            std::vector<std::uint32_t> perm(count);
            std::iota(perm.begin(), perm.end(), 0U);
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<std::uint32_t> index(count);
            std::iota(index.begin(), index.end(), 0U);
            std::shuffle(index.begin(), index.end(), rng);
            std::vector<std::uint32_t> out_a(count), out_b(count);
            ref.gather_u32(perm.data(), index.data(), out_a.data(), count);
            table->gather_u32(perm.data(), index.data(), out_b.data(), count);
            CHECK(out_a == out_b);
            for (std::size_t i = 0; i < count; ++i) CHECK(out_b[i] == perm[index[i]]);

            std::vector<std::uint32_t> id(count);
            std::iota(id.begin(), id.end(), 0U);
            CHECK(table->first_moved(id.data(), count) == count);
            for (std::size_t pos : {std::size_t{0}, count / 2, count == 0 ? 0 : count - 1}) {
                if (count < 2) break;
                auto moved = id;
                std::swap(moved[pos], moved[(pos + 1) % count]);
                const std::size_t expect = std::min(pos, (pos + 1) % count);
                CHECK(ref.first_moved(moved.data(), count) == expect);
                CHECK(table->first_moved(moved.data(), count) == expect);
            }

            std::vector<std::uint64_t> zeros(count, 0);
            CHECK(table->all_zero(zeros.data(), count));
            if (count > 0) {
                zeros[count - 1] = 1;
                CHECK_FALSE(table->all_zero(zeros.data(), count));
                CHECK(ref.all_zero(zeros.data(), count) == table->all_zero(zeros.data(), count));
            }
        }
    }
}
