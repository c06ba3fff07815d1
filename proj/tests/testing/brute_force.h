// Copyright 2026 The exactsimon Authors
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

// Slow, obviously-correct reference computations. Nothing here may call
// into the library code it is used to check.

#ifndef EXACTSIMON_TESTS_BRUTE_FORCE_H
#define EXACTSIMON_TESTS_BRUTE_FORCE_H

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <set>
#include <vector>

namespace exactsimon::brute {

using W = std::uint64_t;

inline int dot(W a, W b) {
    return std::popcount(a & b) % 2;
}

/// Every XOR combination of the generators (2^|gens| subsets).
inline std::set<W> enumerate_span(const std::vector<W>& gens) {
    std::set<W> out;
    const std::size_t subsets = std::size_t{1} << gens.size();
    for (std::size_t mask = 0; mask < subsets; mask++) {
        W acc = 0;
        for (std::size_t i = 0; i < gens.size(); i++) {
            if (mask >> i & 1) {
                acc ^= gens[i];
            }
        }
        out.insert(acc);
    }
    return out;
}

/// {x : x . y = 0 for every y in ys}, by scanning all of {0,1}^n.
inline std::set<W> enumerate_perp(const std::set<W>& ys, int n) {
    std::set<W> out;
    for (W x = 0; x < (W{1} << n); x++) {
        bool ok = true;
        for (W y : ys) {
            ok &= dot(x, y) == 0;
        }
        if (ok) {
            out.insert(x);
        }
    }
    return out;
}

inline std::set<W> pairwise_xor(const std::vector<W>& ys) {
    std::set<W> out;
    for (W a : ys) {
        for (W b : ys) {
            out.insert(a ^ b);
        }
    }
    return out;
}

/// amp'(x, y) = 2^{-n/2} sum_z (-1)^{x.z} amp(z, y), straight from the definition.
inline std::vector<std::complex<double>> naive_hadamard_first(const std::vector<std::complex<double>>& amps, int n,
                                                              int m) {
    const W rows = W{1} << n;
    const W cols = W{1} << m;
    std::vector<std::complex<double>> out(amps.size());
    const double scale = std::pow(2.0, -0.5 * n);
    for (W x = 0; x < rows; x++) {
        for (W y = 0; y < cols; y++) {
            std::complex<double> acc = 0;
            for (W z = 0; z < rows; z++) {
                const double sign = dot(x, z) ? -1.0 : 1.0;
                acc += sign * amps[z * cols + y];
            }
            out[x * cols + y] = scale * acc;
        }
    }
    return out;
}

inline int msb_naive(W w) {
    int m = 0;
    for (int i = 1; i <= 64; i++) {
        if (w >> (i - 1) & 1) {
            m = i;
        }
    }
    return m;
}

}  // namespace exactsimon::brute

#endif  // EXACTSIMON_TESTS_BRUTE_FORCE_H
