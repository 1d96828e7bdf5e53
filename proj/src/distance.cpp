// Copyright 2026 The fsp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fsp/distance.hpp"

#include <limits>

namespace fsp {

std::size_t rule_distance(const Rule& a, const Rule& b) {
    return (a.head() ^ b.head()).size() + (a.body() ^ b.body()).size();
}

std::size_t rule_size(const Rule& r) { return r.size(); }

// Hungarian method with row potentials u and column potentials v (1-based
// internally, column 0 is the virtual source).
std::vector<std::size_t> solve_assignment(const std::vector<std::vector<long long>>& cost) {
    const std::size_t n = cost.size();
    constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
    std::vector<long long> u(n + 1, 0), v(n + 1, 0);
    std::vector<std::size_t> match_col(n + 1, 0), way(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        match_col[0] = i;
        std::size_t j0 = 0;
        std::vector<long long> minv(n + 1, kInf);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            const std::size_t i0 = match_col[j0];
            long long delta = kInf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const long long cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[match_col[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (match_col[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            match_col[j0] = match_col[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<std::size_t> row_to_col(n, 0);
    for (std::size_t j = 1; j <= n; ++j) {
        if (match_col[j] != 0) row_to_col[match_col[j] - 1] = j - 1;
    }
    return row_to_col;
}

ProgramDistance program_distance(const Program& p1, const Program& p2) {
    const auto& left = p1.rules().items();
    const auto& right = p2.rules().items();
    const std::size_t n1 = left.size(), n2 = right.size(), n = n1 + n2;
    ProgramDistance out;
    if (n == 0) return out;

    std::vector<std::vector<long long>> cost(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i < n1 && j < n2) cost[i][j] = static_cast<long long>(rule_distance(left[i], right[j]));
            else if (i < n1) cost[i][j] = static_cast<long long>(rule_size(left[i]));
            else if (j < n2) cost[i][j] = static_cast<long long>(rule_size(right[j]));
        }
    }
    const auto assign = solve_assignment(cost);
    std::vector<bool> right_used(n2, false);
    for (std::size_t i = 0; i < n1; ++i) {
        const std::size_t j = assign[i];
        if (j < n2) {
            right_used[j] = true;
            out.mapping.emplace_back(left[i], right[j]);
            out.distance += rule_distance(left[i], right[j]);
        } else {
            out.unmatched_left.push_back(left[i]);
            out.distance += rule_size(left[i]);
        }
    }
    for (std::size_t j = 0; j < n2; ++j) {
        if (!right_used[j]) {
            out.unmatched_right.push_back(right[j]);
            out.distance += rule_size(right[j]);
        }
    }
    return out;
}

}  // namespace fsp
