// Copyright 2026 The geuler Authors
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

#pragma once

#include <cstddef>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "geuler/rational.hpp"

namespace geuler {

/// Pascal's triangle in arbitrary precision, grown one row at a time.
/// Rows are never modified once published, so references stay valid.
class PascalTriangle {
public:
    static PascalTriangle& instance()
    {
        static PascalTriangle triangle;
        return triangle;
    }

    const std::vector<Integer>& row(std::size_t n)
    {
        {
            std::shared_lock lock(mutex_);
            if (n < rows_.size()) {
                return rows_[n];
            }
        }
        std::unique_lock lock(mutex_);
        while (rows_.size() <= n) {
            const auto& prev = rows_.back();
            std::vector<Integer> next(prev.size() + 1);
            next.front() = 1;
            next.back() = 1;
            for (std::size_t k = 1; k < prev.size(); ++k) {
                next[k] = prev[k - 1] + prev[k];
            }
            rows_.push_back(std::move(next));
        }
        return rows_[n];
    }

private:
    PascalTriangle() { rows_.push_back({Integer(1)}); }

    std::shared_mutex mutex_;
    std::deque<std::vector<Integer>> rows_;
};

/// C(n, k); zero when k > n.
inline Integer binomial(std::size_t n, std::size_t k)
{
    if (k > n) {
        return 0;
    }
    return PascalTriangle::instance().row(n)[k];
}

}  // namespace geuler
