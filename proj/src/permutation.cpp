#include "dpp/permutation.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace dpp {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    const int n = static_cast<int>(values_.size());
    if (n == 0)
        throw std::invalid_argument("permutation must have length at least 1");
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (int v : values_) {
        if (v < 1 || v > n)
            throw std::invalid_argument("permutation of 1.." + std::to_string(n) +
                                        " cannot contain " + std::to_string(v));
        if (seen[v])
            throw std::invalid_argument("permutation repeats the value " +
                                        std::to_string(v));
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> values(n > 0 ? n : 0);
    std::iota(values.begin(), values.end(), 1);
    return Permutation(std::move(values));
}

Permutation Permutation::descending(int n) {
    std::vector<int> values;
    values.reserve(n > 0 ? n : 0);
    for (int v = n; v >= 1; --v) values.push_back(v);
    return Permutation(std::move(values));
}

std::vector<int> Permutation::ascent_positions() const {
    std::vector<int> positions;
    for (int k = 1; k < size(); ++k)
        if (values_[k - 1] < values_[k]) positions.push_back(k);
    return positions;
}

std::vector<std::vector<int>> Permutation::descending_runs() const {
    std::vector<std::vector<int>> runs;
    for (int k = 0; k < size(); ++k) {
        if (k == 0 || values_[k - 1] < values_[k]) runs.emplace_back();
        runs.back().push_back(values_[k]);
    }
    return runs;
}

long long Permutation::non_inversion_count() const {
    long long count = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (values_[i] < values_[j]) ++count;
    return count;
}

long long Permutation::inversion_count() const {
    const long long n = size();
    return n * (n - 1) / 2 - non_inversion_count();
}

}  // namespace dpp
