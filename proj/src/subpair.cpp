#include "pascalrank/subpair.hpp"

#include <algorithm>
#include <stdexcept>

namespace pascalrank {

namespace {

// subsequence test for strictly increasing sequences, two-pointer scan
bool is_subsequence(const Selection& part, const Selection& whole) {
    std::size_t j = 0;
    for (std::size_t i = 0; i < part.size(); ++i) {
        while (j < whole.size() && whole[j] != part[i]) ++j;
        if (j == whole.size()) return false;
        ++j;
    }
    return true;
}

} // namespace

bool is_ordered_subpair(const Selection& rhat, const Selection& chat, const Selection& r,
                        const Selection& c) {
    if (rhat.size() != chat.size()) return false;
    for (std::size_t i = 0; i < rhat.size(); ++i) {
        if (rhat[i] > chat[i]) return false;
    }
    return is_subsequence(rhat, r) && is_subsequence(chat, c);
}

SubPairIndices maximal_subpair(const Selection& r, const Selection& c) {
    SubPairIndices out;
    if (r.empty() || c.empty() || r.front() > c.back()) {
        return out;
    }
    const std::size_t n = c.size() - 1;
    std::size_t prev_beta = 0;
    for (std::size_t i = 0; i < r.size() && r[i] <= c.back(); ++i) {
        // first column with c[k] >= r[i]; exists because r[i] <= c[n]
        auto it = std::lower_bound(c.begin(), c.end(), r[i]);
        std::size_t beta = static_cast<std::size_t>(it - c.begin());
        if (i > 0) beta = std::max(beta, prev_beta + 1);
        if (beta > n) break; // later columns are forced past the end too
        out.alpha.push_back(i);
        out.beta.push_back(beta);
        prev_beta = beta;
    }
    return out;
}

std::size_t longest_subpair_length(const Selection& r, const Selection& c) {
    const std::size_t m = r.size();
    const std::size_t n = c.size();
    // best[j] = longest ordered sub-pair within rows seen so far and
    // columns c[0..j-1]
    std::vector<std::size_t> best(n + 1, 0);
    std::vector<std::size_t> next(n + 1, 0);
    for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            std::size_t candidate = std::max(best[j], next[j - 1]);
            if (r[i - 1] <= c[j - 1]) {
                candidate = std::max(candidate, best[j - 1] + 1);
            }
            next[j] = candidate;
        }
        std::swap(best, next);
    }
    return best[n];
}

ExactMatrix index_matrix(const SubPairIndices& pair, std::size_t rows, std::size_t cols) {
    if (pair.alpha.size() != pair.beta.size()) {
        throw std::invalid_argument("index sequences have different lengths: " +
                                    std::to_string(pair.alpha.size()) + " vs " +
                                    std::to_string(pair.beta.size()));
    }
    ExactMatrix out(rows, cols);
    for (std::size_t i = 0; i < pair.alpha.size(); ++i) {
        if (pair.alpha[i] >= rows || pair.beta[i] >= cols) {
            throw std::invalid_argument("sub-pair position (" + std::to_string(pair.alpha[i]) +
                                        ", " + std::to_string(pair.beta[i]) +
                                        ") exceeds matrix shape " + std::to_string(rows) + "x" +
                                        std::to_string(cols));
        }
        out(pair.alpha[i], pair.beta[i]) = 1;
    }
    return out;
}

} // namespace pascalrank
