#include "als/combinat.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace als {

Natural binomial(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Natural c = 1;
    for (uint64_t j = 1; j <= k; ++j) {
        c *= (n - k + j);
        c /= j;  // exact at every step
    }
    return c;
}

Natural capacity(uint64_t n, uint32_t i) {
    if (n < 1) throw std::invalid_argument("capacity: n must be >= 1");
    // Run budget 2^i caps at n-1 distinct run-boundary counts anyway.
    uint64_t budget = (i >= 63) ? (n - 1) : std::min<uint64_t>(uint64_t(1) << i, n - 1);
    Natural sum = 0;
    Natural c = 1;  // C(n-1, j), incrementally
    for (uint64_t j = 0; j <= budget; ++j) {
        sum += c;
        c *= (n - 1 - j);
        c /= (j + 1);
    }
    return 2 * sum;
}

uint32_t codeword_len(uint64_t n, uint32_t i) {
    return uint32_t(ceil_log2(capacity(n, i)));
}

Natural subset_rank(const std::vector<uint64_t>& ascending, uint64_t universe) {
    Natural rank = 0;
    uint64_t prev = 0;
    for (size_t t = 0; t < ascending.size(); ++t) {
        uint64_t p = ascending[t];
        if (p >= universe) throw std::invalid_argument("subset_rank: element past universe");
        if (t > 0 && p <= prev) throw std::invalid_argument("subset_rank: set not ascending");
        prev = p;
        rank += binomial(p, t + 1);
    }
    return rank;
}

std::vector<uint64_t> subset_unrank(const Natural& rank, size_t size, uint64_t universe) {
    if (rank >= binomial(universe, size))
        throw std::out_of_range("subset_unrank: rank out of range");
    std::vector<uint64_t> out(size);
    Natural rem = rank;
    uint64_t hi = universe;
    for (size_t t = size; t >= 1; --t) {
        // Largest p < hi with C(p, t) <= rem.
        uint64_t p = t - 1;
        Natural c = 0;  // C(t-1, t) == 0
        Natural next = 1;  // C(t, t)
        for (uint64_t q = t; q < hi; ++q) {
            if (next > rem) break;
            c = next;
            p = q;
            next = next * (q + 1) / (q + 1 - t);
        }
        out[t - 1] = p;
        rem -= c;
        hi = p;
    }
    return out;
}

double entropy(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::domain_error("entropy: alpha outside (0, 1)");
    return -alpha * std::log2(alpha) - (1.0 - alpha) * std::log2(1.0 - alpha);
}

double entropy_bar(double alpha) {
    if (!(alpha > 0.0 && alpha <= 0.5))
        throw std::domain_error("entropy_bar: alpha outside (0, 1/2]");
    double sum = 0.0;
    double a = alpha;
    while (true) {
        double term = entropy(a);
        sum += term;
        if (term < 1e-12) break;
        a /= 2.0;
    }
    return sum;
}

uint64_t lower_bound(Family family, uint64_t n, bool indexing) {
    if (n < 1) throw std::invalid_argument("lower_bound: n must be >= 1");
    uint64_t base;
    switch (family) {
        case Family::directed:
            base = n;
            break;
        case Family::undirected:
        case Family::tournament:
            base = (n + 1) / 2;
            break;
        case Family::bipartite:
            base = (n + 3) / 4;
            break;
        default:
            throw std::invalid_argument("lower_bound: unknown family");
    }
    return base + (indexing ? 1 : 0);
}

std::string lower_bound_report(Family family, uint64_t n, bool indexing) {
    std::ostringstream os;
    uint64_t lb = lower_bound(family, n, indexing);
    os << "L >= " << lb << " bits for " << to_string(family) << " on " << n << " vertices";
    if (indexing) {
        os << " (indexing)";
        if (n >= 200) {
            // Fractional strengthening for indexing schemes at this size:
            // L > (1/n) lg |F_n| + 1.4.
            double base;
            switch (family) {
                case Family::directed:
                    base = double(n) - 1.0;
                    break;
                case Family::undirected:
                case Family::tournament:
                    base = double(n - 1) / 2.0;
                    break;
                default:
                    base = double(n) / 4.0;
                    break;
            }
            os << "; refinement: L > " << base + 1.4;
        }
    }
    return os.str();
}

}  // namespace als
