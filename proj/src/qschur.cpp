#include "bkp/qschur.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace bkp {

void QExpansion::add(const StrictPartition& p, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs.emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs.erase(it);
    }
}

// Re-embeds a homogeneous series at a different container cutoff.
static GradedSeries with_cutoff(const GradedSeries& f, int cutoff) {
    GradedSeries r(Alphabet::T, cutoff);
    for (const auto& [key, c] : f.terms()) r.add_term(key.first, c);
    return r;
}

GradedSeries one_row_q(int r, int cutoff) {
    if (r < 0) throw std::invalid_argument("row length must be nonnegative");
    if (r > cutoff) return GradedSeries(Alphabet::T, cutoff);

    static std::vector<GradedSeries> cache;
    static std::mutex mutex;
    GradedSeries result(Alphabet::T, 0);
    {
        std::lock_guard lock(mutex);
        if (cache.empty()) cache.push_back(GradedSeries::constant(Rat(1), Alphabet::T, 0));
        // z d/dz of the generating exponential: n E_n = sum_k 2k t_k E_{n-k}
        for (int n = static_cast<int>(cache.size()); n <= r; ++n) {
            GradedSeries e(Alphabet::T, n);
            for (int k = 1; k <= n; k += 2)
                e = e + with_cutoff(cache[n - k], n) * GradedSeries::variable(k, n) * Rat(2 * k);
            cache.push_back(e * Rat(1, n));
        }
        result = cache[r];
    }
    return with_cutoff(result, cutoff);
}

namespace {

// Q_{(a,b)} for a > b >= 0 via the classical two-row formula.
GradedSeries two_row_q(int a, int b) {
    int w = a + b;
    GradedSeries r = one_row_q(a, w) * one_row_q(b, w);
    for (int i = 1; i <= b; ++i) {
        GradedSeries term = one_row_q(a + i, w) * one_row_q(b - i, w) * Rat(2);
        r = (i % 2 == 1) ? r - term : r + term;
    }
    return r;
}

// Pfaffian by expansion along the first row; m is antisymmetric of even size.
GradedSeries pfaffian(std::vector<std::vector<GradedSeries>> m, int cutoff) {
    size_t n = m.size();
    if (n == 0) return GradedSeries::constant(Rat(1), Alphabet::T, cutoff);
    GradedSeries r(Alphabet::T, cutoff);
    for (size_t j = 1; j < n; ++j) {
        std::vector<std::vector<GradedSeries>> sub;
        for (size_t i = 0; i < n; ++i) {
            if (i == 0 || i == j) continue;
            std::vector<GradedSeries> row;
            for (size_t l = 0; l < n; ++l) {
                if (l == 0 || l == j) continue;
                row.push_back(m[i][l]);
            }
            sub.push_back(std::move(row));
        }
        GradedSeries term = m[0][j] * pfaffian(std::move(sub), cutoff);
        r = (j % 2 == 1) ? r + term : r - term;
    }
    return r;
}

}  // namespace

GradedSeries q_lambda(const StrictPartition& lambda, int cutoff) {
    int w = lambda.size();
    if (w > cutoff) return GradedSeries(Alphabet::T, cutoff);
    std::vector<int> parts = lambda.parts();
    if (parts.size() % 2 == 1) parts.push_back(0);
    size_t n = parts.size();
    if (n == 0) return GradedSeries::constant(Rat(1), Alphabet::T, cutoff);
    std::vector<std::vector<GradedSeries>> m(
        n, std::vector<GradedSeries>(n, GradedSeries(Alphabet::T, w)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            GradedSeries q =
                parts[j] == 0 ? one_row_q(parts[i], w) : two_row_q(parts[i], parts[j]);
            m[i][j] = with_cutoff(q, w);
            m[j][i] = -m[i][j];
        }
    }
    return with_cutoff(pfaffian(std::move(m), w), cutoff);
}

GradedSeries q_lambda_half(const StrictPartition& lambda, int cutoff) {
    return rescale_vars(q_lambda(lambda, cutoff), Rat(1, 2));
}

Rat q_delta_hook(const StrictPartition& lambda) {
    const auto& p = lambda.parts();
    Rat r = rat_pow(Rat(2), lambda.size());
    for (int part : p) r /= factorial(part);
    for (size_t k = 0; k < p.size(); ++k)
        for (size_t m = k + 1; m < p.size(); ++m)
            r *= Rat(p[k] - p[m], p[k] + p[m]);
    return r;
}

namespace {

struct WeightLevelBasis {
    std::vector<StrictPartition> partitions;
    std::map<OddMonomial, size_t> monomial_index;
    // inverse[i][j]: coefficient of Q_{partitions[j]}(t/2) in monomial i
    std::vector<std::vector<Rat>> inverse;
};

// Gauss-Jordan inverse, exact.
std::vector<std::vector<Rat>> invert_matrix(std::vector<std::vector<Rat>> a) {
    size_t n = a.size();
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw std::logic_error("Q-basis matrix is singular");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        Rat d = a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            Rat f = a[row][col];
            for (size_t j = 0; j < n; ++j) {
                a[row][j] -= f * a[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

WeightLevelBasis build_weight_level(int w) {
    WeightLevelBasis b;
    b.partitions = enumerate_strict(w);
    std::vector<GradedSeries> qs;
    qs.reserve(b.partitions.size());
    for (const auto& p : b.partitions) qs.push_back(q_lambda_half(p, w));
    for (const auto& q : qs)
        for (const auto& [key, c] : q.terms()) b.monomial_index.emplace(key.first, 0);
    size_t idx = 0;
    for (auto& [m, i] : b.monomial_index) i = idx++;
    size_t n = b.partitions.size();
    if (b.monomial_index.size() != n)
        throw std::logic_error("monomial count does not match strict partition count");
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n, Rat(0)));
    for (size_t j = 0; j < n; ++j)
        for (const auto& [key, c] : qs[j].terms()) a[b.monomial_index.at(key.first)][j] = c;
    auto inv = invert_matrix(std::move(a));
    b.inverse.assign(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) b.inverse[i][j] = inv[j][i];
    return b;
}

const WeightLevelBasis& weight_level(int w) {
    static std::map<int, WeightLevelBasis> cache;
    static std::mutex mutex;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(w);
        if (it != cache.end()) return it->second;
    }
    WeightLevelBasis b = build_weight_level(w);
    std::lock_guard lock(mutex);
    return cache.emplace(w, std::move(b)).first->second;
}

}  // namespace

QExpansion to_qbasis(const GradedSeries& f) {
    if (f.alphabet() != Alphabet::T) throw std::invalid_argument("to_qbasis requires alphabet T");
    QExpansion e;
    e.cutoff = f.cutoff();
    for (const auto& [key, c] : f.terms()) {
        int w = key.first.weight();
        const auto& b = weight_level(w);
        auto it = b.monomial_index.find(key.first);
        if (it == b.monomial_index.end()) throw std::logic_error("monomial not in Q-span");
        const auto& row = b.inverse[it->second];
        for (size_t j = 0; j < b.partitions.size(); ++j)
            if (row[j] != 0) e.add(b.partitions[j], c * row[j]);
    }
    return e;
}

GradedSeries from_qbasis(const QExpansion& e, int cutoff) {
    GradedSeries r(Alphabet::T, cutoff);
    for (const auto& [p, c] : e.coeffs) r = r + q_lambda_half(p, cutoff) * c;
    return r;
}

QExpansion pieri_t1(const StrictPartition& lambda, int cutoff) {
    if (lambda.size() + 1 > cutoff) throw std::invalid_argument("cutoff exceeded");
    QExpansion e;
    e.cutoff = cutoff;
    e.add(lambda, Rat(1));
    return multiply_tk(1, e, cutoff);
}

QExpansion multiply_tk(int k, const QExpansion& e, int cutoff) {
    if (k <= 0 || k % 2 == 0) throw std::invalid_argument("time index must be odd positive");
    QExpansion out;
    out.cutoff = cutoff;
    for (const auto& [p, c] : e.coeffs) {
        if (p.size() + k > cutoff) throw std::invalid_argument("cutoff exceeded");
        GradedSeries prod = q_lambda_half(p, p.size() + k) * GradedSeries::variable(k, p.size() + k);
        for (const auto& [q, d] : to_qbasis(prod).coeffs) out.add(q, c * d);
    }
    return out;
}

}  // namespace bkp
