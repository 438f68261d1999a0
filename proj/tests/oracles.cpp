#include "oracles.hpp"

#include <cassert>
#include <stdexcept>

namespace oracle {

namespace {

using dmcyl::AlgebraMorphism;
using dmcyl::FreeGCAlgebra;

using Expo = std::vector<int>;
using Dense = std::map<Expo, mpq_class>;

// odometer-style enumeration of exponent vectors of total degree d
std::vector<Expo> enumerate_monomials(const FreeGCAlgebra& alg, int d) {
    std::vector<Expo> out;
    const std::size_t n = alg.size();
    if (n == 0) {
        if (d == 0)
            out.push_back({});
        return out;
    }
    Expo e(n, 0);
    for (;;) {
        int deg = 0;
        for (std::size_t i = 0; i < n; ++i)
            deg += e[i] * alg.gen(i).degree;
        if (deg == d)
            out.push_back(e);
        // increment with per-slot caps
        std::size_t i = 0;
        for (; i < n; ++i) {
            ++e[i];
            const int cap = alg.odd(i) ? 1 : d / alg.gen(i).degree;
            if (e[i] <= cap)
                break;
            e[i] = 0;
        }
        if (i == n)
            break;
    }
    return out;
}

Dense dense_mul(const Dense& a, const Dense& b) {
    Dense out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Expo e(ea.size());
            for (std::size_t i = 0; i < ea.size(); ++i)
                e[i] = ea[i] + eb[i];
            out[e] += ca * cb;
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

Dense dense_image(const AlgebraMorphism& m, const Expo& src) {
    const std::size_t nt = m.target()->size();
    Dense acc{{Expo(nt, 0), mpq_class(1)}};
    for (std::size_t i = 0; i < src.size(); ++i) {
        Dense img;
        for (const auto& [mono, c] : m.image(i).terms())
            img[mono.exp] = c;
        for (int e = 0; e < src[i]; ++e)
            acc = dense_mul(acc, img);
    }
    return acc;
}

std::size_t gauss_rank(std::vector<std::vector<mpq_class>> rows) {
    std::size_t r = 0;
    const std::size_t m = rows.size();
    const std::size_t n = m ? rows[0].size() : 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t piv = r;
        while (piv < m && rows[piv][c] == 0)
            ++piv;
        if (piv == m)
            continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = r + 1; i < m; ++i) {
            if (rows[i][c] == 0)
                continue;
            const mpq_class f = rows[i][c] / rows[r][c];
            for (std::size_t j = c; j < n; ++j)
                rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

std::vector<std::vector<mpq_class>> slice_matrix(const AlgebraMorphism& m, int d, bool negate) {
    for (const auto& g : m.source()->gens())
        if (g.degree % 2 != 0)
            throw std::logic_error("oracle handles even generators only");
    for (const auto& g : m.target()->gens())
        if (g.degree % 2 != 0)
            throw std::logic_error("oracle handles even generators only");
    const auto src = enumerate_monomials(*m.source(), d);
    const auto tgt = enumerate_monomials(*m.target(), d);
    std::map<Expo, std::size_t> index;
    for (std::size_t j = 0; j < tgt.size(); ++j)
        index[tgt[j]] = j;
    std::vector<std::vector<mpq_class>> rows;
    for (const auto& e : src) {
        std::vector<mpq_class> row(tgt.size(), 0);
        for (const auto& [mono, c] : dense_image(m, e))
            row[index.at(mono)] = negate ? mpq_class(-c) : c;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::vector<long> free_ring_dims(const std::vector<int>& degrees, int D) {
    std::vector<long> series(D + 1, 0);
    series[0] = 1;
    for (const int d : degrees) {
        if (d % 2 == 0) {
            // multiply by 1/(1-t^d): prefix recurrence
            for (int i = d; i <= D; ++i)
                series[i] += series[i - d];
        } else {
            // multiply by (1+t^d), descending
            for (int i = D; i >= d; --i)
                series[i] += series[i - d];
        }
    }
    return series;
}

std::size_t dense_image_rank(const AlgebraMorphism& m, int d) {
    return gauss_rank(slice_matrix(m, d, false));
}

std::size_t dense_kernel_dim(const AlgebraMorphism& m, int d) {
    const auto rows = slice_matrix(m, d, false);
    return rows.size() - gauss_rank(rows);
}

std::vector<int> mayer_vietoris_betti(const dmcyl::GroupDiagram& diagram, int D) {
    std::vector<long> kernel(D + 1, 0), coker(D + 1, 0);
    for (int n = 0; n <= D; ++n) {
        auto rows = slice_matrix(diagram.iota_minus, n, false);
        auto rows2 = slice_matrix(diagram.iota_plus, n, true);
        const std::size_t domain = rows.size() + rows2.size();
        const std::size_t target =
            enumerate_monomials(*diagram.iota_minus.target(), n).size();
        for (auto& r : rows2)
            rows.push_back(std::move(r));
        const std::size_t rk = gauss_rank(rows);
        kernel[n] = static_cast<long>(domain - rk);
        coker[n] = static_cast<long>(target - rk);
    }
    std::vector<int> betti(D + 1, 0);
    for (int n = 0; n <= D; ++n)
        betti[n] = static_cast<int>(kernel[n] + (n > 0 ? coker[n - 1] : 0));
    return betti;
}

}  // namespace oracle
