#include "sp6/matlie.hpp"

#include <cstdlib>
#include <mutex>
#include <stdexcept>

namespace sp6 {

namespace {

using Block = std::array<std::array<int, 3>, 3>;  // small integer 3x3

Block zero_block() { return {}; }

Block D(int j) {
    Block b = zero_block();
    b[static_cast<size_t>(j - 1)][static_cast<size_t>(j - 1)] = 1;
    return b;
}

Block E(int j, int k) {
    Block b = zero_block();
    b[static_cast<size_t>(j - 1)][static_cast<size_t>(k - 1)] = 1;
    b[static_cast<size_t>(k - 1)][static_cast<size_t>(j - 1)] = 1;
    return b;
}

Block F(int j, int k) {
    Block b = zero_block();
    b[static_cast<size_t>(j - 1)][static_cast<size_t>(k - 1)] = 1;
    b[static_cast<size_t>(k - 1)][static_cast<size_t>(j - 1)] = -1;
    return b;
}

/// Assembles [[A, B], [C, D]] where each block enters scaled by an exact
/// Gaussian-rational factor.
GaussRatMatrix assemble(const Block& a, GaussRat fa, const Block& b, GaussRat fb,
                        const Block& c, GaussRat fc, const Block& d, GaussRat fd) {
    GaussRatMatrix m;
    for (int r = 0; r < 3; ++r)
        for (int col = 0; col < 3; ++col) {
            auto ru = static_cast<size_t>(r);
            auto cu = static_cast<size_t>(col);
            if (a[ru][cu] != 0) m.at(r, col) = GaussRat(a[ru][cu]) * fa;
            if (b[ru][cu] != 0) m.at(r, col + 3) = GaussRat(b[ru][cu]) * fb;
            if (c[ru][cu] != 0) m.at(r + 3, col) = GaussRat(c[ru][cu]) * fc;
            if (d[ru][cu] != 0) m.at(r + 3, col + 3) = GaussRat(d[ru][cu]) * fd;
        }
    return m;
}

const GaussRat one = GaussRat(1);
const GaussRat minus_one = GaussRat(-1);

}  // namespace

GaussRatMatrix cartan_generator(int j) {
    if (j < 1 || j > 3) throw std::invalid_argument("cartan_generator: index out of range");
    // T_j = -i [[0, D_j], [-D_j, 0]] : upper-right -i D_j, lower-left +i D_j.
    GaussRat mi = -GaussRat::i();
    GaussRat pi = GaussRat::i();
    return assemble(zero_block(), one, D(j), mi, D(j), pi, zero_block(), one);
}

GaussRatMatrix root_vector(const Weight& alpha) {
    GaussRat i = GaussRat::i();
    // ±2e_j
    for (int j = 1; j <= 3; ++j) {
        Weight two_ej{0, 0, 0};
        two_ej[j - 1] = 2;
        if (alpha == two_ej)
            return assemble(D(j), one, D(j), i, D(j), i, D(j), minus_one);
        if (alpha == -two_ej)
            return assemble(D(j), one, D(j), -i, D(j), -i, D(j), minus_one);
    }
    // ±(e_j ± e_k), j < k
    for (int j = 1; j <= 3; ++j)
        for (int k = j + 1; k <= 3; ++k) {
            Weight sum{0, 0, 0};
            sum[j - 1] = 1;
            sum[k - 1] = 1;
            Weight diff{0, 0, 0};
            diff[j - 1] = 1;
            diff[k - 1] = -1;
            if (alpha == sum)
                return assemble(E(j, k), one, E(j, k), i, E(j, k), i, E(j, k), minus_one);
            if (alpha == -sum)
                return assemble(E(j, k), one, E(j, k), -i, E(j, k), -i, E(j, k), minus_one);
            if (alpha == diff)
                return assemble(F(j, k), one, E(j, k), -i, E(j, k), i, F(j, k), one);
            if (alpha == -diff)
                return assemble(F(j, k), minus_one, E(j, k), -i, E(j, k), i, F(j, k), minus_one);
        }
    throw std::invalid_argument("root_vector: " + alpha.str() + " is not a root");
}

GaussRatMatrix generator(const std::string& label) {
    if (label.size() == 2 && label[0] == 'T') {
        int j = label[1] - '0';
        return cartan_generator(j);
    }
    if (label.size() >= 4 && label[0] == 'X' && label[1] == '[' && label.back() == ']') {
        std::string body = label.substr(2, label.size() - 3);
        std::array<std::int64_t, 3> c{};
        size_t pos = 0;
        for (int i = 0; i < 3; ++i) {
            size_t next = body.find(',', pos);
            std::string tok = next == std::string::npos ? body.substr(pos) : body.substr(pos, next - pos);
            c[static_cast<size_t>(i)] = std::strtoll(tok.c_str(), nullptr, 10);
            pos = next == std::string::npos ? body.size() : next + 1;
        }
        return root_vector(Weight{c[0], c[1], c[2]});
    }
    throw std::invalid_argument("generator: unknown label '" + label + "'");
}

const GeneratorBasis& generator_basis() {
    static const GeneratorBasis basis = [] {
        GeneratorBasis b;
        for (int j = 1; j <= 3; ++j) {
            b.labels.push_back("T" + std::to_string(j));
            b.matrices.push_back(cartan_generator(j));
        }
        for (const Root& r : all_roots()) {
            b.labels.push_back("X[" + std::to_string(r.w[0]) + "," + std::to_string(r.w[1]) +
                               "," + std::to_string(r.w[2]) + "]");
            b.matrices.push_back(root_vector(r.w));
        }
        return b;
    }();
    return basis;
}

std::optional<Weight> weight_of(const GaussRatMatrix& M) {
    if (M.is_zero()) return std::nullopt;
    // Locate a reference nonzero entry of M.
    int ref = 0;
    while (M.a[static_cast<size_t>(ref)].is_zero()) ++ref;
    Weight w;
    for (int j = 1; j <= 3; ++j) {
        GaussRatMatrix br = bracket(cartan_generator(j), M);
        GaussRat c = br.a[static_cast<size_t>(ref)] / M.a[static_cast<size_t>(ref)];
        if (!c.is_rational() || !c.re.is_integer()) return std::nullopt;
        if (!(br == c * M)) return std::nullopt;
        w[j - 1] = c.re.num();
    }
    return w;
}

namespace {

/// Row-reduced form of the 36x21 matrix G whose columns are the flattened
/// generators, cached once.  We keep E with E*G in reduced echelon form, so
/// each expansion costs one pass: x[pivot_col[r]] = (E*vec(M))[r], with the
/// pivot-free rows of E*vec(M) acting as the span-membership check.
struct SpanSolver {
    std::vector<std::array<GaussRat, 36>> ops;  // rows of E
    std::vector<int> pivot_col;                 // pivot column per row, −1 if none

    SpanSolver() {
        const auto& basis = generator_basis();
        std::vector<std::array<GaussRat, 21>> g(36);
        std::vector<std::array<GaussRat, 36>> e(36);
        pivot_col.assign(36, -1);
        for (size_t r = 0; r < 36; ++r) {
            e[r][r] = GaussRat(1);
            for (size_t c = 0; c < 21; ++c) g[r][c] = basis.matrices[c].a[r];
        }
        size_t lead = 0;
        for (size_t col = 0; col < 21 && lead < 36; ++col) {
            size_t piv = lead;
            while (piv < 36 && g[piv][col].is_zero()) ++piv;
            if (piv == 36) continue;
            std::swap(g[piv], g[lead]);
            std::swap(e[piv], e[lead]);
            GaussRat inv = GaussRat(1) / g[lead][col];
            for (auto& x : g[lead]) x = x * inv;
            for (auto& x : e[lead]) x = x * inv;
            for (size_t r = 0; r < 36; ++r) {
                if (r == lead || g[r][col].is_zero()) continue;
                GaussRat f = g[r][col];
                for (size_t c = 0; c < 21; ++c) g[r][c] = g[r][c] - f * g[lead][c];
                for (size_t c = 0; c < 36; ++c) e[r][c] = e[r][c] - f * e[lead][c];
            }
            pivot_col[lead] = static_cast<int>(col);
            ++lead;
        }
        if (lead != 21)
            throw std::logic_error("generator matrices are not linearly independent");
        ops = std::move(e);
    }

    std::optional<std::array<GaussRat, 21>> solve(const GaussRatMatrix& M) const {
        std::array<GaussRat, 21> x{};
        for (size_t r = 0; r < ops.size(); ++r) {
            GaussRat y;
            for (size_t c = 0; c < 36; ++c) {
                if (ops[r][c].is_zero() || M.a[c].is_zero()) continue;
                y += ops[r][c] * M.a[c];
            }
            if (pivot_col[r] < 0) {
                if (!y.is_zero()) return std::nullopt;  // outside the span
            } else {
                x[static_cast<size_t>(pivot_col[r])] = y;
            }
        }
        return x;
    }
};

}  // namespace

std::optional<std::array<GaussRat, 21>> expand_in_generators(const GaussRatMatrix& M) {
    static const SpanSolver solver;
    auto x = solver.solve(M);
    if (!x) return std::nullopt;
    // Exactness guard: reconstitute and compare (cheap at this size).
    const auto& basis = generator_basis();
    GaussRatMatrix recon;
    for (size_t c = 0; c < 21; ++c) {
        if ((*x)[c].is_zero()) continue;
        recon = recon + (*x)[c] * basis.matrices[c];
    }
    if (!(recon == M)) return std::nullopt;
    return x;
}

GaussRatMatrix symplectic_form() {
    GaussRatMatrix j;
    for (int k = 0; k < 3; ++k) {
        j.at(k, k + 3) = GaussRat(1);
        j.at(k + 3, k) = GaussRat(-1);
    }
    return j;
}

}  // namespace sp6
