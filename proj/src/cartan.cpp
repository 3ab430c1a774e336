#include "nakayama/cartan.hpp"

#include <algorithm>

namespace nakayama {

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix out(cols_, rows_);
    for (std::int64_t i = 0; i < rows_; ++i)
        for (std::int64_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

ExactMatrix vconcat(const ExactMatrix& top, const ExactMatrix& bottom) {
    ExactMatrix out(top.rows() + bottom.rows(), top.cols());
    for (std::int64_t i = 0; i < top.rows(); ++i)
        for (std::int64_t j = 0; j < top.cols(); ++j) out.at(i, j) = top.at(i, j);
    for (std::int64_t i = 0; i < bottom.rows(); ++i)
        for (std::int64_t j = 0; j < bottom.cols(); ++j)
            out.at(top.rows() + i, j) = bottom.at(i, j);
    return out;
}

ExactMatrix hconcat(const ExactMatrix& left, const ExactMatrix& right) {
    ExactMatrix out(left.rows(), left.cols() + right.cols());
    for (std::int64_t i = 0; i < left.rows(); ++i) {
        for (std::int64_t j = 0; j < left.cols(); ++j) out.at(i, j) = left.at(i, j);
        for (std::int64_t j = 0; j < right.cols(); ++j)
            out.at(i, left.cols() + j) = right.at(i, j);
    }
    return out;
}

ExactMatrix cartanMatrix(const KupischSeries& ks) {
    const auto n = ks.n();
    ExactMatrix m(n, n);
    for (std::int64_t j = 1; j <= n; ++j)
        for (std::int64_t k = 0; k < ks.at(j); ++k) m.at(vertex(j + k, n) - 1, j - 1) += 1;
    return m;
}

SmithForm smithNormalForm(const ExactMatrix& m, bool wantTransforms) {
    ExactMatrix a = m;
    const auto rows = a.rows(), cols = a.cols();
    const auto mn = std::min(rows, cols);

    std::optional<ExactMatrix> left, right;
    if (wantTransforms) {
        left = ExactMatrix::identity(rows);
        right = ExactMatrix::identity(cols);
    }

    auto swapRows = [&](std::int64_t r, std::int64_t s) {
        for (std::int64_t j = 0; j < cols; ++j) std::swap(a.at(r, j), a.at(s, j));
        if (left)
            for (std::int64_t j = 0; j < rows; ++j) std::swap(left->at(r, j), left->at(s, j));
    };
    auto swapCols = [&](std::int64_t r, std::int64_t s) {
        for (std::int64_t i = 0; i < rows; ++i) std::swap(a.at(i, r), a.at(i, s));
        if (right)
            for (std::int64_t i = 0; i < cols; ++i) std::swap(right->at(i, r), right->at(i, s));
    };
    auto addRow = [&](std::int64_t dst, std::int64_t src, const BigInt& q) {
        for (std::int64_t j = 0; j < cols; ++j) a.at(dst, j) += q * a.at(src, j);
        if (left)
            for (std::int64_t j = 0; j < rows; ++j) left->at(dst, j) += q * left->at(src, j);
    };
    auto addCol = [&](std::int64_t dst, std::int64_t src, const BigInt& q) {
        for (std::int64_t i = 0; i < rows; ++i) a.at(i, dst) += q * a.at(i, src);
        if (right)
            for (std::int64_t i = 0; i < cols; ++i) right->at(i, dst) += q * right->at(i, src);
    };
    auto negateRow = [&](std::int64_t r) {
        for (std::int64_t j = 0; j < cols; ++j) a.at(r, j) = -a.at(r, j);
        if (left)
            for (std::int64_t j = 0; j < rows; ++j) left->at(r, j) = -left->at(r, j);
    };

    std::int64_t t = 0;
    for (; t < mn; ++t) {
        // pivot: nonzero entry of least absolute value in the trailing block
        std::int64_t pi = -1, pj = -1;
        for (std::int64_t i = t; i < rows; ++i)
            for (std::int64_t j = t; j < cols; ++j)
                if (a.at(i, j) != 0 &&
                    (pi < 0 || abs(a.at(i, j)) < abs(a.at(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        if (pi != t) swapRows(t, pi);
        if (pj != t) swapCols(t, pj);

        for (;;) {
            bool restart = false;
            for (std::int64_t i = t + 1; i < rows && !restart; ++i) {
                if (a.at(i, t) == 0) continue;
                const BigInt q = a.at(i, t) / a.at(t, t);
                if (q != 0) addRow(i, t, -q);
                if (a.at(i, t) != 0) {
                    swapRows(t, i); // the remainder is a smaller pivot
                    restart = true;
                }
            }
            if (restart) continue;
            for (std::int64_t j = t + 1; j < cols && !restart; ++j) {
                if (a.at(t, j) == 0) continue;
                const BigInt q = a.at(t, j) / a.at(t, t);
                if (q != 0) addCol(j, t, -q);
                if (a.at(t, j) != 0) {
                    swapCols(t, j);
                    restart = true;
                }
            }
            if (restart) continue;

            // pivot must divide the whole trailing block for the chain
            bool fixed = false;
            for (std::int64_t i = t + 1; i < rows && !fixed; ++i)
                for (std::int64_t j = t + 1; j < cols && !fixed; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        addRow(t, i, 1);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (a.at(t, t) < 0) negateRow(t);
    }

    SmithForm out;
    out.diagonal.resize(static_cast<std::size_t>(mn));
    for (std::int64_t i = 0; i < mn; ++i) out.diagonal[static_cast<std::size_t>(i)] = a.at(i, i);
    out.rank = t;
    out.leftTransform = std::move(left);
    out.rightTransform = std::move(right);
    return out;
}

BigInt determinant(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const auto n = m.rows();
    if (n == 0) return 1;
    ExactMatrix a = m;
    BigInt sign = 1, prev = 1;
    for (std::int64_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::int64_t p = -1;
            for (std::int64_t i = k + 1; i < n && p < 0; ++i)
                if (a.at(i, k) != 0) p = i;
            if (p < 0) return 0;
            for (std::int64_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (std::int64_t i = k + 1; i < n; ++i)
            for (std::int64_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

std::int64_t rankOf(const ExactMatrix& m) { return smithNormalForm(m).rank; }

ExactMatrix cycleIndicator(const CycleData& cycle, std::int64_t n) {
    ExactMatrix xi(n, 1);
    for (const auto v : cycle.vertices) xi.at(v - 1, 0) = 1;
    return xi;
}

bool verifySnfShape(const KupischSeries& ks) {
    const auto n = ks.n();
    const auto qc = cycles(resolutionQuiver(ks), ks);
    const auto snf = smithNormalForm(cartanMatrix(ks));

    std::vector<BigInt> expected(static_cast<std::size_t>(n), 0);
    for (std::int64_t i = 0; i < n - qc.componentCount; ++i)
        expected[static_cast<std::size_t>(i)] = 1;
    expected[static_cast<std::size_t>(n - qc.componentCount)] = qc.weight;

    return snf.diagonal == expected && snf.rank == n + 1 - qc.componentCount;
}

const char* outcomeName(CheckOutcome o) {
    switch (o) {
    case CheckOutcome::Pass: return "pass";
    case CheckOutcome::Fail: return "fail";
    case CheckOutcome::Skip: return "skip";
    }
    return "?";
}

namespace {

bool solvesSystem(const ExactMatrix& m, const ExactMatrix& xi, const BigInt& w) {
    for (std::int64_t i = 0; i < m.rows(); ++i) {
        BigInt s = 0;
        for (std::int64_t j = 0; j < m.cols(); ++j) s += m.at(i, j) * xi.at(j, 0);
        if (s != w) return false;
    }
    return true;
}

// All nonnegative integer solutions of C xi = w*1 with entries in [0, w];
// depth-first with row-sum pruning (entries of C are nonnegative).
void enumerateSolutions(const ExactMatrix& c, std::int64_t w,
                        std::vector<std::int64_t>& xi, std::vector<BigInt>& rowSum,
                        std::int64_t j, std::vector<std::vector<std::int64_t>>& out) {
    const auto n = c.cols();
    if (j == n) {
        for (std::int64_t i = 0; i < n; ++i)
            if (rowSum[static_cast<std::size_t>(i)] != w) return;
        out.push_back(xi);
        return;
    }
    for (std::int64_t v = 0; v <= w; ++v) {
        xi[static_cast<std::size_t>(j)] = v;
        for (std::int64_t i = 0; i < n; ++i) rowSum[static_cast<std::size_t>(i)] += c.at(i, j) * v;
        bool feasible = true;
        for (std::int64_t i = 0; i < n && feasible; ++i)
            feasible = rowSum[static_cast<std::size_t>(i)] <= w;
        if (feasible) enumerateSolutions(c, w, xi, rowSum, j + 1, out);
        for (std::int64_t i = 0; i < n; ++i) rowSum[static_cast<std::size_t>(i)] -= c.at(i, j) * v;
        if (!feasible) break; // row sums only grow with v
    }
    xi[static_cast<std::size_t>(j)] = 0;
}

} // namespace

LinearSolutionsReport checkLinearSolutions(const KupischSeries& ks, std::int64_t budget) {
    const auto n = ks.n();
    const auto c = cartanMatrix(ks);
    const auto qc = cycles(resolutionQuiver(ks), ks);
    const BigInt w = qc.weight;

    LinearSolutionsReport rep;
    auto noteFailure = [&](const std::string& msg) {
        if (rep.detail.empty()) rep.detail = msg;
    };

    // cycle indicators solve C xi = w*1 and span: c(A) = n + 1 - rank C
    bool okA = true;
    for (const auto& cy : qc.cycles)
        okA = okA && solvesSystem(c, cycleIndicator(cy, n), w);
    if (okA && qc.componentCount != n + 1 - rankOf(c)) okA = false;
    rep.spanningSolutions = okA ? CheckOutcome::Pass : CheckOutcome::Fail;
    if (!okA) noteFailure("cycle indicators do not span the solution set of C xi = w 1");

    // bounded enumeration of all nonnegative integer solutions
    BigInt bound = 1;
    for (std::int64_t k = 0; k < n && bound <= budget; ++k) bound *= w + 1;
    if (bound > budget) {
        rep.nonnegativeEnumeration = CheckOutcome::Skip;
        if (rep.detail.empty())
            rep.detail = "enumeration of (w+1)^n = " + bound.str() + " vectors exceeds budget " +
                         std::to_string(budget);
    } else {
        std::vector<std::int64_t> xi(static_cast<std::size_t>(n), 0);
        std::vector<BigInt> rowSum(static_cast<std::size_t>(n), 0);
        std::vector<std::vector<std::int64_t>> found;
        enumerateSolutions(c, static_cast<std::int64_t>(w), xi, rowSum, 0, found);

        std::vector<std::vector<std::int64_t>> indicators;
        for (const auto& cy : qc.cycles) {
            std::vector<std::int64_t> v(static_cast<std::size_t>(n), 0);
            for (const auto u : cy.vertices) v[static_cast<std::size_t>(u - 1)] = 1;
            indicators.push_back(std::move(v));
        }
        std::sort(found.begin(), found.end());
        std::sort(indicators.begin(), indicators.end());
        rep.nonnegativeEnumeration = found == indicators ? CheckOutcome::Pass : CheckOutcome::Fail;
        if (rep.nonnegativeEnumeration == CheckOutcome::Fail)
            noteFailure("nonnegative solutions differ from the cycle indicators");
    }

    // black-cycle indicators solve the combined system; their count matches
    // the rank of the stacked matrix; the system is consistent iff b(A) > 0
    const auto stacked = vconcat(c, c.transposed());
    bool okC = true;
    std::int64_t blackCount = 0;
    for (const auto& cy : qc.cycles) {
        if (!cy.black) continue;
        ++blackCount;
        const auto xi = cycleIndicator(cy, n);
        okC = okC && solvesSystem(c, xi, w) && solvesSystem(c.transposed(), xi, w);
    }
    if (okC && blackCount > 0 && blackCount != n + 1 - rankOf(stacked)) okC = false;
    if (okC) {
        ExactMatrix rhs(stacked.rows(), 1);
        for (std::int64_t i = 0; i < stacked.rows(); ++i) rhs.at(i, 0) = w;
        const bool consistent = rankOf(stacked) == rankOf(hconcat(stacked, rhs));
        if (consistent != (blackCount > 0)) okC = false;
    }
    rep.combinedSystem = okC ? CheckOutcome::Pass : CheckOutcome::Fail;
    if (!okC) noteFailure("black-cycle indicators fail the combined system checks");
    return rep;
}

} // namespace nakayama
