#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nakayama/kupisch.hpp"
#include "nakayama/resolution_quiver.hpp"

namespace nakayama {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major matrix over arbitrary-precision integers.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::int64_t rows, std::int64_t cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols)) {}

    static ExactMatrix identity(std::int64_t n) {
        ExactMatrix m(n, n);
        for (std::int64_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::int64_t rows() const { return rows_; }
    std::int64_t cols() const { return cols_; }

    BigInt& at(std::int64_t i, std::int64_t j) {
        return a_[static_cast<std::size_t>(i * cols_ + j)];
    }
    const BigInt& at(std::int64_t i, std::int64_t j) const {
        return a_[static_cast<std::size_t>(i * cols_ + j)];
    }

    ExactMatrix transposed() const;

    bool operator==(const ExactMatrix&) const = default;

private:
    std::int64_t rows_ = 0, cols_ = 0;
    std::vector<BigInt> a_;
};

ExactMatrix vconcat(const ExactMatrix& top, const ExactMatrix& bottom);
ExactMatrix hconcat(const ExactMatrix& left, const ExactMatrix& right);

/// Smith normal form diag(d_1,...,d_r,0,...,0) with d_i | d_{i+1}. When
/// requested, leftTransform * original * rightTransform equals the diagonal
/// matrix and both transforms are unimodular.
struct SmithForm {
    std::vector<BigInt> diagonal; // length min(rows, cols)
    std::int64_t rank = 0;
    std::optional<ExactMatrix> leftTransform;
    std::optional<ExactMatrix> rightTransform;
};

/// Entry (i,j) = multiplicity of S_i among the composition factors of P_j.
ExactMatrix cartanMatrix(const KupischSeries& ks);

SmithForm smithNormalForm(const ExactMatrix& m, bool wantTransforms = false);

/// Exact determinant (fraction-free elimination).
BigInt determinant(const ExactMatrix& m);

std::int64_t rankOf(const ExactMatrix& m);

/// 0/1 column vector supported on the cycle's vertices.
ExactMatrix cycleIndicator(const CycleData& cycle, std::int64_t n);

/// SNF of the Cartan matrix equals diag(1,...,1,w(A),0^{c(A)-1}).
bool verifySnfShape(const KupischSeries& ks);

enum class CheckOutcome { Pass, Fail, Skip };

const char* outcomeName(CheckOutcome o);

/// Three linear-system statements tying cycle indicators to the Cartan
/// matrix: the indicators span the solutions of C xi = w 1, they are exactly
/// the nonnegative integer solutions (verified by bounded enumeration over
/// [0, w]^n, skipped - never passed - when (w+1)^n exceeds the budget), and
/// the black-cycle indicators span the combined system with C^T.
struct LinearSolutionsReport {
    CheckOutcome spanningSolutions = CheckOutcome::Fail;
    CheckOutcome nonnegativeEnumeration = CheckOutcome::Fail;
    CheckOutcome combinedSystem = CheckOutcome::Fail;
    std::string detail; // reason for the first failure or skip
};

LinearSolutionsReport checkLinearSolutions(const KupischSeries& ks,
                                           std::int64_t budget = 100000);

} // namespace nakayama
