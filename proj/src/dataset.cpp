#include "fbnn/dataset.hpp"

#include <cmath>
#include <cstdint>

namespace fbnn {

void DatasetSplit::validate() const {
    if (X.rows != Y.rows) throw RejectedInput("X and Y row counts differ");
    std::vector<std::uint8_t> seen(n(), 0);
    for (std::size_t i : train_idx) {
        if (i >= n() || seen[i]) throw RejectedInput("train/test split is not a partition");
        seen[i] = 1;
    }
    for (std::size_t i : test_idx) {
        if (i >= n() || seen[i]) throw RejectedInput("train/test split is not a partition");
        seen[i] = 1;
    }
    for (std::size_t i = 0; i < n(); ++i) {
        if (!seen[i]) throw RejectedInput("split does not cover all rows");
    }
    if (task == Task::Classification) {
        if (labels.size() != n()) throw RejectedInput("classification needs raw labels");
        for (std::size_t i = 0; i < n(); ++i) {
            double s = 0.0;
            for (std::size_t k = 0; k < q(); ++k) s += Y(i, k);
            if (s != 1.0) throw RejectedInput("one-hot row does not sum to 1");
        }
    }
}

std::vector<int> DatasetSplit::test_labels() const {
    std::vector<int> out;
    out.reserve(test_idx.size());
    for (std::size_t i : test_idx) out.push_back(labels[i]);
    return out;
}

Matrix DatasetSplit::gather(const Matrix& m, const std::vector<std::size_t>& idx) {
    Matrix out(idx.size(), m.cols);
    for (std::size_t r = 0; r < idx.size(); ++r) {
        const double* src = m.row(idx[r]);
        double* dst = out.row(r);
        for (std::size_t c = 0; c < m.cols; ++c) dst[c] = src[c];
    }
    return out;
}

void NoiseModel::validate() const {
    if (gamma_diag.empty()) throw RejectedInput("noise model is empty");
    for (double g : gamma_diag) {
        if (!(g > 0.0) || !std::isfinite(g)) {
            throw RejectedInput("noise variances must be strictly positive");
        }
    }
}

Vec NoiseModel::inverse() const {
    Vec inv(gamma_diag.size());
    for (std::size_t i = 0; i < gamma_diag.size(); ++i) inv[i] = 1.0 / gamma_diag[i];
    return inv;
}

}  // namespace fbnn
