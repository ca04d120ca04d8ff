#pragma once

#include <cstddef>
#include <vector>

#include "fbnn/common.hpp"

namespace fbnn {

enum class Task { Regression, Classification };

/// Supervised dataset with a fixed train/test partition. For classification
/// Y is one-hot (q = class count) and `labels` carries the raw integers.
struct DatasetSplit {
    Matrix X;  // N x p
    Matrix Y;  // N x q
    std::vector<int> labels;
    Task task = Task::Regression;
    std::vector<std::size_t> train_idx, test_idx;

    std::size_t n() const { return X.rows; }
    std::size_t p() const { return X.cols; }
    std::size_t q() const { return Y.cols; }

    void validate() const;

    Matrix train_inputs() const { return gather(X, train_idx); }
    Matrix test_inputs() const { return gather(X, test_idx); }
    Matrix train_targets() const { return gather(Y, train_idx); }
    Matrix test_targets() const { return gather(Y, test_idx); }
    std::vector<int> test_labels() const;

    static Matrix gather(const Matrix& m, const std::vector<std::size_t>& idx);
};

/// Diagonal observation covariance Gamma.
struct NoiseModel {
    Vec gamma_diag;

    void validate() const;
    Vec inverse() const;
};

/// Isotropic Gaussian prior over parameters, C = variance * I.
struct GaussianPriorSpec {
    double variance = 1.0;

    void validate() const {
        if (!(variance > 0.0)) throw RejectedInput("prior variance must be > 0");
    }
};

}  // namespace fbnn
