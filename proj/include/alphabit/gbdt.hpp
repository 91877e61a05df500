#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "alphabit/panel.hpp"

namespace alphabit::gbdt {

struct Hyperparams {
    double learning_rate = 0.1;   // (0, 1]
    int n_trees = 100;            // >= 1
    int max_leaves = 31;          // >= 2
    int min_samples_leaf = 20;    // >= 1
    double feature_fraction = 1.0; // (0, 1]
    double bagging_fraction = 1.0; // (0, 1]
    double l2_leaf_reg = 1.0;     // >= 0
    double min_gain = 0.0;        // >= 0
    std::uint64_t seed = 0;

    void validate() const;
};

// Flat binary tree; nodes[0] is the root. Internal nodes route numeric
// features by `x <= threshold` and categorical ones by membership of the
// dictionary code in `categories`; NaN (missing or unseen category) follows
// `default_left`.
struct TreeNode {
    int feature = -1; // -1 marks a leaf
    double threshold = 0.0;
    std::vector<int> categories; // sorted; non-empty iff categorical split
    bool default_left = false;
    int left = -1;
    int right = -1;
    double value = 0.0; // leaf logit increment
    double cover = 0.0; // training samples that reached the node
    double gain = 0.0;  // split gain (internal nodes)

    bool is_leaf() const { return feature < 0; }
    bool is_categorical() const { return !categories.empty(); }
};

struct Tree {
    std::vector<TreeNode> nodes;
};

struct Ensemble {
    data::FeatureSchema schema;
    double base_score = 0.0; // logit of the training class-1 prior
    std::vector<Tree> trees;
};

// Newton boosting on the Bernoulli log loss with best-first leaf growth,
// 255-bin histograms, native missing handling and ordered categorical
// splits.
Ensemble fit(const Eigen::Ref<const Eigen::MatrixXd>& X,
             const Eigen::Ref<const Eigen::VectorXd>& y, const data::FeatureSchema& schema,
             const Hyperparams& params);

// Variant with early stopping on validation log loss; keeps the round with
// the best validation loss (possibly zero trees). Off unless
// early_stopping_rounds > 0.
Ensemble fit(const Eigen::Ref<const Eigen::MatrixXd>& X,
             const Eigen::Ref<const Eigen::VectorXd>& y, const data::FeatureSchema& schema,
             const Hyperparams& params, const Eigen::Ref<const Eigen::MatrixXd>& X_val,
             const Eigen::Ref<const Eigen::VectorXd>& y_val, int early_stopping_rounds);

double route_value(const Tree& tree, const Eigen::Ref<const Eigen::RowVectorXd>& x);

double predict_logit(const Ensemble& model, const Eigen::Ref<const Eigen::RowVectorXd>& x);
Eigen::VectorXd predict_logit(const Ensemble& model, const Eigen::Ref<const Eigen::MatrixXd>& X);

// 1 / (1 + exp(-logit)), clamped to [1e-15, 1 - 1e-15] so downstream log
// losses stay finite.
double predict_proba(const Ensemble& model, const Eigen::Ref<const Eigen::RowVectorXd>& x);
Eigen::VectorXd predict_proba(const Ensemble& model, const Eigen::Ref<const Eigen::MatrixXd>& X);

// Self-describing JSON, stable across runs for identical models.
std::string to_json(const Ensemble& model);
Ensemble from_json(const std::string& text);
void save_model(const Ensemble& model, const std::filesystem::path& path);
Ensemble load_model(const std::filesystem::path& path);

} // namespace alphabit::gbdt
