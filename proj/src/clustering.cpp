#include "d2dsim/clustering.hpp"

#include <limits>
#include <ostream>

#include "d2dsim/errors.hpp"

namespace d2dsim {

Eigen::MatrixXd build_interference_graph(const ScenarioDrop& drop) {
    Eigen::MatrixXd w = drop.due_cross_gain;
    w.diagonal().setZero();
    return w;
}

namespace {

ClusterAssignment from_labels(const std::vector<int>& labels, int n_clusters) {
    ClusterAssignment out;
    out.cluster_of = labels;
    out.members.resize(n_clusters);
    for (int k = 0; k < int(labels.size()); ++k) out.members[labels[k]].push_back(k);
    return out;
}

} // namespace

ClusterAssignment cluster_dues(const Eigen::MatrixXd& weights, int n_clusters) {
    const int k = int(weights.rows());
    if (weights.cols() != k) throw DomainError("cluster_dues: weight matrix must be square");
    if (n_clusters < 1) throw DomainError("cluster_dues: need at least one cluster");
    if (k < n_clusters) throw DomainError("cluster_dues: fewer DUEs than clusters");

    std::vector<int> labels(k, -1);
    for (int i = 0; i < n_clusters; ++i) labels[i] = i; // deterministic seeds

    for (int due = n_clusters; due < k; ++due) {
        int best = 0;
        double best_cost = std::numeric_limits<double>::infinity();
        for (int c = 0; c < n_clusters; ++c) {
            double cost = 0.0;
            for (int other = 0; other < due; ++other)
                if (labels[other] == c) cost += weights(due, other) + weights(other, due);
            if (cost < best_cost) {
                best_cost = cost;
                best = c;
            }
        }
        labels[due] = best;
    }
    return from_labels(labels, n_clusters);
}

double intra_cluster_weight(const Eigen::MatrixXd& weights, const ClusterAssignment& clusters) {
    double total = 0.0;
    for (const auto& members : clusters.members)
        for (int a : members)
            for (int b : members)
                if (a != b) total += weights(a, b);
    return total;
}

std::pair<ClusterAssignment, double> brute_force_partition_oracle(const Eigen::MatrixXd& weights,
                                                                  int n_clusters) {
    const int k = int(weights.rows());
    if (k > 10 || n_clusters > 3)
        throw ScaleError("brute_force_partition_oracle: guarded to K <= 10, N <= 3");
    if (n_clusters < 1 || k < n_clusters) throw DomainError("partition oracle: bad instance");

    std::vector<int> labels(k, 0);
    ClusterAssignment best;
    double best_weight = std::numeric_limits<double>::infinity();
    while (true) {
        std::vector<int> seen(n_clusters, 0);
        for (int l : labels) seen[l] = 1;
        bool all_nonempty = true;
        for (int s : seen) all_nonempty = all_nonempty && s;
        if (all_nonempty) {
            auto assignment = from_labels(labels, n_clusters);
            const double w = intra_cluster_weight(weights, assignment);
            if (w < best_weight) {
                best_weight = w;
                best = std::move(assignment);
            }
        }
        // next base-n_clusters counter value
        int pos = k - 1;
        while (pos >= 0 && labels[pos] == n_clusters - 1) labels[pos--] = 0;
        if (pos < 0) break;
        ++labels[pos];
    }
    return {best, best_weight};
}

void write_assignment_csv(std::ostream& os, const ClusterAssignment& clusters) {
    os << "due_index,cluster_index\n";
    for (int k = 0; k < int(clusters.cluster_of.size()); ++k)
        os << k << ',' << clusters.cluster_of[k] << '\n';
}

} // namespace d2dsim
