#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "d2dsim/scenario.hpp"

namespace d2dsim {

/// Partition of the K DUE links into clusters that share one CUE's spectrum.
struct ClusterAssignment {
    std::vector<int> cluster_of;           // DUE k -> cluster index
    std::vector<std::vector<int>> members; // cluster -> member DUE indices

    int num_clusters() const { return int(members.size()); }
};

/// Interference graph: W(k', k) = alpha_{k',k} for k' != k, zero diagonal.
Eigen::MatrixXd build_interference_graph(const ScenarioDrop& drop);

/// Greedy partition minimizing total intra-cluster interference: DUEs
/// 0..n-1 seed the clusters, every further DUE joins the cluster adding the
/// least symmetric weight (ties to the lowest cluster index).
/// Throws DomainError when K < n or n < 1.
ClusterAssignment cluster_dues(const Eigen::MatrixXd& weights, int n_clusters);

/// Objective value: sum over clusters of all ordered intra-cluster weights.
double intra_cluster_weight(const Eigen::MatrixXd& weights, const ClusterAssignment& clusters);

/// Exact minimizer over all partitions into n_clusters nonempty clusters.
/// Test-scale oracle: throws ScaleError when K > 10 or n_clusters > 3.
std::pair<ClusterAssignment, double> brute_force_partition_oracle(const Eigen::MatrixXd& weights,
                                                                  int n_clusters);

/// CSV export: "due_index,cluster_index" rows.
void write_assignment_csv(std::ostream& os, const ClusterAssignment& clusters);

} // namespace d2dsim
