#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chevk1/root_system.hpp"

namespace chevk1 {

/// Weight of a minuscule representation, stored as the depth vector of
/// mu - lambda over the fundamental roots (mu itself is the zero vector).
using Weight = std::vector<int>;

class WeightDiagram;
using DiagramPtr = std::shared_ptr<const WeightDiagram>;

struct DiagramEdge {
    std::size_t parent; // node closer to mu: weight(parent) = weight(child) + alpha_i
    std::size_t child;
    int label; // 1-based fundamental root index
};

/// Labeled Hasse diagram of the weight orbit of a minuscule representation.
/// Nodes are numbered canonically: sorted by (total depth, lexicographic
/// depth vector), so node 0 is the highest weight.
class WeightDiagram {
  public:
    /// Supported minuscule pairs: (A_l, w1), (D_l, w1), (E6, w1), (E7, w7).
    /// Throws not_minuscule for anything else.
    static DiagramPtr build(RootSystemPtr system, int fundamental);

    const RootSystemPtr &system() const { return system_; }
    int highest_weight_index() const { return fundamental_; }
    std::string label() const {
        return system_->label() + ":w" + std::to_string(fundamental_);
    }

    std::size_t size() const { return weights_.size(); }
    const std::vector<Weight> &weights() const { return weights_; }
    const Weight &weight(std::size_t node) const { return weights_.at(node); }
    std::size_t index_of(const Weight &w) const;
    const std::vector<DiagramEdge> &edges() const { return edges_; }

    /// <lambda_node, alpha^vee>.
    int pairing(std::size_t node, const Root &alpha) const;
    /// Node of lambda + alpha if that is a weight.
    std::optional<std::size_t> shift(std::size_t node, const Root &alpha) const;
    /// Coefficient of alpha_k (1-based) in mu - lambda.
    int level(std::size_t node, int pivot) const {
        return weights_.at(node).at(pivot - 1);
    }

  private:
    RootSystemPtr system_;
    int fundamental_ = 1;
    std::vector<Weight> weights_;
    std::map<Weight, std::size_t> index_;
    std::vector<DiagramEdge> edges_;
};

/// Set of weights of the minuscule representation (the full Weyl orbit of
/// the highest weight); same whitelist as WeightDiagram::build.
std::vector<Weight> weight_orbit(RootSystemPtr system, int fundamental);

/// Nodes partitioned by the coefficient of alpha_pivot in mu - lambda.
std::vector<std::vector<std::size_t>> level_decomposition(const WeightDiagram &d,
                                                          int pivot);

/// W(Delta)-orbit of the seed node inside the diagram; sorted node list.
std::vector<std::size_t> suborbit(const WeightDiagram &d,
                                  const SubsystemEmbedding &delta,
                                  std::size_t seed);

/// Graphviz rendering: nodes labeled with index and depth vector, edges with
/// the fundamental-root label.
std::string to_dot(const WeightDiagram &d);

} // namespace chevk1
