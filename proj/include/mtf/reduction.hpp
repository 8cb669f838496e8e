#pragma once

// Container reduction pipeline. Given a container graph, a removal set F
// whose deletion leaves it triangle-free, and a triangle-free selection
// F* of F, every maximal triangle-free H inside the container with
// E(H) ∩ F = F* corresponds to a distinct maximal independent set of the
// auxiliary graph T built on the remaining edges.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mtf/graph.hpp"
#include "mtf/random.hpp"
#include "mtf/report.hpp"

namespace mtf {

struct ReductionInstance {
  Graph container;
  EdgeSet removal;
  EdgeSet selected;
};

// Carries the offending edge or triangle in its message.
class InstanceError : public Error {
 public:
  using Error::Error;
};

// First violated precondition, described with its witness.
std::optional<std::string> find_instance_violation(const ReductionInstance& inst);
void validate_instance(const ReductionInstance& inst);

// container - (removal - selected) - {e : e closes a triangle with two
// selected edges}.
Graph reduced_graph(const ReductionInstance& inst);

struct AuxiliaryGraph {
  Graph t_graph;
  // T-vertex i is reduced-graph edge vertex_to_edge[i] (ascending).
  std::vector<EdgeIndex> vertex_to_edge;
  Graph reduced;
  EdgeSet selected;

  // T-vertex of an edge of the reduced graph, or -1.
  int vertex_of(Edge e) const;
  Edge edge_of(int t) const { return decode_edge(reduced.order(), vertex_to_edge[t]); }
};

// T-vertices e, f are adjacent iff some d in selected closes a triangle
// {d, e, f} in the reduced graph.
AuxiliaryGraph build_auxiliary(const ReductionInstance& inst);

// T is triangle-free, and adjacent T-vertices share an endpoint.
VerificationReport verify_claim1(const AuxiliaryGraph& aux);

inline constexpr int kDefaultReductionLimit = 10;

// Every H on the container's vertex set with H ⊆ container, H maximal
// triangle-free (over all pairs, not only container pairs) and
// E(H) ∩ removal = selected. Canonically ordered.
std::vector<Graph> enumerate_H_star(const ReductionInstance& inst, int guard = kDefaultReductionLimit);

// Every maximal triangle-free H ⊆ container on its vertex set (no removal
// constraint; the container may contain triangles).
std::vector<Graph> maximal_subgraphs(const Graph& container, int guard = kDefaultReductionLimit);

VerificationReport verify_claim2(const ReductionInstance& inst, int guard = kDefaultReductionLimit);

inline constexpr int kDefaultChainOrderLimit = 8;
inline constexpr int kDefaultRemovalLimit = 12;

// Runs the pipeline for every triangle-free F* ⊆ removal and checks the
// per-F* inequalities plus the partition identity
//   sum_{F*} |H(F*)| = #{maximal triangle-free H ⊆ container}.
VerificationReport bound_chain(const Graph& container, const EdgeSet& removal,
                               int order_guard = kDefaultChainOrderLimit, int removal_guard = kDefaultRemovalLimit);

// K4 on {0,1,2,3}, removal {01, 23}, selected {01}.
ReductionInstance worked_k4_instance();

// Container G(n, p) with p = edge_percent/100, removal from
// greedy_triangle_removal, selected by randomized greedy insertion.
ReductionInstance random_instance(CounterRng& rng, int n, int edge_percent);

nlohmann::json instance_to_json(const ReductionInstance& inst);
ReductionInstance instance_from_json(const nlohmann::json& j);

}  // namespace mtf
