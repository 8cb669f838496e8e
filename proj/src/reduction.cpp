#include "mtf/reduction.hpp"

#include <algorithm>

#include "mtf/graph6.hpp"
#include "mtf/mis.hpp"

namespace mtf {

namespace {

std::string triangle_text(int a, int b, int c) {
  return std::to_string(a) + "-" + std::to_string(b) + "-" + std::to_string(c);
}

// Some d in `selected` closing a triangle with e and f (which share a vertex).
std::optional<Edge> triangle_witness(const EdgeSet& selected, Edge e, Edge f) {
  int shared = -1;
  int x = -1;
  int y = -1;
  if (e.u == f.u) shared = e.u, x = e.v, y = f.v;
  else if (e.u == f.v) shared = e.u, x = e.v, y = f.u;
  else if (e.v == f.u) shared = e.v, x = e.u, y = f.v;
  else if (e.v == f.v) shared = e.v, x = e.u, y = f.u;
  if (shared < 0 || x == y || !selected.contains(x, y)) return std::nullopt;
  return Edge{std::min(x, y), std::max(x, y)};
}

void check_order_guard(const char* op, int n, int guard) {
  if (n > guard)
    throw GuardViolation(std::string(op) + ": container order " + std::to_string(n) + " exceeds guard " +
                         std::to_string(guard));
}

}  // namespace

std::optional<std::string> find_instance_violation(const ReductionInstance& inst) {
  const int n = inst.container.order();
  if (inst.removal.host_order() != n || inst.selected.host_order() != n)
    return "edge sets are over a different vertex count than the container";
  for (const Edge& e : inst.removal.edges())
    if (!inst.container.adjacent(e.u, e.v)) return "removal edge " + format_edge(e) + " is not a container edge";
  if (auto t = find_triangle(inst.container.minus(inst.removal)))
    return "triangle " + triangle_text((*t)[0], (*t)[1], (*t)[2]) + " survives the removal set";
  for (const Edge& e : inst.selected.edges())
    if (!inst.removal.contains(e)) return "selected edge " + format_edge(e) + " is not in the removal set";
  if (auto t = find_triangle(inst.selected.as_graph()))
    return "selected edges span triangle " + triangle_text((*t)[0], (*t)[1], (*t)[2]);
  return std::nullopt;
}

void validate_instance(const ReductionInstance& inst) {
  if (auto violation = find_instance_violation(inst)) throw InstanceError(*violation);
}

Graph reduced_graph(const ReductionInstance& inst) {
  validate_instance(inst);
  Graph g = inst.container.minus(inst.removal.minus(inst.selected));
  for (const Edge& e : inst.container.edges())
    if (inst.selected.row(e.u) & inst.selected.row(e.v)) g.remove_edge(e.u, e.v);
  return g;
}

int AuxiliaryGraph::vertex_of(Edge e) const {
  const EdgeIndex index = edge_index(reduced.order(), e.u, e.v);
  const auto it = std::lower_bound(vertex_to_edge.begin(), vertex_to_edge.end(), index);
  if (it == vertex_to_edge.end() || *it != index) return -1;
  return static_cast<int>(it - vertex_to_edge.begin());
}

AuxiliaryGraph build_auxiliary(const ReductionInstance& inst) {
  AuxiliaryGraph aux;
  aux.reduced = reduced_graph(inst);
  aux.selected = inst.selected;
  const int n = aux.reduced.order();
  for (const Edge& e : aux.reduced.edges())
    if (!inst.selected.contains(e)) aux.vertex_to_edge.push_back(edge_index(n, e.u, e.v));
  if (aux.vertex_to_edge.size() > static_cast<std::size_t>(kMaxVertices))
    throw GuardViolation("auxiliary graph would have " + std::to_string(aux.vertex_to_edge.size()) +
                         " vertices (limit 64)");

  aux.t_graph = Graph(static_cast<int>(aux.vertex_to_edge.size()));
  for (const Edge& d : inst.selected.edges())
    for (Word w = aux.reduced.row(d.u) & aux.reduced.row(d.v); w; w &= w - 1) {
      const int apex = std::countr_zero(w);
      const int e = aux.vertex_of({std::min(d.u, apex), std::max(d.u, apex)});
      const int f = aux.vertex_of({std::min(d.v, apex), std::max(d.v, apex)});
      if (e < 0 || f < 0) throw Error("internal: triangle through a selected edge leaves V(T)");
      aux.t_graph.add_edge(e, f);
    }
  return aux;
}

VerificationReport verify_claim1(const AuxiliaryGraph& aux) {
  Stopwatch clock;
  VerificationReport report;
  report.check_name = "claim1";
  report.counts["t_vertices"] = aux.t_graph.order();
  report.counts["t_edges"] = static_cast<std::int64_t>(aux.t_graph.edge_count());

  for (const Edge& te : aux.t_graph.edges()) {
    const Edge e = aux.edge_of(te.u);
    const Edge f = aux.edge_of(te.v);
    if (e.u != f.u && e.u != f.v && e.v != f.u && e.v != f.v)
      report.fail("adjacent T-vertices " + format_edge(e) + " and " + format_edge(f) + " share no endpoint");
  }

  if (auto t = find_triangle(aux.t_graph)) {
    const Edge e = aux.edge_of((*t)[0]);
    const Edge f = aux.edge_of((*t)[1]);
    const Edge g = aux.edge_of((*t)[2]);
    auto name = [](std::optional<Edge> d) { return d ? format_edge(*d) : std::string("none"); };
    report.fail("T-triangle e=" + format_edge(e) + " f=" + format_edge(f) + " g=" + format_edge(g) +
                " d1=" + name(triangle_witness(aux.selected, e, f)) + " d2=" +
                name(triangle_witness(aux.selected, e, g)) + " d3=" + name(triangle_witness(aux.selected, f, g)));
  }
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

namespace {

// Depth-first search over the free edges (container edges outside the
// removal set) in ascending index order.
class HStarSearch {
 public:
  HStarSearch(const Graph& container, const EdgeSet& removal, const EdgeSet& selected, std::vector<Graph>& out)
      : n_(container.order()), out_(out) {
    const Graph free = container.minus(removal);
    free_ = free.edges();
    for (int u = 0; u < n_; ++u) {
      present_[u] = selected.row(u);
      possible_[u] = present_[u] | free.row(u);
    }
  }

  void run() {
    // Every pair that is already a permanent non-edge needs a possible
    // common neighbor.
    for (int u = 0; u < n_; ++u)
      for (Word w = low_mask(n_) & above(u) & ~possible_[u]; w; w &= w - 1)
        if (!(possible_[u] & possible_[std::countr_zero(w)])) return;
    descend(0);
  }

 private:
  bool pair_ok(int a, int b) const { return possible_[a] & possible_[b]; }

  // After uv became a non-edge: uv itself and every non-edge at u or v that
  // could have used v or u as its common neighbor.
  bool still_feasible(int u, int v) const {
    if (!pair_ok(u, v)) return false;
    for (Word w = low_mask(n_) & ~possible_[u] & ~bit(u) & ~bit(v); w; w &= w - 1)
      if (!pair_ok(u, std::countr_zero(w))) return false;
    for (Word w = low_mask(n_) & ~possible_[v] & ~bit(u) & ~bit(v); w; w &= w - 1)
      if (!pair_ok(v, std::countr_zero(w))) return false;
    return true;
  }

  void descend(std::size_t k) {
    if (k == free_.size()) {
      Graph h = Graph::from_rows(n_, std::span<const Word>(present_.data(), static_cast<std::size_t>(n_)));
      if (is_maximal_triangle_free(h)) out_.push_back(std::move(h));
      return;
    }
    const auto [u, v] = free_[k];
    if (!(present_[u] & present_[v])) {
      present_[u] |= bit(v);
      present_[v] |= bit(u);
      descend(k + 1);
      present_[u] &= ~bit(v);
      present_[v] &= ~bit(u);
    }
    possible_[u] &= ~bit(v);
    possible_[v] &= ~bit(u);
    if (still_feasible(u, v)) descend(k + 1);
    possible_[u] |= bit(v);
    possible_[v] |= bit(u);
  }

  int n_;
  std::vector<Graph>& out_;
  std::vector<Edge> free_;
  std::array<Word, kMaxVertices> present_{};
  std::array<Word, kMaxVertices> possible_{};
};

}  // namespace

std::vector<Graph> enumerate_H_star(const ReductionInstance& inst, int guard) {
  check_order_guard("enumerate_H_star", inst.container.order(), guard);
  validate_instance(inst);
  std::vector<Graph> family;
  HStarSearch(inst.container, inst.removal, inst.selected, family).run();
  std::sort(family.begin(), family.end(), pattern_less);
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return family;
}

std::vector<Graph> maximal_subgraphs(const Graph& container, int guard) {
  check_order_guard("maximal_subgraphs", container.order(), guard);
  const EdgeSet none(container.order());
  std::vector<Graph> family;
  HStarSearch(container, none, none, family).run();
  std::sort(family.begin(), family.end(), pattern_less);
  return family;
}

VerificationReport verify_claim2(const ReductionInstance& inst, int guard) {
  Stopwatch clock;
  const AuxiliaryGraph aux = build_auxiliary(inst);
  const auto family = enumerate_H_star(inst, guard);
  const Graph& t = aux.t_graph;

  VerificationReport report;
  report.check_name = "claim2";
  std::vector<Word> images;
  for (const Graph& h : family) {
    Word image = 0;
    bool mapped = true;
    for (const Edge& e : h.edges()) {
      if (inst.selected.contains(e)) continue;
      const int tv = aux.vertex_of(e);
      if (tv < 0) {
        report.fail("H=" + to_graph6(h) + " uses edge " + format_edge(e) + " outside the reduced graph");
        mapped = false;
        continue;
      }
      image |= bit(tv);
    }
    if (!mapped) continue;

    for (Word w = image; w; w &= w - 1) {
      const int a = std::countr_zero(w);
      if (const Word clash = t.row(a) & image) {
        const Edge e = aux.edge_of(a);
        const Edge f = aux.edge_of(std::countr_zero(clash));
        const auto d = triangle_witness(aux.selected, e, f);
        report.fail("H=" + to_graph6(h) + " image not independent: e=" + format_edge(e) + " f=" + format_edge(f) +
                    " d=" + (d ? format_edge(*d) : std::string("none")));
        break;
      }
    }
    Word covered = image;
    for (Word w = image; w; w &= w - 1) covered |= t.row(std::countr_zero(w));
    if (covered != t.vertex_mask()) {
      const Edge x = aux.edge_of(std::countr_zero(t.vertex_mask() & ~covered));
      report.fail("H=" + to_graph6(h) + " image not maximal: edge " + format_edge(x) + " could be added");
    }
    images.push_back(image);
  }
  std::sort(images.begin(), images.end());
  const bool injective = std::adjacent_find(images.begin(), images.end()) == images.end();
  report.require(injective, "two members of H(F*) share the same image in T");

  const std::uint64_t mis = mis_count(t);
  report.counts["h_count"] = static_cast<std::int64_t>(family.size());
  report.counts["mis_count_t"] = static_cast<std::int64_t>(mis);
  report.counts["slack"] = static_cast<std::int64_t>(mis) - static_cast<std::int64_t>(family.size());
  report.counts["t_vertices"] = t.order();
  report.counts["t_edges"] = static_cast<std::int64_t>(t.edge_count());
  report.require(family.size() <= mis, "|H(F*)| exceeds mis_count(T)");
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

VerificationReport bound_chain(const Graph& container, const EdgeSet& removal, int order_guard, int removal_guard) {
  Stopwatch clock;
  check_order_guard("bound_chain", container.order(), order_guard);
  if (removal.size() > static_cast<std::size_t>(removal_guard))
    throw GuardViolation("bound_chain: removal set of " + std::to_string(removal.size()) + " edges exceeds guard " +
                         std::to_string(removal_guard));
  validate_instance({container, removal, EdgeSet(container.order())});

  VerificationReport report;
  report.check_name = "bound_chain";
  std::int64_t subsets = 0;
  std::int64_t feasible = 0;
  std::int64_t sum = 0;
  std::int64_t largest = 0;
  const auto container_edges = static_cast<std::int64_t>(container.edge_count());

  removal.for_each_subset([&](const EdgeSet& selected) {
    ++subsets;
    if (!is_triangle_free(selected.as_graph())) return;
    ++feasible;
    const ReductionInstance inst{container, removal, selected};
    const AuxiliaryGraph aux = build_auxiliary(inst);
    const auto family = enumerate_H_star(inst, order_guard);
    const std::uint64_t mis = mis_count(aux.t_graph);
    const int tv = aux.t_graph.order();
    const std::string where = " at F*={" + [&] {
      std::string s;
      for (const Edge& e : selected.edges()) s += (s.empty() ? "" : ",") + format_edge(e);
      return s;
    }() + "}";
    report.require(is_triangle_free(aux.t_graph), "T has a triangle" + where);
    report.require(family.size() <= mis, "|H(F*)| > mis_count(T)" + where);
    report.require(within_mis_bound(mis, tv), "mis_count(T)^2 > 2^|V(T)|" + where);
    report.require(tv <= container_edges, "|V(T)| > e(container)" + where);
    sum += static_cast<std::int64_t>(family.size());
    largest = std::max<std::int64_t>(largest, static_cast<std::int64_t>(family.size()));
  });

  const auto total = static_cast<std::int64_t>(maximal_subgraphs(container, order_guard).size());
  report.require(sum == total, "partition identity: sum over F* is " + std::to_string(sum) + ", total is " +
                                   std::to_string(total));
  report.require(total <= (std::int64_t{1} << removal.size()) * largest,
                 "total exceeds 2^|F| * max_F* |H(F*)|");
  report.parameters["container"] = to_graph6(container);
  report.counts["removal_size"] = static_cast<std::int64_t>(removal.size());
  report.counts["container_edges"] = container_edges;
  report.counts["subsets"] = subsets;
  report.counts["triangle_free_subsets"] = feasible;
  report.counts["sum_h"] = sum;
  report.counts["total_maximal_subgraphs"] = total;
  report.counts["max_h"] = largest;
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

ReductionInstance worked_k4_instance() {
  return {Graph::complete(4), EdgeSet(4, {{0, 1}, {2, 3}}), EdgeSet(4, {{0, 1}})};
}

ReductionInstance random_instance(CounterRng& rng, int n, int edge_percent) {
  Graph container(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(static_cast<std::uint64_t>(edge_percent), 100)) container.add_edge(u, v);
  EdgeSet removal = greedy_triangle_removal(container);

  auto candidates = removal.edges();
  rng.shuffle(candidates);
  EdgeSet selected(n);
  for (const Edge& e : candidates) {
    if (!rng.bernoulli(1, 2)) continue;
    if (selected.row(e.u) & selected.row(e.v)) continue;
    selected.insert(e);
  }
  return {container, removal, selected};
}

nlohmann::json instance_to_json(const ReductionInstance& inst) {
  auto edge_list = [](const EdgeSet& s) {
    std::vector<std::string> out;
    for (const Edge& e : s.edges()) out.push_back(format_edge(e));
    return out;
  };
  return {{"container", to_graph6(inst.container)},
          {"removal", edge_list(inst.removal)},
          {"selected", edge_list(inst.selected)}};
}

ReductionInstance instance_from_json(const nlohmann::json& j) {
  ReductionInstance inst;
  try {
    inst.container = from_graph6(j.at("container").get<std::string>());
    const int n = inst.container.order();
    auto edge_set = [&](const char* key) {
      EdgeSet s(n);
      for (const auto& text : j.at(key).get<std::vector<std::string>>()) {
        const Edge e = parse_edge(text);
        if (e.v >= n) throw InstanceError(std::string(key) + " edge " + text + " is out of range");
        s.insert(e);
      }
      return s;
    };
    inst.removal = edge_set("removal");
    inst.selected = edge_set("selected");
  } catch (const nlohmann::json::exception& e) {
    throw InstanceError(std::string("instance JSON: ") + e.what());
  }
  validate_instance(inst);
  return inst;
}

}  // namespace mtf
