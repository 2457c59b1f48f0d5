#include "chromabound/exact_color.hpp"

#include <algorithm>
#include <tuple>

namespace chromabound {
namespace {

class DsaturState {
 public:
  explicit DsaturState(const Graph& g)
      : g_(g), n_(g.vertex_count()), color_(n_, -1), forbid_(n_ * (n_ + 1), 0), sat_(n_, 0) {}

  bool allowed(std::size_t v, int c) const { return forbid_[v * (n_ + 1) + c] == 0; }

  void assign(std::size_t v, int c) {
    color_[v] = c;
    for (std::size_t w : g_.neighbors(v)) {
      if (forbid_[w * (n_ + 1) + c]++ == 0) ++sat_[w];
    }
  }

  void unassign(std::size_t v) {
    const int c = color_[v];
    for (std::size_t w : g_.neighbors(v)) {
      if (--forbid_[w * (n_ + 1) + c] == 0) --sat_[w];
    }
    color_[v] = -1;
  }

  /// Uncolored vertex with maximum (saturation, degree), lowest index on ties.
  std::size_t pick() const {
    std::size_t best = n_;
    for (std::size_t v = 0; v < n_; ++v) {
      if (color_[v] >= 0) continue;
      if (best == n_ || std::make_tuple(sat_[v], g_.degree(v)) >
                            std::make_tuple(sat_[best], g_.degree(best))) {
        best = v;
      }
    }
    return best;
  }

  const std::vector<int>& colors() const { return color_; }

 private:
  const Graph& g_;
  std::size_t n_;
  std::vector<int> color_;
  std::vector<int> forbid_;  // forbid_[v*(n+1)+c]: neighbors of v colored c
  std::vector<std::size_t> sat_;
};

std::vector<std::size_t> greedy_clique(const Graph& g) {
  std::vector<std::size_t> best;
  for (std::size_t start = 0; start < g.vertex_count(); ++start) {
    std::vector<std::size_t> cand(g.neighbors(start).begin(), g.neighbors(start).end());
    std::stable_sort(cand.begin(), cand.end(),
                     [&](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });
    std::vector<std::size_t> clique{start};
    for (std::size_t v : cand) {
      if (std::all_of(clique.begin(), clique.end(), [&](std::size_t u) { return g.adjacent(u, v); })) {
        clique.push_back(v);
      }
    }
    if (clique.size() > best.size()) best = std::move(clique);
  }
  return best;
}

class BranchAndBound {
 public:
  BranchAndBound(const Graph& g, std::uint64_t budget, int upper, std::vector<int> upper_colors,
                 int lower)
      : g_(g),
        state_(g),
        budget_(budget),
        best_(upper),
        best_colors_(std::move(upper_colors)),
        lower_(lower) {}

  void solve(const std::vector<std::size_t>& clique) {
    if (best_ <= lower_) return;
    for (std::size_t i = 0; i < clique.size(); ++i) state_.assign(clique[i], static_cast<int>(i));
    search(clique.size(), static_cast<int>(clique.size()));
  }

  int best() const { return best_; }
  const std::vector<int>& best_colors() const { return best_colors_; }
  std::uint64_t nodes() const { return nodes_; }
  bool timed_out() const { return timed_out_; }

 private:
  bool done() const { return timed_out_ || best_ <= lower_; }

  void search(std::size_t colored, int used) {
    if (done() || used >= best_) return;
    if (++nodes_ > budget_) {
      timed_out_ = true;
      return;
    }
    if (colored == g_.vertex_count()) {
      best_ = used;
      best_colors_ = state_.colors();
      return;
    }
    const std::size_t v = state_.pick();
    for (int c = 0; c < used; ++c) {
      if (!state_.allowed(v, c)) continue;
      state_.assign(v, c);
      search(colored + 1, used);
      state_.unassign(v);
      if (done()) return;
    }
    if (used + 1 < best_) {
      state_.assign(v, used);
      search(colored + 1, used + 1);
      state_.unassign(v);
    }
  }

  const Graph& g_;
  DsaturState state_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
  int best_;
  std::vector<int> best_colors_;
  int lower_;
};

}  // namespace

Coloring greedy_dsatur(const Graph& g) {
  DsaturState state(g);
  int used = 0;
  for (std::size_t step = 0; step < g.vertex_count(); ++step) {
    const std::size_t v = state.pick();
    int c = 0;
    while (!state.allowed(v, c)) ++c;
    state.assign(v, c);
    used = std::max(used, c + 1);
  }
  return {state.colors(), used};
}

int greedy_clique_size(const Graph& g) { return static_cast<int>(greedy_clique(g).size()); }

ColoringResult exact_chi(const Graph& g, std::uint64_t budget) {
  ColoringResult result;
  if (g.vertex_count() == 0) return result;

  const Coloring greedy = greedy_dsatur(g);
  const auto clique = greedy_clique(g);
  const int lower = static_cast<int>(clique.size());

  BranchAndBound bnb(g, budget, greedy.num_colors, greedy.colors, lower);
  bnb.solve(clique);

  result.chi = bnb.best();
  result.witness = make_coloring(g, bnb.best_colors());
  result.nodes_explored = bnb.nodes();
  result.timed_out = bnb.timed_out();
  result.lower_bound = result.timed_out ? lower : result.chi;
  return result;
}

}  // namespace chromabound
