#ifndef SEMIMATCH_BIPARTITE_HPP_
#define SEMIMATCH_BIPARTITE_HPP_

#include <cstddef>  // for size_t
#include <limits>   // for numeric_limits
#include <queue>    // for queue
#include <utility>  // for move
#include <vector>   // for vector

namespace semimatch {

  //! Maximum matching in a bipartite graph with left vertices `0..adj.size()`
  //! and right vertices `0..n_right`, by Hopcroft-Karp.  Neighbours are
  //! visited in the order given, so the result is deterministic.
  class HopcroftKarp {
   public:
    static constexpr std::size_t kUnmatched = std::numeric_limits<std::size_t>::max();

    HopcroftKarp(std::vector<std::vector<std::size_t>> adj, std::size_t n_right)
        : _adj(std::move(adj)),
          _mate_left(_adj.size(), kUnmatched),
          _mate_right(n_right, kUnmatched),
          _dist(_adj.size(), 0),
          _size(0) {
      while (bfs()) {
        std::vector<std::size_t> next(_adj.size(), 0);
        for (std::size_t u = 0; u < _adj.size(); ++u) {
          if (_mate_left[u] == kUnmatched && dfs(u, next)) {
            ++_size;
          }
        }
      }
    }

    std::size_t size() const noexcept {
      return _size;
    }

    bool is_left_perfect() const noexcept {
      return _size == _adj.size();
    }

    std::vector<std::size_t> const& mate_left() const noexcept {
      return _mate_left;
    }

    std::vector<std::size_t> const& mate_right() const noexcept {
      return _mate_right;
    }

    //! For a maximum matching that leaves left vertices uncovered: the left
    //! vertices reachable by alternating paths from uncovered left vertices.
    //! Its neighbourhood is exactly the right vertices reached, all matched
    //! back into the set, so |A| - |N(A)| is the number of uncovered left
    //! vertices.  Empty if the matching covers the left side.
    std::vector<std::size_t> deficient_set() const {
      std::vector<char>        left_seen(_adj.size(), 0), right_seen(_mate_right.size(), 0);
      std::queue<std::size_t>  queue;
      for (std::size_t u = 0; u < _adj.size(); ++u) {
        if (_mate_left[u] == kUnmatched) {
          left_seen[u] = 1;
          queue.push(u);
        }
      }
      while (!queue.empty()) {
        std::size_t u = queue.front();
        queue.pop();
        for (std::size_t v : _adj[u]) {
          if (right_seen[v]) {
            continue;
          }
          right_seen[v] = 1;
          std::size_t w = _mate_right[v];
          if (w != kUnmatched && !left_seen[w]) {
            left_seen[w] = 1;
            queue.push(w);
          }
        }
      }
      std::vector<std::size_t> out;
      for (std::size_t u = 0; u < _adj.size(); ++u) {
        if (left_seen[u]) {
          out.push_back(u);
        }
      }
      return out;
    }

   private:
    static constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

    bool bfs() {
      std::queue<std::size_t> queue;
      bool                    found = false;
      for (std::size_t u = 0; u < _adj.size(); ++u) {
        if (_mate_left[u] == kUnmatched) {
          _dist[u] = 0;
          queue.push(u);
        } else {
          _dist[u] = kInf;
        }
      }
      while (!queue.empty()) {
        std::size_t u = queue.front();
        queue.pop();
        for (std::size_t v : _adj[u]) {
          std::size_t w = _mate_right[v];
          if (w == kUnmatched) {
            found = true;
          } else if (_dist[w] == kInf) {
            _dist[w] = _dist[u] + 1;
            queue.push(w);
          }
        }
      }
      return found;
    }

    // Iterative layered DFS; next[u] is the next neighbour index to try.
    bool dfs(std::size_t root, std::vector<std::size_t>& next) {
      std::vector<std::size_t> path{root};
      while (!path.empty()) {
        std::size_t u = path.back();
        if (next[u] == _adj[u].size()) {
          _dist[u] = kInf;
          path.pop_back();
          continue;
        }
        std::size_t v = _adj[u][next[u]++];
        std::size_t w = _mate_right[v];
        if (w == kUnmatched) {
          // augment along path, each left vertex takes the right vertex it
          // last tried
          for (std::size_t i = path.size(); i-- > 0;) {
            std::size_t x = path[i];
            std::size_t y = _adj[x][next[x] - 1];
            _mate_left[x] = y;
            _mate_right[y] = x;
          }
          return true;
        }
        if (_dist[w] == _dist[u] + 1) {
          path.push_back(w);
        }
      }
      return false;
    }

    std::vector<std::vector<std::size_t>>        _adj;
    std::vector<std::size_t>                     _mate_left;
    std::vector<std::size_t>                     _mate_right;
    std::vector<std::size_t>                     _dist;
    std::size_t                                  _size;
  };

}  // namespace semimatch

#endif  // SEMIMATCH_BIPARTITE_HPP_
