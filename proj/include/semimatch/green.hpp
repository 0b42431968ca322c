#ifndef SEMIMATCH_GREEN_HPP_
#define SEMIMATCH_GREEN_HPP_

#include <algorithm>  // for min
#include <cstddef>    // for size_t
#include <limits>     // for numeric_limits
#include <map>        // for map
#include <numeric>    // for iota
#include <utility>    // for pair
#include <vector>     // for vector

#include "table.hpp"

namespace semimatch {

  inline constexpr std::size_t kNoClass = std::numeric_limits<std::size_t>::max();

  namespace detail {

    // Iterative Tarjan over the implicit graph x -> step(x, s), s in [0, n).
    template <typename Step>
    std::vector<std::size_t> strongly_connected_components(std::size_t n,
                                                           Step&&      step) {
      std::vector<std::size_t> index(n, kNoClass), low(n, 0), comp(n, kNoClass);
      std::vector<char>        on_stack(n, 0);
      std::vector<std::size_t> stack;
      std::vector<std::pair<std::size_t, std::size_t>> frames;  // (vertex, next s)
      std::size_t counter = 0, ncomp = 0;

      for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != kNoClass) {
          continue;
        }
        frames.emplace_back(root, 0);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
          auto& [v, s] = frames.back();
          if (s < n) {
            std::size_t w = step(v, s++);
            if (index[w] == kNoClass) {
              index[w] = low[w] = counter++;
              stack.push_back(w);
              on_stack[w] = 1;
              frames.emplace_back(w, 0);
            } else if (on_stack[w]) {
              low[v] = std::min(low[v], index[w]);
            }
            continue;
          }
          std::size_t done = v;
          frames.pop_back();
          if (!frames.empty()) {
            auto& parent = frames.back().first;
            low[parent]  = std::min(low[parent], low[done]);
          }
          if (low[done] == index[done]) {
            std::size_t w;
            do {
              w = stack.back();
              stack.pop_back();
              on_stack[w] = 0;
              comp[w]     = ncomp;
            } while (w != done);
            ++ncomp;
          }
        }
      }
      return comp;
    }

    // Relabels class ids so that they appear in first-seen element order.
    inline std::vector<std::size_t>
    normalize_labels(std::vector<std::size_t> const& raw, std::size_t* count) {
      std::map<std::size_t, std::size_t> relabel;
      std::vector<std::size_t>           out(raw.size());
      for (std::size_t a = 0; a < raw.size(); ++a) {
        auto [it, inserted] = relabel.emplace(raw[a], relabel.size());
        out[a]              = it->second;
      }
      *count = relabel.size();
      return out;
    }

    inline std::vector<std::vector<ElementId>>
    members_of(std::vector<std::size_t> const& cls, std::size_t count) {
      std::vector<std::vector<ElementId>> out(count);
      for (ElementId a = 0; a < cls.size(); ++a) {
        out[cls[a]].push_back(a);
      }
      return out;
    }

  }  // namespace detail

  //! The egg-box of one D-class: rows are its R-classes, columns its
  //! L-classes, and `cells[row][col]` the H-class at their intersection.
  struct EggBox {
    std::vector<std::size_t>              r_classes;
    std::vector<std::size_t>              l_classes;
    std::vector<std::vector<std::size_t>> cells;
  };

  //! Green's R, L, H, and D relations of a finite semigroup.  Every class
  //! index is assigned in first-seen element order.
  struct GreenStructure {
    std::vector<std::size_t> r_class, l_class, h_class, d_class;

    std::vector<std::vector<ElementId>> r_members, l_members, h_members,
        d_members;

    //! One per D-class, in D-class order.
    std::vector<EggBox> egg_boxes;

    std::size_t size() const noexcept {
      return r_class.size();
    }
  };

  //! R-classes are the strongly connected components of the right Cayley
  //! graph a -> as (so a R b iff aS^1 = bS^1), L-classes those of the left
  //! one.  D is the join of R and L, which for a finite semigroup is R o L.
  inline GreenStructure green_classes(MulTable const& s) {
    std::size_t const n = s.size();
    GreenStructure    g;
    std::size_t       nr, nl, nh, nd;

    g.r_class = detail::normalize_labels(
        detail::strongly_connected_components(
            n, [&](std::size_t a, std::size_t x) { return s(a, x); }),
        &nr);
    g.l_class = detail::normalize_labels(
        detail::strongly_connected_components(
            n, [&](std::size_t a, std::size_t x) { return s(x, a); }),
        &nl);

    std::map<std::pair<std::size_t, std::size_t>, std::size_t> h_ids;
    std::vector<std::size_t>                                   h_raw(n);
    for (ElementId a = 0; a < n; ++a) {
      h_raw[a] = h_ids.emplace(std::make_pair(g.r_class[a], g.l_class[a]),
                               h_ids.size())
                     .first->second;
    }
    g.h_class = detail::normalize_labels(h_raw, &nh);

    // union-find over elements joining R- and L-classes
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    };
    std::vector<std::size_t> r_first(nr, kNoClass), l_first(nl, kNoClass);
    for (ElementId a = 0; a < n; ++a) {
      for (std::size_t first : {r_first[g.r_class[a]], l_first[g.l_class[a]]}) {
        if (first != kNoClass) {
          parent[find(a)] = find(first);
        }
      }
      if (r_first[g.r_class[a]] == kNoClass) {
        r_first[g.r_class[a]] = a;
      }
      if (l_first[g.l_class[a]] == kNoClass) {
        l_first[g.l_class[a]] = a;
      }
    }
    std::vector<std::size_t> d_raw(n);
    for (ElementId a = 0; a < n; ++a) {
      d_raw[a] = find(a);
    }
    g.d_class = detail::normalize_labels(d_raw, &nd);

    g.r_members = detail::members_of(g.r_class, nr);
    g.l_members = detail::members_of(g.l_class, nl);
    g.h_members = detail::members_of(g.h_class, nh);
    g.d_members = detail::members_of(g.d_class, nd);

    g.egg_boxes.resize(nd);
    std::vector<std::size_t> r_pos(nr, kNoClass), l_pos(nl, kNoClass);
    for (std::size_t d = 0; d < nd; ++d) {
      auto& box = g.egg_boxes[d];
      for (ElementId a : g.d_members[d]) {
        if (r_pos[g.r_class[a]] == kNoClass) {
          r_pos[g.r_class[a]] = box.r_classes.size();
          box.r_classes.push_back(g.r_class[a]);
        }
        if (l_pos[g.l_class[a]] == kNoClass) {
          l_pos[g.l_class[a]] = box.l_classes.size();
          box.l_classes.push_back(g.l_class[a]);
        }
      }
      box.cells.assign(box.r_classes.size(),
                       std::vector<std::size_t>(box.l_classes.size(), kNoClass));
      for (ElementId a : g.d_members[d]) {
        box.cells[r_pos[g.r_class[a]]][l_pos[g.l_class[a]]] = g.h_class[a];
      }
    }
    return g;
  }

  //! a^k for k >= 1.
  inline ElementId power(MulTable const& s, ElementId a, std::size_t k) {
    ElementId x = a;
    for (std::size_t i = 1; i < k; ++i) {
      x = s(x, a);
    }
    return x;
  }

  //! The monogenic subsemigroup of a: a^index = a^(index + period) with both
  //! minimal.  `omega` is the idempotent power a^w, and `omega_minus_one` is
  //! a^k for the least k >= 1 with a^(k+1) = a^w.
  struct OmegaData {
    ElementId   omega;
    ElementId   omega_minus_one;
    std::size_t index;
    std::size_t period;
  };

  inline OmegaData omega_data(MulTable const& s, ElementId a) {
    // powers[k - 1] = a^k
    std::vector<ElementId>   powers;
    std::vector<std::size_t> first_exp(s.size(), 0);
    ElementId                x = a;
    for (std::size_t k = 1;; ++k) {
      if (first_exp[x] != 0) {
        OmegaData out;
        out.index  = first_exp[x];
        out.period = k - first_exp[x];
        // the unique multiple of the period in [index, index + period)
        std::size_t w = ((out.index + out.period - 1) / out.period) * out.period;
        out.omega     = powers[w - 1];
        // a^(k+1) = a^w  with k minimal; exists since a^w is in the cycle
        std::size_t m = 1;
        while (s(powers[m - 1], a) != out.omega) {
          ++m;
        }
        out.omega_minus_one = powers[m - 1];
        return out;
      }
      first_exp[x] = k;
      powers.push_back(x);
      x = s(x, a);
    }
  }

  //! H is trivial.
  inline bool is_combinatorial(GreenStructure const& g) {
    return g.h_members.size() == g.size();
  }

  inline bool is_combinatorial(MulTable const& s) {
    return is_combinatorial(green_classes(s));
  }

}  // namespace semimatch

#endif  // SEMIMATCH_GREEN_HPP_
