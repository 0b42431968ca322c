#ifndef SEMIMATCH_TESTS_FIXTURES_HPP_
#define SEMIMATCH_TESTS_FIXTURES_HPP_

// The shared corpus of small semigroups used across the test suites.

#include <algorithm>  // for sort
#include <cstddef>    // for size_t
#include <map>        // for map
#include <random>     // for mt19937
#include <string>     // for string
#include <vector>     // for vector

#include "semimatch/semimatch.hpp"

namespace semimatch::test {

  inline BoolStructureMatrix matrix(std::vector<std::vector<int>> const& rows) {
    return BoolStructureMatrix(rows);
  }

  struct Fixture {
    std::string name;
    MulTable    table;
  };

  // Orthodox 0-rectangular band: 2 R-classes, 3 L-classes, nonzero
  // idempotents (1,2), (1,3), (2,1).
  inline BoolStructureMatrix seven_element_p() {
    return BoolStructureMatrix({{0, 1}, {1, 0}, {1, 0}});
  }

  inline MulTable seven_element_band() {
    return rees_matrix(seven_element_p());
  }

  // 2x2 D-class plus zero with every element idempotent except (1,2).
  inline MulTable five_element() {
    return rees_matrix(BoolStructureMatrix({{1, 1}, {0, 1}}));
  }

  inline MulTable brandt(std::size_t k) {
    BoolStructureMatrix p(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      p.set(i, i, true);
    }
    return rees_matrix(p);
  }

  // Block-diagonal structure matrix whose diagonal blocks are all-true of
  // shape (n_i rows = L labels) x (m_i cols = R labels); blocks are given as
  // R x L shapes (m_i, n_i).
  inline BoolStructureMatrix
  block_diagonal(std::vector<std::pair<std::size_t, std::size_t>> const& blocks) {
    std::size_t rows = 0, cols = 0;
    for (auto [m, n] : blocks) {
      cols += m;
      rows += n;
    }
    BoolStructureMatrix p(rows, cols);
    std::size_t         r0 = 0, c0 = 0;
    for (auto [m, n] : blocks) {
      for (std::size_t r = r0; r < r0 + n; ++r) {
        for (std::size_t c = c0; c < c0 + m; ++c) {
          p.set(r, c, true);
        }
      }
      r0 += n;
      c0 += m;
    }
    return p;
  }

  inline MulTable null_semigroup(std::size_t n) {
    return MulTable(n, std::vector<ElementId>(n * n, 0));
  }

  // The semigroup generated by transformations of {0..deg-1} under
  // left-to-right composition, elements in discovery order.
  inline MulTable
  transformation_semigroup(std::vector<std::vector<std::size_t>> const& gens) {
    using Map = std::vector<std::size_t>;
    std::map<Map, std::size_t> index;
    std::vector<Map>           elts;
    auto add = [&](Map const& f) {
      if (index.emplace(f, elts.size()).second) {
        elts.push_back(f);
      }
    };
    for (auto const& g : gens) {
      add(g);
    }
    for (std::size_t i = 0; i < elts.size(); ++i) {
      for (auto const& g : gens) {
        Map h(g.size());
        for (std::size_t x = 0; x < g.size(); ++x) {
          h[x] = g[elts[i][x]];
        }
        add(h);
      }
    }
    std::size_t const      n = elts.size();
    std::vector<ElementId> prod(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        Map h(elts[a].size());
        for (std::size_t x = 0; x < h.size(); ++x) {
          h[x] = elts[b][elts[a][x]];
        }
        prod[a * n + b] = index.at(h);
      }
    }
    return MulTable(n, std::move(prod));
  }

  // The symmetric inverse monoid on k points, partial maps encoded with k
  // meaning "undefined".
  inline MulTable symmetric_inverse_monoid(std::size_t k) {
    std::vector<std::vector<std::size_t>> all;
    std::vector<std::size_t>              f(k, 0);
    // enumerate all partial maps and keep the injective ones
    auto rec = [&](auto&& self, std::size_t x) -> void {
      if (x == k) {
        std::vector<char> hit(k, 0);
        for (auto y : f) {
          if (y < k) {
            if (hit[y]) {
              return;
            }
            hit[y] = 1;
          }
        }
        all.push_back(f);
        return;
      }
      for (std::size_t y = 0; y <= k; ++y) {
        f[x] = y;
        self(self, x + 1);
      }
    };
    rec(rec, 0);
    std::size_t const      n = all.size();
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) {
      index[all[i]] = i;
    }
    std::vector<ElementId> prod(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        std::vector<std::size_t> h(k);
        for (std::size_t x = 0; x < k; ++x) {
          h[x] = all[a][x] == k ? k : all[b][all[a][x]];
        }
        prod[a * n + b] = index.at(h);
      }
    }
    return MulTable(n, std::move(prod));
  }

  // Subsemigroups of T_deg generated by `count` random maps, keeping those
  // with at most `max_size` elements; deterministic for a given seed.
  inline std::vector<Fixture> random_transformation_fixtures(std::size_t deg,
                                                             std::size_t ngens,
                                                             std::size_t count,
                                                             std::size_t max_size,
                                                             unsigned    seed) {
    std::mt19937                            rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, deg - 1);
    std::vector<Fixture>                    out;
    std::size_t                             attempts = 0;
    while (out.size() < count && attempts++ < 50 * count) {
      std::vector<std::vector<std::size_t>> gens(ngens, std::vector<std::size_t>(deg));
      for (auto& g : gens) {
        for (auto& y : g) {
          y = pick(rng);
        }
      }
      auto t = transformation_semigroup(gens);
      if (t.size() <= max_size) {
        out.push_back({"T" + std::to_string(deg) + "-sub-" + std::to_string(seed) + "-"
                           + std::to_string(attempts),
                       std::move(t)});
      }
    }
    return out;
  }

  // The named corpus; every entry is a hand-picked instance.
  inline std::vector<Fixture> named_corpus() {
    std::vector<Fixture> c;
    auto add = [&](std::string name, MulTable t) { c.push_back({std::move(name), std::move(t)}); };
    add("trivial", rectangular_band(1, 1));
    add("C2", cyclic_group(2));
    add("C3", cyclic_group(3));
    add("C6", cyclic_group(6));
    add("klein4", direct_product(cyclic_group(2), cyclic_group(2)));
    add("C2+0", adjoin_zero(cyclic_group(2)));
    add("C3+0", adjoin_zero(cyclic_group(3)));
    add("C2+0+1", adjoin_identity(adjoin_zero(cyclic_group(2))));
    add("left-zero-2", rectangular_band(2, 1));
    add("right-zero-3", rectangular_band(1, 3));
    add("rect-2x2", rectangular_band(2, 2));
    add("rect-2x3", rectangular_band(2, 3));
    add("rect-3x2", rectangular_band(3, 2));
    add("rect-2x2+0", adjoin_zero(rectangular_band(2, 2)));
    add("rect-2x2+1", adjoin_identity(rectangular_band(2, 2)));
    add("rect-1x2xC2", direct_product(rectangular_band(1, 2), cyclic_group(2)));
    add("semilattice-2", rees_matrix(matrix({{1}})));
    add("semilattice-3", adjoin_identity(rees_matrix(matrix({{1}}))));
    add("brandt-2", brandt(2));
    add("brandt-3", brandt(3));
    add("seven-element", seven_element_band());
    add("five-element", five_element());
    add("monogenic-2-1", monogenic(2, 1));
    add("monogenic-3-2", monogenic(3, 2));
    add("monogenic-2-3", monogenic(2, 3));
    add("null-3", null_semigroup(3));
    add("null-2+1", adjoin_identity(null_semigroup(2)));
    add("T1", full_transformation(1));
    add("T2", full_transformation(2));
    add("I2", symmetric_inverse_monoid(2));
    add("rees-full-2x2", rees_matrix(BoolStructureMatrix({{1, 1}, {1, 1}})));
    add("block-1x1-2x1", rees_matrix(block_diagonal({{1, 1}, {2, 1}})));
    add("block-1x1-1x1-1x1", rees_matrix(block_diagonal({{1, 1}, {1, 1}, {1, 1}})));
    add("left-zero-2xC2", direct_product(rectangular_band(2, 1), cyclic_group(2)));
    return c;
  }

  // Named corpus plus larger and randomly generated instances.
  inline std::vector<Fixture> full_corpus() {
    auto c = named_corpus();
    c.push_back({"T3", full_transformation(3)});
    c.push_back({"I3", symmetric_inverse_monoid(3)});
    c.push_back({"block-2x4-1x2", rees_matrix(block_diagonal({{2, 4}, {1, 2}}))});
    c.push_back({"block-2x2-1x1", rees_matrix(block_diagonal({{2, 2}, {1, 1}}))});
    c.push_back({"seven-element^2",
                 direct_product(seven_element_band(), seven_element_band())});
    c.push_back({"brandt-2xrect-1x2", direct_product(brandt(2), rectangular_band(1, 2))});
    for (auto& f : random_transformation_fixtures(3, 2, 12, 27, 7)) {
      c.push_back(std::move(f));
    }
    for (auto& f : random_transformation_fixtures(4, 2, 6, 40, 11)) {
      c.push_back(std::move(f));
    }
    return c;
  }

}  // namespace semimatch::test

#endif  // SEMIMATCH_TESTS_FIXTURES_HPP_
