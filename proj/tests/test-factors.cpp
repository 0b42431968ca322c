#include <set>     // for set
#include <string>  // for string

#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "semimatch/semimatch.hpp"

using namespace semimatch;

namespace {

  std::size_t d_class_of(MulTable const& s, GreenStructure const& g, std::string const& n) {
    return g.d_class[*s.find(n)];
  }

  // The factor's table, read back through element_map, is S restricted to
  // D with products leaving D sent to the zero.
  void check_factor(MulTable const& s, GreenStructure const& g, PrincipalFactor const& pf) {
    auto const& t = pf.table;
    REQUIRE(t.size() == pf.element_map.size() + 1);
    for (ElementId x = 0; x < t.size(); ++x) {
      REQUIRE(t(x, pf.zero()) == pf.zero());
      REQUIRE(t(pf.zero(), x) == pf.zero());
    }
    for (ElementId i = 0; i < pf.element_map.size(); ++i) {
      for (ElementId j = 0; j < pf.element_map.size(); ++j) {
        ElementId ab = s(pf.element_map[i], pf.element_map[j]);
        if (g.d_class[ab] == pf.d_class) {
          REQUIRE(pf.element_map[t(i, j)] == ab);
        } else {
          REQUIRE(t(i, j) == pf.zero());
        }
      }
    }
  }

}  // namespace

TEST_CASE("principal_factors", "[factors]") {
  SECTION("a group gives the group with a zero") {
    auto s  = cyclic_group(4);
    auto pf = principal_factors(s);
    REQUIRE(pf.size() == 1);
    REQUIRE(pf[0].table.size() == 5);
    REQUIRE(pf[0].table.name(4) == "0");
    check_factor(s, green_classes(s), pf[0]);
  }
  SECTION("the 7-element band: the big factor is the band itself") {
    auto s  = test::seven_element_band();
    auto g  = green_classes(s);
    auto pf = principal_factors(s, g);
    REQUIRE(pf.size() == 2);
    auto const& big = pf[d_class_of(s, g, "(1,1)")];
    REQUIRE(big.table.size() == 7);
    for (ElementId i = 0; i < 7; ++i) {
      for (ElementId j = 0; j < 7; ++j) {
        auto map = [&](ElementId x) {
          return x == big.zero() ? *s.find("0") : big.element_map[x];
        };
        REQUIRE(map(big.table(i, j)) == s(map(i), map(j)));
      }
    }
    // the zero of S is its own D-class and gets a new zero, renamed
    auto const& small = pf[d_class_of(s, g, "0")];
    REQUIRE(small.table.size() == 2);
    REQUIRE(small.table.name(1) == "0'");
  }
  SECTION("T_2 has a group D-class and a D-class of constants") {
    auto s  = full_transformation(2);
    auto g  = green_classes(s);
    auto pf = principal_factors(s, g);
    REQUIRE(pf.size() == 2);
    std::set<std::set<std::string>> ds;
    for (auto const& f : pf) {
      std::set<std::string> names;
      for (auto x : f.element_map) {
        names.insert(s.name(x));
      }
      ds.insert(names);
    }
    REQUIRE(ds
            == std::set<std::set<std::string>>{{"[1,2]", "[2,1]"}, {"[1,1]", "[2,2]"}});
  }
  SECTION("every factor on the corpus") {
    for (auto const& f : test::full_corpus()) {
      INFO(f.name);
      auto g = green_classes(f.table);
      for (auto const& pf : principal_factors(f.table, g)) {
        check_factor(f.table, g, pf);
      }
    }
  }
}

TEST_CASE("h_quotient_band", "[factors]") {
  SECTION("a combinatorial D-class is its own quotient") {
    auto s  = test::seven_element_band();
    auto g  = green_classes(s);
    auto pf = principal_factor(s, g, d_class_of(s, g, "(1,1)"));
    auto b  = h_quotient_band(pf);
    REQUIRE(b.m == 2);
    REQUIRE(b.n == 3);
    std::set<std::pair<std::size_t, std::size_t>> coords(b.h_map.begin(), b.h_map.end());
    REQUIRE(coords.size() == 6);
    std::size_t idem = 0;
    for (std::size_t r = 0; r < b.m; ++r) {
      for (std::size_t l = 0; l < b.n; ++l) {
        idem += b.is_idempotent(r, l);
      }
    }
    REQUIRE(idem == 3);
  }
  SECTION("a group D-class collapses to one point") {
    auto s = cyclic_group(5);
    auto b = h_quotient_band(principal_factors(s)[0]);
    REQUIRE(b.m == 1);
    REQUIRE(b.n == 1);
    REQUIRE(b.cells[0].size() == 5);
    REQUIRE(b.is_idempotent(0, 0));
  }
  SECTION("the constants of T_3 form a 1x3 band") {
    auto s = full_transformation(3);
    auto g = green_classes(s);
    auto b = h_quotient_band(principal_factor(s, g, d_class_of(s, g, "[1,1,1]")));
    REQUIRE(b.m == 1);
    REQUIRE(b.n == 3);
    for (std::size_t l = 0; l < 3; ++l) {
      REQUIRE(b.p(l, 0));
    }
  }
  SECTION("non-regular D-classes are rejected") {
    auto s = monogenic(2, 1);
    auto g = green_classes(s);
    REQUIRE_THROWS_AS(h_quotient_band(principal_factor(s, g, g.d_class[0])),
                      NotRegularDClass);
  }
  SECTION("the band product is the H-quotient of the factor") {
    for (auto const& f : test::full_corpus()) {
      INFO(f.name);
      for (auto const& pf : principal_factors(f.table)) {
        if (!classify(pf.table).regular) {
          continue;
        }
        auto b  = h_quotient_band(pf);
        auto bt = b.table();
        REQUIRE(b.p.is_regular());
        REQUIRE(bt.size() == b.m * b.n + 1);
        auto coord = [&](ElementId x) {
          return x == pf.zero() ? b.zero() : b.index(b.h_map[x].first, b.h_map[x].second);
        };
        for (ElementId x = 0; x < pf.table.size(); ++x) {
          for (ElementId y = 0; y < pf.table.size(); ++y) {
            REQUIRE(coord(pf.table(x, y)) == bt(coord(x), coord(y)));
          }
        }
      }
    }
  }
}

TEST_CASE("maximal_rect_subbands: worked examples", "[factors]") {
  SECTION("the 7-element band") {
    auto s = test::seven_element_band();
    auto g = green_classes(s);
    auto d = analyze_d_class(s, g, d_class_of(s, g, "(1,1)"));
    REQUIRE(d.subbands);
    auto const& dec = *d.subbands;
    REQUIRE(dec.k() == 2);
    REQUIRE(dec.subbands[0].m() == 1);
    REQUIRE(dec.subbands[0].n() == 2);
    REQUIRE(dec.subbands[1].m() == 1);
    REQUIRE(dec.subbands[1].n() == 1);
    // U_1 holds (1,2) and (1,3); U_2 holds (2,1)
    REQUIRE(d.phi(*s.find("(1,2)")) == std::pair<std::size_t, std::size_t>{0, 0});
    REQUIRE(d.phi(*s.find("(1,3)")) == std::pair<std::size_t, std::size_t>{0, 0});
    REQUIRE(d.phi(*s.find("(2,1)")) == std::pair<std::size_t, std::size_t>{1, 1});
    auto a = *s.find("(2,2)");
    REQUIRE(d.phi(a) == std::pair<std::size_t, std::size_t>{1, 0});
    REQUIRE(inverses_of(s, a).size()
            == dec.subbands[0].m() * dec.subbands[1].n());

    auto v = similarity_check(dec);
    REQUIRE_FALSE(v.pairwise_similar);
    REQUIRE(v.witness == std::pair<std::size_t, std::size_t>{0, 1});
  }
  SECTION("an inverse band has 1x1 subbands only") {
    auto s = test::brandt(2);
    auto g = green_classes(s);
    auto d = analyze_d_class(s, g, d_class_of(s, g, "(1,1)"));
    REQUIRE(d.subbands->k() == 2);
    for (auto const& u : d.subbands->subbands) {
      REQUIRE(u.m() == 1);
      REQUIRE(u.n() == 1);
    }
    REQUIRE(d.similarity->pairwise_similar);
  }
  SECTION("blocks 2x4 and 1x2 are similar") {
    auto s = rees_matrix(test::block_diagonal({{2, 4}, {1, 2}}));
    auto g = green_classes(s);
    auto d = analyze_d_class(s, g, g.d_class[0]);
    REQUIRE(d.subbands->k() == 2);
    std::multiset<std::pair<std::size_t, std::size_t>> dims;
    for (auto const& u : d.subbands->subbands) {
      dims.insert({u.m(), u.n()});
    }
    REQUIRE(dims == std::multiset<std::pair<std::size_t, std::size_t>>{{2, 4}, {1, 2}});
    REQUIRE(d.similarity->pairwise_similar);
    REQUIRE_FALSE(d.similarity->witness);
  }
  SECTION("blocks 2x2 and 1x1 are similar, 2x1 and 1x1 are not") {
    auto yes = rees_matrix(test::block_diagonal({{2, 2}, {1, 1}}));
    auto no  = rees_matrix(test::block_diagonal({{2, 1}, {1, 1}}));
    REQUIRE(analyze_d_class(yes, green_classes(yes), 0).similarity->pairwise_similar);
    REQUIRE_FALSE(analyze_d_class(no, green_classes(no), 0).similarity->pairwise_similar);
  }
  SECTION("non-orthodox bands are rejected with a witness") {
    auto s  = full_transformation(3);
    auto g  = green_classes(s);
    auto pf = principal_factor(s, g, d_class_of(s, g, "[1,1,2]"));
    auto b  = h_quotient_band(pf);
    REQUIRE(b.m == 3);
    REQUIRE(b.n == 3);
    try {
      maximal_rect_subbands(b);
      FAIL("expected NotOrthodox");
    } catch (NotOrthodox const& e) {
      auto [x, y, xy] = e.witness();
      auto bt         = b.table();
      REQUIRE(bt.is_idempotent(x));
      REQUIRE(bt.is_idempotent(y));
      REQUIRE(bt(x, y) == xy);
      REQUIRE_FALSE(bt.is_idempotent(xy));
    }
    auto d = analyze_d_class(s, g, pf.d_class);
    REQUIRE(d.band_orthodox_violation);
    REQUIRE_FALSE(d.subbands);
  }
}

TEST_CASE("subband decompositions of orthodox semigroups", "[factors][property]") {
  std::size_t checked = 0;
  for (auto const& f : test::full_corpus()) {
    auto const& s = f.table;
    if (!classify(s).orthodox) {
      continue;
    }
    INFO(f.name);
    auto g = green_classes(s);
    for (auto const& d : analyze_d_classes(s, g)) {
      REQUIRE(d.regular());
      // orthodoxy passes to every principal factor
      REQUIRE_FALSE(d.band_orthodox_violation);
      REQUIRE(d.subbands);
      auto const& b   = *d.band;
      auto const& dec = *d.subbands;
      auto        bt  = b.table();

      std::size_t sum_m = 0, sum_n = 0;
      for (auto const& u : dec.subbands) {
        sum_m += u.m();
        sum_n += u.n();
        // a rectangular band inside the band, and maximal
        std::vector<ElementId> members;
        for (auto r : u.r_labels) {
          for (auto l : u.l_labels) {
            members.push_back(b.index(r, l));
          }
        }
        for (auto x : members) {
          for (auto y : members) {
            REQUIRE(std::find(members.begin(), members.end(), bt(x, y)) != members.end());
            REQUIRE(bt(bt(x, y), x) == x);
          }
        }
        for (ElementId z = 0; z < bt.size(); ++z) {
          if (std::find(members.begin(), members.end(), z) != members.end()) {
            continue;
          }
          bool still_rect = bt.is_idempotent(z);
          for (auto x : members) {
            still_rect = still_rect && bt(bt(x, z), x) == x && bt(bt(z, x), z) == z;
          }
          REQUIRE_FALSE(still_rect);
        }
      }
      REQUIRE(sum_m == b.m);
      REQUIRE(sum_n == b.n);

      // idempotents sit on the diagonal
      for (std::size_t r = 0; r < b.m; ++r) {
        for (std::size_t l = 0; l < b.n; ++l) {
          if (b.is_idempotent(r, l)) {
            auto [i, j] = dec.phi(r, l);
            REQUIRE(i == j);
          }
        }
      }
      for (std::size_t i = 0; i < dec.k(); ++i) {
        for (std::size_t j = 0; j < dec.k(); ++j) {
          REQUIRE(dec.block_sizes[i][j] == dec.subbands[i].m() * dec.subbands[j].n());
        }
      }

      // |V(a)| = m_j n_i and V(V_ij) = V_ji, both in S itself
      auto const& members = d.factor.element_map;
      for (ElementId a : members) {
        auto [i, j] = d.phi(a);
        REQUIRE(inverses_of(s, a).size() == dec.subbands[j].m() * dec.subbands[i].n());
      }
      for (std::size_t i = 0; i < dec.k(); ++i) {
        for (std::size_t j = 0; j < dec.k(); ++j) {
          ElementSet block, transposed;
          for (ElementId a : members) {
            auto ph = d.phi(a);
            if (ph == std::make_pair(i, j)) {
              block.push_back(a);
            }
            if (ph == std::make_pair(j, i)) {
              transposed.push_back(a);
            }
          }
          std::sort(block.begin(), block.end());
          std::sort(transposed.begin(), transposed.end());
          REQUIRE(inverses_of_set(s, block) == transposed);
        }
      }
      ++checked;
    }
  }
  REQUIRE(checked >= 30);
}

TEST_CASE("render_egg_box", "[factors]") {
  auto s = test::seven_element_band();
  auto g = green_classes(s);
  auto d = analyze_d_class(s, g, d_class_of(s, g, "(1,1)"));
  REQUIRE(render_egg_box(s, d)
          == "  (1,2)*  (1,3)* | (1,1)\n"
             "  ---------------+-------\n"
             "  (2,2)   (2,3)  | (2,1)*\n");
}
