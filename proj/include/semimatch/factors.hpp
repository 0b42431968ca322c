#ifndef SEMIMATCH_FACTORS_HPP_
#define SEMIMATCH_FACTORS_HPP_

#include <algorithm>  // for max, find
#include <array>      // for array
#include <cstddef>    // for size_t
#include <map>        // for map
#include <optional>   // for optional
#include <sstream>    // for ostringstream
#include <stdexcept>  // for logic_error
#include <string>     // for string
#include <utility>    // for pair
#include <vector>     // for vector

#include "green.hpp"
#include "structure.hpp"
#include "table.hpp"

namespace semimatch {

  //! The principal factor D u {0} of a D-class: products that leave D are
  //! sent to an adjoined zero.  Local index i < |D| is the original element
  //! `element_map[i]`; the zero is the last local index.
  struct PrincipalFactor {
    std::size_t            d_class;
    MulTable               table;
    std::vector<ElementId> element_map;

    ElementId zero() const noexcept {
      return table.size() - 1;
    }
  };

  inline PrincipalFactor principal_factor(MulTable const&       s,
                                          GreenStructure const& g,
                                          std::size_t           d) {
    auto const&       members = g.d_members[d];
    std::size_t const k = members.size(), n = k + 1;
    std::vector<std::size_t> local(s.size(), kNoClass);
    for (std::size_t i = 0; i < k; ++i) {
      local[members[i]] = i;
    }
    std::vector<ElementId> prod(n * n, k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        ElementId ab = s(members[i], members[j]);
        if (g.d_class[ab] == d) {
          prod[i * n + j] = local[ab];
        }
      }
    }
    std::vector<std::string> names;
    for (ElementId a : members) {
      names.push_back(s.name(a));
    }
    names.push_back(detail::unique_name(names, "0"));
    return PrincipalFactor{d, MulTable(n, std::move(prod), std::move(names)), members};
  }

  //! One factor per D-class, in D-class order.
  inline std::vector<PrincipalFactor> principal_factors(MulTable const&       s,
                                                        GreenStructure const& g) {
    std::vector<PrincipalFactor> out;
    for (std::size_t d = 0; d < g.d_members.size(); ++d) {
      out.push_back(principal_factor(s, g, d));
    }
    return out;
  }

  inline std::vector<PrincipalFactor> principal_factors(MulTable const& s) {
    return principal_factors(s, green_classes(s));
  }

  //! The H-quotient of a regular principal factor, a 0-rectangular band
  //! with m R-classes and n L-classes.  The band element (r, l) has index
  //! `r * n + l` in `table()` (the layout of `rees_matrix`), the zero is
  //! `m * n`.
  struct ZeroRectBand {
    std::size_t         m;
    std::size_t         n;
    BoolStructureMatrix p;
    //! Factor-local element -> (R label, L label); defined on D only.
    std::vector<std::pair<std::size_t, std::size_t>> h_map;
    //! Band coordinate index -> factor-local elements of that H-class.
    std::vector<std::vector<ElementId>> cells;

    ElementId index(std::size_t r, std::size_t l) const noexcept {
      return r * n + l;
    }

    ElementId zero() const noexcept {
      return m * n;
    }

    bool is_idempotent(std::size_t r, std::size_t l) const noexcept {
      return p(l, r);
    }

    MulTable table() const {
      return rees_matrix(p);
    }
  };

  inline ZeroRectBand h_quotient_band(PrincipalFactor const& pf) {
    auto const&       t = pf.table;
    std::size_t const k = t.size() - 1;
    bool              regular = false;
    for (ElementId a = 0; a < k && !regular; ++a) {
      regular = t.is_idempotent(a);
    }
    if (!regular) {
      throw NotRegularDClass("D-class " + std::to_string(pf.d_class)
                             + " contains no idempotent");
    }
    auto                     g = green_classes(t);
    std::vector<std::size_t> r_label(g.r_members.size(), kNoClass),
        l_label(g.l_members.size(), kNoClass);
    std::size_t m = 0, n = 0;
    for (ElementId a = 0; a < k; ++a) {
      if (r_label[g.r_class[a]] == kNoClass) {
        r_label[g.r_class[a]] = m++;
      }
      if (l_label[g.l_class[a]] == kNoClass) {
        l_label[g.l_class[a]] = n++;
      }
    }
    ZeroRectBand b{m, n, BoolStructureMatrix(n, m), {}, {}};
    b.h_map.resize(k);
    b.cells.resize(m * n);
    for (ElementId a = 0; a < k; ++a) {
      std::size_t r = r_label[g.r_class[a]], l = l_label[g.l_class[a]];
      b.h_map[a]    = {r, l};
      b.cells[b.index(r, l)].push_back(a);
      if (t.is_idempotent(a)) {
        b.p.set(l, r, true);
      }
    }
    return b;
  }

  //! Idempotent band coordinates (r1, l1), (r2, l2) whose nonzero product is
  //! not idempotent, as band indices {e, f, ef}.
  inline std::optional<std::array<ElementId, 3>>
  find_band_orthodox_violation(ZeroRectBand const& b) {
    for (std::size_t r1 = 0; r1 < b.m; ++r1) {
      for (std::size_t l1 = 0; l1 < b.n; ++l1) {
        if (!b.is_idempotent(r1, l1)) {
          continue;
        }
        for (std::size_t r2 = 0; r2 < b.m; ++r2) {
          if (!b.p(l1, r2)) {
            continue;  // product is 0
          }
          for (std::size_t l2 = 0; l2 < b.n; ++l2) {
            if (b.is_idempotent(r2, l2) && !b.is_idempotent(r1, l2)) {
              return std::array<ElementId, 3>{
                  b.index(r1, l1), b.index(r2, l2), b.index(r1, l2)};
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  //! A maximal rectangular subband V(e) of an orthodox 0-rectangular band,
  //! the block of R labels x L labels it occupies.
  struct Subband {
    ElementId                representative;
    std::vector<std::size_t> r_labels;
    std::vector<std::size_t> l_labels;

    //! Number of R-classes.
    std::size_t m() const noexcept {
      return r_labels.size();
    }

    //! Number of L-classes.
    std::size_t n() const noexcept {
      return l_labels.size();
    }
  };

  struct SubbandDecomposition {
    //! Ordered by representative, the least band index among idempotents of
    //! the subband.
    std::vector<Subband> subbands;
    //! R label / L label -> the unique subband meeting it.
    std::vector<std::size_t> r_subband;
    std::vector<std::size_t> l_subband;
    //! Labels listed subband by subband, so subbands form the diagonal.
    std::vector<std::size_t> r_order;
    std::vector<std::size_t> l_order;
    //! block_sizes[i][j] = number of band elements with phi = (i, j).
    std::vector<std::vector<std::size_t>> block_sizes;

    std::size_t k() const noexcept {
      return subbands.size();
    }

    std::pair<std::size_t, std::size_t> phi(std::size_t r,
                                            std::size_t l) const noexcept {
      return {r_subband[r], l_subband[l]};
    }
  };

  inline SubbandDecomposition maximal_rect_subbands(ZeroRectBand const& b) {
    if (auto w = find_band_orthodox_violation(b)) {
      throw NotOrthodox(*w);
    }
    SubbandDecomposition dec;
    std::map<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>,
             std::size_t>
        seen;
    for (std::size_t r = 0; r < b.m; ++r) {
      for (std::size_t l = 0; l < b.n; ++l) {
        if (!b.is_idempotent(r, l)) {
          continue;
        }
        // V((r,l)) = {(r2,l2) : p[l][r2] and p[l2][r]}
        Subband u{b.index(r, l), {}, {}};
        for (std::size_t r2 = 0; r2 < b.m; ++r2) {
          if (b.p(l, r2)) {
            u.r_labels.push_back(r2);
          }
        }
        for (std::size_t l2 = 0; l2 < b.n; ++l2) {
          if (b.p(l2, r)) {
            u.l_labels.push_back(l2);
          }
        }
        if (seen.emplace(std::make_pair(u.r_labels, u.l_labels), dec.subbands.size())
                .second) {
          dec.subbands.push_back(std::move(u));
        }
      }
    }
    std::sort(dec.subbands.begin(), dec.subbands.end(),
              [](auto const& x, auto const& y) {
                return x.representative < y.representative;
              });

    dec.r_subband.assign(b.m, kNoClass);
    dec.l_subband.assign(b.n, kNoClass);
    for (std::size_t i = 0; i < dec.k(); ++i) {
      for (auto r : dec.subbands[i].r_labels) {
        if (dec.r_subband[r] != kNoClass) {
          throw std::logic_error("R-class meets two maximal rectangular subbands");
        }
        dec.r_subband[r] = i;
        dec.r_order.push_back(r);
      }
      for (auto l : dec.subbands[i].l_labels) {
        if (dec.l_subband[l] != kNoClass) {
          throw std::logic_error("L-class meets two maximal rectangular subbands");
        }
        dec.l_subband[l] = i;
        dec.l_order.push_back(l);
      }
    }
    if (dec.r_order.size() != b.m || dec.l_order.size() != b.n) {
      throw std::logic_error("some R- or L-class meets no rectangular subband");
    }
    dec.block_sizes.assign(dec.k(), std::vector<std::size_t>(dec.k(), 0));
    for (std::size_t r = 0; r < b.m; ++r) {
      for (std::size_t l = 0; l < b.n; ++l) {
        auto [i, j] = dec.phi(r, l);
        ++dec.block_sizes[i][j];
      }
    }
    return dec;
  }

  struct SimilarityVerdict {
    bool pairwise_similar;
    //! 0-based subband indices (i, j) with m_i n_j != m_j n_i.
    std::optional<std::pair<std::size_t, std::size_t>> witness;
  };

  //! Subbands U_i, U_j are similar when m_i / n_i = m_j / n_j, tested as
  //! m_i n_j = m_j n_i.
  inline SimilarityVerdict similarity_check(SubbandDecomposition const& dec) {
    for (std::size_t i = 0; i < dec.k(); ++i) {
      for (std::size_t j = i + 1; j < dec.k(); ++j) {
        auto const& u = dec.subbands[i];
        auto const& w = dec.subbands[j];
        if (u.m() * w.n() != w.m() * u.n()) {
          return {false, std::make_pair(i, j)};
        }
      }
    }
    return {true, std::nullopt};
  }

  ////////////////////////////////////////////////////////////////////////
  // Per D-class bundle
  ////////////////////////////////////////////////////////////////////////

  struct DClassAnalysis {
    PrincipalFactor                     factor;
    std::optional<ZeroRectBand>         band;
    std::optional<SubbandDecomposition> subbands;
    //! Original elements {e, f, x} with e, f idempotent and x in the H-class
    //! of ef, which holds no idempotent.
    std::optional<std::array<ElementId, 3>> band_orthodox_violation;
    std::optional<SimilarityVerdict>        similarity;

    std::size_t d_class() const noexcept {
      return factor.d_class;
    }

    bool regular() const noexcept {
      return band.has_value();
    }

    //! phi of an original element of this D-class.
    std::pair<std::size_t, std::size_t> phi(ElementId original) const {
      auto const& map = factor.element_map;
      auto        it  = std::find(map.begin(), map.end(), original);
      auto [r, l]     = band->h_map[it - map.begin()];
      return subbands->phi(r, l);
    }
  };

  inline DClassAnalysis analyze_d_class(MulTable const&       s,
                                        GreenStructure const& g,
                                        std::size_t           d) {
    DClassAnalysis out{principal_factor(s, g, d), {}, {}, {}, {}};
    auto const&    t = out.factor.table;
    bool           regular = false;
    for (ElementId a = 0; a + 1 < t.size() && !regular; ++a) {
      regular = t.is_idempotent(a);
    }
    if (!regular) {
      return out;
    }
    out.band = h_quotient_band(out.factor);
    if (auto w = find_band_orthodox_violation(*out.band)) {
      auto rep = [&](ElementId band_index) {
        auto const& cell = out.band->cells[band_index];
        for (ElementId a : cell) {
          if (t.is_idempotent(a)) {
            return out.factor.element_map[a];
          }
        }
        return out.factor.element_map[cell.front()];
      };
      out.band_orthodox_violation
          = std::array<ElementId, 3>{rep((*w)[0]), rep((*w)[1]), rep((*w)[2])};
      return out;
    }
    out.subbands   = maximal_rect_subbands(*out.band);
    out.similarity = similarity_check(*out.subbands);
    return out;
  }

  inline std::vector<DClassAnalysis> analyze_d_classes(MulTable const&       s,
                                                       GreenStructure const& g) {
    std::vector<DClassAnalysis> out;
    for (std::size_t d = 0; d < g.d_members.size(); ++d) {
      out.push_back(analyze_d_class(s, g, d));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Egg-box rendering
  ////////////////////////////////////////////////////////////////////////

  //! Text grid of a D-class: one row per R-class, one column per L-class,
  //! idempotent H-classes marked '*'.  When the subband decomposition is
  //! known the classes are ordered so the subbands form diagonal blocks,
  //! separated by '|' and '-' rules.
  inline std::string render_egg_box(MulTable const& s, DClassAnalysis const& dc) {
    std::ostringstream os;
    auto const&        t       = dc.factor.table;
    std::size_t const  size    = t.size() - 1;
    auto               name_of = [&](ElementId local) {
      return s.name(dc.factor.element_map[local]);
    };

    if (!dc.band) {
      os << "  (non-regular: ";
      for (std::size_t i = 0; i < size; ++i) {
        os << (i == 0 ? "" : " ") << name_of(i);
      }
      os << ")\n";
      return os.str();
    }
    auto const& b = *dc.band;

    std::vector<std::size_t> rows, cols, row_group, col_group;
    if (dc.subbands) {
      rows = dc.subbands->r_order;
      cols = dc.subbands->l_order;
      for (auto r : rows) {
        row_group.push_back(dc.subbands->r_subband[r]);
      }
      for (auto l : cols) {
        col_group.push_back(dc.subbands->l_subband[l]);
      }
    } else {
      for (std::size_t r = 0; r < b.m; ++r) {
        rows.push_back(r);
        row_group.push_back(0);
      }
      for (std::size_t l = 0; l < b.n; ++l) {
        cols.push_back(l);
        col_group.push_back(0);
      }
    }

    std::vector<std::vector<std::string>> text(rows.size(),
                                               std::vector<std::string>(cols.size()));
    std::vector<std::size_t> width(cols.size(), 0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < cols.size(); ++j) {
        auto const& cell = b.cells[b.index(rows[i], cols[j])];
        std::string txt;
        for (std::size_t x = 0; x < cell.size(); ++x) {
          txt += (x == 0 ? "" : ",") + name_of(cell[x]);
        }
        if (b.is_idempotent(rows[i], cols[j])) {
          txt += '*';
        }
        text[i][j] = txt;
        width[j]   = std::max(width[j], txt.size());
      }
    }

    auto emit = [&](std::string line) {
      line.erase(line.find_last_not_of(' ') + 1);
      os << line << '\n';
    };
    auto rule = [&]() {
      std::string line = "  ";
      for (std::size_t j = 0; j < cols.size(); ++j) {
        if (j > 0) {
          line += col_group[j] != col_group[j - 1] ? "-+-" : "--";
        }
        line += std::string(width[j], '-');
      }
      emit(line);
    };
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i > 0 && row_group[i] != row_group[i - 1]) {
        rule();
      }
      std::string line = "  ";
      for (std::size_t j = 0; j < cols.size(); ++j) {
        if (j > 0) {
          line += col_group[j] != col_group[j - 1] ? " | " : "  ";
        }
        line += text[i][j] + std::string(width[j] - text[i][j].size(), ' ');
      }
      emit(line);
    }
    return os.str();
  }

}  // namespace semimatch

#endif  // SEMIMATCH_FACTORS_HPP_
