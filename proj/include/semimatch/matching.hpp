#ifndef SEMIMATCH_MATCHING_HPP_
#define SEMIMATCH_MATCHING_HPP_

#include <algorithm>    // for sort, next_permutation, binary_search
#include <chrono>       // for steady_clock
#include <cstddef>      // for size_t
#include <cstdint>      // for uint32_t, uint64_t
#include <numeric>      // for iota
#include <optional>     // for optional
#include <ostream>      // for ostream
#include <span>         // for span
#include <stdexcept>    // for logic_error
#include <string>       // for string
#include <string_view>  // for string_view
#include <variant>      // for variant
#include <vector>       // for vector

#include "bipartite.hpp"
#include "factors.hpp"
#include "green.hpp"
#include "structure.hpp"
#include "table.hpp"

namespace semimatch {

  enum class MatchingKind { permutation, involution };

  //! Which procedure produced a matching.
  enum class Provenance {
    hall_bipartite,     // perfect matching in the bipartite inverse graph
    gamma_pairing,      // paired gamma-classes of an orthodox semigroup
    band_lift,          // subband blocks of each H-quotient, lifted to S
    involution_search,  // backtracking over mutual-inverse pairs
    brute_force,        // enumeration of bijections
    formula             // an explicit map, named in Matching::formula
  };

  inline std::string_view to_string(MatchingKind k) {
    return k == MatchingKind::involution ? "involution" : "permutation";
  }

  inline std::string_view to_string(Provenance p) {
    switch (p) {
      case Provenance::hall_bipartite:
        return "hall_bipartite";
      case Provenance::gamma_pairing:
        return "gamma_pairing";
      case Provenance::band_lift:
        return "band_lift";
      case Provenance::involution_search:
        return "involution_search";
      case Provenance::brute_force:
        return "brute_force";
      case Provenance::formula:
        return "formula";
    }
    return "unknown";
  }

  //! A bijection f of the elements with f(a) in V(a) for every a.
  struct Matching {
    std::vector<ElementId> image;
    MatchingKind           kind;
    Provenance             provenance;
    std::string            formula = {};

    ElementId operator()(ElementId a) const noexcept {
      return image[a];
    }
  };

  //! A set A with |A| > |V(A)|.
  struct HallCertificate {
    ElementSet subset;
    ElementSet image;
  };

  inline bool is_involution(std::span<ElementId const> f) {
    for (ElementId a = 0; a < f.size(); ++a) {
      if (f[a] >= f.size() || f[f[a]] != a) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Verification
  ////////////////////////////////////////////////////////////////////////

  enum class MatchingFailure {
    none,
    wrong_size,
    out_of_range,
    not_bijective,
    not_inverse,
    not_involution
  };

  inline std::string_view to_string(MatchingFailure f) {
    switch (f) {
      case MatchingFailure::none:
        return "none";
      case MatchingFailure::wrong_size:
        return "wrong_size";
      case MatchingFailure::out_of_range:
        return "out_of_range";
      case MatchingFailure::not_bijective:
        return "not_bijective";
      case MatchingFailure::not_inverse:
        return "not_inverse";
      case MatchingFailure::not_involution:
        return "not_involution";
    }
    return "unknown";
  }

  //! Outcome of `verify_matching`; `element` is the first offending element.
  struct MatchingCheck {
    MatchingFailure failure = MatchingFailure::none;
    ElementId       element = 0;

    bool ok() const noexcept {
      return failure == MatchingFailure::none;
    }

    explicit operator bool() const noexcept {
      return ok();
    }
  };

  //! Checks directly against the table: f is a bijection, a f(a) a = a and
  //! f(a) a f(a) = f(a) for all a, and f(f(a)) = a if requested.
  inline MatchingCheck verify_matching(MulTable const&            s,
                                       std::span<ElementId const> f,
                                       bool require_involution) {
    std::size_t const n = s.size();
    if (f.size() != n) {
      return {MatchingFailure::wrong_size, 0};
    }
    std::vector<char> hit(n, 0);
    for (ElementId a = 0; a < n; ++a) {
      if (f[a] >= n) {
        return {MatchingFailure::out_of_range, a};
      }
      if (hit[f[a]]) {
        return {MatchingFailure::not_bijective, a};
      }
      hit[f[a]] = 1;
    }
    for (ElementId a = 0; a < n; ++a) {
      if (!are_mutually_inverse(s, a, f[a])) {
        return {MatchingFailure::not_inverse, a};
      }
    }
    if (require_involution) {
      for (ElementId a = 0; a < n; ++a) {
        if (f[f[a]] != a) {
          return {MatchingFailure::not_involution, a};
        }
      }
    }
    return {};
  }

  inline MatchingCheck verify_matching(MulTable const& s, Matching const& m) {
    return verify_matching(s, m.image, m.kind == MatchingKind::involution);
  }

  ////////////////////////////////////////////////////////////////////////
  // Existence via bipartite matching
  ////////////////////////////////////////////////////////////////////////

  using MatchingOrCertificate = std::variant<Matching, HallCertificate>;

  //! A permutation matching exists iff the elements form a transversal of
  //! the family {V(a)}, i.e. iff the bipartite graph a -- b (b in V(a)) has
  //! a perfect matching.  When it does not, the König set of the maximum
  //! matching violates Hall's condition.  For a non-regular semigroup the
  //! certificate is the first element without inverses.
  inline MatchingOrCertificate
  find_permutation_matching(MulTable const& s, std::vector<ElementSet> const& v) {
    if (auto a = find_non_regular(v)) {
      return HallCertificate{{*a}, {}};
    }
    HopcroftKarp hk(v, s.size());
    if (hk.is_left_perfect()) {
      Matching m{hk.mate_left(), MatchingKind::permutation,
                 Provenance::hall_bipartite};
      if (!verify_matching(s, m)) {
        throw std::logic_error("bipartite matching failed verification");
      }
      return m;
    }
    HallCertificate cert;
    cert.subset = hk.deficient_set();
    cert.image  = inverses_of_set(v, cert.subset);
    if (cert.subset.size() <= cert.image.size()) {
      throw std::logic_error("deficient set does not violate Hall's condition");
    }
    return cert;
  }

  inline MatchingOrCertificate find_permutation_matching(MulTable const& s) {
    return find_permutation_matching(s, all_inverses(s));
  }

  //! Result of checking |A| <= |V(A)| over every subset A.
  struct HallBruteForce {
    bool holds;
    //! The first violating subset in order of size, then lexicographic
    //! bitmask order.
    std::optional<ElementSet> violating;
  };

  //! Enumerates all 2^n subsets; for n <= `max_size` only.
  inline HallBruteForce hall_brute_force(MulTable const& s,
                                         std::size_t     max_size = 20) {
    std::size_t const n = s.size();
    if (n > max_size || n > 30) {
      throw TooLarge("subset enumeration over " + std::to_string(n)
                     + " elements exceeds the limit of "
                     + std::to_string(std::min<std::size_t>(max_size, 30)));
    }
    std::vector<std::uint32_t> vmask(n, 0);
    for (ElementId a = 0; a < n; ++a) {
      for (ElementId b = 0; b < n; ++b) {
        if (are_mutually_inverse(s, a, b)) {
          vmask[a] |= std::uint32_t(1) << b;
        }
      }
    }
    auto to_set = [n](std::uint32_t mask) {
      ElementSet out;
      for (ElementId a = 0; a < n; ++a) {
        if (mask & (std::uint32_t(1) << a)) {
          out.push_back(a);
        }
      }
      return out;
    };
    std::uint64_t const full = std::uint64_t(1) << n;
    for (std::size_t k = 1; k <= n; ++k) {
      // Gosper's hack over k-subsets
      std::uint64_t mask = (std::uint64_t(1) << k) - 1;
      while (mask < full) {
        std::uint32_t image = 0;
        for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
          image |= vmask[__builtin_ctzll(rest)];
        }
        if (std::size_t(__builtin_popcount(image)) < k) {
          return {false, to_set(static_cast<std::uint32_t>(mask))};
        }
        std::uint64_t c = mask & -mask, r = mask + c;
        mask            = (((r ^ mask) >> 2) / c) | r;
      }
    }
    return {true, std::nullopt};
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  struct MatchingCount {
    std::uint64_t count;
    //! The enumeration stopped at the limit; the true count is >= count.
    bool at_limit;
  };

  namespace detail {

    // Depth-first enumeration of bijections f with f(a) in V(a), elements
    // taken in increasing order of |V(a)|.  `visit` returns false to stop.
    template <typename Visit>
    void enumerate_matchings(std::vector<ElementSet> const& v, Visit&& visit) {
      std::size_t const        n = v.size();
      std::vector<std::size_t> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) {
        return v[x].size() < v[y].size();
      });
      std::vector<ElementId> f(n, 0);
      std::vector<char>      used(n, 0);
      bool                   stop = false;
      auto rec = [&](auto&& self, std::size_t depth) -> void {
        if (depth == n) {
          stop = !visit(f);
          return;
        }
        ElementId a = order[depth];
        for (ElementId b : v[a]) {
          if (used[b]) {
            continue;
          }
          used[b] = 1;
          f[a]    = b;
          self(self, depth + 1);
          used[b] = 0;
          if (stop) {
            return;
          }
        }
      };
      rec(rec, 0);
    }

  }  // namespace detail

  //! Counts permutation matchings, stopping once `limit` have been seen.
  inline MatchingCount count_permutation_matchings(MulTable const& s,
                                                   std::uint64_t   limit,
                                                   std::size_t max_size = 20) {
    if (s.size() > max_size) {
      throw TooLarge("counting over " + std::to_string(s.size())
                     + " elements exceeds the limit of "
                     + std::to_string(max_size));
    }
    if (limit == 0) {
      throw RangeError("limit must be positive");
    }
    std::uint64_t count = 0;
    detail::enumerate_matchings(all_inverses(s), [&](auto const&) {
      return ++count < limit;
    });
    return {count, count >= limit};
  }

  //! The first permutation matching in enumeration order, if any.
  inline std::optional<Matching>
  first_matching_by_enumeration(MulTable const& s, std::size_t max_size = 20) {
    if (s.size() > max_size) {
      throw TooLarge("enumeration over " + std::to_string(s.size())
                     + " elements exceeds the limit of "
                     + std::to_string(max_size));
    }
    std::optional<Matching> out;
    detail::enumerate_matchings(all_inverses(s), [&](auto const& f) {
      out = Matching{f, MatchingKind::permutation, Provenance::brute_force};
      return false;
    });
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Orthodox semigroups
  ////////////////////////////////////////////////////////////////////////

  //! A gamma-class whose size differs from that of its inverse set; the
  //! larger of the two is reported as `gamma_class`, so that it violates
  //! Hall's condition with image `inverse_set`.
  struct UnequalClasses {
    ElementSet gamma_class;
    ElementSet inverse_set;
  };

  using InvolutionOrUnequal = std::variant<Matching, UnequalClasses>;

  inline void require_orthodox(MulTable const& s, std::vector<ElementSet> const& v) {
    if (auto a = find_non_regular(v)) {
      throw NotOrthodox("not orthodox: element " + std::to_string(*a)
                        + " has no inverse");
    }
    if (auto w = find_idempotent_product_violation(s)) {
      throw NotOrthodox(*w);
    }
  }

  //! For orthodox S, V(a) -> V(V(a)) is an involution on the gamma-classes.
  //! A permutation matching exists iff paired classes have equal size; the
  //! involution returned is the identity on self-paired classes and the
  //! index-order bijection (and its inverse) between paired classes.
  inline InvolutionOrUnequal orthodox_involution(MulTable const& s) {
    auto gs = gamma_structure(s);
    require_orthodox(s, gs.v);
    if (!gs.v_involution) {
      throw std::logic_error("orthodox semigroup without V-involution");
    }
    auto const&            pair = *gs.v_involution;
    std::vector<ElementId> f(s.size());
    for (std::size_t c = 0; c < gs.gamma_classes.size(); ++c) {
      auto const& cls = gs.gamma_classes[c];
      auto const& inv = gs.gamma_classes[pair[c]];
      if (pair[c] == c) {
        for (ElementId a : cls) {
          f[a] = a;
        }
        continue;
      }
      if (cls.size() != inv.size()) {
        return cls.size() > inv.size() ? UnequalClasses{cls, inv}
                                       : UnequalClasses{inv, cls};
      }
      for (std::size_t t = 0; t < cls.size(); ++t) {
        f[cls[t]] = inv[t];
      }
    }
    Matching m{std::move(f), MatchingKind::involution, Provenance::gamma_pairing};
    if (!verify_matching(s, m)) {
      throw std::logic_error("gamma pairing failed verification");
    }
    return m;
  }

  //! An involution matching of an orthodox 0-rectangular band with pairwise
  //! similar subbands: identity on each diagonal block V_{i,i} (a
  //! rectangular band) and the index-order bijection between V_{i,j} and
  //! V_{j,i}.  Indices refer to `band.table()`.
  inline Matching subband_block_involution(ZeroRectBand const&         band,
                                           SubbandDecomposition const& dec) {
    std::size_t const k = dec.k();
    std::vector<std::vector<std::vector<ElementId>>> blocks(
        k, std::vector<std::vector<ElementId>>(k));
    for (std::size_t r = 0; r < band.m; ++r) {
      for (std::size_t l = 0; l < band.n; ++l) {
        auto [i, j] = dec.phi(r, l);
        blocks[i][j].push_back(band.index(r, l));
      }
    }
    std::vector<ElementId> f(band.m * band.n + 1);
    f[band.zero()] = band.zero();
    for (std::size_t i = 0; i < k; ++i) {
      for (ElementId a : blocks[i][i]) {
        f[a] = a;
      }
      for (std::size_t j = i + 1; j < k; ++j) {
        auto const& x = blocks[i][j];
        auto const& y = blocks[j][i];
        if (x.size() != y.size()) {
          throw std::logic_error("subbands are not pairwise similar");
        }
        for (std::size_t t = 0; t < x.size(); ++t) {
          f[x[t]] = y[t];
          f[y[t]] = x[t];
        }
      }
    }
    return Matching{std::move(f), MatchingKind::involution, Provenance::band_lift};
  }

  //! Lifts an involution matching of the H-quotient band to its principal
  //! factor: when H-classes H1 <-> H2 are paired, each a in H1 is sent to its
  //! unique inverse in H2.  The zero is fixed.
  inline Matching lift_band_matching(PrincipalFactor const& pf,
                                     ZeroRectBand const&    band,
                                     Matching const&        band_matching) {
    auto const& t = pf.table;
    if (!verify_matching(band.table(), band_matching.image, true)) {
      throw LiftFailure("band map is not an involution matching");
    }
    std::vector<ElementId> f(t.size());
    f[pf.zero()] = pf.zero();
    for (ElementId a = 0; a < pf.zero(); ++a) {
      auto [r, l]         = band.h_map[a];
      ElementId partner   = band_matching(band.index(r, l));
      if (partner == band.zero()) {
        throw LiftFailure("band matching sends a nonzero element to 0");
      }
      std::optional<ElementId> found;
      for (ElementId b : band.cells[partner]) {
        if (are_mutually_inverse(t, a, b)) {
          if (found) {
            throw LiftFailure("element " + t.name(a)
                              + " has two inverses in the paired H-class");
          }
          found = b;
        }
      }
      if (!found) {
        throw LiftFailure("element " + t.name(a)
                          + " has no inverse in the paired H-class");
      }
      f[a] = *found;
    }
    Matching m{std::move(f), MatchingKind::involution, Provenance::band_lift};
    if (!verify_matching(t, m)) {
      throw LiftFailure("lifted map is not an involution matching");
    }
    return m;
  }

  struct DClassVerdict {
    std::size_t                                      d_class;
    std::size_t                                      m;
    std::size_t                                      n;
    std::vector<std::pair<std::size_t, std::size_t>> subbands;  // (m_i, n_i)
    SimilarityVerdict                                similarity;
  };

  struct OrthodoxDecision {
    std::vector<DClassVerdict> d_classes;
    bool                       exists;
    //! When `exists`: the union over D-classes of lifted subband matchings.
    std::optional<Matching> matching;
  };

  //! A finite orthodox semigroup has a permutation matching iff, in the
  //! H-quotient of every principal factor, the maximal rectangular subbands
  //! are pairwise similar.
  inline OrthodoxDecision decide_orthodox_matching(MulTable const&       s,
                                                   GreenStructure const& g) {
    require_orthodox(s, all_inverses(s));
    auto             analyses = analyze_d_classes(s, g);
    OrthodoxDecision out{{}, true, std::nullopt};
    for (auto const& dc : analyses) {
      if (!dc.subbands) {
        throw std::logic_error("principal factor of an orthodox semigroup "
                               "is not an orthodox 0-rectangular band");
      }
      DClassVerdict verdict{dc.d_class(), dc.band->m, dc.band->n, {}, *dc.similarity};
      for (auto const& u : dc.subbands->subbands) {
        verdict.subbands.emplace_back(u.m(), u.n());
      }
      out.exists = out.exists && dc.similarity->pairwise_similar;
      out.d_classes.push_back(std::move(verdict));
    }
    if (!out.exists) {
      return out;
    }
    std::vector<ElementId> f(s.size());
    for (auto const& dc : analyses) {
      auto lifted = lift_band_matching(
          dc.factor, *dc.band, subband_block_involution(*dc.band, *dc.subbands));
      auto const& map = dc.factor.element_map;
      for (ElementId a = 0; a < map.size(); ++a) {
        f[map[a]] = map[lifted(a)];
      }
    }
    Matching m{std::move(f), MatchingKind::involution, Provenance::band_lift};
    if (!verify_matching(s, m)) {
      throw std::logic_error("assembled matching failed verification");
    }
    out.matching = std::move(m);
    return out;
  }

  inline OrthodoxDecision decide_orthodox_matching(MulTable const& s) {
    return decide_orthodox_matching(s, green_classes(s));
  }

  ////////////////////////////////////////////////////////////////////////
  // Involution search
  ////////////////////////////////////////////////////////////////////////

  enum class SearchStatus { found, exhausted_complete, exhausted_budget };

  inline std::string_view to_string(SearchStatus s) {
    switch (s) {
      case SearchStatus::found:
        return "found";
      case SearchStatus::exhausted_complete:
        return "exhausted_complete";
      case SearchStatus::exhausted_budget:
        return "exhausted_budget";
    }
    return "unknown";
  }

  struct InvolutionSearchOptions {
    std::size_t   cap       = 200;
    std::uint64_t max_nodes = 100'000'000;
    //! Wall-clock limit in milliseconds; 0 means none.
    std::uint64_t max_millis = 0;
  };

  struct InvolutionSearchResult {
    SearchStatus            status;
    std::optional<Matching> matching;
    std::uint64_t           nodes;
  };

  //! Searches for a perfect matching, self-loops allowed, in the graph with
  //! an edge {a, b} whenever a and b are mutually inverse.  The inverse graph
  //! splits into connected components (each inside a D-class) that are
  //! solved independently, always branching on the unassigned element with
  //! the fewest remaining options.  Worst case exponential.
  inline InvolutionSearchResult
  find_involution_matching(MulTable const&         s,
                           InvolutionSearchOptions opts = {}) {
    std::size_t const n = s.size();
    if (n > opts.cap) {
      throw CapExceeded("involution search over " + std::to_string(n)
                        + " elements exceeds the cap of "
                        + std::to_string(opts.cap));
    }
    auto v = all_inverses(s);
    if (std::holds_alternative<HallCertificate>(find_permutation_matching(s, v))) {
      return {SearchStatus::exhausted_complete, std::nullopt, 0};
    }

    std::vector<char>                   self(n, 0);
    std::vector<std::vector<ElementId>> adj(n);
    for (ElementId a = 0; a < n; ++a) {
      for (ElementId b : v[a]) {
        if (b == a) {
          self[a] = 1;
        } else {
          adj[a].push_back(b);
        }
      }
    }

    auto const        start = std::chrono::steady_clock::now();
    std::uint64_t     nodes = 0;
    bool              out_of_budget = false;
    constexpr ElementId kFree = static_cast<ElementId>(-1);
    std::vector<ElementId> partner(n, kFree);

    auto over_budget = [&]() {
      if (nodes >= opts.max_nodes) {
        return true;
      }
      if (opts.max_millis != 0 && (nodes & 1023) == 0) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        return static_cast<std::uint64_t>(ms) >= opts.max_millis;
      }
      return false;
    };

    auto options = [&](ElementId a) {
      std::size_t c = self[a];
      for (ElementId b : adj[a]) {
        c += partner[b] == kFree;
      }
      return c;
    };

    // true if the component is completed
    auto solve = [&](auto&& rec, std::vector<ElementId> const& comp) -> bool {
      ++nodes;
      if (over_budget()) {
        out_of_budget = true;
        return false;
      }
      ElementId   best       = kFree;
      std::size_t best_count = 0;
      for (ElementId a : comp) {
        if (partner[a] != kFree) {
          continue;
        }
        std::size_t c = options(a);
        if (c == 0) {
          return false;
        }
        if (best == kFree || c < best_count) {
          best       = a;
          best_count = c;
        }
      }
      if (best == kFree) {
        return true;
      }
      if (self[best]) {
        partner[best] = best;
        if (rec(rec, comp)) {
          return true;
        }
        partner[best] = kFree;
        if (out_of_budget) {
          return false;
        }
      }
      for (ElementId b : adj[best]) {
        if (partner[b] != kFree) {
          continue;
        }
        partner[best] = b;
        partner[b]    = best;
        if (rec(rec, comp)) {
          return true;
        }
        partner[best] = kFree;
        partner[b]    = kFree;
        if (out_of_budget) {
          return false;
        }
      }
      return false;
    };

    std::vector<char> seen(n, 0);
    for (ElementId root = 0; root < n; ++root) {
      if (seen[root]) {
        continue;
      }
      std::vector<ElementId> comp{root};
      seen[root] = 1;
      for (std::size_t i = 0; i < comp.size(); ++i) {
        for (ElementId b : adj[comp[i]]) {
          if (!seen[b]) {
            seen[b] = 1;
            comp.push_back(b);
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      if (!solve(solve, comp)) {
        return {out_of_budget ? SearchStatus::exhausted_budget
                              : SearchStatus::exhausted_complete,
                std::nullopt,
                nodes};
      }
    }
    Matching m{partner, MatchingKind::involution, Provenance::involution_search};
    if (!verify_matching(s, m)) {
      throw std::logic_error("involution search result failed verification");
    }
    return {SearchStatus::found, std::move(m), nodes};
  }

  ////////////////////////////////////////////////////////////////////////
  // Characterisations of classes by explicit matchings
  ////////////////////////////////////////////////////////////////////////

  //! One equivalence "S is in class X iff map f is a permutation matching",
  //! with both sides evaluated independently.
  struct CharacterizationClause {
    std::string name;
    std::string map;
    bool        class_holds;
    bool        map_is_matching;
    std::string witness;

    bool agrees() const noexcept {
      return class_holds == map_is_matching;
    }
  };

  struct CharacterizationReport {
    std::vector<CharacterizationClause> clauses;

    bool all_agree() const {
      return std::all_of(clauses.begin(), clauses.end(),
                         [](auto const& c) { return c.agrees(); });
    }
  };

  namespace detail {

    inline std::string describe_failure(MulTable const&            s,
                                        std::span<ElementId const> f,
                                        MatchingCheck const&       c) {
      ElementId a = c.element;
      switch (c.failure) {
        case MatchingFailure::none:
          return {};
        case MatchingFailure::not_bijective:
          return "not a bijection: " + s.name(f[a]) + " hit twice";
        case MatchingFailure::not_inverse:
          return "f(" + s.name(a) + ") = " + s.name(f[a])
                 + " is not an inverse of " + s.name(a);
        default:
          return std::string(to_string(c.failure)) + " at " + s.name(a);
      }
    }

  }  // namespace detail

  //! Evaluates, for a finite semigroup:
  //!   completely regular  iff  x -> x^(w-1) is a permutation matching;
  //!   completely simple   iff  x -> x^(w-1) (xyx)^w is, for every y,
  //!                            and does not depend on y;
  //!   group               iff  x -> y^w x^(w-1) y^w is, likewise;
  //!   x = x^(k+2)         iff  x -> x^k is;
  //!   self-inverse        iff  the identity is;
  //!   rectangular band    iff  every permutation is.
  //! The class side comes from `classify` or a direct identity check, the
  //! map side from `verify_matching`.
  inline CharacterizationReport check_characterizations(MulTable const& s,
                                                        std::size_t     k = 1) {
    if (k == 0) {
      throw RangeError("exponent k must be positive");
    }
    std::size_t const n     = s.size();
    auto const        g     = green_classes(s);
    auto const        v     = all_inverses(s);
    auto const        flags = classify(s, g, v);

    std::vector<ElementId> omega(n), omega_m1(n);
    for (ElementId a = 0; a < n; ++a) {
      auto od     = omega_data(s, a);
      omega[a]    = od.omega;
      omega_m1[a] = od.omega_minus_one;
    }

    CharacterizationReport report;
    auto single = [&](std::string name, std::string map, bool lhs,
                      std::vector<ElementId> const& f) {
      auto c = verify_matching(s, f, false);
      report.clauses.push_back(
          {std::move(name), std::move(map), lhs, c.ok(), detail::describe_failure(s, f, c)});
    };
    // every y gives a matching, and all y give the same map
    auto two_variable = [&](std::string name, std::string map, bool lhs,
                            auto&& eval) {
      bool                   all_ok = true, independent = true;
      std::string            witness;
      std::vector<ElementId> first;
      for (ElementId y = 0; y < n; ++y) {
        std::vector<ElementId> f(n);
        for (ElementId x = 0; x < n; ++x) {
          f[x] = eval(x, y);
        }
        auto c = verify_matching(s, f, false);
        if (!c && all_ok) {
          all_ok  = false;
          witness = "y = " + s.name(y) + ": " + detail::describe_failure(s, f, c);
        }
        if (y == 0) {
          first = f;
        } else if (f != first && independent) {
          independent = false;
          if (witness.empty()) {
            witness = "map depends on y: differs at y = " + s.name(y);
          }
        }
      }
      report.clauses.push_back({std::move(name), std::move(map), lhs,
                                all_ok && independent, witness});
    };

    single("completely_regular", "x -> x^(w-1)", flags.completely_regular, omega_m1);

    two_variable("completely_simple", "x -> x^(w-1) (xyx)^w",
                 flags.completely_simple, [&](ElementId x, ElementId y) {
                   return s(omega_m1[x], omega[s(s(x, y), x)]);
                 });

    two_variable("group", "x -> y^w x^(w-1) y^w", flags.group,
                 [&](ElementId x, ElementId y) {
                   return s(s(omega[y], omega_m1[x]), omega[y]);
                 });

    {
      bool identity = true;
      for (ElementId x = 0; x < n && identity; ++x) {
        identity = power(s, x, k + 2) == x;
      }
      std::vector<ElementId> f(n);
      for (ElementId x = 0; x < n; ++x) {
        f[x] = power(s, x, k);
      }
      single("power_identity(k=" + std::to_string(k) + ")",
             "x -> x^" + std::to_string(k), identity, f);
    }

    {
      std::vector<ElementId> id(n);
      std::iota(id.begin(), id.end(), 0);
      single("self_inverse", "x -> x", flags.self_inverse, id);
    }

    {
      bool        every = true;
      std::string witness;
      if (n <= 8) {
        std::vector<ElementId> f(n);
        std::iota(f.begin(), f.end(), 0);
        do {
          auto c = verify_matching(s, f, false);
          if (!c) {
            every   = false;
            witness = detail::describe_failure(s, f, c);
          }
        } while (every && std::next_permutation(f.begin(), f.end()));
      } else {
        // some permutation sends a to b for every pair, so every
        // permutation is a matching iff V(a) = S for all a
        for (ElementId a = 0; a < n && every; ++a) {
          for (ElementId b = 0; b < n && every; ++b) {
            if (!are_mutually_inverse(s, a, b)) {
              every   = false;
              witness = "a permutation sending " + s.name(a) + " to "
                        + s.name(b) + " is not a matching";
            }
          }
        }
      }
      report.clauses.push_back({"rectangular_band", "every permutation",
                                flags.rectangular_band, every, witness});
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Serialization
  ////////////////////////////////////////////////////////////////////////

  //! Header lines "# kind: ..." and "# provenance: ...", then "a -> f(a)"
  //! per element, by name.
  inline void write_matching(std::ostream& os, MulTable const& s, Matching const& m) {
    os << "# kind: " << to_string(m.kind) << '\n';
    os << "# provenance: " << to_string(m.provenance);
    if (!m.formula.empty()) {
      os << " (" << m.formula << ')';
    }
    os << '\n';
    for (ElementId a = 0; a < m.image.size(); ++a) {
      os << s.name(a) << " -> " << s.name(m.image[a]) << '\n';
    }
  }

  inline void write_certificate(std::ostream&          os,
                                MulTable const&        s,
                                HallCertificate const& c) {
    auto list = [&](ElementSet const& x) {
      std::string out = "{";
      for (std::size_t i = 0; i < x.size(); ++i) {
        out += (i == 0 ? "" : ", ") + s.name(x[i]);
      }
      return out + "}";
    };
    os << "# Hall's condition fails: |A| = " << c.subset.size()
       << " > |V(A)| = " << c.image.size() << '\n';
    os << "A = " << list(c.subset) << '\n';
    os << "V(A) = " << list(c.image) << '\n';
  }

}  // namespace semimatch

#endif  // SEMIMATCH_MATCHING_HPP_
