#ifndef SEMIMATCH_STRUCTURE_HPP_
#define SEMIMATCH_STRUCTURE_HPP_

#include <algorithm>  // for set_union, sort
#include <array>      // for array
#include <cstddef>    // for size_t
#include <map>        // for map
#include <optional>   // for optional
#include <span>       // for span
#include <vector>     // for vector

#include "green.hpp"
#include "table.hpp"

namespace semimatch {

  using ElementSet = std::vector<ElementId>;  // sorted, no repeats

  inline ElementSet idempotents(MulTable const& s) {
    ElementSet out;
    for (ElementId a = 0; a < s.size(); ++a) {
      if (s.is_idempotent(a)) {
        out.push_back(a);
      }
    }
    return out;
  }

  inline bool are_mutually_inverse(MulTable const& s, ElementId a, ElementId b) {
    return s(s(a, b), a) == a && s(s(b, a), b) == b;
  }

  //! V(a), the set of b with aba = a and bab = b.
  inline ElementSet inverses_of(MulTable const& s, ElementId a) {
    ElementSet out;
    for (ElementId b = 0; b < s.size(); ++b) {
      if (are_mutually_inverse(s, a, b)) {
        out.push_back(b);
      }
    }
    return out;
  }

  //! V(a) for every a.
  inline std::vector<ElementSet> all_inverses(MulTable const& s) {
    std::vector<ElementSet> v(s.size());
    for (ElementId a = 0; a < s.size(); ++a) {
      for (ElementId b = a; b < s.size(); ++b) {
        if (are_mutually_inverse(s, a, b)) {
          v[a].push_back(b);
          if (b != a) {
            v[b].push_back(a);
          }
        }
      }
    }
    for (auto& x : v) {
      std::sort(x.begin(), x.end());
    }
    return v;
  }

  //! V(A), the union of V(a) over a in A.
  inline ElementSet inverses_of_set(std::span<ElementSet const> v,
                                    std::span<ElementId const>  subset) {
    std::vector<char> mark(v.size(), 0);
    for (ElementId a : subset) {
      for (ElementId b : v[a]) {
        mark[b] = 1;
      }
    }
    ElementSet out;
    for (ElementId b = 0; b < mark.size(); ++b) {
      if (mark[b]) {
        out.push_back(b);
      }
    }
    return out;
  }

  inline ElementSet inverses_of_set(MulTable const&            s,
                                    std::span<ElementId const> subset) {
    return inverses_of_set(all_inverses(s), subset);
  }

  //! The first a with V(a) empty, if any.
  inline std::optional<ElementId>
  find_non_regular(std::vector<ElementSet> const& v) {
    for (ElementId a = 0; a < v.size(); ++a) {
      if (v[a].empty()) {
        return a;
      }
    }
    return std::nullopt;
  }

  //! A pair of idempotents whose product is not idempotent, as {e, f, ef}.
  inline std::optional<std::array<ElementId, 3>>
  find_idempotent_product_violation(MulTable const& s) {
    auto e = idempotents(s);
    for (ElementId x : e) {
      for (ElementId y : e) {
        if (!s.is_idempotent(s(x, y))) {
          return std::array<ElementId, 3>{x, y, s(x, y)};
        }
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Inverse sets and gamma
  ////////////////////////////////////////////////////////////////////////

  //! The inverse sets V(a) of a regular semigroup together with the
  //! relation a gamma b iff V(a) = V(b).
  //!
  //! When the semigroup is orthodox the distinct inverse sets are exactly
  //! the gamma-classes, and `v_involution` records the map
  //! V(a) -> V(V(a)) on them.  Since the two partitions coincide in that
  //! case, `v_involution` is indexed by gamma-class.
  struct InverseSets {
    std::vector<ElementSet>  v;
    std::vector<std::size_t> gamma_class;
    std::vector<ElementSet>  gamma_classes;
    //! The distinct sets V(a), in first-seen order of a.
    std::vector<ElementSet> class_list;
    bool                    orthodox = false;
    //! class_list, as a set of sets, equals the set of gamma-classes.
    bool partition_matches_gamma = false;
    //! gamma-class c is sent to the gamma-class equal to V(c); present only
    //! for orthodox semigroups.
    std::optional<std::vector<std::size_t>> v_involution;

    bool is_fixed(std::size_t c) const {
      return v_involution && (*v_involution)[c] == c;
    }
  };

  inline InverseSets gamma_structure(MulTable const& s) {
    InverseSets out;
    out.v = all_inverses(s);
    if (auto a = find_non_regular(out.v)) {
      throw NotRegular(*a);
    }
    std::map<ElementSet, std::size_t> ids;
    out.gamma_class.resize(s.size());
    for (ElementId a = 0; a < s.size(); ++a) {
      auto [it, inserted] = ids.emplace(out.v[a], ids.size());
      out.gamma_class[a]  = it->second;
      if (inserted) {
        out.class_list.push_back(out.v[a]);
        out.gamma_classes.emplace_back();
      }
      out.gamma_classes[it->second].push_back(a);
    }

    {
      auto lhs = out.class_list, rhs = out.gamma_classes;
      std::sort(lhs.begin(), lhs.end());
      std::sort(rhs.begin(), rhs.end());
      out.partition_matches_gamma = lhs == rhs;
    }

    out.orthodox = !find_idempotent_product_violation(s).has_value();
    if (!out.orthodox) {
      return out;
    }
    std::map<ElementSet, std::size_t> class_of_set;
    for (std::size_t c = 0; c < out.gamma_classes.size(); ++c) {
      class_of_set.emplace(out.gamma_classes[c], c);
    }
    std::vector<std::size_t> inv(out.gamma_classes.size());
    for (std::size_t c = 0; c < out.gamma_classes.size(); ++c) {
      ElementId rep = out.gamma_classes[c].front();
      auto      it  = class_of_set.find(out.v[rep]);
      if (it == class_of_set.end()) {
        // cannot happen for orthodox semigroups
        return out;
      }
      inv[c] = it->second;
    }
    for (std::size_t c = 0; c < inv.size(); ++c) {
      if (inv[inv[c]] != c) {
        return out;
      }
    }
    out.v_involution = std::move(inv);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Classification
  ////////////////////////////////////////////////////////////////////////

  struct ClassificationFlags {
    bool regular            = false;
    bool orthodox           = false;
    bool inverse            = false;
    bool band               = false;
    bool rectangular_band   = false;
    bool completely_regular = false;
    bool completely_simple  = false;
    bool combinatorial      = false;
    bool group              = false;
    bool self_inverse       = false;
    bool has_zero           = false;

    bool operator==(ClassificationFlags const&) const = default;
  };

  inline ClassificationFlags classify(MulTable const&                s,
                                      GreenStructure const&          g,
                                      std::vector<ElementSet> const& v) {
    std::size_t const   n = s.size();
    ClassificationFlags f;
    f.regular  = !find_non_regular(v).has_value();
    f.orthodox = f.regular && !find_idempotent_product_violation(s);
    f.inverse  = f.regular
                && std::all_of(v.begin(), v.end(),
                               [](auto const& x) { return x.size() == 1; });

    f.band = true;
    for (ElementId a = 0; a < n && f.band; ++a) {
      f.band = s.is_idempotent(a);
    }
    f.rectangular_band = f.band;
    for (ElementId a = 0; a < n && f.rectangular_band; ++a) {
      for (ElementId b = 0; b < n && f.rectangular_band; ++b) {
        f.rectangular_band = s(s(a, b), a) == a;
      }
    }

    f.completely_regular = true;
    for (ElementId a = 0; a < n && f.completely_regular; ++a) {
      f.completely_regular = g.h_class[a] == g.h_class[s(a, a)];
    }
    f.completely_simple = f.completely_regular && g.d_members.size() == 1;
    f.combinatorial     = is_combinatorial(g);
    f.group             = g.h_members.size() == 1;

    f.self_inverse = true;
    for (ElementId a = 0; a < n && f.self_inverse; ++a) {
      f.self_inverse = s(s(a, a), a) == a;
    }

    for (ElementId z = 0; z < n && !f.has_zero; ++z) {
      bool ok = true;
      for (ElementId x = 0; x < n && ok; ++x) {
        ok = s(z, x) == z && s(x, z) == z;
      }
      f.has_zero = ok;
    }
    return f;
  }

  inline ClassificationFlags classify(MulTable const& s) {
    return classify(s, green_classes(s), all_inverses(s));
  }

  //! An idempotent e with a non-idempotent inverse a, and the idempotents
  //! f = ea and g = ae.  These satisfy gf = a and a R g L e R f L a.
  struct MixedInverseConfiguration {
    ElementId e, f, g, a;
  };

  //! Looks for the configuration above in a regular semigroup that is not
  //! inverse; such a configuration exists in any non-inverse semigroup with
  //! a unique permutation matching.  Every returned witness has had its
  //! relations checked.
  inline std::optional<MixedInverseConfiguration>
  find_mixed_inverse_configuration(MulTable const&       s,
                                   GreenStructure const& gr) {
    auto v = all_inverses(s);
    if (find_non_regular(v)) {
      return std::nullopt;
    }
    if (std::all_of(v.begin(), v.end(), [](auto const& x) { return x.size() == 1; })) {
      return std::nullopt;
    }
    for (ElementId e : idempotents(s)) {
      for (ElementId a : v[e]) {
        if (s.is_idempotent(a)) {
          continue;
        }
        ElementId f = s(e, a), g = s(a, e);
        bool ok = s.is_idempotent(f) && s.is_idempotent(g) && s(g, f) == a
                  && gr.r_class[a] == gr.r_class[g]
                  && gr.l_class[g] == gr.l_class[e]
                  && gr.r_class[e] == gr.r_class[f]
                  && gr.l_class[f] == gr.l_class[a];
        if (ok) {
          return MixedInverseConfiguration{e, f, g, a};
        }
      }
    }
    return std::nullopt;
  }

  inline std::optional<MixedInverseConfiguration>
  find_mixed_inverse_configuration(MulTable const& s) {
    return find_mixed_inverse_configuration(s, green_classes(s));
  }

}  // namespace semimatch

#endif  // SEMIMATCH_STRUCTURE_HPP_
