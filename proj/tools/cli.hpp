#ifndef SEMIMATCH_TOOLS_CLI_HPP_
#define SEMIMATCH_TOOLS_CLI_HPP_

// Command implementations for semigroup-match.  Each command writes to the
// given streams and returns the process exit code, so they can be driven
// in-process by tests.

#include <cstdint>   // for uint64_t
#include <fstream>   // for ifstream, ofstream
#include <optional>  // for optional
#include <ostream>   // for ostream
#include <sstream>   // for ostringstream
#include <string>    // for string
#include <vector>    // for vector

#include "semimatch/report.hpp"
#include "semimatch/semimatch.hpp"

namespace semimatch::cli {

  enum ExitCode : int { kFound = 0, kAbsent = 1, kInputError = 2, kInconclusive = 3 };

  struct GlobalOptions {
    bool          json      = false;
    std::uint64_t budget_ms = 0;
    //! Overrides every size cap (generation, search, enumeration).
    std::optional<std::size_t> cap;
    bool                       timings = false;
  };

  enum class Method { automatic, hall, orthodox, brute };

  struct MatchingOptions {
    bool                         involution = false;
    std::optional<std::uint64_t> count;
    Method                       method = Method::automatic;
  };

  inline std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  inline MulTable load_table(std::string const& path) {
    return parse_table(read_file(path));
  }

  inline InvolutionSearchOptions search_options(GlobalOptions const& g) {
    InvolutionSearchOptions o;
    o.max_millis = g.budget_ms;
    if (g.cap) {
      o.cap = *g.cap;
    }
    return o;
  }

  ////////////////////////////////////////////////////////////////////////
  // analyze
  ////////////////////////////////////////////////////////////////////////

  inline int cmd_analyze(std::string const&   path,
                         GlobalOptions const& g,
                         std::ostream&        out,
                         std::ostream&        err) {
    try {
      auto s      = load_table(path);
      auto report = analyze(s, {search_options(g), g.timings});
      if (g.json) {
        out << to_json(s, report).dump(2) << '\n';
      } else {
        out << to_text(s, report);
      }
      return kFound;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return kInputError;
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // matching
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    struct MatchingResult {
      int                            code;
      std::optional<Matching>        matching;
      std::optional<HallCertificate> certificate;
      std::string                    note;
    };

    inline void emit(MulTable const&       s,
                     MatchingResult const& r,
                     GlobalOptions const&  g,
                     std::ostream&         out) {
      if (g.json) {
        Json j{{"status", r.code == kFound     ? "found"
                          : r.code == kAbsent ? "absent"
                                              : "inconclusive"}};
        j["matching"]    = r.matching ? to_json(s, *r.matching) : Json(nullptr);
        j["certificate"] = r.certificate ? to_json(s, *r.certificate) : Json(nullptr);
        j["note"]        = r.note;
        out << j.dump(2) << '\n';
        return;
      }
      if (!r.note.empty()) {
        out << "# " << r.note << '\n';
      }
      if (r.matching) {
        write_matching(out, s, *r.matching);
      }
      if (r.certificate) {
        write_certificate(out, s, *r.certificate);
      }
    }

    inline MatchingResult from_outcome(MatchingOrCertificate const& o) {
      if (auto m = std::get_if<Matching>(&o)) {
        return {kFound, *m, std::nullopt, {}};
      }
      return {kAbsent, std::nullopt, std::get<HallCertificate>(o), {}};
    }

    inline MatchingResult involution(MulTable const&        s,
                                     MatchingOptions const& opts,
                                     GlobalOptions const&   g) {
      bool use_orthodox = opts.method == Method::orthodox
                          || (opts.method == Method::automatic && classify(s).orthodox);
      if (use_orthodox) {
        auto r = orthodox_involution(s);
        if (auto m = std::get_if<Matching>(&r)) {
          return {kFound, *m, std::nullopt, {}};
        }
        auto const& u = std::get<UnequalClasses>(r);
        return {kAbsent, std::nullopt, HallCertificate{u.gamma_class, u.inverse_set},
                "a gamma-class and its inverse set differ in size"};
      }
      auto res = find_involution_matching(s, search_options(g));
      switch (res.status) {
        case SearchStatus::found:
          return {kFound, res.matching, std::nullopt, {}};
        case SearchStatus::exhausted_complete: {
          auto o = find_permutation_matching(s);
          auto r = MatchingResult{kAbsent, std::nullopt, std::nullopt,
                                  "exhausted(complete): no involution matching"};
          if (auto c = std::get_if<HallCertificate>(&o)) {
            r.certificate = *c;
          }
          return r;
        }
        case SearchStatus::exhausted_budget:
          break;
      }
      return {kInconclusive, std::nullopt, std::nullopt,
              "exhausted(budget) after " + std::to_string(res.nodes) + " nodes"};
    }

  }  // namespace detail

  inline int cmd_matching(std::string const&     path,
                          MatchingOptions const& opts,
                          GlobalOptions const&   g,
                          std::ostream&          out,
                          std::ostream&          err) {
    try {
      auto s = load_table(path);
      if (opts.count) {
        auto c = count_permutation_matchings(s, *opts.count, g.cap.value_or(20));
        if (g.json) {
          out << Json{{"count", c.count}, {"at_limit", c.at_limit}}.dump(2) << '\n';
        } else {
          out << "count " << (c.at_limit ? ">= " : "= ") << c.count << '\n';
        }
        return c.count > 0 ? kFound : kAbsent;
      }

      detail::MatchingResult r;
      if (opts.involution) {
        r = detail::involution(s, opts, g);
      } else {
        switch (opts.method) {
          case Method::automatic: {
            auto gr = green_classes(s);
            if (classify(s, gr, all_inverses(s)).orthodox) {
              auto d = decide_orthodox_matching(s, gr);
              if (d.exists) {
                r = {kFound, d.matching, std::nullopt, {}};
              } else {
                r = detail::from_outcome(find_permutation_matching(s));
                for (auto const& dv : d.d_classes) {
                  if (!dv.similarity.pairwise_similar) {
                    auto [i, j] = *dv.similarity.witness;
                    r.note = "D-class " + std::to_string(dv.d_class + 1)
                             + ": subbands " + std::to_string(i + 1) + " and "
                             + std::to_string(j + 1) + " are not similar";
                    break;
                  }
                }
              }
            } else {
              r = detail::from_outcome(find_permutation_matching(s));
            }
            break;
          }
          case Method::hall:
            r = detail::from_outcome(find_permutation_matching(s));
            break;
          case Method::orthodox: {
            auto o = orthodox_involution(s);
            if (auto m = std::get_if<Matching>(&o)) {
              r = {kFound, *m, std::nullopt, {}};
            } else {
              auto const& u = std::get<UnequalClasses>(o);
              r = {kAbsent, std::nullopt, HallCertificate{u.gamma_class, u.inverse_set},
                   "a gamma-class and its inverse set differ in size"};
            }
            break;
          }
          case Method::brute: {
            std::size_t lim = g.cap.value_or(20);
            if (auto m = first_matching_by_enumeration(s, lim)) {
              r = {kFound, *m, std::nullopt, {}};
            } else {
              auto hb = hall_brute_force(s, lim);
              HallCertificate c;
              if (hb.violating) {
                c.subset = *hb.violating;
                c.image  = inverses_of_set(s, c.subset);
              }
              r = {kAbsent, std::nullopt, c, {}};
            }
            break;
          }
        }
      }
      if (r.matching && !verify_matching(s, *r.matching)) {
        err << "error: internal matching failed verification\n";
        return kInputError;
      }
      detail::emit(s, r, g, out);
      return r.code;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return kInputError;
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // factors
  ////////////////////////////////////////////////////////////////////////

  inline int cmd_factors(std::string const&   path,
                         GlobalOptions const& g,
                         std::ostream&        out,
                         std::ostream&        err) {
    try {
      auto       s        = load_table(path);
      auto       gr       = green_classes(s);
      auto       analyses = analyze_d_classes(s, gr);
      auto const orthodox = classify(s, gr, all_inverses(s)).orthodox;
      if (g.json) {
        Json j{{"orthodox", orthodox}};
        Json dcs = Json::array();
        for (auto const& dc : analyses) {
          auto rep          = to_json(s, make_d_class_report(dc));
          rep["egg_box"]    = render_egg_box(s, dc);
          dcs.push_back(std::move(rep));
        }
        j["d_classes"] = std::move(dcs);
        out << j.dump(2) << '\n';
        return kFound;
      }
      if (!orthodox) {
        out << "# semigroup is not orthodox; subband sections describe each "
               "H-quotient band on its own\n";
      }
      for (auto const& dc : analyses) {
        out << "D-class " << dc.d_class() + 1 << ": " << dc.factor.element_map.size()
            << " element(s)";
        if (!dc.regular()) {
          out << ", not regular\n" << render_egg_box(s, dc);
          continue;
        }
        out << ", " << dc.band->m << " R-class(es) x " << dc.band->n
            << " L-class(es)\n";
        out << render_egg_box(s, dc);
        if (dc.band_orthodox_violation) {
          auto const& w = *dc.band_orthodox_violation;
          out << "  subbands: omitted, NotOrthodox: idempotents " << s.name(w[0])
              << " and " << s.name(w[1]) << " multiply into the H-class of "
              << s.name(w[2]) << ", which has no idempotent\n";
          continue;
        }
        out << "  subbands:";
        auto const& sub = dc.subbands->subbands;
        for (std::size_t i = 0; i < sub.size(); ++i) {
          out << " U" << i + 1 << " " << sub[i].m() << "x" << sub[i].n();
        }
        out << '\n';
        if (dc.similarity->pairwise_similar) {
          out << "  verdict: similar\n";
        } else {
          auto [i, j] = *dc.similarity->witness;
          out << "  verdict: not similar (U" << i + 1 << ", U" << j + 1 << "): "
              << sub[i].m() << "*" << sub[j].n() << " != " << sub[j].m() << "*"
              << sub[i].n() << '\n';
        }
      }
      return kFound;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return kInputError;
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // gen
  ////////////////////////////////////////////////////////////////////////

  inline std::size_t parse_count(std::string const& s) {
    std::size_t value = 0;
    auto [ptr, ec]    = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw Error("expected a non-negative integer, found '" + s + "'");
    }
    return value;
  }

  //! `args` is one of: rect M N | rees MATRIXFILE | tn N | product F1 F2.
  inline MulTable generate(std::vector<std::string> const& args, GlobalOptions const& g) {
    auto need = [&](std::size_t k) {
      if (args.size() != k + 1) {
        throw Error("gen " + args[0] + " expects " + std::to_string(k)
                    + " argument(s)");
      }
    };
    if (args.empty()) {
      throw Error("gen expects a kind: rect, rees, tn, or product");
    }
    auto const& kind = args[0];
    if (kind == "rect") {
      need(2);
      auto m = parse_count(args[1]), n = parse_count(args[2]);
      if (m * n > g.cap.value_or(kDefaultCap)) {
        throw CapExceeded("rectangular band exceeds the element cap");
      }
      return rectangular_band(m, n);
    }
    if (kind == "rees") {
      need(1);
      auto p = parse_structure_matrix(read_file(args[1]));
      if (p.rows() * p.cols() + 1 > g.cap.value_or(kDefaultCap)) {
        throw CapExceeded("Rees matrix semigroup exceeds the element cap");
      }
      return rees_matrix(p);
    }
    if (kind == "tn") {
      need(1);
      return full_transformation(parse_count(args[1]), g.cap.value_or(256));
    }
    if (kind == "product") {
      need(2);
      return direct_product(load_table(args[1]), load_table(args[2]),
                            g.cap.value_or(kDefaultCap));
    }
    throw Error("unknown gen kind '" + kind + "'");
  }

  inline int cmd_gen(std::vector<std::string> const& args,
                     std::optional<std::string> const& out_path,
                     GlobalOptions const&              g,
                     std::ostream&                     out,
                     std::ostream&                     err) {
    try {
      auto text = render_table(generate(args, g));
      if (out_path) {
        std::ofstream f(*out_path, std::ios::binary);
        if (!f) {
          throw Error("cannot write " + *out_path);
        }
        f << text;
      } else {
        out << text;
      }
      return kFound;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return kInputError;
    }
  }

}  // namespace semimatch::cli

#endif  // SEMIMATCH_TOOLS_CLI_HPP_
