#ifndef SEMIMATCH_REPORT_HPP_
#define SEMIMATCH_REPORT_HPP_

// Analysis reports and their JSON / text renderings.  This header needs
// nlohmann/json (vendor/json.hpp).

#include <chrono>    // for steady_clock
#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <sstream>   // for ostringstream
#include <string>    // for string
#include <utility>   // for pair
#include <variant>   // for get_if
#include <vector>    // for vector

#include <json.hpp>

#include "factors.hpp"
#include "green.hpp"
#include "matching.hpp"
#include "structure.hpp"
#include "table.hpp"

namespace semimatch {

  using Json = nlohmann::ordered_json;

  struct GreenSummary {
    std::size_t r_classes, l_classes, h_classes, d_classes;
  };

  struct DClassReport {
    std::size_t                                        d_class;
    std::size_t                                        size;
    bool                                               regular;
    std::optional<std::pair<std::size_t, std::size_t>> band;  // (m, n)
    std::vector<std::pair<std::size_t, std::size_t>>   subbands;
    std::optional<bool>                                similar;
    std::optional<std::pair<std::size_t, std::size_t>> dissimilar_pair;
    std::optional<std::array<ElementId, 3>>            not_orthodox;
  };

  struct MatchingVerdict {
    bool                           exists = false;
    std::optional<Matching>        matching;
    std::optional<HallCertificate> certificate;
    //! "found", "exhausted_complete", "exhausted_budget", or "skipped".
    std::string             involution_status;
    std::optional<Matching> involution;
  };

  struct AnalysisOptions {
    InvolutionSearchOptions search;
    bool                    timings = false;
  };

  struct AnalysisReport {
    std::size_t                                 size;
    ClassificationFlags                         classification;
    GreenSummary                                green_summary;
    std::vector<DClassReport>                   d_class_reports;
    MatchingVerdict                             matching_verdict;
    std::vector<std::pair<std::string, double>> timings;  // milliseconds
  };

  inline DClassReport make_d_class_report(DClassAnalysis const& dc) {
    DClassReport r{dc.d_class(), dc.factor.element_map.size(), dc.regular(),
                   {}, {}, {}, {}, dc.band_orthodox_violation};
    if (dc.band) {
      r.band = std::make_pair(dc.band->m, dc.band->n);
    }
    if (dc.subbands) {
      for (auto const& u : dc.subbands->subbands) {
        r.subbands.emplace_back(u.m(), u.n());
      }
      r.similar         = dc.similarity->pairwise_similar;
      r.dissimilar_pair = dc.similarity->witness;
    }
    return r;
  }

  inline AnalysisReport analyze(MulTable const& s, AnalysisOptions const& opts = {}) {
    using clock = std::chrono::steady_clock;
    AnalysisReport report;
    report.size = s.size();
    auto t0     = clock::now();
    auto lap    = [&](char const* what) {
      auto t1 = clock::now();
      report.timings.emplace_back(
          what, std::chrono::duration<double, std::milli>(t1 - t0).count());
      t0 = t1;
    };

    auto g = green_classes(s);
    report.green_summary = {g.r_members.size(), g.l_members.size(),
                            g.h_members.size(), g.d_members.size()};
    lap("green");
    auto v                = all_inverses(s);
    report.classification = classify(s, g, v);
    lap("classify");
    for (auto const& dc : analyze_d_classes(s, g)) {
      report.d_class_reports.push_back(make_d_class_report(dc));
    }
    lap("factors");

    auto& verdict = report.matching_verdict;
    auto  outcome = find_permutation_matching(s, v);
    if (auto m = std::get_if<Matching>(&outcome)) {
      verdict.exists = true;
      if (verify_matching(s, *m)) {
        verdict.matching = *m;
      }
    } else {
      verdict.certificate = std::get<HallCertificate>(outcome);
    }
    lap("matching");

    if (!verdict.exists) {
      verdict.involution_status = "exhausted_complete";
    } else if (report.classification.orthodox) {
      auto inv = orthodox_involution(s);
      if (auto m = std::get_if<Matching>(&inv)) {
        verdict.involution_status = "found";
        verdict.involution        = *m;
      } else {
        // cannot happen: a permutation matching exists
        verdict.involution_status = "exhausted_complete";
      }
    } else if (s.size() <= opts.search.cap) {
      auto res                  = find_involution_matching(s, opts.search);
      verdict.involution_status = std::string(to_string(res.status));
      verdict.involution        = res.matching;
    } else {
      verdict.involution_status = "skipped";
    }
    lap("involution");
    if (!opts.timings) {
      report.timings.clear();
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // JSON
  ////////////////////////////////////////////////////////////////////////

  inline Json to_json(ClassificationFlags const& f) {
    return Json{{"regular", f.regular},
                {"orthodox", f.orthodox},
                {"inverse", f.inverse},
                {"band", f.band},
                {"rectangular_band", f.rectangular_band},
                {"completely_regular", f.completely_regular},
                {"completely_simple", f.completely_simple},
                {"combinatorial", f.combinatorial},
                {"group", f.group},
                {"self_inverse", f.self_inverse},
                {"has_zero", f.has_zero}};
  }

  inline Json names_json(MulTable const& s, ElementSet const& x) {
    Json out = Json::array();
    for (ElementId a : x) {
      out.push_back(s.name(a));
    }
    return out;
  }

  inline Json to_json(MulTable const& s, Matching const& m) {
    Json map = Json::array();
    for (ElementId a = 0; a < m.image.size(); ++a) {
      map.push_back(Json::array({s.name(a), s.name(m.image[a])}));
    }
    Json out{{"kind", to_string(m.kind)}, {"provenance", to_string(m.provenance)}};
    if (!m.formula.empty()) {
      out["formula"] = m.formula;
    }
    out["map"] = std::move(map);
    return out;
  }

  inline Json to_json(MulTable const& s, HallCertificate const& c) {
    return Json{{"subset", names_json(s, c.subset)}, {"image", names_json(s, c.image)}};
  }

  inline Json to_json(MulTable const& s, DClassReport const& r) {
    auto pair_json = [](auto const& p) { return Json::array({p.first, p.second}); };
    Json out{{"d_class", r.d_class + 1}, {"size", r.size}, {"regular", r.regular}};
    out["band"] = r.band ? pair_json(*r.band) : Json(nullptr);
    Json sb     = Json::array();
    for (auto const& p : r.subbands) {
      sb.push_back(pair_json(p));
    }
    out["subbands"] = std::move(sb);
    out["similar"]  = r.similar ? Json(*r.similar) : Json(nullptr);
    out["dissimilar_pair"]
        = r.dissimilar_pair
              ? Json::array({r.dissimilar_pair->first + 1, r.dissimilar_pair->second + 1})
              : Json(nullptr);
    out["not_orthodox"]
        = r.not_orthodox
              ? Json::array({s.name((*r.not_orthodox)[0]), s.name((*r.not_orthodox)[1]),
                             s.name((*r.not_orthodox)[2])})
              : Json(nullptr);
    return out;
  }

  inline Json to_json(MulTable const& s, AnalysisReport const& r) {
    Json out{{"size", r.size}, {"classification", to_json(r.classification)}};
    out["green_summary"] = Json{{"r_classes", r.green_summary.r_classes},
                                {"l_classes", r.green_summary.l_classes},
                                {"h_classes", r.green_summary.h_classes},
                                {"d_classes", r.green_summary.d_classes}};
    Json dcs = Json::array();
    for (auto const& d : r.d_class_reports) {
      dcs.push_back(to_json(s, d));
    }
    out["d_class_reports"] = std::move(dcs);
    auto const& mv         = r.matching_verdict;
    out["matching_verdict"] = Json{
        {"exists", mv.exists},
        {"matching", mv.matching ? to_json(s, *mv.matching) : Json(nullptr)},
        {"certificate", mv.certificate ? to_json(s, *mv.certificate) : Json(nullptr)},
        {"involution_status", mv.involution_status},
        {"involution", mv.involution ? to_json(s, *mv.involution) : Json(nullptr)}};
    if (!r.timings.empty()) {
      Json t = Json::object();
      for (auto const& [k, ms] : r.timings) {
        t[k] = ms;
      }
      out["timings"] = std::move(t);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text
  ////////////////////////////////////////////////////////////////////////

  inline std::string to_text(MulTable const& s, AnalysisReport const& r) {
    std::ostringstream os;
    auto               yn = [](bool b) { return b ? "yes" : "no"; };
    auto const&        f  = r.classification;
    os << "elements: " << r.size << '\n';
    os << "classification:\n"
       << "  regular: " << yn(f.regular) << "\n  orthodox: " << yn(f.orthodox)
       << "\n  inverse: " << yn(f.inverse) << "\n  band: " << yn(f.band)
       << "\n  rectangular_band: " << yn(f.rectangular_band)
       << "\n  completely_regular: " << yn(f.completely_regular)
       << "\n  completely_simple: " << yn(f.completely_simple)
       << "\n  combinatorial: " << yn(f.combinatorial)
       << "\n  group: " << yn(f.group) << "\n  self_inverse: " << yn(f.self_inverse)
       << "\n  has_zero: " << yn(f.has_zero) << '\n';
    auto const& gs = r.green_summary;
    os << "green: " << gs.r_classes << " R, " << gs.l_classes << " L, "
       << gs.h_classes << " H, " << gs.d_classes << " D\n";
    os << "d-classes:\n";
    for (auto const& d : r.d_class_reports) {
      os << "  D" << d.d_class + 1 << ": " << d.size << " elements";
      if (!d.regular) {
        os << ", not regular\n";
        continue;
      }
      os << ", band " << d.band->first << "x" << d.band->second;
      if (d.not_orthodox) {
        os << ", band not orthodox\n";
        continue;
      }
      os << ", subbands";
      for (auto const& [m, n] : d.subbands) {
        os << ' ' << m << 'x' << n;
      }
      os << ", " << (*d.similar ? "similar" : "not similar") << '\n';
    }
    auto const& mv = r.matching_verdict;
    os << "permutation matching: " << (mv.exists ? "exists" : "none") << '\n';
    if (mv.certificate) {
      write_certificate(os, s, *mv.certificate);
    }
    os << "involution matching: " << mv.involution_status << '\n';
    for (auto const& [k, ms] : r.timings) {
      os << "time " << k << ": " << ms << " ms\n";
    }
    return os.str();
  }

}  // namespace semimatch

#endif  // SEMIMATCH_REPORT_HPP_
