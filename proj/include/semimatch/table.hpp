#ifndef SEMIMATCH_TABLE_HPP_
#define SEMIMATCH_TABLE_HPP_

#include <array>          // for array
#include <charconv>       // for from_chars
#include <cstddef>        // for size_t
#include <cstdint>        // for uint8_t
#include <optional>       // for optional
#include <span>           // for span
#include <sstream>        // for ostringstream
#include <string>         // for string
#include <string_view>    // for string_view
#include <unordered_set>  // for unordered_set
#include <utility>        // for move
#include <vector>         // for vector

#include "exception.hpp"

namespace semimatch {

  namespace detail {

    // Light's associativity test.  The set of b with (xb)y = x(by) for all
    // x, y is closed under the table product, so checking b over a
    // generating set checks every triple.  Generators are chosen greedily in
    // index order; the closure is grown by right multiplication only, which
    // stays inside that set without assuming associativity.
    inline std::optional<std::array<ElementId, 3>>
    find_nonassociative_triple(std::size_t n, std::span<ElementId const> prod) {
      auto at = [&](ElementId a, ElementId b) { return prod[a * n + b]; };

      std::vector<ElementId> gens;
      std::vector<ElementId> closure;
      std::vector<char>      seen(n, 0);
      // closure[i] has been multiplied by gens[0 .. done[i])
      std::vector<std::size_t> done;

      auto saturate = [&]() {
        for (std::size_t i = 0; i < closure.size(); ++i) {
          for (; done[i] < gens.size(); ++done[i]) {
            ElementId y = at(closure[i], gens[done[i]]);
            if (!seen[y]) {
              seen[y] = 1;
              closure.push_back(y);
              done.push_back(0);
            }
          }
        }
      };

      for (ElementId a = 0; a < n; ++a) {
        if (seen[a]) {
          continue;
        }
        gens.push_back(a);
        seen[a] = 1;
        closure.push_back(a);
        done.push_back(0);
        // old elements must now also be multiplied by the new generator
        saturate();
      }

      for (ElementId g : gens) {
        for (ElementId x = 0; x < n; ++x) {
          ElementId xg = at(x, g);
          for (ElementId y = 0; y < n; ++y) {
            if (at(xg, y) != at(x, at(g, y))) {
              return std::array<ElementId, 3>{x, g, y};
            }
          }
        }
      }
      return std::nullopt;
    }

    inline std::string unique_name(std::vector<std::string> const& taken,
                                   std::string                     base) {
      std::unordered_set<std::string> s(taken.begin(), taken.end());
      while (s.count(base) != 0) {
        base += '\'';
      }
      return base;
    }

  }  // namespace detail

  //! A finite semigroup given by its multiplication table.
  //!
  //! Elements are the indices `0, ..., n - 1`.  Names are optional display
  //! metadata.  The constructor range-checks every entry and verifies
  //! associativity, so every `MulTable` in existence is a semigroup.  Objects
  //! are immutable after construction.
  class MulTable {
   public:
    MulTable(std::size_t              n,
             std::vector<ElementId>   products,
             std::vector<std::string> names = {})
        : _n(n), _products(std::move(products)), _names(std::move(names)) {
      if (_n == 0) {
        throw RangeError("a semigroup must have at least one element");
      }
      if (_products.size() != _n * _n) {
        throw RangeError("expected " + std::to_string(_n * _n)
                         + " table entries, found "
                         + std::to_string(_products.size()));
      }
      for (std::size_t i = 0; i < _products.size(); ++i) {
        if (_products[i] >= _n) {
          throw RangeError("entry " + std::to_string(_products[i]) + " at row "
                           + std::to_string(i / _n) + ", column "
                           + std::to_string(i % _n) + " is not in [0, "
                           + std::to_string(_n) + ")");
        }
      }
      if (!_names.empty()) {
        if (_names.size() != _n) {
          throw RangeError("expected " + std::to_string(_n) + " names, found "
                           + std::to_string(_names.size()));
        }
        std::unordered_set<std::string> distinct(_names.begin(), _names.end());
        if (distinct.size() != _n) {
          throw RangeError("element names must be distinct");
        }
      }
      if (auto w = detail::find_nonassociative_triple(_n, _products)) {
        throw NotAssociative(*w);
      }
    }

    std::size_t size() const noexcept {
      return _n;
    }

    ElementId operator()(ElementId a, ElementId b) const noexcept {
      return _products[a * _n + b];
    }

    ElementId product(ElementId a, ElementId b) const noexcept {
      return _products[a * _n + b];
    }

    std::span<ElementId const> row(ElementId a) const noexcept {
      return std::span<ElementId const>(_products).subspan(a * _n, _n);
    }

    std::vector<ElementId> const& products() const noexcept {
      return _products;
    }

    bool has_names() const noexcept {
      return !_names.empty();
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    //! The display name of `a`: its given name, or its index.
    std::string name(ElementId a) const {
      return _names.empty() ? std::to_string(a) : _names[a];
    }

    std::optional<ElementId> find(std::string_view nm) const {
      for (ElementId a = 0; a < _n; ++a) {
        if (name(a) == nm) {
          return a;
        }
      }
      return std::nullopt;
    }

    bool is_idempotent(ElementId a) const noexcept {
      return product(a, a) == a;
    }

    bool operator==(MulTable const& that) const = default;

   private:
    std::size_t              _n;
    std::vector<ElementId>   _products;
    std::vector<std::string> _names;
  };

  //! A boolean sandwich matrix `p[lambda][i]`: rows are indexed by L-class
  //! labels, columns by R-class labels.
  class BoolStructureMatrix {
   public:
    BoolStructureMatrix(std::size_t rows, std::size_t cols)
        : _rows(rows), _cols(cols), _entries(rows * cols, 0) {}

    BoolStructureMatrix(std::vector<std::vector<int>> const& rows)
        : BoolStructureMatrix(rows.size(), rows.empty() ? 0 : rows[0].size()) {
      for (std::size_t r = 0; r < _rows; ++r) {
        if (rows[r].size() != _cols) {
          throw RangeError("structure matrix rows must have equal length");
        }
        for (std::size_t c = 0; c < _cols; ++c) {
          set(r, c, rows[r][c] != 0);
        }
      }
    }

    std::size_t rows() const noexcept {
      return _rows;
    }

    std::size_t cols() const noexcept {
      return _cols;
    }

    bool operator()(std::size_t lambda, std::size_t i) const noexcept {
      return _entries[lambda * _cols + i] != 0;
    }

    void set(std::size_t lambda, std::size_t i, bool value) noexcept {
      _entries[lambda * _cols + i] = value ? 1 : 0;
    }

    //! Every row and every column has a true entry.
    bool is_regular() const noexcept {
      if (_rows == 0 || _cols == 0) {
        return false;
      }
      for (std::size_t r = 0; r < _rows; ++r) {
        bool any = false;
        for (std::size_t c = 0; c < _cols; ++c) {
          any = any || (*this)(r, c);
        }
        if (!any) {
          return false;
        }
      }
      for (std::size_t c = 0; c < _cols; ++c) {
        bool any = false;
        for (std::size_t r = 0; r < _rows; ++r) {
          any = any || (*this)(r, c);
        }
        if (!any) {
          return false;
        }
      }
      return true;
    }

    bool operator==(BoolStructureMatrix const&) const = default;

   private:
    std::size_t               _rows;
    std::size_t               _cols;
    std::vector<std::uint8_t> _entries;
  };

  ////////////////////////////////////////////////////////////////////////
  // Text formats
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    inline std::vector<std::string_view> split_ws(std::string_view line) {
      std::vector<std::string_view> out;
      std::size_t                   i = 0;
      while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
          ++i;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') {
          ++j;
        }
        if (j > i) {
          out.push_back(line.substr(i, j - i));
        }
        i = j;
      }
      return out;
    }

    inline std::size_t parse_index(std::string_view tok, std::size_t line) {
      std::size_t value = 0;
      auto [ptr, ec]    = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw SyntaxError(line,
                          "expected a non-negative integer, found '"
                              + std::string(tok) + "'");
      }
      return value;
    }

    struct Line {
      std::size_t      number;
      std::string_view text;
    };

    // Splits into lines, dropping '\r', blank lines, and '#' comments.  A
    // "# names:" comment is returned separately.
    inline std::vector<Line> content_lines(std::string_view               text,
                                           std::optional<std::string_view>* names) {
      std::vector<Line> out;
      std::size_t       number = 0;
      std::size_t       pos    = 0;
      while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
          end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        ++number;
        if (!line.empty() && line.back() == '\r') {
          line.remove_suffix(1);
        }
        auto first = line.find_first_not_of(" \t");
        if (first != std::string_view::npos) {
          line.remove_prefix(first);
          if (line.front() == '#') {
            constexpr std::string_view tag = "names:";
            auto                       body = line.substr(1);
            body.remove_prefix(std::min(body.find_first_not_of(" \t"), body.size()));
            if (names != nullptr && body.substr(0, tag.size()) == tag) {
              *names = body.substr(tag.size());
            }
          } else {
            out.push_back({number, line});
          }
        }
        if (end == text.size()) {
          break;
        }
        pos = end + 1;
      }
      return out;
    }

  }  // namespace detail

  //! Parses the table file format: optional '#' comments, an optional
  //! "# names: x y z" line, the element count n, then n rows of n
  //! whitespace separated 0-based entries.
  inline MulTable parse_table(std::string_view text) {
    std::optional<std::string_view> names_line;
    auto lines = detail::content_lines(text, &names_line);
    if (lines.empty()) {
      throw SyntaxError(1, "missing element count");
    }
    auto head = detail::split_ws(lines[0].text);
    if (head.size() != 1) {
      throw SyntaxError(lines[0].number, "expected the element count alone");
    }
    std::size_t n = detail::parse_index(head[0], lines[0].number);
    if (n == 0) {
      throw SyntaxError(lines[0].number, "element count must be positive");
    }
    if (lines.size() != n + 1) {
      throw SyntaxError(lines.back().number,
                        "expected " + std::to_string(n) + " rows, found "
                            + std::to_string(lines.size() - 1));
    }
    std::vector<ElementId> products;
    products.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      auto const& ln   = lines[r + 1];
      auto        toks = detail::split_ws(ln.text);
      if (toks.size() != n) {
        throw SyntaxError(ln.number,
                          "expected " + std::to_string(n) + " entries, found "
                              + std::to_string(toks.size()));
      }
      for (std::size_t c = 0; c < n; ++c) {
        std::size_t v = detail::parse_index(toks[c], ln.number);
        if (v >= n) {
          throw RangeError("line " + std::to_string(ln.number) + ": entry "
                           + std::to_string(v) + " is not in [0, "
                           + std::to_string(n) + ")");
        }
        products.push_back(v);
      }
    }
    std::vector<std::string> names;
    if (names_line) {
      for (auto tok : detail::split_ws(*names_line)) {
        names.emplace_back(tok);
      }
      if (names.size() != n) {
        throw SyntaxError(1,
                          "names line lists " + std::to_string(names.size())
                              + " names for " + std::to_string(n)
                              + " elements");
      }
      std::unordered_set<std::string> distinct(names.begin(), names.end());
      if (distinct.size() != n) {
        throw SyntaxError(1, "element names must be distinct");
      }
    }
    return MulTable(n, std::move(products), std::move(names));
  }

  //! Canonical text rendering; `parse_table(render_table(t)) == t`.
  inline std::string render_table(MulTable const& t) {
    std::ostringstream os;
    if (t.has_names()) {
      os << "# names:";
      for (auto const& nm : t.names()) {
        os << ' ' << nm;
      }
      os << '\n';
    }
    os << t.size() << '\n';
    for (ElementId a = 0; a < t.size(); ++a) {
      for (ElementId b = 0; b < t.size(); ++b) {
        os << (b == 0 ? "" : " ") << t(a, b);
      }
      os << '\n';
    }
    return os.str();
  }

  //! Structure matrix format: "rows cols" then `rows` lines of 0/1 entries.
  inline BoolStructureMatrix parse_structure_matrix(std::string_view text) {
    auto lines = detail::content_lines(text, nullptr);
    if (lines.empty()) {
      throw SyntaxError(1, "missing 'rows cols' header");
    }
    auto head = detail::split_ws(lines[0].text);
    if (head.size() != 2) {
      throw SyntaxError(lines[0].number, "expected 'rows cols'");
    }
    std::size_t rows = detail::parse_index(head[0], lines[0].number);
    std::size_t cols = detail::parse_index(head[1], lines[0].number);
    if (rows == 0 || cols == 0) {
      throw SyntaxError(lines[0].number, "dimensions must be positive");
    }
    if (lines.size() != rows + 1) {
      throw SyntaxError(lines.back().number,
                        "expected " + std::to_string(rows) + " matrix rows");
    }
    BoolStructureMatrix p(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      auto toks = detail::split_ws(lines[r + 1].text);
      if (toks.size() != cols) {
        throw SyntaxError(lines[r + 1].number,
                          "expected " + std::to_string(cols) + " entries");
      }
      for (std::size_t c = 0; c < cols; ++c) {
        std::size_t v = detail::parse_index(toks[c], lines[r + 1].number);
        if (v > 1) {
          throw SyntaxError(lines[r + 1].number, "entries must be 0 or 1");
        }
        p.set(r, c, v == 1);
      }
    }
    return p;
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  //! The combinatorial Rees matrix semigroup over `p` with zero.  Element
  //! (i, lambda) for R-label i < p.cols() and L-label lambda < p.rows() has
  //! index `i * p.rows() + lambda`; the zero is last.  Names are 1-based
  //! "(i,lambda)" and "0".
  inline MulTable rees_matrix(BoolStructureMatrix const& p) {
    if (!p.is_regular()) {
      throw NotRegularMatrix(
          "structure matrix has an all-zero row or column");
    }
    std::size_t const rows = p.rows(), cols = p.cols();
    std::size_t const n    = rows * cols + 1;
    ElementId const   zero = n - 1;
    std::vector<ElementId> prod(n * n, zero);
    for (std::size_t i = 0; i < cols; ++i) {
      for (std::size_t lam = 0; lam < rows; ++lam) {
        for (std::size_t k = 0; k < cols; ++k) {
          if (!p(lam, k)) {
            continue;
          }
          for (std::size_t mu = 0; mu < rows; ++mu) {
            prod[(i * rows + lam) * n + k * rows + mu] = i * rows + mu;
          }
        }
      }
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < cols; ++i) {
      for (std::size_t lam = 0; lam < rows; ++lam) {
        names.push_back("(" + std::to_string(i + 1) + ","
                        + std::to_string(lam + 1) + ")");
      }
    }
    names.emplace_back("0");
    return MulTable(n, std::move(prod), std::move(names));
  }

  //! The m x n rectangular band, (i,j)(k,l) = (i,l); index `i * n + j`.
  inline MulTable rectangular_band(std::size_t m, std::size_t n) {
    if (m == 0 || n == 0) {
      throw RangeError("rectangular band dimensions must be positive");
    }
    std::size_t const      size = m * n;
    std::vector<ElementId> prod(size * size);
    for (std::size_t a = 0; a < size; ++a) {
      for (std::size_t b = 0; b < size; ++b) {
        prod[a * size + b] = (a / n) * n + b % n;
      }
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        names.push_back("(" + std::to_string(i + 1) + ","
                        + std::to_string(j + 1) + ")");
      }
    }
    return MulTable(size, std::move(prod), std::move(names));
  }

  //! The full transformation semigroup on n points.  Maps are listed in
  //! lexicographic order of their image lists, and the product applies the
  //! left factor first: x(fg) = (xf)g.  The default cap of 256 elements
  //! admits degree at most 4.
  inline MulTable full_transformation(std::size_t n,
                                      std::size_t max_elements = 256) {
    if (n == 0) {
      throw RangeError("degree must be positive");
    }
    std::size_t size = 1;
    for (std::size_t i = 0; i < n; ++i) {
      size *= n;
      if (size > max_elements) {
        throw CapExceeded("T_" + std::to_string(n) + " exceeds the cap of "
                          + std::to_string(max_elements) + " elements");
      }
    }
    // image lists, f[x] at maps[idx * n + x]
    std::vector<std::size_t> maps(size * n);
    for (std::size_t idx = 0; idx < size; ++idx) {
      std::size_t v = idx;
      for (std::size_t x = n; x-- > 0;) {
        maps[idx * n + x] = v % n;
        v /= n;
      }
    }
    std::vector<ElementId> prod(size * size);
    for (std::size_t f = 0; f < size; ++f) {
      for (std::size_t g = 0; g < size; ++g) {
        std::size_t idx = 0;
        for (std::size_t x = 0; x < n; ++x) {
          idx = idx * n + maps[g * n + maps[f * n + x]];
        }
        prod[f * size + g] = idx;
      }
    }
    std::vector<std::string> names;
    for (std::size_t f = 0; f < size; ++f) {
      std::string s = "[";
      for (std::size_t x = 0; x < n; ++x) {
        s += (x == 0 ? "" : ",") + std::to_string(maps[f * n + x] + 1);
      }
      names.push_back(s + "]");
    }
    return MulTable(size, std::move(prod), std::move(names));
  }

  //! S x T with (a, b) at index `a * |T| + b`.
  inline MulTable direct_product(MulTable const& s,
                                 MulTable const& t,
                                 std::size_t     cap = kDefaultCap) {
    std::size_t const ns = s.size(), nt = t.size(), n = ns * nt;
    if (n > cap) {
      throw CapExceeded("direct product has " + std::to_string(n)
                        + " elements, cap is " + std::to_string(cap));
    }
    std::vector<ElementId> prod(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        prod[a * n + b] = s(a / nt, b / nt) * nt + t(a % nt, b % nt);
      }
    }
    std::vector<std::string> names;
    for (std::size_t a = 0; a < n; ++a) {
      names.push_back("(" + s.name(a / nt) + "," + t.name(a % nt) + ")");
    }
    return MulTable(n, std::move(prod), std::move(names));
  }

  //! The cyclic group of order n, g^i g^j = g^(i+j mod n).
  inline MulTable cyclic_group(std::size_t n) {
    if (n == 0) {
      throw RangeError("group order must be positive");
    }
    std::vector<ElementId> prod(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        prod[i * n + j] = (i + j) % n;
      }
    }
    std::vector<std::string> names{"e"};
    for (std::size_t i = 1; i < n; ++i) {
      names.push_back(i == 1 ? "g" : "g^" + std::to_string(i));
    }
    return MulTable(n, std::move(prod), std::move(names));
  }

  //! The monogenic semigroup <a | a^(index + period) = a^index>; element k
  //! is a^(k+1).
  inline MulTable monogenic(std::size_t index, std::size_t period) {
    if (index == 0 || period == 0) {
      throw RangeError("index and period must be positive");
    }
    std::size_t const n   = index + period - 1;
    auto              red = [&](std::size_t e) {  // exponent -> exponent
      return e < index + period ? e : index + (e - index) % period;
    };
    std::vector<ElementId> prod(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        prod[i * n + j] = red(i + j + 2) - 1;
      }
    }
    std::vector<std::string> names;
    for (std::size_t k = 1; k <= n; ++k) {
      names.push_back(k == 1 ? "a" : "a^" + std::to_string(k));
    }
    return MulTable(n, std::move(prod), std::move(names));
  }

  //! S with a new absorbing element appended as the last index.
  inline MulTable adjoin_zero(MulTable const& s) {
    std::size_t const      n = s.size() + 1, z = s.size();
    std::vector<ElementId> prod(n * n, z);
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (std::size_t b = 0; b < s.size(); ++b) {
        prod[a * n + b] = s(a, b);
      }
    }
    std::vector<std::string> names;
    if (s.has_names()) {
      names = s.names();
      names.push_back(detail::unique_name(s.names(), "0"));
    }
    return MulTable(n, std::move(prod), std::move(names));
  }

  //! S with a new identity appended as the last index.
  inline MulTable adjoin_identity(MulTable const& s) {
    std::size_t const      n = s.size() + 1, one = s.size();
    std::vector<ElementId> prod(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        prod[a * n + b] = a == one ? b : (b == one ? a : s(a, b));
      }
    }
    std::vector<std::string> names;
    if (s.has_names()) {
      names = s.names();
      names.push_back(detail::unique_name(s.names(), "1"));
    }
    return MulTable(n, std::move(prod), std::move(names));
  }

}  // namespace semimatch

#endif  // SEMIMATCH_TABLE_HPP_
