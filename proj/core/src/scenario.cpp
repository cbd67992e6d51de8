#include "ncgeom/scenario.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <utility>

#include "ncgeom/errors.hpp"
#include "ncgeom/field_parse.hpp"

namespace ncgeom {
namespace {

// One meaningful source line: text with the comment stripped, plus its
// 1-based position in the file.
struct Line {
  std::string text;
  std::size_t number;
};

// A word and the 1-based column where it starts, so errors can point at the
// offending token rather than the whole line.
struct Word {
  std::string text;
  std::size_t column;
};

std::vector<Line> meaningful_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string line(text.substr(start, end - start));
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    bool blank = true;
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    }
    if (!blank) out.push_back({std::move(line), number});
    start = end + 1;
    if (end == text.size()) break;
  }
  return out;
}

std::vector<Word> split_words(const Line& line) {
  std::vector<Word> out;
  std::size_t k = 0;
  while (k < line.text.size()) {
    if (std::isspace(static_cast<unsigned char>(line.text[k]))) {
      ++k;
      continue;
    }
    std::size_t begin = k;
    while (k < line.text.size() && !std::isspace(static_cast<unsigned char>(line.text[k]))) {
      ++k;
    }
    out.push_back({line.text.substr(begin, k - begin), begin + 1});
  }
  return out;
}

std::string trimmed(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

bool is_name(const std::string& s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s[0]);
  if (!std::isalpha(head) && s[0] != '_') return false;
  for (char c : s) {
    auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && c != '_') return false;
  }
  return true;
}

std::size_t parse_count(const Word& w, std::size_t line) {
  for (char c : w.text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError(line, w.column, "expected a nonnegative integer, got '" + w.text + "'");
    }
  }
  if (w.text.empty() || w.text.size() > 9) {
    throw ParseError(line, w.column, "integer '" + w.text + "' out of range");
  }
  return static_cast<std::size_t>(std::stoul(w.text));
}

std::int64_t parse_int64(const Word& w, std::size_t line) {
  std::string digits = w.text;
  bool neg = !digits.empty() && digits[0] == '-';
  if (neg) digits.erase(digits.begin());
  if (digits.empty() || digits.size() > 18) {
    throw ParseError(line, w.column, "integer '" + w.text + "' out of range");
  }
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError(line, w.column, "expected an integer, got '" + w.text + "'");
    }
  }
  std::int64_t v = std::stoll(digits);
  return neg ? -v : v;
}

// An exact scalar written in the expression syntax ("1", "-3/4", "1+2*i");
// reuses the field parser over zero variables, so anything mentioning an
// x-variable is rejected with a positioned error.
GaussianRational parse_scalar(const std::string& text, std::size_t line) {
  RationalFunction f = parse_rational_function(text, 0, line);
  return f.constant_value();
}

// Interval token "(lo,hi)" with exact rational endpoints.
Interval parse_interval(const Word& w, std::size_t line) {
  const std::string& t = w.text;
  if (t.size() < 5 || t.front() != '(' || t.back() != ')') {
    throw ParseError(line, w.column, "expected an interval '(lo,hi)', got '" + t + "'");
  }
  std::string body = t.substr(1, t.size() - 2);
  auto comma = body.find(',');
  if (comma == std::string::npos || body.find(',', comma + 1) != std::string::npos) {
    throw ParseError(line, w.column, "interval '" + t + "' needs exactly one comma");
  }
  BigRational lo = parse_big_rational(trimmed(body.substr(0, comma)), line, w.column);
  BigRational hi = parse_big_rational(trimmed(body.substr(comma + 1)), line, w.column);
  if (!(lo < hi)) {
    throw ParseError(line, w.column, "interval '" + t + "' needs lo < hi");
  }
  return Interval{std::move(lo), std::move(hi)};
}

// Box from a run of interval words; "*" leaves that axis unbounded.
Box parse_box(const std::vector<Word>& words, std::size_t from, std::size_t dim,
              std::size_t line) {
  if (words.size() - from != dim) {
    throw ParseError(line, words.at(from > 0 ? from - 1 : 0).column,
                     "expected " + std::to_string(dim) + " axis intervals, got " +
                         std::to_string(words.size() - from));
  }
  bool any_star = false;
  std::vector<Interval> axes;
  for (std::size_t k = from; k < words.size(); ++k) {
    if (words[k].text == "*") {
      any_star = true;
    } else {
      axes.push_back(parse_interval(words[k], line));
    }
  }
  if (!any_star) return Box::bounded(std::move(axes));
  if (!axes.empty()) {
    throw ParseError(line, words[from].column,
                     "mixed bounded and unbounded axes are not supported; "
                     "use all intervals or all '*'");
  }
  return Box::whole(dim);
}

// Open-set literal "{0,2,5}" or "{}"; the remainder of the line from word
// `from` onward is joined first, so spaces after commas are fine.
std::uint32_t parse_open_set(const std::vector<Word>& words, std::size_t from,
                             std::size_t npoints, std::size_t line) {
  if (from >= words.size()) {
    throw ParseError(line, 1, "expected an open set '{...}'");
  }
  std::string joined;
  for (std::size_t k = from; k < words.size(); ++k) joined += words[k].text;
  if (joined.size() < 2 || joined.front() != '{' || joined.back() != '}') {
    throw ParseError(line, words[from].column,
                     "expected an open set '{...}', got '" + joined + "'");
  }
  std::string body = joined.substr(1, joined.size() - 2);
  std::uint32_t mask = 0;
  std::size_t k = 0;
  while (k < body.size()) {
    std::size_t begin = k;
    while (k < body.size() && body[k] != ',') ++k;
    std::string item = body.substr(begin, k - begin);
    if (k < body.size()) ++k;
    if (item.empty()) {
      throw ParseError(line, words[from].column, "empty entry in open set '" + joined + "'");
    }
    Word w{item, words[from].column};
    std::size_t p = parse_count(w, line);
    if (p >= npoints) {
      throw ParseError(line, words[from].column,
                       "point " + item + " is outside 0.." + std::to_string(npoints - 1));
    }
    mask |= (1u << p);
  }
  return mask;
}

// Comma-separated row of scalar-field entries over `nvars` variables.
std::vector<RationalFunction> parse_entry_row(const Line& line, std::size_t nvars,
                                              std::size_t expected) {
  std::vector<RationalFunction> out;
  const std::string& t = line.text;
  std::size_t k = 0;
  while (true) {
    std::size_t begin = k;
    int depth = 0;
    while (k < t.size() && (t[k] != ',' || depth > 0)) {
      if (t[k] == '(') ++depth;
      if (t[k] == ')') --depth;
      ++k;
    }
    std::string piece = trimmed(t.substr(begin, k - begin));
    if (piece.empty()) {
      throw ParseError(line.number, begin + 1, "empty entry in row");
    }
    out.push_back(parse_rational_function(piece, nvars, line.number));
    if (k >= t.size()) break;
    ++k;  // past the comma
  }
  if (out.size() != expected) {
    throw ParseError(line.number, 1,
                     "expected " + std::to_string(expected) + " entries in this row, got " +
                         std::to_string(out.size()));
  }
  return out;
}

// Rethrows any library error as a ValidationError naming the declaration.
template <class Fn>
auto named(const std::string& what, const std::string& name, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ValidationError(what + " " + name + ": " + e.what());
  }
}

// The block reader: hands out body lines of "kind name {" ... "}".
class BlockParser {
 public:
  BlockParser(const std::vector<Line>& lines, std::size_t header, std::size_t body_begin,
              std::size_t body_end)
      : lines_(lines), at_(body_begin), end_(body_end), header_(header) {}

  bool done() const { return at_ >= end_; }
  const Line& next() { return lines_[at_++]; }
  const Line& peek() const { return lines_[at_]; }
  std::size_t header_line() const { return lines_[header_].number; }

 private:
  const std::vector<Line>& lines_;
  std::size_t at_;
  std::size_t end_;
  std::size_t header_;
};

void expect_unique(bool already, const std::string& kind, const std::string& name) {
  if (already) throw ValidationError(kind + " " + name + ": name already declared");
}

FiniteGroup parse_group_block(BlockParser& b, const std::string& name) {
  std::vector<std::vector<std::size_t>> table;
  while (!b.done()) {
    const Line& line = b.next();
    std::vector<Word> words = split_words(line);
    std::vector<std::size_t> row;
    row.reserve(words.size());
    for (const Word& w : words) row.push_back(parse_count(w, line.number));
    table.push_back(std::move(row));
  }
  return named("group", name, [&] { return FiniteGroup::from_table(std::move(table)); });
}

LieAlgebra parse_lie_block(BlockParser& b, const std::string& name) {
  std::size_t dim = 0;
  bool have_dim = false;
  std::vector<LieAlgebra::StructureEntry> entries;
  while (!b.done()) {
    const Line& line = b.next();
    std::vector<Word> words = split_words(line);
    if (words[0].text == "dim" && words.size() == 2) {
      dim = parse_count(words[1], line.number);
      have_dim = true;
      continue;
    }
    if (words[0].text == "c") {
      if (!have_dim) {
        throw ParseError(line.number, words[0].column, "'dim n' must precede the c-entries");
      }
      if (words.size() < 5) {
        throw ParseError(line.number, words[0].column,
                         "structure entry needs 'c i j k value'");
      }
      std::size_t i = parse_count(words[1], line.number);
      std::size_t j = parse_count(words[2], line.number);
      std::size_t k = parse_count(words[3], line.number);
      if (i >= dim || j >= dim || k >= dim) {
        throw ParseError(line.number, words[1].column,
                         "structure indices must lie below dim = " + std::to_string(dim));
      }
      std::string value_text;
      for (std::size_t w = 4; w < words.size(); ++w) {
        if (w > 4) value_text += ' ';
        value_text += words[w].text;
      }
      entries.push_back({i, j, k, parse_scalar(value_text, line.number)});
      continue;
    }
    throw ParseError(line.number, words[0].column,
                     "unknown directive '" + words[0].text + "' in lie block");
  }
  if (!have_dim) {
    throw ParseError(b.header_line(), 1, "lie block needs a 'dim n' line");
  }
  return named("lie", name, [&] { return LieAlgebra::from_structure(dim, entries); });
}

FinSuppKernel parse_kernel_block(BlockParser& b, const std::string& name) {
  FinSuppKernel kern;
  while (!b.done()) {
    const Line& line = b.next();
    std::vector<Word> words = split_words(line);
    if (words.size() != 4) {
      throw ParseError(line.number, words[0].column, "kernel entry needs 'i j re im'");
    }
    std::int64_t i = parse_int64(words[0], line.number);
    std::int64_t j = parse_int64(words[1], line.number);
    BigRational re = parse_big_rational(words[2].text, line.number, words[2].column);
    BigRational im = parse_big_rational(words[3].text, line.number, words[3].column);
    named("kernel", name, [&] {
      kern.set(i, j, GaussianRational(std::move(re), std::move(im)));
      return 0;
    });
  }
  return kern;
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
  std::vector<Line> lines = meaningful_lines(text);
  Scenario sc;
  bool base_dim_given = false;
  bool any_declaration = false;
  bool tasks_given = false;

  std::size_t at = 0;
  while (at < lines.size()) {
    const Line& header = lines[at];
    std::vector<Word> words = split_words(header);

    if (words[0].text == "base_dim") {
      if (words.size() != 2) {
        throw ParseError(header.number, words[0].column, "usage: base_dim m");
      }
      if (base_dim_given) {
        throw ParseError(header.number, words[0].column, "base_dim was already given");
      }
      if (any_declaration) {
        throw ParseError(header.number, words[0].column,
                         "base_dim must precede all declarations");
      }
      sc.base_dim = parse_count(words[1], header.number);
      if (sc.base_dim == 0) {
        throw ParseError(header.number, words[1].column, "base_dim must be positive");
      }
      base_dim_given = true;
      ++at;
      continue;
    }

    // Everything else is a block "kind name {" ... "}" (tasks has no name).
    const std::string& kind = words[0].text;
    bool is_tasks = kind == "tasks";
    if (!is_tasks && (words.size() != 3 || words[2].text != "{")) {
      throw ParseError(header.number, words[0].column,
                       "expected '" + kind + " <name> {', each block closed by '}'");
    }
    if (is_tasks && (words.size() != 2 || words[1].text != "{")) {
      throw ParseError(header.number, words[0].column, "expected 'tasks {'");
    }
    std::string name = is_tasks ? "" : words[1].text;
    if (!is_tasks && !is_name(name)) {
      throw ParseError(header.number, words[1].column, "'" + name + "' is not a valid name");
    }

    std::size_t body_begin = at + 1;
    std::size_t body_end = body_begin;
    while (body_end < lines.size() && trimmed(lines[body_end].text) != "}") ++body_end;
    if (body_end >= lines.size()) {
      throw ParseError(header.number, words[0].column,
                       "block opened here is never closed by '}'");
    }
    BlockParser block(lines, at, body_begin, body_end);
    any_declaration = true;
    at = body_end + 1;

    if (kind == "group") {
      expect_unique(sc.groups.count(name) != 0, kind, name);
      sc.groups.emplace(name, parse_group_block(block, name));
    } else if (kind == "lie") {
      expect_unique(sc.lies.count(name) != 0, kind, name);
      sc.lies.emplace(name, parse_lie_block(block, name));
    } else if (kind == "metric") {
      expect_unique(sc.metrics.count(name) != 0, kind, name);
      std::vector<std::vector<RationalFunction>> base_rows;
      const LieAlgebra* lie = nullptr;
      while (!block.done()) {
        const Line& line = block.next();
        std::vector<Word> ws = split_words(line);
        if (ws[0].text == "base" && ws.size() == 1) {
          if (!base_rows.empty()) {
            throw ParseError(line.number, ws[0].column, "duplicate 'base' section");
          }
          for (std::size_t r = 0; r < sc.base_dim; ++r) {
            if (block.done()) {
              throw ParseError(line.number, ws[0].column,
                               "base block needs " + std::to_string(sc.base_dim) + " rows");
            }
            base_rows.push_back(parse_entry_row(block.next(), sc.base_dim, sc.base_dim));
          }
        } else if (ws[0].text == "lie" && ws.size() == 2) {
          auto it = sc.lies.find(ws[1].text);
          if (it == sc.lies.end()) {
            throw ValidationError("metric " + name + ": unknown Lie algebra '" +
                                  ws[1].text + "'");
          }
          lie = &it->second;
        } else {
          throw ParseError(line.number, ws[0].column,
                           "metric block lines are 'base' or 'lie <name>'");
        }
      }
      sc.metrics.emplace(name, named("metric", name, [&] {
        if (lie == nullptr && base_rows.empty()) {
          throw ValidationError("needs a 'base' block or a 'lie' reference");
        }
        if (lie == nullptr) {
          return BlockMetric(matrix_from_rows(base_rows), sc.base_dim);
        }
        if (base_rows.empty()) {
          return BlockMetric::vertical_killing(lie, sc.base_dim);
        }
        return BlockMetric(matrix_from_rows(base_rows), sc.base_dim, lie, lie->killing());
      }));
    } else if (kind == "field") {
      expect_unique(sc.fields.count(name) != 0, kind, name);
      std::size_t n = 0;
      std::vector<std::vector<RationalFunction>> rows;
      Box domain = Box::whole(sc.base_dim);
      while (!block.done()) {
        const Line& line = block.next();
        std::vector<Word> ws = split_words(line);
        if (ws[0].text == "size" && ws.size() == 2) {
          if (n != 0) throw ParseError(line.number, ws[0].column, "duplicate 'size'");
          n = parse_count(ws[1], line.number);
          if (n == 0) throw ParseError(line.number, ws[1].column, "size must be positive");
          for (std::size_t r = 0; r < n; ++r) {
            if (block.done()) {
              throw ParseError(line.number, ws[0].column,
                               "field needs " + std::to_string(n) + " entry rows");
            }
            rows.push_back(parse_entry_row(block.next(), sc.base_dim, n));
          }
        } else if (ws[0].text == "domain") {
          domain = parse_box(ws, 1, sc.base_dim, line.number);
        } else {
          throw ParseError(line.number, ws[0].column,
                           "field block lines are 'size n' (then rows) or 'domain ...'");
        }
      }
      if (n == 0) {
        throw ParseError(block.header_line(), 1, "field block needs a 'size n' line");
      }
      sc.fields.emplace(name, named("field", name, [&] {
        return MatrixField::from_entries(std::move(rows), std::move(domain));
      }));
    } else if (kind == "kernel") {
      expect_unique(sc.kernels.count(name) != 0, kind, name);
      sc.kernels.emplace(name, parse_kernel_block(block, name));
    } else if (kind == "grid") {
      expect_unique(sc.grids.count(name) != 0, kind, name);
      std::vector<std::vector<BigRational>> points;
      std::optional<Box> box;
      std::vector<std::size_t> counts;
      while (!block.done()) {
        const Line& line = block.next();
        std::vector<Word> ws = split_words(line);
        if (ws[0].text == "point") {
          std::vector<BigRational> p;
          for (std::size_t k = 1; k < ws.size(); ++k) {
            p.push_back(parse_big_rational(ws[k].text, line.number, ws[k].column));
          }
          points.push_back(std::move(p));
        } else if (ws[0].text == "box") {
          box = parse_box(ws, 1, sc.base_dim, line.number);
        } else if (ws[0].text == "counts") {
          for (std::size_t k = 1; k < ws.size(); ++k) {
            counts.push_back(parse_count(ws[k], line.number));
          }
        } else {
          throw ParseError(line.number, ws[0].column,
                           "grid block lines are 'point ...' or 'box ...' + 'counts ...'");
        }
      }
      if (!points.empty() && (box || !counts.empty())) {
        throw ParseError(block.header_line(), 1,
                         "grid is either a point list or a box with counts, not both");
      }
      sc.grids.emplace(name, named("grid", name, [&] {
        if (!points.empty()) return SampleGrid::from_points(std::move(points));
        if (!box || counts.empty()) {
          throw ValidationError("needs 'point' lines or a 'box' line with 'counts'");
        }
        return SampleGrid::product(*box, counts);
      }));
    } else if (kind == "topology") {
      expect_unique(sc.topologies.count(name) != 0, kind, name);
      std::size_t npoints = 0;
      bool have_points = false;
      std::vector<std::uint32_t> opens;
      while (!block.done()) {
        const Line& line = block.next();
        std::vector<Word> ws = split_words(line);
        if (ws[0].text == "points" && ws.size() == 2) {
          npoints = parse_count(ws[1], line.number);
          have_points = true;
        } else if (ws[0].text == "open") {
          if (!have_points) {
            throw ParseError(line.number, ws[0].column, "'points n' must come first");
          }
          opens.push_back(parse_open_set(ws, 1, npoints, line.number));
        } else {
          throw ParseError(line.number, ws[0].column,
                           "topology block lines are 'points n' or 'open {...}'");
        }
      }
      if (!have_points) {
        throw ParseError(block.header_line(), 1, "topology block needs a 'points n' line");
      }
      sc.topologies.emplace(name, named("topology", name, [&] {
        return FiniteTopology(npoints, std::move(opens));
      }));
    } else if (kind == "presheaf") {
      expect_unique(sc.presheaves.count(name) != 0, kind, name);
      const FiniteTopology* topo = nullptr;
      std::string builder;
      std::size_t constant_dim = 1;
      bool zero_on_empty = false;
      std::map<std::uint32_t, std::size_t> space_dims;
      std::map<std::pair<std::uint32_t, std::uint32_t>, Matrix<GaussianRational>> restr;
      while (!block.done()) {
        const Line& line = block.next();
        std::vector<Word> ws = split_words(line);
        if (ws[0].text == "topology" && ws.size() == 2) {
          auto it = sc.topologies.find(ws[1].text);
          if (it == sc.topologies.end()) {
            throw ValidationError("presheaf " + name + ": unknown topology '" +
                                  ws[1].text + "'");
          }
          topo = &it->second;
          continue;
        }
        if (topo == nullptr) {
          throw ParseError(line.number, ws[0].column,
                           "'topology <name>' must come first in a presheaf block");
        }
        if (ws[0].text == "functions" && ws.size() == 1) {
          builder = "functions";
        } else if (ws[0].text == "constant") {
          builder = "constant";
          if (ws.size() >= 2) constant_dim = parse_count(ws[1], line.number);
          if (ws.size() == 3 && ws[2].text == "zero_on_empty") zero_on_empty = true;
          if (ws.size() > 3 || (ws.size() == 3 && !zero_on_empty)) {
            throw ParseError(line.number, ws[0].column,
                             "usage: constant <dim> [zero_on_empty]");
          }
        } else if (ws[0].text == "space") {
          if (ws.size() < 3) {
            throw ParseError(line.number, ws[0].column, "usage: space {...} dim");
          }
          std::uint32_t mask =
              parse_open_set({ws.begin(), ws.end() - 1}, 1, topo->npoints(), line.number);
          std::size_t d = parse_count(ws.back(), line.number);
          if (!topo->is_open(mask)) {
            throw ValidationError("presheaf " + name + ": " +
                                  open_to_string(mask, topo->npoints()) +
                                  " is not an open of its topology");
          }
          space_dims[mask] = d;
        } else if (ws[0].text == "restrict") {
          if (ws.size() != 3) {
            throw ParseError(line.number, ws[0].column, "usage: restrict {U} {V}");
          }
          std::uint32_t u = parse_open_set({ws[0], ws[1]}, 1, topo->npoints(), line.number);
          std::uint32_t v = parse_open_set({ws[0], ws[2]}, 1, topo->npoints(), line.number);
          auto du = space_dims.find(u);
          auto dv = space_dims.find(v);
          if (du == space_dims.end() || dv == space_dims.end()) {
            throw ParseError(line.number, ws[0].column,
                             "both opens need 'space' lines before 'restrict'");
          }
          GaussianRational like(0);
          Matrix<GaussianRational> m =
              Matrix<GaussianRational>::zeros(dv->second, du->second, like);
          for (std::size_t r = 0; r < dv->second; ++r) {
            if (block.done()) {
              throw ParseError(line.number, ws[0].column,
                               "restriction needs " + std::to_string(dv->second) + " rows");
            }
            const Line& row_line = block.next();
            std::vector<RationalFunction> row = parse_entry_row(row_line, 0, du->second);
            for (std::size_t c = 0; c < du->second; ++c) {
              m.at(r, c) = row[c].constant_value();
            }
          }
          restr.insert_or_assign(std::make_pair(u, v), std::move(m));
        } else {
          throw ParseError(line.number, ws[0].column,
                           "unknown directive '" + ws[0].text + "' in presheaf block");
        }
      }
      if (topo == nullptr) {
        throw ParseError(block.header_line(), 1,
                         "presheaf block needs a 'topology <name>' line");
      }
      sc.presheaves.emplace(name, named("presheaf", name, [&] {
        if (builder == "functions") return function_presheaf(*topo);
        if (builder == "constant") {
          SectionAlgebra fibre = constant_dim == 1 ? SectionAlgebra::scalars()
                                                   : SectionAlgebra::functions(constant_dim);
          return constant_presheaf(*topo, fibre, zero_on_empty);
        }
        // Custom tabulated data; sections over each open multiply
        // coordinatewise.
        std::vector<SectionAlgebra> spaces;
        for (std::uint32_t mask : topo->opens()) {
          auto it = space_dims.find(mask);
          if (it == space_dims.end()) {
            throw ValidationError("no 'space' line for open " +
                                  open_to_string(mask, topo->npoints()));
          }
          spaces.push_back(it->second == 0 ? SectionAlgebra::zero()
                                           : SectionAlgebra::functions(it->second));
        }
        TabulatedPresheaf p(*topo, std::move(spaces), std::move(restr));
        if (auto violation = p.verify()) {
          throw ValidationError(violation->kind + " law fails: " + violation->message);
        }
        return p;
      }));
    } else if (kind == "cover") {
      expect_unique(sc.covers.count(name) != 0, kind, name);
      std::optional<Box> target;
      std::vector<Box> boxes;
      while (!block.done()) {
        const Line& line = block.next();
        std::vector<Word> ws = split_words(line);
        if (ws[0].text == "target") {
          target = parse_box(ws, 1, sc.base_dim, line.number);
        } else if (ws[0].text == "box") {
          boxes.push_back(parse_box(ws, 1, sc.base_dim, line.number));
        } else {
          throw ParseError(line.number, ws[0].column,
                           "cover block lines are 'target ...' or 'box ...'");
        }
      }
      if (!target) {
        throw ParseError(block.header_line(), 1, "cover block needs a 'target' line");
      }
      named("cover", name, [&] {
        if (!target->is_bounded()) throw ValidationError("target must be bounded");
        for (const Box& bx : boxes) {
          if (!bx.is_bounded()) throw ValidationError("every box must be bounded");
        }
        return 0;
      });
      sc.covers.emplace(name, BoxCover{std::move(*target), std::move(boxes)});
    } else if (is_tasks) {
      if (tasks_given) {
        throw ParseError(header.number, words[0].column, "tasks block was already given");
      }
      tasks_given = true;
      while (!block.done()) {
        const Line& line = block.next();
        std::vector<Word> ws = split_words(line);
        Task t;
        t.name = ws[0].text;
        t.line = line.number;
        t.text = ws[0].text;
        for (std::size_t k = 1; k < ws.size(); ++k) {
          t.args.push_back(ws[k].text);
          t.text += ' ';
          t.text += ws[k].text;
        }
        sc.tasks.push_back(std::move(t));
      }
    } else {
      throw ParseError(header.number, words[0].column,
                       "unknown declaration kind '" + kind + "'");
    }
  }
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ValidationError("cannot open scenario file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

}  // namespace ncgeom
