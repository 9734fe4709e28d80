#include "rectlat/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace rectlat {

namespace {

struct Token {
  std::string text;
  int line;
  int column;
};

[[noreturn]] void syntax_error(int line, int column, const std::string& msg) {
  fail(ErrorCode::SyntaxError,
       "line " + std::to_string(line) + ":" + std::to_string(column) + ": " + msg);
}

std::vector<std::vector<Token>> tokenize(const std::string& text) {
  if (!text.empty() && text.back() != '\n')
    fail(ErrorCode::SyntaxError, "missing final newline");
  std::vector<std::vector<Token>> lines;
  std::vector<Token> current;
  std::string word;
  int line = 1, col = 1, word_col = 1;
  auto flush_word = [&] {
    if (!word.empty()) {
      current.push_back(Token{word, line, word_col});
      word.clear();
    }
  };
  for (char ch : text) {
    if (ch == '\n') {
      flush_word();
      if (!current.empty()) lines.push_back(std::move(current));
      current.clear();
      ++line;
      col = 1;
      continue;
    }
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      flush_word();
    } else {
      if (word.empty()) word_col = col;
      word.push_back(ch);
    }
    ++col;
  }
  return lines;
}

int parse_int(const Token& t, int limit = -1) {
  std::string digits = t.text;
  if (!digits.empty() && digits.back() == ':') digits.pop_back();
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                     [](char c) { return c >= '0' && c <= '9'; }))
    syntax_error(t.line, t.column, "expected a nonnegative integer, got '" + t.text + "'");
  long value = std::stol(digits);
  if (limit >= 0 && value >= limit)
    syntax_error(t.line, t.column, "element id " + digits + " out of range");
  return static_cast<int>(value);
}

}  // namespace

ParsedLattice parse_lattice_text(const std::string& text) {
  auto lines = tokenize(text);
  size_t i = 0;
  while (i < lines.size() && lines[i][0].text == "#") ++i;
  if (i == lines.size() || lines[i][0].text != "lattice")
    fail(ErrorCode::SyntaxError, "expected a 'lattice <n>' header");
  if (lines[i].size() != 2)
    syntax_error(lines[i][0].line, lines[i][0].column, "expected 'lattice <n>'");
  int n = parse_int(lines[i][1]);
  if (n <= 0) syntax_error(lines[i][1].line, lines[i][1].column, "element count must be positive");
  ++i;

  std::vector<CoverPair> covers;
  std::map<Elem, std::vector<Elem>> up_lines, down_lines;
  bool any_order = false;
  for (; i < lines.size(); ++i) {
    const auto& ln = lines[i];
    const std::string& kw = ln[0].text;
    if (kw == "#") continue;
    if (kw == "cover") {
      if (ln.size() != 3) syntax_error(ln[0].line, ln[0].column, "expected 'cover <a> <b>'");
      Elem a = parse_int(ln[1], n), b = parse_int(ln[2], n);
      if (a == b) syntax_error(ln[1].line, ln[1].column, "cover endpoints coincide");
      covers.emplace_back(a, b);
    } else if (kw == "uporder" || kw == "downorder") {
      if (ln.size() < 2) syntax_error(ln[0].line, ln[0].column, "expected '<x>: <covers...>'");
      if (ln[1].text.empty() || ln[1].text.back() != ':') {
        if (ln.size() < 3 || ln[2].text != ":")
          syntax_error(ln[1].line, ln[1].column, "expected '<x>:' after '" + kw + "'");
      }
      Elem x = parse_int(ln[1], n);
      size_t first = (ln[1].text.back() == ':') ? 2 : 3;
      std::vector<Elem> order;
      for (size_t k = first; k < ln.size(); ++k) order.push_back(parse_int(ln[k], n));
      (kw == "uporder" ? up_lines : down_lines)[x] = std::move(order);
      any_order = true;
    } else {
      syntax_error(ln[0].line, ln[0].column, "unknown directive '" + kw + "'");
    }
  }

  Lattice lattice = Lattice::from_covers(n, covers);
  ParsedLattice out{std::move(lattice), std::nullopt};
  const Lattice& l = out.lattice;

  bool needs_order = false;
  std::vector<std::vector<Elem>> up(n), down(n);
  bool complete = true;
  for (Elem x = 0; x < n; ++x) {
    auto fill = [&](const std::vector<Elem>& covers_of_x, std::map<Elem, std::vector<Elem>>& given,
                    std::vector<Elem>& slot) {
      auto it = given.find(x);
      if (it != given.end()) {
        slot = it->second;
        return;
      }
      if (covers_of_x.size() > 1) {
        needs_order = true;
        complete = false;
      }
      slot = covers_of_x;
    };
    fill(l.upper_covers(x), up_lines, up[x]);
    fill(l.lower_covers(x), down_lines, down[x]);
  }
  if (any_order && !complete)
    fail(ErrorCode::BadDiagram, "diagram orders are incomplete: every element with several "
                                "covers needs an order line");
  if (complete)
    out.diagram = PlanarDiagram(l, std::move(up), std::move(down));
  return out;
}

ParsedLattice parse_lattice_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::SyntaxError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_lattice_text(buf.str());
}

namespace {

std::string emit_lat_impl(const Lattice& l, const std::vector<std::vector<Elem>>* up,
                          const std::vector<std::vector<Elem>>* down) {
  std::ostringstream out;
  out << "lattice " << l.size() << "\n";
  for (auto [a, b] : l.cover_pairs()) out << "cover " << a << " " << b << "\n";
  auto orders = [&](const char* kw, const std::vector<std::vector<Elem>>& table) {
    for (Elem x = 0; x < l.size(); ++x) {
      if (table[x].size() < 2) continue;
      out << kw << " " << x << ":";
      for (Elem y : table[x]) out << " " << y;
      out << "\n";
    }
  };
  if (up) orders("uporder", *up);
  if (down) orders("downorder", *down);
  return out.str();
}

}  // namespace

std::string emit_lat(const Lattice& l) { return emit_lat_impl(l, nullptr, nullptr); }

std::string emit_lat(const PlanarDiagram& d) {
  return emit_lat_impl(d.lattice(), &d.up_orders(), &d.down_orders());
}

namespace {

// Left-to-right position of every element, rank by rank, induced by the
// diagram: an element sorts by the leftmost (position, cover-index) pair
// over its lower covers.
std::vector<std::vector<Elem>> rank_rows(const PlanarDiagram& d) {
  const Lattice& l = d.lattice();
  int max_h = 0;
  for (Elem x = 0; x < l.size(); ++x) max_h = std::max(max_h, l.height(x));
  std::vector<std::vector<Elem>> rows(max_h + 1);
  std::vector<int> pos(l.size(), 0);
  for (int h = 0; h <= max_h; ++h) {
    std::vector<std::pair<std::pair<int, int>, Elem>> keyed;
    for (Elem x = 0; x < l.size(); ++x) {
      if (l.height(x) != h) continue;
      std::pair<int, int> key{0, 0};
      bool first = true;
      for (Elem c : d.down_order(x)) {
        int idx = 0;
        const auto& ups = d.up_order(c);
        idx = static_cast<int>(std::find(ups.begin(), ups.end(), x) - ups.begin());
        std::pair<int, int> cand{pos[c], idx};
        if (first || cand < key) key = cand;
        first = false;
      }
      keyed.emplace_back(key, x);
    }
    std::sort(keyed.begin(), keyed.end());
    for (size_t k = 0; k < keyed.size(); ++k) {
      pos[keyed[k].second] = static_cast<int>(k);
      rows[h].push_back(keyed[k].second);
    }
  }
  return rows;
}

const char* kPalette[] = {"#a6cee3", "#b2df8a", "#fb9a99", "#fdbf6f", "#cab2d6",
                          "#ffff99", "#1f78b4", "#33a02c", "#e31a1c", "#ff7f00"};

}  // namespace

std::string emit_dot(const PlanarDiagram& d, const std::optional<Congruence>& highlight_congruence,
                     const std::vector<Elem>& highlight_elements) {
  const Lattice& l = d.lattice();
  std::ostringstream out;
  out << "digraph lattice {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=circle, fontsize=10, width=0.3, fixedsize=true];\n";
  out << "  edge [arrowhead=none];\n";

  std::map<Elem, std::string> fill;
  if (highlight_congruence) {
    // one color per non-singleton block, in canonical block order
    int next = 0;
    for (const auto& block : highlight_congruence->blocks()) {
      if (block.size() < 2) continue;
      std::string color = kPalette[next % (sizeof(kPalette) / sizeof(kPalette[0]))];
      ++next;
      for (Elem x : block) fill[x] = color;
    }
  }
  std::vector<char> bold(l.size(), 0);
  for (Elem x : highlight_elements) bold[x] = 1;

  for (Elem x = 0; x < l.size(); ++x) {
    out << "  n" << x << " [label=\"" << x << "\"";
    auto it = fill.find(x);
    if (it != fill.end()) out << ", style=filled, fillcolor=\"" << it->second << "\"";
    if (bold[x]) out << ", penwidth=2.5";
    out << "];\n";
  }

  auto rows = rank_rows(d);
  for (const auto& row : rows) {
    out << "  { rank=same;";
    for (Elem x : row) out << " n" << x << ";";
    out << " }\n";
  }
  for (const auto& row : rows) {
    if (row.size() < 2) continue;
    out << "  ";
    for (size_t k = 0; k < row.size(); ++k) {
      if (k) out << " -> ";
      out << "n" << row[k];
    }
    out << " [style=invis];\n";
  }
  for (auto [a, b] : l.cover_pairs()) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace rectlat
