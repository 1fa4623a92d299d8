#include "sr2se/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace sr2se {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
// Graphs are stored densely, so orders are capped well below the format limits.
constexpr std::uint64_t kMaxOrder = 1u << 14;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> out;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    out.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return out;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

bool to_uint(std::string_view s, std::uint64_t& v) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  return ec == std::errc() && p == s.data() + s.size();
}

bool skippable(std::string_view line) {
  line = trim(line);
  return line.empty() || line.front() == '#';
}

}  // namespace

UnderlyingGraph parse_graph6(std::string_view text) {
  if (text.size() >= kGraph6Header.size() && text.substr(0, kGraph6Header.size()) == kGraph6Header)
    text.remove_prefix(kGraph6Header.size());
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  if (text.empty()) throw ParseError(ParseErrorKind::kEmpty, "graph6: no data");
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
      throw ParseError(ParseErrorKind::kNonPrintable, "graph6: byte " + std::to_string(c) +
                                                          " at offset " + std::to_string(i));
  }
  auto val = [&](std::size_t i) { return static_cast<std::uint64_t>(text[i]) - 63; };

  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (val(0) < 63) {
    n = val(0);
    pos = 1;
  } else {
    const bool wide = text.size() > 1 && val(1) == 63;
    const std::size_t digits = wide ? 6 : 3;
    const std::size_t first = wide ? 2 : 1;
    if (text.size() < first + digits) throw ParseError(ParseErrorKind::kBadLength, "graph6: size field cut short");
    for (std::size_t i = 0; i < digits; ++i) n = (n << 6) | val(first + i);
    pos = first + digits;
    if (n < 63 || (wide && n <= 258047))
      throw ParseError(ParseErrorKind::kBadLength, "graph6: size " + std::to_string(n) + " not in shortest form");
    if (n > kMaxOrder) throw ParseError(ParseErrorKind::kBadLength, "graph6: order " + std::to_string(n) + " too large");
  }
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  const std::uint64_t have = text.size() - pos;
  if (have < bytes)
    throw ParseError(ParseErrorKind::kTruncated, "graph6: " + std::to_string(have) + " data bytes, need " +
                                                     std::to_string(bytes));
  if (have > bytes)
    throw ParseError(ParseErrorKind::kBadLength, "graph6: " + std::to_string(have - bytes) + " extra bytes");
  if (bits % 6 != 0) {
    const std::uint64_t pad = 6 - bits % 6;
    if (val(text.size() - 1) & ((1u << pad) - 1))
      throw ParseError(ParseErrorKind::kTrailingBits, "graph6: padding bits are not zero");
  }
  UnderlyingGraph g(n);
  std::uint64_t k = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++k)
      if ((val(pos + k / 6) >> (5 - k % 6)) & 1u) g.add_edge(i, j);
  return g;
}

std::string write_graph6(const UnderlyingGraph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  if (n < 63) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += static_cast<char>(126);
    for (int s = 12; s >= 0; s -= 6) out += static_cast<char>(((n >> s) & 63) + 63);
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(126);
    for (int s = 30; s >= 0; s -= 6) out += static_cast<char>(((n >> s) & 63) + 63);
  }
  int acc = 0, used = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out += static_cast<char>(acc + 63);
        acc = used = 0;
      }
    }
  if (used > 0) out += static_cast<char>((acc << (6 - used)) + 63);
  return out;
}

std::vector<UnderlyingGraph> parse_graph6_lines(std::string_view text) {
  std::vector<UnderlyingGraph> out;
  for (auto line : split_lines(text)) {
    line = trim(line);
    if (!line.empty()) out.push_back(parse_graph6(line));
  }
  return out;
}

SignedGraph parse_signed(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t li = 0;
  while (li < lines.size() && skippable(lines[li])) ++li;
  if (li == lines.size()) throw ParseError(ParseErrorKind::kEmpty, "sg1: no header");
  const auto head = tokens(lines[li]);
  std::uint64_t n = 0;
  if (head.size() != 2 || head[0] != "sg1" || !to_uint(head[1], n))
    throw ParseError(ParseErrorKind::kBadHeader, "sg1: expected 'sg1 <n>'", li + 1);
  if (n > kMaxOrder) throw ParseError(ParseErrorKind::kBadHeader, "sg1: order too large", li + 1);

  std::vector<SignedEdge> edges;
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
  for (++li; li < lines.size(); ++li) {
    if (skippable(lines[li])) continue;
    const auto t = tokens(lines[li]);
    const std::size_t line_no = li + 1;
    std::uint64_t u = 0, v = 0;
    if (t.size() != 3 || !to_uint(t[0], u) || !to_uint(t[1], v))
      throw ParseError(ParseErrorKind::kBadToken, "sg1: expected '<u> <v> <sign>'", line_no);
    if (u >= v || v >= n)
      throw ParseError(ParseErrorKind::kOutOfRange,
                       "sg1: edge " + std::to_string(u) + " " + std::to_string(v) + " outside 0 <= u < v < n",
                       line_no);
    int sign = 0;
    if (t[2] == "+" || t[2] == "+1") sign = 1;
    else if (t[2] == "-" || t[2] == "-1") sign = -1;
    else throw ParseError(ParseErrorKind::kBadSign, "sg1: sign '" + std::string(t[2]) + "'", line_no);
    if (!seen.emplace(u, v).second)
      throw ParseError(ParseErrorKind::kDuplicateEdge,
                       "sg1: edge " + std::to_string(u) + " " + std::to_string(v) + " repeated", line_no);
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), sign});
  }
  return SignedGraph::from_edges(n, edges);
}

std::string write_signed(const SignedGraph& g) {
  std::ostringstream os;
  os << "sg1 " << g.order() << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << ' ' << (e.sign > 0 ? '+' : '-') << '\n';
  return os.str();
}

std::vector<WeighingMatrix> parse_weighing_list(std::string_view text) {
  const auto lines = split_lines(text);
  std::vector<WeighingMatrix> out;
  std::size_t li = 0;
  while (true) {
    while (li < lines.size() && skippable(lines[li])) ++li;
    if (li == lines.size()) break;
    const auto head = tokens(lines[li]);
    std::uint64_t n = 0, r = 0;
    if (head.size() != 2 || !to_uint(head[0], n) || !to_uint(head[1], r) || n == 0 || n > 4096)
      throw ParseError(ParseErrorKind::kBadHeader, "weighing: expected '<n> <r>'", li + 1);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      ++li;
      if (li >= lines.size())
        throw ParseError(ParseErrorKind::kTruncated,
                         "weighing: " + std::to_string(i) + " of " + std::to_string(n) + " rows", li);
      std::size_t j = 0;
      for (char c : lines[li]) {
        if (c == ' ' || c == '\t' || c == '\r') continue;
        int v = 0;
        if (c == '+') v = 1;
        else if (c == '-') v = -1;
        else if (c != '0')
          throw ParseError(ParseErrorKind::kBadCharacter, std::string("weighing: symbol '") + c + "'", li + 1);
        if (j >= n) throw ParseError(ParseErrorKind::kBadRowLength, "weighing: row longer than n", li + 1);
        m(i, j++) = v;
      }
      if (j != n)
        throw ParseError(ParseErrorKind::kBadRowLength,
                         "weighing: row has " + std::to_string(j) + " entries, expected " + std::to_string(n),
                         li + 1);
    }
    auto w = verify_weighing(m);
    if (!w) throw ParseError(ParseErrorKind::kNotWeighing, "weighing: " + w.reason(), li + 1);
    if (w->r != static_cast<std::int64_t>(r))
      throw ParseError(ParseErrorKind::kNotWeighing,
                       "weighing: weight " + std::to_string(w->r) + ", header says " + std::to_string(r), li + 1);
    out.push_back(*w);
    ++li;
  }
  return out;
}

WeighingMatrix parse_weighing(std::string_view text) {
  auto all = parse_weighing_list(text);
  if (all.empty()) throw ParseError(ParseErrorKind::kEmpty, "weighing: no matrix");
  if (all.size() > 1) throw ParseError(ParseErrorKind::kBadToken, "weighing: more than one matrix");
  return all.front();
}

std::string write_weighing(const WeighingMatrix& w) {
  std::string out = std::to_string(w.n) + " " + std::to_string(w.r) + "\n";
  for (std::size_t i = 0; i < w.n; ++i) {
    for (std::size_t j = 0; j < w.n; ++j) out += w(i, j) > 0 ? '+' : w(i, j) < 0 ? '-' : '0';
    out += '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << contents;
  if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace sr2se
