#include "dissrho/graph6.hpp"

#include <istream>
#include <ostream>

namespace dissrho {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int sextet(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError("graph6: unexpected end of input", pos);
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < kBias || c > 126) throw ParseError("graph6: byte outside printable range 63..126", pos);
  return c - kBias;
}

}  // namespace

Graph from_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  if (pos >= text.size()) throw ParseError("graph6: empty input", pos);

  long order = 0;
  const std::size_t header_pos = pos;
  if (text[pos] == '~') {
    ++pos;
    if (pos < text.size() && text[pos] == '~') {
      ++pos;
      for (int i = 0; i < 6; ++i) order = (order << 6) | sextet(text, pos++);
    } else {
      for (int i = 0; i < 3; ++i) order = (order << 6) | sextet(text, pos++);
    }
  } else {
    order = sextet(text, pos++);
  }
  if (order == 0) throw ParseError("graph6: zero-order graph not representable", header_pos);
  if (order > Graph::kMaxOrder) {
    throw ParseError("graph6: order " + std::to_string(order) + " exceeds " +
                         std::to_string(Graph::kMaxOrder),
                     header_pos);
  }

  const int n = static_cast<int>(order);
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t data_bytes = (bits + 5) / 6;
  std::vector<VertexSet> rows(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = sextet(text, pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1) {
        rows[i].insert(j);
        rows[j].insert(i);
      }
    }
  }
  if (data_bytes > 0 && bits % 6 != 0) {
    const int last = sextet(text, pos + data_bytes - 1);
    const int pad_mask = (1 << (6 - bits % 6)) - 1;
    if (last & pad_mask) throw ParseError("graph6: nonzero padding bits", pos + data_bytes - 1);
  }
  if (pos + data_bytes != text.size()) throw ParseError("graph6: trailing bytes", pos + data_bytes);
  return Graph::from_rows(std::move(rows));
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    try {
      out.push_back(from_graph6(std::string_view(line).substr(first, last - first + 1)));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.message(), e.offset());
    }
  }
  return out;
}

void write_graph6_lines(std::ostream& out, const std::vector<Graph>& graphs) {
  for (const auto& g : graphs) out << to_graph6(g) << '\n';
}

}  // namespace dissrho
