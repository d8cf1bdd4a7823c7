#include "alphax/graph6.hpp"

#include "alphax/errors.hpp"

namespace alphax {
namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int sextet(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError("graph6: truncated input", pos);
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < kBias || c > kBias + 63) throw ParseError("graph6: byte outside 63..126", pos);
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kHeader)) pos = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (pos >= text.size()) throw ParseError("graph6: empty input", pos);

  long long n = 0;
  if (text[pos] == 126) {
    if (pos + 1 < text.size() && text[pos + 1] == 126) {
      throw ParseError("graph6: 8-byte order form exceeds capacity", pos);
    }
    for (int i = 1; i <= 3; ++i) n = (n << 6) | sextet(text, pos + i);
    if (n < 63) throw ParseError("graph6: non-canonical long order header", pos);
    pos += 4;
  } else {
    n = sextet(text, pos);
    pos += 1;
  }
  if (n > kMaxOrder) throw ParseError("graph6: order " + std::to_string(n) + " exceeds capacity", 0);

  const long long bits = n * (n - 1) / 2;
  const std::size_t expected = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != expected) {
    throw ParseError("graph6: expected " + std::to_string(expected) + " data bytes, found " +
                         std::to_string(text.size() - pos),
                     text.size() - pos > expected ? pos + expected : text.size());
  }

  Graph g(static_cast<int>(n));
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const std::size_t at = pos + static_cast<std::size_t>(k / 6);
      if ((sextet(text, at) >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t last = pos + expected - 1;
    const int pad_mask = (1 << (6 - bits % 6)) - 1;
    if (sextet(text, last) & pad_mask) throw ParseError("graph6: nonzero padding bits", last);
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
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

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), e.offset());
    }
  }
  return out;
}

}  // namespace alphax
