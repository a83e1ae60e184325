#include "gamecrit/graph6.hpp"

#include <stdexcept>

namespace gamecrit {

namespace {

constexpr int kOffset = 63;  // printable range starts at '?'

int decode_byte(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  if (u < kOffset || u > 126) throw std::invalid_argument("graph6: byte out of range");
  return u - kOffset;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("graph6: empty record");
  size_t pos = 0;
  long n;
  if (text[0] == '~') {
    if (text.size() < 4) throw std::invalid_argument("graph6: truncated order field");
    if (text[1] == '~') throw std::invalid_argument("graph6: order exceeds the cap");
    n = (long(decode_byte(text[1])) << 12) | (decode_byte(text[2]) << 6) | decode_byte(text[3]);
    pos = 4;
  } else {
    n = decode_byte(text[0]);
    pos = 1;
  }
  if (n > kMaxOrder) throw std::invalid_argument("graph6: order exceeds the cap");

  long nbits = n * (n - 1) / 2;
  size_t nbytes = (nbits + 5) / 6;
  if (text.size() - pos != nbytes) throw std::invalid_argument("graph6: wrong record length");

  Graph g(static_cast<int>(n));
  long bit_index = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit_index) {
      int value = decode_byte(text[pos + bit_index / 6]);
      if (value & (1 << (5 - bit_index % 6))) g.add_edge(i, j);
    }
  // The final partial group must be zero padded.
  for (long b = nbits; b < static_cast<long>(nbytes) * 6; ++b) {
    int value = decode_byte(text[pos + b / 6]);
    if (value & (1 << (5 - b % 6))) throw std::invalid_argument("graph6: nonzero padding");
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kOffset));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kOffset));
    out.push_back(static_cast<char>((n & 63) + kOffset));
  }
  int group = 0, filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kOffset));
        group = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kOffset));
  return out;
}

}  // namespace gamecrit
