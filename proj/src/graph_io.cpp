#include "satlab/graph_io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace satlab {

namespace {

void append_bits(std::string& out, const std::vector<bool>& bits) {
  for (size_t i = 0; i < bits.size(); i += 6) {
    int val = 0;
    for (size_t j = 0; j < 6; ++j) {
      val <<= 1;
      if (i + j < bits.size() && bits[i + j]) val |= 1;
    }
    out.push_back(char(val + 63));
  }
}

}  // namespace

std::string write_graph6(const Graph& g) {
  const int n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(char(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    out.push_back(char(((n >> 12) & 0x3f) + 63));
    out.push_back(char(((n >> 6) & 0x3f) + 63));
    out.push_back(char((n & 0x3f) + 63));
  } else {
    throw std::invalid_argument("graph6: vertex count above 258047 unsupported");
  }
  std::vector<bool> bits;
  bits.reserve(size_t(n) * (n - 1) / 2);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      bits.push_back(g.has_edge(u, v));
  append_bits(out, bits);
  return out;
}

Graph read_graph6(const std::string& text) {
  std::string s = text;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.empty()) throw std::invalid_argument("graph6: empty input");
  for (char c : s)
    if (c < 63 || c > 126)
      throw std::invalid_argument("graph6: byte outside printable range");

  size_t pos = 0;
  long long n;
  if (s[0] == '~') {
    if (s.size() >= 2 && s[1] == '~')
      throw std::invalid_argument("graph6: 8-byte size form unsupported");
    if (s.size() < 4) throw std::invalid_argument("graph6: truncated size");
    n = ((long long)(s[1] - 63) << 12) | ((long long)(s[2] - 63) << 6) | (long long)(s[3] - 63);
    pos = 4;
  } else {
    n = s[0] - 63;
    pos = 1;
  }
  const long long pairs = n * (n - 1) / 2;
  const size_t want = size_t((pairs + 5) / 6);
  if (s.size() - pos != want)
    throw std::invalid_argument("graph6: payload length mismatch");

  Graph g{int(n)};
  long long bit = 0;
  for (size_t i = pos; i < s.size(); ++i) {
    int val = s[i] - 63;
    for (int j = 5; j >= 0; --j, ++bit) {
      if (bit >= pairs) {
        if ((val >> j) & 1) throw std::invalid_argument("graph6: nonzero padding");
        continue;
      }
      if ((val >> j) & 1) {
        // invert column-major position -> (u, v)
        long long b = bit;
        int v = 1;
        while (b >= v) b -= v, ++v;
        g.add_edge(int(b), v);
      }
    }
  }
  return g;
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.n() << "\n";
  for (const auto& e : g.edges()) out << e.u << " " << e.v << "\n";
  return out.str();
}

Graph read_edge_list(const std::string& text, std::vector<std::string>* warnings) {
  std::istringstream in(text);
  std::string tag;
  long long n;
  if (!(in >> tag) || tag != "n" || !(in >> n) || n < 0)
    throw std::invalid_argument("edge list: malformed header, expected \"n <count>\"");
  Graph g{int(n)};
  long long u, v;
  while (in >> u) {
    if (!(in >> v)) throw std::invalid_argument("edge list: dangling endpoint");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge list: vertex index out of range");
    if (u == v) throw std::invalid_argument("edge list: loop rejected");
    if (!g.add_edge(int(u), int(v)) && warnings)
      warnings->push_back("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
  }
  if (!in.eof()) throw std::invalid_argument("edge list: non-numeric token");
  return g;
}

Graph read_graph_auto(const std::string& text, std::vector<std::string>* warnings) {
  size_t i = 0;
  while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
  if (i < text.size() && text[i] == 'n' && i + 1 < text.size() &&
      std::isspace((unsigned char)text[i + 1]))
    return read_edge_list(text, warnings);
  return read_graph6(text);
}

}  // namespace satlab
