#include "signedhom/io.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

namespace signedhom {

namespace {

bool blank_or_comment(std::string_view line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::vector<std::string> tokens(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::optional<int> to_int(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t i = 0;
  long long value = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    value = value * 10 + (s[i] - '0');
    if (value > 1'000'000'000) return std::nullopt;
  }
  return static_cast<int>(value);
}

}  // namespace

SignedGraph parse_sg(std::string_view text) {
  std::vector<std::pair<int, std::string>> lines;  // (line number, content)
  {
    int no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t nl = text.find('\n', pos);
      std::string_view line =
          nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
      ++no;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (!blank_or_comment(line)) lines.emplace_back(no, std::string(line));
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
  }
  if (lines.empty()) throw ParseError(1, "malformed header: empty document");

  const auto& [hline, header] = lines.front();
  auto head = tokens(header);
  if (head.size() != 3 || head[0] != "sg")
    throw ParseError(hline, "malformed header: expected 'sg <n> <m>'");
  auto n = to_int(head[1]), m = to_int(head[2]);
  if (!n || !m) throw ParseError(hline, "malformed header: bad counts");

  if (static_cast<int>(lines.size()) - 1 < *m) {
    int last = lines.back().first;
    throw ParseError(last, "unexpected end of document: expected " + std::to_string(*m) +
                               " edge lines");
  }
  if (static_cast<int>(lines.size()) - 1 > *m)
    throw ParseError(lines[1 + *m].first, "trailing content after " + std::to_string(*m) +
                                              " edge lines");

  SignedGraph g(*n);
  for (int i = 0; i < *m; ++i) {
    const auto& [lno, body] = lines[1 + i];
    auto tok = tokens(body);
    if (tok.size() != 3) throw ParseError(lno, "expected '<u> <v> <s>'");
    auto u = to_int(tok[0]), v = to_int(tok[1]);
    if (!u || !v) throw ParseError(lno, "bad endpoint");
    if (*u >= *n || *v >= *n) throw ParseError(lno, "endpoint out of range");
    Sign s;
    if (tok[2] == "+")
      s = Sign::Positive;
    else if (tok[2] == "-")
      s = Sign::Negative;
    else
      throw ParseError(lno, "bad sign token '" + tok[2] + "'");
    g.add_edge(*u, *v, s);
  }
  return g;
}

std::string serialize_sg(const SignedGraph& g) {
  std::ostringstream out;
  out << "sg " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (int id = 0; id < g.edge_id_limit(); ++id) {
    if (!g.edge_alive(id)) continue;
    const Edge& e = g.edge(id);
    out << e.u << ' ' << e.v << ' ' << sign_char(e.sign) << '\n';
  }
  return out.str();
}

}  // namespace signedhom
