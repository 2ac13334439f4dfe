#include "qhecke/quiver.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

namespace qh {

QuiverData::QuiverData(int vertices) : m_(vertices), d_(vertices, std::vector<int>(vertices, 0)) {
  if (vertices < 1) throw UsageError("quiver needs at least one vertex");
}

QuiverData QuiverData::from_arrows(int vertices, const std::vector<std::pair<int, int>>& arrows) {
  QuiverData q(vertices);
  for (auto [i, j] : arrows) {
    if (i < 1 || j < 1 || i > vertices || j > vertices) throw UsageError("arrow endpoint out of range");
    if (i == j) throw UsageError("quiver has a loop at vertex " + std::to_string(i));
    ++q.d_[i - 1][j - 1];
  }
  return q;
}

QuiverData QuiverData::from_cartan(const std::vector<std::vector<int>>& cartan) {
  const int m = static_cast<int>(cartan.size());
  QuiverData q(m);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(cartan[i].size()) != m) throw UsageError("Cartan matrix is not square");
    if (cartan[i][i] != 2) throw UsageError("Cartan diagonal entries must be 2");
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      if (cartan[i][j] > 0) throw UsageError("off-diagonal Cartan entries must be <= 0");
      if (cartan[i][j] != cartan[j][i]) throw UsageError("only symmetric Cartan matrices come from quivers");
      if (i < j) q.d_[i][j] = -cartan[i][j];
    }
  }
  return q;
}

QuiverData QuiverData::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<int, int>> arrows;
  std::vector<std::vector<int>> rows;
  const std::regex arrow_re(R"(^\s*(\d+)\s*->\s*(\d+)\s*$)");
  const std::regex row_re(R"(^\s*-?\d+(\s+-?\d+)*\s*$)");
  int maxv = 0;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::smatch m;
    if (std::regex_match(line, m, arrow_re)) {
      int i = std::stoi(m[1]), j = std::stoi(m[2]);
      if (i == j) throw UsageError("quiver has a loop at vertex " + std::to_string(i));
      arrows.emplace_back(i, j);
      maxv = std::max({maxv, i, j});
    } else if (std::regex_match(line, row_re)) {
      std::istringstream row(line);
      std::vector<int> r;
      int x;
      while (row >> x) r.push_back(x);
      rows.push_back(r);
    } else {
      throw UsageError("cannot parse quiver line: " + line);
    }
  }
  if (!arrows.empty() && !rows.empty()) throw UsageError("quiver text mixes arrows and a Cartan matrix");
  if (!rows.empty()) return from_cartan(rows);
  if (arrows.empty()) throw UsageError("empty quiver description");
  return from_arrows(maxv, arrows);
}

QuiverData QuiverData::preset(const std::string& name) {
  if (name.size() >= 2 && (name[0] == 'a' || name[0] == 'A')) {
    int m = 0;
    try {
      m = std::stoi(name.substr(1));
    } catch (const std::exception&) {
      throw UsageError("unknown quiver preset: " + name);
    }
    if (m < 1 || m > 8) throw UsageError("unknown quiver preset: " + name);
    std::vector<std::pair<int, int>> arrows;
    for (int i = 1; i < m; ++i) arrows.emplace_back(i, i + 1);
    return from_arrows(m, arrows);
  }
  throw UsageError("unknown quiver preset: " + name);
}

std::vector<std::vector<int>> QuiverData::cartan_matrix() const {
  std::vector<std::vector<int>> c(m_, std::vector<int>(m_));
  for (int i = 1; i <= m_; ++i)
    for (int j = 1; j <= m_; ++j) c[i - 1][j - 1] = cartan(i, j);
  return c;
}

MPoly QuiverData::Q(int i, int j, const MPoly& u, const MPoly& up) const {
  if (i == j) return {};
  MPoly r = (u - up).pow(edges(i, j));
  return arrows(i, j) % 2 ? -r : r;
}

MPoly QuiverData::P(int i, int j, const MPoly& u, const MPoly& up) const {
  if (i == j) return {};
  return i < j ? Q(i, j, u, up) : MPoly(1);
}

std::string QuiverData::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 1; i <= m_; ++i)
    for (int j = 1; j <= m_; ++j)
      for (int k = 0; k < arrows(i, j); ++k) {
        os << (first ? "" : "; ") << i << " -> " << j;
        first = false;
      }
  if (first) os << m_ << " isolated vertices";
  return os.str();
}

std::vector<int> act_on_sequence(const Permutation& w, const std::vector<int>& v) {
  if (static_cast<int>(v.size()) != w.n()) throw MathError("sequence length mismatch");
  std::vector<int> r(v.size());
  for (int k = 1; k <= w.n(); ++k) r[w(k) - 1] = v[k - 1];
  return r;
}

std::vector<int> word_target(const std::vector<int>& letters, const std::vector<int>& v) {
  std::vector<int> r = v;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) std::swap(r[*it - 1], r[*it]);
  return r;
}

std::string sequence_str(const std::vector<int>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::vector<std::vector<int>> all_sequences(int m, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(n, 1);
  while (true) {
    out.push_back(v);
    int k = n - 1;
    while (k >= 0 && v[k] == m) v[k--] = 1;
    if (k < 0) break;
    ++v[k];
  }
  return out;
}

std::vector<std::vector<int>> sequence_orbit(const std::vector<int>& v) {
  std::vector<int> s = v;
  std::sort(s.begin(), s.end());
  std::vector<std::vector<int>> out;
  do {
    out.push_back(s);
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

}  // namespace qh
