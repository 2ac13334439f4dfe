#include "qhecke/fock.hpp"

#include <functional>
#include <limits>
#include <regex>
#include <sstream>

namespace qh {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k] <= 0) throw UsageError("partition parts must be positive");
    if (k && parts[k] > parts[k - 1]) throw UsageError("partition parts must be weakly decreasing");
  }
}

int Partition::size() const {
  int s = 0;
  for (int x : parts) s += x;
  return s;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < parts.size(); ++k) os << (k ? "," : "") << parts[k];
  os << ")";
  return os.str();
}

Partition Partition::parse(const std::string& text) {
  static const std::regex re(R"(^\s*\(\s*(\d+(\s*,\s*\d+)*)?\s*\)\s*$)");
  if (!std::regex_match(text, re)) throw UsageError("cannot parse partition: " + text);
  std::vector<int> p;
  static const std::regex num(R"(\d+)");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), num); it != std::sregex_iterator(); ++it)
    p.push_back(std::stoi(it->str()));
  return Partition(p);
}

Partition Partition::transpose() const {
  std::vector<int> t;
  for (int c = 1; !parts.empty() && c <= parts[0]; ++c) {
    int k = 0;
    while (k < length() && parts[k] >= c) ++k;
    t.push_back(k);
  }
  return Partition(t);
}

int residue(int row, int col, int p) {
  if (p < 2) throw UsageError("p must be at least 2");
  return (((col - row) % p) + p) % p;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(rest, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Node> addable_nodes(const Partition& l) {
  std::vector<Node> out;
  for (int r = 1; r <= l.length() + 1; ++r) {
    const int len = r <= l.length() ? l.parts[r - 1] : 0;
    const int above = r == 1 ? std::numeric_limits<int>::max() : l.parts[r - 2];
    if (len < above) out.emplace_back(r, len + 1);
  }
  return out;
}

std::vector<Node> removable_nodes(const Partition& l) {
  std::vector<Node> out;
  for (int r = 1; r <= l.length(); ++r) {
    const int below = r < l.length() ? l.parts[r] : 0;
    if (l.parts[r - 1] > below) out.emplace_back(r, l.parts[r - 1]);
  }
  return out;
}

int addable_count(const Partition& l, int i, int p) {
  int c = 0;
  for (auto [r, col] : addable_nodes(l)) c += residue(r, col, p) == i;
  return c;
}

int removable_count(const Partition& l, int i, int p) {
  int c = 0;
  for (auto [r, col] : removable_nodes(l)) c += residue(r, col, p) == i;
  return c;
}

namespace {

void add_to(FockVector& v, const Partition& l, const Integer& c) {
  if (c == 0) return;
  auto& slot = v[l];
  slot += c;
  if (slot == 0) v.erase(l);
}

Partition with_node(const Partition& l, const Node& n, int delta) {
  std::vector<int> p = l.parts;
  if (delta > 0) {
    if (n.first > static_cast<int>(p.size()))
      p.push_back(1);
    else
      ++p[n.first - 1];
  } else {
    if (--p[n.first - 1] == 0) p.pop_back();
  }
  return Partition(p);
}

}  // namespace

FockVector f_op(int i, const FockVector& v, int p) {
  FockVector out;
  for (const auto& [l, c] : v)
    for (const auto& n : addable_nodes(l))
      if (residue(n.first, n.second, p) == i) add_to(out, with_node(l, n, 1), c);
  return out;
}

FockVector e_op(int i, const FockVector& v, int p) {
  FockVector out;
  for (const auto& [l, c] : v)
    for (const auto& n : removable_nodes(l))
      if (residue(n.first, n.second, p) == i) add_to(out, with_node(l, n, -1), c);
  return out;
}

FockVector d_op(const FockVector& v, int p) {
  FockVector out;
  for (const auto& [l, c] : v) add_to(out, l, c * weight_of(l, p)[0]);
  return out;
}

FockVector single(const Partition& l) { return FockVector{{l, Integer(1)}}; }

std::string fock_str(const FockVector& v) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // larger partitions first, matching the order of partitions_of
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    if (it->second != 1) os << it->second << "*";
    os << it->first.str();
  }
  return os.str();
}

std::vector<int> weight_of(const Partition& l, int p) {
  std::vector<int> c(p, 0);
  for (int r = 1; r <= l.length(); ++r)
    for (int col = 1; col <= l.parts[r - 1]; ++col) ++c[residue(r, col, p)];
  return c;
}

int affine_cartan(int i, int j, int p) {
  if (i == j) return 2;
  if (p == 2) return -2;
  const int d = ((i - j) % p + p) % p;
  return (d == 1 || d == p - 1) ? -1 : 0;
}

FockMatrix fock_matrix(char op, int i, int p, int n) {
  if (op != 'e' && op != 'f') throw UsageError("fock operator must be e or f");
  if (i < 0 || i >= p) throw UsageError("residue out of range");
  FockMatrix m;
  m.cols = partitions_of(n);
  const int target = op == 'e' ? n - 1 : n + 1;
  if (target >= 0) m.rows = partitions_of(target);
  std::map<Partition, std::size_t> index;
  for (std::size_t r = 0; r < m.rows.size(); ++r) index[m.rows[r]] = r;
  m.entries.assign(m.rows.size(), std::vector<Integer>(m.cols.size(), 0));
  for (std::size_t c = 0; c < m.cols.size(); ++c) {
    FockVector img = op == 'e' ? e_op(i, single(m.cols[c]), p) : f_op(i, single(m.cols[c]), p);
    for (const auto& [l, k] : img) m.entries[index.at(l)][c] = k;
  }
  return m;
}

FockReport check_fock_relations(int p, int max_size) {
  FockReport rep;
  auto expect = [&](bool ok, const std::string& what) {
    ++rep.checked;
    if (!ok) rep.failures.push_back(what);
  };
  for (int n = 0; n <= max_size; ++n)
    for (const auto& l : partitions_of(n)) {
      const FockVector v = single(l);
      const auto wt = weight_of(l, p);
      for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) {
          FockVector comm = e_op(i, f_op(j, v, p), p);
          for (const auto& [mu, c] : f_op(j, e_op(i, v, p), p)) add_to(comm, mu, -c);
          FockVector expected;
          if (i == j) add_to(expected, l, addable_count(l, i, p) - removable_count(l, i, p));
          expect(comm == expected, "[e" + std::to_string(i) + ",f" + std::to_string(j) + "] on " + l.str());
        }
        // <Lambda_0 - sum_j c_j alpha_j, alpha_i^vee>
        int pairing = i == 0 ? 1 : 0;
        for (int j = 0; j < p; ++j) pairing -= wt[j] * affine_cartan(j, i, p);
        expect(pairing == addable_count(l, i, p) - removable_count(l, i, p), "weight pairing at " + l.str());

        FockVector dc = d_op(f_op(i, v, p), p);
        for (const auto& [mu, c] : f_op(i, d_op(v, p), p)) add_to(dc, mu, -c);
        expect(dc == (i == 0 ? f_op(0, v, p) : FockVector{}), "[d,f" + std::to_string(i) + "] on " + l.str());
      }
    }
  for (int n = 0; n < max_size; ++n)
    for (int i = 0; i < p; ++i) {
      auto f = fock_matrix('f', i, p, n), e = fock_matrix('e', i, p, n + 1);
      bool ok = f.rows == e.cols && f.cols == e.rows;
      for (std::size_t r = 0; ok && r < f.rows.size(); ++r)
        for (std::size_t c = 0; c < f.cols.size(); ++c) ok = ok && f.entries[r][c] == e.entries[c][r];
      expect(ok, "adjointness of e" + std::to_string(i) + " and f" + std::to_string(i) + " at size " + std::to_string(n));
    }
  return rep;
}

}  // namespace qh
