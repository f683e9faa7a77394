#include "netform/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include <gmpxx.h>

#include "netform/errors.hpp"

namespace netform {

std::pair<Node, Node> pair_at(int n, int rank) {
  if (rank < 0 || rank >= pair_count(n)) {
    throw NodeOutOfRange("pair rank " + std::to_string(rank) + " out of range for n=" + std::to_string(n));
  }
  Node i = 0;
  int row = n - 1;
  while (rank >= row) {
    rank -= row;
    ++i;
    --row;
  }
  return {i, i + 1 + rank};
}

long long DegreeSequence::sum() const { return std::accumulate(d_.begin(), d_.end(), 0LL); }

std::string DegreeSequence::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < d_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(d_[i]);
  }
  return out + "]";
}

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < kMinNodes || n > kMaxNodes) {
    throw NodeOutOfRange("node count " + std::to_string(n) + " outside [2, " + std::to_string(kMaxNodes) + "]");
  }
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (Node i = 0; i < n; ++i) {
    for (Node j = i + 1; j < n; ++j) g.toggle(i, j);
  }
  return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<Node, Node>>& edges) {
  Graph g(n);
  for (auto [i, j] : edges) {
    g.check_pair(i, j);
    if (g.has_edge(i, j)) {
      throw EdgeAlreadyPresent("duplicate edge (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
    g.toggle(i, j);
  }
  return g;
}

Graph Graph::from_code(int n, GraphCode code) {
  Graph g(n);
  const int slots = pair_count(n);
  if (slots > 64) throw EnumerationTooLarge("integer code needs pair_count(n) <= 64");
  if (slots < 64 && (code >> slots) != 0) {
    throw NodeOutOfRange("code " + std::to_string(code) + " out of range for n=" + std::to_string(n));
  }
  int rank = 0;
  for (Node i = 0; i < n; ++i) {
    for (Node j = i + 1; j < n; ++j, ++rank) {
      if ((code >> rank) & 1U) g.toggle(i, j);
    }
  }
  return g;
}

Graph Graph::from_code_string(int n, const std::string& decimal) {
  Graph g(n);
  mpz_class code;
  if (decimal.empty() || code.set_str(decimal, 10) != 0 || code < 0) {
    throw ParseError("bad graph code \"" + decimal + "\"");
  }
  if (mpz_sizeinbase(code.get_mpz_t(), 2) > static_cast<std::size_t>(pair_count(n)) && code != 0) {
    throw NodeOutOfRange("code out of range for n=" + std::to_string(n));
  }
  int rank = 0;
  for (Node i = 0; i < n; ++i) {
    for (Node j = i + 1; j < n; ++j, ++rank) {
      if (mpz_tstbit(code.get_mpz_t(), static_cast<mp_bitcnt_t>(rank))) g.toggle(i, j);
    }
  }
  return g;
}

void Graph::check_pair(Node i, Node j) const {
  if (i < 0 || i >= n_ || j < 0 || j >= n_) {
    throw NodeOutOfRange("node pair (" + std::to_string(i) + "," + std::to_string(j) + ") out of range for n=" +
                         std::to_string(n_));
  }
  if (i == j) throw NodeOutOfRange("self-loop at node " + std::to_string(i));
}

int Graph::edge_count() const {
  int twice = 0;
  for (auto w : bits_) twice += std::popcount(w);
  return twice / 2;
}

bool Graph::has_edge(Node i, Node j) const {
  check_pair(i, j);
  return bit(i, j);
}

Graph Graph::with_edge(Node i, Node j) const {
  if (has_edge(i, j)) {
    throw EdgeAlreadyPresent("edge (" + std::to_string(i) + "," + std::to_string(j) + ") already present");
  }
  Graph g = *this;
  g.toggle(i, j);
  return g;
}

Graph Graph::without_edge(Node i, Node j) const {
  if (!has_edge(i, j)) {
    throw EdgeAbsent("edge (" + std::to_string(i) + "," + std::to_string(j) + ") absent");
  }
  Graph g = *this;
  g.toggle(i, j);
  return g;
}

int Graph::degree(Node i) const {
  if (i < 0 || i >= n_) throw NodeOutOfRange("node " + std::to_string(i) + " out of range");
  int d = 0;
  for (int w = 0; w < words_; ++w) d += std::popcount(bits_[i * words_ + w]);
  return d;
}

DegreeSequence Graph::degree_sequence() const {
  std::vector<int> d(static_cast<std::size_t>(n_));
  for (Node i = 0; i < n_; ++i) d[i] = degree(i);
  return DegreeSequence(std::move(d));
}

std::vector<Node> Graph::neighbors(Node i) const {
  if (i < 0 || i >= n_) throw NodeOutOfRange("node " + std::to_string(i) + " out of range");
  std::vector<Node> out;
  for (Node j = 0; j < n_; ++j) {
    if (bit(i, j)) out.push_back(j);
  }
  return out;
}

std::vector<std::pair<Node, Node>> Graph::edges() const {
  std::vector<std::pair<Node, Node>> out;
  for (Node i = 0; i < n_; ++i) {
    for (Node j = i + 1; j < n_; ++j) {
      if (bit(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

GraphCode Graph::code() const {
  if (pair_count(n_) > 64) throw EnumerationTooLarge("integer code needs pair_count(n) <= 64");
  GraphCode code = 0;
  int rank = 0;
  for (Node i = 0; i < n_; ++i) {
    for (Node j = i + 1; j < n_; ++j, ++rank) {
      if (bit(i, j)) code |= GraphCode{1} << rank;
    }
  }
  return code;
}

std::string Graph::code_string() const {
  mpz_class code = 0;
  int rank = 0;
  for (Node i = 0; i < n_; ++i) {
    for (Node j = i + 1; j < n_; ++j, ++rank) {
      if (bit(i, j)) mpz_setbit(code.get_mpz_t(), static_cast<mp_bitcnt_t>(rank));
    }
  }
  return code.get_str();
}

bool eg_check(const DegreeSequence& d) {
  const int n = d.size();
  if (n == 0) return true;
  std::vector<long long> sorted;
  sorted.reserve(static_cast<std::size_t>(n));
  for (int x : d) {
    if (x < 0 || x > n - 1) return false;
    sorted.push_back(x);
  }
  if (d.sum() % 2 != 0) return false;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());

  // sum_{i<=r} d_i <= r(r-1) + sum_{i>r} min(d_i, r) for every r
  long long prefix = 0;
  for (int r = 1; r <= n; ++r) {
    prefix += sorted[r - 1];
    long long tail = 0;
    for (int i = r; i < n; ++i) tail += std::min<long long>(sorted[i], r);
    if (prefix > static_cast<long long>(r) * (r - 1) + tail) return false;
  }
  return true;
}

Graph realize(const DegreeSequence& d) {
  if (!eg_check(d)) throw NotGraphical("degree sequence " + d.to_string() + " is not graphical");
  const int n = d.size();
  if (n < kMinNodes) {
    throw NotGraphical("degree sequence " + d.to_string() + " has fewer than 2 nodes");
  }
  Graph g(n);
  std::vector<int> residual(d.begin(), d.end());
  std::vector<Node> order(static_cast<std::size_t>(n));

  auto by_residual = [&](Node a, Node b) {
    if (residual[a] != residual[b]) return residual[a] > residual[b];
    return a < b;
  };

  for (;;) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), by_residual);
    const Node hub = order[0];
    const int need = residual[hub];
    if (need == 0) break;
    int placed = 0;
    for (int idx = 1; idx < n && placed < need; ++idx) {
      const Node v = order[idx];
      if (residual[v] == 0) break;
      g = g.with_edge(hub, v);
      --residual[v];
      ++placed;
    }
    if (placed != need) throw NotGraphical("degree sequence " + d.to_string() + " is not graphical");
    residual[hub] = 0;
  }
  return g;
}

int enumeration_edge_cap() {
  int cap = kMaxEnumerationEdges;
  if (const char* env = std::getenv("NETFORM_MAX_ENUM_EDGES")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0 && v < cap) cap = static_cast<int>(v);
  }
  return cap;
}

void require_enumerable(int n) {
  if (n < kMinNodes) throw NodeOutOfRange("node count " + std::to_string(n) + " below 2");
  const int cap = enumeration_edge_cap();
  if (pair_count(n) > cap) {
    throw EnumerationTooLarge("n=" + std::to_string(n) + " has " + std::to_string(pair_count(n)) +
                              " edge slots; enumeration cap is " + std::to_string(cap));
  }
}

AllGraphs::AllGraphs(int n) : n_(n), first_(0), last_(0) {
  require_enumerable(n);
  last_ = GraphCode{1} << pair_count(n);
}

AllGraphs::AllGraphs(int n, GraphCode first, GraphCode last) : n_(n), first_(first), last_(last) {
  require_enumerable(n);
  const GraphCode total = GraphCode{1} << pair_count(n);
  if (first > last || last > total) throw NodeOutOfRange("code range out of bounds");
}

std::vector<AllGraphs> partition_all_graphs(int n, int parts) {
  require_enumerable(n);
  const GraphCode total = GraphCode{1} << pair_count(n);
  parts = std::max(1, parts);
  if (static_cast<GraphCode>(parts) > total) parts = static_cast<int>(total);
  std::vector<AllGraphs> out;
  GraphCode begin = 0;
  for (int p = 0; p < parts; ++p) {
    GraphCode end = total * static_cast<GraphCode>(p + 1) / static_cast<GraphCode>(parts);
    out.emplace_back(n, begin, end);
    begin = end;
  }
  return out;
}

}  // namespace netform
