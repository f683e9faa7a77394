#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

namespace netform {

using Node = int;
using GraphCode = std::uint64_t;

inline constexpr int kMaxNodes = 256;
inline constexpr int kMinNodes = 2;
/// Hard cap on edge slots n(n-1)/2 for exhaustive enumeration (n <= 8).
inline constexpr int kMaxEnumerationEdges = 28;

/// Number of unordered pairs on n nodes.
constexpr int pair_count(int n) { return n * (n - 1) / 2; }

/// Rank of pair (i, j), i < j, in lexicographic order. Bit `rank` of the graph code is edge ij.
constexpr int pair_rank(int n, Node i, Node j) { return i * n - i * (i + 1) / 2 + (j - i - 1); }

/// Inverse of pair_rank.
std::pair<Node, Node> pair_at(int n, int rank);

/// Vector of per-node degrees in node order (not sorted).
class DegreeSequence {
 public:
  DegreeSequence() = default;
  explicit DegreeSequence(std::vector<int> degrees) : d_(std::move(degrees)) {}
  DegreeSequence(std::initializer_list<int> degrees) : d_(degrees) {}

  int size() const { return static_cast<int>(d_.size()); }
  int operator[](std::size_t i) const { return d_[i]; }
  const std::vector<int>& values() const { return d_; }
  auto begin() const { return d_.begin(); }
  auto end() const { return d_.end(); }

  long long sum() const;
  bool has_even_sum() const { return sum() % 2 == 0; }

  std::string to_string() const;  // "[1,1,1,2,3]"

  friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> d_;
};

/// Labeled simple undirected graph on n <= 256 nodes with value semantics.
/// Adjacency is stored as one packed bit row per node.
class Graph {
 public:
  /// Empty graph on n nodes. Throws NodeOutOfRange unless 2 <= n <= kMaxNodes.
  explicit Graph(int n);

  static Graph empty(int n) { return Graph(n); }
  static Graph complete(int n);
  /// Throws NodeOutOfRange / EdgeAlreadyPresent on bad or repeated pairs.
  static Graph from_edges(int n, const std::vector<std::pair<Node, Node>>& edges);
  /// Requires pair_count(n) <= 64.
  static Graph from_code(int n, GraphCode code);
  static Graph from_code_string(int n, const std::string& decimal);

  int n() const { return n_; }
  int edge_count() const;
  bool has_edge(Node i, Node j) const;

  /// Copy with ij added. Throws EdgeAlreadyPresent or NodeOutOfRange.
  [[nodiscard]] Graph with_edge(Node i, Node j) const;
  /// Copy with ij removed. Throws EdgeAbsent or NodeOutOfRange.
  [[nodiscard]] Graph without_edge(Node i, Node j) const;

  int degree(Node i) const;
  DegreeSequence degree_sequence() const;
  std::vector<Node> neighbors(Node i) const;

  /// Edges in canonical pair order.
  std::vector<std::pair<Node, Node>> edges() const;

  /// Integer code; throws EnumerationTooLarge when pair_count(n) > 64.
  GraphCode code() const;
  /// Decimal code, valid for every n.
  std::string code_string() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_pair(Node i, Node j) const;
  bool bit(Node i, Node j) const { return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U; }
  void toggle(Node i, Node j) {
    bits_[i * words_ + j / 64] ^= std::uint64_t{1} << (j % 64);
    bits_[j * words_ + i / 64] ^= std::uint64_t{1} << (i % 64);
  }

  int n_;
  int words_;
  std::vector<std::uint64_t> bits_;
};

/// Erdős–Gallai test. Entries outside [0, n-1] make the sequence non-graphical.
bool eg_check(const DegreeSequence& d);

/// Havel–Hakimi realization: repeatedly connects the node with the largest
/// remaining degree (lowest index on ties) to the next-largest ones.
/// Throws NotGraphical.
Graph realize(const DegreeSequence& d);

/// Effective enumeration cap: kMaxEnumerationEdges, lowered by the
/// NETFORM_MAX_ENUM_EDGES environment variable when it is set to a smaller value.
int enumeration_edge_cap();

/// Throws EnumerationTooLarge when pair_count(n) exceeds enumeration_edge_cap().
void require_enumerable(int n);

/// Every labeled graph on n nodes, in increasing code order.
class AllGraphs {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Graph;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Graph;

    iterator() = default;
    iterator(int n, GraphCode code) : n_(n), code_(code) {}
    Graph operator*() const { return Graph::from_code(n_, code_); }
    iterator& operator++() {
      ++code_;
      return *this;
    }
    iterator operator++(int) {
      iterator tmp = *this;
      ++code_;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.code_ == b.code_; }

   private:
    int n_ = 0;
    GraphCode code_ = 0;
  };

  /// Throws EnumerationTooLarge past the cap.
  explicit AllGraphs(int n);
  /// Sub-range [first, last) of codes, for partitioning across workers.
  AllGraphs(int n, GraphCode first, GraphCode last);

  iterator begin() const { return {n_, first_}; }
  iterator end() const { return {n_, last_}; }
  GraphCode size() const { return last_ - first_; }
  int n() const { return n_; }

 private:
  int n_;
  GraphCode first_;
  GraphCode last_;
};

inline AllGraphs all_graphs(int n) { return AllGraphs(n); }

/// Splits [0, 2^pair_count(n)) into `parts` contiguous ranges of near-equal size.
std::vector<AllGraphs> partition_all_graphs(int n, int parts);

}  // namespace netform
