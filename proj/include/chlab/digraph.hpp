#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "chlab/errors.hpp"

namespace chlab {

using Arc = std::pair<int, int>;

// Immutable loop-free digraph on vertices 0..n-1 without parallel arcs.
// Keeps sorted adjacency lists on both sides; for n <= 64 it additionally
// keeps one 64-bit adjacency row per vertex and side, which is the hot path
// for triangle and 4-cycle scans. Values are safe to share across threads.
class Digraph {
 public:
  // Validates and builds. Throws ValidationError with kind "range", "loop"
  // or "parallel".
  static Digraph build(int n, std::vector<Arc> arcs);

  int order() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }

  // Arcs in sorted (from, to) order.
  const std::vector<Arc>& arcs() const { return arcs_; }

  const std::vector<int>& out(int v) const { return out_[v]; }
  const std::vector<int>& in(int v) const { return in_[v]; }
  int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
  int in_degree(int v) const { return static_cast<int>(in_[v].size()); }

  bool has_arc(int u, int v) const;

  bool has_bitrows() const { return n_ <= 64; }
  std::uint64_t out_bits(int v) const { return out_bits_[v]; }
  std::uint64_t in_bits(int v) const { return in_bits_[v]; }

  Digraph reversed() const;

  bool operator==(const Digraph& o) const { return n_ == o.n_ && arcs_ == o.arcs_; }

 private:
  Digraph() = default;

  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_, in_;
  std::vector<std::uint64_t> out_bits_, in_bits_;  // empty when n_ > 64
};

struct DegreeSummary {
  std::vector<int> out_degree;
  std::vector<int> in_degree;
  int delta_plus = 0;   // minimum out-degree
  int delta_minus = 0;  // minimum in-degree
  int delta_zero = 0;   // min(delta_plus, delta_minus)
};

struct InducedSubgraph {
  Digraph graph;
  std::vector<int> original;  // original[i] = label of vertex i in the parent
};

// True iff no digon (no pair of arcs (x,y) and (y,x)).
bool is_oriented(const Digraph& d);

DegreeSummary degrees(const Digraph& d);

// Subdigraph induced by S (duplicates in S are an error, empty S is an
// error). Vertices are relabeled to 0..|S|-1 in ascending original order.
InducedSubgraph induced(const Digraph& d, const std::vector<int>& s);

// --- text graph format ------------------------------------------------
// First non-comment line: "n <N>". Every further non-comment line: one arc
// "<u> <v>", 0-based. Lines starting with '#' (and blank lines) are ignored.
// Duplicate or loop lines are hard errors. Parse errors carry the 1-based
// line number.

Digraph parse_graph(std::istream& input);
Digraph parse_graph_text(const std::string& text);
Digraph parse_graph_file(const std::string& path);
std::string format_graph(const Digraph& d);
void write_graph_file(const Digraph& d, const std::string& path);

}  // namespace chlab
