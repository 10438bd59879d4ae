#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gpd/bigint.hpp"
#include "gpd/perms.hpp"

namespace gpd {

// The seven tile kinds.  Pipe connectivity, inputs {W, S} to outputs {N, E}:
//   a: W->N, S->E    j: W->N    r: S->E
//   c: W->E, S->N    h: W->E    v: S->N    Blank: nothing
// Pipes always head East or North, never exit S or W.
enum class Tile : uint8_t { A, J, R, C, H, V, Blank };

char tile_char(Tile t);  // a j r c h v .
std::optional<Tile> tile_of_char(char c);
bool is_turn(Tile t);  // a, j, r

// Constraint on one boundary edge.
struct EdgeConstraint {
  enum Kind : uint8_t { Label, Blank, Free } kind = Blank;
  int label = 0;
  static EdgeConstraint lab(int l) { return {Label, l}; }
  static EdgeConstraint blank() { return {Blank, 0}; }
  static EdgeConstraint free() { return {Free, 0}; }
  bool matches(int edge) const {
    return kind == Free || edge == (kind == Label ? label : 0);
  }
};

// Per-edge boundary constraints plus the allowed tile set.  West and South
// are the input sides and must be Label or Blank; North and East accept
// Label, Blank or Free.
struct BoundarySpec {
  int rows = 0, cols = 0;
  std::vector<EdgeConstraint> west, north, east, south;
  std::array<bool, 7> allowed{true, true, true, true, true, true, true};

  bool allows(Tile t) const { return allowed[static_cast<int>(t)]; }
  // InconsistentSpec on size mismatch, Free inputs, a label on two input
  // edges, or a label on two output edges.
  void validate() const;
};

// West rows 1..n top to bottom, North column j carries w^{-1}(j),
// East and South blank, all tiles allowed.
BoundarySpec standard_spec(const Permutation& w);
// West 1..n, South n+1..2n left to right, North u^{-1}(j), East n+v^{-1}(i),
// tiles {a, c} only.
BoundarySpec dbru_spec(const Permutation& u, const Permutation& v);
// West row r carries r (row 1 at the top), North column j carries i where
// w_ij = 1 (blank for unmatched columns), East free, South blank, all tiles.
BoundarySpec partial_spec(const PartialPermutation& w);

// A filled grid with every edge label recorded (0 = blank edge).
// Square (i, j): row i from the top, column j from the left, both 1-based.
struct Gpd {
  int rows = 0, cols = 0;
  std::vector<Tile> tiles;
  std::vector<int> north, east, west, south;  // per-square edge labels

  int idx(int i, int j) const { return (i - 1) * cols + (j - 1); }
  Tile tile(int i, int j) const { return tiles[idx(i, j)]; }
  int north_label(int i, int j) const { return north[idx(i, j)]; }
  int east_label(int i, int j) const { return east[idx(i, j)]; }
  int west_label(int i, int j) const { return west[idx(i, j)]; }
  int south_label(int i, int j) const { return south[idx(i, j)]; }
  int turn_count() const;

  friend bool operator==(const Gpd&, const Gpd&) = default;
};

// Depth-first enumeration in the canonical order: squares scanned bottom row
// first, each row left to right, tile branch order c,a / h,j / v,r / Blank.
// The Gpd reference passed to emit is reused between calls; copy to keep.
void enumerate(const BoundarySpec& spec,
               const std::function<void(const Gpd&)>& emit);

// Same multiset and order of results for every nthreads >= 1; emit runs on
// the calling thread.  Workers fill subtrees rooted at the distinct
// completions of the bottom row.
void enumerate_parallel(const BoundarySpec& spec, int nthreads,
                        const std::function<void(const Gpd&)>& emit);

std::vector<Gpd> all_gpds(const BoundarySpec& spec, int nthreads = 1);
BigInt count(const BoundarySpec& spec, int nthreads = 1);

// Re-derives every edge label from the tiles and the spec's input sides and
// checks the result against the stored labels and all boundary constraints.
// Also re-traces each pipe from its entry to its exit.  Throws
// ValidationError with a diagnostic on any mismatch.
void validate_gpd(const Gpd& g, const BoundarySpec& spec);

// One pipe's journey, from the independent re-tracer.
struct PipeTrace {
  int label = 0;
  int squares_visited = 0;
  int east_to_north_turns = 0;  // tiles where the pipe goes W-in, N-out
  bool exits_north = false;
  int exit_index = 0;  // column if exits_north, else row
};
std::vector<PipeTrace> trace_pipes(const Gpd& g);

// Number of c tiles shared by each unordered pair of pipes, keyed by label
// pair (p < q).  Used by the CPD/BPD double-crossing predicates.
std::vector<std::pair<std::pair<int, int>, int>> crossing_counts(const Gpd& g);

// Canonical text: one row of tile characters per line, e.g. "acjv\ncjrj\n...".
std::string render(const Gpd& g);
// Rebuild a Gpd from its rendered text under the given spec (labels are
// re-derived by propagation).  ParseError / ValidationError on bad input.
Gpd parse_gpd(const std::string& text, const BoundarySpec& spec);

// {"rows":..,"cols":..,"tiles":[["a","c",..],..],
//  "west":[..],"north":[..],"east":[..],"south":[..]}
// with boundary entries as labels or null for blank.
nlohmann::ordered_json to_json(const Gpd& g);
Gpd gpd_from_json(const nlohmann::json& j);

}  // namespace gpd
