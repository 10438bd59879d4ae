#include "gpd/gpds.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <thread>

#include "gpd/errors.hpp"

namespace gpd {

char tile_char(Tile t) {
  switch (t) {
    case Tile::A: return 'a';
    case Tile::J: return 'j';
    case Tile::R: return 'r';
    case Tile::C: return 'c';
    case Tile::H: return 'h';
    case Tile::V: return 'v';
    case Tile::Blank: return '.';
  }
  throw ValidationError("corrupt tile");
}

std::optional<Tile> tile_of_char(char c) {
  switch (c) {
    case 'a': return Tile::A;
    case 'j': return Tile::J;
    case 'r': return Tile::R;
    case 'c': return Tile::C;
    case 'h': return Tile::H;
    case 'v': return Tile::V;
    case '.': return Tile::Blank;
    default: return std::nullopt;
  }
}

bool is_turn(Tile t) { return t == Tile::A || t == Tile::J || t == Tile::R; }

void BoundarySpec::validate() const {
  if (rows < 1 || cols < 1) throw InconsistentSpec("empty grid");
  if (static_cast<int>(west.size()) != rows ||
      static_cast<int>(east.size()) != rows ||
      static_cast<int>(north.size()) != cols ||
      static_cast<int>(south.size()) != cols)
    throw InconsistentSpec("boundary arrays do not match the grid");
  std::set<int> in_labels, out_labels;
  auto check_input = [&](const EdgeConstraint& e, const char* side) {
    if (e.kind == EdgeConstraint::Free)
      throw InconsistentSpec(std::string("free constraint on input side ") +
                             side);
    if (e.kind == EdgeConstraint::Label) {
      if (e.label < 1) throw InconsistentSpec("labels must be positive");
      if (!in_labels.insert(e.label).second)
        throw InconsistentSpec("label " + std::to_string(e.label) +
                               " appears on two input edges");
    }
  };
  auto check_output = [&](const EdgeConstraint& e) {
    if (e.kind == EdgeConstraint::Label) {
      if (e.label < 1) throw InconsistentSpec("labels must be positive");
      if (!out_labels.insert(e.label).second)
        throw InconsistentSpec("label " + std::to_string(e.label) +
                               " appears on two output edges");
    }
  };
  for (const auto& e : west) check_input(e, "west");
  for (const auto& e : south) check_input(e, "south");
  for (const auto& e : north) check_output(e);
  for (const auto& e : east) check_output(e);
}

BoundarySpec standard_spec(const Permutation& w) {
  int n = w.size();
  if (n < 1) throw ValidationError("empty permutation");
  BoundarySpec s;
  s.rows = s.cols = n;
  Permutation winv = w.inverse();
  for (int i = 1; i <= n; ++i) {
    s.west.push_back(EdgeConstraint::lab(i));
    s.east.push_back(EdgeConstraint::blank());
  }
  for (int j = 1; j <= n; ++j) {
    s.north.push_back(EdgeConstraint::lab(winv(j)));
    s.south.push_back(EdgeConstraint::blank());
  }
  return s;
}

BoundarySpec dbru_spec(const Permutation& u, const Permutation& v) {
  int n = u.size();
  if (v.size() != n) throw ValidationError("double Bruhat sizes differ");
  if (n < 1) throw ValidationError("empty permutation");
  BoundarySpec s;
  s.rows = s.cols = n;
  Permutation uinv = u.inverse(), vinv = v.inverse();
  for (int i = 1; i <= n; ++i) {
    s.west.push_back(EdgeConstraint::lab(i));
    s.east.push_back(EdgeConstraint::lab(n + vinv(i)));
  }
  for (int j = 1; j <= n; ++j) {
    s.south.push_back(EdgeConstraint::lab(n + j));
    s.north.push_back(EdgeConstraint::lab(uinv(j)));
  }
  s.allowed = {true, false, false, true, false, false, false};  // a, c only
  return s;
}

BoundarySpec partial_spec(const PartialPermutation& w) {
  BoundarySpec s;
  s.rows = w.rows();
  s.cols = w.cols();
  for (int i = 1; i <= s.rows; ++i) {
    s.west.push_back(EdgeConstraint::lab(i));
    s.east.push_back(EdgeConstraint::free());
  }
  for (int j = 1; j <= s.cols; ++j) {
    int label = 0;
    for (int i = 1; i <= s.rows; ++i)
      if (w.entry(i, j) == 1) label = i;
    s.north.push_back(label ? EdgeConstraint::lab(label)
                            : EdgeConstraint::blank());
    s.south.push_back(EdgeConstraint::blank());
  }
  return s;
}

int Gpd::turn_count() const {
  int k = 0;
  for (Tile t : tiles) k += is_turn(t);
  return k;
}

namespace {

int input_label(const EdgeConstraint& e) {
  return e.kind == EdgeConstraint::Label ? e.label : 0;
}

// Depth-first filler.  Scans the bottom row first, then upward, columns left
// to right; both input edges of a square are known when it is reached.
struct Enumerator {
  const BoundarySpec& spec;
  // stop_row > 0: stop after that row passes its East check and hand the
  // partial state to on_prefix instead of descending further.
  int stop_row = 0;
  std::function<void(const Gpd&, const std::vector<int>&)> on_prefix;
  std::function<void(const Gpd&)> emit;

  Gpd g;
  std::vector<int> colN;
  int pending = 0;

  explicit Enumerator(const BoundarySpec& s) : spec(s) {
    g.rows = s.rows;
    g.cols = s.cols;
    size_t sz = static_cast<size_t>(s.rows) * s.cols;
    g.tiles.assign(sz, Tile::Blank);
    g.north.assign(sz, 0);
    g.east.assign(sz, 0);
    g.west.assign(sz, 0);
    g.south.assign(sz, 0);
    colN.resize(s.cols);
  }

  void start() {
    for (int j = 1; j <= spec.cols; ++j)
      colN[j - 1] = input_label(spec.south[j - 1]);
    pending = input_label(spec.west[spec.rows - 1]);
    fill(spec.rows, 1);
  }

  // resume a worker from a recorded prefix (rows below start_row are filled)
  void resume(const Gpd& prefix, const std::vector<int>& cols, int start_row) {
    g = prefix;
    colN = cols;
    if (start_row == 0) {
      finish();
      return;
    }
    pending = input_label(spec.west[start_row - 1]);
    fill(start_row, 1);
  }

  void finish() {
    for (int j = 1; j <= spec.cols; ++j)
      if (!spec.north[j - 1].matches(colN[j - 1])) return;
    emit(g);
  }

  void fill(int i, int j) {
    if (j > spec.cols) {
      if (!spec.east[i - 1].matches(pending)) return;
      if (i == stop_row) {
        on_prefix(g, colN);
        return;
      }
      if (i == 1) {
        finish();
        return;
      }
      int saved = pending;
      pending = input_label(spec.west[i - 2]);
      fill(i - 1, 1);
      pending = saved;
      return;
    }
    const int w = pending, s = colN[j - 1];
    auto attempt = [&](Tile t, int nl, int el) {
      if (!spec.allows(t)) return;
      const int k = g.idx(i, j);
      g.tiles[k] = t;
      g.west[k] = w;
      g.south[k] = s;
      g.north[k] = nl;
      g.east[k] = el;
      colN[j - 1] = nl;
      pending = el;
      fill(i, j + 1);
      colN[j - 1] = s;
      pending = w;
    };
    if (w && s) {
      attempt(Tile::C, s, w);
      attempt(Tile::A, w, s);
    } else if (w) {
      attempt(Tile::H, 0, w);
      attempt(Tile::J, w, 0);
    } else if (s) {
      attempt(Tile::V, s, 0);
      attempt(Tile::R, 0, s);
    } else {
      attempt(Tile::Blank, 0, 0);
    }
  }
};

}  // namespace

void enumerate(const BoundarySpec& spec,
               const std::function<void(const Gpd&)>& emit) {
  spec.validate();
  Enumerator e(spec);
  e.emit = [&emit](const Gpd& g) { emit(g); };
  e.start();
}

void enumerate_parallel(const BoundarySpec& spec, int nthreads,
                        const std::function<void(const Gpd&)>& emit) {
  if (nthreads <= 1) {
    enumerate(spec, emit);
    return;
  }
  spec.validate();

  // collect subtree roots: all completions of the bottom row
  std::vector<std::pair<Gpd, std::vector<int>>> prefixes;
  {
    Enumerator e(spec);
    e.stop_row = spec.rows;
    e.on_prefix = [&prefixes](const Gpd& g, const std::vector<int>& cols) {
      prefixes.emplace_back(g, cols);
    };
    e.start();
  }

  const int start_row = spec.rows - 1;
  std::vector<std::vector<Gpd>> results(prefixes.size());
  auto worker = [&](int tid) {
    for (size_t p = tid; p < prefixes.size(); p += nthreads) {
      Enumerator e(spec);
      e.emit = [&results, p](const Gpd& g) { results[p].push_back(g); };
      e.resume(prefixes[p].first, prefixes[p].second, start_row);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
  for (auto& t : pool) t.join();

  for (const auto& shard : results)
    for (const Gpd& g : shard) emit(g);
}

std::vector<Gpd> all_gpds(const BoundarySpec& spec, int nthreads) {
  std::vector<Gpd> out;
  enumerate_parallel(spec, nthreads, [&out](const Gpd& g) { out.push_back(g); });
  return out;
}

BigInt count(const BoundarySpec& spec, int nthreads) {
  BigInt n = 0;
  enumerate_parallel(spec, nthreads, [&n](const Gpd&) { ++n; });
  return n;
}

namespace {

// Rebuild all edge labels of a tile grid by forward propagation from the
// spec's input sides, checking tile kinds against edge occupancy and the
// output constraints.  The single source of truth for parse and validation.
Gpd propagate(const std::vector<Tile>& tiles, const BoundarySpec& spec) {
  spec.validate();
  Gpd g;
  g.rows = spec.rows;
  g.cols = spec.cols;
  g.tiles = tiles;
  size_t sz = static_cast<size_t>(spec.rows) * spec.cols;
  if (tiles.size() != sz) throw ValidationError("tile grid size mismatch");
  g.north.assign(sz, 0);
  g.east.assign(sz, 0);
  g.west.assign(sz, 0);
  g.south.assign(sz, 0);

  std::vector<int> colN(spec.cols);
  for (int j = 1; j <= spec.cols; ++j)
    colN[j - 1] = input_label(spec.south[j - 1]);

  for (int i = spec.rows; i >= 1; --i) {
    int pending = input_label(spec.west[i - 1]);
    for (int j = 1; j <= spec.cols; ++j) {
      const int k = g.idx(i, j);
      const int w = pending, s = colN[j - 1];
      const Tile t = tiles[k];
      int nl = 0, el = 0;
      auto bad = [&]() {
        return ValidationError("tile '" + std::string(1, tile_char(t)) +
                               "' at (" + std::to_string(i) + "," +
                               std::to_string(j) +
                               ") does not match its input edges");
      };
      switch (t) {
        case Tile::C:
          if (!w || !s) throw bad();
          nl = s, el = w;
          break;
        case Tile::A:
          if (!w || !s) throw bad();
          nl = w, el = s;
          break;
        case Tile::H:
          if (!w || s) throw bad();
          el = w;
          break;
        case Tile::J:
          if (!w || s) throw bad();
          nl = w;
          break;
        case Tile::V:
          if (w || !s) throw bad();
          nl = s;
          break;
        case Tile::R:
          if (w || !s) throw bad();
          el = s;
          break;
        case Tile::Blank:
          if (w || s) throw bad();
          break;
      }
      if (!spec.allows(t))
        throw ValidationError("tile '" + std::string(1, tile_char(t)) +
                              "' is not in the allowed set");
      g.west[k] = w;
      g.south[k] = s;
      g.north[k] = nl;
      g.east[k] = el;
      colN[j - 1] = nl;
      pending = el;
    }
    if (!spec.east[i - 1].matches(pending))
      throw ValidationError("East constraint violated in row " +
                            std::to_string(i));
  }
  for (int j = 1; j <= spec.cols; ++j)
    if (!spec.north[j - 1].matches(colN[j - 1]))
      throw ValidationError("North constraint violated in column " +
                            std::to_string(j));
  return g;
}

}  // namespace

void validate_gpd(const Gpd& g, const BoundarySpec& spec) {
  if (g.rows != spec.rows || g.cols != spec.cols)
    throw ValidationError("grid dimensions do not match the spec");
  Gpd fresh = propagate(g.tiles, spec);
  if (fresh.north != g.north || fresh.east != g.east ||
      fresh.west != g.west || fresh.south != g.south)
    throw ValidationError("stored edge labels disagree with propagation");
  // independent pipe re-trace: every input pipe must exit where recorded
  auto traces = trace_pipes(g);
  int inputs = 0;
  for (int i = 1; i <= spec.rows; ++i)
    if (spec.west[i - 1].kind == EdgeConstraint::Label) ++inputs;
  for (int j = 1; j <= spec.cols; ++j)
    if (spec.south[j - 1].kind == EdgeConstraint::Label) ++inputs;
  if (static_cast<int>(traces.size()) != inputs)
    throw ValidationError("pipe count does not match input labels");
  for (const auto& tr : traces) {
    int exit_label = tr.exits_north ? g.north_label(1, tr.exit_index)
                                    : g.east_label(tr.exit_index, g.cols);
    if (exit_label != tr.label)
      throw ValidationError("pipe " + std::to_string(tr.label) +
                            " exits with a different label");
  }
}

std::vector<PipeTrace> trace_pipes(const Gpd& g) {
  std::vector<PipeTrace> out;
  // entry points: west edges of column 1 squares, south edges of bottom row
  struct Entry {
    int i, j;
    bool from_west;
    int label;
  };
  std::vector<Entry> entries;
  for (int i = 1; i <= g.rows; ++i)
    if (int l = g.west_label(i, 1)) entries.push_back({i, 1, true, l});
  for (int j = 1; j <= g.cols; ++j)
    if (int l = g.south_label(g.rows, j)) entries.push_back({g.rows, j, false, l});

  for (const auto& start : entries) {
    PipeTrace tr;
    tr.label = start.label;
    int i = start.i, j = start.j;
    bool from_west = start.from_west;
    while (true) {
      if (i < 1 || j > g.cols) break;  // stepped off the grid
      Tile t = g.tile(i, j);
      ++tr.squares_visited;
      bool to_north;
      if (from_west) {
        switch (t) {
          case Tile::A:
          case Tile::J: to_north = true; break;
          case Tile::C:
          case Tile::H: to_north = false; break;
          default:
            throw ValidationError("pipe from West meets tile '" +
                                  std::string(1, tile_char(t)) + "'");
        }
        if (to_north) ++tr.east_to_north_turns;
      } else {
        switch (t) {
          case Tile::C:
          case Tile::V: to_north = true; break;
          case Tile::A:
          case Tile::R: to_north = false; break;
          default:
            throw ValidationError("pipe from South meets tile '" +
                                  std::string(1, tile_char(t)) + "'");
        }
      }
      if (to_north) {
        if (i == 1) {
          tr.exits_north = true;
          tr.exit_index = j;
          break;
        }
        --i;
        from_west = false;  // enters the square above through its South edge
      } else {
        if (j == g.cols) {
          tr.exits_north = false;
          tr.exit_index = i;
          break;
        }
        ++j;
        from_west = true;
      }
    }
    out.push_back(tr);
  }
  return out;
}

std::vector<std::pair<std::pair<int, int>, int>> crossing_counts(const Gpd& g) {
  std::map<std::pair<int, int>, int> counts;
  for (int i = 1; i <= g.rows; ++i)
    for (int j = 1; j <= g.cols; ++j)
      if (g.tile(i, j) == Tile::C) {
        int p = g.west_label(i, j), q = g.south_label(i, j);
        counts[{std::min(p, q), std::max(p, q)}] += 1;
      }
  return {counts.begin(), counts.end()};
}

std::string render(const Gpd& g) {
  std::string out;
  for (int i = 1; i <= g.rows; ++i) {
    if (i > 1) out += '\n';
    for (int j = 1; j <= g.cols; ++j) out += tile_char(g.tile(i, j));
  }
  return out;
}

Gpd parse_gpd(const std::string& text, const BoundarySpec& spec) {
  std::vector<Tile> tiles;
  int row_len = -1, col = 0, rows = 0;
  for (size_t p = 0; p <= text.size(); ++p) {
    if (p == text.size() || text[p] == '\n') {
      if (col == 0 && p == text.size()) break;  // ignore one trailing newline
      ++rows;
      if (row_len == -1)
        row_len = col;
      else if (col != row_len)
        throw ParseError("ragged grid text");
      col = 0;
      continue;
    }
    auto t = tile_of_char(text[p]);
    if (!t) throw ParseError("bad tile character '" + std::string(1, text[p]) + "'");
    tiles.push_back(*t);
    ++col;
  }
  if (rows != spec.rows || row_len != spec.cols)
    throw ParseError("grid text dimensions do not match the spec");
  return propagate(tiles, spec);
}

nlohmann::ordered_json to_json(const Gpd& g) {
  auto edge = [](int label) {
    return label ? nlohmann::ordered_json(label) : nlohmann::ordered_json(nullptr);
  };
  nlohmann::ordered_json tiles = nlohmann::ordered_json::array();
  for (int i = 1; i <= g.rows; ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int j = 1; j <= g.cols; ++j)
      row.push_back(std::string(1, tile_char(g.tile(i, j))));
    tiles.push_back(std::move(row));
  }
  nlohmann::ordered_json west = nlohmann::ordered_json::array(),
                         north = nlohmann::ordered_json::array(),
                         east = nlohmann::ordered_json::array(),
                         south = nlohmann::ordered_json::array();
  for (int i = 1; i <= g.rows; ++i) {
    west.push_back(edge(g.west_label(i, 1)));
    east.push_back(edge(g.east_label(i, g.cols)));
  }
  for (int j = 1; j <= g.cols; ++j) {
    north.push_back(edge(g.north_label(1, j)));
    south.push_back(edge(g.south_label(g.rows, j)));
  }
  return nlohmann::ordered_json{{"rows", g.rows},     {"cols", g.cols},
                                {"tiles", std::move(tiles)}, {"west", std::move(west)},
                                {"north", std::move(north)}, {"east", std::move(east)},
                                {"south", std::move(south)}};
}

Gpd gpd_from_json(const nlohmann::json& j) {
  try {
    int rows = j.at("rows").get<int>();
    int cols = j.at("cols").get<int>();
    if (rows < 1 || cols < 1) throw ParseError("bad grid dimensions");
    auto edge_array = [&](const char* key, int expect) {
      const auto& arr = j.at(key);
      if (!arr.is_array() || static_cast<int>(arr.size()) != expect)
        throw ParseError(std::string("bad '") + key + "' array");
      std::vector<EdgeConstraint> out;
      for (const auto& e : arr) {
        if (e.is_null())
          out.push_back(EdgeConstraint::blank());
        else
          out.push_back(EdgeConstraint::lab(e.get<int>()));
      }
      return out;
    };
    BoundarySpec spec;
    spec.rows = rows;
    spec.cols = cols;
    spec.west = edge_array("west", rows);
    spec.east = edge_array("east", rows);
    spec.north = edge_array("north", cols);
    spec.south = edge_array("south", cols);

    const auto& tj = j.at("tiles");
    if (!tj.is_array() || static_cast<int>(tj.size()) != rows)
      throw ParseError("bad 'tiles' array");
    std::vector<Tile> tiles;
    for (const auto& rowj : tj) {
      if (!rowj.is_array() || static_cast<int>(rowj.size()) != cols)
        throw ParseError("ragged 'tiles' array");
      for (const auto& cell : rowj) {
        auto s = cell.get<std::string>();
        auto t = s.size() == 1 ? tile_of_char(s[0]) : std::nullopt;
        if (!t) throw ParseError("bad tile '" + s + "'");
        tiles.push_back(*t);
      }
    }
    return propagate(tiles, spec);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed grid JSON: ") + e.what());
  }
}

}  // namespace gpd
