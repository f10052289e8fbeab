#include "knotbound/knotio.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

#include "knotbound/errors.hpp"

namespace knotbound {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

// Slot k of a crossing is entered (true) or left (false) by its arc.
bool slot_is_in(const Crossing& x, int k) {
  switch (k) {
    case 0: return true;
    case 2: return false;
    case 1: return x.over_forward;
    default: return !x.over_forward;
  }
}

// Faces of the 4-valent map must satisfy Euler's formula on the sphere for
// every connected piece: V - E + F = 2.
bool is_planar(const std::vector<Crossing>& xs) {
  const int n = static_cast<int>(xs.size());
  if (n == 0) return true;
  std::vector<int> partner(4 * n, -1);
  std::vector<int> first_slot(2 * n + 1, -1);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < 4; ++k) {
      const int label = xs[i].arcs[k];
      const int dart = 4 * i + k;
      if (first_slot[label] < 0) {
        first_slot[label] = dart;
      } else {
        partner[dart] = first_slot[label];
        partner[first_slot[label]] = dart;
      }
    }
  UnionFind pieces(n);
  for (int d = 0; d < 4 * n; ++d) pieces.unite(d / 4, partner[d] / 4);
  int piece_count = 0;
  for (int i = 0; i < n; ++i) piece_count += pieces.find(i) == i;

  std::vector<char> seen(4 * n, 0);
  int faces = 0;
  for (int d = 0; d < 4 * n; ++d) {
    if (seen[d]) continue;
    ++faces;
    for (int e = d; !seen[e];) {
      seen[e] = 1;
      const int across = partner[e];
      e = 4 * (across / 4) + (across % 4 + 1) % 4;
    }
  }
  return faces == n + 2 * piece_count;
}

[[noreturn]] void invalid(const std::string& what) { throw InputError("invalid PD code: " + what); }

}  // namespace

// ------------------------------------------------------------------ PDCode

PDCode::PDCode() { build(); }

PDCode::PDCode(std::vector<Crossing> crossings, int free_loops)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
  build();
}

void PDCode::build() {
  const int n = size();
  if (free_loops_ < 0) invalid("negative free loop count");
  if (n == 0 && free_loops_ == 0) invalid("empty diagram");
  const int arcs = 2 * n;

  std::vector<int> in_count(arcs + 1, 0), out_count(arcs + 1, 0);
  head_.assign(arcs + 1, -1);
  head_under_.assign(arcs + 1, 0);
  next_.assign(arcs + 1, 0);
  for (int i = 0; i < n; ++i) {
    const Crossing& x = crossings_[i];
    for (int k = 0; k < 4; ++k) {
      const int label = x.arcs[k];
      if (label < 1 || label > arcs)
        invalid("arc label " + std::to_string(label) + " out of range 1.." + std::to_string(arcs));
      if (slot_is_in(x, k)) {
        ++in_count[label];
        head_[label] = i;
        head_under_[label] = k == 0;
      } else {
        ++out_count[label];
      }
    }
  }
  for (int label = 1; label <= arcs; ++label) {
    const int uses = in_count[label] + out_count[label];
    if (uses != 2)
      invalid("arc label " + std::to_string(label) + " appears " + std::to_string(uses) + " times");
    if (in_count[label] != 1)
      invalid("arc " + std::to_string(label) + " is not entered exactly once");
  }
  for (int label = 1; label <= arcs; ++label) {
    const Crossing& x = crossings_[head_[label]];
    next_[label] = head_under_[label] ? x.under_out() : x.over_out();
  }

  component_.assign(arcs + 1, -1);
  components_.clear();
  for (int start = 1; start <= arcs; ++start) {
    if (component_[start] >= 0) continue;
    const int id = static_cast<int>(components_.size());
    std::vector<int> cycle;
    for (int a = start; component_[a] < 0; a = next_[a]) {
      component_[a] = id;
      cycle.push_back(a);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      if (cycle[k] != start + static_cast<int>(k))
        invalid("arcs of the component through " + std::to_string(start) +
                " are not numbered consecutively");
    components_.push_back(std::move(cycle));
  }

  if (!is_planar(crossings_)) invalid("diagram is not planar");
}

PDCode PDCode::canonical(std::vector<Crossing> crossings, int free_loops) {
  std::map<int, int> head;      // label -> crossing index it enters
  std::map<int, bool> under;    // label enters as under-strand
  std::map<int, int> uses;
  for (int i = 0; i < static_cast<int>(crossings.size()); ++i)
    for (int k = 0; k < 4; ++k) {
      const int label = crossings[i].arcs[k];
      ++uses[label];
      if (slot_is_in(crossings[i], k)) {
        if (head.contains(label)) invalid("arc " + std::to_string(label) + " entered twice");
        head[label] = i;
        under[label] = k == 0;
      }
    }
  for (const auto& [label, count] : uses)
    if (count != 2 || !head.contains(label))
      invalid("arc label " + std::to_string(label) + " appears " + std::to_string(count) + " times");

  std::map<int, int> relabel;
  int next_label = 1;
  for (const auto& [start, unused] : uses) {
    if (relabel.contains(start)) continue;
    for (int a = start; !relabel.contains(a);) {
      relabel[a] = next_label++;
      const Crossing& x = crossings[head[a]];
      a = under[a] ? x.under_out() : x.over_out();
    }
  }
  for (Crossing& x : crossings)
    for (int& a : x.arcs) a = relabel.at(a);
  return PDCode(std::move(crossings), free_loops);
}

int PDCode::writhe() const {
  int w = 0;
  for (const Crossing& x : crossings_) w += x.sign();
  return w;
}

int crossing_sign(const PDCode& d, int index) { return d.crossing(index).sign(); }
int writhe(const PDCode& d) { return d.writhe(); }
int component_count(const PDCode& d) { return d.component_count(); }

PDCode switch_crossing(const PDCode& d, int index) {
  std::vector<Crossing> xs = d.crossings();
  Crossing& x = xs.at(index);
  const auto [a, b, c, e] = x.arcs;
  if (x.sign() > 0) {
    // over ran e -> b; it becomes the under-strand, the old under a -> c now
    // runs over from slot b to slot d.
    x.arcs = {e, a, b, c};
    x.over_forward = true;
  } else {
    x.arcs = {b, c, e, a};
    x.over_forward = false;
  }
  return PDCode(std::move(xs), d.free_loops());
}

PDCode smooth_crossing(const PDCode& d, int index) {
  const Crossing& x = d.crossing(index);
  const int arcs = 2 * d.size();
  UnionFind merge(arcs + 1);
  merge.unite(x.under_in(), x.over_out());
  merge.unite(x.over_in(), x.under_out());

  std::vector<Crossing> xs;
  xs.reserve(d.size() - 1);
  std::vector<int> remaining_uses(arcs + 1, 0);
  for (int i = 0; i < d.size(); ++i) {
    if (i == index) continue;
    Crossing y = d.crossing(i);
    for (int& a : y.arcs) {
      a = merge.find(a);
      ++remaining_uses[a];
    }
    xs.push_back(y);
  }
  int free_loops = d.free_loops();
  std::vector<int> roots;
  for (int a : x.arcs) roots.push_back(merge.find(a));
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  for (int r : roots) free_loops += remaining_uses[r] == 0;
  return PDCode::canonical(std::move(xs), free_loops);
}

// ---------------------------------------------------------------- PD text

namespace {

class TextCursor {
 public:
  explicit TextCursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  long long integer() {
    skip_ws();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    long long value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ptr == first || ec != std::errc()) {
      pos_ = start;
      fail(ec == std::errc::result_out_of_range ? "integer out of range" : "expected integer");
    }
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return negative ? -value : value;
  }
  std::size_t pos() const { return pos_; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

int to_int(long long v, const TextCursor& cur) {
  if (v < -1'000'000 || v > 1'000'000) cur.fail("integer out of range");
  return static_cast<int>(v);
}

}  // namespace

PDCode parse_pd(std::string_view text) {
  TextCursor cur(text);
  std::vector<std::array<int, 4>> tuples;
  while (!cur.at_end()) {
    cur.expect('X');
    cur.expect('[');
    std::array<int, 4> t{};
    for (int k = 0; k < 4; ++k) {
      if (k > 0) cur.expect(',');
      t[k] = to_int(cur.integer(), cur);
    }
    cur.expect(']');
    tuples.push_back(t);
  }
  if (tuples.empty()) return PDCode();

  const int n = static_cast<int>(tuples.size());
  const int arcs = 2 * n;
  std::vector<int> uses(arcs + 1, 0);
  for (const auto& t : tuples)
    for (int a : t) {
      if (a < 1 || a > arcs)
        invalid("arc label " + std::to_string(a) + " out of range 1.." + std::to_string(arcs));
      ++uses[a];
    }
  for (int a = 1; a <= arcs; ++a)
    if (uses[a] != 2)
      invalid("arc label " + std::to_string(a) + " appears " + std::to_string(uses[a]) + " times");

  UnionFind comp(arcs + 1);
  for (const auto& t : tuples) {
    comp.unite(t[0], t[2]);
    comp.unite(t[1], t[3]);
  }
  std::vector<int> lo(arcs + 1, arcs + 1), hi(arcs + 1, 0), count(arcs + 1, 0);
  for (int a = 1; a <= arcs; ++a) {
    const int r = comp.find(a);
    lo[r] = std::min(lo[r], a);
    hi[r] = std::max(hi[r], a);
    ++count[r];
  }
  for (int a = 1; a <= arcs; ++a) {
    const int r = comp.find(a);
    if (hi[r] - lo[r] + 1 != count[r])
      invalid("arcs of the component through " + std::to_string(a) + " are not numbered consecutively");
  }
  auto succ = [&](int a) {
    const int r = comp.find(a);
    return a == hi[r] ? lo[r] : a + 1;
  };

  // role: +1 entering, -1 leaving, 0 undetermined; per (crossing, slot).
  std::vector<std::array<int, 4>> role(n, {1, 0, -1, 0});
  for (int i = 0; i < n; ++i) {
    const auto& t = tuples[i];
    if (t[2] != succ(t[0]))
      invalid("under-strand of crossing " + std::to_string(i) + " does not follow the arc numbering");
    const bool forward = t[3] == succ(t[1]);
    const bool backward = t[1] == succ(t[3]);
    if (!forward && !backward)
      invalid("over-strand of crossing " + std::to_string(i) + " does not follow the arc numbering");
    if (forward != backward) {
      role[i][1] = forward ? 1 : -1;
      role[i][3] = -role[i][1];
    }
  }

  std::vector<std::array<std::pair<int, int>, 2>> slots(arcs + 1);
  std::vector<int> filled(arcs + 1, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < 4; ++k) slots[tuples[i][k]][filled[tuples[i][k]]++] = {i, k};

  auto propagate = [&] {
    for (bool changed = true; changed;) {
      changed = false;
      for (int a = 1; a <= arcs; ++a) {
        auto [s0, s1] = slots[a];
        int& r0 = role[s0.first][s0.second];
        int& r1 = role[s1.first][s1.second];
        if (r0 != 0 && r1 == 0) { r1 = -r0; changed = true; }
        if (r1 != 0 && r0 == 0) { r0 = -r1; changed = true; }
      }
      for (auto& r : role) {
        if (r[1] != 0 && r[3] == 0) { r[3] = -r[1]; changed = true; }
        if (r[3] != 0 && r[1] == 0) { r[1] = -r[3]; changed = true; }
      }
    }
  };
  propagate();
  for (int i = 0; i < n; ++i) {
    if (role[i][1] != 0) continue;
    // Two-arc component seen only on over-strands: lower label enters here.
    const bool b_lower = tuples[i][1] < tuples[i][3];
    role[i][1] = b_lower ? 1 : -1;
    role[i][3] = -role[i][1];
    propagate();
  }

  std::vector<Crossing> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = Crossing{tuples[i], role[i][1] == 1};
  return PDCode(std::move(xs), 0);
}

std::string format_pd(const PDCode& d) {
  std::vector<int> order(d.size());
  std::iota(order.begin(), order.end(), 0);
  for (const auto& cycle : d.components()) {
    if (cycle.size() != 2) continue;
    if (d.enters_under(cycle[0]) || d.enters_under(cycle[1])) continue;
    const int x = d.head_crossing(cycle[0]);
    const int y = d.head_crossing(cycle[1]);
    // parse_pd lets the lower label enter at whichever of x, y is listed first.
    if (y < x) std::swap(order[x], order[y]);
  }
  std::string out;
  for (int i : order) {
    const auto& a = d.crossing(i).arcs;
    if (!out.empty()) out += ' ';
    out += "X[" + std::to_string(a[0]) + ',' + std::to_string(a[1]) + ',' + std::to_string(a[2]) +
           ',' + std::to_string(a[3]) + ']';
  }
  return out;
}

// ----------------------------------------------------------- presentations

std::string_view kind_name(PresentationKind kind) {
  switch (kind) {
    case PresentationKind::pd: return "pd";
    case PresentationKind::braid: return "braid";
    case PresentationKind::pretzel: return "pretzel";
    case PresentationKind::twist: return "twist";
  }
  return "?";
}

PresentationKind kind_of(const Presentation& p) {
  return static_cast<PresentationKind>(p.index());
}

Presentation parse_presentation(std::string_view text, PresentationKind kind) {
  switch (kind) {
    case PresentationKind::pd:
      return parse_pd(text);
    case PresentationKind::braid: {
      TextCursor cur(text);
      BraidWord w;
      w.strand_count = to_int(cur.integer(), cur);
      if (w.strand_count < 1) cur.fail("strand count must be positive");
      cur.expect(':');
      while (!cur.at_end()) {
        const std::size_t at = cur.pos();
        const int letter = to_int(cur.integer(), cur);
        if (letter == 0 || std::abs(letter) >= w.strand_count)
          throw ParseError("braid generator " + std::to_string(letter) + " invalid for " +
                               std::to_string(w.strand_count) + " strands",
                           at);
        w.letters.push_back(letter);
      }
      return w;
    }
    case PresentationKind::pretzel: {
      TextCursor cur(text);
      std::array<int, 3> p{};
      for (int k = 0; k < 3; ++k) {
        if (k > 0) cur.expect(',');
        const std::size_t at = cur.pos();
        const int band = to_int(cur.integer(), cur);
        if (band % 2 == 0) throw ParseError("pretzel band counts must be odd", at);
        p[k] = (band - 1) / 2;
      }
      if (!cur.at_end()) cur.fail("trailing input");
      return Pretzel{p[0], p[1], p[2]};
    }
    case PresentationKind::twist: {
      TextCursor cur(text);
      const int twists = to_int(cur.integer(), cur);
      if (twists < 0 || twists % 2 != 0) throw ParseError("twist count must be even and nonnegative", 0);
      if (!cur.at_end()) cur.fail("trailing input");
      return Twist{twists / 2};
    }
  }
  throw InputError("unknown presentation kind");
}

std::string format_presentation(const Presentation& p) {
  struct Visitor {
    std::string operator()(const PDCode& d) const { return format_pd(d); }
    std::string operator()(const BraidWord& w) const {
      std::string out = std::to_string(w.strand_count) + ":";
      for (int l : w.letters) out += " " + std::to_string(l);
      return out;
    }
    std::string operator()(const Pretzel& k) const {
      const auto b = k.bands();
      return std::to_string(b[0]) + "," + std::to_string(b[1]) + "," + std::to_string(b[2]);
    }
    std::string operator()(const Twist& t) const { return std::to_string(2 * t.m); }
  };
  return std::visit(Visitor{}, p);
}

// --------------------------------------------------------------- builders

PDCode braid_closure(const BraidWord& w) {
  const int s = w.strand_count;
  if (s < 1) throw InputError("braid needs at least one strand");
  std::vector<int> cur(s);
  std::iota(cur.begin(), cur.end(), 0);
  int next_id = s;
  std::vector<Crossing> xs;
  for (int letter : w.letters) {
    const int i = std::abs(letter) - 1;
    if (letter == 0 || i + 1 >= s) throw InputError("braid generator out of range");
    const int left = cur[i], right = cur[i + 1];
    const int top_left = next_id++, top_right = next_id++;
    if (letter > 0) {
      // left strand crosses over to the right: over runs slot d -> slot b.
      xs.push_back(Crossing{{right, top_right, top_left, left}, false});
    } else {
      xs.push_back(Crossing{{left, right, top_right, top_left}, true});
    }
    cur[i] = top_left;
    cur[i + 1] = top_right;
  }
  UnionFind close(next_id);
  int free_loops = 0;
  for (int j = 0; j < s; ++j) {
    if (cur[j] == j) ++free_loops;
    close.unite(cur[j], j);
  }
  for (Crossing& x : xs)
    for (int& a : x.arcs) a = close.find(a) + 1;
  if (xs.empty()) return PDCode({}, free_loops);
  return PDCode::canonical(std::move(xs), free_loops);
}

namespace {

// Unoriented planar crossings with slots 0..3 counterclockwise, strands
// joining slots 0-2 and 1-3. Orients every component by traversal from its
// lowest-numbered edge and emits PD crossings labelled by edge number.
PDCode orient_planar(int n, const std::vector<bool>& over_even_pair,
                     const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> edge_at(4 * n, -1);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    edge_at[edges[e].first] = e;
    edge_at[edges[e].second] = e;
  }
  for (int slot = 0; slot < 4 * n; ++slot)
    if (edge_at[slot] < 0) throw InvariantError("unconnected crossing slot");

  std::vector<char> entered(4 * n, 0);
  std::vector<char> done(edges.size(), 0);
  for (int e0 = 0; e0 < static_cast<int>(edges.size()); ++e0) {
    if (done[e0]) continue;
    int e = e0;
    int head = edges[e0].second;
    while (!done[e]) {
      done[e] = 1;
      entered[head] = 1;
      const int exit = 4 * (head / 4) + (head % 4 + 2) % 4;
      e = edge_at[exit];
      head = edges[e].first == exit ? edges[e].second : edges[e].first;
    }
  }

  std::vector<Crossing> xs(n);
  for (int i = 0; i < n; ++i) {
    const int under_a = over_even_pair[i] ? 1 : 0;
    const int start = entered[4 * i + under_a] ? under_a : under_a + 2;
    for (int k = 0; k < 4; ++k) xs[i].arcs[k] = edge_at[4 * i + (start + k) % 4] + 1;
    xs[i].over_forward = entered[4 * i + (start + 1) % 4];
  }
  return PDCode::canonical(std::move(xs), 0);
}

enum Slot { BR = 0, TR = 1, TL = 2, BL = 3 };

}  // namespace

PDCode pretzel_diagram(const std::array<int, 3>& band_counts) {
  std::array<int, 3> first{}, last{};
  int n = 0;
  for (int j = 0; j < 3; ++j) {
    if (band_counts[j] == 0) throw InputError("pretzel bands need at least one crossing");
    first[j] = n;
    n += std::abs(band_counts[j]);
    last[j] = n - 1;
  }
  std::vector<bool> over_even(n);
  std::vector<std::pair<int, int>> edges;
  auto slot = [](int crossing, Slot s) { return 4 * crossing + s; };
  for (int j = 0; j < 3; ++j) {
    for (int i = first[j]; i <= last[j]; ++i) over_even[i] = band_counts[j] > 0;
    for (int i = first[j]; i < last[j]; ++i) {
      edges.emplace_back(slot(i, TL), slot(i + 1, BL));
      edges.emplace_back(slot(i, TR), slot(i + 1, BR));
    }
  }
  for (int j = 0; j < 3; ++j) {
    const int k = (j + 1) % 3;
    edges.emplace_back(slot(last[j], TR), slot(last[k], TL));
    edges.emplace_back(slot(first[j], BR), slot(first[k], BL));
  }
  std::sort(edges.begin(), edges.end());
  return orient_planar(n, over_even, edges);
}

int pretzel_band_top(const std::array<int, 3>& band_counts, int band) {
  int top = -1;
  for (int j = 0; j <= band; ++j) top += std::abs(band_counts.at(j));
  return top;
}

std::array<int, 3> twist_bands(int m) { return {2 * m, 1, 1}; }

PDCode to_pd(const Presentation& p) {
  struct Visitor {
    PDCode operator()(const PDCode& d) const { return d; }
    PDCode operator()(const BraidWord& w) const { return braid_closure(w); }
    PDCode operator()(const Pretzel& k) const { return pretzel_diagram(k.bands()); }
    PDCode operator()(const Twist& t) const {
      if (t.m < 0) throw InputError("twist parameter must be nonnegative");
      if (t.m == 0) return PDCode();
      return pretzel_diagram(twist_bands(t.m));
    }
  };
  return std::visit(Visitor{}, p);
}

int permutation_cycles(const BraidWord& w) {
  std::vector<int> perm(w.strand_count);
  std::iota(perm.begin(), perm.end(), 0);
  for (int letter : w.letters) {
    const int i = std::abs(letter) - 1;
    std::swap(perm[i], perm[i + 1]);
  }
  std::vector<char> seen(w.strand_count, 0);
  int cycles = 0;
  for (int j = 0; j < w.strand_count; ++j) {
    if (seen[j]) continue;
    ++cycles;
    for (int k = j; !seen[k]; k = perm[k]) seen[k] = 1;
  }
  return cycles;
}

}  // namespace knotbound
