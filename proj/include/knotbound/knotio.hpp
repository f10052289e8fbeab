#pragma once

#include <array>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace knotbound {

/// One crossing of an oriented planar diagram. `arcs` lists the four incident
/// arc labels counterclockwise starting from the incoming under-strand, so the
/// under-strand runs arcs[0] -> arcs[2]. The over-strand runs arcs[1] ->
/// arcs[3] when `over_forward` is set and arcs[3] -> arcs[1] otherwise.
struct Crossing {
  std::array<int, 4> arcs{};
  bool over_forward = false;

  int under_in() const { return arcs[0]; }
  int under_out() const { return arcs[2]; }
  int over_in() const { return over_forward ? arcs[1] : arcs[3]; }
  int over_out() const { return over_forward ? arcs[3] : arcs[1]; }
  // +1 for a right-handed crossing (over-strand runs d -> b).
  int sign() const { return over_forward ? -1 : +1; }

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Oriented planar diagram code.
///
/// With n crossings the labels are 1..2n, each used by exactly two crossing
/// slots (one entering, one leaving). The arcs of every component are numbered
/// consecutively along the orientation, wrapping within the component.
/// Crossingless unknotted components are counted by `free_loops`, which is how
/// the empty diagram represents the unknot.
///
/// Instances are immutable and always valid: construction validates the
/// labelling, orientation, consecutive numbering and planarity, and throws
/// InputError on violation.
class PDCode {
 public:
  /// The unknot: no crossings, one free loop.
  PDCode();
  PDCode(std::vector<Crossing> crossings, int free_loops);

  /// Relabels arbitrary positive labels canonically: components are visited in
  /// order of their lowest label, each traversed from that label, and arcs are
  /// renumbered 1, 2, ... in visiting order. Crossing order is preserved.
  static PDCode canonical(std::vector<Crossing> crossings, int free_loops);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const Crossing& crossing(int index) const { return crossings_.at(index); }
  int size() const { return static_cast<int>(crossings_.size()); }
  int free_loops() const { return free_loops_; }

  int component_count() const { return static_cast<int>(components_.size()) + free_loops_; }
  int writhe() const;

  /// Arc that follows `arc` along the orientation.
  int next_arc(int arc) const { return next_[arc]; }
  /// Crossing index at which `arc` ends, and whether it ends there as the
  /// under-strand.
  int head_crossing(int arc) const { return head_[arc]; }
  bool enters_under(int arc) const { return head_under_[arc]; }
  /// Component id (0-based, ordered by lowest label) of an arc.
  int component_of(int arc) const { return component_[arc]; }
  /// Arcs of each crossing-carrying component in traversal order, starting at
  /// its lowest label. Free loops are not listed.
  const std::vector<std::vector<int>>& components() const { return components_; }

  friend bool operator==(const PDCode& a, const PDCode& b) {
    return a.crossings_ == b.crossings_ && a.free_loops_ == b.free_loops_;
  }

 private:
  void build();

  std::vector<Crossing> crossings_;
  int free_loops_ = 1;

  // Indexed by arc label (entry 0 unused).
  std::vector<int> next_;
  std::vector<int> head_;
  std::vector<char> head_under_;
  std::vector<int> component_;
  std::vector<std::vector<int>> components_;
};

int crossing_sign(const PDCode& d, int index);
int writhe(const PDCode& d);
int component_count(const PDCode& d);

/// Same diagram with crossing `index` switched. Labels and crossing order are
/// unchanged; the tuple is rotated so the new incoming under-strand comes first.
PDCode switch_crossing(const PDCode& d, int index);

/// Oriented resolution at crossing `index`: the incoming under-strand is joined
/// to the outgoing over-strand and the incoming over-strand to the outgoing
/// under-strand. The result is canonically relabelled; arcs that close up
/// without crossings become free loops.
PDCode smooth_crossing(const PDCode& d, int index);

/// Parses whitespace-separated "X[a,b,c,d]" tokens. Over-strand directions are
/// read from the consecutive arc numbering, then from the in/out role the
/// partner slot of each arc already has. A two-arc component that only passes
/// over other strands has no numbering information; its first crossing in
/// list order is taken to be entered on the lower label.
PDCode parse_pd(std::string_view text);

/// Text form accepted by parse_pd. Where the convention above would read an
/// orientation wrongly, the two crossings involved swap places in the listing,
/// so parse_pd(format_pd(d)) equals d up to crossing order.
std::string format_pd(const PDCode& d);

struct BraidWord {
  std::vector<int> letters;
  int strand_count = 1;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// P(2p+1, 2q+1, 2r+1).
struct Pretzel {
  int p = 0, q = 0, r = 0;

  std::array<int, 3> params() const { return {p, q, r}; }
  std::array<int, 3> bands() const { return {2 * p + 1, 2 * q + 1, 2 * r + 1}; }
  friend bool operator==(const Pretzel&, const Pretzel&) = default;
};

/// The twist knot T_{2m}: a clasp plus 2m half twists. m = 0 is the unknot.
struct Twist {
  int m = 0;
  friend bool operator==(const Twist&, const Twist&) = default;
};

using Presentation = std::variant<PDCode, BraidWord, Pretzel, Twist>;

enum class PresentationKind { pd, braid, pretzel, twist };

std::string_view kind_name(PresentationKind kind);
PresentationKind kind_of(const Presentation& p);

/// Parses one presentation in the text format of its kind:
///   pd:      X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]
///   braid:   "2: 1 1 1" (strand count, colon, signed generators)
///   pretzel: "3,3,3" (odd band crossing counts)
///   twist:   "6" (the even number 2m of half twists)
Presentation parse_presentation(std::string_view text, PresentationKind kind);
std::string format_presentation(const Presentation& p);

/// Oriented diagram of a presentation.
PDCode to_pd(const Presentation& p);

/// Closure of a braid with all strands oriented upward; sigma_i is a positive
/// crossing. Strands that never cross anything close up into free loops.
PDCode braid_closure(const BraidWord& w);

/// Pretzel diagram with three vertical twist bands of the given signed
/// crossing counts (any nonzero integers), joined in a cycle across the top
/// and bottom. Crossings are listed band by band, bottom to top. A positive
/// count twists the band so that antiparallel strands cross positively.
PDCode pretzel_diagram(const std::array<int, 3>& band_counts);

/// Crossing index of the topmost crossing of band `band` in pretzel_diagram.
int pretzel_band_top(const std::array<int, 3>& band_counts, int band);

/// Crossing counts of the pretzel realisation used for T_{2m} (m >= 1): the
/// first band carries the 2m twists, the other two form the clasp.
std::array<int, 3> twist_bands(int m);

/// Number of cycles of the permutation a braid word induces on its strands.
int permutation_cycles(const BraidWord& w);

}  // namespace knotbound
