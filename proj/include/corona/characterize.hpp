#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "corona/corona_ops.hpp"
#include "corona/graph.hpp"

namespace corona {

enum class ABLabel : char { A = 'A', B = 'B' };

// Tree whose every vertex carries an A/B label.
struct LabeledTreeAB {
  Graph tree;
  std::vector<ABLabel> labels;
};

// P4 with leaves labeled A and supports labeled B; the family base case.
LabeledTreeAB labeled_p4();

// Attachment step: at an A-vertex, appends a path x,y,z labeled B,B,A with
// edge vx; at a B-vertex, appends a path x,y labeled B,A with edge vx.
LabeledTreeAB f_extend(const LabeledTreeAB& t, VertexId v);

// Breadth-first closure of labeled P4 under f_extend, deduplicated by
// label-aware canonical code, restricted to at most max_n vertices.
// Membership queries forget the labels.
class FamilyClosure {
 public:
  explicit FamilyClosure(int max_n);  // max_n >= 4

  bool contains(const Graph& t) const;
  const std::set<std::string>& codes() const { return unlabeled_codes_; }
  int max_order() const { return max_n_; }

 private:
  int max_n_;
  std::set<std::string> unlabeled_codes_;
};

// Label-forgetting canonical codes of all family members with <= max_n
// vertices.
std::set<std::string> f_closure(int max_n);

// Tree membership in the family, decided against the closure up to max_n.
// t must be a tree with n <= max_n.
bool f_member(const Graph& t, int max_n);

// Certificate that a tree is the general corona of a tree: base and
// partition, plus the tag each product vertex corresponds to.
struct CoronaWitness {
  Graph base;
  NeighborhoodPartition partition;
  std::vector<CoronaVertexTag> embedding;  // embedding[i] = tag of vertex i
};

// Longest-path peeling recursion. Returns nullopt when t is not a general
// corona of a tree; otherwise a witness that verify_witness accepts.
// t must be a tree with n >= 3.
std::optional<CoronaWitness> recognize_general_corona(const Graph& t);

struct WitnessCheck {
  bool ok = false;
  std::string reason;  // empty when ok
};

// Checks that the partition is valid for the base, that the base is a tree,
// and that the embedding is a tag-consistent isomorphism between t and
// general_corona(base, partition).
WitnessCheck verify_witness(const Graph& t, const CoronaWitness& w);

// Product ids that the witness embeds as external vertices.
VertexSet witness_external_image(const CoronaWitness& w);

// Per-tree record of the characterization verdicts plus certificates.
struct ClassReport {
  std::string tree_code;
  int order = 0;
  int sd_value = 0;
  bool cond_sd3 = false;             // c1
  bool cond_unique_packing = false;  // c2
  bool cond_family_f = false;        // c3
  bool cond_corona = false;          // c4
  bool cond_from_subdivision = false;  // c5: from S2(T') by contractions
  bool cond_from_corona_k1 = false;    // c6: from T' corona K1 by splittings
  std::optional<CoronaWitness> witness;
  std::optional<VertexSet> packing;
};

// True iff all six condition verdicts coincide and, when both certificates
// exist, the packing equals the external image of the witness.
bool report_consistent(const ClassReport& r);

// Evaluates the four independent conditions (sd = 3, unique dominating
// 2-packing with all leaves, family membership, corona recognition with a
// verified certificate) and certifies the two chain conditions from the
// witness through the refinement order. t must be a tree with n >= 3.
ClassReport verify_equivalences(const Graph& t);
ClassReport verify_equivalences(const Graph& t, const FamilyClosure& closure);

}  // namespace corona
