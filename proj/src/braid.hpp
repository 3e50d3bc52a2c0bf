#pragma once

// Exact braid-group engine: words, Garside left-greedy normal forms,
// the word problem, half twists, purity.
//
// Conventions (fixed project-wide):
//  * BraidWord::letters is stored in APPLICATION order: letters[0] acts first.
//  * JSON braid arrays are in functional order (rightmost acts first); the
//    JSON layer reverses on (de)serialization.
//  * permutation(w) maps a strand's starting position to its ending position
//    (1-based outside, 0-based internally), so perm(a*b) = perm(b) ∘ perm(a).

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace plumbfill {

struct BraidWord {
  int strands = 1;
  std::vector<int> letters;  // signed generator indices, application order

  bool operator==(const BraidWord&) const = default;
};

// Concatenation "a then b"; strand counts must agree.
BraidWord operator*(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& w);

// One-line permutation, 0-based: perm[p] = final position of the strand that
// starts at position p.
using Perm = std::vector<int>;

Perm permutation(const BraidWord& w);
bool is_pure(const BraidWord& w);

// Half twist Δ_J for the consecutive block J = {lo, ..., hi} (1-based,
// inclusive); lo == hi gives the empty word.  Throws std::domain_error on an
// invalid range.
BraidWord half_twist(int strands, int lo, int hi);

// Garside left-greedy normal form: Δ^inf · F_1 · ... · F_k with each F_j a
// non-trivial, non-Δ permutation braid and consecutive pairs left-weighted.
struct NormalForm {
  int strands = 1;
  long long inf = 0;
  std::vector<Perm> factors;

  bool operator==(const NormalForm&) const = default;
  bool is_identity() const { return inf == 0 && factors.empty(); }
};

NormalForm normalize(const BraidWord& w);

// A representative word (application order) of a normal form:
// Δ^inf followed by the factors, each written as a positive word.
BraidWord normal_form_word(const NormalForm& nf);

// Positive word (application order) of a single permutation braid.
std::vector<int> permutation_braid_word(const Perm& p);

// Word problem: same braid?
bool braids_equal(const BraidWord& a, const BraidWord& b);

// Independent word-problem oracle via the Artin action on the free group
// F_m: returns the images of the free generators x_1..x_m as reduced words
// (letters ±1..±m).  Two braid words are equal iff their image lists agree.
std::vector<std::vector<int>> artin_action_images(const BraidWord& w);

}  // namespace plumbfill
