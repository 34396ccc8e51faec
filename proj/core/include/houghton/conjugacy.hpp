#pragma once

#include "houghton/element.hpp"
#include "houghton/fsym.hpp"
#include "houghton/orbits.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace houghton {

using IntVector = std::vector<Int>;

// A pair (a, b) of normalizer elements together with the class data of a.
struct ConjugacyInstance {
  Element a, b;
  ClassPartition classes;
  RaySets rays;
};

ConjugacyInstance make_instance(const Element& a, const Element& b);

// (c g, c h): g and h are twisted conjugate under y -> c^-1 y c exactly when
// the pair is conjugate in H_n.
ConjugacyInstance twisted_to_pair(const Element& c, const Element& g, const Element& h);

// Equal ray permutations and equal class translations.
bool necessary_checks(const ConjugacyInstance& inst);

// Per class (in class_partition order), offsets[s] with
// t_{i_s}(x) = t_{i_1}(x) + offsets[s] for every conjugator x in H_n.
std::vector<IntVector> translation_offsets(const ConjugacyInstance& inst);

// Class index pairs x < y (class_partition order) joined by an infinite
// orbit of g.
std::vector<std::pair<int, int>> linked_class_pairs(const Element& g);

// K(a,b) = n B + 1, B the largest over linked class pairs of |S| + |T| plus
// the offset spreads; S and T are the points of the linking orbits of a and
// b outside the progression tails beyond max(z(a), z(b)). For any conjugator
// in H_n*(a) and linked classes, | |[i]||l_i| - |[j]||l_j| | < K with
// t_i = l_i |t_[i]|. 1 when a has no infinite orbits.
Int orbit_gap_bound(const ConjugacyInstance& inst);
// M_I(a,b) = n K max |t_[i]|; 0 when a has no infinite orbits.
Int infinite_bound(const ConjugacyInstance& inst);

// Number of r-cycles of g other than the far-out columns of the classes of
// size r with zero translation. For r = 1 the cycles are fixed points.
Int eta(const Element& g, long r);

// Forced translations t_k(x) on the rays k outside I, after the class
// shuffles have moved the freedom onto the first class of each size.
std::map<int, Int> finite_class_targets(const ConjugacyInstance& inst);

// |sigma_a| |t_[i](a)| on rays of I, 0 elsewhere.
IntVector coset_moduli(const Element& a);
// Residue tuples 0 <= v_i < modulus_i on I (zero elsewhere), in lex order.
std::vector<IntVector> coset_reps(const Element& a);
// A zero-sum vector congruent to v on I; nothing if none exists.
std::optional<IntVector> lift_coset_rep(const Element& a, const IntVector& v);

// prod_{i>=2} g_i^{-v_i}; its translation vector is v. Requires sum v = 0.
Element shift_element(const IntVector& v, int n);

// Product of the infinite cycles of g through the component of the class of
// `ray` in the shared-orbit relation. Commutes with g.
Element centralizer_orbit_element(const Element& g, int ray);

// Centralizing element that shifts the far columns of class [j] up by one and
// those of [jp] down by one, moving the bottom column of [jp] to that of [j].
Element finite_class_shuffle(const Element& g, int j, int jp);

struct SearchStats {
  std::size_t candidatesTried = 0;  // FSym subproblems solved
  std::size_t cosetsTried = 0;
  std::int64_t elapsedMs = 0;
};

struct Witness {
  Element x;
  bool checked = false;
  std::optional<RayPermutation> rayPerm;  // extension searches only
};

struct Decision {
  bool conjugate = false;
  std::optional<Witness> witness;
  SearchStats stats;
};

struct HnOptions {
  std::size_t maxCandidates = 1000000;
  FsymOptions fsym;
};

// Translation vectors v tried for conjugators y in H_n*(a) of inst.a onto
// inst.b, one per class modulo the centralizer, in search order.
std::vector<IntVector> candidate_vectors(const ConjugacyInstance& inst,
                                         const HnOptions& opts = {});

Decision conjugate_in_hn(const Element& a, const Element& b, const HnOptions& opts = {});
Decision twisted_conjugate(const Element& c, const Element& g, const Element& h,
                           const HnOptions& opts = {});

// Subgroup of S_n generated by the given permutations, sorted.
std::vector<RayPermutation> permutation_closure(const std::vector<RayPermutation>& gens, int n);

// x in H_n and tau in the closure of `esigma` with x^-1 a x = tau b tau^-1.
Decision conjugate_in_extension(const Element& a, const Element& b,
                                const std::vector<RayPermutation>& esigma,
                                const HnOptions& opts = {});

}  // namespace houghton
