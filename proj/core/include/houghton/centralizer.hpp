#pragma once

#include "houghton/conjugacy.hpp"
#include "houghton/element.hpp"

#include <map>
#include <optional>
#include <vector>

namespace houghton {

struct CentralizerLatticeGens {
  std::vector<Element> gammas;               // one per component of the shared-orbit relation
  std::map<long, std::vector<Element>> thetas;  // class size -> column shuffles
  std::vector<IntVector> translationGens;    // t-vectors of gammas, then thetas

  // All generators in the order of translationGens.
  std::vector<Element> elements() const;
};

// Centralizing element supported on the infinite orbits of the given
// component (class indices of class_partition(a)) with the least positive
// translation on the first ray of the component.
Element gamma_generator(const Element& a, const std::vector<int>& component);

// Column shuffles between representatives of the zero-translation classes of
// size r, one per pair d < d' in order of least ray.
std::vector<Element> theta_generators(const Element& a, long r);

CentralizerLatticeGens centralizer_translation_lattice(const Element& a);

// A finitely supported odd permutation commuting with a, if one exists.
std::optional<Element> odd_centralizer_element(const Element& a);

// Given a verified conjugator x of a onto b in H_{np}, looks for one in the
// image of U_p under the block rescaling (p rays per source ray).
std::optional<Witness> conjugate_in_up_image(const Element& a, const Element& b,
                                             const Element& x, int p);

}  // namespace houghton
