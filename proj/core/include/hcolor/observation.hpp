#pragma once

#include <string>
#include <vector>

#include "hcolor/coloring.hpp"

namespace hcolor {

/// Post-hoc structural checks every H-colouring must satisfy:
///  (i)   a k-regular subgraph H' of H pulls back to a k-regular edge-induced subgraph of G;
///  (ii)  that pull-back needs no more colours than H' (chromatic index);
///  (iii) bridges of G land on bridges of H.
/// The H' tested are every single edge, every circuit, every vertex star (for (ii)
/// only) and H itself when it is regular.
struct PropertyReport {
  bool regular_preimages = true;    // (i)
  bool chromatic_bound = true;      // (ii)
  bool bridges_to_bridges = true;   // (iii)
  std::size_t subgraphs_tested = 0;
  bool circuit_family_truncated = false;
  std::vector<std::string> witnesses;  // one line per failure

  bool passed() const noexcept { return regular_preimages && chromatic_bound && bridges_to_bridges; }
};

/// Throws Error(NotACertificate) if f does not verify.
PropertyReport check_observation1(const EdgeMapping& f, std::size_t circuit_cap = 100'000);

/// Preimage of every 2-circuit of H induces disjoint even circuits of G.
bool two_circuit_preimages_even(const EdgeMapping& f);

}  // namespace hcolor
