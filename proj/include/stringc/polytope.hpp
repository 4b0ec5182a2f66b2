#pragma once

// Rank-3 coset geometry of a string C-group (R, {rho0, rho1, rho2}).
// Faces of rank i are the right cosets G_i g of G_i = <rho_j : j != i>;
// two faces are incident iff their cosets intersect. Each group element g
// lies in exactly one face of every rank, and (G_0 g, G_1 g, G_2 g) is a flag.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stringc/arith.hpp"
#include "stringc/cgroup.hpp"
#include "stringc/check.hpp"

namespace stringc {

struct FaceCounts {
  arith::BigInt vertices = 0;
  arith::BigInt edges = 0;
  arith::BigInt faces = 0;
  arith::BigInt flags = 0;

  friend bool operator==(const FaceCounts&, const FaceCounts&) = default;
};

/// V = p^{m-1}, E = p^m, F = 2 p^{m-1}, flags = 4 p^m.
FaceCounts closed_form_counts(const GroupParams& params);

struct Face {
  int rank = 0;
  std::uint32_t id = 0;                // global: vertices, then edges, then 2-faces
  ExtElement rep;                      // minimal member
  std::vector<std::uint32_t> members;  // indices into FaceLattice::elements
};

struct FaceLattice {
  std::int64_t p = 0;
  std::int64_t e = 0;
  std::int64_t r = 0;
  std::int64_t m = 0;
  std::pair<std::uint64_t, std::uint64_t> schlafli{0, 0};

  std::vector<ExtElement> elements;                  // all of R
  std::array<std::vector<Face>, 3> faces;            // per rank, sorted by rep
  std::vector<std::array<std::uint32_t, 3>> flags;   // one per element: face ids
  std::vector<std::pair<std::uint32_t, std::uint32_t>> incidences;  // sorted, lower rank first

  FaceCounts counts() const;
  std::size_t face_count() const { return faces[0].size() + faces[1].size() + faces[2].size(); }
};

/// Requires 4 p^m <= cap; throws CapExceeded otherwise.
FaceLattice build_lattice(const Extension& ext, const CGroupGenerators& gens,
                          std::uint64_t cap = kDefaultExtensionCap);

/// Structural checks against the closed forms: face counts, one flag per
/// element, every edge on 2 vertices and 2 faces, every vertex on 2p edges,
/// every 2-face on p edges, connected incidence graph.
CheckOutcome check_lattice(const FaceLattice& lattice);

/// p^{m-1} (3 - p).
arith::BigInt euler_characteristic(const GroupParams& params);
/// V - E + F of the built lattice.
arith::BigInt euler_characteristic(const FaceLattice& lattice);

enum class ExportFormat { json, dot };

ExportFormat parse_export_format(const std::string& name);

/// JSON document (stable field order) or DOT Hasse diagram. When `lattice`
/// is empty the JSON carries closed-form counts only; DOT requires a lattice.
void export_lattice(std::ostream& out, const GroupParams& params,
                    std::pair<std::uint64_t, std::uint64_t> schlafli,
                    const std::optional<FaceLattice>& lattice, ExportFormat format);

}  // namespace stringc
