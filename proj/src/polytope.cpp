#include "stringc/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "stringc/errors.hpp"
#include "stringc/report.hpp"

namespace stringc {

FaceCounts closed_form_counts(const GroupParams& params) {
  const arith::BigInt pm1 = arith::ipow(params.p(), params.m() - 1);
  return FaceCounts{pm1, pm1 * params.p(), 2 * pm1, 4 * pm1 * params.p()};
}

FaceCounts FaceLattice::counts() const {
  return FaceCounts{faces[0].size(), faces[1].size(), faces[2].size(), flags.size()};
}

namespace {

constexpr std::uint32_t kUnassigned = ~std::uint32_t{0};

// Partitions R into right cosets H g and returns them sorted by their
// minimal member.
std::vector<Face> right_cosets(const Extension& ext, const ExtSubgroup& all,
                               const ExtSubgroup& parabolic, int rank,
                               std::vector<std::uint32_t>& coset_of) {
  const std::size_t n = all.size();
  coset_of.assign(n, kUnassigned);
  std::vector<Face> cosets;
  for (std::size_t idx = 0; idx < n; ++idx) {
    if (coset_of[idx] != kUnassigned) continue;
    Face face;
    face.rank = rank;
    const auto local = static_cast<std::uint32_t>(cosets.size());
    for (const ExtElement& h : parabolic.elements) {
      const std::uint32_t j = all.index.at(ext.multiply(h, all.elements[idx]));
      coset_of[j] = local;
      face.members.push_back(j);
    }
    std::sort(face.members.begin(), face.members.end());
    face.rep = all.elements[face.members.front()];
    for (const std::uint32_t j : face.members) face.rep = std::min(face.rep, all.elements[j]);
    cosets.push_back(std::move(face));
  }

  std::vector<std::uint32_t> order(cosets.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t x, std::uint32_t y) { return cosets[x].rep < cosets[y].rep; });
  std::vector<std::uint32_t> renumber(cosets.size());
  std::vector<Face> sorted;
  sorted.reserve(cosets.size());
  for (std::uint32_t k = 0; k < order.size(); ++k) {
    renumber[order[k]] = k;
    sorted.push_back(std::move(cosets[order[k]]));
  }
  for (auto& c : coset_of) c = renumber[c];
  return sorted;
}

}  // namespace

FaceLattice build_lattice(const Extension& ext, const CGroupGenerators& gens, std::uint64_t cap) {
  const GroupParams& params = ext.group().params();
  if (ext.order() > cap) {
    throw CapExceeded("build_lattice: 4 p^m exceeds the enumeration cap of " + std::to_string(cap),
                      0);
  }

  FaceLattice lattice;
  lattice.p = params.p();
  lattice.e = params.e();
  lattice.r = params.r();
  lattice.m = params.m();
  lattice.schlafli = schlafli_type(ext, gens);

  const std::array<ExtElement, 3> all_gens{gens.rho0, gens.rho1, gens.rho2};
  const ExtSubgroup all = ext.closure(all_gens, cap);
  const std::array<std::array<ExtElement, 2>, 3> parabolic_gens{{
      {gens.rho1, gens.rho2},
      {gens.rho0, gens.rho2},
      {gens.rho0, gens.rho1},
  }};

  std::array<std::vector<std::uint32_t>, 3> coset_of;
  for (int rank = 0; rank < 3; ++rank) {
    const ExtSubgroup parabolic = ext.closure(parabolic_gens[rank], cap);
    lattice.faces[rank] = right_cosets(ext, all, parabolic, rank, coset_of[rank]);
  }

  const std::array<std::uint32_t, 3> offset{
      0, static_cast<std::uint32_t>(lattice.faces[0].size()),
      static_cast<std::uint32_t>(lattice.faces[0].size() + lattice.faces[1].size())};
  for (int rank = 0; rank < 3; ++rank) {
    for (std::uint32_t k = 0; k < lattice.faces[rank].size(); ++k) {
      lattice.faces[rank][k].id = offset[rank] + k;
    }
  }

  lattice.flags.reserve(all.size());
  lattice.incidences.reserve(3 * all.size());
  for (std::size_t idx = 0; idx < all.size(); ++idx) {
    const std::array<std::uint32_t, 3> flag{offset[0] + coset_of[0][idx],
                                            offset[1] + coset_of[1][idx],
                                            offset[2] + coset_of[2][idx]};
    lattice.flags.push_back(flag);
    lattice.incidences.emplace_back(flag[0], flag[1]);
    lattice.incidences.emplace_back(flag[1], flag[2]);
    lattice.incidences.emplace_back(flag[0], flag[2]);
  }
  std::sort(lattice.incidences.begin(), lattice.incidences.end());
  lattice.incidences.erase(std::unique(lattice.incidences.begin(), lattice.incidences.end()),
                           lattice.incidences.end());
  lattice.elements = all.elements;
  return lattice;
}

CheckOutcome check_lattice(const FaceLattice& lattice) {
  CheckOutcome out;
  const GroupParams params = GroupParams::validate(lattice.p, lattice.e, lattice.r);
  const FaceCounts expected = closed_form_counts(params);
  const FaceCounts actual = lattice.counts();
  out.expect(actual.vertices == expected.vertices, "vertex count != p^{m-1}");
  out.expect(actual.edges == expected.edges, "edge count != p^m");
  out.expect(actual.faces == expected.faces, "2-face count != 2 p^{m-1}");
  out.expect(lattice.elements.size() == expected.flags, "|R| != 4 p^m");

  auto distinct_flags = lattice.flags;
  std::sort(distinct_flags.begin(), distinct_flags.end());
  distinct_flags.erase(std::unique(distinct_flags.begin(), distinct_flags.end()),
                       distinct_flags.end());
  out.expect(distinct_flags.size() == lattice.elements.size(), "flags are not one per element");

  const std::size_t total = lattice.face_count();
  const auto v_count = static_cast<std::uint32_t>(lattice.faces[0].size());
  const auto e_count = static_cast<std::uint32_t>(lattice.faces[1].size());
  auto rank_of = [&](std::uint32_t id) { return id < v_count ? 0 : (id < v_count + e_count ? 1 : 2); };

  // degree[id][other_rank]
  std::vector<std::array<std::uint64_t, 3>> degree(total, {0, 0, 0});
  std::vector<std::uint32_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [lo, hi] : lattice.incidences) {
    ++degree[lo][rank_of(hi)];
    ++degree[hi][rank_of(lo)];
    parent[find(lo)] = find(hi);
  }

  const auto p = static_cast<std::uint64_t>(lattice.p);
  bool edges_ok = true;
  bool vertices_ok = true;
  bool faces_ok = true;
  for (std::uint32_t id = 0; id < total; ++id) {
    switch (rank_of(id)) {
      case 0: vertices_ok = vertices_ok && degree[id][1] == 2 * p; break;
      case 1: edges_ok = edges_ok && degree[id][0] == 2 && degree[id][2] == 2; break;
      default: faces_ok = faces_ok && degree[id][1] == p; break;
    }
  }
  out.expect(edges_ok, "an edge is not on exactly 2 vertices and 2 faces");
  out.expect(vertices_ok, "a vertex is not on exactly 2p edges");
  out.expect(faces_ok, "a 2-face is not on exactly p edges");

  bool connected = true;
  for (std::uint32_t id = 1; id < total; ++id) connected = connected && find(id) == find(0);
  out.expect(connected, "incidence graph is disconnected");
  return out;
}

arith::BigInt euler_characteristic(const GroupParams& params) {
  return arith::ipow(params.p(), params.m() - 1) * (3 - params.p());
}

arith::BigInt euler_characteristic(const FaceLattice& lattice) {
  const FaceCounts c = lattice.counts();
  return c.vertices - c.edges + c.faces;
}

ExportFormat parse_export_format(const std::string& name) {
  if (name == "json") return ExportFormat::json;
  if (name == "dot") return ExportFormat::dot;
  throw UnsupportedFormat("unsupported lattice format: " + name);
}

void export_lattice(std::ostream& out, const GroupParams& params,
                    std::pair<std::uint64_t, std::uint64_t> schlafli,
                    const std::optional<FaceLattice>& lattice, ExportFormat format) {
  if (format == ExportFormat::dot) {
    if (!lattice) throw UnsupportedFormat("DOT export needs an enumerated lattice");
    const auto& faces = lattice->faces;
    std::vector<std::string> names(lattice->face_count());
    for (int rank = 0; rank < 3; ++rank) {
      for (std::size_t k = 0; k < faces[rank].size(); ++k) {
        names[faces[rank][k].id] = "r" + std::to_string(rank) + "_" + std::to_string(k);
      }
    }
    out << "graph hasse {\n  rankdir=BT;\n";
    for (int rank = 0; rank < 3; ++rank) {
      out << "  { rank=same;";
      for (const Face& face : faces[rank]) out << ' ' << names[face.id] << ';';
      out << " }\n";
    }
    const auto v_count = faces[0].size();
    const auto e_count = faces[1].size();
    for (const auto& [lo, hi] : lattice->incidences) {
      const bool lo_vertex = lo < v_count;
      const bool hi_face = hi >= v_count + e_count;
      if (lo_vertex && hi_face) continue;  // not a covering relation
      out << "  " << names[lo] << " -- " << names[hi] << ";\n";
    }
    out << "}\n";
    return;
  }

  const FaceCounts counts = lattice ? lattice->counts() : closed_form_counts(params);
  Json doc;
  doc["params"] = {{"p", params.p()}, {"e", params.e()}, {"r", params.r()}, {"m", params.m()}};
  doc["group_order"] = bigint_json(4 * params.order());
  doc["schlafli"] = {schlafli.first, schlafli.second};
  doc["counts"] = {{"vertices", bigint_json(counts.vertices)},
                   {"edges", bigint_json(counts.edges)},
                   {"faces", bigint_json(counts.faces)},
                   {"flags", bigint_json(counts.flags)}};
  doc["euler"] = bigint_json(lattice ? euler_characteristic(*lattice) : euler_characteristic(params));
  if (lattice) {
    Json faces = Json::array();
    for (int rank = 0; rank < 3; ++rank) {
      for (const Face& face : lattice->faces[rank]) {
        faces.push_back({{"rank", rank}, {"id", face.id}, {"rep", element_json(face.rep)}});
      }
    }
    doc["faces"] = std::move(faces);
    Json incidences = Json::array();
    for (const auto& [lo, hi] : lattice->incidences) incidences.push_back({lo, hi});
    doc["incidences"] = std::move(incidences);
  }
  out << doc.dump() << "\n";
}

}  // namespace stringc
