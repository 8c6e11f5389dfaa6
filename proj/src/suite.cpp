#include "topmin/suite.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "topmin/additivity.hpp"
#include "topmin/cubical.hpp"
#include "topmin/join_calculus.hpp"
#include "topmin/lemma_lab.hpp"
#include "topmin/random_corpus.hpp"
#include "topmin/surface_width.hpp"

namespace topmin {

namespace {

// Each property draws from its own stream so changing one count leaves the
// others' cases unchanged.
Rng stream(const RunConfig& cfg, std::uint64_t property) {
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(property)};
  return Rng(seq);
}

int count_or(const RunConfig& cfg, int fallback) { return cfg.counts > 0 ? cfg.counts : fallback; }

void record(PropertyResult& r, bool ok, const std::function<std::string()>& describe) {
  ++r.cases;
  if (ok) {
    ++r.passed;
  } else {
    r.failures.push_back(describe());
  }
}

// Runs one case; an exception counts as a failure naming the case.
void guarded(PropertyResult& r, const std::string& label, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    ++r.cases;
    r.failures.push_back(label + ": exception: " + e.what());
  }
}

std::string milnor_failure(const MilnorReport& m) {
  return m.left_name + " * " + m.right_name + ": direct " + to_json(m.direct).dump() + " formula " +
         to_json(m.via_formula).dump();
}

SurfaceConfiguration single(std::vector<std::pair<int, PieceKind>> placements, int tets) {
  SurfaceConfiguration c;
  c.skeleton.tetrahedra = tets;
  for (auto [tet, kind] : placements) c.pieces.push_back({tet, kind, 1});
  return c;
}

std::int64_t interior_cells_closed_form(const std::vector<int>& counts, int d) {
  // Interior d-cells of the subdivided cube: choose the d spanning axes S;
  // a spanning axis has counts+1 intervals, a point axis counts interior cuts.
  const int n = static_cast<int>(counts.size());
  std::int64_t total = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != d) continue;
    std::int64_t term = 1;
    for (int i = 0; i < n; ++i) term *= (mask >> i) & 1u ? counts[static_cast<std::size_t>(i)] + 1 : counts[static_cast<std::size_t>(i)];
    total += term;
  }
  return total;
}

}  // namespace

bool SuiteReport::pass() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.pass(); });
}

std::string SuiteReport::to_text() const {
  std::ostringstream out;
  out << "topmin suite seed=" << config.seed << " counts=" << config.counts << "\n";
  for (const auto& p : properties) {
    out << (p.pass() ? "[PASS] " : "[FAIL] ") << p.id << " " << p.passed << "/" << p.cases << "  " << p.title
        << "\n";
    for (const auto& f : p.failures) out << "    " << f << "\n";
  }
  out << "RESULT: " << (pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

Json SuiteReport::to_json() const {
  Json props = Json::array();
  for (const auto& p : properties) {
    props.push_back({{"id", p.id},
                     {"title", p.title},
                     {"cases", p.cases},
                     {"passed", p.passed},
                     {"pass", p.pass()},
                     {"failures", p.failures}});
  }
  return {{"seed", config.seed}, {"counts", config.counts}, {"pass", pass()}, {"properties", props}};
}

PropertyResult sphere_ladder_property(const RunConfig&) {
  PropertyResult r{"sphere_ladder", "boundary of the (k+1)-simplex has index k+1", 0, 0, {}};
  for (int k = 1; k <= 4; ++k) {
    guarded(r, "S" + std::to_string(k), [&] {
      auto idx = homology_index(sphere(k));
      record(r, idx == HomologyIndex::index(k + 1),
             [&] { return "S" + std::to_string(k) + ": got " + idx.to_string(); });
    });
  }
  return r;
}

PropertyResult milnor_property(const RunConfig& cfg) {
  PropertyResult r{"milnor", "join homology agrees with the Kunneth-Milnor formula", 0, 0, {}};
  auto rng = stream(cfg, 2);
  const auto s0 = sphere(0);
  const auto rp2 = real_projective_plane();
  const auto z = AbelianGroup::free(1);
  const auto z2 = AbelianGroup::cyclic(2);
  const AbelianGroup zero{};
  struct Fixed {
    SimplicialComplex a, b;
    HomologyProfile expected;
  };
  const std::vector<Fixed> fixed = {{s0, s0, HomologyProfile({zero, z})},
                                    {rp2, s0, HomologyProfile({zero, zero, z2})},
                                    {rp2, rp2, HomologyProfile({zero, zero, zero, z2, z2})}};
  for (const auto& f : fixed) {
    guarded(r, f.a.name() + " * " + f.b.name(), [&] {
      auto m = verify_milnor(f.a, f.b);
      record(r, m.pass && m.direct == f.expected,
             [&] { return milnor_failure(m) + " expected " + to_json(f.expected).dump(); });
    });
  }
  const int n = count_or(cfg, 50);
  for (int i = 0; i < n; ++i) {
    auto a = random_shaped_complex(rng, 7, 3, "A" + std::to_string(i));
    auto b = random_shaped_complex(rng, 7, 3, "B" + std::to_string(i));
    guarded(r, a.name() + " * " + b.name(), [&] {
      auto m = verify_milnor(a, b);
      record(r, m.pass, [&] {
        return milnor_failure(m) + " A=" + complex_to_json(a).dump() + " B=" + complex_to_json(b).dump();
      });
    });
  }
  return r;
}

PropertyResult index_additivity_property(const RunConfig& cfg) {
  PropertyResult r{"index_additivity", "index of the global join equals the sum of local indices", 0, 0, {}};
  auto rng = stream(cfg, 3);
  const int n = count_or(cfg, 100);
  for (int i = 0; i < n; ++i) {
    auto config = random_configuration(rng, 5, 3);
    guarded(r, "configuration " + std::to_string(i), [&] {
      auto matching = check_matching(config);
      auto rep = verify_index_sum(config);
      record(r, matching.pass && rep.pass, [&] {
        return "configuration " + std::to_string(i) + ": global " + rep.global.to_string() + " summed " +
               rep.summed.to_string() + " " + configuration_to_json(config).dump();
      });
    });
  }
  return r;
}

std::vector<CensusCase> census_cases() {
  using K = PieceKind;
  std::vector<CensusCase> out;
  out.push_back({"all normal, unglued", single({{0, K::Tri0}, {0, K::Quad2}, {0, K::Tri3}}, 1), 0});
  {
    auto c = single({{0, K::Tri1}, {1, K::Tri1}}, 2);
    c.skeleton.gluings.push_back({0, 0, 1, 0, {0, 1, 2}});
    out.push_back({"all normal, glued", c, 0});
  }
  out.push_back({"one OCT", single({{0, K::Oct1}}, 1), 1});
  out.push_back({"one TUBE", single({{0, K::Tube}, {0, K::Tri3}}, 1), 1});
  out.push_back({"OCT + OCT", single({{0, K::Oct2}, {1, K::Oct3}}, 2), 2});
  out.push_back({"OCT + TUBE", single({{0, K::Oct1}, {1, K::Tube}}, 2), 2});
  out.push_back({"TUBE + TUBE", single({{0, K::Tube}, {1, K::Tube}}, 2), 2});
  out.push_back({"HELICAL_12GON", single({{0, K::Helical12Gon}}, 1), 2});
  out.push_back({"TRIPLE_TUBE", single({{0, K::TripleTube}}, 1), 2});
  out.push_back({"OCT_TUBE_DISK", single({{0, K::OctTubeDisk}}, 1), 2});
  out.push_back({"OCT_TUBE_SELF", single({{0, K::OctTubeSelf}}, 1), 2});
  return out;
}

PropertyResult census_property(const RunConfig&) {
  PropertyResult r{"census", "configurations with at most two index-carrying pieces have index <= 2", 0, 0, {}};
  for (const auto& c : census_cases()) {
    guarded(r, c.label, [&] {
      auto rep = verify_index_sum(c.config);
      auto want = c.expected == 0 ? HomologyIndex::zero() : HomologyIndex::index(c.expected);
      record(r, rep.pass && rep.global == want && rep.global.at_most(2), [&] {
        return c.label + ": global " + rep.global.to_string() + " summed " + rep.summed.to_string() +
               " expected " + want.to_string();
      });
    });
  }
  return r;
}

PropertyResult dichotomy_property(const RunConfig& cfg) {
  PropertyResult r{"dichotomy", "either Y is small or some tau has a small adjacency subcomplex", 0, 0, {}};
  auto rng = stream(cfg, 5);
  const int n = count_or(cfg, 100);
  for (int i = 0; i < n; ++i) {
    auto [x, y] = random_full_pair(rng, 8, 3);
    guarded(r, "pair " + std::to_string(i), [&] {
      auto w = check_dichotomy(x, y);
      record(r, w.verdict != DichotomyWitness::Verdict::Failure && w.monotonicity_violations == 0, [&] {
        Json archive = {{"X", complex_to_json(x)}, {"Y", complex_to_json(y)}, {"witness", to_json(w)}};
        return "pair " + std::to_string(i) + ": " + archive.dump();
      });
    });
  }
  return r;
}

PropertyResult width_descent_property(const RunConfig& cfg) {
  PropertyResult r{"width_descent", "every surgery strictly decreases width and descent terminates", 0, 0, {}};
  auto rng = stream(cfg, 6);
  const int n = count_or(cfg, 1000);
  for (int i = 0; i < n; ++i) {
    Surface s;
    std::vector<SurgeryMove> moves;
    while (moves.empty()) {
      s = random_surface(rng, 6, 10, 20);
      moves = available_moves(s);
    }
    const auto& move = moves[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(moves.size()) - 1))];
    guarded(r, "move " + std::to_string(i), [&] {
      auto v = verify_width_decrease(s, move);
      record(r, v.pass, [&] {
        return "move " + std::to_string(i) + " " + std::string(move_name(move.kind)) + ": " + v.before.to_string() +
               " -> " + v.after.to_string();
      });
    });
  }
  const int walks = std::max(1, n / 10);
  constexpr int kStepCap = 100000;
  for (int i = 0; i < walks; ++i) {
    auto s = random_surface(rng, 6, 10, 20);
    guarded(r, "walk " + std::to_string(i), [&] {
      int steps = 0;
      bool monotone = true;
      for (auto moves = available_moves(s); !moves.empty() && steps < kStepCap; moves = available_moves(s)) {
        const auto& m = moves[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(moves.size()) - 1))];
        auto v = verify_width_decrease(s, m);
        monotone = monotone && v.pass;
        s = apply_surgery(s, m);
        ++steps;
      }
      record(r, monotone && steps < kStepCap, [&] {
        return "walk " + std::to_string(i) + ": " + (monotone ? "hit step cap" : "non-decreasing step");
      });
    });
  }
  return r;
}

PropertyResult constructions_property(const RunConfig& cfg) {
  PropertyResult r{"constructions", "subdivision, cone-cube and dual-cell constructions are consistent", 0, 0, {}};
  auto rng = stream(cfg, 7);
  const int n = count_or(cfg, 50);

  for (int i = 0; i < n; ++i) {
    auto k = random_complex(rng, 6, 4, 5);
    guarded(r, "subdivision " + std::to_string(i), [&] {
      auto chi = k.euler_characteristic();
      auto sd = barycentric_subdivision(k).euler_characteristic();
      record(r, chi == sd, [&] {
        return "subdivision " + std::to_string(i) + ": chi " + std::to_string(chi) + " vs " + std::to_string(sd) +
               " " + complex_to_json(k).dump();
      });
    });
  }

  for (int d = 1; d <= 4; ++d) {
    guarded(r, "cone cube " + std::to_string(d), [&] {
      auto cc = cube_from_cone(d);
      std::vector<Vertex> vs;
      for (int i = 1; i <= d; ++i) vs.emplace_back("v" + std::to_string(i));
      std::set<Simplex> expected{Simplex{"z"}};
      for (auto& f : Simplex(vs).faces()) expected.insert(f);
      std::set<Simplex> labels;
      std::set<LatticePoint> corners;
      for (const auto& l : cc.labels) {
        labels.insert(l.face);
        corners.insert(l.corner);
      }
      std::set<LatticePoint> vertices;
      for (const auto& c : cc.cube.cells())
        if (c.dimension() == 0) vertices.insert(c.lo);
      const bool ok = cc.labels.size() == expected.size() && labels == expected && corners == vertices;
      record(r, ok, [&] { return "cone cube " + std::to_string(d) + ": labels are not a bijection"; });
    });
  }

  const int cubes = count_or(cfg, 20);
  for (int i = 0; i < cubes; ++i) {
    auto counts = random_cut_counts(rng, 3, 2);
    const int d = static_cast<int>(counts.size());
    guarded(r, "cube " + std::to_string(i), [&] {
      auto cube = subdivide_cube(d, counts);
      auto cells = cube.cell_counts();
      std::int64_t tops = 1;
      for (int c : counts) tops *= c + 1;
      bool ok = static_cast<std::int64_t>(cells.back()) == tops && cube.euler_characteristic() == 1;

      auto dual = dual_cells(cube);
      auto dual_counts = dual.cell_counts();
      dual_counts.resize(static_cast<std::size_t>(d + 1), 0);
      for (int k = 0; k <= d; ++k)
        ok = ok && static_cast<std::int64_t>(dual_counts[static_cast<std::size_t>(d - k)]) ==
                       interior_cells_closed_form(counts, k);

      // Incidence reverses: a < b interior implies dual(b) < dual(a).
      auto mask = cube.boundary_mask();
      for (std::size_t b = 0; b < cube.cells().size() && ok; ++b) {
        if (mask[b]) continue;
        for (auto a : cube.facet_indices(b)) {
          if (mask[a]) continue;
          auto da = dual_box(cube.cells()[a]);
          auto db = dual_box(cube.cells()[b]);
          ok = ok && dual.contains(da) && dual.contains(db) && db.is_face_of(da) &&
               da.dimension() == db.dimension() + 1;
        }
      }
      record(r, ok, [&] {
        std::string s = "cube " + std::to_string(i) + " counts";
        for (int c : counts) s += " " + std::to_string(c);
        return s + ": cell or dual counts disagree";
      });
    });
  }
  return r;
}

PropertyResult catalog_property(std::span<const LocalPiece> pieces) {
  PropertyResult r{"catalog", "every catalog piece is normal on faces and has its declared index", 0, 0, {}};
  for (const auto& p : pieces) {
    guarded(r, std::string(p.name()), [&] {
      auto v = catalog_violations(std::span<const LocalPiece>(&p, 1));
      record(r, v.empty(), [&] {
        std::string s;
        for (const auto& line : v) s += (s.empty() ? "" : "; ") + line;
        return s;
      });
    });
  }
  return r;
}

SuiteReport run_suite(const RunConfig& cfg, std::span<const LocalPiece> pieces) {
  SuiteReport rep;
  rep.config = cfg;
  rep.properties.push_back(sphere_ladder_property(cfg));
  rep.properties.push_back(milnor_property(cfg));
  rep.properties.push_back(index_additivity_property(cfg));
  rep.properties.push_back(census_property(cfg));
  rep.properties.push_back(dichotomy_property(cfg));
  rep.properties.push_back(width_descent_property(cfg));
  rep.properties.push_back(constructions_property(cfg));
  rep.properties.push_back(catalog_property(pieces));
  return rep;
}

SuiteReport run_suite(const RunConfig& cfg) { return run_suite(cfg, catalog()); }

}  // namespace topmin
