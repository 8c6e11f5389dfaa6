// topmin: command-line front end. Exit status 0 on success, 1 when a
// verification fails, 2 on bad input.
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "topmin/additivity.hpp"
#include "topmin/cubical.hpp"
#include "topmin/homology.hpp"
#include "topmin/io.hpp"
#include "topmin/join_calculus.hpp"
#include "topmin/lemma_lab.hpp"
#include "topmin/piece_catalog.hpp"
#include "topmin/random_corpus.hpp"
#include "topmin/suite.hpp"
#include "topmin/surface_width.hpp"

using namespace topmin;

namespace {

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string counts_line(const std::vector<std::size_t>& counts) {
  std::string s;
  for (std::size_t d = 0; d < counts.size(); ++d) s += (d ? " " : "") + std::to_string(counts[d]);
  return s;
}

std::vector<int> parse_counts(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.empty()) throw ParseError("bad cut count '" + item + "'");
    out.push_back(v);
  }
  return out;
}

int cmd_homology(const std::string& file, bool json, bool index_only) {
  auto k = parse_complex(file);
  auto profile = reduced_homology(k);
  auto idx = homology_index(profile);
  if (json) {
    Json j = {{"name", k.name()}, {"index", to_json(idx)}};
    if (!index_only) j["homology"] = to_json(profile);
    print_json(j);
  } else {
    if (!index_only) std::cout << format_profile(profile);
    std::cout << (index_only ? "" : "index ") << idx.to_string() << "\n";
  }
  return 0;
}

int cmd_join(const std::string& a, const std::string& b, bool json) {
  auto k = disjoint_join(parse_complex(a), parse_complex(b));
  if (json) {
    print_json(complex_to_json(k));
  } else {
    std::cout << serialize_complex(k);
  }
  return 0;
}

int cmd_milnor(const std::string& a, const std::string& b, bool json) {
  auto r = verify_milnor(parse_complex(a), parse_complex(b));
  if (json) {
    print_json(to_json(r));
  } else {
    std::cout << r.left_name << " * " << r.right_name << (r.identity_rule ? " (empty operand: identity)" : "")
              << "\n";
    const int top = std::max(r.direct.length(), r.via_formula.length());
    for (int k = 0; k < top; ++k) {
      std::cout << "H~" << k << ": direct " << r.direct[k].to_string() << ", formula "
                << r.via_formula[k].to_string() << (r.direct[k] == r.via_formula[k] ? "" : "  MISMATCH") << "\n";
    }
    std::cout << (r.pass ? "PASS" : "FAIL") << "\n";
  }
  return r.pass ? 0 : 1;
}

int cmd_additivity(const std::string& file, bool json) {
  auto config = parse_configuration(file);
  auto matching = check_matching(config);
  if (!matching.pass) {
    if (json) {
      print_json({{"matching", to_json(matching)}, {"pass", false}});
    } else {
      std::cout << "matching equations fail\n";
    }
    return 1;
  }
  auto r = verify_index_sum(config);
  const auto chi = euler_characteristic(config);
  if (json) {
    Json j = to_json(r);
    j["euler_characteristic"] = chi;
    print_json(j);
  } else {
    std::cout << "euler characteristic " << chi << "\n";
    std::cout << "local indices";
    for (const auto& i : r.local) std::cout << " " << i.to_string();
    std::cout << "\nsum of local indices " << r.summed.to_string() << "\n";
    std::cout << "global index " << r.global.to_string() << "\n";
    std::cout << (r.pass ? "PASS" : "FAIL") << "\n";
  }
  return r.pass ? 0 : 1;
}

int cmd_dichotomy(const std::string& xf, const std::string& yf, bool json) {
  auto w = check_dichotomy(parse_complex(xf), parse_complex(yf));
  if (json) {
    print_json(to_json(w));
  } else {
    std::cout << verdict_name(w.verdict) << "\n";
    std::cout << "ind(X) " << w.index_x.to_string() << ", ind(Y) " << w.index_y.to_string() << "\n";
    if (w.tau) {
      std::cout << "tau " << w.tau->to_string() << " dim " << w.tau_dimension << ", ind(V_tau) "
                << w.index_v->to_string() << "\n";
    }
    std::cout << "candidates examined " << w.candidates_examined << ", monotonicity violations "
              << w.monotonicity_violations << "\n";
  }
  return w.verdict == DichotomyWitness::Verdict::Failure ? 1 : 0;
}

int cmd_width_demo(std::uint64_t seed, bool json) {
  Rng rng(seed);
  auto s = random_surface(rng, 4, 6, 12);
  Json steps = Json::array();
  bool ok = true;
  if (!json) std::cout << "start " << width(s).to_string() << "\n";
  for (auto moves = available_moves(s); !moves.empty(); moves = available_moves(s)) {
    const auto& m = moves[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(moves.size()) - 1))];
    auto v = verify_width_decrease(s, m);
    ok = ok && v.pass;
    s = apply_surgery(s, m);
    if (json) {
      steps.push_back({{"move", move_name(m.kind)},
                       {"target", m.target},
                       {"before", to_json(v.before)},
                       {"after", to_json(v.after)},
                       {"decreased", v.pass}});
    } else {
      std::cout << move_name(m.kind) << " on component " << m.target << ": " << v.after.to_string()
                << (v.pass ? "" : "  NOT DECREASING") << "\n";
    }
  }
  if (json) {
    print_json({{"seed", seed}, {"steps", steps}, {"final", to_json(width(s))}, {"pass", ok}});
  } else {
    std::cout << "terminated after no move applies; " << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_catalog(bool json) {
  const auto& pieces = catalog();
  if (json) {
    Json arr = Json::array();
    for (const auto& p : pieces) arr.push_back(to_json(p));
    print_json(arr);
    return 0;
  }
  for (const auto& p : pieces) {
    std::cout << p.name() << ": weight " << p.weight() << ", chi " << p.euler << ", index "
              << p.declared_index.to_string() << ", edges";
    for (int w : p.edge_weights) std::cout << " " << w;
    std::cout << ", model " << serialize_complex(p.model_complex);
  }
  return 0;
}

void print_cubical(const CubicalComplex& k, bool json) {
  if (json) {
    print_json(to_json(k));
  } else {
    std::cout << "cells by dimension " << counts_line(k.cell_counts()) << "\n";
    std::cout << "euler characteristic " << k.euler_characteristic() << "\n";
  }
}

int cmd_cube(int cone, int subdivide, const std::string& cuts, bool dual, bool json) {
  if (cone > 0) {
    auto cc = cube_from_cone(cone);
    if (json) {
      Json labels = Json::array();
      for (const auto& l : cc.labels) labels.push_back({{"corner", l.corner}, {"face", l.face.to_string()}});
      print_json({{"cube", to_json(cc.cube)}, {"labels", labels}});
    } else {
      for (const auto& l : cc.labels) {
        std::cout << "(";
        for (std::size_t i = 0; i < l.corner.size(); ++i) std::cout << (i ? "," : "") << l.corner[i];
        std::cout << ") " << l.face.to_string() << "\n";
      }
    }
    return 0;
  }
  auto k = subdivide_cube(subdivide, parse_counts(cuts));
  print_cubical(dual ? dual_cells(k) : k, json);
  return 0;
}

int cmd_dual(const std::string& file, bool json) {
  auto p = dual_cells(parse_complex(file));
  if (json) {
    print_json(to_json(p));
  } else {
    std::cout << "dual cells by dimension " << counts_line(p.cell_counts()) << "\n";
    for (const auto& c : p.cells) {
      std::cout << c.label << " dim " << c.dimension << " facets";
      for (auto f : c.facets) std::cout << " " << p.cells[f].label;
      std::cout << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"topmin: disk complexes, homology index and additivity checks"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output")->configurable(false);

  std::string f1, f2;
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "Machine-readable output"); };

  auto* homology = app.add_subcommand("homology", "Reduced integer homology of a complex file");
  homology->add_option("file", f1)->required();
  add_json(homology);
  auto* index = app.add_subcommand("index", "Homology index of a complex file");
  index->add_option("file", f1)->required();
  add_json(index);
  auto* join_cmd = app.add_subcommand("join", "Join of two complexes");
  join_cmd->add_option("a", f1)->required();
  join_cmd->add_option("b", f2)->required();
  add_json(join_cmd);
  auto* milnor = app.add_subcommand("milnor", "Compare join homology with the join formula");
  milnor->add_option("a", f1)->required();
  milnor->add_option("b", f2)->required();
  add_json(milnor);
  auto* additivity = app.add_subcommand("additivity", "Index of a surface configuration, both ways");
  additivity->add_option("config", f1)->required();
  add_json(additivity);
  auto* dichotomy = app.add_subcommand("dichotomy", "Check the subcomplex dichotomy for X inside Y");
  dichotomy->add_option("x", f1)->required();
  dichotomy->add_option("y", f2)->required();
  add_json(dichotomy);

  bool demo = false;
  std::uint64_t width_seed = RunConfig{}.seed;
  auto* width_cmd = app.add_subcommand("width", "Width descent under surgery");
  width_cmd->add_flag("--demo", demo, "Run a random surgery cascade")->required();
  width_cmd->add_option("--seed", width_seed, "Generator seed");
  add_json(width_cmd);

  auto* catalog_cmd = app.add_subcommand("catalog", "List the local piece catalog");
  add_json(catalog_cmd);

  int cone = 0;
  int subdivide = -1;
  std::string cuts;
  bool cube_dual = false;
  auto* cube = app.add_subcommand("cube", "Cubical constructions");
  auto* cone_opt = cube->add_option("--cone", cone, "Cube as the cone on an (n-1)-simplex")->check(CLI::Range(1, 6));
  auto* sub_opt = cube->add_option("--subdivide", subdivide, "Subdivide the n-cube")->check(CLI::Range(1, 8));
  cube->add_option("cuts", cuts, "Comma-separated cut counts, one per axis");
  cube->add_flag("--dual", cube_dual, "Print the dual cell decomposition of the subdivision");
  cone_opt->excludes(sub_opt);
  add_json(cube);

  auto* dual = app.add_subcommand("dual", "Dual cells of a simplicial ball");
  dual->add_option("file", f1)->required();
  add_json(dual);

  RunConfig run;
  auto* suite = app.add_subcommand("suite", "Run every property check");
  suite->add_option("--seed", run.seed, "Corpus seed");
  suite->add_option("--counts", run.counts, "Cases per randomized property")->check(CLI::NonNegativeNumber);
  add_json(suite);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*homology) return cmd_homology(f1, json, false);
    if (*index) return cmd_homology(f1, json, true);
    if (*join_cmd) return cmd_join(f1, f2, json);
    if (*milnor) return cmd_milnor(f1, f2, json);
    if (*additivity) return cmd_additivity(f1, json);
    if (*dichotomy) return cmd_dichotomy(f1, f2, json);
    if (*width_cmd) return cmd_width_demo(width_seed, json);
    if (*catalog_cmd) return cmd_catalog(json);
    if (*cube) {
      if (*cone_opt) return cmd_cube(cone, 0, {}, false, json);
      if (!*sub_opt) throw ParseError("cube needs --cone n or --subdivide n c1,...");
      return cmd_cube(0, subdivide, cuts, cube_dual, json);
    }
    if (*dual) return cmd_dual(f1, json);
    if (*suite) {
      run.json = json;
      auto report = run_suite(run);
      if (json) {
        print_json(report.to_json());
      } else {
        std::cout << report.to_text();
      }
      return report.pass() ? 0 : 1;
    }
  } catch (const TopologyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
