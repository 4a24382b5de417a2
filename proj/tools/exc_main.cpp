#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "exc/experiments.hpp"

using namespace exc;

namespace {

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::domain_error("cannot open input file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const Json& j) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  out << j.dump(2) << "\n";
}

RatVec parse_nodes(const std::string& csv) {
  RatVec nodes;
  std::stringstream ss(csv);
  std::string part;
  while (std::getline(ss, part, ',')) nodes.push_back(rational_from_string(part));
  return nodes;
}

PositiveMatrix read_positive_matrix(const std::string& input_path) {
  return PositiveMatrix::from_matrix(matrix_from_json(parse_json(read_input(input_path))));
}

int max_threads() {
  if (const char* env = std::getenv("EXC_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) return t;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact exterior cyclic polytope and amplituhedron toolkit"};
  app.require_subcommand(1);

  std::string input, output, mode = "vandermonde", nodes_csv, method = "bar", enumerate = "bases";
  std::uint64_t seed = 1;
  long trials = 10000;
  int k = 2, m = 2, n = 6, rows = 4, max_size = 0;
  bool parallel = false;

  auto* gen = app.add_subcommand("gen", "generate a positive matrix as JSON");
  gen->add_option("--mode", mode, "vandermonde or random");
  gen->add_option("--nodes", nodes_csv, "comma separated rationals for vandermonde");
  gen->add_option("--rows", rows);
  gen->add_option("--n", n);
  gen->add_option("--seed", seed);
  gen->add_option("--output", output);

  auto* wedge_cmd = app.add_subcommand("wedge", "wedge power matrix of a positive matrix");
  wedge_cmd->add_option("--k", k);
  wedge_cmd->add_option("--input", input);
  wedge_cmd->add_option("--output", output);

  auto* hull = app.add_subcommand("hull", "facets, incidence and f-vector of the exterior cyclic cone");
  hull->add_option("--k", k);
  hull->add_option("--input", input);
  hull->add_option("--output", output);

  auto* matroid_cmd = app.add_subcommand("matroid", "wedge matroid enumeration");
  matroid_cmd->add_option("--k", k);
  matroid_cmd->add_option("--enum", enumerate, "bases, circuits or hyperplanes");
  matroid_cmd->add_option("--max-size", max_size);
  matroid_cmd->add_option("--input", input);
  matroid_cmd->add_option("--output", output);

  auto* schubert_cmd = app.add_subcommand("schubert", "facet classification records");
  schubert_cmd->add_option("--k", k);
  schubert_cmd->add_option("--input", input);
  schubert_cmd->add_option("--output", output);

  auto* twist_cmd = app.add_subcommand("twist", "twist of a positive matrix");
  twist_cmd->add_option("--k", k);
  twist_cmd->add_option("--m", m);
  twist_cmd->add_option("--input", input);
  twist_cmd->add_option("--output", output);

  auto* amp = app.add_subcommand("amp", "amplituhedron membership and sampling");
  amp->require_subcommand(1);
  auto* member = amp->add_subcommand("member", "test a Grassmannian point");
  member->add_option("--method", method, "bar, signflip, dual or cone");
  member->add_option("--k", k);
  member->add_option("--input", input, "JSON {z: matrix, y: matrix}");
  member->add_option("--output", output);
  auto* sample = amp->add_subcommand("sample", "sample a point of the amplituhedron");
  sample->add_option("--k", k);
  sample->add_option("--seed", seed);
  sample->add_option("--input", input);
  sample->add_option("--output", output);
  auto* verify_eq = amp->add_subcommand("verify-equivalence", "cross-oracle agreement");
  verify_eq->add_option("--trials", trials);
  verify_eq->add_option("--seed", seed);
  verify_eq->add_option("--n", n);

  auto* verify = app.add_subcommand("verify", "run a named experiment");
  std::string experiment;
  bool list = false;
  verify->add_option("name", experiment, "experiment name or 'all'");
  verify->add_flag("--list", list, "list experiments");
  verify->add_option("--seed", seed);
  verify->add_option("--trials", trials);
  verify->add_option("--n", n)->default_val(0);
  verify->add_flag("--parallel", parallel, "run experiments concurrently (capped by EXC_THREADS)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) {
      PositiveMatrix z = (mode == "random") ? random_positive(rows, n, seed)
                                            : vandermonde(parse_nodes(nodes_csv), rows);
      write_output(output, matrix_to_json(z.matrix()));
      std::cerr << "positive " << z.rows() << "x" << z.cols() << " matrix\n";
      return 0;
    }
    if (*wedge_cmd) {
      write_output(output, matrix_to_json(wedge_power_matrix(read_positive_matrix(input), k)));
      return 0;
    }
    if (*hull) {
      PointedCone cone = exterior_cyclic_cone(read_positive_matrix(input), k);
      Json j = cone_to_json(cone);
      Json fv = Json::array();
      for (long x : cone.f_vector()) fv.push_back(x);
      j["f_vector"] = fv;
      write_output(output, j);
      std::cerr << "facets: " << cone.facets().size() << ", f-vector: " << j["f_vector"].dump() << "\n";
      return 0;
    }
    if (*matroid_cmd) {
      LinearMatroid w = matroid_of(read_positive_matrix(input), k);
      Json j;
      if (enumerate == "bases") {
        auto bases = w.bases();
        std::set<EdgeGraph> classes;
        if (k == 2)
          for (const auto& b : bases) classes.insert(canonical_graph(w.subset_graph(b)));
        j = Json{{"rank", w.full_rank()}, {"bases", bases.size()}};
        if (k == 2) j["classes"] = classes.size();
        std::cerr << "bases: " << bases.size() << "\n";
      } else if (enumerate == "circuits") {
        int bound = max_size ? max_size : w.full_rank() + 1;
        auto cs = w.circuits(bound);
        Json lists = Json::array();
        for (const auto& c : cs) {
          if (k == 2)
            lists.push_back(graph_to_json(w.subset_graph(c)));
          else {
            Json labels = Json::array();
            for (int e : c) {
              Json lab = Json::array();
              for (int x : w.ground()[e]) lab.push_back(x);
              labels.push_back(lab);
            }
            lists.push_back(labels);
          }
        }
        j = Json{{"max_size", bound}, {"count", cs.size()}, {"circuits", lists}};
        std::cerr << "circuits up to size " << bound << ": " << cs.size() << "\n";
      } else if (enumerate == "hyperplanes") {
        auto flats = w.hyperplane_flats();
        Json lists = Json::array();
        for (const auto& f : flats) {
          if (k == 2) {
            lists.push_back(graph_to_json(w.subset_graph(f)));
          } else {
            Json labels = Json::array();
            for (int e : f) {
              Json lab = Json::array();
              for (int x : w.ground()[e]) lab.push_back(x);
              labels.push_back(lab);
            }
            lists.push_back(labels);
          }
        }
        j = Json{{"count", flats.size()}, {"hyperplanes", lists}};
        std::cerr << "hyperplane flats: " << flats.size() << "\n";
      } else {
        throw std::domain_error("unknown --enum mode " + enumerate);
      }
      write_output(output, j);
      return 0;
    }
    if (*schubert_cmd) {
      SchubertClassification cls = classify_facets(read_positive_matrix(input), k);
      Json facets = Json::array();
      for (const auto& f : cls.facets) {
        Json vertices = Json::array();
        for (const Subset& v : f.vertices) {
          Json lab = Json::array();
          for (int x : v) lab.push_back(x);
          vertices.push_back(lab);
        }
        Json rec = Json{{"vertices", vertices},
                        {"normal", exterior_to_json(f.normal)},
                        {"kind", f.kind == FacetKind::SCHUBERT ? "SCHUBERT" : "NON_SCHUBERT"}};
        if (!f.witness.empty()) {
          Json wt = Json::array();
          for (const auto& w : f.witness) {
            Json row = Json::array();
            for (const auto& q : w) row.push_back(rational_to_string(q));
            wt.push_back(row);
          }
          rec["witness"] = wt;
        }
        facets.push_back(std::move(rec));
      }
      write_output(output, Json{{"facets", facets}, {"schubert", cls.schubert_count()}});
      std::cerr << "schubert facets: " << cls.schubert_count() << " of " << cls.facets.size() << "\n";
      return 0;
    }
    if (*twist_cmd) {
      PositiveMatrix z = read_positive_matrix(input);
      write_output(output, matrix_to_json(twist(z, k, z.rows() - k).matrix()));
      return 0;
    }
    if (*amp) {
      if (*member) {
        Json in = parse_json(read_input(input));
        PositiveMatrix z = PositiveMatrix::from_matrix(matrix_from_json(in.at("z")));
        GrassmannPoint y = make_grassmann_point(matrix_from_json(in.at("y")));
        Verdict v;
        if (method == "bar")
          v = member_bar(y, z);
        else if (method == "signflip")
          v = member_signflip(y, z, k);
        else if (method == "dual")
          v = member_dual(y, z);
        else if (method == "cone")
          v = member_cone(y, exterior_cyclic_cone(z, k));
        else
          throw std::domain_error("unknown membership method " + method);
        std::string verdict = v == Verdict::IN ? "IN" : v == Verdict::OUT ? "OUT" : "BOUNDARY_OR_DEGENERATE";
        write_output(output, Json{{"method", method}, {"verdict", verdict}});
        return 0;
      }
      if (*sample) {
        PositiveMatrix z = read_positive_matrix(input);
        GrassmannPoint y = sample_amplituhedron(z, k, seed);
        write_output(output, Json{{"y", matrix_to_json(y.mat)}, {"plucker", exterior_to_json(y.plucker)}});
        return 0;
      }
      if (*verify_eq) {
        ExperimentOptions opt;
        opt.seed = seed;
        opt.trials = trials;
        opt.n = n;
        ExperimentReport rep = run_experiment("oracle-equivalence", opt);
        write_output("", rep.to_json());
        return rep.ok() ? 0 : 1;
      }
    }
    if (*verify) {
      if (list || experiment.empty()) {
        for (const auto& name : experiment_names()) std::cout << name << "\n";
        return experiment.empty() && !list ? 2 : 0;
      }
      ExperimentOptions opt;
      opt.seed = seed;
      opt.trials = trials;
      opt.n = n;
      std::vector<std::string> to_run;
      if (experiment == "all")
        to_run = experiment_names();
      else
        to_run.push_back(experiment);
      Json out = Json::array();
      bool all_ok = true;
      if (parallel && to_run.size() > 1) {
        int cap = max_threads();
        size_t next = 0;
        std::vector<ExperimentReport> reports(to_run.size());
        std::vector<std::pair<size_t, std::future<ExperimentReport>>> slots;
        while (next < to_run.size() || !slots.empty()) {
          while (static_cast<int>(slots.size()) < cap && next < to_run.size()) {
            size_t i = next++;
            slots.emplace_back(i, std::async(std::launch::async,
                                             [&to_run, i, opt] { return run_experiment(to_run[i], opt); }));
          }
          auto [idx, fut] = std::move(slots.front());
          slots.erase(slots.begin());
          reports[idx] = fut.get();
        }
        for (const auto& rep : reports) {
          out.push_back(rep.to_json());
          all_ok = all_ok && rep.ok();
          std::cerr << rep.name << ": " << rep.to_json()["status"].get<std::string>() << "\n";
        }
      } else {
        for (const auto& name : to_run) {
          ExperimentReport rep = run_experiment(name, opt);
          out.push_back(rep.to_json());
          all_ok = all_ok && rep.ok();
          std::cerr << rep.name << ": " << rep.to_json()["status"].get<std::string>() << " ("
                    << static_cast<long>(rep.wall_ms) << " ms)\n";
        }
      }
      write_output(output, to_run.size() == 1 ? out[0] : out);
      return all_ok ? 0 : 1;
    }
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
