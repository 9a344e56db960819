#include <CLI11.hpp>

#include "igg/arith.hpp"
#include "igg/errors.hpp"
#include "igg/graph_build.hpp"
#include "igg/graph_classes.hpp"
#include "igg/group.hpp"
#include "igg/group_spec.hpp"
#include "igg/lattice.hpp"
#include "igg/theorems.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

namespace {

struct CliConfig {
  int order_cap = igg::kDefaultOrderCap;
  int subgroup_cap = 100000;
  int perfect_cap = igg::kDefaultPerfectCap;
  std::string format = "text";
  std::string out_path;
  int jobs = 0;
};

void emit(const CliConfig& cfg, const std::string& payload) {
  if (cfg.out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(cfg.out_path, std::ios::binary);
  if (!f) igg::fail(igg::ErrorCode::out_of_range, "cannot open output file " + cfg.out_path);
  f << payload;
}

bool pure_cyclic(const igg::GroupSpec& spec) {
  return spec.atoms.size() == 1 && spec.atoms[0].kind == igg::GroupAtom::Kind::cyclic && spec.atoms[0].a >= 2;
}

// cyclic groups go through the divisor fast path; everything else builds the
// table and enumerates the lattice
igg::SimpleGraph graph_for(const igg::GroupSpec& spec, const CliConfig& cfg) {
  if (pure_cyclic(spec)) return igg::cyclic_intersection_graph((uint64_t)spec.atoms[0].a);
  igg::EnumLimits lim;
  lim.order_cap = cfg.order_cap;
  lim.subgroup_cap = cfg.subgroup_cap;
  lim.jobs = cfg.jobs;
  auto g = std::make_shared<igg::GroupTable>(igg::build_group(spec, cfg.order_cap));
  return igg::intersection_subgroup_graph(igg::enumerate_subgroups(g, lim));
}

std::string graph_text(const igg::SimpleGraph& g) {
  std::ostringstream os;
  os << "vertices " << g.n << "\n";
  for (int i = 0; i < g.n; ++i) os << i << "\t" << g.labels[i] << "\t" << g.vorder[i] << "\n";
  os << "edges " << g.edge_count() << "\n";
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (g.edge(i, j)) os << i << " -- " << j << "\n";
  return os.str();
}

std::string render_graph(const igg::SimpleGraph& g, const CliConfig& cfg) {
  if (cfg.format == "dot") return igg::to_dot(g);
  if (cfg.format == "json") return igg::graph_to_json(g) + "\n";
  return graph_text(g);
}

std::vector<igg::GraphClass> parse_classes(const std::string& csv) {
  std::vector<igg::GraphClass> out;
  if (csv.empty()) {
    for (igg::GraphClass c : {igg::GraphClass::triangle_free, igg::GraphClass::cluster, igg::GraphClass::claw_free,
                              igg::GraphClass::cograph, igg::GraphClass::bipartite, igg::GraphClass::chordal,
                              igg::GraphClass::perfect})
      out.push_back(c);
    return out;
  }
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto c = igg::class_from_name(item);
    if (!c) igg::fail(igg::ErrorCode::out_of_range, "unknown graph class '" + item + "'");
    out.push_back(*c);
  }
  return out;
}

std::string classify_output(const std::string& name, long long order, const igg::SimpleGraph& g,
                            const std::vector<igg::GraphClass>& classes, const CliConfig& cfg) {
  std::vector<igg::ClassCertificate> certs;
  for (auto c : classes) certs.push_back(igg::run_recognizer(c, g, cfg.perfect_cap));
  if (cfg.format == "json") {
    std::ostringstream os;
    os << "{\"group\":\"" << name << "\",\"order\":" << order << ",\"vertices\":" << g.n << ",\"classes\":[";
    for (size_t i = 0; i < certs.size(); ++i) os << (i ? "," : "") << certs[i].to_json();
    os << "]}\n";
    return os.str();
  }
  std::ostringstream os;
  os << "group " << name << "\norder " << order << "\nvertices " << g.n << "\n";
  for (auto& cert : certs) {
    os << igg::class_name(cert.cls) << " " << (cert.verdict ? "true" : "false");
    if (!cert.witness.empty()) {
      os << " witness=[";
      for (size_t i = 0; i < cert.witness.size(); ++i) os << (i ? "," : "") << cert.witness[i];
      os << "]";
    }
    os << "\n";
  }
  return os.str();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"intersection graphs of subgroup lattices: construction, certified recognition, verification"};
  app.require_subcommand(1);
  app.fallthrough(); // global flags may follow the subcommand

  CliConfig cfg;
  app.add_option("--order-cap", cfg.order_cap, "largest group order built as a table");
  app.add_option("--perfect-cap", cfg.perfect_cap, "vertex cap for the perfection check");
  app.add_option("--subgroup-cap", cfg.subgroup_cap, "cap on enumerated subgroups");
  app.add_option("--format", cfg.format, "text | json | dot")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--out", cfg.out_path, "write output to a file");
  app.add_option("--jobs", cfg.jobs, "worker threads (0 = hardware)");

  std::string spec_text, classes_csv;
  long zmax = 0;
  uint64_t suzuki_q = 0, catalan_limit = 0;
  int max_order = 60;

  CLI::App* cmd_graph = app.add_subcommand("graph", "build the intersection graph of a group's subgroups");
  cmd_graph->add_option("spec", spec_text, "group, e.g. C12, Q8xC3, E2^3, Heis3, S4, D6")->required();

  CLI::App* cmd_classify = app.add_subcommand("classify", "run certified class recognizers on the graph");
  cmd_classify->add_option("spec", spec_text)->required();
  cmd_classify->add_option("--classes", classes_csv, "comma-separated class list (default: all)");

  CLI::App* cmd_lattice = app.add_subcommand("lattice", "enumerate the subgroup lattice");
  cmd_lattice->add_option("spec", spec_text)->required();

  CLI::App* cmd_verify = app.add_subcommand("verify", "replay the classification rules over a group catalog");
  cmd_verify->add_option("--max-order", max_order, "catalog order bound");

  CLI::App* cmd_zgraph = app.add_subcommand("zgraph", "integer subgroup graph fragment on moduli 2..N");
  cmd_zgraph->add_option("N", zmax, "largest modulus")->required();
  cmd_zgraph->add_option("--classes", classes_csv, "classify instead of printing the graph");

  CLI::App* cmd_suzuki = app.add_subcommand("suzuki-check", "arithmetic cograph condition for 2B2(q)");
  cmd_suzuki->add_option("q", suzuki_q, "q = 2^(2e+1), q >= 8")->required();

  CLI::App* cmd_catalan = app.add_subcommand("catalan", "consecutive perfect powers up to a bound");
  cmd_catalan->add_option("limit", catalan_limit, "search bound (<= 10^6)")->required();

  try {
    app.parse(argc, argv);

    if (cmd_graph->parsed()) {
      igg::GroupSpec spec = igg::parse_spec(spec_text);
      emit(cfg, render_graph(graph_for(spec, cfg), cfg));
    } else if (cmd_classify->parsed()) {
      igg::GroupSpec spec = igg::parse_spec(spec_text);
      igg::SimpleGraph g = graph_for(spec, cfg);
      emit(cfg, classify_output(spec.to_string(), (long long)spec.order(), g, parse_classes(classes_csv), cfg));
    } else if (cmd_lattice->parsed()) {
      igg::GroupSpec spec = igg::parse_spec(spec_text);
      igg::EnumLimits lim;
      lim.order_cap = cfg.order_cap;
      lim.subgroup_cap = cfg.subgroup_cap;
      lim.jobs = cfg.jobs;
      auto g = std::make_shared<igg::GroupTable>(igg::build_group(spec, cfg.order_cap));
      igg::SubgroupLattice lat = igg::enumerate_subgroups(g, lim);
      if (cfg.format == "json") {
        emit(cfg, lat.to_json() + "\n");
      } else {
        std::ostringstream os;
        os << "subgroups " << lat.size() << "\n";
        for (auto& s : lat.subgroups) {
          os << s.order << "\t[";
          auto idx = s.members.to_indices();
          for (size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
          os << "]\t<";
          for (size_t i = 0; i < s.gens.size(); ++i) os << (i ? "," : "") << s.gens[i];
          os << ">\n";
        }
        emit(cfg, os.str());
      }
    } else if (cmd_verify->parsed()) {
      igg::VerifyOptions opts;
      opts.limits.order_cap = cfg.order_cap;
      opts.limits.subgroup_cap = cfg.subgroup_cap;
      opts.perfect_cap = cfg.perfect_cap;
      opts.jobs = cfg.jobs;
      igg::VerificationReport rep = igg::run_verification(igg::build_catalog(max_order), opts);
      emit(cfg, cfg.format == "json" ? rep.to_json() + "\n" : rep.to_text());
      if (!rep.ok()) return 1;
    } else if (cmd_zgraph->parsed()) {
      if (zmax > cfg.order_cap)
        igg::fail(igg::ErrorCode::order_cap_exceeded,
                  "zgraph bound " + std::to_string(zmax) + " > cap " + std::to_string(cfg.order_cap));
      igg::SimpleGraph g = igg::z_fragment_graph({zmax});
      if (classes_csv.empty())
        emit(cfg, render_graph(g, cfg));
      else
        emit(cfg, classify_output("Z(max " + std::to_string(zmax) + ")", zmax, g, parse_classes(classes_csv), cfg));
    } else if (cmd_suzuki->parsed()) {
      igg::SuzukiVerdict v = igg::suzuki_cograph_condition(suzuki_q);
      std::ostringstream os;
      auto vjson = [](const igg::SuzukiValue& sv) {
        std::ostringstream o;
        o << "{\"value\":" << sv.value << ",\"factorization\":\"" << sv.fact.to_string() << "\",\"ok\":"
          << (sv.ok() ? "true" : "false") << "}";
        return o.str();
      };
      if (cfg.format == "json") {
        os << "{\"q\":" << v.q << ",\"values\":[" << vjson(v.q_minus_1) << "," << vjson(v.q_minus_root) << ","
           << vjson(v.q_plus_root) << "],\"condition\":" << (v.condition ? "true" : "false")
           << ",\"q_eq_8_flag\":" << (v.q_eq_8_flag ? "true" : "false") << "}\n";
      } else {
        os << "q " << v.q << "\n";
        for (auto* sv : {&v.q_minus_1, &v.q_minus_root, &v.q_plus_root})
          os << sv->value << " = " << sv->fact.to_string() << " -> " << (sv->ok() ? "ok" : "fails") << "\n";
        os << "condition " << (v.condition ? "true" : "false") << "\n";
        os << "q8-flag " << (v.q_eq_8_flag ? "true" : "false") << "\n";
      }
      emit(cfg, os.str());
    } else if (cmd_catalan->parsed()) {
      auto sols = igg::catalan_solutions(catalan_limit);
      std::ostringstream os;
      if (cfg.format == "json") {
        os << "[";
        for (size_t i = 0; i < sols.size(); ++i) {
          if (i) os << ",";
          os << "{\"x\":" << sols[i].x << ",\"a\":" << sols[i].a << ",\"y\":" << sols[i].y
             << ",\"b\":" << sols[i].b << "}";
        }
        os << "]\n";
      } else {
        for (auto& s : sols)
          os << s.x << "^" << s.a << " - " << s.y << "^" << s.b << " = 1\n";
        if (sols.empty()) os << "none\n";
      }
      emit(cfg, os.str());
    }
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e); // --help
    std::cerr << "error[cli]: " << e.what() << "\n";
    return 3;
  } catch (const igg::Error& e) {
    std::cerr << "error[" << e.tag() << "]: " << e.what() << "\n";
    if (e.is_parse()) return 3;
    if (e.is_cap()) return 2;
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error[internal]: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
