// gcx: exact computations in graph complexes -- enumeration, co-Feynman
// transform differentials, homology slices, symmetric-group tables, and the
// verification suite.

#include <CLI11.hpp>
#include <climits>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gcx/enumerate.hpp"
#include "gcx/feynman.hpp"
#include "gcx/json_io.hpp"
#include "gcx/parallel.hpp"
#include "gcx/symrep.hpp"
#include "gcx/verify.hpp"

using namespace gcx;
using Json = nlohmann::ordered_json;

namespace {

struct OutputSink {
  std::string path;  // empty = stdout
  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      if (!text.empty() && text.back() != '\n') std::cout << "\n";
      return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << text;
  }
};

symrep::Partition parse_partition(const std::string& s) {
  symrep::Partition p;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) p.push_back(std::stoi(tok));
  if (!symrep::is_partition(p)) throw CLI::ValidationError("not a partition: " + s);
  return p;
}

std::string csv_escape(const std::string& s) { return s; }

int emit_certificates(const std::vector<verify::Certificate>& certs, const std::string& format,
                      const OutputSink& sink) {
  bool all_pass = true;
  for (const auto& c : certs) all_pass = all_pass && c.pass;
  if (format == "json") {
    Json arr = Json::array();
    for (const auto& c : certs) arr.push_back(verify::to_json(c));
    sink.write(arr.dump(2));
  } else if (format == "csv") {
    std::ostringstream os;
    os << "claim,params,verdict,ms\n";
    for (const auto& c : certs)
      os << c.claim << "," << csv_escape(c.params.dump()) << ","
         << (c.pass ? "PASS" : "FAIL") << "," << c.ms << "\n";
    sink.write(os.str());
  } else {
    std::ostringstream os;
    for (const auto& c : certs)
      os << (c.pass ? "PASS" : "FAIL") << "  " << c.claim << " " << c.params.dump() << "  ("
         << c.ms << " ms)\n";
    sink.write(os.str());
  }
  return all_pass ? 0 : 1;
}

}  // namespace

// Flat key=value config support: keys mirror long flags and are applied only
// when the flag is absent from the command line, so flags take precedence.
static std::vector<std::string> apply_config(std::vector<std::string> args) {
  std::string path;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read config file: " + path);
  std::string line;
  while (std::getline(f, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      size_t a = s.find_first_not_of(" \t\r");
      size_t b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key.empty()) continue;
    bool present = false;
    for (const auto& a : args)
      if (a == "--" + key || a.rfind("--" + key + "=", 0) == 0) present = true;
    if (present) continue;
    if (value == "true" || value.empty())
      args.push_back("--" + key);
    else
      args.push_back("--" + key + "=" + value);
  }
  return args;
}

int main(int argc, char** argv) {
  CLI::App app{"exact graph-complex computation kit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string format = "human", out_path, config_path;
  int jobs = 0;
  bool opt_in_slow = false;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv", "human"}));
  app.add_option("--out", out_path, "write output to this file");
  app.add_option("--jobs", jobs, "parallelism (0 = all cores)");
  app.add_option("--config", config_path, "flat key=value config file; flags take precedence");
  app.add_flag("--opt-in-slow", opt_in_slow, "include the long-running checks");

  // ---- enumerate ----
  auto* cmd_enum = app.add_subcommand("enumerate", "isomorphism classes of modular graphs");
  int eg = 0, en = 0, emin = -1, emax = -1;
  bool eno_loops = false, eno_simple = false;
  cmd_enum->add_option("--genus", eg)->required();
  cmd_enum->add_option("--legs", en);
  cmd_enum->add_option("--min-edges", emin);
  cmd_enum->add_option("--max-edges", emax);
  cmd_enum->add_flag("--no-loops", eno_loops);
  cmd_enum->add_flag("--no-simple-loops", eno_simple);

  // ---- complex ----
  auto* cmd_cx = app.add_subcommand("complex", "summand dimensions of B(A)(g,n) by bidegree");
  std::string cop = "hlie";
  int cg = 0, cn = 0;
  bool cno_loops = false, cno_simple = false;
  cmd_cx->add_option("--operad", cop)->check(CLI::IsMember({"com", "hlie"}));
  cmd_cx->add_option("--genus", cg)->required();
  cmd_cx->add_option("--legs", cn);
  cmd_cx->add_flag("--no-loops", cno_loops);
  cmd_cx->add_flag("--no-simple-loops", cno_simple);

  // ---- differential ----
  auto* cmd_diff = app.add_subcommand("differential", "differential matrices of B(A)(g,n)");
  std::string dop = "hlie";
  int dg = 0, dn = 0;
  bool dno_loops = false, dno_simple = false;
  cmd_diff->add_option("--operad", dop)->check(CLI::IsMember({"com", "hlie"}));
  cmd_diff->add_option("--genus", dg)->required();
  cmd_diff->add_option("--legs", dn);
  cmd_diff->add_flag("--no-loops", dno_loops);
  cmd_diff->add_flag("--no-simple-loops", dno_simple);

  // ---- homology ----
  auto* cmd_h = app.add_subcommand("homology", "loopless genus slice homology table");
  int hg = 3, hdeg = INT_MIN;
  std::string h_export;
  cmd_h->add_option("--genus", hg)->required();
  cmd_h->add_option("--degree", hdeg, "restrict the table to one degree");
  cmd_h->add_option("--export-dir", h_export,
                    "also write the boundary matrices as coordinate-list text");

  // ---- rep ----
  auto* cmd_rep = app.add_subcommand("rep", "symmetric group representation tables");
  auto* rep_restrict = cmd_rep->add_subcommand("restrict", "Res_{S_a x S_b} V_p");
  std::string rp;
  int ra = 0, rb = 0;
  rep_restrict->add_option("--partition", rp)->required();
  rep_restrict->add_option("--a", ra)->required();
  rep_restrict->add_option("--b", rb)->required();
  auto* rep_wreath = cmd_rep->add_subcommand("wreath", "L_q multiplicity in a restricted hook");
  std::string wh;
  int wq = 0;
  rep_wreath->add_option("--hook", wh)->required();
  rep_wreath->add_option("--q", wq)->required();
  auto* rep_cyc = cmd_rep->add_subcommand("cyclic", "W_i multiplicities under Z_{2n}");
  std::string cp;
  int ci = -1;
  rep_cyc->add_option("--partition", cp)->required();
  rep_cyc->add_option("--i", ci);
  auto* rep_rel = cmd_rep->add_subcommand("relations", "orbit span of the composition relation");
  int rt = 0, rj = 0;
  rep_rel->add_option("--t", rt)->required();
  rep_rel->add_option("--j", rj)->required();

  // ---- verify ----
  auto* cmd_v = app.add_subcommand("verify", "verification certificates");
  cmd_v->require_subcommand(1);
  int vj = 1, vg = 1, vn = 4;
  std::string vop = "hlie";
  auto* v_wheel = cmd_v->add_subcommand("wheel-cycle");
  v_wheel->add_option("--j", vj);
  auto* v_theta = cmd_v->add_subcommand("theta");
  v_theta->add_option("--j", vj);
  auto* v_prop = cmd_v->add_subcommand("propzero");
  v_prop->add_option("--j", vj);
  bool v_nofilter = false;
  v_prop->add_flag("--without-filter", v_nofilter, "sanity inversion");
  auto* v_deg0 = cmd_v->add_subcommand("deg0");
  v_deg0->add_option("--j", vj);
  auto* v_nt = cmd_v->add_subcommand("nontrivial");
  v_nt->add_option("--j", vj);
  bool v_brute = false;
  v_nt->add_flag("--brute-force", v_brute);
  auto* v_d2 = cmd_v->add_subcommand("dsquared");
  v_d2->add_option("--operad", vop)->check(CLI::IsMember({"com", "hlie"}));
  v_d2->add_option("--genus", vg)->required();
  v_d2->add_option("--legs", vn);
  auto* v_all = cmd_v->add_subcommand("all");

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = apply_config(std::move(args));
    std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit 2; --help exits 0
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  OutputSink sink{out_path};
  if (jobs <= 0) jobs = hardware_jobs();

  try {
    if (*cmd_enum) {
      graph::EnumOptions opt;
      opt.min_edges = emin;
      opt.max_edges = emax;
      opt.no_loops = eno_loops;
      opt.no_simple_loops = eno_simple;
      opt.jobs = jobs;
      auto gs = graph::enumerate_graphs(eg, en, opt);
      if (format == "json") {
        Json arr = Json::array();
        for (const auto& g : gs) arr.push_back(json_io::graph_to_json(g));
        sink.write(arr.dump(2));
      } else if (format == "csv") {
        std::ostringstream os;
        os << "index,vertices,edges,loops,genus_labels\n";
        for (size_t i = 0; i < gs.size(); ++i) {
          int loops = 0;
          for (int v = 0; v < gs[i].g.vertex_count; ++v) loops += gs[i].g.loops_at(v);
          os << i << "," << gs[i].g.vertex_count << "," << gs[i].edge_count() << "," << loops
             << ",\"";
          for (int v = 0; v < gs[i].g.vertex_count; ++v)
            os << (v ? " " : "") << gs[i].genus[v];
          os << "\"\n";
        }
        sink.write(os.str());
      } else {
        std::ostringstream os;
        os << gs.size() << " isomorphism classes of type (" << eg << "," << en << ")\n";
        for (size_t i = 0; i < gs.size(); ++i) {
          const auto& g = gs[i];
          os << "  #" << i << ": V=" << g.g.vertex_count << " E=" << g.edge_count()
             << "  genus";
          for (int v = 0; v < g.g.vertex_count; ++v) os << " " << g.genus[v];
          os << "  edges";
          for (auto [f, h] : g.g.edges())
            os << " (" << g.g.adjacency[f] << "," << g.g.adjacency[h] << ")";
          if (g.n_legs() > 0) {
            os << "  legs";
            for (int l = 0; l < g.n_legs(); ++l)
              os << " " << (l + 1) << "@" << g.g.adjacency[g.leg_labels[l]];
          }
          os << "\n";
        }
        sink.write(os.str());
      }
      return 0;
    }

    if (*cmd_cx || *cmd_diff) {
      bool diff = (bool)*cmd_diff;
      std::string ops = diff ? dop : cop;
      feynman::Operad op = ops == "com" ? feynman::Operad::Com : feynman::Operad::HLie;
      feynman::Options opt;
      opt.no_loops = diff ? dno_loops : cno_loops;
      opt.no_simple_loops = diff ? dno_simple : cno_simple;
      opt.jobs = jobs;
      feynman::Complex cx(op, diff ? dg : cg, diff ? dn : cn, opt);
      cx.build_all();
      // bidegree table
      std::map<std::pair<int, int>, int> dims;
      for (const auto& [gid, s, k] : cx.all_keys()) {
        dims[{cx.graph_of(gid).edge_count(), s}]++;
      }
      if (!diff) {
        if (format == "json") {
          Json arr = Json::array();
          for (const auto& [rs, d] : dims)
            arr.push_back(Json{{"edges", rs.first}, {"internal_degree", rs.second}, {"dim", d}});
          sink.write(arr.dump(2));
        } else {
          std::ostringstream os;
          os << "edges,internal_degree,dim\n";
          for (const auto& [rs, d] : dims)
            os << rs.first << "," << rs.second << "," << d << "\n";
          sink.write(os.str());
        }
        return 0;
      }
      // differential stats per bidegree
      std::map<std::pair<int, int>, std::pair<int, int>> stats;  // (r,s) -> (cols, nnz)
      for (const auto& key : cx.all_keys()) {
        auto [gid, s, k] = key;
        int r = cx.graph_of(gid).edge_count();
        const auto& d = cx.differential_of(key, 1 << 20);
        stats[{r, s}].first++;
        stats[{r, s}].second += (int)d.size();
      }
      std::ostringstream os;
      if (format == "json") {
        Json arr = Json::array();
        for (const auto& [rs, cn2] : stats)
          arr.push_back(Json{{"edges", rs.first},
                             {"internal_degree", rs.second},
                             {"dim", cn2.first},
                             {"differential_nonzeros", cn2.second}});
        sink.write(arr.dump(2));
      } else {
        os << "edges,internal_degree,dim,differential_nonzeros\n";
        for (const auto& [rs, cn2] : stats)
          os << rs.first << "," << rs.second << "," << cn2.first << "," << cn2.second << "\n";
        sink.write(os.str());
      }
      return 0;
    }

    if (*cmd_h) {
      feynman::Options opt;
      opt.no_loops = true;
      opt.jobs = jobs;
      feynman::Complex cx(feynman::Operad::Com, hg, 0, opt);
      auto slice = feynman::gc2_slice(cx, hg, 3 * hg - 3);
      if (!h_export.empty()) {
        for (size_t i = 0; i < slice.slice.bounds.size(); ++i) {
          int e = slice.min_edges + (int)i + 1;
          std::ofstream f(h_export + "/boundary_E" + std::to_string(e) + ".txt");
          if (!f) throw std::runtime_error("cannot write to " + h_export);
          f << slice.slice.bounds[i].to_coord_text();
        }
      }
      std::ostringstream os;
      Json arr = Json::array();
      for (int e = hg; e <= 3 * hg - 3; ++e) {
        int deg = slice.degree_of_edge_count(e);
        if (hdeg != INT_MIN && deg != hdeg) continue;
        int rank = slice.slice.homology_rank(e);
        if (format == "json")
          arr.push_back(Json{{"genus", hg}, {"degree", deg}, {"rank", rank}});
        else
          os << hg << "," << deg << "," << rank << "\n";
      }
      if (format == "json") {
        sink.write(arr.dump(2));
      } else {
        sink.write("genus,degree,rank\n" + os.str());
      }
      return 0;
    }

    if (*cmd_rep) {
      std::ostringstream os;
      Json arr = Json::array();
      auto row = [&](const std::string& partition, const std::string& subgroup,
                     const std::string& irrep, long long mult) {
        if (format == "json")
          arr.push_back(Json{{"partition", partition},
                             {"subgroup", subgroup},
                             {"irrep", irrep},
                             {"multiplicity", mult}});
        else
          os << partition << "," << subgroup << "," << irrep << "," << mult << "\n";
      };
      auto pstr = [](const symrep::Partition& p) {
        std::string s;
        for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
        return s;
      };
      if (*rep_restrict) {
        auto p = parse_partition(rp);
        for (const auto& [pair, mult] : symrep::lr_restrict(p, ra, rb))
          row(pstr(p), "S_" + std::to_string(ra) + "xS_" + std::to_string(rb),
              pstr(pair.first) + " ⊠ " + pstr(pair.second), mult);
      } else if (*rep_wreath) {
        auto hook = parse_partition(wh);
        row(pstr(hook), "S2wrS_" + std::to_string(wq), "L_" + std::to_string(wq),
            symrep::wreath_hook_multiplicity(hook, wq));
      } else if (*rep_cyc) {
        auto p = parse_partition(cp);
        int n2 = symrep::weight(p);
        for (int i = 0; i < n2; ++i) {
          if (ci >= 0 && i != ci) continue;
          row(pstr(p), "Z_" + std::to_string(n2), "W_" + std::to_string(i),
              symrep::cyclic_multiplicity(p, i));
        }
      } else if (*rep_rel) {
        int dim = symrep::relation_span_dimension(rt, rj);
        row("t=" + std::to_string(rt) + ";j=" + std::to_string(rj),
            "S_" + std::to_string(rt + 2 * rj), "orbit-span-dim", dim);
      }
      if (format == "json")
        sink.write(arr.dump(2));
      else
        sink.write("partition,subgroup,irrep,multiplicity\n" + os.str());
      return 0;
    }

    if (*cmd_v) {
      std::vector<verify::Certificate> certs;
      if (*v_wheel) certs.push_back(verify::verify_wheel_cycle(vj, jobs));
      if (*v_theta) certs.push_back(verify::verify_theta_coefficient(vj, jobs));
      if (*v_prop) certs.push_back(verify::verify_propzero(vj, jobs, !v_nofilter));
      if (*v_deg0) certs.push_back(verify::verify_deg0(vj, jobs));
      if (*v_nt) certs.push_back(verify::verify_nontriviality(vj, !v_brute, jobs));
      if (*v_d2)
        certs.push_back(verify::verify_dsquared(
            vop == "com" ? feynman::Operad::Com : feynman::Operad::HLie, vg, vn, jobs));
      if (*v_all) {
        for (int j : {1, 2}) {
          certs.push_back(verify::verify_wheel_cycle(j, jobs));
          certs.push_back(verify::verify_theta_coefficient(j, jobs));
          certs.push_back(verify::verify_propzero(j, jobs, true));
          certs.push_back(verify::verify_deg0(j, jobs));
          certs.push_back(verify::verify_nontriviality(j, true, jobs));
        }
        certs.push_back(verify::verify_nontriviality(1, false, jobs));
        certs.push_back(verify::verify_nontriviality(2, false, jobs));
        for (int n2 : {3, 4, 5, 6})
          certs.push_back(verify::verify_dsquared(feynman::Operad::HLie, 1, n2, jobs));
        certs.push_back(verify::verify_dsquared(feynman::Operad::HLie, 3, 0, jobs));
        for (int g2 : {3, 4, 5})
          certs.push_back(verify::verify_dsquared(feynman::Operad::Com, g2, 0, jobs));
        if (opt_in_slow) {
          certs.push_back(verify::verify_wheel_cycle(3, jobs));
          certs.push_back(verify::verify_theta_coefficient(3, jobs));
        }
      }
      return emit_certificates(certs, format, sink);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
