#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rectlat/io.hpp"
#include "rectlat/pipeline.hpp"

namespace rectlat {

namespace {

PlanarDiagram need_diagram(const ParsedLattice& p, const std::string& path) {
  if (!p.diagram)
    fail(ErrorCode::BadDiagram,
         "'" + path + "' carries no diagram (uporder/downorder lines are required when an "
                      "element has several covers)");
  return *p.diagram;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) fail(ErrorCode::SyntaxError, "cannot write '" + out_path + "'");
  out << text;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

int cmd_check(const std::string& path) {
  ParsedLattice p = parse_lattice_file(path);
  const Lattice& l = p.lattice;
  std::cout << "elements: " << l.size() << "\n";
  std::cout << "covers: " << l.cover_pairs().size() << "\n";
  std::cout << "semimodular: " << yesno(is_semimodular(l)) << "\n";
  std::cout << "distributive: " << yesno(is_distributive(l)) << "\n";
  std::cout << "diagram: " << yesno(p.diagram.has_value()) << "\n";
  if (p.diagram) {
    std::cout << "slim: " << yesno(is_slim(*p.diagram)) << "\n";
    auto cs = rectangular_corners(*p.diagram);
    if (cs)
      std::cout << "rectangular: yes (corners " << cs->first << " " << cs->second << ")\n";
    else
      std::cout << "rectangular: no\n";
    std::cout << "patch: " << yesno(is_patch(*p.diagram)) << "\n";
  } else {
    std::cout << "slim: unknown (no diagram)\n";
    std::cout << "rectangular: unknown (no diagram)\n";
    std::cout << "patch: unknown (no diagram)\n";
  }
  return 0;
}

int cmd_con(const std::string& path, Elem a, Elem b) {
  ParsedLattice p = parse_lattice_file(path);
  if (a < 0 || a >= p.lattice.size() || b < 0 || b >= p.lattice.size())
    fail(ErrorCode::SyntaxError, "element id out of range");
  Congruence c = principal_congruence(p.lattice, a, b);
  std::cout << "con(" << a << "," << b << ") = " << to_string(c) << "\n";
  return 0;
}

int cmd_conlat(const std::string& path) {
  ParsedLattice p = parse_lattice_file(path);
  ConLattice cl = ConLattice::of(p.lattice);
  std::vector<char> principal(cl.size(), 0);
  for (Elem a = 0; a < p.lattice.size(); ++a)
    for (Elem b = 0; b < p.lattice.size(); ++b)
      if (p.lattice.leq(a, b)) principal[cl.principal_index(a, b)] = 1;
  std::cout << "congruences: " << cl.size() << "\n";
  for (int i = 0; i < cl.size(); ++i) {
    const Congruence& c = cl.members()[i];
    std::cout << "[" << i << "] blocks=" << c.num_blocks()
              << " ji=" << yesno(cl.join_irreducible(i)) << " principal=" << yesno(principal[i])
              << " " << to_string(c) << "\n";
  }
  return 0;
}

int cmd_fork(const std::string& path, Elem o, Elem l, Elem r, Elem t, const std::string& out) {
  PlanarDiagram d = need_diagram(parse_lattice_file(path), path);
  ForkResult f = insert_fork(d, square_at(d, o, l, r, t));
  write_output(emit_lat(f.diagram), out);
  return 0;
}

int cmd_eye(const std::string& path, Elem o, Elem l, Elem r, Elem t, const std::string& out) {
  PlanarDiagram d = need_diagram(parse_lattice_file(path), path);
  EyeInsertion e = insert_eye(d, square_at(d, o, l, r, t));
  write_output(emit_lat(e.diagram), out);
  return 0;
}

int cmd_glue(const std::string& path_a, const std::string& path_b, const std::string& side,
             const std::string& out) {
  PlanarDiagram a = need_diagram(parse_lattice_file(path_a), path_a);
  PlanarDiagram b = need_diagram(parse_lattice_file(path_b), path_b);
  GlueSide s = side == "ll" ? GlueSide::LowerLeft : GlueSide::LowerRight;
  write_output(emit_lat(glue(a, b, s).glued), out);
  return 0;
}

int cmd_step2(const std::string& path, const std::string& out) {
  PlanarDiagram d = need_diagram(parse_lattice_file(path), path);
  Step2Result s = step2(d);
  std::ostringstream text;
  text << emit_lat(s.k2);
  for (const auto& [congruence, step] : s.witnesses)
    text << "# witness step " << step << " for " << to_string(congruence) << "\n";
  write_output(text.str(), out);
  return 0;
}

int cmd_extend(const std::string& path, const std::string& out_dir, bool process_all) {
  PlanarDiagram d = need_diagram(parse_lattice_file(path), path);
  ExtendOptions options;
  options.skip_already_principal = !process_all;
  PipelineTrace trace = extend_all(d, options);

  std::filesystem::create_directories(out_dir);
  auto stage_path = [&](size_t i) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "stage_%03zu_", i);
    return out_dir + "/" + buf + trace.stages[i].name + ".lat";
  };
  for (size_t i = 0; i < trace.stages.size(); ++i)
    write_output(emit_lat(trace.stages[i].diagram), stage_path(i));
  {
    std::ostringstream w;
    for (const auto& [congruence, interval] : trace.witness_intervals)
      w << to_string(congruence) << " -> [" << interval.lo << ", " << interval.hi << "]\n";
    write_output(w.str(), out_dir + "/witnesses.txt");
  }
  write_output(emit_dot(trace.final_diagram()), out_dir + "/final.dot");

  ExtensionChecks checks = verify_extension(trace);
  std::cout << "stages: " << trace.stages.size() << "\n";
  std::cout << "final elements: " << trace.final_diagram().size() << "\n";
  std::cout << "Con: " << trace.witness_intervals.size()
            << " congruences, all principal: " << yesno(checks.all_principal) << "\n";
  std::cout << "rectangular: " << yesno(checks.rectangular) << "\n";
  std::cout << "cover-preserving: " << yesno(checks.cover_preserving) << "\n";
  std::cout << "congruence-preserving: " << yesno(checks.congruence_preserving) << "\n";
  return checks.all() ? 0 : 1;
}

int cmd_represent(const std::string& path, int budget, int ji_budget, const std::string& out) {
  ParsedLattice p = parse_lattice_file(path);
  RepresentOptions options;
  options.insertion_budget = budget;
  options.ji_budget = ji_budget;
  RepresentResult r = represent(p.lattice, options);
  std::ostringstream text;
  text << emit_lat(r.trace.final_diagram());
  text << "# congruence lattice isomorphism:\n";
  for (int i = 0; i < r.final_congruences.size(); ++i)
    text << "# " << to_string(r.final_congruences.members()[i]) << " -> element "
         << r.con_to_spec[i] << "\n";
  write_output(text.str(), out);
  return 0;
}

int cmd_dot(const std::string& path, const std::vector<Elem>& congruence_pair,
            const std::string& out) {
  PlanarDiagram d = need_diagram(parse_lattice_file(path), path);
  std::optional<Congruence> highlight;
  if (!congruence_pair.empty()) {
    if (congruence_pair[0] < 0 || congruence_pair[0] >= d.size() || congruence_pair[1] < 0 ||
        congruence_pair[1] >= d.size())
      fail(ErrorCode::SyntaxError, "element id out of range");
    highlight = principal_congruence(d.lattice(), congruence_pair[0], congruence_pair[1]);
  }
  write_output(emit_dot(d, highlight), out);
  return 0;
}

int cmd_verify(const std::string& path) {
  PlanarDiagram d = need_diagram(parse_lattice_file(path), path);
  if (!is_rectangular(d)) fail(ErrorCode::NotRectangular, "'" + path + "' is not rectangular");
  bool ok = true;
  auto report = [&](const char* what, bool pass) {
    std::cout << what << ": " << (pass ? "pass" : "FAIL") << "\n";
    ok = ok && pass;
  };
  RectangularCheckReport r = rectangular_check(d);
  report("corner ideals are chains", r.corner_ideals_are_chains);
  report("corner filters are chains", r.corner_filters_are_chains);
  report("corner intervals are chains", r.corner_intervals_are_chains);
  report("split/reglue isomorphic", r.split_reglue_isomorphic);
  report("steps perspective to boundary", r.steps_perspective_to_boundary);
  report("boundary congruences agree", r.boundary_congruences_agree);
  for (const std::string& f : r.failures) std::cout << "  - " << f << "\n";

  ConLattice cl = ConLattice::of(d.lattice());
  bool round_trip = true, collapse_agree = true;
  for (const Congruence& theta : cl.members()) {
    auto [pl, pr] = boundary_pair(d, theta);
    Congruence back = reconstruct_from_pair(d, pl, pr);
    round_trip = round_trip && back == theta;
    for (auto [a, b] : d.lattice().cover_pairs())
      if (theta.collapses(a, b) != back.collapses(a, b)) collapse_agree = false;
  }
  std::cout << "reconstruction round trip: " << (round_trip ? "pass" : "FAIL") << " ("
            << cl.size() << " congruences)\n";
  std::cout << "prime interval collapse agreement: " << (collapse_agree ? "pass" : "FAIL")
            << "\n";
  ok = ok && round_trip && collapse_agree;
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"finite planar semimodular lattices: congruences, forks, gluings, extensions"};
  app.require_subcommand(1);
  int result = 0;

  std::string file, file_b, out, side = "ll", out_dir = "extend_out";
  std::vector<Elem> square(4), con_pair;
  Elem elem_a = 0, elem_b = 0;
  int budget = 8, ji_budget = 5;
  bool process_all = false;

  auto* check = app.add_subcommand("check", "report basic properties of a lattice file");
  check->add_option("file", file)->required();
  check->callback([&] { result = cmd_check(file); });

  auto* con = app.add_subcommand("con", "principal congruence generated by a pair");
  con->add_option("file", file)->required();
  con->add_option("a", elem_a)->required();
  con->add_option("b", elem_b)->required();
  con->callback([&] { result = cmd_con(file, elem_a, elem_b); });

  auto* conlat = app.add_subcommand("conlat", "list every congruence with flags");
  conlat->add_option("file", file)->required();
  conlat->callback([&] { result = cmd_conlat(file); });

  auto* fork = app.add_subcommand("fork", "insert a fork at a covering square");
  fork->add_option("file", file)->required();
  fork->add_option("o", square[0])->required();
  fork->add_option("l", square[1])->required();
  fork->add_option("r", square[2])->required();
  fork->add_option("t", square[3])->required();
  fork->add_option("--output", out, "write the result here instead of stdout");
  fork->callback([&] { result = cmd_fork(file, square[0], square[1], square[2], square[3], out); });

  auto* eye = app.add_subcommand("eye", "insert an eye into a covering square");
  eye->add_option("file", file)->required();
  eye->add_option("o", square[0])->required();
  eye->add_option("l", square[1])->required();
  eye->add_option("r", square[2])->required();
  eye->add_option("t", square[3])->required();
  eye->add_option("--output", out);
  eye->callback([&] { result = cmd_eye(file, square[0], square[1], square[2], square[3], out); });

  auto* glue_cmd = app.add_subcommand("glue", "rectangular gluing of two lattice files");
  glue_cmd->add_option("a", file)->required();
  glue_cmd->add_option("b", file_b)->required();
  glue_cmd->add_option("--side", side, "ll: b below-left of a; lr: b below-right")
      ->check(CLI::IsMember({"ll", "lr"}));
  glue_cmd->add_option("--output", out);
  glue_cmd->callback([&] { result = cmd_glue(file, file_b, side, out); });

  auto* step2_cmd = app.add_subcommand("step2", "attach the mirrored eyed grid below");
  step2_cmd->add_option("file", file)->required();
  step2_cmd->add_option("--output", out);
  step2_cmd->callback([&] { result = cmd_step2(file, out); });

  auto* extend = app.add_subcommand("extend", "run the whole extension pipeline");
  extend->add_option("file", file)->required();
  extend->add_option("--out-dir", out_dir, "directory for stage files (default extend_out)");
  extend->add_flag("--all", process_all, "process congruences that are already principal too");
  extend->callback([&] { result = cmd_extend(file, out_dir, process_all); });

  auto* repr = app.add_subcommand("represent",
                                  "find a rectangular lattice with the given congruence lattice");
  repr->add_option("file", file)->required();
  repr->add_option("--budget", budget, "max fork+eye insertions (default 8)");
  repr->add_option("--ji-budget", ji_budget, "max join-irreducible elements (default 5)");
  repr->add_option("--output", out);
  repr->callback([&] { result = cmd_represent(file, budget, ji_budget, out); });

  auto* dot = app.add_subcommand("dot", "emit the Hasse diagram as DOT");
  dot->add_option("file", file)->required();
  dot->add_option("--congruence", con_pair, "highlight con(a, b)")->expected(2);
  dot->add_option("--output", out);
  dot->callback([&] { result = cmd_dot(file, con_pair, out); });

  auto* verify = app.add_subcommand("verify", "run the rectangular structure checks");
  verify->add_option("file", file)->required();
  verify->callback([&] { result = cmd_verify(file); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const LatticeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return result;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args);
}

}  // namespace rectlat
