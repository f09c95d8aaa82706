#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <json.hpp>
#include <sstream>

#include "kneser/construct.hpp"
#include "kneser/decomposition.hpp"
#include "kneser/error.hpp"
#include "kneser/homology.hpp"
#include "kneser/metric.hpp"
#include "kneser/patch_corpus.hpp"
#include "kneser/pl_area.hpp"
#include "kneser/skeleton_push.hpp"

namespace kneser::cli {

namespace {

using json = nlohmann::ordered_json;

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::BudgetExceeded:
    case ErrorCode::SampleBudgetExhausted:
    case ErrorCode::Overflow:
      return kBudget;
    case ErrorCode::Parse:
    case ErrorCode::NonInvolutiveGluing:
    case ErrorCode::SelfGluedFace:
    case ErrorCode::NonOrientable:
    case ErrorCode::NotClosed:
    case ErrorCode::Disconnected:
    case ErrorCode::ZeroArea:
    case ErrorCode::InvalidArgument:
    case ErrorCode::CenterOnSurface:
    case ErrorCode::NotASphere:
    case ErrorCode::InconsistentLabels:
      return kInput;
    default:
      return kViolation;
  }
}

// Exit 1 still owes a JSON document on stdout.
CommandResult run(const char* command, const std::function<CommandResult()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    CommandResult r;
    r.exit = exit_for(e.code());
    r.err = std::string(e.what()) + "\n";
    if (r.exit == kViolation) {
      json j;
      j["command"] = command;
      j["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
      r.out = j.dump() + "\n";
    }
    return r;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
}

Triangulation load_closed(const std::string& path) {
  return validate(parse_tri(read_file(path)), Requirements::closed_orientable());
}

json group_json(const AbelianGroup& g) { return {{"rank", g.rank}, {"torsion", g.torsion}, {"str", g.str()}}; }

json groups_json(const std::vector<AbelianGroup>& gs) {
  json a = json::array();
  for (const auto& g : gs) a.push_back(group_json(g));
  return a;
}

CommandResult finish(const json& j, int exit) {
  CommandResult r;
  r.exit = exit;
  r.out = j.dump() + "\n";
  return r;
}

}  // namespace

Sweep parse_sweep(const std::string& text) {
  Sweep s;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &s.from, &s.to, &s.steps, &tail) != 3 || s.steps < 1 ||
      !(s.from > 0) || !(s.to > 0))
    throw Error(ErrorCode::InvalidArgument, "sweep must be a:b:steps with a, b > 0 and steps >= 1");
  return s;
}

CommandResult decompose(const std::string& path, const DecomposeFlags& flags) {
  return run("decompose", [&] {
    const auto tri = load_closed(path);
    DecompositionOptions options;
    if (flags.budget) options.enumeration.max_rays = *flags.budget;
    options.oracle_check = flags.oracle_check;
    const auto report = kneser::decompose(tri, options);

    json j;
    j["command"] = "decompose";
    j["input"] = {{"ntet", report.input_tetrahedra}, {"h1", group_json(report.input_h1)}, {"seed", flags.seed}};
    j["length_model"] = kLengthModel;
    j["spheres"] = json::array();
    bool diam_ok = true;
    for (const auto& s : report.spheres) {
      j["spheres"].push_back({{"piece", s.piece},
                              {"coords", s.coords.values},
                              {"wt", s.area.weight},
                              {"lg", s.area.length},
                              {"support", s.support_size},
                              {"diam", s.diameter},
                              {"diam_le_wt2", s.diameter_ok}});
      diam_ok = diam_ok && s.diameter_ok;
    }
    j["pieces"] = json::array();
    for (const auto& p : report.pieces)
      j["pieces"].push_back({{"ntet", p.tri.size()},
                             {"certificate", to_string(p.certificate.kind)},
                             {"inspected", p.certificate.inspected},
                             {"h1", group_json(p.h1)}});
    if (flags.oracle_check) {
      j["oracle"] = json::array();
      for (const auto& o : report.oracle)
        j["oracle"].push_back({{"crush_h1", groups_json(o.crush_h1)}, {"cut_h1", groups_json(o.cut_h1)}, {"agree", o.agree}});
    }
    j["constants"] = {{"C3", report.c3}, {"C1", report.c1}};
    j["ledger"] = {{"input_h1", group_json(report.input_h1)},
                   {"pieces_h1", groups_json(report.pieces_h1)},
                   {"balanced", report.balanced}};
    j["counters"] = {{"crushes", report.crushes}, {"enumerations", report.enumerations}};
    const bool ok = report.balanced && report.all_certified() && report.oracle_agrees() && diam_ok;
    return finish(j, ok ? kOk : kViolation);
  });
}

CommandResult enumerate(const std::string& path, const EnumerateFlags& flags) {
  return run("enumerate", [&] {
    const auto tri = load_closed(path);
    EnumerationOptions options;
    if (flags.budget) options.max_rays = *flags.budget;
    const auto solutions = enumerate_vertex_solutions(tri, options);

    json j;
    j["command"] = "enumerate";
    j["ntet"] = tri.size();
    j["length_model"] = kLengthModel;
    j["count"] = solutions.size();
    j["surfaces"] = json::array();
    std::string dump;
    std::size_t failures = 0;
    for (const auto& s : solutions) {
      const auto surf = reconstruct(tri, s);
      const auto line = format_surface_line(tri, s);
      dump += line + "\n";
      json e = {{"line", line},
                {"wt", weight(tri, s)},
                {"chi", surf.euler},
                {"chi_formula", euler_from_coordinates(tri, s)},
                {"vertex_linking", !s.has_quad()},
                {"orientable", surf.orientable()},
                {"components", surf.components.size()},
                {"cells", {surf.vertices, surf.edges, surf.faces}}};
      if (flags.pl_area) e["lg"] = pl_area(tri, s).length;
      if (flags.verify_diam) {
        const auto d = verify_diameter_bound(tri, s);
        e["diam"] = d.diameter;
        e["diam_le_wt2"] = d.pass;
        failures += !d.pass;
      }
      j["surfaces"].push_back(std::move(e));
    }
    if (flags.verify_diam) j["diameter_failures"] = failures;
    if (!flags.dump.empty()) write_file(flags.dump, dump);
    return finish(j, failures == 0 ? kOk : kViolation);
  });
}

CommandResult montecarlo(const std::string& path, const MonteCarloFlags& flags) {
  return run("montecarlo", [&] {
    const auto patch = parse_patch(read_file(path));
    auto config = ProjectionConfig::standard();
    config.nu = flags.nu;
    config.samples = flags.samples;
    config.seed = flags.seed;
    if (!(flags.nu > 0)) throw Error(ErrorCode::InvalidArgument, "nu must be positive");
    const auto samples = sample_dilatations(config, patch);
    const auto c = constants(config);

    const auto estimate_json = [](const ProjectionEstimate& e) {
      return json{{"nu", e.nu},         {"estimate", e.estimate}, {"stderr", e.stderr_},
                  {"bound", e.bound},   {"pass", e.pass},         {"bad", e.bad}};
    };
    json j;
    j["command"] = "montecarlo";
    j["samples"] = flags.samples;
    j["seed"] = flags.seed;
    j["constants"] = {{"r", c.r}, {"ball_volume", c.ball_volume}, {"K", c.k}, {"nu0", c.nu0}};
    j["patch"] = {{"triangles", patch.triangles.size()}, {"area", patch.area()}};
    const auto main = estimate_from_samples(config, samples, flags.nu);
    bool ok = main.pass && samples.jacobian_violations == 0;
    j["estimate"] = estimate_json(main);
    j["jacobian"] = {{"checks", samples.jacobian_checks}, {"violations", samples.jacobian_violations}};
    if (flags.sweep) {
      std::string csv = "nu,estimate,stderr,bound,pass\n";
      j["sweep"] = json::array();
      const auto& s = *flags.sweep;
      for (int i = 0; i < s.steps; ++i) {
        const double nu = s.steps == 1 ? s.from : s.from + (s.to - s.from) * i / (s.steps - 1);
        const auto e = estimate_from_samples(config, samples, nu);
        ok = ok && e.pass;
        j["sweep"].push_back(estimate_json(e));
        char row[160];
        std::snprintf(row, sizeof row, "%.17g,%.17g,%.17g,%.17g,%d\n", e.nu, e.estimate, e.stderr_, e.bound,
                      e.pass ? 1 : 0);
        csv += row;
      }
      if (!flags.csv.empty()) write_file(flags.csv, csv);
    }
    const auto good = find_good_center(config, patch);
    j["good_center"] = {{"u", {good.u.x, good.u.y, good.u.z}},
                        {"attempts", good.attempts},
                        {"dilatation", good.dilatation},
                        {"lambda", good.lambda}};
    return finish(j, ok ? kOk : kViolation);
  });
}

CommandResult validate(const std::string& path) {
  return run("validate", [&] {
    const auto text = read_file(path);
    json j;
    j["command"] = "validate";
    if (text.find("patch") < text.find("tri")) {
      const auto patch = parse_patch(text);
      j["kind"] = "patch";
      j["triangles"] = patch.triangles.size();
      j["area"] = patch.area();
      j["canonical"] = format_patch(patch) == text;
    } else {
      const auto table = parse_tri(text);
      const auto tri = kneser::validate(table);
      j["kind"] = "tri";
      j["ntet"] = tri.size();
      j["closed"] = tri.is_closed();
      j["orientable"] = tri.is_orientable();
      j["components"] = tri.num_components();
      j["vertices"] = tri.skeleton().num_vertices;
      j["h1"] = group_json(homology(tri, 1));
      j["canonical"] = format_tri(table) == text;
    }
    return finish(j, kOk);
  });
}

namespace {

const std::map<std::string, std::function<Triangulation()>>& manifolds() {
  static const std::map<std::string, std::function<Triangulation()>> m = {
      {"bd4simplex", boundary_4simplex},
      {"rp3", projective_space},
      {"l31", lens_space_3_1},
      {"l52", lens_space_5_2},
  };
  return m;
}

Triangulation named_manifold(const std::string& name) {
  const auto it = manifolds().find(name);
  if (it == manifolds().end()) throw Error(ErrorCode::InvalidArgument, "unknown manifold '" + name + "'");
  return it->second();
}

std::string generated_text(const std::string& kind) {
  if (manifolds().count(kind)) return format_tri(named_manifold(kind));
  if (kind.rfind("chain:", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(kind.substr(6));
    } catch (...) {
      throw Error(ErrorCode::InvalidArgument, "bad chain length in '" + kind + "'");
    }
    if (n < 1 || n > 1000) throw Error(ErrorCode::InvalidArgument, "chain length must be in 1..1000");
    return format_tri(stacked_chain(n));
  }
  if (kind.rfind("sum:", 0) == 0) {
    std::vector<std::string> parts;
    std::stringstream in(kind.substr(4));
    for (std::string p; std::getline(in, p, '+');) parts.push_back(p);
    if (parts.size() < 2) throw Error(ErrorCode::InvalidArgument, "sum needs at least two summands");
    Triangulation acc = named_manifold(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) acc = connected_sum(acc, named_manifold(parts[i]));
    return format_tri(acc);
  }
  if (kind.rfind("patch:", 0) == 0) {
    for (const auto& [name, patch] : corpus_patches())
      if (kind.substr(6) == name) return format_patch(patch);
    throw Error(ErrorCode::InvalidArgument, "unknown patch '" + kind.substr(6) + "'");
  }
  throw Error(ErrorCode::InvalidArgument, "unknown kind '" + kind + "'");
}

}  // namespace

std::vector<std::string> generate_kinds() {
  std::vector<std::string> out;
  for (const auto& [name, f] : manifolds()) out.push_back(name);
  out.push_back("chain:<n>");
  out.push_back("sum:<a>+<b>[+...]");
  for (const auto& [name, p] : corpus_patches()) out.push_back("patch:" + name);
  return out;
}

CommandResult generate(const std::string& kind, const std::string& output) {
  return run("generate", [&] {
    const auto text = generated_text(kind);
    json j;
    j["command"] = "generate";
    j["kind"] = kind;
    j["bytes"] = text.size();
    if (output.empty()) {
      j["content"] = text;
    } else {
      write_file(output, text);
      j["path"] = output;
    }
    return finish(j, kOk);
  });
}

}  // namespace kneser::cli
