// pact: command-line front end for partial actions on finite spaces.
//
// Exit codes: 0 all requested checks hold, 1 some claim fails,
// 2 invalid input or unmet precondition.
#include "pact/pact.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using namespace pact;

struct Options {
  bool json = false;
  std::optional<std::size_t> bound;
};

Bounds make_bounds(const Options& o) {
  Bounds b;
  if (o.bound) b.map_nodes = *o.bound;
  return b;
}

/// A path, or @name for a bundled fixture.
Instance load(const std::string& source) {
  if (!source.empty() && source.front() == '@') return fixtures::load(source.substr(1));
  return load_instance(source);
}

void emit(const ojson& doc, const std::string& out = {}) {
  if (out.empty()) {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error(ErrorKind::invalid_input, "io", "cannot write " + out, {out});
  f << doc.dump(2) << "\n";
}

int report_error(const Error& e, const Options& o) {
  if (o.json) {
    ojson j = {{"error", {{"rule", e.rule()}, {"message", e.what()}, {"witness", e.witness()}}}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cerr << "error [" << e.rule() << "]: " << e.what() << "\n";
  }
  return 2;
}

int cmd_validate(const std::string& file, const Options& o) {
  auto inst = load(file);
  if (o.json) {
    emit({{"id", inst.id}, {"valid", true}, {"group_order", inst.group().size()},
          {"points", inst.space().size()}, {"global", inst.action.is_global()}});
  } else {
    std::cout << inst.id << ": valid (" << inst.group().size() << " group elements, "
              << inst.space().size() << " points" << (inst.action.is_global() ? ", global" : "")
              << ")\n";
  }
  return 0;
}

int cmd_twist(const std::string& file, const std::string& subgroup, const std::string& out,
              const Options& o) {
  auto inst = load(file);
  const Bounds b = make_bounds(o);
  if (!subgroup.empty()) {
    auto emb = subgroup_as_group(inst.subgroup(subgroup));
    emit(envelope_document(twisted_product(restrict_group(inst.action, emb), emb, b)), out);
  } else if (inst.k_embedding) {
    emit(envelope_document(twisted_product(inst.action, *inst.k_embedding, b)), out);
  } else {
    throw Error(ErrorKind::precondition, "subgroup",
                "twist needs --subgroup or an instance with big_group and k_embedding");
  }
  return 0;
}

int cmd_fixed(const std::string& file, const std::string& name, bool envelope, const Options& o) {
  auto inst = load(file);
  const Subgroup& h = inst.subgroup(name);
  ojson doc = {{"subgroup", h.labels()},
               {"fixed", inst.space().labels_of(fixed_points(inst.action, h))}};
  if (envelope) {
    auto fd = fixed_decomposition(inst.action, h, make_bounds(o));
    const FinSpace& t = fd.envelope.total;
    doc["envelope_fixed"] = t.labels_of(fd.fixed);
    doc["translates"] = t.labels_of(fd.translates);
    doc["decomposition_holds"] = fd.decomposition_holds();
    doc["images_hold"] = fd.images_hold();
    doc["intersections_hold"] = fd.intersections_hold();
  }
  emit(doc);
  return 0;
}

int cmd_homotopy(const std::string& file, bool g_contr, bool local, bool core_only,
                 const Options& o) {
  auto inst = load(file);
  const Bounds b = make_bounds(o);
  const bool all = !g_contr && !local && !core_only;
  ojson doc = {{"id", inst.id}};
  if (all || core_only) {
    const FinSpace c = core(inst.space());
    doc["core"] = to_json(c);
    doc["contractible"] = c.size() == 1;
  }
  if (all || g_contr) {
    auto r = is_G_contractible(inst.action, b);
    doc["g_contractible"] = r.contractible;
    if (r.contractible) {
      doc["fixed_point"] = inst.space().label(*r.fixed_point);
      ojson fence = ojson::array();
      for (const auto& f : r.fence) fence.push_back(map_table(f));
      doc["fence"] = fence;
    }
  }
  if (all || local) {
    auto r = is_locally_G_contractible(inst.action, b);
    doc["locally_g_contractible"] = r.holds;
    if (!r.holds) {
      doc["failing_point"] = inst.space().label(*r.point);
      doc["failing_neighborhood"] = inst.space().labels_of(*r.neighborhood);
    }
  }
  emit(doc);
  return 0;
}

int cmd_check(const std::string& claim, const std::string& file, const Options& o) {
  auto inst = load(file);
  const Bounds b = make_bounds(o);
  std::vector<ClaimReport> reports;
  if (claim == "all") {
    reports = run_all(inst, b);
  } else {
    if (!is_registered(claim)) fail_input("unknown-claim", "no claim named '" + claim + "'", {claim});
    reports.push_back(run_claim(claim, inst, b));
  }
  if (o.json) {
    ojson arr = ojson::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const auto& r : reports) std::cout << report_text(r) << "\n";
  }
  const int code = exit_code(reports);
  if (claim != "all" && code == 0 && reports.front().status != ClaimStatus::holds) return 2;
  return code;
}

int cmd_fixtures(bool list, const std::string& name, const std::string& dir, const Options& o) {
  if (!name.empty()) {
    std::vector<std::string> names = name == "all" ? fixtures::names() : std::vector<std::string>{name};
    std::filesystem::create_directories(dir);
    for (const auto& n : names) {
      const auto path = (std::filesystem::path(dir) / (n + ".json")).string();
      emit(fixtures::document(n), path);
      if (!o.json) std::cout << path << "\n";
    }
    return 0;
  }
  (void)list;
  if (o.json) {
    emit(fixtures::names());
  } else {
    for (const auto& n : fixtures::names()) std::cout << n << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial group actions on finite spaces: globalization, twisted products, claim checks"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Options opts;
  app.add_flag("--json", opts.json, "machine-readable output");
  app.add_option("--bound", opts.bound, "search node limit for map enumeration");

  std::string file, claim, out, subgroup, emit_name, dir = ".";
  bool envelope = false, g_contr = false, local = false, core_only = false, list = false;
  std::function<int()> action;

  auto* validate = app.add_subcommand("validate", "validate an instance");
  validate->add_option("file", file, "instance file or @fixture")->required();
  validate->callback([&] { action = [&] { return cmd_validate(file, opts); }; });

  auto* glob = app.add_subcommand("globalize", "globalization document");
  glob->add_option("file", file)->required();
  glob->add_option("-o,--output", out, "write the document here");
  glob->callback([&] {
    action = [&] {
      emit(envelope_document(globalize(load(file).action, make_bounds(opts))), out);
      return 0;
    };
  });

  auto* twist = app.add_subcommand("twist", "twisted product over a subgroup");
  twist->add_option("file", file)->required();
  twist->add_option("--subgroup", subgroup, "named subgroup of the acting group");
  twist->add_option("-o,--output", out, "write the document here");
  twist->callback([&] { action = [&] { return cmd_twist(file, subgroup, out, opts); }; });

  auto* orbit = app.add_subcommand("orbit", "orbit space document");
  orbit->add_option("file", file)->required();
  orbit->callback([&] {
    action = [&] {
      emit(orbit_document(orbit_space(load(file).action)));
      return 0;
    };
  });

  auto* fixed = app.add_subcommand("fixed", "fixed points of a named subgroup");
  fixed->add_option("file", file)->required();
  fixed->add_option("--subgroup", subgroup)->required();
  fixed->add_flag("--envelope", envelope, "also report the fixed sets of the globalization");
  fixed->callback([&] { action = [&] { return cmd_fixed(file, subgroup, envelope, opts); }; });

  auto* homotopy = app.add_subcommand("homotopy", "homotopy analyses");
  homotopy->add_option("file", file)->required();
  homotopy->add_flag("--g-contractible", g_contr);
  homotopy->add_flag("--locally-g-contractible", local);
  homotopy->add_flag("--core", core_only);
  homotopy->callback([&] {
    action = [&] { return cmd_homotopy(file, g_contr, local, core_only, opts); };
  });

  auto* check = app.add_subcommand("check", "check a claim (or all) on an instance");
  check->add_option("claim", claim, "claim id or 'all'")->required();
  check->add_option("file", file)->required();
  check->callback([&] { action = [&] { return cmd_check(claim, file, opts); }; });

  auto* fx = app.add_subcommand("fixtures", "list or write bundled fixtures");
  fx->add_flag("--list", list);
  fx->add_option("--emit", emit_name, "fixture name, or 'all'");
  fx->add_option("--dir", dir, "output directory for --emit");
  fx->callback([&] { action = [&] { return cmd_fixtures(list, emit_name, dir, opts); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    return action();
  } catch (const Error& e) {
    return report_error(e, opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
