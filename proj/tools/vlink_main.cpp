#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "vlink/fixtures.hpp"
#include "vlink/json_io.hpp"
#include "vlink/search.hpp"

namespace {

using vlink::LinkDiagram;
using vlink::ordered_json;

void emit(const ordered_json& j) { std::cout << j.dump() << "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot open file: " << path << "\n";
    std::exit(2);
  }
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  if (!text.empty() && text.back() == '\n') text.pop_back();
  if (!text.empty() && text.back() == '\r') text.pop_back();
  return text;
}

std::string resolve_input(const std::string& code, const std::string& file) {
  return file.empty() ? code : read_file(file);
}

// Parses and validates; on failure prints the error object and returns
// the exit code through `rc` (2 = syntax, 1 = invalid diagram).
std::optional<LinkDiagram> parse_or_report(const std::string& text, int& rc) {
  try {
    return vlink::parse(text);
  } catch (const vlink::ParseError& e) {
    emit({{"error", "syntax"}, {"column", e.column}, {"message", e.what()}});
    rc = 2;
  } catch (const vlink::ValidationError& e) {
    emit(vlink::validation_json(e.report));
    rc = 1;
  }
  return std::nullopt;
}

std::string default_manifest() {
  if (const char* env = std::getenv("VLINK_FIXTURES")) return env;
  return "fixtures/manifest.tsv";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"virtual link diagrams as Gauss codes: invariants, surfaces "
               "and Reidemeister rewriting"};
  app.require_subcommand(1);
  int rc = 0;

  // --- validate ---------------------------------------------------
  std::string validate_code, validate_file;
  auto* cmd_validate = app.add_subcommand("validate", "check a Gauss code");
  cmd_validate->add_option("code", validate_code, "Gauss code");
  cmd_validate->add_option("--file", validate_file, "read the code from a file");
  cmd_validate->callback([&] {
    const std::string text = resolve_input(validate_code, validate_file);
    LinkDiagram d;
    try {
      d = vlink::parse_raw(text);
    } catch (const vlink::ParseError& e) {
      emit({{"error", "syntax"}, {"column", e.column}, {"message", e.what()}});
      rc = 2;
      return;
    }
    const vlink::ValidationReport report = vlink::validate(d);
    if (report.ok()) {
      std::cout << "ok\n";
    } else {
      emit(vlink::validation_json(report));
      rc = 1;
    }
  });

  // --- report / genus / universe / presentations ------------------
  struct SingleInput {
    std::string code, file;
  };
  auto add_single = [&](const char* name, const char* desc) {
    auto input = std::make_shared<SingleInput>();
    auto* cmd = app.add_subcommand(name, desc);
    cmd->add_option("code", input->code, "Gauss code");
    cmd->add_option("--file", input->file, "read the code from a file");
    return std::make_pair(cmd, input);
  };

  {
    auto [cmd, input] = add_single("report", "full invariant report as JSON");
    cmd->callback([&, input] {
      if (auto d = parse_or_report(resolve_input(input->code, input->file), rc)) {
        emit(vlink::report_json(*d));
      }
    });
  }
  {
    auto [cmd, input] = add_single("genus", "canonical surface report as JSON");
    cmd->callback([&, input] {
      if (auto d = parse_or_report(resolve_input(input->code, input->file), rc)) {
        emit(vlink::surface_json(vlink::surface_report(*d)));
      }
    });
  }
  {
    auto [cmd, input] = add_single("universe", "shadow of the diagram");
    cmd->callback([&, input] {
      if (auto d = parse_or_report(resolve_input(input->code, input->file), rc)) {
        std::cout << vlink::serialize(vlink::universe(*d)) << "\n";
      }
    });
  }
  {
    auto [cmd, input] =
        add_single("presentations", "group and quandle presentations as JSON");
    cmd->callback([&, input] {
      if (auto d = parse_or_report(resolve_input(input->code, input->file), rc)) {
        const vlink::Presentations p = vlink::presentations(*d);
        emit({{"group", vlink::presentation_json(p.group)},
              {"quandle", vlink::presentation_json(p.quandle)}});
      }
    });
  }

  // --- homologous --------------------------------------------------
  std::string hom_a, hom_b, hom_file_a, hom_file_b;
  auto* cmd_hom = app.add_subcommand(
      "homologous", "decide virtual link-homology of two diagrams");
  cmd_hom->add_option("a", hom_a, "first Gauss code");
  cmd_hom->add_option("b", hom_b, "second Gauss code");
  cmd_hom->add_option("--file-a", hom_file_a, "read the first code from a file");
  cmd_hom->add_option("--file-b", hom_file_b, "read the second code from a file");
  cmd_hom->callback([&] {
    auto da = parse_or_report(resolve_input(hom_a, hom_file_a), rc);
    if (!da) return;
    auto db = parse_or_report(resolve_input(hom_b, hom_file_b), rc);
    if (!db) return;
    const vlink::HomologyComparison verdict = vlink::compare_homology(*da, *db);
    std::cout << to_string(verdict) << "\n";
    switch (verdict) {
      case vlink::HomologyComparison::homologous: rc = 0; break;
      case vlink::HomologyComparison::not_homologous: rc = 1; break;
      case vlink::HomologyComparison::incomparable: rc = 3; break;
    }
  });

  // --- search ------------------------------------------------------
  std::string search_a, search_b, search_file_a, search_file_b;
  vlink::SearchOptions search_options;
  auto* cmd_search = app.add_subcommand(
      "search", "bounded bidirectional search for a Reidemeister witness");
  cmd_search->add_option("a", search_a, "start Gauss code");
  cmd_search->add_option("b", search_b, "target Gauss code");
  cmd_search->add_option("--file-a", search_file_a, "read the start from a file");
  cmd_search->add_option("--file-b", search_file_b, "read the target from a file");
  cmd_search
      ->add_option("--max-crossings", search_options.max_crossings,
                   "largest crossing count explored")
      ->check(CLI::PositiveNumber);
  cmd_search
      ->add_option("--max-steps", search_options.max_steps,
                   "largest witness length")
      ->check(CLI::PositiveNumber);
  cmd_search
      ->add_option("--budget", search_options.max_nodes,
                   "node-expansion budget")
      ->check(CLI::PositiveNumber);
  cmd_search->callback([&] {
    auto da = parse_or_report(resolve_input(search_a, search_file_a), rc);
    if (!da) return;
    auto db = parse_or_report(resolve_input(search_b, search_file_b), rc);
    if (!db) return;
    const vlink::SearchResult result =
        vlink::search_equivalent(*da, *db, search_options);
    if (result.outcome == vlink::SearchOutcome::found) {
      for (const vlink::MoveStep& step : result.sequence.steps) {
        emit(vlink::move_json(step.move, step.result_key));
      }
      emit({{"outcome", "found"},
            {"length", result.sequence.steps.size()},
            {"nodes_expanded", result.nodes_expanded}});
      rc = 0;
    } else {
      ordered_json out{{"outcome", to_string(result.outcome)},
                       {"nodes_expanded", result.nodes_expanded}};
      if (!result.note.empty()) out["note"] = result.note;
      emit(out);
      rc = 1;
    }
  });

  // --- fixtures ----------------------------------------------------
  std::string manifest_path = default_manifest();
  std::string show_name;
  auto* cmd_fixtures = app.add_subcommand("fixtures", "built-in example corpus");
  cmd_fixtures->require_subcommand(1);
  cmd_fixtures->add_option("--manifest", manifest_path, "manifest path");
  auto* cmd_list = cmd_fixtures->add_subcommand("list", "list all fixtures");
  auto* cmd_show = cmd_fixtures->add_subcommand("show", "print one fixture's code");
  cmd_show->add_option("name", show_name, "fixture name")->required();
  auto load_manifest = [&]() -> std::optional<std::vector<vlink::Fixture>> {
    try {
      return vlink::load_fixtures(manifest_path);
    } catch (const std::exception& e) {
      std::cerr << e.what() << "\n";
      rc = 2;
      return std::nullopt;
    }
  };
  cmd_list->callback([&] {
    if (auto fixtures = load_manifest()) {
      for (const vlink::Fixture& f : *fixtures) {
        std::cout << f.name << "\t"
                  << (f.placeholder ? "[pending transcription]" : f.code)
                  << "\t" << f.notes << "\n";
      }
    }
  });
  cmd_show->callback([&] {
    auto fixtures = load_manifest();
    if (!fixtures) return;
    for (const vlink::Fixture& f : *fixtures) {
      if (f.name != show_name) continue;
      if (f.placeholder) {
        std::cerr << "fixture '" << f.name
                  << "' is a placeholder (code pending transcription)\n";
        rc = 1;
      } else {
        std::cout << f.code << "\n";
      }
      return;
    }
    std::cerr << "unknown fixture: " << show_name << "\n";
    rc = 1;
  });

  CLI11_PARSE(app, argc, argv);
  return rc;
}
