#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <json.hpp>
#include <set>
#include <sstream>

#include "transword/abelian.hpp"
#include "transword/dsl.hpp"
#include "transword/endo.hpp"
#include "transword/error.hpp"
#include "transword/hag.hpp"
#include "transword/reduce.hpp"
#include "transword/sigma.hpp"

namespace transword::cli {

namespace {

using Doc = nlohmann::ordered_json;

void emit_text(const Doc& doc, std::ostream& out, const std::string& indent = "") {
  for (const auto& [key, val] : doc.items()) {
    if (val.is_array()) {
      out << indent << key << ":\n";
      for (const auto& item : val) {
        if (item.is_object()) {
          out << indent << "  -\n";
          emit_text(item, out, indent + "    ");
        } else {
          out << indent << "  - " << (item.is_string() ? item.get<std::string>() : item.dump()) << "\n";
        }
      }
    } else if (val.is_object()) {
      out << indent << key << ":\n";
      emit_text(val, out, indent + "  ");
    } else {
      out << indent << key << ": " << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
    }
  }
}

std::uint64_t env_seed() {
  if (const char* s = std::getenv("TRANSWORD_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw DomainError("TRANSWORD_SEED must be a nonnegative integer");
    }
  }
  return 20240611;
}

std::size_t family_size(const std::string& spec) {
  if (spec.rfind("k=", 0) != 0) throw ParseError("--family expects k=K", 1, 1);
  try {
    return std::stoul(spec.substr(2));
  } catch (const std::exception&) {
    throw ParseError("--family expects k=K", 1, 3);
  }
}

std::vector<std::string> word_lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"transword: infinitary words over a, b, c"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

  std::string expr, family = "", fmap, sub;
  std::uint64_t level = 0, k = 0, p = 2, n_max = 3;
  std::size_t len_max = 6;
  bool have_level = false;

  auto* reduce_cmd = app.add_subcommand("reduce", "reduce a word");
  reduce_cmd->add_option("-e", expr, "word expression")->required();
  reduce_cmd->add_option("--family", family, "family spec k=K");

  auto* project_cmd = app.add_subcommand("project", "project to ranks < N");
  project_cmd->add_option("-e", expr, "word expression")->required();
  project_cmd->add_option("-N", level, "level")->required();
  project_cmd->add_option("--family", family, "family spec k=K");

  auto* decompose_cmd = app.add_subcommand("decompose", "maximal-interval decomposition");
  decompose_cmd->add_option("-e", expr, "word expression")->required();
  decompose_cmd->add_option("--family", family, "family spec k=K")->required();

  auto* ff_cmd = app.add_subcommand("apply-ff", "apply F_f");
  ff_cmd->add_option("-e", expr, "word expression")->required();
  ff_cmd->add_option("-f", fmap, "sigma map, e.g. f{S1->T}")->required();
  ff_cmd->add_option("--family", family, "family spec k=K")->required();

  auto* endo_cmd = app.add_subcommand("apply-endo", "apply a substitution");
  endo_cmd->add_option("-e", expr, "word expression")->required();
  endo_cmd->add_option("-s,--sub", sub, "substitution, e.g. sub{tail: a(n) -> [a(2n) a(2n+1)]}")->required();
  endo_cmd->add_option("-N", level, "project the image to ranks < N")->each([&](const std::string&) { have_level = true; });
  endo_cmd->add_option("--family", family, "family spec k=K");

  auto* hag_cmd = app.add_subcommand("hag", "germ normal form");
  hag_cmd->add_option("-e", expr, "word expression")->required();
  hag_cmd->add_option("--family", family, "family spec k=K");

  auto* sep_cmd = app.add_subcommand("demo-separation", "separation sweep over all subsets");
  sep_cmd->add_option("-k", k, "family size")->required()->check(CLI::Range(1, 16));

  auto* ab_cmd = app.add_subcommand("demo-abelian", "mod-p coordinate-sum functionals");
  ab_cmd->add_option("-k", k, "number of coordinates")->required()->check(CLI::Range(0, 16));
  ab_cmd->add_option("-p", p, "prime")->required();

  auto* emb_cmd = app.add_subcommand("embedding-check", "check the embedding conditions for a substitution");
  emb_cmd->add_option("-s,--sub", sub, "substitution")->required();
  emb_cmd->add_option("--n-max", n_max, "largest n");
  emb_cmd->add_option("--len-max", len_max, "word length for the injectivity sweep");
  emb_cmd->add_option("--family", family, "family spec k=K");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Doc doc;
  try {
    std::optional<SigmaFamily> fam;
    if (!family.empty()) fam = make_family(family_size(family));
    const SetNames names = fam ? fam->set_names() : SetNames{};
    auto word = [&]() {
      doc["input"] = expr;
      return parse_word(expr, names);
    };

    if (reduce_cmd->parsed()) {
      doc["command"] = "reduce";
      const auto r = reduce(word());
      doc["result"] = render(r, &names);
      doc["reduced"] = is_reduced(r);
    } else if (project_cmd->parsed()) {
      doc["command"] = "project";
      const auto w = word();
      doc["level"] = level;
      doc["result"] = to_string(project_rank(w, level));
    } else if (decompose_cmd->parsed()) {
      doc["command"] = "decompose";
      const auto w = reduce(word());
      doc["reduced"] = render(w, &names);
      doc["pieces"] = word_lines(render(decompose(w, *fam), *fam));
    } else if (ff_cmd->parsed()) {
      doc["command"] = "apply-ff";
      const auto w = reduce(word());
      const auto f = parse_sigma_map(fmap, *fam);
      doc["map"] = render(f, *fam);
      const auto img = apply_Ff(w, *fam, f);
      doc["result"] = render(img, &names);
      doc["psi"] = render(hag_normal(img), &names);
    } else if (endo_cmd->parsed()) {
      doc["command"] = "apply-endo";
      const auto w = word();
      const auto s = parse_substitution(sub, names);
      doc["substitution"] = render(s, &names);
      if (have_level) {
        doc["level"] = level;
        doc["result"] = to_string(apply_projected_rank(s, w, level));
      } else {
        doc["result"] = render(apply_endo(s, w), &names);
      }
    } else if (hag_cmd->parsed()) {
      doc["command"] = "hag";
      doc["result"] = render(hag_normal(word()), &names);
    } else if (sep_cmd->parsed()) {
      doc["command"] = "demo-separation";
      const auto sfam = make_family(k);
      std::set<std::vector<bool>> seen;
      std::uint64_t faithful = 0;
      const std::uint64_t total = std::uint64_t{1} << k;
      for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<bool> scal(k);
        for (std::size_t i = 0; i < k; ++i) scal[i] = (mask >> i) & 1;
        const auto pat = separation_pattern(sfam, scal);
        seen.insert(pat);
        if (pat == scal) ++faithful;
      }
      doc["family"] = k;
      doc["patterns_matching_selection"] = faithful;
      doc["verdict"] = std::to_string(seen.size()) + "/" + std::to_string(total) + " patterns distinct";
      doc["ok"] = seen.size() == total && faithful == total;
    } else if (ab_cmd->parsed()) {
      doc["command"] = "demo-abelian";
      const auto demo = distinct_homs_demo(k, p);
      doc["k"] = k;
      doc["p"] = p;
      doc["count"] = demo.count;
      std::vector<std::string> rows;
      for (const auto& r : demo.rows) {
        std::string line;
        for (auto x : r) line += (line.empty() ? "" : " ") + std::to_string(x);
        rows.push_back(line.empty() ? "()" : line);
      }
      doc["matrix"] = rows;
      doc["verdict"] = std::to_string(demo.count) + "/" + std::to_string(std::uint64_t{1} << k) + " functionals distinct";
      doc["ok"] = demo.count == (std::uint64_t{1} << k);
    } else if (emb_cmd->parsed()) {
      doc["command"] = "embedding-check";
      const auto s = parse_substitution(sub, names);
      doc["substitution"] = render(s, &names);
      const auto rep = embedding_check(s, n_max, len_max, env_seed());
      doc["admissible"] = rep.admissible;
      doc["finite_images"] = rep.finite_images;
      doc["levels_increasing"] = rep.levels_increasing;
      doc["supports_above"] = rep.supports_above;
      doc["retraction"] = rep.retraction;
      doc["injective"] = rep.injective;
      doc["j"] = rep.j;
      doc["m"] = rep.m;
      doc["words_checked"] = rep.words_checked;
      doc["passed"] = rep.passed();
      if (!rep.failure.empty()) doc["failure"] = rep.failure;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (format == "json")
    out << doc.dump(2) << "\n";
  else
    emit_text(doc, out);
  return 0;
}

}  // namespace transword::cli
