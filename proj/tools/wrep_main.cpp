#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wrep/wrep.hpp"

namespace {

struct CommonOpts {
  std::string group;
  int n = 0;
  int n_max = 0;
  int window = 0;
  long cap = wrep::kDefaultWreathCap;
  int jobs = 1;
  std::string format = "table";
  std::string out;
  bool timings = false;
};

void add_common(CLI::App* cmd, CommonOpts* o, bool with_grid) {
  cmd->add_option("--group", o->group, "builtin name or path to a group file");
  cmd->add_option("--n", o->n, "degree n of the wreath product");
  if (with_grid) {
    cmd->add_option("--n-max", o->n_max, "upper bound of the n grid");
    cmd->add_option("--window", o->window, "graded window cutoff for operator checks");
  }
  cmd->add_option("--cap", o->cap, "brute-force group order cap");
  cmd->add_option("--jobs", o->jobs, "worker threads for grid instances");
  cmd->add_option("--format", o->format, "output format: table or json")
      ->check(CLI::IsMember({"table", "json"}));
  cmd->add_option("--out", o->out, "write the report to a file instead of stdout");
  cmd->add_flag("--timings", o->timings, "include wall-clock timings in the output");
}

int emit(const wrep::Document& doc, const CommonOpts& o) {
  std::string text = o.format == "json" ? wrep::render_document_json(doc, o.timings)
                                        : wrep::render_document_table(doc, o.timings);
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out);
    if (!f) {
      std::cerr << "error: cannot write " << o.out << "\n";
      return 2;
    }
    f << text;
  }
  return doc.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact wreath-product representation rings: class data, Heisenberg/Virasoro "
               "operator calculus, and theorem verification by brute-force group oracles"};
  app.require_subcommand(1);

  CommonOpts co;
  auto* classes = app.add_subcommand("classes", "list the conjugacy types of Gamma_n");
  add_common(classes, &co, false);

  CommonOpts vo;
  std::string theorem;
  auto* verify = app.add_subcommand("verify", "verify a theorem grid exactly");
  verify->add_option("theorem", theorem, "theorem id or 'all'")->required();
  add_common(verify, &vo, true);

  CommonOpts eo;
  auto* deltaeig = app.add_subcommand("delta-eig", "eigenvalues of Delta_c on the Schur basis");
  add_common(deltaeig, &eo, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (classes->parsed()) {
      if (co.group.empty() || co.n <= 0) {
        std::cerr << "error: classes requires --group and --n\n";
        return 2;
      }
      wrep::Document d;
      d.reports.push_back(wrep::cmd_classes(co.group, co.n, co.cap));
      return emit(d, co);
    }
    if (verify->parsed()) {
      wrep::VerifyOptions opt;
      opt.group = vo.group;
      opt.n = vo.n;
      opt.n_max = vo.n_max;
      opt.window = vo.window;
      opt.cap = vo.cap;
      opt.jobs = vo.jobs;
      return emit(wrep::cmd_verify(theorem, opt), vo);
    }
    if (deltaeig->parsed()) {
      if (eo.group.empty() || eo.n <= 0) {
        std::cerr << "error: delta-eig requires --group and --n\n";
        return 2;
      }
      wrep::Document d;
      d.reports.push_back(wrep::cmd_delta_eig(eo.group, eo.n, eo.cap));
      return emit(d, eo);
    }
  } catch (const wrep::UnknownTheorem& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const wrep::BoundExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const wrep::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const wrep::NotAGroup& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
