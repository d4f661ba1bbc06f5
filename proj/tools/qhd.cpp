#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qhd/driver.hpp"
#include "qhd/errors.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw qhd::PreconditionFailed("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quasi-heredity decisions for quiver algebra presentations"};
  app.require_subcommand(1);

  qhd::Options opts;
  std::string input;
  int cap = 0;
  std::string order, orders;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", input, "presentation file, or - for stdin")
        ->required();
    sub->add_option("--order", order, "admissible order, e.g. \"lenlex a > b\"");
    sub->add_option("--orders", orders,
                    "semicolon-separated list of admissible orders");
    sub->add_option("--cap", cap, "tip length cap for completion");
    sub->add_flag("--json", opts.json, "machine-readable report");
    sub->add_option("--field", opts.field, "coefficient field: q or fp:<prime>");
    return sub;
  };

  auto* gb = add_common(app.add_subcommand("gb", "reduced Groebner basis"));
  auto* dim = add_common(app.add_subcommand("dim", "algebra dimension"));
  auto* qh = add_common(app.add_subcommand("qh", "quasi-heredity decision"));
  qh->add_flag("--monomial", opts.monomial,
               "monomial decision (relations must be single paths)");
  auto* verify =
      add_common(app.add_subcommand("verify", "certify a vertex ordering"));
  std::string ordering_csv;
  verify->add_option("--ordering", ordering_csv, "vertex order v3,v1,...")
      ->required();
  auto* quotient =
      add_common(app.add_subcommand("quotient", "print a vertex quotient"));
  std::string remove_csv;
  quotient->add_option("--remove", remove_csv, "vertices to remove, v3[,v5]")
      ->required();

  CLI11_PARSE(app, argc, argv);

  for (auto* sub : {gb, dim, qh, verify, quotient})
    if (sub->parsed()) opts.command = sub->get_name();
  if (cap > 0 || app.get_subcommand()->count("--cap")) opts.cap = cap;
  if (!order.empty()) opts.order_spec = order;
  if (!orders.empty()) opts.orders_spec = orders;
  if (!ordering_csv.empty()) opts.ordering_csv = ordering_csv;
  if (!remove_csv.empty()) opts.remove_csv = remove_csv;

  try {
    qhd::Presentation pres = qhd::parse_presentation(read_input(input));
    qhd::RunReport rep = qhd::run_command(opts, pres);
    std::cout << (opts.json ? qhd::emit_json(rep) : qhd::emit_text(rep));
    return rep.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
