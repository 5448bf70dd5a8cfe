#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "schurkit.h"

namespace {

using Json = nlohmann::json;

struct SkStr {
  char* ptr = nullptr;
  ~SkStr() { sk_string_free(ptr); }
};

int g_exit = 0;
bool g_json = false;
long long g_max_dim = 0;  // 0 = library default
int g_max_n = 0;          // 0 = automatic search bound

/// Reports a failed call on stderr and records exit code 1.
bool ok(int status) {
  if (status == SK_OK) return true;
  std::cerr << "error: " << sk_last_error() << "\n";
  g_exit = 1;
  return false;
}

void print_raw(const SkStr& s) { std::cout << s.ptr << "\n"; }

/// Prints the JSON verbatim under --json, otherwise the rendered text.
template <class Renderer>
void emit(const SkStr& s, Renderer&& render) {
  if (g_json) {
    print_raw(s);
    return;
  }
  render(Json::parse(s.ptr));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    g_exit = 1;
    return {};
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool parse_space(const std::string& text, int& even, int& odd) {
  std::string t = text;
  if (t.size() >= 2 && t.front() == '(' && t.back() == ')')
    t = t.substr(1, t.size() - 2);
  auto bar = t.find('|');
  if (bar == std::string::npos) {
    std::cerr << "error: a super space is written p|q, e.g. 2|1\n";
    g_exit = 1;
    return false;
  }
  try {
    std::size_t used = 0;
    even = std::stoi(t.substr(0, bar), &used);
    if (used != bar) throw std::invalid_argument(t);
    std::string rest = t.substr(bar + 1);
    odd = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(t);
  } catch (const std::exception&) {
    std::cerr << "error: a super space is written p|q, e.g. 2|1\n";
    g_exit = 1;
    return false;
  }
  if (even < 0 || odd < 0) {
    std::cerr << "error: dimensions must be nonnegative\n";
    g_exit = 1;
    return false;
  }
  return true;
}

void run_eval(const std::string& expr) {
  SkStr out;
  if (!ok(sk_eval(expr.c_str(), g_max_dim, &out.ptr))) return;
  Json j = Json::parse(out.ptr);
  if (j["type"] == "verdict" && j["verdict"] == "inconclusive") g_exit = 2;
  if (g_json) {
    print_raw(out);
    return;
  }
  if (j["type"] == "object") {
    std::cout << j["display"].get<std::string>() << "\n";
    return;
  }
  std::cout << "S" << j["lambda"].get<std::string>() << ": "
            << j["verdict"].get<std::string>();
  if (!j["dimension"].is_null())
    std::cout << "  dimension " << j["dimension"]["total"] << " (even "
              << j["dimension"]["even"] << ", odd " << j["dimension"]["odd"] << ")";
  std::cout << "\n";
}

void run_report(const std::string& expr) {
  SkStr out;
  if (!ok(sk_motive_report(expr.c_str(), g_max_n, &out.ptr))) return;
  Json j = Json::parse(out.ptr);
  if (j["status"] == "inconclusive") g_exit = 2;
  if (g_json) {
    print_raw(out);
    return;
  }
  std::cout << "object: " << j["object"].get<std::string>() << "\n";
  std::cout << "status: " << j["status"].get<std::string>() << "\n";
  std::cout << "schur_finite: " << (j["schur_finite"].get<bool>() ? "yes" : "no")
            << "\n";
  std::cout << "witnesses:";
  for (const auto& w : j["witnesses"]) std::cout << " " << w.get<std::string>();
  std::cout << "\n";
  if (j["kimura_certified"].get<bool>())
    std::cout << "kimura_certified: yes  (p, q) = (" << j["p"] << ", " << j["q"]
              << ")\n";
  else
    std::cout << "kimura_certified: no\n";
  std::cout << "search_bound: " << j["search_bound"] << "\n";
}

void render_homology(const Json& j) {
  for (const auto& [degree, piece] : j["homology"].items()) {
    std::cout << "H_" << degree << ": free rank " << piece["free"];
    if (!piece["torsion"].empty()) {
      std::cout << ", torsion";
      for (const auto& t : piece["torsion"])
        std::cout << " (" << t.get<std::string>() << ")";
    }
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Schur functor calculus"};
  app.require_subcommand(1);
  app.add_flag("--json", g_json, "print machine-readable JSON");
  app.add_option("--max-n", g_max_n, "override search bounds on partition weight");
  app.add_option("--max-dim", g_max_dim, "cap on dense tensor-space dimension");

  // char
  auto* cmd_char = app.add_subcommand("char", "symmetric group characters");
  int char_n = 0;
  std::string char_lambda, char_rho;
  cmd_char->add_option("--n", char_n, "group degree")->required();
  cmd_char->add_option("--lambda", char_lambda, "irreducible label");
  cmd_char->add_option("--rho", char_rho, "conjugacy class (cycle type)");
  cmd_char->callback([&] {
    if (char_lambda.empty() != char_rho.empty()) {
      std::cerr << "error: --lambda and --rho go together\n";
      g_exit = 1;
      return;
    }
    if (!char_lambda.empty()) {
      SkStr out;
      if (!ok(sk_character(char_lambda.c_str(), char_rho.c_str(), &out.ptr))) return;
      emit(out, [](const Json& j) {
        std::cout << "chi[" << j["lambda"].get<std::string>() << "]"
                  << j["rho"].get<std::string>() << " = " << j["value"] << "\n";
      });
      return;
    }
    SkStr out;
    if (!ok(sk_character_table(char_n, &out.ptr))) return;
    emit(out, [](const Json& j) {
      std::cout << "classes:";
      for (const auto& l : j["labels"]) std::cout << " " << l.get<std::string>();
      std::cout << "\nsizes:  ";
      for (const auto& s : j["class_sizes"]) std::cout << " " << s.get<std::string>();
      std::cout << "\n";
      std::size_t row = 0;
      for (const auto& values : j["values"]) {
        std::cout << j["labels"][row++].get<std::string>() << ":";
        for (const auto& v : values) std::cout << " " << v;
        std::cout << "\n";
      }
    });
  });

  // coeff lr | kron
  auto* cmd_coeff = app.add_subcommand("coeff", "structure coefficients");
  cmd_coeff->require_subcommand(1);
  std::string co_lambda, co_mu, co_nu;
  auto* coeff_lr = cmd_coeff->add_subcommand("lr", "Littlewood-Richardson");
  coeff_lr->add_option("--lambda", co_lambda)->required();
  coeff_lr->add_option("--mu", co_mu)->required();
  coeff_lr->add_option("--nu", co_nu)->required();
  coeff_lr->callback([&] {
    SkStr out;
    if (!ok(sk_lr_coefficient(co_lambda.c_str(), co_mu.c_str(), co_nu.c_str(),
                              &out.ptr)))
      return;
    emit(out, [](const Json& j) { std::cout << j["value"] << "\n"; });
  });
  auto* coeff_kron = cmd_coeff->add_subcommand("kron", "Kronecker");
  coeff_kron->add_option("--lambda", co_lambda)->required();
  coeff_kron->add_option("--mu", co_mu)->required();
  coeff_kron->add_option("--nu", co_nu)->required();
  coeff_kron->callback([&] {
    SkStr out;
    if (!ok(sk_kronecker(co_lambda.c_str(), co_mu.c_str(), co_nu.c_str(), &out.ptr)))
      return;
    emit(out, [](const Json& j) { std::cout << j["value"] << "\n"; });
  });

  // decompose sum|tensor|pair
  auto* cmd_dec = app.add_subcommand("decompose", "multiplicity tables");
  cmd_dec->require_subcommand(1);
  std::string dec_lambda, dec_mu, dec_nu;
  auto render_terms = [](const Json& j) {
    for (const auto& t : j["terms"]) {
      std::string key;
      for (const auto& k : t["key"]) {
        if (!key.empty()) key += " , ";
        key += k.get<std::string>();
      }
      std::cout << key << "  x" << t["multiplicity"] << "\n";
    }
  };
  auto* dec_sum = cmd_dec->add_subcommand("sum", "S_lambda of a direct sum");
  dec_sum->add_option("--lambda", dec_lambda)->required();
  dec_sum->callback([&, render_terms] {
    SkStr out;
    if (!ok(sk_decompose_sum(dec_lambda.c_str(), &out.ptr))) return;
    emit(out, render_terms);
  });
  auto* dec_tensor = cmd_dec->add_subcommand("tensor", "S_lambda of a tensor product");
  dec_tensor->add_option("--lambda", dec_lambda)->required();
  dec_tensor->callback([&, render_terms] {
    SkStr out;
    if (!ok(sk_decompose_tensor(dec_lambda.c_str(), &out.ptr))) return;
    emit(out, render_terms);
  });
  auto* dec_pair = cmd_dec->add_subcommand("pair", "product of two Schur functors");
  dec_pair->add_option("--mu", dec_mu)->required();
  dec_pair->add_option("--nu", dec_nu)->required();
  dec_pair->callback([&, render_terms] {
    SkStr out;
    if (!ok(sk_decompose_pair(dec_mu.c_str(), dec_nu.c_str(), &out.ptr))) return;
    emit(out, render_terms);
  });

  // symmetrizer
  auto* cmd_sym = app.add_subcommand("symmetrizer", "Young symmetrizer");
  std::string sym_lambda;
  bool sym_check = false;
  cmd_sym->add_option("--lambda", sym_lambda)->required();
  cmd_sym->add_flag("--check-idempotent", sym_check, "verify c*c = c");
  cmd_sym->callback([&] {
    SkStr out;
    if (!ok(sk_symmetrizer(sym_lambda.c_str(), sym_check ? 1 : 0, &out.ptr))) return;
    emit(out, [](const Json& j) {
      std::cout << j["display"].get<std::string>() << "\n";
      if (!j["idempotent"].is_null())
        std::cout << "idempotent: " << (j["idempotent"].get<bool>() ? "yes" : "no")
                  << "\n";
    });
  });

  // schur-dim
  auto* cmd_dim = app.add_subcommand("schur-dim", "graded dimension of S_lambda(p|q)");
  std::string dim_space, dim_lambda;
  cmd_dim->add_option("--space", dim_space, "super space p|q")->required();
  cmd_dim->add_option("--lambda", dim_lambda)->required();
  cmd_dim->callback([&] {
    int even = 0, odd = 0;
    if (!parse_space(dim_space, even, odd)) return;
    SkStr out;
    if (!ok(sk_schur_dimension(even, odd, dim_lambda.c_str(), g_max_dim, &out.ptr)))
      return;
    emit(out, [](const Json& j) {
      std::cout << "total " << j["total"] << " (even " << j["even"] << ", odd "
                << j["odd"] << ")\n";
    });
  });

  // vanishes
  auto* cmd_van = app.add_subcommand("vanishes", "vanishing of S_lambda(p|q)");
  std::string van_space, van_lambda, van_oracle = "both";
  cmd_van->add_option("--space", van_space, "super space p|q")->required();
  cmd_van->add_option("--lambda", van_lambda)->required();
  cmd_van->add_option("--oracle", van_oracle, "rank, rectangle or both");
  cmd_van->callback([&] {
    int even = 0, odd = 0;
    if (!parse_space(van_space, even, odd)) return;
    SkStr out;
    if (!ok(sk_vanishes(even, odd, van_lambda.c_str(), van_oracle.c_str(), g_max_dim,
                        &out.ptr)))
      return;
    emit(out, [](const Json& j) {
      std::cout << (j["vanishes"].get<bool>() ? "vanishes" : "nonzero");
      if (j.contains("agree") && !j["agree"].get<bool>())
        std::cout << "  (oracles disagree!)";
      std::cout << "\n";
    });
  });

  // motive eval|report|blowup
  auto* cmd_motive = app.add_subcommand("motive", "formal motive calculus");
  cmd_motive->require_subcommand(1);
  std::string motive_expr, blow_x, blow_y;
  int blow_codim = 2;
  auto* motive_eval = cmd_motive->add_subcommand("eval", "evaluate an expression");
  motive_eval->add_option("expr", motive_expr, "expression")->required();
  motive_eval->callback([&] { run_eval(motive_expr); });
  auto* motive_report = cmd_motive->add_subcommand("report", "finiteness report");
  motive_report->add_option("expr", motive_expr, "expression")->required();
  motive_report->callback([&] { run_report(motive_expr); });
  auto* motive_blowup = cmd_motive->add_subcommand("blowup", "blowup along a center");
  motive_blowup->add_option("--x", blow_x, "ambient object")->required();
  motive_blowup->add_option("--y", blow_y, "center object")->required();
  motive_blowup->add_option("--codim", blow_codim, "codimension (>= 2)")->required();
  motive_blowup->callback([&] {
    SkStr out;
    if (!ok(sk_motive_blowup(blow_x.c_str(), blow_y.c_str(), blow_codim, &out.ptr)))
      return;
    emit(out, [](const Json& j) {
      std::cout << j["display"].get<std::string>() << "\n";
    });
  });

  // complex schur|homology|filtration
  auto* cmd_cx = app.add_subcommand("complex", "chain complexes over Q or Q[x]");
  cmd_cx->require_subcommand(1);
  std::string cx_input, cx_lambda;
  int cx_n = 2;
  auto* cx_schur = cmd_cx->add_subcommand("schur", "S_lambda of a complex");
  cx_schur->add_option("--input", cx_input, "complex JSON file")->required();
  cx_schur->add_option("--lambda", cx_lambda)->required();
  cx_schur->callback([&] {
    std::string text = read_file(cx_input);
    if (g_exit) return;
    sk_complex* parsed = nullptr;
    if (!ok(sk_complex_parse(text.c_str(), &parsed))) return;
    sk_complex* image = nullptr;
    if (!ok(sk_complex_schur(parsed, cx_lambda.c_str(), g_max_dim, &image))) {
      sk_complex_free(parsed);
      return;
    }
    SkStr out;
    int status = sk_complex_to_json(image, &out.ptr);
    sk_complex_free(parsed);
    sk_complex_free(image);
    if (!ok(status)) return;
    print_raw(out);
  });
  auto* cx_hom = cmd_cx->add_subcommand("homology", "homology of a complex");
  cx_hom->add_option("--input", cx_input, "complex JSON file")->required();
  cx_hom->callback([&] {
    std::string text = read_file(cx_input);
    if (g_exit) return;
    sk_complex* parsed = nullptr;
    if (!ok(sk_complex_parse(text.c_str(), &parsed))) return;
    SkStr out;
    int status = sk_complex_homology(parsed, &out.ptr);
    sk_complex_free(parsed);
    if (!ok(status)) return;
    emit(out, render_homology);
  });
  auto* cx_filt = cmd_cx->add_subcommand("filtration", "tensor power filtration");
  cx_filt->add_option("--input", cx_input, "bundle JSON file (p, x, q, maps)")
      ->required();
  cx_filt->add_option("--n", cx_n, "tensor power")->required();
  cx_filt->callback([&] {
    std::string text = read_file(cx_input);
    if (g_exit) return;
    SkStr out;
    if (!ok(sk_filtration_report(text.c_str(), cx_n, g_max_dim, &out.ptr))) return;
    emit(out, [](const Json& j) {
      for (const auto& level : j["levels"]) {
        std::cout << "F_" << level["level"] << " ranks:";
        for (const auto& [degree, rank] : level["ranks"].items())
          std::cout << " " << degree << ":" << rank;
        std::cout << "  graded:";
        for (const auto& [degree, rank] : level["graded"].items())
          std::cout << " " << degree << ":" << rank;
        std::cout << "\n";
      }
    });
  });

  // eval (top-level convenience)
  auto* cmd_eval = app.add_subcommand("eval", "evaluate an expression");
  std::string eval_expr;
  cmd_eval->add_option("expr", eval_expr, "expression")->required();
  cmd_eval->callback([&] { run_eval(eval_expr); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  return g_exit;
}
