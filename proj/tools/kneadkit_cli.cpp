// Command line front end: system configs in, JSON (or CSV) out.
//
// Exit codes: 0 success, 1 precondition violation, 2 internal or
// certification failure, 64 usage error.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "kneadkit/kneadkit.hpp"

namespace kk = kneadkit;

namespace {

struct Context {
  std::vector<std::unique_ptr<kk::SignedGraph>> owned;
  const kk::SignedGraph* graph = nullptr;
  std::string out_path;

  const kk::SignedGraph& g() const { return *graph; }

  void emit(const kk::Json& j) const {
    std::string text = j.dump(2) + "\n";
    if (!out_path.empty()) {
      std::ofstream f(out_path, std::ios::binary);
      f << text;
    } else {
      std::cout << text;
    }
  }

  void emit_text(const std::string& text) const {
    if (!out_path.empty()) {
      std::ofstream f(out_path, std::ios::binary);
      f << text;
    } else {
      std::cout << text;
    }
  }
};

kk::Word parse_word(const Context& ctx, const std::string& text) {
  return kk::Word(ctx.g(), text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbolic dynamics of signed orders: words, tuning, spectra"};
  app.require_subcommand(1);

  Context ctx;
  std::string system;
  app.add_option("--out", ctx.out_path, "write output to a file instead of stdout");

  auto add_system = [&](CLI::App* cmd) {
    cmd->add_option("system", system, "built-in name (unimodal, four-vertex, tree) or config path")
        ->required();
  };

  std::string warg, varg, uarg, aarg, barg;
  size_t max_len = 8, nexp = 1, n_max = 12;
  uint64_t cap = kk::kDefaultEnumerationCap;
  size_t search_cap = 64;
  double tol = 1e-8, eps = 0.05;

  auto* c_classify = app.add_subcommand("classify", "classification report for a word");
  add_system(c_classify);
  c_classify->add_option("word", warg)->required();

  auto* c_order = app.add_subcommand("order", "compare two words (finite and periodic order)");
  add_system(c_order);
  c_order->add_option("u", uarg)->required();
  c_order->add_option("v", varg)->required();

  auto* c_wn = app.add_subcommand("wn", "ordered list of periodic words of length n");
  add_system(c_wn);
  size_t wn_n = 1;
  c_wn->add_option("n", wn_n)->required();
  c_wn->add_option("--cap", cap);

  auto* c_tunable = app.add_subcommand("tunable", "tunability audit up to a length bound");
  add_system(c_tunable);
  c_tunable->add_option("--max-len", max_len);
  c_tunable->add_option("--cap", cap);

  auto* c_tune = app.add_subcommand("tune", "tune an admissible word by a unimodal exponent");
  add_system(c_tune);
  c_tune->add_option("a", aarg)->required();
  c_tune->add_option("v", varg)->required();

  auto* c_renorm = app.add_subcommand("renorm", "detect a tuning decomposition");
  add_system(c_renorm);
  c_renorm->add_option("word", warg)->required();

  auto* c_dominant = app.add_subcommand("dominant", "certified dominant extension w^n b");
  add_system(c_dominant);
  c_dominant->add_option("word", warg)->required();
  c_dominant->add_option("--n", nexp);
  c_dominant->add_option("--cap", search_cap);

  auto* c_concat = app.add_subcommand("concat", "certified admissible concatenation w v^n");
  add_system(c_concat);
  c_concat->add_option("w", warg)->required();
  c_concat->add_option("v", varg)->required();
  c_concat->add_option("--n", nexp);

  auto* c_bridge = app.add_subcommand("bridge", "certified bridge word a^n c b^n");
  add_system(c_bridge);
  c_bridge->add_option("a", aarg)->required();
  c_bridge->add_option("b", barg)->required();
  c_bridge->add_option("--n", nexp);
  c_bridge->add_option("--cap", search_cap);

  auto* c_markov = app.add_subcommand("markov", "Markov decomposition and incidence matrix");
  add_system(c_markov);
  c_markov->add_option("word", warg)->required();

  auto* c_spectrum = app.add_subcommand("spectrum", "eigenvalues of the decomposition matrix");
  add_system(c_spectrum);
  c_spectrum->add_option("word", warg)->required();
  c_spectrum->add_option("--tol", tol);

  auto* c_zeta = app.add_subcommand("zeta", "zeta function denominator det(I - tM)");
  add_system(c_zeta);
  c_zeta->add_option("word", warg)->required();

  auto* c_kneadpoly = app.add_subcommand("kneadpoly", "kneading polynomial F_w");
  add_system(c_kneadpoly);
  c_kneadpoly->add_option("word", warg)->required();

  auto* c_match = app.add_subcommand("match", "off-circle roots of F_w vs matrix eigenvalues");
  add_system(c_match);
  c_match->add_option("word", warg)->required();
  c_match->add_option("--tol", tol);

  auto* c_teapot = app.add_subcommand("teapot", "eigenvalue/entropy sweep over admissible words");
  add_system(c_teapot);
  c_teapot->add_option("--max-len", max_len);
  c_teapot->add_option("--tol", tol);
  c_teapot->add_option("--cap", cap);

  auto* c_persist = app.add_subcommand("persist", "persistence experiment for a pair (w, v)");
  add_system(c_persist);
  c_persist->add_option("w", warg)->required();
  c_persist->add_option("v", varg)->required();
  c_persist->add_option("--eps", eps);
  c_persist->add_option("--n-max", n_max);
  c_persist->add_option("--cap", search_cap);
  c_persist->add_option("--tol", tol);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << app.help() << "\n" << e.what() << "\n";
    return 64;
  }

  try {
    ctx.graph = &kk::lookup_system(system, ctx.owned);
    const kk::SignedGraph& g = ctx.g();

    if (*c_classify) {
      kk::Word w = parse_word(ctx, warg);
      ctx.emit(kk::classification_json(w, kk::classify(w)));
    } else if (*c_order) {
      kk::Word u = parse_word(ctx, uarg), v = parse_word(ctx, varg);
      kk::Json j;
      j["finite"] = kk::to_string(kk::compare_words(u, v));
      if (kk::is_periodic(u) && kk::is_periodic(v))
        j["periodic"] = kk::to_string(kk::compare_periodic(u, v));
      else
        j["periodic"] = nullptr;
      ctx.emit(j);
    } else if (*c_wn) {
      kk::Json j;
      j["system"] = system;
      j["n"] = wn_n;
      auto list = kk::Json::array();
      for (const auto& w : kk::enumerate_Wn(g, wn_n, cap)) list.push_back(w.str());
      j["words"] = std::move(list);
      ctx.emit(j);
    } else if (*c_tunable) {
      ctx.emit(kk::tunability_json(kk::check_tunable(g, max_len, cap)));
    } else if (*c_tune) {
      kk::Word a = parse_word(ctx, aarg);
      auto pair = kk::find_tuning_pair(a);
      kk::require(pair.has_value(), kk::errc::precondition,
                  "no tuning pair with lower word " + a.str());
      kk::Word v(kk::unimodal_system(), varg);
      kk::Json j;
      j["lower"] = pair->lower.str();
      j["upper"] = pair->upper.str();
      j["exponent"] = v.str();
      j["word"] = kk::tune(*pair, v).str();
      ctx.emit(j);
    } else if (*c_renorm) {
      kk::Word w = parse_word(ctx, warg);
      auto r = kk::detect_renormalization(w);
      kk::Json j;
      j["word"] = w.str();
      j["renormalizable"] = r.has_value();
      if (r) {
        j["pair"] = {{"lower", r->first.lower.str()}, {"upper", r->first.upper.str()}};
        j["exponent"] = r->second.str();
      } else {
        j["pair"] = nullptr;
        j["exponent"] = nullptr;
      }
      ctx.emit(j);
    } else if (*c_dominant) {
      ctx.emit(kk::certified_json(kk::make_dominant(parse_word(ctx, warg), nexp, search_cap)));
    } else if (*c_concat) {
      ctx.emit(kk::certified_json(
          kk::concat_admissible(parse_word(ctx, warg), parse_word(ctx, varg), nexp)));
    } else if (*c_bridge) {
      ctx.emit(kk::certified_json(
          kk::concat_bridge(parse_word(ctx, aarg), parse_word(ctx, barg), nexp, search_cap)));
    } else if (*c_markov) {
      auto part = kk::markov_partition(parse_word(ctx, warg));
      kk::Json j = kk::partition_json(part);
      j["matrix"] = kk::matrix_json(kk::incidence_matrix(part));
      ctx.emit(j);
    } else if (*c_spectrum) {
      auto M = kk::incidence_matrix(kk::markov_partition(parse_word(ctx, warg)));
      ctx.emit(kk::spectrum_json(kk::spectrum(M, tol)));
    } else if (*c_zeta) {
      auto M = kk::incidence_matrix(kk::markov_partition(parse_word(ctx, warg)));
      kk::Json j;
      j["denominator"] = kk::poly_json(kk::zeta_denominator(M));
      j["variable"] = "t";
      ctx.emit(j);
    } else if (*c_kneadpoly) {
      kk::Json j;
      j["coefficients"] = kk::poly_json(kk::kneading_poly(parse_word(ctx, warg)));
      j["variable"] = "lambda";
      ctx.emit(j);
    } else if (*c_match) {
      ctx.emit(kk::match_json(kk::match_off_circle(parse_word(ctx, warg), tol)));
    } else if (*c_teapot) {
      auto cloud = kk::teapot_sweep(g, max_len, tol, cap);
      ctx.emit_text(cloud.to_csv());
    } else if (*c_persist) {
      ctx.emit(kk::persistence_json(kk::run_persistence(
          parse_word(ctx, warg), parse_word(ctx, varg), eps, n_max, search_cap, tol)));
    }
  } catch (const kk::error& e) {
    std::cerr << e.what() << "\n";
    return e.is_precondition() ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
