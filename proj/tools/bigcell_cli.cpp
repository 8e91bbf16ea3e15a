// Command-line front end for the bigcell shared library. Talks to the core
// exclusively through the C interface in bigcell/bigcell.h.

#include "bigcell/bigcell.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;

bool g_json = false;

// Arguments beginning with '@' name a file whose contents stand in for the
// argument (matrices and posets get unwieldy on a command line).
std::string expand(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) {
    std::cerr << "cannot read file: " << arg.substr(1) << "\n";
    std::exit(1);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

[[noreturn]] void fail(bc_status st) {
  if (g_json) {
    std::cout << json{{"ok", false},
                      {"code", static_cast<int>(st)},
                      {"error", bc_last_error()}}
              << "\n";
  } else {
    std::cerr << "error: " << bc_last_error() << "\n";
  }
  std::exit(st == BC_ERR_PARSE ? 2 : 1);
}

void check(bc_status st) {
  if (st != BC_OK) fail(st);
}

void emit(const json& result) {
  if (g_json) {
    std::cout << json{{"ok", true}, {"result", result}} << "\n";
  } else if (result.is_string()) {
    std::cout << result.get<std::string>() << "\n";
  } else {
    std::cout << result << "\n";
  }
}

struct SnatHandle {
  bc_snat* ptr = nullptr;
  explicit SnatHandle(const std::string& text) {
    check(bc_snat_parse(expand(text).c_str(), &ptr));
  }
  ~SnatHandle() { bc_snat_free(ptr); }
};

struct PatchHandle {
  bc_patch* ptr = nullptr;
  explicit PatchHandle(const std::string& text) {
    check(bc_patch_parse(expand(text).c_str(), &ptr));
  }
  ~PatchHandle() { bc_patch_free(ptr); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  bc_string_free(s);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bigcell: supernatural numbers, patches, covers, and the "
               "matrix tower"};
  app.require_subcommand(1);
  app.add_flag("--json", g_json, "emit machine-readable JSON");

  std::string a, b, patch_text, base = "1", gens, excluded, tail_base,
              tail_ratio, chain, prefix, level, source, target, length = "6",
              map_text, degrees;

  // --- snat ---
  auto* snat = app.add_subcommand("snat", "supernatural number operations");
  snat->require_subcommand(1);
  for (const char* op : {"gcd", "lcm", "divides"}) {
    auto* cmd = snat->add_subcommand(op);
    cmd->add_option("a", a)->required();
    cmd->add_option("b", b)->required();
  }
  snat->add_subcommand("cinf", "completely infinite?")
      ->add_option("a", a)
      ->required();

  // --- patch ---
  auto* patch = app.add_subcommand("patch", "patch expression operations");
  patch->require_subcommand(1);
  auto* p_member = patch->add_subcommand("member", "is the point in the patch?");
  p_member->add_option("snat", a)->required();
  p_member->add_option("patch", patch_text)->required();
  auto* p_empty = patch->add_subcommand("empty", "is the patch empty?");
  p_empty->add_option("patch", patch_text)->required();
  auto* p_witness =
      patch->add_subcommand("witness", "witness in a trace of the patch");
  p_witness->add_option("patch", patch_text)->required();
  p_witness->add_option("--base", base, "trace base (default 1)");
  p_witness->add_option("--excluded", excluded, "csv of excluded multiples");

  // --- cover ---
  auto* cover = app.add_subcommand("cover", "covering sieve judgments");
  cover->require_subcommand(1);
  for (const char* op : {"check", "subcover"}) {
    auto* cmd = cover->add_subcommand(op);
    cmd->add_option("--base", base)->required();
    cmd->add_option("--gens", gens, "csv of sieve generators");
    cmd->add_option("--patch", patch_text)->required();
  }

  // --- point ---
  auto* point = app.add_subcommand("point", "topos-point certificates");
  auto* pt_check = point->add_subcommand("check");
  pt_check->add_option("snat", a)->required();
  pt_check->add_option("patch", patch_text)->required();
  point->require_subcommand(1);

  // --- triv ---
  auto* triv = app.add_subcommand("triv", "trivializing topology tests");
  triv->add_subcommand("zariski")->add_option("patch", patch_text)->required();
  triv->require_subcommand(1);

  // --- poset ---
  auto* poset = app.add_subcommand("poset", "divisibility embeddings");
  poset->require_subcommand(1);
  poset->add_subcommand("embed")->add_option("poset", a)->required();
  auto* po_verify = poset->add_subcommand("verify");
  po_verify->add_option("poset", a)->required();
  po_verify->add_option("map", map_text, "lines of 'label value'")->required();

  // --- tower ---
  auto* tower = app.add_subcommand("tower", "limits along divisor towers");
  tower->require_subcommand(1);
  auto* tw_snat = tower->add_subcommand("snat", "classifying supernatural");
  tw_snat->add_option("--chain", chain, "csv divisor chain")->required();
  tw_snat->add_option("--tail-base", tail_base);
  tw_snat->add_option("--tail-ratio", tail_ratio);
  auto* tw_chain = tower->add_subcommand("chain", "canonical cofinal chain");
  tw_chain->add_option("snat", a)->required();
  tw_chain->add_option("--length", length, "prefix length (default 6)");
  auto* tw_limit = tower->add_subcommand("limit", "limit of a sequence");
  tw_limit->add_option("--prefix", prefix, "csv prefix");
  tw_limit->add_option("--tail-base", tail_base);
  tw_limit->add_option("--tail-ratio", tail_ratio);

  // --- mat ---
  auto* mat = app.add_subcommand("mat", "matrix tower operations");
  mat->require_subcommand(1);
  auto* m_embed = mat->add_subcommand("embed", "standard embedding");
  m_embed->add_option("matrix", a, "row-major rationals or @file")->required();
  m_embed->add_option("--target", target)->required();
  mat->add_subcommand("trace", "normalized trace")
      ->add_option("matrix", a)
      ->required();
  auto* m_conj = mat->add_subcommand("conj", "conjugator between embeddings");
  m_conj->add_option("--phi", a, "unit images of the first embedding")
      ->required();
  m_conj->add_option("--psi", b, "unit images of the second embedding")
      ->required();
  m_conj->add_option("--source", source)->required();
  m_conj->add_option("--target", target)->required();
  auto* m_equivn = mat->add_subcommand("equivn", "agreement below a level");
  m_equivn->add_option("gmat", a)->required();
  m_equivn->add_option("hmat", b)->required();
  m_equivn->add_option("--level", level)->required();
  auto* m_rep = mat->add_subcommand("rep", "check a representation");
  m_rep->add_option("presentation", a)->required();
  m_rep->add_option("assignment", b)->required();

  // --- truncate ---
  auto* trunc = app.add_subcommand("truncate", "truncate component degrees");
  trunc->add_option("--degrees", degrees, "csv of component degrees");
  trunc->add_option("snat", a)->required();

  // --- oracle ---
  auto* oracle = app.add_subcommand("oracle", "brute-force reference checks");
  auto* o_cover = oracle->add_subcommand("cover");
  o_cover->add_option("--base", base)->required();
  o_cover->add_option("--gens", gens);
  o_cover->add_option("--patch", patch_text)->required();
  o_cover->add_option("--universe-primes", source, "csv of primes");
  o_cover->add_option("--universe-exp", target, "exponent bound");
  oracle->require_subcommand(1);

  // Let a trailing --json reach the top-level flag from any subcommand.
  std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* cmd) {
    cmd->fallthrough();
    for (CLI::App* sub : cmd->get_subcommands({})) allow_fallthrough(sub);
  };
  allow_fallthrough(&app);

  CLI11_PARSE(app, argc, argv);

  if (snat->parsed()) {
    SnatHandle x(a);
    if (snat->get_subcommand("cinf")->parsed()) {
      int flag = 0;
      check(bc_snat_is_completely_infinite(x.ptr, &flag));
      emit(flag != 0);
      return 0;
    }
    SnatHandle y(b);
    if (snat->get_subcommand("divides")->parsed()) {
      int flag = 0;
      check(bc_snat_divides(x.ptr, y.ptr, &flag));
      emit(flag != 0);
      return 0;
    }
    bc_snat* result = nullptr;
    check(snat->get_subcommand("gcd")->parsed()
              ? bc_snat_gcd(x.ptr, y.ptr, &result)
              : bc_snat_lcm(x.ptr, y.ptr, &result));
    char* text = nullptr;
    check(bc_snat_format(result, &text));
    bc_snat_free(result);
    emit(take(text));
    return 0;
  }

  if (patch->parsed()) {
    PatchHandle S(patch_text);
    if (p_member->parsed()) {
      SnatHandle x(a);
      int flag = 0;
      check(bc_patch_member(x.ptr, S.ptr, &flag));
      emit(flag != 0);
      return 0;
    }
    char* w = nullptr;
    check(bc_trace_witness(expand(base).c_str(), S.ptr,
                           expand(excluded).c_str(), &w));
    if (p_empty->parsed()) {
      emit(w == nullptr);
      bc_string_free(w);
      return 0;
    }
    if (w == nullptr) emit("none");
    else emit(take(w));
    return 0;
  }

  if (cover->parsed()) {
    PatchHandle S(patch_text);
    if (cover->get_subcommand("check")->parsed()) {
      int flag = 0;
      check(bc_cover_check(expand(base).c_str(), expand(gens).c_str(), S.ptr,
                           &flag));
      emit(flag != 0);
      return 0;
    }
    char* sub = nullptr;
    check(bc_cover_subcover(expand(base).c_str(), expand(gens).c_str(), S.ptr,
                            &sub));
    emit(take(sub));
    return 0;
  }

  if (point->parsed()) {
    SnatHandle x(a);
    PatchHandle S(patch_text);
    char* cert = nullptr;
    check(bc_point_certificate(x.ptr, S.ptr, &cert));
    emit(take(cert));
    return 0;
  }

  if (triv->parsed()) {
    PatchHandle S(patch_text);
    int flag = 0;
    check(bc_triv_zariski(S.ptr, &flag));
    emit(flag != 0);
    return 0;
  }

  if (poset->parsed()) {
    if (po_verify->parsed()) {
      int flag = 0;
      check(bc_poset_verify(expand(a).c_str(), expand(map_text).c_str(),
                            &flag));
      emit(flag != 0);
      return 0;
    }
    char* out = nullptr;
    check(bc_poset_embed(expand(a).c_str(), &out));
    emit(take(out));
    return 0;
  }

  if (tower->parsed()) {
    std::string tail;
    if (!tail_base.empty() || !tail_ratio.empty()) {
      if (tail_base.empty() || tail_ratio.empty()) {
        std::cerr << "error: --tail-base and --tail-ratio go together\n";
        return 1;
      }
      tail = tail_base + "," + tail_ratio;
    }
    char* out = nullptr;
    if (tw_snat->parsed()) {
      check(bc_tower_snat(expand(chain).c_str(), tail.c_str(), &out));
    } else if (tw_limit->parsed()) {
      check(bc_pcfb_limit(expand(prefix).c_str(), tail.c_str(), &out));
    } else {
      SnatHandle x(a);
      check(bc_cofinal_chain(x.ptr, length.c_str(), &out));
    }
    emit(take(out));
    return 0;
  }

  if (mat->parsed()) {
    char* out = nullptr;
    int flag = 0;
    if (m_embed->parsed()) {
      check(bc_mat_embed(expand(a).c_str(), target.c_str(), &out));
      emit(take(out));
    } else if (m_conj->parsed()) {
      check(bc_mat_conj(expand(a).c_str(), expand(b).c_str(), source.c_str(),
                        target.c_str(), &out));
      emit(take(out));
    } else if (m_equivn->parsed()) {
      check(bc_mat_equivn(expand(a).c_str(), expand(b).c_str(), level.c_str(),
                          &flag));
      emit(flag != 0);
    } else if (m_rep->parsed()) {
      check(bc_mat_rep(expand(a).c_str(), expand(b).c_str(), &flag));
      emit(flag != 0);
    } else {
      check(bc_mat_trace(expand(a).c_str(), &out));
      emit(take(out));
    }
    return 0;
  }

  if (trunc->parsed()) {
    SnatHandle x(a);
    char* out = nullptr;
    check(bc_truncate(expand(degrees).c_str(), x.ptr, &out));
    emit(take(out));
    return 0;
  }

  if (oracle->parsed()) {
    // Universe sizing: flags beat BIGCELL_UNIVERSE ("primes:exp"), which
    // beats the default 2,3,5 with exponents up to 2.
    if (source.empty() || target.empty()) {
      std::string primes = "2,3,5", exp = "2";
      if (const char* env = std::getenv("BIGCELL_UNIVERSE")) {
        std::string spec(env);
        if (auto colon = spec.find(':'); colon != std::string::npos) {
          primes = spec.substr(0, colon);
          exp = spec.substr(colon + 1);
        }
      }
      if (source.empty()) source = primes;
      if (target.empty()) target = exp;
    }
    PatchHandle S(patch_text);
    int flag = 0;
    check(bc_naive_cover(expand(base).c_str(), expand(gens).c_str(), S.ptr,
                         source.c_str(), target.c_str(), &flag));
    emit(flag ? "cover" : "not a cover");
    return 0;
  }

  return 0;
}
