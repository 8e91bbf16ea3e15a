#include "bigcell/bigcell.h"

#include "bigcell/oracle.hpp"
#include "bigcell/poset.hpp"
#include "bigcell/site.hpp"
#include "bigcell/tower.hpp"

#include <cstdlib>
#include <cstring>
#include <sstream>

using namespace bigcell;

struct bc_snat {
  SupernaturalNumber value;
};
struct bc_patch {
  PatchExpr value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
bc_status wrap(F&& f) {
  try {
    f();
    g_last_error.clear();
    return BC_OK;
  } catch (const ParseError& e) {
    g_last_error = e.what();
    return BC_ERR_PARSE;
  } catch (const UnrepresentableError& e) {
    g_last_error = e.what();
    return BC_ERR_UNREPRESENTABLE;
  } catch (const NonConvergentError& e) {
    g_last_error = e.what();
    return BC_ERR_NONCONVERGENT;
  } catch (const BudgetError& e) {
    g_last_error = e.what();
    return BC_ERR_BUDGET;
  } catch (const DomainError& e) {
    g_last_error = e.what();
    return BC_ERR_DOMAIN;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return BC_ERR_INTERNAL;
  }
}

std::vector<Int> parse_csv(const std::string& text) {
  std::vector<Int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw ParseError("empty entry in number list");
    out.push_back(parse_natural(item));
  }
  return out;
}

std::string format_csv(const std::vector<Int>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ',';
    out << values[i];
  }
  return out.str();
}

std::optional<SequenceSpec::Tail> parse_tail(const char* tail) {
  if (tail == nullptr || *tail == '\0') return std::nullopt;
  std::string text(tail);
  std::size_t comma = text.find(',');
  if (comma == std::string::npos)
    throw ParseError("tail must be 'base,ratio'");
  return SequenceSpec::Tail{parse_natural(text.substr(0, comma)),
                            parse_natural(text.substr(comma + 1))};
}

// Splits a concatenated row-major listing into `count` square matrices of
// equal dimension.
std::vector<RatMatrix> parse_matrix_list(const std::string& text,
                                         std::size_t count) {
  std::istringstream in(text);
  std::vector<Rat> entries;
  std::string tok;
  while (in >> tok) {
    try {
      entries.emplace_back(tok);
    } catch (const std::exception&) {
      throw ParseError("bad rational '" + tok + "'");
    }
  }
  if (count == 0 || entries.size() % count != 0)
    throw ParseError("matrix list does not split into the expected count");
  std::size_t per = entries.size() / count;
  std::size_t d = 0;
  while (d * d < per) ++d;
  if (d * d != per)
    throw ParseError("matrix element count is not a perfect square");
  std::vector<RatMatrix> out;
  std::size_t k = 0;
  for (std::size_t m = 0; m < count; ++m) {
    RatMatrix mat(d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) mat.at(r, c) = entries[k++];
    out.push_back(std::move(mat));
  }
  return out;
}

}  // namespace

extern "C" {

const char* bc_last_error(void) { return g_last_error.c_str(); }

void bc_string_free(char* s) { std::free(s); }

bc_status bc_snat_parse(const char* text, bc_snat** out) {
  return wrap([&] { *out = new bc_snat{SupernaturalNumber::parse(text)}; });
}

void bc_snat_free(bc_snat* s) { delete s; }

bc_status bc_snat_format(const bc_snat* s, char** out) {
  return wrap([&] { *out = dup_string(s->value.str()); });
}

bc_status bc_snat_gcd(const bc_snat* a, const bc_snat* b, bc_snat** out) {
  return wrap([&] { *out = new bc_snat{gcd(a->value, b->value)}; });
}

bc_status bc_snat_lcm(const bc_snat* a, const bc_snat* b, bc_snat** out) {
  return wrap([&] { *out = new bc_snat{lcm(a->value, b->value)}; });
}

bc_status bc_snat_divides(const bc_snat* a, const bc_snat* b, int* out) {
  return wrap([&] { *out = divides(a->value, b->value) ? 1 : 0; });
}

bc_status bc_snat_is_completely_infinite(const bc_snat* s, int* out) {
  return wrap([&] { *out = s->value.is_completely_infinite() ? 1 : 0; });
}

bc_status bc_snat_valuation(const bc_snat* s, const char* prime, char** out) {
  return wrap([&] {
    ExtExp v = s->value.valuation(parse_natural(prime));
    *out = dup_string(v.str());
  });
}

bc_status bc_patch_parse(const char* text, bc_patch** out) {
  return wrap([&] { *out = new bc_patch{PatchExpr::parse(text)}; });
}

void bc_patch_free(bc_patch* p) { delete p; }

bc_status bc_patch_format(const bc_patch* p, char** out) {
  return wrap([&] { *out = dup_string(p->value.str()); });
}

bc_status bc_patch_member(const bc_snat* s, const bc_patch* p, int* out) {
  return wrap([&] { *out = member(s->value, p->value) ? 1 : 0; });
}

bc_status bc_trace_witness(const char* base, const bc_patch* p,
                           const char* excluded_csv, char** out) {
  return wrap([&] {
    std::vector<Int> excluded =
        (excluded_csv && *excluded_csv) ? parse_csv(excluded_csv)
                                        : std::vector<Int>{};
    auto w = trace_nonempty_witness(parse_natural(base), p->value, excluded);
    *out = w ? dup_string(w->str()) : nullptr;
  });
}

bc_status bc_cover_check(const char* base, const char* gens_csv,
                         const bc_patch* p, int* out) {
  return wrap([&] {
    Sieve L(parse_natural(base),
            (gens_csv && *gens_csv) ? parse_csv(gens_csv) : std::vector<Int>{});
    *out = is_cover(L, p->value) ? 1 : 0;
  });
}

bc_status bc_cover_subcover(const char* base, const char* gens_csv,
                            const bc_patch* p, char** out_csv) {
  return wrap([&] {
    Sieve L(parse_natural(base),
            (gens_csv && *gens_csv) ? parse_csv(gens_csv) : std::vector<Int>{});
    *out_csv = dup_string(format_csv(finite_subcover(L, p->value)));
  });
}

bc_status bc_point_certificate(const bc_snat* s, const bc_patch* p,
                               char** out) {
  return wrap([&] {
    PointCertificate cert = point_certificate(s->value, p->value);
    if (cert.is_member()) {
      *out = dup_string("member");
    } else {
      const auto& np = cert.non_point();
      *out = dup_string("nonpoint base:" + np.base.str() +
                        " family:" + format_csv(np.family));
    }
  });
}

bc_status bc_triv_zariski(const bc_patch* p, int* out) {
  return wrap([&] { *out = is_trivializing_zariski(p->value) ? 1 : 0; });
}

bc_status bc_poset_embed(const char* poset_text, char** out) {
  return wrap([&] {
    FinitePoset P = FinitePoset::parse(poset_text);
    DivEmbedding E = embed_poset(P);
    std::ostringstream text;
    for (const auto& label : P.elements())
      text << label << ' ' << E.map.at(label) << '\n';
    *out = dup_string(text.str());
  });
}

bc_status bc_poset_verify(const char* poset_text, const char* map_text,
                          int* out) {
  return wrap([&] {
    FinitePoset P = FinitePoset::parse(poset_text);
    DivEmbedding E;
    std::istringstream in(map_text);
    std::string label, value;
    while (in >> label >> value) E.map[label] = parse_natural(value);
    *out = verify_embedding(P, E) ? 1 : 0;
  });
}

bc_status bc_tower_snat(const char* chain_csv, const char* tail, char** out) {
  return wrap([&] {
    SupernaturalNumber s =
        tower_supernatural(parse_csv(chain_csv), parse_tail(tail));
    *out = dup_string(s.str());
  });
}

bc_status bc_pcfb_limit(const char* prefix_csv, const char* tail, char** out) {
  return wrap([&] {
    SequenceSpec seq;
    if (prefix_csv && *prefix_csv) seq.prefix = parse_csv(prefix_csv);
    seq.tail = parse_tail(tail);
    *out = dup_string(pcfb_limit(seq).str());
  });
}

bc_status bc_cofinal_chain(const bc_snat* s, const char* length,
                           char** out_csv) {
  return wrap([&] {
    Int k = parse_natural(length);
    *out_csv = dup_string(
        format_csv(cofinal_chain(s->value, k.convert_to<std::size_t>())));
  });
}

bc_status bc_mat_embed(const char* matrix_text, const char* target,
                       char** out) {
  return wrap([&] {
    RatMatrix x = RatMatrix::parse(matrix_text);
    TowerMatrix t(SlotLayout(Int(x.rows())), std::move(x));
    *out = dup_string(
        standard_embedding(t, parse_natural(target)).entries.str());
  });
}

bc_status bc_mat_trace(const char* matrix_text, char** out) {
  return wrap([&] {
    RatMatrix x = RatMatrix::parse(matrix_text);
    TowerMatrix t(SlotLayout(Int(x.rows())), std::move(x));
    std::ostringstream text;
    text << normalized_trace(t);
    *out = dup_string(text.str());
  });
}

bc_status bc_mat_conj(const char* phi_units, const char* psi_units,
                      const char* source, const char* target, char** out) {
  return wrap([&] {
    Int n = parse_natural(source);
    Int m = parse_natural(target);
    std::size_t dn = SlotLayout(n).dimension();
    MatrixUnitEmbedding phi(n, m, parse_matrix_list(phi_units, dn * dn));
    MatrixUnitEmbedding psi(n, m, parse_matrix_list(psi_units, dn * dn));
    *out = dup_string(skolem_noether_conjugator(phi, psi).matrix().str());
  });
}

bc_status bc_mat_equivn(const char* g_text, const char* h_text,
                        const char* level, int* out) {
  return wrap([&] {
    RatMatrix g = RatMatrix::parse(g_text);
    RatMatrix h = RatMatrix::parse(h_text);
    SlotLayout stage(Int(g.rows()));
    PglElement pg(stage, std::move(g));
    PglElement ph(SlotLayout(Int(h.rows())), std::move(h));
    *out = pgl_equiv_n(pg, ph, parse_natural(level)) ? 1 : 0;
  });
}

bc_status bc_mat_rep(const char* presentation_text,
                     const char* assignment_text, int* out) {
  return wrap([&] {
    AlgebraPresentation R = AlgebraPresentation::parse(presentation_text);
    std::vector<RatMatrix> mats =
        parse_matrix_list(assignment_text, R.generators().size());
    std::map<std::string, TowerMatrix> assignment;
    for (std::size_t i = 0; i < mats.size(); ++i) {
      SlotLayout stage{Int(mats[i].rows())};
      assignment.emplace(R.generators()[i],
                         TowerMatrix(std::move(stage), std::move(mats[i])));
    }
    *out = check_representation(R, assignment) ? 1 : 0;
  });
}

bc_status bc_naive_cover(const char* base, const char* gens_csv,
                         const bc_patch* p, const char* universe_primes_csv,
                         const char* max_exp, int* out) {
  return wrap([&] {
    BoundedUniverse U(parse_csv(universe_primes_csv),
                      parse_natural(max_exp));
    PatchExpr S = p->value;
    std::vector<Int> gens =
        (gens_csv && *gens_csv) ? parse_csv(gens_csv) : std::vector<Int>{};
    *out = naive_cover(parse_natural(base), gens,
                       [S](const SupernaturalNumber& s) { return member(s, S); },
                       U)
               ? 1
               : 0;
  });
}

bc_status bc_truncate(const char* degrees_csv, const bc_snat* s,
                      char** out_csv) {
  return wrap([&] {
    std::vector<ComponentAlgebra::Component> cs;
    if (degrees_csv && *degrees_csv)
      for (Int& d : parse_csv(degrees_csv))
        cs.push_back({std::move(d), std::string{}});
    ComponentAlgebra kept = truncate(ComponentAlgebra(std::move(cs)), s->value);
    std::vector<Int> degrees;
    for (const auto& c : kept.components) degrees.push_back(c.degree);
    *out_csv = dup_string(format_csv(degrees));
  });
}

}  // extern "C"
