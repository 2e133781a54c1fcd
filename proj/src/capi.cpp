#include "caclab/caclab.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "errors.hpp"
#include "forcing.hpp"
#include "game.hpp"
#include "generate.hpp"
#include "json_io.hpp"
#include "poset.hpp"
#include "problems.hpp"
#include "reductions.hpp"
#include "tree.hpp"

using namespace caclab;

struct caclab_poset {
  FinitePoset poset;
};

namespace {

thread_local std::string g_last_error;

void clear_error() { g_last_error.clear(); }

caclab_status fail(caclab_status st, const std::string& msg) {
  g_last_error = msg;
  return st;
}

caclab_status fail(const Error& e, caclab_status st = CACLAB_BAD_INPUT) {
  g_last_error = io::error_to_json(e);
  return st;
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

caclab_status emit(const std::string& s, char** out) {
  if (!out) return fail(CACLAB_BAD_INPUT, "output pointer is null");
  *out = copy_out(s);
  return CACLAB_OK;
}

Result<ProblemKind> parse_kind(const char* kind) {
  if (kind)
    if (auto k = problem_kind_from_name(kind)) return *k;
  return make_error(Errc::ParseError, {},
                    std::string("unknown problem kind: ") + (kind ? kind : ""));
}

SizePolicy resolve_policy(int64_t min_size,
                          const std::optional<SizePolicy>& from_file) {
  SizePolicy policy = from_file.value_or(SizePolicy{});
  if (min_size >= 1) policy.min_size = static_cast<std::uint64_t>(min_size);
  return policy;
}

template <typename Fn>
caclab_status guarded(Fn&& fn) {
  clear_error();
  try {
    return fn();
  } catch (const std::exception& e) {
    return fail(CACLAB_BAD_INPUT, e.what());
  } catch (...) {
    return fail(CACLAB_BAD_INPUT, "unknown failure");
  }
}

}  // namespace

extern "C" {

const char* caclab_version(void) { return "0.1.0"; }

const char* caclab_last_error(void) { return g_last_error.c_str(); }

void caclab_string_free(char* s) { std::free(s); }

caclab_status caclab_poset_parse(const char* json, caclab_poset** out) {
  return guarded([&]() -> caclab_status {
    if (!json || !out) return fail(CACLAB_BAD_INPUT, "null argument");
    auto loaded = io::poset_from_json(json);
    if (!loaded.ok()) return fail(loaded.error());
    *out = new caclab_poset{std::move(loaded).value().poset};
    return CACLAB_OK;
  });
}

void caclab_poset_free(caclab_poset* p) { delete p; }

caclab_status caclab_poset_to_json(const caclab_poset* p, char** out_json) {
  return guarded([&]() -> caclab_status {
    if (!p) return fail(CACLAB_BAD_INPUT, "null poset");
    return emit(io::poset_to_json(p->poset), out_json);
  });
}

caclab_status caclab_poset_to_dot(const caclab_poset* p, char** out_dot) {
  return guarded([&]() -> caclab_status {
    if (!p) return fail(CACLAB_BAD_INPUT, "null poset");
    return emit(io::poset_to_dot(p->poset), out_dot);
  });
}

size_t caclab_poset_size(const caclab_poset* p) {
  return p ? p->poset.size() : 0;
}

int caclab_poset_leq(const caclab_poset* p, uint64_t x, uint64_t y) {
  if (!p || !p->poset.contains(x) || !p->poset.contains(y)) return -1;
  return p->poset.leq(x, y) ? 1 : 0;
}

int caclab_poset_is_omega_ordered(const caclab_poset* p) {
  return p && is_omega_ordered(p->poset) ? 1 : 0;
}

int caclab_poset_is_chain(const caclab_poset* p, const uint64_t* xs, size_t n) {
  if (!p) return -1;
  auto r = is_chain(p->poset, std::span(xs, n));
  if (!r.ok()) return -1;
  return r.value() ? 1 : 0;
}

int caclab_poset_is_antichain(const caclab_poset* p, const uint64_t* xs,
                              size_t n) {
  if (!p) return -1;
  auto r = is_antichain(p->poset, std::span(xs, n));
  if (!r.ok()) return -1;
  return r.value() ? 1 : 0;
}

caclab_status caclab_poset_dual(const caclab_poset* p, caclab_poset** out) {
  return guarded([&]() -> caclab_status {
    if (!p || !out) return fail(CACLAB_BAD_INPUT, "null argument");
    *out = new caclab_poset{dual_order(p->poset)};
    return CACLAB_OK;
  });
}

caclab_status caclab_poset_restrict(const caclab_poset* p, const uint64_t* xs,
                                    size_t n, caclab_poset** out) {
  return guarded([&]() -> caclab_status {
    if (!p || !out) return fail(CACLAB_BAD_INPUT, "null argument");
    auto r = restrict_to(p->poset, std::span(xs, n));
    if (!r.ok()) return fail(r.error());
    *out = new caclab_poset{std::move(r).value()};
    return CACLAB_OK;
  });
}

caclab_status caclab_gen(const char* kind, uint64_t size, uint64_t seed,
                         int64_t min_size, char** out_json) {
  return guarded([&]() -> caclab_status {
    auto k = parse_kind(kind);
    if (!k.ok()) return fail(k.error());
    auto inst = generate_instance(k.value(), size, seed);
    if (!inst.ok()) return fail(inst.error());
    SizePolicy policy = resolve_policy(min_size, std::nullopt);
    return emit(io::instance_to_json(inst.value(), false, policy), out_json);
  });
}

caclab_status caclab_check_instance(const char* kind, const char* instance_json,
                                    int64_t min_size, char** report_json) {
  return guarded([&]() -> caclab_status {
    auto k = parse_kind(kind);
    if (!k.ok()) return fail(k.error());
    if (!instance_json) return fail(CACLAB_BAD_INPUT, "null instance");
    auto loaded = io::instance_from_json(instance_json);
    if (!loaded.ok()) return fail(loaded.error());
    SizePolicy policy = resolve_policy(min_size, loaded.value().policy);
    Verdict v = validate_instance(k.value(), loaded.value().instance, policy);
    caclab_status st = emit(io::verdict_to_json(v), report_json);
    if (st != CACLAB_OK) return st;
    if (!v.ok()) {
      g_last_error = io::error_to_json(v.error());
      return CACLAB_VERIFY_FAIL;
    }
    return CACLAB_OK;
  });
}

caclab_status caclab_check_solution(const char* kind, const char* instance_json,
                                    const char* solution_json, int64_t min_size,
                                    char** report_json) {
  return guarded([&]() -> caclab_status {
    auto k = parse_kind(kind);
    if (!k.ok()) return fail(k.error());
    if (!instance_json || !solution_json)
      return fail(CACLAB_BAD_INPUT, "null input");
    auto loaded = io::instance_from_json(instance_json);
    if (!loaded.ok()) return fail(loaded.error());
    auto sol = io::solution_from_json(solution_json);
    if (!sol.ok()) return fail(sol.error());
    SizePolicy policy = resolve_policy(min_size, loaded.value().policy);
    if (Verdict vi = validate_instance(k.value(), loaded.value().instance, policy);
        !vi.ok())
      return fail(vi.error());
    Verdict v = verify_solution(k.value(), loaded.value().instance, sol.value(),
                                policy);
    caclab_status st = emit(io::verdict_to_json(v), report_json);
    if (st != CACLAB_OK) return st;
    if (!v.ok()) {
      g_last_error = io::error_to_json(v.error());
      return CACLAB_VERIFY_FAIL;
    }
    return CACLAB_OK;
  });
}

caclab_status caclab_solve(const char* kind, const char* instance_json,
                           int64_t min_size, char** solution_json) {
  return guarded([&]() -> caclab_status {
    auto k = parse_kind(kind);
    if (!k.ok()) return fail(k.error());
    if (!instance_json) return fail(CACLAB_BAD_INPUT, "null instance");
    auto loaded = io::instance_from_json(instance_json);
    if (!loaded.ok()) return fail(loaded.error());
    SizePolicy policy = resolve_policy(min_size, loaded.value().policy);
    if (Verdict vi = validate_instance(k.value(), loaded.value().instance, policy);
        !vi.ok())
      return fail(vi.error());
    auto sol = brute_force_solve(k.value(), loaded.value().instance, policy);
    if (!sol.ok()) return fail(sol.error(), CACLAB_VERIFY_FAIL);
    return emit(io::solution_to_json(sol.value()), solution_json);
  });
}

caclab_status caclab_reduce(const char* op, const char* instance_json,
                            int64_t min_size, int with_trace, int64_t start,
                            char** out_json) {
  return guarded([&]() -> caclab_status {
    if (!op || !instance_json) return fail(CACLAB_BAD_INPUT, "null input");
    auto loaded = io::instance_from_json(instance_json);
    if (!loaded.ok()) return fail(loaded.error());
    ProblemInstance& inst = loaded.value().instance;
    SizePolicy policy = resolve_policy(min_size, loaded.value().policy);
    const std::string opname = op;

    if (opname == "split-plus" || opname == "split-minus") {
      FinitePoset out = opname == "split-plus" ? split_plus(inst.poset)
                                               : split_minus(inst.poset);
      return emit(io::poset_to_json(out), out_json);
    }
    if (opname == "compose") {
      OmegaSolver solver = [](const FinitePoset& p, const SizePolicy& pol) {
        return brute_force_solve(ProblemKind::OmegaCac,
                                 ProblemInstance{p, std::nullopt, std::nullopt},
                                 pol);
      };
      auto sol = compose_cac_via_omega(inst.poset, solver, policy);
      if (!sol.ok()) return fail(sol.error(), CACLAB_VERIFY_FAIL);
      return emit(io::solution_to_json(sol.value()), out_json);
    }
    if (opname == "thin") {
      if (!inst.annotation)
        return fail(CACLAB_BAD_INPUT, "thin needs a stable annotated instance");
      StableType type = inst.annotation->type_tag();
      FinitePoset q = build_leq_q(inst.poset, type);
      auto x = brute_force_solve(ProblemKind::OmegaScac,
                                 ProblemInstance{q, std::nullopt, std::nullopt},
                                 policy);
      if (!x.ok()) return fail(x.error(), CACLAB_VERIFY_FAIL);
      auto thinned = stable_thinning(inst.poset, type, x.value(), policy);
      if (!thinned.ok()) return fail(thinned.error(), CACLAB_VERIFY_FAIL);
      return emit(io::thinning_to_json(thinned.value().first,
                                       thinned.value().second, with_trace != 0),
                  out_json);
    }
    if (opname == "greedy-chain") {
      if (inst.poset.size() == 0)
        return fail(CACLAB_BAD_INPUT, "greedy-chain needs a nonempty poset");
      Elem from = start >= 0 ? static_cast<Elem>(start)
                             : inst.poset.universe().front();
      auto sol = greedy_chain(inst.poset, from);
      if (!sol.ok()) return fail(sol.error());
      return emit(io::solution_to_json(sol.value()), out_json);
    }
    if (opname == "greedy-antichain") {
      auto sol = greedy_antichain(inst.poset);
      if (!sol.ok()) return fail(sol.error());
      return emit(io::solution_to_json(sol.value()), out_json);
    }
    if (opname == "dualize") {
      if (!inst.annotation) {
        return emit(io::poset_to_json(dual_order(inst.poset)), out_json);
      }
      auto out = to_small_type(inst);
      if (!out.ok()) return fail(out.error());
      return emit(io::instance_to_json(out.value(), false, policy), out_json);
    }
    if (opname == "append-type") {
      auto out = append_type_flag(inst);
      if (!out.ok()) return fail(out.error());
      return emit(io::instance_to_json(out.value(), false, policy), out_json);
    }
    return fail(CACLAB_BAD_INPUT, std::string("unknown reduce op: ") + opname);
  });
}

caclab_status caclab_play_game(const char* p_kind, const char* q_kind,
                               const char* strategy, const char* machine_json,
                               const char* instance_json, uint32_t max_rounds,
                               int64_t min_size, char** transcript_json) {
  return guarded([&]() -> caclab_status {
    auto pk = parse_kind(p_kind);
    if (!pk.ok()) return fail(pk.error());
    auto qk = parse_kind(q_kind);
    if (!qk.ok()) return fail(qk.error());
    if (!instance_json || !strategy) return fail(CACLAB_BAD_INPUT, "null input");
    auto loaded = io::instance_from_json(instance_json);
    if (!loaded.ok()) return fail(loaded.error());
    SizePolicy policy = resolve_policy(min_size, loaded.value().policy);
    if (Verdict vi =
            validate_instance(pk.value(), loaded.value().instance, policy);
        !vi.ok())
      return fail(vi.error());

    BruteForceAdversary adversary(loaded.value().instance.poset, policy);
    std::unique_ptr<PlayerTwoStrategy> two;
    const std::string strat = strategy;
    if (strat == "builtin-cac") {
      two = std::make_unique<CacViaOmegaStrategy>(policy);
    } else if (strat == "file") {
      if (!machine_json)
        return fail(CACLAB_BAD_INPUT, "strategy \"file\" needs a machine");
      auto m = io::machine_from_json(machine_json);
      if (!m.ok()) return fail(m.error());
      Elem cap = m.value().use_bound();
      two = std::make_unique<MachineStrategy>(std::move(m).value(), cap);
    } else {
      return fail(CACLAB_BAD_INPUT, "strategy must be builtin-cac or file");
    }

    GameTranscript t = play_reduction_game(pk.value(), qk.value(), adversary,
                                           *two, max_rounds, policy);
    caclab_status st = emit(io::transcript_to_json(t), transcript_json);
    if (st != CACLAB_OK) return st;
    return t.verdict.kind == GameVerdict::Kind::TwoWins ? CACLAB_OK
                                                        : CACLAB_VERIFY_FAIL;
  });
}

caclab_status caclab_force(const char* machines_json, uint32_t stages,
                           const char* side, const char* p0_json,
                           char** out_json) {
  return guarded([&]() -> caclab_status {
    if (!machines_json || !side) return fail(CACLAB_BAD_INPUT, "null input");
    auto machines = io::machines_from_json(machines_json);
    if (!machines.ok()) return fail(machines.error());
    const std::string side_name = side;
    if (side_name != "small" && side_name != "large")
      return fail(CACLAB_BAD_INPUT, "side must be small or large");
    Side s = side_name == "small" ? Side::Small : Side::Large;

    Condition p0 = Condition::empty();
    if (p0_json) {
      auto c = io::condition_from_json(p0_json);
      if (!c.ok()) return fail(c.error());
      p0 = std::move(c).value();
    }
    auto result = build_diagonal_poset(p0, machines.value(), stages, s);
    if (!result.ok()) return fail(result.error());
    return emit(io::diagonal_to_json(result.value()), out_json);
  });
}

caclab_status caclab_check_condition(const char* condition_json,
                                     int strict_isolated, char** report_json) {
  return guarded([&]() -> caclab_status {
    if (!condition_json) return fail(CACLAB_BAD_INPUT, "null input");
    IsolatedReading reading = strict_isolated ? IsolatedReading::IncludeSelf
                                              : IsolatedReading::ExcludeSelf;
    auto c = io::condition_from_json(condition_json, reading);
    Verdict v = c.ok() ? Verdict::accept() : Verdict::reject(c.error());
    if (!c.ok() && c.error().code == Errc::ParseError) return fail(c.error());
    caclab_status st = emit(io::verdict_to_json(v), report_json);
    if (st != CACLAB_OK) return st;
    if (!v.ok()) {
      g_last_error = io::error_to_json(v.error());
      return CACLAB_VERIFY_FAIL;
    }
    return CACLAB_OK;
  });
}

caclab_status caclab_mind_change(const char* condition_json,
                                 char** out_condition_json) {
  return guarded([&]() -> caclab_status {
    if (!condition_json) return fail(CACLAB_BAD_INPUT, "null input");
    auto c = io::condition_from_json(condition_json);
    if (!c.ok()) return fail(c.error());
    auto q = mind_change(c.value());
    if (!q.ok()) return fail(q.error(), CACLAB_VERIFY_FAIL);
    return emit(io::condition_to_json(q.value()), out_condition_json);
  });
}

caclab_status caclab_build_tree(const char* e_csv, const char* i_csv,
                                const char* machine_json, uint64_t n,
                                uint64_t w_max, uint64_t kappa,
                                const char* format, char** out) {
  return guarded([&]() -> caclab_status {
    if (!machine_json || !format) return fail(CACLAB_BAD_INPUT, "null input");
    auto parse_csv = [](const char* csv) -> Result<ElemSet> {
      ElemSet xs;
      if (!csv) return xs;
      std::istringstream is(csv);
      std::string tok;
      while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        if (tok.size() > 18)
          return make_error(Errc::ParseError, {}, "element out of range");
        for (char ch : tok)
          if (!isdigit(static_cast<unsigned char>(ch)))
            return make_error(Errc::ParseError, {},
                              "element lists must be comma-separated naturals");
        xs.push_back(std::stoull(tok));
      }
      return xs;
    };
    auto e_set = parse_csv(e_csv);
    if (!e_set.ok()) return fail(e_set.error());
    auto i_set = parse_csv(i_csv);
    if (!i_set.ok()) return fail(i_set.error());
    auto m = io::machine_from_json(machine_json);
    if (!m.ok()) return fail(m.error());
    if (i_set.value().size() > 16)
      return fail(CACLAB_BAD_INPUT, "reservoir I is limited to 16 elements");

    Elem cap = w_max > 0 ? w_max : m.value().use_bound();
    ExtensionTree t = ExtensionTree::build(e_set.value(), i_set.value(),
                                           std::move(m).value(), n, cap);
    Labeling lb = label_tree(t, kappa > 0 ? kappa : 2);
    LabeledSubtree sub = labeled_subtree(t, lb);
    const std::string fmt = format;
    if (fmt == "dot") return emit(io::tree_to_dot(t, lb, sub), out);
    if (fmt == "json") return emit(io::tree_to_json(t, lb, sub), out);
    return fail(CACLAB_BAD_INPUT, "format must be json or dot");
  });
}

}  // extern "C"
