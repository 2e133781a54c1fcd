// caclab command line: thin shuttle between files and the C API.
#include <utility>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "caclab/caclab.h"

namespace {

int report_failure(caclab_status st) {
  std::string msg = caclab_last_error();
  if (msg.empty()) msg = "{\n  \"error\": \"UnknownFailure\"\n}\n";
  if (msg.front() != '{')
    msg = std::string("{\n  \"error\": \"CliError\",\n  \"detail\": \"") + msg +
          "\"\n}\n";
  std::cerr << msg;
  return static_cast<int>(st);
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int write_output(const std::string& out_path, char* text) {
  std::string body = text ? text : "";
  caclab_string_free(text);
  if (out_path.empty()) {
    std::cout << body;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "{\n  \"error\": \"CliError\",\n  \"detail\": \"cannot write "
              << out_path << "\"\n}\n";
    return 2;
  }
  out << body;
  return 0;
}

uint64_t default_seed() {
  if (const char* env = std::getenv("CACLAB_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 0;
}

std::optional<std::string> slurp_or_fail(const std::string& path, int& rc) {
  auto text = read_file(path);
  if (!text) {
    std::cerr << "{\n  \"error\": \"CliError\",\n  \"detail\": \"cannot read "
              << path << "\"\n}\n";
    rc = 2;
  }
  return text;
}

// Re-reads the poset part of a document through a handle and exports DOT.
caclab_status poset_json_to_dot(char* doc, char** dot) {
  caclab_poset* handle = nullptr;
  caclab_status st = caclab_poset_parse(doc, &handle);
  caclab_string_free(doc);
  if (st != CACLAB_OK) return st;
  st = caclab_poset_to_dot(handle, dot);
  caclab_poset_free(handle);
  return st;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"caclab: chain/antichain problems over finite posets"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "generate a random instance");
  std::string gen_kind = "CAC", gen_out, gen_format = "json";
  uint64_t gen_size = 8;
  uint64_t gen_seed = default_seed();
  int64_t gen_min = -1;
  gen->add_option("--kind", gen_kind, "problem kind");
  gen->add_option("--size", gen_size, "universe size");
  gen->add_option("--seed", gen_seed, "generator seed (or CACLAB_SEED)");
  gen->add_option("--min-size", gen_min, "policy written into the file");
  gen->add_option("--format", gen_format, "json, or dot for the poset part");
  gen->add_option("--out", gen_out, "output path (stdout when absent)");

  auto* check = app.add_subcommand("check", "validate instances and solutions");
  std::string check_kind = "CAC", check_in, check_out;
  std::string check_solution, check_condition;
  bool strict_isolated = false;
  int64_t check_min = -1;
  check->add_option("--kind", check_kind, "problem kind");
  check->add_option("--in", check_in, "instance file");
  check->add_option("--solution", check_solution, "solution file to verify");
  check->add_option("--condition", check_condition, "forcing condition file");
  check->add_flag("--strict-isolated", strict_isolated,
                  "read the isolated bullet over the reflexive pair too");
  check->add_option("--min-size", check_min, "solution size floor");
  check->add_option("--out", check_out, "verdict path");

  auto* reduce = app.add_subcommand("reduce", "run a reduction construction");
  std::string reduce_op, reduce_in, reduce_out;
  bool reduce_trace = false;
  int64_t reduce_start = -1, reduce_min = -1;
  reduce
      ->add_option("--op", reduce_op,
                   "split-plus|split-minus|compose|thin|greedy-chain|"
                   "greedy-antichain|dualize|append-type")
      ->required();
  reduce->add_option("--in", reduce_in, "instance file")->required();
  reduce->add_flag("--trace", reduce_trace, "emit thinning stages");
  reduce->add_option("--start", reduce_start, "greedy-chain start element");
  reduce->add_option("--min-size", reduce_min, "solution size floor");
  std::string reduce_format = "json";
  reduce->add_option("--format", reduce_format,
                     "json, or dot for poset-valued ops");
  reduce->add_option("--out", reduce_out, "output path");

  auto* game = app.add_subcommand("game", "play a reduction game");
  std::string p_kind = "CAC", q_kind = "OMEGA_CAC", strategy = "builtin-cac";
  std::string game_machine, game_in, game_out;
  uint32_t max_rounds = 8;
  int64_t game_min = -1;
  game->add_option("--p-kind", p_kind, "Player I problem");
  game->add_option("--q-kind", q_kind, "Player II problem");
  game->add_option("--strategy", strategy, "builtin-cac or file");
  game->add_option("--machine", game_machine, "strategy machine file");
  game->add_option("--max-rounds", max_rounds, "round budget");
  game->add_option("--in", game_in, "opening instance file")->required();
  game->add_option("--min-size", game_min, "solution size floor");
  game->add_option("--out", game_out, "transcript path");

  auto* force = app.add_subcommand("force", "forcing constructions");
  std::string machines_path, side = "small", p0_path, force_out;
  uint32_t stages = 12;
  bool do_mind_change = false;
  force->add_option("--machines", machines_path, "machine family file");
  force->add_option("--stages", stages, "construction stages");
  force->add_option("--side", side, "small or large");
  force->add_option("--p0", p0_path, "starting condition file");
  force->add_flag("--mind-change", do_mind_change,
                  "apply the side-switch transform to --p0 and exit");
  force->add_option("--log", force_out, "output path");
  force->add_option("--out", force_out, "output path (alias of --log)");

  auto* tree = app.add_subcommand("tree", "extension trees and labelings");
  std::string e_csv, i_csv, tree_machine, tree_format = "json", tree_out;
  uint64_t tree_n = 0, w_max = 0, kappa = 2;
  tree->add_option("--E", e_csv, "E as comma-separated naturals");
  tree->add_option("--I", i_csv, "reservoir I as comma-separated naturals");
  tree->add_option("--machine", tree_machine, "functional file")->required();
  tree->add_option("--n", tree_n, "least probed input");
  tree->add_option("--w-max", w_max, "input cap (machine use bound when 0)");
  tree->add_option("--kappa", kappa, "finite stand-in for infinitely many");
  tree->add_option("--format", tree_format, "json or dot");
  tree->add_option("--out", tree_out, "output path");

  CLI11_PARSE(app, argc, argv);
  int rc = 0;

  if (gen->parsed()) {
    char* out = nullptr;
    caclab_status st =
        caclab_gen(gen_kind.c_str(), gen_size, gen_seed, gen_min, &out);
    if (st == CACLAB_OK && gen_format == "dot")
      st = poset_json_to_dot(std::exchange(out, nullptr), &out);
    if (st != CACLAB_OK) return report_failure(st);
    return write_output(gen_out, out);
  }

  if (check->parsed()) {
    char* out = nullptr;
    caclab_status st = CACLAB_BAD_INPUT;
    if (!check_condition.empty()) {
      auto text = slurp_or_fail(check_condition, rc);
      if (!text) return rc;
      st = caclab_check_condition(text->c_str(), strict_isolated ? 1 : 0, &out);
    } else {
      auto inst = slurp_or_fail(check_in, rc);
      if (!inst) return rc;
      if (check_solution.empty()) {
        st = caclab_check_instance(check_kind.c_str(), inst->c_str(), check_min,
                                   &out);
      } else {
        auto sol = slurp_or_fail(check_solution, rc);
        if (!sol) return rc;
        st = caclab_check_solution(check_kind.c_str(), inst->c_str(),
                                   sol->c_str(), check_min, &out);
      }
    }
    if (st == CACLAB_BAD_INPUT) return report_failure(st);
    rc = write_output(check_out, out);
    return rc != 0 ? rc : static_cast<int>(st);
  }

  if (reduce->parsed()) {
    auto inst = slurp_or_fail(reduce_in, rc);
    if (!inst) return rc;
    char* out = nullptr;
    caclab_status st = caclab_reduce(reduce_op.c_str(), inst->c_str(), reduce_min,
                                     reduce_trace ? 1 : 0, reduce_start, &out);
    bool poset_valued = reduce_op == "split-plus" || reduce_op == "split-minus" ||
                        reduce_op == "dualize";
    if (st == CACLAB_OK && reduce_format == "dot" && poset_valued)
      st = poset_json_to_dot(std::exchange(out, nullptr), &out);
    if (st != CACLAB_OK) return report_failure(st);
    return write_output(reduce_out, out);
  }

  if (game->parsed()) {
    auto inst = slurp_or_fail(game_in, rc);
    if (!inst) return rc;
    std::optional<std::string> machine_text;
    if (!game_machine.empty()) {
      machine_text = slurp_or_fail(game_machine, rc);
      if (!machine_text) return rc;
    }
    char* out = nullptr;
    caclab_status st = caclab_play_game(
        p_kind.c_str(), q_kind.c_str(), strategy.c_str(),
        machine_text ? machine_text->c_str() : nullptr, inst->c_str(),
        max_rounds, game_min, &out);
    if (st == CACLAB_BAD_INPUT) return report_failure(st);
    rc = write_output(game_out, out);
    return rc != 0 ? rc : static_cast<int>(st);
  }

  if (force->parsed()) {
    std::optional<std::string> p0_text;
    if (!p0_path.empty()) {
      p0_text = slurp_or_fail(p0_path, rc);
      if (!p0_text) return rc;
    }
    char* out = nullptr;
    caclab_status st;
    if (do_mind_change) {
      if (!p0_text) {
        std::cerr << "{\n  \"error\": \"CliError\",\n  \"detail\": "
                     "\"--mind-change needs --p0\"\n}\n";
        return 2;
      }
      st = caclab_mind_change(p0_text->c_str(), &out);
    } else {
      auto machines = slurp_or_fail(machines_path, rc);
      if (!machines) return rc;
      st = caclab_force(machines->c_str(), stages, side.c_str(),
                        p0_text ? p0_text->c_str() : nullptr, &out);
    }
    if (st != CACLAB_OK) return report_failure(st);
    return write_output(force_out, out);
  }

  if (tree->parsed()) {
    auto machine = slurp_or_fail(tree_machine, rc);
    if (!machine) return rc;
    char* out = nullptr;
    caclab_status st =
        caclab_build_tree(e_csv.c_str(), i_csv.c_str(), machine->c_str(),
                          tree_n, w_max, kappa, tree_format.c_str(), &out);
    if (st != CACLAB_OK) return report_failure(st);
    return write_output(tree_out, out);
  }

  return 0;
}
