#include "oracle.hpp"

#include <algorithm>
#include <sstream>

namespace caclab {

namespace {

ElemSet below_bound(std::span<const Elem> oracle, std::uint32_t u) {
  ElemSet out;
  for (Elem x : oracle)
    if (x < u) out.push_back(x);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

OracleMachine OracleMachine::constant_one(std::uint32_t u) {
  return OracleMachine(u, BuiltinImpl{Builtin::ConstantOne, 0, {}});
}
OracleMachine OracleMachine::membership(std::uint32_t u) {
  return OracleMachine(u, BuiltinImpl{Builtin::Membership, 0, {}});
}
OracleMachine OracleMachine::parity(std::uint32_t u) {
  return OracleMachine(u, BuiltinImpl{Builtin::Parity, 0, {}});
}
OracleMachine OracleMachine::threshold(std::uint32_t k, std::uint32_t u) {
  return OracleMachine(u, BuiltinImpl{Builtin::Threshold, k, {}});
}
OracleMachine OracleMachine::char_of(ElemSet members, std::uint32_t u) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return OracleMachine(u, BuiltinImpl{Builtin::CharOf, 0, std::move(members)});
}

Result<OracleMachine> OracleMachine::from_table(std::uint32_t use_bound,
                                                std::vector<TableEntry> entries) {
  Table table;
  for (auto& e : entries) {
    std::sort(e.oracle.begin(), e.oracle.end());
    e.oracle.erase(std::unique(e.oracle.begin(), e.oracle.end()), e.oracle.end());
    for (Elem m : e.oracle)
      if (m >= use_bound)
        return make_error(Errc::UseConsistencyViolation, {e.input, m},
                          "table entry names an oracle member at or beyond the use bound");
    if (e.output != 0 && e.output != 1)
      return make_error(Errc::UseConsistencyViolation, {e.input},
                        "table output is not 0 or 1");
    auto key = std::pair{e.input, e.oracle};
    auto [it, inserted] = table.emplace(key, e.output);
    if (!inserted && it->second != e.output)
      return make_error(Errc::UseConsistencyViolation, {e.input},
                        "conflicting outputs for one (input, oracle) key");
  }
  return OracleMachine(use_bound, std::move(table));
}

bool OracleMachine::is_builtin() const {
  return std::holds_alternative<BuiltinImpl>(impl_);
}

std::vector<OracleMachine::TableEntry> OracleMachine::table_entries() const {
  std::vector<TableEntry> out;
  if (const auto* t = std::get_if<Table>(&impl_))
    for (const auto& [key, output] : *t)
      out.push_back({key.first, key.second, output});
  return out;
}

std::string OracleMachine::spec_string() const {
  if (const auto* b = std::get_if<BuiltinImpl>(&impl_)) {
    switch (b->kind) {
      case Builtin::ConstantOne: return "constant-1";
      case Builtin::Membership: return "membership";
      case Builtin::Parity: return "parity-of-element-count";
      case Builtin::Threshold: return "threshold-" + std::to_string(b->k);
      case Builtin::CharOf: {
        std::ostringstream os;
        os << "membership-of-{";
        for (std::size_t i = 0; i < b->members.size(); ++i)
          os << (i ? "," : "") << b->members[i];
        os << "}";
        return os.str();
      }
    }
  }
  return "table";
}

bool OracleMachine::operator==(const OracleMachine& o) const {
  if (use_bound_ != o.use_bound_) return false;
  if (impl_.index() != o.impl_.index()) return false;
  if (const auto* t = std::get_if<Table>(&impl_))
    return *t == std::get<Table>(o.impl_);
  const auto& a = std::get<BuiltinImpl>(impl_);
  const auto& b = std::get<BuiltinImpl>(o.impl_);
  return a.kind == b.kind && a.k == b.k && a.members == b.members;
}

EvalOutcome evaluate(const OracleMachine& m, std::span<const Elem> oracle,
                     Elem w) {
  ElemSet restricted = below_bound(oracle, m.use_bound_);
  if (const auto* b = std::get_if<OracleMachine::BuiltinImpl>(&m.impl_)) {
    if (w >= m.use_bound_) return EvalOutcome::Diverge;
    switch (b->kind) {
      case OracleMachine::Builtin::ConstantOne:
        return EvalOutcome::One;
      case OracleMachine::Builtin::Membership:
        return std::binary_search(restricted.begin(), restricted.end(), w)
                   ? EvalOutcome::One
                   : EvalOutcome::Zero;
      case OracleMachine::Builtin::Parity:
        return (restricted.size() % 2 == 1) ? EvalOutcome::One
                                            : EvalOutcome::Zero;
      case OracleMachine::Builtin::Threshold:
        return restricted.size() >= b->k ? EvalOutcome::One : EvalOutcome::Zero;
      case OracleMachine::Builtin::CharOf:
        return std::binary_search(b->members.begin(), b->members.end(), w)
                   ? EvalOutcome::One
                   : EvalOutcome::Zero;
    }
  }
  const auto& table = std::get<OracleMachine::Table>(m.impl_);
  auto it = table.find(std::pair{w, restricted});
  if (it == table.end()) return EvalOutcome::Diverge;
  return it->second ? EvalOutcome::One : EvalOutcome::Zero;
}

ElemSet defined_set(const OracleMachine& m, std::span<const Elem> oracle,
                    Elem w_cap, std::optional<Elem>* first_divergence) {
  ElemSet out;
  if (first_divergence) first_divergence->reset();
  for (Elem w = 0; w < w_cap; ++w) {
    switch (evaluate(m, oracle, w)) {
      case EvalOutcome::One: out.push_back(w); break;
      case EvalOutcome::Zero: break;
      case EvalOutcome::Diverge:
        if (first_divergence && !first_divergence->has_value())
          *first_divergence = w;
        break;
    }
  }
  return out;
}

Result<OracleMachine> machine_from_spec(const std::string& spec,
                                        std::uint32_t use_bound) {
  if (spec == "constant-1") return OracleMachine::constant_one(use_bound);
  if (spec == "membership") return OracleMachine::membership(use_bound);
  if (spec == "parity-of-element-count" || spec == "parity")
    return OracleMachine::parity(use_bound);
  if (spec.rfind("threshold-", 0) == 0) {
    const std::string num = spec.substr(10);
    if (!num.empty() && num.size() <= 9 &&
        std::all_of(num.begin(), num.end(), ::isdigit))
      return OracleMachine::threshold(
          static_cast<std::uint32_t>(std::stoul(num)), use_bound);
  }
  if (spec.rfind("membership-of-", 0) == 0) {
    std::string body = spec.substr(14);
    if (body.size() >= 2 && body.front() == '{' && body.back() == '}')
      body = body.substr(1, body.size() - 2);
    ElemSet members;
    std::istringstream is(body);
    std::string tok;
    bool ok = true;
    while (std::getline(is, tok, ',')) {
      if (tok.empty() || tok.size() > 18 ||
          !std::all_of(tok.begin(), tok.end(), ::isdigit)) {
        ok = false;
        break;
      }
      members.push_back(std::stoull(tok));
    }
    if (ok) return OracleMachine::char_of(std::move(members), use_bound);
  }
  return make_error(Errc::UnknownSpec, {}, "unknown machine spec: " + spec);
}

Result<std::vector<OracleMachine>> machine_family(
    std::span<const std::string> specs, std::uint32_t use_bound) {
  std::vector<OracleMachine> out;
  for (const auto& s : specs) {
    auto m = machine_from_spec(s, use_bound);
    if (!m.ok()) return m.error();
    out.push_back(std::move(m).value());
  }
  return out;
}

OracleMachine tabulate_functional(
    const std::function<std::optional<int>(const ElemSet&, Elem)>& fn,
    std::span<const ElemSet> oracles, Elem w_cap, std::uint32_t use_bound) {
  std::vector<OracleMachine::TableEntry> entries;
  for (const ElemSet& oracle : oracles) {
    ElemSet key = below_bound(oracle, use_bound);
    for (Elem w = 0; w < w_cap; ++w)
      if (auto out = fn(key, w))
        entries.push_back({w, key, *out});
  }
  auto r = OracleMachine::from_table(use_bound, std::move(entries));
  return std::move(r).value();  // keys were restricted below the bound
}

}  // namespace caclab
