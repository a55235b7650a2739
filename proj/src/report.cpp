#include "blowup/report.hpp"

#include <sstream>

#include "json.hpp"

namespace blowup {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json opt_int(const std::optional<int>& v) {
  if (v) return *v;
  return nullptr;
}

std::optional<int> read_opt_int(const ordered_json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<int>();
}

ordered_json to_json(const InvariantSummary& s) {
  ordered_json j;
  j["dim"] = s.dim;
  j["depth_R"] = s.depth_R;
  j["g"] = opt_int(s.g);
  j["l"] = s.l;
  j["deviation"] = opt_int(s.deviation);
  j["r_J"] = opt_int(s.r_J);
  j["s"] = s.s;
  ordered_json depths = ordered_json::object();
  for (const auto& [k, v] : s.depths) depths[std::to_string(k)] = v;
  j["depths"] = std::move(depths);
  j["depth_G"] = s.depth_G;
  j["grade_Gplus"] = s.grade_Gplus;
  j["regularity"] = {{"value", s.reg_value}, {"status", s.reg_status}};
  return j;
}

InvariantSummary summary_from(const ordered_json& j) {
  InvariantSummary s;
  s.dim = j.at("dim").get<int>();
  s.depth_R = j.at("depth_R").get<int>();
  s.g = read_opt_int(j.at("g"));
  s.l = j.at("l").get<int>();
  s.deviation = read_opt_int(j.at("deviation"));
  s.r_J = read_opt_int(j.at("r_J"));
  s.s = j.at("s").get<int>();
  for (const auto& [k, v] : j.at("depths").items())
    s.depths[std::stoi(k)] = v.get<int>();
  s.depth_G = j.at("depth_G").get<int>();
  s.grade_Gplus = j.at("grade_Gplus").get<int>();
  s.reg_value = j.at("regularity").at("value").get<int>();
  s.reg_status = j.at("regularity").at("status").get<std::string>();
  return s;
}

ordered_json to_json(const TheoremReport& t) {
  ordered_json j;
  j["id"] = t.id;
  ordered_json hyps = ordered_json::object();
  for (const auto& [name, ok] : t.hypotheses) hyps[name] = ok;
  j["hypotheses"] = std::move(hyps);
  if (t.t_infinite) {
    j["t"] = "inf";
  } else {
    j["t"] = opt_int(t.t);
  }
  j["bound"] = opt_int(t.bound);
  j["actual"] = opt_int(t.actual);
  j["verdict"] = verdict_name(t.verdict);
  j["notes"] = t.notes;
  return j;
}

TheoremReport theorem_from(const ordered_json& j) {
  TheoremReport t;
  t.id = j.at("id").get<std::string>();
  for (const auto& [name, ok] : j.at("hypotheses").items())
    t.hypotheses.push_back({name, ok.get<bool>()});
  const auto& tv = j.at("t");
  if (tv.is_string() && tv.get<std::string>() == "inf") {
    t.t_infinite = true;
  } else {
    t.t = read_opt_int(tv);
  }
  t.bound = read_opt_int(j.at("bound"));
  t.actual = read_opt_int(j.at("actual"));
  auto v = verdict_from_name(j.at("verdict").get<std::string>());
  if (!v) throw kernel_error("unknown verdict in report");
  t.verdict = *v;
  t.notes = j.at("notes").get<std::string>();
  return t;
}

}  // namespace

std::string emit_json(const RunReport& report) {
  ordered_json j;
  j["version"] = report.version;
  j["prime"] = report.prime;
  j["seed"] = report.seed;
  j["caveats"] = report.caveats;
  ordered_json instances = ordered_json::array();
  for (const auto& inst : report.instances) {
    ordered_json ji;
    ji["ring"] = inst.ring;
    ji["ideal"] = inst.ideal;
    ji["invariants"] =
        inst.invariants ? to_json(*inst.invariants) : ordered_json(nullptr);
    ordered_json thms = ordered_json::array();
    for (const auto& t : inst.theorems) thms.push_back(to_json(t));
    ji["theorems"] = std::move(thms);
    ji["notes"] = inst.notes;
    ji["error"] = inst.error ? ordered_json(*inst.error) : nullptr;
    ji["timing_ms"] = inst.timing_ms;
    instances.push_back(std::move(ji));
  }
  j["instances"] = std::move(instances);
  return j.dump(2) + "\n";
}

RunReport parse_json_report(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  RunReport r;
  r.version = j.at("version").get<std::string>();
  r.prime = j.at("prime").get<uint32_t>();
  r.seed = j.at("seed").get<uint64_t>();
  r.caveats = j.at("caveats").get<std::vector<std::string>>();
  for (const auto& ji : j.at("instances")) {
    InstanceResult inst;
    inst.ring = ji.at("ring").get<std::string>();
    inst.ideal = ji.at("ideal").get<std::string>();
    if (!ji.at("invariants").is_null())
      inst.invariants = summary_from(ji.at("invariants"));
    for (const auto& jt : ji.at("theorems"))
      inst.theorems.push_back(theorem_from(jt));
    inst.notes = ji.at("notes").get<std::vector<std::string>>();
    if (!ji.at("error").is_null())
      inst.error = ji.at("error").get<std::string>();
    inst.timing_ms = ji.at("timing_ms").get<long>();
    r.instances.push_back(std::move(inst));
  }
  return r;
}

std::string emit_text(const RunReport& report) {
  std::ostringstream os;
  os << "blowup " << report.version << "  (p = " << report.prime
     << ", seed = " << report.seed << ")\n";
  for (const auto& c : report.caveats) os << "caveat: " << c << "\n";
  os << "\n";
  int idx = 0;
  for (const auto& inst : report.instances) {
    ++idx;
    os << "instance " << idx << "\n";
    if (inst.error) {
      os << "  error: " << *inst.error << "\n\n";
      continue;
    }
    os << "  ring quotient by " << inst.ring << "\n";
    os << "  ideal " << inst.ideal << "\n";
    if (inst.invariants) {
      const auto& s = *inst.invariants;
      os << "  dim R = " << s.dim << ", depth R = " << s.depth_R;
      if (s.g) os << ", ht I = " << *s.g;
      os << ", l(I) = " << s.l;
      if (s.deviation) os << ", deviation = " << *s.deviation;
      os << "\n  ";
      if (s.r_J) {
        os << "r_J = " << *s.r_J;
      } else {
        os << "r_J = (not verified)";
      }
      os << " with s = " << s.s << " generators\n";
      os << "  depth R/I^j:";
      for (const auto& [jj, d] : s.depths) os << "  " << jj << " -> " << d;
      os << "\n";
      os << "  depth G = " << s.depth_G << ", grade G+ = " << s.grade_Gplus
         << ", reg G = " << s.reg_value << " (" << s.reg_status << ")\n";
    }
    if (!inst.theorems.empty()) {
      os << "  checks:\n";
      for (const auto& t : inst.theorems) {
        os << "    " << t.id << ": " << verdict_name(t.verdict);
        if (t.bound) os << "  bound " << *t.bound;
        if (t.actual) os << "  actual " << *t.actual;
        if (t.t_infinite) {
          os << "  t = inf";
        } else if (t.t) {
          os << "  t = " << *t.t;
        }
        os << "\n";
      }
    }
    for (const auto& n : inst.notes) os << "  note: " << n << "\n";
    if (inst.timing_ms > 0) os << "  timing: " << inst.timing_ms << " ms\n";
    os << "\n";
  }
  return os.str();
}

}  // namespace blowup
