#include "knotslice/record.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace knotslice {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::malformed_code, "record: " + what); }

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

json to_json(const BandMove& b) {
  json passages = json::array();
  for (const auto& p : b.passages) passages.push_back(json{{"side", p.side}, {"over", p.over}});
  return json{{"region", b.region},
              {"sides", {b.sides[0], b.sides[1]}},
              {"half_twists", b.half_twists},
              {"passages", passages}};
}

BandMove band_from_json(const json& j) {
  BandMove b;
  b.region = j.at("region").get<int>();
  const auto& sides = j.at("sides");
  if (!sides.is_array() || sides.size() != 2) malformed("band sides");
  b.sides = {sides[0].get<int>(), sides[1].get<int>()};
  b.half_twists = j.at("half_twists").get<int>();
  for (const auto& p : j.at("passages")) b.passages.push_back({p.at("side").get<int>(), p.at("over").get<bool>()});
  return b;
}

json to_json(const Move& m) { return json{{"kind", std::string(to_string(m.kind))}, {"anchor", m.anchor}}; }

Move move_from_json(const json& j) {
  return Move{move_kind_from_string(j.at("kind").get<std::string>()), j.at("anchor").get<std::vector<int>>()};
}

json to_json(const Certificate& c) {
  json steps = json::array();
  for (const auto& s : c.steps) {
    json moves = json::array();
    for (const auto& m : s.moves) moves.push_back(to_json(m));
    steps.push_back(json{{"band", to_json(s.band)}, {"moves", moves}, {"pd", s.pd}});
  }
  return json{{"steps", steps}, {"final_pd", c.final_pd}};
}

Certificate certificate_from_json(const json& j) {
  Certificate c;
  for (const auto& s : j.at("steps")) {
    CertificateStep step;
    step.band = band_from_json(s.at("band"));
    for (const auto& m : s.at("moves")) step.moves.push_back(move_from_json(m));
    step.pd = s.at("pd").get<std::string>();
    c.steps.push_back(std::move(step));
  }
  c.final_pd = j.at("final_pd").get<std::string>();
  return c;
}

VerdictKind verdict_from_tag(const std::string& tag) {
  for (auto k : {VerdictKind::obstructed, VerdictKind::algorithmically_ribbon, VerdictKind::unknown})
    if (to_string(k) == tag) return k;
  malformed("unknown verdict " + tag);
}

}  // namespace

std::string_view to_string(InputFormat f) { return f == InputFormat::dt ? "dt" : "pd"; }

std::string config_fingerprint(const SearchConfig& cfg) {
  std::ostringstream os;
  for (const auto& e : move_registry())
    os << e.info.name << ':' << e.info.reducing << e.info.active << (e.kind ? 'i' : 'n') << ';';
  os << "band:twists=-1,0,1;passages<=" << cfg.max_passages << ";filter=nullity+1,nonalt+1;";
  os << "budget:" << cfg.max_bands << ',' << cfg.max_states << ',' << cfg.simplify_budget << ';';
  os << "mirror:" << (cfg.mirror == MirrorMode::both ? "both" : "only-input");
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(os.str())));
  return buf;
}

std::string verdict_tag(const ResultRecord& r) {
  return r.verdict ? std::string(to_string(r.verdict->kind)) : std::string("Error");
}

std::string serialize(const ResultRecord& r) {
  json j;
  j["name"] = r.name;
  j["input"] = json{{"format", std::string(to_string(r.format))}, {"code", r.code}};
  j["verdict"] = verdict_tag(r);
  if (r.verdict) {
    const Verdict& v = *r.verdict;
    if (v.obstruction)
      j["witness"] = json{{"check", std::string(to_string(v.obstruction->check))},
                          {"on_mirror", v.obstruction->on_mirror}};
    if (v.certificate) j["certificate"] = to_json(*v.certificate);
    if (v.kind == VerdictKind::unknown) j["reason"] = std::string(to_string(v.reason));
    j["stats"] = json{{"states", v.stats.states},
                      {"bands_tried", v.stats.bands_tried},
                      {"bands_obstructed", v.stats.bands_obstructed}};
  }
  if (r.error) j["error"] = *r.error;
  j["timings_ms"] = r.timings_ms;
  j["config"] = r.config_fingerprint;
  return j.dump();
}

ResultRecord parse_record(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    malformed(e.what());
  }
  try {
    ResultRecord r;
    r.name = j.at("name").get<std::string>();
    const auto& in = j.at("input");
    const std::string fmt = in.at("format").get<std::string>();
    if (fmt != "dt" && fmt != "pd") malformed("input format " + fmt);
    r.format = fmt == "dt" ? InputFormat::dt : InputFormat::pd;
    r.code = in.at("code").get<std::string>();
    const std::string tag = j.at("verdict").get<std::string>();
    if (tag == "Error") {
      r.error = j.at("error").get<std::string>();
    } else {
      Verdict v;
      v.kind = verdict_from_tag(tag);
      if (j.contains("witness")) {
        const auto& w = j["witness"];
        const std::string check = w.at("check").get<std::string>();
        if (check != "no_embedding" && check != "coset_failure") malformed("witness check " + check);
        v.obstruction = Obstruction{check == "no_embedding" ? ObstructionCheck::no_embedding : ObstructionCheck::coset_failure,
                                    w.at("on_mirror").get<bool>()};
      }
      if (j.contains("certificate")) v.certificate = certificate_from_json(j["certificate"]);
      if (j.contains("reason")) {
        const std::string reason = j["reason"].get<std::string>();
        if (reason != "exhausted" && reason != "budget") malformed("reason " + reason);
        v.reason = reason == "exhausted" ? UnknownReason::exhausted : UnknownReason::budget;
      }
      const auto& st = j.at("stats");
      v.stats = {st.at("states").get<std::size_t>(), st.at("bands_tried").get<std::size_t>(),
                 st.at("bands_obstructed").get<std::size_t>()};
      if ((v.kind == VerdictKind::obstructed) != v.obstruction.has_value() ||
          (v.kind == VerdictKind::algorithmically_ribbon) != v.certificate.has_value())
        malformed("payload does not match verdict " + tag);
      r.verdict = std::move(v);
    }
    r.timings_ms = j.at("timings_ms").get<std::int64_t>();
    r.config_fingerprint = j.at("config").get<std::string>();
    return r;
  } catch (const json::exception& e) {
    malformed(e.what());
  }
}

InputFormat detect_format(std::string_view code) {
  return code.find('[') != std::string_view::npos ? InputFormat::pd : InputFormat::dt;
}

PlanarDiagram parse_code(InputFormat format, std::string_view code) {
  return format == InputFormat::dt ? parse_dt(code) : parse_pd(code);
}

ResultRecord make_record(std::string name, InputFormat format, std::string code, const SearchConfig& cfg,
                         bool with_timings) {
  ResultRecord r;
  r.name = std::move(name);
  r.format = format;
  r.code = std::move(code);
  r.config_fingerprint = config_fingerprint(cfg);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    r.verdict = classify(parse_code(format, r.code), cfg);
  } catch (const Error& e) {
    r.error = e.what();
  }
  if (with_timings)
    r.timings_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::optional<bool> verify_record(const ResultRecord& r) {
  if (!r.verdict || !r.verdict->certificate) return std::nullopt;
  try {
    return replay(parse_code(r.format, r.code), *r.verdict->certificate);
  } catch (const Error&) {
    return false;
  }
}

}  // namespace knotslice
