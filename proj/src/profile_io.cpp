#include "uav/profile_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "uav/format.hpp"

namespace uav {

namespace {

using nlohmann::json;

double require_number(const json& obj, const std::string& parent,
                      const std::string& key) {
  const std::string path = parent + "/" + key;
  if (!obj.contains(key)) throw ProfileFormatError(path, "missing field");
  if (!obj[key].is_number()) throw ProfileFormatError(path, "expected a number");
  return obj[key].get<double>();
}

Preference parse_preference(const json& value, const std::string& path) {
  if (!value.is_string())
    throw ProfileFormatError(path, "expected \"favorable\" or \"adverse\"");
  const std::string s = value.get<std::string>();
  if (s == "favorable") return Preference::Favorable;
  if (s == "adverse") return Preference::Adverse;
  throw ProfileFormatError(path, "expected \"favorable\" or \"adverse\"");
}

const char* preference_name(Preference p) {
  return p == Preference::Favorable ? "favorable" : "adverse";
}

}  // namespace

Profile parse_profile_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ProfileFormatError("/", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ProfileFormatError("/", "expected an object");
  if (!doc.contains("arena")) throw ProfileFormatError("/arena", "missing field");
  if (!doc["arena"].is_object())
    throw ProfileFormatError("/arena", "expected an object");

  Profile prof;
  const json& arena = doc["arena"];
  prof.arena.half_width = require_number(arena, "/arena", "A");
  prof.arena.half_height = require_number(arena, "/arena", "B");
  prof.arena.altitude = require_number(arena, "/arena", "z0");
  prof.arena.alpha = require_number(arena, "/arena", "alpha");
  if (!(prof.arena.half_width > 0.0))
    throw ProfileFormatError("/arena/A", "must be > 0");
  if (!(prof.arena.half_height > 0.0))
    throw ProfileFormatError("/arena/B", "must be > 0");
  if (!(prof.arena.altitude >= 0.0))
    throw ProfileFormatError("/arena/z0", "must be >= 0");
  if (!(prof.arena.alpha >= 2.0 && prof.arena.alpha <= 6.0))
    throw ProfileFormatError("/arena/alpha", "must lie in [2, 6]");

  if (!doc.contains("users")) throw ProfileFormatError("/users", "missing field");
  if (!doc["users"].is_array() || doc["users"].empty())
    throw ProfileFormatError("/users", "expected a non-empty array");

  std::size_t i = 0;
  for (const json& entry : doc["users"]) {
    const std::string base = "/users/" + std::to_string(i);
    if (!entry.is_object()) throw ProfileFormatError(base, "expected an object");
    UserReport u;
    u.x = require_number(entry, base, "x");
    u.y = require_number(entry, base, "y");
    u.w = require_number(entry, base, "w");
    if (u.x < 0.0 || u.x > prof.arena.width())
      throw ProfileFormatError(base + "/x", "outside [0, 2A]");
    if (u.y < 0.0 || u.y > prof.arena.height())
      throw ProfileFormatError(base + "/y", "outside [0, 2B]");
    if (!(u.w > 0.0)) throw ProfileFormatError(base + "/w", "must be > 0");
    if (entry.contains("pref"))
      u.pref = parse_preference(entry["pref"], base + "/pref");
    if (entry.contains("prefs")) {
      const json& pair = entry["prefs"];
      if (!pair.is_array() || pair.size() != 2)
        throw ProfileFormatError(base + "/prefs", "expected a two-element array");
      u.prefs = PreferencePair{parse_preference(pair[0], base + "/prefs/0"),
                               parse_preference(pair[1], base + "/prefs/1")};
    }
    prof.users.push_back(u);
    ++i;
  }
  return prof;
}

Profile load_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open profile file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_profile_json(buf.str());
}

std::string profile_to_json(const Profile& prof) {
  std::string out = "{\"arena\": {\"A\": " + format_double(prof.arena.half_width) +
                    ", \"B\": " + format_double(prof.arena.half_height) +
                    ", \"z0\": " + format_double(prof.arena.altitude) +
                    ", \"alpha\": " + format_double(prof.arena.alpha) +
                    "}, \"users\": [";
  for (std::size_t i = 0; i < prof.users.size(); ++i) {
    const UserReport& u = prof.users[i];
    if (i) out += ", ";
    out += "{\"x\": " + format_double(u.x) + ", \"y\": " + format_double(u.y) +
           ", \"w\": " + format_double(u.w);
    if (u.pref) out += std::string(", \"pref\": \"") + preference_name(*u.pref) + "\"";
    if (u.prefs)
      out += std::string(", \"prefs\": [\"") + preference_name(u.prefs->toward_first) +
             "\", \"" + preference_name(u.prefs->toward_second) + "\"]";
    out += "}";
  }
  out += "]}";
  return out;
}

Profile example_profile(const std::string& name) {
  Profile prof;
  if (name == "intro-2user") {
    // Two users on the segment [0,4]; the truthful optimum sits at their
    // mean and moves when user 2 overreports.
    prof.arena = {2.0, 2.0, 0.0, 2.0};
    prof.users = {{0.0, 0.0, 1.0, {}, {}}, {2.0, 0.0, 1.0, {}, {}}};
  } else if (name == "obnoxious-2user") {
    prof.arena = {0.5, 0.5, 0.0, 2.0};
    prof.users = {{0.2, 0.5, 1.0, Preference::Adverse, {}},
                  {0.6, 0.5, 1.0, Preference::Adverse, {}}};
  } else if (name == "percentile-14user") {
    prof.arena = {0.5, 0.5, 0.0, 2.0};
    static const int xs[14] = {7, 1, 13, 4, 10, 2, 12, 6, 9, 14, 5, 11, 3, 8};
    static const int ys[14] = {3, 12, 5, 9, 1, 14, 7, 2, 11, 6, 13, 4, 10, 8};
    for (int i = 0; i < 14; ++i)
      prof.users.push_back({xs[i] / 15.0, ys[i] / 15.0, 1.0, {}, {}});
  } else {
    throw std::invalid_argument("unknown example profile '" + name + "'");
  }
  return prof;
}

std::vector<std::string> example_profile_names() {
  return {"intro-2user", "obnoxious-2user", "percentile-14user"};
}

}  // namespace uav
