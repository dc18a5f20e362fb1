#pragma once

// Command-line front end. run() is the whole program minus process setup, so
// tests can drive it in-process.
//
// Exit status: 0 success, 1 domain rejection, 2 usage error.

#include "seven/actions.hpp"
#include "seven/classify.hpp"
#include "seven/json.hpp"
#include "seven/sweep.hpp"
#include "seven/theta.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <ostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

namespace seven::cli {

enum class Format { Text, Json };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<Integer> parse_int_list(const std::string& flag, const std::string& text, std::size_t n) {
  static const std::regex kInt(R"(\s*[+-]?\d+\s*)");
  std::vector<Integer> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!std::regex_match(item, kInt)) throw UsageError(flag + ": '" + text + "' is not a list of integers");
    std::erase_if(item, [](char c) { return c == ' ' || c == '+'; });
    out.emplace_back(item);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.size() != n)
    throw UsageError(flag + ": expected " + std::to_string(n) + " comma-separated integers, got '" + text + "'");
  return out;
}

inline int parse_flag_value(const std::string& flag, const Integer& v) {
  if (v != 0 && v != 1) throw UsageError(flag + ": flags must be 0 or 1");
  return v.convert_to<int>();
}

inline ThetaClass parse_theta(const std::string& text) {
  auto v = parse_int_list("--theta", text, 4);
  return {v[0], v[1], parse_flag_value("--theta", v[2]), parse_flag_value("--theta", v[3])};
}

inline CoreManifold parse_core(const std::string& text) {
  auto v = parse_int_list("--core", text, 3);
  return {v[0], v[1], parse_flag_value("--core", v[2])};
}

inline Category parse_category(const std::string& text) {
  if (text == "top" || text == "TOP") return Category::TOP;
  if (text == "diff" || text == "DIFF") return Category::DIFF;
  throw UsageError("--cat: expected top or diff, got '" + text + "'");
}

inline std::string core_name(const CoreManifold& c) {
  return "M^" + std::to_string(c.c) + "_{" + c.l.str() + "," + c.k.str() + "}";
}

inline std::string descriptor_name(const ManifoldDescriptor& d) {
  std::string s;
  if (d.rank > 0) s += "#_" + std::to_string(d.rank) + " S^3xS^4 # ";
  s += core_name(d.core);
  if (d.exotic != 0) s += " # Sigma_" + std::to_string(d.exotic);
  return s + " (" + std::string(to_string(d.category)) + ")";
}

inline std::string theta_text(const ThetaClass& t) {
  return t.k.str() + "," + t.p.str() + "," + std::to_string(t.eps) + "," + std::to_string(t.delta);
}

inline std::string opt_text(const std::optional<RatModZ>& r) { return r ? r->str() : json::kUndefined; }

inline std::string invariants_text(const InvariantTuple& inv) {
  std::ostringstream os;
  os << "H4: " << (inv.h4_k == 0 ? std::string("Z") : "Z_" + abs(inv.h4_k).str()) << " (k=" << inv.h4_k << ")\n"
     << "b4_free_rank: " << inv.b4_free_rank << "\n"
     << "p1/2: " << inv.ph.value() << (inv.h4_k == 0 ? std::string() : " mod " + abs(inv.h4_k).str()) << "\n"
     << "linking: " << opt_text(inv.linking) << "\n"
     << "ks: " << inv.ks << "\n"
     << "s1: " << opt_text(inv.s1) << "\n"
     << "mu: " << opt_text(inv.mu) << "\n";
  return os.str();
}

inline std::string witness_text(const ActionWitness& w) {
  return "theta=" + theta_text(w.theta) + " rank=" + std::to_string(w.rank);
}

inline std::string residue_list(const std::set<int>& s) {
  std::string out;
  for (int r : s) out += (out.empty() ? "" : " ") + std::to_string(r);
  return out;
}

inline json::Json residue_json(const std::set<int>& s) {
  json::Json j = json::Json::array();
  for (int r : s) j.push_back(r);
  return j;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace detail;

  CLI::App app{"Invariants, normal forms and regular circle actions of 2-connected 7-manifolds", "seven"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json_flag = false;
  app.add_flag("--json", json_flag, "Emit JSON (default: text, or $SEVEN_OUTPUT)");

  std::string theta_s, core_s, cat_s = "top", descriptor_s;
  std::int64_t rank = 0, exotic = 0, kmax = 10, pmax = 100;
  unsigned threads = 1;
  bool no_absorb = false;

  auto add_cat = [&](CLI::App* sub) { sub->add_option("--cat", cat_s, "top|diff")->capture_default_str(); };
  auto add_descriptor = [&](CLI::App* sub) {
    add_cat(sub);
    sub->add_option("--core", core_s, "Core manifold l,k,c");
    sub->add_option("--rank", rank, "Number of S^3xS^4 summands")->capture_default_str();
    sub->add_option("--exotic", exotic, "Exotic sphere index r")->capture_default_str();
    sub->add_option("--descriptor", descriptor_s, "Descriptor as JSON (overrides the other flags)");
  };

  auto* validate = app.add_subcommand("validate", "Check a class k,p,eps,delta");
  validate->add_option("--theta", theta_s, "k,p,eps,delta")->required();

  auto* bundle = app.add_subcommand("bundle-invariants", "Invariants of the circle bundle over a class");
  bundle->add_option("--theta", theta_s, "k,p,eps,delta")->required();
  add_cat(bundle);

  auto* core_inv = app.add_subcommand("core-invariants", "Invariants of a descriptor");
  add_descriptor(core_inv);

  auto* classify_cmd = app.add_subcommand("classify", "Normal form of the circle bundle over a class");
  classify_cmd->add_option("--theta", theta_s, "k,p,eps,delta")->required();
  add_cat(classify_cmd);
  classify_cmd->add_flag("--no-absorb", no_absorb, "Keep the exotic summand when k = 0");

  auto* admits = app.add_subcommand("admits", "Decide whether a descriptor admits a regular circle action");
  add_descriptor(admits);

  auto* count = app.add_subcommand("count", "Count regular circle actions on a descriptor");
  add_descriptor(count);

  auto* spheres = app.add_subcommand("list-spheres", "Homotopy spheres admitting smooth regular actions");
  auto* tangent = app.add_subcommand("list-tangent", "Smooth structures on the unit tangent bundle of S^4 with actions");

  auto* sweep_cmd = app.add_subcommand("sweep", "Classify and cross-check every class in a box");
  add_cat(sweep_cmd);
  sweep_cmd->add_option("--kmax", kmax, "Sweep |k| <= kmax")->capture_default_str()->check(CLI::NonNegativeNumber);
  sweep_cmd->add_option("--pmax", pmax, "Sweep |p| <= pmax")->capture_default_str()->check(CLI::NonNegativeNumber);
  sweep_cmd->add_option("--threads", threads, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  sweep_cmd->add_flag("--no-absorb", no_absorb, "Keep the exotic summand when k = 0");

  std::vector<const char*> argv{"seven"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  Format fmt = Format::Text;
  if (const char* env = std::getenv("SEVEN_OUTPUT")) {
    const std::string v = env;
    if (v == "json")
      fmt = Format::Json;
    else if (v != "text" && !v.empty()) {
      err << "usage error: SEVEN_OUTPUT must be json or text, got '" << v << "'\n";
      return 2;
    }
  }
  if (json_flag) fmt = Format::Json;
  const bool as_json = fmt == Format::Json;

  auto descriptor_from_flags = [&](CLI::App* sub) {
    if (!descriptor_s.empty()) {
      json::Json j;
      try {
        j = json::Json::parse(descriptor_s);
      } catch (const nlohmann::json::exception&) {
        throw UsageError("--descriptor: not valid JSON");
      }
      return json::descriptor_from_json(j);
    }
    if (core_s.empty()) throw UsageError(sub->get_name() + ": --core or --descriptor is required");
    ManifoldDescriptor d;
    d.category = parse_category(cat_s);
    d.core = parse_core(core_s);
    d.rank = rank;
    d.exotic = reduce_exotic(exotic);
    return d;
  };

  try {
    if (validate->parsed()) {
      auto check = validate_theta(parse_theta(theta_s));
      if (auto* rej = std::get_if<ThetaRejection>(&check)) {
        err << rej->message << "\n";
        return 1;
      }
      const auto& t = std::get<ThetaClass>(check);
      if (as_json) {
        json::Json j = json::to_json(t);
        j["m"] = json::integer(theta_coordinate(t));
        out << j.dump() << "\n";
      } else {
        out << "valid " << theta_text(t) << " (m=" << theta_coordinate(t) << ")\n";
      }
    } else if (bundle->parsed()) {
      auto inv = circle_bundle_invariants(parse_theta(theta_s), parse_category(cat_s));
      out << (as_json ? json::to_json(inv).dump() + "\n" : invariants_text(inv));
    } else if (core_inv->parsed()) {
      auto inv = descriptor_invariants(descriptor_from_flags(core_inv));
      out << (as_json ? json::to_json(inv).dump() + "\n" : invariants_text(inv));
    } else if (classify_cmd->parsed()) {
      const ThetaClass t = parse_theta(theta_s);
      const Category cat = parse_category(cat_s);
      if (no_absorb && cat != Category::DIFF) throw UsageError("--no-absorb requires --cat diff");
      auto r = cat == Category::TOP ? classify_homeo(t) : classify_diffeo(t, !no_absorb);
      if (as_json)
        out << json::to_json(r).dump() << "\n";
      else
        out << descriptor_name(r.descriptor) << " m=" << r.witness_m << "\n";
    } else if (admits->parsed()) {
      auto w = admits_action(descriptor_from_flags(admits));
      if (as_json) {
        json::Json j{{"admits", w.has_value()}};
        if (w) j["witness"] = json::to_json(*w);
        out << j.dump() << "\n";
      } else {
        out << (w ? "witness " + witness_text(*w) : std::string("none")) << "\n";
      }
    } else if (count->parsed()) {
      auto c = count_actions(descriptor_from_flags(count));
      if (as_json)
        out << json::to_json(c).dump() << "\n";
      else if (c.is_infinite())
        out << "infinite witness " << witness_text(c.witness) << " period=" << *c.period << "\n";
      else
        out << *c.finite << " witness " << witness_text(c.witness) << "\n";
    } else if (spheres->parsed()) {
      auto s = sphere_action_set();
      out << (as_json ? residue_json(s).dump() : residue_list(s)) << "\n";
    } else if (tangent->parsed()) {
      auto s = tangent_bundle_action_set();
      out << (as_json ? residue_json(s).dump() : residue_list(s)) << "\n";
    } else if (sweep_cmd->parsed()) {
      SweepOptions opt;
      opt.category = parse_category(cat_s);
      if (no_absorb && opt.category != Category::DIFF) throw UsageError("--no-absorb requires --cat diff");
      opt.kmax = kmax;
      opt.pmax = pmax;
      opt.threads = threads;
      opt.absorb = !no_absorb;
      auto records = sweep(opt);
      std::int64_t bad = 0;
      for (const auto& r : records) bad += r.consistent ? 0 : 1;
      if (as_json) {
        json::Json rows = json::Json::array();
        for (const auto& r : records)
          rows.push_back({{"theta", json::to_json(r.theta)},
                          {"classification", json::to_json(r.classification)},
                          {"invariants", json::to_json(r.bundle)},
                          {"consistent", r.consistent}});
        json::Json j{{"category", std::string(to_string(opt.category))},
                     {"kmax", kmax},
                     {"pmax", pmax},
                     {"total", records.size()},
                     {"inconsistent", bad},
                     {"records", std::move(rows)}};
        out << j.dump() << "\n";
      } else {
        for (const auto& r : records)
          out << theta_text(r.theta) << " -> " << descriptor_name(r.classification.descriptor)
              << (r.consistent ? "" : "  INCONSISTENT") << "\n";
        out << "total " << records.size() << " inconsistent " << bad << "\n";
      }
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace seven::cli
