#pragma once

// The msegcalc command-line front end, kept in a header so the test suite can
// drive it in-process. Exit codes: 0 success, 2 bad input or precondition,
// 1 internal failure.

#include <algorithm>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "msegcalc/json_io.hpp"
#include "msegcalc/msegcalc.hpp"

namespace msegcalc::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_internal = 1;
inline constexpr int exit_usage = 2;

namespace detail {

struct Request {
  std::int64_t rank = 0;
  bool json = false;
  std::vector<std::string> args;
  std::string side = "right";
  std::string iota_sign = "+";
  std::string form_sign = "both";
  std::size_t at = 1;
  bool simple = false;
};

inline std::string resolve(const std::string& arg, std::istream& in) {
  if (arg != "-")
    return arg;
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

inline Sign parse_sign(const std::string& s) {
  if (s == "+" || s == "plus")
    return Sign::plus;
  if (s == "-" || s == "minus")
    return Sign::minus;
  throw usage_error("sign must be + or -, got '" + s + "'");
}

inline std::string lines(const std::vector<Multisegment>& list) {
  std::string out;
  for (const auto& ms : list)
    out += to_string(ms) + "\n";
  return out;
}

// Evaluates one subcommand; the result is written to `out` in full.
inline void dispatch(const std::string& command, const Request& req,
                     std::istream& in, std::ostream& out) {
  const Rank rank(req.rank);
  auto ms_arg = [&](std::size_t k) {
    return parse_multisegment(resolve(req.args.at(k), in));
  };
  auto lw_arg = [&](std::size_t k) {
    LWeight w = parse_lweight(resolve(req.args.at(k), in));
    require_valid(w, rank);
    return w;
  };
  std::ostringstream text;
  nlohmann::json doc;

  if (command == "closure") {
    const ClosureSet c = closure(ms_arg(0), rank);
    doc = json::encode(c);
    text << "rank " << c.rank.value() << "\n"
         << "seed " << to_string(c.seed) << "\n"
         << "members " << c.members.size() << "\n"
         << lines(c.members) << "closed " << c.closed_members.size() << "\n"
         << lines(c.closed_members) << "orbit_reps "
         << c.orbit_representatives.size() << "\n"
         << lines(c.orbit_representatives);
  } else if (command == "closed") {
    const auto reps = closed_elements(ms_arg(0), rank);
    doc = json::encode(reps);
    text << lines(reps);
  } else if (command == "socle") {
    const auto summands = socle(ms_arg(0), rank);
    doc = json::encode(summands);
    for (const auto& s : summands)
      text << to_string(s.representative) << " : " << to_string(s.weight)
           << "\n";
  } else if (command == "hom") {
    const int d = hom_dim(ms_arg(0), ms_arg(1), rank);
    doc = {{"hom_dim", d}};
    text << d << "\n";
  } else if (command == "dominant-weights") {
    const auto weights = weyl_dominant_weights(ms_arg(0), rank);
    doc = json::encode(weights);
    for (const auto& w : weights)
      text << to_string(w) << "\n";
  } else if (command == "qchar" || command == "dominant") {
    const Multisegment ms = ms_arg(0);
    QChar q = req.simple ? pair_simple_qchar(ms, rank) : weyl_qchar(ms, rank);
    if (command == "dominant")
      q = dominant_part(q);
    doc = json::encode(q);
    text << to_string(q);
  } else if (command == "alpha-decompose") {
    const auto roots = decompose_into_roots(lw_arg(0), rank);
    doc = {{"in_root_lattice", roots.has_value()},
           {"roots", roots ? json::encode(*roots) : nlohmann::json(nullptr)}};
    text << (roots ? to_string(*roots) : std::string("not in root lattice"))
         << "\n";
  } else if (command == "leq") {
    const bool leq = dominance_leq(lw_arg(0), lw_arg(1), rank);
    doc = {{"leq", leq}};
    text << (leq ? "true" : "false") << "\n";
  } else if (command == "dual") {
    if (req.side != "left" && req.side != "right")
      throw usage_error("--side must be left or right");
    const Multisegment ms = ms_arg(0);
    const Multisegment d =
        req.side == "left" ? dual_left(ms, rank) : dual_right(ms, rank);
    doc = json::encode(d);
    text << to_string(d) << "\n";
  } else if (command == "iota") {
    const Multisegment r =
        iota_at(ms_arg(0), req.at, parse_sign(req.iota_sign), rank);
    doc = json::encode(r);
    text << to_string(r) << "\n";
  } else if (command == "normalform") {
    const Multisegment ms = ms_arg(0);
    if (req.form_sign == "both") {
      const MixedWeylMaps m = mixed_weyl_maps(ms, rank);
      doc = json::encode(m);
      text << "plus " << to_string(m.plus_form) << "\n"
           << "minus " << to_string(m.minus_form) << "\n"
           << "head " << to_string(m.head) << "\n"
           << "socle_candidate " << to_string(m.socle_candidate) << "\n";
    } else {
      const Multisegment r = normal_form(ms, parse_sign(req.form_sign), rank);
      doc = json::encode(r);
      text << to_string(r) << "\n";
    }
  } else if (command == "ext-check") {
    const ExtCertificate cert = ext_vanishing(ms_arg(0), ms_arg(1), rank);
    doc = json::encode(cert);
    text << to_string(cert.verdict) << "\n";
    for (const auto& w : cert.shared)
      text << "shared " << to_string(w) << "\n";
  } else if (command == "subcat") {
    const bool member = subcategory_membership(ms_arg(0), lw_arg(1), rank);
    doc = {{"member", member}};
    text << (member ? "true" : "false") << "\n";
  } else {
    throw internal_error("unhandled subcommand " + command);
  }

  if (req.json)
    out << doc.dump() << "\n";
  else
    out << text.str();
}

struct CommandSpec {
  const char* name;
  const char* help;
  std::vector<const char*> positionals;
};

inline const std::vector<CommandSpec>& command_specs() {
  static const std::vector<CommandSpec> specs = {
      {"closure", "closure of a multisegment under the tau moves", {"ms"}},
      {"closed", "closed elements of the closure, one per orbit", {"ms"}},
      {"socle", "socle summands of the Weyl module", {"ms"}},
      {"hom", "dim Hom(W(src), W(dst))", {"src", "dst"}},
      {"dominant-weights", "dominant l-weights of the Weyl module", {"ms"}},
      {"qchar", "q-character (l-weights with multiplicity)", {"ms"}},
      {"dominant", "dominant part of the q-character", {"ms"}},
      {"alpha-decompose", "write an l-weight in the l-root basis", {"weight"}},
      {"leq", "dominance order test w1 <= w2", {"w1", "w2"}},
      {"dual", "right or left dual of a multisegment", {"ms"}},
      {"iota", "apply iota+- to parts (p, p+1)", {"ms"}},
      {"normalform", "iota normal forms s+ and s-", {"ms"}},
      {"ext-check", "Ext^0/Ext^1 vanishing certificate", {"ms1", "ms2"}},
      {"subcat", "membership of a weight in the subcategory monoid",
       {"base", "weight"}},
  };
  return specs;
}

} // namespace detail

// `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err, std::istream& in) {
  CLI::App app{"Multisegment calculus for Weyl modules over quantum affine "
               "sl(n+1)",
               "msegcalc"};
  app.require_subcommand(1);

  detail::Request req;
  std::vector<std::unique_ptr<std::string>> slots;
  for (const auto& spec : detail::command_specs()) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    sub->add_option("--rank", req.rank, "rank n of type A_n")->required();
    sub->add_flag("--json", req.json, "emit a single JSON document");
    for (const char* name : spec.positionals) {
      slots.push_back(std::make_unique<std::string>());
      sub->add_option(name, *slots.back(),
                      "literal, or - to read it from stdin")
          ->required();
    }
    const std::string cmd = spec.name;
    if (cmd == "dual")
      sub->add_option("--side", req.side, "left or right (default right)");
    if (cmd == "iota") {
      sub->add_option("--sign", req.iota_sign, "+ or - (default +)");
      sub->add_option("--at", req.at, "window position p (default 1)");
    }
    if (cmd == "normalform")
      sub->add_option("--sign", req.form_sign, "+, - or both (default both)");
    if (cmd == "qchar" || cmd == "dominant")
      sub->add_flag("--simple", req.simple,
                    "simple module of a connected pair instead of the Weyl "
                    "module");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  std::size_t slot = 0;
  for (const auto& spec : detail::command_specs()) {
    if (chosen->get_name() == spec.name) {
      for (std::size_t k = 0; k < spec.positionals.size(); ++k)
        req.args.push_back(*slots[slot + k]);
      break;
    }
    slot += spec.positionals.size();
  }

  std::ostringstream buffer;
  try {
    detail::dispatch(chosen->get_name(), req, in, buffer);
  } catch (const usage_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_internal;
  }
  out << buffer.str();
  out.flush();
  return exit_ok;
}

} // namespace msegcalc::cli
