#pragma once

#include <iostream>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symdyn/io.hpp"
#include "symdyn/symdyn.hpp"

// Command-line front end. Exit status: 0 pass/found, 1 fail/not found,
// 2 usage or input error.

namespace symdyn::cli {

using io::json;

inline constexpr int exit_pass = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_usage = 2;

namespace detail {

// Alphabet for a free-standing word: "01" plus whatever else occurs, sorted.
inline Alphabet alphabet_for(const std::string& word) {
  std::set<char> chars{'0', '1'};
  chars.insert(word.begin(), word.end());
  return Alphabet(std::string(chars.begin(), chars.end()));
}

inline Seed parse_seed(const Substitution& s, const std::string& text, std::size_t period) {
  if (text.size() != 3 || text[1] != '.') fail(ErrorKind::domain, "seed must look like a.b");
  return {s.alphabet().letter(text[0]), s.alphabet().letter(text[2]), period};
}

inline std::optional<TargetKind> parse_kind(const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (text == "toeplitz") return TargetKind::toeplitz;
  if (text == "morse") return TargetKind::morse;
  fail(ErrorKind::domain, "kind must be toeplitz or morse");
}

struct Options {
  bool json = false;
  std::string sub;
  std::string seed = "";
  std::size_t period = 1;
  std::size_t radius = 0;
  std::size_t n = 0;
  std::string pattern;
  std::string word;
  std::string zero = "0";
  std::string rule;
  std::string window;
  std::string cert;
  std::string kind;
  std::size_t kmax = 0;
  std::size_t r = 2;
};

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  int generate() {
    const Substitution s = parse_substitution(opt_.sub);
    const Seed seed = parse_seed(s, opt_.seed, opt_.period);
    const std::string win = render(s.alphabet(), periodic_window(s, seed, opt_.radius));
    if (opt_.json) {
      emit({{"window", win}, {"seed", opt_.seed}, {"period", opt_.period}, {"radius", opt_.radius}});
    } else {
      out_ << win << '\n';
    }
    return exit_pass;
  }

  int language() {
    const Substitution s = parse_substitution(opt_.sub);
    const Language lang = symdyn::language(s, opt_.n);
    std::vector<std::string> words;
    for (const Word& w : lang) words.push_back(s.alphabet().render(w));
    if (opt_.json) {
      emit({{"n", opt_.n}, {"count", words.size()}, {"blocks", words}});
    } else {
      for (const auto& w : words) out_ << w << '\n';
    }
    return exit_pass;
  }

  int check() {
    if (opt_.zero.size() != 1) fail(ErrorKind::domain, "--zero must be a single symbol");
    const Alphabet alphabet = alphabet_for(opt_.word);
    const Word w = alphabet.parse(opt_.word);
    std::optional<PatternWitness> wit;
    PatternKind kind;
    if (opt_.pattern == "overlap") {
      kind = PatternKind::overlap_BBb;
      wit = find_overlap(w);
    } else if (opt_.pattern == "toeplitz") {
      kind = PatternKind::even_square_BB;
      wit = find_even_square(alphabet, w, alphabet.letter(opt_.zero.front()));
    } else {
      fail(ErrorKind::domain, "--pattern must be overlap or toeplitz");
    }
    if (opt_.json) {
      emit(io::to_json(wit, kind));
    } else if (wit) {
      out_ << to_string(kind) << ": found start=" << wit->start << " period=" << wit->half_length << '\n';
    } else {
      out_ << to_string(kind) << ": none\n";
    }
    return wit ? exit_fail : exit_pass;
  }

  int image() {
    const LocalRule rule = io::load_rule(opt_.rule);
    const Window in = parse_window(rule.input(), opt_.window);
    const std::string result = render(rule.output(), apply_code(rule, in));
    if (opt_.json) {
      emit({{"window", result}});
    } else {
      out_ << result << '\n';
    }
    return exit_pass;
  }

  int preimage() {
    const LocalRule rule = io::load_rule(opt_.rule);
    std::vector<std::string> words;
    for (const Word& u : preimage_blocks(rule, rule.output().parse(opt_.word))) {
      words.push_back(rule.input().render(u));
    }
    if (opt_.json) {
      emit({{"word", opt_.word}, {"count", words.size()}, {"preimages", words}});
    } else {
      for (const auto& w : words) out_ << w << '\n';
    }
    return exit_pass;
  }

  int verify_cert() {
    const Substitution s = parse_substitution(opt_.sub);
    const SubstitutionLanguage lang(s);
    const io::Certificate cert =
        io::certificate_from_json(io::detail::parse_text(io::read_file(opt_.cert), "certificate"), s.alphabet());
    ParseVerdict v;
    json cert_json;
    std::visit(
        [&](const auto& c) {
          const std::size_t radius = opt_.radius ? opt_.radius : default_radius(c.k);
          if constexpr (std::is_same_v<std::decay_t<decltype(c)>, ToeplitzCertificate>) {
            v = verify_toeplitz_certificate(lang, c, radius);
          } else {
            v = verify_morse_certificate(lang, c, radius);
          }
          cert_json = io::to_json(c, s.alphabet());
        },
        cert);
    if (opt_.json) {
      json j = io::to_json(v);
      j["certificate"] = cert_json;
      emit(j);
    } else if (v.accepted) {
      out_ << "accepted radius=" << v.radius << " windows=" << v.windows_tested << '\n';
    } else {
      out_ << "rejected reason=" << to_string(v.failure) << " radius=" << v.radius << '\n';
    }
    return v.accepted ? exit_pass : exit_fail;
  }

  int search_cert() {
    const Substitution s = parse_substitution(opt_.sub);
    const SubstitutionLanguage lang(s);
    const auto kind = parse_kind(opt_.kind);
    if (!kind) fail(ErrorKind::domain, "--kind is required");
    json found = nullptr;
    if (*kind == TargetKind::toeplitz) {
      if (auto c = search_toeplitz_certificate(lang, opt_.kmax)) found = io::to_json(*c, s.alphabet());
    } else {
      if (auto c = search_morse_certificate(lang, opt_.kmax)) found = io::to_json(*c, s.alphabet());
    }
    if (opt_.json) {
      emit({{"kind", opt_.kind}, {"kmax", opt_.kmax}, {"found", !found.is_null()}, {"certificate", found}});
    } else if (found.is_null()) {
      out_ << "not found for k <= " << opt_.kmax << '\n';
    } else {
      out_ << found.dump() << '\n';
    }
    return found.is_null() ? exit_fail : exit_pass;
  }

  int analyze() {
    const Substitution s = parse_substitution(opt_.sub);
    const Digraph g = build_graph(s);
    const bool connected = is_strongly_connected(g);
    json period = nullptr;
    if (connected) {
      try {
        period = symdyn::period(g).period;
      } catch (const Error&) {
        // acyclic: no period
      }
    }
    json j{{"injective", is_injective(s)},
           {"strongly_connected", connected},
           {"period", period},
           {"primitive", is_primitive(g)},
           {"length", s.length()},
           {"length_power_of_two", is_power_of_two(s.length())},
           {"alphabet_size", s.size()}};
    int status = exit_pass;
    if (const auto kind = parse_kind(opt_.kind)) {
      const NecessaryConditions nc = necessary_conditions(*kind, s);
      j["necessary"] = io::to_json(nc);
      status = nc.all_pass ? exit_pass : exit_fail;
    }
    if (opt_.json) {
      emit(j);
    } else {
      for (const auto& [key, value] : j.items()) {
        if (key == "necessary") {
          for (const auto& [k2, v2] : value.items()) out_ << "necessary." << k2 << '=' << v2.dump() << '\n';
        } else {
          out_ << key << '=' << value.dump() << '\n';
        }
      }
    }
    return status;
  }

  int derive() {
    const Substitution s = parse_substitution(opt_.sub);
    const SubstitutionLanguage lang(s);
    const DerivedSubstitution d = derive_substitution(lang, io::load_rule(opt_.rule), opt_.r);
    json blocks = json::object();
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
      blocks[std::string(1, d.substitution.alphabet().name(static_cast<Letter>(i)))] =
          s.alphabet().render(d.blocks[i]);
    }
    const std::string rendered = to_string(d.substitution);
    if (opt_.json) {
      emit({{"substitution", rendered}, {"blocks", blocks}, {"primitive", d.primitive}});
    } else {
      out_ << rendered << '\n';
      for (const auto& [name, block] : blocks.items()) out_ << name << " = " << block.get<std::string>() << '\n';
      out_ << "primitive=" << (d.primitive ? "true" : "false") << '\n';
    }
    return d.primitive ? exit_pass : exit_fail;
  }

  int witness() {
    const Substitution s = parse_substitution(opt_.sub);
    const SelfSimilarityReport r = self_similarity_witness(s, opt_.n);
    const json j = io::to_json(r);
    if (opt_.json) {
      emit(j);
    } else {
      for (const auto& [key, value] : j.items()) out_ << key << '=' << value.dump() << '\n';
    }
    return r.holds() ? exit_pass : exit_fail;
  }

 private:
  void emit(const json& j) { out_ << j.dump() << '\n'; }

  const Options& opt_;
  std::ostream& out_;
};

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Symbolic dynamics toolkit for the Morse and Toeplitz minimal sets", "symdyn"};
  app.require_subcommand(1);
  detail::Options opt;
  app.add_flag("--json", opt.json, "Emit a single JSON object on stdout");

  auto sub_option = [&](CLI::App* cmd) {
    cmd->add_option("--sub", opt.sub, "Substitution, e.g. \"0->01;1->10\"")->required();
  };

  auto* generate = app.add_subcommand("generate", "Central window of a periodic point");
  sub_option(generate);
  generate->add_option("--seed", opt.seed, "Seed letters a.b at indices -1 and 0")->required();
  generate->add_option("--period", opt.period, "Period p of the seed")->required()->check(CLI::PositiveNumber);
  generate->add_option("--radius", opt.radius, "Half-width N of the window")->required();

  auto* language = app.add_subcommand("language", "n-blocks of the minimal set");
  sub_option(language);
  language->add_option("--n", opt.n, "Block length")->required()->check(CLI::PositiveNumber);

  auto* check = app.add_subcommand("check", "Search a word for a forbidden pattern");
  check->add_option("--pattern", opt.pattern, "overlap | toeplitz")
      ->required()
      ->check(CLI::IsMember({"overlap", "toeplitz"}));
  check->add_option("--word", opt.word, "Word to scan")->required();
  check->add_option("--zero", opt.zero, "Letter counted for the toeplitz parity");

  auto* image = app.add_subcommand("image", "Apply a sliding block code to a window");
  image->add_option("--rule", opt.rule, "Rule JSON file or \"oxtoby\"")->required();
  image->add_option("--window", opt.window, "Window such as 0110.1001")->required();

  auto* preimage = app.add_subcommand("preimage", "All blocks a rule maps onto a word");
  preimage->add_option("--rule", opt.rule, "Rule JSON file or \"oxtoby\"")->required();
  preimage->add_option("--word", opt.word, "Target word")->required();

  auto* verify = app.add_subcommand("verify-cert", "Verify a conjugacy certificate");
  verify->add_option("--cert", opt.cert, "Certificate JSON file")->required();
  sub_option(verify);
  verify->add_option("--radius", opt.radius, "Window radius (default 32 * 2^k)");

  auto* search = app.add_subcommand("search-cert", "Search for the least certificate with k <= kmax");
  search->add_option("--kind", opt.kind, "toeplitz | morse")->required()->check(CLI::IsMember({"toeplitz", "morse"}));
  sub_option(search);
  search->add_option("--kmax", opt.kmax, "Largest k to try")->required();

  auto* analyze = app.add_subcommand("analyze", "Graph analysis and necessary conditions");
  sub_option(analyze);
  analyze->add_option("--kind", opt.kind, "toeplitz | morse")->check(CLI::IsMember({"toeplitz", "morse"}));

  auto* derive = app.add_subcommand("derive", "Induced substitution of a code into (X, sigma^r)");
  sub_option(derive);
  derive->add_option("--rule", opt.rule, "Memory-0 rule JSON emitting r-blocks")->required();
  derive->add_option("--r", opt.r, "Length r >= 2")->required();

  auto* witness = app.add_subcommand("witness", "Finite self-similarity witness");
  sub_option(witness);
  witness->add_option("--n", opt.n, "Block length")->required()->check(CLI::PositiveNumber);

  for (auto* cmd : app.get_subcommands({})) cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_pass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_pass;
  } catch (const CLI::ParseError& e) {
    err << "symdyn: " << e.what() << '\n';
    return exit_usage;
  }

  detail::Runner runner(opt, out);
  try {
    if (*generate) return runner.generate();
    if (*language) return runner.language();
    if (*check) return runner.check();
    if (*image) return runner.image();
    if (*preimage) return runner.preimage();
    if (*verify) return runner.verify_cert();
    if (*search) return runner.search_cert();
    if (*analyze) return runner.analyze();
    if (*derive) return runner.derive();
    if (*witness) return runner.witness();
  } catch (const Error& e) {
    err << "symdyn: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace symdyn::cli
