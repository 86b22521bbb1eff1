// Copyright 2026 The affine-little Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end over the affine_little C API.

#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "affine_little.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Carries a C API failure out to main.
struct ApiFailure {
  afl_status status;
  std::string message;
};

void check(afl_status status) {
  if (status != AFL_OK) throw ApiFailure{status, afl_last_error()};
}

struct PermDeleter {
  void operator()(afl_perm* w) const { afl_perm_free(w); }
};
using Perm = std::unique_ptr<afl_perm, PermDeleter>;

// A window "[...]" with optional period, or a word over s_0..s_{n-1}.
Perm read_element(int n, const std::string& text) {
  afl_perm* raw = nullptr;
  if (text.find('[') != std::string::npos) {
    check(afl_perm_parse(n, text.c_str(), &raw));
  } else {
    if (n < 2) {
      throw ApiFailure{AFL_ERR_BAD_INDEX,
                       "a word needs the period -n (n >= 2)"};
    }
    check(afl_perm_from_word(n, text.c_str(), &raw));
  }
  return Perm(raw);
}

template <typename Call>
json fetch(Call call) {
  char* raw = nullptr;
  check(call(&raw));
  std::unique_ptr<char, void (*)(char*)> owned(raw, afl_string_free);
  return json::parse(owned.get());
}

void print_json(const json& doc) { std::cout << doc.dump(2) << "\n"; }

void print_cover_rows(const json& rows, const std::string& indent) {
  for (const json& row : rows) {
    std::cout << indent << row["window"].get<std::string>() << "  "
              << row["reflection"].get<std::string>();
    if (row.contains("coefficient")) {
      std::cout << "  x" << row["coefficient"].get<std::int64_t>();
    }
    std::cout << "\n";
  }
}

struct Common {
  int n = 0;
  bool as_json = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("-n", c.n, "Period n of the affine symmetric group");
  sub->add_flag("--json", c.as_json, "Emit JSON");
}

int cmd_covers(const Common& c, const std::string& element,
               std::optional<std::int64_t> r) {
  const Perm v = read_element(c.n, element);
  const json doc = fetch([&](char** out) {
    return afl_covers_json(v.get(), r.has_value() ? 1 : 0, r.value_or(0), out);
  });
  if (c.as_json) {
    print_json(doc);
    return kExitOk;
  }
  std::cout << "v = " << doc["v"].get<std::string>() << "  length "
            << doc["length"].get<std::int64_t>() << "\n";
  if (!r) {
    std::cout << "covers:\n";
    print_cover_rows(doc["covers"], "  ");
    return kExitOk;
  }
  std::cout << "right " << *r << "-covers:\n";
  print_cover_rows(doc["right"], "  ");
  std::cout << "left " << *r << "-covers:\n";
  print_cover_rows(doc["left"], "  ");
  std::cout << "chevalley coefficients for s_" << *r << ":\n";
  print_cover_rows(doc["chevalley"], "  ");
  return kExitOk;
}

int cmd_reduced_words(const Common& c, const std::string& element) {
  const Perm w = read_element(c.n, element);
  const json doc =
      fetch([&](char** out) { return afl_reduced_words_json(w.get(), out); });
  if (c.as_json) {
    print_json(doc);
    return kExitOk;
  }
  for (const json& word : doc["words"]) {
    const std::string text = word.get<std::string>();
    std::cout << (text.empty() ? "(empty)" : text) << "\n";
  }
  return kExitOk;
}

int cmd_little(const Common& c, const std::string& v_text,
               const std::string& word, int mark) {
  const Perm v = read_element(c.n, v_text);
  const std::string marked = word + "@" + std::to_string(mark);
  const json doc = fetch([&](char** out) {
    return afl_little_trace_json(v.get(), marked.c_str(), out);
  });
  if (c.as_json) {
    print_json(doc);
    return kExitOk;
  }
  for (const json& row : doc["rows"]) {
    std::cout << row["word"].get<std::string>() << "@"
              << row["mark"].get<int>() << "  p=" << row["p"].get<std::int64_t>()
              << "  q=" << row["q"].get<std::int64_t>() << "\n";
  }
  const json& result = doc["result"];
  std::cout << "result " << result["word"].get<std::string>() << "@"
            << result["mark"].get<int>() << "  "
            << result["window"].get<std::string>() << "\n";
  return kExitOk;
}

std::string join_factors(const json& factors) {
  std::string s;
  for (const json& f : factors) {
    if (!s.empty()) s += "/";
    s += f.get<std::string>();
  }
  return s;
}

int cmd_generalized(const Common& c, const std::string& v_text, std::int64_t r,
                    const std::string& decomposition, bool inverse) {
  const Perm v = read_element(c.n, v_text);
  const json doc = fetch([&](char** out) {
    return afl_generalized_little_json(v.get(), r, decomposition.c_str(),
                                       inverse ? 1 : 0, out);
  });
  if (c.as_json) {
    print_json(doc);
    return kExitOk;
  }
  std::cout << "input   " << join_factors(doc["input"]["factors"]) << "  "
            << doc["input"]["window"].get<std::string>() << "\n";
  std::cout << "output  " << join_factors(doc["output"]["factors"]) << "  "
            << doc["output"]["window"].get<std::string>() << "\n";
  return kExitOk;
}

int cmd_stanley(const Common& c, const std::string& element) {
  const Perm w = read_element(c.n, element);
  const json doc =
      fetch([&](char** out) { return afl_stanley_table_json(w.get(), out); });
  if (c.as_json) {
    print_json(doc);
    return kExitOk;
  }
  for (const auto& [lambda, value] : doc["table"].items()) {
    std::cout << (lambda.empty() ? "()" : lambda) << ": "
              << value.get<std::int64_t>() << "\n";
  }
  return kExitOk;
}

std::string bare_rational(const std::string& text) {
  const std::size_t slash = text.find('/');
  if (slash != std::string::npos && text.substr(slash + 1) == "1") {
    return text.substr(0, slash);
  }
  return text;
}

int cmd_expand(const Common& c, const std::string& element) {
  const Perm w = read_element(c.n, element);
  const json doc =
      fetch([&](char** out) { return afl_expand_json(w.get(), out); });
  if (c.as_json) {
    print_json(doc);
    return kExitOk;
  }
  for (const auto& [lambda, value] : doc["coefficients"].items()) {
    std::cout << (lambda.empty() ? "()" : lambda) << ": "
              << bare_rational(value.get<std::string>()) << "\n";
  }
  if (!doc["zero_residual"].get<bool>()) {
    std::cout << "warning: nonzero residual\n";
  }
  return kExitOk;
}

int cmd_verify(const Common& c, int max_length, const std::string& which,
               std::uint64_t seed, int samples) {
  const json doc = fetch([&](char** out) {
    return afl_verify_json(c.n, max_length, which.c_str(), seed, samples, out);
  });
  const bool all_passed = doc["all_passed"].get<bool>();
  if (c.as_json) {
    print_json(doc);
  } else {
    for (const json& suite : doc["suites"]) {
      const auto instances = suite["instances"].get<std::int64_t>();
      const auto passed = suite["passed"].get<std::int64_t>();
      std::cout << suite["name"].get<std::string>() << ": " << passed << "/"
                << instances << " passed"
                << (passed == instances ? "" : "  FAILED") << "\n";
      for (const json& failure : suite["failures"]) {
        std::cout << "  counterexample: " << failure.get<std::string>()
                  << "\n";
      }
    }
  }
  return all_passed ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affine symmetric group combinatorics and the affine Little map"};
  app.require_subcommand(1);

  Common common;
  std::string element;
  std::optional<std::int64_t> residue;

  CLI::App* covers = app.add_subcommand("covers", "Bruhat covers of an element");
  add_common(covers, common);
  covers->add_option("window", element, "Window or word of v")->required();
  covers->add_option("-r", residue, "Residue r: list r-covers");

  CLI::App* words = app.add_subcommand("reduced-words", "All reduced words");
  add_common(words, common);
  words->add_option("window", element, "Window or word")->required();

  std::string word;
  int mark = 0;
  CLI::App* little = app.add_subcommand("little", "Trace the affine Little map");
  add_common(little, common);
  little->add_option("-v", element, "Word or window of v")->required();
  little->add_option("-a", word, "Reduced v-marked word")->required();
  little->add_option("-i", mark, "Marked position (1-based)")->required();

  std::int64_t gen_residue = 0;
  std::string decomposition;
  bool inverse = false;
  CLI::App* generalized = app.add_subcommand(
      "generalized-little", "Generalized Little map on a decomposition");
  add_common(generalized, common);
  generalized->add_option("-v", element, "Word or window of v")->required();
  generalized->add_option("-r", gen_residue, "Residue r")->required();
  generalized->add_option("-d", decomposition,
                          "Cyclically decreasing factors, e.g. 21/2")
      ->required();
  generalized->add_flag("--inverse", inverse,
                        "Map a left r-cover decomposition back");

  CLI::App* stanley = app.add_subcommand(
      "stanley-table", "Monomial coefficients of the affine Stanley function");
  add_common(stanley, common);
  stanley->add_option("window", element, "Window or word")->required();

  CLI::App* expand =
      app.add_subcommand("expand", "Expansion in affine Schur functions");
  add_common(expand, common);
  expand->add_option("window", element, "Window or word")->required();

  int max_length = 0;
  std::string which = "all";
  std::uint64_t seed = 0;
  int samples = 0;
  CLI::App* verify = app.add_subcommand("verify", "Check identities exhaustively");
  add_common(verify, common);
  verify->add_option("--max-length", max_length, "Largest length of v")
      ->required();
  verify->add_option("suite", which,
                     "chevalley | garsia-little | bijection | all");
  verify->add_option("--seed", seed, "Seed for randomized samples");
  verify->add_option("--samples", samples,
                     "Extra random elements beyond the length bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*covers) return cmd_covers(common, element, residue);
    if (*words) return cmd_reduced_words(common, element);
    if (*little) return cmd_little(common, element, word, mark);
    if (*generalized) {
      return cmd_generalized(common, element, gen_residue, decomposition,
                             inverse);
    }
    if (*stanley) return cmd_stanley(common, element);
    if (*expand) return cmd_expand(common, element);
    if (*verify) {
      if (common.n == 0) {
        std::cerr << "error: verify needs -n\n";
        return kExitUsage;
      }
      return cmd_verify(common, max_length, which, seed, samples);
    }
  } catch (const ApiFailure& f) {
    std::cerr << "error: " << afl_status_name(f.status) << ": " << f.message
              << "\n";
    return static_cast<int>(afl_status_classify(f.status));
  } catch (const json::exception& e) {
    std::cerr << "error: malformed library output: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
