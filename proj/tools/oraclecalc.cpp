// Copyright 2026 the oraclecalc authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "oracle/expr.hpp"

namespace {

constexpr int kExitParseError = 2;
constexpr int kExitDomainError = 3;
constexpr int kExitBudgetExceeded = 4;

struct Options {
  long long budget = oracle::Budget::kDefault;
};

oracle::DecimalMode parse_mode(const std::string& mode) {
  if (mode == "trunc") return oracle::DecimalMode::Truncation;
  if (mode == "short") return oracle::DecimalMode::ShortRounding;
  if (mode == "long") return oracle::DecimalMode::LongRounding;
  if (mode == "big") return oracle::DecimalMode::BigUncertainty;
  throw CLI::ValidationError("--mode", "expected trunc|short|long|big");
}

int run_eval(const Options& opt, const std::string& expr_text, const std::string& eps_text) {
  auto e = oracle::parse(expr_text);
  oracle::Rational eps = oracle::parse_rational(eps_text);
  oracle::Interval iv = oracle::eval(*e, eps, {opt.budget});
  std::cout << oracle::to_string(iv) << "\n";
  return 0;
}

int run_member(const Options& opt, const std::string& expr_text, const std::string& iv_text) {
  auto e = oracle::parse(expr_text);
  oracle::Interval iv = oracle::parse_interval(iv_text);
  std::cout << oracle::to_string(oracle::member(*e, iv, {opt.budget})) << "\n";
  return 0;
}

int run_cf(const Options& opt, const std::string& expr_text, int terms) {
  auto e = oracle::parse(expr_text);
  std::cout << oracle::to_string(oracle::cf(*e, terms, {opt.budget})) << "\n";
  return 0;
}

int run_dec(const Options& opt, const std::string& expr_text, int digits,
            const std::string& mode) {
  auto e = oracle::parse(expr_text);
  std::cout << oracle::dec(*e, digits, parse_mode(mode), {opt.budget}) << "\n";
  return 0;
}

int run_cmp(const Options& opt, const std::string& left, const std::string& right,
            const std::string& eps_text) {
  auto a = oracle::parse(left);
  auto b = oracle::parse(right);
  oracle::Rational eps = oracle::parse_rational(eps_text);
  std::cout << oracle::to_string(oracle::cmp(*a, *b, eps, {opt.budget}), left, right) << "\n";
  return 0;
}

int dispatch_line(const Options& opt, const std::string& line);

int repl(const Options& opt) {
  std::string line;
  std::cout << "oraclecalc — commands: eval <expr> --eps <r> | member <expr> <interval> | "
               "cf <expr> --terms <k> | dec <expr> --digits <n> --mode <m> | "
               "cmp <a> <b> --eps <r> | quit\n";
  while (std::cout << "> " << std::flush, std::getline(std::cin, line)) {
    if (line == "quit" || line == "exit") break;
    if (line.empty()) continue;
    try {
      dispatch_line(opt, line);
    } catch (const std::exception& ex) {
      std::cout << "error: " << ex.what() << "\n";
    }
  }
  return 0;
}

int run(const Options& opt, std::vector<std::string> args);

int dispatch_line(const Options& opt, const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> args;
  std::string word;
  while (in >> word) args.push_back(word);
  // expressions may contain spaces only when quoted on the command line, so
  // in the REPL they are re-joined around option flags
  return run(opt, std::move(args));
}

int run(const Options& opt, std::vector<std::string> args) {
  if (args.empty()) return repl(opt);
  auto take_flag = [&args](const std::string& flag) -> std::optional<std::string> {
    for (std::size_t i = 0; i + 1 < args.size(); ++i) {
      if (args[i] == flag) {
        std::string v = args[i + 1];
        args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                   args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        return v;
      }
    }
    return std::nullopt;
  };
  const std::string cmd = args[0];
  args.erase(args.begin());
  auto joined = [&args](std::size_t from, std::size_t to) {
    std::string out;
    for (std::size_t i = from; i < to && i < args.size(); ++i) out += (i > from ? " " : "") + args[i];
    return out;
  };
  if (cmd == "eval") {
    std::string eps = take_flag("--eps").value_or("1/1000000");
    return run_eval(opt, joined(0, args.size()), eps);
  }
  if (cmd == "member") {
    if (args.size() < 2) throw std::invalid_argument("member <expr> <interval>");
    std::string iv = args.back();
    args.pop_back();
    return run_member(opt, joined(0, args.size()), iv);
  }
  if (cmd == "cf") {
    std::string terms = take_flag("--terms").value_or("10");
    return run_cf(opt, joined(0, args.size()), std::stoi(terms));
  }
  if (cmd == "dec") {
    std::string digits = take_flag("--digits").value_or("6");
    std::string mode = take_flag("--mode").value_or("trunc");
    return run_dec(opt, joined(0, args.size()), std::stoi(digits), mode);
  }
  if (cmd == "cmp") {
    std::string eps = take_flag("--eps").value_or("1/1000000");
    if (args.size() < 2) throw std::invalid_argument("cmp <a> <b> --eps <r>");
    // two expressions: split at the midpoint only when exactly two tokens
    if (args.size() != 2)
      throw std::invalid_argument("quote each expression: cmp \"<a>\" \"<b>\"");
    return run_cmp(opt, args[0], args[1], eps);
  }
  throw std::invalid_argument("unknown command '" + cmd + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact real arithmetic with interval oracles"};
  app.allow_extras();
  Options opt;
  if (const char* env = std::getenv("ORACLE_BUDGET")) opt.budget = std::atoll(env);
  app.add_option("--budget", opt.budget, "refinement steps per query");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    return run(opt, app.remaining());
  } catch (const oracle::ParseError& ex) {
    std::cerr << "parse error: " << ex.what() << "\n";
    return kExitParseError;
  } catch (const oracle::RationalParseError& ex) {
    std::cerr << "parse error: " << ex.what() << "\n";
    return kExitParseError;
  } catch (const oracle::DomainError& ex) {
    std::cerr << "domain error: " << ex.what() << "\n";
    return kExitDomainError;
  } catch (const oracle::BudgetExceededError& ex) {
    std::cerr << "budget exceeded: " << ex.what() << "\n";
    return kExitBudgetExceeded;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
}
