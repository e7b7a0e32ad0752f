#pragma once

/// ASCII polynomial parsing, e.g. "x^2*y - 3/2*y + 1".  Terms are rational
/// coefficients times power products with explicit '*'; unary minus and a
/// leading '+' are accepted.

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "trop/mpoly.hpp"
#include "trop/numeric.hpp"
#include "trop/upoly.hpp"

namespace trop {

namespace detail {

struct ParsedTerm {
  Rat coeff{1};
  std::vector<std::pair<std::string, int>> powers;  // variable -> exponent
};

inline std::vector<ParsedTerm> parse_terms(const std::string& input) {
  std::vector<ParsedTerm> terms;
  size_t i = 0;
  const auto skip_ws = [&] {
    while (i < input.size() && std::isspace(static_cast<unsigned char>(input[i]))) ++i;
  };
  skip_ws();
  if (i == input.size()) throw std::invalid_argument("empty polynomial");
  while (i < input.size()) {
    int sign = 1;
    skip_ws();
    if (input[i] == '+' || input[i] == '-') {
      sign = input[i] == '-' ? -1 : 1;
      ++i;
    } else if (!terms.empty()) {
      throw std::invalid_argument("expected '+' or '-' near position " + std::to_string(i));
    }
    ParsedTerm term;
    term.coeff = Rat(sign);
    bool saw_factor = false;
    while (true) {
      skip_ws();
      if (i >= input.size()) break;
      char c = input[i];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        size_t j = i;
        while (j < input.size() &&
               (std::isdigit(static_cast<unsigned char>(input[j])) || input[j] == '/'))
          ++j;
        term.coeff *= rat_from_string(input.substr(i, j - i));
        i = j;
        saw_factor = true;
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        size_t j = i;
        while (j < input.size() && (std::isalnum(static_cast<unsigned char>(input[j])) ||
                                    input[j] == '_'))
          ++j;
        std::string var = input.substr(i, j - i);
        i = j;
        int exp = 1;
        skip_ws();
        if (i < input.size() && input[i] == '^') {
          ++i;
          skip_ws();
          size_t k = i;
          while (k < input.size() && std::isdigit(static_cast<unsigned char>(input[k]))) ++k;
          if (k == i) throw std::invalid_argument("missing exponent");
          exp = std::stoi(input.substr(i, k - i));
          i = k;
        }
        term.powers.push_back({std::move(var), exp});
        saw_factor = true;
      } else {
        throw std::invalid_argument(std::string("unexpected character '") + c + "'");
      }
      skip_ws();
      if (i < input.size() && input[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!saw_factor) throw std::invalid_argument("dangling sign");
    terms.push_back(std::move(term));
    skip_ws();
  }
  return terms;
}

}  // namespace detail

inline MPoly parse_mpoly(const MPolyRing& ring, const std::string& input) {
  MPoly out = ring.zero();
  for (const auto& term : detail::parse_terms(input)) {
    Monomial m = ring.unit_monomial();
    for (const auto& [var, exp] : term.powers) {
      bool found = false;
      for (size_t v = 0; v < ring.nvars(); ++v)
        if (ring.vars()[v] == var) {
          m.e[v] += exp;
          found = true;
          break;
        }
      if (!found) throw std::invalid_argument("unknown variable '" + var + "' in " + ring.name());
    }
    out = ring.add(out, ring.term(m, term.coeff));
  }
  return out;
}

template <class F>
typename UPolyRing<F>::value_type parse_upoly(const UPolyRing<F>& ring, const std::string& input) {
  auto out = ring.zero();
  for (const auto& term : detail::parse_terms(input)) {
    long exp = 0;
    for (const auto& [var, e] : term.powers) {
      if (var != ring.var())
        throw std::invalid_argument("unknown variable '" + var + "' in " + ring.name());
      exp += e;
    }
    typename F::value_type c;
    if constexpr (std::is_same_v<F, RationalField>) {
      c = term.coeff;
    } else {
      if (term.coeff.get_den() != 1)
        throw std::invalid_argument("non-integer coefficient over " + ring.coeff().name());
      c = ring.coeff().reduce(term.coeff.get_num());
    }
    out = ring.add(out, ring.monomial(c, exp));
  }
  return out;
}

}  // namespace trop
