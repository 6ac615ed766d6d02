#pragma once

#include "ratcalc/fock.hpp"
#include "ratcalc/linrep.hpp"
#include "ratcalc/series.hpp"

#include <string>

namespace ratcalc {

// JSON wire formats. Output is deterministic: terms in length-lex
// order, scalars as exact strings ("p/q").
//
// series: {"semiring": "...", "alphabet": ["a","b"], "maxlen": L,
//          "terms": [{"word": "ab", "coeff": "3/2"}, ...]}
// rep:    {"semiring": "...", "alphabet": [...], "dim": n,
//          "lambda": [...], "gamma": [...], "mu": {"a": [[...]], ...}}
// weights:{"alpha": ["1","2"], "alpha_tail": "n", "beta": [], "beta_tail": "1"}

std::string series_to_json(const TruncatedSeries& s, int indent = -1);
TruncatedSeries series_from_json(const std::string& text);

std::string rep_to_json(const LinRep& r, int indent = -1);
LinRep rep_from_json(const std::string& text);

std::string weights_to_json(const WeightSystem& w); // presets by name
WeightSystem weights_from_json(const std::string& text);

std::string transfer_to_json(const TransferSeries& t, int indent = -1);
std::string report_to_json(const TransferReport& r, int indent = -1);

} // namespace ratcalc
