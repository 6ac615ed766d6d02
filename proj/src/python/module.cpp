#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ratcalc/fock.hpp"
#include "ratcalc/json_io.hpp"
#include "ratcalc/linrep.hpp"
#include "ratcalc/ratexpr.hpp"

#include <set>

namespace py = pybind11;
using namespace ratcalc;

namespace {

// Letters used by an expression text plus any mentioned in a lambda
// listing decide the working alphabet; keys look like "a=1/2,b=0".
struct Context {
    const Semiring* ring;
    AlphabetPtr alphabet;
    Localization lambda;
};

std::vector<std::pair<std::string, std::string>> split_assignments(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> out;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string item = text.substr(pos, comma - pos);
        pos = comma + 1;
        if (item.empty()) continue;
        size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected letter=value in '" + item + "'");
        out.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    }
    return out;
}

// Identifier scan of the expression text: anything word-shaped that is
// not a scalar keyword is a letter.
std::set<std::string> letters_in_text(const std::string& text) {
    std::set<std::string> found;
    size_t i = 0;
    while (i < text.size()) {
        if (std::isalpha(static_cast<unsigned char>(text[i]))) {
            size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            std::string ident = text.substr(i, j - i);
            if (ident != "true" && ident != "false" && ident != "inf") found.insert(ident);
            i = j;
        } else {
            ++i;
        }
    }
    return found;
}

Context make_context(const std::string& semiring, const std::string& expr_text,
                     const std::string& lambda_text) {
    const Semiring& k = Semiring::by_name(semiring);
    auto assignments = split_assignments(lambda_text);
    std::set<std::string> names = letters_in_text(expr_text);
    for (const auto& [name, value] : assignments) names.insert(name);
    if (names.empty()) names.insert("a"); // letterless expressions still need a carrier alphabet
    AlphabetPtr alphabet = make_alphabet(std::vector<std::string>(names.begin(), names.end()));
    std::vector<Value> values(alphabet->size(), k.zero());
    for (const auto& [name, value] : assignments)
        values[alphabet->index_of(name)] = k.parse(value);
    return Context{&k, alphabet, Localization(k, alphabet, std::move(values))};
}

WeightSystem weights_by_name(const std::string& name) {
    if (name == "unit") return WeightSystem::unit();
    if (name == "boson") return WeightSystem::boson();
    // anything else is inline JSON
    return weights_from_json(name);
}

DyckTag dyck_tag(const std::string& family) {
    if (family == "D") return DyckTag::d();
    if (family == "Dplus") return DyckTag::plus();
    if (family.rfind("Dminus:", 0) == 0)
        return DyckTag::minus(std::stoul(family.substr(7)));
    throw ParseError("unknown Dyck family '" + family + "' (D | Dplus | Dminus:<n>)");
}

} // namespace

PYBIND11_MODULE(_ratcalc, m) {
    m.doc() = "Rational series calculus over semirings: expressions, linear "
              "representations, dual laws and ladder-operator transfer series.";

    py::register_exception<Error>(m, "RatcalcError");

    m.def(
        "eval_coeff",
        [](const std::string& semiring, const std::string& expr, const std::string& word,
           size_t maxlen, const std::string& lambda) {
            Context ctx = make_context(semiring, expr, lambda);
            ExprPtr e = parse_expr(expr, ctx.alphabet, *ctx.ring);
            auto theta = LetterAssignment::localized_identity(ctx.lambda, maxlen);
            TruncatedSeries s = eval_expr(e, theta, maxlen);
            return ctx.ring->to_string(s.coeff(parse_word(ctx.alphabet, word)));
        },
        py::arg("semiring"), py::arg("expr"), py::arg("word"), py::arg("maxlen") = 8,
        py::arg("lambda_") = "", "Coefficient of a word in the series of an expression.");

    m.def(
        "eval_series",
        [](const std::string& semiring, const std::string& expr, size_t maxlen,
           const std::string& lambda) {
            Context ctx = make_context(semiring, expr, lambda);
            ExprPtr e = parse_expr(expr, ctx.alphabet, *ctx.ring);
            auto theta = LetterAssignment::localized_identity(ctx.lambda, maxlen);
            return series_to_json(eval_expr(e, theta, maxlen));
        },
        py::arg("semiring"), py::arg("expr"), py::arg("maxlen") = 8, py::arg("lambda_") = "",
        "Truncated series of an expression, as JSON.");

    m.def(
        "const_term",
        [](const std::string& semiring, const std::string& expr, const std::string& lambda) {
            Context ctx = make_context(semiring, expr, lambda);
            ExprPtr e = parse_expr(expr, ctx.alphabet, *ctx.ring);
            return ctx.ring->to_string(const_term(e, ctx.lambda));
        },
        py::arg("semiring"), py::arg("expr"), py::arg("lambda_") = "",
        "Constant term of a rational expression.");

    m.def(
        "is_rational",
        [](const std::string& semiring, const std::string& expr, const std::string& lambda) {
            Context ctx = make_context(semiring, expr, lambda);
            ExprPtr e = parse_expr(expr, ctx.alphabet, *ctx.ring);
            return is_rational(e, ctx.lambda);
        },
        py::arg("semiring"), py::arg("expr"), py::arg("lambda_") = "");

    m.def(
        "compile_expr",
        [](const std::string& semiring, const std::string& expr, const std::string& lambda) {
            Context ctx = make_context(semiring, expr, lambda);
            ExprPtr e = parse_expr(expr, ctx.alphabet, *ctx.ring);
            return rep_to_json(expr_to_rep(e, ctx.lambda));
        },
        py::arg("semiring"), py::arg("expr"), py::arg("lambda_") = "",
        "Compile an expression to a linear representation (JSON).");

    m.def(
        "decompile_rep",
        [](const std::string& rep_json) {
            LinRep r = rep_from_json(rep_json);
            return format_expr(rep_to_expr(r), r.alphabet(), r.ring());
        },
        py::arg("rep"), "Expression text realizing the representation's series.");

    m.def(
        "rep_eval",
        [](const std::string& rep_json, const std::string& word) {
            LinRep r = rep_from_json(rep_json);
            return r.ring().to_string(eval_word(r, parse_word(r.alphabet(), word)));
        },
        py::arg("rep"), py::arg("word"));

    m.def(
        "reduce",
        [](const std::string& rep_json) { return rep_to_json(reduce_rep(rep_from_json(rep_json))); },
        py::arg("rep"), "Minimal equivalent representation (field scalars).");

    m.def(
        "equivalent",
        [](const std::string& rep_a, const std::string& rep_b) {
            return equiv(rep_from_json(rep_a), rep_from_json(rep_b));
        },
        py::arg("rep_a"), py::arg("rep_b"));

    m.def(
        "hankel_rank",
        [](const std::string& rep_json, size_t maxlen) {
            return hankel_rank(rep_from_json(rep_json), maxlen);
        },
        py::arg("rep"), py::arg("maxlen"));

    m.def(
        "shift",
        [](const std::string& rep_json, const std::string& word, const std::string& side) {
            LinRep r = rep_from_json(rep_json);
            ShiftSide s;
            if (side == "prefix")
                s = ShiftSide::prefix;
            else if (side == "suffix")
                s = ShiftSide::suffix;
            else
                throw ParseError("side must be 'prefix' or 'suffix'");
            return rep_to_json(shift_rep(r, parse_word(r.alphabet(), word), s));
        },
        py::arg("rep"), py::arg("word"), py::arg("side") = "prefix");

    m.def(
        "product",
        [](const std::string& rep_a, const std::string& rep_b, const std::string& law) {
            LinRep a = rep_from_json(rep_a);
            LinRep b = rep_from_json(rep_b);
            if (law == "hadamard") return rep_to_json(hadamard_rep(a, b));
            if (law == "shuffle") return rep_to_json(qshuffle_rep(a, b, a.ring().zero()));
            if (law == "infiltration") return rep_to_json(qshuffle_rep(a, b, a.ring().one()));
            if (law.rfind("q=", 0) == 0)
                return rep_to_json(qshuffle_rep(a, b, a.ring().parse(law.substr(2))));
            throw ParseError("law must be hadamard | shuffle | infiltration | q=<scalar>");
        },
        py::arg("rep_a"), py::arg("rep_b"), py::arg("law") = "hadamard",
        "Dual-law product of two representations.");

    m.def(
        "fock_transfer",
        [](size_t n, long long k, const std::string& weights, size_t order) {
            TransferSeries t = transfer_series(n, k, weights_by_name(weights), order);
            std::vector<std::string> out;
            for (size_t i = 0; i <= t.order(); ++i) out.push_back(t.coeff(i).to_string());
            return out;
        },
        py::arg("n"), py::arg("k"), py::arg("weights") = "unit", py::arg("order") = 10,
        "Coefficients of T_{n->n+k} to the given order.");

    m.def(
        "fock_brute_omega",
        [](size_t n, size_t m, size_t length, const std::string& weights) {
            return brute_force_omega(n, m, length, weights_by_name(weights)).to_string();
        },
        py::arg("n"), py::arg("m"), py::arg("length"), py::arg("weights") = "unit");

    m.def(
        "fock_verify",
        [](size_t n, long long k, const std::string& weights, size_t order) {
            return report_to_json(verify_transfer(n, k, weights_by_name(weights), order));
        },
        py::arg("n"), py::arg("k"), py::arg("weights") = "unit", py::arg("order") = 8);

    m.def(
        "fock_dyck",
        [](const std::string& family, size_t maxlen) {
            std::vector<std::string> out;
            for (const auto& w : dyck_enumerate(dyck_tag(family), maxlen).members)
                out.push_back(format_ladder_word(w));
            return out;
        },
        py::arg("family") = "Dplus", py::arg("maxlen") = 10);

    m.def(
        "fock_words",
        [](size_t n, size_t m, size_t length) {
            std::vector<std::string> out;
            for (const auto& w : enumerate_transporter(n, m, length))
                out.push_back(format_ladder_word(w));
            return out;
        },
        py::arg("n"), py::arg("m"), py::arg("length"),
        "The transporter W_{n->m} at one word length.");
}
