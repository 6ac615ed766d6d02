// ratcalc: rational series calculus over semirings from the command line.
//
// Exit codes: 0 success, 1 domain error (non-rational star, mixed
// semirings, unstarrable element, ...), 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include "ratcalc/json_io.hpp"
#include "ratcalc/linrep.hpp"
#include "ratcalc/ratexpr.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

using namespace ratcalc;

namespace {

struct GlobalOpts {
    std::string semiring = "rat";
    std::string format = "json"; // json | table
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

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
            throw ParseError("--lambda expects letter=value items, got '" + item + "'");
        out.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    }
    return out;
}

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

struct ExprContext {
    const Semiring* ring;
    AlphabetPtr alphabet;
    Localization lambda;
    ExprPtr expr;
};

// The working alphabet is whatever the expression and the --lambda /
// --alphabet flags mention; letters default to constant term zero.
ExprContext build_context(const GlobalOpts& g, const std::string& expr_text,
                          const std::string& lambda_text, const std::string& alphabet_csv) {
    const Semiring& k = Semiring::by_name(g.semiring);
    std::set<std::string> names = letters_in_text(expr_text);
    auto assignments = split_assignments(lambda_text);
    for (const auto& [name, value] : assignments) names.insert(name);
    if (!alphabet_csv.empty()) {
        size_t pos = 0;
        while (pos < alphabet_csv.size()) {
            size_t comma = alphabet_csv.find(',', pos);
            if (comma == std::string::npos) comma = alphabet_csv.size();
            std::string item = alphabet_csv.substr(pos, comma - pos);
            if (!item.empty()) names.insert(item);
            pos = comma + 1;
        }
    }
    if (names.empty()) names.insert("a"); // letterless expressions still need a carrier
    AlphabetPtr alphabet = make_alphabet(std::vector<std::string>(names.begin(), names.end()));
    std::vector<Value> values(alphabet->size(), k.zero());
    for (const auto& [name, value] : assignments)
        values[alphabet->index_of(name)] = k.parse(value);
    Localization lambda(k, alphabet, std::move(values));
    ExprPtr e = parse_expr(expr_text, alphabet, k);
    return ExprContext{&k, alphabet, std::move(lambda), std::move(e)};
}

WeightSystem load_weights(const std::string& source) {
    if (source == "unit") return WeightSystem::unit();
    if (source == "boson") return WeightSystem::boson();
    if (!source.empty() && source.front() == '{') return weights_from_json(source);
    return weights_from_json(read_input(source));
}

DyckTag parse_family(const std::string& family) {
    if (family == "D") return DyckTag::d();
    if (family == "Dplus") return DyckTag::plus();
    if (family.rfind("Dminus:", 0) == 0) {
        try {
            return DyckTag::minus(std::stoul(family.substr(7)));
        } catch (const std::exception&) {
            throw ParseError("bad depth in '" + family + "'");
        }
    }
    throw ParseError("unknown Dyck family '" + family + "' (D | Dplus | Dminus:<n>)");
}

void print_transfer(const TransferSeries& t, const GlobalOpts& g) {
    if (g.format == "table") {
        std::cout << "order  coefficient\n";
        for (size_t i = 0; i <= t.order(); ++i)
            std::cout << i << "\t" << t.coeff(i).to_string() << "\n";
    } else {
        std::cout << transfer_to_json(t) << "\n";
    }
}

void print_report(const TransferReport& r, const GlobalOpts& g) {
    if (g.format == "table") {
        std::cout << "i\tfraction\tbrute\tmatch\tsupport==W\n";
        for (const auto& row : r.rows)
            std::cout << row.length << "\t" << row.from_fraction.to_string() << "\t"
                      << row.from_brute.to_string() << "\t" << (row.match ? "yes" : "no") << "\t"
                      << (row.support_equals ? "yes" : "no") << "\n";
        std::cout << "coefficients " << (r.coefficients_match ? "match" : "DIFFER")
                  << "; support always subset: " << (r.support_always_subset ? "yes" : "no")
                  << "; support always equal: " << (r.support_always_equal ? "yes" : "no") << "\n";
    } else {
        std::cout << report_to_json(r) << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rational series calculus over semirings"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    GlobalOpts g;
    app.add_option("--semiring", g.semiring, "bool|nat|int|rat|maxplus|cpos")
        ->capture_default_str();
    app.add_option("--format", g.format, "json|table")->capture_default_str();

    // ---- eval ----------------------------------------------------------
    std::string expr_text, word_text, lambda_text, alphabet_csv, theta_path;
    size_t maxlen = 8;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression to a series");
    eval_cmd->add_option("--expr", expr_text, "rational expression")->required();
    eval_cmd->add_option("--word", word_text, "single word to read off ('_' for the empty word)");
    eval_cmd->add_option("--maxlen", maxlen, "series window");
    eval_cmd->add_option("--lambda", lambda_text, "letter=value constant terms");
    eval_cmd->add_option("--alphabet", alphabet_csv, "extra letters, comma separated");
    eval_cmd->add_option("--theta", theta_path, "JSON file: {letter: series-json, ...}");

    // ---- const ---------------------------------------------------------
    auto* const_cmd = app.add_subcommand("const", "constant term of a rational expression");
    const_cmd->add_option("--expr", expr_text, "rational expression")->required();
    const_cmd->add_option("--lambda", lambda_text, "letter=value constant terms");
    const_cmd->add_option("--alphabet", alphabet_csv, "extra letters, comma separated");

    // ---- compile / decompile -------------------------------------------
    auto* compile_cmd = app.add_subcommand("compile", "expression -> linear representation");
    compile_cmd->add_option("--expr", expr_text, "rational expression")->required();
    compile_cmd->add_option("--lambda", lambda_text, "letter=value constant terms");
    compile_cmd->add_option("--alphabet", alphabet_csv, "extra letters, comma separated");

    std::string rep_path = "-", rep2_path;
    auto* decompile_cmd = app.add_subcommand("decompile", "linear representation -> expression");
    decompile_cmd->add_option("--rep", rep_path, "representation JSON file, '-' for stdin");

    // ---- reduce / equiv / rank / shift / product ------------------------
    auto* reduce_cmd = app.add_subcommand("reduce", "minimize over the field instance");
    reduce_cmd->add_option("--rep", rep_path, "representation JSON file, '-' for stdin");

    auto* equiv_cmd = app.add_subcommand("equiv", "decide equality of two representations");
    equiv_cmd->add_option("rep_a", rep_path, "first representation")->required();
    equiv_cmd->add_option("rep_b", rep2_path, "second representation")->required();

    auto* rank_cmd = app.add_subcommand("rank", "Hankel rank up to a window");
    rank_cmd->add_option("--rep", rep_path, "representation JSON file, '-' for stdin");
    rank_cmd->add_option("--maxlen", maxlen, "row/column word length bound");

    std::string side = "prefix";
    auto* shift_cmd = app.add_subcommand("shift", "shift the realized series by a word");
    shift_cmd->add_option("--rep", rep_path, "representation JSON file, '-' for stdin");
    shift_cmd->add_option("--word", word_text, "shift word")->required();
    shift_cmd->add_option("--side", side, "prefix|suffix")->capture_default_str();

    std::string law = "hadamard";
    auto* product_cmd = app.add_subcommand("product", "dual-law product of two representations");
    product_cmd->add_option("rep_a", rep_path, "first representation")->required();
    product_cmd->add_option("rep_b", rep2_path, "second representation")->required();
    product_cmd->add_option("--law", law, "hadamard|shuffle|infiltration|q=<scalar>")
        ->capture_default_str();

    // ---- fock ------------------------------------------------------------
    auto* fock = app.add_subcommand("fock", "two-letter ladder carrier computations");
    fock->require_subcommand(1);
    size_t fock_n = 0, fock_m = 0, order = 10, length = 0;
    long long fock_k = 0;
    std::string weights = "unit", family = "Dplus";

    auto* transfer_cmd = fock->add_subcommand("transfer", "T_{n->n+k} by continued fractions");
    transfer_cmd->add_option("--n", fock_n, "start level")->capture_default_str();
    transfer_cmd->add_option("--k", fock_k, "level change")->capture_default_str();
    transfer_cmd->add_option("--weights", weights, "unit|boson|file.json|inline JSON")
        ->capture_default_str();
    transfer_cmd->add_option("--order", order, "series order")->capture_default_str();

    auto* verify_cmd = fock->add_subcommand("verify", "continued fractions vs brute force");
    verify_cmd->add_option("--n", fock_n, "start level")->capture_default_str();
    verify_cmd->add_option("--k", fock_k, "level change")->capture_default_str();
    verify_cmd->add_option("--weights", weights, "unit|boson|file.json|inline JSON")
        ->capture_default_str();
    verify_cmd->add_option("--order", order, "series order")->capture_default_str();

    auto* dyck_cmd = fock->add_subcommand("dyck", "enumerate a Dyck code family");
    dyck_cmd->add_option("--family", family, "D|Dplus|Dminus:<n>")->capture_default_str();
    dyck_cmd->add_option("--maxlen", maxlen, "length bound")->capture_default_str();

    auto* words_cmd = fock->add_subcommand("words", "enumerate the transporter W_{n->m}^{(i)}");
    words_cmd->add_option("--n", fock_n, "start level")->capture_default_str();
    words_cmd->add_option("--m", fock_m, "end level")->capture_default_str();
    words_cmd->add_option("--len", length, "word length")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*eval_cmd) {
            ExprContext ctx = build_context(g, expr_text, lambda_text, alphabet_csv);
            LetterAssignment theta = [&] {
                if (theta_path.empty())
                    return LetterAssignment::localized_identity(ctx.lambda, maxlen);
                nlohmann::json images_json = nlohmann::json::parse(read_input(theta_path));
                std::vector<TruncatedSeries> images;
                for (uint32_t x = 0; x < ctx.alphabet->size(); ++x) {
                    const std::string& name = ctx.alphabet->letter(x);
                    if (!images_json.contains(name))
                        throw ParseError("theta file is missing letter '" + name + "'");
                    images.push_back(series_from_json(images_json[name].dump()));
                }
                LetterAssignment t(*ctx.ring, ctx.alphabet, std::move(images));
                // an explicit --lambda must agree with the induced one
                for (uint32_t x = 0; x < ctx.alphabet->size(); ++x) {
                    if (!(t.induced().at(x) == ctx.lambda.at(x)))
                        throw DomainMismatchError(
                            "--lambda disagrees with the constant terms of --theta");
                }
                return t;
            }();
            TruncatedSeries s = eval_expr(ctx.expr, theta, maxlen);
            if (word_text.empty()) {
                std::cout << series_to_json(s, g.format == "table" ? 2 : -1) << "\n";
            } else {
                Word w = parse_word(theta.target_alphabet(), word_text);
                std::cout << ctx.ring->to_string(s.coeff(w)) << "\n";
            }
        } else if (*const_cmd) {
            ExprContext ctx = build_context(g, expr_text, lambda_text, alphabet_csv);
            std::cout << ctx.ring->to_string(const_term(ctx.expr, ctx.lambda)) << "\n";
        } else if (*compile_cmd) {
            ExprContext ctx = build_context(g, expr_text, lambda_text, alphabet_csv);
            std::cout << rep_to_json(expr_to_rep(ctx.expr, ctx.lambda)) << "\n";
        } else if (*decompile_cmd) {
            LinRep r = rep_from_json(read_input(rep_path));
            std::cout << format_expr(rep_to_expr(r), r.alphabet(), r.ring()) << "\n";
        } else if (*reduce_cmd) {
            LinRep r = rep_from_json(read_input(rep_path));
            std::cout << rep_to_json(reduce_rep(r)) << "\n";
        } else if (*equiv_cmd) {
            LinRep a = rep_from_json(read_input(rep_path));
            LinRep b = rep_from_json(read_input(rep2_path));
            std::cout << (equiv(a, b) ? "true" : "false") << "\n";
        } else if (*rank_cmd) {
            LinRep r = rep_from_json(read_input(rep_path));
            std::cout << hankel_rank(r, maxlen) << "\n";
        } else if (*shift_cmd) {
            LinRep r = rep_from_json(read_input(rep_path));
            ShiftSide s = side == "suffix" ? ShiftSide::suffix : ShiftSide::prefix;
            if (side != "suffix" && side != "prefix")
                throw ParseError("--side must be prefix or suffix");
            std::cout << rep_to_json(shift_rep(r, parse_word(r.alphabet(), word_text), s)) << "\n";
        } else if (*product_cmd) {
            LinRep a = rep_from_json(read_input(rep_path));
            LinRep b = rep_from_json(read_input(rep2_path));
            LinRep out = [&] {
                if (law == "hadamard") return hadamard_rep(a, b);
                if (law == "shuffle") return qshuffle_rep(a, b, a.ring().zero());
                if (law == "infiltration") return qshuffle_rep(a, b, a.ring().one());
                if (law.rfind("q=", 0) == 0)
                    return qshuffle_rep(a, b, a.ring().parse(law.substr(2)));
                throw ParseError("--law must be hadamard|shuffle|infiltration|q=<scalar>");
            }();
            std::cout << rep_to_json(out) << "\n";
        } else if (*transfer_cmd) {
            print_transfer(transfer_series(fock_n, fock_k, load_weights(weights), order), g);
        } else if (*verify_cmd) {
            print_report(verify_transfer(fock_n, fock_k, load_weights(weights), order), g);
        } else if (*dyck_cmd) {
            DyckFamily fam = dyck_enumerate(parse_family(family), maxlen);
            if (g.format == "table") {
                for (const auto& w : fam.members) std::cout << format_ladder_word(w) << "\n";
            } else {
                nlohmann::ordered_json j;
                j["family"] = family;
                j["maxlen"] = fam.max_len;
                j["words"] = nlohmann::ordered_json::array();
                for (const auto& w : fam.members) j["words"].push_back(format_ladder_word(w));
                std::cout << j.dump() << "\n";
            }
        } else if (*words_cmd) {
            auto members = enumerate_transporter(fock_n, fock_m, length);
            if (g.format == "table") {
                for (const auto& w : members) std::cout << format_ladder_word(w) << "\n";
            } else {
                nlohmann::ordered_json j;
                j["n"] = fock_n;
                j["m"] = fock_m;
                j["length"] = length;
                j["words"] = nlohmann::ordered_json::array();
                for (const auto& w : members) j["words"].push_back(format_ladder_word(w));
                std::cout << j.dump() << "\n";
            }
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
