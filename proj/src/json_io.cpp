#include "ratcalc/json_io.hpp"

#include <json.hpp>

namespace ratcalc {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

namespace {

json parse_or_throw(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON input");
    return j;
}

const Semiring& ring_from(const json& j) {
    if (!j.contains("semiring") || !j["semiring"].is_string())
        throw ParseError("JSON object needs a \"semiring\" string field");
    return Semiring::by_name(j["semiring"].get<std::string>());
}

AlphabetPtr alphabet_from(const json& j) {
    if (!j.contains("alphabet") || !j["alphabet"].is_array())
        throw ParseError("JSON object needs an \"alphabet\" array field");
    std::vector<std::string> letters;
    for (const auto& l : j["alphabet"]) {
        if (!l.is_string()) throw ParseError("alphabet letters must be strings");
        letters.push_back(l.get<std::string>());
    }
    return make_alphabet(std::move(letters));
}

std::string dump(const ordered& j, int indent) {
    return indent < 0 ? j.dump() : j.dump(indent);
}

WeightSystem::Tail tail_from(const json& j, const char* key) {
    WeightSystem::Tail tail;
    if (!j.contains(key)) return tail; // default: constant 1
    const auto& t = j[key];
    if (!t.is_string()) throw ParseError(std::string(key) + " must be a string");
    std::string s = t.get<std::string>();
    if (s == "n") {
        tail.index_linear = true;
    } else {
        tail.constant = Rational::from_string(s);
    }
    return tail;
}

std::vector<Rational> head_from(const json& j, const char* key) {
    std::vector<Rational> head;
    if (!j.contains(key)) return head;
    if (!j[key].is_array()) throw ParseError(std::string(key) + " must be an array of strings");
    for (const auto& v : j[key]) {
        if (!v.is_string()) throw ParseError("weight entries must be strings");
        head.push_back(Rational::from_string(v.get<std::string>()));
    }
    return head;
}

} // namespace

std::string series_to_json(const TruncatedSeries& s, int indent) {
    ordered j;
    j["semiring"] = std::string(s.ring().name());
    j["alphabet"] = s.alphabet()->letters();
    j["maxlen"] = s.max_len();
    j["terms"] = ordered::array();
    for (const auto& [w, c] : s.terms()) {
        ordered term;
        term["word"] = format_word(w.empty() ? Word(s.alphabet(), {}) : w);
        term["coeff"] = s.ring().to_string(c);
        j["terms"].push_back(std::move(term));
    }
    return dump(j, indent);
}

TruncatedSeries series_from_json(const std::string& text) {
    json j = parse_or_throw(text);
    const Semiring& k = ring_from(j);
    AlphabetPtr alphabet = alphabet_from(j);
    if (!j.contains("maxlen") || !j["maxlen"].is_number_unsigned())
        throw ParseError("series JSON needs a non-negative \"maxlen\"");
    TruncatedSeries s(k, alphabet, j["maxlen"].get<size_t>());
    for (const auto& term : j.value("terms", json::array())) {
        if (!term.contains("word") || !term.contains("coeff"))
            throw ParseError("series term needs \"word\" and \"coeff\"");
        Word w = parse_word(alphabet, term["word"].get<std::string>());
        s.add_coeff(w, k.parse(term["coeff"].get<std::string>()));
    }
    return s;
}

std::string rep_to_json(const LinRep& r, int indent) {
    ordered j;
    j["semiring"] = std::string(r.ring().name());
    j["alphabet"] = r.alphabet()->letters();
    j["dim"] = r.dim();
    j["lambda"] = ordered::array();
    for (size_t i = 0; i < r.dim(); ++i)
        j["lambda"].push_back(r.ring().to_string(r.lambda().at(0, i)));
    j["gamma"] = ordered::array();
    for (size_t i = 0; i < r.dim(); ++i)
        j["gamma"].push_back(r.ring().to_string(r.gamma().at(i, 0)));
    j["mu"] = ordered::object();
    for (uint32_t x = 0; x < r.alphabet()->size(); ++x) {
        ordered rows = ordered::array();
        for (size_t i = 0; i < r.dim(); ++i) {
            ordered row = ordered::array();
            for (size_t jj = 0; jj < r.dim(); ++jj)
                row.push_back(r.ring().to_string(r.mu(x).at(i, jj)));
            rows.push_back(std::move(row));
        }
        j["mu"][r.alphabet()->letter(x)] = std::move(rows);
    }
    return dump(j, indent);
}

LinRep rep_from_json(const std::string& text) {
    json j = parse_or_throw(text);
    const Semiring& k = ring_from(j);
    AlphabetPtr alphabet = alphabet_from(j);
    if (!j.contains("dim") || !j["dim"].is_number_unsigned())
        throw ParseError("rep JSON needs a non-negative \"dim\"");
    const size_t n = j["dim"].get<size_t>();
    auto vec_field = [&](const char* key, bool row) {
        if (!j.contains(key) || !j[key].is_array() || j[key].size() != n)
            throw ParseError(std::string("rep JSON field \"") + key + "\" must list " +
                             std::to_string(n) + " entries");
        Matrix m(k, row ? 1 : n, row ? n : 1);
        for (size_t i = 0; i < n; ++i) {
            Value v = k.parse(j[key][i].get<std::string>());
            if (row)
                m.at(0, i) = v;
            else
                m.at(i, 0) = v;
        }
        return m;
    };
    Matrix lambda = vec_field("lambda", true);
    Matrix gamma = vec_field("gamma", false);
    if (!j.contains("mu") || !j["mu"].is_object())
        throw ParseError("rep JSON needs a \"mu\" object");
    std::vector<Matrix> mu;
    for (uint32_t x = 0; x < alphabet->size(); ++x) {
        const std::string& name = alphabet->letter(x);
        if (!j["mu"].contains(name))
            throw ParseError("rep JSON mu is missing letter '" + name + "'");
        const auto& rows = j["mu"][name];
        if (!rows.is_array() || rows.size() != n)
            throw ParseError("mu matrix for '" + name + "' must have " + std::to_string(n) + " rows");
        Matrix m(k, n, n);
        for (size_t i = 0; i < n; ++i) {
            if (!rows[i].is_array() || rows[i].size() != n)
                throw ParseError("mu matrix for '" + name + "' must be square");
            for (size_t c = 0; c < n; ++c) m.at(i, c) = k.parse(rows[i][c].get<std::string>());
        }
        mu.push_back(std::move(m));
    }
    return LinRep(k, alphabet, std::move(lambda), std::move(mu), std::move(gamma));
}

std::string weights_to_json(const WeightSystem& w) {
    ordered j;
    j["name"] = w.name();
    return j.dump();
}

WeightSystem weights_from_json(const std::string& text) {
    json j = parse_or_throw(text);
    if (j.contains("name")) {
        std::string name = j["name"].get<std::string>();
        if (name == "unit") return WeightSystem::unit();
        if (name == "boson") return WeightSystem::boson();
        if (name != "custom") throw ParseError("unknown weight preset '" + name + "'");
    }
    return WeightSystem::custom(head_from(j, "alpha"), tail_from(j, "alpha_tail"),
                                head_from(j, "beta"), tail_from(j, "beta_tail"));
}

std::string transfer_to_json(const TransferSeries& t, int indent) {
    ordered j;
    j["coefficients"] = ordered::array();
    for (size_t i = 0; i <= t.order(); ++i) j["coefficients"].push_back(t.coeff(i).to_string());
    return dump(j, indent);
}

std::string report_to_json(const TransferReport& r, int indent) {
    ordered j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["weights"] = r.weights;
    j["rows"] = ordered::array();
    for (const auto& row : r.rows) {
        ordered o;
        o["length"] = row.length;
        o["fraction"] = row.from_fraction.to_string();
        o["brute_force"] = row.from_brute.to_string();
        o["match"] = row.match;
        o["support_is_subset"] = row.support_is_subset;
        o["support_equals"] = row.support_equals;
        j["rows"].push_back(std::move(o));
    }
    j["coefficients_match"] = r.coefficients_match;
    j["support_always_subset"] = r.support_always_subset;
    j["support_always_equal"] = r.support_always_equal;
    return dump(j, indent);
}

} // namespace ratcalc
