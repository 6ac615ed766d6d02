#pragma once

#include "ratcalc/errors.hpp"
#include "ratcalc/rational.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace ratcalc {

// The two-letter ladder alphabet: 'down' annihilates (b-), 'up' creates
// (b+). Words are rendered as strings of '-' and '+'.
enum class Step : uint8_t { down = 0, up = 1 };

using LadderWord = std::vector<Step>;

LadderWord parse_ladder_word(std::string_view text); // '-'/'+' characters, '_' for empty
std::string format_ladder_word(const LadderWord& w);

// Number of creations minus annihilations.
int excess(const LadderWord& w);
// Smallest excess over all prefixes (including the empty one, so <= 0).
int min_prefix_excess(const LadderWord& w);

// Member of W_{n->m}: excess m-n and every prefix has excess >= -n.
bool in_transporter(const LadderWord& w, size_t n, size_t m);

// All length-i members of W_{n->m}, in length-lex order with '-' < '+'.
std::vector<LadderWord> enumerate_transporter(size_t n, size_t m, size_t length);

// Annihilation weights alpha_k and creation weights beta_k, k >= 1,
// exact rationals. Presets: unit (all 1) and boson (alpha_k = k,
// beta_k = 1). Custom systems give head lists plus a tail rule.
class WeightSystem {
public:
    // tail rule for indices beyond the head list
    struct Tail {
        bool index_linear = false; // w_k = k
        Rational constant = Rational(1);
    };

    static WeightSystem unit();
    static WeightSystem boson();
    static WeightSystem custom(std::vector<Rational> alpha_head, Tail alpha_tail,
                               std::vector<Rational> beta_head, Tail beta_tail,
                               std::string name = "custom");

    const std::string& name() const { return name_; }
    Rational alpha(size_t k) const; // k >= 1
    Rational beta(size_t k) const;  // k >= 1

private:
    WeightSystem() = default;
    std::string name_;
    std::vector<Rational> alpha_head_, beta_head_;
    Tail alpha_tail_, beta_tail_;
};

// Sum over all 2^length ladder words of the weight of the path taken
// from level n, counting only paths that end at level m. A path dies
// (weight 0) when 'down' is read at level 0.
Rational brute_force_omega(size_t n, size_t m, size_t length, const WeightSystem& weights);

// Words of given length whose path weight from level n to level m is
// nonzero (the support checked against the transporter).
std::vector<LadderWord> nonzero_weight_words(size_t n, size_t m, size_t length,
                                             const WeightSystem& weights);

// Dyck code families.
struct DyckTag {
    enum class Family : uint8_t { dyck, positive, negative_depth } family;
    size_t depth = 0; // for negative_depth: min prefix excess >= -depth

    static DyckTag d() { return {Family::dyck, 0}; }
    static DyckTag plus() { return {Family::positive, 0}; }
    static DyckTag minus(size_t n) { return {Family::negative_depth, n}; }
};

struct DyckFamily {
    DyckTag tag;
    size_t max_len;
    std::vector<LadderWord> members; // length-lex order
};

// Members of the family up to the length bound, by direct filtering of
// all words: excess zero, indecomposable (no proper nonempty prefix of
// excess zero), positivity/negativity constraint, depth bound.
DyckFamily dyck_enumerate(DyckTag tag, size_t max_len);

// True iff the filter enumeration equals the least fixpoint of the
// self-reproducing equation, truncated at the bound:
//   D+ = b+ (D+)* b-   and   D-(n) = b- (D-(n-1))* b+,  D-(0) = {}.
bool check_dyck_fixpoint(DyckTag tag, size_t max_len);

// True iff both factorization products for W_{n->n+k} enumerate the same
// word set up to the bound, and both equal the transporter.
bool check_factorization(size_t n, long long k, size_t max_len);

// Truncated power series in t over exact rationals.
class TransferSeries {
public:
    explicit TransferSeries(size_t order) : coeffs_(order + 1) {}

    size_t order() const { return coeffs_.size() - 1; }
    const Rational& coeff(size_t i) const;
    void set_coeff(size_t i, Rational v);

    bool operator==(const TransferSeries& o) const { return coeffs_ == o.coeffs_; }

private:
    std::vector<Rational> coeffs_;
};

TransferSeries ts_one(size_t order);
TransferSeries ts_add(const TransferSeries& f, const TransferSeries& g);
TransferSeries ts_mul(const TransferSeries& f, const TransferSeries& g);
TransferSeries ts_scale(const Rational& c, const TransferSeries& f);
// t^k . f, coefficients beyond the order dropped
TransferSeries ts_shift(const TransferSeries& f, size_t k);
// 1/(1-e) for proper e
TransferSeries ts_geometric(const TransferSeries& e);

enum class CfPart { plus, minus, full };

// The continued-fraction generating series at level n: F+ sums positive
// excursions, F- negative ones (empty below level 1), F both.
TransferSeries cf_F(size_t n, CfPart part, const WeightSystem& weights, size_t order);

// T_{n->n+k} to the given order, computed by both product expansions of
// the applicable factorization; they must agree exactly.
TransferSeries transfer_series(size_t n, long long k, const WeightSystem& weights, size_t order);

struct TransferRow {
    size_t length;            // word length i
    Rational from_fraction;   // continued-fraction coefficient of t^i
    Rational from_brute;      // brute-force omega
    bool match;
    bool support_is_subset;   // nonzero-weight words inside W
    bool support_equals;      // equality of the two sets
};

struct TransferReport {
    size_t n;
    long long k;
    std::string weights;
    std::vector<TransferRow> rows;
    bool coefficients_match;  // all rows
    bool support_always_subset;
    bool support_always_equal;
};

TransferReport verify_transfer(size_t n, long long k, const WeightSystem& weights, size_t order);

} // namespace ratcalc
