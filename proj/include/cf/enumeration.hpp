#pragma once

#include "cf/closed_forms.hpp"
#include "cf/exact.hpp"
#include "cf/path.hpp"
#include "cf/statistics.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cf {

// A finite path family plus constraint filters. CLI syntax:
//   P:n=2,r=1,h=1   Q:k=2,l=1,r=1,s=2,h=0   Pstar:n=2,r=2,h=1
// followed by +constraint suffixes, e.g. +nonneg+first=U+peak-count=2.
struct FamilySpec {
    enum class Kind { P, Q, Pstar };

    Kind kind = Kind::P;
    long long n = 0, r = 1, h = 0;  // P / Pstar
    long long k = 0, l = 0, s = 1;  // Q (also uses r, h)

    struct Constraints {
        bool nonnegative = false;                // stay >= 0
        bool strictly_positive_interior = false; // vertices 1..m-1 have y > 0
        bool no_flat_on_axis = false;
        std::optional<std::string> first_step;   // first label must be one of these
        std::optional<char> last_step;
        std::optional<long long> peak_count;
        std::optional<long long> valley_count;
        std::optional<long long> circular_peak_count;
        std::optional<long long> desc_run_count;
        std::optional<long long> even_up_count;                 // ups at even x positions
        std::optional<std::vector<long long>> mod_up_counts;    // ups per x mod m class
        bool operator==(const Constraints&) const = default;
    } cons;

    static FamilySpec parse(const std::string& text);
    std::string to_string() const;

    StepSetPtr step_set() const;
    std::map<char, long long> step_budget() const;  // label -> required count
    long long total_steps() const;

    bool operator==(const FamilySpec&) const = default;
};

// Every path of the family exactly once, in lexicographic word order.
// Throws when more than `budget` paths would be delivered (no silent
// truncation). Budget 0 means the CF_MAX_PATHS / built-in default.
void enumerate_family(const FamilySpec& spec, const std::function<void(const Path&)>& fn,
                      long long budget = 0);

Int count_family(const FamilySpec& spec, long long budget = 0);

long long default_path_budget();  // CF_MAX_PATHS override, else 10^7

// What gets histogrammed over a family.
struct Statistic {
    enum class Kind { selector_count, descending_runs, leftmost_highest, positive_vertices };
    enum class CountKind { on_or_below, on_or_above, below, above };

    Kind kind = Kind::selector_count;
    Selector sel;
    CountKind count_kind = CountKind::on_or_below;

    static Statistic selector(const Selector& s, CountKind ck = CountKind::on_or_below);
    static Statistic named(const std::string& name);  // descending-runs | leftmost-highest | positive-vertices
    std::string name() const;
    long long eval(const Path& p) const;
};

Statistic::CountKind count_kind_from_name(const std::string& name);
std::string count_kind_name(Statistic::CountKind ck);

struct DistributionTable {
    std::string family;
    std::string statistic;
    std::map<long long, Int> counts;
    Int total = 0;
};

DistributionTable distribution_table(const FamilySpec& spec, const Statistic& stat,
                                     long long budget = 0);

struct Verdict {
    bool uniform = false;
    Int common = 0;  // the shared count when uniform
    DistributionTable table;
};

// Exhaustive uniformity check. When a value domain is given, every value of
// the domain must be hit with the same count (a missing value is a failure,
// not a vacuous pass); otherwise the observed values are used.
Verdict verify_equidistribution(const FamilySpec& spec, const Statistic& stat,
                                std::optional<std::pair<long long, long long>> domain = {},
                                long long budget = 0);

// ---- theorem registry -----------------------------------------------------

struct TheoremBounds {
    long long max_n = -1;   // -1 = registry default
    long long max_r = -1;
    long long max_kl = -1;
};

struct TheoremTuple {
    std::string params;
    bool uniform = false;
    bool count_matches = false;
    Int common = 0;
    Int expected = 0;
};

struct TheoremReport {
    std::string id;
    bool pass = false;
    std::vector<TheoremTuple> tuples;
};

// Checks one named equidistribution statement exhaustively: for each
// parameter tuple within bounds the distribution must be uniform over the
// theorem's stated value range and the common count must equal the closed
// form.
TheoremReport verify_theorem(const std::string& id, const TheoremBounds& bounds = {});

std::vector<std::string> theorem_ids();

}  // namespace cf
