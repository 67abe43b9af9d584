#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lctforge/rational.hpp"

namespace lctforge {

enum class CenterKind { Point, Curve };
enum class CenterCondition { A, B, C, D, E };
enum class ESubcase { InOlderExceptional, InLatestExceptional };

// Classification of one blow-up center relative to the running
// exceptional locus. Conditions a,b are points; c,d,e are curves; e splits
// into "inside an older exceptional component" and "inside the latest
// exceptional divisor entirely".
struct CenterSpec {
    CenterKind kind = CenterKind::Curve;
    CenterCondition condition = CenterCondition::E;
    std::optional<ESubcase> e_subcase = ESubcase::InLatestExceptional;

    static CenterSpec make(CenterCondition cond,
                           std::optional<ESubcase> sub = std::nullopt);
    std::string str() const;
};

// Ordered list of center classifications; the first retained blow-up is
// always along the curve Z0 = {x0 = y0 = 0} of the ambient model.
struct BlowupSequence {
    std::vector<CenterSpec> centers;

    // User-facing constructor: at least one center required.
    static BlowupSequence validated(std::vector<CenterSpec> centers);
};

// One chart choice per retained blow-up: 'A' is the chart (x, xy, z), 'B'
// is (xy, y, z), both taken after recentering the curve to {x = y = 0}.
struct ChartPath {
    std::string choices;  // over {'A','B'}, length >= 1

    static ChartPath parse(const std::string& s);
    std::size_t length() const { return choices.size(); }
};

// Reduced pullback ideal (x^h y^k, z). Chart composition keeps gcd(h,k)=1
// and max(h,k) >= 1 (the exponent pair walks the Stern-Brocot recurrence).
struct NormalFormIdeal {
    long h = 0;
    long k = 0;
    std::string str() const;
    bool operator==(const NormalFormIdeal&) const = default;
};

enum class RewriteAction { Deleted, Rewritten, Kept };

struct RewriteLogEntry {
    std::size_t input_index = 0;
    RewriteAction action = RewriteAction::Kept;
    std::string reason;
};

struct PruneResult {
    BlowupSequence sequence;  // may be empty after pruning
    std::vector<RewriteLogEntry> log;
};

// Canonical minimal sequence: centers with condition a-d are deleted (a
// neighborhood argument replaces those blow-ups by local biholomorphisms);
// e-centers inside an older exceptional component rewrite onto the latest
// model. Processes left to right.
PruneResult prune_minimality(const BlowupSequence& seq);

// Exponent recurrence of the chart calculus: after the first blow-up
// A -> (1,0), B -> (0,1); each further step maps A: (h,k) -> (h+k, k) and
// B: (h,k) -> (h, h+k).
NormalFormIdeal compose_charts(std::size_t s, const ChartPath& path);

// lct of (x^h y^k, z) computed by the Newton-polyhedron diagonal.
Rational normal_form_lct(const NormalFormIdeal& nf);

// The value (h+k)/(hk) + 1 obtained by splitting the ideal additively as
// c(x^h y^k) + c(z). Undefined (nullopt) when hk = 0. For min(h,k) >= 1 it
// strictly exceeds the diagonal value; the CLI reports both, and both
// exceed 1.
std::optional<Rational> additive_split_lct(const NormalFormIdeal& nf);

struct PathEntry {
    std::string path;
    NormalFormIdeal nf;
    Rational lct;
};

long default_path_bound();  // 20, overridable via LCTFORGE_PATH_BOUND

// All 2^s chart paths with normal forms and thresholds, sorted by path
// string. Throws InputError when s exceeds the bound.
std::vector<PathEntry> enumerate_paths(std::size_t s, long bound = default_path_bound());

enum class VerdictKind { Vanishes, TrivialByRemark };

struct LelongVerdict {
    VerdictKind kind = VerdictKind::Vanishes;
    // Certificate for Vanishes: the minimal threshold over all chart paths
    // and a path attaining it; min_lct > 1 always.
    Rational min_lct;
    std::string witness_path;
    NormalFormIdeal witness_nf;
    PruneResult prune;
};

// Prunes the sequence; an empty remainder yields TrivialByRemark (the
// pushed-forward mass spreads over a locus the curve meets in finitely
// many points). Otherwise certifies vanishing of the generic Lelong number
// through min lct > 1.
LelongVerdict pushforward_lelong_verdict(const BlowupSequence& seq,
                                         long bound = default_path_bound());

} // namespace lctforge
