#include "lctforge/blowup.hpp"

#include <cstdlib>
#include <map>

#include "lctforge/errors.hpp"
#include "lctforge/newton.hpp"

namespace lctforge {

CenterSpec CenterSpec::make(CenterCondition cond, std::optional<ESubcase> sub) {
    CenterSpec c;
    c.condition = cond;
    switch (cond) {
        case CenterCondition::A:
        case CenterCondition::B:
            c.kind = CenterKind::Point;
            c.e_subcase.reset();
            if (sub) throw InputError("center: subcase only applies to condition e");
            break;
        case CenterCondition::C:
        case CenterCondition::D:
            c.kind = CenterKind::Curve;
            c.e_subcase.reset();
            if (sub) throw InputError("center: subcase only applies to condition e");
            break;
        case CenterCondition::E:
            c.kind = CenterKind::Curve;
            c.e_subcase = sub.value_or(ESubcase::InLatestExceptional);
            break;
    }
    return c;
}

std::string CenterSpec::str() const {
    switch (condition) {
        case CenterCondition::A: return "a";
        case CenterCondition::B: return "b";
        case CenterCondition::C: return "c";
        case CenterCondition::D: return "d";
        case CenterCondition::E:
            return e_subcase == ESubcase::InOlderExceptional ? "e(older)" : "e(latest)";
    }
    return "?";
}

BlowupSequence BlowupSequence::validated(std::vector<CenterSpec> centers) {
    if (centers.empty()) throw InputError("blow-up sequence must contain a center");
    return BlowupSequence{std::move(centers)};
}

ChartPath ChartPath::parse(const std::string& s) {
    if (s.empty()) throw InputError("chart path must be nonempty");
    for (char c : s)
        if (c != 'A' && c != 'B') throw InputError("chart path may only contain A/B");
    return ChartPath{s};
}

std::string NormalFormIdeal::str() const {
    std::string m;
    if (h > 0) m += "x" + (h > 1 ? "^" + std::to_string(h) : "");
    if (k > 0) {
        if (!m.empty()) m += "*";
        m += "y" + (k > 1 ? "^" + std::to_string(k) : "");
    }
    if (m.empty()) m = "1";
    return "(" + m + ", z)";
}

PruneResult prune_minimality(const BlowupSequence& seq) {
    PruneResult out;
    for (std::size_t i = 0; i < seq.centers.size(); ++i) {
        const CenterSpec& c = seq.centers[i];
        RewriteLogEntry entry;
        entry.input_index = i;
        switch (c.condition) {
            case CenterCondition::A:
            case CenterCondition::B:
            case CenterCondition::C:
            case CenterCondition::D:
                entry.action = RewriteAction::Deleted;
                entry.reason = "case " + c.str() +
                               ": blow-up replaceable by a local biholomorphism "
                               "away from finitely many fiber points";
                break;
            case CenterCondition::E:
                if (c.e_subcase == ESubcase::InOlderExceptional) {
                    entry.action = RewriteAction::Rewritten;
                    entry.reason =
                        "center inside an older exceptional component: blow-up "
                        "rewritten onto the model where that component was created";
                    out.sequence.centers.push_back(
                        CenterSpec::make(CenterCondition::E, ESubcase::InLatestExceptional));
                } else {
                    entry.action = RewriteAction::Kept;
                    entry.reason = "center inside the latest exceptional divisor";
                    out.sequence.centers.push_back(c);
                }
                break;
        }
        out.log.push_back(std::move(entry));
    }
    return out;
}

NormalFormIdeal compose_charts(std::size_t s, const ChartPath& path) {
    if (path.length() == 0) throw InputError("compose_charts: empty path");
    if (path.length() != s) throw InputError("compose_charts: path length != s");
    NormalFormIdeal nf = path.choices[0] == 'A' ? NormalFormIdeal{1, 0} : NormalFormIdeal{0, 1};
    for (std::size_t i = 1; i < s; ++i) {
        if (path.choices[i] == 'A') nf.h += nf.k;
        else nf.k += nf.h;
    }
    return nf;
}

Rational normal_form_lct(const NormalFormIdeal& nf) {
    if (nf.h == 0 && nf.k == 0) throw InputError("normal form requires max(h,k) >= 1");
    MonomialIdeal ideal(3, {{nf.h, nf.k, 0}, {0, 0, 1}});
    return lct(ideal).c;
}

std::optional<Rational> additive_split_lct(const NormalFormIdeal& nf) {
    if (nf.h == 0 || nf.k == 0) return std::nullopt;
    return Rational(nf.h + nf.k) / Rational(nf.h * nf.k) + Rational(1);
}

long default_path_bound() {
    if (const char* env = std::getenv("LCTFORGE_PATH_BOUND")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return v;
    }
    return 20;
}

std::vector<PathEntry> enumerate_paths(std::size_t s, long bound) {
    if (s == 0) throw InputError("enumerate_paths: s must be positive");
    if (static_cast<long>(s) > bound)
        throw InputError("enumerate_paths: s exceeds the path bound " + std::to_string(bound));
    std::vector<PathEntry> out;
    out.reserve(std::size_t(1) << s);
    std::map<std::pair<long, long>, Rational> lct_cache;
    std::string path(s, 'A');
    for (;;) {
        NormalFormIdeal nf = compose_charts(s, ChartPath{path});
        auto key = std::make_pair(nf.h, nf.k);
        auto it = lct_cache.find(key);
        if (it == lct_cache.end()) it = lct_cache.emplace(key, normal_form_lct(nf)).first;
        out.push_back({path, nf, it->second});
        // Lexicographic successor over {A,B}^s.
        std::size_t pos = s;
        while (pos > 0 && path[pos - 1] == 'B') path[--pos] = 'A';
        if (pos == 0) break;
        path[pos - 1] = 'B';
    }
    return out;
}

LelongVerdict pushforward_lelong_verdict(const BlowupSequence& seq, long bound) {
    LelongVerdict v;
    v.prune = prune_minimality(seq);
    if (v.prune.sequence.centers.empty()) {
        v.kind = VerdictKind::TrivialByRemark;
        return v;
    }
    const std::size_t s = v.prune.sequence.centers.size();
    bool first = true;
    for (const auto& entry : enumerate_paths(s, bound)) {
        if (first || entry.lct < v.min_lct) {
            v.min_lct = entry.lct;
            v.witness_path = entry.path;
            v.witness_nf = entry.nf;
            first = false;
        }
    }
    v.kind = VerdictKind::Vanishes;
    return v;
}

} // namespace lctforge
