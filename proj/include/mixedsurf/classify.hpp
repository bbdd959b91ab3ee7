#pragma once

// End-to-end classification runs.  Given target invariant triples
// (K^2, p_g, q) and a group catalogue, a run enumerates every admissible
// covering type, searches each catalogued group of the matching order for
// generating vectors and mixed extensions, keeps the fixed-point-free
// configurations, merges them into equivalence classes, and computes the
// full invariant record of one representative per class.  Types whose
// group order falls outside catalogue coverage are reported as skips, so
// the output states exactly what was searched and what was not.
//
// Family identity is the joint orbit of (vector, extension) under
// extension-class moves, the vector moves, and relabelings by the
// automorphisms preserving the extension class.  Extensions are merged
// first; each surviving class then contributes one vector orbit per
// family, represented by its lexicographically least member of ascending
// period layout.  Every reported quantity is constant on these orbits, so
// filtering before merging loses nothing.
//
// Runs are deterministic: work items are processed in a fixed order (or
// handed to a worker pool whose results are merged back in that order),
// and the final family and skip lists are sorted by a canonical total
// order, so the same inputs always produce byte-identical reports
// regardless of the job count.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "albanese.hpp"
#include "catalogue.hpp"
#include "extension.hpp"
#include "genvec.hpp"
#include "group.hpp"
#include "homology.hpp"
#include "invariants.hpp"
#include "typeenum.hpp"

namespace mixedsurf {

struct ClassifyOptions {
    long long max_order = 0;  // additional order cap; 0 = whole catalogue
    int jobs = 1;             // worker threads; output independent of this
    std::string strategy = "table-calibrated";  // fibre monodromy strategy
};

// Result of one classification run.  `millis` is wall-clock bookkeeping
// for progress reporting only and is never serialized, keeping emitted
// reports byte-identical across runs.
struct ClassificationRun {
    std::vector<SurfaceTarget> targets;
    std::vector<SurfaceFamily> families;
    std::vector<SkipRecord> skips;
    long long millis = 0;
};

namespace detail {

using AutList = std::vector<std::vector<int>>;

// Automorphism lists are the one expensive per-group artefact shared by
// several covering types and targets, so they are cached per catalogue
// identity.  Lists are deterministic, hence any racing recomputation is
// harmless: the first insert wins and duplicates are discarded.
inline std::shared_ptr<const AutList> cached_automorphisms(
    const CatalogueEntry& entry) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const AutList>> cache;
    const std::pair<int, int> key{entry.order, entry.index};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto fresh = std::make_shared<const AutList>(automorphisms(entry.group));
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(fresh)).first->second;
}

// A small generating subset of a permutation group given as a full element
// list: scan in order, keep an element whenever the closure of the kept
// ones does not contain it yet.  Orbit walks then multiply by a handful of
// generators instead of the whole (possibly huge) stabilizer.
inline AutList reduce_generators(const AutList& elems, int n) {
    std::vector<int> ident(n);
    std::iota(ident.begin(), ident.end(), 0);
    std::set<std::vector<int>> closed{ident};
    AutList gens;
    for (const auto& e : elems) {
        if (closed.size() == elems.size()) break;
        if (closed.count(e)) continue;
        gens.push_back(e);
        std::vector<std::vector<int>> frontier(closed.begin(), closed.end());
        while (!frontier.empty()) {
            std::vector<std::vector<int>> next;
            for (const auto& x : frontier)
                for (const auto& a : gens) {
                    std::vector<int> y(n);
                    for (int i = 0; i < n; ++i) y[i] = a[x[i]];
                    if (closed.insert(y).second) next.push_back(std::move(y));
                }
            frontier = std::move(next);
        }
    }
    return gens;
}

// Orbit representatives of `vectors` under the vector moves plus the
// relabeling generators.  `vectors` must be lexicographically ascending
// and consist of all eligible vectors whose positional periods are the
// ascending type layout; the moves permute periods but preserve the orbit,
// so the first unvisited seed is exactly the lex-least ascending-layout
// member of its orbit and serves as the representative.
inline std::vector<std::vector<int>> joint_orbit_reps(
    const FiniteGroup& g, int q, const std::vector<std::vector<int>>& vectors,
    const AutList& relabel_gens) {
    std::set<std::vector<int>> visited;
    std::vector<std::vector<int>> reps;
    for (const auto& seed : vectors) {
        if (visited.count(seed)) continue;
        reps.push_back(seed);
        visited.insert(seed);
        std::vector<std::vector<int>> frontier{seed};
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            const std::vector<int> cur = frontier[i];
            for (auto& w : move_images(g, q, cur))
                if (visited.insert(w).second) frontier.push_back(std::move(w));
            for (const auto& alpha : relabel_gens) {
                auto w = relabel_vector(alpha, cur);
                if (visited.insert(w).second) frontier.push_back(std::move(w));
            }
        }
    }
    return reps;
}

}  // namespace detail

// Short deterministic description of a group outside the catalogue:
// order, abelianization, and (when not abelian) center and derived orders.
inline std::string fingerprint_label(const FiniteGroup& g) {
    const GroupFingerprint fp = fingerprint(g);
    std::string s = std::to_string(fp.order) + "~ab[";
    for (std::size_t i = 0; i < fp.abelianization.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(fp.abelianization[i]);
    }
    s += ']';
    if (fp.center_order != fp.order)
        s += "z" + std::to_string(fp.center_order) + "d" +
             std::to_string(fp.derived_order);
    return s;
}

// Reporting label for a group: the catalogue label when an isomorphic
// entry exists, otherwise the fingerprint description.
inline std::string group_label(const Catalogue& cat, const FiniteGroup& g) {
    if (const CatalogueEntry* e = cat.find_isomorphic(g)) return e->label();
    return fingerprint_label(g);
}

namespace detail {

inline SurfaceFamily make_family(const SurfaceTarget& t, const CoveringType& ty,
                                 const Catalogue& cat,
                                 const CatalogueEntry& entry,
                                 const MixedExtension& ext,
                                 const std::vector<int>& o2,
                                 const FiniteGroup& big,
                                 const BranchDescriptor& branch,
                                 const std::vector<int>& v,
                                 const MonodromyStrategy& strategy) {
    SurfaceFamily f;
    f.k2 = t.k2;
    f.pg = t.pg;
    f.q = t.q;
    f.chi = t.chi();
    f.e = euler_number(ty.g, ty.order_g, ty.n_o2);
    f.g = ty.g;
    f.type = ty;
    f.g0_label = entry.label();
    f.g_label = group_label(cat, big);
    f.vector = v;
    f.extension = ext;
    f.branch = branch;
    const std::vector<int> periods(ty.periods.begin(), ty.periods.end());
    f.h1 = h1_of_family(
        make_homology_input(entry.group, static_cast<int>(ty.q), periods, v, ext),
        o2);
    if (ty.q == 1)
        f.g_alb = albanese_genus(compute_M(entry.group, ext, 1, v, strategy),
                                 ty.g, ty.n_o2, ty.order_g0);
    f.minus_one_bound = minus_one_curve_bound(f.k2);
    const ConsistencyReport report = consistency_check(f);
    if (!report.ok()) {
        std::string msg = "inconsistent family [" + f.g0_label + " <- " +
                          f.g_label + "]:";
        for (const auto& violation : report.violations) msg += " " + violation + ";";
        throw error(msg);
    }
    return f;
}

// Search one (target, covering type, catalogue group) combination and
// return its families.  The cheap algebraic rejections run first; the
// expensive automorphism and vector machinery only fires for groups that
// could actually carry a configuration.
inline std::vector<SurfaceFamily> classify_item(const SurfaceTarget& t,
                                                const CoveringType& ty,
                                                const Catalogue& cat,
                                                const CatalogueEntry& entry,
                                                const MonodromyStrategy& strategy) {
    std::vector<SurfaceFamily> out;
    const FiniteGroup& g0 = entry.group;
    const int q = static_cast<int>(ty.q);
    const std::vector<int> periods(ty.periods.begin(), ty.periods.end());
    if (!abelianized_generation_possible(g0, q,
                                         static_cast<int>(periods.size())))
        return out;
    if (!exists_vector(g0, q, periods)) return out;

    const auto auts = cached_automorphisms(entry);
    const auto exts = enumerate_extensions(g0, *auts);
    if (exts.empty()) return out;
    const ExtensionClasses classes = extension_classes(g0, *auts, exts);

    struct Candidate {
        MixedExtension ext;
        std::vector<int> o2;
        FiniteGroup big;
        BranchDescriptor branch;
        AutList relabel_gens;
    };
    std::vector<Candidate> candidates;
    for (const int rep_index : classes.reps) {
        const MixedExtension& ext = classes.all[rep_index];
        std::vector<int> o2 = o2_complements(g0, ext);
        if (static_cast<long long>(o2.size()) != ty.n_o2) continue;
        FiniteGroup big = mixed_group(g0, ext);
        BranchDescriptor branch = branch_descriptor(big, g0.order(), o2, ty.g);
        if (!post_filters(ty, o2, branch)) continue;
        AutList gens =
            detail::reduce_generators(extension_stabilizer(g0, *auts, ext),
                                      g0.order());
        candidates.push_back({ext, std::move(o2), std::move(big),
                              std::move(branch), std::move(gens)});
    }
    if (candidates.empty()) return out;

    const auto vectors = enumerate_vectors(g0, q, periods);
    for (const auto& cand : candidates) {
        std::vector<std::vector<int>> free;
        for (const auto& v : vectors)
            if (is_semi_isogenous(g0, q, v, cand.ext)) free.push_back(v);
        if (free.empty()) continue;
        for (const auto& rep :
             joint_orbit_reps(g0, q, free, cand.relabel_gens))
            out.push_back(make_family(t, ty, cat, entry, cand.ext, cand.o2,
                                      cand.big, cand.branch, rep, strategy));
    }
    return out;
}

}  // namespace detail

// Canonical report order for families: K^2 descending, then target, group
// order, group labels, covering type, branch, homology, and finally the
// representative data as an absolute tiebreak, so equal-looking rows from
// genuinely distinct classes keep a stable relative order.
inline bool family_less(const SurfaceFamily& a, const SurfaceFamily& b) {
    if (a.k2 != b.k2) return a.k2 > b.k2;
    if (a.pg != b.pg) return a.pg < b.pg;
    if (a.q != b.q) return a.q < b.q;
    if (a.type.order_g != b.type.order_g) return a.type.order_g < b.type.order_g;
    if (a.g_label != b.g_label) return a.g_label < b.g_label;
    if (a.g0_label != b.g0_label) return a.g0_label < b.g0_label;
    if (a.type.periods != b.type.periods) return a.type.periods < b.type.periods;
    if (a.branch.curves != b.branch.curves) return a.branch.curves < b.branch.curves;
    if (a.h1 != b.h1) return a.h1 < b.h1;
    if (a.g_alb != b.g_alb) return a.g_alb < b.g_alb;
    if (!(a.extension == b.extension)) return a.extension < b.extension;
    return a.vector < b.vector;
}

// Canonical report order for skips: K^2 descending, then group order
// descending (largest unexplored searches first), then period layout.
inline bool skip_less(const SkipRecord& a, const SkipRecord& b) {
    if (a.target.k2 != b.target.k2) return a.target.k2 > b.target.k2;
    if (a.target.pg != b.target.pg) return a.target.pg < b.target.pg;
    if (a.q != b.q) return a.q < b.q;
    if (a.order_g0 != b.order_g0) return a.order_g0 > b.order_g0;
    if (a.periods != b.periods) return a.periods < b.periods;
    return a.reason < b.reason;
}

inline ClassificationRun classify(std::vector<SurfaceTarget> targets,
                                  const Catalogue& cat,
                                  const ClassifyOptions& opts = {}) {
    const auto start = std::chrono::steady_clock::now();
    const MonodromyStrategy& strategy = monodromy_strategy(opts.strategy);

    std::sort(targets.begin(), targets.end(),
              [](const SurfaceTarget& a, const SurfaceTarget& b) {
                  if (a.k2 != b.k2) return a.k2 > b.k2;
                  if (a.pg != b.pg) return a.pg < b.pg;
                  return a.q < b.q;
              });
    targets.erase(std::unique(targets.begin(), targets.end(),
                              [](const SurfaceTarget& a, const SurfaceTarget& b) {
                                  return a.k2 == b.k2 && a.pg == b.pg &&
                                         a.q == b.q;
                              }),
                  targets.end());

    ClassificationRun run;
    run.targets = targets;

    const auto covered = [&](long long order) {
        return cat.has_order(static_cast<int>(order)) &&
               (opts.max_order == 0 || order <= opts.max_order);
    };
    std::vector<std::vector<CoveringType>> types_per_target(targets.size());
    for (std::size_t i = 0; i < targets.size(); ++i) {
        auto [types, skips] = admissible_types(targets[i], covered);
        types_per_target[i] = std::move(types);
        run.skips.insert(run.skips.end(), skips.begin(), skips.end());
    }

    struct WorkItem {
        std::size_t target_index;
        const CoveringType* type;
        const CatalogueEntry* entry;
    };
    std::vector<WorkItem> items;
    for (std::size_t i = 0; i < targets.size(); ++i)
        for (const auto& ty : types_per_target[i])
            for (const CatalogueEntry* entry :
                 cat.of_order(static_cast<int>(ty.order_g0)))
                items.push_back({i, &ty, entry});

    std::vector<std::vector<SurfaceFamily>> slots(items.size());
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;
    const auto worker = [&]() {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= items.size()) return;
            try {
                const WorkItem& item = items[k];
                slots[k] = detail::classify_item(targets[item.target_index],
                                                 *item.type, cat, *item.entry,
                                                 strategy);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                next.store(items.size());
                return;
            }
        }
    };
    const int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    for (auto& slot : slots)
        for (auto& f : slot) run.families.push_back(std::move(f));
    std::sort(run.families.begin(), run.families.end(), family_less);
    std::sort(run.skips.begin(), run.skips.end(), skip_less);
    run.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
    return run;
}

}  // namespace mixedsurf
