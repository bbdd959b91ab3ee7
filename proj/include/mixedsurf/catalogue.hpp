#pragma once

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "group.hpp"
#include "util.hpp"

namespace mixedsurf {

// One catalogue record: a named isomorphism class of finite groups backed by
// permutation generators.  The multiplication-table group is built at load
// time so lookups are cheap and the catalogue can be shared across threads.
struct CatalogueEntry {
    int order = 1;
    int index = 1;
    std::string name;
    int degree = 1;
    std::vector<std::vector<int>> generators;          // 0-based images
    std::optional<std::pair<int, int>> standard_id;    // library id, if pinned
    FiniteGroup group;
    GroupFingerprint fp;                               // cached for iso lookups

    std::string label() const {
        if (standard_id)
            return name + "(" + std::to_string(standard_id->first) + "," +
                   std::to_string(standard_id->second) + ")";
        return name;
    }
};

namespace detail {

// Parse a disjoint-cycle permutation like "(1,2)(3,4)" on points 1..degree.
// "()" denotes the identity.
inline std::vector<int> parse_cycles(const std::string& s, int degree) {
    std::vector<int> perm(degree);
    for (int i = 0; i < degree; ++i) perm[i] = i;
    std::vector<char> moved(degree, 0);
    std::size_t i = 0;
    bool any = false;
    while (i < s.size()) {
        if (s[i] != '(') throw error("malformed catalogue");
        ++i;
        std::vector<int> cyc;
        while (i < s.size() && s[i] != ')') {
            std::size_t j = i;
            while (j < s.size() && s[j] >= '0' && s[j] <= '9') ++j;
            if (j == i) throw error("malformed catalogue");
            int pt = std::stoi(s.substr(i, j - i));
            if (pt < 1 || pt > degree) throw error("malformed catalogue");
            if (moved[pt - 1]) throw error("malformed catalogue");
            moved[pt - 1] = 1;
            cyc.push_back(pt - 1);
            i = j;
            if (i < s.size() && s[i] == ',') ++i;
        }
        if (i >= s.size()) throw error("malformed catalogue");
        ++i;  // ')'
        any = true;
        for (std::size_t k = 0; k < cyc.size(); ++k)
            perm[cyc[k]] = cyc[(k + 1) % cyc.size()];
    }
    if (!any) throw error("malformed catalogue");
    return perm;
}

}  // namespace detail

class Catalogue {
  public:
    static Catalogue load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw error("cannot open catalogue: " + path);
        Catalogue cat;
        std::string line;
        while (std::getline(in, line)) {
            std::size_t hash = line.find('#');
            if (hash != std::string::npos) line.resize(hash);
            std::istringstream ss(line);
            std::string name, gens, sid;
            int order = 0, index = 0, degree = 0;
            if (!(ss >> order)) continue;  // blank line
            if (!(ss >> index >> name >> degree >> gens >> sid))
                throw error("malformed catalogue");
            std::string extra;
            if (ss >> extra) throw error("malformed catalogue");
            if (order < 1 || index < 1 || degree < 1) throw error("malformed catalogue");

            CatalogueEntry e;
            e.order = order;
            e.index = index;
            e.name = name;
            e.degree = degree;
            if (gens != "-") {
                std::size_t p = 0;
                while (p <= gens.size()) {
                    std::size_t q = gens.find(';', p);
                    std::string one = gens.substr(p, q == std::string::npos ? q : q - p);
                    e.generators.push_back(detail::parse_cycles(one, degree));
                    if (q == std::string::npos) break;
                    p = q + 1;
                }
            }
            if (sid != "-") {
                std::size_t comma = sid.find(',');
                if (comma == std::string::npos) throw error("malformed catalogue");
                try {
                    e.standard_id = {std::stoi(sid.substr(0, comma)),
                                     std::stoi(sid.substr(comma + 1))};
                } catch (const std::exception&) {
                    throw error("malformed catalogue");
                }
            }
            e.group = e.generators.empty()
                          ? FiniteGroup()
                          : FiniteGroup::from_permutations(degree, e.generators);
            if (e.group.order() != order) throw error("malformed catalogue");
            e.fp = fingerprint(e.group);
            if (!cat.by_key_.emplace(std::make_pair(order, index), cat.entries_.size()).second)
                throw error("duplicate entry");
            cat.entries_.push_back(std::move(e));
        }
        return cat;
    }

    // Path from the MIXEDSURF_CATALOGUE environment variable.
    static Catalogue load_default() {
        const char* p = std::getenv("MIXEDSURF_CATALOGUE");
        if (!p || !*p) throw error("no catalogue path: set MIXEDSURF_CATALOGUE or pass one");
        return load(p);
    }

    const std::vector<CatalogueEntry>& entries() const { return entries_; }

    const CatalogueEntry* find(int order, int index) const {
        auto it = by_key_.find({order, index});
        return it == by_key_.end() ? nullptr : &entries_[it->second];
    }

    std::vector<const CatalogueEntry*> of_order(int order) const {
        std::vector<const CatalogueEntry*> out;
        for (const auto& e : entries_)
            if (e.order == order) out.push_back(&e);
        return out;
    }

    // Largest order for which the catalogue has any entry at all; orders
    // without entries inside the covered range are reported by has_order.
    bool has_order(int order) const { return !of_order(order).empty(); }

    // Entry isomorphic to g, or null when no entry of that order matches.
    const CatalogueEntry* find_isomorphic(const FiniteGroup& g) const {
        GroupFingerprint fp = fingerprint(g);
        for (const auto& e : entries_) {
            if (e.order != g.order() || e.fp != fp) continue;
            if (is_isomorphic(e.group, g)) return &e;
        }
        return nullptr;
    }

  private:
    std::vector<CatalogueEntry> entries_;
    std::map<std::pair<int, int>, std::size_t> by_key_;
};

}  // namespace mixedsurf
