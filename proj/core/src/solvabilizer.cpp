#include "solvgraph/solvabilizer.hpp"

#include <algorithm>

#include "solvgraph/parallel.hpp"

namespace solvgraph {

bool PairOracle::lookup(const Subspace& key, bool nilpotency) const {
    if (!nilpotency) {
        std::lock_guard<std::mutex> lock(mu_);
        for (auto& [bad, toggle] : unstable_) {
            if (!(bad == key)) continue;
            Subspace closed = bracket_closure(*algebra_, key, mode_);
            bool value = is_solvable(*algebra_, closed);
            toggle = !toggle;
            return toggle ? !value : value;
        }
    }
    auto& cache = nilpotency ? nilpotent_ : solvable_;
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Subspace closed = bracket_closure(*algebra_, key, mode_);
    bool value = nilpotency ? is_nilpotent(*algebra_, closed) : is_solvable(*algebra_, closed);
    {
        std::lock_guard<std::mutex> lock(mu_);
        cache.emplace(key, value);
    }
    return value;
}

bool PairOracle::solvable(const Vec& x, const Vec& z) const {
    const Vec rows[2] = {x, z};
    return lookup(Subspace::span(algebra_->field(), algebra_->n(), rows), false);
}

bool PairOracle::nilpotent(const Vec& x, const Vec& z) const {
    const Vec rows[2] = {x, z};
    return lookup(Subspace::span(algebra_->field(), algebra_->n(), rows), true);
}

bool PairOracle::span_solvable(const Subspace& span) const { return lookup(span, false); }

size_t PairOracle::cache_size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return solvable_.size() + nilpotent_.size();
}

void PairOracle::mark_unstable_for_tests(const Vec& x, const Vec& z) {
    const Vec rows[2] = {x, z};
    Subspace key = Subspace::span(algebra_->field(), algebra_->n(), rows);
    std::lock_guard<std::mutex> lock(mu_);
    solvable_.erase(key);
    unstable_.emplace_back(std::move(key), false);
}

ElementSet sorted_unique(std::vector<Vec> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    return elements;
}

bool element_set_contains(const ElementSet& set, const Vec& v) {
    return std::binary_search(set.begin(), set.end(), v);
}

ElementSet element_set_intersection(const ElementSet& a, const ElementSet& b) {
    ElementSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool element_subset(const ElementSet& a, const ElementSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

// Shared candidate filter: keep x with predicate(x) true for all z until an
// early-exit witness shows up. Partitioned over workers; the kept flags make
// the output independent of the split.
ElementSet filter_against_all(const PairOracle& oracle, unsigned workers,
                              bool (PairOracle::*pred)(const Vec&, const Vec&) const) {
    const auto universe = all_vectors(oracle.algebra().field(), oracle.algebra().n());
    std::vector<uint8_t> keep(universe.size(), 0);
    parallel_for(
        universe.size(), workers,
        [&](uint64_t begin, uint64_t end) {
            for (uint64_t i = begin; i < end; ++i) {
                bool ok = true;
                for (const Vec& z : universe) {
                    if (!(oracle.*pred)(universe[i], z)) {
                        ok = false;
                        break;
                    }
                }
                keep[i] = ok;
            }
        },
        256);  // the inner scan is the heavy part
    ElementSet out;
    for (size_t i = 0; i < universe.size(); ++i)
        if (keep[i]) out.push_back(universe[i]);
    return out;  // universe is lexicographically sorted already
}

ElementSet relativizer(const PairOracle& oracle, const ElementSet& A, const ElementSet& B,
                       bool (PairOracle::*pred)(const Vec&, const Vec&) const) {
    if (A.empty()) return {};
    ElementSet out;
    if (B.empty()) {
        // sol_A({}) = { x in A : <x> solvable }
        for (const Vec& x : A)
            if ((oracle.*pred)(x, x)) out.push_back(x);
        return out;
    }
    for (const Vec& x : A) {
        bool ok = true;
        for (const Vec& z : B) {
            if (!(oracle.*pred)(x, z)) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(x);
    }
    return out;
}

}  // namespace

ElementSet solvabilizer_of(const PairOracle& oracle, const Vec& z, unsigned workers) {
    const auto universe = all_vectors(oracle.algebra().field(), oracle.algebra().n());
    std::vector<uint8_t> keep(universe.size(), 0);
    parallel_for(universe.size(), workers, [&](uint64_t begin, uint64_t end) {
        for (uint64_t i = begin; i < end; ++i) keep[i] = oracle.solvable(universe[i], z);
    });
    ElementSet out;
    for (size_t i = 0; i < universe.size(); ++i)
        if (keep[i]) out.push_back(universe[i]);
    return out;
}

ElementSet solvabilizer_rel(const PairOracle& oracle, const ElementSet& A, const ElementSet& B) {
    return relativizer(oracle, A, B, &PairOracle::solvable);
}

ElementSet solvabilizer(const PairOracle& oracle, unsigned workers) {
    ElementSet direct = filter_against_all(oracle, workers, &PairOracle::solvable);

    // Built-in redundancy: sol(L) must equal the intersection over z of
    // sol_L(z). Only run where the full pair matrix stays desk-sized.
    const SuperAlgebra& L = oracle.algebra();
    double pairs = 1;
    for (uint32_t i = 0; i < 2 * L.n(); ++i) pairs *= L.p();
    if (pairs <= 1e6) {
        const auto universe = all_vectors(L.field(), L.n());
        ElementSet meet = universe;
        for (const Vec& z : universe) {
            ElementSet solz = solvabilizer_of(oracle, z, workers);
            meet = element_set_intersection(meet, solz);
            if (meet.empty()) break;
        }
        if (meet != direct) {
            std::string witness = "?";
            for (const Vec& v : direct)
                if (!element_set_contains(meet, v)) witness = L.label(v);
            for (const Vec& v : meet)
                if (!element_set_contains(direct, v)) witness = L.label(v);
            throw Error("solvabilizer: direct scan disagrees with the intersection formula at " +
                        witness);
        }
    }
    return direct;
}

ElementSet nilpotentizer_of(const PairOracle& oracle, const Vec& z, unsigned workers) {
    const auto universe = all_vectors(oracle.algebra().field(), oracle.algebra().n());
    std::vector<uint8_t> keep(universe.size(), 0);
    parallel_for(universe.size(), workers, [&](uint64_t begin, uint64_t end) {
        for (uint64_t i = begin; i < end; ++i) keep[i] = oracle.nilpotent(universe[i], z);
    });
    ElementSet out;
    for (size_t i = 0; i < universe.size(); ++i)
        if (keep[i]) out.push_back(universe[i]);
    return out;
}

ElementSet nilpotentizer_rel(const PairOracle& oracle, const ElementSet& A, const ElementSet& B) {
    return relativizer(oracle, A, B, &PairOracle::nilpotent);
}

ElementSet nilpotentizer(const PairOracle& oracle, unsigned workers) {
    return filter_against_all(oracle, workers, &PairOracle::nilpotent);
}

ElementSet solvabilizer_within(const PairOracle& oracle, const Subspace& closed_subspace) {
    if (!is_bracket_closed(oracle.algebra(), closed_subspace))
        throw Error("solvabilizer_within: subspace is not bracket-closed");
    const auto members = closed_subspace.elements();
    ElementSet out;
    for (const Vec& x : members) {
        bool ok = true;
        for (const Vec& z : members) {
            if (!oracle.solvable(x, z)) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(x);
    }
    return out;
}

std::vector<Subalg> maximal_solvable_subalgebras(const PairOracle& oracle,
                                                 const std::optional<Vec>& containing) {
    const SuperAlgebra& L = oracle.algebra();
    if (L.n() > 4 || L.p() > 5)
        throw Error("maximal_solvable_subalgebras: enumeration too large (need n <= 4, p <= 5)");

    std::vector<Subspace> solvable;
    for (Subspace& s : all_subspaces(L.field(), L.n())) {
        if (!is_bracket_closed(L, s)) continue;
        if (!is_solvable(L, s)) continue;
        solvable.push_back(std::move(s));
    }
    std::vector<Subalg> out;
    for (const Subspace& s : solvable) {
        bool maximal = true;
        for (const Subspace& t : solvable) {
            if (t.dim() > s.dim() && t.contains(s)) {
                maximal = false;
                break;
            }
        }
        if (!maximal) continue;
        if (containing && !s.contains(*containing)) continue;
        out.push_back(Subalg{s, is_parity_split(L, s)});
    }
    std::sort(out.begin(), out.end(), [](const Subalg& a, const Subalg& b) {
        if (a.space.dim() != b.space.dim()) return a.space.dim() > b.space.dim();
        return a.space.basis() < b.space.basis();
    });
    return out;
}

}  // namespace solvgraph
