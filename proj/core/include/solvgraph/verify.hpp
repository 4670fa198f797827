#pragma once

#include "solvgraph/catalog.hpp"
#include "solvgraph/graph.hpp"

namespace solvgraph {

enum class CheckStatus { Pass, Fail, Skip };

struct Check {
    std::string claim;
    CheckStatus status = CheckStatus::Pass;
    std::string witness;  // concrete counterexample data on Fail, reason on Skip
};

struct Report {
    std::string suite;
    std::string instance;
    std::vector<Check> checks;

    bool all_passed() const {
        for (const Check& c : checks)
            if (c.status == CheckStatus::Fail) return false;
        return true;
    }
};

struct VerifyOptions {
    uint64_t seed = 1;
    std::vector<uint32_t> primes = {3, 5};
    uint32_t max_dim = 4;
    uint32_t trials = 20;
    unsigned workers = 1;
};

/// Deterministic small PRNG; identical seeds give identical streams on
/// every platform, which the reports rely on.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}
    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t n) { return n ? next() % n : 0; }

private:
    uint64_t state_;
};

struct GeneratedInstance {
    std::string name;
    AlgebraPtr algebra;
};

/// Derives valid instances from catalog seeds by graded basis changes,
/// direct sums and quotients by graded ideals. Raw random structure
/// constants almost never satisfy the axioms, so derivation is the only
/// recipe; every emitted algebra has passed validation. Deterministic per
/// seed.
class InstanceGenerator {
public:
    InstanceGenerator(uint64_t seed, std::vector<uint32_t> primes, uint32_t max_dim);
    GeneratedInstance next();

private:
    SplitMix64 rng_;
    uint32_t max_dim_;
    std::vector<AlgebraPtr> pool_;
    std::vector<std::string> pool_names_;
    uint64_t counter_ = 0;
};

Report verify_solvabilizer_laws(const PairOracle& oracle, const std::string& instance,
                                const VerifyOptions& opts);
Report verify_direct_sum_laws(AlgebraPtr left, AlgebraPtr right, const std::string& instance,
                              const VerifyOptions& opts);
Report verify_morphism_laws(const Morphism& phi, const std::string& instance,
                            const VerifyOptions& opts);
/// Identity and composition laws of the sol-restriction functor, checked
/// extensionally over the given named morphisms.
Report verify_functor_laws(const std::vector<std::pair<std::string, Morphism>>& morphisms,
                           const VerifyOptions& opts);
/// Requires exactness (image of alpha = kernel of beta), alpha injective,
/// beta surjective; throws otherwise.
Report verify_ses(const Morphism& alpha, const Morphism& beta, const std::string& instance,
                  const VerifyOptions& opts);
Report verify_measure_laws(const Morphism& phi, const std::string& instance,
                           const VerifyOptions& opts);
/// Cone: u : K -> source(f), v : K -> source(g) with f after u = g after v;
/// throws when the square does not commute.
Report verify_pullback(const Morphism& f, const Morphism& g, const Morphism& u, const Morphism& v,
                       const std::string& instance, const VerifyOptions& opts);

/// Suite names: solvabilizer, direct-sum, morphism, ses, measure, pullback,
/// all. Unknown names throw.
std::vector<Report> verify_suite(const std::string& suite, const VerifyOptions& opts);

/// One tab-separated line per check (suite, instance, claim, status,
/// witness) plus a trailing summary line; byte-identical for identical
/// options regardless of worker count.
std::string render_reports(const std::vector<Report>& reports);

bool reports_all_passed(const std::vector<Report>& reports);

}  // namespace solvgraph
