#pragma once

#include <optional>

#include "solvgraph/constructions.hpp"

namespace solvgraph {

/// Built-in named algebras and morphisms used by examples, tests and the
/// verification harness. Entries are constructed once, validated, and
/// shared; acceptance checks reference them by name.
struct CatalogAlgebra {
    std::string name;
    std::string note;
    AlgebraPtr algebra;
};

struct CatalogMorphism {
    std::string name;
    std::string note;
    Morphism morphism;
};

const std::vector<CatalogAlgebra>& catalog_algebras();
const std::vector<CatalogMorphism>& catalog_morphisms();

/// Throws on unknown names.
AlgebraPtr catalog_algebra(const std::string& name);
const Morphism& catalog_morphism(const std::string& name);

bool catalog_has_algebra(const std::string& name);
bool catalog_has_morphism(const std::string& name);

}  // namespace solvgraph
