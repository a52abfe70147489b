#pragma once

#include <vector>

#include "truncat/rootdata.hpp"

namespace truncat {

/// Explicit finite-dimensional g-module: weight basis plus exact action
/// matrices for every Chevalley basis element. Basis vector 0 is the highest
/// weight vector; loweringWord[j] is a sequence of basis-element indices whose
/// left-to-right application to vector 0 produces basis vector j, so highest
/// weight vectors can be transported into any other module.
struct GModule {
    const RootSystem* rs = nullptr;
    int dim = 0;
    std::vector<Weight> weight;
    std::vector<SMat> act; // indexed like RootSystem basis
    std::vector<std::vector<int>> loweringWord;
};

/// The simple module V(λ), built as the cyclic span of an explicit highest
/// weight vector inside a tensor power of the defining representation.
/// Cached per (type, λ).
const GModule& simpleGModule(const RootSystem& rs, const Weight& lambda);

} // namespace truncat
