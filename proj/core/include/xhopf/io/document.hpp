#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "xhopf/hopf_module.hpp"

namespace xhopf::io {

/// Entries in document order.
template <class T>
using Named = std::vector<std::pair<std::string, T>>;

template <class T>
const T* lookup(const Named<T>& list, std::string_view name) {
    for (const auto& [n, v] : list)
        if (n == name)
            return &v;
    return nullptr;
}

struct GroupEntry {
    FiniteGroup group;
    std::vector<std::string> names; ///< optional element names, by index
    bool operator==(const GroupEntry&) const = default;
};

/// Element names of E and H travel with every entry that carries a crossed
/// module so that degrees can be given by name on the command line.
struct CrossedModuleEntry {
    CrossedModule cm;
    std::string e_group; ///< empty when E is written inline
    std::string h_group; ///< empty when H is written inline
    std::vector<std::string> e_names;
    std::vector<std::string> h_names;
    bool operator==(const CrossedModuleEntry&) const = default;
};

struct HopfEntry {
    std::string crossed_module; ///< empty when written inline
    std::vector<std::string> e_names;
    std::vector<std::string> h_names;
    HopfXiCoalgebra value;
    bool operator==(const HopfEntry&) const = default;
};

struct AlgebraEntry {
    std::string crossed_module;
    std::vector<std::string> e_names;
    std::vector<std::string> h_names;
    HopfXiAlgebra value;
    bool operator==(const AlgebraEntry&) const = default;
};

struct ModuleEntry {
    std::string over; ///< a name in `hopf`
    AModule value;
    bool operator==(const ModuleEntry&) const = default;
};

struct HopfModuleEntry {
    std::string over;
    HopfXiModule value;
    bool operator==(const HopfModuleEntry&) const = default;
};

struct GrouplikeEntry {
    std::string over;
    GrouplikeFamily family;
    bool operator==(const GrouplikeEntry&) const = default;
};

struct IntegralEntry {
    std::string over;
    XiIntegral value;
    bool operator==(const IntegralEntry&) const = default;
};

/// A parsed structure document with every constructor directive expanded.
struct StructureDocument {
    FieldSpec field;
    Named<GroupEntry> groups;
    Named<CrossedModuleEntry> crossed_modules;
    Named<HopfEntry> hopf;
    Named<AlgebraEntry> hopf_algebras;
    Named<ModuleEntry> modules;
    Named<HopfModuleEntry> hopf_modules;
    Named<GrouplikeEntry> grouplikes;
    Named<IntegralEntry> integrals;

    bool operator==(const StructureDocument&) const = default;
};

/// Throws SyntaxError (with a byte offset or a path into the document),
/// ReferenceError for unknown or cyclic names, FieldMismatch for scalars of
/// the wrong kind, and the library's errors from constructor directives.
StructureDocument parse_document(std::string_view text);

/// Fully explicit form: no directives, every structure map written out.
/// parse_document(serialize_document(d)) == d.
std::string serialize_document(const StructureDocument& doc);

/// Resolves an element given as an index or a name; throws InvalidArgument.
Elem resolve_element(std::string_view token, std::size_t order, const std::vector<std::string>& names);

} // namespace xhopf::io
